//! Command-line front end.
//!
//! Subcommands: `list-pairs`, `classify`, `check`, `witness`, `table2`, and
//! `cross-check`. Parameterized families take explicit integers (`--n`,
//! `--m`); the control families address their base or host system as
//! `--base`/`--host` plus `--rank`. Output goes to stdout (or `--output`),
//! diagnostics to stderr.
//!
//! Exit codes: 0 on success, 2 on usage errors (unknown tags, malformed or
//! out-of-range parameters), 1 when `cross-check` finds a disagreement
//! between the feasibility oracle and the class predicate.
//!
//! JSON is emitted canonically (sorted keys, rationals as `p/q` strings), so
//! parsing and re-serializing the output reproduces it byte for byte. The
//! `PARCOMP_COLOR` environment variable (`auto`, `never`, `always`) controls
//! the coloring of `table` output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{
    classify_all, classify_all_parallel, cross_check_classification, is_compatible,
    verify_witness, Classification, CrossCheckReport,
};
use crate::error::{Error, Result};
use crate::pairs::{reference_pairs, PairFamily, SymmetricPair};
use crate::ratlinalg::{format_rational, parse_rational, RatVector};
use crate::rootsys::{Label, ParabolicIndex};

const GREEN: &str = "32";
const RED: &str = "31";

/// Decides table coloring from `PARCOMP_COLOR` and the terminal state.
/// Unknown values fall back to `auto`.
pub fn resolve_color(env_val: Option<&str>, is_tty: bool) -> bool {
    match env_val.map(str::trim) {
        Some(v) if v.eq_ignore_ascii_case("always") => true,
        Some(v) if v.eq_ignore_ascii_case("never") => false,
        _ => is_tty,
    }
}

/// Runs the CLI against explicit argument and output streams, returning the
/// process exit code. The binary is a thin wrapper around this.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, use_color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, use_color) {
        Ok(outcome) => {
            match output_target(&cli.command) {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.rendered) {
                        let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                    let _ = writeln!(err, "wrote {}", path.display());
                }
                None => {
                    let _ = write!(out, "{}", outcome.rendered);
                }
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Outcome {
    rendered: String,
    exit_code: i32,
}

impl Outcome {
    fn ok(rendered: String) -> Self {
        Outcome { rendered, exit_code: 0 }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "parcomp",
    version,
    about = "Exact classification of parabolic subalgebras compatible with a symmetric pair"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the pair catalog (or one pair) with restriction classes
    #[command(name = "list-pairs")]
    ListPairs(ListPairsArgs),
    /// Classify all 2^rank standard parabolics of one pair
    #[command(name = "classify")]
    Classify(ClassifyArgs),
    /// Decide one index set and print an exact witness if compatible
    #[command(name = "check")]
    Check(CheckArgs),
    /// Verify proposed witness coordinates for one index set
    #[command(name = "witness")]
    Witness(WitnessArgs),
    /// Print the symbolic classes of the six unequal-rank families
    #[command(name = "table2")]
    Table2(Table2Args),
    /// Compare the feasibility oracle with the class predicate
    #[command(name = "cross-check")]
    CrossCheck(CrossCheckArgs),
}

/// Selects and parameterizes a pair family.
#[derive(Args, Clone, Debug, Default)]
struct PairArgs {
    /// Family tag: sl-so-odd, sl-so-even, sl-sp, so-so, e6-sp8, e6-f4,
    /// diagonal, equal-rank
    #[arg(long)]
    pair: Option<String>,
    /// Size parameter n (sl-so-odd, sl-so-even, sl-sp, so-so)
    #[arg(long)]
    n: Option<usize>,
    /// Size parameter m (so-so)
    #[arg(long)]
    m: Option<usize>,
    /// Base system kind for diagonal pairs: A, D, or E6
    #[arg(long)]
    base: Option<String>,
    /// Host system kind for equal-rank pairs: A, D, or E6
    #[arg(long)]
    host: Option<String>,
    /// Rank accompanying --base or --host kinds A and D
    #[arg(long)]
    rank: Option<usize>,
    /// Display name of the equal-rank subalgebra
    #[arg(long)]
    name: Option<String>,
}

impl PairArgs {
    fn provided(&self) -> Vec<&'static str> {
        let mut flags = Vec::new();
        if self.n.is_some() {
            flags.push("--n");
        }
        if self.m.is_some() {
            flags.push("--m");
        }
        if self.base.is_some() {
            flags.push("--base");
        }
        if self.host.is_some() {
            flags.push("--host");
        }
        if self.rank.is_some() {
            flags.push("--rank");
        }
        if self.name.is_some() {
            flags.push("--name");
        }
        flags
    }

    fn check_allowed(&self, tag: &str, allowed: &[&str]) -> Result<()> {
        for flag in self.provided() {
            if !allowed.contains(&flag) {
                return Err(Error::InvalidParameter(format!(
                    "{flag} does not apply to pair family {tag}"
                )));
            }
        }
        Ok(())
    }

    fn require_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::InvalidParameter("--n is required for this family".to_string()))
    }

    fn require_m(&self) -> Result<usize> {
        self.m
            .ok_or_else(|| Error::InvalidParameter("--m is required for this family".to_string()))
    }

    /// Resolves the arguments to a family, or `None` when no `--pair` was
    /// given (battery mode for `list-pairs` and `cross-check`).
    fn family(&self) -> Result<Option<PairFamily>> {
        let Some(tag) = self.pair.as_deref() else {
            if let Some(flag) = self.provided().first() {
                return Err(Error::InvalidParameter(format!("{flag} requires --pair")));
            }
            return Ok(None);
        };
        let family = match tag {
            "sl-so-odd" => {
                self.check_allowed(tag, &["--n"])?;
                PairFamily::SlSoOdd { n: self.require_n()? }
            }
            "sl-so-even" => {
                self.check_allowed(tag, &["--n"])?;
                PairFamily::SlSoEven { n: self.require_n()? }
            }
            "sl-sp" => {
                self.check_allowed(tag, &["--n"])?;
                PairFamily::SlSp { n: self.require_n()? }
            }
            "so-so" => {
                self.check_allowed(tag, &["--n", "--m"])?;
                PairFamily::SoSoOddOdd { m: self.require_m()?, n: self.require_n()? }
            }
            "e6-sp8" => {
                self.check_allowed(tag, &[])?;
                PairFamily::E6Sp8
            }
            "e6-f4" => {
                self.check_allowed(tag, &[])?;
                PairFamily::E6F4
            }
            "diagonal" => {
                self.check_allowed(tag, &["--base", "--rank"])?;
                let kind = self.base.as_deref().ok_or_else(|| {
                    Error::InvalidParameter("--base is required for diagonal pairs".to_string())
                })?;
                PairFamily::Diagonal { base: Label::from_parts(kind, self.rank)? }
            }
            "equal-rank" => {
                self.check_allowed(tag, &["--host", "--rank", "--name"])?;
                let kind = self.host.as_deref().ok_or_else(|| {
                    Error::InvalidParameter("--host is required for equal-rank pairs".to_string())
                })?;
                PairFamily::EqualRank {
                    host: Label::from_parts(kind, self.rank)?,
                    name: self.name.clone().unwrap_or_else(|| "g^tau".to_string()),
                }
            }
            other => {
                return Err(Error::InvalidParameter(format!("unknown pair tag {other:?}")));
            }
        };
        Ok(Some(family))
    }

    fn build(&self) -> Result<SymmetricPair> {
        match self.family()? {
            Some(family) => SymmetricPair::build(family),
            None => Err(Error::InvalidParameter("--pair is required here".to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug)]
struct ListPairsArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for the subset enumeration (default: sequential)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Comma-separated 1-based simple root indices; empty for the Borel
    #[arg(long, default_value = "")]
    pi: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Comma-separated 1-based simple root indices; empty for the Borel
    #[arg(long, default_value = "")]
    pi: String,
    /// Comma-separated rational coordinates over the embedded subalgebra
    #[arg(long)]
    values: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Table2Args {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CrossCheckArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for the subset enumeration (default: sequential)
    #[arg(long)]
    jobs: Option<usize>,
}

fn output_target(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::ListPairs(a) => a.output.as_ref(),
        Command::Classify(a) => a.output.as_ref(),
        Command::Check(a) => a.output.as_ref(),
        Command::Witness(a) => a.output.as_ref(),
        Command::Table2(a) => a.output.as_ref(),
        Command::CrossCheck(a) => a.output.as_ref(),
    }
}

fn dispatch(command: &Command, use_color: bool) -> Result<Outcome> {
    match command {
        Command::ListPairs(a) => run_list_pairs(a),
        Command::Classify(a) => run_classify(a, use_color),
        Command::Check(a) => run_check(a, use_color),
        Command::Witness(a) => run_witness(a, use_color),
        Command::Table2(a) => run_table2(a),
        Command::CrossCheck(a) => run_cross_check(a, use_color),
    }
}

fn run_list_pairs(args: &ListPairsArgs) -> Result<Outcome> {
    reject_csv(args.format, "list-pairs")?;
    let pairs = match args.pair.family()? {
        Some(family) => vec![SymmetricPair::build(family)?],
        None => reference_pairs(),
    };
    let rendered = match args.format {
        Format::Json => {
            let value: Vec<serde_json::Value> = pairs.iter().map(|p| p.to_json()).collect();
            render_json(&serde_json::Value::Array(value))
        }
        Format::Table => {
            let header = ["family", "pair", "host", "h'dim", "classes"];
            let rows: Vec<Vec<Cell>> = pairs
                .iter()
                .map(|p| {
                    vec![
                        Cell::plain(p.family().tag()),
                        Cell::plain(p.family().describe()),
                        Cell::plain(p.host().label().to_string()),
                        Cell::plain(p.hprime_dim().to_string()),
                        Cell::plain(format_classes(p)),
                    ]
                })
                .collect();
            render_table(&header, &rows, false)
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::ok(rendered))
}

fn run_classify(args: &ClassifyArgs, use_color: bool) -> Result<Outcome> {
    let pair = args.pair.build()?;
    let classification = classify(&pair, args.jobs)?;
    let rendered = match args.format {
        Format::Json => render_json(&classification.to_json()),
        Format::Csv => classification.to_csv(),
        Format::Table => {
            let mut text = format!(
                "pair {} on host {}: {} of {} subsets compatible\n\n",
                pair.family().describe(),
                pair.host().label(),
                classification.compatible_count(),
                classification.results().len(),
            );
            let header = ["pi", "compatible", "witness", "embedded"];
            let rows: Vec<Vec<Cell>> = classification
                .results()
                .iter()
                .map(|r| {
                    vec![
                        Cell::plain(r.pi().to_string()),
                        verdict_cell(r.compatible()),
                        Cell::plain(
                            r.witness().map(|w| w.to_string()).unwrap_or_else(|| "-".into()),
                        ),
                        Cell::plain(
                            r.embedded_witness()
                                .map(|w| w.to_string())
                                .unwrap_or_else(|| "-".into()),
                        ),
                    ]
                })
                .collect();
            text.push_str(&render_table(&header, &rows, use_color));
            text
        }
    };
    Ok(Outcome::ok(rendered))
}

fn run_check(args: &CheckArgs, use_color: bool) -> Result<Outcome> {
    reject_csv(args.format, "check")?;
    let pair = args.pair.build()?;
    let pi = parse_index_list(&args.pi)?;
    let result = is_compatible(&pair, &pi)?;
    let rendered = match args.format {
        Format::Json => {
            let mut value = result.to_json();
            let map = value.as_object_mut().expect("result serializes to an object");
            map.insert("pair".to_string(), pair.family().to_string().into());
            render_json(&value)
        }
        Format::Table => {
            let verdict = if result.compatible() {
                paint("compatible", GREEN, use_color)
            } else {
                paint("incompatible", RED, use_color)
            };
            let mut text = format!(
                "pair:     {}\npi:       {}\nverdict:  {verdict}\n",
                pair.family().describe(),
                result.pi(),
            );
            if let (Some(w), Some(h)) = (result.witness(), result.embedded_witness()) {
                text.push_str(&format!("witness:  {w}\nembedded: {h}\n"));
            }
            text
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::ok(rendered))
}

fn run_witness(args: &WitnessArgs, use_color: bool) -> Result<Outcome> {
    reject_csv(args.format, "witness")?;
    let pair = args.pair.build()?;
    let pi = parse_index_list(&args.pi)?;
    let values = parse_value_list(&args.values)?;
    let valid = verify_witness(&pair, &pi, &values)?;
    let embedded = pair.embed(&values);
    let rendered = match args.format {
        Format::Json => render_json(&serde_json::json!({
            "pair": pair.family().to_string(),
            "pi": pi.to_vec(),
            "values": values.iter().map(format_rational).collect::<Vec<_>>(),
            "embedded": embedded.iter().map(format_rational).collect::<Vec<_>>(),
            "valid": valid,
        })),
        Format::Table => {
            let verdict = if valid {
                paint("valid", GREEN, use_color)
            } else {
                paint("invalid", RED, use_color)
            };
            format!(
                "pair:     {}\npi:       {pi}\nvalues:   {values}\nembedded: {embedded}\nverdict:  {verdict}\n",
                pair.family().describe(),
            )
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::ok(rendered))
}

struct SymbolicRow {
    family: &'static str,
    pair: &'static str,
    host: &'static str,
    classes: &'static [&'static str],
}

/// The closed-form classes of the six unequal-rank families, written with
/// symbolic parameters. Concrete instances come from `list-pairs`.
const SYMBOLIC_ROWS: &[SymbolicRow] = &[
    SymbolicRow {
        family: "sl-so-odd",
        pair: "(sl(2n+1), so(2n+1))",
        host: "A(2n)",
        classes: &["{alpha_k, alpha_{2n+1-k}} for 1 <= k <= n"],
    },
    SymbolicRow {
        family: "sl-so-even",
        pair: "(sl(2n), so(2n))",
        host: "A(2n-1)",
        classes: &["{alpha_k, alpha_{2n-k}} for 1 <= k <= n-1", "{alpha_n}"],
    },
    SymbolicRow {
        family: "sl-sp",
        pair: "(sl(2n), sp(2n))",
        host: "A(2n-1)",
        classes: &["{alpha_k, alpha_{2n-k}} for 1 <= k <= n-1", "{alpha_n}"],
    },
    SymbolicRow {
        family: "so-so",
        pair: "(so(2m+2n), so(2m-1) + so(2n+1))",
        host: "D(m+n)",
        classes: &["{alpha_k} for k <= m+n-2", "{alpha_{m+n-1}, alpha_{m+n}}"],
    },
    SymbolicRow {
        family: "e6-sp8",
        pair: "(e6, sp(8))",
        host: "E6",
        classes: &["{alpha_1}", "{alpha_2, alpha_6}", "{alpha_3, alpha_5}", "{alpha_4}"],
    },
    SymbolicRow {
        family: "e6-f4",
        pair: "(e6, f4)",
        host: "E6",
        classes: &["{alpha_1}", "{alpha_2, alpha_6}", "{alpha_3, alpha_5}", "{alpha_4}"],
    },
];

fn run_table2(args: &Table2Args) -> Result<Outcome> {
    reject_csv(args.format, "table2")?;
    let rendered = match args.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = SYMBOLIC_ROWS
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "family": r.family,
                        "pair": r.pair,
                        "host": r.host,
                        "classes": r.classes,
                    })
                })
                .collect();
            render_json(&serde_json::Value::Array(rows))
        }
        Format::Table => {
            let header = ["family", "pair", "host", "classes"];
            let rows: Vec<Vec<Cell>> = SYMBOLIC_ROWS
                .iter()
                .map(|r| {
                    vec![
                        Cell::plain(r.family),
                        Cell::plain(r.pair),
                        Cell::plain(r.host),
                        Cell::plain(r.classes.join("; ")),
                    ]
                })
                .collect();
            render_table(&header, &rows, false)
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::ok(rendered))
}

fn run_cross_check(args: &CrossCheckArgs, use_color: bool) -> Result<Outcome> {
    reject_csv(args.format, "cross-check")?;
    let pairs = match args.pair.family()? {
        Some(family) => vec![SymmetricPair::build(family)?],
        None => reference_pairs(),
    };
    let reports: Vec<CrossCheckReport> = pairs
        .iter()
        .map(|p| Ok(cross_check_classification(&classify(p, args.jobs)?)))
        .collect::<Result<_>>()?;
    let clean = reports.iter().all(|r| r.is_clean());
    let rendered = match args.format {
        Format::Json => {
            let value: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
            render_json(&serde_json::Value::Array(value))
        }
        Format::Table => {
            let header = ["pair", "total", "compatible", "mismatches", "status"];
            let rows: Vec<Vec<Cell>> = pairs
                .iter()
                .zip(&reports)
                .map(|(p, r)| {
                    vec![
                        Cell::plain(p.family().to_string()),
                        Cell::plain(r.total().to_string()),
                        Cell::plain(r.compatible().to_string()),
                        Cell::plain(r.mismatches().len().to_string()),
                        if r.is_clean() {
                            Cell::colored("ok", GREEN)
                        } else {
                            Cell::colored("FAIL", RED)
                        },
                    ]
                })
                .collect();
            let mut text = render_table(&header, &rows, use_color);
            text.push_str(&format!(
                "\n{}\n",
                if clean {
                    "oracle and class predicate agree everywhere".to_string()
                } else {
                    "DISAGREEMENT between oracle and class predicate".to_string()
                }
            ));
            text
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome { rendered, exit_code: if clean { 0 } else { 1 } })
}

fn classify(pair: &SymmetricPair, jobs: Option<usize>) -> Result<Classification<'_>> {
    match jobs {
        None => classify_all(pair),
        Some(0) => Err(Error::InvalidParameter("--jobs must be at least 1".to_string())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot build thread pool: {e}")))?
            .install(|| classify_all_parallel(pair)),
    }
}

fn reject_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::InvalidParameter(format!(
            "csv output is only available for classify, not {command}"
        )));
    }
    Ok(())
}

/// Parses a comma-separated list of 1-based indices; empty means the empty
/// set.
fn parse_index_list(s: &str) -> Result<ParabolicIndex> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(ParabolicIndex::empty());
    }
    let indices = trimmed
        .split(',')
        .map(|part| {
            let part = part.trim();
            let index: usize = part
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("invalid index {part:?}")))?;
            if index == 0 {
                return Err(Error::InvalidParameter(
                    "simple root indices are 1-based".to_string(),
                ));
            }
            Ok(index)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParabolicIndex::new(indices))
}

/// Parses comma-separated rational coordinates such as `7,10/3,-1`.
fn parse_value_list(s: &str) -> Result<RatVector> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::InvalidParameter("--values must not be empty".to_string()));
    }
    let entries = trimmed
        .split(',')
        .map(|part| parse_rational(part.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatVector::new(entries))
}

fn format_classes(pair: &SymmetricPair) -> String {
    pair.classes()
        .iter()
        .map(|class| {
            let inner =
                class.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical JSON: sorted keys, pretty printing, trailing newline. Parsing
/// the result and re-serializing it reproduces the exact bytes.
fn render_json(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON serialization cannot fail");
    text.push('\n');
    text
}

struct Cell {
    text: String,
    color: Option<&'static str>,
}

impl Cell {
    fn plain(text: impl Into<String>) -> Self {
        Cell { text: text.into(), color: None }
    }

    fn colored(text: impl Into<String>, color: &'static str) -> Self {
        Cell { text: text.into(), color: Some(color) }
    }
}

fn verdict_cell(compatible: bool) -> Cell {
    if compatible {
        Cell::colored("yes", GREEN)
    } else {
        Cell::colored("no", RED)
    }
}

fn paint(text: &str, color: &'static str, use_color: bool) -> String {
    if use_color {
        format!("\x1b[{color}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

/// Fixed-width table; widths are computed on the uncolored text so ANSI
/// escapes never skew the alignment.
fn render_table(header: &[&str], rows: &[Vec<Cell>], use_color: bool) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.text.chars().count());
        }
    }
    let mut out = String::new();
    for (i, h) in header.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        out.push_str(&pad(h, widths[i]));
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out.push('\n');
    for (i, w) in widths.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        out.push_str(&"-".repeat(*w));
    }
    out.push('\n');
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let padded = pad(&cell.text, widths[i]);
            match cell.color {
                Some(c) if use_color => out.push_str(&format!("\x1b[{c}m{padded}\x1b[0m")),
                _ => out.push_str(&padded),
            }
        }
        // Trailing spaces would vary with the widest row; trim them away.
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

fn pad(text: &str, width: usize) -> String {
    let len = text.chars().count();
    let mut padded = String::from(text);
    padded.extend(std::iter::repeat(' ').take(width.saturating_sub(len)));
    padded
}
