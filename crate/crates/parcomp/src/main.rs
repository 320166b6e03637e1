use std::io::IsTerminal;

fn main() {
    let use_color = parcomp::cli::resolve_color(
        std::env::var("PARCOMP_COLOR").ok().as_deref(),
        std::io::stdout().is_terminal(),
    );
    let code = parcomp::cli::run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        use_color,
    );
    std::process::exit(code);
}
