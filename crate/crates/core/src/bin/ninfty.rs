use ninfty::cli::run_main;
use ninfty::Limits;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = run_main(
        &args,
        &Limits::from_env(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
