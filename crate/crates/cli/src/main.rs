use std::process::ExitCode;

fn main() -> ExitCode {
    match condinf_cli::main_with_args() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            if code == 3 {
                eprintln!(
                    "note: outcomes with an empty arm or a boundary estimate (no successes or all successes) are excluded from inference"
                );
            }
            ExitCode::from(code as u8)
        }
    }
}
