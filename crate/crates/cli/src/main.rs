mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::Parser;
use serde_json::json;

use args::Cli;
use run::{run, Failure, EXIT_INPUT};

const EXIT_TIMEOUT: u8 = 4;

fn finish(result: Result<run::Output, Failure>) -> ExitCode {
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(f.code as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if n == 0 {
            eprintln!(
                "{}",
                json!({"error": "Usage", "message": "--workers must be positive"})
            );
            return ExitCode::from(EXIT_INPUT as u8);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("global thread pool configured once");
    }
    let Some(limit) = cli.timeout else {
        return finish(run(&cli));
    };
    if !(limit.is_finite() && limit > 0.0) {
        eprintln!(
            "{}",
            json!({"error": "Usage", "message": "--timeout must be a positive number of seconds"})
        );
        return ExitCode::from(EXIT_INPUT as u8);
    }
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(run(&cli));
    });
    match rx.recv_timeout(Duration::from_secs_f64(limit)) {
        Ok(result) => finish(result),
        Err(_) => {
            eprintln!(
                "{}",
                json!({"error": "Timeout", "message": format!("no result within {limit} s")})
            );
            ExitCode::from(EXIT_TIMEOUT)
        }
    }
}
