use std::process::ExitCode;

use clap::Parser;
use psp_cli::{run, Cli, Output};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Output::Text(t)) | Ok(Output::Svg(t)) => {
            print!("{t}");
            if !t.ends_with('\n') && !t.is_empty() {
                println!();
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("json value"));
            ExitCode::SUCCESS
        }
        Ok(Output::Written(msg)) => {
            eprintln!("{msg}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                println!("{out}");
            }
            eprintln!("psp: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
