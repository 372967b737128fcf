mod args;
mod commands;
mod table;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{dispatch, CommandReport};

fn print_text(rep: &CommandReport) {
    println!("{}", rep.command);
    match &rep.text {
        Some(t) => print!("{t}"),
        None => println!("{}", serde_json::to_string_pretty(&rep.result).expect("JSON values serialize")),
    }
    for c in &rep.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{status} {}", c.name);
        } else {
            println!("{status} {}: {}", c.name, c.detail);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command, &cli.global) {
        Ok(rep) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("JSON values serialize"));
            } else {
                print_text(&rep);
            }
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                let failed = rep.checks.iter().filter(|c| !c.pass).count();
                eprintln!("{failed} check(s) failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
