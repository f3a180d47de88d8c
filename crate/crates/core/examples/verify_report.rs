//! Runs the verification suites in-process and prints the text report.
//!
//! Usage: cargo run --example verify_report -- [k_max]

use shicat::cli::{execute, Command, Family, Format, RunConfig};

fn main() {
    let k_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let mut config = RunConfig::new(Command::Verify, k_max, Family::Both);
    config.format = Format::Text;
    let (text, code) = execute(&config);
    print!("{text}");
    std::process::exit(code);
}
