//! The recursive pipeline: SRB+, SRB-, and the two invariant Cat bases.
//!
//! Usage: cargo run --example srb_pipeline -- [k]

use shicat::construction::{build_all, StepMatrices};

fn main() {
    let k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for n in 0..k {
        let step = StepMatrices::new(n).expect("step matrices");
        println!("det M_{n} = {}", step.m.det().unwrap().to_alpha_string());
    }
    let b = build_all(k).expect("pipeline").pop().unwrap();
    for (name, pair) in [
        ("SRB+", &b.srb_plus),
        ("SRB-", &b.srb_minus),
        ("theta", &b.cat_basis),
        ("eta", &b.eta_basis),
    ] {
        println!("{name}:");
        for d in pair.iter() {
            println!("  {} (deg {}) = {}", d.label(), d.degree().unwrap(), d.to_alpha_string());
        }
    }
}
