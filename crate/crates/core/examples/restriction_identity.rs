//! Compares the z = 0 restriction of the pipeline SRB+ with A·R·A⁻¹, where
//! R = (-1)^k J(D^k a1, D^k a2)⁻¹ comes from the primitive derivation.
//!
//! Usage: cargo run --example restriction_identity -- [k_max]

use shicat::construction::srb_plus_matrices;
use shicat::derivation::Derivation;
use shicat::exactalg::Poly;
use shicat::invariant_theory::{r_matrices, verify_restriction_identity, PrimitiveDerivation};

fn main() {
    let k_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let d = PrimitiveDerivation::new().expect("normalized");
    println!("D(a1) = {}", d.d1.to_alpha_string());
    let mats = srb_plus_matrices(k_max).expect("pipeline");
    let rs = r_matrices(&d, k_max).expect("invertible Jacobians");
    for (k, (c, r)) in mats.iter().zip(&rs).enumerate() {
        let plus = [0, 1].map(|j| Derivation::new(c.get(0, j).clone(), c.get(1, j).clone(), Poly::zero()));
        let rep = verify_restriction_identity(k as u32, &plus, r).unwrap();
        println!("k = {k}: {}", if rep.passed() { "match" } else { "MISMATCH" });
    }
}
