//! The Weyl group and τ acting on the constructed bases.
//!
//! Usage: cargo run --example weyl_invariance -- [k]

use shicat::construction::build_all;
use shicat::derivation::{weyl_act, GroupElement};

fn main() {
    let k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let b = build_all(k).expect("pipeline").pop().unwrap();
    for g in [GroupElement::s1(), GroupElement::s2(), GroupElement::tau()] {
        for theta in b.cat_basis.iter().chain(&b.eta_basis) {
            let fixed = weyl_act(&g, theta).coeffs() == theta.coeffs();
            println!("{} fixes {}: {fixed}", g.label(), theta.label());
        }
    }
    let ts0 = GroupElement::tau_s0();
    let swapped = weyl_act(&ts0, &b.srb_plus[0]).coeffs() == b.srb_plus[1].neg().coeffs();
    println!("tau s0 maps phi1 to -phi2: {swapped}");
    let swapped = weyl_act(&ts0, &b.srb_minus[0]).coeffs() == b.srb_minus[1].neg().coeffs();
    println!("tau s0 maps psi1 to -psi2: {swapped}");
    let s2_phi1 = weyl_act(&GroupElement::s2(), &b.srb_plus[0]);
    println!("s2 fixes phi1: {}", s2_phi1.coeffs() == b.srb_plus[0].coeffs());
}
