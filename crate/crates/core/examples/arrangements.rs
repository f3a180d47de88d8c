//! The coned extended Shi and Catalan arrangements of type A2.
//!
//! Usage: cargo run --example arrangements -- [k]

use shicat::arrangement::Arrangement;
use shicat::derivation::GroupElement;

fn main() {
    let k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for arr in [Arrangement::shi(k), Arrangement::cat(k)] {
        let e = arr.expected_exponents;
        println!("{}: {} hyperplanes, exponents ({}, {}, {})", arr.id(), arr.len(), e[0], e[1], e[2]);
        let forms: Vec<String> = arr.forms().map(|f| f.to_alpha_string()).collect();
        println!("  {}", forms.join(", "));
        for g in [GroupElement::s1(), GroupElement::s2(), GroupElement::tau(), GroupElement::tau_s0()] {
            println!("  preserved by {:<6} {}", g.label(), arr.is_preserved_by(&g));
        }
    }
}
