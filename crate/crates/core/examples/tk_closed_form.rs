//! The matrix B = Jᵀ·A·D[J], the matrices B^(k), and the closed form of T_k.
//!
//! Usage: cargo run --example tk_closed_form -- [k_max]

use shicat::construction::{build_all, matrix_t};
use shicat::derivation::transform;
use shicat::invariant_theory::{matrix_b, matrix_bk, matrix_dj, verify_tk_closed_form, PrimitiveDerivation};

fn main() {
    let k_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let d = PrimitiveDerivation::new().unwrap();
    println!("D[J] =\n{}", matrix_dj(&d).unwrap());
    let b = matrix_b(&d).unwrap();
    println!("B =\n{b}");
    for k in 1..=k_max {
        println!("B^({k}) =\n{}", matrix_bk(&b, k).unwrap());
    }
    let bundles = build_all(k_max).unwrap();
    for k in 0..=k_max {
        let (rep, t) = verify_tk_closed_form(k, &b).unwrap();
        println!("T_{k} = diag({}, {}) [{}]", t.get(0, 0), t.get(1, 1), if rep.passed() { "ok" } else { "FAIL" });
        let b = &bundles[k as usize];
        let scaled = transform(&b.cat_basis, &matrix_t(k)).unwrap();
        let same = scaled.iter().zip(&b.eta_basis).all(|(x, y)| x.coeffs() == y.coeffs());
        println!("  eta = theta·T_{k}: {same}");
    }
}
