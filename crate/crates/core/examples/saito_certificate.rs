//! Saito certificates for {θ_E, φ1, φ2} on Shi^k and {θ_E, θ1, θ2} on Cat^k.
//!
//! Usage: cargo run --example saito_certificate -- [k]

use shicat::arrangement::Arrangement;
use shicat::construction::build_all;
use shicat::derivation::saito_check;
use shicat::exactalg::rational::to_short_string;

fn main() {
    let k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let bundle = build_all(k).expect("pipeline").pop().unwrap();
    for (basis, arr) in [
        (bundle.shi_basis(), Arrangement::shi(k)),
        (bundle.cat_full_basis(), Arrangement::cat(k)),
        (bundle.eta_full_basis(), Arrangement::cat(k)),
    ] {
        let cert = saito_check(&basis, &arr).expect("logarithmic");
        println!(
            "{:<6} {:?}  degrees {:?}  c = {}",
            cert.arrangement,
            cert.verdict,
            cert.degrees.iter().flatten().collect::<Vec<_>>(),
            to_short_string(&cert.quotient_constant)
        );
        let divisible = cert.hyperplane_quotients(&arr).iter().filter(|(_, q)| q.is_some()).count();
        println!("       det divisible by {divisible}/{} forms", arr.len());
    }
}
