//! Restriction of the SRB+ to z = 0 lands in the Weyl multiarrangement with
//! constant multiplicity 2k, and forms a basis there.
//!
//! Usage: cargo run --example ziegler_restriction -- [k_max]

use shicat::cli::suites::ziegler;
use shicat::construction::build_all;
use shicat::exactalg::rational::to_short_string;

fn main() {
    let k_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for b in build_all(k_max).unwrap() {
        match ziegler(&b) {
            Ok(Some(c)) => println!("k = {}: det = ({}) Q^{}", b.k, to_short_string(&c), 2 * b.k),
            Ok(None) => unreachable!(),
            Err(e) => println!("k = {}: {e}", b.k),
        }
    }
}
