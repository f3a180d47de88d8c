//! Exact arithmetic in Q[a1, a2, z] and its fraction field.

use shicat::exactalg::{rat, Poly, RatFunc, Var};

fn main() {
    let (a1, a2) = (Poly::a1(), Poly::a2());
    let q = &a1 * &a2 * Poly::linear(1, 1, 0);
    println!("Q          = {}", q.to_alpha_string());
    println!("dQ/da1     = {}", q.partial(Var::A1).to_alpha_string());

    let shifted = Poly::linear(1, 0, -2);
    let f = (&q * &shifted).scale(&rat(3, 7));
    match f.div_exact(&shifted).expect("nonzero divisor") {
        Some(g) => println!("f / (a1 - 2z) = {}", g.to_alpha_string()),
        None => println!("not divisible"),
    }
    println!("f divisible by a2 - z: {}", f.is_divisible_by(&Poly::linear(0, 1, -1)));

    let r = RatFunc::new(Poly::linear(1, 2, 0) * a1.clone(), q.scale(&rat(6, 1))).unwrap();
    println!("reduced    = {}", r.to_alpha_string());
    println!("d/da2      = {}", r.partial(Var::A2).to_alpha_string());
    println!("degree     = {:?}", r.homogeneous_degree());
}
