pub mod arrangement;
pub mod cli;
pub mod construction;
pub mod derivation;
pub mod exactalg;
pub mod invariant_theory;
