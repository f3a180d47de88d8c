//! Derivations of `ℚ[a1, a2, z]`: application, logarithmic membership,
//! Saito certificates, the Weyl/τ action and Ziegler restriction to `z = 0`.

mod group;
mod saito;

pub use group::{weyl_act, GroupElement, GroupName};
pub use saito::{saito_check, SaitoCertificate, SaitoError, Verdict};

use std::fmt;

use thiserror::Error;

use crate::arrangement::{Arrangement, MultiplicityMap};
use crate::exactalg::{ExactAlgError, Poly, PolyMatrix, Rational, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DerivationError {
    #[error("derivation {0} has a nonzero z-coefficient")]
    NonzeroZCoefficient(String),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// Why a derivation failed a membership test: `form^multiplicity` does not
/// divide `image = θ(form)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipFailure {
    pub form: Poly,
    pub multiplicity: u32,
    pub image: Poly,
}

impl fmt::Display for MembershipFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})^{} does not divide θ({}) = {}",
            self.form, self.multiplicity, self.form, self.image
        )
    }
}

/// `c1·∂1 + c2·∂2 + cz·∂z`, where `∂1, ∂2` are dual to the simple roots
/// `a1, a2` and `∂z` to `z`.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    coeffs: [Poly; 3],
    label: String,
}

impl Derivation {
    pub fn new(c1: Poly, c2: Poly, cz: Poly) -> Self {
        Derivation::from_coeffs([c1, c2, cz])
    }

    pub fn from_coeffs(coeffs: [Poly; 3]) -> Self {
        Derivation {
            coeffs,
            label: String::new(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn zero() -> Self {
        Derivation::from_coeffs([Poly::zero(), Poly::zero(), Poly::zero()])
    }

    /// The coordinate derivation `∂/∂v`.
    pub fn partial(v: Var) -> Self {
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero()];
        coeffs[v.index()] = Poly::one();
        let label = match v {
            Var::A1 => "d1",
            Var::A2 => "d2",
            Var::Z => "dz",
        };
        Derivation::from_coeffs(coeffs).with_label(label)
    }

    /// `θ_E = a1∂1 + a2∂2 + z∂z`.
    pub fn euler() -> Self {
        Derivation::new(Poly::a1(), Poly::a2(), Poly::z()).with_label("euler")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coeffs(&self) -> &[Poly; 3] {
        &self.coeffs
    }

    pub fn coeff(&self, v: Var) -> &Poly {
        &self.coeffs[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// `θ(f) = Σ c_v · ∂f/∂v`.
    pub fn apply(&self, f: &Poly) -> Poly {
        Var::ALL
            .iter()
            .filter(|v| !self.coeff(**v).is_zero())
            .map(|v| self.coeff(*v) * &f.partial(*v))
            .sum()
    }

    /// Common degree of the nonzero coefficients, if they are all
    /// homogeneous of the same degree.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(Poly::homogeneous_degree);
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation::from_coeffs(std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]))
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation::from_coeffs(std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]))
    }

    pub fn neg(&self) -> Derivation {
        Derivation::from_coeffs(std::array::from_fn(|i| -&self.coeffs[i])).with_label(format!("-{}", self.label))
    }

    pub fn mul_poly(&self, f: &Poly) -> Derivation {
        Derivation::from_coeffs(std::array::from_fn(|i| f * &self.coeffs[i]))
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation::from_coeffs(std::array::from_fn(|i| self.coeffs[i].scale(c)))
    }

    /// `θ / f` when `f` divides every coefficient.
    pub fn div_exact(&self, f: &Poly) -> Result<Option<Derivation>, ExactAlgError> {
        let mut out = [Poly::zero(), Poly::zero(), Poly::zero()];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            match c.div_exact(f)? {
                Some(q) => *o = q,
                None => return Ok(None),
            }
        }
        Ok(Some(Derivation::from_coeffs(out)))
    }

    /// Membership in `D(A)`: `θ(α_H) ∈ α_H·S` for every hyperplane.
    pub fn is_logarithmic(&self, arr: &Arrangement) -> Result<(), MembershipFailure> {
        self.is_logarithmic_for(arr.forms())
    }

    pub fn is_logarithmic_for<'a>(
        &self,
        forms: impl IntoIterator<Item = &'a Poly>,
    ) -> Result<(), MembershipFailure> {
        for form in forms {
            let image = self.apply(form);
            if !image.is_divisible_by(form) {
                return Err(MembershipFailure {
                    form: form.clone(),
                    multiplicity: 1,
                    image,
                });
            }
        }
        Ok(())
    }

    /// Ziegler restriction onto `z = 0`; only defined on `D₀` (`θ(z) = 0`).
    pub fn restrict_z0(&self) -> Result<Derivation, DerivationError> {
        if !self.coeffs[2].is_zero() {
            return Err(DerivationError::NonzeroZCoefficient(self.label.clone()));
        }
        Ok(Derivation::new(
            self.coeffs[0].set_zero(Var::Z),
            self.coeffs[1].set_zero(Var::Z),
            Poly::zero(),
        )
        .with_label(format!("{}|z=0", self.label)))
    }

    /// Membership in the Weyl multiarrangement module `D(A_Φ, m)`:
    /// `α^{m(α)}` divides `θ(α)` for each positive root.
    pub fn multi_membership(&self, multi: &MultiplicityMap) -> Result<(), MembershipFailure> {
        for (root, m) in multi.pairs() {
            let image = self.apply(&root);
            if m > 0 && !image.is_divisible_by(&root.pow(m)) {
                return Err(MembershipFailure {
                    form: root,
                    multiplicity: m,
                    image,
                });
            }
        }
        Ok(())
    }

    pub fn to_alpha_string(&self) -> String {
        let names = ["∂1", "∂2", "∂z"];
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("({}) {n}", c.to_alpha_string()))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}; {}; {}]",
            self.label, self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

/// Row-vector convention: `[θ_1 … θ_n] = [φ_1 … φ_m] · M`, so
/// `θ_j = Σ_p M[p][j] · φ_p`.
pub fn transform(basis: &[Derivation], m: &PolyMatrix) -> Result<Vec<Derivation>, ExactAlgError> {
    if basis.len() != m.rows() {
        return Err(ExactAlgError::DimensionMismatch {
            left: (1, basis.len()),
            right: (m.rows(), m.cols()),
        });
    }
    Ok((0..m.cols())
        .map(|j| {
            basis
                .iter()
                .enumerate()
                .filter(|(p, _)| !m.get(*p, j).is_zero())
                .fold(Derivation::zero(), |acc, (p, phi)| acc.add(&phi.mul_poly(m.get(p, j))))
        })
        .collect())
}

/// Coefficient matrix with coordinates as rows and derivations as columns,
/// so that `basis = [∂1, ∂2, ∂z] · matrix`.
pub fn coefficient_matrix(basis: &[Derivation], coords: &[Var]) -> PolyMatrix {
    let rows = coords
        .iter()
        .map(|v| basis.iter().map(|d| d.coeff(*v).clone()).collect())
        .collect();
    PolyMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::weyl_multiarrangement;

    #[test]
    fn apply_examples() {
        assert_eq!(Derivation::euler().apply(&Poly::a1()), Poly::a1());
        let theta = Derivation::new(Poly::a1(), Poly::a2(), Poly::zero());
        assert_eq!(theta.apply(&Poly::linear(1, 1, -1)), Poly::linear(1, 1, 0));
        let p1 = Poly::a1().pow(2) + Poly::a1() * Poly::a2() + Poly::a2().pow(2);
        assert_eq!(Derivation::partial(Var::A1).apply(&p1), Poly::linear(2, 1, 0));
    }

    #[test]
    fn euler_examples() {
        let e = Derivation::euler();
        assert_eq!(e.apply(&Poly::z()), Poly::z());
        let q = Poly::a1() * Poly::a2() * Poly::linear(1, 1, 0);
        assert_eq!(e.apply(&q), q.scale(&crate::exactalg::int(3)));
        assert_eq!(e.apply(&Poly::linear(1, 0, -2)), Poly::linear(1, 0, -2));
    }

    #[test]
    fn logarithmic_examples() {
        for k in 0..3 {
            assert!(Derivation::euler().is_logarithmic(&Arrangement::shi(k)).is_ok());
            assert!(Derivation::euler().is_logarithmic(&Arrangement::cat(k)).is_ok());
        }
        let d1 = Derivation::partial(Var::A1);
        assert!(d1.is_logarithmic(&Arrangement::shi(0)).is_ok());
        let fail = d1.is_logarithmic(&Arrangement::cat(0)).unwrap_err();
        assert_eq!(fail.form, Poly::a1());
        assert_eq!(fail.image, Poly::one());
    }

    #[test]
    fn restriction() {
        let t = Derivation::new(Poly::a1(), Poly::a2(), Poly::zero());
        assert_eq!(t.restrict_z0().unwrap().coeffs(), t.coeffs());
        let t = Derivation::new(Poly::linear(1, 0, 1), Poly::zero(), Poly::zero());
        assert_eq!(t.restrict_z0().unwrap().coeff(Var::A1), &Poly::a1());
        assert!(matches!(
            Derivation::euler().restrict_z0(),
            Err(DerivationError::NonzeroZCoefficient(_))
        ));
    }

    #[test]
    fn multiarrangement_membership() {
        let d1 = Derivation::partial(Var::A1);
        assert!(d1.multi_membership(&weyl_multiarrangement(0).1).is_ok());
        let fail = d1.multi_membership(&weyl_multiarrangement(1).1).unwrap_err();
        assert_eq!(fail.form, Poly::a1());
        assert_eq!(fail.multiplicity, 2);
    }

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(Derivation::euler().degree(), Some(1));
        assert_eq!(Derivation::partial(Var::A2).degree(), Some(0));
        let mixed = Derivation::new(Poly::a1(), Poly::one(), Poly::zero());
        assert_eq!(mixed.degree(), None);
        assert!(Derivation::zero().is_homogeneous());
    }

    #[test]
    fn transform_row_convention() {
        let basis = [Derivation::partial(Var::A1), Derivation::partial(Var::A2)];
        let m = PolyMatrix::from_rows(vec![
            vec![Poly::a1(), Poly::one()],
            vec![Poly::a2(), Poly::zero()],
        ]);
        let out = transform(&basis, &m).unwrap();
        assert_eq!(out[0].coeffs(), &[Poly::a1(), Poly::a2(), Poly::zero()]);
        assert_eq!(out[1].coeffs(), &[Poly::one(), Poly::zero(), Poly::zero()]);
        assert_eq!(coefficient_matrix(&out, &[Var::A1, Var::A2]), m);
    }
}
