use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Derivation, MembershipFailure};
use crate::arrangement::Arrangement;
use crate::exactalg::{Poly, PolyMatrix, Rational, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SaitoError {
    #[error("Saito's criterion needs exactly 3 derivations, got {0}")]
    WrongCount(usize),
    #[error("{label} is not logarithmic: {failure}")]
    NotLogarithmic {
        label: String,
        failure: MembershipFailure,
    },
}

/// Outcome of Saito's criterion: `det(θ_i(x_j)) = c · Q(A)` with `c ≠ 0`.
#[derive(Debug, Clone)]
pub struct SaitoCertificate {
    pub arrangement: String,
    pub labels: Vec<String>,
    pub degrees: Vec<Option<u32>>,
    pub expected_exponents: [u32; 3],
    pub determinant: Poly,
    pub quotient_constant: Rational,
    pub verdict: Verdict,
}

impl SaitoCertificate {
    /// Sorted basis degrees against the arrangement's sorted exponents.
    pub fn exponents_match(&self) -> bool {
        let mut got: Vec<Option<u32>> = self.degrees.clone();
        got.sort();
        let mut want: Vec<Option<u32>> = self.expected_exponents.iter().map(|e| Some(*e)).collect();
        want.sort();
        got == want
    }

    /// The determinant divided by each hyperplane form; every entry is
    /// `Some` for a passing certificate.
    pub fn hyperplane_quotients(&self, arr: &Arrangement) -> Vec<(Poly, Option<Poly>)> {
        arr.forms()
            .map(|f| (f.clone(), self.determinant.div_exact(f).ok().flatten()))
            .collect()
    }
}

/// Saito's criterion for three logarithmic derivations on `arr`.
///
/// Every derivation must already lie in `D(arr)`; a violation is reported as
/// an error, distinct from a failing certificate.
pub fn saito_check(basis: &[Derivation], arr: &Arrangement) -> Result<SaitoCertificate, SaitoError> {
    if basis.len() != 3 {
        return Err(SaitoError::WrongCount(basis.len()));
    }
    for theta in basis {
        theta
            .is_logarithmic(arr)
            .map_err(|failure| SaitoError::NotLogarithmic {
                label: theta.label().to_string(),
                failure,
            })?;
    }
    let rows = basis
        .iter()
        .map(|t| Var::ALL.iter().map(|v| t.coeff(*v).clone()).collect())
        .collect();
    let determinant = PolyMatrix::from_rows(rows).det().expect("3x3");
    let q = arr.defining_polynomial();
    let quotient_constant = match (determinant.leading_term(), q.leading_term()) {
        (Some((dm, dc)), Some((qm, qc))) if dm == qm => dc / qc,
        _ => Rational::zero(),
    };
    let ok = !quotient_constant.is_zero() && determinant == q.scale(&quotient_constant);
    Ok(SaitoCertificate {
        arrangement: arr.id(),
        labels: basis.iter().map(|t| t.label().to_string()).collect(),
        degrees: basis.iter().map(Derivation::degree).collect(),
        expected_exponents: arr.expected_exponents,
        determinant,
        quotient_constant,
        verdict: Verdict::from_bool(ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn shi0_base_case() {
        let basis = [
            Derivation::euler(),
            Derivation::partial(Var::A1),
            Derivation::partial(Var::A2),
        ];
        let cert = saito_check(&basis, &Arrangement::shi(0)).unwrap();
        assert!(cert.verdict.passed());
        assert_eq!(cert.determinant, Poly::z());
        assert_eq!(cert.quotient_constant, int(1));
        assert!(cert.exponents_match());
    }

    #[test]
    fn cat0_weyl_columns() {
        let (a1, a2) = (Poly::a1(), Poly::a2());
        let basis = [
            Derivation::euler(),
            Derivation::new(a1.clone(), a2.clone(), Poly::zero()).with_label("theta1"),
            Derivation::new(Poly::linear(2, 4, 0) * &a1, -(Poly::linear(4, 2, 0) * &a2), Poly::zero())
                .with_label("theta2"),
        ];
        let arr = Arrangement::cat(0);
        let cert = saito_check(&basis, &arr).unwrap();
        assert!(cert.verdict.passed());
        // cofactor oracle along the z column: z·(a1·(−(4a1+2a2)a2) − a2·(2a1+4a2)a1)
        assert_eq!(cert.quotient_constant, int(-6));
        assert_eq!(cert.degrees, vec![Some(1), Some(1), Some(2)]);
        assert!(cert.hyperplane_quotients(&arr).iter().all(|(_, q)| q.is_some()));
    }

    #[test]
    fn failing_certificate() {
        // logarithmic on Cat^0, but the last two are dependent
        let theta = Derivation::new(Poly::a1(), Poly::a2(), Poly::zero());
        let basis = [
            Derivation::euler(),
            theta.clone(),
            theta.mul_poly(&Poly::linear(1, 1, 0)),
        ];
        let cert = saito_check(&basis, &Arrangement::cat(0)).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
    }

    #[test]
    fn precondition_violations() {
        let d1 = Derivation::partial(Var::A1).with_label("d1");
        let basis = [Derivation::euler(), d1.clone(), Derivation::partial(Var::A2)];
        match saito_check(&basis, &Arrangement::cat(0)) {
            Err(SaitoError::NotLogarithmic { label, failure }) => {
                assert_eq!(label, "d1");
                assert_eq!(failure.form, Poly::a1());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            saito_check(&[d1], &Arrangement::shi(0)),
            Err(SaitoError::WrongCount(1))
        ));
    }
}
