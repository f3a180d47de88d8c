//! Invariant theory of A₂ in the simple-root coordinates: basic invariants,
//! the primitive derivation `D`, the Jacobian `J`, the matrices `B` and
//! `B^(k)`, the inverse-Jacobian matrices `R_{2k}`, and two closed-form
//! cross-checks against the recursive pipeline.
//!
//! Nothing here involves `z`. All rational-function identities are checked
//! by cross-multiplication.

use thiserror::Error;

use crate::construction::{cartan, matrix_m, matrix_n, matrix_t};
use crate::derivation::{coefficient_matrix, Derivation};
use crate::exactalg::{int, rat, ExactAlgError, Poly, PolyMatrix, RatFunc, RatMatrix, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("primitive derivation is not normalized: {0}")]
    Normalization(String),
    #[error("computed {name} differs from its closed form: {detail}")]
    Mismatch { name: &'static str, detail: String },
    #[error("B^(k) needs k >= 1")]
    LevelZero,
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

type Result<T> = std::result::Result<T, InvariantError>;

/// `P1 = a1² + a1a2 + a2²`, `P2 = (2/27)(a1 − a2)(a1 + 2a2)(2a1 + a2)`.
#[derive(Debug, Clone)]
pub struct BasicInvariants {
    pub p1: Poly,
    pub p2: Poly,
}

impl BasicInvariants {
    pub fn new() -> Self {
        let (a1, a2) = (Poly::a1(), Poly::a2());
        let p1 = a1.pow(2) + &a1 * &a2 + a2.pow(2);
        let p2 = (Poly::linear(1, -1, 0) * Poly::linear(1, 2, 0) * Poly::linear(2, 1, 0)).scale(&rat(2, 27));
        BasicInvariants { p1, p2 }
    }
}

impl Default for BasicInvariants {
    fn default() -> Self {
        Self::new()
    }
}

/// `Q = a1·a2·(a1 + a2)`.
pub fn weyl_q() -> Poly {
    Poly::a1() * Poly::a2() * Poly::linear(1, 1, 0)
}

/// `D = d1·∂1 + d2·∂2` with `d1 = (a1 + 2a2)/(6Q)` and
/// `d2 = −(2a1 + a2)/(6Q)`, normalized so that `D(P1) = 0`, `D(P2) = 1/3`.
#[derive(Debug, Clone)]
pub struct PrimitiveDerivation {
    pub d1: RatFunc,
    pub d2: RatFunc,
}

impl PrimitiveDerivation {
    /// Builds `D` and proves its normalization.
    pub fn new() -> Result<Self> {
        let six_q = weyl_q().scale(&int(6));
        let d = PrimitiveDerivation {
            d1: RatFunc::new(Poly::linear(1, 2, 0), six_q.clone())?,
            d2: RatFunc::new(-Poly::linear(2, 1, 0), six_q)?,
        };
        let inv = BasicInvariants::new();
        let dp1 = d.apply_poly(&inv.p1);
        let dp2 = d.apply_poly(&inv.p2);
        if !dp1.is_zero() {
            return Err(InvariantError::Normalization(format!("D(P1) = {dp1}")));
        }
        if dp2 != RatFunc::constant(rat(1, 3)) {
            return Err(InvariantError::Normalization(format!("D(P2) = {dp2}")));
        }
        Ok(d)
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        &(&self.d1 * &f.partial(Var::A1)) + &(&self.d2 * &f.partial(Var::A2))
    }

    pub fn apply_poly(&self, f: &Poly) -> RatFunc {
        self.apply(&RatFunc::from_poly(f.clone()))
    }

    /// `[f, D f, …, D^k f]`.
    pub fn iterates(&self, f: &Poly, k: u32) -> Vec<RatFunc> {
        let mut out = Vec::with_capacity(k as usize + 1);
        out.push(RatFunc::from_poly(f.clone()));
        for _ in 0..k {
            let next = self.apply(out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }

    pub fn apply_power(&self, f: &Poly, k: u32) -> RatFunc {
        self.iterates(f, k).pop().expect("nonempty")
    }

    /// Entrywise `D[M] = (D(m_ij))`.
    pub fn apply_entrywise(&self, m: &RatMatrix) -> RatMatrix {
        m.map(|x| self.apply(x))
    }
}

/// `J(f1, f2) = (∂f_j / ∂a_i)`: row `i` is the variable, column `j` the function.
pub fn jacobian(f1: &RatFunc, f2: &RatFunc) -> RatMatrix {
    let fs = [f1, f2];
    RatMatrix::from_rows(
        [Var::A1, Var::A2]
            .iter()
            .map(|v| fs.iter().map(|f| f.partial(*v)).collect())
            .collect(),
    )
}

/// `J(P1, P2)`, a polynomial matrix.
pub fn matrix_j() -> PolyMatrix {
    let inv = BasicInvariants::new();
    PolyMatrix::from_rows(
        [Var::A1, Var::A2]
            .iter()
            .map(|v| vec![inv.p1.partial(*v), inv.p2.partial(*v)])
            .collect(),
    )
}

/// `(1/(18Q))·[[9a2, 4a2(2a1 + a2)], [−9a1, 4a1(a1 + 2a2)]]`.
pub fn matrix_dj_closed_form() -> RatMatrix {
    let den = weyl_q().scale(&int(18));
    let (a1, a2) = (Poly::a1(), Poly::a2());
    let nums = [
        a2.scale(&int(9)),
        (&a2 * &Poly::linear(2, 1, 0)).scale(&int(4)),
        a1.scale(&int(-9)),
        (&a1 * &Poly::linear(1, 2, 0)).scale(&int(4)),
    ];
    let entries = nums
        .into_iter()
        .map(|n| RatFunc::new(n, den.clone()).expect("nonzero"))
        .collect();
    RatMatrix::new(2, 2, entries).expect("2x2")
}

/// `D[J]`, checked against its closed form.
pub fn matrix_dj(d: &PrimitiveDerivation) -> Result<RatMatrix> {
    let dj = d.apply_entrywise(&matrix_j().to_rat());
    if dj != matrix_dj_closed_form() {
        return Err(InvariantError::Mismatch {
            name: "D[J]",
            detail: dj.to_string(),
        });
    }
    Ok(dj)
}

/// `B = Jᵀ·A·D[J]`, which must be the constant `[[0, 2], [1, 0]]`.
pub fn matrix_b(d: &PrimitiveDerivation) -> Result<PolyMatrix> {
    let b = matrix_j()
        .transpose()
        .to_rat()
        .mul(&cartan().to_rat())?
        .mul(&matrix_dj(d)?)?;
    let expect = PolyMatrix::constant(vec![vec![int(0), int(2)], vec![int(1), int(0)]]);
    match b.to_poly() {
        Some(p) if p == expect => Ok(p),
        _ => Err(InvariantError::Mismatch {
            name: "B",
            detail: b.to_string(),
        }),
    }
}

/// `B^(k) = k·B + (k − 1)·Bᵀ`.
pub fn matrix_bk(b: &PolyMatrix, k: u32) -> Result<PolyMatrix> {
    if k == 0 {
        return Err(InvariantError::LevelZero);
    }
    let k_ = k as i64;
    let lhs = b.map(|x| x.scale(&int(k_)));
    let rhs = b.transpose().map(|x| x.scale(&int(k_ - 1)));
    Ok(lhs.add(&rhs)?)
}

/// `R_{2k} = (−1)^k · J(D^k a1, D^k a2)⁻¹` for `k = 0..=k_max`, sharing one
/// chain of `D`-iterates.
pub fn r_matrices(d: &PrimitiveDerivation, k_max: u32) -> Result<Vec<RatMatrix>> {
    let it1 = d.iterates(&Poly::a1(), k_max);
    let it2 = d.iterates(&Poly::a2(), k_max);
    it1.iter()
        .zip(&it2)
        .enumerate()
        .map(|(k, (f1, f2))| {
            let inv = jacobian(f1, f2).inverse2()?;
            Ok(if k % 2 == 1 { inv.map(|x| -x) } else { inv })
        })
        .collect()
}

pub fn matrix_r(d: &PrimitiveDerivation, k: u32) -> Result<RatMatrix> {
    Ok(r_matrices(d, k)?.pop().expect("nonempty"))
}

/// Result of a closed-form identity check; `mismatch` names the first
/// differing entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub k: u32,
    pub mismatch: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    fn compare(name: &str, k: u32, lhs: &RatMatrix, rhs: &RatMatrix) -> Self {
        let mismatch = (0..lhs.rows())
            .flat_map(|i| (0..lhs.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| lhs.get(i, j) != rhs.get(i, j))
            .map(|(i, j)| format!("entry ({}, {}): {} vs {}", i + 1, j + 1, lhs.get(i, j), rhs.get(i, j)));
        IdentityReport {
            name: name.to_string(),
            k,
            mismatch,
        }
    }
}

/// `[φ1|_{z=0}, φ2|_{z=0}] = [∂1, ∂2]·A·R_{2k}·A⁻¹`, comparing the pipeline
/// output with the primitive-derivation computation.
pub fn verify_restriction_identity(k: u32, plus: &[Derivation; 2], r_k: &RatMatrix) -> Result<IdentityReport> {
    let lhs = coefficient_matrix(plus, &[Var::A1, Var::A2])
        .set_zero(Var::Z)
        .to_rat();
    let a = cartan().to_rat();
    let rhs = a.mul(r_k)?.mul(&a.inverse2()?)?;
    Ok(IdentityReport::compare("restriction", k, &lhs, &rhs))
}

/// `R_{2k}⁻¹·R_{2k+2} = J·(B^(k+1))⁻¹·Jᵀ·A`.
pub fn verify_r_recurrence(k: u32, r_k: &RatMatrix, r_next: &RatMatrix, b: &PolyMatrix) -> Result<IdentityReport> {
    let lhs = r_k.inverse2()?.mul(r_next)?;
    let rhs = transfer_core(b, k)?;
    Ok(IdentityReport::compare("r_recurrence", k, &lhs, &rhs))
}

/// `J·(B^(k+1))⁻¹·Jᵀ·A`.
fn transfer_core(b: &PolyMatrix, k: u32) -> Result<RatMatrix> {
    let j = matrix_j().to_rat();
    let bk_inv = matrix_bk(b, k + 1)?.inverse2()?;
    Ok(j.mul(&bk_inv)?
        .mul(&j.transpose())?
        .mul(&cartan().to_rat())?)
}

/// Evaluates `(M_k|_{z=0})⁻¹·A·J·(B^(k+1))⁻¹·Jᵀ·A·(N_{k+1}|_{z=0})⁻¹` and
/// compares it with `T_k = diag(1/(3k+1), 1/(3k+2))`. Every non-constant
/// part must cancel.
pub fn verify_tk_closed_form(k: u32, b: &PolyMatrix) -> Result<(IdentityReport, RatMatrix)> {
    let m_inv = matrix_m(k).set_zero(Var::Z).inverse2()?;
    let n_inv = matrix_n(k + 1)
        .map_err(|e| InvariantError::Mismatch {
            name: "N",
            detail: e.to_string(),
        })?
        .set_zero(Var::Z)
        .inverse2()?;
    let a = cartan().to_rat();
    let t = m_inv.mul(&a)?.mul(&transfer_core(b, k)?)?.mul(&n_inv)?;
    let mut report = IdentityReport::compare("tk_closed_form", k, &t, &matrix_t(k).to_rat());
    if report.mismatch.is_none() && !t.entries().iter().all(|x| x.to_poly().is_some_and(|p| p.is_constant())) {
        report.mismatch = Some("non-constant residual".to_string());
    }
    Ok((report, t))
}
