//! The recursive matrix pipeline.
//!
//! Starting from `[∂1, ∂2]`, the simple-root basis plus of `D₀(Shi^{k+1})` is
//! `[φ^(k)] · M_k · T_k · N_{k+1} · A⁻¹`. Along the way it produces the
//! simple-root basis minus `[ψ] = [φ]·A`, the `W`-invariant basis
//! `[θ] = [φ]·M_k` of `D₀(Cat^k)`, and the second invariant basis
//! `[η^(k)] = [ψ^(k+1)]·N_{k+1}⁻¹`.
//!
//! Every step is checked as soon as it is produced, so a defect surfaces at
//! the first bad level.

use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::derivation::{coefficient_matrix, transform, Derivation, MembershipFailure};
use crate::exactalg::{int, rat, ExactAlgError, Poly, PolyMatrix, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("level {k}: {label} fails the {which} characterization: {detail}")]
    Characterization {
        k: u32,
        label: String,
        which: &'static str,
        detail: String,
    },
    #[error("level {k}: {label} is not homogeneous of degree {expected}")]
    NotHomogeneous { k: u32, label: String, expected: u32 },
    #[error("level {k}: {label} has a non-polynomial coefficient")]
    NonPolynomial { k: u32, label: String },
    #[error("{label} is not logarithmic on {arrangement}: {failure}")]
    Membership {
        label: String,
        arrangement: String,
        failure: MembershipFailure,
    },
    #[error("step matrix display mismatch: {0}")]
    DisplayMismatch(String),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn shift(root: Poly, c: i64) -> Poly {
    &root + &Poly::z().scale(&int(c))
}

/// `A = [[2, −1], [−1, 2]]`.
pub fn cartan() -> PolyMatrix {
    PolyMatrix::constant(vec![vec![int(2), int(-1)], vec![int(-1), int(2)]])
}

/// `A⁻¹ = (1/3)·[[2, 1], [1, 2]]`.
pub fn cartan_inverse() -> PolyMatrix {
    PolyMatrix::constant(vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]])
}

pub fn matrix_m(n: u32) -> PolyMatrix {
    let n = n as i64;
    let l1 = shift(Poly::a1(), n);
    let l2 = shift(Poly::a2(), n);
    PolyMatrix::from_rows(vec![
        vec![l1.clone(), Poly::linear(2, 4, 3 * n) * &l1],
        vec![l2.clone(), -(Poly::linear(4, 2, 3 * n) * &l2)],
    ])
}

/// `[[0, 1], [1, 0]] · Mᵀ` with `z ↦ −z`.
pub fn flip_transpose(m: &PolyMatrix) -> PolyMatrix {
    let swap = PolyMatrix::constant(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    let flipped = m
        .transpose()
        .substitute(&[Poly::a1(), Poly::a2(), -Poly::z()]);
    swap.mul(&flipped).expect("2x2")
}

fn matrix_n_display(n: u32) -> PolyMatrix {
    let n = n as i64;
    let l1 = shift(Poly::a1(), -n);
    let l2 = shift(Poly::a2(), -n);
    PolyMatrix::from_rows(vec![
        vec![
            Poly::linear(2, 4, -3 * n) * &l1,
            -(Poly::linear(4, 2, -3 * n) * &l2),
        ],
        vec![l1, l2],
    ])
}

/// `N_n`, written out entrywise and checked against the flip-transpose of `M_n`.
pub fn matrix_n(n: u32) -> Result<PolyMatrix> {
    let shown = matrix_n_display(n);
    if shown != flip_transpose(&matrix_m(n)) {
        return Err(ConstructionError::DisplayMismatch(format!(
            "N_{n} differs from the flip-transpose of M_{n}"
        )));
    }
    Ok(shown)
}

/// `diag(1/(3n+1), 1/(3n+2))`.
pub fn matrix_t(n: u32) -> PolyMatrix {
    let n = n as i64;
    PolyMatrix::constant(vec![
        vec![rat(1, 3 * n + 1), int(0)],
        vec![int(0), rat(1, 3 * n + 2)],
    ])
}

/// `−6(a1 + nz)(a2 + nz)(a1 + a2 + nz)`.
pub fn expected_det_m(n: u32) -> Poly {
    let n = n as i64;
    (Poly::linear(1, 0, n) * Poly::linear(0, 1, n) * Poly::linear(1, 1, n)).scale(&int(-6))
}

/// The matrices of one pipeline step, with their structural invariants
/// checked on construction.
#[derive(Debug, Clone)]
pub struct StepMatrices {
    pub n: u32,
    pub m: PolyMatrix,
    pub n_mat: PolyMatrix,
    pub t: PolyMatrix,
    pub a: PolyMatrix,
}

impl StepMatrices {
    pub fn new(n: u32) -> Result<Self> {
        let m = matrix_m(n);
        if m.det()? != expected_det_m(n) {
            return Err(ConstructionError::DisplayMismatch(format!("det M_{n}")));
        }
        let t = matrix_t(n);
        if !t.entries().iter().all(Poly::is_constant) {
            return Err(ConstructionError::DisplayMismatch(format!("T_{n} is not constant")));
        }
        Ok(StepMatrices {
            n,
            m,
            n_mat: matrix_n(n)?,
            t,
            a: cartan(),
        })
    }

    /// `M_n · T_n · N_{n+1} · A⁻¹`.
    pub fn transition(&self) -> Result<PolyMatrix> {
        let next_n = matrix_n(self.n + 1)?;
        Ok(self
            .m
            .mul(&self.t)?
            .mul(&next_n)?
            .mul(&cartan_inverse())?)
    }
}

fn label_pair(prefix: &str, k: u32) -> [String; 2] {
    [format!("{prefix}1_k{k}"), format!("{prefix}2_k{k}")]
}

fn pair_from_matrix(c: &PolyMatrix, prefix: &str, k: u32) -> [Derivation; 2] {
    let [l1, l2] = label_pair(prefix, k);
    let col = |j: usize, label: String| {
        Derivation::new(c.get(0, j).clone(), c.get(1, j).clone(), Poly::zero()).with_label(label)
    };
    [col(0, l1), col(1, l2)]
}

fn relabel(pair: Vec<Derivation>, prefix: &str, k: u32) -> [Derivation; 2] {
    let [l1, l2] = label_pair(prefix, k);
    let mut it = pair.into_iter();
    let (a, b) = (it.next().expect("two"), it.next().expect("two"));
    [a.with_label(l1), b.with_label(l2)]
}

fn check_degree(pair: &[Derivation; 2], degrees: [u32; 2], k: u32) -> Result<()> {
    for (d, e) in pair.iter().zip(degrees) {
        if d.degree() != Some(e) || !d.coeff(Var::Z).is_zero() {
            return Err(ConstructionError::NotHomogeneous {
                k,
                label: d.label().to_string(),
                expected: e,
            });
        }
    }
    Ok(())
}

fn check_logarithmic(pair: &[Derivation; 2], arr: &Arrangement) -> Result<()> {
    for d in pair {
        d.is_logarithmic(arr)
            .map_err(|failure| ConstructionError::Membership {
                label: d.label().to_string(),
                arrangement: arr.id(),
                failure,
            })?;
    }
    Ok(())
}

/// `φ_i(a_j + kz) ∈ (a_j + kz)·S` for `i ≠ j`.
pub fn check_srb_plus_characterization(plus: &[Derivation; 2], k: u32) -> Result<()> {
    let forms = [shift(Poly::a1(), k as i64), shift(Poly::a2(), k as i64)];
    for (i, phi) in plus.iter().enumerate() {
        let form = &forms[1 - i];
        let image = phi.apply(form);
        if !image.is_divisible_by(form) {
            return Err(ConstructionError::Characterization {
                k,
                label: phi.label().to_string(),
                which: "SRB+",
                detail: format!("({form}) does not divide {image}"),
            });
        }
    }
    Ok(())
}

/// Both coefficients of `ψ_i` are divisible by `a_i − kz`.
pub fn check_srb_minus_characterization(minus: &[Derivation; 2], k: u32) -> Result<()> {
    let forms = [shift(Poly::a1(), -(k as i64)), shift(Poly::a2(), -(k as i64))];
    for (psi, form) in minus.iter().zip(&forms) {
        if psi.div_exact(form)?.is_none() {
            return Err(ConstructionError::Characterization {
                k,
                label: psi.label().to_string(),
                which: "SRB-",
                detail: format!("({form}) does not divide both coefficients"),
            });
        }
    }
    Ok(())
}

fn validate_plus_level(plus: &[Derivation; 2], k: u32) -> Result<()> {
    check_degree(plus, [3 * k, 3 * k], k)?;
    check_logarithmic(plus, &Arrangement::shi(k))?;
    check_srb_plus_characterization(plus, k)?;
    srb_minus_from_plus(plus, k)?;
    Ok(())
}

/// Coefficient matrix `C_k` with `[φ^(k)] = [∂1, ∂2] · C_k`, for
/// `k = 0..=k_max`, each level validated before the next is built.
pub fn srb_plus_matrices(k_max: u32) -> Result<Vec<PolyMatrix>> {
    let mut out = vec![PolyMatrix::identity(2)];
    for n in 0..k_max {
        let step = StepMatrices::new(n)?;
        let next = out.last().expect("nonempty").mul(&step.transition()?)?;
        let k = n + 1;
        validate_plus_level(&pair_from_matrix(&next, "phi", k), k)?;
        out.push(next);
    }
    Ok(out)
}

/// The SRB⁺ `(φ1, φ2)` of `D₀(Shi^k)`.
pub fn build_srb_plus(k: u32) -> Result<[Derivation; 2]> {
    let mats = srb_plus_matrices(k)?;
    Ok(pair_from_matrix(mats.last().expect("nonempty"), "phi", k))
}

/// `[ψ] = [φ]·A`, checked against the SRB⁻ characterization for `k ≥ 1`.
pub fn srb_minus_from_plus(plus: &[Derivation; 2], k: u32) -> Result<[Derivation; 2]> {
    let minus = relabel(transform(plus, &cartan())?, "psi", k);
    if k > 0 {
        check_srb_minus_characterization(&minus, k)?;
    }
    Ok(minus)
}

/// `[θ] = [φ]·M_k`, a basis of `D₀(Cat^k)` of degrees `(3k+1, 3k+2)`.
pub fn cat_basis_from_plus(plus: &[Derivation; 2], k: u32) -> Result<[Derivation; 2]> {
    let theta = relabel(transform(plus, &matrix_m(k))?, "theta", k);
    check_degree(&theta, [3 * k + 1, 3 * k + 2], k)?;
    check_logarithmic(&theta, &Arrangement::cat(k))?;
    Ok(theta)
}

pub fn build_cat_basis(k: u32) -> Result<[Derivation; 2]> {
    cat_basis_from_plus(&build_srb_plus(k)?, k)
}

/// `[η^(k)] = [ψ^(k+1)] · N_{k+1}⁻¹`; the rational entries of `N⁻¹` must
/// cancel to polynomials.
pub fn eta_basis_from_srb_minus(minus_next: &[Derivation; 2], k: u32) -> Result<[Derivation; 2]> {
    let n_inv = matrix_n(k + 1)?.inverse2()?;
    let psi = coefficient_matrix(minus_next, &[Var::A1, Var::A2]).to_rat();
    let shifted: Vec<Poly> = crate::arrangement::positive_roots()
        .into_iter()
        .map(|r| shift(r, -(k as i64 + 1)))
        .collect();
    let product = psi.mul(&n_inv)?.map(|x| x.clone().reduce_with(&shifted));
    let [l1, l2] = label_pair("eta", k);
    let coeffs = product.to_poly().ok_or(ConstructionError::NonPolynomial { k, label: l1.clone() })?;
    let eta = pair_from_matrix(&coeffs, "eta", k);
    debug_assert_eq!(eta[1].label(), l2);
    check_degree(&eta, [3 * k + 1, 3 * k + 2], k)?;
    check_logarithmic(&eta, &Arrangement::cat(k))?;
    Ok(eta)
}

/// All bases at one level `k`.
#[derive(Debug, Clone)]
pub struct BasisBundle {
    pub k: u32,
    /// `C_k` with `[φ1, φ2] = [∂1, ∂2]·C_k`.
    pub plus_matrix: PolyMatrix,
    pub srb_plus: [Derivation; 2],
    pub srb_minus: [Derivation; 2],
    pub cat_basis: [Derivation; 2],
    pub eta_basis: [Derivation; 2],
}

impl BasisBundle {
    /// `{θ_E, φ1, φ2}`, a basis of `D(Shi^k)`.
    pub fn shi_basis(&self) -> [Derivation; 3] {
        [Derivation::euler(), self.srb_plus[0].clone(), self.srb_plus[1].clone()]
    }

    /// `{θ_E, θ1, θ2}`, a basis of `D(Cat^k)`.
    pub fn cat_full_basis(&self) -> [Derivation; 3] {
        [Derivation::euler(), self.cat_basis[0].clone(), self.cat_basis[1].clone()]
    }

    pub fn eta_full_basis(&self) -> [Derivation; 3] {
        [Derivation::euler(), self.eta_basis[0].clone(), self.eta_basis[1].clone()]
    }
}

/// Bundles for `k = 0..=k_max`. The η-basis at level `k` needs the SRB⁻ at
/// level `k + 1`, so the pipeline runs one step further.
pub fn build_all(k_max: u32) -> Result<Vec<BasisBundle>> {
    let mats = srb_plus_matrices(k_max + 1)?;
    let mut out = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let c = &mats[k as usize];
        let plus = pair_from_matrix(c, "phi", k);
        let minus = srb_minus_from_plus(&plus, k)?;
        let cat = cat_basis_from_plus(&plus, k)?;
        let plus_next = pair_from_matrix(&mats[k as usize + 1], "phi", k + 1);
        let minus_next = srb_minus_from_plus(&plus_next, k + 1)?;
        let eta = eta_basis_from_srb_minus(&minus_next, k)?;
        out.push(BasisBundle {
            k,
            plus_matrix: c.clone(),
            srb_plus: plus,
            srb_minus: minus,
            cat_basis: cat,
            eta_basis: eta,
        });
    }
    Ok(out)
}
