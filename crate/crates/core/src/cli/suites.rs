//! Verification suites. Each `(suite, k)` pair is an independent check over
//! a shared, precomputed [`Workspace`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{weyl_multiarrangement, Arrangement};
use crate::construction::{
    build_all, check_srb_minus_characterization, check_srb_plus_characterization, expected_det_m, matrix_m,
    matrix_n, matrix_t, flip_transpose, BasisBundle, ConstructionError,
};
use crate::derivation::{coefficient_matrix, saito_check, transform, Derivation, GroupElement, Verdict};
use crate::exactalg::rational::to_fraction_string;
use crate::exactalg::{int, Poly, PolyMatrix, RatMatrix, Rational, Var};
use crate::invariant_theory::{
    matrix_b, matrix_bk, matrix_dj, r_matrices, verify_r_recurrence, verify_restriction_identity,
    verify_tk_closed_form, weyl_q, PrimitiveDerivation,
};

use super::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Saito,
    Srb,
    Weyl,
    Swap,
    Restriction,
    Invariant,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Saito,
        Suite::Srb,
        Suite::Weyl,
        Suite::Swap,
        Suite::Restriction,
        Suite::Invariant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Saito => "saito",
            Suite::Srb => "srb",
            Suite::Weyl => "weyl",
            Suite::Swap => "swap",
            Suite::Restriction => "restriction",
            Suite::Invariant => "invariant",
        }
    }

    fn needs_r(self) -> bool {
        matches!(self, Suite::Restriction | Suite::Invariant)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub suite: Suite,
    pub name: String,
    pub k: u32,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub time_ms: Option<f64>,
}

/// Result of a single check before it is stamped into a [`Record`].
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub c: Option<Rational>,
    pub failure: Option<String>,
}

impl Outcome {
    fn fail(msg: impl Into<String>) -> Self {
        Outcome {
            c: None,
            failure: Some(msg.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Turns the first `Err` into a failing outcome.
fn outcome(r: Result<Option<Rational>, String>) -> Outcome {
    match r {
        Ok(c) => Outcome { c, failure: None },
        Err(e) => Outcome::fail(e),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Everything the suites read: the bundles for `k = 0..=k_max`, the
/// primitive derivation, `B`, and (when needed) `R_{2k}` up to `k_max + 1`.
pub struct Workspace {
    pub k_max: u32,
    pub bundles: Vec<BasisBundle>,
    pub d: PrimitiveDerivation,
    pub b: PolyMatrix,
    pub r: Vec<RatMatrix>,
}

impl Workspace {
    pub fn new(k_max: u32, with_r: bool) -> Result<Self, String> {
        let bundles = build_all(k_max).map_err(|e: ConstructionError| e.to_string())?;
        let d = PrimitiveDerivation::new().map_err(|e| e.to_string())?;
        let b = matrix_b(&d).map_err(|e| e.to_string())?;
        let r = if with_r {
            r_matrices(&d, k_max + 1).map_err(|e| e.to_string())?
        } else {
            Vec::new()
        };
        Ok(Workspace { k_max, bundles, d, b, r })
    }

    pub fn for_suites(k_max: u32, suites: &[Suite]) -> Result<Self, String> {
        Workspace::new(k_max, suites.iter().any(|s| s.needs_r()))
    }

    pub fn bundle(&self, k: u32) -> &BasisBundle {
        &self.bundles[k as usize]
    }
}

/// Named checks contributed by `suite` at each level.
fn tasks(suite: Suite, family: Family) -> Vec<&'static str> {
    match suite {
        Suite::Saito => {
            let mut v = Vec::new();
            if family.has_shi() {
                v.push("shi");
            }
            if family.has_cat() {
                v.extend(["cat", "cat_eta"]);
            }
            v
        }
        Suite::Srb => vec!["srb"],
        Suite::Weyl => vec!["weyl"],
        Suite::Swap => vec!["swap"],
        Suite::Restriction => vec!["restriction", "ziegler"],
        Suite::Invariant => vec!["invariant"],
    }
}

pub fn run_check(ws: &Workspace, suite: Suite, name: &str, k: u32) -> Outcome {
    match (suite, name) {
        (Suite::Saito, "shi") => saito(ws.bundle(k).shi_basis(), &Arrangement::shi(k)),
        (Suite::Saito, "cat") => saito(ws.bundle(k).cat_full_basis(), &Arrangement::cat(k)),
        (Suite::Saito, _) => saito(ws.bundle(k).eta_full_basis(), &Arrangement::cat(k)),
        (Suite::Srb, _) => outcome(srb(ws.bundle(k))),
        (Suite::Weyl, _) => outcome(weyl(ws.bundle(k))),
        (Suite::Swap, _) => outcome(swap(ws.bundle(k))),
        (Suite::Restriction, "restriction") => outcome(restriction(ws, k)),
        (Suite::Restriction, _) => outcome(ziegler(ws.bundle(k))),
        (Suite::Invariant, _) => outcome(invariant(ws, k)),
    }
}

/// Runs every `(suite, k)` check for `k = 0..=k_max` in parallel and returns
/// the records ordered by `(suite, k)`.
pub fn run_suites(ws: &Workspace, suites: &[Suite], family: Family, timings: bool) -> Vec<Record> {
    let jobs: Vec<(Suite, &'static str, u32)> = suites
        .iter()
        .flat_map(|&s| (0..=ws.k_max).flat_map(move |k| tasks(s, family).into_iter().map(move |n| (s, n, k))))
        .collect();
    let mut records: Vec<(usize, Record)> = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(suite, name, k))| {
            let start = Instant::now();
            let out = run_check(ws, suite, name, k);
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let rec = Record {
                suite,
                name: name.to_string(),
                k,
                verdict: Verdict::from_bool(out.passed()),
                c: out.c.as_ref().map(to_fraction_string),
                witness: out.failure,
                time_ms: timings.then_some((elapsed * 1e3).round() / 1e3),
            };
            (i, rec)
        })
        .collect();
    records.sort_by(|(i, a), (j, b)| (a.suite, a.k, i).cmp(&(b.suite, b.k, j)));
    records.into_iter().map(|(_, r)| r).collect()
}

fn saito(basis: [Derivation; 3], arr: &Arrangement) -> Outcome {
    match saito_check(&basis, arr) {
        Err(e) => Outcome::fail(e.to_string()),
        Ok(cert) => {
            let mut out = Outcome {
                c: Some(cert.quotient_constant.clone()),
                failure: None,
            };
            if !cert.verdict.passed() {
                out.failure = Some(format!("det = {} is not c·Q({})", cert.determinant, cert.arrangement));
            } else if !cert.exponents_match() {
                out.failure = Some(format!(
                    "degrees {:?} differ from exponents {:?}",
                    cert.degrees, cert.expected_exponents
                ));
            }
            out
        }
    }
}

fn same(a: &Derivation, b: &Derivation) -> bool {
    a.coeffs() == b.coeffs()
}

fn srb(bundle: &BasisBundle) -> Result<Option<Rational>, String> {
    let k = bundle.k;
    check_srb_plus_characterization(&bundle.srb_plus, k).map_err(|e| e.to_string())?;
    if k > 0 {
        check_srb_minus_characterization(&bundle.srb_minus, k).map_err(|e| e.to_string())?;
    }
    // θ1 is the k-Euler derivation Σ (a_i + kz) φ_i
    let ki = k as i64;
    let euler = bundle.srb_plus[0]
        .mul_poly(&Poly::linear(1, 0, ki))
        .add(&bundle.srb_plus[1].mul_poly(&Poly::linear(0, 1, ki)));
    ensure(same(&euler, &bundle.cat_basis[0]), || {
        format!("level {k}: theta1 is not the k-Euler derivation")
    })?;
    Ok(None)
}

fn weyl(bundle: &BasisBundle) -> Result<Option<Rational>, String> {
    let k = bundle.k;
    let gens = [GroupElement::s1(), GroupElement::s2(), GroupElement::tau()];
    let cat = Arrangement::cat(k);
    for g in &gens {
        ensure(cat.is_preserved_by(g), || format!("{} does not preserve {}", g.label(), cat.id()))?;
        for theta in bundle.cat_basis.iter().chain(&bundle.eta_basis) {
            ensure(same(&g.act_on_derivation(theta), theta), || {
                format!("{} does not fix {}", g.label(), theta.label())
            })?;
        }
    }
    // s_i fixes φ_j for i ≠ j
    let (s1, s2) = (GroupElement::s1(), GroupElement::s2());
    for (g, phi) in [(&s2, &bundle.srb_plus[0]), (&s1, &bundle.srb_plus[1])] {
        ensure(same(&g.act_on_derivation(phi), phi), || {
            format!("{} does not fix {}", g.label(), phi.label())
        })?;
    }
    // (a_i − kz)·s_i(ψ_i) = s_i(a_i − kz)·ψ_i
    let ki = k as i64;
    let forms = [Poly::linear(1, 0, -ki), Poly::linear(0, 1, -ki)];
    for ((g, psi), l) in [&s1, &s2].into_iter().zip(&bundle.srb_minus).zip(&forms) {
        let lhs = g.act_on_derivation(psi).mul_poly(l);
        let rhs = psi.mul_poly(&g.act_on_poly(l));
        ensure(same(&lhs, &rhs), || format!("reflection identity fails for {}", psi.label()))?;
    }
    Ok(None)
}

fn swap(bundle: &BasisBundle) -> Result<Option<Rational>, String> {
    let g = GroupElement::tau_s0();
    for pair in [&bundle.srb_minus, &bundle.srb_plus] {
        for (i, j) in [(0, 1), (1, 0)] {
            ensure(same(&g.act_on_derivation(&pair[i]), &pair[j].neg()), || {
                format!("tau s0 · {} != -{}", pair[i].label(), pair[j].label())
            })?;
        }
    }
    Ok(None)
}

fn restriction(ws: &Workspace, k: u32) -> Result<Option<Rational>, String> {
    let r = ws.r.get(k as usize).ok_or("R matrices were not computed")?;
    let rep = verify_restriction_identity(k, &ws.bundle(k).srb_plus, r).map_err(|e| e.to_string())?;
    match rep.mismatch {
        None => Ok(None),
        Some(m) => Err(m),
    }
}

/// `restrict_z0(φ_i) ∈ D(A_Φ, 2k)` and the restricted determinant is
/// `c·Q^{2k}` with `c ≠ 0`; returns `c`.
pub fn ziegler(bundle: &BasisBundle) -> Result<Option<Rational>, String> {
    let k = bundle.k;
    let (_, multi) = weyl_multiarrangement(k);
    let restricted = bundle
        .srb_plus
        .iter()
        .map(|phi| phi.restrict_z0().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    for phi in &restricted {
        phi.multi_membership(&multi)
            .map_err(|f| format!("{}: {f}", phi.label()))?;
    }
    let det = coefficient_matrix(&restricted, &[Var::A1, Var::A2])
        .det()
        .map_err(|e| e.to_string())?;
    let target = weyl_q().pow(2 * k);
    let c = match (det.leading_term(), target.leading_term()) {
        (Some((dm, dc)), Some((tm, tc))) if dm == tm => dc / tc,
        _ => Rational::zero(),
    };
    ensure(!c.is_zero() && det == target.scale(&c), || {
        format!("restricted determinant {det} is not c·Q^{}", 2 * k)
    })?;
    Ok(Some(c))
}

fn invariant(ws: &Workspace, k: u32) -> Result<Option<Rational>, String> {
    let err = |e: &dyn fmt::Display| e.to_string();
    if k == 0 {
        // level-free displays: D[J], B, and the normalization of D
        matrix_dj(&ws.d).map_err(|e| err(&e))?;
        PrimitiveDerivation::new().map_err(|e| err(&e))?;
    }
    ensure(matrix_m(k).det().map_err(|e| err(&e))? == expected_det_m(k), || {
        format!("det M_{k} differs from -6(a1+kz)(a2+kz)(a1+a2+kz)")
    })?;
    let n = matrix_n(k).map_err(|e| err(&e))?;
    ensure(n == flip_transpose(&matrix_m(k)), || format!("N_{k} is not the flip-transpose of M_{k}"))?;
    if k >= 1 {
        let ki = k as i64;
        let want = PolyMatrix::constant(vec![vec![int(0), int(3 * ki - 1)], vec![int(3 * ki - 2), int(0)]]);
        ensure(matrix_bk(&ws.b, k).map_err(|e| err(&e))? == want, || format!("B^({k}) display"))?;
    }
    let (rep, _) = verify_tk_closed_form(k, &ws.b).map_err(|e| err(&e))?;
    if let Some(m) = rep.mismatch {
        return Err(format!("T_{k} closed form: {m}"));
    }
    let (r_k, r_next) = match (ws.r.get(k as usize), ws.r.get(k as usize + 1)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err("R matrices were not computed".to_string()),
    };
    let rep = verify_r_recurrence(k, r_k, r_next, &ws.b).map_err(|e| err(&e))?;
    if let Some(m) = rep.mismatch {
        return Err(format!("R recurrence: {m}"));
    }
    eta_is_theta_t(ws.bundle(k))?;
    Ok(None)
}

/// `[η] = [θ]·T_k`.
pub fn eta_is_theta_t(bundle: &BasisBundle) -> Result<(), String> {
    let k = bundle.k;
    let scaled = transform(&bundle.cat_basis, &matrix_t(k)).map_err(|e| e.to_string())?;
    for (a, b) in scaled.iter().zip(&bundle.eta_basis) {
        ensure(same(a, b), || format!("{} differs from theta·T_{k}", b.label()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_workspace_all_pass() {
        let ws = Workspace::new(1, true).unwrap();
        let recs = run_suites(&ws, &Suite::ALL, Family::Both, false);
        for r in &recs {
            assert!(r.verdict.passed(), "{r:?}");
        }
        // saito 3 + srb + weyl + swap + restriction 2 + invariant, per level
        assert_eq!(recs.len(), 2 * 9);
        let shi0 = &recs[0];
        assert_eq!((shi0.name.as_str(), shi0.k, shi0.c.as_deref()), ("shi", 0, Some("1/1")));
        let cat0 = recs.iter().find(|r| r.name == "cat" && r.k == 0).unwrap();
        assert_eq!(cat0.c.as_deref(), Some("-6/1"));
    }

    #[test]
    fn family_filter() {
        assert_eq!(tasks(Suite::Saito, Family::Shi), vec!["shi"]);
        assert_eq!(tasks(Suite::Saito, Family::Cat), vec!["cat", "cat_eta"]);
        assert_eq!(tasks(Suite::Weyl, Family::Shi), vec!["weyl"]);
    }

    #[test]
    fn ziegler_constants() {
        let ws = Workspace::new(2, false).unwrap();
        assert_eq!(ziegler(ws.bundle(0)).unwrap(), Some(int(1)));
        assert_eq!(ziegler(ws.bundle(1)).unwrap(), Some(int(-6)));
        assert_eq!(ziegler(ws.bundle(2)).unwrap(), Some(crate::exactalg::rat(18, 5)));
    }

    #[test]
    fn missing_r_is_reported() {
        let ws = Workspace::new(0, false).unwrap();
        let out = run_check(&ws, Suite::Restriction, "restriction", 0);
        assert!(!out.passed());
    }
}
