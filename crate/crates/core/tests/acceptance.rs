//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shicat::arrangement::Arrangement;
use shicat::cli::suites::{eta_is_theta_t, run_check, ziegler, Workspace};
use shicat::cli::Suite;
use shicat::construction::{
    check_srb_minus_characterization, check_srb_plus_characterization, expected_det_m, flip_transpose, matrix_m,
    matrix_n, srb_plus_matrices,
};
use shicat::derivation::{saito_check, Derivation, GroupElement};
use shicat::exactalg::{int, rat, Monomial, Poly, PolyMatrix, RatFunc, Var};
use shicat::invariant_theory::{
    matrix_b, matrix_bk, matrix_dj, r_matrices, verify_restriction_identity, verify_tk_closed_form,
    BasicInvariants, PrimitiveDerivation,
};

const SAITO_BUDGET: Duration = Duration::from_secs(60);
const RESTRICTION_BUDGET: Duration = Duration::from_secs(30);
const RANDOM_INSTANCES: usize = 500;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn saito_certificates(ws: &Workspace, build_time: Duration) -> Check {
    let start = Instant::now();
    let mut n = 0;
    for k in 0..=6 {
        let b = ws.bundle(k);
        for (basis, arr, exps) in [
            (b.shi_basis(), Arrangement::shi(k), [1, 3 * k, 3 * k]),
            (b.cat_full_basis(), Arrangement::cat(k), [1, 3 * k + 1, 3 * k + 2]),
        ] {
            let cert = saito_check(&basis, &arr).map_err(|e| e.to_string())?;
            ensure(cert.verdict.passed(), || format!("{} fails", arr.id()))?;
            let degrees: Vec<Option<u32>> = exps.iter().map(|e| Some(*e)).collect();
            ensure(cert.degrees == degrees, || format!("{} degrees {:?}", arr.id(), cert.degrees))?;
            n += 1;
        }
    }
    let total = build_time + start.elapsed();
    ensure(total < SAITO_BUDGET, || format!("took {total:?}"))?;
    Ok(format!("{n} certificates, {:.2} s", total.as_secs_f64()))
}

fn matrix_displays() -> Check {
    for k in 0..=6 {
        let det = matrix_m(k).det().map_err(|e| e.to_string())?;
        ensure(det == expected_det_m(k), || format!("det M_{k}"))?;
        let n = matrix_n(k).map_err(|e| e.to_string())?;
        ensure(n == flip_transpose(&matrix_m(k)), || format!("N_{k}"))?;
    }
    let d = PrimitiveDerivation::new().map_err(|e| e.to_string())?;
    let inv = BasicInvariants::new();
    ensure(d.apply_poly(&inv.p1).is_zero(), || "D(P1)".into())?;
    ensure(d.apply_poly(&inv.p2) == RatFunc::constant(rat(1, 3)), || "D(P2)".into())?;
    matrix_dj(&d).map_err(|e| e.to_string())?;
    let b = matrix_b(&d).map_err(|e| e.to_string())?;
    ensure(
        b == PolyMatrix::constant(vec![vec![int(0), int(2)], vec![int(1), int(0)]]),
        || "B".into(),
    )?;
    for k in 1..=6i64 {
        let want = PolyMatrix::constant(vec![vec![int(0), int(3 * k - 1)], vec![int(3 * k - 2), int(0)]]);
        ensure(matrix_bk(&b, k as u32).map_err(|e| e.to_string())? == want, || format!("B^({k})"))?;
    }
    Ok("M_k, N_k for k = 0..6; B, B^(k) for k = 1..6; D[J]; D(P1), D(P2)".into())
}

fn srb_characterizations(ws: &Workspace) -> Check {
    for k in 1..=6 {
        let b = ws.bundle(k);
        check_srb_plus_characterization(&b.srb_plus, k).map_err(|e| e.to_string())?;
        check_srb_minus_characterization(&b.srb_minus, k).map_err(|e| e.to_string())?;
    }
    Ok("k = 1..6".into())
}

fn group_actions(ws: &Workspace) -> Check {
    for k in 0..=6 {
        for suite in [Suite::Weyl, Suite::Swap] {
            let out = run_check(ws, suite, suite.name(), k);
            if let Some(f) = out.failure {
                return Err(format!("{suite} k={k}: {f}"));
            }
        }
    }
    Ok("invariance, reflection and swap identities for k = 0..6".into())
}

fn cat_bases_consistent(ws: &Workspace) -> Check {
    for k in 0..=5 {
        eta_is_theta_t(ws.bundle(k))?;
        let (rep, _) = verify_tk_closed_form(k, &ws.b).map_err(|e| e.to_string())?;
        if let Some(m) = rep.mismatch {
            return Err(format!("T_{k}: {m}"));
        }
    }
    Ok("k = 0..5".into())
}

fn restriction_identity() -> Check {
    let start = Instant::now();
    let mats = srb_plus_matrices(4).map_err(|e| e.to_string())?;
    let d = PrimitiveDerivation::new().map_err(|e| e.to_string())?;
    let rs = r_matrices(&d, 4).map_err(|e| e.to_string())?;
    for k in 0..=4u32 {
        let c = &mats[k as usize];
        let plus = [0, 1].map(|j| Derivation::new(c.get(0, j).clone(), c.get(1, j).clone(), Poly::zero()));
        let rep = verify_restriction_identity(k, &plus, &rs[k as usize]).map_err(|e| e.to_string())?;
        if let Some(m) = rep.mismatch {
            return Err(format!("k={k}: {m}"));
        }
    }
    let t = start.elapsed();
    ensure(t < RESTRICTION_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("k = 0..4, {:.2} s", t.as_secs_f64()))
}

fn multi_coxeter(ws: &Workspace) -> Check {
    let mut cs = Vec::new();
    for k in 0..=5 {
        let c = ziegler(ws.bundle(k))?.ok_or("no constant")?;
        cs.push(shicat::exactalg::rational::to_short_string(&c));
    }
    Ok(format!("c = [{}]", cs.join(", ")))
}

fn random_rational(rng: &mut ChaCha8Rng) -> shicat::exactalg::Rational {
    let n = rng.gen_range(-5..=5i64);
    let d = rng.gen_range(1..=4i64);
    rat(n, d)
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> Poly {
    let terms = rng.gen_range(0..=4);
    Poly::from_terms((0..terms).map(|_| {
        let e1 = rng.gen_range(0..=max_deg);
        let e2 = rng.gen_range(0..=max_deg - e1);
        let ez = rng.gen_range(0..=max_deg - e1 - e2);
        (Monomial::new(e1, e2, ez), random_rational(rng))
    }))
}

fn random_derivation(rng: &mut ChaCha8Rng) -> Derivation {
    Derivation::new(random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 2))
}

fn random_group_element(rng: &mut ChaCha8Rng) -> GroupElement {
    let gens = [
        GroupElement::s1(),
        GroupElement::s2(),
        GroupElement::s0(),
        GroupElement::tau(),
    ];
    let len = rng.gen_range(0..=4);
    (0..len).fold(GroupElement::identity(), |acc, _| {
        acc.compose(&gens[rng.gen_range(0..gens.len())])
    })
}

fn random_linear(rng: &mut ChaCha8Rng) -> [Poly; 3] {
    std::array::from_fn(|_| {
        Var::ALL
            .iter()
            .map(|v| Poly::var(*v).scale(&int(rng.gen_range(-2..=2))))
            .sum()
    })
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> PolyMatrix {
    PolyMatrix::from_rows((0..n).map(|_| (0..n).map(|_| random_poly(rng, 1)).collect()).collect())
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..RANDOM_INSTANCES {
        let (f, g) = (random_poly(&mut rng, 3), random_poly(&mut rng, 3));
        let theta = random_derivation(&mut rng);
        let lhs = theta.apply(&(&f * &g));
        let rhs = &theta.apply(&f) * &g + &f * &theta.apply(&g);
        ensure(lhs == rhs, || format!("Leibniz #{i}"))?;
    }
    for i in 0..RANDOM_INSTANCES {
        let (g, h) = (random_group_element(&mut rng), random_group_element(&mut rng));
        let theta = random_derivation(&mut rng);
        let lhs = g.act_on_derivation(&h.act_on_derivation(&theta));
        let rhs = g.compose(&h).act_on_derivation(&theta);
        ensure(lhs.coeffs() == rhs.coeffs(), || format!("action composition #{i}"))?;
    }
    for i in 0..RANDOM_INSTANCES {
        let f = random_poly(&mut rng, 3);
        let (g, h) = (random_linear(&mut rng), random_linear(&mut rng));
        let composed = h.clone().map(|p| p.substitute(&g));
        ensure(f.substitute(&h).substitute(&g) == f.substitute(&composed), || {
            format!("substitution composition #{i}")
        })?;
    }
    for i in 0..RANDOM_INSTANCES {
        let n = 1 + i % 3;
        let (a, b) = (random_matrix(&mut rng, n), random_matrix(&mut rng, n));
        let det_ab = a.mul(&b).and_then(|m| m.det()).map_err(|e| e.to_string())?;
        let prod = a.det().map_err(|e| e.to_string())? * b.det().map_err(|e| e.to_string())?;
        ensure(det_ab == prod, || format!("det multiplicativity #{i} ({n}x{n})"))?;
    }
    let weyl = [Poly::a1(), Poly::a2(), Poly::linear(1, 1, 0)];
    for i in 0..RANDOM_INSTANCES {
        let common: Poly = (0..rng.gen_range(0..=3))
            .map(|_| weyl[rng.gen_range(0..3)].clone())
            .product();
        let num = random_poly(&mut rng, 2);
        let mut den = random_poly(&mut rng, 2);
        if den.is_zero() {
            den = Poly::one();
        }
        let r = RatFunc::new(&num * &common, &den * &common).map_err(|e| e.to_string())?;
        let again = r.clone().reduce();
        ensure(
            again.numer() == r.numer() && again.denom() == r.denom() && again == r,
            || format!("reduce idempotence #{i}"),
        )?;
    }
    Ok(format!("5 properties x {RANDOM_INSTANCES} seeded instances"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: u32, name: &str, r: Check| {
        match &r {
            Ok(msg) => println!("criterion {n} [{name}]: PASS ({msg})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n} [{name}]: FAIL ({msg})");
            }
        }
    };

    let start = Instant::now();
    let ws = Workspace::new(6, false);
    let build_time = start.elapsed();
    match &ws {
        Ok(ws) => report(1, "saito certificates", saito_certificates(ws, build_time)),
        Err(e) => report(1, "saito certificates", Err(e.clone())),
    }
    report(2, "matrix displays", matrix_displays());
    let with_ws = |f: &dyn Fn(&Workspace) -> Check| match &ws {
        Ok(ws) => f(ws),
        Err(e) => Err(format!("pipeline: {e}")),
    };
    report(3, "srb characterizations", with_ws(&srb_characterizations));
    report(4, "group actions", with_ws(&group_actions));
    report(5, "cat bases and T_k", with_ws(&cat_bases_consistent));
    report(6, "restriction identity", restriction_identity());
    report(7, "multi-coxeter restriction", with_ws(&multi_coxeter));
    report(8, "property suites", property_suites());

    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
