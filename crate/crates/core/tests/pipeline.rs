use shicat::arrangement::Arrangement;
use shicat::construction::{build_all, cartan_inverse, matrix_t};
use shicat::derivation::{saito_check, transform, Derivation, GroupElement};
use shicat::exactalg::{int, rat, Poly};
use shicat::invariant_theory::{r_matrices, verify_restriction_identity, PrimitiveDerivation};

#[test]
fn theta2_expands_through_k_euler() {
    let b = &build_all(1).unwrap()[1];
    let (theta1, phi2) = (&b.cat_basis[0], &b.srb_plus[1]);
    let expect = theta1
        .mul_poly(&Poly::linear(2, 4, 3))
        .sub(&phi2.mul_poly(&(Poly::linear(1, 1, 1) * Poly::linear(0, 1, 1)).scale(&int(6))));
    assert_eq!(b.cat_basis[1].coeffs(), expect.coeffs());
}

#[test]
fn minus_times_cartan_inverse_returns_plus() {
    for b in build_all(3).unwrap() {
        let back = transform(&b.srb_minus, &cartan_inverse()).unwrap();
        for (x, y) in back.iter().zip(&b.srb_plus) {
            assert_eq!(x.coeffs(), y.coeffs());
        }
    }
}

#[test]
fn eta_at_level_zero() {
    let b = &build_all(0).unwrap()[0];
    assert_eq!(b.eta_basis[0].coeffs(), b.cat_basis[0].coeffs());
    assert_eq!(b.eta_basis[1].coeffs(), b.cat_basis[1].scale(&rat(1, 2)).coeffs());
    let scaled = transform(&b.cat_basis, &matrix_t(0)).unwrap();
    assert_eq!(scaled[1].coeffs(), b.eta_basis[1].coeffs());
}

#[test]
fn shi_basis_is_not_a_cat_basis() {
    // Shi^k ⊂ Cat^k, so D(Cat^k) ⊂ D(Shi^k) but not conversely
    let b = &build_all(1).unwrap()[1];
    let cat = Arrangement::cat(1);
    assert!(b.srb_plus.iter().any(|phi| phi.is_logarithmic(&cat).is_err()));
    for theta in &b.cat_basis {
        assert!(theta.is_logarithmic(&Arrangement::shi(1)).is_ok());
    }
}

#[test]
fn certificates_at_level_three() {
    let b = &build_all(3).unwrap()[3];
    let shi = saito_check(&b.shi_basis(), &Arrangement::shi(3)).unwrap();
    assert!(shi.verdict.passed());
    assert_eq!(shi.degrees, [Some(1), Some(9), Some(9)]);
    let eta = saito_check(&b.eta_full_basis(), &Arrangement::cat(3)).unwrap();
    assert!(eta.verdict.passed());
    let g = GroupElement::tau_s0();
    assert_eq!(g.act_on_derivation(&b.srb_plus[0]).coeffs(), b.srb_plus[1].neg().coeffs());
}

#[test]
fn restriction_identity_from_bundles() {
    let bundles = build_all(3).unwrap();
    let d = PrimitiveDerivation::new().unwrap();
    let rs = r_matrices(&d, 3).unwrap();
    for b in &bundles {
        let rep = verify_restriction_identity(b.k, &b.srb_plus, &rs[b.k as usize]).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
    // restriction of φ is the z = 0 specialization
    let phi = &bundles[2].srb_plus[0];
    let r = phi.restrict_z0().unwrap();
    assert!(r.coeffs().iter().all(|c| !c.involves(shicat::exactalg::Var::Z)));
    assert!(Derivation::euler().restrict_z0().is_err());
}
