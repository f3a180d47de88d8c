//! JSON wire format.
//!
//! A polynomial is a list of `[e1, e2, ez, "num/den"]`, leading term first.
//! A derivation is an object with keys `d_a1`, `d_a2`, `d_z`.

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::derivation::{Derivation, SaitoCertificate, Verdict};
use crate::exactalg::rational::{parse_rational, to_fraction_string};
use crate::exactalg::{ExactAlgError, Monomial, Poly};

pub type WirePoly = Vec<(u32, u32, u32, String)>;

pub fn poly_to_wire(p: &Poly) -> WirePoly {
    p.terms()
        .rev()
        .map(|(m, c)| (m.0[0], m.0[1], m.0[2], to_fraction_string(c)))
        .collect()
}

pub fn poly_from_wire(w: &WirePoly) -> Result<Poly, ExactAlgError> {
    let terms = w
        .iter()
        .map(|(e1, e2, ez, c)| Ok((Monomial::new(*e1, *e2, *ez), parse_rational(c)?)))
        .collect::<Result<Vec<_>, ExactAlgError>>()?;
    Ok(Poly::from_terms(terms))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireDerivation {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<u32>,
    pub d_a1: WirePoly,
    pub d_a2: WirePoly,
    pub d_z: WirePoly,
}

impl WireDerivation {
    pub fn from_derivation(d: &Derivation) -> Self {
        let [c1, c2, cz] = d.coeffs();
        WireDerivation {
            label: d.label().to_string(),
            degree: d.degree(),
            d_a1: poly_to_wire(c1),
            d_a2: poly_to_wire(c2),
            d_z: poly_to_wire(cz),
        }
    }

    pub fn to_derivation(&self) -> Result<Derivation, ExactAlgError> {
        Ok(Derivation::new(
            poly_from_wire(&self.d_a1)?,
            poly_from_wire(&self.d_a2)?,
            poly_from_wire(&self.d_z)?,
        )
        .with_label(self.label.clone()))
    }
}

/// A full basis of `D(arrangement)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireBasis {
    pub arrangement: String,
    pub exponents: [u32; 3],
    pub basis: Vec<WireDerivation>,
}

impl WireBasis {
    pub fn new(arr: &Arrangement, basis: &[Derivation]) -> Self {
        WireBasis {
            arrangement: arr.id(),
            exponents: arr.expected_exponents,
            basis: basis.iter().map(WireDerivation::from_derivation).collect(),
        }
    }

    pub fn derivations(&self) -> Result<Vec<Derivation>, ExactAlgError> {
        self.basis.iter().map(WireDerivation::to_derivation).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireBundle {
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shi: Option<WireBasis>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub srb_plus: Option<Vec<WireDerivation>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub srb_minus: Option<Vec<WireDerivation>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cat: Option<WireBasis>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta: Option<WireBasis>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireQuotient {
    pub form: WirePoly,
    pub quotient: Option<WirePoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireCertificate {
    pub arrangement: String,
    pub labels: Vec<String>,
    pub degrees: Vec<Option<u32>>,
    pub expected_exponents: [u32; 3],
    pub exponents_match: bool,
    pub determinant: WirePoly,
    pub c: String,
    pub quotients: Vec<WireQuotient>,
    pub verdict: Verdict,
}

impl WireCertificate {
    pub fn new(cert: &SaitoCertificate, arr: &Arrangement) -> Self {
        WireCertificate {
            arrangement: cert.arrangement.clone(),
            labels: cert.labels.clone(),
            degrees: cert.degrees.clone(),
            expected_exponents: cert.expected_exponents,
            exponents_match: cert.exponents_match(),
            determinant: poly_to_wire(&cert.determinant),
            c: to_fraction_string(&cert.quotient_constant),
            quotients: cert
                .hyperplane_quotients(arr)
                .iter()
                .map(|(f, q)| WireQuotient {
                    form: poly_to_wire(f),
                    quotient: q.as_ref().map(poly_to_wire),
                })
                .collect(),
            verdict: cert.verdict,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn poly_layout() {
        let p = Poly::a1().pow(2).scale(&rat(-1, 6)) + Poly::z();
        let w = poly_to_wire(&p);
        assert_eq!(w[0], (2, 0, 0, "-1/6".to_string()));
        assert_eq!(w[1], (0, 0, 1, "1/1".to_string()));
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"[[2,0,0,"-1/6"],[0,0,1,"1/1"]]"#);
        assert_eq!(poly_from_wire(&w).unwrap(), p);
        assert_eq!(poly_to_wire(&Poly::zero()), WirePoly::new());
    }

    #[test]
    fn derivation_round_trip() {
        let d = Derivation::new(Poly::a1(), Poly::linear(2, 0, -3), Poly::zero()).with_label("x");
        let w = WireDerivation::from_derivation(&d);
        let s = serde_json::to_string(&w).unwrap();
        let back: WireDerivation = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_derivation().unwrap(), d);
    }

    #[test]
    fn rejects_bad_rational() {
        let w: WirePoly = vec![(1, 0, 0, "1/0".to_string())];
        assert!(poly_from_wire(&w).is_err());
    }
}
