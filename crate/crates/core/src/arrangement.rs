//! Type-A₂ root data and the coned extended Shi / Catalan arrangements.
//!
//! The affine hyperplane `{α = i}` cones to the linear form `α − i·z`, and the
//! hyperplane at infinity `z` is always included.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derivation::GroupElement;
use crate::exactalg::{int, Monomial, Poly, PolyMatrix, Rational, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("hyperplane form {0} is not a nonzero homogeneous linear form")]
    NotLinear(String),
    #[error("hyperplanes {0} and {1} are proportional")]
    Proportional(String, String),
    #[error("exponents {exponents:?} do not sum to the hyperplane count {count}")]
    ExponentSum { exponents: [u32; 3], count: usize },
}

/// Positive roots, simple roots, the inner-product matrix `A` and the
/// Coxeter number of A₂.
#[derive(Debug, Clone)]
pub struct RootSystemA2 {
    pub positive_roots: [Poly; 3],
    pub simple_roots: [Poly; 2],
    pub cartan: PolyMatrix,
    pub coxeter_number: u32,
}

impl RootSystemA2 {
    pub fn new() -> Self {
        RootSystemA2 {
            positive_roots: positive_roots(),
            simple_roots: [Poly::a1(), Poly::a2()],
            cartan: PolyMatrix::constant(vec![vec![int(2), int(-1)], vec![int(-1), int(2)]]),
            coxeter_number: 3,
        }
    }

    /// Weyl defining polynomial `a1·a2·(a1 + a2)`.
    pub fn defining_polynomial(&self) -> Poly {
        self.positive_roots.iter().cloned().product()
    }
}

impl Default for RootSystemA2 {
    fn default() -> Self {
        Self::new()
    }
}

/// `a1`, `a2`, `a1 + a2`.
pub fn positive_roots() -> [Poly; 3] {
    [Poly::a1(), Poly::a2(), Poly::linear(1, 1, 0)]
}

/// A linear form normalized so its first nonzero coefficient, in the order
/// `a1, a2, z`, is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    form: Poly,
}

impl Hyperplane {
    pub fn new(form: Poly) -> Result<Self, ArrangementError> {
        if form.is_zero() || form.homogeneous_degree() != Some(1) {
            return Err(ArrangementError::NotLinear(form.to_string()));
        }
        let first = Var::ALL
            .iter()
            .map(|v| form.coefficient(&Monomial::var(*v)))
            .find(|c| !c.is_zero())
            .expect("nonzero linear form");
        let form = if first.is_negative() { -form } else { form };
        Ok(Hyperplane { form })
    }

    pub fn form(&self) -> &Poly {
        &self.form
    }

    /// Coefficients on `(a1, a2, z)`.
    pub fn coefficients(&self) -> [Rational; 3] {
        Var::ALL.map(|v| self.form.coefficient(&Monomial::var(v)))
    }

    fn is_proportional_to(&self, other: &Hyperplane) -> bool {
        let (x, y) = (self.coefficients(), other.coefficients());
        (0..3).all(|i| (0..3).all(|j| &x[i] * &y[j] == &x[j] * &y[i]))
    }

    fn key(&self) -> Vec<(Monomial, Rational)> {
        // Scale so the first nonzero coefficient is 1; proportional forms share a key.
        let lead = self
            .coefficients()
            .into_iter()
            .find(|c| !c.is_zero())
            .expect("nonzero form");
        self.form
            .scale(&(Rational::from_integer(1.into()) / lead))
            .terms()
            .map(|(m, c)| (*m, c.clone()))
            .collect()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Shi,
    Cat,
    WeylCone,
    Custom,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub family: Family,
    pub k: u32,
    hyperplanes: Vec<Hyperplane>,
    pub expected_exponents: [u32; 3],
}

impl Arrangement {
    /// An arbitrary central arrangement; rejects proportional forms and
    /// exponent triples that cannot satisfy Saito's criterion by degree.
    pub fn custom(forms: Vec<Poly>, expected_exponents: [u32; 3]) -> Result<Self, ArrangementError> {
        let hyperplanes = forms
            .into_iter()
            .map(Hyperplane::new)
            .collect::<Result<Vec<_>, _>>()?;
        for (i, h) in hyperplanes.iter().enumerate() {
            if let Some(g) = hyperplanes[..i].iter().find(|g| g.is_proportional_to(h)) {
                return Err(ArrangementError::Proportional(g.to_string(), h.to_string()));
            }
        }
        let sum: u32 = expected_exponents.iter().sum();
        if sum as usize != hyperplanes.len() {
            return Err(ArrangementError::ExponentSum {
                exponents: expected_exponents,
                count: hyperplanes.len(),
            });
        }
        Ok(Arrangement {
            family: Family::Custom,
            k: 0,
            hyperplanes,
            expected_exponents,
        })
    }

    fn from_levels(family: Family, k: u32, levels: impl Iterator<Item = i64>, exps: [u32; 3]) -> Self {
        let mut hyperplanes = Vec::new();
        for i in levels {
            for root in positive_roots() {
                let form = &root - &Poly::z().scale(&int(i));
                hyperplanes.push(Hyperplane::new(form).expect("root translate is linear"));
            }
        }
        hyperplanes.push(Hyperplane::new(Poly::z()).expect("z is linear"));
        Arrangement {
            family,
            k,
            hyperplanes,
            expected_exponents: exps,
        }
    }

    /// Cone over `{H_{α,i} | α ∈ Φ⁺, −k+1 ≤ i ≤ k}`, exponents `(1, 3k, 3k)`.
    pub fn shi(k: u32) -> Self {
        let k_ = k as i64;
        Arrangement::from_levels(Family::Shi, k, (1 - k_)..=k_, [1, 3 * k, 3 * k])
    }

    /// Cone over `{H_{α,i} | α ∈ Φ⁺, −k ≤ i ≤ k}`, exponents `(1, 3k+1, 3k+2)`.
    pub fn cat(k: u32) -> Self {
        let k_ = k as i64;
        Arrangement::from_levels(Family::Cat, k, -k_..=k_, [1, 3 * k + 1, 3 * k + 2])
    }

    /// The three Weyl hyperplanes in `(a1, a2, z)`-space, without `z`.
    /// `∂z` is a degree-0 basis element, hence exponents `(0, 1, 2)`.
    pub fn weyl_cone() -> Self {
        let hyperplanes = positive_roots()
            .into_iter()
            .map(|r| Hyperplane::new(r).expect("root is linear"))
            .collect();
        Arrangement {
            family: Family::WeylCone,
            k: 0,
            hyperplanes,
            expected_exponents: [0, 1, 2],
        }
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn forms(&self) -> impl Iterator<Item = &Poly> + '_ {
        self.hyperplanes.iter().map(Hyperplane::form)
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// `Q(A) = ∏ α_H`.
    pub fn defining_polynomial(&self) -> Poly {
        self.forms().cloned().product()
    }

    pub fn id(&self) -> String {
        match self.family {
            Family::Shi => format!("Shi^{}", self.k),
            Family::Cat => format!("Cat^{}", self.k),
            Family::WeylCone => "Weyl".to_string(),
            Family::Custom => format!("Custom[{}]", self.len()),
        }
    }

    pub fn contains_form(&self, form: &Poly) -> bool {
        match Hyperplane::new(form.clone()) {
            Ok(h) => self.hyperplanes.iter().any(|g| g.is_proportional_to(&h)),
            Err(_) => false,
        }
    }

    fn key_set(&self) -> BTreeSet<Vec<(Monomial, Rational)>> {
        self.hyperplanes.iter().map(Hyperplane::key).collect()
    }

    /// Whether `g` permutes the hyperplanes of this arrangement.
    pub fn is_preserved_by(&self, g: &GroupElement) -> bool {
        let image: BTreeSet<_> = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(g.act_on_poly(h.form())).map(|h| h.key()))
            .collect::<Result<_, _>>()
            .unwrap_or_default();
        image == self.key_set()
    }
}

/// Multiplicity on the three positive roots `a1, a2, a1 + a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicityMap {
    pub m: [u32; 3],
}

impl MultiplicityMap {
    pub fn constant(m: u32) -> Self {
        MultiplicityMap { m: [m; 3] }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Poly, u32)> + '_ {
        positive_roots().into_iter().zip(self.m)
    }
}

/// Target of the Ziegler restriction of `D₀(Shi^k)`: the Weyl arrangement
/// with constant multiplicity `2k`.
pub fn weyl_multiarrangement(k: u32) -> (RootSystemA2, MultiplicityMap) {
    (RootSystemA2::new(), MultiplicityMap::constant(2 * k))
}
