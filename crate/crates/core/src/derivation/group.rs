use std::fmt;

use num_traits::{One, Zero};

use super::Derivation;
use crate::exactalg::{Monomial, Poly, Rational, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupName {
    Identity,
    S1,
    S2,
    S0,
    Tau,
    Composite,
}

/// A linear automorphism of the coordinate space, given by the images of
/// `a1, a2, z`. It acts on polynomials by simultaneous substitution.
#[derive(Clone, PartialEq)]
pub struct GroupElement {
    name: GroupName,
    label: String,
    images: [Poly; 3],
}

type Mat3 = [[Rational; 3]; 3];

impl GroupElement {
    /// Returns `None` unless every image is a linear form and together they
    /// are invertible.
    pub fn from_images(name: GroupName, label: impl Into<String>, images: [Poly; 3]) -> Option<Self> {
        let linear = images
            .iter()
            .all(|p| p.is_zero() || p.homogeneous_degree() == Some(1));
        let g = GroupElement {
            name,
            label: label.into(),
            images,
        };
        (linear && !det3(&g.matrix()).is_zero()).then_some(g)
    }

    fn generator(name: GroupName, label: &str, images: [Poly; 3]) -> Self {
        GroupElement::from_images(name, label, images).expect("generator is invertible")
    }

    pub fn identity() -> Self {
        Self::generator(GroupName::Identity, "1", [Poly::a1(), Poly::a2(), Poly::z()])
    }

    /// Reflection in `a1`: `a1 ↦ −a1`, `a2 ↦ a1 + a2`.
    pub fn s1() -> Self {
        Self::generator(GroupName::S1, "s1", [-Poly::a1(), Poly::linear(1, 1, 0), Poly::z()])
    }

    /// Reflection in `a2`: `a1 ↦ a1 + a2`, `a2 ↦ −a2`.
    pub fn s2() -> Self {
        Self::generator(GroupName::S2, "s2", [Poly::linear(1, 1, 0), -Poly::a2(), Poly::z()])
    }

    /// Reflection in the highest root `a1 + a2`: `a1 ↦ −a2`, `a2 ↦ −a1`.
    pub fn s0() -> Self {
        Self::generator(GroupName::S0, "s0", [-Poly::a2(), -Poly::a1(), Poly::z()])
    }

    /// Reflection in `z`.
    pub fn tau() -> Self {
        Self::generator(GroupName::Tau, "tau", [Poly::a1(), Poly::a2(), -Poly::z()])
    }

    pub fn tau_s0() -> Self {
        Self::tau().compose(&Self::s0())
    }

    pub fn name(&self) -> GroupName {
        self.name
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn images(&self) -> &[Poly; 3] {
        &self.images
    }

    /// Row `j` holds the coefficients of the image of coordinate `j`.
    fn matrix(&self) -> Mat3 {
        self.images
            .clone()
            .map(|p| Var::ALL.map(|v| p.coefficient(&Monomial::var(v))))
    }

    /// The product `self · other`, acting as `f ↦ self(other(f))`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let images = other.images.clone().map(|p| p.substitute(&self.images));
        let label = format!("{}{}", self.label, other.label);
        GroupElement {
            name: GroupName::Composite,
            label,
            images,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = inverse3(&self.matrix());
        let images = inv.map(|row| {
            Var::ALL
                .iter()
                .zip(row)
                .map(|(v, c)| Poly::var(*v).scale(&c))
                .sum::<Poly>()
        });
        GroupElement {
            name: self.name,
            label: format!("({})^-1", self.label),
            images,
        }
    }

    pub fn act_on_poly(&self, f: &Poly) -> Poly {
        f.substitute(&self.images)
    }

    /// `(gθ)(f) = g(θ(g⁻¹ f))`, evaluated on the three coordinates.
    pub fn act_on_derivation(&self, theta: &Derivation) -> Derivation {
        let inv = self.inverse();
        let coeffs = Var::ALL.map(|v| {
            let pulled = inv.act_on_poly(&Poly::var(v));
            self.act_on_poly(&theta.apply(&pulled))
        });
        Derivation::from_coeffs(coeffs).with_label(format!("{}·{}", self.label, theta.label()))
    }

    /// Whether the two elements act identically.
    pub fn same_action(&self, other: &GroupElement) -> bool {
        self.images == other.images
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: a1->{}, a2->{}, z->{}",
            self.label, self.images[0], self.images[1], self.images[2]
        )
    }
}

/// Free-function spelling of [`GroupElement::act_on_derivation`].
pub fn weyl_act(g: &GroupElement, theta: &Derivation) -> Derivation {
    g.act_on_derivation(theta)
}

fn det3(m: &Mat3) -> Rational {
    let minor = |a: usize, b: usize| &m[1][a] * &m[2][b] - &m[1][b] * &m[2][a];
    &m[0][0] * minor(1, 2) - &m[0][1] * minor(0, 2) + &m[0][2] * minor(0, 1)
}

fn inverse3(m: &Mat3) -> Mat3 {
    let det = det3(m);
    let cof = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let v = &m[r[0]][c[0]] * &m[r[1]][c[1]] - &m[r[0]][c[1]] * &m[r[1]][c[0]];
        if (i + j).is_multiple_of(2) {
            v
        } else {
            -v
        }
    };
    let scale = Rational::one() / det;
    // inverse = adjugate / det, adjugate = cofactor transpose
    std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) * &scale))
}
