use std::cmp::Ordering;
use std::fmt;

/// One of the three coordinates of the coned space: the simple roots `a1`, `a2`
/// and the homogenizing coordinate `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A1,
    A2,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A1, Var::A2, Var::Z];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Var::A1 => 0,
            Var::A2 => 1,
            Var::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Var> {
        Var::ALL.get(i).copied()
    }

    pub fn ascii_name(self) -> &'static str {
        match self {
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::Z => "z",
        }
    }

    pub fn alpha_name(self) -> &'static str {
        match self {
            Var::A1 => "α1",
            Var::A2 => "α2",
            Var::Z => "z",
        }
    }
}

/// Exponent vector `a1^e1 · a2^e2 · z^ez`.
///
/// Ordered graded-lexicographically with `a1 > a2 > z`, so the largest
/// monomial of a polynomial (its leading monomial) is the last key of a
/// `BTreeMap<Monomial, _>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(e1: u32, e2: u32, ez: u32) -> Self {
        Monomial([e1, e2, ez])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if (0..3).all(|i| self.0[i] >= other.0[i]) {
            Some(Monomial([
                self.0[0] - other.0[0],
                self.0[1] - other.0[1],
                self.0[2] - other.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self, false)
    }
}

pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    m: &Monomial,
    alpha: bool,
) -> fmt::Result {
    if m.is_one() {
        return write!(f, "1");
    }
    let mut first = true;
    for v in Var::ALL {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if !first && !alpha {
            write!(f, "*")?;
        }
        first = false;
        let name = if alpha { v.alpha_name() } else { v.ascii_name() };
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a1 = Monomial::var(Var::A1);
        let a2 = Monomial::var(Var::A2);
        let z = Monomial::var(Var::Z);
        assert!(a1 > a2 && a2 > z && z > Monomial::ONE);
        // degree dominates
        assert!(Monomial::new(0, 0, 2) > a1);
        assert!(Monomial::new(1, 1, 0) > Monomial::new(1, 0, 1));
        assert!(Monomial::new(2, 0, 0) > Monomial::new(1, 1, 0));
    }

    #[test]
    fn divide() {
        let m = Monomial::new(2, 1, 0);
        assert_eq!(m.div(&Monomial::new(1, 1, 0)), Some(Monomial::new(1, 0, 0)));
        assert_eq!(m.div(&Monomial::new(0, 0, 1)), None);
    }
}
