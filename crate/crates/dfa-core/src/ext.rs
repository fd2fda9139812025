use std::fmt;
use std::ops::Add;

/// A natural number extended with infinity.
///
/// Used for in-levels, distances, longest-word bounds and `values`.
/// The derived order places every finite value below `Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    Fin(usize),
    Inf,
}

impl Ext {
    pub const ZERO: Ext = Ext::Fin(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::Inf => None,
        }
    }

    /// Finite value or panic; for call sites that have already excluded `Inf`.
    pub fn unwrap(self) -> usize {
        self.finite().expect("Ext::unwrap on Inf")
    }
}

impl From<usize> for Ext {
    fn from(v: usize) -> Self {
        Ext::Fin(v)
    }
}

impl Add for Ext {
    type Output = Ext;

    fn add(self, rhs: Ext) -> Ext {
        match (self, rhs) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            _ => Ext::Inf,
        }
    }
}

impl Add<usize> for Ext {
    type Output = Ext;

    fn add(self, rhs: usize) -> Ext {
        self + Ext::Fin(rhs)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::Inf => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_arithmetic() {
        assert!(Ext::Fin(usize::MAX - 1) < Ext::Inf);
        assert_eq!(Ext::Fin(2) + 3, Ext::Fin(5));
        assert_eq!(Ext::Inf + 1, Ext::Inf);
        assert_eq!(Ext::Fin(1).max(Ext::Inf), Ext::Inf);
        assert_eq!(Ext::Inf.to_string(), "inf");
    }
}
