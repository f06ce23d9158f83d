use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three real coordinates `x0, x1, x2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X0,
    X1,
    X2,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X0, Axis::X1, Axis::X2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Axis> {
        Self::ALL.get(index).copied()
    }
}

/// Exponent triple of `x0^a x1^b x2^c`.
///
/// Ordering is lexicographic on `(a, b, c)`, which is the canonical term order
/// of the JSON polynomial format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(axis: Axis) -> Self {
        let mut exps = [0; 3];
        exps[axis.index()] = 1;
        Monomial(exps)
    }

    pub fn exps(&self) -> [u32; 3] {
        self.0
    }

    pub fn exp(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// Returns the exponent of `axis` and the monomial with that exponent lowered by one,
    /// or `None` when the variable does not occur.
    pub fn lower(&self, axis: Axis) -> Option<(u32, Monomial)> {
        let e = self.0[axis.index()];
        if e == 0 {
            return None;
        }
        let mut exps = self.0;
        exps[axis.index()] -= 1;
        Some((e, Monomial(exps)))
    }

    /// All monomials of total degree `n`, in ascending lexicographic order.
    pub fn of_degree(n: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
        for a in 0..=n {
            for b in 0..=(n - a) {
                out.push(Monomial([a, b, n - a - b]));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Monomial {
    /// Table style: `x_0^2 x_1`; the constant monomial renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x_{i}")?;
            } else {
                write!(f, "x_{i}^{e}")?;
            }
        }
        Ok(())
    }
}
