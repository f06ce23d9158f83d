use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::harmonics::Parity;

/// Element families. `E` is the flat monomial list used in degrees 0 and 1;
/// `Zu` is the provisional family that `Z` orthogonalizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    X,
    Y,
    Z,
    Zu,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::E, Family::X, Family::Y, Family::Z, Family::Zu];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::E => "E",
            Family::X => "X",
            Family::Y => "Y",
            Family::Z => "Z",
            Family::Zu => "Zu",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.as_str() == s)
            .ok_or_else(|| Error::InvalidIndex(format!("unknown family `{s}` (expected E, X, Y, Zu or Z)")))
    }
}

/// Index of a basis element, written `n:family:parity:m`.
///
/// Ordering is the canonical basis order: degree, then family, then `m`,
/// then `+` before `−`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisId {
    pub n: u32,
    pub family: Family,
    pub parity: Parity,
    pub m: u32,
}

impl BasisId {
    pub fn new(n: u32, family: Family, parity: Parity, m: u32) -> Result<Self> {
        let id = BasisId { n, family, parity, m };
        id.validate()?;
        Ok(id)
    }

    pub fn x(n: u32, m: u32, parity: Parity) -> Result<Self> {
        Self::new(n, Family::X, parity, m)
    }

    pub fn y(n: u32, m: u32, parity: Parity) -> Result<Self> {
        Self::new(n, Family::Y, parity, m)
    }

    pub fn zu(n: u32, m: u32, parity: Parity) -> Result<Self> {
        Self::new(n, Family::Zu, parity, m)
    }

    pub fn z(n: u32, m: u32, parity: Parity) -> Result<Self> {
        Self::new(n, Family::Z, parity, m)
    }

    pub fn e(n: u32, index: u32) -> Result<Self> {
        Self::new(n, Family::E, Parity::Plus, index)
    }

    fn validate(&self) -> Result<()> {
        let BasisId { n, family, parity, m } = *self;
        let bad = |why: &str| Err(Error::InvalidIndex(format!("{self}: {why}")));
        if parity == Parity::Minus && m == 0 && family != Family::E {
            return bad("parity - requires m >= 1");
        }
        match family {
            Family::E => {
                if parity != Parity::Plus {
                    return bad("E elements carry parity +");
                }
                match n {
                    0 if m < 3 => Ok(()),
                    1 if m < 9 => Ok(()),
                    0 | 1 => bad("index out of range"),
                    _ => bad("E elements exist only in degrees 0 and 1"),
                }
            }
            Family::X if m > n + 1 => bad("X requires m <= n+1"),
            Family::X => Ok(()),
            _ if n < 2 => bad("Y, Zu and Z require n >= 2"),
            Family::Y if m + 1 > n => bad("Y requires m <= n-1"),
            Family::Zu | Family::Z if m > n => bad("requires m <= n"),
            _ => Ok(()),
        }
    }

    fn sort_key(&self) -> (u32, Family, u32, Parity) {
        (self.n, self.family, self.m, self.parity)
    }
}

impl PartialOrd for BasisId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.n, self.family, self.parity, self.m)
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [n, family, parity, m] = parts.as_slice() else {
            return Err(Error::InvalidIndex(format!("`{s}` is not of the form n:family:parity:m")));
        };
        let num = |t: &str, what: &str| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidIndex(format!("{what} `{t}` in `{s}` is not a non-negative integer")))
        };
        BasisId::new(num(n, "degree")?, family.parse()?, parity.parse()?, num(m, "order")?)
    }
}

impl Serialize for BasisId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The ids of `𝓑ₙ` in canonical order: the monomial list for `n < 2`,
/// otherwise the X block, the Y block and the Z block.
pub fn enumerate_basis(n: u32) -> Vec<BasisId> {
    let mk = |family, parity, m| BasisId { n, family, parity, m };
    match n {
        0 => (0..3).map(|i| mk(Family::E, Parity::Plus, i)).collect(),
        1 => (0..9).map(|i| mk(Family::E, Parity::Plus, i)).collect(),
        _ => {
            let mut ids = Vec::with_capacity(6 * n as usize + 3);
            for (family, top) in [(Family::X, n + 1), (Family::Y, n - 1), (Family::Z, n)] {
                for m in 0..=top {
                    ids.push(mk(family, Parity::Plus, m));
                    if m > 0 {
                        ids.push(mk(family, Parity::Minus, m));
                    }
                }
            }
            ids
        }
    }
}

/// Ids of the provisional family `Z̲` in degree `n ≥ 2`.
pub fn enumerate_provisional(n: u32) -> Vec<BasisId> {
    enumerate_basis(n)
        .into_iter()
        .filter(|id| id.family == Family::Z)
        .map(|id| BasisId { family: Family::Zu, ..id })
        .collect()
}
