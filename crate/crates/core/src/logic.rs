//! Truth values, the four truth orderings and the connectives over them.
//!
//! ```plain
//!   K        P        L          B
//!   t        t        t          t
//!   |        |        |         / \
//!   u        i        i        u   i
//!   |        |        |         \ /
//!   f        f        u          f
//!                     |
//!                     f
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// One of the four truth values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TruthValue {
    #[serde(rename = "f")]
    False,
    #[serde(rename = "u")]
    Unknown,
    #[serde(rename = "i")]
    Inconsistent,
    #[serde(rename = "t")]
    True,
}

use TruthValue::{False as F, Inconsistent as I, True as T, Unknown as U};

impl TruthValue {
    pub const ALL: [TruthValue; 4] = [F, U, I, T];

    fn index(self) -> usize {
        match self {
            F => 0,
            U => 1,
            I => 2,
            T => 3,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            F => 'f',
            U => 'u',
            I => 'i',
            T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'f' => Some(F),
            'u' => Some(U),
            'i' => Some(I),
            't' => Some(T),
            _ => None,
        }
    }

    /// Strong (classical) negation `¬`.
    pub fn strong_neg(self) -> Self {
        STRONG_NEG[self.index()]
    }

    /// Default negation `⊘`: "is not true".
    pub fn default_neg(self) -> Self {
        DEFAULT_NEG[self.index()]
    }

    /// The four-valued implication. Only ever yields `f` or `t`.
    pub fn implies(self, consequent: Self) -> Self {
        IMPLIES[self.index()][consequent.index()]
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(Self::from_symbol), chars.next()) {
            (Some(v), None) => Ok(v),
            _ => Err(Error::InvalidTruthValue(s.to_string())),
        }
    }
}

// Rows indexed f, u, i, t.
const STRONG_NEG: [TruthValue; 4] = [T, U, I, F];
const DEFAULT_NEG: [TruthValue; 4] = [T, T, I, F];
const IMPLIES: [[TruthValue; 4]; 4] = [
    // consequent: f  u  i  t
    [T, T, T, T], // f
    [T, T, T, T], // u
    [F, F, T, F], // i
    [F, F, T, T], // t
];

/// A set of truth values, used for the argument of inspection operators
/// and for carriers and designated sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthSet(u8);

impl TruthSet {
    pub const EMPTY: TruthSet = TruthSet(0);
    pub const FULL: TruthSet = TruthSet(0b1111);

    pub fn of(values: &[TruthValue]) -> Self {
        values.iter().fold(Self::EMPTY, |s, &v| s.with(v))
    }

    pub fn with(self, v: TruthValue) -> Self {
        TruthSet(self.0 | 1 << v.index())
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: TruthSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in the canonical `f, u, i, t` order.
    pub fn iter(self) -> impl Iterator<Item = TruthValue> {
        TruthValue::ALL
            .into_iter()
            .filter(move |&v| self.contains(v))
    }
}

impl fmt::Display for TruthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, v) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// The truth orderings: Kleene, Priest, linear and Belnap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ordering {
    K,
    P,
    L,
    B,
}

impl Ordering {
    pub fn carrier(self) -> TruthSet {
        match self {
            Ordering::K => TruthSet::of(&[F, U, T]),
            Ordering::P => TruthSet::of(&[F, I, T]),
            Ordering::L | Ordering::B => TruthSet::FULL,
        }
    }

    /// `a ≤ b`. Values outside the carrier are never related.
    pub fn leq(self, a: TruthValue, b: TruthValue) -> bool {
        let carrier = self.carrier();
        if !carrier.contains(a) || !carrier.contains(b) {
            return false;
        }
        if a == b || a == F || b == T {
            return true;
        }
        match self {
            // the only remaining pair is u, i
            Ordering::L => a == U && b == I,
            Ordering::K | Ordering::P | Ordering::B => false,
        }
    }

    fn check(self, v: TruthValue) -> Result<(), Error> {
        if self.carrier().contains(v) {
            Ok(())
        } else {
            Err(Error::OutsideCarrier {
                value: v,
                ordering: self,
            })
        }
    }

    /// Greatest lower bound of `{a, b}`.
    pub fn glb(self, a: TruthValue, b: TruthValue) -> Result<TruthValue, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(if self.leq(a, b) {
            a
        } else if self.leq(b, a) {
            b
        } else {
            // incomparable u, i under B
            F
        })
    }

    /// Least upper bound of `{a, b}`.
    pub fn lub(self, a: TruthValue, b: TruthValue) -> Result<TruthValue, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(if self.leq(a, b) {
            b
        } else if self.leq(b, a) {
            a
        } else {
            T
        })
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Ordering::K => "K",
            Ordering::P => "P",
            Ordering::L => "L",
            Ordering::B => "B",
        };
        f.write_str(name)
    }
}

/// Conjunction as the greatest lower bound under `ord`.
pub fn conj(a: TruthValue, b: TruthValue, ord: Ordering) -> Result<TruthValue, Error> {
    ord.glb(a, b)
}

/// Disjunction as the least upper bound under `ord`.
pub fn disj(a: TruthValue, b: TruthValue, ord: Ordering) -> Result<TruthValue, Error> {
    ord.lub(a, b)
}

/// A named logic: a truth ordering plus its designated values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Logic {
    K3,
    P3,
    L4,
    B4,
}

impl Logic {
    pub fn name(self) -> &'static str {
        match self {
            Logic::K3 => "K3+",
            Logic::P3 => "P3+",
            Logic::L4 => "L4+",
            Logic::B4 => "B4+",
        }
    }

    pub fn ordering(self) -> Ordering {
        match self {
            Logic::K3 => Ordering::K,
            Logic::P3 => Ordering::P,
            Logic::L4 => Ordering::L,
            Logic::B4 => Ordering::B,
        }
    }

    pub fn carrier(self) -> TruthSet {
        self.ordering().carrier()
    }

    pub fn designated(self) -> TruthSet {
        match self {
            Logic::K3 => TruthSet::of(&[T]),
            Logic::P3 | Logic::L4 | Logic::B4 => TruthSet::of(&[I, T]),
        }
    }

    pub fn is_designated(self, v: TruthValue) -> bool {
        self.designated().contains(v)
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
