//! Exact points of the circle `R/Z` and the tripling map.
//!
//! An [`Angle`] is a reduced fraction `p/q` with `0 <= p < q`. Values whose
//! denominator fits in a `u64` are kept inline and handled with `u128`
//! arithmetic; anything larger is promoted to [`BigUint`]. The representation
//! is canonical, so derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A rational point of the circle, stored reduced and normalized to `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Angle(Repr);

// Invariant: `Small` iff the reduced denominator fits in a u64.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: u64, den: u64 },
    Big { num: BigUint, den: BigUint },
}

/// Preperiod and period of an eventually periodic point under tripling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub preperiod: usize,
    pub period: usize,
}

impl OrbitInfo {
    pub fn is_periodic(&self) -> bool {
        self.preperiod == 0
    }
}

impl Angle {
    pub fn zero() -> Angle {
        Angle(Repr::Small { num: 0, den: 1 })
    }

    pub fn half() -> Angle {
        Angle(Repr::Small { num: 1, den: 2 })
    }

    /// `p/q mod 1`. Rejects `q <= 0`.
    pub fn new(p: i64, q: i64) -> Result<Angle> {
        if q <= 0 {
            return Err(Error::NonPositiveDenominator(q.to_string()));
        }
        let num = p.rem_euclid(q) as u128;
        Ok(Angle::from_u128(num, q as u128))
    }

    /// Arbitrary-precision variant of [`Angle::new`].
    pub fn from_bigint(p: &BigInt, q: &BigInt) -> Result<Angle> {
        if q.sign() != Sign::Plus {
            return Err(Error::NonPositiveDenominator(q.to_string()));
        }
        let num = p.mod_floor(q);
        Ok(Angle::from_big(
            num.to_biguint().expect("mod_floor by a positive modulus is non-negative"),
            q.to_biguint().expect("positive"),
        ))
    }

    /// Reduces `num/den` with `0 <= num < den`.
    fn from_u128(num: u128, den: u128) -> Angle {
        debug_assert!(num < den);
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        match (u64::try_from(num), u64::try_from(den)) {
            (Ok(num), Ok(den)) => Angle(Repr::Small { num, den }),
            _ => Angle(Repr::Big {
                num: BigUint::from(num),
                den: BigUint::from(den),
            }),
        }
    }

    fn from_big(num: BigUint, den: BigUint) -> Angle {
        debug_assert!(num < den);
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num / &g, den / &g) };
        match (num.to_u64(), den.to_u64()) {
            (Some(num), Some(den)) => Angle(Repr::Small { num, den }),
            _ => Angle(Repr::Big { num, den }),
        }
    }

    fn big_parts(&self) -> (BigUint, BigUint) {
        match &self.0 {
            Repr::Small { num, den } => (BigUint::from(*num), BigUint::from(*den)),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn numer(&self) -> BigUint {
        self.big_parts().0
    }

    pub fn denom(&self) -> BigUint {
        self.big_parts().1
    }

    /// The denominator as a `u64`, when it fits.
    pub fn denom_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small { den, .. } => Some(*den),
            Repr::Big { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn to_ratio(&self) -> BigRational {
        let (num, den) = self.big_parts();
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big { .. } => self.to_ratio().to_f64().unwrap_or(0.0),
        }
    }

    /// `self + other mod 1`.
    pub fn add(&self, other: &Angle) -> Angle {
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) =
            (&self.0, &other.0)
        {
            let (n1, d1, n2, d2) = (*n1 as u128, *d1 as u128, *n2 as u128, *d2 as u128);
            if d1 == d2 {
                return Angle::from_u128((n1 + n2) % d1, d1);
            }
            let den = d1 * d2;
            if let Some(num) = (n1 * d2).checked_add(n2 * d1) {
                return Angle::from_u128(num % den, den);
            }
        }
        let (n1, d1) = self.big_parts();
        let (n2, d2) = other.big_parts();
        let den = &d1 * &d2;
        Angle::from_big((n1 * &d2 + n2 * &d1) % &den, den)
    }

    /// `-self mod 1`.
    pub fn neg(&self) -> Angle {
        match &self.0 {
            Repr::Small { num: 0, .. } => self.clone(),
            Repr::Small { num, den } => Angle(Repr::Small { num: den - num, den: *den }),
            Repr::Big { num, den } => Angle(Repr::Big { num: den - num, den: den.clone() }),
        }
    }

    /// `self - other mod 1`.
    pub fn sub(&self, other: &Angle) -> Angle {
        self.add(&other.neg())
    }

    /// Length of the positively oriented arc from `self` to `end`, in `[0, 1)`.
    pub fn arc_to(&self, end: &Angle) -> Angle {
        end.sub(self)
    }

    /// The tripling map `x -> 3x mod 1`.
    pub fn triple(&self) -> Angle {
        match &self.0 {
            Repr::Small { num, den } => {
                let (num, den) = (*num as u128, *den as u128);
                if den % 3 == 0 {
                    Angle::from_u128(num % (den / 3), den / 3)
                } else {
                    Angle::from_u128(3 * num % den, den)
                }
            }
            Repr::Big { num, den } => {
                let three = BigUint::from(3u32);
                if (den % &three).is_zero() {
                    let d = den / &three;
                    Angle::from_big(num % &d, d)
                } else {
                    Angle::from_big(num * three % den, den.clone())
                }
            }
        }
    }

    /// `n`-fold iterate of the tripling map.
    pub fn triple_n(&self, n: usize) -> Angle {
        let mut x = self.clone();
        for _ in 0..n {
            x = x.triple();
        }
        x
    }

    /// Rotation by one half.
    pub fn antipode(&self) -> Angle {
        self.add(&Angle::half())
    }

    /// The three solutions of `3y = self`, in increasing order.
    pub fn preimages(&self) -> [Angle; 3] {
        let third = Angle::from_u128(1, 3);
        let (num, den) = self.big_parts();
        let first = Angle::from_big(num, den * BigUint::from(3u32));
        let second = first.add(&third);
        let last = second.add(&third);
        [first, second, last]
    }

    /// Whether `self` lies strictly inside the positively oriented arc from
    /// `a` to `b`. The arc from a point to itself is empty.
    pub fn in_open_arc(&self, a: &Angle, b: &Angle) -> bool {
        match a.cmp(b) {
            Ordering::Less => a < self && self < b,
            Ordering::Greater => self > a || self < b,
            Ordering::Equal => false,
        }
    }

    /// Whether `self` lies in the closed positively oriented arc `[a, b]`.
    pub fn in_closed_arc(&self, a: &Angle, b: &Angle) -> bool {
        self == a || self == b || self.in_open_arc(a, b)
    }

    /// Minimal preperiod and period, found by iterating until a value repeats.
    pub fn orbit_info(&self) -> OrbitInfo {
        let mut seen: HashMap<Angle, usize> = HashMap::new();
        let mut x = self.clone();
        let mut i = 0;
        loop {
            if let Some(&first) = seen.get(&x) {
                return OrbitInfo {
                    preperiod: first,
                    period: i - first,
                };
            }
            let next = x.triple();
            seen.insert(x, i);
            x = next;
            i += 1;
        }
    }
}

fn cmp_small(n1: u64, d1: u64, n2: u64, d2: u64) -> Ordering {
    (n1 as u128 * d2 as u128).cmp(&(n2 as u128 * d1 as u128))
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                cmp_small(*n1, *d1, *n2, *d2)
            }
            _ => {
                let (n1, d1) = self.big_parts();
                let (n2, d2) = other.big_parts();
                (n1 * d2).cmp(&(n2 * d1))
            }
        }
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`; the value is reduced mod 1.
    fn from_str(s: &str) -> Result<Angle> {
        let malformed = || Error::Parse(s.to_string());
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| malformed())?;
        let q: BigInt = q.parse().map_err(|_| malformed())?;
        Angle::from_bigint(&p, &q)
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
