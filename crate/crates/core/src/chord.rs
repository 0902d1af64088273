//! Chords of the unit circle and the length-class geometry of tripling.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};

/// An unordered pair of angles, stored with `a <= b`. `a == b` is a
/// degenerate chord (a point of the circle).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chord {
    a: Angle,
    b: Angle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthClass {
    Degenerate,
    Short,
    Medium,
    Long,
    Critical,
    Diameter,
}

impl LengthClass {
    /// Diameters are long as well.
    pub fn is_long(self) -> bool {
        matches!(self, LengthClass::Long | LengthClass::Diameter)
    }
}

pub(crate) fn frac(p: i64, q: i64) -> Angle {
    Angle::new(p, q).expect("constant fraction")
}

impl Chord {
    pub fn new(x: Angle, y: Angle) -> Chord {
        if x <= y {
            Chord { a: x, b: y }
        } else {
            Chord { a: y, b: x }
        }
    }

    /// The degenerate chord at `x`.
    pub fn point(x: Angle) -> Chord {
        Chord { a: x.clone(), b: x }
    }

    /// Shorthand for tests and examples: the chord `(p1/q1, p2/q2)`.
    pub fn from_fracs(p1: i64, q1: i64, p2: i64, q2: i64) -> Result<Chord> {
        Ok(Chord::new(Angle::new(p1, q1)?, Angle::new(p2, q2)?))
    }

    pub fn a(&self) -> &Angle {
        &self.a
    }

    pub fn b(&self) -> &Angle {
        &self.b
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn has_endpoint(&self, x: &Angle) -> bool {
        &self.a == x || &self.b == x
    }

    pub fn shares_endpoint(&self, other: &Chord) -> bool {
        self.has_endpoint(&other.a) || self.has_endpoint(&other.b)
    }

    /// The length of the shorter arc, as a value in `[0, 1/2]` held in an
    /// [`Angle`] for cheap exact comparison.
    pub(crate) fn span(&self) -> Angle {
        let d = self.a.arc_to(&self.b);
        let rest = d.neg();
        if d <= rest {
            d
        } else {
            rest
        }
    }

    pub fn length(&self) -> BigRational {
        self.span().to_ratio()
    }

    pub fn classify(&self) -> LengthClass {
        let len = self.span();
        if len.is_zero() {
            LengthClass::Degenerate
        } else if len < frac(1, 6) {
            LengthClass::Short
        } else if len < frac(1, 3) {
            LengthClass::Medium
        } else if len == frac(1, 3) {
            LengthClass::Critical
        } else if len == Angle::half() {
            LengthClass::Diameter
        } else {
            LengthClass::Long
        }
    }

    /// Short, degenerate, or exactly one sixth: the chords that can be comajors.
    pub fn is_comajor_length(&self) -> bool {
        self.span() <= frac(1, 6)
    }

    /// Whether the open chords meet inside the disk. Shared endpoints and
    /// degenerate chords never cross.
    pub fn crosses(&self, other: &Chord) -> bool {
        if self.is_degenerate() || other.is_degenerate() {
            return false;
        }
        (self.a < other.a && other.a < self.b && self.b < other.b)
            || (other.a < self.a && self.a < other.b && other.b < self.b)
    }

    /// The chord of tripled endpoints.
    pub fn image(&self) -> Chord {
        Chord::new(self.a.triple(), self.b.triple())
    }

    pub fn antipode(&self) -> Chord {
        Chord::new(self.a.antipode(), self.b.antipode())
    }

    /// Rotation of both endpoints by `t`.
    pub fn translate(&self, t: &Angle) -> Chord {
        Chord::new(self.a.add(t), self.b.add(t))
    }

    /// `(start, end)` with the positively oriented arc `start -> end` the
    /// shorter one. `None` for diameters.
    pub fn shorter_arc(&self) -> Option<(Angle, Angle)> {
        let d = self.a.arc_to(&self.b);
        let rest = d.neg();
        match d.cmp(&rest) {
            std::cmp::Ordering::Less => Some((self.a.clone(), self.b.clone())),
            std::cmp::Ordering::Greater => Some((self.b.clone(), self.a.clone())),
            std::cmp::Ordering::Equal if d.is_zero() => Some((self.a.clone(), self.b.clone())),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// The chords `self + 1/3` and `self + 2/3`.
    pub fn translate_siblings(&self) -> Result<(Chord, Chord)> {
        if self.is_degenerate() {
            return Err(Error::DegenerateChord(self.clone()));
        }
        Ok((self.translate(&frac(1, 3)), self.translate(&frac(2, 3))))
    }

    /// With `(a, b)` the shorter arc, the chords `(a + 1/3, b - 1/3)` and
    /// `(a + 2/3, b - 2/3)`. Together with `self` they share one image.
    pub fn sml_siblings(&self) -> Result<(Chord, Chord)> {
        match self.classify() {
            LengthClass::Degenerate => return Err(Error::DegenerateChord(self.clone())),
            LengthClass::Critical | LengthClass::Diameter => {
                return Err(Error::LengthClass {
                    chord: self.clone(),
                    class: self.classify(),
                    expected: "a non-critical, non-diameter chord",
                })
            }
            _ => {}
        }
        let (a, b) = self.shorter_arc().expect("not a diameter");
        let (third, two_thirds) = (frac(1, 3), frac(2, 3));
        Ok((
            Chord::new(a.add(&third), b.sub(&third)),
            Chord::new(a.add(&two_thirds), b.sub(&two_thirds)),
        ))
    }

    /// The pair `M_c, M'_c` of long/medium chords sharing the image of `self`,
    /// longer first. A degenerate `self` yields the critical chord
    /// `(x + 1/3, x + 2/3)` twice.
    pub fn majors(&self) -> Result<(Chord, Chord)> {
        if self.is_degenerate() {
            let m = Chord::new(self.a.add(&frac(1, 3)), self.a.add(&frac(2, 3)));
            return Ok((m.clone(), m));
        }
        if !self.is_comajor_length() {
            return Err(Error::LengthClass {
                chord: self.clone(),
                class: self.classify(),
                expected: "a chord of length at most 1/6",
            });
        }
        let (first, second) = self.sml_siblings()?;
        if first.span() >= second.span() {
            Ok((first, second))
        } else {
            Ok((second, first))
        }
    }

    /// Vertices of the convex hull `Q_c` of the majors, in increasing order.
    pub fn quad(&self) -> Result<Vec<Angle>> {
        let (m, mp) = self.majors()?;
        let mut v = vec![m.a, m.b, mp.a, mp.b];
        v.sort();
        v.dedup();
        Ok(v)
    }

    /// Whether `self` lies in the closed region cut off by `n` on its shorter
    /// side. Irreflexive.
    pub fn under(&self, n: &Chord) -> Result<bool> {
        let (s, e) = n.shorter_arc().ok_or_else(|| Error::Diameter(n.clone()))?;
        if self == n || n.is_degenerate() {
            return Ok(false);
        }
        Ok(self.a.in_closed_arc(&s, &e) && self.b.in_closed_arc(&s, &e))
    }

    /// Whether exactly one of `x`, `y` lies in the open arc `(a, b)`.
    pub fn separates(&self, x: &Angle, y: &Angle) -> Result<bool> {
        for p in [x, y] {
            if self.has_endpoint(p) {
                return Err(Error::EndpointCollision {
                    point: p.clone(),
                    chord: self.clone(),
                });
            }
        }
        Ok(x.in_open_arc(&self.a, &self.b) != y.in_open_arc(&self.a, &self.b))
    }
}

/// Finds a crossing pair in `chords`, if there is one. Degenerate chords are
/// ignored. Runs in `O(n log n)` using the parenthesis structure of a
/// non-crossing family.
pub fn find_crossing(chords: &[Chord]) -> Option<(Chord, Chord)> {
    let mut sorted: Vec<&Chord> = chords.iter().filter(|c| !c.is_degenerate()).collect();
    sorted.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| y.b.cmp(&x.b)));
    let mut stack: Vec<&Chord> = Vec::new();
    for c in sorted {
        while stack.last().is_some_and(|top| top.b <= c.a) {
            stack.pop();
        }
        if let Some(top) = stack.last() {
            if top.a < c.a && top.b < c.b {
                return Some(((*top).clone(), c.clone()));
            }
        }
        stack.push(c);
    }
    None
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Chord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: Angle,
            b: Angle,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(Chord::new(raw.a, raw.b))
    }
}
