//! Certification of symmetric pairs `{c, -c}`.
//!
//! A pair is legal when it is degenerate, or when
//!
//! * (a) no two chords from the forward orbits of `c` and `-c` cross, and
//! * (b) no forward image `3^i c`, `i >= 1`, meets the interior of the short
//!   strips `SH(c)`: the region between the majors `M_c`, `M'_c` together
//!   with its rotation by one half.
//!
//! Legal pairs are exactly the comajor pairs, so this module is the
//! independent check for everything the builder produces.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::chord::{find_crossing, frac, Chord};
use crate::error::{Error, Result};
use crate::orbit::chord_orbit;

/// The strip between two non-crossing chords and its antipodal copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripSystem {
    pub major: Chord,
    pub co_major: Chord,
    pub width: BigRational,
    /// Open boundary arcs `(start, end)`, positively oriented: first those of
    /// the strip itself, then their antipodes.
    pub arcs: Vec<(Angle, Angle)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactKind {
    /// The chord crosses a bounding chord.
    Crosses,
    /// An endpoint lies inside a boundary arc; `boundary` joins the arc's ends.
    EndpointInArc,
    /// The chord is a diagonal of the strip's hull; `boundary` is the other one.
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripContact {
    pub kind: ContactKind,
    pub boundary: Chord,
}

impl StripSystem {
    /// The strip between `major` and `co_major`. Equal chords give a
    /// degenerate strip with no interior of its own.
    pub fn between(major: &Chord, co_major: &Chord) -> StripSystem {
        let width = (frac(1, 3).to_ratio() - major.length()).abs();
        let mut arcs = Vec::new();
        if major != co_major {
            let mut pts = vec![
                major.a().clone(),
                major.b().clone(),
                co_major.a().clone(),
                co_major.b().clone(),
            ];
            pts.sort();
            pts.dedup();
            for i in 0..pts.len() {
                let (u, v) = (&pts[i], &pts[(i + 1) % pts.len()]);
                let side = Chord::new(u.clone(), v.clone());
                if &side != major && &side != co_major {
                    arcs.push((u.clone(), v.clone()));
                }
            }
            let mirrored: Vec<_> = arcs.iter().map(|(u, v)| (u.antipode(), v.antipode())).collect();
            arcs.extend(mirrored);
        }
        StripSystem {
            major: major.clone(),
            co_major: co_major.clone(),
            width,
            arcs,
        }
    }

    pub fn bounding_chords(&self) -> [Chord; 4] {
        [
            self.major.clone(),
            self.co_major.clone(),
            self.major.antipode(),
            self.co_major.antipode(),
        ]
    }

    fn hulls(&self) -> [Vec<Angle>; 2] {
        let mut v = vec![
            self.major.a().clone(),
            self.major.b().clone(),
            self.co_major.a().clone(),
            self.co_major.b().clone(),
        ];
        v.sort();
        v.dedup();
        let mut w: Vec<Angle> = v.iter().map(Angle::antipode).collect();
        w.sort();
        [v, w]
    }

    /// How `d` enters the open strips, if it does. Chords lying on a bounding
    /// chord, hull edges, and chords that only touch vertices from outside
    /// do not count.
    pub fn contact(&self, d: &Chord) -> Option<StripContact> {
        if d.is_degenerate() {
            return None;
        }
        for b in self.bounding_chords() {
            if d.crosses(&b) {
                return Some(StripContact { kind: ContactKind::Crosses, boundary: b });
            }
        }
        for (u, v) in &self.arcs {
            if d.a().in_open_arc(u, v) || d.b().in_open_arc(u, v) {
                return Some(StripContact {
                    kind: ContactKind::EndpointInArc,
                    boundary: Chord::new(u.clone(), v.clone()),
                });
            }
        }
        for hull in self.hulls() {
            if hull.len() == 4 {
                let diagonals = [
                    Chord::new(hull[0].clone(), hull[2].clone()),
                    Chord::new(hull[1].clone(), hull[3].clone()),
                ];
                if d == &diagonals[0] {
                    return Some(StripContact { kind: ContactKind::Diagonal, boundary: diagonals[1].clone() });
                }
                if d == &diagonals[1] {
                    return Some(StripContact { kind: ContactKind::Diagonal, boundary: diagonals[0].clone() });
                }
            }
        }
        None
    }
}

/// `SH(c)` for a chord of length at most 1/6.
pub fn strips_of(c: &Chord) -> Result<StripSystem> {
    let (m, mp) = c.majors()?;
    Ok(StripSystem::between(&m, &mp))
}

pub fn hits_strip_interior(d: &Chord, c: &Chord) -> Result<bool> {
    Ok(strips_of(c)?.contact(d).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Legal,
    Illegal,
}

/// Which of the two orbits a chord was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "c")]
    Comajor,
    #[serde(rename = "-c")]
    Antipodal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRef {
    pub orbit: Side,
    pub index: usize,
    pub chord: Chord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// Two orbit chords cross.
    Cross { first: OrbitRef, second: OrbitRef },
    /// `image = 3^image_index c` enters the short strips through `boundary`.
    Strip {
        image_index: usize,
        image: Chord,
        boundary: Chord,
        contact: ContactKind,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegalityVerdict {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl LegalityVerdict {
    pub fn legal() -> Self {
        LegalityVerdict { status: Status::Legal, witness: None }
    }

    pub fn is_legal(&self) -> bool {
        self.status == Status::Legal
    }
}

impl fmt::Display for LegalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "legal"),
            Some(Witness::Cross { first, second }) => write!(
                f,
                "illegal: image {} of {} {} crosses image {} of {} {}",
                first.index,
                side_name(first.orbit),
                first.chord,
                second.index,
                side_name(second.orbit),
                second.chord
            ),
            Some(Witness::Strip { image_index, image, boundary, contact }) => {
                let how = match contact {
                    ContactKind::Crosses => "crosses strip boundary",
                    ContactKind::EndpointInArc => "ends inside strip arc",
                    ContactKind::Diagonal => "is a strip diagonal, crossing",
                };
                write!(f, "illegal: image {image_index} {image} {how} {boundary}")
            }
        }
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Comajor => "c",
        Side::Antipodal => "-c",
    }
}

/// Steps after which the orbit of `c` is guaranteed to have closed.
fn orbit_horizon(c: &Chord) -> usize {
    let (ia, ib) = (c.a().orbit_info(), c.b().orbit_info());
    ia.preperiod.max(ib.preperiod) + ia.period.lcm(&ib.period) + 1
}

pub fn is_legal_pair(c: &Chord) -> Result<LegalityVerdict> {
    if c.is_degenerate() {
        return Ok(LegalityVerdict::legal());
    }
    if !c.is_comajor_length() {
        return Err(Error::LengthClass {
            chord: c.clone(),
            class: c.classify(),
            expected: "a chord of length at most 1/6",
        });
    }
    let orbit = chord_orbit(c, orbit_horizon(c))?.chords;
    let mirrored: Vec<Chord> = orbit.iter().map(Chord::antipode).collect();

    let mut all: Vec<Chord> = orbit.iter().chain(mirrored.iter()).cloned().collect();
    all.sort();
    all.dedup();
    if let Some((x, y)) = find_crossing(&all) {
        let locate = |ch: &Chord| -> OrbitRef {
            if let Some(i) = orbit.iter().position(|o| o == ch) {
                OrbitRef { orbit: Side::Comajor, index: i, chord: ch.clone() }
            } else {
                let i = mirrored.iter().position(|o| o == ch).expect("chord from the union");
                OrbitRef { orbit: Side::Antipodal, index: i, chord: ch.clone() }
            }
        };
        return Ok(LegalityVerdict {
            status: Status::Illegal,
            witness: Some(Witness::Cross { first: locate(&x), second: locate(&y) }),
        });
    }

    let strips = strips_of(c)?;
    for (i, image) in orbit.iter().enumerate().skip(1) {
        if let Some(contact) = strips.contact(image) {
            return Ok(LegalityVerdict {
                status: Status::Illegal,
                witness: Some(Witness::Strip {
                    image_index: i,
                    image: image.clone(),
                    boundary: contact.boundary,
                    contact: contact.kind,
                }),
            });
        }
    }
    Ok(LegalityVerdict::legal())
}

/// Whether `{c, -c}` is a comajor pair; legality and comajor-ness coincide.
pub fn is_comajor(c: &Chord) -> Result<bool> {
    Ok(is_legal_pair(c)?.is_legal())
}

/// Certifies many chords in parallel and reports the first failure in input
/// order.
pub fn first_illegal(chords: &[Chord]) -> Result<Option<(Chord, LegalityVerdict)>> {
    let verdicts: Vec<Result<LegalityVerdict>> = chords.par_iter().map(is_legal_pair).collect();
    for (c, v) in chords.iter().zip(verdicts) {
        let v = v?;
        if !v.is_legal() {
            return Ok(Some((c.clone(), v)));
        }
    }
    Ok(None)
}
