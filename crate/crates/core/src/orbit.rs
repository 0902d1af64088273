//! Periodic points, their B/D types and block periods, and chord orbits.
//!
//! A periodic point `x` of period `2n` with `3^n x = x + 1/2` is of type B and
//! block period `n`; every other periodic point is of type D with block period
//! equal to its period.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::chord::Chord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointType {
    B,
    D,
}

impl fmt::Display for PointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointType::B => "B",
            PointType::D => "D",
        })
    }
}

impl std::str::FromStr for PointType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(PointType::B),
            "D" | "d" => Ok(PointType::D),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicClass {
    pub ptype: PointType,
    pub block_period: u32,
    pub point_period: u32,
}

pub fn classify_periodic(x: &Angle) -> Result<PeriodicClass> {
    let info = x.orbit_info();
    if !info.is_periodic() {
        return Err(Error::NotPeriodic(x.clone()));
    }
    let p = info.period as u32;
    if p.is_multiple_of(2) && x.triple_n(info.period / 2) == x.antipode() {
        Ok(PeriodicClass {
            ptype: PointType::B,
            block_period: p / 2,
            point_period: p,
        })
    } else {
        Ok(PeriodicClass {
            ptype: PointType::D,
            block_period: p,
            point_period: p,
        })
    }
}

// 3^k - 1 must fit in a u64 for the residue sweeps below.
const MAX_ENUMERATED_PERIOD: u32 = 40;

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All points of exact period `k`, sorted. Every such point is `j / (3^k - 1)`.
pub fn periodic_points(k: u32) -> Result<Vec<Angle>> {
    if k == 0 {
        return Err(Error::ZeroBlock);
    }
    if k > MAX_ENUMERATED_PERIOD {
        return Err(Error::PeriodTooLarge(k));
    }
    let m = 3u64.pow(k) - 1;
    // j has period dividing d iff m | j (3^d - 1)
    let lower: Vec<u128> = prime_factors(k)
        .into_iter()
        .map(|p| 3u128.pow(k / p) - 1)
        .collect();
    let out = (0..m)
        .filter(|&j| lower.iter().all(|&s| !(j as u128 * s).is_multiple_of(m as u128)))
        .map(|j| Angle::new(j as i64, m as i64).expect("positive denominator"))
        .collect();
    Ok(out)
}

/// Periodic points of the given type and block period, sorted.
pub fn typed_periodic_points(block: u32, ptype: PointType) -> Result<Vec<Angle>> {
    if block == 0 {
        return Err(Error::ZeroBlock);
    }
    match ptype {
        PointType::D => Ok(periodic_points(block)?
            .into_iter()
            .filter(|x| {
                block % 2 == 1 || x.triple_n(block as usize / 2) != x.antipode()
            })
            .collect()),
        PointType::B => {
            if 2 * block > MAX_ENUMERATED_PERIOD {
                return Err(Error::PeriodTooLarge(2 * block));
            }
            // 3^n x = x + 1/2 forces x = (2i + 1) / (2 (3^n - 1)); keep exact period 2n
            let m = 3i64.pow(block) - 1;
            let period = 2 * block as usize;
            let checks: Vec<usize> = prime_factors(2 * block)
                .into_iter()
                .map(|p| period / p as usize)
                .collect();
            Ok((0..m)
                .map(|i| Angle::new(2 * i + 1, 2 * m).expect("positive denominator"))
                .filter(|x| checks.iter().all(|&d| &x.triple_n(d) != x))
                .collect())
        }
    }
}

/// Points of preperiod 1 whose image is periodic of the given type and
/// block period: the two non-periodic preimages of each such periodic point.
pub fn preperiod1_points(block: u32, ptype: PointType) -> Result<Vec<Angle>> {
    let period = match ptype {
        PointType::B => 2 * block as usize,
        PointType::D => block as usize,
    };
    let mut out = Vec::new();
    for y in typed_periodic_points(block, ptype)? {
        let on_cycle = y.triple_n(period - 1);
        out.extend(y.preimages().into_iter().filter(|x| x != &on_cycle));
    }
    out.sort();
    Ok(out)
}

/// The forward orbit of a chord up to its first repetition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordOrbit {
    pub preperiod: usize,
    pub pointwise_period: usize,
    pub setwise_period: usize,
    /// `chords[i]` is the `i`-th image; the periodic part starts at `preperiod`.
    pub chords: Vec<Chord>,
}

impl ChordOrbit {
    pub fn cycle(&self) -> &[Chord] {
        &self.chords[self.preperiod..]
    }
}

pub fn chord_orbit(ch: &Chord, max_steps: usize) -> Result<ChordOrbit> {
    let mut seen: HashMap<Chord, usize> = HashMap::new();
    let mut chords = Vec::new();
    let mut c = ch.clone();
    for i in 0..=max_steps {
        if let Some(&first) = seen.get(&c) {
            let periodic = &chords[first];
            let pa = Chord::a(periodic).orbit_info().period;
            let pb = Chord::b(periodic).orbit_info().period;
            return Ok(ChordOrbit {
                preperiod: first,
                pointwise_period: pa.lcm(&pb),
                setwise_period: i - first,
                chords,
            });
        }
        let next = c.image();
        seen.insert(c.clone(), i);
        chords.push(c);
        c = next;
    }
    Err(Error::OrbitNotClosed {
        chord: ch.clone(),
        max_steps,
    })
}

/// Type and block period of a co-periodic chord: both endpoints of
/// preperiod 1 with periodic images of one common class. `None` otherwise.
pub fn coperiodic_class(ch: &Chord) -> Option<PeriodicClass> {
    if ch.is_degenerate() {
        return None;
    }
    let (ia, ib) = (ch.a().orbit_info(), ch.b().orbit_info());
    if ia.preperiod != 1 || ib.preperiod != 1 {
        return None;
    }
    let ca = classify_periodic(&ch.a().triple()).ok()?;
    let cb = classify_periodic(&ch.b().triple()).ok()?;
    (ca == cb).then_some(ca)
}
