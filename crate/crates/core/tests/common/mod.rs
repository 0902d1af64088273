//! Test-side oracles written independently of the library internals: plain
//! integer arithmetic on numerators modulo `3^p - 1`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use comajor::{Angle, Chord, PointType};
use num_rational::BigRational;

/// Preperiod-1 points of the given block period, split by type.
pub struct Candidates {
    pub b: Vec<Angle>,
    pub d: Vec<Angle>,
}

impl Candidates {
    pub fn of(&self, t: PointType) -> &[Angle] {
        match t {
            PointType::B => &self.b,
            PointType::D => &self.d,
        }
    }
}

fn exact_period(j: u64, m: u64) -> u64 {
    let mut x = j * 3 % m;
    let mut k = 1;
    while x != j {
        x = x * 3 % m;
        k += 1;
    }
    k
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The two non-periodic preimages of `j/m` for `m = 3^p - 1`.
fn strict_preimages(j: u64, m: u64) -> Vec<Angle> {
    (0..3u64)
        .map(|r| (j + r * m, 3 * m))
        .filter(|&(num, den)| (den / gcd(num, den)).is_multiple_of(3))
        .map(|(num, den)| Angle::new(num as i64, den as i64).unwrap())
        .collect()
}

pub fn candidates(block: u32) -> Candidates {
    let mut out = Candidates { b: Vec::new(), d: Vec::new() };
    // type D: exact period `block`, excluding type-B points
    let m = 3u64.pow(block) - 1;
    for j in 0..m {
        if exact_period(j, m) != block as u64 {
            continue;
        }
        let is_b = block.is_multiple_of(2) && {
            let half = 3u64.pow(block / 2);
            (j * half) % m == (j + m / 2) % m
        };
        if !is_b {
            out.d.extend(strict_preimages(j, m));
        }
    }
    // type B: exact period 2*block with 3^block x = x + 1/2
    let m2 = 3u64.pow(2 * block) - 1;
    let half = 3u64.pow(block);
    for j in 0..m2 {
        if (j as u128 * half as u128 % m2 as u128) as u64 != (j + m2 / 2) % m2 {
            continue;
        }
        if exact_period(j, m2) == 2 * block as u64 {
            out.b.extend(strict_preimages(j, m2));
        }
    }
    out.b.sort();
    out.d.sort();
    out
}

fn strictly_between(x: &Angle, lo: &Angle, hi: &Angle) -> bool {
    lo < x && x < hi
}

/// Interleaving test on the raw endpoint order.
pub fn cross(p: &Chord, q: &Chord) -> bool {
    if p.is_degenerate() || q.is_degenerate() {
        return false;
    }
    let (a, b) = (p.a(), p.b());
    let (c, d) = (q.a(), q.b());
    if [a, b].iter().any(|x| *x == c || *x == d) {
        return false;
    }
    strictly_between(c, a, b) != strictly_between(d, a, b)
}

pub fn len(ch: &Chord) -> BigRational {
    let d = ch.b().to_ratio() - ch.a().to_ratio();
    let one = BigRational::from_integer(1.into());
    let other = &one - &d;
    d.min(other)
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn triple_ratio(x: &BigRational) -> BigRational {
    let y = x * BigRational::from_integer(3.into());
    &y - y.floor()
}

/// `3x mod 1` computed on plain rationals.
pub fn triple(x: &Angle) -> Angle {
    let y = triple_ratio(&x.to_ratio());
    Angle::from_bigint(y.numer(), y.denom()).unwrap()
}

pub fn image(ch: &Chord) -> Chord {
    Chord::new(triple(ch.a()), triple(ch.b()))
}

pub fn antipode(ch: &Chord) -> Chord {
    let h = ratio(1, 2);
    let f = |x: &Angle| {
        let y = x.to_ratio() + &h;
        let y = &y - y.floor();
        Angle::from_bigint(y.numer(), y.denom()).unwrap()
    };
    Chord::new(f(ch.a()), f(ch.b()))
}

/// Forward images `σ^i(ch)` for `i >= 1`, until the orbit repeats.
pub fn forward_images(ch: &Chord) -> Vec<Chord> {
    let mut seen = BTreeSet::new();
    seen.insert(ch.clone());
    let mut out = Vec::new();
    let mut cur = image(ch);
    while seen.insert(cur.clone()) {
        out.push(cur.clone());
        cur = image(&cur);
    }
    out
}

/// All reduced fractions with denominator at most `q`.
pub fn fractions_up_to(q: i64) -> Vec<Angle> {
    let mut out: BTreeSet<Angle> = BTreeSet::new();
    for den in 1..=q {
        for num in 0..den {
            out.insert(Angle::new(num, den).unwrap());
        }
    }
    out.into_iter().collect()
}
