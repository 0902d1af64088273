//! Finite-depth symmetric pullback laminations of a legal pair.
//!
//! Level 0 holds the generating chords: the critical leaves `±M_c` when `c`
//! is degenerate, otherwise the edges of `±Q_c` together with the forward
//! orbits of `±c`. Level `k` holds the pullbacks of the chords first seen at
//! level `k - 1`, where a pullback may not cross any level-0 barrier.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chord::Chord;
use crate::error::{Error, Result};
use crate::legality::is_legal_pair;
use crate::orbit::{chord_orbit, coperiodic_class};

// Orbits of chords with rational endpoints always close; this only guards
// against runaway denominators.
const ORBIT_STEP_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prelamination {
    pub seed: Chord,
    pub depth: u32,
    /// Chords no pullback may cross.
    pub barriers: Vec<Chord>,
    levels: BTreeMap<Chord, u32>,
}

impl Prelamination {
    /// All chords in canonical order.
    pub fn chords(&self) -> impl Iterator<Item = &Chord> {
        self.levels.keys()
    }

    pub fn to_vec(&self) -> Vec<Chord> {
        self.levels.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn contains(&self, ch: &Chord) -> bool {
        self.levels.contains_key(ch)
    }

    /// The level at which `ch` was first generated.
    pub fn level_of(&self, ch: &Chord) -> Option<u32> {
        self.levels.get(ch).copied()
    }

    /// Chords paired with their levels, in canonical order.
    pub fn with_levels(&self) -> impl Iterator<Item = (&Chord, u32)> {
        self.levels.iter().map(|(c, &l)| (c, l))
    }
}

impl Serialize for Prelamination {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Prelamination", 3)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("depth", &self.depth)?;
        st.serialize_field("chords", &self.to_vec())?;
        st.end()
    }
}

/// The preimage chords of `ch` that cross no barrier. Usually a single
/// sibling collection; critical `ch` may give fewer chords and chords meeting
/// barrier endpoints may give more.
pub fn pullbacks_of_chord(ch: &Chord, barriers: &[Chord]) -> Result<Vec<Chord>> {
    if ch.is_degenerate() {
        return Err(Error::DegenerateChord(ch.clone()));
    }
    let mut out = Vec::new();
    for x in ch.a().preimages() {
        for y in ch.b().preimages() {
            let cand = Chord::new(x.clone(), y);
            if !barriers.iter().any(|w| w.crosses(&cand)) {
                out.push(cand);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The sibling collections (three disjoint, pairwise non-crossing chords,
/// one through each preimage of `ch.a()`) available among `cands`.
fn sibling_matchings(ch: &Chord, cands: &[Chord]) -> Vec<[Chord; 3]> {
    let xs = ch.a().preimages();
    let ys = ch.b().preimages();
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS
        .iter()
        .filter_map(|p| {
            let m = [0, 1, 2].map(|i| Chord::new(xs[i].clone(), ys[p[i]].clone()));
            let ok = m.iter().all(|c| cands.binary_search(c).is_ok())
                && !m[0].crosses(&m[1])
                && !m[0].crosses(&m[2])
                && !m[1].crosses(&m[2]);
            ok.then_some(m)
        })
        .collect()
}

/// Resolves an ambiguous candidate set to one sibling collection: for a
/// self-antipodal chord an antipode-closed collection is preferred, then the
/// shortest total length, then chord order.
fn select_pullbacks(ch: &Chord, cands: Vec<Chord>) -> Vec<Chord> {
    if cands.len() <= 3 {
        return cands;
    }
    let mut matchings = sibling_matchings(ch, &cands);
    if matchings.is_empty() {
        return cands;
    }
    if ch.antipode() == *ch {
        let closed: Vec<[Chord; 3]> = matchings
            .iter()
            .filter(|m| m.iter().all(|c| m.contains(&c.antipode())))
            .cloned()
            .collect();
        if !closed.is_empty() {
            matchings = closed;
        }
    }
    let key = |m: &[Chord; 3]| {
        let mut sorted = m.clone();
        sorted.sort();
        let total = m.iter().map(|c| c.length()).fold(BigRational::zero(), |s, l| s + l);
        (total, sorted)
    };
    let best = matchings
        .into_iter()
        .min_by(|p, q| key(p).cmp(&key(q)))
        .expect("nonempty");
    let mut out = best.to_vec();
    out.sort();
    out
}

/// Level-0 chords and barriers for the seed `c`.
fn generators(c: &Chord) -> Result<(Vec<Chord>, Vec<Chord>)> {
    if c.is_degenerate() {
        let (m, _) = c.majors()?;
        let barriers = vec![m.clone(), m.antipode()];
        return Ok((barriers.clone(), barriers));
    }
    let q = c.quad()?;
    let mut barriers = Vec::new();
    for i in 0..q.len() {
        let edge = Chord::new(q[i].clone(), q[(i + 1) % q.len()].clone());
        barriers.push(edge.antipode());
        barriers.push(edge);
    }
    barriers.sort();
    barriers.dedup();
    let mut gens = barriers.clone();
    for s in [c.clone(), c.antipode()] {
        gens.extend(chord_orbit(&s, ORBIT_STEP_LIMIT)?.chords);
    }
    gens.retain(|g| !g.is_degenerate());
    Ok((gens, barriers))
}

/// The depth-`depth` truncation of the symmetric pullback lamination
/// generated by the legal pair `{c, -c}`.
pub fn build_prelamination(c: &Chord, depth: u32) -> Result<Prelamination> {
    let verdict = is_legal_pair(c)?;
    if !verdict.is_legal() {
        return Err(Error::IllegalSeed {
            chord: c.clone(),
            verdict: Box::new(verdict),
        });
    }
    let (gens, barriers) = generators(c)?;
    let mut levels: BTreeMap<Chord, u32> = gens.into_iter().map(|g| (g, 0)).collect();
    let mut frontier: Vec<Chord> = levels.keys().cloned().collect();

    for level in 1..=depth {
        // {l, -l} is pulled back once through its smaller member
        let reps: Vec<&Chord> = frontier.iter().filter(|l| **l <= l.antipode()).collect();
        let pulled: Vec<Vec<Chord>> = reps
            .par_iter()
            .map(|l| -> Result<Vec<Chord>> {
                let chosen = select_pullbacks(l, pullbacks_of_chord(l, &barriers)?);
                let mut both: Vec<Chord> = chosen.iter().map(Chord::antipode).collect();
                both.extend(chosen);
                Ok(both)
            })
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for ch in pulled.into_iter().flatten() {
            if !levels.contains_key(&ch) {
                levels.insert(ch.clone(), level);
                next.push(ch);
            }
        }
        next.sort();
        next.dedup();
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    Ok(Prelamination {
        seed: c.clone(),
        depth,
        barriers,
        levels,
    })
}

/// The chords `c + 1/3`, `c + 2/3` and their antipodes: the edges of `±Q_c`
/// that are translates of `c`.
pub fn short_q_edges(c: &Chord) -> Result<Vec<Chord>> {
    let (p, q) = c.translate_siblings()?;
    let mut out = vec![p.antipode(), q.antipode(), p, q];
    out.sort();
    out.dedup();
    Ok(out)
}

/// `build_prelamination(c, depth)` without the short edges of `±Q_c` and
/// every chord whose forward orbit reaches one of them.
pub fn hyperbolic_prune(c: &Chord, depth: u32) -> Result<Prelamination> {
    if coperiodic_class(c).is_none() {
        return Err(Error::NotCoPeriodic(c.clone()));
    }
    let mut lam = build_prelamination(c, depth)?;
    let short = short_q_edges(c)?;
    let mut memo: HashMap<Chord, bool> = HashMap::new();
    let doomed: Vec<Chord> = lam
        .chords()
        .filter(|ch| reaches(ch, &short, &mut memo))
        .cloned()
        .collect();
    for ch in doomed {
        lam.levels.remove(&ch);
    }
    Ok(lam)
}

/// Whether the forward orbit of `ch`, itself included, meets `targets`.
fn reaches(ch: &Chord, targets: &[Chord], memo: &mut HashMap<Chord, bool>) -> bool {
    let mut path = Vec::new();
    let mut cur = ch.clone();
    let hit = loop {
        if let Some(&known) = memo.get(&cur) {
            break known;
        }
        if targets.contains(&cur) {
            break true;
        }
        if cur.is_degenerate() || path.contains(&cur) {
            break false;
        }
        let next = cur.image();
        path.push(cur);
        cur = next;
    };
    for p in path {
        memo.insert(p, hit);
    }
    hit
}

/// The critical chords `±M_c` of a degenerate seed, or the edges of `±Q_c`.
pub fn barriers_of(c: &Chord) -> Result<Vec<Chord>> {
    Ok(generators(c)?.1)
}
