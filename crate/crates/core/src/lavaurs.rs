//! Step-wise construction of all co-periodic comajors.
//!
//! Step 1 draws the four comajors of block period 1. Step `n` then takes the
//! preperiod-1 points of block period `n`, first of type B and then of type D,
//! splits them into the components cut out by every leaf drawn so far, and
//! joins the points of each component consecutively along its boundary.
//! Inside the central component the four sectors left between the step-1
//! leaves act as separate components: a comajor is never long enough to
//! join two of them.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::angle::Angle;
use crate::chord::{find_crossing, frac, Chord};
use crate::error::{Error, Result};
use crate::legality::first_illegal;
use crate::orbit::{preperiod1_points, PointType};

/// A certified co-periodic comajor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComajorRecord {
    pub chord: Chord,
    pub ptype: PointType,
    pub block_period: u32,
    /// The build step that drew the leaf; always the block period.
    pub step: u32,
    /// The image of `chord`, a periodic leaf.
    pub minor: Chord,
}

impl ComajorRecord {
    pub fn new(chord: Chord, ptype: PointType, block_period: u32) -> Self {
        let minor = chord.image();
        ComajorRecord {
            chord,
            ptype,
            block_period,
            step: block_period,
            minor,
        }
    }

    fn sort_key(&self) -> (u32, PointType, &Chord) {
        (self.block_period, self.ptype, &self.chord)
    }
}

/// The leaves drawn through `completed_block`, ordered by block period, type,
/// then chord.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildState {
    leaves: Vec<ComajorRecord>,
    completed_block: u32,
}

impl BuildState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assembles a state from records, restoring canonical order.
    pub fn from_records(mut leaves: Vec<ComajorRecord>) -> Self {
        leaves.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
        let completed_block = leaves.iter().map(|r| r.block_period).max().unwrap_or(0);
        BuildState { leaves, completed_block }
    }

    pub fn leaves(&self) -> &[ComajorRecord] {
        &self.leaves
    }

    pub fn completed_block(&self) -> u32 {
        self.completed_block
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn chords(&self) -> Vec<Chord> {
        self.leaves.iter().map(|r| r.chord.clone()).collect()
    }

    pub fn of_block(&self, block: u32) -> impl Iterator<Item = &ComajorRecord> {
        self.leaves.iter().filter(move |r| r.block_period == block)
    }
}

pub fn seed_leaves() -> Vec<ComajorRecord> {
    let leaf = |p1, q1, p2, q2, t| {
        ComajorRecord::new(Chord::from_fracs(p1, q1, p2, q2).expect("constant"), t, 1)
    };
    vec![
        leaf(5, 12, 7, 12, PointType::B),
        leaf(11, 12, 1, 12, PointType::B),
        leaf(1, 6, 1, 3, PointType::D),
        leaf(2, 3, 5, 6, PointType::D),
    ]
}

/// The four arcs of the circle left uncovered by the step-1 leaves.
pub fn central_sectors() -> [(Angle, Angle); 4] {
    [
        (frac(1, 12), frac(1, 6)),
        (frac(1, 3), frac(5, 12)),
        (frac(7, 12), frac(2, 3)),
        (frac(5, 6), frac(11, 12)),
    ]
}

/// The component a candidate point falls in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    /// Innermost leaf whose shorter side holds the point.
    Under(Chord),
    /// One of the [`central_sectors`].
    Sector(usize),
    /// Not under any leaf and outside every sector; only reachable when the
    /// step-1 leaves are missing.
    Central,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointGroup {
    pub region: Region,
    /// Points in order along the region's boundary arc.
    pub points: Vec<Angle>,
}

/// Partitions `points` into components of the disk cut by `leaves`, with the
/// central component further split by sector. Two points share a group iff
/// no leaf separates them and they lie in the same sector.
pub fn group_by_component(points: &[Angle], leaves: &[Chord]) -> Result<Vec<PointGroup>> {
    let endpoints: BTreeMap<&Angle, &Chord> = leaves
        .iter()
        .flat_map(|l| [(l.a(), l), (l.b(), l)])
        .collect();
    // (start, end, span, leaf) for each leaf's shorter side
    let sides: Vec<(Angle, Angle, Angle, &Chord)> = leaves
        .iter()
        .filter_map(|l| l.shorter_arc().map(|(s, e)| (s.arc_to(&e), s, e, l)))
        .map(|(span, s, e, l)| (s, e, span, l))
        .collect();
    let sectors = central_sectors();

    let mut groups: BTreeMap<Region, (Angle, Vec<Angle>)> = BTreeMap::new();
    for x in points {
        if let Some(leaf) = endpoints.get(x) {
            return Err(Error::EndpointCollision {
                point: x.clone(),
                chord: (*leaf).clone(),
            });
        }
        let innermost = sides
            .iter()
            .filter(|(s, e, _, _)| x.in_open_arc(s, e))
            .min_by(|p, q| p.2.cmp(&q.2));
        let (region, start) = match innermost {
            Some((s, _, _, leaf)) => (Region::Under((*leaf).clone()), s.clone()),
            None => match sectors.iter().position(|(s, e)| x.in_open_arc(s, e)) {
                Some(i) => (Region::Sector(i), sectors[i].0.clone()),
                None => (Region::Central, Angle::zero()),
            },
        };
        groups
            .entry(region)
            .or_insert_with(|| (start, Vec::new()))
            .1
            .push(x.clone());
    }

    Ok(groups
        .into_iter()
        .map(|(region, (start, mut pts))| {
            pts.sort_by_cached_key(|p| start.arc_to(p));
            PointGroup { region, points: pts }
        })
        .collect())
}

/// Joins the 1st point to the 2nd, the 3rd to the 4th, and so on.
pub fn pair_consecutively(group: &[Angle]) -> Result<Vec<Chord>> {
    if group.len() % 2 == 1 {
        return Err(Error::OddGroup {
            first: group[0].clone(),
            len: group.len(),
        });
    }
    group
        .chunks(2)
        .map(|pair| {
            let c = Chord::new(pair[0].clone(), pair[1].clone());
            if c.is_comajor_length() {
                Ok(c)
            } else {
                Err(Error::LeafTooLong(c))
            }
        })
        .collect()
}

fn draw_type(state: &BuildState, block: u32, ptype: PointType) -> Result<Vec<ComajorRecord>> {
    let points = preperiod1_points(block, ptype)?;
    let existing = state.chords();
    let mut out = Vec::new();
    for group in group_by_component(&points, &existing)? {
        for chord in pair_consecutively(&group.points)? {
            out.push(ComajorRecord::new(chord, ptype, block));
        }
    }
    let mut all = existing;
    all.extend(out.iter().map(|r| r.chord.clone()));
    if let Some((x, y)) = find_crossing(&all) {
        let (new, old) = if out.iter().any(|r| r.chord == y) { (y, x) } else { (x, y) };
        return Err(Error::LeafCrossing { new, old });
    }
    Ok(out)
}

/// Draws every comajor of block period `block`: type B first, then type D
/// against the enlarged leaf set.
pub fn run_step(state: &BuildState, block: u32) -> Result<BuildState> {
    if block == 0 {
        return Err(Error::ZeroBlock);
    }
    if state.completed_block + 1 != block {
        return Err(Error::StepOutOfOrder {
            block,
            completed: state.completed_block,
        });
    }
    if block == 1 {
        return Ok(BuildState::from_records(seed_leaves()));
    }
    let mut next = state.clone();
    for ptype in [PointType::B, PointType::D] {
        let drawn = draw_type(&next, block, ptype)?;
        next.leaves.extend(drawn);
    }
    next.leaves.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    next.completed_block = block;
    Ok(next)
}

/// Draws all co-periodic comajors of block period at most `max_block`. With
/// `verify`, every leaf is certified by the legality oracle and every
/// candidate point must end up on exactly one leaf.
pub fn build(max_block: u32, verify: bool) -> Result<BuildState> {
    if max_block == 0 {
        return Err(Error::ZeroBlock);
    }
    let mut state = BuildState::new();
    for block in 1..=max_block {
        state = run_step(&state, block)?;
        if verify {
            verify_block(&state, block)?;
        }
    }
    Ok(state)
}

fn verify_block(state: &BuildState, block: u32) -> Result<()> {
    let fresh: Vec<&ComajorRecord> = state.of_block(block).collect();
    let chords: Vec<Chord> = fresh.iter().map(|r| r.chord.clone()).collect();
    if let Some((chord, verdict)) = first_illegal(&chords)? {
        return Err(Error::VerificationFailed {
            chord,
            verdict: Box::new(verdict),
        });
    }
    for ptype in [PointType::B, PointType::D] {
        let expected: HashSet<Angle> = preperiod1_points(block, ptype)?.into_iter().collect();
        let mut used = HashSet::new();
        let mut mismatched = 0;
        for r in fresh.iter().filter(|r| r.ptype == ptype) {
            for x in [r.chord.a(), r.chord.b()] {
                if !expected.contains(x) || !used.insert(x.clone()) {
                    mismatched += 1;
                }
            }
        }
        mismatched += expected.len() - used.len();
        if mismatched > 0 {
            return Err(Error::UnusedPoints { block, count: mismatched });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NestingReport {
    /// `(inner, outer)` pairs of equal block period and different type.
    pub cross_type: Vec<(ComajorRecord, ComajorRecord)>,
    /// `(inner, outer, separator)`: same type and block period, with a leaf
    /// of smaller block period strictly between them.
    pub same_type: Vec<(ComajorRecord, ComajorRecord, ComajorRecord)>,
}

/// Audits nesting among leaves of equal block period. Leaves of equal type
/// may only be nested with a leaf of smaller block period between them.
pub fn nesting_audit(state: &BuildState) -> Result<NestingReport> {
    let mut by_block: BTreeMap<u32, Vec<&ComajorRecord>> = BTreeMap::new();
    for r in state.leaves() {
        by_block.entry(r.block_period).or_default().push(r);
    }
    let mut report = NestingReport::default();
    for (&block, leaves) in &by_block {
        for inner in leaves {
            for outer in leaves {
                if !inner.chord.under(&outer.chord)? {
                    continue;
                }
                if inner.ptype != outer.ptype {
                    report.cross_type.push(((*inner).clone(), (*outer).clone()));
                    continue;
                }
                let mut separator = None;
                for d in state.leaves().iter().filter(|d| d.block_period < block) {
                    if inner.chord.under(&d.chord)? && d.chord.under(&outer.chord)? {
                        separator = Some(d.clone());
                        break;
                    }
                }
                match separator {
                    Some(d) => report.same_type.push(((*inner).clone(), (*outer).clone(), d)),
                    None => {
                        return Err(Error::SameTypeNesting {
                            inner: inner.chord.clone(),
                            outer: outer.chord.clone(),
                        })
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(p1: i64, q1: i64, p2: i64, q2: i64) -> Chord {
        Chord::from_fracs(p1, q1, p2, q2).unwrap()
    }

    fn chords_of(state: &BuildState, block: u32, t: PointType) -> Vec<Chord> {
        state
            .of_block(block)
            .filter(|r| r.ptype == t)
            .map(|r| r.chord.clone())
            .collect()
    }

    #[test]
    fn seeds() {
        let seeds = seed_leaves();
        assert_eq!(seeds.len(), 4);
        let d: Vec<_> = seeds.iter().filter(|r| r.ptype == PointType::D).map(|r| r.chord.clone()).collect();
        assert_eq!(d, vec![ch(1, 6, 1, 3), ch(2, 3, 5, 6)]);
        let b: Vec<_> = seeds.iter().filter(|r| r.ptype == PointType::B).map(|r| r.chord.clone()).collect();
        assert_eq!(b, vec![ch(5, 12, 7, 12), ch(11, 12, 1, 12)]);
    }

    #[test]
    fn block2_d_groups_against_seeds() {
        let seeds: Vec<Chord> = seed_leaves().into_iter().map(|r| r.chord).collect();
        let pts = preperiod1_points(2, PointType::D).unwrap();
        let groups = group_by_component(&pts, &seeds).unwrap();
        let mut got: Vec<Vec<Angle>> = groups.into_iter().map(|g| g.points).collect();
        got.sort();
        let f = |p| frac(p, 24);
        assert_eq!(
            got,
            vec![
                vec![f(5), f(7)],
                vec![f(11), f(13)],
                vec![f(17), f(19)],
                vec![f(23), f(1)],
            ]
        );
    }

    #[test]
    fn block2_b_groups_against_seeds() {
        let seeds: Vec<Chord> = seed_leaves().into_iter().map(|r| r.chord).collect();
        let pts = preperiod1_points(2, PointType::B).unwrap();
        let groups = group_by_component(&pts, &seeds).unwrap();
        assert_eq!(groups.len(), 8);
        assert!(groups.iter().all(|g| g.points.len() == 2));
        let under = groups.iter().filter(|g| matches!(g.region, Region::Under(_))).count();
        assert_eq!(under, 4);
    }

    #[test]
    fn grouping_rejects_endpoint_collisions() {
        let seeds: Vec<Chord> = seed_leaves().into_iter().map(|r| r.chord).collect();
        let err = group_by_component(&[frac(1, 6)], &seeds).unwrap_err();
        assert!(matches!(err, Error::EndpointCollision { .. }));
    }

    #[test]
    fn pairing() {
        assert_eq!(pair_consecutively(&[frac(5, 24), frac(7, 24)]).unwrap(), vec![ch(5, 24, 7, 24)]);
        assert_eq!(pair_consecutively(&[frac(23, 24), frac(1, 24)]).unwrap(), vec![ch(23, 24, 1, 24)]);
        let four = [frac(1, 10), frac(1, 9), frac(1, 8), frac(1, 7)];
        assert_eq!(
            pair_consecutively(&four).unwrap(),
            vec![Chord::new(frac(1, 10), frac(1, 9)), Chord::new(frac(1, 8), frac(1, 7))]
        );
        assert!(matches!(pair_consecutively(&four[..3]), Err(Error::OddGroup { len: 3, .. })));
        assert!(matches!(
            pair_consecutively(&[frac(0, 1), frac(1, 3)]),
            Err(Error::LeafTooLong(_))
        ));
    }

    #[test]
    fn step_two() {
        let s1 = run_step(&BuildState::new(), 1).unwrap();
        let s2 = run_step(&s1, 2).unwrap();
        let f = |p| frac(p, 48);
        let mut b_expected: Vec<Chord> = [(47, 1), (5, 7), (11, 13), (17, 19), (23, 25), (29, 31), (35, 37), (41, 43)]
            .iter()
            .map(|&(x, y)| Chord::new(f(x), f(y)))
            .collect();
        b_expected.sort();
        assert_eq!(chords_of(&s2, 2, PointType::B), b_expected);
        let mut d_expected = vec![ch(23, 24, 1, 24), ch(5, 24, 7, 24), ch(11, 24, 13, 24), ch(17, 24, 19, 24)];
        d_expected.sort();
        assert_eq!(chords_of(&s2, 2, PointType::D), d_expected);
        assert_eq!(s2.len(), 16);
        assert_eq!(s2.completed_block(), 2);
    }

    #[test]
    fn steps_must_run_in_order() {
        assert!(matches!(
            run_step(&BuildState::new(), 2),
            Err(Error::StepOutOfOrder { block: 2, completed: 0 })
        ));
        assert!(matches!(build(0, false), Err(Error::ZeroBlock)));
    }

    #[test]
    fn build_counts() {
        assert_eq!(build(1, true).unwrap().len(), 4);
        assert_eq!(build(2, true).unwrap().len(), 16);
        assert_eq!(build(3, true).unwrap().len(), 64);
    }

    #[test]
    fn nesting_audit_examples() {
        let report = nesting_audit(&build(1, false).unwrap()).unwrap();
        assert!(report.cross_type.is_empty() && report.same_type.is_empty());

        let report = nesting_audit(&build(2, false).unwrap()).unwrap();
        let pairs: Vec<(Chord, Chord)> = report
            .cross_type
            .iter()
            .filter(|(i, _)| i.block_period == 2)
            .map(|(i, o)| (i.chord.clone(), o.chord.clone()))
            .collect();
        assert!(pairs.contains(&(ch(47, 48, 1, 48), ch(23, 24, 1, 24))));
        // one B leaf under each block-2 D leaf
        assert_eq!(pairs.len(), 4);

        // same-type nesting appears at block 3, always around a block-2 leaf
        let report = nesting_audit(&build(3, false).unwrap()).unwrap();
        let pin = report
            .same_type
            .iter()
            .find(|(i, o, _)| i.chord == ch(155, 156, 1, 156) && o.chord == ch(151, 156, 5, 156))
            .expect("block-3 B nesting");
        assert_eq!(pin.2.chord, ch(47, 48, 1, 48));

        // a copy of a seed pushed inward under the original
        let mut leaves = seed_leaves();
        leaves.push(ComajorRecord::new(ch(13, 72, 23, 72), PointType::D, 1));
        let err = nesting_audit(&BuildState::from_records(leaves)).unwrap_err();
        assert!(matches!(err, Error::SameTypeNesting { .. }));
    }
}
