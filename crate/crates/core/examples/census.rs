//! Exhaustive check: every short chord on preperiod-1 points is tested by the
//! legality oracle, and the legal ones are compared with the builder.
//!
//!     cargo run --release --example census -- 4

use std::collections::BTreeSet;

use comajor::orbit::{preperiod1_points, PointType};
use comajor::{build, is_comajor, Chord};

fn main() -> anyhow::Result<()> {
    let max_block: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let state = build(max_block, false)?;
    let mut points = Vec::new();
    for block in 1..=max_block {
        for t in [PointType::B, PointType::D] {
            points.extend(preperiod1_points(block, t)?);
        }
    }
    let mut scanned = 0;
    let mut legal = BTreeSet::new();
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            let c = Chord::new(x.clone(), y.clone());
            if c.is_comajor_length() {
                scanned += 1;
                if is_comajor(&c)? {
                    legal.insert(c);
                }
            }
        }
    }
    let built: BTreeSet<Chord> = state.chords().into_iter().collect();
    println!("{} points, {scanned} chords of length at most 1/6", points.len());
    println!("{} legal, {} built, identical: {}", legal.len(), built.len(), legal == built);
    Ok(())
}
