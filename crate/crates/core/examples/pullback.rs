//! Pullback laminations of legal pairs, and the hyperbolic pruning of a
//! co-periodic comajor.
//!
//!     cargo run --release --example pullback -- 11/12 1/12 4

use comajor::pullback::short_q_edges;
use comajor::{build_prelamination, hyperbolic_prune, Angle, Chord};

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (c, depth) = if args.len() >= 2 {
        let c = Chord::new(args[0].parse::<Angle>()?, args[1].parse::<Angle>()?);
        (c, args.get(2).map(|d| d.parse()).transpose()?.unwrap_or(3))
    } else {
        (Chord::from_fracs(11, 12, 1, 12)?, 3)
    };
    let lam = build_prelamination(&c, depth)?;
    println!("seed {c}, barriers {:?}", lam.barriers);
    for level in 0..=depth {
        let n = lam.with_levels().filter(|&(_, l)| l == level).count();
        println!("  level {level}: {n} new chords");
    }
    if !c.is_degenerate() {
        let pruned = hyperbolic_prune(&c, depth)?;
        println!("short edges {:?}", short_q_edges(&c)?);
        println!("pruned: {} of {} chords remain, seed kept: {}", pruned.len(), lam.len(), pruned.contains(&c));
    }
    Ok(())
}
