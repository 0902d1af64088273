//! Orbits of angles and chords under tripling, with B/D classification.
//!
//!     cargo run --example orbits -- 1/12

use comajor::orbit::{chord_orbit, classify_periodic, preperiod1_points, PointType};
use comajor::{Angle, Chord};

fn main() -> anyhow::Result<()> {
    let x: Angle = std::env::args().nth(1).unwrap_or_else(|| "1/12".into()).parse()?;
    let info = x.orbit_info();
    let mut y = x.clone();
    let mut shown = vec![y.to_string()];
    for _ in 1..info.preperiod + info.period {
        y = y.triple();
        shown.push(y.to_string());
    }
    println!("{x}: preperiod {}, period {}", info.preperiod, info.period);
    println!("  {}", shown.join(" -> "));
    let class = classify_periodic(&x.triple_n(info.preperiod))?;
    println!("  periodic tail: type {}, block period {}", class.ptype, class.block_period);

    let c = Chord::from_fracs(5, 24, 7, 24)?;
    let orbit = chord_orbit(&c, 100)?;
    println!("{c}: preperiod {}, cycle {:?}", orbit.preperiod, orbit.cycle());

    for block in 1..=3 {
        for t in [PointType::B, PointType::D] {
            let pts = preperiod1_points(block, t)?;
            println!("block {block} {t}: {} preperiod-1 points", pts.len());
        }
    }
    Ok(())
}
