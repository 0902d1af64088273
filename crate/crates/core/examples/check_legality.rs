//! Certifies a few chords with the legality oracle and shows the witnesses.
//!
//!     cargo run --example check_legality -- 5/24 7/24

use comajor::legality::strips_of;
use comajor::{is_legal_pair, Angle, Chord};

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let chords: Vec<Chord> = if args.len() == 2 {
        vec![Chord::new(args[0].parse::<Angle>()?, args[1].parse::<Angle>()?)]
    } else {
        [(1, 6, 1, 3), (1, 12, 1, 6), (5, 24, 7, 24), (1, 24, 5, 24), (11, 12, 1, 12)]
            .iter()
            .map(|&(a, b, c, d)| Chord::from_fracs(a, b, c, d).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<_>>()?
    };
    for c in chords {
        let strips = strips_of(&c)?;
        println!("{c}: majors {} and {}, strip width {}", strips.major, strips.co_major, strips.width);
        let verdict = is_legal_pair(&c)?;
        println!("  {verdict}");
        println!("  {}", serde_json::to_string(&verdict)?);
    }
    Ok(())
}
