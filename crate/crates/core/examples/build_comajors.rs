//! Runs the step-wise construction and prints how many leaves each step adds.
//!
//!     cargo run --release --example build_comajors -- 6

use comajor::{build, PointType};

fn main() -> anyhow::Result<()> {
    let max_block: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let state = build(max_block, true)?;
    println!("block   B     D");
    for block in 1..=max_block {
        let count = |t| state.of_block(block).filter(|r| r.ptype == t).count();
        println!("{block:>5} {:>5} {:>5}", count(PointType::B), count(PointType::D));
    }
    println!("{} leaves, all certified legal", state.len());
    for r in state.of_block(1) {
        println!("  step 1: {} type {}, minor {}", r.chord, r.ptype, r.minor);
    }
    Ok(())
}
