//! Which comajors of one block period sit under one another.

use comajor::build;
use comajor::lavaurs::nesting_audit;

fn main() -> anyhow::Result<()> {
    let max_block: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let report = nesting_audit(&build(max_block, false)?)?;
    println!("{} cross-type nestings", report.cross_type.len());
    for (inner, outer) in report.cross_type.iter().take(4) {
        println!("  {} {} under {} {}", inner.ptype, inner.chord, outer.ptype, outer.chord);
    }
    println!("{} same-type nestings, each around a smaller block", report.same_type.len());
    for (inner, outer, sep) in report.same_type.iter().take(4) {
        println!("  {} under {} around block-{} {}", inner.chord, outer.chord, sep.block_period, sep.chord);
    }
    Ok(())
}
