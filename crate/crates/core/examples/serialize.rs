//! JSON and CSV output of a build, read back in.

use comajor::build;
use comajor::io::{records_from_csv, records_to_csv, state_from_json, state_to_json};

fn main() -> anyhow::Result<()> {
    let state = build(2, false)?;
    let csv = records_to_csv(state.leaves())?;
    print!("{csv}");
    assert_eq!(records_from_csv(&csv)?, state.leaves());
    let json = state_to_json(&state)?;
    assert_eq!(state_from_json(&json)?, state);
    println!("{} bytes of JSON, round trip exact", json.len());
    Ok(())
}
