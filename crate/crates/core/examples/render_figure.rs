//! Draws the co-periodic comajors as hyperbolic geodesics in the disk.
//!
//!     cargo run --release --example render_figure -- 6 comajors.svg

use comajor::build;
use comajor::render::{render_svg, ColorBy, RenderConfig, RenderItem};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_block: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let path = args.next().unwrap_or_else(|| "comajors.svg".into());
    let state = build(max_block, false)?;
    let items: Vec<RenderItem> = state.leaves().iter().map(RenderItem::from).collect();
    let cfg = RenderConfig {
        size_px: 1000,
        color_by: ColorBy::Block,
        ..RenderConfig::default()
    };
    std::fs::write(&path, render_svg(&items, &cfg))?;
    println!("wrote {} leaves to {path}", items.len());
    Ok(())
}
