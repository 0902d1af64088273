//! SVG drawings of chord sets in the unit disk.
//!
//! Angle `t` sits at `2πt` counter-clockwise from the positive x-axis. Chords
//! are drawn either as straight segments or as hyperbolic geodesics: circular
//! arcs meeting the boundary circle at right angles.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chord::Chord;
use crate::lavaurs::ComajorRecord;
use crate::orbit::PointType;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeodesicStyle {
    Straight,
    #[default]
    Arc,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorBy {
    #[default]
    Type,
    Block,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderConfig {
    pub size_px: u32,
    pub style: GeodesicStyle,
    pub color_by: ColorBy,
    pub background: String,
    pub circle_color: String,
    pub circle_width: f64,
    pub leaf_width: f64,
    pub type_b_color: String,
    pub type_d_color: String,
    /// Cycled through by block period.
    pub block_palette: Vec<String>,
    pub plain_color: String,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            size_px: 800,
            style: GeodesicStyle::Arc,
            color_by: ColorBy::Type,
            background: "#ffffff".into(),
            circle_color: "#000000".into(),
            circle_width: 1.5,
            leaf_width: 0.8,
            type_b_color: "#c0392b".into(),
            type_d_color: "#2c5aa0".into(),
            block_palette: ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"]
                .map(String::from)
                .to_vec(),
            plain_color: "#333333".into(),
        }
    }
}

/// A chord with optional comajor metadata used for styling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderItem {
    pub chord: Chord,
    pub ptype: Option<PointType>,
    pub block: Option<u32>,
}

impl From<&ComajorRecord> for RenderItem {
    fn from(r: &ComajorRecord) -> Self {
        RenderItem {
            chord: r.chord.clone(),
            ptype: Some(r.ptype),
            block: Some(r.block_period),
        }
    }
}

impl From<&Chord> for RenderItem {
    fn from(c: &Chord) -> Self {
        RenderItem {
            chord: c.clone(),
            ptype: None,
            block: None,
        }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.12}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000000000000".to_string()
    } else {
        s
    }
}

struct Frame {
    cx: f64,
    cy: f64,
    r: f64,
}

impl Frame {
    fn at(&self, turns: f64, dist: f64) -> (f64, f64) {
        let th = 2.0 * PI * turns;
        (self.cx + dist * self.r * th.cos(), self.cy - dist * self.r * th.sin())
    }
}

fn path_data(ch: &Chord, frame: &Frame, style: GeodesicStyle) -> String {
    let p1 = frame.at(ch.a().to_f64(), 1.0);
    let p2 = frame.at(ch.b().to_f64(), 1.0);
    let straight = || format!("M {} {} L {} {}", num(p1.0), num(p1.1), num(p2.0), num(p2.1));
    if style == GeodesicStyle::Straight || ch.is_degenerate() {
        return straight();
    }
    let Some((s, e)) = ch.shorter_arc() else {
        return straight();
    };
    let span = s.arc_to(&e).to_f64();
    let half = PI * span;
    let radius = frame.r * half.tan();
    // the geodesic's midpoint, on the ray through the middle of the short arc
    let m = frame.at(s.to_f64() + span / 2.0, 1.0 / half.cos() - half.tan());
    let cross = (m.0 - p1.0) * (p2.1 - m.1) - (m.1 - p1.1) * (p2.0 - m.0);
    let sweep = u8::from(cross > 0.0);
    format!(
        "M {} {} A {} {} 0 0 {} {} {}",
        num(p1.0),
        num(p1.1),
        num(radius),
        num(radius),
        sweep,
        num(p2.0),
        num(p2.1)
    )
}

fn class_of(item: &RenderItem, by: ColorBy) -> String {
    match (by, item.ptype, item.block) {
        (ColorBy::Type, Some(t), _) => format!("leaf type-{t}"),
        (ColorBy::Block, _, Some(b)) => format!("leaf block-{b}"),
        _ => "leaf".to_string(),
    }
}

/// One `<path>` per item, in the given order, over the boundary circle.
pub fn render_svg(items: &[RenderItem], cfg: &RenderConfig) -> String {
    let size = cfg.size_px as f64;
    let frame = Frame {
        cx: size / 2.0,
        cy: size / 2.0,
        r: size / 2.0 * 0.96,
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        cfg.size_px
    );
    let _ = writeln!(out, "<style>");
    let _ = writeln!(
        out,
        ".leaf {{ fill: none; stroke: {}; stroke-width: {}; }}",
        cfg.plain_color, cfg.leaf_width
    );
    match cfg.color_by {
        ColorBy::Type => {
            let _ = writeln!(out, ".type-B {{ stroke: {}; }}", cfg.type_b_color);
            let _ = writeln!(out, ".type-D {{ stroke: {}; }}", cfg.type_d_color);
        }
        ColorBy::Block => {
            let blocks: BTreeSet<u32> = items.iter().filter_map(|i| i.block).collect();
            for b in blocks {
                if !cfg.block_palette.is_empty() {
                    let color = &cfg.block_palette[(b as usize - 1) % cfg.block_palette.len()];
                    let _ = writeln!(out, ".block-{b} {{ stroke: {color}; }}");
                }
            }
        }
    }
    let _ = writeln!(out, "</style>");
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{0}" height="{0}" fill="{1}"/>"#,
        cfg.size_px, cfg.background
    );
    let _ = writeln!(
        out,
        r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        num(frame.cx),
        num(frame.cy),
        num(frame.r),
        cfg.circle_color,
        cfg.circle_width
    );
    for item in items {
        let _ = writeln!(
            out,
            r#"<path class="{}" d="{}"/>"#,
            class_of(item, cfg.color_by),
            path_data(&item.chord, &frame, cfg.style)
        );
    }
    out.push_str("</svg>\n");
    out
}
