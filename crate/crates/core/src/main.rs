use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use comajor::io::{prelamination_to_json, records_from_csv, records_from_json, records_to_csv, records_to_json};
use comajor::orbit::{classify_periodic, coperiodic_class};
use comajor::render::{render_svg, ColorBy, GeodesicStyle, RenderConfig, RenderItem};
use comajor::{build, build_prelamination, hyperbolic_prune, is_legal_pair, Angle, Chord, ComajorRecord, Error, PointType};

#[derive(Parser)]
#[command(name = "comajor", version, about = "Co-periodic comajors of cubic symmetric laminations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeFilter {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Straight,
    Arc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Color {
    Type,
    Block,
}

#[derive(clap::Args)]
struct Figure {
    #[arg(long, default_value_t = 800)]
    size: u32,
    #[arg(long, value_enum, default_value = "arc")]
    style: Style,
    #[arg(long, value_enum, default_value = "type")]
    color_by: Color,
}

impl Figure {
    fn config(&self) -> RenderConfig {
        RenderConfig {
            size_px: self.size,
            style: match self.style {
                Style::Straight => GeodesicStyle::Straight,
                Style::Arc => GeodesicStyle::Arc,
            },
            color_by: match self.color_by {
                Color::Type => ColorBy::Type,
                Color::Block => ColorBy::Block,
            },
            ..RenderConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build all co-periodic comajors up to a block period.
    Comajors {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_block: u32,
        #[arg(long = "type", value_enum, default_value = "both")]
        ptype: TypeFilter,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Certify every leaf with the legality oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        figure: Figure,
    },
    /// Decide whether the chord (A, B) is a legal pair.
    Check { a: Angle, b: Angle },
    /// Forward orbit of an angle under tripling.
    Orbit {
        x: Angle,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Finite-depth pullback lamination of a legal pair.
    Pullback {
        a: Angle,
        b: Angle,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Remove the short edges of the critical quadrilaterals and their pullbacks.
        #[arg(long)]
        prune: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        figure: Figure,
    },
    /// Draw comajors read from a JSON or CSV file, or freshly built.
    Render {
        /// JSON or CSV comajor list; builds up to --max-block when absent.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_block: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        figure: Figure,
    },
}

fn emit(text: &str, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn comajors_text(records: &[ComajorRecord], format: Format, figure: &Figure) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => records_to_json(records)? + "\n",
        Format::Csv => records_to_csv(records)?,
        Format::Svg => {
            let items: Vec<RenderItem> = records.iter().map(RenderItem::from).collect();
            render_svg(&items, &figure.config())
        }
    })
}

fn check(a: Angle, b: Angle) -> anyhow::Result<ExitCode> {
    let c = Chord::new(a, b);
    let verdict = match is_legal_pair(&c) {
        Ok(v) => v,
        Err(e @ Error::LengthClass { .. }) => {
            println!("{c}: Illegal ({e})");
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    if !verdict.is_legal() {
        println!("{c}: Illegal");
        println!("witness: {verdict}");
        println!("{}", serde_json::to_string(&verdict)?);
        return Ok(ExitCode::from(1));
    }
    println!("{c}: Legal");
    for (name, x) in [("a", c.a()), ("b", c.b())] {
        let info = x.orbit_info();
        println!("  {name} = {x}: preperiod {}, period {}", info.preperiod, info.period);
    }
    match coperiodic_class(&c) {
        Some(class) => println!("  co-periodic: type {}, block {}", class.ptype, class.block_period),
        None => println!("  not co-periodic"),
    }
    Ok(ExitCode::SUCCESS)
}

fn orbit(x: Angle, max_steps: usize) -> anyhow::Result<ExitCode> {
    let info = x.orbit_info();
    if info.preperiod + info.period > max_steps {
        bail!("orbit of {x} needs {} steps, more than --max-steps {max_steps}", info.preperiod + info.period);
    }
    let mut pts = vec![x.clone()];
    for _ in 1..info.preperiod + info.period {
        let next = pts.last().expect("nonempty").triple();
        pts.push(next);
    }
    println!("x = {x}");
    println!("preperiod {}, period {}", info.preperiod, info.period);
    let shown: Vec<String> = pts.iter().map(ToString::to_string).collect();
    println!("orbit: {}", shown.join(" -> "));
    let tail = &pts[info.preperiod];
    let class = classify_periodic(tail)?;
    println!("tail {tail}: type {}, block {}", class.ptype, class.block_period);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Comajors { max_block, ptype, format, verify, out, figure } => {
            let state = match build(max_block, verify) {
                Ok(s) => s,
                Err(e @ Error::VerificationFailed { .. }) => {
                    eprintln!("verification failed: {e}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
            };
            let wanted = |t: PointType| match ptype {
                TypeFilter::B => t == PointType::B,
                TypeFilter::D => t == PointType::D,
                TypeFilter::Both => true,
            };
            let records: Vec<ComajorRecord> = state.leaves().iter().filter(|r| wanted(r.ptype)).cloned().collect();
            emit(&comajors_text(&records, format, &figure)?, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { a, b } => check(a, b),
        Cmd::Orbit { x, max_steps } => orbit(x, max_steps),
        Cmd::Pullback { a, b, depth, prune, format, out, figure } => {
            let c = Chord::new(a, b);
            let result = if prune { hyperbolic_prune(&c, depth) } else { build_prelamination(&c, depth) };
            let lam = match result {
                Ok(l) => l,
                Err(e @ (Error::IllegalSeed { .. } | Error::LengthClass { .. } | Error::NotCoPeriodic(_))) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
            };
            let text = match format {
                Format::Json => prelamination_to_json(&lam)? + "\n",
                Format::Csv => {
                    let mut s = String::from("a,b,level\n");
                    for (ch, level) in lam.with_levels() {
                        s.push_str(&format!("{},{},{level}\n", ch.a(), ch.b()));
                    }
                    s
                }
                Format::Svg => {
                    let items: Vec<RenderItem> = lam.chords().map(RenderItem::from).collect();
                    render_svg(&items, &figure.config())
                }
            };
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Render { input, max_block, out, figure } => {
            let records = match input {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    if text.trim_start().starts_with('[') {
                        records_from_json(&text)?
                    } else {
                        records_from_csv(&text)?
                    }
                }
                None => build(max_block, false)?.leaves().to_vec(),
            };
            emit(&comajors_text(&records, Format::Svg, &figure)?, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
