use std::error::Error;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fap::acgraph::{ac_upper_bound, bounds_table, extract_red_graph, select_red_subset, Status, Variant};
use fap::angles::{partition_noncrossing, select_noncrossing};
use fap::construct::{
    collinear_construction, diametric_construction, grid_construction, large_angle_construction,
    small_angle_bend_construction, thresholds, CollinearStyle,
};
use fap::io::{parse_ac_drawing, parse_drawing_with, parse_points, parse_segments, DrawingDocument};
use fap::kernel::{Drawing, DEFAULT_TOLERANCE};
use fap::solve::{arc_blocking_threshold, max_plane_graph, Family};
use fap::svg::{render_svg, SvgOptions};
use fap::validate::{find_lenses, validate_drawing, Mode};
use fap::AngleSpec;

/// Plane multigraphs with fixed-angle one-bend and circular-arc edges.
#[derive(Debug, Parser)]
#[command(name = "fap", version)]
struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AngleArg {
    /// `q/p pi` (e.g. `1/3pi`) or `rad:<x>` together with --irrational.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Declares a `rad:` angle to be an irrational multiple of pi.
    #[arg(long)]
    irrational: bool,
}

impl AngleArg {
    fn spec(&self) -> Result<AngleSpec, fap::AngleError> {
        AngleSpec::parse(&self.alpha, self.irrational)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a drawing with one of the known constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write the drawing document to this file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Maximum plane (multi)graph on a point set by exact search.
    Solve {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "simple")]
        mode: ModeArg,
        #[command(flatten)]
        angle: AngleArg,
        /// Bend points per pair and side for the bend family.
        #[arg(long, default_value_t = 3)]
        k: usize,
        points: PathBuf,
    },
    /// Check planarity and multiplicity of a drawing.
    Validate {
        #[arg(long, value_enum, default_value = "multigraph")]
        mode: ModeArg,
        drawing: PathBuf,
    },
    /// Lenses of a plane multigraph and their nesting.
    Lenses { drawing: PathBuf },
    /// Known edge bounds for n points and angle α.
    Bounds {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        angle: AngleArg,
    },
    /// Edge bound for fixed-angle-crossing drawings.
    AcBound {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        angle: AngleArg,
        #[arg(long, value_enum, default_value = "theorem-ac")]
        variant: VariantArg,
    },
    /// A pairwise noncrossing subset of a segment set.
    SegmentsSelect {
        #[command(flatten)]
        angle: AngleArg,
        segments: PathBuf,
    },
    /// At most three noncrossing classes covering a segment set.
    SegmentsPartition {
        #[command(flatten)]
        angle: AngleArg,
        segments: PathBuf,
    },
    /// Red multigraph of a fixed-angle-crossing drawing.
    RedGraph {
        /// Also select a plane sub-multigraph.
        #[arg(long)]
        select: bool,
        drawing: PathBuf,
    },
    /// Render a drawing as SVG.
    Render {
        drawing: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 480.0)]
        size: f64,
    },
    /// Angle thresholds of a point set.
    Thresholds {
        /// Also search the angle below which every arc is blocked.
        #[arg(long)]
        blocking: bool,
        points: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// n collinear points.
    Collinear {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        angle: AngleArg,
        #[arg(long, value_enum)]
        style: StyleArg,
    },
    /// Bend multigraph for small angles.
    SmallAngle {
        #[command(flatten)]
        angle: AngleArg,
        points: PathBuf,
    },
    /// Bend graph around a diametric pair.
    Diametric {
        #[command(flatten)]
        angle: AngleArg,
        points: PathBuf,
    },
    /// Arc graph on the Delaunay triangulation.
    LargeAngle {
        #[command(flatten)]
        angle: AngleArg,
        /// Two arcs per Delaunay edge.
        #[arg(long)]
        multi: bool,
        points: PathBuf,
    },
    /// Doubled triangular grid with m rows.
    Grid {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        angle: AngleArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StyleArg {
    ArcSimple,
    ArcMulti,
    BendSimple,
    BendMulti,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Arc,
    Bend,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Simple,
    Multigraph,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    TheoremAc,
    LemmaAc,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Simple => Mode::Simple,
            ModeArg::Multigraph => Mode::Multigraph,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

type Res = Result<ExitCode, Box<dyn Error>>;

fn read_input(path: &PathBuf) -> Result<Vec<u8>, Box<dyn Error>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// Default tolerance, overridden by `FAP_TOLERANCE`.
fn tolerance() -> Result<f64, Usage> {
    match std::env::var("FAP_TOLERANCE") {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(Usage(format!("FAP_TOLERANCE must be a positive number, got {s:?}"))),
        },
    }
}

fn read_drawing(path: &PathBuf) -> Result<Drawing, Box<dyn Error>> {
    Ok(parse_drawing_with(&read_input(path)?, tolerance()?)?)
}

fn angle(a: &AngleArg) -> Result<AngleSpec, Usage> {
    a.spec().map_err(|e| Usage(format!("--alpha: {e}")))
}

fn emit(json: bool, value: &Value, human: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string(value).expect("values serialize"));
    } else {
        println!("{}", human());
    }
}

fn drawing_value(d: &Drawing) -> Value {
    serde_json::to_value(DrawingDocument::from_drawing(d)).expect("documents serialize")
}

fn construct(kind: &ConstructKind) -> Result<(String, Drawing), Box<dyn Error>> {
    Ok(match kind {
        ConstructKind::Collinear { n, angle: a, style } => {
            let style = match style {
                StyleArg::ArcSimple => CollinearStyle::ArcSimple,
                StyleArg::ArcMulti => CollinearStyle::ArcMulti,
                StyleArg::BendSimple => CollinearStyle::BendSimple,
                StyleArg::BendMulti => CollinearStyle::BendMulti,
            };
            ("collinear".into(), collinear_construction(*n, angle(a)?, style)?)
        }
        ConstructKind::SmallAngle { angle: a, points } => {
            ("small-angle".into(), small_angle_bend_construction(&parse_points(&read_input(points)?)?, angle(a)?)?)
        }
        ConstructKind::Diametric { angle: a, points } => {
            ("diametric".into(), diametric_construction(&parse_points(&read_input(points)?)?, angle(a)?)?)
        }
        ConstructKind::LargeAngle { angle: a, multi, points } => {
            ("large-angle".into(), large_angle_construction(&parse_points(&read_input(points)?)?, angle(a)?, *multi)?)
        }
        ConstructKind::Grid { m, angle: a } => ("grid".into(), grid_construction(*m, angle(a)?)?),
    })
}

fn run(cli: Cli) -> Res {
    let json = cli.json;
    match &cli.command {
        Command::Construct { kind, out } => {
            let (name, d) = construct(kind)?;
            if let Some(path) = out {
                std::fs::write(path, fap::io::serialize_drawing(&d))?;
            }
            emit(json, &drawing_value(&d), || {
                format!("{name}: {} vertices, {} edges, alpha = {}", d.n(), d.edges.len(), d.alpha)
            });
        }
        Command::Solve { family, mode, angle: a, k, points } => {
            let pts = parse_points(&read_input(points)?)?;
            let family = match family {
                FamilyArg::Arc => Family::Arc,
                FamilyArg::Bend => Family::Bend,
            };
            let r = max_plane_graph(&pts, angle(a)?, family, (*mode).into(), *k)?;
            let v = json!({"count": r.count, "exact": r.exact, "witness": drawing_value(&r.witness)});
            emit(json, &v, || r.count.to_string());
        }
        Command::Validate { mode, drawing } => {
            let d = read_drawing(drawing)?;
            let report = validate_drawing(&d, (*mode).into());
            emit(json, &serde_json::to_value(&report)?, || {
                if report.valid {
                    format!("valid ({} edges)", d.edges.len())
                } else {
                    format!(
                        "invalid: {} edge errors, {} crossings, {} overlaps, {} multiplicity violations",
                        report.edge_errors.len(),
                        report.crossing_pairs.len(),
                        report.overlap_pairs.len(),
                        report.multiplicity_violations.len()
                    )
                }
            });
            if !report.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Lenses { drawing } => {
            let forest = find_lenses(&read_drawing(drawing)?)?;
            let empty = forest.lenses.iter().filter(|l| l.empty).count();
            let mut v = serde_json::to_value(&forest)?;
            v["depth"] = json!(forest.depth());
            emit(json, &v, || format!("{} lenses, {empty} empty, depth {}", forest.lenses.len(), forest.depth()));
        }
        Command::Bounds { n, angle: a } => {
            let alpha = angle(a)?;
            if *n < 3 {
                return Err(Usage("--n must be at least 3".into()).into());
            }
            let table = bounds_table(*n, alpha);
            let mut v = serde_json::to_value(&table)?;
            let mut ac = None;
            if alpha.cmp_frac_pi(1, 2).is_le() {
                let th = ac_upper_bound(*n, alpha, Variant::TheoremAc)?;
                let le = ac_upper_bound(*n, alpha, Variant::LemmaAc)?;
                v["ac"] = json!({"theorem_ac": th, "lemma_ac": le});
                ac = Some(th);
            }
            emit(json, &v, || {
                let mut s = String::new();
                for r in &table.rows {
                    let status = if r.status == Status::Tight { "tight" } else { "gap" };
                    s += &format!("{:<10} {} .. {} ({status})\n", r.quantity, r.lower, r.upper);
                }
                if let Some(th) = &ac {
                    s += &format!("ac edges   <= {} (floor {})\n", th.value, th.floor);
                }
                for note in &table.notes {
                    s += &format!("note: {note}\n");
                }
                s.trim_end().to_string()
            });
        }
        Command::AcBound { n, angle: a, variant } => {
            let variant = match variant {
                VariantArg::TheoremAc => Variant::TheoremAc,
                VariantArg::LemmaAc => Variant::LemmaAc,
            };
            let b = ac_upper_bound(*n, angle(a)?, variant)?;
            emit(json, &serde_json::to_value(&b)?, || match &b.note {
                Some(note) => format!("{} (floor {})\nnote: {note}", b.value, b.floor),
                None => format!("{} (floor {})", b.value, b.floor),
            });
        }
        Command::SegmentsSelect { angle: a, segments } => {
            let set = parse_segments(&read_input(segments)?)?;
            let kept = select_noncrossing(&set, angle(a)?)?;
            let v = json!({"selected": kept, "total": set.segments.len()});
            emit(json, &v, || format!("{} of {} segments: {kept:?}", kept.len(), set.segments.len()));
        }
        Command::SegmentsPartition { angle: a, segments } => {
            let set = parse_segments(&read_input(segments)?)?;
            let classes = partition_noncrossing(&set, angle(a)?)?;
            let v = json!({"classes": classes, "total": set.segments.len()});
            emit(json, &v, || format!("{} classes: {classes:?}", classes.len()));
        }
        Command::RedGraph { select, drawing } => {
            let d = parse_ac_drawing(&read_input(drawing)?)?;
            let red = extract_red_graph(&d)?;
            let mut v = serde_json::to_value(&red)?;
            let mut summary =
                format!("{} red edges ({} in tier 1)", red.edges.len(), red.count(fap::acgraph::Tier::Gamma1));
            if *select {
                let sel = select_red_subset(&red, d.alpha)?;
                v["selection"] = json!({
                    "kept": sel.kept,
                    "ratio": [sel.ratio.0, sel.ratio.1],
                    "alpha_layer": drawing_value(&sel.layers[0]),
                    "supplement_layer": drawing_value(&sel.layers[1]),
                });
                summary += &format!(
                    ", kept {} (ratio {}/{}): {} alpha-bend, {} supplementary",
                    sel.kept.len(),
                    sel.ratio.0,
                    sel.ratio.1,
                    sel.layers[0].edges.len(),
                    sel.layers[1].edges.len()
                );
            }
            emit(json, &v, || summary);
        }
        Command::Render { drawing, out, size } => {
            let svg = render_svg(&read_drawing(drawing)?, &SvgOptions { size: *size, ..SvgOptions::default() })?;
            match out {
                Some(path) => std::fs::write(path, svg)?,
                None => print!("{svg}"),
            }
        }
        Command::Thresholds { blocking, points } => {
            let pts = parse_points(&read_input(points)?)?;
            let t = thresholds(&pts)?;
            let mut v = serde_json::to_value(t)?;
            let star = if *blocking { Some(arc_blocking_threshold(&pts)?) } else { None };
            if let Some(s) = star {
                v["alpha_star"] = json!(s);
            }
            emit(json, &v, || {
                let mut s =
                    format!("alpha0_bend = {}\nalpha1 = {:?}\nalpha2 = {:?}", t.alpha0_bend, t.alpha1, t.alpha2);
                if let Some(a) = star {
                    s += &format!("\nalpha_star = {a}");
                }
                s
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
