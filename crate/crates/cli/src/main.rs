use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use pyrito_core::coxeter::{diagram, DiagramName};
use pyrito_core::export::{json_precision, read_json, write_json, write_json_records, write_obj, write_off, ExportRecord};
use pyrito_core::lattice::{lattice_basis, member, shell, wigner_seitz, LatticeKind, Point};
use pyrito_core::polyhedra::{
    fibonacci_family, hull_faces, polar_dual, pseudoicosahedron, pseudoicosidodecahedron, pyritohedron, A1Policy,
    Polyhedron,
};
use pyrito_core::qgroups::{point_group, GroupName};
use pyrito_core::verify;
use pyrito_core::FieldScalar;

/// Exact quaternionic constructions of cubic Coxeter groups, lattices and
/// the pseudoicosahedron / pyritohedron families.
#[derive(Parser)]
#[command(name = "pyrito", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Off,
    Obj,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Order or element list of a named point group.
    Group {
        name: GroupName,
        #[arg(long, conflicts_with = "list")]
        order: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orbit of a weight under a Weyl group or a named point group.
    Orbit {
        #[arg(long)]
        diagram: DiagramName,
        /// Dynkin coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coords: Vec<FieldScalar>,
        #[arg(long, default_value = "1")]
        scale: FieldScalar,
        /// Use this point group instead of the Weyl group (rank 3 only).
        #[arg(long)]
        group: Option<GroupName>,
        #[command(flatten)]
        output: Output,
    },
    /// Lattice membership, shells, Wigner–Seitz cells and bases.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Members of the pseudoicosahedron and pyritohedron families.
    Poly {
        #[command(subcommand)]
        solid: Solid,
    },
    /// Fibonacci pseudoicosahedra x_n = F(n+1)/F(n) for n = 1..N.
    Fib {
        #[arg(long = "n", value_name = "N")]
        n_max: u32,
        /// Use a1 = 1 instead of clearing denominators.
        #[arg(long)]
        unit: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Replay every named identity check.
    Verify {
        #[arg(long)]
        json: bool,
        /// Only the checks belonging to one acceptance criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Subcommand)]
enum LatticeAction {
    /// Prints `true` or `false`.
    Member {
        #[arg(long)]
        kind: LatticeKind,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<BigRational>,
    },
    /// Points of squared length exactly NORM2.
    Shell {
        #[arg(long)]
        kind: LatticeKind,
        #[arg(long, allow_hyphen_values = true)]
        norm2: BigRational,
        #[command(flatten)]
        output: Output,
    },
    Ws {
        #[arg(long)]
        kind: LatticeKind,
        #[command(flatten)]
        output: Output,
    },
    Basis {
        #[arg(long)]
        kind: LatticeKind,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum Solid {
    Pseudoicosa {
        #[arg(long, allow_hyphen_values = true)]
        x: FieldScalar,
        #[arg(long, default_value = "1")]
        a1: FieldScalar,
        #[command(flatten)]
        output: Output,
    },
    Pyrito {
        #[arg(long, allow_hyphen_values = true)]
        h: FieldScalar,
        #[arg(long, default_value = "1")]
        a1: FieldScalar,
        #[command(flatten)]
        output: Output,
    },
    /// Polar dual of a solid read from a JSON export.
    Dual {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    Icosidodeca {
        #[arg(long, allow_hyphen_values = true)]
        x: FieldScalar,
        #[arg(long, default_value = "1")]
        a1: FieldScalar,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<pyrito_core::Error> for Failure {
    fn from(e: pyrito_core::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn emit(output: &Output, bytes: &[u8]) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn warn_degenerate(poly: &Polyhedron) {
    if let Some(note) = &poly.degenerate {
        eprintln!("warning: degenerate input: {note}");
    }
}

fn emit_polyhedron(output: &Output, poly: &Polyhedron, source: String) -> Outcome {
    warn_degenerate(poly);
    let mut buf = Vec::new();
    match output.format {
        Format::Json => write_json(&mut buf, &ExportRecord::from_polyhedron(poly, source, json_precision()))?,
        Format::Off => write_off(&mut buf, poly)?,
        Format::Obj => write_obj(&mut buf, poly)?,
    }
    Ok(emit(output, &buf)?)
}

/// JSON lists the points; mesh formats hull them first.
fn emit_points(output: &Output, points: &[Vec<FieldScalar>], source: String, name: &str) -> Outcome {
    if output.format == Format::Json {
        let mut buf = Vec::new();
        write_json(&mut buf, &ExportRecord::from_points(points, source.clone(), name, json_precision()))?;
        return Ok(emit(output, &buf)?);
    }
    if points.iter().any(|p| p.len() != 3) {
        return Err(Failure::Usage("rank-2 point sets export as json only".into()));
    }
    let quats: Vec<_> = points
        .iter()
        .map(|p| pyrito_core::Quaternion::pure(p[0].clone(), p[1].clone(), p[2].clone()))
        .collect();
    emit_polyhedron(output, &hull_faces(&quats)?, source)
}

fn rational_points(points: &[Point]) -> Vec<Vec<FieldScalar>> {
    points.iter().map(|p| p.iter().cloned().map(FieldScalar::from_rational).collect()).collect()
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn run_group(name: GroupName, list: bool, json: bool) -> Outcome {
    let group = point_group(name);
    let text = match (list, json) {
        (false, false) => format!("{}\n", group.order()),
        (false, true) => format!("{}\n", serde_json::json!({ "group": name.label(), "order": group.order() })),
        (true, false) => group.elements().iter().map(|g| format!("{g}\n")).collect(),
        (true, true) => {
            let elements: Vec<String> = group.elements().iter().map(ToString::to_string).collect();
            let value = serde_json::json!({ "group": name.label(), "order": group.order(), "elements": elements });
            format!("{}\n", serde_json::to_string_pretty(&value).map_err(anyhow::Error::from)?)
        }
    };
    io::stdout().write_all(text.as_bytes()).map_err(anyhow::Error::from)?;
    Ok(())
}

fn run_orbit(name: DiagramName, coords: &[FieldScalar], scale: &FieldScalar, group: Option<GroupName>, output: &Output) -> Outcome {
    let d = diagram(name);
    if coords.len() != name.rank() {
        return Err(Failure::Usage(format!("{name} needs {} coordinates, got {}", name.rank(), coords.len())));
    }
    let orbit = match group {
        Some(g) if name.rank() == 3 => d.orbit_under(&point_group(g), coords, scale)?,
        Some(_) => return Err(Failure::Usage("--group applies to rank-3 diagrams only".into())),
        None => d.orbit(coords, scale)?,
    };
    let mut source = format!("orbit --diagram {name} --coords {} --scale {scale}", joined(coords));
    if let Some(g) = group {
        source.push_str(&format!(" --group {g}"));
    }
    let label = format!("({}){name}", joined(coords));
    emit_points(output, &orbit.points, source, &label)
}

fn run_lattice(action: &LatticeAction) -> Outcome {
    match action {
        LatticeAction::Member { kind, point } => {
            if point.len() != kind.rank() {
                return Err(Failure::Usage(format!("{kind} needs {} coordinates, got {}", kind.rank(), point.len())));
            }
            println!("{}", member(*kind, point));
            Ok(())
        }
        LatticeAction::Shell { kind, norm2, output } => {
            let points = shell(*kind, norm2)?;
            let source = format!("lattice shell --kind {kind} --norm2 {norm2}");
            emit_points(output, &rational_points(&points), source, &format!("{kind} shell {norm2}"))
        }
        LatticeAction::Ws { kind, output } => {
            let cell = wigner_seitz(*kind);
            let source = format!("lattice ws --kind {kind}");
            match &cell.polyhedron {
                Some(poly) => emit_polyhedron(output, poly, source),
                None => emit_points(output, &rational_points(&cell.vertices), source, &format!("{kind} cell")),
            }
        }
        LatticeAction::Basis { kind, output } => {
            if output.format != Format::Json {
                return Err(Failure::Usage("a basis exports as json only".into()));
            }
            let source = format!("lattice basis --kind {kind}");
            emit_points(output, &rational_points(&lattice_basis(*kind)), source, &format!("{kind} basis"))
        }
    }
}

fn run_poly(solid: &Solid) -> Outcome {
    match solid {
        Solid::Pseudoicosa { x, a1, output } => {
            let poly = pseudoicosahedron(x, a1)?;
            emit_polyhedron(output, &poly, format!("poly pseudoicosa --x {x} --a1 {a1}"))
        }
        Solid::Pyrito { h, a1, output } => {
            let poly = pyritohedron(h, a1)?;
            emit_polyhedron(output, &poly, format!("poly pyrito --h {h} --a1 {a1}"))
        }
        Solid::Icosidodeca { x, a1, output } => {
            let poly = pseudoicosidodecahedron(x, a1)?;
            emit_polyhedron(output, &poly, format!("poly icosidodeca --x {x} --a1 {a1}"))
        }
        Solid::Dual { input, output } => {
            let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let record = read_json(&text)?;
            let poly = hull_faces(&record.exact_quaternions()?)?;
            let dual = polar_dual(&poly)?;
            emit_polyhedron(output, &dual, format!("poly dual of [{}]", record.source))
        }
    }
}

/// JSON carries every member; mesh formats carry the last one.
fn run_fib(n_max: u32, unit: bool, output: &Output) -> Outcome {
    if n_max == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let policy = if unit { A1Policy::Unit } else { A1Policy::ClearDenominators };
    let family = fibonacci_family(n_max, policy)?;
    let source = |n: u32, x: &BigRational, a1: &BigRational| format!("fib n={n} x={x} a1={a1}");
    if output.format == Format::Json {
        let records: Vec<ExportRecord> = family
            .iter()
            .map(|m| ExportRecord::from_polyhedron(&m.poly, source(m.n, &m.x, &m.a1), json_precision()))
            .collect();
        family.iter().for_each(|m| warn_degenerate(&m.poly));
        let mut buf = Vec::new();
        write_json_records(&mut buf, &records)?;
        return Ok(emit(output, &buf)?);
    }
    let last = family.last().ok_or_else(|| anyhow!("empty family"))?;
    emit_polyhedron(output, &last.poly, source(last.n, &last.x, &last.a1))
}

fn run_verify(json: bool, criterion: Option<u8>) -> Outcome {
    let report = match criterion {
        Some(c) if (1..=10).contains(&c) => verify::run_criterion(c),
        Some(c) => return Err(Failure::Usage(format!("criterion must lie in 1..=10, got {c}"))),
        None => verify::run(),
    };
    let mut out = io::stdout().lock();
    if json {
        let text = serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)?;
        writeln!(out, "{text}").map_err(anyhow::Error::from)?;
    } else {
        for c in &report.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{status} [{:>2}] {}: {}", c.criterion, c.name, c.detail).map_err(anyhow::Error::from)?;
        }
        let failed = report.failures().count();
        writeln!(out, "{} checks executed, {} passed, {failed} failed", report.executed(), report.executed() - failed)
            .map_err(anyhow::Error::from)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Domain(anyhow!("{} checks failed", report.failures().count())))
    }
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Group { name, list, json, .. } => run_group(name, list, json),
        Command::Orbit { diagram, coords, scale, group, output } => run_orbit(diagram, &coords, &scale, group, &output),
        Command::Lattice { action } => run_lattice(&action),
        Command::Poly { solid } => run_poly(&solid),
        Command::Fib { n_max, unit, output } => run_fib(n_max, unit, &output),
        Command::Verify { json, criterion } => run_verify(json, criterion),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
