//! Command-line front end. Machine output is JSON with rationals as `"p/q"`
//! strings; `--pretty` writes a copy annotated with decimals to stderr.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
//! error, 3 violated precondition or unsupported request.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactgeom::{parse_scalar, Hyperplane, Vector};
use crate::polyhedron::io::{format_hrep, format_vrep, parse_hrep, parse_vrep};
use crate::polyhedron::Polyhedron;
use crate::sectional::{
    certify_no_sectional_projections, corollary_counterexample, has_sectional_projection_at, hyperplane_json,
    perturbed_cross_polytope_with, polygon_sectional_projection, shadow_and_slice, shell_polytope, DEFAULT_ATTEMPTS,
};
use crate::trimming::{
    a_bounded_characterized, a_bounded_direct, classify_facets, fiber_set, halfspace_json, place_first, place_second,
    polyhedron_json, schedule,
};
use crate::Rat;

#[derive(Parser, Debug)]
#[command(name = "polytrim", version, about = "Exact trimming positions for unbounded convex polyhedra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Write the JSON artifact here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also print a decimal-annotated copy to stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, boundedness, vertices, rays, recession cone and facets.
    Analyze { input: PathBuf, #[command(flatten)] common: Common },
    /// Boundedness of the set of base points whose fiber misses `x_n = 0`.
    Fiber { input: PathBuf, #[command(flatten)] common: Common },
    /// Place a facet in first trimming position.
    PlaceFirst {
        input: PathBuf,
        #[arg(long)]
        facet: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Place a facet in second trimming position.
    PlaceSecond {
        input: PathBuf,
        #[arg(long)]
        facet: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Facet-elimination schedule.
    Schedule { input: PathBuf, #[command(flatten)] common: Common },
    /// Check a pair `--direction`/`--plane`, build one for a polygon, or with
    /// `--certify` decide existence for a 3-polytope.
    Sectional {
        input: PathBuf,
        #[arg(long)]
        certify: bool,
        /// Projection direction, e.g. "1 0 0".
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        /// Hyperplane `a0 a1 ... an` meaning `a0 + a.x = 0`.
        #[arg(long, allow_hyphen_values = true)]
        plane: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a perturbed octahedron without sectional projections and
    /// build the prism counterexample in R^4.
    CrossCounterexample {
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Convert between H- and V-representation text.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Auto)]
        to: Target,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// The representation the input is not in.
    Auto,
    Hrep,
    Vrep,
}

/// What a command produced.
pub struct Outcome {
    pub code: i32,
    pub artifact: Artifact,
}

pub enum Artifact {
    Json(Value),
    Text(String),
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::DimensionMismatch { .. } | Error::OutOfRange { .. } => 2,
        _ => 3,
    }
}

fn read_text(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn is_vrep(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .any(|l| matches!(l.split_whitespace().next(), Some("v" | "r" | "l")))
}

/// Parses either text format; H-representation unless generator lines occur.
pub fn read_polyhedron(path: &PathBuf) -> Result<Polyhedron, Error> {
    let text = read_text(path)?;
    if is_vrep(&text) {
        parse_vrep(&text)
    } else {
        parse_hrep(&text)
    }
}

fn parse_numbers(text: &str) -> Result<Vec<Rat>, Error> {
    text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).map(parse_scalar).collect()
}

fn strings(vs: &[Vector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| v.to_strings()).collect()
}

fn analyze(k: &Polyhedron) -> Result<Value, Error> {
    let mut v = json!({
        "dim": k.ambient_dim(),
        "empty": k.is_empty(),
    });
    if k.is_empty() {
        return Ok(v);
    }
    let cone = k.recession_cone()?;
    v["affine_dim"] = json!(k.dim());
    v["whole_space"] = json!(k.facets().is_empty() && k.equalities().is_empty());
    v["bounded"] = json!(k.is_bounded());
    v["degenerate"] = json!(k.is_degenerate());
    v["layer"] = json!(k.is_layer());
    v["vertices"] = json!(strings(k.vertices()));
    v["rays"] = json!(strings(k.rays()));
    v["lineality"] = json!(strings(k.lineality()));
    v["recession_cone"] = json!({
        "generators": strings(cone.generators()),
        "lineality": strings(cone.lineality()),
        "halfspaces": cone.halfspaces().iter().map(halfspace_json).collect::<Vec<_>>(),
    });
    v["facets"] = json!(k.facets().iter().map(halfspace_json).collect::<Vec<_>>());
    v["equalities"] = polyhedron_json(k)["equalities"].clone();
    if k.ambient_dim() == 3 && k.is_full_dimensional() && !k.is_degenerate() && !k.is_bounded() {
        v["facet_kinds"] = json!(classify_facets(k)?);
    }
    Ok(v)
}

fn fiber(k: &Polyhedron) -> Result<Outcome, Error> {
    let f = fiber_set(k)?;
    let direct = a_bounded_direct(k)?;
    let characterized = if !k.is_degenerate() && !k.is_bounded() {
        let (b, w) = a_bounded_characterized(k)?;
        json!({ "bounded": b, "witness": w.as_ref().map(hyperplane_json) })
    } else {
        json!({ "applies": false, "reason": "the characterization needs a non-degenerate unbounded polyhedron" })
    };
    let v = json!({
        "shadow": polyhedron_json(&f.shadow),
        "slice": polyhedron_json(&f.slice),
        "bounded_direct": direct,
        "characterized": characterized,
    });
    Ok(Outcome { code: if direct { 0 } else { 1 }, artifact: Artifact::Json(v) })
}

fn sectional(k: &Polyhedron, certify: bool, direction: Option<&str>, plane: Option<&str>) -> Result<Outcome, Error> {
    let n = k.ambient_dim();
    if let (Some(d), Some(p)) = (direction, plane) {
        let d = Vector::new(parse_numbers(d)?);
        let c = parse_numbers(p)?;
        Error::check_dim(n, d.dim())?;
        Error::check_dim(n + 1, c.len())?;
        let h = Hyperplane::new(c[0].clone(), Vector::new(c[1..].to_vec()))?;
        let (shadow, slice) = shadow_and_slice(k, &d, &h)?;
        let ok = has_sectional_projection_at(k, &d, &h)?;
        let v = json!({
            "direction": d.to_strings(),
            "hyperplane": hyperplane_json(&h),
            "shadow": polyhedron_json(&shadow),
            "slice": polyhedron_json(&slice),
            "sectional": ok,
        });
        return Ok(Outcome { code: if ok { 0 } else { 1 }, artifact: Artifact::Json(v) });
    }
    if direction.is_some() || plane.is_some() {
        return Err(Error::Parse("--direction and --plane must be given together".into()));
    }
    if certify {
        let r = certify_no_sectional_projections(k)?;
        let code = if r.is_none_certified() { 0 } else { 1 };
        return Ok(Outcome { code, artifact: Artifact::Json(r.to_json()) });
    }
    if n == 2 {
        let (d, h) = polygon_sectional_projection(k)?;
        let v = json!({ "direction": d.to_strings(), "hyperplane": hyperplane_json(&h), "sectional": true });
        return Ok(Outcome { code: 0, artifact: Artifact::Json(v) });
    }
    Err(Error::pre("outside the plane, give --direction and --plane to check a pair, or --certify"))
}

fn cross_counterexample(seed: u64, attempts: usize) -> Result<Outcome, Error> {
    let (search, base) = match perturbed_cross_polytope_with(seed, attempts) {
        Ok(c) => (json!({ "outcome": "certified", "attempt": c.attempt }), c),
        Err(Error::IterationCap(cap)) => {
            let base = shell_polytope(seed, 10, attempts)?;
            let note = "no perturbed octahedron within the cap was free of sectional projections; \
                        the base polytope below comes from the shell-sample family instead";
            (json!({ "outcome": "iteration-cap", "attempts": cap, "note": note }), base)
        }
        Err(e) => return Err(e),
    };
    let cert = corollary_counterexample(&base.polyhedron, &base.report, seed)?;
    let code = if cert.all_candidates_fail() { 0 } else { 1 };
    let v = json!({
        "seed": seed,
        "perturbation_search": search,
        "base": base.to_json(),
        "corollary": cert.to_json(),
    });
    Ok(Outcome { code, artifact: Artifact::Json(v) })
}

fn convert(path: &PathBuf, to: Target) -> Result<Outcome, Error> {
    let text = read_text(path)?;
    let from_v = is_vrep(&text);
    let k: Polyhedron = if from_v { parse_vrep(&text)? } else { parse_hrep(&text)? };
    let to_v = match to {
        Target::Auto => !from_v,
        Target::Hrep => false,
        Target::Vrep => true,
    };
    if to_v && k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let out = if to_v { format_vrep(&k) } else { format_hrep(&k) };
    Ok(Outcome { code: 0, artifact: Artifact::Text(out) })
}

/// Runs one command without touching stdout.
pub fn run(cmd: &Command) -> Result<Outcome, Error> {
    let json_ok = |v: Value| Outcome { code: 0, artifact: Artifact::Json(v) };
    match cmd {
        Command::Analyze { input, .. } => Ok(json_ok(analyze(&read_polyhedron(input)?)?)),
        Command::Fiber { input, .. } => fiber(&read_polyhedron(input)?),
        Command::PlaceFirst { input, facet, .. } | Command::PlaceSecond { input, facet, .. } => {
            let k = read_polyhedron(input)?;
            let cert = if matches!(cmd, Command::PlaceFirst { .. }) { place_first(&k, *facet)? } else { place_second(&k, *facet)? };
            let mut v = cert.to_json();
            v["input"] = polyhedron_json(&k);
            Ok(Outcome { code: if cert.checks.all() { 0 } else { 1 }, artifact: Artifact::Json(v) })
        }
        Command::Schedule { input, .. } => {
            let s = schedule(&read_polyhedron(input)?)?;
            let code = if s.verify()? { 0 } else { 1 };
            Ok(Outcome { code, artifact: Artifact::Json(s.to_json()) })
        }
        Command::Sectional { input, certify, direction, plane, .. } => {
            sectional(&read_polyhedron(input)?, *certify, direction.as_deref(), plane.as_deref())
        }
        Command::CrossCounterexample { attempts, common } => cross_counterexample(common.seed, *attempts),
        Command::Convert { input, to, .. } => convert(input, *to),
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Analyze { common, .. }
        | Command::Fiber { common, .. }
        | Command::PlaceFirst { common, .. }
        | Command::PlaceSecond { common, .. }
        | Command::Schedule { common, .. }
        | Command::Sectional { common, .. }
        | Command::CrossCounterexample { common, .. }
        | Command::Convert { common, .. } => common,
    }
}

/// Adds `≈decimal` next to every rational string.
fn with_decimals(v: &Value) -> Value {
    match v {
        Value::String(s) => match parse_scalar::<Rat>(s) {
            Ok(r) if s.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/') => {
                let approx = num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::NAN);
                Value::String(format!("{s} (≈{approx:.6})"))
            }
            _ => v.clone(),
        },
        Value::Array(a) => Value::Array(a.iter().map(with_decimals).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, x)| (k.clone(), with_decimals(x))).collect()),
        _ => v.clone(),
    }
}

pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let opts = common(&cli.command).clone();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let body = match &outcome.artifact {
        Artifact::Json(v) => {
            if opts.pretty {
                eprintln!("{}", serde_json::to_string_pretty(&with_decimals(v)).expect("json"));
            }
            serde_json::to_string_pretty(v).expect("json") + "\n"
        }
        Artifact::Text(t) => t.clone(),
    };
    match &opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{body}"),
    }
    outcome.code
}
