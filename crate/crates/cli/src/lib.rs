//! Command-line front end. All verdicts come from `sdmap`; this layer only
//! parses arguments, loads maps and formats reports.
//!
//! Exit codes: 0 the property holds, 1 it fails, 2 usage or I/O error,
//! 3 search budget exceeded.

use std::fs;
use std::io::Read as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sdmap::antipodality::{corner_counts, odd_edge_obstruction, AntipodalVerdict};
use sdmap::derived::{Derivation as Kind, DerivedMap};
use sdmap::duality::{dualities_among, DualityWitness};
use sdmap::families::{self, Corner};
use sdmap::io::{derived_to_dot, to_dot, MapDocument};
use sdmap::map::CombinatorialMap;
use sdmap::morphism::{MapMorphism, Orientations};
use sdmap::symmetry::{antipodal_symmetry_among, theorem_ant1_report_up_to, SymmetryError, DEFAULT_BUDGET};
use sdmap::{dual, incidence, is_antipodally_self_dual, medial, square};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sdmap", version, about = "Self-dual and antipodally self-dual maps on the sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Derivation {
    Dual,
    Medial,
    Incidence,
    Square,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Property {
    SelfDual,
    Strong,
    Antipodal,
    Obstruction,
    SymmetricCycles,
    AntipodalSymmetric,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Wheel,
    Ear,
    Pancake,
    Fixture,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum OutFormat {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum OrientationArg {
    #[default]
    Both,
    Preserving,
    Reversing,
}

impl From<OrientationArg> for Orientations {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Both => Orientations::Both,
            OrientationArg::Preserving => Orientations::Preserving,
            OrientationArg::Reversing => Orientations::Reversing,
        }
    }
}

#[derive(Debug, clap::Args)]
struct Source {
    /// Map document to read (`-` for stdin)
    #[arg(long, short, conflicts_with = "gen")]
    input: Option<String>,
    /// Generate the input instead: `wheel N`, `ear N`, `pancake N L` or `fixture NAME`
    #[arg(long, num_args = 2..=3, value_names = ["FAMILY", "PARAM"])]
    gen: Option<Vec<String>>,
    /// Accept maps of any genus (only `export` and `derive dual` make sense then)
    #[arg(long)]
    allow_nonspherical: bool,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Print only the JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a derived map
    Derive {
        what: Derivation,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Decide a property and print a certificate
    Check {
        what: Property,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        /// Longest symmetric cycle to look for
        #[arg(long)]
        max_len: Option<usize>,
        /// Candidate cap per automorphism in the symmetric-cycle search
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value_t)]
        orientation: OrientationArg,
    },
    /// Print a family member or fixture
    Gen {
        family: Family,
        /// `N`, `N L` or a fixture name
        #[arg(num_args = 1..=2, required = true)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Glue a map and its dual at the corner before `--dart`
    Adhesion {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        dart: usize,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Export a map in another format
    Export {
        format: ExportFormat,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

/// What a command produced: exit code, standard output and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message.into() }
    }

    fn output(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::usage(text) } else { Outcome::output(code, text) };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(format!("error: {message}\n")),
    }
}

fn generate(family: Family, params: &[String]) -> Result<CombinatorialMap, String> {
    let num = |i: usize| -> Result<usize, String> {
        let p = params.get(i).ok_or_else(|| format!("missing parameter {}", i + 1))?;
        p.parse().map_err(|_| format!("`{p}` is not a non-negative integer"))
    };
    let arity = match family {
        Family::Pancake => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(format!("{family:?} takes {arity} parameter(s), got {}", params.len()).to_lowercase());
    }
    let m = match family {
        Family::Wheel => families::wheel(num(0)?),
        Family::Ear => families::ear(num(0)?),
        Family::Pancake => families::pancake(num(0)?, num(1)?),
        Family::Fixture => families::fixture(&params[0]),
    };
    m.map_err(|e| e.to_string())
}

fn load(source: &Source) -> Result<CombinatorialMap, String> {
    if let Some(gen) = &source.gen {
        let family = Family::from_str(&gen[0], true).map_err(|_| format!("unknown family `{}`", gen[0]))?;
        return generate(family, &gen[1..]);
    }
    let text = match source.input.as_deref() {
        None => return Err("no input: pass --input FILE or --gen FAMILY ...".into()),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
    };
    let doc = MapDocument::parse(&text).map_err(|e| e.to_string())?;
    doc.to_map(source.allow_nonspherical).map_err(|e| e.to_string())
}

fn require_sphere(m: &CombinatorialMap) -> Result<(), String> {
    match m.euler_characteristic() {
        2 => Ok(()),
        chi => Err(format!("this command needs a sphere map, got V - E + F = {chi}")),
    }
}

fn morphism_json(m: &MapMorphism) -> Value {
    json!({ "darts": m.darts, "orientation": m.orientation })
}

fn duality_json(m: &CombinatorialMap, w: &DualityWitness) -> Value {
    let faces: Vec<usize> = (0..m.vertex_count()).map(|v| w.face_of_vertex(v)).collect();
    json!({
        "darts": w.morphism.darts,
        "orientation": w.morphism.orientation,
        "vertex_to_face": faces,
        "involutive": w.involutive,
        "strongly_involutive": w.strongly_involutive,
    })
}

fn counts_json(m: &CombinatorialMap) -> Value {
    let (v, e, f) = m.counts();
    json!({ "vertices": v, "edges": e, "faces": f })
}

fn render(code: i32, headline: String, report: Value, json_only: bool) -> Outcome {
    let body = serde_json::to_string(&report).expect("report serializes");
    let stdout = if json_only { format!("{body}\n") } else { format!("{headline}\n{body}\n") };
    Outcome::output(code, stdout)
}

fn verdict_code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn emit_map(m: &CombinatorialMap, derived: Option<&DerivedMap>, name: &str, out: OutFormat) -> Outcome {
    let text = match (out, derived) {
        (OutFormat::Dot, Some(d)) => derived_to_dot(d, name),
        (OutFormat::Dot, None) => to_dot(m, name),
        (OutFormat::Json, _) => {
            let mut doc = MapDocument::from_map(m);
            if let Some(d) = derived {
                doc.metadata = Some([("derivation".to_string(), derived_label(d.derivation).to_string())].into());
            }
            doc.to_json()
        }
    };
    Outcome::output(EXIT_HOLDS, text)
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Derive { what, source, out } => {
            let m = load(&source)?;
            require_sphere(&m)?;
            let d = match what {
                Derivation::Dual => dual(&m),
                Derivation::Medial => medial(&m),
                Derivation::Incidence => incidence(&m),
                Derivation::Square => square(&m),
            };
            Ok(emit_map(&d.map, Some(&d), derived_label(d.derivation), out))
        }
        Command::Gen { family, params, out } => {
            let m = generate(family, &params)?;
            Ok(emit_map(&m, None, "map", out))
        }
        Command::Adhesion { source, dart, out } => {
            let m = load(&source)?;
            require_sphere(&m)?;
            if dart >= m.dart_count() {
                return Err(format!("dart {dart} out of range 0..{}", m.dart_count()));
            }
            let h = families::adhesion(&m, Corner::at_dart(&m, dart)).map_err(|e| e.to_string())?;
            Ok(emit_map(&h, None, "adhesion", out))
        }
        Command::Export { format: ExportFormat::Dot, source } => {
            let m = load(&source)?;
            Ok(Outcome::output(EXIT_HOLDS, to_dot(&m, "map")))
        }
        Command::Check { what, source, common, max_len, budget, orientation } => {
            let m = load(&source)?;
            require_sphere(&m)?;
            check(what, &m, common.json, max_len, budget, orientation.into())
        }
    }
}

fn check(
    what: Property,
    m: &CombinatorialMap,
    json_only: bool,
    max_len: Option<usize>,
    budget: usize,
    orientations: Orientations,
) -> Result<Outcome, String> {
    let outcome = match what {
        Property::SelfDual => {
            let ds = dualities_among(m, orientations);
            let holds = !ds.is_empty();
            let report = json!({
                "property": "self-dual",
                "verdict": holds,
                "counts": counts_json(m),
                "dualities": ds.len(),
                "witness": ds.first().map(|w| duality_json(m, w)),
            });
            let head = format!("self-dual: {} ({} duality isomorphisms)", yes_no(holds), ds.len());
            render(verdict_code(holds), head, report, json_only)
        }
        Property::Strong => {
            let ds = dualities_among(m, orientations);
            let strong = ds.iter().find(|w| w.strongly_involutive);
            let holds = strong.is_some();
            let report = json!({
                "property": "strongly-involutive",
                "verdict": holds,
                "dualities": ds.len(),
                "involutive": ds.iter().filter(|w| w.involutive).count(),
                "witness": strong.map(|w| duality_json(m, w)),
            });
            let head = format!("strongly involutive: {}", yes_no(holds));
            render(verdict_code(holds), head, report, json_only)
        }
        Property::Antipodal => antipodal_report(m, json_only, budget)?,
        Property::Obstruction => {
            let r = odd_edge_obstruction(m);
            let counts = corner_counts(m);
            let report = json!({
                "property": "odd-edge-obstruction",
                "verdict": r.holds(),
                "self_dual": r.self_dual,
                "witness": r.witness.map(|v| json!({ "vertex": v, "edges_to_each_face": counts[v] })),
            });
            let head = match r.witness {
                Some(v) => format!("odd-edge obstruction: yes (vertex {v}); not antipodally self-dual"),
                None => "odd-edge obstruction: no".to_string(),
            };
            render(verdict_code(r.holds()), head, report, json_only)
        }
        Property::SymmetricCycles => {
            let r = match theorem_ant1_report_up_to(m, max_len, budget) {
                Ok(r) => r,
                Err(e @ SymmetryError::BudgetExceeded { .. }) => {
                    return Ok(Outcome { code: EXIT_BUDGET, stdout: String::new(), stderr: format!("{e}\n") })
                }
                Err(e) => return Err(e.to_string()),
            };
            let report = serde_json::to_value(&r).expect("report serializes");
            let head = format!(
                "symmetric cycles in I(G): lengths {:?}; all 2 mod 4: {}",
                r.lengths,
                yes_no(r.consistent)
            );
            render(verdict_code(r.consistent), head, report, json_only)
        }
        Property::AntipodalSymmetric => {
            let w = antipodal_symmetry_among(m, orientations);
            let report = json!({
                "property": "antipodally-symmetric",
                "verdict": w.is_some(),
                "witness": w.as_ref().map(|s| json!({
                    "automorphism": morphism_json(&s.automorphism),
                    "element_action": s.extension.action.image,
                })),
            });
            let head = format!("antipodally symmetric: {}", yes_no(w.is_some()));
            render(verdict_code(w.is_some()), head, report, json_only)
        }
    };
    Ok(outcome)
}

fn antipodal_report(m: &CombinatorialMap, json_only: bool, budget: usize) -> Result<Outcome, String> {
    let verdict = is_antipodally_self_dual(m);
    let (holds, head, certificate) = match &verdict {
        AntipodalVerdict::Antipodal { duality, incidence_involution, labeling, .. } => (
            true,
            "antipodally self-dual: yes".to_string(),
            json!({
                "duality": duality_json(m, duality),
                "incidence_involution": morphism_json(incidence_involution),
                "labeling": labeling.labels.iter().map(|ls| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
        ),
        AntipodalVerdict::NotSelfDual => (
            false,
            "antipodally self-dual: no (not self-dual)".to_string(),
            json!({ "reason": "not self-dual" }),
        ),
        AntipodalVerdict::SelfDualNotAntipodal { dualities, involutive } => {
            let obstruction = odd_edge_obstruction(m).witness;
            let cycle = match theorem_ant1_report_up_to(m, None, budget) {
                Ok(r) => r.cycles.into_iter().find(|c| c.len() % 4 == 0),
                Err(SymmetryError::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.to_string()),
            };
            let head = format!(
                "antipodally self-dual: no (all {involutive} of {dualities} involutive dualities leave a fixed vertex in I(G)□)"
            );
            let cert = json!({
                "reason": format!("all {involutive} involutive dualities have a fixed square vertex"),
                "dualities": dualities,
                "involutive_dualities": involutive,
                "odd_edge_vertex": obstruction,
                "symmetric_cycle": cycle.map(|c| json!({
                    "length": c.len(),
                    "vertices": c.cycle.vertices,
                    "edges": c.cycle.edges,
                    "automorphism": morphism_json(&c.automorphism),
                })),
            });
            (false, head, cert)
        }
    };
    let report = json!({
        "property": "antipodally-self-dual",
        "verdict": holds,
        "counts": counts_json(m),
        "certificate": certificate,
    });
    Ok(render(verdict_code(holds), head, report, json_only))
}

fn derived_label(kind: Kind) -> &'static str {
    match kind {
        Kind::Dual => "dual",
        Kind::Medial => "medial",
        Kind::Incidence => "incidence",
        Kind::Square => "square",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
