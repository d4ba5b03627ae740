//! Library side of the `hwmod` command: argument parsing, the commands
//! themselves, and report rendering. `main.rs` only forwards to [`main_with`].

pub mod minmax;
pub mod report;
pub mod sample;
pub mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hwmod::character::{verma_character, wcf_character, FormalCharacter};
use hwmod::hwmodule::{
    j_lambda, weights_hull_intersection, weights_integrable_decomposition, weights_levi_shift, TruncatedWeightSet,
};
use hwmod::oracle::{default_depth_cap, Oracle};
use hwmod::polyhedron::{
    face_counts_by_dimension, faces, geometric_faces, hull_of, off, polyhedron_json, unbounded_edges_at, v_to_h,
    weyl_stabilizer_is,
};
use hwmod::rational::parse_rational;
use hwmod::weyl::DEFAULT_ENUMERATION_CAP;
use hwmod::{Error, HWModule, IndexSet, ModuleClass, RootSystem, RootSystemSpec, Weight, WeylGroup};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use report::{weight_entries, Report};
use sample::Sampler;
use verify::{tally, Suite, Verdict};

pub const ENV_ENUM_CAP: &str = "HWMOD_ENUM_CAP";
pub const ENV_ORACLE_DEPTH: &str = "HWMOD_ORACLE_DEPTH";

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const FAILED: i32 = 2;
    pub const CAP: i32 = 3;
    pub const WCF_HYPOTHESIS: i32 = 4;
    pub const MINMAX_HYPOTHESIS: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "hwmod", version, about = "Weights, characters and hulls of highest weight modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and form of a root system.
    Roots(RootsArgs),
    /// Weights of a module by the three formulas.
    Weights(WeightsArgs),
    /// Convex hull of the weights: V- and H-representation, stabilizer, edges.
    Hull(HullArgs),
    /// Faces of the hull with their (w, J) labels.
    Faces(ModuleArgs),
    /// Truncated character of a simple module (or of a Verma module).
    Character(CharacterArgs),
    /// Randomized property sweep.
    Verify(VerifyArgs),
    /// Equivalence of the hull, stabilizer and parabolic statements per J'.
    Minmax(MinmaxArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    /// Root system, e.g. A2, B3, G2, A1xA1.
    pub root_system: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    pub root_system: String,
    /// Highest weight in the fundamental basis, e.g. 1,-3/2.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// verma, simple or pverma:J with J like 1,3.
    #[arg(long, default_value = "simple")]
    pub class: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    #[arg(long, default_value_t = 5)]
    pub depth: u32,
    /// Subset of the formulas to run, e.g. a,b.
    #[arg(long, default_value = "a,b,c")]
    pub formulas: String,
}

#[derive(Debug, Args)]
pub struct HullArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Also write an OFF file of the hull cut by a box around lambda.
    #[arg(long)]
    pub off: Option<PathBuf>,
    /// Half-width of the box for --off.
    #[arg(long = "box", default_value = "3", allow_hyphen_values = true)]
    pub box_radius: String,
}

#[derive(Debug, Args)]
pub struct CharacterArgs {
    pub root_system: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value_t = 5)]
    pub depth: u32,
    /// Compare with multiplicities from the Gram-matrix oracle.
    #[arg(long)]
    pub check_oracle: bool,
    /// The Verma character instead of the simple one.
    #[arg(long)]
    pub verma: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub root_system: String,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub depth: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MinmaxArgs {
    pub root_system: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// A single J' (1-based, e.g. 1,2); default: every admissible J'.
    #[arg(long)]
    pub jprime: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Everything that determines a command's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: String,
    pub root_system: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    pub format: Format,
    /// Command-specific flags.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, String>,
}

impl JobSpec {
    fn new(command: &str, rs: &RootSystem, format: Format) -> Self {
        JobSpec {
            command: command.into(),
            root_system: rs.spec().to_string(),
            lambda: None,
            class: None,
            depth: None,
            format,
            options: BTreeMap::new(),
        }
    }

    fn with_lambda(mut self, lambda: &Weight) -> Self {
        self.lambda = Some(lambda.coords().iter().map(hwmod::rational::fmt_rational).collect());
        self
    }

    fn option(mut self, k: &str, v: impl ToString) -> Self {
        self.options.insert(k.into(), v.to_string());
        self
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidRootSystem(_)
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NotDominantIntegral { .. }
            | Error::ParabolicNotInJLambda { .. }
            | Error::NotAVertex(_) => exit::PARSE,
            Error::EnumerationCap { .. } | Error::PolyhedronCap(_) | Error::OracleDepth { .. } => exit::CAP,
            Error::WcfHypothesis(_) => exit::WCF_HYPOTHESIS,
            Error::NotPointed | Error::Internal(_) => exit::FAILED,
        };
        CliError::new(code, e.to_string())
    }
}

/// What a successful (or checked-but-failing) command produced.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub output: Option<PathBuf>,
}

fn env_number<T: std::str::FromStr>(name: &str) -> Result<Option<T>, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::new(exit::PARSE, format!("{name} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// Weyl group with the enumeration cap taken from the environment.
pub fn make_group(root_system: &str) -> Result<WeylGroup, CliError> {
    let spec: RootSystemSpec = root_system.parse()?;
    let cap = env_number::<usize>(ENV_ENUM_CAP)?.unwrap_or(DEFAULT_ENUMERATION_CAP);
    Ok(WeylGroup::with_cap(Arc::new(RootSystem::new(spec)), cap))
}

pub fn oracle_cap(rank: usize) -> Result<u32, CliError> {
    Ok(env_number::<u32>(ENV_ORACLE_DEPTH)?.unwrap_or_else(|| default_depth_cap(rank)))
}

fn parse_lambda(rs: &RootSystem, s: &str) -> Result<Weight, CliError> {
    let w = Weight::parse(s)?;
    rs.check_weight(&w)?;
    Ok(w)
}

fn parse_module(group: &WeylGroup, a: &ModuleArgs) -> Result<HWModule, CliError> {
    let rs = group.root_system();
    let lambda = parse_lambda(rs, &a.lambda)?;
    let class = ModuleClass::parse(&a.class, rs.rank())?;
    Ok(HWModule::new(rs, lambda, class)?)
}

fn finish(report: Report, format: Format, output: &Option<PathBuf>, code: i32) -> Outcome {
    let text = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome { code, text, output: output.clone() }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::Weights(a) => cmd_weights(a),
        Command::Hull(a) => cmd_hull(a),
        Command::Faces(a) => cmd_faces(a),
        Command::Character(a) => cmd_character(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Minmax(a) => cmd_minmax(a),
    }
}

fn cmd_roots(a: RootsArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.root_system)?;
    let rs = group.root_system();
    let spec = JobSpec::new("roots", rs, a.out.format);
    let order = group.full()?.len();
    let mut result = serde_json::to_value(rs.to_json()).expect("serializable");
    result["weyl_group_order"] = json!(order);
    let mut r = Report::new(spec, None, result);
    r.line(format!("{} rank {} with {} positive roots, |W| = {order}", rs.spec(), rs.rank(), rs.positive_roots().len()));
    r.line("cartan matrix:".to_string());
    for row in rs.cartan() {
        r.line(format!("  {row:?}"));
    }
    r.line("positive roots (simple-root coordinates):".to_string());
    for b in rs.positive_roots() {
        r.line(format!("  {b:?}"));
    }
    Ok(finish(r, a.out.format, &a.out.output, exit::OK))
}

fn parse_formulas(s: &str) -> Result<Vec<char>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let c = match part.to_ascii_lowercase().as_str() {
            "a" => 'A',
            "b" => 'B',
            "c" => 'C',
            _ => return Err(CliError::new(exit::PARSE, format!("unknown formula {part:?} (expected a, b, c)"))),
        };
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        return Err(CliError::new(exit::PARSE, "no formula selected"));
    }
    out.sort();
    Ok(out)
}

fn cmd_weights(a: WeightsArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.module.root_system)?;
    let rs = group.root_system();
    let m = parse_module(&group, &a.module)?;
    let formulas = parse_formulas(&a.formulas)?;
    let mut spec = JobSpec::new("weights", rs, a.module.out.format).with_lambda(m.lambda());
    spec.class = Some(m.class().to_string());
    spec.depth = Some(a.depth);
    let spec = spec.option("formulas", formulas.iter().collect::<String>().to_lowercase());

    let mut sets: Vec<(char, TruncatedWeightSet)> = Vec::new();
    for &f in &formulas {
        let s = match f {
            'A' => weights_hull_intersection(&group, &m, a.depth)?,
            'B' => weights_levi_shift(rs, &m, a.depth)?,
            _ => weights_integrable_decomposition(rs, &m, a.depth)?,
        };
        sets.push((f, s));
    }
    let mut disagreements = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (x, y) = sets[i].1.difference(&sets[j].1);
            if !x.is_empty() || !y.is_empty() {
                disagreements.push(json!({
                    "pair": format!("{}{}", sets[i].0, sets[j].0),
                    "only_first": x, "only_second": y,
                }));
            }
        }
    }
    let agree = disagreements.is_empty();
    let mut per = serde_json::Map::new();
    for (f, s) in &sets {
        per.insert(f.to_string(), json!({"count": s.len(), "weights": weight_entries(rs, s)}));
    }
    let result = json!({
        "module": m.to_string(),
        "integrability_set": m.integrability_set(),
        "hypothesis": m.formula_hypothesis(),
        "formulas": per,
        "agree": agree,
        "disagreements": disagreements,
    });
    let mut r = Report::new(spec, Some(a.depth), result);
    r.line(format!("module {m} in {}, depth {}", rs.spec(), a.depth));
    r.line(format!("J(V) = {}", m.integrability_set()));
    let (_, first) = &sets[0];
    r.line(format!("{:<12} {:<20} {}", "offset", "weight", formulas.iter().collect::<String>()));
    let mut all: std::collections::BTreeSet<&hwmod::Offset> = std::collections::BTreeSet::new();
    for (_, s) in &sets {
        all.extend(s.offsets());
    }
    for k in all {
        let marks: String = sets.iter().map(|(_, s)| if s.contains(k) { 'x' } else { '.' }).collect();
        r.line(format!("{:<12} {:<20} {marks}", format!("{:?}", k.0), rs.lower(m.lambda(), &k.0).to_string()));
    }
    r.line(format!("{} weights; formulas {}", first.len(), if agree { "agree" } else { "DISAGREE" }));
    let code = if agree { exit::OK } else { exit::FAILED };
    Ok(finish(r, a.module.out.format, &a.module.out.output, code))
}

fn cmd_hull(a: HullArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.module.root_system)?;
    let rs = group.root_system();
    let m = parse_module(&group, &a.module)?;
    let mut spec = JobSpec::new("hull", rs, a.module.out.format).with_lambda(m.lambda());
    spec.class = Some(m.class().to_string());
    if let Some(p) = &a.off {
        spec = spec.option("off", p.display()).option("box", &a.box_radius);
    }
    let p = hull_of(&group, &m)?;
    let canon = p.canonical()?;
    let h = v_to_h(&p)?;
    let st = weyl_stabilizer_is(&group, &m)?;
    let x = rs.root_coords(m.lambda())?;
    let edges = unbounded_edges_at(&h, &x).ok_or_else(|| Error::Internal("lambda is not a vertex".into()))?;
    let poly = polyhedron_json(&canon, &h);
    let edge_strings: Vec<Vec<String>> =
        edges.iter().map(|e| e.iter().map(hwmod::rational::fmt_rational).collect()).collect();
    let result = json!({
        "module": m.to_string(),
        "integrability_set": m.integrability_set(),
        "polyhedron": poly,
        "vertex_weights": canon.vertices().iter().map(|v| rs.from_root_coords(v)).collect::<Vec<_>>(),
        "stabilizer": st,
        "unbounded_edges_at_lambda": edge_strings,
    });
    if let Some(path) = &a.off {
        let r = parse_rational(&a.box_radius)?;
        let text = off::to_off(&h, &x, &r)?;
        std::fs::write(path, text).map_err(|e| CliError::new(exit::FAILED, format!("{}: {e}", path.display())))?;
    }
    let mut r = Report::new(spec, None, result);
    r.line(format!("hull of {m} in {} (simple-root coordinates)", rs.spec()));
    r.line(format!("vertices ({}):", canon.vertices().len()));
    for v in canon.vertices() {
        r.line(format!("  {}   weight {}", vec_text(v), rs.from_root_coords(v)));
    }
    r.line(format!("rays ({}):", canon.rays().len()));
    for v in canon.rays() {
        r.line(format!("  {}", vec_text(v)));
    }
    r.line(format!("equalities ({}), facets ({}):", h.equalities.len(), h.inequalities.len()));
    for e in &h.equalities {
        r.line(format!("  {} . x = {}", vec_text(&e.normal), hwmod::rational::fmt_rational(&e.offset)));
    }
    for i in &h.inequalities {
        r.line(format!("  {} . x <= {}", vec_text(&i.normal), hwmod::rational::fmt_rational(&i.offset)));
    }
    r.line(format!(
        "stabilizer: order {}, largest parabolic W_J with J = {}, parabolic: {}",
        st.order, st.largest_parabolic, st.is_parabolic
    ));
    let shown: Vec<String> = edges.iter().map(|e| vec_text(e)).collect();
    r.line(format!("unbounded edges at lambda: {}", if shown.is_empty() { "none".into() } else { shown.join(" ") }));
    Ok(finish(r, a.module.out.format, &a.module.out.output, exit::OK))
}

fn cmd_faces(a: ModuleArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.root_system)?;
    let rs = group.root_system();
    let m = parse_module(&group, &a)?;
    let mut spec = JobSpec::new("faces", rs, a.out.format).with_lambda(m.lambda());
    spec.class = Some(m.class().to_string());
    let fs = faces(&group, &m)?;
    let h = v_to_h(&hull_of(&group, &m)?)?;
    let (_, geo) = geometric_faces(&h)?;
    let agree = fs.len() == geo.len();
    let by_dim: BTreeMap<String, usize> =
        face_counts_by_dimension(&fs).into_iter().map(|(d, c)| (d.to_string(), c)).collect();
    let list: Vec<Value> = fs
        .iter()
        .map(|f| {
            json!({
                "dimension": f.dimension,
                "polyhedron": f.realization.to_json(),
                "labels": f.labels.iter().map(|(w, j)| json!({"w": w, "J": j})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let result = json!({
        "module": m.to_string(),
        "count": fs.len(),
        "geometric_count": geo.len(),
        "agree": agree,
        "by_dimension": by_dim,
        "faces": list,
    });
    let mut r = Report::new(spec, None, result);
    r.line(format!("faces of the hull of {m} in {}", rs.spec()));
    for f in &fs {
        let labels: Vec<String> = f.labels.iter().map(|(w, j)| format!("({w}, {j})")).collect();
        r.line(format!(
            "  dim {}  {} vertices, {} rays  labels {}",
            f.dimension,
            f.realization.vertices().len(),
            f.realization.rays().len(),
            labels.join(" ")
        ));
    }
    r.line(format!("{} faces from (w, J) labels, {} from the H-representation", fs.len(), geo.len()));
    let code = if agree { exit::OK } else { exit::FAILED };
    Ok(finish(r, a.out.format, &a.out.output, code))
}

fn cmd_character(a: CharacterArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.root_system)?;
    let rs = group.root_system();
    let lambda = parse_lambda(rs, &a.lambda)?;
    let mut spec = JobSpec::new("character", rs, a.out.format).with_lambda(&lambda);
    spec.depth = Some(a.depth);
    spec.class = Some(if a.verma { "verma" } else { "simple" }.into());
    if a.check_oracle {
        spec = spec.option("check_oracle", true);
    }
    let ch: FormalCharacter =
        if a.verma { verma_character(rs, &lambda, a.depth)? } else { wcf_character(&group, &lambda, a.depth)? };
    let mut result = json!({
        "lambda": lambda,
        "j_lambda": j_lambda(&lambda),
        "weights": character_entries(rs, &ch),
        "total": ch.total(),
    });
    if !a.verma {
        let s: Vec<String> = group.s_lambda_set(&lambda)?.iter().map(ToString::to_string).collect();
        result["s_lambda"] = json!(s);
    }
    let mut code = exit::OK;
    let mut mismatches = Vec::new();
    if a.check_oracle {
        let cap = oracle_cap(rs.rank())?;
        let oracle = Oracle::with_cap(rs, &lambda, cap)?;
        for k in hwmod::hwmodule::offsets_up_to(rs.rank(), rs.index_set(), a.depth) {
            let o = if a.verma { hwmod::oracle::verma_multiplicity(rs, &k.0) } else { oracle.simple_multiplicity(&k.0)? };
            if o as i64 != ch.coeff(&k) {
                mismatches.push(json!({"offset": k, "character": ch.coeff(&k), "oracle": o}));
            }
        }
        result["oracle"] = json!({"cap": cap, "agree": mismatches.is_empty(), "mismatches": mismatches});
        if !mismatches.is_empty() {
            code = exit::FAILED;
        }
    }
    let mut r = Report::new(spec, Some(a.depth), result);
    let kind = if a.verma { "Verma" } else { "simple" };
    r.line(format!("{kind} character at {lambda} in {}, depth {}", rs.spec(), a.depth));
    r.line(format!("{:<12} {:<20} mult", "offset", "weight"));
    for (k, c) in ch.terms() {
        r.line(format!("{:<12} {:<20} {c}", format!("{:?}", k.0), rs.lower(&lambda, &k.0).to_string()));
    }
    r.line(format!("{} weights, total multiplicity {}", ch.terms().count(), ch.total()));
    if a.check_oracle {
        r.line(format!("oracle: {}", if mismatches.is_empty() { "agrees" } else { "DISAGREES" }));
    }
    Ok(finish(r, a.out.format, &a.out.output, code))
}

/// A point or direction in simple-root coordinates, for text output.
fn vec_text(v: &[hwmod::Rational]) -> String {
    format!("({})", hwmod::rational::fmt_vector(v))
}

fn character_entries(rs: &RootSystem, ch: &FormalCharacter) -> Vec<Value> {
    ch.terms()
        .map(|(k, c)| json!({"offset": k, "weight": rs.lower(ch.lambda(), &k.0), "mult": c}))
        .collect()
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.root_system)?;
    let rs = group.root_system();
    let cap = oracle_cap(rs.rank())?;
    group.full()?;
    let mut spec = JobSpec::new("verify", rs, a.out.format).option("samples", a.samples).option("seed", a.seed);
    spec.depth = Some(a.depth);
    let samples = Sampler::new(a.seed).weights(rs, a.samples);
    let suite = Suite { group: &group, depth: a.depth, oracle_cap: cap };
    let per_sample: Vec<Vec<verify::Check>> = samples.par_iter().map(|(_, lam)| suite.run(lam)).collect();
    let all: Vec<verify::Check> = per_sample.iter().flatten().cloned().collect();
    let table = tally(&all);
    let failures: Vec<Value> = samples
        .iter()
        .zip(&per_sample)
        .flat_map(|((_, lam), checks)| {
            checks.iter().filter(|c| matches!(c.verdict, Verdict::Fail(_))).map(move |c| {
                json!({"lambda": lam, "check": c})
            })
        })
        .collect();
    let ok = failures.is_empty();
    let result = json!({
        "oracle_cap": cap,
        "samples": samples.iter().map(|(s, w)| json!({"stratum": s, "lambda": w})).collect::<Vec<_>>(),
        "properties": table.iter().map(|(p, t)| json!({"property": p, "passed": t.passed, "failed": t.failed, "skipped": t.skipped})).collect::<Vec<_>>(),
        "failures": failures,
        "all_passed": ok,
    });
    let mut r = Report::new(spec, Some(a.depth), result);
    r.line(format!("verify {} with {} samples, seed {}, depth {}", rs.spec(), a.samples, a.seed, a.depth));
    r.line(format!("{:<20} {:>6} {:>6} {:>7}", "property", "pass", "fail", "skip"));
    for (p, t) in &table {
        r.line(format!("{:<20} {:>6} {:>6} {:>7}", p.name(), t.passed, t.failed, t.skipped));
    }
    for ((_, lam), checks) in samples.iter().zip(&per_sample) {
        for c in checks {
            if let Verdict::Fail(d) = &c.verdict {
                r.line(format!("FAIL {} at {lam}: {d}", c.property.name()));
                r.line(format!("  reproduce: {}", c.reproduce));
            }
        }
    }
    r.line(if ok { "all properties pass".to_string() } else { "some properties FAIL".to_string() });
    let code = if ok { exit::OK } else { exit::FAILED };
    Ok(finish(r, a.out.format, &a.out.output, code))
}

fn cmd_minmax(a: MinmaxArgs) -> Result<Outcome, CliError> {
    let group = make_group(&a.root_system)?;
    let rs = group.root_system();
    let lambda = parse_lambda(rs, &a.lambda)?;
    let mut spec = JobSpec::new("minmax", rs, a.out.format).with_lambda(&lambda);
    let j_primes = match &a.jprime {
        None => minmax::admissible_j_primes(&lambda),
        Some(s) => {
            spec = spec.option("jprime", s);
            let j = IndexSet::parse_one_based(s, rs.rank())?;
            if !j.is_subset(j_lambda(&lambda)) {
                return Err(CliError::new(
                    exit::MINMAX_HYPOTHESIS,
                    format!("J' = {j} is not contained in J_lambda = {}", j_lambda(&lambda)),
                ));
            }
            if !minmax::is_admissible(&lambda, j) {
                return Err(CliError::new(
                    exit::MINMAX_HYPOTHESIS,
                    format!("lambda is not simply-regular, so J' must be {{}} or J_lambda = {}", j_lambda(&lambda)),
                ));
            }
            vec![j]
        }
    };
    let rep = minmax::minmax(&group, &lambda, &j_primes)?;
    let ok = rep.all_equivalent;
    let mut r = Report::new(spec, None, serde_json::to_value(&rep).expect("serializable"));
    r.line(format!(
        "minmax at {lambda} in {}: J_lambda = {}, simply-regular: {}",
        rs.spec(),
        rep.j_lambda,
        rep.simply_regular
    ));
    r.line(format!("{:<14} {:<8} {:>4} {:>4} {:>4}  equivalent", "module", "J'", "(1)", "(2)", "(3)"));
    let yn = |b: bool| if b { "yes" } else { "no" };
    for c in &rep.checks {
        r.line(format!(
            "{:<14} {:<8} {:>4} {:>4} {:>4}  {}",
            c.module,
            c.j_prime.to_string(),
            yn(c.same_hull),
            yn(c.stabilizer_is_parabolic_j_prime),
            yn(c.largest_parabolic_is_j_prime),
            yn(c.equivalent)
        ));
    }
    r.line("statement (4), existence of the extremal modules: not machine-checked".to_string());
    let code = if ok { exit::OK } else { exit::FAILED };
    Ok(finish(r, a.out.format, &a.out.output, code))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            match &out.output {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &out.text) {
                        eprintln!("error: {}: {e}", p.display());
                        return exit::FAILED;
                    }
                }
                None => print!("{}", out.text),
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
