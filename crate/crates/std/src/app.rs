//! Argument definitions and the dispatcher behind the `pathrsk` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathrsk_core::continuous::{gamma, gc_phi, gc_rho};
use pathrsk_core::lattice::{MultiPath, Word};
use pathrsk_core::markov::{conditioned_law, exact_shape_dist};
use pathrsk_core::queueing::{depoissonized_dist, transient_dist, Estimate, PoissonDrive};
use pathrsk_core::symfunc::{rational, to_f64, Rational};
use pathrsk_core::tableaux::{rs, Insertion};
use pathrsk_core::transform::{gmap, triangular};
use pathrsk_core::verify::{self, McComparison, SuiteReport};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::io::{self, ContinuousPathJson, PathJson, SimulationJson, TableauJson};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "pathrsk", version, about = "Path transforms, RS insertion, shape chains and tandem queues")]
pub struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every stochastic computation (ChaCha8).
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Tolerance for series truncation and float comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Robinson–Schensted insertion of a word.
    Rsk(RskArgs),
    /// The path transform G and its triangular array.
    Transform(TransformArgs),
    /// Exact laws after n steps of the walk with letter law p.
    ShapeDist(ShapeDistArgs),
    /// Tandem queues driven by Poisson clocks.
    Tandem(TandemArgs),
    /// Continuous Γ, φ and ρ of a piecewise-linear path.
    Continuous(ContinuousArgs),
    /// Run a verification suite; exits 3 if it fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Word as a string of digits, e.g. 3112322.
    #[arg(long, requires = "k", conflicts_with = "input")]
    pub word: Option<String>,
    /// Alphabet size.
    #[arg(long)]
    pub k: Option<usize>,
    /// Path JSON file, {"k", "steps"} or {"values"}.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

impl WordInput {
    fn path_json(&self) -> Result<PathJson, CliError> {
        match (&self.word, &self.input) {
            (Some(w), _) => {
                let k = self.k.ok_or_else(|| CliError::Input("--word needs --k".into()))?;
                Ok(PathJson::from_word(&Word::from_digits(w, k)?))
            }
            (None, Some(p)) => io::read_json(p),
            (None, None) => Err(CliError::Input("give --word and --k, or --input".into())),
        }
    }

    fn word(&self) -> Result<Word, CliError> {
        match self.path_json()? {
            PathJson::Word { k, steps } => Ok(Word::new(steps, k)?),
            PathJson::Values { .. } => Err(CliError::Input("this command needs a word, not raw values".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Column,
    Row,
}

impl From<Mode> for Insertion {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Column => Insertion::Column,
            Mode::Row => Insertion::Row,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RskEmit {
    Tableaux,
    Shapes,
    Json,
}

#[derive(Debug, Args)]
pub struct RskArgs {
    #[command(flatten)]
    pub input: WordInput,
    #[arg(long, value_enum, default_value_t = Mode::Column)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = RskEmit::Tableaux)]
    pub emit: RskEmit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformEmit {
    G,
    Array,
    All,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub input: WordInput,
    #[arg(long, value_enum, default_value_t = TransformEmit::All)]
    pub emit: TransformEmit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Law {
    /// Shape λ(n) of the column-insertion tableau.
    Shape,
    /// The conditioned walk G(X)(n).
    G,
    /// Departure vector of the first queue series after n services.
    Departures,
}

#[derive(Debug, Args)]
pub struct ShapeDistArgs {
    /// Alphabet size; defaults to the length of --p, or uniform letters when --p is absent.
    #[arg(long)]
    pub k: Option<usize>,
    /// Letter law as rationals, e.g. 1/3,2/3.
    #[arg(long)]
    pub p: Option<String>,
    /// Number of steps
    #[arg(long)]
    pub n: u32,
    /// Print exact rationals instead of decimals.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, value_enum, default_value_t = Law::Shape)]
    pub law: Law,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum TandemEmit {
    Empirical,
    Formula,
    Both,
}

#[derive(Debug, Args)]
pub struct TandemArgs {
    /// Service rates, e.g. 1,1,2.
    #[arg(long)]
    pub mu: String,
    /// Time horizon
    #[arg(long)]
    pub t: f64,
    #[arg(long, default_value_t = 100_000)]
    pub runs: u64,
    /// Departure vector to evaluate; without it every simulated vector is reported.
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long, value_enum, default_value_t = TandemEmit::Both)]
    pub emit: TandemEmit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ContinuousOp {
    Gamma,
    Phi,
    Rho,
}

#[derive(Debug, Args)]
pub struct ContinuousArgs {
    /// Continuous path JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub op: ContinuousOp,
    /// Rescale time to [0, 1] first (needed by phi and rho).
    #[arg(long)]
    pub rescale: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum Suite {
    /// Worked example fixtures for the word 3112322.
    Worked,
    /// Array tableau against column insertion.
    Theorem31,
    /// Greene invariants.
    Greene,
    /// Convolution identities, mass conservation and the queue coupling.
    Lemmas,
    /// Recovery of the path from G on certified coordinates.
    Recovery,
    /// Shape law three ways.
    Shapechain,
    /// QK = KP and P̂J = JP.
    Intertwining,
    /// Law of G(X) against the conditioned chain.
    Theorem11,
    /// Conditional law of X(n) given the recording chain.
    Conditional,
    /// Continuous transform properties.
    Continuous,
    /// Queueing formulas against mixtures and simulation.
    Formulas,
    /// Survival ratio against the harmonic function.
    Survival,
    /// Every exact suite at default bounds.
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Alphabet size (maximum for word suites).
    #[arg(long)]
    pub k: Option<usize>,
    /// Maximum word length or number of steps.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Maximum state size for intertwining checks.
    #[arg(long)]
    pub max_size: Option<u32>,
    /// Letter law; overrides the default laws.
    #[arg(long)]
    pub p: Option<String>,
    /// Monte Carlo runs for the formula suite.
    #[arg(long, default_value_t = 100_000)]
    pub runs: u64,
    /// Paths for the survival suite.
    #[arg(long, default_value_t = 1_000_000)]
    pub paths: u64,
    /// Horizon for the survival suite.
    #[arg(long, default_value_t = 2000)]
    pub horizon: usize,
    /// Random cases for the continuous suite.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

/// Run a parsed command and return what it prints on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Rsk(a) => rsk(cli, a),
        Command::Transform(a) => transform(cli, a),
        Command::ShapeDist(a) => shape_dist(cli, a),
        Command::Tandem(a) => tandem(cli, a),
        Command::Continuous(a) => continuous(cli, a),
        Command::Verify(a) => verify_cmd(cli, a),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn rsk(cli: &Cli, a: &RskArgs) -> Result<String, CliError> {
    let w = a.input.word()?;
    let (p, q) = rs(&w, a.mode.into());
    let shapes: Vec<Vec<u32>> = q.shapes().iter().map(|s| s.parts().to_vec()).collect();
    if cli.json || matches!(a.emit, RskEmit::Json) {
        let out = match a.emit {
            RskEmit::Shapes => json!({ "shapes": shapes }),
            _ => json!({ "p": TableauJson::from(&p), "q": TableauJson::from(&q) }),
        };
        return Ok(to_json(&out));
    }
    let mut out = String::new();
    match a.emit {
        RskEmit::Shapes => {
            for s in &shapes {
                writeln!(out, "{}", io::state_key(s)).unwrap();
            }
        }
        _ => {
            writeln!(out, "{p}").unwrap();
            writeln!(out).unwrap();
            for row in q.rows() {
                writeln!(out, "{}", row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

fn transform(cli: &Cli, a: &TransformArgs) -> Result<String, CliError> {
    let x: MultiPath = a.input.path_json()?.to_multipath()?;
    let n = x.horizon();
    let g = gmap(&x);
    let gs: Vec<Vec<u32>> = (0..=n).map(|l| g.at(l)).collect();
    let array = if x.is_pi() {
        let arr = triangular(&x);
        Some((arr.rows_at(n), arr.queues_at(n)))
    } else {
        None
    };
    let want_g = !matches!(a.emit, TransformEmit::Array);
    let want_array = !matches!(a.emit, TransformEmit::G);
    if want_array && array.is_none() {
        return Err(CliError::Input("the triangular array needs a word input".into()));
    }
    if cli.json {
        let mut out = serde_json::Map::new();
        out.insert("k".into(), json!(x.dim()));
        if want_g {
            out.insert("g".into(), json!(gs));
        }
        if let (true, Some((d, q))) = (want_array, &array) {
            out.insert("array".into(), json!({ "d": d, "queues": q }));
        }
        return Ok(to_json(&Value::Object(out)));
    }
    let mut out = String::new();
    if want_g {
        for (l, v) in gs.iter().enumerate() {
            writeln!(out, "G({l}) = ({})", io::state_key(v)).unwrap();
        }
    }
    if let (true, Some((d, q))) = (want_array, &array) {
        writeln!(out, "D({n}):").unwrap();
        for (i, row) in d.iter().enumerate() {
            writeln!(out, "{}{}", "  ".repeat(i), row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).unwrap();
        }
        writeln!(out, "Q({n}):").unwrap();
        for (i, row) in q.iter().enumerate() {
            writeln!(out, "{}{}", "  ".repeat(i), row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).unwrap();
        }
    }
    Ok(out)
}

fn letter_law(k: Option<usize>, p: Option<&str>) -> Result<Vec<Rational>, CliError> {
    match (k, p) {
        (_, Some(s)) => {
            let p = io::parse_rationals(s)?;
            if let Some(k) = k {
                if k != p.len() {
                    return Err(CliError::Input(format!("--k {k} but --p has {} entries", p.len())));
                }
            }
            Ok(p)
        }
        (Some(k), None) if k > 0 => Ok(vec![rational(1, k as i64); k]),
        _ => Err(CliError::Input("give --p or --k".into())),
    }
}

fn shape_dist(cli: &Cli, a: &ShapeDistArgs) -> Result<String, CliError> {
    let p = letter_law(a.k, a.p.as_deref())?;
    let law: BTreeMap<Vec<u32>, Rational> = match a.law {
        Law::Shape => exact_shape_dist(&p, a.n)?.into_iter().map(|(l, v)| (l.padded(p.len()), v)).collect(),
        Law::G => conditioned_law(&p, a.n)?,
        Law::Departures => {
            pathrsk_core::symfunc::check_distribution(&p)?;
            depoissonized_dist(&p, a.n).into_iter().collect()
        }
    };
    if cli.json {
        return Ok(to_json(&io::distribution(law.iter().map(|(x, v)| (x.as_slice(), v)))));
    }
    let mut out = String::new();
    for (x, v) in &law {
        if a.exact {
            writeln!(out, "({})\t{v}", io::state_key(x)).unwrap();
        } else {
            writeln!(out, "({})\t{:.12}", io::state_key(x), to_f64(v)).unwrap();
        }
    }
    Ok(out)
}

fn tandem(cli: &Cli, a: &TandemArgs) -> Result<String, CliError> {
    let mu = io::parse_f64s(&a.mu)?;
    let drive = PoissonDrive::new(mu.clone())?;
    if !(a.t.is_finite() && a.t >= 0.0) {
        return Err(CliError::Input("--t must be a non-negative number".into()));
    }
    let targets: Option<Vec<u32>> = a.d.as_deref().map(io::parse_u32s).transpose()?;
    if let Some(d) = &targets {
        if d.len() != mu.len() {
            return Err(CliError::Input(format!("--d needs {} entries", mu.len())));
        }
    }
    if a.emit == TandemEmit::Formula && targets.is_none() {
        return Err(CliError::Input("--emit formula needs --d".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut empirical: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    if a.emit != TandemEmit::Formula {
        if a.runs == 0 {
            return Err(CliError::Input("--runs must be positive".into()));
        }
        for _ in 0..a.runs {
            let run = pathrsk_core::queueing::simulate_poisson(&drive, a.t, &mut rng);
            *empirical.entry(run.departures).or_default() += 1;
        }
    }
    let states: Vec<Vec<u32>> = match &targets {
        Some(d) => vec![d.clone()],
        None => empirical.keys().cloned().collect(),
    };
    let mut rows = Vec::new();
    for d in &states {
        let emp = (a.emit != TandemEmit::Formula).then(|| {
            let e = Estimate::from_counts(empirical.get(d).copied().unwrap_or(0), a.runs);
            SimulationJson { value: e.value, stderr: e.stderr }
        });
        let formula =
            if a.emit != TandemEmit::Empirical { Some(transient_dist(&drive, a.t, d, cli.tolerance, 100_000)?) } else { None };
        rows.push((d.clone(), emp, formula));
    }
    if cli.json {
        let mut out = serde_json::Map::new();
        for (d, emp, formula) in &rows {
            let mut entry = serde_json::Map::new();
            if let Some(e) = emp {
                entry.insert("empirical".into(), json!(e));
            }
            if let Some(f) = formula {
                entry.insert("formula".into(), json!({ "value": f.value, "tail_bound": f.tail_bound }));
            }
            out.insert(io::state_key(d), Value::Object(entry));
        }
        return Ok(to_json(&Value::Object(out)));
    }
    let mut out = String::new();
    for (d, emp, formula) in &rows {
        write!(out, "D({}) = ({})", a.t, io::state_key(d)).unwrap();
        if let Some(f) = formula {
            write!(out, "\tformula {:.9} (tail ≤ {:.1e})", f.value, f.tail_bound).unwrap();
        }
        if let Some(e) = emp {
            write!(out, "\tempirical {:.6} ± {:.6}", e.value, e.stderr).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn continuous(cli: &Cli, a: &ContinuousArgs) -> Result<String, CliError> {
    let input: ContinuousPathJson = io::read_json(&a.input)?;
    let mut f = input.to_path()?;
    if a.rescale {
        f = f.rescaled();
    }
    match a.op {
        ContinuousOp::Gamma | ContinuousOp::Rho => {
            let g = if matches!(a.op, ContinuousOp::Gamma) { gamma(&f)? } else { gc_rho(&f)? };
            let out = ContinuousPathJson::from_path(&g)?;
            if cli.json {
                return Ok(to_json(&out));
            }
            let (times, points) = g.points()?;
            let mut s = String::new();
            for (t, p) in times.iter().zip(&points) {
                writeln!(s, "{t}\t{}", p.iter().map(Rational::to_string).collect::<Vec<_>>().join("\t")).unwrap();
            }
            Ok(s)
        }
        ContinuousOp::Phi => {
            let phi = gc_phi(&f)?;
            let rows: Vec<Vec<String>> = phi.rows().iter().map(|r| r.iter().map(Rational::to_string).collect()).collect();
            if cli.json {
                return Ok(to_json(&json!({ "rows": rows })));
            }
            Ok(rows.iter().map(|r| r.join(" ") + "\n").collect())
        }
    }
}

fn default_laws(k: Option<usize>, for_g_law: bool) -> Vec<Vec<Rational>> {
    let two = vec![vec![rational(1, 2), rational(1, 2)], vec![rational(1, 3), rational(2, 3)]];
    let two_extra = vec![rational(2, 3), rational(1, 3)];
    let three = vec![vec![rational(1, 6), rational(1, 3), rational(1, 2)]];
    let mut laws = Vec::new();
    if k.is_none_or(|k| k == 2) {
        laws.extend(two);
        if for_g_law {
            laws.push(two_extra);
        }
    }
    if k.is_none_or(|k| k == 3) {
        laws.extend(three);
    }
    laws
}

fn mc_report(c: &McComparison) -> SuiteReport {
    let mut r = SuiteReport::new(&c.label);
    r.check(c.agrees(3.0), || {
        format!("formula {:.6} vs simulation {:.6} ± {:.6}", c.formula, c.estimate.value, c.estimate.stderr)
    });
    r
}

/// Reports for one suite; bounds fall back to the acceptance defaults.
pub fn suite_reports(cli: &Cli, a: &VerifyArgs, suite: Suite) -> Result<Vec<SuiteReport>, CliError> {
    let laws = |g: bool| -> Result<Vec<Vec<Rational>>, CliError> {
        match &a.p {
            Some(s) => Ok(vec![letter_law(a.k, Some(s))?]),
            None => Ok(default_laws(a.k, g)),
        }
    };
    let steps = |p: &[Rational]| a.max_n.unwrap_or(if p.len() <= 2 { 8 } else { 6 });
    Ok(match suite {
        Suite::Worked => vec![verify::worked_example()],
        Suite::Theorem31 => vec![verify::array_tableau(a.k.unwrap_or(4), a.max_n.unwrap_or(8))],
        Suite::Greene => vec![verify::greene_suite(a.k.unwrap_or(3), a.max_n.unwrap_or(8))],
        Suite::Lemmas => vec![verify::path_identities(a.max_n.unwrap_or(10))],
        Suite::Recovery => vec![verify::recovery(a.k.unwrap_or(3), a.max_n.unwrap_or(8)).0],
        Suite::Shapechain => laws(false)?.iter().map(|p| verify::shape_law(p, steps(p))).collect(),
        Suite::Intertwining => laws(false)?
            .iter()
            .map(|p| verify::intertwining(p, a.max_size.unwrap_or(if p.len() <= 2 { 8 } else { 6 })))
            .collect(),
        Suite::Theorem11 => laws(true)?.iter().map(|p| verify::g_law(p, a.max_n.unwrap_or(6))).collect(),
        Suite::Conditional => laws(false)?.iter().map(|p| verify::conditional_law(p, a.max_n.unwrap_or(6))).collect(),
        Suite::Continuous => vec![
            verify::continuous_embedding(a.k.unwrap_or(3), a.max_n.unwrap_or(8), 6),
            verify::continuous_random(a.cases, cli.seed),
        ],
        Suite::Formulas => {
            let mut out = vec![verify::k2_vs_mixture(20, cli.seed, cli.tolerance)];
            out.extend(verify::queuelen_mc(a.runs, cli.seed)?.iter().map(mc_report));
            out.push(mc_report(&verify::k3_mc(a.runs, cli.seed)?));
            out.push(verify::barnes_suite(6, 6));
            out
        }
        Suite::Survival => {
            let s = verify::survival(a.horizon, a.paths, cli.seed)?;
            let mut r = SuiteReport::new("survival ratio p=(1/4,3/4), x=(0,0), x'=(0,1)");
            r.check(s.agrees(3.0), || format!("ratio {:.6} ± {:.6} vs {:.6}", s.ratio, s.stderr, s.target));
            vec![r]
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Worked,
                Suite::Theorem31,
                Suite::Greene,
                Suite::Lemmas,
                Suite::Recovery,
                Suite::Shapechain,
                Suite::Intertwining,
                Suite::Theorem11,
                Suite::Conditional,
                Suite::Continuous,
            ] {
                out.extend(suite_reports(cli, a, s)?);
            }
            out
        }
    })
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs) -> Result<String, CliError> {
    let reports = suite_reports(cli, a, a.suite)?;
    let passed = reports.iter().all(SuiteReport::passed);
    let out = if cli.json {
        let list: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.name,
                    "passed": r.passed(),
                    "checked": r.checked,
                    "failures": r.failures,
                    "first_failure": r.first_failure,
                })
            })
            .collect();
        to_json(&list)
    } else {
        reports.iter().map(|r| format!("{} {r}\n", if r.passed() { "PASS" } else { "FAIL" })).collect()
    };
    if passed {
        Ok(out)
    } else {
        Err(CliError::Verification(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("pathrsk").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn rsk_worked_example() {
        let out = run(&parse(&["rsk", "--word", "3112322", "--k", "3"])).unwrap();
        assert!(out.starts_with("1123\n22\n3\n"));
    }

    #[test]
    fn invalid_letter_is_input_error() {
        let err = run(&parse(&["rsk", "--word", "4", "--k", "3"])).unwrap_err();
        assert!(matches!(err, CliError::Core(_)));
    }

    #[test]
    fn shape_dist_json() {
        let out = run(&parse(&["--json", "shape-dist", "--p", "1/2,1/2", "--n", "2"])).unwrap();
        let v: BTreeMap<String, String> = serde_json::from_str(&out).unwrap();
        assert_eq!(v["2,0"], "3/4");
        assert_eq!(v["1,1"], "1/4");
    }

    #[test]
    fn default_laws_by_k() {
        assert_eq!(default_laws(Some(3), true).len(), 1);
        assert_eq!(default_laws(Some(2), true).len(), 3);
        assert_eq!(default_laws(None, false).len(), 3);
    }
}
