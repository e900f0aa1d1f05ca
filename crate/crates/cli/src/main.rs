use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use dualgroth::lattice::{
    enumerate_systems, from_rpp, good_sum, lgv_signed_sum, path_involution, render_svg, to_rpp, PathSystem, DEFAULT_CAP,
};
use dualgroth::{g_via, Formula, FormulaError, LatticeError, MultiPoly, Rpp, SkewShape};
use serde_json::{json, Value};

const WORKERS_VAR: &str = "DUALGROTH_WORKERS";

#[derive(Parser)]
#[command(
    name = "dualgroth",
    version,
    about = "Dual Grothendieck polynomials: determinants, tableaux and lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Action {
    Lgv,
    Orbits,
    GoodSum,
    Bijection,
}

#[derive(Subcommand)]
enum Command {
    /// Print g_{λ/μ}(x_1..x_m) computed by one formula.
    Compute {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "oracle")]
        formula: Formula,
        /// Keep the t-variables.
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare formulas over every skew shape in a size-bounded family.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Defaults to --max-size.
        #[arg(long)]
        max_cols: Option<usize>,
        /// Defaults to --max-size.
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "jt_e,jt_h_dual,oracle")]
        formulas: Vec<Formula>,
        #[arg(long)]
        straight_only: bool,
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Work with the nonintersecting path systems of a shape.
    Lattice {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        action: Action,
        /// Number of paths; defaults to λ₁.
        #[arg(long)]
        n: Option<usize>,
        /// Reverse plane partition as JSON text or a path to a JSON file
        /// (bijection only).
        #[arg(long)]
        from_rpp: Option<String>,
        /// Write an SVG of the produced (or first enumerated) system.
        #[arg(long)]
        render: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failure modes and their exit codes.
enum Failure {
    Divergence(String),
    Usage(String),
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::CapExceeded { cap } => Failure::Usage(format!(
                "refusing: more than {cap} path systems; pass a larger --cap or pick a smaller shape or m"
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { shape, m, formula, refined, format } => compute(&shape, m, formula, refined, format),
        Command::Verify { max_size, max_cols, max_rows, m, formulas, straight_only, refined, format } => {
            let family = Family {
                max_size,
                max_cols: max_cols.unwrap_or(max_size),
                max_rows: max_rows.unwrap_or(max_size),
                straight_only,
            };
            verify(&family, &m, &formulas, refined, format)
        }
        Command::Lattice { shape, m, action, n, from_rpp, render, cap, format } => {
            let n = n.unwrap_or(shape.outer().first());
            lattice(&shape, m, n, action, from_rpp.as_deref(), render.as_deref(), cap, format)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Divergence(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_poly(p: &MultiPoly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn compute(shape: &SkewShape, m: usize, formula: Formula, refined: bool, format: Format) -> Result<(), Failure> {
    print_poly(&g_via(formula, shape, m, refined)?, format);
    Ok(())
}

struct Family {
    max_size: usize,
    max_cols: usize,
    max_rows: usize,
    straight_only: bool,
}

impl Family {
    fn shapes(&self) -> Vec<SkewShape> {
        SkewShape::family(self.max_size, self.max_cols, self.max_rows)
            .into_iter()
            .filter(|s| !self.straight_only || s.is_straight())
            .collect()
    }

    fn describe(&self) -> String {
        let kind = if self.straight_only { "straight shapes" } else { "skew shapes λ/μ" };
        format!("{kind} with |λ| ≤ {}, λ₁ ≤ {}, ℓ(λ) ≤ {}", self.max_size, self.max_cols, self.max_rows)
    }
}

struct Counterexample {
    shape: SkewShape,
    m: usize,
    left: (Formula, MultiPoly),
    right: (Formula, MultiPoly),
}

#[derive(Default)]
struct CaseOutcome {
    comparisons: usize,
    skipped: usize,
    counterexample: Option<Counterexample>,
}

struct VerifyReport {
    family: String,
    formulas: Vec<Formula>,
    m_values: Vec<usize>,
    shapes_checked: usize,
    comparisons: usize,
    skipped: usize,
    counterexample: Option<Counterexample>,
    elapsed: Duration,
}

impl VerifyReport {
    fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn to_json(&self) -> Value {
        let cx = self.counterexample.as_ref().map(|c| {
            json!({
                "shape": c.shape.to_string(),
                "m": c.m,
                "left": { "formula": c.left.0.name(), "value": c.left.1.to_string() },
                "right": { "formula": c.right.0.name(), "value": c.right.1.to_string() },
            })
        });
        json!({
            "family": self.family,
            "formulas": self.formulas.iter().map(|f| f.name()).collect::<Vec<_>>(),
            "m": self.m_values,
            "shapes_checked": self.shapes_checked,
            "comparisons": self.comparisons,
            "skipped_inapplicable": self.skipped,
            "pass": self.passed(),
            "counterexample": cx,
        })
    }

    fn to_text(&self) -> String {
        let names: Vec<&str> = self.formulas.iter().map(|f| f.name()).collect();
        let mut out = format!(
            "family: {}\nformulas: {}\nm: {:?}\nshapes checked: {}\ncomparisons: {} ({} inapplicable skipped)\nelapsed: {:.2?}\n",
            self.family,
            names.join(", "),
            self.m_values,
            self.shapes_checked,
            self.comparisons,
            self.skipped,
            self.elapsed
        );
        match &self.counterexample {
            None => out.push_str("result: PASS"),
            Some(c) => out.push_str(&format!(
                "result: FAIL at {} with m = {}\n  {}: {}\n  {}: {}",
                c.shape, c.m, c.left.0, c.left.1, c.right.0, c.right.1
            )),
        }
        out
    }
}

fn check_case(shape: &SkewShape, m: usize, formulas: &[Formula], refined: bool) -> Result<CaseOutcome, FormulaError> {
    let mut outcome = CaseOutcome::default();
    let mut reference: Option<(Formula, MultiPoly)> = None;
    for &f in formulas {
        let value = match g_via(f, shape, m, refined) {
            Ok(v) => v,
            Err(FormulaError::Inapplicable { .. }) => {
                outcome.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        match &reference {
            None => reference = Some((f, value)),
            Some((rf, rv)) => {
                outcome.comparisons += 1;
                if *rv != value {
                    outcome.counterexample =
                        Some(Counterexample { shape: shape.clone(), m, left: (*rf, rv.clone()), right: (f, value) });
                    return Ok(outcome);
                }
            }
        }
    }
    Ok(outcome)
}

fn worker_count() -> usize {
    std::env::var(WORKERS_VAR)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn verify(
    family: &Family,
    m_values: &[usize],
    formulas: &[Formula],
    refined: bool,
    format: Format,
) -> Result<(), Failure> {
    let started = Instant::now();
    let mut formulas = formulas.to_vec();
    if !formulas.contains(&Formula::Oracle) {
        formulas.push(Formula::Oracle);
    }
    let shapes = family.shapes();
    let cases: Vec<(usize, usize)> = (0..shapes.len()).flat_map(|s| m_values.iter().map(move |&m| (s, m))).collect();

    let workers = worker_count().min(cases.len()).max(1);
    let chunk = cases.len().div_ceil(workers).max(1);
    let outcomes: Vec<Result<CaseOutcome, FormulaError>> = thread::scope(|scope| {
        let handles: Vec<_> = cases
            .chunks(chunk)
            .map(|part| {
                let (shapes, formulas) = (&shapes, &formulas);
                scope.spawn(move || {
                    part.iter().map(|&(s, m)| check_case(&shapes[s], m, formulas, refined)).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("verify worker panicked")).collect()
    });

    let mut report = VerifyReport {
        family: family.describe(),
        formulas,
        m_values: m_values.to_vec(),
        shapes_checked: shapes.len(),
        comparisons: 0,
        skipped: 0,
        counterexample: None,
        elapsed: Duration::ZERO,
    };
    // merged in case order, so the first counterexample is deterministic
    for o in outcomes {
        let o = o?;
        report.comparisons += o.comparisons;
        report.skipped += o.skipped;
        if report.counterexample.is_none() {
            report.counterexample = o.counterexample;
        }
    }
    report.elapsed = started.elapsed();

    match format {
        Format::Text => println!("{}", report.to_text()),
        Format::Json => {
            println!("{}", report.to_json());
            eprintln!("elapsed: {:.2?}", report.elapsed);
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Divergence("verification failed".into()))
    }
}

fn read_rpp(arg: &str) -> Result<Rpp, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?
    };
    Rpp::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn write_svg(path: &Path, sys: &PathSystem) -> Result<(), Failure> {
    fs::write(path, render_svg(sys)).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn lattice(
    shape: &SkewShape,
    m: usize,
    n: usize,
    action: Action,
    rpp_arg: Option<&str>,
    render: Option<&Path>,
    cap: usize,
    format: Format,
) -> Result<(), Failure> {
    if n < shape.outer().first() {
        return Err(Failure::Usage(format!("--n {n} is below λ₁ = {}", shape.outer().first())));
    }
    if rpp_arg.is_some() && action != Action::Bijection {
        return Err(Failure::Usage("--from-rpp only applies to --action bijection".into()));
    }
    if let Some(arg) = rpp_arg {
        let rpp = read_rpp(arg)?;
        if rpp.shape() != shape {
            return Err(Failure::Usage(format!("RPP has shape {}, expected {shape}", rpp.shape())));
        }
        let sys = from_rpp(&rpp, n, m)?;
        match format {
            Format::Json => println!("{}", sys.to_json()),
            Format::Text => {
                println!("system: {}", sys.to_json());
                println!("weight: {}", sys.weight());
            }
        }
        if let Some(path) = render {
            write_svg(path, &sys)?;
        }
        return Ok(());
    }

    match action {
        Action::Lgv => print_poly(&lgv_signed_sum(shape, n, m, cap)?, format),
        Action::GoodSum => print_poly(&good_sum(shape, n, m, cap)?, format),
        Action::Orbits => orbits(shape, n, m, cap, format)?,
        Action::Bijection => bijection(shape, n, m, cap, format)?,
    }
    if let Some(path) = render {
        let systems = enumerate_systems(shape, n, m, cap)?;
        let first = systems.first().ok_or_else(|| Failure::Usage("no nonintersecting system to render".into()))?;
        write_svg(path, first)?;
    }
    Ok(())
}

fn orbits(shape: &SkewShape, n: usize, m: usize, cap: usize, format: Format) -> Result<(), Failure> {
    let systems = enumerate_systems(shape, n, m, cap)?;
    let index: HashMap<&PathSystem, usize> = systems.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let (mut good, mut paired) = (0usize, 0usize);
    let mut problems = Vec::new();
    let mut cancelled = MultiPoly::zero();
    for (i, p) in systems.iter().enumerate() {
        let q = path_involution(p)?;
        if q == *p {
            good += 1;
            continue;
        }
        cancelled += &(if p.sign() > 0 { p.weight() } else { -p.weight() });
        match index.get(&q) {
            None => problems.push(format!("system {i} maps outside the nonintersecting systems")),
            Some(&j) => {
                if path_involution(&q)? != *p {
                    problems.push(format!("system {i} is not returned by its image {j}"));
                } else if q.sign() == p.sign() || q.weight() != p.weight() {
                    problems.push(format!("systems {i} and {j} do not cancel"));
                } else {
                    paired += 1;
                }
            }
        }
    }
    let ok = problems.is_empty() && cancelled.is_zero();
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "shape": shape.to_string(), "n": n, "m": m,
                "systems": systems.len(), "good": good, "paired": paired,
                "signed_sum_of_paired": cancelled.to_string(), "pass": ok,
            })
        ),
        Format::Text => {
            println!("systems: {}", systems.len());
            println!("good (fixed): {good}");
            println!("paired: {paired} in {} orbits", paired / 2);
            println!("signed sum over paired systems: {cancelled}");
            for p in &problems {
                println!("problem: {p}");
            }
            println!("result: {}", if ok { "PASS" } else { "FAIL" });
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Divergence("involution check failed".into()))
    }
}

fn bijection(shape: &SkewShape, n: usize, m: usize, cap: usize, format: Format) -> Result<(), Failure> {
    let systems = enumerate_systems(shape, n, m, cap)?;
    let mut rpps = Vec::new();
    for p in &systems {
        if path_involution(p)? != *p {
            continue;
        }
        let t = to_rpp(p)?;
        if from_rpp(&t, n, m)? != *p {
            return Err(Failure::Divergence(format!("round trip fails for {}", p.to_json())));
        }
        rpps.push(t);
    }
    match format {
        Format::Json => {
            let items: Vec<String> = rpps.iter().map(Rpp::to_json).collect();
            println!("[{}]", items.join(","));
        }
        Format::Text => {
            for t in &rpps {
                println!("{}", t.to_json());
            }
            println!("good systems: {} (all round-trip)", rpps.len());
        }
    }
    Ok(())
}
