//! Command implementations for the `gmono` binary.
//!
//! Every command returns an [`Output`]: the text to print plus a verdict.
//! Input and domain errors surface as `Err` and map to exit code 2.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use gmono::analytic::AnalyticFunction;
use gmono::e3space::{Point3, Triple};
use gmono::json as gj;
use gmono::monogenic::{cauchy_eval, cr_residual, GMonogenicMap, QuaternionField, Side, DEFAULT_CR_STEP};
use gmono::pde::{assemble_triples, harmonic_solution, Part, PdeOperator, FD_STEP_LOW_ORDER};
use gmono::qalg::{IjkQuaternion, Quaternion};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_CR_TOL: f64 = 1e-7;
pub const DEFAULT_LAPLACE_TOL: f64 = 1e-8;
pub const DEFAULT_CAUCHY_TOL: f64 = 1e-10;
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;
const IJK_TOL: f64 = 1e-15;

#[derive(Debug, Parser)]
#[command(name = "gmono", version, about = "G-monogenic mappings over the complexified quaternions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Pass/fail tolerance (command-specific default).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Finite-difference step (command-specific default).
    #[arg(long, global = true)]
    pub step: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multiplication table and the IJK axiom checks.
    Table,
    /// Evaluate a map at one point.
    Eval {
        /// Map or series JSON (file path or inline).
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Finite-difference Cauchy–Riemann residuals over a grid.
    CheckCr {
        #[arg(long, required_unless_present = "demo")]
        map: Option<String>,
        #[command(flatten)]
        grid: GridArgs,
        /// Built-in non-monogenic field instead of a map.
        #[arg(long, value_enum)]
        demo: Option<Demo>,
    },
    /// Roots b of the characteristic equation for given values of a.
    SolveChar {
        /// Preset name (laplace3d, example5), PDE JSON file or inline JSON.
        #[arg(long)]
        pde: String,
        #[arg(long = "a", allow_hyphen_values = true, required = true)]
        a: Vec<String>,
    },
    /// Harmonic field U = Re/Im F(x + i y sin t + i z cos t) on a grid, as CSV.
    Laplace {
        /// Function JSON (file or inline) or a preset: w, w2, w3, exp.
        #[arg(long = "f")]
        f: String,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum, default_value_t = PartArg::Re)]
        part: PartArg,
        #[command(flatten)]
        grid: GridArgs,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Finite-difference step for the Laplacian residual.
        #[arg(long)]
        verify: Option<f64>,
    },
    /// Compare the Cauchy integral representation with direct evaluation.
    CauchyCheck {
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_delimiter = ',', default_value = "32,64,128,256")]
        nodes: Vec<usize>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value = "-1,-1,-1", allow_hyphen_values = true)]
    pub min: String,
    #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
    pub max: String,
    /// One count for all axes or three comma-separated counts.
    #[arg(long, default_value = "5")]
    pub counts: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    /// `ξ2 e1` over the triple T0.
    Counterexample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    Re,
    Im,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    /// Extra lines for stderr (used when stdout carries CSV).
    pub diagnostics: String,
    pub pass: bool,
}

impl Output {
    fn new(text: String, pass: bool) -> Self {
        Output { text, diagnostics: String::new(), pass }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Table => Ok(cmd_table(cli.format, Quaternion::product)),
        Command::Eval { map, point } => cmd_eval(cli, map, point),
        Command::CheckCr { map, grid, demo } => cmd_check_cr(cli, map.as_deref(), grid, *demo),
        Command::SolveChar { pde, a } => cmd_solve_char(cli, pde, a),
        Command::Laplace { f, t, part, grid, out, verify } => {
            cmd_laplace(cli, f, t, *part, grid, out.as_deref(), *verify)
        }
        Command::CauchyCheck { map, point, nodes } => cmd_cauchy_check(cli, map, point, nodes),
    }
}

// ---------------------------------------------------------------- parsing

fn parse_reals(s: &str, n: usize, what: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        bail!("{what} must have {n} comma-separated values, got {s:?}");
    }
    parts
        .iter()
        .map(|p| {
            let v: f64 = p.parse().with_context(|| format!("invalid number {p:?} in {what}"))?;
            if !v.is_finite() {
                bail!("non-finite value in {what}");
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_complex(s: &str) -> Result<Complex64> {
    let v = parse_reals(s, 2, "complex number (re,im)")?;
    Ok(Complex64::new(v[0], v[1]))
}

pub fn parse_point(s: &str) -> Result<Point3> {
    let v = parse_reals(s, 3, "point (x,y,z)")?;
    Ok(Point3::new(v[0], v[1], v[2]))
}

/// Inline JSON when the argument looks like JSON, otherwise a file path.
fn load_json_arg(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') || t.starts_with('"') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))
}

fn load_map(arg: &str) -> Result<GMonogenicMap> {
    Ok(gj::parse_map(&load_json_arg(arg)?)?)
}

fn load_pde(arg: &str) -> Result<PdeOperator> {
    if let Some(op) = PdeOperator::preset(arg) {
        return Ok(op);
    }
    Ok(gj::parse_pde(&load_json_arg(arg)?)?)
}

pub fn function_preset(name: &str) -> Option<AnalyticFunction> {
    match name {
        "w" => Some(AnalyticFunction::identity()),
        "w2" => Some(AnalyticFunction::monomial(2)),
        "w3" => Some(AnalyticFunction::monomial(3)),
        "exp" => Some(AnalyticFunction::exp()),
        _ => None,
    }
}

fn load_function(arg: &str) -> Result<AnalyticFunction> {
    if let Some(f) = function_preset(arg) {
        return Ok(f);
    }
    Ok(gj::parse_function(&load_json_arg(arg)?)?)
}

fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn fmt_c(c: Complex64) -> String {
    format!("{}{:+}i", c.re, c.im)
}

fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

// ---------------------------------------------------------------- grid

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub min: [f64; 3],
    pub max: [f64; 3],
    pub counts: [usize; 3],
}

impl GridSpec {
    /// A box with `min == max` on an axis is allowed and repeats that
    /// coordinate.
    pub fn new(min: [f64; 3], max: [f64; 3], counts: [usize; 3]) -> Result<Self> {
        for k in 0..3 {
            if !(min[k] <= max[k]) {
                bail!("grid min must not exceed max on axis {k}");
            }
            if counts[k] < 2 {
                bail!("grid counts must be at least 2, got {}", counts[k]);
            }
        }
        Ok(GridSpec { min, max, counts })
    }

    fn from_args(g: &GridArgs) -> Result<Self> {
        let min = parse_reals(&g.min, 3, "--min")?;
        let max = parse_reals(&g.max, 3, "--max")?;
        let counts: Vec<usize> = g
            .counts
            .split(',')
            .map(|c| c.trim().parse::<usize>().with_context(|| format!("invalid count {c:?}")))
            .collect::<Result<_>>()?;
        let counts = match counts.as_slice() {
            [n] => [*n; 3],
            [a, b, c] => [*a, *b, *c],
            _ => bail!("--counts takes one or three values"),
        };
        GridSpec::new([min[0], min[1], min[2]], [max[0], max[1], max[2]], counts)
    }

    pub fn len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn coord(&self, axis: usize, i: usize) -> f64 {
        let t = i as f64 / (self.counts[axis] - 1) as f64;
        self.min[axis] + (self.max[axis] - self.min[axis]) * t
    }

    /// Point with linear index `idx`; x varies slowest, z fastest.
    pub fn point(&self, idx: usize) -> Point3 {
        let [_, ny, nz] = self.counts;
        let (i, j, k) = (idx / (ny * nz), (idx / nz) % ny, idx % nz);
        Point3::new(self.coord(0, i), self.coord(1, j), self.coord(2, k))
    }
}

// ---------------------------------------------------------------- table

const BASIS_NAMES: [&str; 4] = ["e1", "e2", "e3", "e4"];

/// The idempotent-basis multiplication table: entry `[i][j]` is `Some(k)` for `e_i e_j = e_k`.
const EXPECTED_TABLE: [[Option<usize>; 4]; 4] = [
    [Some(0), None, Some(2), None],
    [None, Some(1), None, Some(3)],
    [None, Some(2), None, Some(0)],
    [Some(3), None, Some(1), None],
];

#[derive(Debug, Clone, Serialize)]
pub struct TableEntry {
    pub left: &'static str,
    pub right: &'static str,
    pub expected: String,
    pub product: [[f64; 2]; 4],
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub error: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub entries: Vec<TableEntry>,
    pub axioms: Vec<AxiomCheck>,
    pub pass: bool,
}

/// Checks a multiplication against the basis table and the quaternion axioms.
/// The multiplication is a parameter so that a corrupted one can be tested.
pub fn table_report(mul: impl Fn(&Quaternion, &Quaternion) -> Quaternion) -> TableReport {
    let mut entries = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let got = mul(&Quaternion::basis(i + 1), &Quaternion::basis(j + 1));
            let (want, expected) = match EXPECTED_TABLE[i][j] {
                Some(k) => (Quaternion::basis(k + 1), BASIS_NAMES[k].to_string()),
                None => (Quaternion::ZERO, "0".to_string()),
            };
            entries.push(TableEntry {
                left: BASIS_NAMES[i],
                right: BASIS_NAMES[j],
                expected,
                product: got.e.map(pair),
                ok: got == want,
            });
        }
    }

    let q = |v: IjkQuaternion| Quaternion::from_ijk(&v);
    let (one, i, j, k) = (
        q(IjkQuaternion::one()),
        q(IjkQuaternion::unit_i()),
        q(IjkQuaternion::unit_j()),
        q(IjkQuaternion::unit_k()),
    );
    let cases: [(&'static str, Quaternion, Quaternion, Quaternion); 9] = [
        ("I*I = -1", i, i, -one),
        ("J*J = -1", j, j, -one),
        ("K*K = -1", k, k, -one),
        ("I*J = K", i, j, k),
        ("J*K = I", j, k, i),
        ("K*I = J", k, i, j),
        ("J*I = -K", j, i, -k),
        ("K*J = -I", k, j, -i),
        ("I*K = -J", i, k, -j),
    ];
    let axioms: Vec<AxiomCheck> = cases
        .iter()
        .map(|(name, a, b, want)| {
            let got = mul(a, b).to_ijk();
            let want = want.to_ijk();
            let error = (0..4).map(|n| (got.q[n] - want.q[n]).norm()).fold(0.0, f64::max);
            AxiomCheck { name, error, ok: error <= IJK_TOL }
        })
        .collect();
    let pass = entries.iter().all(|e| e.ok) && axioms.iter().all(|a| a.ok);
    TableReport { entries, axioms, pass }
}

pub fn cmd_table(format: Format, mul: impl Fn(&Quaternion, &Quaternion) -> Quaternion) -> Output {
    let report = table_report(mul);
    let text = match format {
        Format::Json => to_json_string(&report),
        Format::Text => {
            let mut s = String::new();
            for e in &report.entries {
                let got = Quaternion { e: e.product.map(|[re, im]| Complex64::new(re, im)) };
                let status = if e.ok { "OK" } else { "MISMATCH" };
                let _ = writeln!(s, "{}*{} = {:<3} {status}  ({got})", e.left, e.right, e.expected);
            }
            for a in &report.axioms {
                let status = if a.ok { "OK" } else { "FAIL" };
                let _ = writeln!(s, "{:<9} {status}  (error {:e})", a.name, a.error);
            }
            let _ = writeln!(s, "{}", if report.pass { "table: all exact" } else { "table: FAILED" });
            s
        }
    };
    Output::new(text, report.pass)
}

// ---------------------------------------------------------------- eval

fn cmd_eval(cli: &Cli, map: &str, point: &str) -> Result<Output> {
    let m = load_map(map)?;
    let p = parse_point(point)?;
    let value = m.eval(&p)?;
    let (xi1, xi2) = m.triple().xi(&p);
    let text = match cli.format {
        Format::Json => to_json_string(&json!({
            "point": p.to_array(),
            "value": gj::quaternion_to_value(&value),
            "xi1": pair(xi1),
            "xi2": pair(xi2),
        })),
        Format::Text => format!("value = {value}\nxi1 = {}\nxi2 = {}\n", fmt_c(xi1), fmt_c(xi2)),
    };
    Ok(Output::new(text, true))
}

// ---------------------------------------------------------------- reports

#[derive(Debug, Clone, Serialize)]
pub struct PointRecord {
    pub point: [f64; 3],
    pub residuals: Vec<f64>,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub points: usize,
    pub max: f64,
    pub mean: f64,
    pub argmax: [f64; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub config: serde_json::Value,
    pub records: Vec<PointRecord>,
    pub summary: Summary,
    pub tol: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(config: serde_json::Value, records: Vec<PointRecord>, tol: f64) -> Self {
        let mut max = f64::NEG_INFINITY;
        let mut argmax = [f64::NAN; 3];
        let mut sum = 0.0;
        for r in &records {
            sum += r.residual;
            // NaN residuals count as the worst point
            if r.residual > max || r.residual.is_nan() && !max.is_nan() {
                max = r.residual;
                argmax = r.point;
            }
        }
        let mean = if records.is_empty() { 0.0 } else { sum / records.len() as f64 };
        if records.is_empty() {
            max = 0.0;
        }
        let pass = max <= tol;
        ResidualReport {
            config,
            summary: Summary { points: records.len(), max, mean, argmax },
            records,
            tol,
            pass,
        }
    }

    fn render(&self, format: Format, title: &str) -> String {
        match format {
            Format::Json => to_json_string(self),
            Format::Text => {
                let s = &self.summary;
                format!(
                    "{title}: {} points, max residual {:e} at ({}, {}, {}), mean {:e}, tol {:e}: {}\n",
                    s.points,
                    s.max,
                    s.argmax[0],
                    s.argmax[1],
                    s.argmax[2],
                    s.mean,
                    self.tol,
                    if self.pass { "PASS" } else { "FAIL" }
                )
            }
        }
    }
}

/// Evaluates `f` at every grid point in parallel; results keep grid order.
fn sweep<T, F>(grid: &GridSpec, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Point3) -> Result<T> + Sync,
{
    (0..grid.len()).into_par_iter().map(|i| f(grid.point(i))).collect()
}

// ---------------------------------------------------------------- check-cr

/// `ξ2 e1` over T0: satisfies neither Cauchy–Riemann system.
pub fn counterexample_field() -> impl QuaternionField + Sync {
    let t = Triple::t0();
    move |p: &Point3| -> gmono::error::Result<Quaternion> {
        Ok(Quaternion::E1.scale(t.xi(p).1))
    }
}

fn cmd_check_cr(cli: &Cli, map: Option<&str>, grid: &GridArgs, demo: Option<Demo>) -> Result<Output> {
    let grid = GridSpec::from_args(grid)?;
    let step = cli.step.unwrap_or(DEFAULT_CR_STEP);
    let tol = cli.tol.unwrap_or(DEFAULT_CR_TOL);
    let (field, side, triple, source): (Box<dyn QuaternionField + Sync>, Side, Triple, String) =
        match (demo, map) {
            (Some(Demo::Counterexample), _) => {
                (Box::new(counterexample_field()), Side::Right, Triple::t0(), "demo:counterexample".into())
            }
            (None, Some(path)) => {
                let m = load_map(path)?;
                let (side, triple) = (m.side(), *m.triple());
                (Box::new(m), side, triple, path.to_string())
            }
            (None, None) => bail!("check-cr needs --map or --demo"),
        };
    let records = sweep(&grid, |p| {
        let (ry, rz) = cr_residual(field.as_ref(), side, &triple, &p, step)?;
        Ok(PointRecord { point: p.to_array(), residuals: vec![ry, rz], residual: ry.max(rz) })
    })?;
    let config = json!({
        "command": "check-cr",
        "source": source,
        "side": gj::SideJson::from(side),
        "triple": gj::TripleJson::from(&triple),
        "grid": grid,
        "step": step,
    });
    let report = ResidualReport::new(config, records, tol);
    Ok(Output::new(report.render(cli.format, "check-cr"), report.pass))
}

// ---------------------------------------------------------------- solve-char

fn cmd_solve_char(cli: &Cli, pde: &str, a_args: &[String]) -> Result<Output> {
    let op = load_pde(pde)?;
    let tol = cli.tol.unwrap_or(DEFAULT_ROOT_TOL);
    let mut solutions = Vec::new();
    let mut pairs = Vec::new();
    let mut pass = true;
    for a in a_args {
        let a = parse_complex(a)?;
        let sol = op.solve_for_b(a)?;
        pass &= sol.roots.iter().all(|r| r.residual <= tol);
        pairs.extend(sol.pairs());
        solutions.push(sol);
    }
    let triples = assemble_triples(&pairs);
    let text = match cli.format {
        Format::Json => to_json_string(&json!({
            "pde": gj::PdeJson::from(&op),
            "solutions": solutions.iter().map(|s| json!({
                "a": pair(s.a),
                "poly": s.poly.iter().copied().map(pair).collect::<Vec<_>>(),
                "roots": s.roots.iter().map(|r| json!({"b": pair(r.b), "residual": r.residual})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "triples": triples.iter().map(|(t, r)| json!({
                "triple": gj::TripleJson::from(t),
                "valid": r.is_valid(),
                "problems": r.problems(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for sol in &solutions {
                let _ = writeln!(s, "a = {}", fmt_c(sol.a));
                if sol.roots.is_empty() {
                    let _ = writeln!(s, "  no roots (polynomial in b is constant)");
                }
                for r in &sol.roots {
                    let _ = writeln!(s, "  b = {}  residual {:e}", fmt_c(r.b), r.residual);
                }
            }
            for (t, r) in triples.iter().filter(|(_, r)| r.is_valid()) {
                let _ = writeln!(
                    s,
                    "valid triple: a1={} b1={} a2={} b2={} (independence {:e})",
                    fmt_c(t.a1),
                    fmt_c(t.b1),
                    fmt_c(t.a2),
                    fmt_c(t.b2),
                    r.independence_measure
                );
            }
            s
        }
    };
    Ok(Output::new(text, pass))
}

// ---------------------------------------------------------------- laplace

/// One CSV row per grid point: `x,y,z,u,fd_residual`, shortest round-trip
/// decimal formatting.
pub fn laplace_csv(
    f: AnalyticFunction,
    t: Complex64,
    part: Part,
    grid: &GridSpec,
    step: f64,
) -> Result<(String, Vec<PointRecord>)> {
    let u = harmonic_solution(f, t, part);
    let lap = PdeOperator::laplace3d();
    let rows = sweep(grid, |p| {
        let value = u.eval(&p)?;
        let residual = lap.apply_fd(&u, &p, step)?.re;
        Ok((p, value, residual))
    })?;
    let mut csv = String::from("x,y,z,u,fd_residual\n");
    let mut records = Vec::with_capacity(rows.len());
    for (p, value, residual) in rows {
        let _ = writeln!(csv, "{},{},{},{},{}", p.x, p.y, p.z, value, residual);
        records.push(PointRecord { point: p.to_array(), residuals: vec![residual], residual: residual.abs() });
    }
    Ok((csv, records))
}

#[allow(clippy::too_many_arguments)]
fn cmd_laplace(
    cli: &Cli,
    f: &str,
    t: &str,
    part: PartArg,
    grid: &GridArgs,
    out: Option<&Path>,
    verify: Option<f64>,
) -> Result<Output> {
    let func = load_function(f)?;
    let t = parse_complex(t)?;
    let grid = GridSpec::from_args(grid)?;
    let step = verify.or(cli.step).unwrap_or(FD_STEP_LOW_ORDER);
    if !(step > 0.0) {
        return Err(anyhow!("verification step must be positive"));
    }
    let tol = cli.tol.unwrap_or(DEFAULT_LAPLACE_TOL);
    let part = match part {
        PartArg::Re => Part::Re,
        PartArg::Im => Part::Im,
    };
    let (csv, records) = laplace_csv(func, t, part, &grid, step)?;
    let config = json!({
        "command": "laplace",
        "f": f,
        "t": pair(t),
        "part": if part == Part::Re { "re" } else { "im" },
        "grid": grid,
        "step": step,
    });
    let report = ResidualReport::new(config, records, tol);
    let summary = report.render(cli.format, "laplace");
    match out {
        Some(path) => {
            std::fs::write(path, &csv).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(Output::new(summary, report.pass))
        }
        None => Ok(Output { text: csv, diagnostics: summary, pass: report.pass }),
    }
}

// ---------------------------------------------------------------- cauchy-check

fn cmd_cauchy_check(cli: &Cli, map: &str, point: &str, nodes: &[usize]) -> Result<Output> {
    let m = load_map(map)?;
    let p = parse_point(point)?;
    let tol = cli.tol.unwrap_or(DEFAULT_CAUCHY_TOL);
    if nodes.is_empty() {
        bail!("--nodes needs at least one value");
    }
    let direct = m.eval(&p)?;
    let mut rows = Vec::new();
    for &n in nodes {
        let err = (cauchy_eval(&m, &p, n)? - direct).norm();
        rows.push((n, err));
    }
    let final_err = rows.last().map(|r| r.1).unwrap_or(f64::NAN);
    let pass = final_err <= tol;
    let text = match cli.format {
        Format::Json => to_json_string(&json!({
            "point": p.to_array(),
            "value": gj::quaternion_to_value(&direct),
            "convergence": rows.iter().map(|(n, e)| json!({"nodes": n, "error": e})).collect::<Vec<_>>(),
            "tol": tol,
            "pass": pass,
        })),
        Format::Text => {
            let mut s = String::from("nodes  error\n");
            for (n, e) in &rows {
                let _ = writeln!(s, "{n:>5}  {e:e}");
            }
            let _ = writeln!(s, "{}", if pass { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Output::new(text, pass))
}
