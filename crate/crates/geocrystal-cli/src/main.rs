//! `geocrystal` command-line frontend: JSON in, JSON out.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
//! parse or domain errors.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use geocrystal::crystal::{e_axis, r_i, structure_maps, weyl_s, Axis, CrystalData};
use geocrystal::grsk::{central_charge, central_charge_q, glue, grsk_insert, grsk_inverse, grsk_local, split, PqPair};
use geocrystal::gt::{gt_decoration, gt_e, gt_e_explicit, gt_maps, phi_param, psi_param, GtPattern};
use geocrystal::loopsym::{ExponentMatrix, LoopPoly, LoopRing, PolyTerm};
use geocrystal::trop::{q_analogue, schensted_rsk, trop_central_charge, trop_crystal_e, trop_grsk, Direction};
use geocrystal::verify::{find_suite, run_suite, RunConfig, SUITES};
use geocrystal::{Grid, Rational, Semifield, SfMatrix, TropInt};

#[derive(Parser, Debug)]
#[command(name = "geocrystal", version, about = "Geometric crystals, geometric RSK and loop symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON input file; standard input when absent.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    output: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Geometric)]
    mode: Mode,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    trials: Option<u64>,
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    i: Option<usize>,
    #[arg(long, global = true)]
    j: Option<usize>,
    /// Crystal parameter as a rational string such as `3/2`; `1` or `-1` in tropical mode.
    #[arg(long, global = true, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, global = true)]
    suite: Option<String>,
    #[arg(long, global = true)]
    list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Geometric,
    Tropical,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matrix to {"P", "Q", "glued", "shape"}.
    Grsk,
    /// Glued matrix or {"P", "Q"} back to the input matrix.
    GrskInverse,
    /// Schensted RSK of a nonnegative integer matrix.
    Rsk,
    /// Tropical gRSK of an integer matrix, glued.
    TropGrsk,
    /// Crystal operators on matrices.
    Crystal { op: CrystalOp },
    /// Geometric R-matrix R_i acting on rows i and i+1.
    Rmatrix,
    /// Gelfand-Tsetlin patterns.
    Gt { op: GtOp },
    /// Loop symmetric functions.
    Loopsym { op: LoopOp },
    /// Expand a polynomial in the E_p basis.
    Reduce,
    /// Central charge of a matrix.
    CentralCharge,
    /// Tropical charge tables for content mu: {"m", "n", "mu"}.
    QAnalogue,
    /// Run invariant suites.
    Verify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CrystalOp {
    /// Row operator e_i^c.
    E,
    /// Column operator ē_j^c.
    Ebar,
    /// Weyl group action s_i on rows.
    S,
    /// Weyl group action s̄_j on columns.
    Sbar,
    /// (γ, ε_i, φ_i) on rows.
    Maps,
    /// (γ̄, ε̄_j, φ̄_j) on columns.
    Mapsbar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GtOp {
    /// Pattern to its matrix Φ(z).
    Phi,
    /// Totally positive band matrix (with --m) to its pattern.
    Psi,
    /// GT crystal operator ē_i^c.
    E,
    /// (γ̄, ε̄_i, φ̄_i).
    Maps,
    /// Decoration F(z).
    Decoration,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LoopOp {
    /// E_k^{(r)} from {"k", "r"}.
    E,
    /// H_k^{(r)} from {"k", "r"}.
    H,
    /// Loop Schur function from {"lambda", "mu", "r"}.
    Schur,
    /// Shape invariant S_k from {"k"}.
    Shape,
    /// E_p from {"p"} (dominant exponent matrix).
    Ep,
}

enum Failure {
    Usage(String),
    Suite(Value),
}

type Out = Result<Value, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<geocrystal::Error> for Failure {
    fn from(e: geocrystal::Error) -> Self {
        usage(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        usage(format!("invalid JSON input: {e}"))
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    raw: Option<String>,
}

impl Ctx<'_> {
    fn text(&mut self) -> Result<&str, Failure> {
        if self.raw.is_none() {
            let s = match &self.cli.input {
                Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).map_err(usage)?;
                    s
                }
            };
            self.raw = Some(s);
        }
        Ok(self.raw.as_deref().unwrap_or_default())
    }

    fn input<T: DeserializeOwned>(&mut self) -> Result<T, Failure> {
        Ok(serde_json::from_str(self.text()?)?)
    }

    fn index(&self, name: &str) -> Result<usize, Failure> {
        let v = if name == "j" { self.cli.j.or(self.cli.i) } else { self.cli.i.or(self.cli.j) };
        v.ok_or_else(|| usage(format!("--{name} is required")))
    }

    fn c_rational(&self) -> Result<Rational, Failure> {
        let c: Rational = self.cli.c.as_deref().ok_or_else(|| usage("--c is required"))?.parse()?;
        if !c.is_positive() {
            return Err(usage("--c must be positive in geometric mode"));
        }
        Ok(c)
    }

    fn direction(&self) -> Result<Direction, Failure> {
        match self.cli.c.as_deref().map(str::trim) {
            Some("1") => Ok(Direction::Raise),
            Some("-1") => Ok(Direction::Lower),
            _ => Err(usage("tropical mode needs --c 1 or --c -1")),
        }
    }

    fn tropical(&self) -> bool {
        self.cli.mode == Mode::Tropical
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// Integer matrices are bare arrays of rows.
fn int_json(a: &Grid<TropInt>) -> Value {
    to_json(&a.rows_vec())
}

fn pq_json<S: Semifield + Serialize>(pq: &PqPair<S>, glued: Value) -> Value {
    json!({"P": to_json(&pq.p), "Q": to_json(&pq.q), "glued": glued, "shape": to_json(&pq.p.shape())})
}

fn maps_json<S: Serialize>(d: &CrystalData<S>) -> Value {
    json!({"gamma": to_json(&d.gamma), "eps": to_json(&d.eps), "phi": to_json(&d.phi)})
}

fn positive(x: &Grid<Rational>) -> Result<(), Failure> {
    if x.iter().all(Rational::is_positive) {
        Ok(())
    } else {
        Err(usage("geometric mode needs positive entries"))
    }
}

fn grid_input<S: Semifield + DeserializeOwned>(ctx: &mut Ctx) -> Result<Grid<S>, Failure> {
    ctx.input()
}

fn glued_input<S: Semifield + DeserializeOwned + Serialize>(ctx: &mut Ctx) -> Result<Grid<S>, Failure> {
    let v: Value = ctx.input()?;
    if v.is_object() {
        Ok(glue(&serde_json::from_value::<PqPair<S>>(v)?)?)
    } else {
        Ok(serde_json::from_value(v)?)
    }
}

fn cmd_grsk(ctx: &mut Ctx) -> Out {
    if ctx.tropical() {
        let y = grsk_local(&grid_input::<TropInt>(ctx)?);
        return Ok(pq_json(&split(&y), int_json(&y)));
    }
    let x: Grid<Rational> = grid_input(ctx)?;
    positive(&x)?;
    let pq = grsk_insert(&x)?;
    let glued = to_json(&glue(&pq)?);
    Ok(pq_json(&pq, glued))
}

fn cmd_grsk_inverse(ctx: &mut Ctx) -> Out {
    if ctx.tropical() {
        let y: Grid<TropInt> = glued_input(ctx)?;
        return Ok(int_json(&grsk_inverse(&y)));
    }
    let y: Grid<Rational> = glued_input(ctx)?;
    positive(&y)?;
    Ok(to_json(&grsk_inverse(&y)))
}

fn int_input(ctx: &mut Ctx) -> Result<Grid<TropInt>, Failure> {
    let a: Grid<TropInt> = grid_input(ctx)?;
    if a.iter().any(TropInt::is_negative) {
        return Err(usage("entries must be nonnegative integers"));
    }
    Ok(a)
}

fn cmd_rsk(ctx: &mut Ctx) -> Out {
    let (p, q) = schensted_rsk(&int_input(ctx)?)?;
    Ok(json!({"P": to_json(&p), "Q": to_json(&q)}))
}

fn cmd_trop_grsk(ctx: &mut Ctx) -> Out {
    Ok(int_json(&trop_grsk(&int_input(ctx)?)))
}

fn cmd_crystal(ctx: &mut Ctx, op: CrystalOp) -> Out {
    let (axis, name) = match op {
        CrystalOp::E | CrystalOp::S | CrystalOp::Maps => (Axis::Row, "i"),
        CrystalOp::Ebar | CrystalOp::Sbar | CrystalOp::Mapsbar => (Axis::Col, "j"),
    };
    let k = ctx.index(name)?;
    if ctx.tropical() {
        let a: Grid<TropInt> = grid_input(ctx)?;
        return Ok(match op {
            CrystalOp::E | CrystalOp::Ebar => {
                trop_crystal_e(&a, k, ctx.direction()?, axis)?.as_ref().map_or(Value::Null, int_json)
            }
            CrystalOp::S | CrystalOp::Sbar => int_json(&weyl_s(&a, k, axis)?),
            CrystalOp::Maps | CrystalOp::Mapsbar => maps_json(&structure_maps(&a, k, axis)?),
        });
    }
    let x: Grid<Rational> = grid_input(ctx)?;
    positive(&x)?;
    Ok(match op {
        CrystalOp::E | CrystalOp::Ebar => to_json(&e_axis(&x, k, &ctx.c_rational()?, axis)?),
        CrystalOp::S | CrystalOp::Sbar => to_json(&weyl_s(&x, k, axis)?),
        CrystalOp::Maps | CrystalOp::Mapsbar => maps_json(&structure_maps(&x, k, axis)?),
    })
}

fn cmd_rmatrix(ctx: &mut Ctx) -> Out {
    let i = ctx.index("i")?;
    if ctx.tropical() {
        let a: Grid<TropInt> = grid_input(ctx)?;
        return Ok(int_json(&r_i(&a, i)?));
    }
    let x: Grid<Rational> = grid_input(ctx)?;
    positive(&x)?;
    Ok(to_json(&r_i(&x, i)?))
}

fn cmd_gt(ctx: &mut Ctx, op: GtOp) -> Out {
    if ctx.tropical() {
        let z: GtPattern<TropInt> = ctx.input()?;
        return match op {
            GtOp::Phi => Ok(to_json(&phi_param(&z))),
            GtOp::Maps => Ok(maps_json(&gt_maps(&z, ctx.index("i")?)?)),
            GtOp::Decoration => Ok(to_json(&gt_decoration(&z))),
            GtOp::E => {
                let c = TropInt::from(if ctx.direction()? == Direction::Raise { 1 } else { -1 });
                Ok(to_json(&gt_e_explicit(&z, ctx.index("i")?, &c)?))
            }
            GtOp::Psi => Err(usage("psi needs minors and is geometric only")),
        };
    }
    if let GtOp::Psi = op {
        let a: SfMatrix<Rational> = ctx.input()?;
        let m = ctx.cli.m.ok_or_else(|| usage("--m is required"))?;
        return Ok(to_json(&psi_param(&a, m)?));
    }
    let z: GtPattern<Rational> = ctx.input()?;
    if z.indices().into_iter().any(|(i, j)| !z.get(i, j).is_positive()) {
        return Err(usage("geometric mode needs positive entries"));
    }
    Ok(match op {
        GtOp::Phi => to_json(&phi_param(&z)),
        GtOp::E => to_json(&gt_e(&z, ctx.index("i")?, &ctx.c_rational()?)?),
        GtOp::Maps => maps_json(&gt_maps(&z, ctx.index("i")?)?),
        GtOp::Decoration => to_json(&gt_decoration(&z)),
        GtOp::Psi => unreachable!(),
    })
}

#[derive(Deserialize)]
struct LoopParams {
    k: Option<i64>,
    r: Option<i64>,
    lambda: Option<Vec<usize>>,
    mu: Option<Vec<usize>>,
    p: Option<ExponentMatrix>,
    /// Optional point at which to evaluate the result.
    x: Option<Grid<Rational>>,
}

fn poly_json(f: &LoopPoly, x: Option<&Grid<Rational>>) -> Out {
    let mut v = json!({"m": f.m(), "n": f.n(), "terms": to_json(f), "display": f.to_string()});
    if let Some(x) = x {
        v["value"] = to_json(&f.eval(x)?);
    }
    Ok(v)
}

fn ring(ctx: &Ctx) -> Result<LoopRing, Failure> {
    let m = ctx.cli.m.ok_or_else(|| usage("--m is required"))?;
    let n = ctx.cli.n.ok_or_else(|| usage("--n is required"))?;
    Ok(LoopRing::new(m, n)?)
}

fn cmd_loopsym(ctx: &mut Ctx, op: LoopOp) -> Out {
    let ring = ring(ctx)?;
    let p: LoopParams = ctx.input()?;
    let need = |v: Option<i64>, name: &str| v.ok_or_else(|| usage(format!("input needs \"{name}\"")));
    let f = match op {
        LoopOp::E => ring.loop_e(need(p.k, "k")?, need(p.r, "r")?),
        LoopOp::H => ring.loop_h(need(p.k, "k")?, need(p.r, "r")?),
        LoopOp::Schur => {
            let lambda = p.lambda.as_deref().ok_or_else(|| usage("input needs \"lambda\""))?;
            ring.schur_jt(lambda, p.mu.as_deref().unwrap_or_default(), need(p.r, "r")?)?
        }
        LoopOp::Shape => ring.shape_invariant(need(p.k, "k")? as usize)?,
        LoopOp::Ep => {
            let pm = p.p.as_ref().ok_or_else(|| usage("input needs \"p\""))?;
            let e = ring.e_p(pm)?;
            let mut v = poly_json(&ring.expand(&e), p.x.as_ref())?;
            v["e"] = json!(e.to_string());
            return Ok(v);
        }
    };
    poly_json(&f, p.x.as_ref())
}

#[derive(Deserialize)]
struct PolyInput {
    m: usize,
    n: usize,
    terms: Vec<PolyTerm>,
}

fn cmd_reduce(ctx: &mut Ctx) -> Out {
    let p: PolyInput = ctx.input()?;
    let ring = LoopRing::new(p.m, p.n)?;
    let f = LoopPoly::from_terms(p.m, p.n, &p.terms)?;
    let red = ring.lsym_reduce(&f);
    let steps: Vec<Value> = red
        .steps()
        .iter()
        .map(|s| json!({"coeff": to_json(&s.coeff), "p": to_json(&s.p), "e": s.e.to_string()}))
        .collect();
    let remainder = match &red {
        geocrystal::loopsym::Reduction::Remainder { remainder, .. } => Some(poly_json(remainder, None)?),
        _ => None,
    };
    Ok(json!({"representation": red.is_representation(), "steps": steps, "remainder": remainder}))
}

fn cmd_central_charge(ctx: &mut Ctx) -> Out {
    if ctx.tropical() {
        return Ok(to_json(&trop_central_charge(&int_input(ctx)?)?));
    }
    let x: Grid<Rational> = grid_input(ctx)?;
    positive(&x)?;
    let d = central_charge(&x)?;
    let via_q = central_charge_q(&x)?;
    Ok(json!({"charge": to_json(&d), "via_q": to_json(&via_q)}))
}

#[derive(Deserialize)]
struct QInput {
    m: usize,
    n: usize,
    mu: Vec<i64>,
}

fn cmd_q_analogue(ctx: &mut Ctx) -> Out {
    let q: QInput = ctx.input()?;
    Ok(to_json(&q_analogue(q.m, q.n, &q.mu)?))
}

fn cmd_verify(ctx: &mut Ctx) -> Out {
    let cli = ctx.cli;
    if cli.list {
        return Ok(Value::Array(
            SUITES
                .iter()
                .map(|s| json!({"name": s.name, "about": s.about, "default_trials": s.default_trials()}))
                .collect(),
        ));
    }
    let name = cli.suite.as_deref().ok_or_else(|| usage("--suite <name|all> or --list is required"))?;
    let selected: Vec<_> = if name == "all" {
        SUITES.iter().collect()
    } else {
        vec![find_suite(name).ok_or_else(|| usage(format!("unknown suite {name:?}; see verify --list")))?]
    };
    let cfg = RunConfig {
        seed: cli.seed,
        trials: cli.trials.map(|t| t as usize),
        m_max: cli.m.unwrap_or(RunConfig::default().m_max),
        n_max: cli.n.unwrap_or(RunConfig::default().n_max),
    };
    let reports: Vec<_> = selected.iter().map(|s| run_suite(s, &cfg)).collect();
    let all_ok = reports.iter().all(|r| r.ok());
    let out = json!({"seed": cfg.seed, "ok": all_ok, "suites": to_json(&reports)});
    if all_ok {
        Ok(out)
    } else {
        Err(Failure::Suite(out))
    }
}

fn write_out(cli: &Cli, v: &Value) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(v).expect("values serialize");
    text.push('\n');
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx { cli: &cli, raw: None };
    let res = match cli.command {
        Command::Grsk => cmd_grsk(&mut ctx),
        Command::GrskInverse => cmd_grsk_inverse(&mut ctx),
        Command::Rsk => cmd_rsk(&mut ctx),
        Command::TropGrsk => cmd_trop_grsk(&mut ctx),
        Command::Crystal { op } => cmd_crystal(&mut ctx, op),
        Command::Rmatrix => cmd_rmatrix(&mut ctx),
        Command::Gt { op } => cmd_gt(&mut ctx, op),
        Command::Loopsym { op } => cmd_loopsym(&mut ctx, op),
        Command::Reduce => cmd_reduce(&mut ctx),
        Command::CentralCharge => cmd_central_charge(&mut ctx),
        Command::QAnalogue => cmd_q_analogue(&mut ctx),
        Command::Verify => cmd_verify(&mut ctx),
    };
    let (value, code) = match res {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(Failure::Suite(v)) => {
            eprintln!("verification failed");
            (v, ExitCode::from(1))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_out(&cli, &value) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    code
}
