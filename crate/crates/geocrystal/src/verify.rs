//! Named randomized and exhaustive checks of the identities implemented in
//! this crate.
//!
//! Each random suite runs a number of trials per size class; trial `t` of size
//! class `s` draws from its own ChaCha RNG seeded by mixing the master seed,
//! the suite name, `s` and `t`, so results do not depend on execution order.

use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{gmax, Rational, Semifield, TropInt};
use crate::crystal::{
    axis_matrix, e_axis, e_col, e_row, r_i, structure_maps, structure_maps_matrix, unipotent, weyl_s, Axis, CrystalData,
};
use crate::grsk::{
    central_charge, central_charge_q, corner_term, glue, grsk_insert, grsk_insert_transposed, grsk_inverse, grsk_local,
    grsk_local_interleaved, grsk_local_with, h_m_identity_sides, h_minor_p_entry, grsk_inverted, split, Schedule,
};
use crate::gt::{
    gt_decoration, gt_decoration_minor, gt_e, gt_e_explicit, gt_maps, gt_maps_explicit, lgv_flag_minor, psi_param,
    GtPattern,
};
use crate::loopsym::{EFactor, EMonomial, ExponentMatrix, LoopRing, Reduction};
use crate::matrix::{dagger, h_matrix, m_of, m_of_product, periodic_window, whirl, Grid, SfMatrix};
use crate::trop::{comb_crystal_oracle, q_analogue, rsk_glued, trop_crystal_e, trop_grsk, Direction};

/// RNG handed to every trial.
pub type TrialRng = ChaCha8Rng;

type Check = std::result::Result<(), String>;

/// One executed trial: the input that was drawn and whether every check passed.
#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub input: Value,
    pub result: Check,
}

fn outcome(input: Value, f: impl FnOnce() -> Check) -> TrialOutcome {
    TrialOutcome { result: f(), input }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn same<T: PartialEq + Debug>(what: &str, a: &T, b: &T) -> Check {
    ensure!(a == b, "{what}: {a:?} != {b:?}");
    Ok(())
}

trait Ctx<T> {
    fn ctx(self) -> std::result::Result<T, String>;
}

impl<T> Ctx<T> for crate::Result<T> {
    fn ctx(self) -> std::result::Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Suites

type RandomTrial = fn(&mut TrialRng, usize, usize) -> TrialOutcome;
type ExhaustiveRun = fn(&mut dyn FnMut(TrialOutcome));

#[derive(Clone, Copy)]
enum Kind {
    Random { sizes: fn() -> Vec<(usize, usize)>, trials: usize, trial: RandomTrial },
    Exhaustive(ExhaustiveRun),
}

/// A named check.
#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    kind: Kind,
}

impl Suite {
    /// Trials per size class when none is requested; `None` for exhaustive suites.
    pub fn default_trials(&self) -> Option<usize> {
        match self.kind {
            Kind::Random { trials, .. } => Some(trials),
            Kind::Exhaustive(_) => None,
        }
    }

    /// Size classes `(m, n)`; empty for exhaustive suites.
    pub fn sizes(&self) -> Vec<(usize, usize)> {
        match self.kind {
            Kind::Random { sizes, .. } => sizes(),
            Kind::Exhaustive(_) => Vec::new(),
        }
    }
}

/// Settings for [`run_suite`].
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    /// Trials per size class; the suite default when `None`.
    pub trials: Option<usize>,
    pub m_max: usize,
    pub n_max: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, trials: None, m_max: 6, n_max: 6 }
    }
}

/// The first failing trial, with everything needed to rerun it.
#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub trial: usize,
    pub size: Option<(usize, usize)>,
    pub trial_seed: Option<u64>,
    pub input: Value,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<FailureRecord>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Seed of trial `trial` in size class `class` of suite `name`.
pub fn trial_seed(seed: u64, name: &str, class: usize, trial: usize) -> u64 {
    splitmix(splitmix(splitmix(seed ^ fnv(name)) ^ class as u64) ^ trial as u64)
}

/// Runs one suite.
///
/// ```
/// use geocrystal::verify::{find_suite, run_suite, RunConfig};
/// let cfg = RunConfig { seed: 7, trials: Some(2), ..RunConfig::default() };
/// let report = run_suite(find_suite("grsk-local").unwrap(), &cfg);
/// assert!(report.ok());
/// assert_eq!(report.trials, 32);
/// ```
pub fn run_suite(suite: &Suite, cfg: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport { suite: suite.name.into(), trials: 0, passed: 0, failed: 0, first_failure: None };
    let record = |report: &mut SuiteReport, out: TrialOutcome, size, trial_seed| {
        let idx = report.trials;
        report.trials += 1;
        match out.result {
            Ok(()) => report.passed += 1,
            Err(message) => {
                report.failed += 1;
                if report.first_failure.is_none() {
                    report.first_failure =
                        Some(FailureRecord { trial: idx, size, trial_seed, input: out.input, message });
                }
            }
        }
    };
    match suite.kind {
        Kind::Random { sizes, trials, trial } => {
            let trials = cfg.trials.unwrap_or(trials);
            for (class, (m, n)) in sizes().into_iter().enumerate() {
                if m > cfg.m_max || n > cfg.n_max {
                    continue;
                }
                for t in 0..trials {
                    let s = trial_seed(cfg.seed, suite.name, class, t);
                    let mut rng = TrialRng::seed_from_u64(s);
                    let out = trial(&mut rng, m, n);
                    record(&mut report, out, Some((m, n)), Some(s));
                }
            }
        }
        Kind::Exhaustive(run) => run(&mut |out| record(&mut report, out, None, None)),
    }
    report
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn range2(a: (usize, usize), b: (usize, usize)) -> Vec<(usize, usize)> {
    (a.0..=a.1).flat_map(|m| (b.0..=b.1).map(move |n| (m, n))).collect()
}

fn sizes_1_4() -> Vec<(usize, usize)> {
    range2((1, 4), (1, 4))
}
fn sizes_2_4() -> Vec<(usize, usize)> {
    range2((2, 4), (2, 4))
}
fn sizes_2_3() -> Vec<(usize, usize)> {
    range2((2, 3), (2, 3))
}
fn sizes_1_3() -> Vec<(usize, usize)> {
    range2((1, 3), (1, 3))
}
fn sizes_1_5() -> Vec<(usize, usize)> {
    range2((1, 5), (1, 5))
}
fn sizes_gt() -> Vec<(usize, usize)> {
    range2((1, 4), (2, 4))
}
fn sizes_three_rows() -> Vec<(usize, usize)> {
    range2((3, 3), (1, 4))
}
fn sizes_one() -> Vec<(usize, usize)> {
    vec![(1, 1)]
}
fn sizes_four() -> Vec<(usize, usize)> {
    vec![(4, 4)]
}

macro_rules! suite {
    ($name:literal, $about:literal, $sizes:ident, $trials:literal, $f:ident) => {
        Suite { name: $name, about: $about, kind: Kind::Random { sizes: $sizes, trials: $trials, trial: $f } }
    };
    ($name:literal, $about:literal, exhaustive $f:ident) => {
        Suite { name: $name, about: $about, kind: Kind::Exhaustive($f) }
    };
}

/// Every suite, in the order `verify --list` prints them.
pub static SUITES: &[Suite] = &[
    suite!(
        "semifield-axioms",
        "associativity, commutativity, distributivity and inv∘inv = id in both semifields",
        sizes_one,
        1000,
        t_semifield
    ),
    suite!("gmax-repeated", "gmax of k copies of a is a/k over Q and a over min-plus", sizes_one, 100, t_gmax),
    suite!("lgv-determinant", "flag minors of M(x) equal LGV path sums on the pattern Ψ(M(x))", sizes_1_4, 50, t_lgv),
    suite!(
        "m-band",
        "M(x) is lower triangular with band width m and 1s on the m-th subdiagonal; equals the whirl product",
        sizes_1_4,
        50,
        t_band
    ),
    suite!("dagger-involution", "A†† = A and H(x^-1) = W(x)†", sizes_four, 50, t_dagger),
    suite!("jacobi-minors", "Δ_{I,J}(A†) = Δ_{I^c,J^c}(A)/det A for |I| = |J| <= 2", sizes_four, 20, t_jacobi),
    suite!(
        "crystal-axioms",
        "geometric crystal axioms and Verma relations for the row and column operators",
        sizes_2_4,
        100,
        t_crystal_axioms
    ),
    suite!(
        "unipotent-sandwich",
        "M(e_i^c x) = x_i((c-1)φ) M(x) x_i((c^-1-1)ε) on both axes",
        sizes_2_4,
        100,
        t_sandwich
    ),
    suite!(
        "main-invariance",
        "M(x) is fixed by row operators and M(x^t) by column operators",
        sizes_2_4,
        100,
        t_main_invariance
    ),
    suite!("r-window-invariance", "periodic-window entries are fixed by every R_i", sizes_2_4, 100, t_r_window),
    suite!("row-col-commute", "row and column operators commute", sizes_2_4, 50, t_row_col_commute),
    suite!("r-equals-weyl", "R_i = s_i on rows", sizes_2_4, 50, t_r_weyl),
    suite!("r-braid", "R_1 R_2 R_1 = R_2 R_1 R_2 on three rows", sizes_three_rows, 50, t_r_braid),
    suite!("r-involution", "R_i R_i = id", sizes_2_4, 50, t_r_involution),
    suite!("gt-decoration-law", "F(ē_j^c z) = F(z) + (c-1)φ̄_j + (c^-1-1)ε̄_j", sizes_gt, 100, t_gt_decoration_law),
    suite!(
        "gt-crystal-axioms",
        "geometric crystal axioms and Verma relations for the GT crystal",
        sizes_gt,
        100,
        t_gt_axioms
    ),
    suite!("gt-scaling", "ē_j^c(ω·z) = ω·ē_j^c(z)", sizes_gt, 50, t_gt_scaling),
    suite!(
        "gt-explicit",
        "closed GT formulas (m >= n) and the minor form of F agree with the matrix route",
        sizes_gt,
        50,
        t_gt_explicit
    ),
    suite!("grsk-local", "local moves equal glue ∘ minor-ratio insertion", sizes_1_4, 100, t_grsk_local),
    suite!(
        "grsk-inverse",
        "the inverse local moves undo gRSK; schedules and the interleaved order agree",
        sizes_1_4,
        50,
        t_grsk_inverse
    ),
    suite!(
        "grsk-symmetry",
        "gRSK(x^t) = (Q, P) and the column minor formulas reproduce (P, Q)",
        sizes_1_4,
        50,
        t_grsk_symmetry
    ),
    suite!("grsk-decoration", "F(x) = F(P) + F(Q) + δ_{m,n} z_{n,n}", sizes_1_4, 100, t_grsk_decoration),
    suite!(
        "grsk-isomorphism",
        "gRSK intertwines the row/column crystals with the GT crystals on Q/P",
        sizes_1_4,
        50,
        t_grsk_isomorphism
    ),
    suite!("grsk-positivity", "gRSK maps positive grids to positive grids", sizes_1_4, 50, t_grsk_positivity),
    suite!("central-charge", "F(x) - F(P) = F(Q) + δ_{m,n} z_{n,n}", sizes_1_4, 50, t_central_charge),
    suite!("hm-identity", "the H/M minor identity and the dagger-conjugated P formula", sizes_2_3, 50, t_hm_identity),
    suite!("p-loop-formula", "z_{i,j} = □(i,j)/□(i+1,j)", sizes_2_4, 10, t_p_loop),
    suite!("leading-term", "the leading monomial of E_p is x^p with coefficient 1", sizes_1_3, 25, t_leading_term),
    suite!(
        "leading-term-injective",
        "distinct dominant p give distinct leading monomials of E_p",
        sizes_1_3,
        10,
        t_leading_injective
    ),
    suite!("jt-exhaustive", "tableau sum = Jacobi-Trudi determinant for all μ ⊆ λ ⊆ 4^4, r, m <= 3, n <= 4", exhaustive run_jt_exhaustive),
    suite!(
        "lsym-reduce",
        "reduction of random E-polynomials terminates at 0 and re-expands exactly",
        sizes_2_3,
        25,
        t_lsym_reduce
    ),
    suite!("schur-r-invariance", "loop Schur evaluations are fixed by every R_i", sizes_2_3, 25, t_schur_r),
    suite!("trop-rsk-oracle", "tropical gRSK equals glued classical RSK", sizes_1_5, 8, t_trop_rsk),
    suite!("trop-symmetry", "tropical gRSK(a^t) = (Q, P)", sizes_1_5, 8, t_trop_symmetry),
    suite!(
        "comb-crystal-oracle",
        "tropical e at c = ±1 equals the tensor-product operator, including where undefined",
        sizes_1_4,
        32,
        t_comb_oracle
    ),
    suite!("comb-crystal-commute", "row and column combinatorial operators commute", sizes_2_4, 50, t_comb_commute),
    suite!(
        "trop-decoration",
        "min(a) = min(F(P), F(Q), corner) over min-plus integers",
        sizes_1_4,
        25,
        t_trop_decoration
    ),
    suite!("q-analogue", "tropical charge tables: min(k, μ2-k) for 2x2 and the 3x2 content (4,3,2) table", exhaustive run_q_analogue),
];

// ---------------------------------------------------------------------------
// Generators

/// Positive rational with numerator and denominator in `[1, 20]`.
pub fn rand_rat<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..=20), rng.gen_range(1..=20))
}

pub fn rand_grid<R: Rng>(rng: &mut R, m: usize, n: usize) -> Grid<Rational> {
    Grid::from_fn(m, n, |_, _| rand_rat(rng))
}

pub fn rand_pattern<R: Rng>(rng: &mut R, m: usize, n: usize) -> GtPattern<Rational> {
    GtPattern::from_fn(m, n, |_, _| rand_rat(rng))
}

pub fn rand_int_grid<R: Rng>(rng: &mut R, m: usize, n: usize, max: i64) -> Grid<TropInt> {
    Grid::from_fn(m, n, |_, _| TropInt::from(rng.gen_range(0..=max)))
}

fn rand_signed<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn rand_invertible<R: Rng>(rng: &mut R, n: usize) -> SfMatrix<Rational> {
    loop {
        let a = SfMatrix::from_fn(n, n, |_, _| Some(rand_signed(rng)));
        if !a.det().map(|d| d.is_zero()).unwrap_or(true) {
            return a;
        }
    }
}

fn rand_dominant<R: Rng>(rng: &mut R, m: usize, n: usize, max: u32) -> ExponentMatrix {
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|_| {
            let mut c: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=max)).collect();
            c.sort_unstable_by(|a, b| b.cmp(a));
            c
        })
        .collect();
    ExponentMatrix::new((0..m).map(|a| cols.iter().map(|c| c[a]).collect()).collect()).expect("nonempty")
}

fn gj<S: Semifield + Serialize>(x: &Grid<S>) -> Value {
    serde_json::to_value(x).expect("grids serialize")
}

fn pj<S: Semifield + Serialize>(z: &GtPattern<S>) -> Value {
    serde_json::to_value(z).expect("patterns serialize")
}

fn one() -> Rational {
    Rational::from(1)
}

fn all_positive(x: &Grid<Rational>) -> bool {
    x.iter().all(Rational::is_positive)
}

fn f_or_zero(z: &GtPattern<Rational>) -> Rational {
    gt_decoration(z).unwrap_or_else(Rational::zero)
}

// ---------------------------------------------------------------------------
// exact-arith

fn t_semifield(rng: &mut TrialRng, _: usize, _: usize) -> TrialOutcome {
    let (a, b, c) = (rand_signed(rng), rand_signed(rng), rand_signed(rng));
    let (u, v, w) = (rng.gen_range(-50..=50i64), rng.gen_range(-50..=50i64), rng.gen_range(-50..=50i64));
    outcome(json!({"rational": [a, b, c], "tropical": [u, v, w]}), || {
        fn axioms<S: Semifield + Debug>(a: &S, b: &S, c: &S) -> Check {
            same("add assoc", &a.add(b).add(c), &a.add(&b.add(c)))?;
            same("mul assoc", &a.mul(b).mul(c), &a.mul(&b.mul(c)))?;
            same("add comm", &a.add(b), &b.add(a))?;
            same("mul comm", &a.mul(b), &b.mul(a))?;
            same("distrib", &a.mul(&b.add(c)), &a.mul(b).add(&a.mul(c)))?;
            if !a.is_zero() {
                same("inv inv", &a.inv().inv(), a)?;
                same("a inv(a)", &a.mul(&a.inv()), &S::one())?;
            }
            Ok(())
        }
        axioms(&a, &b, &c)?;
        axioms(&TropInt::from(u), &TropInt::from(v), &TropInt::from(w))
    })
}

fn t_gmax(rng: &mut TrialRng, _: usize, _: usize) -> TrialOutcome {
    let a = rand_rat(rng);
    let t = rng.gen_range(-50..=50i64);
    let k = rng.gen_range(1..=6usize);
    outcome(json!({"a": a, "t": t, "k": k}), || {
        same("rational", &gmax(&vec![a.clone(); k]).ctx()?, &(a.clone() / Rational::from(k as i64)))?;
        same("tropical", &gmax(&vec![TropInt::from(t); k]).ctx()?, &TropInt::from(t))
    })
}

// ---------------------------------------------------------------------------
// matrix-core

fn t_lgv(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let mm = m_of(&x);
        let z = psi_param(&mm, m).ctx()?;
        for i in 1..=n {
            for j in i..=n {
                let rows: Vec<usize> = (i..=j).collect();
                let det = mm.flag_minor(&rows.iter().map(|r| r - 1).collect::<Vec<_>>()).ctx()?;
                let lgv = lgv_flag_minor(&z, &rows).unwrap_or_else(Rational::zero);
                same(&format!("Δ_[{i},{j}]"), &det, &lgv)?;
            }
        }
        Ok(())
    })
}

fn t_band(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let mm = m_of(&x);
        same("whirl product", &mm, &m_of_product(&x))?;
        for i in 0..n {
            for j in 0..n {
                let e = mm.get(i, j);
                if j > i || i - j > m {
                    ensure!(e.is_none(), "entry ({},{}) should vanish", i + 1, j + 1);
                } else if i - j == m {
                    ensure!(e == Some(&one()), "entry ({},{}) should be 1", i + 1, j + 1);
                } else {
                    ensure!(e.is_some_and(Rational::is_positive), "entry ({},{}) should be positive", i + 1, j + 1);
                }
            }
        }
        Ok(())
    })
}

fn t_dagger(rng: &mut TrialRng, _: usize, n: usize) -> TrialOutcome {
    let a = rand_invertible(rng, n);
    let x: Vec<Rational> = (0..n).map(|_| rand_rat(rng)).collect();
    outcome(json!({"A": a, "x": x}), || {
        same("dagger twice", &dagger(&dagger(&a).ctx()?).ctx()?, &a)?;
        let inv: Vec<Rational> = x.iter().map(Rational::inv).collect();
        same("H(x^-1) = W(x)†", &h_matrix(&inv), &dagger(&whirl(&x)).ctx()?)
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (0..n).filter(|k| !s.contains(k)).collect()
}

fn t_jacobi(rng: &mut TrialRng, _: usize, n: usize) -> TrialOutcome {
    let a = rand_invertible(rng, n);
    outcome(json!({"A": a}), || {
        let d = dagger(&a).ctx()?;
        let det = a.det().ctx()?;
        for k in 1..=2 {
            for rows in subsets(n, k) {
                for cols in subsets(n, k) {
                    let lhs = d.minor(&rows, &cols).ctx()?;
                    let rhs = a.minor(&complement(n, &rows), &complement(n, &cols)).ctx()? / det.clone();
                    same(&format!("I={rows:?} J={cols:?}"), &lhs, &rhs)?;
                }
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// crystal-basic

/// Checks the crystal axioms for an operator family with indices `1..rank`.
fn crystal_axioms<T: PartialEq + Debug + Clone>(
    x: &T,
    rank: usize,
    i: usize,
    c: &Rational,
    c2: &Rational,
    maps: &dyn Fn(&T, usize) -> crate::Result<CrystalData<Rational>>,
    e: &dyn Fn(&T, usize, &Rational) -> crate::Result<T>,
) -> Check {
    let d = maps(x, i).ctx()?;
    let g = &d.gamma;
    same("φ/ε = α_i(γ)", &(d.phi.clone() / d.eps.clone()), &(g[i - 1].clone() / g[i].clone()))?;
    let y = e(x, i, c).ctx()?;
    let d2 = maps(&y, i).ctx()?;
    let mut g2 = g.clone();
    g2[i - 1] = g2[i - 1].clone() * c.clone();
    g2[i] = g2[i].clone() / c.clone();
    same("γ(e^c x)", &d2.gamma, &g2)?;
    same("ε(e^c x)", &d2.eps, &(d.eps.clone() / c.clone()))?;
    same("φ(e^c x)", &d2.phi, &(d.phi.clone() * c.clone()))?;
    same("e^1 = id", &e(x, i, &one()).ctx()?, x)?;
    same("e^c e^c' = e^cc'", &e(&e(x, i, c2).ctx()?, i, c).ctx()?, &e(x, i, &(c.clone() * c2.clone())).ctx()?)?;
    for j in 1..rank {
        let dist = i.abs_diff(j);
        if dist > 1 {
            let lhs = e(&e(x, j, c2).ctx()?, i, c).ctx()?;
            let rhs = e(&e(x, i, c).ctx()?, j, c2).ctx()?;
            same(&format!("e_{i} e_{j} commute"), &lhs, &rhs)?;
        } else if dist == 1 {
            let cc = c.clone() * c2.clone();
            let lhs = e(&e(&e(x, i, c2).ctx()?, j, &cc).ctx()?, i, c).ctx()?;
            let rhs = e(&e(&e(x, j, c).ctx()?, i, &cc).ctx()?, j, c2).ctx()?;
            same(&format!("Verma ({i},{j})"), &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn t_crystal_axioms(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    let (i, j) = (rng.gen_range(1..m), rng.gen_range(1..n));
    let (c, c2) = (rand_rat(rng), rand_rat(rng));
    outcome(json!({"x": gj(&x), "i": i, "j": j, "c": c, "c2": c2}), || {
        for (axis, k, rank) in [(Axis::Row, i, m), (Axis::Col, j, n)] {
            crystal_axioms(&x, rank, k, &c, &c2, &|x, k| structure_maps(x, k, axis), &|x, k, c| e_axis(x, k, c, axis))
                .map_err(|e| format!("{axis:?}: {e}"))?;
            same("matrix route", &structure_maps_matrix(&x, k, axis).ctx()?, &structure_maps(&x, k, axis).ctx()?)?;
        }
        Ok(())
    })
}

fn t_sandwich(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    let (i, j) = (rng.gen_range(1..m), rng.gen_range(1..n));
    let c = rand_rat(rng);
    outcome(json!({"x": gj(&x), "i": i, "j": j, "c": c}), || {
        for (axis, k) in [(Axis::Row, i), (Axis::Col, j)] {
            let d = structure_maps(&x, k, axis).ctx()?;
            let mm = axis_matrix(&x, axis);
            let size = mm.rows();
            let expect = unipotent(size, k, &((c.clone() - one()) * d.phi))
                .mul(&mm)
                .ctx()?
                .mul(&unipotent(size, k, &((c.inv() - one()) * d.eps)))
                .ctx()?;
            same(&format!("{axis:?}"), &axis_matrix(&e_axis(&x, k, &c, axis).ctx()?, axis), &expect)?;
        }
        Ok(())
    })
}

fn t_main_invariance(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    let cs: Vec<Rational> = (0..20).map(|_| rand_rat(rng)).collect();
    outcome(json!({"x": gj(&x), "c": cs}), || {
        let (mx, mt) = (m_of(&x), m_of(&x.transpose()));
        for c in &cs {
            for i in 1..m {
                same(&format!("M(x) under e_row {i}"), &m_of(&e_row(&x, i, c).ctx()?), &mx)?;
            }
            for j in 1..n {
                same(&format!("M(x^t) under e_col {j}"), &m_of(&e_col(&x, j, c).ctx()?.transpose()), &mt)?;
            }
        }
        Ok(())
    })
}

fn t_r_window(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let w = |y: &Grid<Rational>| periodic_window(y, 1..=2 * n as i64, 1..=2 * n as i64);
        let base = w(&x);
        for i in 1..m {
            same(&format!("R_{i}"), &w(&r_i(&x, i).ctx()?), &base)?;
        }
        Ok(())
    })
}

fn t_row_col_commute(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    let (i, j) = (rng.gen_range(1..m), rng.gen_range(1..n));
    let (c, c2) = (rand_rat(rng), rand_rat(rng));
    outcome(json!({"x": gj(&x), "i": i, "j": j, "c": c, "c2": c2}), || {
        let a = e_row(&e_col(&x, j, &c2).ctx()?, i, &c).ctx()?;
        let b = e_col(&e_row(&x, i, &c).ctx()?, j, &c2).ctx()?;
        same("commute", &a, &b)
    })
}

fn t_r_weyl(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        for i in 1..m {
            same(&format!("R_{i}"), &r_i(&x, i).ctx()?, &weyl_s(&x, i, Axis::Row).ctx()?)?;
        }
        Ok(())
    })
}

fn t_r_braid(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let r = |y: &Grid<Rational>, i| r_i(y, i).ctx();
        same("braid", &r(&r(&r(&x, 1)?, 2)?, 1)?, &r(&r(&r(&x, 2)?, 1)?, 2)?)
    })
}

fn t_r_involution(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        for i in 1..m {
            same(&format!("R_{i}^2"), &r_i(&r_i(&x, i).ctx()?, i).ctx()?, &x)?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// crystal-gt

fn t_gt_decoration_law(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let z = rand_pattern(rng, m, n);
    let j = rng.gen_range(1..n);
    let c = rand_rat(rng);
    outcome(json!({"z": pj(&z), "j": j, "c": c}), || {
        let d = gt_maps(&z, j).ctx()?;
        let lhs = f_or_zero(&gt_e(&z, j, &c).ctx()?);
        let rhs = f_or_zero(&z) + (c.clone() - one()) * d.phi + (c.inv() - one()) * d.eps;
        same("decoration law", &lhs, &rhs)
    })
}

fn t_gt_axioms(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let z = rand_pattern(rng, m, n);
    let j = rng.gen_range(1..n);
    let (c, c2) = (rand_rat(rng), rand_rat(rng));
    outcome(json!({"z": pj(&z), "j": j, "c": c, "c2": c2}), || {
        crystal_axioms(&z, n, j, &c, &c2, &|z, j| gt_maps(z, j), &|z, j, c| gt_e(z, j, c))
    })
}

fn t_gt_scaling(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let z = rand_pattern(rng, m, n);
    let omega: Vec<Rational> = (0..m.min(n)).map(|_| rand_rat(rng)).collect();
    let j = rng.gen_range(1..n);
    let c = rand_rat(rng);
    outcome(json!({"z": pj(&z), "omega": omega, "j": j, "c": c}), || {
        let lhs = gt_e(&z.scale_rows(&omega), j, &c).ctx()?;
        let rhs = gt_e(&z, j, &c).ctx()?.scale_rows(&omega);
        same("scaling", &lhs, &rhs)
    })
}

fn t_gt_explicit(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let z = rand_pattern(rng, m, n);
    let j = rng.gen_range(1..n);
    let c = rand_rat(rng);
    outcome(json!({"z": pj(&z), "j": j, "c": c}), || {
        same("F minor form", &gt_decoration_minor(&z).ctx()?, &f_or_zero(&z))?;
        if m >= n {
            same("maps", &gt_maps_explicit(&z, j).ctx()?, &gt_maps(&z, j).ctx()?)?;
            same("e", &gt_e_explicit(&z, j, &c).ctx()?, &gt_e(&z, j, &c).ctx()?)?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// grsk

fn t_grsk_local(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || same("local vs insertion", &grsk_local(&x), &glue(&grsk_insert(&x).ctx()?).ctx()?))
}

fn t_grsk_inverse(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let y = grsk_local(&x);
        same("inverse", &grsk_inverse(&y), &x)?;
        same("column-major schedule", &grsk_local_with(&x, Schedule::ColMajor), &y)?;
        same("interleaved", &grsk_local_interleaved(&x), &y)
    })
}

fn t_grsk_symmetry(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let pq = grsk_insert(&x).ctx()?;
        let t = grsk_insert(&x.transpose()).ctx()?;
        same("P of x^t", &t.p, &pq.q)?;
        same("Q of x^t", &t.q, &pq.p)?;
        same("column formulas", &grsk_insert_transposed(&x).ctx()?, &pq)
    })
}

fn t_grsk_decoration(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let pq = grsk_insert(&x).ctx()?;
        let rhs = f_or_zero(&pq.p) + f_or_zero(&pq.q) + corner_term(&pq);
        same("F additivity", &crate::crystal::decoration_matrix(&x), &rhs)
    })
}

fn t_grsk_isomorphism(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    let c = rand_rat(rng);
    let i = (m > 1).then(|| rng.gen_range(1..m));
    let j = (n > 1).then(|| rng.gen_range(1..n));
    outcome(json!({"x": gj(&x), "i": i, "j": j, "c": c}), || {
        let pq = grsk_insert(&x).ctx()?;
        if let Some(j) = j {
            let moved = grsk_insert(&e_col(&x, j, &c).ctx()?).ctx()?;
            same("P under e_col", &moved.p, &gt_e(&pq.p, j, &c).ctx()?)?;
            same("Q under e_col", &moved.q, &pq.q)?;
            same("column maps", &structure_maps(&x, j, Axis::Col).ctx()?, &gt_maps(&pq.p, j).ctx()?)?;
        }
        if let Some(i) = i {
            let moved = grsk_insert(&e_row(&x, i, &c).ctx()?).ctx()?;
            same("P under e_row", &moved.p, &pq.p)?;
            same("Q under e_row", &moved.q, &gt_e(&pq.q, i, &c).ctx()?)?;
            same("row maps", &structure_maps(&x, i, Axis::Row).ctx()?, &gt_maps(&pq.q, i).ctx()?)?;
        }
        Ok(())
    })
}

fn t_grsk_positivity(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        ensure!(all_positive(&grsk_local(&x)), "output has a nonpositive entry");
        Ok(())
    })
}

fn t_central_charge(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || same("charge", &central_charge(&x).ctx()?, &central_charge_q(&x).ctx()?))
}

fn t_hm_identity(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        for i in 1..=m.min(n) {
            for j in i..=n {
                let (h, mm) = h_m_identity_sides(&x, i, j).ctx()?;
                same(&format!("H/M at ({i},{j})"), &h, &mm)?;
            }
        }
        let p = split(&grsk_inverted(&x)).p;
        for (i, j) in p.indices() {
            same(&format!("dagger P entry ({i},{j})"), p.get(i, j), &h_minor_p_entry(&x, i, j).ctx()?)?;
        }
        Ok(())
    })
}

fn t_p_loop(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let x = rand_grid(rng, m, n);
    outcome(json!({"x": gj(&x)}), || {
        let ring = LoopRing::new(m, n).ctx()?;
        let pq = grsk_insert(&x).ctx()?;
        for (i, j) in pq.p.indices() {
            let num = ring.box_poly(i, j).ctx()?.eval(&x).ctx()?;
            let den = ring.box_poly(i + 1, j).ctx()?.eval(&x).ctx()?;
            same(&format!("z_{i},{j}"), pq.p.get(i, j), &(num / den))?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// loopsym

fn t_leading_term(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let p = rand_dominant(rng, m, n, 3);
    outcome(json!({"p": p}), || {
        let ring = LoopRing::new(m, n).ctx()?;
        let f = ring.expand(&ring.e_p(&p).ctx()?);
        let lead = f.leading_term().map(|(e, c)| (e.clone(), c.clone()));
        same("leading term", &lead, &Some((p.exps().to_vec(), one())))
    })
}

fn t_leading_injective(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let ps: Vec<ExponentMatrix> = (0..20).map(|_| rand_dominant(rng, m, n, 2)).collect();
    outcome(json!({"p": ps}), || {
        let ring = LoopRing::new(m, n).ctx()?;
        let mut seen = std::collections::BTreeMap::new();
        for p in &ps {
            let lead = ring.expand(&ring.e_p(p).ctx()?).leading_term().map(|(e, _)| e.clone());
            if let Some(q) = seen.insert(lead.clone(), p.clone()) {
                ensure!(&q == p, "{q:?} and {p:?} share the leading monomial {lead:?}");
            }
        }
        Ok(())
    })
}

/// Partitions inside the `rows x cols` box.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for v in 1..=max {
            cur.push(v);
            rec(rows, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

fn contained(mu: &[usize], lambda: &[usize]) -> bool {
    mu.len() <= lambda.len() && mu.iter().zip(lambda).all(|(a, b)| a <= b)
}

fn run_jt_exhaustive(emit: &mut dyn FnMut(TrialOutcome)) {
    let parts = partitions_in_box(4, 4);
    for m in 1..=3 {
        for n in 1..=4 {
            let ring = LoopRing::new(m, n).expect("positive sizes");
            for lambda in &parts {
                for mu in parts.iter().filter(|mu| contained(mu, lambda)) {
                    for r in 1..=n as i64 {
                        let input = json!({"m": m, "n": n, "lambda": lambda, "mu": mu, "r": r});
                        emit(outcome(input, || {
                            same(
                                "tableaux vs JT",
                                &ring.schur_tableaux(lambda, mu, r).ctx()?,
                                &ring.schur_jt(lambda, mu, r).ctx()?,
                            )
                        }));
                    }
                }
            }
        }
    }
}

fn rand_e_monomial<R: Rng>(rng: &mut R, m: usize, n: usize, max_degree: usize) -> EMonomial {
    let mut factors = Vec::new();
    let mut deg = 0;
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(1..=m);
        if deg + k > max_degree {
            break;
        }
        deg += k;
        factors.push(EFactor { k, r: rng.gen_range(1..=n) });
    }
    EMonomial(factors)
}

fn t_lsym_reduce(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let terms: Vec<(Rational, EMonomial)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            (
                Rational::new(rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=4)),
                rand_e_monomial(rng, m, n, 8),
            )
        })
        .collect();
    outcome(json!({"m": m, "n": n, "terms": terms}), || {
        let ring = LoopRing::new(m, n).ctx()?;
        let f = terms.iter().fold(ring.zero(), |acc, (c, e)| acc.add(&ring.expand(e).scale(c)));
        let red = ring.lsym_reduce(&f);
        let Reduction::Representation(steps) = &red else {
            return Err(format!("reduction left a remainder: {red:?}"));
        };
        let back = steps.iter().fold(ring.zero(), |acc, s| acc.add(&ring.expand(&s.e).scale(&s.coeff)));
        same("re-expansion", &back, &f)?;
        for w in steps.windows(2) {
            ensure!(
                w[0].p.exps() > w[1].p.exps(),
                "leading dominant monomial did not decrease: {:?} then {:?}",
                w[0].p,
                w[1].p
            );
        }
        Ok(())
    })
}

fn t_schur_r(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let parts = partitions_in_box(3, 3);
    let lambda = parts[rng.gen_range(0..parts.len())].clone();
    let subs: Vec<&Vec<usize>> = parts.iter().filter(|mu| contained(mu, &lambda)).collect();
    let mu = subs[rng.gen_range(0..subs.len())].clone();
    let r = rng.gen_range(1..=n as i64);
    let x = rand_grid(rng, m, n);
    outcome(json!({"lambda": lambda, "mu": mu, "r": r, "x": gj(&x)}), || {
        let ring = LoopRing::new(m, n).ctx()?;
        let f = ring.schur_jt(&lambda, &mu, r).ctx()?;
        let base = f.eval(&x).ctx()?;
        for i in 1..m {
            same(&format!("R_{i}"), &f.eval(&r_i(&x, i).ctx()?).ctx()?, &base)?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// trop-comb

fn t_trop_rsk(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let a = rand_int_grid(rng, m, n, 6);
    outcome(json!({"a": gj(&a)}), || same("tropical vs RSK", &trop_grsk(&a), &rsk_glued(&a).ctx()?))
}

fn t_trop_symmetry(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let a = rand_int_grid(rng, m, n, 6);
    outcome(json!({"a": gj(&a)}), || {
        let pq = split(&trop_grsk(&a));
        let t = split(&trop_grsk(&a.transpose()));
        same("P of a^t", &t.p, &pq.q)?;
        same("Q of a^t", &t.q, &pq.p)
    })
}

fn rand_dir<R: Rng>(rng: &mut R) -> Direction {
    if rng.gen() {
        Direction::Raise
    } else {
        Direction::Lower
    }
}

fn t_comb_oracle(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let a = rand_int_grid(rng, m, n, 5);
    let axes: Vec<Axis> =
        [(Axis::Row, m), (Axis::Col, n)].into_iter().filter(|(_, l)| *l > 1).map(|(ax, _)| ax).collect();
    let pick = (!axes.is_empty()).then(|| {
        let axis = axes[rng.gen_range(0..axes.len())];
        let len = if axis == Axis::Row { m } else { n };
        (axis, rng.gen_range(1..len), rand_dir(rng))
    });
    outcome(json!({"a": gj(&a), "op": pick.map(|(ax, i, d)| json!([format!("{ax:?}"), i, d]))}), || {
        let Some((axis, i, dir)) = pick else { return Ok(()) };
        let t = trop_crystal_e(&a, i, dir, axis).ctx()?;
        let o = comb_crystal_oracle(&a, i, dir, axis).ctx()?;
        same("tropical vs tensor", &t, &o)?;
        if let Some(b) = &t {
            // weight: products along the axis shift by ±(e_i - e_{i+1})
            let line = |g: &Grid<TropInt>, k: usize| -> i64 {
                let v: Vec<TropInt> = if axis == Axis::Row { g.row(k).to_vec() } else { g.col(k) };
                v.iter().map(|t| t.to_i64().expect("small")).sum()
            };
            let s = if dir == Direction::Raise { 1 } else { -1 };
            ensure!(
                line(b, i - 1) == line(&a, i - 1) + s && line(b, i) == line(&a, i) - s,
                "weight did not shift by ±α_{i}"
            );
        }
        Ok(())
    })
}

fn t_comb_commute(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let a = rand_int_grid(rng, m, n, 5);
    let (i, j) = (rng.gen_range(1..m), rng.gen_range(1..n));
    let (d1, d2) = (rand_dir(rng), rand_dir(rng));
    outcome(json!({"a": gj(&a), "i": i, "j": j, "row": d1, "col": d2}), || {
        let row = |g: &Grid<TropInt>| comb_crystal_oracle(g, i, d1, Axis::Row).ctx();
        let col = |g: &Grid<TropInt>| comb_crystal_oracle(g, j, d2, Axis::Col).ctx();
        let rc = match col(&a)? {
            Some(b) => row(&b)?,
            None => None,
        };
        let cr = match row(&a)? {
            Some(b) => col(&b)?,
            None => None,
        };
        same("row∘col vs col∘row", &rc, &cr)
    })
}

fn t_trop_decoration(rng: &mut TrialRng, m: usize, n: usize) -> TrialOutcome {
    let a = rand_int_grid(rng, m, n, 9);
    outcome(json!({"a": gj(&a)}), || {
        let pq = split(&trop_grsk(&a));
        let mut terms: Vec<TropInt> = gt_decoration(&pq.p).into_iter().chain(gt_decoration(&pq.q)).collect();
        if m == n {
            terms.push(pq.p.get(n, n).clone());
        }
        same("min-plus F", &TropInt::sum(a.iter()), &TropInt::sum(&terms))
    })
}

type ShapeRow = (Vec<i64>, Vec<(i64, u64)>);

fn run_q_analogue(emit: &mut dyn FnMut(TrialOutcome)) {
    for mu1 in 0..=6i64 {
        for mu2 in 0..=mu1 {
            emit(outcome(json!({"m": 2, "n": 2, "mu": [mu1, mu2]}), || {
                let table = q_analogue(2, 2, &[mu1, mu2]).ctx()?;
                ensure!(table.len() as i64 == mu2 + 1, "expected {} shapes, got {}", mu2 + 1, table.len());
                for sc in table {
                    let k = sc.shape[1];
                    let expect = std::collections::BTreeMap::from([(k.min(mu2 - k), 1u64)]);
                    same(&format!("shape {:?}", sc.shape), &sc.coeffs, &expect)?;
                }
                Ok(())
            }));
        }
    }
    emit(outcome(json!({"m": 3, "n": 2, "mu": [4, 3, 2]}), || {
        let got: Vec<ShapeRow> = q_analogue(3, 2, &[4, 3, 2])
            .ctx()?
            .into_iter()
            .map(|s| (s.shape, s.coeffs.into_iter().collect()))
            .collect();
        let expect = vec![
            (vec![9, 0], vec![(0, 1)]),
            (vec![8, 1], vec![(0, 2)]),
            (vec![7, 2], vec![(0, 2), (1, 1)]),
            (vec![6, 3], vec![(0, 2), (1, 1)]),
            (vec![5, 4], vec![(0, 2)]),
        ];
        same("3x2 table", &got, &expect)
    }));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn seeds_are_stable() {
        assert_eq!(trial_seed(7, "grsk-local", 0, 0), trial_seed(7, "grsk-local", 0, 0));
        assert_ne!(trial_seed(7, "grsk-local", 0, 0), trial_seed(7, "grsk-local", 0, 1));
        assert_ne!(trial_seed(7, "grsk-local", 0, 0), trial_seed(8, "grsk-local", 0, 0));
    }

    #[test]
    fn partitions_in_a_box() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(4, 4).len(), 70);
    }

    #[test]
    fn every_suite_passes_a_few_trials() {
        let cfg = RunConfig { seed: 1, trials: Some(2), m_max: 3, n_max: 3 };
        for s in SUITES.iter().filter(|s| s.default_trials().is_some()) {
            let r = run_suite(s, &cfg);
            assert!(r.ok(), "{}: {:?}", s.name, r.first_failure);
        }
    }
}
