//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use geocrystal::crystal::decoration_matrix;
use geocrystal::grsk::{central_charge, central_charge_q, glue, grsk_insert, grsk_local};
use geocrystal::loopsym::{ExponentMatrix, LoopPoly, LoopRing, Reduction};
use geocrystal::trop::{int_grid, rsk_patterns, schensted_rsk, trop_grsk};
use geocrystal::verify::{find_suite, run_suite, RunConfig};
use geocrystal::{Grid, Rational};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn grid(rows: &[&[i64]]) -> Grid<Rational> {
    Grid::new(rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn suites(names: &[&str]) -> Check {
    let cfg = RunConfig::default();
    for name in names {
        let suite = find_suite(name).ok_or_else(|| format!("unknown suite {name}"))?;
        let report = run_suite(suite, &cfg);
        if let Some(f) = report.first_failure {
            return Err(format!(
                "{name}: {}/{} failed; first: {} on {}",
                report.failed, report.trials, f.message, f.input
            ));
        }
    }
    Ok(())
}

fn loop_mono(ring: &LoopRing, n: usize, factors: &[(usize, i64, u32)]) -> LoopPoly {
    factors.iter().fold(ring.one(), |acc, &(i, r, k)| {
        let b = (r - i as i64).rem_euclid(n as i64) as usize + 1;
        acc.mul(&ring.var(i, b).pow(k))
    })
}

fn c1() -> Check {
    suites(&["grsk-local"])
}

fn c2() -> Check {
    let a = int_grid(&[vec![1, 4], vec![2, 1], vec![1, 0]]).map_err(|e| e.to_string())?;
    expect("trop_grsk", trop_grsk(&a), int_grid(&[vec![2, 5], vec![3, 6], vec![4, 6]]).unwrap())?;
    let (p, qt) = schensted_rsk(&a).map_err(|e| e.to_string())?;
    expect("P", p.to_string(), "111122/222".into())?;
    expect("Q", qt.to_string(), "111112/223".into())?;
    expect("patterns glue", glue(&rsk_patterns(&a).unwrap()).unwrap(), trop_grsk(&a))
}

fn c3() -> Check {
    suites(&["trop-rsk-oracle", "trop-symmetry"])
}

fn c4() -> Check {
    let x = grid(&[&[1, 2], &[3, 4], &[5, 6]]);
    let pq = grsk_insert(&x).map_err(|e| e.to_string())?;
    expect("F(x)", decoration_matrix(&x), Rational::from(21))?;
    expect("F(P)", geocrystal::gt::gt_decoration(&pq.p), Some(q(21, 11)))?;
    expect("F(Q)", geocrystal::gt::gt_decoration(&pq.q), Some(q(210, 11)))?;
    expect(
        "glued",
        grsk_local(&x).rows_vec(),
        vec![vec![q(5, 1), q(2, 1)], vec![q(33, 1), q(24, 5)], vec![q(15, 1), q(240, 11)]],
    )?;
    suites(&["grsk-decoration"])
}

fn c5() -> Check {
    suites(&["grsk-isomorphism"])
}

fn c6() -> Check {
    suites(&["crystal-axioms", "gt-crystal-axioms"])
}

fn c7() -> Check {
    suites(&["main-invariance", "r-window-invariance"])
}

fn c8() -> Check {
    suites(&["r-equals-weyl", "r-braid", "r-involution"])
}

fn c9() -> Check {
    let ring = LoopRing::new(2, 4).map_err(|e| e.to_string())?;
    let want = [
        loop_mono(&ring, 4, &[(1, 1, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 1, 1), (2, 2, 1)]),
        loop_mono(&ring, 4, &[(1, 1, 1), (1, 3, 1), (1, 4, 1), (2, 1, 1), (2, 2, 2)]),
        loop_mono(&ring, 4, &[(1, 1, 1), (1, 4, 1), (2, 1, 1), (2, 2, 2), (2, 3, 1)]),
    ]
    .iter()
    .fold(ring.zero(), |acc, p| acc.add(p));
    expect("tableau sum", ring.schur_tableaux(&[4, 2], &[], 1).unwrap(), want.clone())?;
    expect("Jacobi-Trudi", ring.schur_jt(&[4, 2], &[], 1).unwrap(), want)?;
    suites(&["jt-exhaustive"])
}

fn c10() -> Check {
    suites(&["p-loop-formula"])
}

fn c11() -> Check {
    let ring = LoopRing::new(3, 2).map_err(|e| e.to_string())?;
    let p = ExponentMatrix::new(vec![vec![3, 2], vec![1, 2], vec![0, 1]]).unwrap();
    let e = ring.e_p(&p).map_err(|e| e.to_string())?;
    expect("E_p", e.to_string(), "E2^(1)E1^(1)**2E3^(2)E2^(2)".into())?;
    let f = ring.expand(&e);
    expect("leading", f.leading_term().map(|(k, c)| (k.clone(), c.clone())), Some((p.exps().to_vec(), q(1, 1))))?;
    match ring.lsym_reduce(&f) {
        Reduction::Representation(steps) if steps.len() == 1 && steps[0].e == e => {}
        other => return Err(format!("reduction of E_p: {other:?}")),
    }
    suites(&["leading-term", "leading-term-injective", "lsym-reduce"])
}

fn c12() -> Check {
    suites(&["hm-identity"])
}

fn c13() -> Check {
    let x = grid(&[&[1, 2], &[3, 4], &[5, 6]]);
    expect("Δ", central_charge(&x).unwrap(), q(210, 11))?;
    expect("F(Q) + corner", central_charge_q(&x).unwrap(), q(210, 11))?;
    suites(&["central-charge", "q-analogue"])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("gRSK local moves = insertion", c1),
        ("tropical RSK example", c2),
        ("tropical gRSK = Schensted RSK", c3),
        ("decoration additivity", c4),
        ("gRSK crystal equivariance", c5),
        ("crystal axioms and Verma relations", c6),
        ("M(x) and periodic-window invariance", c7),
        ("R = Weyl action, braid, involution", c8),
        ("Jacobi-Trudi for loop Schur functions", c9),
        ("P entries from box ratios", c10),
        ("E_p leading terms and reduction", c11),
        ("H/M minor identity", c12),
        ("central charge and q-analogue tables", c13),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {e}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
