use geocrystal::grsk::{glue, grsk_insert, grsk_inverse, grsk_local, split};
use geocrystal::gt::GtPattern;
use geocrystal::loopsym::{LoopPoly, LoopRing};
use geocrystal::trop::{rsk_glued, trop_grsk, Tableau};
use geocrystal::{Grid, Rational, Semifield, TropInt};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=20).prop_map(|(a, b)| Rational::new(a, b))
}

fn grid(max: usize) -> impl Strategy<Value = Grid<Rational>> {
    (1..=max, 1..=max).prop_flat_map(|(m, n)| {
        proptest::collection::vec(rat(), m * n)
            .prop_map(move |v| Grid::new(v.chunks(n).map(<[_]>::to_vec).collect()).unwrap())
    })
}

fn int_grid(max: usize, top: i64) -> impl Strategy<Value = Grid<TropInt>> {
    (1..=max, 1..=max).prop_flat_map(move |(m, n)| {
        proptest::collection::vec(0..=top, m * n).prop_map(move |v| {
            Grid::new(v.chunks(n).map(|r| r.iter().map(|&t| TropInt::from(t)).collect()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grsk_round_trips(x in grid(3)) {
        let y = grsk_local(&x);
        prop_assert_eq!(grsk_inverse(&y), x.clone());
        prop_assert_eq!(glue(&split(&y)).unwrap(), y.clone());
        prop_assert_eq!(glue(&grsk_insert(&x).unwrap()).unwrap(), y);
    }

    #[test]
    fn tropical_grsk_is_rsk(a in int_grid(4, 5)) {
        prop_assert_eq!(trop_grsk(&a), rsk_glued(&a).unwrap());
        prop_assert_eq!(grsk_inverse(&trop_grsk(&a)), a);
    }

    #[test]
    fn rational_parse_display(a in -50i64..50, b in 1i64..50) {
        let r = Rational::new(a, b);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn gmax_is_min_plus_max(v in proptest::collection::vec(-30i64..30, 1..6)) {
        let t: Vec<TropInt> = v.iter().map(|&a| TropInt::from(a)).collect();
        let g = geocrystal::gmax(&t).unwrap();
        prop_assert_eq!(g, TropInt::from(*v.iter().max().unwrap()));
    }

    #[test]
    fn grid_json_round_trip(x in grid(3)) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Grid<Rational>>(&s).unwrap(), x);
    }

    #[test]
    fn pattern_json_round_trip(m in 1usize..4, n in 1usize..4, seed in proptest::collection::vec(rat(), 12)) {
        let mut k = 0;
        let z = GtPattern::from_fn(m, n, |_, _| { k += 1; seed[k - 1].clone() });
        let s = serde_json::to_string(&z).unwrap();
        prop_assert_eq!(serde_json::from_str::<GtPattern<Rational>>(&s).unwrap(), z);
    }

    #[test]
    fn poly_terms_round_trip(k in 1i64..3, r in 1i64..4, c in rat()) {
        let ring = LoopRing::new(2, 3).unwrap();
        let f = ring.loop_e(k, r).mul(&ring.loop_h(1, r + 1)).scale(&c);
        prop_assert_eq!(LoopPoly::from_terms(2, 3, &f.to_terms()).unwrap(), f);
    }

    #[test]
    fn tableau_display_parse(a in int_grid(3, 3)) {
        let (p, q) = geocrystal::trop::schensted_rsk(&a).unwrap();
        for t in [p, q] {
            if t.rows().is_empty() { continue; }
            prop_assert_eq!(Tableau::parse(&t.to_string()).unwrap(), t);
        }
    }
}

#[test]
fn rational_zero_is_additive_identity() {
    let a = Rational::new(3, 7);
    assert_eq!(a.clone() + Rational::zero(), a);
    assert!(!TropInt::from(0).is_zero());
}
