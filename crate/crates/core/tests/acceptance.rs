//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`) and enforcing its stated runtime budget.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use hurwitz_core::algebra::{self, WorkedSeries};
use hurwitz_core::oracle::Oracle;
use hurwitz_core::rational::{int, rat, ratio};
use hurwitz_core::{decomp, primitive, simple, GradingRule, Partition, Series};

fn g8() -> &'static Series {
    static G: OnceLock<Series> = OnceLock::new();
    G.get_or_init(|| simple::solve_g_pde(8))
}

fn g12() -> &'static Series {
    static G: OnceLock<Series> = OnceLock::new();
    G.get_or_init(|| simple::solve_g_pde(12))
}

fn report(criterion: u32, name: &str) {
    println!("criterion {criterion} ({name}): PASS");
}

#[test]
fn criterion_01_f_consistency() {
    let start = Instant::now();
    let solved = primitive::solve_f_pde(10);
    let closed = primitive::build_f_closed(10);
    assert_eq!(solved, closed, "recurrence and closed construction differ");
    assert_eq!(solved.truncated(4), primitive::displayed_f_terms());
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "took {elapsed:?}, budget 30 s"
    );
    report(1, "F recurrence = closed construction through order 10");
}

#[test]
fn criterion_02_g_expansion() {
    // solved afresh so the timing covers the whole computation
    let start = Instant::now();
    let g4 = simple::solve_g_pde(4);
    assert_eq!(g4, simple::displayed_g_terms(), "order-4 expansion differs");
    let g = simple::solve_g_pde(8);
    assert!(g.grading_check(GradingRule::Simple));
    assert_eq!(g.order(), 8);
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, budget 60 s"
    );
    report(2, "G expansion matches display; order 8 stays graded");
}

#[test]
fn criterion_03_equation_coefficients() {
    type Expected = ((u32, u32), Vec<u32>, Option<u32>, i64);
    let expected: Vec<Expected> = vec![
        ((1, 1), vec![0, 0], None, 1),
        ((1, 2), vec![0, 1], None, 6),
        ((1, 3), vec![0, 2], None, 8),
        ((1, 3), vec![1, 1], None, 4),
        ((2, 2), vec![0, 0], Some(0), 1),
        ((2, 2), vec![0, 2], None, 4),
        ((2, 2), vec![1, 1], None, 4),
        ((2, 3), vec![0, 0], Some(1), 2),
        ((2, 3), vec![0, 1], Some(0), 8),
        ((2, 3), vec![0, 3], None, 10),
        ((2, 3), vec![1, 2], None, 20),
    ];
    let got = simple::grouped_terms(&[(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]);
    assert_eq!(got.len(), expected.len());
    for (term, (pair, wrapped, last, coefficient)) in got.iter().zip(&expected) {
        assert_eq!(term.pair, *pair);
        assert_eq!(&term.wrapped, wrapped);
        assert_eq!(term.last, *last);
        assert_eq!(term.coefficient, int(*coefficient), "pair {pair:?}");
    }
    report(3, "grouped equation terms are 1,6,4,4,1,8,4,2,8,10,20");
}

#[test]
fn criterion_04_oracle_cross_check() {
    let start = Instant::now();
    let g = &simple::solve_g_pde(6);
    let mut oracle = Oracle::new();
    let mut checked = 0usize;
    for n in 2..=6u32 {
        for y in simple::monomials_at(n) {
            let query = y.query().expect("profile fits");
            assert_eq!(
                simple::extract_h(g, &y).expect("within order"),
                oracle.hurwitz_number(&query),
                "oracle disagrees at {y}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 26 + 3, "checked only {checked} profiles");
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "took {elapsed:?}, budget 5 min"
    );
    report(4, "extraction equals factorization counts, n <= 6");
}

#[test]
fn criterion_05_small_profile_formulas() {
    let g = g8();
    let mut oracle = Oracle::new();
    for profile in simple::SmallProfile::ALL {
        for n in profile.min_sheets()..=8 {
            let y = profile.monomial(n).expect("within budget");
            assert_eq!(
                simple::small_profile_value(profile, n).expect("in domain"),
                simple::extract_h(g, &y).expect("within order"),
                "{profile:?} at n = {n}"
            );
        }
    }
    // spot anchors against the oracle
    let anchor = simple::small_profile_value(simple::SmallProfile::TwoDouble, 3).unwrap();
    assert_eq!(anchor, ratio(1, 3));
    let q = simple::SmallProfile::TwoDouble
        .monomial(3)
        .unwrap()
        .query()
        .unwrap();
    assert_eq!(anchor, oracle.hurwitz_number(&q));
    let anchor = simple::small_profile_value(simple::SmallProfile::DoubleTriple, 4).unwrap();
    assert_eq!(anchor, rat(1));
    let q = simple::SmallProfile::DoubleTriple
        .monomial(4)
        .unwrap()
        .query()
        .unwrap();
    assert_eq!(anchor, oracle.hurwitz_number(&q));
    report(5, "four multi-point closed formulas match through n = 8");
}

#[test]
fn criterion_06_one_point_formulas() {
    let g = g8();
    let mut applied = [0usize; 4];
    for n in 2..=8u32 {
        for y in simple::monomials_at(n) {
            let h = simple::extract_h(g, &y).expect("within order");
            let mono = y.monomial();
            let k = mono.factor_count();
            if mono.exponent_of(n - 1) > 0 {
                let v = simple::one_point_value(simple::OnePointFormula::MaxCycle { k }, n)
                    .expect("in domain");
                assert_eq!(v, h, "max-cycle at {y}");
                applied[0] += 1;
            }
            if n >= 3 && mono.exponent_of(n - 2) > 0 {
                let v = simple::one_point_value(simple::OnePointFormula::NextMaxCycle { k }, n)
                    .expect("in domain");
                assert_eq!(v, h, "next-max-cycle at {y}");
                applied[1] += 1;
            }
            let exps = mono.exps();
            if exps.len() == 2 && exps[0].0 == 1 && exps[1].1 == 1 {
                let i = exps[1].0;
                let v = simple::one_point_value(simple::OnePointFormula::SingleCycle { i }, n)
                    .expect("in domain");
                assert_eq!(v, h, "single-cycle at {y}");
                let kappa = Partition::new(vec![i]).unwrap();
                assert_eq!(v, primitive::hurwitz_closed(&kappa, n).unwrap());
                applied[2] += 1;
            }
            if exps.len() == 1 && exps[0] == (1, 2 * n - 2) {
                let v = simple::one_point_value(simple::OnePointFormula::AllSimple, n)
                    .expect("in domain");
                assert_eq!(v, h, "all-simple at {y}");
                assert_eq!(
                    v,
                    primitive::hurwitz_closed(&Partition::empty(), n).unwrap()
                );
                applied[3] += 1;
            }
        }
    }
    assert!(applied.iter().all(|&c| c > 0), "coverage gap: {applied:?}");
    report(
        6,
        "one-point closed formulas match on all applicable monomials",
    );
}

#[test]
fn criterion_07_pm_table() {
    let g = g12();
    for entry in simple::pm_table() {
        assert!(
            simple::pm_check(g, &entry, 12).expect("within order"),
            "P_{} fails against G",
            entry.label
        );
        assert!(entry.min_sheets() <= 12);
    }
    report(7, "all eight tabulated polynomials verified to n = 12");
}

#[test]
fn criterion_08_algebra_identities() {
    let start = Instant::now();
    assert!(algebra::tree_inverse_identity(40));
    assert!(algebra::euler_z_identity(40));
    for n in 2..=30 {
        assert!(algebra::verify_abel(n), "two-term identity at n = {n}");
        algebra::a_value(n).unwrap_or_else(|e| panic!("A_{n}: {e}"));
    }
    assert!(algebra::z_squared_identity(40));
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "took {elapsed:?}, budget 10 s"
    );
    report(8, "tree-series identities hold through order 40");
}

#[test]
fn criterion_09_worked_series() {
    for w in WorkedSeries::ALL {
        assert_eq!(
            w.factored().eval(20),
            w.coefficient_series(20),
            "factored form of {}",
            w.label()
        );
        let (found, _) = algebra::express_in_x_auto(&w.coefficient_series(25))
            .expect("order is sufficient")
            .unwrap_or_else(|| panic!("{} not recognized in the algebra", w.label()));
        assert_eq!(found, w.factored(), "expression of {}", w.label());
    }
    assert!(algebra::f11_relation(20));
    for (a, b, c) in [
        (rat(2), rat(2), ratio(1, 2)),
        (rat(4), rat(2), ratio(1, 2)),
        (rat(3), rat(1), ratio(1, 2)),
        (rat(3), rat(3), ratio(1, 2)),
        (rat(3), rat(2), ratio(3, 2)),
        (rat(3), rat(2), ratio(-1, 2)),
    ] {
        assert!(
            !algebra::f11_relation_with(20, &a, &b, &c),
            "perturbed relation ({a}, {b}, {c}) must fail"
        );
    }
    report(
        9,
        "worked series, their expressions, and the splitting relation",
    );
}

#[test]
fn criterion_10_decomposition_lists() {
    for i in 1..=6u32 {
        for j in 1..=(7 - i) {
            for list in decomp::enumerate(i, j) {
                assert_eq!(
                    list.p(),
                    list.brute_force_p().expect("ground set within bound"),
                    "counting mismatch for {list}"
                );
                let mut reversed = list.a().to_vec();
                reversed.reverse();
                let r = decomp::DecompList::new(reversed, i, j).unwrap();
                assert_eq!(list.q(), r.q(), "q not symmetric in a for {list}");
                let s = decomp::DecompList::new(list.a().to_vec(), j, i).unwrap();
                assert_eq!(list.q(), s.q(), "q not symmetric in i, j for {list}");
                if list.k() == 2 {
                    let expected = i.min(j).min(list.a()[0] + 1).min(list.a()[1] + 1);
                    assert_eq!(list.q(), int(i64::from(expected)), "min formula for {list}");
                }
            }
        }
    }
    report(
        10,
        "p = decomposition count, q symmetric, min formula, i + j <= 7",
    );
}
