use super::*;
use crate::combinatorics::partitions_in_box;
use crate::laurent::{ExponentVector, PermutationPair};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn cp(s: &str) -> CompositePartition {
    s.parse().unwrap()
}

fn mono(m: usize, n: usize, e: &[i64]) -> LaurentPoly {
    LaurentPoly::monomial(m, n, ExponentVector::from_integers(e), Int::ONE)
}

fn sum(ts: &[LaurentPoly]) -> LaurentPoly {
    ts.iter().fold(LaurentPoly::zero(ts[0].m(), ts[0].n()), |a, t| &a + t)
}

#[test]
fn classical_h_and_e() {
    let c = SymFuncContext::new(2, 2);
    assert_eq!(
        c.h_classical(2),
        sum(&[mono(2, 2, &[2, 0, 0, 0]), mono(2, 2, &[1, 1, 0, 0]), mono(2, 2, &[0, 2, 0, 0])])
    );
    assert_eq!(c.e_classical(2), mono(2, 2, &[0, 0, 1, 1]));
    assert!(c.h_classical(-1).is_zero());
    assert!(c.e_classical(3).is_zero());
    assert_eq!(c.h_classical(0), LaurentPoly::one(2, 2));
    assert_eq!(SymFuncContext::new(0, 1).h_classical(2), LaurentPoly::zero(0, 1));
    assert_eq!(SymFuncContext::new(0, 1).h_classical(0), LaurentPoly::one(0, 1));
}

#[test]
fn super_h_examples() {
    let c = SymFuncContext::new(1, 1);
    assert_eq!(c.super_h(0), LaurentPoly::one(1, 1));
    assert_eq!(c.super_h(1), sum(&[mono(1, 1, &[1, 0]), mono(1, 1, &[0, 1])]));
    assert_eq!(c.super_h(2), sum(&[mono(1, 1, &[2, 0]), mono(1, 1, &[1, 1])]));
    assert_eq!(c.dual_super_h(1), sum(&[mono(1, 1, &[-1, 0]), mono(1, 1, &[0, -1])]));
    assert_eq!(c.dual_super_h(0), LaurentPoly::one(1, 1));
    assert_eq!(c.dual_super_h(3).invert_variables(), c.super_h(3));
}

#[test]
fn schur_examples() {
    let c = SymFuncContext::new(2, 0);
    assert_eq!(c.schur(&p("1")), sum(&[mono(2, 0, &[1, 0]), mono(2, 0, &[0, 1])]));
    assert_eq!(c.schur(&p("1,1")), mono(2, 0, &[1, 1]));
    assert_eq!(c.schur(&p("2,1")), sum(&[mono(2, 0, &[2, 1]), mono(2, 0, &[1, 2])]));
    assert!(c.schur(&p("1,1,1")).is_zero());
    for lam in partitions_in_box(3, 3) {
        let c = SymFuncContext::new(3, 1);
        assert_eq!(c.schur(&lam), c.schur_bialternant(&lam).unwrap(), "λ = {lam}");
    }
}

#[test]
fn composite_schur_examples() {
    let c = SymFuncContext::new(2, 0);
    assert_eq!(c.composite_schur(&cp("|2,1")).unwrap(), c.schur(&p("2,1")));
    assert_eq!(c.composite_schur(&cp("1|")).unwrap(), sum(&[mono(2, 0, &[-1, 0]), mono(2, 0, &[0, -1])]));
    assert_eq!(
        c.composite_schur(&cp("1|1")).unwrap(),
        sum(&[mono(2, 0, &[1, -1]), LaurentPoly::one(2, 0), mono(2, 0, &[-1, 1])])
    );
    assert!(matches!(c.composite_schur(&cp("1|1,1")), Err(Error::NonStandard(_))));
}

#[test]
fn super_schur_examples() {
    let c = SymFuncContext::new(1, 1);
    assert_eq!(c.super_schur(&p("3")), c.super_h(3));
    let h = |r| c.super_h(r);
    assert_eq!(c.super_schur(&p("1,1")), &(&h(1) * &h(1)) - &(&h(2) * &h(0)));
    assert_eq!(c.super_schur(&p("")), LaurentPoly::one(1, 1));
    assert_eq!(c.composite_super_schur(&cp("1|")), c.dual_super_h(1));
    let c = SymFuncContext::new(2, 1);
    assert_eq!(c.composite_super_schur(&cp("|2")), c.super_h(2));
}

#[test]
fn supersymmetric_cancellation() {
    // x_m = t, y_n = −t leaves h_r(x/y) on the smaller alphabets
    for m in 1..=3 {
        for n in 1..=3 {
            let c = SymFuncContext::new(m, n);
            let small = SymFuncContext::new(m - 1, n - 1);
            for r in 0..=6 {
                let full = c.super_h(r);
                let terms = full.terms().iter().map(|(e, k)| {
                    let mut e = e.clone();
                    let yv = e.get(m + n - 1);
                    e.doubled_mut()[m - 1] += yv;
                    e.doubled_mut()[m + n - 1] = 0;
                    let sign = if (yv / 2) % 2 == 0 { 1 } else { -1 };
                    (e, k * &Int::from(sign as i64))
                });
                let sub = LaurentPoly::from_terms(m, n, terms.collect::<Vec<_>>());
                let xs: Vec<usize> = (0..m - 1).collect();
                let ys: Vec<usize> = (0..n - 1).collect();
                let expected = small.super_h(r).reindex(m, n, &xs, &ys).unwrap();
                assert_eq!(sub, expected, "m={m} n={n} r={r}");
            }
        }
    }
}

#[test]
fn outputs_are_symmetric() {
    let c = SymFuncContext::new(2, 2);
    let f = c.composite_super_schur(&cp("2|1"));
    for u in crate::combinatorics::all_permutations(2) {
        for v in crate::combinatorics::all_permutations(2) {
            let w = PermutationPair { x: u.clone(), y: v };
            assert_eq!(f.act_permutation(&w), f);
        }
    }
}

#[test]
fn split_sum_classical_examples() {
    let c = SymFuncContext::new(2, 0);
    assert_eq!(c.split_sum_classical(&p("2"), &p("1"), 1).unwrap(), c.schur(&p("2,1")));
    assert_eq!(c.split_sum_classical(&p("3,1"), &p(""), 2).unwrap(), c.schur(&p("3,1")));
    let c = SymFuncContext::new(3, 0);
    assert_eq!(c.split_sum_classical(&p("1,1"), &p("1"), 2).unwrap(), mono(3, 0, &[1, 1, 1]));
}

#[test]
fn split_sum_super_examples() {
    let c = SymFuncContext::new(3, 2);
    let target = cp("3,1|1");
    assert_eq!(c.split_sum_super(&target, 1).unwrap(), c.composite_super_schur(&target));
    let c = SymFuncContext::new(2, 1);
    let target = cp("1|1");
    assert_eq!(c.split_sum_super(&target, 1).unwrap(), c.composite_super_schur(&target));
    assert!(matches!(c.split_sum_super(&target, 0), Err(Error::Hypothesis(_))));
    assert!(matches!(c.split_sum_super(&cp("|1,1"), 1), Err(Error::Hypothesis(_))));
}

#[test]
fn split_sum_super_without_y_is_the_classical_split() {
    let c = SymFuncContext::new(3, 0);
    let target = cp("2,1|1");
    assert_eq!(c.split_sum_super(&target, 2).unwrap(), c.composite_schur(&target).unwrap());
}

#[test]
fn isolate_examples() {
    let t = isolate_last_y(&cp("|1"));
    assert_eq!(t, vec![StripTerm { part: cp("|1"), exponent: 0 }, StripTerm { part: cp("|"), exponent: 1 },]);
    let t = isolate_last_y(&cp("1|"));
    assert_eq!(t, vec![StripTerm { part: cp("1|"), exponent: 0 }, StripTerm { part: cp("|"), exponent: -1 },]);
    let c = SymFuncContext::new(1, 1);
    assert_eq!(c.reconstruct_from_last_y(&cp("|1")).unwrap(), c.super_h(1));
    assert_eq!(c.reconstruct_from_last_y(&cp("1|")).unwrap(), c.dual_super_h(1));
}

#[test]
fn vertical_strip_enumeration() {
    let strips = vertical_strips(&p("2,1"));
    assert_eq!(strips, vec![p("2,1"), p("1,1"), p("2"), p("1")]);
}

#[test]
fn split_sum_super_fails_when_kappa_ends_below_n() {
    // κ = (1), η = (1) on gl(2|2): the split pieces do not recombine
    let c = SymFuncContext::new(2, 2);
    let target = cp("1,1|");
    assert_ne!(c.split_sum_super(&target, 1).unwrap(), c.composite_super_schur(&target));
    let c = SymFuncContext::new(2, 1);
    assert_eq!(c.split_sum_super(&target, 1).unwrap(), c.composite_super_schur(&target));
}
