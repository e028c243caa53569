use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{check_all, Grid, Outcome, Suite};
use crate::characters::{
    check_character, dot_action, lemma_rho_identities, lexical_raise, lexical_raise_oracle, reduction_char,
    su_zhang_char, typical_constant_delta_char, weyl_dimension, ConeElement,
};
use crate::combinatorics::{all_permutations, partitions_in_box, CompositePartition, Partition};
use crate::jacobi_trudi::{general_char, jt_char};
use crate::laurent::LaurentPoly;
use crate::symfunc::SymFuncContext;
use crate::weights::{atypical_roots, decompose, normalize, phi, phi_inverse, special_class, Weight};

type Check = std::result::Result<(), String>;

pub(super) fn run(suite: Suite, grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    match suite {
        Suite::Rho => rho(grid, rng),
        Suite::SplitClassical => split_classical(grid, rng),
        Suite::SplitSuper => split_super(grid, rng),
        Suite::IsolateY => isolate_y(grid, rng),
        Suite::CompositeSchur => composite_schur(grid, rng),
        Suite::JtVsOracle => jt_vs_oracle(grid, rng),
        Suite::Structural => structural(grid, rng),
        Suite::RaiseOracle => raise_oracle(grid, rng),
        Suite::PhiRoundtrip => phi_roundtrip(grid, rng),
        Suite::GlM1 => glm1(grid, rng),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Weakly decreasing integer sequences of length `len` in `[−e, e]`.
pub(crate) fn decreasing(len: usize, e: i64) -> Vec<Vec<i64>> {
    partitions_in_box(len, (2 * e) as u32).into_iter().map(|p| p.padded(len).iter().map(|v| v - e).collect()).collect()
}

/// Every dominant integral weight on `gl(m|n)` with entries in `[−e, e]`.
pub(crate) fn dominant_weights(m: usize, n: usize, e: i64) -> Vec<Weight> {
    let mus = decreasing(n, e);
    decreasing(m, e).into_iter().flat_map(|l| mus.iter().map(move |u| Weight::new(l.clone(), u.clone()))).collect()
}

/// Special weights with constant δ-part `−k` and `|α_i| ≤ e`.
pub(crate) fn special_constant_delta(m: usize, n: usize, e: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for k in 0..=m as i64 {
        for alpha in decreasing(m, e) {
            let w = Weight::new(alpha, vec![-k; n]);
            if special_class(&w).is_some() {
                out.push(w);
            }
        }
    }
    out
}

fn composites(nu_len: usize, nu_part: i64, mu_len: usize, mu_part: i64) -> Vec<CompositePartition> {
    let mus = partitions_in_box(mu_len, mu_part as u32);
    partitions_in_box(nu_len, nu_part as u32)
        .into_iter()
        .flat_map(|nu| mus.iter().map(move |mu| CompositePartition::new(nu.clone(), mu.clone())))
        .collect()
}

fn expect_eq(case: &str, what: &str, a: &LaurentPoly, b: &LaurentPoly) -> Check {
    if a == b {
        Ok(())
    } else {
        Err(format!("{case}: {what}"))
    }
}

fn ctx_err<T, E: std::fmt::Display>(case: &str, r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{case}: {e}"))
}

fn rho(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for p in 0..=m {
            for n in grid.n.iter() {
                cases.push((p, m - p, n));
            }
        }
    }
    check_all(cases, grid, rng, |&(p, q, n)| {
        if lemma_rho_identities(p, q, n).passed() {
            Ok(())
        } else {
            Err(format!("p={p} q={q} n={n}"))
        }
    })
}

fn split_classical(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for p in 0..=m {
            for mu in partitions_in_box(p, grid.entry as u32) {
                for nu in partitions_in_box(m - p, grid.entry as u32) {
                    let mut lam = mu.padded(p);
                    lam.extend(nu.padded(m - p));
                    if lam.windows(2).all(|w| w[0] >= w[1]) {
                        cases.push((m, p, mu.clone(), nu, lam));
                    }
                }
            }
        }
    }
    check_all(cases, grid, rng, |(m, p, mu, nu, lam)| {
        let case = format!("m={m} p={p} mu=({mu}) nu=({nu})");
        let ctx = SymFuncContext::new(*m, 0);
        let lhs = ctx_err(&case, ctx.split_sum_classical(mu, nu, *p))?;
        let lam = Partition::from_signed(lam).expect("decreasing and nonnegative");
        expect_eq(&case, "split sum differs from s_λ", &lhs, &ctx.schur(&lam))
    })
}

fn split_super(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for n in grid.n.iter() {
            for c in composites(m, grid.entry, m, grid.entry) {
                if !c.is_mn_standard(m, n) {
                    continue;
                }
                for q in 1..m + 1 - c.mu.len().min(m) {
                    // κ must end at or above n unless η is empty
                    if c.nu.len() <= q || c.nu.part(q) >= n as i64 {
                        cases.push((m, n, c.clone(), q));
                    }
                }
            }
        }
    }
    check_all(cases, grid, rng, |(m, n, c, q)| {
        let case = format!("gl({m}|{n}) {c} q={q}");
        let ctx = SymFuncContext::new(*m, *n);
        let lhs = ctx_err(&case, ctx.split_sum_super(c, *q))?;
        expect_eq(&case, "split sum differs from the S-function", &lhs, &ctx.composite_super_schur(c))
    })
}

fn isolate_y(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for n in grid.n.iter().filter(|&n| n >= 1) {
            for c in composites(m, grid.entry, m, grid.entry) {
                cases.push((m, n, c));
            }
        }
    }
    check_all(cases, grid, rng, |(m, n, c)| {
        let case = format!("gl({m}|{n}) {c}");
        let ctx = SymFuncContext::new(*m, *n);
        let lhs = ctx_err(&case, ctx.reconstruct_from_last_y(c))?;
        expect_eq(&case, "strip expansion differs", &lhs, &ctx.composite_super_schur(c))
    })
}

fn composite_schur(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for c in composites(m, grid.entry, m, grid.entry) {
            if c.is_m_standard(m) {
                cases.push((m, c));
            }
        }
    }
    check_all(cases, grid, rng, |(m, c)| {
        let case = format!("m={m} {c}");
        ctx_err(&case, SymFuncContext::new(*m, 0).composite_schur(c)).map(|_| ())
    })
}

/// Structure, the typical closed form and dimension, and the reduction.
fn character_checks(w: &Weight, case: &str, ch: &LaurentPoly) -> Check {
    let dim = ctx_err(case, check_character(w, ch))?;
    if w.has_constant_delta() && atypical_roots(w).is_typical() {
        let typical = ctx_err(case, typical_constant_delta_char(w))?;
        expect_eq(case, "typical closed form differs", &typical, ch)?;
        let expected = weyl_dimension(&w.lambda) << (w.m() * w.n());
        if dim != expected {
            return Err(format!("{case}: dimension {dim} ≠ {expected}"));
        }
    }
    if let Some(c) = special_class(w) {
        let red = ctx_err(case, reduction_char(&c))?;
        expect_eq(case, "reduction differs", &red, ch)?;
    }
    if dim <= BigInt::from(0) {
        return Err(format!("{case}: nonpositive dimension"));
    }
    Ok(())
}

fn jt_vs_oracle(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter().filter(|&m| m >= 1) {
        for n in grid.n.iter().filter(|&n| n >= 1) {
            cases.extend(special_constant_delta(m, n, grid.entry));
        }
    }
    check_all(cases, grid, rng, |w| {
        let case = w.to_string();
        let jt = ctx_err(&case, jt_char(w))?;
        let sz = ctx_err(&case, su_zhang_char(w))?;
        expect_eq(&case, "jt differs from su-zhang", &jt, &sz)?;
        let c = special_class(w).expect("enumerated as special");
        let s = SymFuncContext::new(w.m(), w.n()).composite_super_schur(&phi(&c));
        expect_eq(&case, "jt differs from the S-function", &jt, &s)?;
        character_checks(w, &case, &sz)
    })
}

fn structural(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        for n in grid.n.iter() {
            cases.extend(dominant_weights(m, n, grid.entry));
        }
    }
    check_all(cases, grid, rng, |w| {
        let case = w.to_string();
        let sz = ctx_err(&case, su_zhang_char(w))?;
        if w.has_constant_delta() && w.n() >= 1 {
            let g = ctx_err(&case, general_char(w))?;
            expect_eq(&case, "general_char differs", &g, &sz)?;
        }
        character_checks(w, &case, &sz)
    })
}

fn random_decreasing(rng: &mut ChaCha8Rng, len: usize, e: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(-e..=e)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn raise_oracle(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let want = grid.samples.unwrap_or(500);
    let mut cases = Vec::with_capacity(want);
    let (m_lo, n_lo) = (grid.m.lo.max(1), grid.n.lo.max(1));
    if m_lo > grid.m.hi || n_lo > grid.n.hi {
        return Outcome { cases: 0, failures: Vec::new() };
    }
    let mut attempts = 0usize;
    while cases.len() < want && attempts < 1000 * want.max(1) {
        attempts += 1;
        let m = rng.gen_range(m_lo..=grid.m.hi);
        let n = rng.gen_range(n_lo..=grid.n.hi);
        let w = Weight::new(random_decreasing(rng, m, grid.entry), random_decreasing(rng, n, grid.entry));
        let slots = atypical_roots(&w).roots;
        if slots.is_empty() {
            continue;
        }
        let perms = all_permutations(slots.len());
        let sigma = perms[rng.gen_range(0..perms.len())].clone();
        let offsets: Vec<i64> = (0..slots.len()).map(|_| rng.gen_range(0..=2)).collect();
        cases.push(ConeElement::with_offsets(dot_action(&sigma, &w, &slots), slots, offsets));
    }
    let all = Grid { samples: None, ..*grid };
    check_all(cases, &all, rng, |v| {
        let case = format!("{} offsets {:?}", v.base, v.offsets);
        let raised = lexical_raise(v);
        if !raised.is_lexical() || !raised.le(v) {
            return Err(format!("{case}: greedy result is not a lexical element below the input"));
        }
        match lexical_raise_oracle(v) {
            Some(best) if best == raised => Ok(()),
            Some(best) => Err(format!("{case}: greedy {} ≠ oracle {}", raised.value, best.value)),
            None => Err(format!("{case}: no unique maximum")),
        }
    })
}

enum PhiCase {
    Weight(Weight),
    Composite(usize, usize, CompositePartition),
}

fn phi_roundtrip(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter().filter(|&m| m >= 1) {
        for n in grid.n.iter().filter(|&n| n >= 1) {
            cases.extend(dominant_weights(m, n, grid.entry).into_iter().map(PhiCase::Weight));
            let e = grid.entry;
            for c in composites(m + e as usize, e + n as i64, m, e) {
                cases.push(PhiCase::Composite(m, n, c));
            }
        }
    }
    check_all(cases, grid, rng, |case| match case {
        PhiCase::Weight(w) => weight_roundtrip(w),
        PhiCase::Composite(m, n, c) => match phi_inverse(c, *m, *n) {
            Ok(cls) if phi(&cls) == *c => Ok(()),
            Ok(cls) => Err(format!("gl({m}|{n}) {c}: φ(φ⁻¹) = {}", phi(&cls))),
            Err(_) => Ok(()),
        },
    })
}

fn weight_roundtrip(w: &Weight) -> Check {
    let case = w.to_string();
    if let Some(c) = special_class(w) {
        let back = ctx_err(&case, phi_inverse(&phi(&c), w.m(), w.n()))?;
        if back != c {
            return Err(format!("{case}: φ⁻¹(φ) = {}", back.weight));
        }
        if decompose(&c).reassemble() != *w {
            return Err(format!("{case}: reassembly differs"));
        }
    }
    let (j, c) = ctx_err(&case, normalize(w))?;
    if c.weight != w.shift_sigma(j) {
        return Err(format!("{case}: normalized weight is not the σ-shift"));
    }
    let (beta, m) = (w.mu[0], w.m() as i64);
    for t in beta - m - 1..=beta + m + 1 {
        if (special_class(&w.shift_sigma(t)).is_some()) != (t == j) {
            return Err(format!("{case}: σ-shift by {t} breaks uniqueness of j = {j}"));
        }
    }
    Ok(())
}

fn glm1(grid: &Grid, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = Vec::new();
    for m in grid.m.iter() {
        cases.extend(dominant_weights(m, 1, grid.entry));
    }
    check_all(cases, grid, rng, |w| {
        let case = w.to_string();
        let g = ctx_err(&case, general_char(w))?;
        let sz = ctx_err(&case, su_zhang_char(w))?;
        expect_eq(&case, "general_char differs from su-zhang", &g, &sz)
    })
}
