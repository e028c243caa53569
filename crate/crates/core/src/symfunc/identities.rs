use super::{vandermonde_factors, SymFuncContext};
use crate::combinatorics::{enumerate_splits, split_pairing_sign, CompositePartition, Partition};
use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, Int, LaurentPoly};

/// `Π_{i<j}(x_{v_i} − x_{v_j})`.
pub fn vandermonde(m: usize, n: usize, vars: &[usize]) -> LaurentPoly {
    vandermonde_factors(m, n, vars).iter().fold(LaurentPoly::one(m, n), |acc, f| &acc * f)
}

/// All partitions `α` with `λ_i − α_i ∈ {0, 1}` for every `i`.
pub fn vertical_strips(lam: &Partition) -> Vec<Partition> {
    let parts = lam.padded(lam.len());
    let mut out = Vec::new();
    for mask in 0u64..1 << parts.len() {
        let alpha: Vec<i64> = parts.iter().enumerate().map(|(i, p)| p - (mask >> i & 1) as i64).collect();
        if alpha.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::from_signed(&alpha).expect("parts stay nonnegative"));
        }
    }
    out
}

/// One summand `s_{β̄;α}(x/y^{(n−1)}) y_n^{exponent}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripTerm {
    pub part: CompositePartition,
    pub exponent: i64,
}

/// The expansion of `s_{ν̄;μ}(x/y)` in the last y-variable: all vertical
/// strips `α ⊆ μ`, `β ⊆ ν`, with exponent `|μ − α| − |ν − β|`.
pub fn isolate_last_y(c: &CompositePartition) -> Vec<StripTerm> {
    let mut out = Vec::new();
    for alpha in vertical_strips(&c.mu) {
        let a = (c.mu.weight() - alpha.weight()) as i64;
        for beta in vertical_strips(&c.nu) {
            let b = (c.nu.weight() - beta.weight()) as i64;
            out.push(StripTerm { part: CompositePartition::new(beta, alpha.clone()), exponent: a - b });
        }
    }
    out
}

impl SymFuncContext {
    /// `Σ_{x',x''} s_{μ+q^p}(x') s_ν(x'') / E(x', x'')` over splits with
    /// `|x'| = p`, `|x''| = q`, `p + q = m`.
    pub fn split_sum_classical(&self, mu: &Partition, nu: &Partition, p: usize) -> Result<LaurentPoly> {
        let m = self.m;
        if p > m || mu.len() > p || nu.len() > m - p {
            return Err(Error::Hypothesis(format!("split sum needs l(μ) ≤ p ≤ m and l(ν) ≤ m − p (p = {p}, m = {m})")));
        }
        let q = m - p;
        let shifted: Vec<i64> = mu.padded(p).iter().map(|v| v + q as i64).collect();
        let shifted = Partition::from_signed(&shifted).expect("shift keeps order");
        let first = SymFuncContext::new(p, self.n).schur(&shifted);
        let second = SymFuncContext::new(q, self.n).schur(nu);
        self.split_sum(p, &first, &second, 0)
    }

    /// `Σ_{x',x''} (Πx')^q s_{η̄;μ}(x'/y) s_κ̄(x''/y) / E(x', x'')` where `κ`
    /// is the first `q` parts of `ν` and `η` the rest.
    pub fn split_sum_super(&self, c: &CompositePartition, q: usize) -> Result<LaurentPoly> {
        let m = self.m;
        if q == 0 || q + c.mu.len() > m {
            return Err(Error::Hypothesis(format!(
                "0 < q < m + 1 − l(μ) violated (q = {q}, m = {m}, l(μ) = {})",
                c.mu.len()
            )));
        }
        let p = m - q;
        let nu = c.nu.parts();
        let cut = q.min(nu.len());
        let kappa = Partition::new(nu[..cut].to_vec()).expect("prefix of a partition");
        let eta = Partition::new(nu[cut..].to_vec()).expect("suffix of a partition");
        let first = SymFuncContext::new(p, self.n).composite_super_schur(&CompositePartition::new(eta, c.mu.clone()));
        let second =
            SymFuncContext::new(q, self.n).composite_super_schur(&CompositePartition::new(kappa, Partition::empty()));
        self.split_sum(p, &first, &second, q as i64)
    }

    /// Common-denominator evaluation of `Σ (Πx')^power f(x') g(x'') / E(x', x'')`.
    pub(crate) fn split_sum(
        &self,
        p: usize,
        first: &LaurentPoly,
        second: &LaurentPoly,
        power: i64,
    ) -> Result<LaurentPoly> {
        let (m, n) = (self.m, self.n);
        let ys: Vec<usize> = (0..n).collect();
        let mut numerator = LaurentPoly::zero(m, n);
        for split in enumerate_splits(m, p) {
            let (sign, _) = split_pairing_sign(&split);
            let f = first.reindex(m, n, &split.r, &ys)?;
            let g = second.reindex(m, n, &split.s, &ys)?;
            let mut e = ExponentVector::zero(m + n);
            for &i in &split.r {
                e.doubled_mut()[i] = (2 * power) as i32;
            }
            let prefactor = LaurentPoly::monomial(m, n, e, Int::from(sign as i64));
            let term = &(&(&prefactor * &f) * &g) * &(&vandermonde(m, n, &split.r) * &vandermonde(m, n, &split.s));
            numerator = &numerator + &term;
        }
        numerator.divide_by_factors(&vandermonde_factors(m, n, &(0..m).collect::<Vec<_>>()))
    }

    /// `Σ s_{β̄;α}(x/y^{(n−1)}) y_n^{a−b}` over [`isolate_last_y`].
    pub fn reconstruct_from_last_y(&self, c: &CompositePartition) -> Result<LaurentPoly> {
        let (m, n) = (self.m, self.n);
        if n == 0 {
            return Err(Error::Hypothesis("isolating y_n needs n ≥ 1".into()));
        }
        let smaller = SymFuncContext::new(m, n - 1);
        let xs: Vec<usize> = (0..m).collect();
        let ys: Vec<usize> = (0..n - 1).collect();
        let mut acc = LaurentPoly::zero(m, n);
        for t in isolate_last_y(c) {
            let s = smaller.composite_super_schur(&t.part).reindex(m, n, &xs, &ys)?;
            let mut e = ExponentVector::zero(m + n);
            e.doubled_mut()[m + n - 1] = (2 * t.exponent) as i32;
            acc = &acc + &s.mul_term(&e, &Int::ONE);
        }
        Ok(acc)
    }
}
