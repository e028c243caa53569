//! Symmetric and supersymmetric functions in the alphabets
//! `x = (x_1, …, x_m)` and `y = (y_1, …, y_n)`.

pub mod det;
mod identities;

pub use det::{composite_matrix, determinant, evaluate_matrix, Entry};
pub use identities::{isolate_last_y, vandermonde, vertical_strips, StripTerm};

use crate::combinatorics::{CompositePartition, Partition};
use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, Int, LaurentPoly, SymmetricBlocks};

/// The alphabet sizes; every output has arity `(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymFuncContext {
    pub m: usize,
    pub n: usize,
}

impl SymFuncContext {
    pub fn new(m: usize, n: usize) -> Self {
        SymFuncContext { m, n }
    }

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.m, self.n)
    }

    /// Complete symmetric `h_r(x)`; zero for `r < 0`.
    pub fn h_classical(&self, r: i64) -> LaurentPoly {
        if r < 0 {
            return self.zero();
        }
        let mut terms = Vec::new();
        let mut e = vec![0i32; self.m + self.n];
        compositions(r as i32, 0, self.m, &mut e, &mut terms);
        LaurentPoly::from_terms(self.m, self.n, terms)
    }

    /// Elementary symmetric `e_r(y)`; zero for `r < 0` or `r > n`.
    pub fn e_classical(&self, r: i64) -> LaurentPoly {
        if r < 0 || r as usize > self.n {
            return self.zero();
        }
        let terms = crate::combinatorics::enumerate_splits(self.n, r as usize).into_iter().map(|sp| {
            let mut e = ExponentVector::zero(self.m + self.n);
            for j in sp.r {
                e.doubled_mut()[self.m + j] = 2;
            }
            (e, Int::ONE)
        });
        LaurentPoly::from_terms(self.m, self.n, terms)
    }

    /// `h_r(x/y) = Σ_k h_k(x) e_{r−k}(y)`.
    pub fn super_h(&self, r: i64) -> LaurentPoly {
        if r < 0 {
            return self.zero();
        }
        let mut acc = self.zero();
        for k in 0..=r {
            let e = self.e_classical(r - k);
            if !e.is_zero() {
                acc = &acc + &(&self.h_classical(k) * &e);
            }
        }
        acc
    }

    /// `ḣ_r(x/y)`: [`Self::super_h`] with every variable inverted.
    pub fn dual_super_h(&self, r: i64) -> LaurentPoly {
        self.super_h(r).invert_variables()
    }

    /// `s_λ(x)` as `det(h_{λ_i−i+j})`.
    pub fn schur(&self, lam: &Partition) -> LaurentPoly {
        let entries = composite_matrix(&[], &lam.padded(lam.len()));
        let a = evaluate_matrix(&entries, |r| self.h_classical(r), |_| unreachable!());
        determinant(&a, self.m, self.n)
    }

    /// `s_λ(x)` as the bialternant `a_{λ+δ} / a_δ`; `l(λ) ≤ m` required.
    pub fn schur_bialternant(&self, lam: &Partition) -> Result<LaurentPoly> {
        let m = self.m;
        if lam.len() > m {
            return Ok(self.zero());
        }
        let mut e = ExponentVector::zero(m + self.n);
        for (i, v) in lam.padded(m).iter().enumerate() {
            e.doubled_mut()[i] = 2 * (*v as i32 + (m - 1 - i) as i32);
        }
        let group = SymmetricBlocks::new(vec![(0..m).collect()]);
        let num = LaurentPoly::monomial(m, self.n, e, Int::ONE).alternating_sum(&group);
        num.divide_by_factors(&vandermonde_factors(self.m, self.n, &(0..m).collect::<Vec<_>>()))
    }

    /// `s_{ν̄;μ}(x) = (Πx)^{−ν₁} s_λ(x)` with
    /// `λ = (μ + ν₁, ν₁, …, ν₁, ν₁ − ν_q, …, ν₁ − ν₂, 0)`.
    pub fn composite_schur_shift(&self, c: &CompositePartition) -> Result<LaurentPoly> {
        self.require_m_standard(c)?;
        let m = self.m;
        let nu1 = c.nu.part(1);
        let mut lam = vec![nu1; m];
        for (i, v) in lam.iter_mut().enumerate().take(c.mu.len()) {
            *v += c.mu.part(i + 1);
        }
        for l in 1..=c.nu.len() {
            lam[m - l] -= c.nu.part(l);
        }
        let lam = Partition::from_signed(&lam).expect("m-standard gives a partition");
        let shift = LaurentPoly::monomial(
            m,
            self.n,
            ExponentVector::from_integers(&(0..m + self.n).map(|i| if i < m { -nu1 } else { 0 }).collect::<Vec<_>>()),
            Int::ONE,
        );
        Ok(&shift * &self.schur(&lam))
    }

    /// `s_{ν̄;μ}(x)` as the block determinant in `h_r(x)` and `h_r(x̄)`.
    pub fn composite_schur_det(&self, c: &CompositePartition) -> LaurentPoly {
        let entries = composite_matrix(&c.nu.padded(c.nu.len()), &c.mu.padded(c.mu.len()));
        let a = evaluate_matrix(&entries, |r| self.h_classical(r), |r| self.h_classical(r).invert_variables());
        determinant(&a, self.m, self.n)
    }

    /// `s_{ν̄;μ}(x)` by both routes, which must agree.
    pub fn composite_schur(&self, c: &CompositePartition) -> Result<LaurentPoly> {
        let shift = self.composite_schur_shift(c)?;
        let det = self.composite_schur_det(c);
        if shift != det {
            return Err(Error::IdentityViolation(format!("composite Schur routes differ for {c}")));
        }
        Ok(shift)
    }

    /// `s_λ(x/y) = det(h_{λ_i−i+j}(x/y))`.
    pub fn super_schur(&self, lam: &Partition) -> LaurentPoly {
        self.composite_super_schur(&CompositePartition::new(Partition::empty(), lam.clone()))
    }

    /// The supersymmetric S-function `s_{ν̄;μ}(x/y)`.
    pub fn composite_super_schur(&self, c: &CompositePartition) -> LaurentPoly {
        let entries = composite_matrix(&c.nu.padded(c.nu.len()), &c.mu.padded(c.mu.len()));
        let a = evaluate_matrix(&entries, |r| self.super_h(r), |r| self.dual_super_h(r));
        determinant(&a, self.m, self.n)
    }

    fn require_m_standard(&self, c: &CompositePartition) -> Result<()> {
        if c.is_m_standard(self.m) {
            Ok(())
        } else {
            Err(Error::NonStandard(c.to_string()))
        }
    }
}

/// Pushes every exponent vector of x-degree `r` on positions `pos..m`.
fn compositions(r: i32, pos: usize, m: usize, e: &mut Vec<i32>, out: &mut Vec<(ExponentVector, Int)>) {
    if pos + 1 >= m {
        if m == 0 {
            if r == 0 {
                out.push((ExponentVector::from_doubled(e), Int::ONE));
            }
            return;
        }
        e[m - 1] = 2 * r;
        out.push((ExponentVector::from_doubled(e), Int::ONE));
        e[m - 1] = 0;
        return;
    }
    for k in 0..=r {
        e[pos] = 2 * k;
        compositions(r - k, pos + 1, m, e, out);
    }
    e[pos] = 0;
}

/// The factors `x_{v_i} − x_{v_j}` (`i < j`) of the Vandermonde in the listed
/// x-variables.
pub fn vandermonde_factors(m: usize, n: usize, vars: &[usize]) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            out.push(&LaurentPoly::x(m, n, vars[i]) - &LaurentPoly::x(m, n, vars[j]));
        }
    }
    out
}

#[cfg(test)]
mod tests;
