use super::Weight;
use crate::error::{Error, Result};

/// The atypical roots `γ_s = ε_{m_s} − δ_{n_s}` of a weight, in increasing order.
///
/// Indices in `roots` are 0-based; the formulas for `aty` and heights use the
/// 1-based convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtypicalData {
    pub roots: Vec<(usize, usize)>,
    /// `μ_{n_s} − n_s`
    pub aty_tuple: Vec<i64>,
    /// `h_s = λ_{m_s} − n_s + s`
    pub heights: Vec<i64>,
    lambda_at_roots: Vec<i64>,
}

/// All `(i, j)` with `(Λ + ρ, ε_i − δ_j) = 0`, i.e. `λ^ρ_i + μ^ρ_j = 0`.
///
/// Sorted so that `γ_s < γ_t` iff `(n_s − m_s, −m_s)` is lexicographically
/// smaller.
pub fn atypical_roots(w: &Weight) -> AtypicalData {
    let (lr, ur) = w.rho_shifted();
    let mut roots = Vec::new();
    for (i, l) in lr.iter().enumerate() {
        for (j, u) in ur.iter().enumerate() {
            if l + u == 0 {
                roots.push((i, j));
            }
        }
    }
    roots.sort_by_key(|&(i, j)| (j as i64 - i as i64, -(i as i64)));
    let aty_tuple = roots.iter().map(|&(_, j)| w.mu[j] - (j as i64 + 1)).collect();
    let heights = roots.iter().enumerate().map(|(s, &(i, j))| w.lambda[i] - (j as i64 + 1) + (s as i64 + 1)).collect();
    let lambda_at_roots = roots.iter().map(|&(i, _)| w.lambda[i]).collect();
    AtypicalData { roots, aty_tuple, heights, lambda_at_roots }
}

impl AtypicalData {
    /// The atypicality degree `r`.
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn is_typical(&self) -> bool {
        self.roots.is_empty()
    }

    fn check(&self, s: usize, t: usize) -> Result<()> {
        let r = self.degree();
        if s == 0 || t == 0 || s > r || t > r || s > t {
            return Err(Error::IndexOutOfRange(format!("(s, t) = ({s}, {t}) with r = {r}")));
        }
        Ok(())
    }

    /// `d_{s,t} = λ_{m_t} − λ_{m_s} − n_t + n_s + t − s` (1-based `s ≤ t`).
    pub fn d(&self, s: usize, t: usize) -> Result<i64> {
        self.check(s, t)?;
        let (ls, lt) = (self.lambda_at_roots[s - 1], self.lambda_at_roots[t - 1]);
        let (ns, nt) = (self.roots[s - 1].1 as i64, self.roots[t - 1].1 as i64);
        Ok(lt - ls - nt + ns + t as i64 - s as i64)
    }

    /// `s = t` or `d_{s,t} < t − s`.
    pub fn c_related(&self, s: usize, t: usize) -> Result<bool> {
        self.check(s, t)?;
        Ok(s == t || self.d(s, t)? < (t - s) as i64)
    }

    /// `γ_s` and `γ_{u+1}` are c-related for every `s ≤ u < t`.
    pub fn strongly_c_related(&self, s: usize, t: usize) -> Result<bool> {
        self.check(s, t)?;
        for u in s..t {
            if !self.c_related(s, u + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
