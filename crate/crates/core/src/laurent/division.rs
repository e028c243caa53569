use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::exponent::ExponentVector;
use super::int::Int;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

impl LaurentPoly {
    /// Returns `q` with `q · d = self`, or [`Error::NonzeroRemainder`].
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        match d.len() {
            1 => {
                let (e, c) = &d.terms()[0];
                let mut terms = Vec::with_capacity(self.len());
                for (pe, pc) in self.terms() {
                    let q = pc.div_exact(c).ok_or(Error::NonzeroRemainder)?;
                    terms.push((pe - e, q));
                }
                Ok(LaurentPoly::from_sorted_unchecked(self.m(), self.n(), terms))
            }
            2 => self.divide_binomial(d),
            _ => self.divide_general(d),
        }
    }

    /// Divides by each factor in turn, then multiplies back to confirm.
    pub fn divide_by_factors(&self, factors: &[LaurentPoly]) -> Result<LaurentPoly> {
        let mut q = self.clone();
        for f in factors {
            q = q.exact_divide(f)?;
        }
        let mut back = q.clone();
        for f in factors {
            back = back.checked_mul(f)?;
        }
        if &back != self {
            return Err(Error::NonzeroRemainder);
        }
        Ok(q)
    }

    /// Division by `c_a e^a + c_b e^b`.
    ///
    /// Writing `p = q' · (c_a + c_b e^δ)` with `δ = b − a` and `q' = q e^a`,
    /// the problem splits over the cosets `r + Zδ`. On each coset the
    /// coefficients satisfy `p_t = c_a q_t + c_b q_{t−1}`, solved by a forward
    /// sweep in `t`; divisibility means the sweep ends at zero.
    fn divide_binomial(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let (b, cb) = &d.terms()[0];
        let (a, ca) = &d.terms()[1];
        let delta = b - a;
        let pivot = delta.iter().position(|v| v != 0).expect("distinct terms have distinct exponents");
        let dp = delta.get(pivot);

        let mut lines: FxHashMap<ExponentVector, Vec<(i32, &Int)>> = FxHashMap::default();
        for (e, c) in self.terms() {
            let t = e.get(pivot).div_euclid(dp);
            let mut rep = e.clone();
            for (i, v) in rep.doubled_mut().iter_mut().enumerate() {
                *v -= t * delta.get(i);
            }
            lines.entry(rep).or_default().push((t, c));
        }

        let mut out = Vec::new();
        for (rep, mut line) in lines {
            line.sort_unstable_by_key(|&(t, _)| t);
            let mut prev: Option<(i32, Int)> = None;
            let mut idx = 0;
            while idx < line.len() || prev.is_some() {
                let t = match (&prev, line.get(idx)) {
                    (Some((pt, _)), _) => pt + 1,
                    (None, Some(&(t, _))) => t,
                    (None, None) => unreachable!(),
                };
                let mut rhs = if idx < line.len() && line[idx].0 == t {
                    idx += 1;
                    line[idx - 1].1.clone()
                } else {
                    Int::ZERO
                };
                if let Some((_, q)) = &prev {
                    rhs -= &(cb * q);
                }
                let q = rhs.div_exact(ca).ok_or(Error::NonzeroRemainder)?;
                if q.is_zero() {
                    prev = None;
                    continue;
                }
                if idx >= line.len() {
                    // past the last coefficient of this line, q must vanish
                    return Err(Error::NonzeroRemainder);
                }
                let mut e = rep.clone();
                for (i, v) in e.doubled_mut().iter_mut().enumerate() {
                    *v += t * delta.get(i) - a.get(i);
                }
                out.push((e, q.clone()));
                prev = Some((t, q));
            }
        }
        Ok(LaurentPoly::from_terms(self.m(), self.n(), out))
    }

    /// Leading-term elimination, bounded by the exponent box any exact
    /// quotient must lie in.
    fn divide_general(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let nvars = self.m() + self.n();
        let (lo_p, hi_p) = bounds(self, nvars);
        let (lo_d, hi_d) = bounds(d, nvars);
        let lo: Vec<i32> = (0..nvars).map(|i| lo_p[i] - lo_d[i]).collect();
        let hi: Vec<i32> = (0..nvars).map(|i| hi_p[i] - hi_d[i]).collect();

        let (lead_e, lead_c) = &d.terms()[0];
        let mut rem: BTreeMap<ExponentVector, Int> = self.terms().iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((e, c)) = rem.pop_last() {
            let qe = &e - lead_e;
            if qe.iter().enumerate().any(|(i, v)| v < lo[i] || v > hi[i]) {
                return Err(Error::NonzeroRemainder);
            }
            let qc = c.div_exact(lead_c).ok_or(Error::NonzeroRemainder)?;
            for (de, dc) in &d.terms()[1..] {
                let te = &qe + de;
                let tc = &qc * dc;
                let slot = rem.entry(te).or_insert(Int::ZERO);
                *slot -= &tc;
                if slot.is_zero() {
                    let key = &qe + de;
                    rem.remove(&key);
                }
            }
            quot.push((qe, qc));
        }
        Ok(LaurentPoly::from_sorted_unchecked(self.m(), self.n(), quot))
    }
}

fn bounds(p: &LaurentPoly, nvars: usize) -> (Vec<i32>, Vec<i32>) {
    let mut lo = vec![i32::MAX; nvars];
    let mut hi = vec![i32::MIN; nvars];
    for (e, _) in p.terms() {
        for (i, v) in e.iter().enumerate() {
            lo[i] = lo[i].min(v);
            hi[i] = hi[i].max(v);
        }
    }
    (lo, hi)
}
