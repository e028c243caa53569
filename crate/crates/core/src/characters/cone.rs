use crate::combinatorics::{all_permutations, Permutation};
use crate::weights::{AtypicalData, Weight};

/// `base − Σ i_s γ_s` for the atypical slots `(m_s, n_s)` of some fixed weight.
///
/// The slots are carried along because dot actions move entries between
/// them without recomputing the atypical roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeElement {
    pub base: Weight,
    pub slots: Vec<(usize, usize)>,
    pub offsets: Vec<i64>,
    pub value: Weight,
}

impl ConeElement {
    /// The vertex itself.
    pub fn vertex(base: Weight, slots: Vec<(usize, usize)>) -> Self {
        let offsets = vec![0; slots.len()];
        ConeElement { value: base.clone(), base, slots, offsets }
    }

    pub fn with_offsets(base: Weight, slots: Vec<(usize, usize)>, offsets: Vec<i64>) -> Self {
        assert_eq!(slots.len(), offsets.len());
        assert!(offsets.iter().all(|&i| i >= 0), "cone offsets are nonnegative");
        let mut value = base.clone();
        for (&(i, j), &k) in slots.iter().zip(&offsets) {
            value.lambda[i] -= k;
            value.mu[j] += k;
        }
        ConeElement { base, slots, offsets, value }
    }

    pub fn level(&self) -> i64 {
        self.offsets.iter().sum()
    }

    /// `μ^ρ_{n_s}` of the value, for each slot.
    pub fn atypical_entries(&self) -> Vec<i64> {
        self.slots.iter().map(|&(_, j)| self.value.mu[j] - (j as i64 + 1)).collect()
    }

    /// Weakly decreasing atypical entries.
    pub fn is_lexical(&self) -> bool {
        self.atypical_entries().windows(2).all(|w| w[0] >= w[1])
    }

    /// The cone order: ε-entries `≤` and δ-entries `≥`.
    pub fn le(&self, other: &ConeElement) -> bool {
        weight_le(&self.value, &other.value)
    }
}

pub(crate) fn weight_le(a: &Weight, b: &Weight) -> bool {
    a.lambda.iter().zip(&b.lambda).all(|(x, y)| x <= y) && a.mu.iter().zip(&b.mu).all(|(x, y)| x >= y)
}

/// `S^Λ`: permutations keeping every strongly c-related pair `s < t` in order.
pub fn s_lambda_set(data: &AtypicalData) -> Vec<Permutation> {
    let r = data.degree();
    let mut pinned = Vec::new();
    for s in 1..=r {
        for t in s + 1..=r {
            if data.strongly_c_related(s, t).expect("indices in range") {
                pinned.push((s - 1, t - 1));
            }
        }
    }
    all_permutations(r)
        .into_iter()
        .filter(|sigma| {
            let inv = sigma.inverse();
            pinned.iter().all(|&(s, t)| inv.apply(s) < inv.apply(t))
        })
        .collect()
}

/// `σ.Λ = σ(Λ + ρ) − ρ` on the given atypical slots: slot `s` receives the
/// ρ-shifted entries from slot `σ⁻¹(s)`.
pub fn dot_action(sigma: &Permutation, w: &Weight, slots: &[(usize, usize)]) -> Weight {
    assert_eq!(sigma.len(), slots.len(), "permutation must act on the atypical slots");
    let (lr, ur) = w.rho_shifted();
    let (mut lam, mut mu) = (lr.clone(), ur.clone());
    let inv = sigma.inverse();
    for (s, &(i, j)) in slots.iter().enumerate() {
        let (si, sj) = slots[inv.apply(s)];
        lam[i] = lr[si];
        mu[j] = ur[sj];
    }
    Weight::from_rho_shifted(&lam, &mu)
}

/// `v↑`: the maximal lexical element of the cone below `v`.
///
/// Right to left, `i_r = 0` and `i_s = max(0, a_{s+1} + i_{s+1} − a_s)`.
pub fn lexical_raise(v: &ConeElement) -> ConeElement {
    let a = v.atypical_entries();
    let r = a.len();
    let mut extra = vec![0i64; r];
    for s in (0..r.saturating_sub(1)).rev() {
        extra[s] = (a[s + 1] + extra[s + 1] - a[s]).max(0);
    }
    let offsets = v.offsets.iter().zip(&extra).map(|(x, y)| x + y).collect();
    ConeElement::with_offsets(v.base.clone(), v.slots.clone(), offsets)
}

/// Brute-force `v↑`: scans offsets in `[0, bound]^r` with
/// `bound = spread(a) + r`, keeps the lexical ones and returns the unique
/// element dominating all others. `None` if there is no such maximum.
pub fn lexical_raise_oracle(v: &ConeElement) -> Option<ConeElement> {
    let a = v.atypical_entries();
    let r = a.len();
    let spread = match (a.iter().max(), a.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => 0,
    };
    let bound = spread + r as i64;
    let mut lexical = Vec::new();
    let mut extra = vec![0i64; r];
    loop {
        let shifted: Vec<i64> = a.iter().zip(&extra).map(|(x, y)| x + y).collect();
        if shifted.windows(2).all(|w| w[0] >= w[1]) {
            lexical.push(extra.clone());
        }
        // odometer
        let mut pos = 0;
        while pos < r && extra[pos] == bound {
            extra[pos] = 0;
            pos += 1;
        }
        if pos == r {
            break;
        }
        extra[pos] += 1;
    }
    let build = |e: &[i64]| {
        let offsets = v.offsets.iter().zip(e).map(|(x, y)| x + y).collect();
        ConeElement::with_offsets(v.base.clone(), v.slots.clone(), offsets)
    };
    let candidates: Vec<ConeElement> = lexical.iter().map(|e| build(e)).collect();
    let maxima: Vec<&ConeElement> = candidates.iter().filter(|c| candidates.iter().all(|o| o.le(c))).collect();
    match maxima.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    }
}
