use serde::Serialize;

use super::{half_root_factors, l0_factors};
use crate::laurent::{ExponentVector, Int, LaurentPoly};
use crate::weights::rho0;

/// Outcome of checking the two `ρ₀` identities for `m = p + q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoReport {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    /// the `L₀` factorisation
    pub product_identity: bool,
    /// the splitting of `ρ₀`
    pub vector_identity: bool,
}

impl RhoReport {
    pub fn passed(&self) -> bool {
        self.product_identity && self.vector_identity
    }
}

fn product(fs: &[LaurentPoly], m: usize, n: usize) -> LaurentPoly {
    fs.iter().fold(LaurentPoly::one(m, n), |acc, f| &acc * f)
}

/// Checks, on `gl(p+q|n)`,
///
/// ```text
/// L₀(p|n) · Π_{i<j≤q} (half-root on ε_{p+i}, ε_{p+j}) · Π_{i≤p, j≤q} (x_i − x_{p+j})
///     = L₀(m|n) · e^{½(q,…,q, p,…,p; 0,…,0)}
/// 2ρ₀(m|n) = 2ρ₀(p|n) + (0,…,0, q−1, q−3, …, 1−q; 0) + (q,…,q, −p,…,−p; 0)
/// ```
///
/// where `L₀(p|n)` omits every even root `ε_i − ε_j` with `j > p`, and
/// `ρ₀(p|n)` is padded by zeros on the last `q` ε-slots.
pub fn lemma_rho_identities(p: usize, q: usize, n: usize) -> RhoReport {
    let m = p + q;
    let mut lhs_factors = half_root_factors(m, n, &(0..p).collect::<Vec<_>>());
    lhs_factors.extend(half_root_factors(m, n, &(m..m + n).collect::<Vec<_>>()));
    lhs_factors.extend(half_root_factors(m, n, &(p..m).collect::<Vec<_>>()));
    for i in 0..p {
        for j in p..m {
            lhs_factors.push(&LaurentPoly::x(m, n, i) - &LaurentPoly::x(m, n, j));
        }
    }
    let lhs = product(&lhs_factors, m, n);
    let mut e = ExponentVector::zero(m + n);
    for i in 0..m {
        e.doubled_mut()[i] = if i < p { q as i32 } else { p as i32 };
    }
    let rhs = product(&l0_factors(m, n), m, n).mul_term(&e, &Int::ONE);

    let full = rho0(m, n);
    let small = rho0(p, n);
    let (pi, qi) = (p as i32, q as i32);
    let assembled: Vec<i32> = (0..m + n)
        .map(|i| {
            if i < p {
                small.get(i) + qi
            } else if i < m {
                let j = (i - p) as i32;
                (qi - 1 - 2 * j) - pi
            } else {
                small.get(p + (i - m))
            }
        })
        .collect();

    RhoReport { p, q, n, product_identity: lhs == rhs, vector_identity: full.doubled() == assembled.as_slice() }
}
