//! Irreducible characters by the Su-Zhang alternating sum, with the typical
//! closed form and the reduction to `gl(m−k|n) ⊕ gl(k|n)`.

mod cone;
mod rho_lemma;
mod structure;

pub use cone::{dot_action, lexical_raise, lexical_raise_oracle, s_lambda_set, ConeElement};
pub use rho_lemma::{lemma_rho_identities, RhoReport};
pub use structure::{check_character, weyl_dimension};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combinatorics::{enumerate_cr, factorial};
use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, Int, LaurentPoly, RationalCoeffPoly, SymmetricBlocks};
use crate::symfunc::SymFuncContext;
use crate::weights::{atypical_roots, decompose, rho0, SpecialWeightClass, Weight};

/// Default bound on `|W| = m!·n!`.
pub const DEFAULT_CAP: u128 = 1_000_000;

fn check_cap(m: usize, n: usize, cap: u128) -> Result<()> {
    let size = factorial(m).saturating_mul(factorial(n));
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

/// `e^{(ε_i−ε_j)/2} − e^{−(ε_i−ε_j)/2}` for `i < j` within one block of
/// positions, i.e. the factors of `L₀` on that block.
fn half_root_factors(m: usize, n: usize, positions: &[usize]) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for (a, &i) in positions.iter().enumerate() {
        for &j in &positions[a + 1..] {
            let mut e = ExponentVector::zero(m + n);
            e.doubled_mut()[i] = 1;
            e.doubled_mut()[j] = -1;
            let plus = LaurentPoly::monomial(m, n, e.clone(), Int::ONE);
            let minus = LaurentPoly::monomial(m, n, -&e, Int::ONE);
            out.push(&plus - &minus);
        }
    }
    out
}

/// All factors of `L₀ = Π_{α∈Δ₀⁺}(e^{α/2} − e^{−α/2})`.
pub fn l0_factors(m: usize, n: usize) -> Vec<LaurentPoly> {
    let mut out = half_root_factors(m, n, &(0..m).collect::<Vec<_>>());
    out.extend(half_root_factors(m, n, &(m..m + n).collect::<Vec<_>>()));
    out
}

/// `Π (1 + x_i⁻¹ y_j)` over odd positive roots `ε_i − δ_j` not in `skip`.
fn odd_root_product(m: usize, n: usize, skip: &[(usize, usize)]) -> LaurentPoly {
    let mut acc = LaurentPoly::one(m, n);
    for i in 0..m {
        for j in 0..n {
            if skip.contains(&(i, j)) {
                continue;
            }
            let mut e = ExponentVector::zero(m + n);
            e.doubled_mut()[i] = -2;
            e.doubled_mut()[m + j] = 2;
            let f = &LaurentPoly::one(m, n) + &LaurentPoly::monomial(m, n, e, Int::ONE);
            acc = &acc * &f;
        }
    }
    acc
}

/// One summand of the Su-Zhang sum before the Weyl alternation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuZhangTerm {
    /// `(π.(σ.Λ)↑)↑`
    pub weight: Weight,
    /// `|Λ − weight|`
    pub level: i64,
    /// `(1/r!)·binom(r, π)·(−1)^{level + l(π)}`
    pub coefficient: BigRational,
}

/// The `(σ, π)` summands over `S^Λ × C_r`.
pub fn su_zhang_terms(w: &Weight) -> Vec<SuZhangTerm> {
    su_zhang_terms_over(w, &s_lambda_set(&atypical_roots(w)))
}

pub(crate) fn su_zhang_terms_over(w: &Weight, sigmas: &[crate::combinatorics::Permutation]) -> Vec<SuZhangTerm> {
    let data = atypical_roots(w);
    let r = data.degree();
    let slots = data.roots.clone();
    let r_fact = BigInt::from(factorial(r));
    let lambda_sum: i64 = w.lambda.iter().sum();
    let cr = enumerate_cr(r);
    let mut out = Vec::new();
    for sigma in sigmas {
        let inner = lexical_raise(&ConeElement::vertex(dot_action(sigma, w, &slots), slots.clone()));
        for pi in &cr {
            // slot s receives the entries of slot π(s)
            let moved = dot_action(&pi.perm.inverse(), &inner.value, &slots);
            let outer = lexical_raise(&ConeElement::vertex(moved, slots.clone()));
            // dot actions keep Σλ, so the level is the drop in Σλ
            let level = lambda_sum - outer.value.lambda.iter().sum::<i64>();
            let sign = if (level + pi.length as i64) % 2 == 0 { 1 } else { -1 };
            let coefficient = BigRational::new(pi.multinomial.to_bigint() * BigInt::from(sign), r_fact.clone());
            out.push(SuZhangTerm { weight: outer.value, level, coefficient });
        }
    }
    out
}

/// `ch V(Λ)` by the Su-Zhang formula, with the default cap.
pub fn su_zhang_char(w: &Weight) -> Result<LaurentPoly> {
    su_zhang_char_capped(w, DEFAULT_CAP)
}

/// `ch V(Λ)` by the Su-Zhang formula; fails if `m!·n! > cap`.
pub fn su_zhang_char_capped(w: &Weight, cap: u128) -> Result<LaurentPoly> {
    w.require_dominant()?;
    let (m, n) = (w.m(), w.n());
    check_cap(m, n, cap)?;
    su_zhang_from_terms(w, su_zhang_terms(w))
}

pub(crate) fn su_zhang_from_terms(w: &Weight, terms: Vec<SuZhangTerm>) -> Result<LaurentPoly> {
    let (m, n) = (w.m(), w.n());
    let shift = rho0(m, n);
    let weights =
        RationalCoeffPoly::from_terms(m, n, terms.into_iter().map(|t| (&t.weight.exponent() + &shift, t.coefficient)));
    let (numer, denom) = weights.clear_denominators();
    let gamma = atypical_roots(w).roots;
    let product = &numer * &odd_root_product(m, n, &gamma);
    let alternant = product.alternating_sum(&SymmetricBlocks::weyl(m, n));
    let alternant = alternant.div_coefficients(&Int::from(denom))?;
    alternant.divide_by_factors(&l0_factors(m, n))
}

/// The typical constant-δ closed form:
/// `Π_β(1 + e^{−β}) · Σ_{w∈S_m} ε(w) w(e^{Λ+ρ₀ˣ}) / Π_{i<j}(e^{(ε_i−ε_j)/2} − e^{−(ε_i−ε_j)/2})`.
pub fn typical_constant_delta_char(w: &Weight) -> Result<LaurentPoly> {
    w.require_dominant()?;
    if !w.has_constant_delta() {
        return Err(Error::NotConstantDelta(w.to_string()));
    }
    if !atypical_roots(w).is_typical() {
        return Err(Error::Hypothesis(format!("{w} is atypical")));
    }
    let (m, n) = (w.m(), w.n());
    let mut e = w.exponent();
    for i in 0..m {
        e.doubled_mut()[i] += (m as i32 - 1) - 2 * i as i32;
    }
    let xs: Vec<usize> = (0..m).collect();
    let alternant = LaurentPoly::monomial(m, n, e, Int::ONE).alternating_sum(&SymmetricBlocks::new(vec![xs.clone()]));
    let weyl = alternant.divide_by_factors(&half_root_factors(m, n, &xs))?;
    Ok(&weyl * &odd_root_product(m, n, &[]))
}

/// `Σ_{r,s} (Πx_r)^k χ_r(ch Λ_{η̄;μ}) χ_s(ch Λ_κ̄) / Π(x_{r_i} − x_{s_j})`.
pub fn reduction_char(c: &SpecialWeightClass) -> Result<LaurentPoly> {
    reduction_char_capped(c, DEFAULT_CAP)
}

pub fn reduction_char_capped(c: &SpecialWeightClass, cap: u128) -> Result<LaurentPoly> {
    let (m, n) = (c.weight.m(), c.weight.n());
    let parts = decompose(c);
    let first = su_zhang_char_capped(&parts.eta_mu, cap)?;
    let second = typical_constant_delta_char(&parts.kappa)?;
    SymFuncContext::new(m, n).split_sum(m - c.k, &first, &second, c.k as i64)
}
