use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly, PermutationPair};
use crate::weights::Weight;

/// `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`, the `gl(m)` Weyl dimension.
pub fn weyl_dimension(lambda: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            num *= BigInt::from(lambda[i] - lambda[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r == BigInt::from(0));
    q
}

fn violation(w: &Weight, what: &str) -> Error {
    Error::IdentityViolation(format!("character of {w}: {what}"))
}

/// Checks the shape every irreducible character must have: integral
/// exponents, positive integer coefficients, `S_m × S_n` symmetry, `e^Λ`
/// with coefficient 1, and every other exponent strictly below `Λ` in the
/// root order. Returns the dimension.
pub fn check_character(w: &Weight, ch: &LaurentPoly) -> Result<BigInt> {
    let (m, n) = (w.m(), w.n());
    if ch.arity() != (m, n) {
        return Err(Error::ArityMismatch(ch.m(), ch.n(), m, n));
    }
    if !ch.is_integral_exponents() {
        return Err(violation(w, "half-integer exponent"));
    }
    if ch.terms().iter().any(|(_, c)| c.signum() <= 0) {
        return Err(violation(w, "nonpositive coefficient"));
    }
    let top = w.exponent();
    if !ch.coefficient(&top).is_one() {
        return Err(violation(w, "highest weight coefficient is not 1"));
    }
    for (e, _) in ch.terms() {
        if e != &top && !below(e, &top) {
            return Err(violation(w, &format!("exponent {e} is not below the highest weight")));
        }
    }
    for k in 0..m.saturating_sub(1) {
        let g = PermutationPair { x: Permutation::transposition(m, k, k + 1), y: Permutation::identity(n) };
        if &ch.act_permutation(&g) != ch {
            return Err(violation(w, "not symmetric in x"));
        }
    }
    for k in 0..n.saturating_sub(1) {
        let g = PermutationPair { x: Permutation::identity(m), y: Permutation::transposition(n, k, k + 1) };
        if &ch.act_permutation(&g) != ch {
            return Err(violation(w, "not symmetric in y"));
        }
    }
    let dim = ch.coefficient_sum().to_bigint();
    if dim <= BigInt::from(0) {
        return Err(violation(w, "nonpositive dimension"));
    }
    Ok(dim)
}

/// `top − e` is a nonnegative combination of the simple roots: every prefix
/// sum along `ε_1, …, ε_m, δ_1, …, δ_n` is `≥ 0` and the total is zero.
fn below(e: &ExponentVector, top: &ExponentVector) -> bool {
    let mut acc = 0i64;
    for (a, b) in top.iter().zip(e.iter()) {
        acc += (a - b) as i64;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Int;

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&[3, 2, -1]), BigInt::from(24));
        assert_eq!(weyl_dimension(&[1, 0]), BigInt::from(2));
        assert_eq!(weyl_dimension(&[]), BigInt::from(1));
    }

    #[test]
    fn rejects_malformed_characters() {
        let w: Weight = "1;0".parse().unwrap();
        let good = &LaurentPoly::x(1, 1, 0) + &LaurentPoly::y(1, 1, 0);
        assert_eq!(check_character(&w, &good).unwrap(), BigInt::from(2));
        let doubled = good.scale(&Int::from(2i64));
        assert!(check_character(&w, &doubled).is_err());
        let above = &good + &LaurentPoly::x(1, 1, 0).pow(2);
        assert!(check_character(&w, &above).is_err());
        let w: Weight = "1,0;".parse().unwrap();
        assert!(check_character(&w, &LaurentPoly::x(2, 0, 0)).is_err());
    }
}
