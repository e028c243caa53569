//! Multiplication fast path: exponents packed into one `u128` key with
//! 16-bit biased fields and `i64` coefficients. Any overflow hands the
//! product back to the generic routine.

use rustc_hash::FxHashMap;

use super::exponent::ExponentVector;
use super::int::Int;
use super::poly::LaurentPoly;

const FIELD: usize = 16;
const BIAS: i32 = 1 << 15;
const MAX_VARS: usize = 128 / FIELD;

/// Field `i` sits above field `i + 1`, so key order is lex order.
fn pack(e: &ExponentVector) -> u128 {
    let len = e.len();
    e.iter().enumerate().fold(0u128, |k, (i, v)| k | (((v + BIAS) as u128) << (FIELD * (len - 1 - i))))
}

fn unpack(key: u128, len: usize) -> ExponentVector {
    let mask = (1u128 << FIELD) - 1;
    let v: Vec<i32> = (0..len).map(|i| ((key >> (FIELD * (len - 1 - i))) & mask) as i32 - BIAS).collect();
    ExponentVector::from_doubled(&v)
}

fn max_abs(p: &LaurentPoly) -> i64 {
    p.terms().iter().flat_map(|(e, _)| e.iter()).map(|v| (v as i64).abs()).max().unwrap_or(0)
}

fn small_terms(p: &LaurentPoly) -> Option<Vec<(u128, i64, i64)>> {
    p.terms().iter().map(|(e, c)| c.to_i64().map(|c| (pack(e), e.degree(), c))).collect()
}

pub(super) fn try_product(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (m, n) = a.arity();
    let len = m + n;
    if len == 0 || len > MAX_VARS || max_abs(a) + max_abs(b) >= BIAS as i64 {
        return None;
    }
    let ta = small_terms(a)?;
    let tb = small_terms(b)?;
    let bias_key = (0..len).fold(0u128, |k, i| k | ((BIAS as u128) << (FIELD * i)));
    let mut acc: FxHashMap<u128, (i64, i64)> = FxHashMap::default();
    acc.reserve(ta.len().max(tb.len()) * 4);
    for &(ka, da, ca) in &ta {
        for &(kb, db, cb) in &tb {
            let c = ca.checked_mul(cb)?;
            let key = ka.wrapping_add(kb).wrapping_sub(bias_key);
            let slot = acc.entry(key).or_insert((da + db, 0));
            slot.1 = slot.1.checked_add(c)?;
        }
    }
    let mut out: Vec<(i64, u128, i64)> =
        acc.into_iter().filter(|(_, (_, c))| *c != 0).map(|(k, (d, c))| (d, k, c)).collect();
    out.sort_unstable_by_key(|&(d, k, _)| std::cmp::Reverse((d, k)));
    let terms = out.into_iter().map(|(_, k, c)| (unpack(k, len), Int::from(c))).collect();
    Some(LaurentPoly::from_sorted_unchecked(m, n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip_and_order() {
        let a = ExponentVector::from_doubled(&[3, -7, 0, 12]);
        assert_eq!(unpack(pack(&a), 4), a);
        let b = ExponentVector::from_doubled(&[3, -6, -1, 12]);
        assert_eq!(pack(&a) < pack(&b), a.doubled() < b.doubled());
    }

    #[test]
    fn overflow_falls_back() {
        let big = LaurentPoly::constant(1, 0, Int::from(i64::MAX));
        let x = &LaurentPoly::x(1, 0, 0) + &big;
        assert!(try_product(&x, &x).is_none());
        let far = LaurentPoly::monomial(1, 0, ExponentVector::from_doubled(&[BIAS - 1]), Int::ONE);
        assert!(try_product(&(&far + &x), &x).is_none());
    }
}
