use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::exponent::ExponentVector;
use super::int::Int;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Laurent polynomial with rational coefficients, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCoeffPoly {
    m: usize,
    n: usize,
    terms: Vec<(ExponentVector, BigRational)>,
}

impl RationalCoeffPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        RationalCoeffPoly { m, n, terms: Vec::new() }
    }

    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut acc: FxHashMap<ExponentVector, BigRational> = FxHashMap::default();
        for (e, c) in terms {
            assert_eq!(e.len(), m + n);
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        RationalCoeffPoly { m, n, terms }
    }

    pub fn from_integral(p: &LaurentPoly) -> Self {
        let (m, n) = p.arity();
        RationalCoeffPoly {
            m,
            n,
            terms: p.terms().iter().map(|(e, c)| (e.clone(), BigRational::from_integer(c.to_bigint()))).collect(),
        }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &[(ExponentVector, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    /// `(D·self, D)` with `D` the common denominator.
    pub fn clear_denominators(&self) -> (LaurentPoly, BigInt) {
        let d = self.denominator();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let k = c.numer() * (&d / c.denom());
                (e.clone(), Int::from(k))
            })
            .collect();
        (LaurentPoly::from_sorted_unchecked(self.m, self.n, terms), d)
    }

    /// Converts down; fails with [`Error::NonIntegral`] on a fractional coefficient.
    pub fn to_integral(&self) -> Result<LaurentPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegral);
            }
            terms.push((e.clone(), Int::from(c.to_integer())));
        }
        Ok(LaurentPoly::from_sorted_unchecked(self.m, self.n, terms))
    }
}

impl LaurentPoly {
    /// Divides every coefficient by `d`, failing if any is not a multiple.
    pub fn div_coefficients(&self, d: &Int) -> Result<LaurentPoly> {
        let mut terms = Vec::with_capacity(self.len());
        for (e, c) in self.terms() {
            terms.push((e.clone(), c.div_exact(d).ok_or(Error::NonIntegral)?));
        }
        Ok(LaurentPoly::from_sorted_unchecked(self.m(), self.n(), terms))
    }
}

/// A quotient of Laurent polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_arity(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let (m, n) = p.arity();
        RationalFn { num: p, den: LaurentPoly::one(m, n) }
    }

    pub fn add(&self, other: &RationalFn) -> Result<RationalFn> {
        if self.den == other.den {
            return RationalFn::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        RationalFn::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn mul(&self, other: &RationalFn) -> Result<RationalFn> {
        RationalFn::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    /// The polynomial this function equals, if the denominator divides.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.exact_divide(&self.den)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        match (self.num.checked_mul(&other.den), other.num.checked_mul(&self.den)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clears_and_restores() {
        let e = ExponentVector::from_doubled(&[2, 0]);
        let f = ExponentVector::from_doubled(&[0, 2]);
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let p = RationalCoeffPoly::from_terms(1, 1, [(e.clone(), half.clone()), (f, third)]);
        let (q, d) = p.clear_denominators();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(q.coefficient(&e), Int::from(3i64));
        assert_eq!(p.to_integral(), Err(Error::NonIntegral));
        let whole = RationalCoeffPoly::from_terms(1, 1, [(e.clone(), half.clone()), (e, half)]);
        assert_eq!(whole.to_integral().unwrap(), LaurentPoly::x(1, 1, 0));
    }

    #[test]
    fn cross_multiplied_equality() {
        let x = LaurentPoly::x(2, 0, 0);
        let y = LaurentPoly::x(2, 0, 1);
        let a = RationalFn::new(&(&x * &x) - &(&y * &y), &x - &y).unwrap();
        let b = RationalFn::from_poly(&x + &y);
        assert_eq!(a, b);
        assert_eq!(a.to_poly().unwrap(), &x + &y);
        let sum = a.add(&RationalFn::new(y.clone(), x.clone()).unwrap()).unwrap();
        assert_ne!(sum, b);
    }
}
