use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

/// Exponents of `x_1..x_m, y_1..y_n`, each stored doubled so that
/// half-integer exponents such as `e^{α/2}` are exact integers.
///
/// Ordering is graded lexicographic: total doubled degree first, then
/// componentwise lexicographic with the x-block before the y-block. It is a
/// total order compatible with addition, which is what division needs.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExponentVector(SmallVec<[i32; 8]>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, len))
    }

    pub fn from_doubled(v: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(v))
    }

    /// Builds from actual (undoubled) integer exponents.
    pub fn from_integers(v: &[i64]) -> Self {
        ExponentVector(v.iter().map(|&e| to_i32(2 * e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn doubled_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        self.0.iter().copied()
    }
}

fn to_i32(v: i64) -> i32 {
    i32::try_from(v).expect("exponent out of range")
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &'a ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(
            self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect(),
        )
    }
}

impl<'a> Sub<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &'a ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(
            self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a.checked_sub(*b).expect("exponent overflow")).collect(),
        )
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if e % 2 == 0 {
                write!(f, "{}", e / 2)?;
            } else {
                write!(f, "{e}/2")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[i32]) -> ExponentVector {
        ExponentVector::from_doubled(v)
    }

    #[test]
    fn graded_before_lex() {
        assert!(ev(&[0, 4]) > ev(&[2, 0]));
        assert!(ev(&[2, 0]) > ev(&[0, 2]));
        assert!(ev(&[-2, 2]) < ev(&[0, 0]));
    }

    proptest! {
        #[test]
        fn order_is_translation_invariant(
            a in proptest::collection::vec(-6i32..6, 3),
            b in proptest::collection::vec(-6i32..6, 3),
            c in proptest::collection::vec(-6i32..6, 3),
        ) {
            let (a, b, c) = (ev(&a), ev(&b), ev(&c));
            prop_assert_eq!(a.cmp(&b), (&a + &c).cmp(&(&b + &c)));
        }
    }
}
