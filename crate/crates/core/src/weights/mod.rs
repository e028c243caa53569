//! Integral weights of `gl(m|n)`, their atypicality, and the special classes
//! `P_k` in bijection with composite partitions.

mod atypical;
mod special;

use std::fmt;
use std::str::FromStr;

pub use atypical::{atypical_roots, AtypicalData};
pub use special::{
    decompose, normalize, normalize_to_special, phi, phi_inverse, special_class, Decomposition, SpecialWeightClass,
};

use crate::error::{Error, Result};
use crate::laurent::ExponentVector;

/// Largest accepted absolute weight entry; keeps doubled exponents in `i32`.
pub const MAX_ENTRY: i64 = 1 << 20;

/// `Λ = Σ λ_i ε_i + Σ μ_j δ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
}

impl Weight {
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>) -> Self {
        Weight { lambda, mu }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Weight { lambda: vec![0; m], mu: vec![0; n] }
    }

    pub fn m(&self) -> usize {
        self.lambda.len()
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.lambda.windows(2).all(|w| w[0] >= w[1]) && self.mu.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    /// Whether all δ-coefficients are equal.
    pub fn has_constant_delta(&self) -> bool {
        self.mu.windows(2).all(|w| w[0] == w[1])
    }

    /// `Λ + jσ` with `σ = (1,…,1; −1,…,−1)`.
    pub fn shift_sigma(&self, j: i64) -> Weight {
        Weight { lambda: self.lambda.iter().map(|l| l + j).collect(), mu: self.mu.iter().map(|u| u - j).collect() }
    }

    /// Entries of `Λ + ρ`: `λ_i + m + 1 − i` and `μ_j − j` (1-based).
    pub fn rho_shifted(&self) -> (Vec<i64>, Vec<i64>) {
        let m = self.m() as i64;
        let lam = self.lambda.iter().enumerate().map(|(i, l)| l + m - i as i64).collect();
        let mu = self.mu.iter().enumerate().map(|(j, u)| u - (j as i64 + 1)).collect();
        (lam, mu)
    }

    /// Inverse of [`Weight::rho_shifted`].
    pub fn from_rho_shifted(lam: &[i64], mu: &[i64]) -> Weight {
        let m = lam.len() as i64;
        Weight {
            lambda: lam.iter().enumerate().map(|(i, l)| l - (m - i as i64)).collect(),
            mu: mu.iter().enumerate().map(|(j, u)| u + j as i64 + 1).collect(),
        }
    }

    /// The exponent of `e^Λ` on the doubled lattice.
    pub fn exponent(&self) -> ExponentVector {
        let v: Vec<i64> = self.lambda.iter().chain(self.mu.iter()).copied().collect();
        ExponentVector::from_integers(&v)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!((self.m(), self.n()), (other.m(), other.n()));
        Weight {
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a + b).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!((self.m(), self.n()), (other.m(), other.n()));
        Weight {
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a - b).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a - b).collect(),
        }
    }

    /// Parses `"λ1,…,λm;μ1,…,μn"` and checks the arity.
    pub fn parse_with_arity(s: &str, m: usize, n: usize) -> Result<Weight> {
        let w: Weight = s.parse()?;
        if w.m() != m || w.n() != n {
            return Err(Error::Parse(format!("weight `{s}` has arity ({}|{}), expected ({m}|{n})", w.m(), w.n())));
        }
        Ok(w)
    }
}

/// `ρ = (m, …, 1; −1, …, −n)`.
pub fn rho(m: usize, n: usize) -> Weight {
    Weight { lambda: (1..=m as i64).rev().collect(), mu: (1..=n as i64).map(|j| -j).collect() }
}

/// `2ρ₀ = (m−1, m−3, …, 1−m; n−1, n−3, …, 1−n)` as a doubled exponent.
pub fn rho0(m: usize, n: usize) -> ExponentVector {
    let (mi, ni) = (m as i32, n as i32);
    let v: Vec<i32> = (0..mi).map(|i| mi - 1 - 2 * i).chain((0..ni).map(|j| ni - 1 - 2 * j)).collect();
    ExponentVector::from_doubled(&v)
}

/// `2ρ₁ = (n, …, n; −m, …, −m)` as a doubled exponent.
pub fn rho1(m: usize, n: usize) -> ExponentVector {
    let v: Vec<i32> = std::iter::repeat_n(n as i32, m).chain(std::iter::repeat_n(-(m as i32), n)).collect();
    ExponentVector::from_doubled(&v)
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.lambda), join(&self.mu))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (l, u) = s.split_once(';').ok_or_else(|| Error::Parse(format!("weight `{s}` lacks `;`")))?;
        let side = |t: &str| -> Result<Vec<i64>> {
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    let v: i64 = x.parse().map_err(|_| Error::Parse(format!("bad entry `{x}`")))?;
                    if v.abs() > MAX_ENTRY {
                        return Err(Error::Parse(format!("entry {v} out of range")));
                    }
                    Ok(v)
                })
                .collect()
        };
        Ok(Weight { lambda: side(l)?, mu: side(u)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(rho(3, 2), w("3,2,1;-1,-2"));
        assert_eq!(rho0(3, 2).doubled(), &[2, 0, -2, 1, -1]);
        assert_eq!(rho1(1, 1).doubled(), &[1, -1]);
    }

    #[test]
    fn parse_and_print() {
        let x = w(" 3, 2,-1 ; -1,-1");
        assert_eq!(x.lambda, vec![3, 2, -1]);
        assert_eq!(x.to_string(), "3,2,-1;-1,-1");
        assert!(x.is_dominant());
        assert!(!w("0,1;0").is_dominant());
        assert_eq!(w(";0,0").m(), 0);
        assert!("1,2".parse::<Weight>().is_err());
        assert!("1,x;0".parse::<Weight>().is_err());
        assert!("99999999;0".parse::<Weight>().is_err());
        assert!(Weight::parse_with_arity("1;0", 2, 1).is_err());
    }

    #[test]
    fn rho_shift_roundtrip() {
        let x = w("1,0,-1;-1,-2");
        let (l, u) = x.rho_shifted();
        assert_eq!((l.clone(), u.clone()), (vec![4, 2, 0], vec![-2, -4]));
        assert_eq!(Weight::from_rho_shifted(&l, &u), x);
    }

    #[test]
    fn sigma_shift_preserves_dominance() {
        for j in -3..=3 {
            assert!(w("2,1,-3;0,-1").shift_sigma(j).is_dominant());
        }
    }
}
