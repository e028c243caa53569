use super::Weight;
use crate::combinatorics::{CompositePartition, Partition};
use crate::error::{Error, Result};

/// A dominant weight `(α; β)` with `β₁ = −k` and `α_{m−k} ≥ 0 ≥ α_{m−k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialWeightClass {
    pub k: usize,
    pub weight: Weight,
}

/// The class `P_k` containing `w`, if any. Conditions with an index outside
/// `1..=m` are vacuous.
pub fn special_class(w: &Weight) -> Option<SpecialWeightClass> {
    if !w.is_dominant() || w.n() == 0 {
        return None;
    }
    let k = usize::try_from(-w.mu[0]).ok()?;
    let m = w.m();
    if k > m {
        return None;
    }
    let upper_ok = k == m || w.lambda[m - k - 1] >= 0;
    let lower_ok = k == 0 || w.lambda[m - k] <= 0;
    (upper_ok && lower_ok).then(|| SpecialWeightClass { k, weight: w.clone() })
}

/// The unique `j` with `Λ + jσ` special, and that special weight.
///
/// After shifting by `β = μ₁` the first δ-entry is zero; the remaining shift
/// `t ∈ 0..=m` is the first step at which `λ_{m−t} + β + t ≥ 0` (or `t = m`).
pub fn normalize(w: &Weight) -> Result<(i64, SpecialWeightClass)> {
    w.require_dominant()?;
    if w.n() == 0 {
        return Err(Error::Hypothesis("special weights need n ≥ 1".into()));
    }
    let m = w.m();
    let beta = w.mu[0];
    let t = (0..=m).find(|&t| t == m || w.lambda[m - t - 1] + beta + t as i64 >= 0).expect("t = m always qualifies");
    let j = beta + t as i64;
    let shifted = w.shift_sigma(j);
    let class = special_class(&shifted).expect("ladder lands in a special class");
    debug_assert_eq!(class.k, t);
    Ok((j, class))
}

/// [`normalize`] restricted to weights with constant δ-part.
pub fn normalize_to_special(w: &Weight) -> Result<(i64, SpecialWeightClass)> {
    if !w.has_constant_delta() {
        return Err(Error::NotConstantDelta(w.to_string()));
    }
    normalize(w)
}

/// `φ_k : P_k → Q_k`, `Λ ↦ ν̄;μ`.
///
/// `μ = (α₁, …, α_{m−k})`, `ν = κ ++ η` with `κ_s = n − α_{m−s+1}` and
/// `η' = (−β_n − k, …, −β₁ − k)`.
pub fn phi(c: &SpecialWeightClass) -> CompositePartition {
    let (w, k) = (&c.weight, c.k);
    let (m, n) = (w.m(), w.n());
    let mu = Partition::from_signed(&w.lambda[..m - k]).expect("α_{m−k} ≥ 0 and dominant");
    let kappa: Vec<i64> = (1..=k).map(|s| n as i64 - w.lambda[m - s]).collect();
    let eta_conj: Vec<i64> = (1..=n).map(|i| -w.mu[n - i] - k as i64).collect();
    let eta = Partition::from_signed(&eta_conj).expect("β ≤ −k and dominant").conjugate();
    let mut nu: Vec<i64> = kappa;
    nu.extend(eta.parts().iter().map(|&p| p as i64));
    let nu = Partition::from_signed(&nu).expect("κ_k ≥ n > η₁");
    CompositePartition::new(nu, mu)
}

/// `φ_k⁻¹`: `(μ₁, …, μ_{m−k}, n−ν_k, …, n−ν₁; −ν'_n, …, −ν'_1)` with
/// `k = ν'_n`.
pub fn phi_inverse(c: &CompositePartition, m: usize, n: usize) -> Result<SpecialWeightClass> {
    if n == 0 {
        return Err(Error::Hypothesis("special weights need n ≥ 1".into()));
    }
    let nc = c.nu.conjugate();
    let k = nc.part(n) as usize;
    if k > m || c.mu.len() > m - k {
        return Err(Error::Hypothesis(format!("{c}: needs l(μ) ≤ m − ν'_n")));
    }
    let mut lambda = c.mu.padded(m - k);
    lambda.extend((1..=k).rev().map(|s| n as i64 - c.nu.part(s)));
    let mu = (1..=n).rev().map(|i| -nc.part(i)).collect();
    let w = Weight::new(lambda, mu);
    special_class(&w).filter(|cls| cls.k == k).ok_or_else(|| Error::Hypothesis(format!("{c} is not in Q_{k}")))
}

/// The two pieces of a `P_k` weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `Λ_{η̄;μ} = (α₁, …, α_{m−k}; β₁ + k, …, β_n + k)` on `gl(m−k|n)`.
    pub eta_mu: Weight,
    /// `Λ_κ̄ = (α_{m−k+1}, …, α_m; −k, …, −k)` on `gl(k|n)`.
    pub kappa: Weight,
}

pub fn decompose(c: &SpecialWeightClass) -> Decomposition {
    let (w, k) = (&c.weight, c.k as i64);
    let m = w.m();
    let split = m - c.k;
    Decomposition {
        eta_mu: Weight::new(w.lambda[..split].to_vec(), w.mu.iter().map(|b| b + k).collect()),
        kappa: Weight::new(w.lambda[split..].to_vec(), vec![-k; w.n()]),
    }
}

impl Decomposition {
    /// Places `Λ_{η̄;μ}` in the first ε-slots and `Λ_κ̄` in the last, and adds.
    pub fn reassemble(&self) -> Weight {
        let lambda = self.eta_mu.lambda.iter().chain(&self.kappa.lambda).copied().collect();
        let mu = self.eta_mu.mu.iter().zip(&self.kappa.mu).map(|(a, b)| a + b).collect();
        Weight::new(lambda, mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CompositePartition {
        s.parse().unwrap()
    }

    #[test]
    fn class_membership() {
        assert_eq!(special_class(&w("3,2,-1;-1,-1")).map(|c| c.k), Some(1));
        assert_eq!(special_class(&w("1,0,-1;-1,-2")).map(|c| c.k), Some(1));
        assert_eq!(special_class(&w("1,1;1,1")), None);
        assert_eq!(special_class(&w("2,-1;-1")).map(|c| c.k), Some(1));
        assert_eq!(special_class(&w("2,1;-1")), None);
        assert_eq!(special_class(&w("0,-1;-2")).map(|c| c.k), Some(2));
        assert_eq!(special_class(&w("1,-1;-2")), None);
    }

    #[test]
    fn normalization_ladder() {
        let (j, c) = normalize_to_special(&w("2,1,-3;0,0")).unwrap();
        assert_eq!((j, c.k, c.weight), (1, 1, w("3,2,-2;-1,-1")));
        let (j, c) = normalize_to_special(&w("-5,-7;0")).unwrap();
        assert_eq!((j, c.k, c.weight), (2, 2, w("-3,-5;-2")));
        let (j, c) = normalize_to_special(&w("4,3;2")).unwrap();
        assert_eq!((j, c.k), (2, 0));
        assert!(matches!(normalize_to_special(&w("1;0,-1")), Err(Error::NotConstantDelta(_))));
        assert!(matches!(normalize_to_special(&w("0,1;0")), Err(Error::NotDominant(_))));
    }

    #[test]
    fn phi_examples() {
        let c = special_class(&w("1,0,-1;-1,-2")).unwrap();
        assert_eq!(phi(&c), cp("3,1|1"));
        let c = special_class(&w("3,2,-1;-1,-1")).unwrap();
        assert_eq!(phi(&c), cp("3|3,2"));
        let back = phi_inverse(&cp("3,1|1"), 3, 2).unwrap();
        assert_eq!(back.weight, w("1,0,-1;-1,-2"));
        assert!(phi_inverse(&cp("3,1|1,1,1"), 3, 2).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&special_class(&w("1,0,-1;-1,-2")).unwrap());
        assert_eq!((d.eta_mu.clone(), d.kappa.clone()), (w("1,0;0,-1"), w("-1;-1,-1")));
        assert_eq!(d.reassemble(), w("1,0,-1;-1,-2"));
        let d = decompose(&special_class(&w("3,2,-1;-1,-1")).unwrap());
        assert_eq!((d.eta_mu, d.kappa), (w("3,2;0,0"), w("-1;-1,-1")));
        let d = decompose(&special_class(&w("2,1;0")).unwrap());
        assert_eq!((d.eta_mu, d.kappa), (w("2,1;0"), w(";0")));
    }
}
