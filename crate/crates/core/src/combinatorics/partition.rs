use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Accepts weakly decreasing nonnegative parts; zeros are trimmed.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::new`] but from signed parts, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut v = Vec::with_capacity(parts.len());
        for &p in parts {
            v.push(u32::try_from(p).map_err(|_| Error::Parse(format!("bad part {p}")))?);
        }
        Partition::new(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The length `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// 1-based part `λ_i`, reading 0 outside `1..=l(λ)`.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).map_or(0, |&p| p as i64)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Parts padded with zeros to `len`, as signed integers.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (1..=len).map(|i| self.part(i)).collect()
    }

    /// Whether `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts such as `"3,1"`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The composite partition `ν̄;μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CompositePartition {
    pub nu: Partition,
    pub mu: Partition,
}

impl CompositePartition {
    pub fn new(nu: Partition, mu: Partition) -> Self {
        CompositePartition { nu, mu }
    }

    /// `l(μ) + l(ν) ≤ m`.
    pub fn is_m_standard(&self, m: usize) -> bool {
        self.mu.len() + self.nu.len() <= m
    }

    /// There are `j ∈ [0,n]` and `l ∈ [0,m]` with
    /// `μ'_{j+1} + ν'_{n−j+1} ≤ m` and `μ_{m−l+1} + ν_{l+1} ≤ n`.
    pub fn is_mn_standard(&self, m: usize, n: usize) -> bool {
        let (mc, nc) = (self.mu.conjugate(), self.nu.conjugate());
        let cols = (0..=n).any(|j| mc.part(j + 1) + nc.part(n - j + 1) <= m as i64);
        let rows = (0..=m).any(|l| self.mu.part(m - l + 1) + self.nu.part(l + 1) <= n as i64);
        cols && rows
    }
}

impl fmt::Display for CompositePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.nu, self.mu)
    }
}

impl FromStr for CompositePartition {
    type Err = Error;

    /// `"nu|mu"`, e.g. `"3,1|1"`; either side may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let (nu, mu) = s.split_once('|').ok_or_else(|| Error::Parse(format!("composite partition `{s}` lacks `|`")))?;
        Ok(CompositePartition { nu: nu.parse()?, mu: mu.parse()? })
    }
}

/// All partitions with at most `len` parts, each at most `max_part`.
pub fn partitions_in_box(len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(len: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == len {
            return;
        }
        for p in 1..=cap {
            cur.push(p);
            rec(len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,1,1").conjugate(), p("3,1"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p(" 3, 1 ,0").parts(), &[3, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,-1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let c: CompositePartition = "3,1|1".parse().unwrap();
        assert_eq!(c.nu, p("3,1"));
        assert_eq!(c.mu, p("1"));
        assert_eq!(c.to_string(), "3,1|1");
        let c: CompositePartition = "|2".parse().unwrap();
        assert!(c.nu.is_empty());
        assert!("3,1".parse::<CompositePartition>().is_err());
    }

    #[test]
    fn standardness() {
        let c: CompositePartition = "3,1|1".parse().unwrap();
        assert!(c.is_m_standard(3));
        assert!(!c.is_m_standard(2));
        assert!(c.is_mn_standard(3, 2));
        let c: CompositePartition = "3|3,2".parse().unwrap();
        assert!(c.is_mn_standard(3, 2));
        // a single huge row does not fit a 1|0 hook
        let c: CompositePartition = "|2".parse().unwrap();
        assert!(c.is_mn_standard(1, 0));
        assert!(!"|1,1".parse::<CompositePartition>().unwrap().is_mn_standard(1, 0));
    }

    #[test]
    fn box_enumeration() {
        // partitions in a 2×2 box: ∅,1,11,2,21,22
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(mut v in proptest::collection::vec(0u32..=12, 0..8)) {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(v).unwrap();
            let c = lam.conjugate();
            prop_assert_eq!(c.weight(), lam.weight());
            prop_assert_eq!(c.conjugate(), lam);
        }
    }
}
