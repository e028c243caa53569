use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::exponent::ExponentVector;
use super::int::Int;
use crate::combinatorics::perm::{all_permutations, Permutation};
use crate::error::{Error, Result};

/// Exact Laurent polynomial in `x_1..x_m, y_1..y_n` with integer
/// coefficients and exponents on the half-integer lattice.
///
/// Terms are kept sorted strictly descending in the graded-lex term order
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    m: usize,
    n: usize,
    terms: Vec<(ExponentVector, Int)>,
}

/// An element of `S_m × S_n`: `x` permutes the x-variables, `y` the y-variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    pub x: Permutation,
    pub y: Permutation,
}

impl PermutationPair {
    pub fn identity(m: usize, n: usize) -> Self {
        PermutationPair { x: Permutation::identity(m), y: Permutation::identity(n) }
    }

    pub fn compose(&self, other: &PermutationPair) -> PermutationPair {
        PermutationPair { x: self.x.compose(&other.x), y: self.y.compose(&other.y) }
    }

    pub fn sign(&self) -> i8 {
        self.x.sign() * self.y.sign()
    }
}

/// A Young subgroup: the full symmetric group on each block of variable
/// positions (0-based over the combined `x ++ y` layout), blocks disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBlocks {
    blocks: Vec<Vec<usize>>,
}

impl SymmetricBlocks {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .filter(|b| b.len() > 1)
            .collect();
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        assert!(all.windows(2).all(|w| w[0] != w[1]), "blocks must be disjoint");
        SymmetricBlocks { blocks }
    }

    /// The Weyl group `S_m × S_n` of the even part.
    pub fn weyl(m: usize, n: usize) -> Self {
        SymmetricBlocks::new(vec![(0..m).collect(), (m..m + n).collect()])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|b| crate::combinatorics::perm::factorial(b.len())).product()
    }

    /// Every group element as a map on variable positions, with its sign.
    pub fn elements(&self, nvars: usize) -> Vec<(Vec<usize>, i8)> {
        let mut out = vec![((0..nvars).collect::<Vec<_>>(), 1i8)];
        for block in &self.blocks {
            let perms = all_permutations(block.len());
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for (map, sign) in &out {
                for p in &perms {
                    let mut m2 = map.clone();
                    for (i, &pos) in block.iter().enumerate() {
                        m2[pos] = block[p.apply(i)];
                    }
                    next.push((m2, sign * p.sign()));
                }
            }
            out = next;
        }
        out
    }
}

impl LaurentPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        LaurentPoly { m, n, terms: Vec::new() }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, Int::ONE)
    }

    pub fn constant(m: usize, n: usize, c: Int) -> Self {
        Self::monomial(m, n, ExponentVector::zero(m + n), c)
    }

    pub fn monomial(m: usize, n: usize, exp: ExponentVector, coeff: Int) -> Self {
        assert_eq!(exp.len(), m + n, "exponent vector length must equal m + n");
        if coeff.is_zero() {
            return Self::zero(m, n);
        }
        LaurentPoly { m, n, terms: vec![(exp, coeff)] }
    }

    /// `x_i` for 0-based `i < m`.
    pub fn x(m: usize, n: usize, i: usize) -> Self {
        let mut e = ExponentVector::zero(m + n);
        e.doubled_mut()[i] = 2;
        Self::monomial(m, n, e, Int::ONE)
    }

    /// `y_j` for 0-based `j < n`.
    pub fn y(m: usize, n: usize, j: usize) -> Self {
        let mut e = ExponentVector::zero(m + n);
        e.doubled_mut()[m + j] = 2;
        Self::monomial(m, n, e, Int::ONE)
    }

    /// Canonicalizes an arbitrary term list: merges duplicates, drops zeros.
    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Int)>,
    {
        let mut v: Vec<(ExponentVector, Int)> = terms.into_iter().collect();
        for (e, _) in &v {
            assert_eq!(e.len(), m + n, "exponent vector length must equal m + n");
        }
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(ExponentVector, Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { m, n, terms: out }
    }

    pub(crate) fn from_map(m: usize, n: usize, map: FxHashMap<ExponentVector, Int>) -> Self {
        let mut terms: Vec<(ExponentVector, Int)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { m, n, terms }
    }

    /// Trusts that `terms` are sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(m: usize, n: usize, terms: Vec<(ExponentVector, Int)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { m, n, terms }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ExponentVector, Int)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ExponentVector, Int)> {
        self.terms
    }

    pub fn leading_term(&self) -> Option<&(ExponentVector, Int)> {
        self.terms.first()
    }

    pub fn trailing_term(&self) -> Option<&(ExponentVector, Int)> {
        self.terms.last()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Int {
        match self.terms.binary_search_by(|(e, _)| exp.cmp(e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.m, self.n, other.m, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: &Int| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (e.clone(), fix(c))));
        LaurentPoly { m: self.m, n: self.n, terms: out }
    }

    fn product(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.m, self.n);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_term(e, c);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_term(e, c);
        }
        if let Some(p) = super::packed::try_product(self, other) {
            return p;
        }
        let mut acc: FxHashMap<ExponentVector, Int> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ea + eb).and_modify(|v| *v += &c).or_insert(c);
            }
        }
        Self::from_map(self.m, self.n, acc)
    }

    /// Multiplication by the single term `c·e^exp`; order is preserved.
    pub fn mul_term(&self, exp: &ExponentVector, c: &Int) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        let terms = self.terms.iter().map(|(e, k)| (e + exp, k * c)).collect();
        LaurentPoly { m: self.m, n: self.n, terms }
    }

    pub fn scale(&self, c: &Int) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        LaurentPoly { m: self.m, n: self.n, terms }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one(self.m, self.n);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Replaces every variable by its inverse (negates all exponents).
    pub fn invert_variables(&self) -> LaurentPoly {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { m: self.m, n: self.n, terms }
    }

    /// Relabels variables: `x_i ↦ x_{w.x(i)}`, `y_j ↦ y_{w.y(j)}`.
    pub fn act_permutation(&self, w: &PermutationPair) -> LaurentPoly {
        assert_eq!(w.x.len(), self.m);
        assert_eq!(w.y.len(), self.n);
        let map: Vec<usize> =
            (0..self.m).map(|i| w.x.apply(i)).chain((0..self.n).map(|j| self.m + w.y.apply(j))).collect();
        self.permute_positions(&map)
    }

    /// Moves the exponent at position `i` to position `map[i]`.
    pub(crate) fn permute_positions(&self, map: &[usize]) -> LaurentPoly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = ExponentVector::zero(e.len());
                for (i, v) in e.iter().enumerate() {
                    out.doubled_mut()[map[i]] = v;
                }
                (out, c.clone())
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { m: self.m, n: self.n, terms }
    }

    /// `Σ_w ε(w) w(f)` over the Young subgroup `group`.
    ///
    /// Each term is first moved to its dominant representative (block entries
    /// strictly decreasing); terms with a repeated entry inside a block are
    /// fixed by a transposition and cancel. The surviving orbit sums are then
    /// expanded over the group. Distinct representatives have disjoint orbits.
    pub fn alternating_sum(&self, group: &SymmetricBlocks) -> LaurentPoly {
        let nvars = self.m + self.n;
        for b in group.blocks() {
            assert!(b.iter().all(|&p| p < nvars), "block position out of range");
        }
        let mut reps: FxHashMap<ExponentVector, Int> = FxHashMap::default();
        'terms: for (e, c) in &self.terms {
            let mut e = e.clone();
            let mut negate = false;
            for block in group.blocks() {
                let mut vals: Vec<i32> = block.iter().map(|&p| e.get(p)).collect();
                // insertion sort descending, counting transpositions
                for i in 1..vals.len() {
                    let mut j = i;
                    while j > 0 && vals[j - 1] < vals[j] {
                        vals.swap(j - 1, j);
                        negate = !negate;
                        j -= 1;
                    }
                }
                if vals.windows(2).any(|w| w[0] == w[1]) {
                    continue 'terms;
                }
                for (&p, v) in block.iter().zip(vals) {
                    e.doubled_mut()[p] = v;
                }
            }
            let c = if negate { -c } else { c.clone() };
            reps.entry(e).and_modify(|v| *v += &c).or_insert(c);
        }
        let elements = group.elements(nvars);
        let mut out = Vec::with_capacity(reps.len() * elements.len());
        for (rep, c) in reps {
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            for (map, sign) in &elements {
                let mut e = ExponentVector::zero(nvars);
                for (i, v) in rep.iter().enumerate() {
                    e.doubled_mut()[map[i]] = v;
                }
                out.push((e, if *sign > 0 { c.clone() } else { neg.clone() }));
            }
        }
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0));
        LaurentPoly { m: self.m, n: self.n, terms: out }
    }

    /// Moves `x_i` to `x_{x_map[i]}` and `y_j` to `y_{y_map[j]}` in a target
    /// ring of arity `(m, n)`. Both maps must be injective.
    pub fn reindex(&self, m: usize, n: usize, x_map: &[usize], y_map: &[usize]) -> Result<LaurentPoly> {
        if x_map.len() != self.m || y_map.len() != self.n {
            return Err(Error::NonInjectiveMap);
        }
        if !injective(x_map, m) || !injective(y_map, n) {
            return Err(Error::NonInjectiveMap);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = ExponentVector::zero(m + n);
                for (i, &t) in x_map.iter().enumerate() {
                    out.doubled_mut()[t] = e.get(i);
                }
                for (j, &t) in y_map.iter().enumerate() {
                    out.doubled_mut()[m + t] = e.get(self.m + j);
                }
                (out, c.clone())
            })
            .collect::<Vec<_>>();
        let mut terms = terms;
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(LaurentPoly { m, n, terms })
    }

    /// The substitution `x_i ↦ x_{targets[i]}` from arity `(m', n)` into
    /// `(m, n)`; y-variables map identically.
    pub fn substitute_variables(&self, m: usize, targets: &[usize]) -> Result<LaurentPoly> {
        let ys: Vec<usize> = (0..self.n).collect();
        self.reindex(m, self.n, targets, &ys)
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn coefficient_sum(&self) -> Int {
        let mut acc = Int::ZERO;
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    /// Exact value at a point of nonzero rationals. A half-integer exponent
    /// needs the coordinate to be a perfect rational square.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        let nvars = self.m + self.n;
        if point.len() != nvars {
            return Err(Error::PointLength { expected: nvars, got: point.len() });
        }
        if let Some(i) = point.iter().position(|q| q.is_zero()) {
            return Err(Error::ZeroCoordinate(i));
        }
        let mut roots: Vec<Option<BigRational>> = vec![None; nvars];
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut val = BigRational::from_integer(c.to_bigint());
            for (i, d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let base = if d % 2 == 0 {
                    point[i].clone()
                } else {
                    if roots[i].is_none() {
                        roots[i] = Some(rational_sqrt(&point[i]).ok_or(Error::HalfIntegerExponent(i))?);
                    }
                    roots[i].clone().unwrap()
                };
                let k = if d % 2 == 0 { d / 2 } else { d };
                val *= rational_pow(&base, k);
            }
            total += val;
        }
        Ok(total)
    }

    pub fn is_integral_exponents(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_integral())
    }

    pub fn variable_name(&self, i: usize) -> String {
        if i < self.m {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i - self.m + 1)
        }
    }

    fn fmt_monomial(&self, e: &ExponentVector) -> String {
        let mut parts = Vec::new();
        for (i, d) in e.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let name = self.variable_name(i);
            if d == 2 {
                parts.push(name);
            } else if d % 2 == 0 {
                parts.push(format!("{name}^{}", d / 2));
            } else {
                parts.push(format!("{name}^({d}/2)"));
            }
        }
        parts.join("*")
    }
}

fn injective(map: &[usize], range: usize) -> bool {
    let mut seen = vec![false; range];
    for &t in map {
        if t >= range || seen[t] {
            return false;
        }
        seen[t] = true;
    }
    true
}

fn rational_pow(base: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= base;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono = self.fmt_monomial(e);
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on arity mismatch; see [`LaurentPoly::checked_add`].
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("arity mismatch in +")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("arity mismatch in -")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("arity mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Int::from(-1i64))
    }
}

impl From<&LaurentPoly> for Vec<(Vec<i32>, BigInt)> {
    fn from(p: &LaurentPoly) -> Self {
        p.terms.iter().map(|(e, c)| (e.doubled().to_vec(), c.to_bigint())).collect()
    }
}
