use std::fmt;

use rustc_hash::FxHashMap;

use crate::laurent::{Int, LaurentPoly};

/// A determinant entry: `h_r` or its dual `ḣ_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    H(i64),
    HDot(i64),
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::H(r) => write!(f, "h_{r}"),
            Entry::HDot(r) => write!(f, "hbar_{r}"),
        }
    }
}

/// The block matrix of a composite partition `ν̄;μ` with `q = l(ν)` dual
/// columns and `p = len(μ)` direct columns (zero parts of `μ` allowed).
///
/// Rows `0..q` carry `k = q, …, 1`, columns `0..q` carry `l = q, …, 1`:
///
/// ```text
/// ḣ_{ν_l+k−l}   | h_{μ_j−k−j+1}
/// ḣ_{ν_l−i−l+1} | h_{μ_j+i−j}
/// ```
pub fn composite_matrix(nu: &[i64], mu: &[i64]) -> Vec<Vec<Entry>> {
    let (q, p) = (nu.len() as i64, mu.len() as i64);
    let nu_at = |l: i64| nu[(l - 1) as usize];
    let mu_at = |j: i64| mu[(j - 1) as usize];
    let mut rows = Vec::with_capacity((q + p) as usize);
    for r in 0..q {
        let k = q - r;
        let mut row: Vec<Entry> = (0..q).map(|c| q - c).map(|l| Entry::HDot(nu_at(l) + k - l)).collect();
        row.extend((1..=p).map(|j| Entry::H(mu_at(j) - k - j + 1)));
        rows.push(row);
    }
    for i in 1..=p {
        let mut row: Vec<Entry> = (0..q).map(|c| q - c).map(|l| Entry::HDot(nu_at(l) - i - l + 1)).collect();
        row.extend((1..=p).map(|j| Entry::H(mu_at(j) + i - j)));
        rows.push(row);
    }
    rows
}

/// Evaluates a symbolic matrix with the given `h` and `ḣ` families.
pub fn evaluate_matrix<H, D>(entries: &[Vec<Entry>], mut h: H, mut hdot: D) -> Vec<Vec<LaurentPoly>>
where
    H: FnMut(i64) -> LaurentPoly,
    D: FnMut(i64) -> LaurentPoly,
{
    let mut hc: FxHashMap<i64, LaurentPoly> = FxHashMap::default();
    let mut dc: FxHashMap<i64, LaurentPoly> = FxHashMap::default();
    entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match *e {
                    Entry::H(r) => hc.entry(r).or_insert_with(|| h(r)).clone(),
                    Entry::HDot(r) => dc.entry(r).or_insert_with(|| hdot(r)).clone(),
                })
                .collect()
        })
        .collect()
}

/// Exact determinant by Laplace expansion along rows, memoizing each minor
/// by its set of remaining columns.
pub fn determinant(matrix: &[Vec<LaurentPoly>], m: usize, n: usize) -> LaurentPoly {
    let size = matrix.len();
    assert!(size < 32, "determinant too large");
    assert!(matrix.iter().all(|r| r.len() == size), "matrix must be square");
    if size == 0 {
        return LaurentPoly::one(m, n);
    }
    let mut memo: FxHashMap<u32, LaurentPoly> = FxHashMap::default();
    minor(matrix, (1u32 << size) - 1, m, n, &mut memo)
}

fn minor(a: &[Vec<LaurentPoly>], cols: u32, m: usize, n: usize, memo: &mut FxHashMap<u32, LaurentPoly>) -> LaurentPoly {
    let size = a.len();
    let row = size - cols.count_ones() as usize;
    if row == size {
        return LaurentPoly::one(m, n);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = LaurentPoly::zero(m, n);
    let mut sign = 1i64;
    for c in 0..size {
        if cols >> c & 1 == 0 {
            continue;
        }
        let entry = &a[row][c];
        if !entry.is_zero() {
            let sub = minor(a, cols & !(1 << c), m, n, memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = if sign > 0 { &acc + &term } else { &acc - &term };
            }
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Leibniz-formula determinant; the reference the expansion is tested against.
pub fn determinant_leibniz(matrix: &[Vec<LaurentPoly>], m: usize, n: usize) -> LaurentPoly {
    let size = matrix.len();
    let mut acc = LaurentPoly::zero(m, n);
    for p in crate::combinatorics::all_permutations(size) {
        let mut term = LaurentPoly::constant(m, n, Int::from(p.sign() as i64));
        for (i, row) in matrix.iter().enumerate() {
            term = &term * &row[p.apply(i)];
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ExponentVector;
    use proptest::prelude::*;

    #[test]
    fn worked_example_layout() {
        let names: Vec<Vec<String>> =
            composite_matrix(&[3], &[3, 2]).iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        assert_eq!(
            names,
            vec![vec!["hbar_3", "h_2", "h_0"], vec!["hbar_2", "h_3", "h_1"], vec!["hbar_1", "h_4", "h_2"],]
        );
    }

    #[test]
    fn plain_and_dual_blocks() {
        let m = composite_matrix(&[], &[2, 1]);
        assert_eq!(m, vec![vec![Entry::H(2), Entry::H(0)], vec![Entry::H(3), Entry::H(1)]]);
        let d = composite_matrix(&[2, 1], &[]);
        // rows k = 2, 1; columns l = 2, 1
        assert_eq!(d, vec![vec![Entry::HDot(1), Entry::HDot(3)], vec![Entry::HDot(0), Entry::HDot(2)]]);
    }

    #[test]
    fn empty_determinant_is_one() {
        assert_eq!(determinant(&[], 1, 1), LaurentPoly::one(1, 1));
    }

    fn arb_entry() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((proptest::collection::vec(-2i32..=2, 2), -2i64..=2), 0..3).prop_map(|ts| {
            LaurentPoly::from_terms(1, 1, ts.into_iter().map(|(e, c)| (ExponentVector::from_doubled(&e), Int::from(c))))
        })
    }

    proptest! {
        #[test]
        fn expansion_matches_leibniz(size in 1usize..5, cells in proptest::collection::vec(arb_entry(), 16)) {
            let a: Vec<Vec<LaurentPoly>> =
                (0..size).map(|i| (0..size).map(|j| cells[i * 4 + j].clone()).collect()).collect();
            prop_assert_eq!(determinant(&a, 1, 1), determinant_leibniz(&a, 1, 1));
        }
    }
}
