use super::perm::Permutation;

/// A decomposition `{0..m} = r ∪ s` into sorted complementary subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

/// All `C(m, p)` splits with `|r| = p`, in lexicographic order of `r`.
/// Indices are 0-based.
pub fn enumerate_splits(m: usize, p: usize) -> Vec<Split> {
    assert!(p <= m);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, m: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Split>) {
        if cur.len() == p {
            let s = (0..m).filter(|i| !cur.contains(i)).collect();
            out.push(Split { r: cur.clone(), s });
            return;
        }
        for i in start..m {
            if m - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, p, cur, out);
            cur.pop();
        }
    }
    rec(0, m, p, &mut cur, &mut out);
    out
}

/// The permutation `τ` with one-line form `r ++ s`, and its sign. Then
/// `Π_{i<j}(x_{τ(i)} − x_{τ(j)}) = ε(τ) Π_{i<j}(x_i − x_j)`.
pub fn split_pairing_sign(split: &Split) -> (i8, Permutation) {
    let images: Vec<usize> = split.r.iter().chain(split.s.iter()).copied().collect();
    let tau = Permutation::from_images(images).expect("r and s must be complementary");
    (tau.sign(), tau)
}
