use super::perm::{factorial, Permutation};
use crate::laurent::Int;

/// The block-cycle permutation `(1..i₁)(i₁+1..i₁+i₂)…` of a composition of `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypePermutation {
    pub blocks: Vec<usize>,
    pub perm: Permutation,
    /// `r! / (i₁!…i_t!)`
    pub multinomial: Int,
    /// `r − t`
    pub length: usize,
}

impl CycleTypePermutation {
    pub fn from_blocks(blocks: Vec<usize>) -> Self {
        assert!(blocks.iter().all(|&b| b >= 1), "blocks must be positive");
        let r: usize = blocks.iter().sum();
        let mut images: Vec<usize> = (0..r).collect();
        let mut start = 0;
        for &b in &blocks {
            for k in 0..b {
                images[start + k] = start + (k + 1) % b;
            }
            start += b;
        }
        let denom: u128 = blocks.iter().map(|&b| factorial(b)).product();
        let multinomial = Int::from(num_bigint::BigInt::from(factorial(r) / denom));
        CycleTypePermutation {
            length: r - blocks.len(),
            perm: Permutation::from_images(images).expect("block cycles are a bijection"),
            multinomial,
            blocks,
        }
    }
}

/// One entry per composition of `r` (`2^{r−1}` of them), ordered by the bit
/// mask of merged neighbours; `r = 0` gives the identity alone.
pub fn enumerate_cr(r: usize) -> Vec<CycleTypePermutation> {
    if r == 0 {
        return vec![CycleTypePermutation {
            blocks: Vec::new(),
            perm: Permutation::identity(0),
            multinomial: Int::ONE,
            length: 0,
        }];
    }
    (0u64..1 << (r - 1))
        .map(|mask| {
            let mut blocks = vec![1usize];
            for i in 0..r - 1 {
                if mask >> i & 1 == 1 {
                    *blocks.last_mut().unwrap() += 1;
                } else {
                    blocks.push(1);
                }
            }
            CycleTypePermutation::from_blocks(blocks)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c1 = enumerate_cr(1);
        assert_eq!(c1.len(), 1);
        assert_eq!((c1[0].blocks.clone(), c1[0].length), (vec![1], 0));
        assert!(c1[0].perm.is_identity());

        let c2 = enumerate_cr(2);
        assert_eq!(c2[0].blocks, vec![1, 1]);
        assert_eq!(c2[0].multinomial, Int::from(2i64));
        assert_eq!(c2[1].blocks, vec![2]);
        assert_eq!(c2[1].perm.to_string(), "(1 2)");
        assert_eq!((c2[1].multinomial.clone(), c2[1].length), (Int::ONE, 1));

        let c3 = enumerate_cr(3);
        let blocks: Vec<_> = c3.iter().map(|c| c.blocks.clone()).collect();
        assert_eq!(blocks, vec![vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]]);
        let mult: Vec<_> = c3.iter().map(|c| c.multinomial.to_i64().unwrap()).collect();
        assert_eq!(mult, vec![6, 3, 3, 1]);
        let lens: Vec<_> = c3.iter().map(|c| c.length).collect();
        assert_eq!(lens, vec![0, 1, 1, 2]);
        assert_eq!(c3[3].perm.to_string(), "(1 2 3)");

        assert!(enumerate_cr(0)[0].perm.is_empty());
    }

    #[test]
    fn counts_and_multinomials() {
        for r in 1..=8 {
            let cr = enumerate_cr(r);
            assert_eq!(cr.len(), 1 << (r - 1));
            for c in &cr {
                let prod: u128 = c.blocks.iter().map(|&b| factorial(b)).product();
                assert_eq!(c.multinomial.to_i64().unwrap() as u128 * prod, factorial(r));
                assert_eq!(c.perm.inversions(), c.length);
            }
        }
    }
}
