//! Finite permutations in one-line notation, with the direct-sum and block
//! constructions needed for symmetric operad composition.
//!
//! Conventions, fixed once here and relied on everywhere else:
//!
//! * text form is the one-based image list `[2,3,1]`, meaning `1 -> 2`,
//!   `2 -> 3`, `3 -> 1`;
//! * composition is function composition, `(s.compose(&r))(i) = s(r(i))`;
//! * applying a permutation to a list moves the item at position `i` to
//!   position `s(i)`, so `apply_to_slice([2,3,1], [a,b,c]) = [c,a,b]`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::parse::{ParseError, Scanner};
use crate::OperadError;

/// A permutation of `{1, ..., n}`, stored as zero-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` symbols.
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from one-based images, e.g. `[2,3,1]`.
    pub fn from_one_based(images: Vec<usize>) -> Result<Self, OperadError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(OperadError::NotBijective(images));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i - 1).collect() })
    }

    /// Builds a permutation from zero-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self, OperadError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(OperadError::NotBijective(images.iter().map(|i| i + 1).collect()));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Image of the zero-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-based image list, as in the text form.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// Function composition: `(self.compose(&inner))(i) = self(inner(i))`.
    pub fn compose(&self, inner: &Self) -> Result<Self, OperadError> {
        if self.degree() != inner.degree() {
            return Err(OperadError::DegreeMismatch { left: self.degree(), right: inner.degree() });
        }
        Ok(Permutation { images: inner.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Juxtaposes permutations on consecutive ranges: the result acts as
    /// `parts[0]` on the first block, `parts[1]` on the next, and so on.
    pub fn direct_sum(parts: &[Permutation]) -> Self {
        let total = parts.iter().map(Permutation::degree).sum();
        let mut images = Vec::with_capacity(total);
        let mut offset = 0;
        for part in parts {
            images.extend(part.images.iter().map(|&i| i + offset));
            offset += part.degree();
        }
        Permutation { images }
    }

    /// The block permutation `self<k_1, ..., k_n>` on `k_1 + ... + k_n`
    /// symbols: it moves contiguous blocks of the given sizes around the way
    /// `self` moves single symbols, keeping each block's interior order.
    ///
    /// Characterized by its action on concatenated lists: if `L_i` has length
    /// `k_i` then applying the block permutation to `L_1 ++ ... ++ L_n`
    /// yields the blocks in the order `self` dictates.
    pub fn block(&self, sizes: &[usize]) -> Result<Self, OperadError> {
        let n = self.degree();
        if sizes.len() != n {
            return Err(OperadError::DegreeMismatch { left: n, right: sizes.len() });
        }
        let mut in_start = vec![0usize; n];
        for j in 1..n {
            in_start[j] = in_start[j - 1] + sizes[j - 1];
        }
        // Output block at position p is the input block self^{-1}(p).
        let inv = self.inverse();
        let mut out_start = vec![0usize; n];
        for p in 1..n {
            out_start[p] = out_start[p - 1] + sizes[inv.images[p - 1]];
        }
        let total = sizes.iter().sum();
        let mut images = vec![0usize; total];
        for j in 0..n {
            for r in 0..sizes[j] {
                images[in_start[j] + r] = out_start[self.images[j]] + r;
            }
        }
        Ok(Permutation { images })
    }

    /// Reorders a list, moving the item at position `i` to position `self(i)`.
    pub fn apply_to_slice<T: Clone>(&self, items: &[T]) -> Result<Vec<T>, OperadError> {
        if items.len() != self.degree() {
            return Err(OperadError::DegreeMismatch { left: self.degree(), right: items.len() });
        }
        let inv = self.inverse();
        Ok((0..items.len()).map(|i| items[inv.images[i]].clone()).collect())
    }

    /// All of `Sigma_n` in lexicographic order of the image lists.
    pub fn all(n: usize) -> Vec<Self> {
        (0..n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_based_images().iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        let images = parse_image_list(&mut sc)?;
        sc.finish()?;
        Permutation::from_one_based(images).map_err(|e| ParseError::new(0, e))
    }
}

/// Parses `[i1,...,in]`; shared with the composite grammars.
pub(crate) fn parse_image_list(sc: &mut Scanner<'_>) -> Result<Vec<usize>, ParseError> {
    sc.expect(b'[')?;
    let mut images = Vec::new();
    if !sc.eat(b']') {
        loop {
            images.push(sc.number()?);
            if sc.eat(b']') {
                break;
            }
            sc.expect(b',')?;
        }
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(vec![1, 1]).is_err());
        assert!(Permutation::from_one_based(vec![0, 1]).is_err());
        assert!(Permutation::from_one_based(vec![1, 3]).is_err());
    }

    #[test]
    fn composes_as_functions() {
        // s(r(1)) = s(2) = 3, s(r(2)) = s(3) = 1, s(r(3)) = s(1) = 2.
        let s = p(&[2, 3, 1]);
        assert_eq!(s.compose(&s).unwrap(), p(&[3, 1, 2]));
        assert!(s.compose(&p(&[2, 1])).is_err());
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
    }

    #[test]
    fn direct_sum_shifts_later_parts() {
        assert_eq!(Permutation::direct_sum(&[p(&[2, 1]), p(&[1])]), p(&[2, 1, 3]));
        assert_eq!(Permutation::direct_sum(&[]), Permutation::identity(0));
    }

    #[test]
    fn block_of_transposition() {
        let t = p(&[2, 1]);
        assert_eq!(t.block(&[2, 1]).unwrap(), p(&[2, 3, 1]));
        assert_eq!(t.block(&[1, 1]).unwrap(), t);
    }

    #[test]
    fn block_with_empty_blocks() {
        let t = p(&[2, 1]);
        assert_eq!(t.block(&[1, 0]).unwrap(), p(&[1]));
        assert_eq!(t.block(&[0, 0]).unwrap(), Permutation::identity(0));
    }

    #[test]
    fn applies_to_lists() {
        let s = p(&[2, 3, 1]);
        assert_eq!(s.apply_to_slice(&['a', 'b', 'c']).unwrap(), vec!['c', 'a', 'b']);
        assert!(s.apply_to_slice(&['a']).is_err());
    }

    #[test]
    fn enumerates_lexicographically() {
        assert_eq!(Permutation::all(0), vec![Permutation::identity(0)]);
        let all3 = Permutation::all(3);
        assert_eq!(all3.len(), 6);
        assert_eq!(all3[0], Permutation::identity(3));
        assert_eq!(all3[5], p(&[3, 2, 1]));
    }

    #[test]
    fn group_laws_exhaustive_small() {
        for n in 0..=4 {
            let all = Permutation::all(n);
            let e = Permutation::identity(n);
            for s in &all {
                assert_eq!(&s.compose(&e).unwrap(), s);
                assert_eq!(&e.compose(s).unwrap(), s);
                assert_eq!(s.compose(&s.inverse()).unwrap(), e);
                assert_eq!(s.inverse().compose(s).unwrap(), e);
            }
        }
    }

    /// The block permutation is pinned down by list concatenation: applying
    /// `s<k_1,...,k_n>` to `L_1 ++ ... ++ L_n` must give the same answer as
    /// permuting the blocks as units.
    #[test]
    fn block_matches_concatenation_oracle() {
        for n in 0..=3 {
            for s in Permutation::all(n) {
                for sizes in (0..n).map(|_| 0..=3usize).multi_cartesian_product().chain(
                    // multi_cartesian_product is empty for n = 0; cover it.
                    if n == 0 { vec![vec![]] } else { vec![] },
                ) {
                    let blocks: Vec<Vec<(usize, usize)>> = sizes
                        .iter()
                        .enumerate()
                        .map(|(j, &k)| (0..k).map(|r| (j, r)).collect())
                        .collect();
                    let flat: Vec<(usize, usize)> = blocks.concat();
                    let expected: Vec<(usize, usize)> =
                        s.apply_to_slice(&blocks).unwrap().concat();
                    let b = s.block(&sizes).unwrap();
                    assert_eq!(b.apply_to_slice(&flat).unwrap(), expected, "s={s} sizes={sizes:?}");
                }
            }
        }
    }

    #[test]
    fn block_of_identity_is_identity() {
        let id = Permutation::identity(3);
        assert_eq!(id.block(&[2, 0, 3]).unwrap(), Permutation::identity(5));
    }

    #[test]
    fn parses_and_displays() {
        for text in ["[]", "[1]", "[2,3,1]", "[2,1,4,3]"] {
            let s: Permutation = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert_eq!(" [ 2 , 1 ] ".parse::<Permutation>().unwrap(), p(&[2, 1]));
        assert!("[2,2]".parse::<Permutation>().is_err());
        assert!("[1,2".parse::<Permutation>().is_err());
        assert!("[1] x".parse::<Permutation>().is_err());
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|images| Permutation::from_zero_based(images).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(s in arb_perm(8)) {
            prop_assert_eq!(s.inverse().inverse(), s);
        }

        #[test]
        fn text_roundtrip(s in arb_perm(8)) {
            prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
        }

        #[test]
        fn compose_matches_list_action(
            (s, r) in (1..=6usize).prop_flat_map(|n| {
                let s = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
                let r = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
                (s, r).prop_map(|(a, b)| {
                    (Permutation::from_zero_based(a).unwrap(), Permutation::from_zero_based(b).unwrap())
                })
            })
        ) {
            // Applying r then s to a list agrees with applying s o r at once.
            let items: Vec<usize> = (0..s.degree()).collect();
            let staged = s.apply_to_slice(&r.apply_to_slice(&items).unwrap()).unwrap();
            let fused = s.compose(&r).unwrap().apply_to_slice(&items).unwrap();
            prop_assert_eq!(staged, fused);
        }
    }
}
