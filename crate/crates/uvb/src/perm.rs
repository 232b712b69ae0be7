//! Permutations of strands, their pair orbits, and transposition lifts.
//!
//! Composition is fixed crate-wide as `(s ∘ t)(x) = s(t(x))`: the right
//! factor acts first. Strand labels are 1-based everywhere.

use crate::word::{BraidWord, Letter};
use crate::Error;
use num_integer::Integer;
use std::fmt;

/// A permutation of `{1, …, n}` in one-line notation: `images[k]` is the
/// image of `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The adjacent transposition `s_i = (i, i+1)` on `n` strands.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition index {i} out of range for {n} strands");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Validates one-line data: a bijection of `1..=n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::BadPermutation {
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::BadPermutation { reason: format!("value {v} repeated") });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses one-line notation such as `[2,1,3]` (brackets optional).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.trim().is_empty() {
            return Err(Error::BadPermutation { reason: "empty".to_string() });
        }
        let images = trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::BadPermutation {
                    reason: format!("bad entry `{}`", t.trim()),
                })
            })
            .collect::<Result<Vec<usize>, Error>>()?;
        Permutation::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based strand `i`.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.images.len(), "strand {i} out of range");
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "cannot compose permutations of {} and {} strands",
            self.n(),
            other.n()
        );
        Permutation { images: other.images.iter().map(|&v| self.images[v - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.n());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Cycle decomposition covering every strand, fixed points included.
    /// Each cycle starts at its smallest member and cycles are listed by
    /// that member, so the output is deterministic.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// The order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Number of inversions: pairs `i < j` with `s(i) > s(j)`. This is the
    /// reduced length of the permutation in adjacent transpositions.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// One orbit of the action of a permutation on unordered strand pairs,
/// together with the data the torsion machinery needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBlock {
    rep: (usize, usize),
    cycle: Vec<(usize, usize)>,
    eps: u8,
}

impl OrbitBlock {
    /// The lexicographically least ordered pair of the block; its components
    /// always satisfy `i0 < j0`.
    pub fn rep(&self) -> (usize, usize) {
        self.rep
    }

    /// The ordered pairs `(s^k(i0), s^k(j0))` for `k = 0 .. len-1`. Their
    /// underlying unordered pairs are exactly the orbit, each once.
    pub fn cycle(&self) -> &[(usize, usize)] {
        &self.cycle
    }

    /// Number of unordered pairs in the orbit.
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 2 when the ordered orbit of the representative also walks through its
    /// swap `(j0, i0)` (so `s^len` exchanges the two strands of every pair in
    /// the block), 1 when it returns to `(i0, j0)` directly.
    pub fn eps(&self) -> u8 {
        self.eps
    }
}

/// The partition of all ordered strand pairs induced by a permutation, as
/// swap-closed blocks: the block of `(i, j)` also contains `(j, i)`, so a
/// block holds `2 * len` ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    n: usize,
    blocks: Vec<OrbitBlock>,
}

impl OrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks ordered by representative, lexicographically.
    pub fn blocks(&self) -> &[OrbitBlock] {
        &self.blocks
    }
}

/// Decomposes the ordered strand pairs of `s` into orbit blocks.
///
/// For each block the cycle follows the representative `(i0, j0)` through
/// `s`; after `len` steps the ordered pair returns either to itself
/// (`eps = 1`) or to its swap (`eps = 2`). Strand counts below 2 yield an
/// empty partition.
pub fn pair_orbits(s: &Permutation) -> OrbitPartition {
    let n = s.n();
    let mut visited = vec![false; n * n];
    let unordered_slot = |a: usize, b: usize| (a.min(b) - 1) * n + (a.max(b) - 1);
    let mut blocks = Vec::new();
    for i0 in 1..=n {
        for j0 in i0 + 1..=n {
            if visited[unordered_slot(i0, j0)] {
                continue;
            }
            let mut cycle = vec![(i0, j0)];
            visited[unordered_slot(i0, j0)] = true;
            let (mut a, mut b) = (s.apply(i0), s.apply(j0));
            while (a.min(b), a.max(b)) != (i0, j0) {
                visited[unordered_slot(a, b)] = true;
                cycle.push((a, b));
                let next = (s.apply(a), s.apply(b));
                a = next.0;
                b = next.1;
            }
            // The walk stopped at the first return to the unordered
            // representative; it came back either straight or swapped.
            let eps = if (a, b) == (j0, i0) {
                2
            } else {
                debug_assert_eq!((a, b), (i0, j0));
                1
            };
            blocks.push(OrbitBlock { rep: (i0, j0), cycle, eps });
        }
    }
    OrbitPartition { n, blocks }
}

/// Converts a sequence of position swaps sorting the one-line array back to
/// identity into a ρ-word evaluating to the permutation: the word is the
/// swap sequence reversed.
fn swaps_to_word(n: usize, swaps: Vec<usize>) -> BraidWord {
    let letters = swaps.into_iter().rev().map(Letter::Rho).collect();
    BraidWord::new(n, letters).expect("swap indices are in range by construction")
}

/// A ρ-word evaluating to `s`, from insertion sort: reduced, so its length
/// is the inversion count of `s`.
pub fn adjacent_lift(s: &Permutation) -> BraidWord {
    let mut a = s.images.to_vec();
    let mut swaps = Vec::new();
    for k in 1..a.len() {
        let mut j = k;
        while j > 0 && a[j - 1] > a[j] {
            a.swap(j - 1, j);
            swaps.push(j); // 1-based position of the left element
            j -= 1;
        }
    }
    swaps_to_word(s.n(), swaps)
}

/// A ρ-word evaluating to `s`, from bubble sort. Same length as
/// [`adjacent_lift`] but generally a different word; useful for checking
/// that lift-dependent computations are in fact lift-independent.
pub fn bubble_lift(s: &Permutation) -> BraidWord {
    let mut a = s.images.to_vec();
    let mut swaps = Vec::new();
    loop {
        let mut swapped = false;
        for j in 1..a.len() {
            if a[j - 1] > a[j] {
                a.swap(j - 1, j);
                swaps.push(j);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    swaps_to_word(s.n(), swaps)
}
