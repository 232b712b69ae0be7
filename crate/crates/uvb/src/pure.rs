//! The pure subgroup UVP_n: a direct sum of rank-two free groups F_{i,j},
//! one per unordered strand pair, carrying an action of S_n.
//!
//! Elements are sparse maps from pairs to nontrivial reduced words. Distinct
//! components commute, so the map itself is a canonical form and derived
//! equality is group equality. Permutations act by relabeling strands:
//! `s · λ_{i,j} · s⁻¹ = λ_{s(i),s(j)}`, which shuffles whole components and
//! flips generator orientation when the strand order reverses.

use crate::free2::{F2Word, Pair};
use crate::perm::Permutation;
use std::collections::BTreeMap;
use std::fmt;

/// An element of UVP_n, with trivial components omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureElement {
    n: usize,
    components: BTreeMap<Pair, F2Word>,
}

impl PureElement {
    pub fn identity(n: usize) -> Self {
        PureElement { n, components: BTreeMap::new() }
    }

    /// The single generator λ_{a,b}^e on `n` strands. Panics when a strand
    /// label is out of range; strands must be distinct (see [`Pair::new`]).
    pub fn generator(n: usize, a: usize, b: usize, e: i64) -> Self {
        assert!(a <= n && b <= n, "strand pair ({a}, {b}) out of range for n = {n}");
        let mut out = PureElement::identity(n);
        out.mul_letter(a, b, e);
        out
    }

    /// Builds an element from a single component word.
    pub fn from_component(n: usize, word: F2Word) -> Self {
        assert!(word.pair().hi() <= n, "component {} out of range for n = {n}", word.pair());
        let mut components = BTreeMap::new();
        if !word.is_identity() {
            components.insert(word.pair(), word);
        }
        PureElement { n, components }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.components.is_empty()
    }

    /// Pairs with nontrivial component, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = Pair> + '_ {
        self.components.keys().copied()
    }

    pub fn components(&self) -> impl Iterator<Item = (Pair, &F2Word)> {
        self.components.iter().map(|(&p, w)| (p, w))
    }

    /// The component at `pair`; trivial components read as the empty word.
    pub fn component(&self, pair: Pair) -> F2Word {
        assert!(pair.hi() <= self.n, "component {pair} out of range for n = {}", self.n);
        self.components.get(&pair).cloned().unwrap_or_else(|| F2Word::identity(pair))
    }

    /// Total letter length across components.
    pub fn len(&self) -> usize {
        self.components.values().map(F2Word::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Right-multiplies by the single letter λ_{a,b}^e in place. Amortized
    /// constant time; the word fold in [`crate::normal`] leans on this.
    pub fn mul_letter(&mut self, a: usize, b: usize, e: i64) {
        assert!(
            a <= self.n && b <= self.n && a >= 1 && b >= 1,
            "strand pair ({a}, {b}) out of range for n = {}",
            self.n
        );
        if e == 0 {
            return;
        }
        let letter = F2Word::letter(a, b, e);
        let pair = letter.pair();
        let entry = self.components.entry(pair).or_insert_with(|| F2Word::identity(pair));
        *entry = entry.mul(&letter);
        if entry.is_identity() {
            self.components.remove(&pair);
        }
    }

    /// Componentwise product. Panics when strand counts differ.
    pub fn mul(&self, other: &PureElement) -> PureElement {
        assert_eq!(
            self.n, other.n,
            "cannot multiply pure elements on {} and {} strands",
            self.n, other.n
        );
        let mut components = self.components.clone();
        for (&pair, w) in &other.components {
            match components.remove(&pair) {
                None => {
                    components.insert(pair, w.clone());
                }
                Some(existing) => {
                    let prod = existing.mul(w);
                    if !prod.is_identity() {
                        components.insert(pair, prod);
                    }
                }
            }
        }
        PureElement { n: self.n, components }
    }

    pub fn inv(&self) -> PureElement {
        PureElement {
            n: self.n,
            components: self.components.iter().map(|(&p, w)| (p, w.inv())).collect(),
        }
    }

    /// The action of `s`: sends the component of `{i, j}` to the component
    /// of `{s(i), s(j)}`, reversing generator orientation exactly when `s`
    /// reverses the order of the two strands. This is an automorphism, and
    /// `act` of a composite is the composite of the `act`s.
    pub fn act_perm(&self, s: &Permutation) -> PureElement {
        assert_eq!(
            self.n,
            s.n(),
            "permutation on {} strands cannot act on {} strands",
            s.n(),
            self.n
        );
        let mut components = BTreeMap::new();
        for (&pair, w) in &self.components {
            let (a, b) = (s.apply(pair.lo()), s.apply(pair.hi()));
            let image = Pair::new(a, b);
            let moved = w.relabel(image, a > b);
            let clash = components.insert(image, moved);
            debug_assert!(clash.is_none(), "a bijection cannot merge components");
        }
        PureElement { n: self.n, components }
    }

    /// Exponent sum of the component at `pair`: the image of the component
    /// under F_{i,j} → Z collapsing both generators to 1. A homomorphism on
    /// each component, invariant under swapping the generators.
    pub fn epsilon(&self, pair: Pair) -> i64 {
        match self.components.get(&pair) {
            None => 0,
            Some(w) => {
                let (a, d) = w.exponent_pair();
                a + d
            }
        }
    }

    /// Sum of [`PureElement::epsilon`] over all pairs. Invariant under the
    /// permutation action, which only moves components around.
    pub fn epsilon_total(&self) -> i64 {
        self.components
            .values()
            .map(|w| {
                let (a, d) = w.exponent_pair();
                a + d
            })
            .sum()
    }
}

impl fmt::Display for PureElement {
    /// Components in pair order, spelled as `l<a>,<b>^<e>` syllables; the
    /// identity prints as `1`. Unambiguous because every syllable names its
    /// pair and distinct components commute.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for w in self.components.values() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
