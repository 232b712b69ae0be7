//! Reduced words in a rank-two free group attached to a strand pair.
//!
//! For strands `i < j` the group F_{i,j} is free on the two generators
//! `λ_{i,j}` and `λ_{j,i}`. Words are kept freely reduced at all times:
//! syllables carry nonzero exponents and adjacent syllables use different
//! generators, so equality is literal equality of the representation.

use crate::Error;
use std::fmt;

/// An unordered pair of distinct 1-based strand labels, stored as `lo < hi`.
///
/// Pairs index the direct summands of the pure subgroup. Their derived `Ord`
/// is lexicographic on `(lo, hi)`, which fixes the component order used by
/// every serialization and iteration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: usize,
    hi: usize,
}

impl Pair {
    /// Canonicalizes `{a, b}`. Panics on `a == b` or a zero label; callers
    /// holding unvalidated input should check first and report
    /// [`Error::InvalidPair`].
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "strand pair needs two distinct strands, got ({a}, {b})");
        assert!(a != 0 && b != 0, "strand labels are 1-based, got ({a}, {b})");
        Pair { lo: a.min(b), hi: a.max(b) }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// All pairs on `n` strands in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Pair> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Pair { lo: i, hi: j }))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// One of the two free generators of F_{i,j}: `Asc` is λ_{lo,hi}, `Desc` is
/// λ_{hi,lo}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Asc,
    Desc,
}

impl Gen {
    pub fn flip(self) -> Gen {
        match self {
            Gen::Asc => Gen::Desc,
            Gen::Desc => Gen::Asc,
        }
    }
}

/// A freely reduced word in F_{i,j}.
///
/// Invariants: every exponent is nonzero and adjacent syllables carry
/// different generators. All constructors and operations preserve this, so
/// derived equality decides equality in the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Word {
    pair: Pair,
    syllables: Vec<(Gen, i64)>,
}

impl F2Word {
    /// The empty word.
    pub fn identity(pair: Pair) -> Self {
        F2Word { pair, syllables: Vec::new() }
    }

    /// The single letter λ_{a,b}^e, where `{a, b}` names the component and
    /// the order of `a, b` selects the generator. `e = 0` gives the identity.
    pub fn letter(a: usize, b: usize, e: i64) -> Self {
        let pair = Pair::new(a, b);
        let gen = if a < b { Gen::Asc } else { Gen::Desc };
        let mut w = F2Word::identity(pair);
        w.push(gen, e);
        w
    }

    pub fn pair(&self) -> Pair {
        self.pair
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length: the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.syllables
    }

    /// Syllables as `(a, b, e)` triples with the generator spelled as its
    /// ordered strand pair. This is the shape used by rendering and
    /// serialization.
    pub fn spelled_syllables(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.syllables.iter().map(move |&(g, e)| match g {
            Gen::Asc => (self.pair.lo, self.pair.hi, e),
            Gen::Desc => (self.pair.hi, self.pair.lo, e),
        })
    }

    /// Appends one syllable, merging and cancelling at the right end.
    pub fn push(&mut self, gen: Gen, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((gen, exp)),
        }
    }

    /// Group multiplication. Panics if the words belong to different pairs;
    /// words never migrate between components except through the permutation
    /// action, which relabels them explicitly.
    pub fn mul(&self, other: &F2Word) -> F2Word {
        assert_eq!(
            self.pair, other.pair,
            "cannot multiply words from components {} and {}",
            self.pair, other.pair
        );
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push(g, e);
        }
        out
    }

    pub fn inv(&self) -> F2Word {
        F2Word {
            pair: self.pair,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `self` raised to `k`, by repeated squaring.
    pub fn pow(&self, k: i64) -> F2Word {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut acc = F2Word::identity(self.pair);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The generator-swapping automorphism α: λ_{i,j} ↔ λ_{j,i}. An
    /// involution, and the effect of conjugating the component by the
    /// transposition of its two strands.
    pub fn swap_alpha(&self) -> F2Word {
        F2Word {
            pair: self.pair,
            syllables: self.syllables.iter().map(|&(g, e)| (g.flip(), e)).collect(),
        }
    }

    /// Rewrites the word as an element of the component `pair`, flipping the
    /// generator orientation when asked. Used by the permutation action on
    /// the pure subgroup: a permutation sends the component of `{i, j}` to
    /// the component of `{s(i), s(j)}`, reversing orientation exactly when it
    /// reverses the order of the two strands.
    pub(crate) fn relabel(&self, pair: Pair, flip: bool) -> F2Word {
        F2Word {
            pair,
            syllables: self
                .syllables
                .iter()
                .map(|&(g, e)| (if flip { g.flip() } else { g }, e))
                .collect(),
        }
    }

    /// Exponent sums `(asc, desc)` of the two generators. Additive under
    /// multiplication: this is the abelianization F_{i,j} → Z².
    pub fn exponent_pair(&self) -> (i64, i64) {
        let mut asc = 0;
        let mut desc = 0;
        for &(g, e) in &self.syllables {
            match g {
                Gen::Asc => asc += e,
                Gen::Desc => desc += e,
            }
        }
        (asc, desc)
    }

    /// Flattens to single letters `(gen, ±1)`, length [`F2Word::len`].
    fn flat(&self) -> Vec<(Gen, i64)> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.syllables {
            let sign = e.signum();
            for _ in 0..e.unsigned_abs() {
                out.push((g, sign));
            }
        }
        out
    }

    fn from_flat(pair: Pair, letters: &[(Gen, i64)]) -> F2Word {
        let mut w = F2Word::identity(pair);
        for &(g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Solves `self = u · α(u⁻¹)` for `u`.
    ///
    /// Such a `u` exists if and only if `self · α(self) = 1`; the check is
    /// performed and its failure reported as [`Error::NotCoboundary`]. When
    /// it holds, the reduced word has even letter length `2T` and its letter
    /// at position `2T+1-k` is the α-image of the inverse of the letter at
    /// position `k`, so the prefix of length `T` is a solution. The solution
    /// is not unique; this one is deterministic.
    pub fn solve_alpha_coboundary(&self) -> Result<F2Word, Error> {
        if !self.mul(&self.swap_alpha()).is_empty() {
            return Err(Error::NotCoboundary);
        }
        let letters = self.flat();
        debug_assert!(letters.len() % 2 == 0);
        Ok(F2Word::from_flat(self.pair, &letters[..letters.len() / 2]))
    }

    /// Strips the maximal conjugating shell: writes the word as `c · r · c⁻¹`
    /// with `r` cyclically reduced, returning `(|c|, r)`. For a nonempty
    /// reduced word the core `r` is nonempty.
    fn cyclic_core(&self) -> (usize, F2Word) {
        let letters = self.flat();
        let mut lo = 0;
        let mut hi = letters.len();
        // A reduced word of length two cannot cancel around the ends, so the
        // core keeps at least one letter.
        while hi - lo >= 3 {
            let (fg, fe) = letters[lo];
            let (lg, le) = letters[hi - 1];
            if fg == lg && fe == -le {
                lo += 1;
                hi -= 1;
            } else {
                break;
            }
        }
        (lo, F2Word::from_flat(self.pair, &letters[lo..hi]))
    }
}

/// Finds the exponent `k` with `w = g^k`, if one exists. `g` must be a
/// nonempty word of the same pair; the empty `w` always yields `Some(0)`.
///
/// A free group has unique roots, so `k` is unique. The candidate magnitude
/// comes from letter lengths: with `g = c·r·c⁻¹` and `r` cyclically reduced,
/// `|g^k| = 2|c| + |k|·|r|`. Exponent sums then screen the sign, and the
/// candidate is confirmed by exact comparison.
pub fn cyclic_member(w: &F2Word, g: &F2Word) -> Option<i64> {
    assert!(!g.is_empty(), "membership in a cyclic group needs a nontrivial generator");
    assert_eq!(w.pair(), g.pair(), "cyclic membership across different components");
    if w.is_empty() {
        return Some(0);
    }
    let (shell, core) = g.cyclic_core();
    let overhead = 2 * shell;
    if w.len() <= overhead {
        return None;
    }
    let span = w.len() - overhead;
    if span % core.len() != 0 {
        return None;
    }
    let k = (span / core.len()) as i64;
    let (wa, wd) = w.exponent_pair();
    let (ga, gd) = g.exponent_pair();
    for cand in [k, -k] {
        if wa == cand * ga && wd == cand * gd && *w == g.pow(cand) {
            return Some(cand);
        }
    }
    None
}

impl fmt::Display for F2Word {
    /// Writes syllables as `l<a>,<b>^<e>` separated by spaces; the empty
    /// word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, b, e) in self.spelled_syllables() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "l{a},{b}^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair12() -> Pair {
        Pair::new(1, 2)
    }

    /// λ_{1,2}^e
    fn x(e: i64) -> F2Word {
        F2Word::letter(1, 2, e)
    }

    /// λ_{2,1}^e
    fn y(e: i64) -> F2Word {
        F2Word::letter(2, 1, e)
    }

    fn word(parts: &[(Gen, i64)]) -> F2Word {
        let mut w = F2Word::identity(pair12());
        for &(g, e) in parts {
            w.push(g, e);
        }
        w
    }

    #[test]
    fn pair_canonicalizes() {
        assert_eq!(Pair::new(3, 1), Pair::new(1, 3));
        assert_eq!(Pair::new(2, 5).lo(), 2);
        assert_eq!(Pair::new(5, 2).hi(), 5);
    }

    #[test]
    #[should_panic]
    fn pair_rejects_equal_strands() {
        let _ = Pair::new(2, 2);
    }

    #[test]
    fn pairs_enumerate_in_lex_order() {
        let all: Vec<Pair> = Pair::all(4).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Pair::new(1, 2));
        assert_eq!(all[5], Pair::new(3, 4));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn mul_cancels_inverse_letters() {
        // λ_{1,2} λ_{1,2}⁻¹ = 1
        assert!(x(1).mul(&x(-1)).is_identity());
    }

    #[test]
    fn mul_merges_same_generator() {
        // λ_{1,2} λ_{2,1}² λ_{2,1}⁻¹ = λ_{1,2} λ_{2,1}
        let w = x(1).mul(&y(2)).mul(&y(-1));
        assert_eq!(w.syllables(), &[(Gen::Asc, 1), (Gen::Desc, 1)]);
    }

    #[test]
    fn cascading_cancellation_reduces_fully() {
        // (x y) (y⁻¹ x⁻¹) = 1 requires cancellation across syllables.
        let a = x(1).mul(&y(1));
        assert!(a.mul(&a.inv()).is_identity());
    }

    #[test]
    fn len_counts_flat_letters() {
        assert_eq!(word(&[(Gen::Asc, -2), (Gen::Desc, 3)]).len(), 5);
        assert_eq!(F2Word::identity(pair12()).len(), 0);
    }

    #[test]
    fn swap_alpha_exchanges_generators() {
        let w = word(&[(Gen::Asc, 2), (Gen::Desc, -1)]);
        assert_eq!(w.swap_alpha().syllables(), &[(Gen::Desc, 2), (Gen::Asc, -1)]);
        assert_eq!(w.swap_alpha().swap_alpha(), w);
    }

    #[test]
    fn exponent_pair_reads_sums() {
        let w = word(&[(Gen::Asc, 2), (Gen::Desc, -1), (Gen::Asc, -3)]);
        assert_eq!(w.exponent_pair(), (-1, -1));
    }

    #[test]
    fn display_spells_ordered_pairs() {
        let w = word(&[(Gen::Asc, -1), (Gen::Desc, 2)]);
        assert_eq!(w.to_string(), "l1,2^-1 l2,1^2");
        assert_eq!(F2Word::identity(pair12()).to_string(), "1");
    }

    #[test]
    #[should_panic]
    fn mul_rejects_mismatched_pairs() {
        let _ = x(1).mul(&F2Word::letter(1, 3, 1));
    }

    #[test]
    fn coboundary_single_cancelling_pair() {
        // w = λ_{1,2} λ_{2,1}⁻¹ solves to u = λ_{1,2}.
        let w = x(1).mul(&y(-1));
        let u = w.solve_alpha_coboundary().unwrap();
        assert_eq!(u, x(1));
        assert_eq!(u.mul(&u.inv().swap_alpha()), w);
    }

    #[test]
    fn coboundary_commutator() {
        // w = λ_{1,2} λ_{2,1} λ_{1,2}⁻¹ λ_{2,1}⁻¹ solves to u = λ_{1,2} λ_{2,1}.
        let w = x(1).mul(&y(1)).mul(&x(-1)).mul(&y(-1));
        let u = w.solve_alpha_coboundary().unwrap();
        assert_eq!(u, x(1).mul(&y(1)));
        assert_eq!(u.mul(&u.inv().swap_alpha()), w);
    }

    #[test]
    fn coboundary_empty_word() {
        let u = F2Word::identity(pair12()).solve_alpha_coboundary().unwrap();
        assert!(u.is_identity());
    }

    #[test]
    fn coboundary_rejects_violations() {
        // w = λ_{1,2}: w·α(w) = λ_{1,2} λ_{2,1} ≠ 1.
        assert_eq!(x(1).solve_alpha_coboundary(), Err(Error::NotCoboundary));
        // α-symmetric but wrong signs: w = λ_{1,2} λ_{2,1}.
        assert_eq!(x(1).mul(&y(1)).solve_alpha_coboundary(), Err(Error::NotCoboundary));
    }

    #[test]
    fn cyclic_member_plain_powers() {
        let g = x(-1).mul(&y(-1));
        assert_eq!(cyclic_member(&g.pow(3), &g), Some(3));
        assert_eq!(cyclic_member(&g.pow(-2), &g), Some(-2));
        assert_eq!(cyclic_member(&F2Word::identity(pair12()), &g), Some(0));
        assert_eq!(cyclic_member(&x(1), &g), None);
        // Right length and exponents, wrong order of letters.
        let imposter = y(-1).mul(&x(-1)).mul(&y(-1)).mul(&x(-1)).mul(&y(-1)).mul(&x(-1));
        assert_eq!(cyclic_member(&imposter, &g), None);
    }

    #[test]
    fn cyclic_member_handles_conjugated_generator() {
        // g = x y x⁻¹ is not cyclically reduced: |g^k| = 2 + k, not 3k.
        let g = x(1).mul(&y(1)).mul(&x(-1));
        for k in [-3i64, -1, 1, 2, 5] {
            assert_eq!(cyclic_member(&g.pow(k), &g), Some(k));
        }
        assert_eq!(cyclic_member(&x(1).mul(&y(2)).mul(&x(-1)), &g), Some(2));
        assert_eq!(cyclic_member(&x(1).mul(&y(2)), &g), None);
    }

    #[test]
    fn cyclic_member_zero_exponent_generator() {
        // g = x y x⁻¹ y⁻¹ has exponent pair (0, 0); only lengths can size k.
        let g = x(1).mul(&y(1)).mul(&x(-1)).mul(&y(-1));
        assert_eq!(cyclic_member(&g.pow(4), &g), Some(4));
        assert_eq!(cyclic_member(&g.pow(-4), &g), Some(-4));
        assert_eq!(cyclic_member(&g.pow(3).mul(&x(1)), &g), None);
    }

    fn arb_f2() -> impl Strategy<Value = F2Word> {
        proptest::collection::vec((prop::bool::ANY, -3i64..=3), 0..12).prop_map(|parts| {
            let mut w = F2Word::identity(pair12());
            for (asc, e) in parts {
                w.push(if asc { Gen::Asc } else { Gen::Desc }, e);
            }
            w
        })
    }

    proptest! {
        #[test]
        fn reduction_invariant_holds(w in arb_f2()) {
            for (g, e) in w.syllables() {
                prop_assert!(*e != 0, "zero exponent syllable");
                let _ = g;
            }
            for adj in w.syllables().windows(2) {
                prop_assert!(adj[0].0 != adj[1].0, "adjacent syllables share a generator");
            }
        }

        #[test]
        fn mul_associative(a in arb_f2(), b in arb_f2(), c in arb_f2()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn inverse_cancels(a in arb_f2()) {
            prop_assert!(a.mul(&a.inv()).is_identity());
            prop_assert!(a.inv().mul(&a).is_identity());
        }

        #[test]
        fn alpha_is_homomorphic_involution(a in arb_f2(), b in arb_f2()) {
            prop_assert_eq!(a.swap_alpha().swap_alpha(), a.clone());
            prop_assert_eq!(a.mul(&b).swap_alpha(), a.swap_alpha().mul(&b.swap_alpha()));
        }

        #[test]
        fn exponents_additive(a in arb_f2(), b in arb_f2()) {
            let (pa, qa) = a.exponent_pair();
            let (pb, qb) = b.exponent_pair();
            prop_assert_eq!(a.mul(&b).exponent_pair(), (pa + pb, qa + qb));
        }

        #[test]
        fn coboundary_roundtrip(u in arb_f2()) {
            let w = u.mul(&u.inv().swap_alpha());
            let v = w.solve_alpha_coboundary().expect("w·α(w) = 1 by construction");
            prop_assert_eq!(v.mul(&v.inv().swap_alpha()), w);
        }

        #[test]
        fn pow_matches_iterated_mul(a in arb_f2(), k in -6i64..=6) {
            let mut iter = F2Word::identity(a.pair());
            let step = if k < 0 { a.inv() } else { a.clone() };
            for _ in 0..k.unsigned_abs() {
                iter = iter.mul(&step);
            }
            prop_assert_eq!(a.pow(k), iter);
        }

        #[test]
        fn cyclic_member_finds_constructed_powers(a in arb_f2(), k in -5i64..=5) {
            prop_assume!(!a.is_empty());
            prop_assert_eq!(cyclic_member(&a.pow(k), &a), Some(k));
        }
    }
}
