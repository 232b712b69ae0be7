//! The crystallographic braid group inside UVB_n and its companion
//! structures.
//!
//! Sending σ_i to `λ_{i,i+1}⁻¹ ρ_i` embeds the braid group modulo the
//! commutator subgroup of its pure part: a crystallographic group whose
//! translation lattice is generated componentwise by `λ_{i,j}⁻¹ λ_{j,i}⁻¹`
//! (the images of the standard pure braid generators) and whose holonomy is
//! the full symmetric group. This module decides membership in that image,
//! decides membership in the sibling crystal built on the lattice of
//! `λ_{i,j} λ_{j,i}⁻¹`, computes the writhe, and projects onto the quotient
//! that collapses each pair component to a single integer.

use crate::free2::{cyclic_member, F2Word, Pair};
use crate::normal::{normal_form, NormalForm};
use crate::perm::{adjacent_lift, Permutation};
use crate::pure::PureElement;
use crate::word::{BraidWord, Letter};
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;

/// Checks that a word uses braid letters only, reporting the first ρ.
fn require_sigma_only(w: &BraidWord) -> Result<(), Error> {
    for (position, l) in w.letters().iter().enumerate() {
        if let Letter::Rho(index) = *l {
            return Err(Error::RhoLetter { index, position });
        }
    }
    Ok(())
}

/// Evaluates a braid word (σ-letters only) in UVB_n. This is the embedding
/// of the braid group; a ρ-letter is a contract violation reported as
/// [`Error::RhoLetter`].
pub fn embed_braid(w: &BraidWord) -> Result<NormalForm, Error> {
    require_sigma_only(w)?;
    Ok(normal_form(w))
}

/// Whether two braid words agree in the embedded crystallographic group,
/// i.e. as braids up to commutators of pure braids.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, Error> {
    Ok(embed_braid(w1)? == embed_braid(w2)?)
}

/// Generator of the embedded braid group's translation lattice at `pair`:
/// `λ_{i,j}⁻¹ λ_{j,i}⁻¹`, the image of the pure braid generator braiding the
/// two strands around each other.
pub fn braid_lattice_generator(pair: Pair) -> F2Word {
    F2Word::letter(pair.lo(), pair.hi(), -1).mul(&F2Word::letter(pair.hi(), pair.lo(), -1))
}

/// Generator of the symmetric crystal's translation lattice at `pair`:
/// `λ_{i,j} λ_{j,i}⁻¹`.
pub fn symmetric_lattice_generator(pair: Pair) -> F2Word {
    F2Word::letter(pair.lo(), pair.hi(), 1).mul(&F2Word::letter(pair.hi(), pair.lo(), -1))
}

/// Whether every component of a pure element is a power of the braid
/// lattice generator of its pair.
fn pure_in_braid_lattice(p: &PureElement) -> bool {
    p.components()
        .all(|(pair, w)| cyclic_member(w, &braid_lattice_generator(pair)).is_some())
}

/// Membership in the embedded braid group, deciding with the default
/// (insertion sort) transposition lift. See [`in_braid_image_with_lift`].
pub fn in_braid_image(v: &NormalForm) -> bool {
    in_braid_image_with_lift(v, adjacent_lift)
}

/// Membership in the embedded braid group.
///
/// The lift produces a ρ-word for `v`'s permutation; replacing each ρ by the
/// corresponding σ gives a braid word `β` whose embedding has the same
/// permutation, so the residual `embed(β)⁻¹ · v` is pure. `v` lies in the
/// image exactly when the residual lies in the translation lattice, which is
/// checked componentwise. Different lifts move the residual by a lattice
/// element, so the answer does not depend on the lift.
pub fn in_braid_image_with_lift(
    v: &NormalForm,
    lift: impl Fn(&Permutation) -> BraidWord,
) -> bool {
    let rho_word = lift(v.perm());
    let sigma_letters = rho_word
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::Rho(i) => Letter::Sigma(i),
            _ => panic!("lift produced a non-ρ letter"),
        })
        .collect();
    let beta = BraidWord::new(v.n(), sigma_letters).expect("lift letters stay in range");
    let residual = normal_form(&beta).inv().mul(v);
    assert!(
        residual.perm().is_identity(),
        "lift did not evaluate to the element's permutation"
    );
    pure_in_braid_lattice(residual.pure())
}

/// Membership in the symmetric crystal: the subgroup generated by all
/// ρ-letters together with the lattice elements `λ_{i,j} λ_{j,i}⁻¹`. The
/// permutation part is unrestricted; the pure part must lie in the lattice,
/// componentwise.
pub fn in_symmetric_crystal(v: &NormalForm) -> bool {
    v.pure()
        .components()
        .all(|(pair, w)| cyclic_member(w, &symmetric_lattice_generator(pair)).is_some())
}

/// Writhe of a normal form: the negated exponent sum of its pure part.
/// Agrees with [`writhe_word`] on every evaluation and is a homomorphism
/// onto the integers.
pub fn writhe(v: &NormalForm) -> i64 {
    -v.pure().epsilon_total()
}

/// Writhe of a word: σ-letters count +1, inverse σ-letters −1, ρ-letters 0.
pub fn writhe_word(w: &BraidWord) -> i64 {
    w.letters()
        .iter()
        .map(|l| match l {
            Letter::Sigma(_) => 1,
            Letter::SigmaInv(_) => -1,
            Letter::Rho(_) => 0,
        })
        .sum()
}

/// An element of the quotient that collapses each pair component of the pure
/// subgroup to a single integer `x_{i,j} = x_{j,i}`: a free abelian group of
/// rank `n(n-1)/2` extended by the symmetric group, which permutes the
/// coordinates by relabeling pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalQuotientElement {
    vector: BTreeMap<Pair, i64>,
    perm: Permutation,
}

impl CrystalQuotientElement {
    pub fn identity(n: usize) -> Self {
        CrystalQuotientElement { vector: BTreeMap::new(), perm: Permutation::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Nonzero coordinates in pair order.
    pub fn coords(&self) -> impl Iterator<Item = (Pair, i64)> + '_ {
        self.vector.iter().map(|(&p, &c)| (p, c))
    }

    pub fn coord(&self, pair: Pair) -> i64 {
        self.vector.get(&pair).copied().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.vector.is_empty() && self.perm.is_identity()
    }

    /// Semidirect multiplication: add the left-translated vector of the
    /// right factor, compose permutations.
    pub fn mul(&self, other: &CrystalQuotientElement) -> CrystalQuotientElement {
        assert_eq!(self.n(), other.n(), "strand count mismatch");
        let mut vector = self.vector.clone();
        for (pair, c) in other.coords() {
            let moved = Pair::new(self.perm.apply(pair.lo()), self.perm.apply(pair.hi()));
            let entry = vector.entry(moved).or_insert(0);
            *entry += c;
            if *entry == 0 {
                vector.remove(&moved);
            }
        }
        CrystalQuotientElement { vector, perm: self.perm.compose(&other.perm) }
    }
}

impl fmt::Display for CrystalQuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vector.is_empty() {
            write!(f, "1")?;
        } else {
            let mut first = true;
            for (pair, c) in self.coords() {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "x{},{}^{}", pair.lo(), pair.hi(), c)?;
            }
        }
        write!(f, " ; {}", self.perm)
    }
}

/// Projects a normal form onto the crystal quotient: each pure component
/// maps to its exponent sum, the permutation passes through. A homomorphism
/// that kills exactly the normal closure of the symmetric lattice
/// generators.
pub fn project_abelianized(v: &NormalForm) -> CrystalQuotientElement {
    let mut vector = BTreeMap::new();
    for pair in v.pure().support() {
        let eps = v.pure().epsilon(pair);
        if eps != 0 {
            vector.insert(pair, eps);
        }
    }
    CrystalQuotientElement { vector, perm: v.perm().clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::bubble_lift;
    use proptest::prelude::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Some(n)).unwrap()
    }

    fn nf(text: &str, n: usize) -> NormalForm {
        normal_form(&word(text, n))
    }

    fn lam(n: usize, a: usize, b: usize, e: i64) -> PureElement {
        PureElement::generator(n, a, b, e)
    }

    /// The standard pure braid generator a_{i,j} as a braid word:
    /// σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹.
    fn pure_braid_word(n: usize, i: usize, j: usize) -> BraidWord {
        let mut letters = Vec::new();
        for k in (i + 1..j).rev() {
            letters.push(Letter::Sigma(k));
        }
        letters.push(Letter::Sigma(i));
        letters.push(Letter::Sigma(i));
        for k in i + 1..j {
            letters.push(Letter::SigmaInv(k));
        }
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn embed_rejects_rho_letters() {
        assert_eq!(
            embed_braid(&word("s1 r2 s1", 3)),
            Err(Error::RhoLetter { index: 2, position: 1 })
        );
    }

    #[test]
    fn braid_relation_holds_in_image() {
        assert!(braid_equal(&word("s1 s2 s1", 3), &word("s2 s1 s2", 3)).unwrap());
        assert!(!braid_equal(&word("s1 s2", 3), &word("s2 s1", 3)).unwrap());
    }

    #[test]
    fn pure_braid_commutators_die_in_image() {
        // The embedding kills commutators of pure braids: a_{1,2} and a_{1,3}
        // do not commute as braids, but their images do.
        let a = pure_braid_word(3, 1, 2);
        let b = pure_braid_word(3, 1, 3);
        let comm = a.concat(&b).concat(&a.inverse()).concat(&b.inverse());
        assert!(embed_braid(&comm).unwrap().is_identity());
    }

    #[test]
    fn pure_braid_generators_map_to_lattice_generators() {
        for n in 2..=5 {
            for pair in Pair::all(n) {
                let image = embed_braid(&pure_braid_word(n, pair.lo(), pair.hi())).unwrap();
                let expected =
                    NormalForm::from_pure(PureElement::from_component(n, braid_lattice_generator(pair)));
                assert_eq!(image, expected, "a_{pair} on {n} strands");
            }
        }
    }

    #[test]
    fn embedded_words_are_in_the_image() {
        for (text, n) in [("", 2), ("s1", 2), ("s1 S2 s1 s1", 3), ("s3 s1 s2 S1", 4)] {
            let v = embed_braid(&word(text, n)).unwrap();
            assert!(in_braid_image(&v), "{text:?} should lie in its own image");
        }
    }

    #[test]
    fn bare_swap_is_not_in_the_image() {
        // The residual of ρ_1 against the lift σ_1 is λ_{2,1}, not a lattice
        // element.
        assert!(!in_braid_image(&nf("r1", 2)));
    }

    #[test]
    fn lattice_offsets_outside_the_lattice_are_rejected() {
        let v = NormalForm::from_pure(lam(3, 1, 2, 2));
        assert!(!in_braid_image(&v));
        let v = NormalForm::from_pure(lam(3, 1, 2, -1).mul(&lam(3, 2, 1, -1)));
        assert!(in_braid_image(&v));
    }

    #[test]
    fn lift_choice_is_irrelevant_on_examples() {
        for (text, n) in [("r1", 2), ("s1 r2", 3), ("s1 s1", 3), ("r1 s2 S1 r3", 4)] {
            let v = nf(text, n);
            assert_eq!(
                in_braid_image_with_lift(&v, adjacent_lift),
                in_braid_image_with_lift(&v, bubble_lift),
                "{text:?}"
            );
        }
    }

    #[test]
    fn symmetric_crystal_membership() {
        // Lattice powers with any permutation: in.
        let lattice = PureElement::from_component(3, symmetric_lattice_generator(Pair::new(1, 2)).pow(3));
        assert!(in_symmetric_crystal(&NormalForm::from_parts(
            lattice,
            Permutation::transposition(3, 2)
        )));
        assert!(in_symmetric_crystal(&nf("r1 r2", 3)));
        // A bare λ or a braid letter: out.
        assert!(!in_symmetric_crystal(&NormalForm::from_pure(lam(3, 1, 2, 1))));
        assert!(!in_symmetric_crystal(&nf("s1", 3)));
    }

    #[test]
    fn writhe_counts_sigma_signs() {
        let w = word("s1 S2 s1 r1 s2 S1", 3);
        assert_eq!(writhe_word(&w), 1);
        assert_eq!(writhe(&normal_form(&w)), 1);
        assert_eq!(writhe_word(&word("r1 r2", 3)), 0);
    }

    #[test]
    fn project_collapses_components() {
        let q = project_abelianized(&nf("s1 s1", 3));
        assert_eq!(q.coord(Pair::new(1, 2)), -2);
        assert!(q.perm().is_identity());
        assert_eq!(q.coords().count(), 1);
        assert_eq!(q.to_string(), "x1,2^-2 ; [1,2,3]");
    }

    #[test]
    fn project_kills_symmetric_lattice() {
        for pair in Pair::all(4) {
            let g = PureElement::from_component(4, symmetric_lattice_generator(pair));
            let q = project_abelianized(&NormalForm::from_pure(g));
            assert!(q.is_identity(), "lattice generator at {pair} must project away");
        }
    }

    #[test]
    fn project_keeps_permutation() {
        let q = project_abelianized(&nf("r1 r2", 3));
        assert!(q.coords().count() == 0);
        assert_eq!(q.perm(), &Permutation::from_images(vec![2, 3, 1]).unwrap());
    }

    fn arb_word(n: usize) -> impl Strategy<Value = BraidWord> {
        proptest::collection::vec((0..3u8, 1..n), 0..14).prop_map(move |raw| {
            let letters = raw
                .into_iter()
                .map(|(kind, i)| match kind {
                    0 => Letter::Sigma(i),
                    1 => Letter::SigmaInv(i),
                    _ => Letter::Rho(i),
                })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn writhe_is_homomorphic(a in arb_word(4), b in arb_word(4)) {
            let (va, vb) = (normal_form(&a), normal_form(&b));
            prop_assert_eq!(writhe(&va.mul(&vb)), writhe(&va) + writhe(&vb));
            prop_assert_eq!(writhe(&va.inv()), -writhe(&va));
        }

        #[test]
        fn word_writhe_matches_normal_form_writhe(a in arb_word(4)) {
            prop_assert_eq!(writhe_word(&a), writhe(&normal_form(&a)));
        }

        #[test]
        fn projection_is_homomorphic(a in arb_word(4), b in arb_word(4)) {
            let (va, vb) = (normal_form(&a), normal_form(&b));
            prop_assert_eq!(
                project_abelianized(&va.mul(&vb)),
                project_abelianized(&va).mul(&project_abelianized(&vb))
            );
        }

        #[test]
        fn membership_tests_accept_embedded_words(raw in proptest::collection::vec((prop::bool::ANY, 1..4usize), 0..12)) {
            let letters: Vec<Letter> = raw
                .into_iter()
                .map(|(pos, i)| if pos { Letter::Sigma(i) } else { Letter::SigmaInv(i) })
                .collect();
            let w = BraidWord::new(4, letters).unwrap();
            prop_assert!(in_braid_image(&embed_braid(&w).unwrap()));
        }
    }
}
