//! Normal forms for UVB_n elements and the word-to-normal-form evaluation.
//!
//! Every element factors uniquely as a pure element followed by a strand
//! permutation. A generator word is evaluated by a single left-to-right fold
//! over its letters, using the decompositions
//!
//! ```text
//! σ_i   =  λ_{i,i+1}⁻¹ · ρ_i        σ_i⁻¹  =  λ_{i+1,i} · ρ_i        ρ_i
//! ```
//!
//! into a pure letter times a transposition. With the running state
//! `(P, s)`, a letter contributing `(g, t)` updates it to
//! `(P · s(g), s ∘ t)`: the accumulated permutation relabels the incoming
//! pure letter before it joins the pure part. The fold is linear in the word
//! length, and since both factors are canonical, structural equality of
//! normal forms decides the word problem.

use crate::perm::Permutation;
use crate::pure::PureElement;
use crate::word::{BraidWord, Letter};
use crate::Error;
use std::fmt;

/// The canonical form `pure · ι(perm)` of a UVB_n element.
///
/// Derived equality is group equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pure: PureElement,
    perm: Permutation,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm { pure: PureElement::identity(n), perm: Permutation::identity(n) }
    }

    /// Assembles a normal form from its two factors. Panics when their
    /// strand counts differ.
    pub fn from_parts(pure: PureElement, perm: Permutation) -> Self {
        assert_eq!(
            pure.n(),
            perm.n(),
            "pure part on {} strands incompatible with permutation on {}",
            pure.n(),
            perm.n()
        );
        NormalForm { pure, perm }
    }

    /// Embeds a pure element.
    pub fn from_pure(pure: PureElement) -> Self {
        let perm = Permutation::identity(pure.n());
        NormalForm { pure, perm }
    }

    /// The canonical section S_n → UVB_n on permutations (products of
    /// ρ-letters).
    pub fn from_perm(perm: Permutation) -> Self {
        let pure = PureElement::identity(perm.n());
        NormalForm { pure, perm }
    }

    /// Evaluates a generator word.
    pub fn of_word(w: &BraidWord) -> Self {
        let n = w.n();
        let mut pure = PureElement::identity(n);
        // One-line images of the running permutation; composing with s_i on
        // the right is a swap of two entries.
        let mut img: Vec<usize> = (1..=n).collect();
        for l in w.letters() {
            match *l {
                Letter::Sigma(i) => {
                    pure.mul_letter(img[i - 1], img[i], -1);
                    img.swap(i - 1, i);
                }
                Letter::SigmaInv(i) => {
                    pure.mul_letter(img[i], img[i - 1], 1);
                    img.swap(i - 1, i);
                }
                Letter::Rho(i) => {
                    img.swap(i - 1, i);
                }
            }
        }
        let perm = Permutation::from_images(img).expect("fold image stays a bijection");
        NormalForm { pure, perm }
    }

    pub fn n(&self) -> usize {
        self.pure.n()
    }

    pub fn pure(&self) -> &PureElement {
        &self.pure
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.pure.is_identity() && self.perm.is_identity()
    }

    /// Group multiplication: `(P₁, s₁)(P₂, s₂) = (P₁ · s₁(P₂), s₁ ∘ s₂)`.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        NormalForm {
            pure: self.pure.mul(&other.pure.act_perm(&self.perm)),
            perm: self.perm.compose(&other.perm),
        }
    }

    /// Group inverse: `(P, s)⁻¹ = (s⁻¹(P⁻¹), s⁻¹)`.
    pub fn inv(&self) -> NormalForm {
        let pinv = self.perm.inverse();
        NormalForm { pure: self.pure.inv().act_perm(&pinv), perm: pinv }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.pure, self.perm)
    }
}

/// Shorthand for [`NormalForm::of_word`].
pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::of_word(w)
}

/// A generator word evaluating to the single pure generator λ_{a,b}.
///
/// For adjacent strands these are the defining two-letter words
/// `λ_{i,i+1} = ρ_i σ_i⁻¹` and `λ_{i+1,i} = σ_i⁻¹ ρ_i`; distant strands are
/// reached by conjugating with the ρ-interval `ρ_{j-1} ⋯ ρ_{i+1}`, which
/// transports strand `i+1` to `j` while fixing strand `i`.
pub fn lambda_generator_word(n: usize, a: usize, b: usize) -> Result<BraidWord, Error> {
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(Error::InvalidPair { a, b, n });
    }
    let (i, j) = (a.min(b), a.max(b));
    let mut letters = Vec::with_capacity(2 * (j - i) + 2);
    for k in (i + 1..j).rev() {
        letters.push(Letter::Rho(k));
    }
    if a < b {
        letters.push(Letter::Rho(i));
        letters.push(Letter::SigmaInv(i));
    } else {
        letters.push(Letter::SigmaInv(i));
        letters.push(Letter::Rho(i));
    }
    for k in i + 1..j {
        letters.push(Letter::Rho(k));
    }
    BraidWord::new(n, letters)
}

/// One instance of a defining relation, with both sides as words and the
/// verdict of comparing their normal forms.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub family: &'static str,
    pub indices: Vec<usize>,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
    pub passed: bool,
}

/// Outcome of checking every defining relation instance on `n` strands.
#[derive(Debug, Clone)]
pub struct RelationReport {
    n: usize,
    checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn checks(&self) -> &[RelationCheck] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Verifies every instance of the defining relations of UVB_n on `n`
/// strands by evaluating both sides to normal form.
///
/// Families, with `i` through `n-2` and far pairs `|i-j| ≥ 2`:
///
/// * `braid`: σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}
/// * `braid-far-commute`: σ_i σ_j = σ_j σ_i
/// * `symmetric-braid`: ρ_i ρ_{i+1} ρ_i = ρ_{i+1} ρ_i ρ_{i+1}
/// * `symmetric-far-commute`: ρ_i ρ_j = ρ_j ρ_i
/// * `involution`: ρ_i ρ_i = 1
/// * `mixed-far-commute`: σ_i ρ_j = ρ_j σ_i
/// * `mixed-braid`: ρ_i ρ_{i+1} σ_i = σ_{i+1} ρ_i ρ_{i+1}
/// * `forbidden-over`: ρ_i σ_{i+1} σ_i = σ_{i+1} σ_i ρ_{i+1}
/// * `forbidden-under`: ρ_{i+1} σ_i σ_{i+1} = σ_i σ_{i+1} ρ_i
///
/// The two forbidden families are what distinguishes the unrestricted group
/// from ordinary virtual braids, where neither holds.
pub fn check_relations(n: usize) -> RelationReport {
    assert!(n >= 2, "relations need at least two strands");
    let word = |letters: Vec<Letter>| BraidWord::new(n, letters).expect("indices in range");
    let mut checks = Vec::new();
    let mut push = |family: &'static str, indices: Vec<usize>, lhs: BraidWord, rhs: BraidWord| {
        let passed = normal_form(&lhs) == normal_form(&rhs);
        checks.push(RelationCheck { family, indices, lhs, rhs, passed });
    };
    use Letter::{Rho, Sigma};

    for i in 1..=n.saturating_sub(2) {
        push(
            "braid",
            vec![i],
            word(vec![Sigma(i), Sigma(i + 1), Sigma(i)]),
            word(vec![Sigma(i + 1), Sigma(i), Sigma(i + 1)]),
        );
        push(
            "symmetric-braid",
            vec![i],
            word(vec![Rho(i), Rho(i + 1), Rho(i)]),
            word(vec![Rho(i + 1), Rho(i), Rho(i + 1)]),
        );
        push(
            "mixed-braid",
            vec![i],
            word(vec![Rho(i), Rho(i + 1), Sigma(i)]),
            word(vec![Sigma(i + 1), Rho(i), Rho(i + 1)]),
        );
        push(
            "forbidden-over",
            vec![i],
            word(vec![Rho(i), Sigma(i + 1), Sigma(i)]),
            word(vec![Sigma(i + 1), Sigma(i), Rho(i + 1)]),
        );
        push(
            "forbidden-under",
            vec![i],
            word(vec![Rho(i + 1), Sigma(i), Sigma(i + 1)]),
            word(vec![Sigma(i), Sigma(i + 1), Rho(i)]),
        );
    }
    for i in 1..n {
        push("involution", vec![i], word(vec![Rho(i), Rho(i)]), word(vec![]));
    }
    for i in 1..n {
        for j in i + 2..n {
            push(
                "braid-far-commute",
                vec![i, j],
                word(vec![Sigma(i), Sigma(j)]),
                word(vec![Sigma(j), Sigma(i)]),
            );
            push(
                "symmetric-far-commute",
                vec![i, j],
                word(vec![Rho(i), Rho(j)]),
                word(vec![Rho(j), Rho(i)]),
            );
        }
    }
    // The mixed commutation relates a σ and a ρ, so both orders of the
    // indices are distinct instances.
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                push(
                    "mixed-far-commute",
                    vec![i, j],
                    word(vec![Sigma(i), Rho(j)]),
                    word(vec![Rho(j), Sigma(i)]),
                );
            }
        }
    }
    RelationReport { n, checks }
}
