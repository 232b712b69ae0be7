//! Exact torsion classification and conjugators onto permutations.
//!
//! An element `w = (u, s)` with `r` the order of `s` satisfies
//! `w^r = u · s(u) · s²(u) ⋯ s^{r-1}(u)`, a pure element. The pure subgroup
//! is torsion-free, so `w` has finite order exactly when that cocycle
//! product collapses to the identity, and then the order is exactly `r`.
//!
//! Every torsion element is moreover conjugate to the section of its own
//! permutation: [`torsion_conjugator`] produces a pure `Λ` with
//! `Λ · ι(s) · Λ⁻¹ = w`. The construction runs block by block over the
//! orbits of `s` on strand pairs, solving the telescoping equations
//! `u_j = v_j · s(v_{j-1})⁻¹` forward from a seed `v_0`; the wrap-around
//! equation closes either trivially (when the orbit returns straight) or via
//! the α-coboundary solver (when the orbit returns swapped), and in both
//! cases its solvability is exactly the finite-order condition.

use crate::free2::Pair;
use crate::normal::NormalForm;
use crate::perm::{pair_orbits, Permutation};
use crate::pure::PureElement;
use crate::Error;
use std::fmt;

/// The order of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(r) => write!(f, "{r}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// The exact order of `w`: the order `r` of its permutation when the cocycle
/// product `u · s(u) ⋯ s^{r-1}(u)` vanishes, infinite otherwise.
///
/// No smaller exponent can work (powers below `r` keep a nontrivial
/// permutation), and no larger one can rescue a nontrivial product (a
/// nontrivial pure element generates an infinite cyclic group).
pub fn order_of(w: &NormalForm) -> Order {
    let r = w.perm().order();
    let mut product = w.pure().clone();
    let mut term = w.pure().clone();
    for _ in 1..r {
        term = term.act_perm(w.perm());
        product = product.mul(&term);
    }
    if product.is_identity() {
        Order::Finite(r)
    } else {
        Order::Infinite
    }
}

/// A pure conjugator carrying the section of `w`'s permutation to `w`:
/// returns `Λ` with `Λ · ι(s) · Λ⁻¹ = w`, or [`Error::NotTorsion`] when `w`
/// has infinite order and no such `Λ` exists.
///
/// The conjugacy equation reads `Λ · s(Λ⁻¹) = u` on pure parts. It splits
/// over the orbit blocks of `s` on strand pairs. Within a block with
/// representative `(i0, j0)` and `len` unordered pairs, write `u_j` for the
/// component of `u` at the `j`-th pair of the cycle; the equation becomes
///
/// ```text
/// u_j = v_j · s(v_{j-1})⁻¹   (j = 1 .. len-1)      u_0 = v_0 · s(v_{len-1})⁻¹
/// ```
///
/// and `Λ` is the product of all `v_j`. Forward substitution determines
/// every `v_j` from the seed `v_0`, and the wrap-around equation reduces to
/// `W = v_0 · s^len(v_0)⁻¹` where `W = u_0 · s(u_{len-1}) · s²(u_{len-2})
/// ⋯ s^{len-1}(u_1)` lives in the representative's component. When the
/// ordered orbit returns straight, `s^len` fixes that component and the
/// equation says `W = 1`, which is the finite-order condition there, so the
/// seed is free and `v_0 = 1` is chosen. When it returns swapped, `s^len`
/// acts as the generator swap α and the seed is the coboundary solution for
/// `W`, which exists because finite order forces `W · α(W) = 1`.
///
/// The output is deterministic but not canonical: other conjugators exist
/// (any central modification of the seed works).
pub fn torsion_conjugator(w: &NormalForm) -> Result<PureElement, Error> {
    if !order_of(w).is_finite() {
        return Err(Error::NotTorsion);
    }
    let n = w.n();
    let s = w.perm();
    let mut conjugator = PureElement::identity(n);
    for block in pair_orbits(s).blocks() {
        let len = block.len();
        let components: Vec<PureElement> = block
            .cycle()
            .iter()
            .map(|&(a, b)| PureElement::from_component(n, w.pure().component(Pair::new(a, b))))
            .collect();
        if components.iter().all(PureElement::is_identity) {
            continue;
        }
        let v0 = match block.eps() {
            1 => PureElement::identity(n),
            _ => {
                // W = u_0 · s(u_{len-1}) · s²(u_{len-2}) ⋯ s^{len-1}(u_1),
                // supported on the representative's component.
                let mut w_acc = components[0].clone();
                let mut power = Permutation::identity(n);
                for k in 1..len {
                    power = s.compose(&power);
                    w_acc = w_acc.mul(&components[len - k].act_perm(&power));
                }
                let rep = Pair::new(block.rep().0, block.rep().1);
                debug_assert!(w_acc.support().all(|p| p == rep));
                let seed = w_acc
                    .component(rep)
                    .solve_alpha_coboundary()
                    .expect("finite order forces the coboundary hypothesis on W");
                PureElement::from_component(n, seed)
            }
        };
        let mut v = v0;
        conjugator = conjugator.mul(&v);
        for u_j in components.iter().skip(1) {
            v = u_j.mul(&v.act_perm(s));
            conjugator = conjugator.mul(&v);
        }
    }
    Ok(conjugator)
}

/// The conjugation check `Λ · ι(s) · Λ⁻¹` as a normal form; tests compare
/// this against the original element.
pub fn recompose(conjugator: &PureElement, s: &Permutation) -> NormalForm {
    let lam = NormalForm::from_pure(conjugator.clone());
    lam.mul(&NormalForm::from_perm(s.clone())).mul(&lam.inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::normal_form;
    use crate::word::BraidWord;

    fn nf(text: &str, n: usize) -> NormalForm {
        normal_form(&BraidWord::parse(text, Some(n)).unwrap())
    }

    fn lam(n: usize, a: usize, b: usize, e: i64) -> PureElement {
        PureElement::generator(n, a, b, e)
    }

    #[test]
    fn identity_has_order_one() {
        assert_eq!(order_of(&NormalForm::identity(3)), Order::Finite(1));
    }

    #[test]
    fn rho_letters_have_their_permutation_order() {
        assert_eq!(order_of(&nf("r1", 2)), Order::Finite(2));
        assert_eq!(order_of(&nf("r1 r2", 3)), Order::Finite(3));
        assert_eq!(order_of(&nf("r1 r3", 4)), Order::Finite(2));
    }

    #[test]
    fn braid_generators_have_infinite_order() {
        assert_eq!(order_of(&nf("s1", 2)), Order::Infinite);
        assert_eq!(order_of(&nf("s1 s1", 2)), Order::Infinite);
        assert_eq!(order_of(&nf("s1 s2", 3)), Order::Infinite);
    }

    #[test]
    fn nontrivial_pure_with_trivial_permutation_is_infinite() {
        let v = NormalForm::from_pure(lam(3, 1, 2, 1));
        assert_eq!(order_of(&v), Order::Infinite);
    }

    #[test]
    fn conjugated_involution_has_order_two() {
        // λ_{1,2} ρ_1 λ_{1,2}⁻¹, written in generators.
        let v = nf("r1 S1 r1 s1 r1", 2);
        assert_eq!(
            v,
            NormalForm::from_parts(
                lam(2, 1, 2, 1).mul(&lam(2, 2, 1, -1)),
                Permutation::transposition(2, 1)
            )
        );
        assert_eq!(order_of(&v), Order::Finite(2));
    }

    #[test]
    fn conjugator_for_conjugated_involution() {
        let v = nf("r1 S1 r1 s1 r1", 2);
        let conj = torsion_conjugator(&v).unwrap();
        assert_eq!(conj, lam(2, 1, 2, 1));
        assert_eq!(recompose(&conj, v.perm()), v);
    }

    #[test]
    fn conjugator_of_pure_identity_is_trivial() {
        let v = nf("r1 r2", 3);
        let conj = torsion_conjugator(&v).unwrap();
        assert!(conj.is_identity());
        assert_eq!(recompose(&conj, v.perm()), v);
    }

    #[test]
    fn conjugator_rejects_infinite_order() {
        assert_eq!(torsion_conjugator(&nf("s1", 2)), Err(Error::NotTorsion));
    }

    #[test]
    fn conjugator_on_straight_block_of_length_two() {
        // s = (1 2)(3 4) keeps the block {1,3},{2,4} straight: a torsion
        // element supported there, built by conjugating the section.
        let s = Permutation::from_images(vec![2, 1, 4, 3]).unwrap();
        let g = NormalForm::from_pure(lam(4, 1, 3, 1).mul(&lam(4, 2, 4, -1)));
        let v = g.mul(&NormalForm::from_perm(s.clone())).mul(&g.inv());
        assert_eq!(order_of(&v), Order::Finite(2));
        let conj = torsion_conjugator(&v).unwrap();
        assert_eq!(recompose(&conj, &s), v);
    }

    #[test]
    fn conjugator_on_swapped_block_of_length_two() {
        // s = (1 2 3 4): the block {1,3},{2,4} has length 2 and returns
        // swapped, exercising the coboundary seed with len > 1.
        let s = Permutation::from_images(vec![2, 3, 4, 1]).unwrap();
        let g = NormalForm::from_pure(
            lam(4, 1, 3, 1).mul(&lam(4, 4, 2, -1)).mul(&lam(4, 2, 4, 2)),
        );
        let v = g.mul(&NormalForm::from_perm(s.clone())).mul(&g.inv());
        assert_eq!(order_of(&v), Order::Finite(4));
        let conj = torsion_conjugator(&v).unwrap();
        assert_eq!(recompose(&conj, &s), v);
    }

    #[test]
    fn conjugator_handles_mixed_support() {
        // Support on several blocks at once, n = 5, s of order 6.
        let s = Permutation::from_images(vec![2, 1, 4, 5, 3]).unwrap();
        let g = NormalForm::from_pure(
            lam(5, 1, 2, 1)
                .mul(&lam(5, 3, 4, -2))
                .mul(&lam(5, 2, 5, 1))
                .mul(&lam(5, 4, 3, 1)),
        );
        let v = g.mul(&NormalForm::from_perm(s.clone())).mul(&g.inv());
        assert_eq!(order_of(&v), Order::Finite(6));
        let conj = torsion_conjugator(&v).unwrap();
        assert_eq!(recompose(&conj, &s), v);
    }

    #[test]
    fn order_of_section_words_matches_permutation_order() {
        // ρ-words normalize onto the section, whose order is the
        // permutation's order.
        for (text, n, expect) in [
            ("r1 r2 r3", 4, 4),
            ("r1 r3", 4, 2),
            ("r2 r1", 3, 3),
            ("r1 r2 r1", 3, 2),
        ] {
            assert_eq!(order_of(&nf(text, n)), Order::Finite(expect), "{text}");
        }
    }
}
