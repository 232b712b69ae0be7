//! Exact computation in the unrestricted virtual braid group UVB_n.
//!
//! UVB_n is generated by braid letters `σ_1 … σ_{n-1}` and symmetric letters
//! `ρ_1 … ρ_{n-1}` (the ρ_i are involutions), subject to the braid, symmetric,
//! and mixed relations together with both "forbidden" commutations of classical
//! virtual braid theory. Its pure part UVP_n decomposes as a direct sum of
//! rank-two free groups F_{i,j} with basis `λ_{i,j}, λ_{j,i}` indexed by strand
//! pairs, and UVB_n itself splits as UVP_n ⋊ S_n. That decomposition gives a
//! terminating normal form, so word problems, torsion questions, and quotient
//! projections here are decided exactly, with no rewriting heuristics.
//!
//! Modules, bottom up:
//!
//! * [`word`]: generator words over σ/ρ letters, parsing and rendering.
//! * [`perm`]: permutations, strand-pair orbits, transposition lifts.
//! * [`free2`]: reduced words in a rank-two free group on a strand pair.
//! * [`pure`]: the direct sum of the F_{i,j}, with the S_n action.
//! * [`normal`]: normal forms `(pure, perm)`, the word-to-normal-form fold,
//!   group arithmetic, and defining-relation checks.
//! * [`torsion`]: exact order computation and conjugators onto permutations.
//! * [`crystal`]: the embedded crystallographic braid group, membership
//!   tests, writhe, and the lattice-by-symmetric quotient.
//! * [`oracle`]: seeded random generation and brute-force cross-checks.
//! * [`serial`]: canonical machine-readable serialization.

pub mod crystal;
pub mod free2;
pub mod normal;
pub mod oracle;
pub mod perm;
pub mod pure;
pub mod serial;
pub mod torsion;
pub mod word;

use thiserror::Error;

/// Errors reported by parsers, constructors, and partial operations.
///
/// Structural misuse that cannot come from end-user input (mixing strand
/// counts in arithmetic, mismatched component pairs) panics instead; these
/// variants cover conditions reachable from data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token in a generator word was not of the form `s<i>`, `S<i>`,
    /// `r<i>`, or `R<i>`.
    #[error("malformed token `{token}` at position {position}")]
    BadToken { token: String, position: usize },

    /// Generator indices are 1-based; `s0` and friends are meaningless.
    #[error("generator index 0 at position {position} (indices start at 1)")]
    ZeroIndex { position: usize },

    /// A generator index exceeds what `n` strands allow.
    #[error("generator index {index} out of range for {n} strands (max {max})", max = n - 1)]
    IndexOutOfRange { index: usize, n: usize },

    /// A strand label exceeds the strand count, or labels a pair with itself.
    #[error("invalid strand pair ({a}, {b}) on {n} strands")]
    InvalidPair { a: usize, b: usize, n: usize },

    /// Words past this length are rejected before any allocation.
    #[error("word has {len} letters, over the limit of {limit}")]
    WordTooLong { len: usize, limit: usize },

    /// One-line permutation input was not a bijection of 1..=n.
    #[error("invalid one-line permutation: {reason}")]
    BadPermutation { reason: String },

    /// A braid-group operation was handed a word containing a ρ letter.
    #[error("symmetric letter r{index} at position {position} in a context that allows only braid letters")]
    RhoLetter { index: usize, position: usize },

    /// The coboundary equation `w = u · α(u⁻¹)` has no solution because
    /// `w · α(w) ≠ 1`.
    #[error("word does not satisfy the coboundary hypothesis w·α(w) = 1")]
    NotCoboundary,

    /// A conjugator onto a permutation exists only for elements of finite
    /// order.
    #[error("element has infinite order; no conjugate lies in the symmetric subgroup")]
    NotTorsion,
}
