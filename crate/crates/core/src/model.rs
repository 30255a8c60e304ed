//! The interface a concrete realization of an extended affine Weyl group has
//! to provide.
//!
//! Elements are handled by the engine as opaque integer vectors (the model's
//! canonical form). Coweights live in `Z^r` for the model's ambient rank `r`;
//! roots and coroots are given as coefficient vectors so that every pairing is
//! a plain dot product.

use std::fmt;

use num_rational::Rational64;

use crate::error::Result;

pub trait Model: fmt::Debug + Send + Sync {
    /// Short identifier, e.g. `"GSp(4)"`.
    fn name(&self) -> String;

    /// Number of affine simple reflections `s_0, ..., s_n`.
    fn num_generators(&self) -> usize;

    fn identity(&self) -> Vec<i64>;

    fn generator(&self, i: usize) -> Vec<i64>;

    /// `a ∘ b`: the right factor is applied first.
    fn compose(&self, a: &[i64], b: &[i64]) -> Vec<i64>;

    fn inverse(&self, a: &[i64]) -> Vec<i64>;

    fn validate(&self, a: &[i64]) -> Result<()>;

    /// Image in `π_1(G) ≅ Z`, a group homomorphism vanishing on the affine
    /// Weyl group.
    fn kottwitz(&self, a: &[i64]) -> i64;

    /// The length-zero element with Kottwitz image 1.
    fn omega_generator(&self) -> Vec<i64>;

    /// Whether `ℓ(a s_i) < ℓ(a)`, read off the canonical form.
    fn is_right_descent(&self, a: &[i64], i: usize) -> bool;

    /// Rank of the ambient lattice holding coweights.
    fn lattice_rank(&self) -> usize;

    fn check_coweight(&self, v: &[i64]) -> Result<()>;

    /// The translation element `t^v`.
    fn translation(&self, v: &[i64]) -> Vec<i64>;

    /// `Some(v)` when `a = t^v`.
    fn translation_part(&self, a: &[i64]) -> Option<Vec<i64>>;

    /// Number of simple reflections of the finite Weyl group `W_0`.
    fn finite_rank(&self) -> usize;

    /// Applies the `k`-th finite simple reflection to a rational coweight.
    fn reflect_coweight(&self, k: usize, v: &mut [Rational64]);

    /// Simple roots of `W_0` as functionals on the coweight lattice.
    fn simple_roots(&self) -> Vec<Vec<i64>>;

    /// Simple coroots of `W_0`, in the same order as [`Model::simple_roots`].
    fn simple_coroots(&self) -> Vec<Vec<i64>>;

    /// Positive roots as functionals, one per root.
    fn positive_roots(&self) -> Vec<Vec<i64>>;

    /// The cocharacter the Shimura datum is attached to.
    fn default_mu(&self) -> Vec<i64>;

    /// Torus rank of the reductive group.
    fn torus_rank(&self) -> usize;

    /// Model-specific p-rank of an admissible element, if the model has one.
    fn p_rank(&self, _a: &[i64]) -> Option<u32> {
        None
    }
}
