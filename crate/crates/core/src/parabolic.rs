//! Parahoric subgroups `W_K` and their coset representatives.
//!
//! `W_K` is materialized by breadth-first search inside the ambient group.
//! Minimal representatives are found by stripping descents in `K`, which
//! needs no length table and so works for elements outside the ball.

use std::collections::{BTreeSet, HashMap};

use crate::affweyl::{Elt, GroupCtx};
use crate::error::{Error, Result};

/// Upper bound on `|W_K|` before the generating set is rejected as infinite.
const MAX_PARAHORIC_SIZE: usize = 1 << 21;

#[derive(Debug, Clone)]
pub struct Parahoric {
    ctx: u64,
    gens: Vec<usize>,
    elements: Vec<Elt>,
    lengths: HashMap<Elt, u32>,
    longest: Elt,
}

impl Parahoric {
    /// `W_K` for `K` given by affine simple reflection indices.
    pub fn new(ctx: &GroupCtx, gens: impl IntoIterator<Item = usize>) -> Result<Self> {
        let gens: Vec<usize> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let n = ctx.num_generators();
        if let Some(&i) = gens.iter().find(|&&i| i >= n) {
            return Err(Error::GeneratorOutOfRange { index: i, count: n });
        }
        if gens.len() == n {
            return Err(Error::InfiniteParabolic(gens));
        }
        if gens.iter().any(|&i| !gens.contains(&ctx.sigma_perm()[i])) {
            return Err(Error::SigmaUnstable { gens });
        }

        let id = ctx.identity();
        let mut lengths = HashMap::from([(id.clone(), 0u32)]);
        let mut elements = vec![id.clone()];
        let mut frontier = vec![id];
        let mut len = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for &i in &gens {
                    let y = ctx.mul(&ctx.gen(i), x);
                    if !lengths.contains_key(&y) {
                        lengths.insert(y.clone(), len + 1);
                        elements.push(y.clone());
                        next.push(y);
                    }
                }
            }
            if lengths.len() > MAX_PARAHORIC_SIZE {
                return Err(Error::InfiniteParabolic(gens));
            }
            frontier = next;
            len += 1;
        }
        let longest = elements.last().cloned().expect("W_K contains the identity");
        ctx.sort_elements(&mut elements);

        Ok(Parahoric {
            ctx: ctx.id(),
            gens,
            elements,
            lengths,
            longest,
        })
    }

    /// Generator indices of `K`, ascending.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains_gen(&self, i: usize) -> bool {
        self.gens.binary_search(&i).is_ok()
    }

    /// Elements of `W_K`, sorted by length and reduced word.
    pub fn elements(&self) -> &[Elt] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &Elt) -> bool {
        self.lengths.contains_key(x)
    }

    /// Length of an element of `W_K` (equal to its length in `W̃`).
    pub fn length_of(&self, x: &Elt) -> Option<u32> {
        self.lengths.get(x).copied()
    }

    /// The longest element of `W_K`.
    pub fn longest(&self) -> &Elt {
        &self.longest
    }

    fn check(&self, ctx: &GroupCtx, w: &Elt) -> Result<()> {
        if self.ctx != ctx.id() {
            return Err(Error::ContextMismatch);
        }
        ctx.check(w)
    }

    fn left_descent_in(&self, ctx: &GroupCtx, w: &Elt, gens: &[usize]) -> Option<usize> {
        gens.iter().copied().find(|&i| ctx.is_left_descent(i, w))
    }

    fn right_descent_in(&self, ctx: &GroupCtx, w: &Elt, gens: &[usize]) -> Option<usize> {
        gens.iter().copied().find(|&i| ctx.is_right_descent(w, i))
    }

    /// `w ∈ ^K W̃`.
    pub fn is_min_left(&self, ctx: &GroupCtx, w: &Elt) -> bool {
        self.left_descent_in(ctx, w, &self.gens).is_none()
    }

    /// `w ∈ W̃^K`.
    pub fn is_min_right(&self, ctx: &GroupCtx, w: &Elt) -> bool {
        self.right_descent_in(ctx, w, &self.gens).is_none()
    }

    /// `^K w`: the minimal element of `W_K w`.
    pub fn min_in_left_coset(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        self.check(ctx, w)?;
        Ok(self.min_left(ctx, w))
    }

    pub(crate) fn min_left(&self, ctx: &GroupCtx, w: &Elt) -> Elt {
        let mut x = w.clone();
        while let Some(i) = self.left_descent_in(ctx, &x, &self.gens) {
            x = ctx.mul(&ctx.gen(i), &x);
        }
        x
    }

    /// `w^K`: the minimal element of `w W_K`.
    pub fn min_in_right_coset(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        self.check(ctx, w)?;
        Ok(self.min_right(ctx, w))
    }

    pub(crate) fn min_right(&self, ctx: &GroupCtx, w: &Elt) -> Elt {
        let mut x = w.clone();
        while let Some(i) = self.right_descent_in(ctx, &x, &self.gens) {
            x = ctx.mul(&x, &ctx.gen(i));
        }
        x
    }

    /// `w ∈ ^K W̃^K`.
    pub fn is_min_double_rep(&self, ctx: &GroupCtx, w: &Elt) -> Result<bool> {
        self.check(ctx, w)?;
        Ok(self.is_min_left(ctx, w) && self.is_min_right(ctx, w))
    }

    /// The minimal element of `W_K w W_K`.
    pub fn min_double_rep(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        self.check(ctx, w)?;
        Ok(self.min_double(ctx, w))
    }

    pub(crate) fn min_double(&self, ctx: &GroupCtx, w: &Elt) -> Elt {
        let mut x = w.clone();
        loop {
            if let Some(i) = self.left_descent_in(ctx, &x, &self.gens) {
                x = ctx.mul(&ctx.gen(i), &x);
            } else if let Some(i) = self.right_descent_in(ctx, &x, &self.gens) {
                x = ctx.mul(&x, &ctx.gen(i));
            } else {
                return x;
            }
        }
    }

    /// The double coset `W_K w W_K`, sorted.
    pub fn double_coset(&self, ctx: &GroupCtx, w: &Elt) -> Result<Vec<Elt>> {
        self.check(ctx, w)?;
        let set: BTreeSet<Elt> = self
            .elements
            .iter()
            .flat_map(|a| {
                let aw = ctx.mul(a, w);
                self.elements.iter().map(move |b| ctx.mul(&aw, b))
            })
            .collect();
        let mut out: Vec<Elt> = set.into_iter().collect();
        ctx.sort_elements(&mut out);
        Ok(out)
    }

    fn require_double_rep(&self, ctx: &GroupCtx, w: &Elt) -> Result<()> {
        if self.is_min_double_rep(ctx, w)? {
            Ok(())
        } else {
            Err(Error::InvalidRepresentative(ctx.format(w)))
        }
    }

    /// `J_w = {s ∈ K : w s w⁻¹ ∈ K}` for `w ∈ ^K W̃^K`.
    pub fn type_jw(&self, ctx: &GroupCtx, w: &Elt) -> Result<Vec<usize>> {
        self.require_double_rep(ctx, w)?;
        let w_inv = ctx.inv(w);
        Ok(self
            .gens
            .iter()
            .copied()
            .filter(|&i| {
                let c = ctx.mul(&ctx.mul(w, &ctx.gen(i)), &w_inv);
                self.gens.iter().any(|&j| ctx.gen(j) == c)
            })
            .collect())
    }

    /// `^J W_K`: minimal representatives of `W_J \ W_K`, sorted.
    pub fn jw_min_reps(&self, ctx: &GroupCtx, j: &[usize]) -> Result<Vec<Elt>> {
        if let Some(&i) = j.iter().find(|&&i| !self.contains_gen(i)) {
            return Err(Error::NotMember(format!("s{i} is not a generator of W_K")));
        }
        Ok(self
            .elements
            .iter()
            .filter(|x| self.left_descent_in(ctx, x, j).is_none())
            .cloned()
            .collect())
    }

    /// `^K w_K = w x_0` with `x_0` the longest element of `^{J_w} W_K`.
    pub fn max_section_rep(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        let jw = self.type_jw(ctx, w)?;
        let reps = self.jw_min_reps(ctx, &jw)?;
        let x0 = reps.last().expect("identity is always a representative");
        Ok(ctx.mul(w, x0))
    }

    /// `^K w_K` as the longest of `{^K(wv) : v ∈ W_K}`, by enumeration.
    pub fn max_section_rep_exhaustive(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        self.require_double_rep(ctx, w)?;
        Ok(self
            .elements
            .iter()
            .map(|v| self.min_left(ctx, &ctx.mul(w, v)))
            .max_by_key(|x| (ctx.length_by_descents(x), std::cmp::Reverse(ctx.sort_key(x))))
            .expect("W_K is nonempty"))
    }

    /// `_K w^K` as the longest of `{(vw)^K : v ∈ W_K}`.
    pub fn max_right_section_rep(&self, ctx: &GroupCtx, w: &Elt) -> Result<Elt> {
        self.require_double_rep(ctx, w)?;
        Ok(self
            .elements
            .iter()
            .map(|v| self.min_right(ctx, &ctx.mul(v, w)))
            .max_by_key(|x| (ctx.length_by_descents(x), std::cmp::Reverse(ctx.sort_key(x))))
            .expect("W_K is nonempty"))
    }

    /// `ℓ(_K w^K) = ℓ(^K w_K)`.
    pub fn length_lemma_check(&self, ctx: &GroupCtx, w: &Elt) -> Result<bool> {
        let a = self.max_section_rep(ctx, w)?;
        let b = self.max_right_section_rep(ctx, w)?;
        Ok(ctx.length_by_descents(&a) == ctx.length_by_descents(&b))
    }

    /// `W_K w W_K ∩ ^K W̃ = w · ^{J_w} W_K`, sorted.
    pub fn fiber(&self, ctx: &GroupCtx, w: &Elt) -> Result<Vec<Elt>> {
        let jw = self.type_jw(ctx, w)?;
        let mut out: Vec<Elt> = self
            .jw_min_reps(ctx, &jw)?
            .iter()
            .map(|x| ctx.mul(w, x))
            .collect();
        ctx.sort_elements(&mut out);
        Ok(out)
    }
}
