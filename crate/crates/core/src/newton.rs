//! Newton points, σ-straight elements and the poset `B(G, {μ})`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::admissible::AdmissibleSet;
use crate::affweyl::{pair, Elt, GroupCtx};
use crate::error::{Error, Result};
use crate::parabolic::Parahoric;

/// A dominant rational coweight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonPoint(pub Vec<Rational64>);

impl NewtonPoint {
    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A σ-conjugacy class, determined by its Newton point and Kottwitz image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BClass {
    pub nu: NewtonPoint,
    pub kappa: i64,
    pub basic: bool,
}

/// `ν(w)`: the dominant representative of `λ/m`, where `t^λ` is the first
/// twisted power `w σ(w) ⋯ σ^{m-1}(w)` that is a translation with `σ^m = 1`.
pub fn newton_point(ctx: &GroupCtx, w: &Elt) -> NewtonPoint {
    let order = ctx.sigma_order();
    let mut power = w.clone();
    let mut twisted = w.clone();
    let mut m = 1usize;
    loop {
        if m.is_multiple_of(order) {
            if let Some(lambda) = ctx.translation_part(&power) {
                let scaled: Vec<Rational64> = lambda
                    .0
                    .iter()
                    .map(|&x| Rational64::new(x, m as i64))
                    .collect();
                return NewtonPoint(ctx.dominant(&scaled));
            }
        }
        twisted = ctx.sigma_apply(&twisted);
        power = ctx.mul(&power, &twisted);
        m += 1;
    }
}

pub fn is_basic(ctx: &GroupCtx, nu: &NewtonPoint) -> bool {
    ctx.model()
        .simple_roots()
        .iter()
        .all(|a| pair(a, &nu.0).is_zero())
}

pub fn newton_class(ctx: &GroupCtx, w: &Elt) -> BClass {
    let nu = newton_point(ctx, w);
    BClass {
        basic: is_basic(ctx, &nu),
        nu,
        kappa: w.omega(),
    }
}

/// `⟨ν(w), 2ρ⟩`.
pub fn two_rho_pairing(ctx: &GroupCtx, w: &Elt) -> Rational64 {
    pair(&ctx.two_rho(), &newton_point(ctx, w).0)
}

/// `ℓ(w) = ⟨ν(w), 2ρ⟩`.
pub fn is_sigma_straight(ctx: &GroupCtx, w: &Elt) -> bool {
    Rational64::from_integer(ctx.length_by_descents(w) as i64) == two_rho_pairing(ctx, w)
}

/// Dimension of the central leaf attached to a σ-straight element: `ℓ(x)`.
pub fn leaf_dimension(ctx: &GroupCtx, x: &Elt) -> Result<u32> {
    if !is_sigma_straight(ctx, x) {
        return Err(Error::NotStraight(ctx.format(x)));
    }
    Ok(ctx.length_by_descents(x))
}

/// A class of `B(G, {μ})` with a σ-straight representative in `^K Adm({μ})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonClassEntry {
    pub class: BClass,
    pub straight_rep: Elt,
}

/// `B(G, {μ})`, enumerated through the σ-straight admissible elements and
/// sorted from the basic class upward.
pub fn b_set(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Result<Vec<NewtonClassEntry>> {
    let mut classes: BTreeMap<BClass, Option<Elt>> = BTreeMap::new();
    for x in adm.elements() {
        if !is_sigma_straight(ctx, x) {
            continue;
        }
        let rep = classes.entry(newton_class(ctx, x)).or_default();
        if rep.is_none() && k.is_min_left(ctx, x) {
            *rep = Some(x.clone());
        }
    }
    let mut out = classes
        .into_iter()
        .map(|(class, rep)| {
            let straight_rep = rep.ok_or_else(|| {
                Error::Internal(format!(
                    "Newton class {} has no σ-straight representative in ^K Adm",
                    class.nu
                ))
            })?;
            Ok(NewtonClassEntry {
                class,
                straight_rep,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|e| {
        (
            ctx.length_by_descents(&e.straight_rep),
            ctx.sort_key(&e.straight_rep),
        )
    });
    Ok(out)
}

/// Coefficients of `v` in the basis of simple coroots, if `v` lies in
/// their rational span.
pub fn coroot_coefficients(ctx: &GroupCtx, v: &[Rational64]) -> Option<Vec<Rational64>> {
    let coroots = ctx.model().simple_coroots();
    let rows = v.len();
    let cols = coroots.len();
    let mut m: Vec<Vec<Rational64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational64> = coroots
                .iter()
                .map(|c| Rational64::from_integer(c[r]))
                .collect();
            row.push(v[r]);
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut coeffs = vec![Rational64::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        coeffs[c] = m[i][cols];
    }
    Some(coeffs)
}

/// `ν_2 - ν_1` in the simple coroot basis, if it lies in the span.
pub fn difference_coefficients(
    ctx: &GroupCtx,
    lower: &NewtonPoint,
    upper: &NewtonPoint,
) -> Option<Vec<Rational64>> {
    let diff: Vec<Rational64> = upper.0.iter().zip(&lower.0).map(|(a, b)| a - b).collect();
    coroot_coefficients(ctx, &diff)
}

/// `[b_1] ≤ [b_2]`: equal κ and `ν_2 - ν_1` a nonnegative sum of simple coroots.
pub fn b_leq(ctx: &GroupCtx, b1: &BClass, b2: &BClass) -> bool {
    b1.kappa == b2.kappa
        && difference_coefficients(ctx, &b1.nu, &b2.nu)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
}

/// Per-class evidence for the Hodge-Newton check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnClassReport {
    pub class: BClass,
    /// `μ_dom - ν` in the simple coroot basis.
    pub coefficients: Vec<Rational64>,
    pub has_zero_coefficient: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnReport {
    pub decomposable: bool,
    pub classes: Vec<HnClassReport>,
}

/// Fully Hodge-Newton decomposability test: every non-basic class must have
/// a σ-orbit of simple coroots on which `μ_dom - ν` has zero coefficients.
///
/// Dominant Newton points are fixed by the σ-actions supported here, so the
/// orbits are single coroots.
pub fn fully_hn_decomposable(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Result<HnReport> {
    let mu: Vec<Rational64> = adm
        .mu()
        .0
        .iter()
        .map(|&x| Rational64::from_integer(x))
        .collect();
    let mu = NewtonPoint(ctx.dominant(&mu));
    let mut classes = Vec::new();
    for entry in b_set(ctx, adm, k)? {
        if entry.class.basic {
            continue;
        }
        let coefficients = difference_coefficients(ctx, &entry.class.nu, &mu)
            .ok_or_else(|| Error::Internal("μ - ν is not in the coroot span".into()))?;
        classes.push(HnClassReport {
            has_zero_coefficient: coefficients.iter().any(|c| c.is_zero()),
            class: entry.class,
            coefficients,
        });
    }
    Ok(HnReport {
        decomposable: classes.iter().all(|c| c.has_zero_coefficient),
        classes,
    })
}
