//! Admissible sets and the EKOR / KR index sets attached to a parahoric.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::affweyl::{Coweight, Elt, GroupCtx};
use crate::error::{Error, Result};
use crate::newton::{newton_class, BClass};
use crate::parabolic::Parahoric;

/// `Adm({μ})`: elements below some translation `t^{μ'}`, `μ'` in `W_0 μ`.
#[derive(Debug, Clone)]
pub struct AdmissibleSet {
    mu: Coweight,
    kappa: i64,
    elements: Vec<Elt>,
    maximals: Vec<Elt>,
    index: HashSet<Elt>,
}

impl AdmissibleSet {
    pub fn mu(&self) -> &Coweight {
        &self.mu
    }

    /// Common Ω-component of all elements.
    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    /// Elements sorted by length and reduced word.
    pub fn elements(&self) -> &[Elt] {
        &self.elements
    }

    /// The translations `t^{μ'}`, sorted.
    pub fn maximals(&self) -> &[Elt] {
        &self.maximals
    }

    pub fn contains(&self, x: &Elt) -> bool {
        self.index.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn maximal_translations(ctx: &GroupCtx, mu: &Coweight) -> Result<Vec<Elt>> {
    if !ctx.is_dominant(mu) {
        return Err(Error::NotDominant(mu.0.clone()));
    }
    let mut maximals = ctx
        .w0_orbit(mu)
        .iter()
        .map(|m| ctx.translation(m))
        .collect::<Result<Vec<_>>>()?;
    for t in &maximals {
        ctx.length(t)?;
    }
    ctx.sort_elements(&mut maximals);
    Ok(maximals)
}

fn build(ctx: &GroupCtx, mu: &Coweight, maximals: Vec<Elt>, set: BTreeSet<Elt>) -> AdmissibleSet {
    let mut elements: Vec<Elt> = set.into_iter().collect();
    ctx.sort_elements(&mut elements);
    AdmissibleSet {
        mu: mu.clone(),
        kappa: maximals[0].omega(),
        index: elements.iter().cloned().collect(),
        elements,
        maximals,
    }
}

/// `Adm({μ})` by expanding every subword of a reduced word of each `t^{μ'}`.
pub fn admissible_set(ctx: &GroupCtx, mu: &Coweight) -> Result<AdmissibleSet> {
    let maximals = maximal_translations(ctx, mu)?;
    let mut set = BTreeSet::new();
    for t in &maximals {
        let word = ctx.reduced_word(t)?;
        let tau = ctx.tau_power(word.omega);
        let mut partial = vec![ctx.identity()];
        for &i in &word.letters {
            let s = ctx.gen(i);
            let extended: Vec<Elt> = partial.iter().map(|p| ctx.mul(p, &s)).collect();
            partial.extend(extended);
            partial.sort();
            partial.dedup();
        }
        set.extend(partial.iter().map(|p| ctx.mul(p, &tau)));
    }
    Ok(build(ctx, mu, maximals, set))
}

/// `Adm({μ})` by filtering the ball with the Bruhat order.
pub fn admissible_set_by_ball(ctx: &GroupCtx, mu: &Coweight) -> Result<AdmissibleSet> {
    let maximals = maximal_translations(ctx, mu)?;
    let set = ctx
        .ball_elements(maximals[0].omega())
        .into_iter()
        .filter(|x| maximals.iter().any(|t| ctx.bruhat_leq_unchecked(x, t)))
        .collect();
    Ok(build(ctx, mu, maximals, set))
}

/// `^K Adm({μ}) = Adm({μ}) ∩ ^K W̃`.
pub fn ekor_set(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Vec<Elt> {
    adm.elements()
        .iter()
        .filter(|x| k.is_min_left(ctx, x))
        .cloned()
        .collect()
}

/// `Adm({μ})^K ∩ ^K W̃`, with `Adm({μ})^K = W_K Adm({μ}) W_K` enumerated
/// one double coset at a time.
pub fn ekor_set_via_closure(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Result<Vec<Elt>> {
    let reps: BTreeSet<Elt> = adm.elements().iter().map(|x| k.min_double(ctx, x)).collect();
    let mut out = BTreeSet::new();
    for w in &reps {
        out.extend(
            k.double_coset(ctx, w)?
                .into_iter()
                .filter(|x| k.is_min_left(ctx, x)),
        );
    }
    let mut out: Vec<Elt> = out.into_iter().collect();
    ctx.sort_elements(&mut out);
    Ok(out)
}

/// `Adm({μ})_K` as minimal double coset representatives, sorted.
pub fn kr_set(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Vec<Elt> {
    let set: BTreeSet<Elt> = adm.elements().iter().map(|x| k.min_double(ctx, x)).collect();
    let mut out: Vec<Elt> = set.into_iter().collect();
    ctx.sort_elements(&mut out);
    out
}

fn require_kr(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, w: &Elt) -> Result<()> {
    ctx.check(w)?;
    if k.is_min_double_rep(ctx, w)? && adm.contains(w) {
        Ok(())
    } else {
        Err(Error::NotMember(format!(
            "{} is not a KR type of the admissible set",
            ctx.format(w)
        )))
    }
}

/// `W_K w W_K ∩ Adm({μ})`, sorted.
pub fn kr_members(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, w: &Elt) -> Result<Vec<Elt>> {
    require_kr(ctx, adm, k, w)?;
    Ok(adm
        .elements()
        .iter()
        .filter(|x| k.min_double(ctx, x) == *w)
        .cloned()
        .collect())
}

/// Projection `^K Adm({μ}) → Adm({μ})_K`.
pub fn ekor_to_kr(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, x: &Elt) -> Result<Elt> {
    ctx.check(x)?;
    if !adm.contains(x) || !k.is_min_left(ctx, x) {
        return Err(Error::NotMember(format!(
            "{} is not an EKOR index",
            ctx.format(x)
        )));
    }
    Ok(k.min_double(ctx, x))
}

/// EKOR indices over the KR type `w`: `w · ^{J_w} W_K`.
pub fn kr_fiber(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, w: &Elt) -> Result<Vec<Elt>> {
    require_kr(ctx, adm, k, w)?;
    k.fiber(ctx, w)
}

/// `w ↦ ^K w_K`: the open dense EKOR stratum of the KR stratum `w`.
pub fn ordinary_section(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, w: &Elt) -> Result<Elt> {
    require_kr(ctx, adm, k, w)?;
    k.max_section_rep(ctx, w)
}

/// `w ↦ x_w`: the closed EKOR stratum of the KR stratum `w`.
pub fn superspecial_section(
    ctx: &GroupCtx,
    adm: &AdmissibleSet,
    k: &Parahoric,
    w: &Elt,
) -> Result<Elt> {
    require_kr(ctx, adm, k, w)?;
    Ok(w.clone())
}

/// One EKOR stratum with its numerical invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRecord {
    pub elt: Elt,
    pub dim: u32,
    pub p_rank: Option<u32>,
    pub kr_type: Elt,
    pub sigma_straight: bool,
    /// Newton class `(ν(x), κ(x))` of the index element.
    pub newton: BClass,
}

/// One KR stratum: its type, the admissible elements it contains and the
/// EKOR strata it is made of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrRecord {
    pub rep: Elt,
    pub dim: u32,
    pub members: Vec<Elt>,
    pub ekor: Vec<Elt>,
    pub ordinary: Elt,
    pub superspecial: Elt,
}

pub fn decorate(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Vec<StratumRecord> {
    ekor_set(ctx, adm, k)
        .into_iter()
        .map(|x| {
            let newton = newton_class(ctx, &x);
            StratumRecord {
                dim: ctx.length_by_descents(&x),
                p_rank: ctx.model().p_rank(x.canonical()),
                kr_type: k.min_double(ctx, &x),
                sigma_straight: crate::newton::is_sigma_straight(ctx, &x),
                newton,
                elt: x,
            }
        })
        .collect()
}

pub fn decorate_kr(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Result<Vec<KrRecord>> {
    let mut members: BTreeMap<Elt, Vec<Elt>> = BTreeMap::new();
    for x in adm.elements() {
        members.entry(k.min_double(ctx, x)).or_default().push(x.clone());
    }
    kr_set(ctx, adm, k)
        .into_iter()
        .map(|w| {
            let ordinary = k.max_section_rep(ctx, &w)?;
            Ok(KrRecord {
                dim: ctx.length_by_descents(&ordinary),
                members: members.remove(&w).unwrap_or_default(),
                ekor: k.fiber(ctx, &w)?,
                ordinary,
                superspecial: w.clone(),
                rep: w,
            })
        })
        .collect()
}
