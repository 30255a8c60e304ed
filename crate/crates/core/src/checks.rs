//! Structural property checks run by `selfcheck` at every genus.

use std::collections::{BTreeMap, BTreeSet};

use crate::admissible::{
    admissible_set, admissible_set_by_ball, ekor_set, ekor_set_via_closure, kr_set, ordinary_section,
};
use crate::affweyl::{Coweight, Elt, GroupCtx};
use crate::error::Result;
use crate::newton::{b_leq, b_set, is_sigma_straight, newton_class, newton_point};
use crate::orders::{ekor_poset, OrderKind};
use crate::parabolic::Parahoric;
use crate::siegel::{level_to_parahoric, SiegelLevel};
use crate::zip::{eo_poset_in_fiber, ordinary_and_superspecial, zip_datum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Every nonempty `J ⊆ {0, ..., g}`, in lexicographic order.
pub fn all_levels(g: usize) -> Vec<SiegelLevel> {
    let mut out: Vec<SiegelLevel> = (1u32..(1 << (g + 1)))
        .map(|mask| {
            SiegelLevel::new(g, (0..=g).filter(|i| mask & (1 << i) != 0))
                .expect("mask is nonempty and in range")
        })
        .collect();
    out.sort_by(|a, b| a.indices().cmp(b.indices()));
    out
}

/// `ℓ(w σ(w) ⋯ σ^{m-1}(w)) = m ℓ(w)` for `m` up to `bound`.
pub fn straight_by_powers(ctx: &GroupCtx, w: &Elt, bound: usize) -> bool {
    let l = ctx.length_by_descents(w);
    let mut power = w.clone();
    let mut twisted = w.clone();
    for m in 2..=bound {
        twisted = ctx.sigma_apply(&twisted);
        power = ctx.mul(&power, &twisted);
        if ctx.length_by_descents(&power) != m as u32 * l {
            return false;
        }
    }
    true
}

pub fn property_suite(ctx: &GroupCtx) -> Result<Vec<Check>> {
    let g = ctx.num_generators() - 1;
    let mu = Coweight(ctx.model().default_mu());
    let adm = admissible_set(ctx, &mu)?;
    let mut out = Vec::new();

    let by_ball = admissible_set_by_ball(ctx, &mu)?;
    out.push(Check::new(
        "adm: subword closure equals ball filter",
        adm.elements() == by_ball.elements(),
        format!("{} vs {} elements", adm.len(), by_ball.len()),
    ));
    let max_dim = adm
        .elements()
        .iter()
        .map(|x| ctx.length_by_descents(x))
        .max()
        .unwrap_or(0);
    out.push(Check::new(
        "adm: maximal dimension is g(g+1)/2",
        max_dim as usize == g * (g + 1) / 2,
        format!("max length {max_dim}"),
    ));
    out.push(Check::new(
        "adm: constant Kottwitz component",
        adm.elements().iter().all(|x| x.omega() == adm.kappa()),
        "",
    ));

    for level in all_levels(g) {
        let k = level_to_parahoric(ctx, &level)?;
        out.extend(level_suite(ctx, &adm, &k, &level.to_string())?);
    }
    out.extend(newton_suite(ctx, &adm)?);
    Ok(out)
}

fn level_suite(
    ctx: &GroupCtx,
    adm: &crate::admissible::AdmissibleSet,
    k: &Parahoric,
    name: &str,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ekor = ekor_set(ctx, adm, k);
    out.push(Check::new(
        format!("level {name}: Adm ∩ ^K W = Adm^K ∩ ^K W"),
        ekor == ekor_set_via_closure(ctx, adm, k)?,
        "",
    ));

    let mut lemma_ok = true;
    for w in ctx.ball_elements(adm.kappa()) {
        if k.is_min_double_rep(ctx, &w)? && !k.length_lemma_check(ctx, &w)? {
            lemma_ok = false;
        }
    }
    out.push(Check::new(
        format!("level {name}: length lemma on double coset representatives in the ball"),
        lemma_ok,
        "",
    ));

    let poset = ekor_poset(ctx, adm, k, OrderKind::KSigma);
    let fibers_ok = kr_set(ctx, adm, k).iter().all(|w| zip_datum(ctx, adm, k, w).is_ok());
    out.push(Check::new(
        format!("level {name}: fiber w·^(J_w)W_K = W_K w W_K ∩ ^K W"),
        fibers_ok,
        "",
    ));

    let poset = match poset {
        Ok(p) => {
            out.push(Check::new(format!("level {name}: ≤_(K,σ) is a partial order"), true, ""));
            p
        }
        Err(e) => {
            out.push(Check::new(
                format!("level {name}: ≤_(K,σ) is a partial order"),
                false,
                e.to_string(),
            ));
            return Ok(out);
        }
    };
    let tau = ctx.tau_power(adm.kappa());
    out.push(Check::new(
        format!("level {name}: unique minimum is tau"),
        poset.minimal_elements() == vec![tau],
        "",
    ));
    let max: BTreeSet<Elt> = poset.maximal_elements().into_iter().collect();
    let translations: BTreeSet<Elt> = adm
        .maximals()
        .iter()
        .filter(|t| k.is_min_left(ctx, t))
        .cloned()
        .collect();
    out.push(Check::new(
        format!("level {name}: maximal elements are the translations in ^K W"),
        max == translations,
        "",
    ));
    let n = poset.len();
    let refines = (0..n).all(|i| {
        (0..n).all(|j| {
            let (a, b) = (&poset.nodes()[i].elt, &poset.nodes()[j].elt);
            !ctx.bruhat_leq_unchecked(a, b) || poset.leq(i, j)
        })
    });
    out.push(Check::new(
        format!("level {name}: Bruhat implies ≤_(K,σ)"),
        refines,
        "",
    ));

    let mut fiber_orders_ok = true;
    for w in kr_set(ctx, adm, k) {
        let z = zip_datum(ctx, adm, k, &w)?;
        let p = eo_poset_in_fiber(ctx, k, &z)?;
        for (i, a) in z.fiber.iter().enumerate() {
            for (j, b) in z.fiber.iter().enumerate() {
                let (gi, gj) = (poset.index_of(a), poset.index_of(b));
                if gi.zip(gj).map(|(x, y)| poset.leq(x, y)) != Some(p.leq(i, j)) {
                    fiber_orders_ok = false;
                }
            }
        }
        let ends = ordinary_and_superspecial(&p)?;
        if ends != (ordinary_section(ctx, adm, k, &w)?, w.clone()) {
            fiber_orders_ok = false;
        }
    }
    out.push(Check::new(
        format!("level {name}: fiber orders agree with ≤_(K,σ) and the two sections"),
        fiber_orders_ok,
        "",
    ));

    let iwahori = Parahoric::new(ctx, [])?;
    let all_classes = b_set(ctx, adm, &iwahori)?.len();
    let here = b_set(ctx, adm, k);
    out.push(Check::new(
        format!("level {name}: every Newton class has a σ-straight representative in ^K Adm"),
        here.as_ref().map(|v| v.len() == all_classes).unwrap_or(false),
        here.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    Ok(out)
}

fn newton_suite(ctx: &GroupCtx, adm: &crate::admissible::AdmissibleSet) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let iwahori = Parahoric::new(ctx, [])?;
    let classes = b_set(ctx, adm, &iwahori)?;
    let basic: Vec<_> = classes.iter().filter(|c| c.class.basic).collect();
    out.push(Check::new(
        "newton: unique basic class, below every class",
        basic.len() == 1 && classes.iter().all(|c| b_leq(ctx, &basic[0].class, &c.class)),
        "",
    ));
    let mu = newton_class(ctx, &adm.maximals()[0]);
    out.push(Check::new(
        "newton: every class satisfies κ = κ(μ) and ν ≤ μ",
        classes.iter().all(|c| b_leq(ctx, &c.class, &mu)),
        "",
    ));

    let bound = 2 * ctx.num_generators();
    let mut formula_matches = true;
    let mut some_fails = false;
    for x in adm.elements() {
        let formula = is_sigma_straight(ctx, x);
        if formula != straight_by_powers(ctx, x, bound) {
            formula_matches = false;
        }
        some_fails |= !formula;
    }
    out.push(Check::new(
        "newton: ℓ(x) = ⟨ν(x), 2ρ⟩ exactly on σ-straight admissible elements",
        formula_matches,
        "",
    ));
    out.push(Check::new(
        "newton: ℓ(x) = ⟨ν(x), 2ρ⟩ fails on some admissible element",
        some_fails,
        "",
    ));

    let invariant = adm.elements().iter().all(|x| {
        (0..ctx.num_generators()).all(|i| {
            let s = ctx.gen(i);
            let y = ctx.mul(&ctx.mul(&s, x), &ctx.inv(&ctx.sigma_apply(&s)));
            newton_point(ctx, &y) == newton_point(ctx, x) && y.omega() == x.omega()
        })
    });
    out.push(Check::new(
        "newton: (ν, κ) invariant under σ-conjugation",
        invariant,
        "",
    ));

    let mut by_class: BTreeMap<Vec<String>, BTreeSet<Option<u32>>> = BTreeMap::new();
    for x in adm.elements() {
        let nu = newton_point(ctx, x).0.iter().map(|q| q.to_string()).collect();
        by_class
            .entry(nu)
            .or_default()
            .insert(ctx.model().p_rank(x.canonical()));
    }
    out.push(Check::new(
        "newton: p-rank is constant on Newton classes of Adm",
        by_class.values().all(|s| s.len() == 1),
        "",
    ));
    Ok(out)
}
