//! Weyl-group shadow of the algebraic zip datum attached to a KR type, and
//! the orbit order inside the corresponding EKOR fiber.

use crate::admissible::{kr_fiber, AdmissibleSet};
use crate::affweyl::{Elt, GroupCtx};
use crate::error::{Error, Result};
use crate::orders::{parabolic_subgroup, Node, Poset};
use crate::parabolic::Parahoric;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZipDatum {
    /// The KR type (minimal double coset representative).
    pub w: Elt,
    pub jw: Vec<usize>,
    /// Image of `J_w` under `σ' = σ ∘ Ad(w)`, sorted.
    pub sigma_prime_jw: Vec<usize>,
    /// `w · ^{J_w} W_K`, sorted.
    pub fiber: Vec<Elt>,
}

fn generator_index(ctx: &GroupCtx, k: &Parahoric, x: &Elt) -> Option<usize> {
    k.gens().iter().copied().find(|&i| ctx.gen(i) == *x)
}

/// `σ'(u) = σ(w u w⁻¹)`.
fn sigma_prime(ctx: &GroupCtx, w: &Elt, u: &Elt) -> Elt {
    ctx.sigma_apply(&ctx.conjugate(w, u))
}

pub fn zip_datum(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, w: &Elt) -> Result<ZipDatum> {
    let fiber = kr_fiber(ctx, adm, k, w)?;
    let jw = k.type_jw(ctx, w)?;
    let mut sigma_prime_jw = jw
        .iter()
        .map(|&i| {
            generator_index(ctx, k, &sigma_prime(ctx, w, &ctx.gen(i))).ok_or_else(|| {
                Error::Internal(format!("σ'(s{i}) is not a simple reflection of W_K"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    sigma_prime_jw.sort_unstable();

    let mut oracle: Vec<Elt> = k
        .double_coset(ctx, w)?
        .into_iter()
        .filter(|x| k.is_min_left(ctx, x))
        .collect();
    ctx.sort_elements(&mut oracle);
    if oracle != fiber {
        return Err(Error::Internal(format!(
            "fiber over {} differs from W_K w W_K ∩ ^K W̃",
            ctx.format(w)
        )));
    }

    Ok(ZipDatum {
        w: w.clone(),
        jw,
        sigma_prime_jw,
        fiber,
    })
}

/// Orbit order on the fiber: `w v' ⪯ w v` iff some `u ∈ W_{J_w}` has
/// `w u v' σ'(u)⁻¹ ≤ w v`, closed under transitivity. Nodes carry `ℓ(x)`.
pub fn eo_poset_in_fiber(ctx: &GroupCtx, k: &Parahoric, z: &ZipDatum) -> Result<Poset> {
    let w_inv = ctx.inv(&z.w);
    let coords: Vec<Elt> = z.fiber.iter().map(|x| ctx.mul(&w_inv, x)).collect();
    let w_j = parabolic_subgroup(ctx, k, &z.jw);
    let twisted: Vec<(Elt, Elt)> = w_j
        .iter()
        .map(|u| (ctx.mul(&z.w, u), ctx.inv(&sigma_prime(ctx, &z.w, u))))
        .collect();
    let rel = coords
        .iter()
        .map(|a| {
            z.fiber
                .iter()
                .map(|b| {
                    twisted.iter().any(|(wu, s_inv)| {
                        ctx.bruhat_leq_unchecked(&ctx.product([wu, a, s_inv]), b)
                    })
                })
                .collect()
        })
        .collect();
    let nodes = z
        .fiber
        .iter()
        .map(|x| Node::new(ctx, x.clone(), ctx.length_by_descents(x)))
        .collect();
    Poset::from_generating_relation(nodes, rel)
}

/// `(maximum, minimum)` of the fiber poset: the ordinary and superspecial
/// EKOR strata of the KR stratum.
pub fn ordinary_and_superspecial(p: &Poset) -> Result<(Elt, Elt)> {
    let max = p.maximal_elements();
    let min = p.minimal_elements();
    match (max.as_slice(), min.as_slice()) {
        ([hi], [lo]) => Ok((hi.clone(), lo.clone())),
        _ => Err(Error::Internal(format!(
            "fiber poset has {} maximal and {} minimal elements",
            max.len(),
            min.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::{admissible_set, kr_set, ordinary_section};
    use crate::affweyl::Coweight;
    use crate::orders::{ekor_poset, OrderKind};
    use crate::siegel::{gsp_context, level_to_parahoric, SiegelLevel};

    fn setup(level: &str) -> (GroupCtx, AdmissibleSet, Parahoric) {
        let ctx = gsp_context(2).unwrap();
        let adm = admissible_set(&ctx, &Coweight(vec![1, 1, 0, 0])).unwrap();
        let k = level_to_parahoric(&ctx, &SiegelLevel::parse(2, level).unwrap()).unwrap();
        (ctx, adm, k)
    }

    #[test]
    fn klingen_tau() {
        let (ctx, adm, k) = setup("0,1");
        let z = zip_datum(&ctx, &adm, &k, &ctx.tau()).unwrap();
        assert!(z.jw.is_empty());
        assert_eq!(z.fiber, vec![ctx.tau(), ctx.parse("s0 tau").unwrap()]);
        let p = eo_poset_in_fiber(&ctx, &k, &z).unwrap();
        assert_eq!(p.covers(), &[(0, 1)]);
        assert_eq!(p.nodes()[1].dim, 1);
        let (hi, lo) = ordinary_and_superspecial(&p).unwrap();
        assert_eq!((hi, lo), (ctx.parse("s0 tau").unwrap(), ctx.tau()));
    }

    #[test]
    fn hyperspecial_tau() {
        let (ctx, adm, k) = setup("0");
        let z = zip_datum(&ctx, &adm, &k, &ctx.tau()).unwrap();
        assert_eq!(z.jw, vec![1]);
        assert_eq!(z.sigma_prime_jw, vec![1]);
        assert_eq!(z.fiber.len(), 4);
        let p = eo_poset_in_fiber(&ctx, &k, &z).unwrap();
        assert_eq!(p.covers().len(), 3);
        let dims: Vec<u32> = p.nodes().iter().map(|n| n.dim).collect();
        assert_eq!(dims, vec![0, 1, 2, 3]);
    }

    #[test]
    fn siegel_s02() {
        let (ctx, adm, k) = setup("0,2");
        let w = ctx.parse("s0 s2 tau").unwrap();
        let z = zip_datum(&ctx, &adm, &k, &w).unwrap();
        let p = eo_poset_in_fiber(&ctx, &k, &z).unwrap();
        let (hi, lo) = ordinary_and_superspecial(&p).unwrap();
        assert_eq!(ctx.format(&hi), "s0 s2 s1 tau");
        assert_eq!(lo, w);
    }

    #[test]
    fn iwahori_singletons() {
        let (ctx, adm, k) = setup("0,1,2");
        for w in kr_set(&ctx, &adm, &k) {
            let z = zip_datum(&ctx, &adm, &k, &w).unwrap();
            assert!(z.jw.is_empty());
            assert_eq!(z.fiber, vec![w.clone()]);
            let p = eo_poset_in_fiber(&ctx, &k, &z).unwrap();
            assert_eq!(ordinary_and_superspecial(&p).unwrap(), (w.clone(), w));
        }
    }

    #[test]
    fn fiber_order_matches_global_order() {
        for level in ["0", "1", "0,1", "0,2", "0,1,2"] {
            let (ctx, adm, k) = setup(level);
            let global = ekor_poset(&ctx, &adm, &k, OrderKind::KSigma).unwrap();
            for w in kr_set(&ctx, &adm, &k) {
                let z = zip_datum(&ctx, &adm, &k, &w).unwrap();
                let p = eo_poset_in_fiber(&ctx, &k, &z).unwrap();
                for (i, a) in z.fiber.iter().enumerate() {
                    for (j, b) in z.fiber.iter().enumerate() {
                        let gi = global.index_of(a).unwrap();
                        let gj = global.index_of(b).unwrap();
                        assert_eq!(p.leq(i, j), global.leq(gi, gj), "level {level}");
                    }
                }
                let (hi, lo) = ordinary_and_superspecial(&p).unwrap();
                assert_eq!(hi, ordinary_section(&ctx, &adm, &k, &w).unwrap());
                assert_eq!(lo, w);
                for &(i, j) in p.covers() {
                    assert!(p.nodes()[i].dim < p.nodes()[j].dim);
                }
            }
        }
    }
}
