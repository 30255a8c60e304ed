//! Finite posets on group elements: the Bruhat order on KR types, the
//! order `≤_{K,σ}` on EKOR indices and twisted orders on `^J W`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::admissible::{ekor_set, kr_set, AdmissibleSet};
use crate::affweyl::{Elt, GroupCtx};
use crate::error::{Error, Result};
use crate::parabolic::Parahoric;

/// How node labels render elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    #[default]
    Word,
    Window,
}

/// Which order to put on EKOR indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderKind {
    #[default]
    KSigma,
    Bruhat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    #[serde(skip)]
    pub elt: Elt,
    pub word: String,
    pub window: Vec<i64>,
    pub length: u32,
    pub p_rank: Option<u32>,
    pub kappa: i64,
    pub dim: u32,
}

impl Node {
    pub fn new(ctx: &GroupCtx, elt: Elt, dim: u32) -> Self {
        Node {
            word: ctx.format(&elt),
            window: elt.canonical().to_vec(),
            length: ctx.length_by_descents(&elt),
            p_rank: ctx.model().p_rank(elt.canonical()),
            kappa: elt.omega(),
            dim,
            elt,
        }
    }

    pub fn label(&self, notation: Notation) -> String {
        match notation {
            Notation::Word => self.word.clone(),
            Notation::Window => format!("{:?}", self.window),
        }
    }
}

/// A finite poset with its full order relation and Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    nodes: Vec<Node>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from a relation that must already be a partial order.
    pub fn new(nodes: Vec<Node>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = nodes.len();
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::Internal(format!("relation not reflexive at {}", nodes[i].word)));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Internal(format!(
                        "relation not antisymmetric: {} and {}",
                        nodes[i].word, nodes[j].word
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::Internal(format!(
                            "relation not transitive through {}",
                            nodes[j].word
                        )));
                    }
                }
            }
        }
        let covers = transitive_reduction(&leq);
        Ok(Poset { nodes, leq, covers })
    }

    /// Builds a poset from the reflexive-transitive closure of `rel`.
    pub fn from_generating_relation(nodes: Vec<Node>, mut rel: Vec<Vec<bool>>) -> Result<Self> {
        let n = nodes.len();
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for k in 0..n {
            let through = rel[k].clone();
            for row in rel.iter_mut().filter(|row| row[k]) {
                for (x, &y) in row.iter_mut().zip(&through) {
                    *x |= y;
                }
            }
        }
        Poset::new(nodes, rel)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Hasse edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, x: &Elt) -> Option<usize> {
        self.nodes.iter().position(|n| n.elt == *x)
    }

    /// Cover edges as pairs of word labels.
    pub fn cover_words(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(i, j)| (self.nodes[i].word.clone(), self.nodes[j].word.clone()))
            .collect();
        out.sort();
        out
    }

    pub fn maximal_elements(&self) -> Vec<Elt> {
        let n = self.len();
        (0..n)
            .filter(|&i| (0..n).all(|j| j == i || !self.leq[i][j]))
            .map(|i| self.nodes[i].elt.clone())
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<Elt> {
        let n = self.len();
        (0..n)
            .filter(|&i| (0..n).all(|j| j == i || !self.leq[j][i]))
            .map(|i| self.nodes[i].elt.clone())
            .collect()
    }

    /// Graphviz digraph with edges from smaller to larger elements.
    pub fn to_dot(&self, name: &str, notation: Notation) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\\ndim {}\"];", n.label(notation), n.dim).unwrap();
        }
        for &(i, j) in &self.covers {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes,
            "covers": self.covers.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut v = self.to_json_value();
        v["schema_version"] = serde_json::json!(1);
        serde_json::to_string_pretty(&v).expect("poset serializes")
    }
}

fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let between = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !between {
                covers.push((i, j));
            }
        }
    }
    covers
}

fn relation(elts: &[Elt], f: impl Fn(&Elt, &Elt) -> bool) -> Vec<Vec<bool>> {
    elts.iter()
        .map(|a| elts.iter().map(|b| f(a, b)).collect())
        .collect()
}

/// Bruhat order on a set of elements, with dimension labels.
pub fn bruhat_poset_on(ctx: &GroupCtx, elts: &[Elt], dims: &[u32]) -> Result<Poset> {
    let nodes = elts
        .iter()
        .zip(dims)
        .map(|(x, &d)| Node::new(ctx, x.clone(), d))
        .collect();
    Poset::new(nodes, relation(elts, |a, b| ctx.bruhat_leq_unchecked(a, b)))
}

/// Bruhat order on `Adm({μ})_K` via minimal representatives; nodes carry the
/// KR dimension `ℓ(^K w_K)`.
pub fn bruhat_poset(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric) -> Result<Poset> {
    let reps = kr_set(ctx, adm, k);
    let dims = reps
        .iter()
        .map(|w| Ok(ctx.length_by_descents(&k.max_section_rep(ctx, w)?)))
        .collect::<Result<Vec<_>>>()?;
    bruhat_poset_on(ctx, &reps, &dims)
}

/// `x_1 ≤_{K,σ} x_2`: some `y ∈ W_K` has `y x_1 σ(y)⁻¹ ≤ x_2`.
pub fn ksigma_leq(ctx: &GroupCtx, k: &Parahoric, x1: &Elt, x2: &Elt) -> Result<bool> {
    for x in [x1, x2] {
        ctx.check(x)?;
        if !k.is_min_left(ctx, x) {
            return Err(Error::NotMember(format!(
                "{} is not a minimal left coset representative",
                ctx.format(x)
            )));
        }
    }
    Ok(ksigma_leq_unchecked(ctx, k, x1, x2))
}

fn ksigma_leq_unchecked(ctx: &GroupCtx, k: &Parahoric, x1: &Elt, x2: &Elt) -> bool {
    if x1.omega() != x2.omega() {
        return false;
    }
    k.elements().iter().any(|y| {
        let z = ctx.mul(&ctx.mul(y, x1), &ctx.inv(&ctx.sigma_apply(y)));
        ctx.bruhat_leq_unchecked(&z, x2)
    })
}

/// The closure order on `^K Adm({μ})`; nodes carry `dim = ℓ(x)`.
pub fn ekor_poset(ctx: &GroupCtx, adm: &AdmissibleSet, k: &Parahoric, order: OrderKind) -> Result<Poset> {
    let elts = ekor_set(ctx, adm, k);
    let nodes = elts
        .iter()
        .map(|x| Node::new(ctx, x.clone(), ctx.length_by_descents(x)))
        .collect();
    let rel = match order {
        OrderKind::KSigma => relation(&elts, |a, b| ksigma_leq_unchecked(ctx, k, a, b)),
        OrderKind::Bruhat => relation(&elts, |a, b| ctx.bruhat_leq_unchecked(a, b)),
    };
    Poset::new(nodes, rel)
}

/// Applies a permutation of generator indices letter by letter.
pub fn twist_element(ctx: &GroupCtx, x: &Elt, twist: &dyn Fn(usize) -> usize) -> Elt {
    let word = ctx.word_by_descents(x);
    let mut out = ctx.identity();
    for i in word.letters {
        out = ctx.mul(&out, &ctx.gen(twist(i)));
    }
    ctx.mul(&out, &ctx.tau_power(word.omega))
}

/// Elements of `W_J` for `J` a subset of the generators of `W_K`.
pub fn parabolic_subgroup(ctx: &GroupCtx, k: &Parahoric, j: &[usize]) -> Vec<Elt> {
    k.elements()
        .iter()
        .filter(|x| ctx.word_by_descents(x).letters.iter().all(|i| j.contains(i)))
        .cloned()
        .collect()
}

/// The order `⪯` on `^J W` for the finite Weyl group `W = W_K` with
/// Frobenius `twist` (a permutation of the generators of `W_K`):
/// `w' ⪯ w` iff some `y ∈ W_J` has `y w' x σ(y)⁻¹ x⁻¹ ≤ w`, where `x` is
/// the minimal element of `W_{K'} ω_0 W_{σ(J)}` and `K' = ω_0 σ(J) ω_0⁻¹`.
///
/// Nodes carry the orbit dimension `dim P + ℓ(w)`, with `P` the standard
/// parabolic of type `J` in the reductive group whose Weyl group is `W`.
pub fn zip_order(
    ctx: &GroupCtx,
    w: &Parahoric,
    j: &[usize],
    twist: &dyn Fn(usize) -> usize,
) -> Result<Poset> {
    for &i in j {
        if !w.contains_gen(i) || !w.contains_gen(twist(i)) {
            return Err(Error::NotMember(format!("s{i} is not a generator of W")));
        }
    }
    let w0 = w.longest().clone();
    let w0_inv = ctx.inv(&w0);
    let sigma_j: Vec<usize> = j.iter().map(|&i| twist(i)).collect();
    let k_prime: Vec<usize> = sigma_j
        .iter()
        .map(|&i| {
            let c = ctx.mul(&ctx.mul(&w0, &ctx.gen(i)), &w0_inv);
            w.gens()
                .iter()
                .copied()
                .find(|&g| ctx.gen(g) == c)
                .ok_or_else(|| Error::Internal("ω_0 does not normalize the simple reflections".into()))
        })
        .collect::<Result<_>>()?;

    let mut x = w0.clone();
    loop {
        if let Some(&i) = k_prime.iter().find(|&&i| ctx.is_left_descent(i, &x)) {
            x = ctx.mul(&ctx.gen(i), &x);
        } else if let Some(&i) = sigma_j.iter().find(|&&i| ctx.is_right_descent(&x, i)) {
            x = ctx.mul(&x, &ctx.gen(i));
        } else {
            break;
        }
    }
    let x_inv = ctx.inv(&x);

    let reps = w.jw_min_reps(ctx, j)?;
    let w_j = parabolic_subgroup(ctx, w, j);
    let longest_j = w_j
        .iter()
        .map(|y| ctx.length_by_descents(y))
        .max()
        .unwrap_or(0);
    let dim_p = ctx.model().torus_rank() as u32 + ctx.length_by_descents(&w0) + longest_j;

    let nodes = reps
        .iter()
        .map(|v| Node::new(ctx, v.clone(), dim_p + ctx.length_by_descents(v)))
        .collect();
    let rel = relation(&reps, |a, b| {
        w_j.iter().any(|y| {
            let sy_inv = ctx.inv(&twist_element(ctx, y, twist));
            let z = ctx.product([y, a, &x, &sy_inv, &x_inv]);
            ctx.bruhat_leq_unchecked(&z, b)
        })
    });
    Poset::new(nodes, rel)
}
