//! Extended affine Weyl groups `W̃ = W_a ⋊ Ω` over an arbitrary [`Model`].
//!
//! A [`GroupCtx`] materializes the ball of radius `length_cap` in the affine
//! Weyl group `W_a` by breadth-first search over the simple reflections. The
//! ball is the source of truth for lengths and reduced words; descents are
//! read off the model's canonical form and cross-checked against the ball in
//! the tests.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::model::Model;

static NEXT_CTX_ID: AtomicU64 = AtomicU64::new(1);

/// The Frobenius action on `W̃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    /// Split groups.
    Identity,
    /// Conjugation by `τ^k`; permutes the affine simple reflections.
    OmegaConjugation(i64),
}

/// One element of `W̃` in the model's canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt {
    ctx: u64,
    canonical: Vec<i64>,
    omega: i64,
}

impl Elt {
    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    /// Ω-component: the Kottwitz image of the element.
    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn context_id(&self) -> u64 {
        self.ctx
    }
}

impl fmt::Debug for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.canonical)
    }
}

/// A cocharacter in the model's lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// A reduced word `s_{a_1} ... s_{a_k} τ^omega`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<usize>,
    pub omega: i64,
}

impl Word {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        match self.omega {
            0 => {}
            1 => parts.push("tau".into()),
            k => parts.push(format!("tau^{k}")),
        }
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub struct GroupCtx {
    id: u64,
    model: Arc<dyn Model>,
    sigma: Sigma,
    sigma_perm: Vec<usize>,
    length_cap: u32,
    gens: Vec<Vec<i64>>,
    tau: Vec<i64>,
    tau_inv: Vec<i64>,
    ball: HashMap<Vec<i64>, u32>,
}

impl fmt::Debug for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupCtx")
            .field("model", &self.model.name())
            .field("sigma", &self.sigma)
            .field("length_cap", &self.length_cap)
            .field("ball_size", &self.ball.len())
            .finish()
    }
}

impl GroupCtx {
    pub fn new(model: Arc<dyn Model>, sigma: Sigma, length_cap: u32) -> Result<Self> {
        let n = model.num_generators();
        let gens: Vec<Vec<i64>> = (0..n).map(|i| model.generator(i)).collect();
        let id = model.identity();
        for (i, s) in gens.iter().enumerate() {
            model.validate(s)?;
            if model.compose(s, s) != id {
                return Err(Error::InvalidElement(format!("generator s_{i} is not an involution")));
            }
        }
        let tau = model.omega_generator();
        let tau_inv = model.inverse(&tau);
        let sigma_perm = match sigma {
            Sigma::Identity => (0..n).collect(),
            Sigma::OmegaConjugation(k) => {
                let t = pow(model.as_ref(), &tau, &tau_inv, k);
                let t_inv = model.inverse(&t);
                gens.iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let c = model.compose(&model.compose(&t, s), &t_inv);
                        gens.iter().position(|x| *x == c).ok_or_else(|| {
                            Error::InvalidSigma(format!("τ^{k} s_{i} τ^-{k} is not simple"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };

        let mut ball = HashMap::new();
        ball.insert(id.clone(), 0u32);
        let mut frontier = vec![id];
        for len in 0..length_cap {
            let mut next = Vec::new();
            for x in &frontier {
                for s in &gens {
                    let y = model.compose(s, x);
                    if !ball.contains_key(&y) {
                        ball.insert(y.clone(), len + 1);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }

        Ok(GroupCtx {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            model,
            sigma,
            sigma_perm,
            length_cap,
            gens,
            tau,
            tau_inv,
            ball,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn model(&self) -> &dyn Model {
        self.model.as_ref()
    }

    pub fn sigma(&self) -> Sigma {
        self.sigma
    }

    /// Action of σ on the indices of the affine simple reflections.
    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma_perm
    }

    pub fn length_cap(&self) -> u32 {
        self.length_cap
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Number of affine Weyl group elements in the materialized ball.
    pub fn ball_size(&self) -> usize {
        self.ball.len()
    }

    fn wrap(&self, canonical: Vec<i64>) -> Elt {
        let omega = self.model.kottwitz(&canonical);
        Elt {
            ctx: self.id,
            canonical,
            omega,
        }
    }

    pub fn check(&self, a: &Elt) -> Result<()> {
        if a.ctx == self.id {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn element(&self, canonical: Vec<i64>) -> Result<Elt> {
        self.model.validate(&canonical)?;
        Ok(self.wrap(canonical))
    }

    pub fn identity(&self) -> Elt {
        self.wrap(self.model.identity())
    }

    pub fn generator(&self, i: usize) -> Result<Elt> {
        self.gens
            .get(i)
            .map(|s| self.wrap(s.clone()))
            .ok_or(Error::GeneratorOutOfRange {
                index: i,
                count: self.gens.len(),
            })
    }

    pub(crate) fn gen(&self, i: usize) -> Elt {
        self.wrap(self.gens[i].clone())
    }

    /// The length-zero generator of Ω.
    pub fn tau(&self) -> Elt {
        self.wrap(self.tau.clone())
    }

    pub fn tau_power(&self, k: i64) -> Elt {
        self.wrap(pow(self.model.as_ref(), &self.tau, &self.tau_inv, k))
    }

    /// `a ∘ b` without the context check.
    pub fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        debug_assert!(a.ctx == self.id && b.ctx == self.id);
        Elt {
            ctx: self.id,
            canonical: self.model.compose(&a.canonical, &b.canonical),
            omega: a.omega + b.omega,
        }
    }

    pub fn inv(&self, a: &Elt) -> Elt {
        Elt {
            ctx: self.id,
            canonical: self.model.inverse(&a.canonical),
            omega: -a.omega,
        }
    }

    /// `a ∘ b`: `b` is applied first.
    pub fn multiply(&self, a: &Elt, b: &Elt) -> Result<Elt> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn invert(&self, a: &Elt) -> Result<Elt> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Elt>) -> Elt {
        factors
            .into_iter()
            .fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    pub fn conjugate(&self, y: &Elt, x: &Elt) -> Elt {
        self.mul(&self.mul(y, x), &self.inv(y))
    }

    pub fn kappa(&self, a: &Elt) -> i64 {
        a.omega
    }

    /// The `W_a`-part `a τ^{-ω(a)}`, in canonical form.
    fn affine_part(&self, a: &Elt) -> Vec<i64> {
        if a.omega == 0 {
            return a.canonical.clone();
        }
        let t = pow(self.model.as_ref(), &self.tau, &self.tau_inv, -a.omega);
        self.model.compose(&a.canonical, &t)
    }

    fn ball_length(&self, aff: &[i64]) -> Option<u32> {
        self.ball.get(aff).copied()
    }

    /// Whether `a` lies in the materialized ball.
    pub fn in_ball(&self, a: &Elt) -> bool {
        self.ball.contains_key(&self.affine_part(a))
    }

    pub fn length(&self, a: &Elt) -> Result<u32> {
        self.check(a)?;
        self.ball_length(&self.affine_part(a))
            .ok_or(Error::CapExceeded {
                cap: self.length_cap,
            })
    }

    /// `ℓ(s_i a) < ℓ(a)`.
    pub fn is_left_descent(&self, i: usize, a: &Elt) -> bool {
        let inv = self.model.inverse(&a.canonical);
        self.model.is_right_descent(&inv, i)
    }

    /// `ℓ(a s_i) < ℓ(a)`.
    pub fn is_right_descent(&self, a: &Elt, i: usize) -> bool {
        self.model.is_right_descent(&a.canonical, i)
    }

    pub fn left_descents(&self, a: &Elt) -> Vec<usize> {
        let inv = self.model.inverse(&a.canonical);
        (0..self.gens.len())
            .filter(|&i| self.model.is_right_descent(&inv, i))
            .collect()
    }

    /// Length obtained by stripping left descents; independent of the ball.
    pub fn length_by_descents(&self, a: &Elt) -> u32 {
        self.word_by_descents(a).letters.len() as u32
    }

    /// The lexicographically least reduced word of `a`.
    pub fn reduced_word(&self, a: &Elt) -> Result<Word> {
        self.check(a)?;
        let mut x = self.affine_part(a);
        let mut len = self.ball_length(&x).ok_or(Error::CapExceeded {
            cap: self.length_cap,
        })?;
        let mut letters = Vec::with_capacity(len as usize);
        while len > 0 {
            let (i, y) = self
                .gens
                .iter()
                .enumerate()
                .map(|(i, s)| (i, self.model.compose(s, &x)))
                .find(|(_, y)| self.ball_length(y) == Some(len - 1))
                .ok_or_else(|| Error::Internal("ball has no descent path".into()))?;
            letters.push(i);
            x = y;
            len -= 1;
        }
        Ok(Word {
            letters,
            omega: a.omega,
        })
    }

    pub fn from_word(&self, word: &Word) -> Result<Elt> {
        let mut x = self.identity();
        for &i in &word.letters {
            x = self.mul(&x, &self.generator(i)?);
        }
        Ok(self.mul(&x, &self.tau_power(word.omega)))
    }

    /// Lexicographically least reduced word, found by repeatedly stripping
    /// the smallest left descent. Works for elements outside the ball.
    pub fn word_by_descents(&self, a: &Elt) -> Word {
        let mut x = a.clone();
        let mut letters = Vec::new();
        while let Some(&i) = self.left_descents(&x).first() {
            x = self.mul(&self.gen(i), &x);
            letters.push(i);
        }
        Word {
            letters,
            omega: a.omega,
        }
    }

    /// Sort key `(length, reduced word, Ω-part)` used for every ordered output.
    pub fn sort_key(&self, a: &Elt) -> (usize, Vec<usize>, i64) {
        let w = self.word_by_descents(a);
        (w.letters.len(), w.letters, w.omega)
    }

    pub fn sort_elements(&self, elts: &mut Vec<Elt>) {
        let mut keyed: Vec<_> = elts.drain(..).map(|e| (self.sort_key(&e), e)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        elts.extend(keyed.into_iter().map(|(_, e)| e));
    }

    /// Word notation such as `"s0 s1 tau"`.
    pub fn format(&self, a: &Elt) -> String {
        self.word_by_descents(a).to_string()
    }

    /// Parses `"s0 s1 s0 tau"`, `"s010 tau"`, `"tau^2"` or `"e"`.
    pub fn parse(&self, input: &str) -> Result<Elt> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let n = self.gens.len();
        let mut x = self.identity();
        let mut seen = false;
        for tok in input.split_whitespace() {
            seen = true;
            if tok == "e" {
                continue;
            }
            if let Some(rest) = tok.strip_prefix("tau") {
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|p| p.parse::<i64>().ok())
                        .ok_or_else(|| err("bad tau exponent"))?
                };
                x = self.mul(&x, &self.tau_power(k));
                continue;
            }
            let digits = tok
                .strip_prefix('s')
                .ok_or_else(|| err("expected sN, tau or e"))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected digits after s"));
            }
            let letters: Vec<usize> = if digits.len() > 1 && n <= 10 {
                digits.bytes().map(|b| (b - b'0') as usize).collect()
            } else {
                vec![digits.parse().map_err(|_| err("bad generator index"))?]
            };
            for i in letters {
                if i >= n {
                    return Err(err("generator index out of range"));
                }
                x = self.mul(&x, &self.gen(i));
            }
        }
        if !seen {
            return Err(err("empty element"));
        }
        Ok(x)
    }

    /// Bruhat order: equal Ω-parts and comparable `W_a`-parts.
    ///
    /// Uses the descent recursion: for a left descent `s` of `b`,
    /// `a ≤ b` iff `sa ≤ sb` (when `s` is a descent of `a`) or `a ≤ sb`.
    pub fn bruhat_leq(&self, a: &Elt, b: &Elt) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        if !self.in_ball(b) {
            return Err(Error::CapExceeded {
                cap: self.length_cap,
            });
        }
        Ok(self.bruhat_leq_unchecked(a, b))
    }

    pub(crate) fn bruhat_leq_unchecked(&self, a: &Elt, b: &Elt) -> bool {
        if a.omega != b.omega {
            return false;
        }
        let mut x = a.clone();
        let mut y = b.clone();
        loop {
            let Some(&s) = self.left_descents(&y).first() else {
                return x == y;
            };
            let gs = self.gen(s);
            if self.is_left_descent(s, &x) {
                x = self.mul(&gs, &x);
            }
            y = self.mul(&gs, &y);
        }
    }

    pub fn translation(&self, lambda: &Coweight) -> Result<Elt> {
        self.model.check_coweight(&lambda.0)?;
        Ok(self.wrap(self.model.translation(&lambda.0)))
    }

    pub fn translation_part(&self, a: &Elt) -> Option<Coweight> {
        self.model.translation_part(&a.canonical).map(Coweight)
    }

    /// The length-zero element with the same Kottwitz image as `t^μ`.
    pub fn tau_element(&self, mu: &Coweight) -> Result<Elt> {
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.0.clone()));
        }
        let t = self.translation(mu)?;
        Ok(self.tau_power(t.omega))
    }

    pub fn sigma_apply(&self, a: &Elt) -> Elt {
        match self.sigma {
            Sigma::Identity => a.clone(),
            Sigma::OmegaConjugation(k) => self.conjugate(&self.tau_power(k), a),
        }
    }

    /// Smallest `m ≥ 1` with `σ^m = id`.
    pub fn sigma_order(&self) -> usize {
        let n = self.sigma_perm.len();
        let mut p: Vec<usize> = (0..n).collect();
        for m in 1.. {
            p = p.iter().map(|&i| self.sigma_perm[i]).collect();
            if p.iter().enumerate().all(|(i, &j)| i == j) {
                return m;
            }
        }
        unreachable!()
    }

    /// All ball elements with Ω-component `omega`, i.e. `W_a τ^omega ∩ ball`.
    pub fn ball_elements(&self, omega: i64) -> Vec<Elt> {
        let t = self.tau_power(omega);
        self.ball
            .keys()
            .map(|x| self.mul(&self.wrap(x.clone()), &t))
            .collect()
    }

    /// Sum of the positive roots, as a functional.
    pub fn two_rho(&self) -> Vec<i64> {
        let r = self.model.lattice_rank();
        self.model
            .positive_roots()
            .iter()
            .fold(vec![0; r], |mut acc, root| {
                acc.iter_mut().zip(root).for_each(|(a, b)| *a += b);
                acc
            })
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        self.model
            .simple_roots()
            .iter()
            .all(|a| a.iter().zip(&mu.0).map(|(x, y)| x * y).sum::<i64>() >= 0)
    }

    /// Dominant representative of the `W_0`-orbit, by sorting with simple
    /// reflections.
    pub fn dominant(&self, v: &[Rational64]) -> Vec<Rational64> {
        let roots = self.model.simple_roots();
        let mut v = v.to_vec();
        loop {
            let bad = roots.iter().position(|a| pair(a, &v) < Rational64::zero());
            match bad {
                Some(k) => self.model.reflect_coweight(k, &mut v),
                None => return v,
            }
        }
    }

    /// The `W_0`-orbit of an integral coweight, sorted.
    pub fn w0_orbit(&self, mu: &Coweight) -> Vec<Coweight> {
        let start: Vec<Rational64> = mu.0.iter().map(|&x| Rational64::from_integer(x)).collect();
        let mut seen = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for k in 0..self.model.finite_rank() {
                let mut w = v.clone();
                self.model.reflect_coweight(k, &mut w);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut orbit: Vec<Coweight> = seen
            .into_iter()
            .map(|v| Coweight(v.iter().map(|x| x.to_integer()).collect()))
            .collect();
        orbit.sort();
        orbit
    }
}

pub(crate) fn pair(functional: &[i64], v: &[Rational64]) -> Rational64 {
    functional
        .iter()
        .zip(v)
        .map(|(&a, &b)| b * a)
        .fold(Rational64::zero(), |acc, x| acc + x)
}

fn pow(model: &dyn Model, t: &[i64], t_inv: &[i64], k: i64) -> Vec<i64> {
    let base = if k >= 0 { t } else { t_inv };
    let mut x = model.identity();
    for _ in 0..k.unsigned_abs() {
        x = model.compose(&x, base);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::siegel::{gsp_context, gsp_context_with};

    fn ctx() -> GroupCtx {
        gsp_context(2).unwrap()
    }

    #[test]
    fn tau_s2_equals_s0_tau() {
        let c = ctx();
        let lhs = c.mul(&c.tau(), &c.gen(2));
        let rhs = c.mul(&c.gen(0), &c.tau());
        assert_eq!(lhs, rhs);
        assert_eq!(c.mul(&c.tau(), &c.gen(0)), c.mul(&c.gen(2), &c.tau()));
        assert_eq!(c.mul(&c.tau(), &c.gen(1)), c.mul(&c.gen(1), &c.tau()));
    }

    #[test]
    fn identity_and_involutions() {
        let c = ctx();
        let x = c.parse("s0 s1 tau").unwrap();
        assert_eq!(c.mul(&c.identity(), &x), x);
        assert_eq!(c.mul(&c.gen(0), &c.gen(0)), c.identity());
        assert_eq!(c.mul(&c.inv(&c.tau()), &c.tau()), c.identity());
        for i in 0..3 {
            assert_eq!(c.inv(&c.gen(i)), c.gen(i));
        }
    }

    #[test]
    fn inverse_of_translation() {
        let c = ctx();
        let t = c.translation(&Coweight(vec![1, 1, 0, 0])).unwrap();
        let t_neg = c.translation(&Coweight(vec![-1, -1, 0, 0])).unwrap();
        assert_eq!(c.inv(&t), t_neg);
    }

    #[test]
    fn lengths() {
        let c = ctx();
        assert_eq!(c.length(&c.tau()).unwrap(), 0);
        assert_eq!(c.length(&c.gen(1)).unwrap(), 1);
        assert_eq!(c.length(&c.parse("s0 s1 s0 tau").unwrap()).unwrap(), 3);
        let t = c.translation(&Coweight(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(c.length(&t).unwrap(), 3);
        assert_eq!(t.omega(), 1);
    }

    #[test]
    fn cap_exceeded() {
        let c = gsp_context_with(2, Sigma::Identity, 2).unwrap();
        let x = c.parse("s0 s1 s0").unwrap();
        assert_eq!(c.length(&x), Err(Error::CapExceeded { cap: 2 }));
        assert!(c.reduced_word(&x).is_err());
        assert!(c.bruhat_leq(&c.identity(), &x).is_err());
    }

    #[test]
    fn context_mismatch() {
        let a = ctx();
        let b = ctx();
        assert_eq!(a.multiply(&a.tau(), &b.tau()), Err(Error::ContextMismatch));
        assert_eq!(a.length(&b.tau()), Err(Error::ContextMismatch));
    }

    #[test]
    fn reduced_words() {
        let c = ctx();
        assert_eq!(c.reduced_word(&c.tau()).unwrap().to_string(), "tau");
        assert_eq!(c.reduced_word(&c.identity()).unwrap().to_string(), "e");
        let x = c.parse("s0 s1 s0 tau").unwrap();
        let w = c.reduced_word(&x).unwrap();
        assert_eq!(w.letters, vec![0, 1, 0]);
        assert_eq!(w.omega, 1);
        // s2 s0 = s0 s2: lexicographically least wins.
        assert_eq!(c.format(&c.parse("s2 s0").unwrap()), "s0 s2");
        assert_eq!(c.parse("s010 tau").unwrap(), x);
    }

    #[test]
    fn parse_errors() {
        let c = ctx();
        assert!(c.parse("").is_err());
        assert!(c.parse("s3").is_err());
        assert!(c.parse("x1").is_err());
        assert!(c.parse("tau^x").is_err());
        assert_eq!(c.parse("tau^2").unwrap(), c.mul(&c.tau(), &c.tau()));
        assert_eq!(c.parse("tau^-1").unwrap(), c.inv(&c.tau()));
    }

    #[test]
    fn bruhat_examples() {
        let c = ctx();
        let p = |s: &str| c.parse(s).unwrap();
        assert!(c.bruhat_leq(&p("tau"), &p("s0 tau")).unwrap());
        assert!(!c.bruhat_leq(&p("s0 tau"), &p("s1 tau")).unwrap());
        assert!(c.bruhat_leq(&p("s0 s2 tau"), &p("s0 s2 s1 tau")).unwrap());
        assert!(!c.bruhat_leq(&p("s0"), &p("s0 tau")).unwrap());
    }

    #[test]
    fn translation_examples() {
        let c = ctx();
        assert_eq!(c.translation(&Coweight(vec![0; 4])).unwrap(), c.identity());
        assert_eq!(
            c.translation(&Coweight(vec![1, 1, 1, 1])).unwrap(),
            c.tau_power(2)
        );
        assert!(c.translation(&Coweight(vec![1, 0, 0, 0])).is_err());
    }

    #[test]
    fn tau_element_examples() {
        let c = ctx();
        let mu = Coweight(vec![1, 1, 0, 0]);
        let tau = c.tau_element(&mu).unwrap();
        assert_eq!(tau.canonical(), &[3, 4, 5, 6]);
        assert_eq!(c.kappa(&tau), c.kappa(&c.translation(&mu).unwrap()));
        assert_eq!(c.tau_element(&Coweight(vec![0; 4])).unwrap(), c.identity());
        assert!(c.tau_element(&Coweight(vec![0, 0, 1, 1])).is_err());
    }

    #[test]
    fn sigma_actions() {
        let c = ctx();
        let x = c.parse("s0 s1 tau").unwrap();
        assert_eq!(c.sigma_apply(&x), x);
        assert_eq!(c.sigma_order(), 1);

        let t = gsp_context_with(2, Sigma::OmegaConjugation(1), 5).unwrap();
        assert_eq!(t.sigma_perm(), &[2, 1, 0]);
        for i in 0..3 {
            assert_eq!(t.sigma_apply(&t.gen(i)), t.gen(t.sigma_perm()[i]));
        }
        let x = t.parse("s0 s1 tau").unwrap();
        assert_eq!(t.sigma_apply(&t.sigma_apply(&x)), x);
        assert_eq!(t.sigma_order(), 2);
    }

    #[test]
    fn descents_match_ball() {
        for g in 2..=3 {
            let c = gsp_context(g).unwrap();
            for e in c.ball_elements(0).into_iter().chain(c.ball_elements(1)) {
                let len = c.length(&e).unwrap();
                assert_eq!(c.length_by_descents(&e), len);
                assert_eq!(c.word_by_descents(&e), c.reduced_word(&e).unwrap());
                for i in 0..c.num_generators() {
                    let y = c.mul(&c.gen(i), &e);
                    if let Ok(ly) = c.length(&y) {
                        assert_eq!(c.is_left_descent(i, &e), ly < len);
                    }
                    let z = c.mul(&e, &c.gen(i));
                    if let Ok(lz) = c.length(&z) {
                        assert_eq!(c.is_right_descent(&e, i), lz < len);
                    }
                }
            }
        }
    }

    #[test]
    fn dominant_and_orbit() {
        let c = ctx();
        let q = |v: &[i64]| v.iter().map(|&x| Rational64::from_integer(x)).collect::<Vec<_>>();
        assert_eq!(c.dominant(&q(&[0, 1, 0, 1])), q(&[1, 1, 0, 0]));
        let orbit = c.w0_orbit(&Coweight(vec![1, 1, 0, 0]));
        assert_eq!(orbit.len(), 4);
        assert_eq!(c.two_rho(), vec![3, 0, -2, -1]);
    }
}
