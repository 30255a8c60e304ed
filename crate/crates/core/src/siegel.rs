//! `GSp(2g)` realized as affine similitude permutations of the integers.
//!
//! An element is stored by its window `(x(1), ..., x(2g))`; it extends to a
//! bijection of `Z` through `x(i + 2g) = x(i) + 2g` and satisfies
//! `x(i) + x(2g + 1 - i) = 2g + 1 + 2g·c` for a single integer `c`, the
//! Kottwitz component. A pair (translation `λ`, permutation `w`) corresponds
//! to the window `x(i) = w(i) + 2g·λ_i`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;

use crate::affweyl::{GroupCtx, Sigma};
use crate::error::{Error, Result};
use crate::model::Model;
use crate::parabolic::Parahoric;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffSimPerm {
    window: Vec<i64>,
}

impl AffSimPerm {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        check_window(&window)?;
        Ok(AffSimPerm { window })
    }

    pub fn identity(g: usize) -> Self {
        AffSimPerm {
            window: (1..=2 * g as i64).collect(),
        }
    }

    /// Builds `x(i) = w(i) + 2g·λ_i` from a translation vector and a
    /// permutation of `1..=2g` given in one-line notation.
    pub fn from_translation_and_perm(lambda: &[i64], perm: &[i64]) -> Result<Self> {
        if lambda.len() != perm.len() {
            return Err(Error::InvalidElement(format!(
                "translation {lambda:?} and permutation {perm:?} differ in length"
            )));
        }
        let n = perm.len() as i64;
        let window = perm.iter().zip(lambda).map(|(&w, &l)| w + n * l).collect();
        Self::new(window)
    }

    pub fn genus(&self) -> usize {
        self.window.len() / 2
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn into_window(self) -> Vec<i64> {
        self.window
    }

    pub fn eval(&self, i: i64) -> i64 {
        eval(&self.window, i)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffSimPerm) -> AffSimPerm {
        AffSimPerm {
            window: compose(&self.window, &other.window),
        }
    }

    pub fn inverse(&self) -> AffSimPerm {
        AffSimPerm {
            window: inverse(&self.window),
        }
    }

    pub fn kappa(&self) -> i64 {
        kappa(&self.window)
    }

    pub fn p_rank(&self) -> u32 {
        p_rank(&self.window)
    }
}

impl fmt::Debug for AffSimPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

fn eval(window: &[i64], i: i64) -> i64 {
    let n = window.len() as i64;
    let r = (i - 1).rem_euclid(n) + 1;
    window[(r - 1) as usize] + (i - r)
}

fn compose(a: &[i64], b: &[i64]) -> Vec<i64> {
    b.iter().map(|&j| eval(a, j)).collect()
}

fn inverse(a: &[i64]) -> Vec<i64> {
    let n = a.len() as i64;
    let mut inv = vec![0; a.len()];
    for (idx, &j) in a.iter().enumerate() {
        let r = (j - 1).rem_euclid(n) + 1;
        inv[(r - 1) as usize] = idx as i64 + 1 - (j - r);
    }
    inv
}

fn check_window(window: &[i64]) -> Result<()> {
    let n = window.len() as i64;
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidElement(format!(
            "window {window:?} must have even positive length"
        )));
    }
    let residues: BTreeSet<i64> = window.iter().map(|x| x.rem_euclid(n)).collect();
    if residues.len() != window.len() {
        return Err(Error::InvalidElement(format!(
            "window {window:?} is not a bijection modulo {n}"
        )));
    }
    let total = window[0] + window[window.len() - 1];
    let symmetric = (0..window.len()).all(|i| window[i] + window[window.len() - 1 - i] == total);
    if !symmetric || (total - (n + 1)).rem_euclid(n) != 0 {
        return Err(Error::InvalidElement(format!(
            "window {window:?} violates the similitude condition"
        )));
    }
    Ok(())
}

/// Kottwitz component: the integer `c` in `x(i) + x(2g+1-i) = 2g+1 + 2g·c`.
pub fn kappa(window: &[i64]) -> i64 {
    let n = window.len() as i64;
    (window[0] + window[window.len() - 1] - (n + 1)) / n
}

/// Number of fixed points `x(i) = i` in one period.
///
/// Only meaningful on admissible elements, where it recovers the p-rank of the
/// corresponding stratum.
pub fn p_rank(window: &[i64]) -> u32 {
    window
        .iter()
        .enumerate()
        .filter(|(i, &x)| x == *i as i64 + 1)
        .count() as u32
}

/// The model provider for `GSp(2g)` with the Siegel cocharacter
/// `μ = (1^g, 0^g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GspModel {
    g: usize,
}

impl GspModel {
    pub fn new(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidLevel("genus must be at least 1".into()));
        }
        Ok(GspModel { g })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    fn n(&self) -> usize {
        2 * self.g
    }

    fn swap_pairs(&self, k: usize) -> Vec<(usize, usize)> {
        let (g, n) = (self.g, self.n());
        if k == g {
            vec![(g, g + 1)]
        } else {
            vec![(k, k + 1), (n - k, n + 1 - k)]
        }
    }
}

impl Model for GspModel {
    fn name(&self) -> String {
        format!("GSp({})", self.n())
    }

    fn num_generators(&self) -> usize {
        self.g + 1
    }

    fn identity(&self) -> Vec<i64> {
        (1..=self.n() as i64).collect()
    }

    fn generator(&self, i: usize) -> Vec<i64> {
        let n = self.n();
        if i == 0 {
            // s_0 = ((-1, 0, ..., 0, 1), (1, 2g))
            let mut lambda = vec![0; n];
            lambda[0] = -1;
            lambda[n - 1] = 1;
            let mut perm = self.identity();
            perm.swap(0, n - 1);
            return AffSimPerm::from_translation_and_perm(&lambda, &perm)
                .expect("s_0 is a valid similitude permutation")
                .into_window();
        }
        let mut w = self.identity();
        for (a, b) in self.swap_pairs(i) {
            w.swap(a - 1, b - 1);
        }
        w
    }

    fn compose(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        compose(a, b)
    }

    fn inverse(&self, a: &[i64]) -> Vec<i64> {
        inverse(a)
    }

    fn validate(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.n() {
            return Err(Error::InvalidElement(format!(
                "window {a:?} has length {} but GSp({}) needs {}",
                a.len(),
                self.n(),
                self.n()
            )));
        }
        check_window(a)
    }

    fn kottwitz(&self, a: &[i64]) -> i64 {
        kappa(a)
    }

    fn omega_generator(&self) -> Vec<i64> {
        // τ = ((0^g, 1^g), (1, g+1)(2, g+2)...(g, 2g))
        let (g, n) = (self.g, self.n());
        let lambda: Vec<i64> = (0..n).map(|i| i64::from(i >= g)).collect();
        let perm: Vec<i64> = (1..=n as i64)
            .map(|i| if i <= g as i64 { i + g as i64 } else { i - g as i64 })
            .collect();
        AffSimPerm::from_translation_and_perm(&lambda, &perm)
            .expect("tau is a valid similitude permutation")
            .into_window()
    }

    fn is_right_descent(&self, a: &[i64], i: usize) -> bool {
        let i = i as i64;
        eval(a, i) > eval(a, i + 1)
    }

    fn lattice_rank(&self) -> usize {
        self.n()
    }

    fn check_coweight(&self, v: &[i64]) -> Result<()> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::InvalidCoweight(format!(
                "{v:?} has length {} but GSp({n}) needs {n}",
                v.len()
            )));
        }
        let c = v[0] + v[n - 1];
        if (0..n).any(|i| v[i] + v[n - 1 - i] != c) {
            return Err(Error::InvalidCoweight(format!(
                "{v:?} does not satisfy u_i + u_(2g+1-i) = const"
            )));
        }
        Ok(())
    }

    fn translation(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n() as i64;
        v.iter().zip(1..).map(|(&l, i)| i + n * l).collect()
    }

    fn translation_part(&self, a: &[i64]) -> Option<Vec<i64>> {
        let n = self.n() as i64;
        let mut v = Vec::with_capacity(a.len());
        for (&x, i) in a.iter().zip(1..) {
            if (x - i).rem_euclid(n) != 0 {
                return None;
            }
            v.push((x - i) / n);
        }
        Some(v)
    }

    fn finite_rank(&self) -> usize {
        self.g
    }

    fn reflect_coweight(&self, k: usize, v: &mut [Rational64]) {
        for (a, b) in self.swap_pairs(k + 1) {
            v.swap(a - 1, b - 1);
        }
    }

    fn simple_roots(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (1..=self.g)
            .map(|k| {
                let mut r = vec![0; n];
                r[k - 1] = 1;
                r[k] = -1;
                r
            })
            .collect()
    }

    fn simple_coroots(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (1..=self.g)
            .map(|k| {
                let mut c = vec![0; n];
                for (a, b) in self.swap_pairs(k) {
                    c[a - 1] += 1;
                    c[b - 1] -= 1;
                }
                c
            })
            .collect()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        // e_i - e_j and e_(n+1-j) - e_(n+1-i) agree on the similitude lattice;
        // i + j <= n + 1 keeps one functional from each such pair.
        let n = self.n();
        let mut roots = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if i + j <= n + 1 {
                    let mut r = vec![0; n];
                    r[i - 1] = 1;
                    r[j - 1] = -1;
                    roots.push(r);
                }
            }
        }
        roots
    }

    fn default_mu(&self) -> Vec<i64> {
        (0..self.n()).map(|i| i64::from(i < self.g)).collect()
    }

    fn torus_rank(&self) -> usize {
        self.g + 1
    }

    fn p_rank(&self, a: &[i64]) -> Option<u32> {
        Some(p_rank(a))
    }
}

/// Default length cap `ℓ(t^μ) + 2 = g(g+1)/2 + 2`.
pub fn default_cap(g: usize) -> u32 {
    (g * (g + 1) / 2 + 2) as u32
}

/// The split `GSp(2g)` context with the default length cap.
pub fn gsp_context(g: usize) -> Result<GroupCtx> {
    gsp_context_with(g, Sigma::Identity, default_cap(g))
}

pub fn gsp_context_with(g: usize, sigma: Sigma, cap: u32) -> Result<GroupCtx> {
    GroupCtx::new(Arc::new(GspModel::new(g)?), sigma, cap)
}

/// A level `J ⊆ {0, ..., g}`; the parahoric is generated by `s_i` for `i ∉ J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SiegelLevel {
    g: usize,
    indices: Vec<usize>,
}

impl SiegelLevel {
    pub fn new(g: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidLevel("level must be a nonempty subset".into()));
        }
        if let Some(&bad) = set.iter().find(|&&i| i > g) {
            return Err(Error::InvalidLevel(format!(
                "index {bad} is outside {{0, ..., {g}}}"
            )));
        }
        Ok(SiegelLevel {
            g,
            indices: set.into_iter().collect(),
        })
    }

    /// Parses a comma-separated index list such as `"0,1"`.
    pub fn parse(g: usize, s: &str) -> Result<Self> {
        let indices = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidLevel(format!("{t:?} is not an index")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, indices)
    }

    pub fn all(g: usize) -> Self {
        SiegelLevel {
            g,
            indices: (0..=g).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Generator indices of the parahoric, `{0..g} ∖ J`.
    pub fn complement(&self) -> Vec<usize> {
        (0..=self.g).filter(|i| !self.indices.contains(i)).collect()
    }

    /// Conventional name for the `g = 2` levels.
    pub fn name(&self) -> Option<&'static str> {
        if self.g != 2 {
            return None;
        }
        match self.indices.as_slice() {
            [0] => Some("hyperspecial"),
            [1] => Some("paramodular"),
            [0, 1] => Some("klingen"),
            [0, 2] => Some("siegel"),
            [0, 1, 2] => Some("iwahori"),
            _ => None,
        }
    }
}

impl fmt::Display for SiegelLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn level_to_parahoric(ctx: &GroupCtx, level: &SiegelLevel) -> Result<Parahoric> {
    if ctx.num_generators() != level.genus() + 1 {
        return Err(Error::InvalidLevel(format!(
            "level {level} is for genus {} but the context has {} generators",
            level.genus(),
            ctx.num_generators()
        )));
    }
    Parahoric::new(ctx, level.complement())
}

/// Irreducible component count `(k_1+1)...(k_r+1)` with `k_j = i_j - i_(j-1)`.
pub fn component_count(level: &SiegelLevel) -> u64 {
    level
        .indices()
        .windows(2)
        .map(|w| (w[1] - w[0] + 1) as u64)
        .product()
}
