//! Rendering of stratification artifacts and the self-check against the
//! embedded GSp(4) reference data.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::admissible::{
    admissible_set, decorate, decorate_kr, ekor_set, AdmissibleSet, StratumRecord,
};
use crate::affweyl::{Elt, GroupCtx, Sigma};
use crate::error::{Error, Result};
use crate::newton::{b_leq, b_set, fully_hn_decomposable, leaf_dimension, BClass};
use crate::orders::{bruhat_poset, ekor_poset, Notation, OrderKind, Poset};
use crate::parabolic::Parahoric;
use crate::siegel::{component_count, default_cap, gsp_context_with, level_to_parahoric, SiegelLevel};
use crate::zip::{eo_poset_in_fiber, ordinary_and_superspecial, zip_datum};
use crate::{checks, Coweight};

pub const SCHEMA_VERSION: u32 = 1;

const GOLDEN_GSP4: &str = include_str!("../data/gsp4_golden.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Artifact {
    Adm,
    Ekor,
    Kr,
    HasseEkor,
    HasseKr,
    Newton,
    Zip,
    Summary,
    Selfcheck,
}

impl Artifact {
    pub const ALL: [Artifact; 9] = [
        Artifact::Adm,
        Artifact::Ekor,
        Artifact::Kr,
        Artifact::HasseEkor,
        Artifact::HasseKr,
        Artifact::Newton,
        Artifact::Zip,
        Artifact::Summary,
        Artifact::Selfcheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Artifact::Adm => "adm",
            Artifact::Ekor => "ekor",
            Artifact::Kr => "kr",
            Artifact::HasseEkor => "hasse-ekor",
            Artifact::HasseKr => "hasse-kr",
            Artifact::Newton => "newton",
            Artifact::Zip => "zip",
            Artifact::Summary => "summary",
            Artifact::Selfcheck => "selfcheck",
        }
    }
}

impl std::str::FromStr for Artifact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Artifact::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown artifact".into(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Md,
    Json,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected md, json or dot".into(),
            }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportRequest {
    pub g: usize,
    /// `None` selects the Iwahori level `{0, ..., g}`.
    pub level: Option<String>,
    pub artifact: Artifact,
    pub format: Format,
    pub notation: Notation,
    pub order: OrderKind,
    /// Overrides the default length cap.
    pub cap: Option<u32>,
}

impl ReportRequest {
    pub fn new(g: usize, level: Option<&str>, artifact: Artifact) -> Self {
        ReportRequest {
            g,
            level: level.map(str::to_string),
            artifact,
            format: Format::Md,
            notation: Notation::Word,
            order: OrderKind::KSigma,
            cap: None,
        }
    }
}

/// Result of a run: text for stdout and stderr, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::InvalidLevel(_)
        | Error::Parse { .. }
        | Error::InvalidCoweight(_)
        | Error::NotDominant(_)
        | Error::GeneratorOutOfRange { .. }
        | Error::InvalidSigma(_) => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    }
}

pub fn run(req: &ReportRequest) -> Output {
    let is_hasse = matches!(req.artifact, Artifact::HasseEkor | Artifact::HasseKr);
    if req.format == Format::Dot && !is_hasse {
        return Output {
            stdout: String::new(),
            stderr: format!(
                "error: --format dot is only valid for hasse-ekor and hasse-kr, not {}\n",
                req.artifact.name()
            ),
            code: EXIT_USAGE,
        };
    }
    let result = if req.artifact == Artifact::Selfcheck {
        selfcheck(req)
    } else {
        Session::new(req).and_then(|s| s.render(req)).map(|text| (text, true))
    };
    match result {
        Ok((stdout, ok)) => Output {
            stdout,
            stderr: String::new(),
            code: if ok { EXIT_OK } else { EXIT_MISMATCH },
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

/// A group context, level and admissible set ready for rendering.
pub struct Session {
    pub ctx: GroupCtx,
    pub level: SiegelLevel,
    pub k: Parahoric,
    pub adm: AdmissibleSet,
    notation: Notation,
}

impl Session {
    pub fn new(req: &ReportRequest) -> Result<Self> {
        let level = match &req.level {
            Some(s) => SiegelLevel::parse(req.g, s)?,
            None => SiegelLevel::all(req.g),
        };
        Self::for_level(req.g, level, req.cap, req.notation)
    }

    pub fn for_level(g: usize, level: SiegelLevel, cap: Option<u32>, notation: Notation) -> Result<Self> {
        let ctx = gsp_context_with(g, Sigma::Identity, cap.unwrap_or_else(|| default_cap(g)))?;
        let k = level_to_parahoric(&ctx, &level)?;
        let mu = Coweight(ctx.model().default_mu());
        let adm = admissible_set(&ctx, &mu)?;
        Ok(Session {
            ctx,
            level,
            k,
            adm,
            notation,
        })
    }

    fn label(&self, x: &Elt) -> String {
        match self.notation {
            Notation::Word => self.ctx.format(x),
            Notation::Window => format!("{:?}", x.canonical()),
        }
    }

    fn labels(&self, xs: &[Elt]) -> String {
        xs.iter().map(|x| self.label(x)).collect::<Vec<_>>().join(", ")
    }

    fn elt_json(&self, x: &Elt) -> Value {
        json!({
            "word": self.ctx.format(x),
            "window": x.canonical(),
            "length": self.ctx.length_by_descents(x),
            "p_rank": self.ctx.model().p_rank(x.canonical()),
            "kappa": x.omega(),
        })
    }

    fn header(&self, artifact: Artifact) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "artifact": artifact.name(),
            "group": self.ctx.model().name(),
            "g": self.level.genus(),
            "level": self.level.indices(),
            "mu": self.adm.mu().0,
        })
    }

    fn title(&self, what: &str) -> String {
        let name = self
            .level
            .name()
            .map(|n| format!(" ({n})"))
            .unwrap_or_default();
        format!(
            "# {what} for {}, level {}{name}\n\n",
            self.ctx.model().name(),
            self.level
        )
    }

    pub fn render(&self, req: &ReportRequest) -> Result<String> {
        match req.artifact {
            Artifact::Adm => Ok(self.render_adm(req.format)),
            Artifact::Ekor => Ok(self.render_ekor(req.format)),
            Artifact::Kr => self.render_kr(req.format),
            Artifact::HasseEkor => {
                let p = ekor_poset(&self.ctx, &self.adm, &self.k, req.order)?;
                Ok(self.render_poset(&p, "ekor", req.format))
            }
            Artifact::HasseKr => {
                let p = bruhat_poset(&self.ctx, &self.adm, &self.k)?;
                Ok(self.render_poset(&p, "kr", req.format))
            }
            Artifact::Newton => self.render_newton(req.format),
            Artifact::Zip => self.render_zip(req.format),
            Artifact::Summary => self.render_summary(req.format),
            Artifact::Selfcheck => unreachable!("handled by run"),
        }
    }

    fn render_adm(&self, format: Format) -> String {
        let elts = self.adm.elements();
        match format {
            Format::Json => {
                let mut v = self.header(Artifact::Adm);
                v["elements"] = elts.iter().map(|x| self.elt_json(x)).collect();
                v["maximals"] = self
                    .adm
                    .maximals()
                    .iter()
                    .map(|x| self.elt_json(x))
                    .collect();
                pretty(&v)
            }
            _ => {
                let mut out = self.title("Admissible set");
                writeln!(out, "{} elements.\n", elts.len()).unwrap();
                let rows = elts
                    .iter()
                    .map(|x| {
                        vec![
                            self.label(x),
                            self.ctx.length_by_descents(x).to_string(),
                            opt(self.ctx.model().p_rank(x.canonical())),
                            x.omega().to_string(),
                        ]
                    })
                    .collect();
                out.push_str(&md_table(&["element", "length", "p-rank", "kappa"], rows));
                out
            }
        }
    }

    fn stratum_json(&self, r: &StratumRecord) -> Value {
        let mut v = self.elt_json(&r.elt);
        v["dim"] = json!(r.dim);
        v["kr_type"] = json!(self.ctx.format(&r.kr_type));
        v["sigma_straight"] = json!(r.sigma_straight);
        v["newton"] = class_json(&r.newton);
        v
    }

    fn render_ekor(&self, format: Format) -> String {
        let recs = decorate(&self.ctx, &self.adm, &self.k);
        match format {
            Format::Json => {
                let mut v = self.header(Artifact::Ekor);
                v["strata"] = recs.iter().map(|r| self.stratum_json(r)).collect();
                pretty(&v)
            }
            _ => {
                let mut out = self.title("EKOR strata");
                writeln!(out, "{} EKOR strata.\n", recs.len()).unwrap();
                let rows = recs
                    .iter()
                    .map(|r| {
                        vec![
                            self.label(&r.elt),
                            r.dim.to_string(),
                            opt(r.p_rank),
                            format!("[{}]", self.label(&r.kr_type)),
                            yes_no(r.sigma_straight),
                            r.newton.nu.to_string(),
                        ]
                    })
                    .collect();
                out.push_str(&md_table(
                    &["element", "dim", "p-rank", "KR type", "sigma-straight", "Newton point"],
                    rows,
                ));
                out
            }
        }
    }

    fn render_kr(&self, format: Format) -> Result<String> {
        let recs = decorate_kr(&self.ctx, &self.adm, &self.k)?;
        let p_ranks = |xs: &[Elt]| -> Vec<Option<u32>> {
            xs.iter().map(|x| self.ctx.model().p_rank(x.canonical())).collect()
        };
        Ok(match format {
            Format::Json => {
                let mut v = self.header(Artifact::Kr);
                v["strata"] = recs
                    .iter()
                    .map(|r| {
                        json!({
                            "kr_type": self.elt_json(&r.rep),
                            "dim": r.dim,
                            "members": r.members.iter().map(|x| self.elt_json(x)).collect::<Vec<_>>(),
                            "ekor": r.ekor.iter().map(|x| self.elt_json(x)).collect::<Vec<_>>(),
                            "ordinary": self.ctx.format(&r.ordinary),
                            "superspecial": self.ctx.format(&r.superspecial),
                        })
                    })
                    .collect();
                pretty(&v)
            }
            _ => {
                let mut out = self.title("KR strata");
                writeln!(out, "{} KR strata.\n", recs.len()).unwrap();
                let rows = recs
                    .iter()
                    .map(|r| {
                        let dims: Vec<String> = r
                            .ekor
                            .iter()
                            .map(|x| self.ctx.length_by_descents(x).to_string())
                            .collect();
                        let pr: Vec<String> = p_ranks(&r.ekor).into_iter().map(opt).collect();
                        vec![
                            format!("[{}]", self.label(&r.rep)),
                            format!("{{{}}}", self.labels(&r.members)),
                            self.labels(&r.ekor),
                            r.dim.to_string(),
                            dims.join(", "),
                            pr.join(", "),
                        ]
                    })
                    .collect();
                out.push_str(&md_table(
                    &["KR type", "members", "EKOR", "dim", "EKOR dims", "p-rank"],
                    rows,
                ));
                out
            }
        })
    }

    fn render_poset(&self, p: &Poset, kind: &str, format: Format) -> String {
        match format {
            Format::Dot => p.to_dot(&format!("{kind} {}", self.level), self.notation),
            Format::Json => {
                let mut v = self.header(if kind == "ekor" {
                    Artifact::HasseEkor
                } else {
                    Artifact::HasseKr
                });
                let pv = p.to_json_value();
                v["nodes"] = pv["nodes"].clone();
                v["covers"] = pv["covers"].clone();
                pretty(&v)
            }
            Format::Md => {
                let what = if kind == "ekor" {
                    "EKOR closure order"
                } else {
                    "KR closure order"
                };
                let mut out = self.title(what);
                writeln!(out, "{} nodes, {} cover edges.\n", p.len(), p.covers().len()).unwrap();
                let node = |i: usize| {
                    let n = &p.nodes()[i];
                    if kind == "kr" {
                        format!("[{}]", n.label(self.notation))
                    } else {
                        n.label(self.notation)
                    }
                };
                for &(i, j) in p.covers() {
                    writeln!(out, "- {} -> {}", node(i), node(j)).unwrap();
                }
                out
            }
        }
    }

    fn render_newton(&self, format: Format) -> Result<String> {
        let classes = b_set(&self.ctx, &self.adm, &self.k)?;
        let hn = fully_hn_decomposable(&self.ctx, &self.adm, &self.k)?;
        let coeffs: BTreeMap<&BClass, &Vec<num_rational::Rational64>> =
            hn.classes.iter().map(|c| (&c.class, &c.coefficients)).collect();
        Ok(match format {
            Format::Json => {
                let mut v = self.header(Artifact::Newton);
                v["classes"] = classes
                    .iter()
                    .map(|e| {
                        let mut c = class_json(&e.class);
                        c["straight_rep"] = json!(self.ctx.format(&e.straight_rep));
                        c["leaf_dimension"] = json!(leaf_dimension(&self.ctx, &e.straight_rep).ok());
                        c["mu_minus_nu_coroot_coefficients"] = match coeffs.get(&e.class) {
                            Some(cs) => cs.iter().map(|q| json!(q.to_string())).collect(),
                            None => Value::Null,
                        };
                        c
                    })
                    .collect();
                v["order"] = classes
                    .iter()
                    .enumerate()
                    .flat_map(|(i, a)| {
                        classes.iter().enumerate().filter_map(move |(j, b)| {
                            (i != j && b_leq(&self.ctx, &a.class, &b.class)).then_some(json!([i, j]))
                        })
                    })
                    .collect();
                v["fully_hn_decomposable"] = json!(hn.decomposable);
                pretty(&v)
            }
            _ => {
                let mut out = self.title("Newton classes");
                writeln!(out, "{} Newton classes.\n", classes.len()).unwrap();
                let rows = classes
                    .iter()
                    .map(|e| {
                        vec![
                            e.class.nu.to_string(),
                            e.class.kappa.to_string(),
                            yes_no(e.class.basic),
                            self.label(&e.straight_rep),
                            opt(leaf_dimension(&self.ctx, &e.straight_rep).ok()),
                            coeffs
                                .get(&e.class)
                                .map(|cs| {
                                    let s: Vec<String> = cs.iter().map(|q| q.to_string()).collect();
                                    format!("({})", s.join(", "))
                                })
                                .unwrap_or_else(|| "-".into()),
                        ]
                    })
                    .collect();
                out.push_str(&md_table(
                    &["nu", "kappa", "basic", "straight rep", "leaf dim", "mu - nu in coroots"],
                    rows,
                ));
                writeln!(
                    out,
                    "\nfully Hodge-Newton decomposable: {}",
                    yes_no(hn.decomposable)
                )
                .unwrap();
                out
            }
        })
    }

    fn render_zip(&self, format: Format) -> Result<String> {
        let mut entries = Vec::new();
        for r in decorate_kr(&self.ctx, &self.adm, &self.k)? {
            let z = zip_datum(&self.ctx, &self.adm, &self.k, &r.rep)?;
            let p = eo_poset_in_fiber(&self.ctx, &self.k, &z)?;
            let (hi, lo) = ordinary_and_superspecial(&p)?;
            entries.push((z, p, hi, lo));
        }
        let gens = |v: &[usize]| -> String {
            let s: Vec<String> = v.iter().map(|i| format!("s{i}")).collect();
            format!("{{{}}}", s.join(", "))
        };
        Ok(match format {
            Format::Json => {
                let mut v = self.header(Artifact::Zip);
                v["data"] = entries
                    .iter()
                    .map(|(z, p, hi, lo)| {
                        let pv = p.to_json_value();
                        json!({
                            "kr_type": self.ctx.format(&z.w),
                            "j_w": z.jw,
                            "sigma_prime_j_w": z.sigma_prime_jw,
                            "fiber": pv["nodes"],
                            "covers": pv["covers"],
                            "ordinary": self.ctx.format(hi),
                            "superspecial": self.ctx.format(lo),
                        })
                    })
                    .collect();
                pretty(&v)
            }
            _ => {
                let mut out = self.title("Zip data of KR types");
                for (z, p, hi, lo) in &entries {
                    writeln!(out, "## [{}]\n", self.label(&z.w)).unwrap();
                    writeln!(out, "- J_w = {}", gens(&z.jw)).unwrap();
                    writeln!(out, "- sigma'(J_w) = {}", gens(&z.sigma_prime_jw)).unwrap();
                    writeln!(out, "- fiber: {}", self.labels(&z.fiber)).unwrap();
                    writeln!(out, "- ordinary: {}", self.label(hi)).unwrap();
                    writeln!(out, "- superspecial: {}", self.label(lo)).unwrap();
                    for &(i, j) in p.covers() {
                        writeln!(
                            out,
                            "- {} -> {}",
                            self.label(&p.nodes()[i].elt),
                            self.label(&p.nodes()[j].elt)
                        )
                        .unwrap();
                    }
                    out.push('\n');
                }
                out
            }
        })
    }

    pub fn summary_counts(&self) -> Result<(usize, usize, usize, u64)> {
        let ekor = ekor_set(&self.ctx, &self.adm, &self.k).len();
        let kr = crate::admissible::kr_set(&self.ctx, &self.adm, &self.k).len();
        let newton = b_set(&self.ctx, &self.adm, &self.k)?.len();
        Ok((ekor, kr, newton, component_count(&self.level)))
    }

    fn render_summary(&self, format: Format) -> Result<String> {
        let (ekor, kr, newton, comps) = self.summary_counts()?;
        Ok(match format {
            Format::Json => {
                let mut v = self.header(Artifact::Summary);
                v["ekor_strata"] = json!(ekor);
                v["kr_strata"] = json!(kr);
                v["newton_classes"] = json!(newton);
                v["components"] = json!(comps);
                pretty(&v)
            }
            _ => format!(
                "{ekor} EKOR strata, {kr} KR strata, {newton} Newton classes, components: {comps}\n"
            ),
        })
    }
}

fn class_json(c: &BClass) -> Value {
    json!({
        "nu": c.nu.0.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "kappa": c.kappa,
        "basic": c.basic,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn md_table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = format!("| {} |\n", headers.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

#[derive(Debug, Deserialize)]
struct Golden {
    adm: GoldenAdm,
    newton: GoldenNewton,
    level: Vec<GoldenLevel>,
}

#[derive(Debug, Deserialize)]
struct GoldenAdm {
    p_rank_2: Vec<String>,
    p_rank_1: Vec<String>,
    p_rank_0: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct GoldenNewton {
    classes: usize,
    fully_hn: bool,
}

#[derive(Debug, Deserialize)]
struct GoldenLevel {
    name: String,
    indices: Vec<usize>,
    ekor_count: usize,
    kr_count: usize,
    components: u64,
    #[serde(default)]
    ekor_covers: Option<Vec<[String; 2]>>,
    #[serde(default)]
    kr_covers: Option<Vec<[String; 2]>>,
    #[serde(default)]
    row: Vec<GoldenRow>,
}

#[derive(Debug, Deserialize)]
struct GoldenRow {
    kr_type: String,
    #[serde(default)]
    members: Option<Vec<String>>,
    ekor: Vec<String>,
    dims: Vec<u32>,
    p_ranks: Vec<u32>,
}

/// Accumulates named comparisons and renders them deterministically.
#[derive(Default)]
struct Report {
    lines: String,
    checks: usize,
    failures: usize,
}

impl Report {
    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, expected: T, actual: T) {
        self.checks += 1;
        if expected == actual {
            writeln!(self.lines, "ok       {name}").unwrap();
        } else {
            self.failures += 1;
            writeln!(self.lines, "MISMATCH {name}").unwrap();
            writeln!(self.lines, "  - expected: {expected:?}").unwrap();
            writeln!(self.lines, "  + actual:   {actual:?}").unwrap();
        }
    }

    fn record(&mut self, name: &str, passed: bool, detail: &str) {
        self.checks += 1;
        if passed {
            writeln!(self.lines, "ok       {name}").unwrap();
        } else {
            self.failures += 1;
            writeln!(self.lines, "MISMATCH {name}: {detail}").unwrap();
        }
    }

    fn finish(mut self, title: &str) -> (String, bool) {
        writeln!(
            self.lines,
            "\nselfcheck {title}: {} checks, {} mismatches",
            self.checks, self.failures
        )
        .unwrap();
        (self.lines, self.failures == 0)
    }
}

fn selfcheck(req: &ReportRequest) -> Result<(String, bool)> {
    let mut report = Report::default();
    if req.g == 2 {
        golden_checks(req, &mut report)?;
    }
    let ctx = gsp_context_with(req.g, Sigma::Identity, req.cap.unwrap_or_else(|| default_cap(req.g)))?;
    for c in checks::property_suite(&ctx)? {
        report.record(&c.name, c.passed, &c.detail);
    }
    Ok(report.finish(&format!("GSp({})", 2 * req.g)))
}

fn show(ctx: &GroupCtx, xs: &BTreeSet<Elt>) -> Vec<String> {
    let mut v: Vec<Elt> = xs.iter().cloned().collect();
    ctx.sort_elements(&mut v);
    v.iter().map(|x| ctx.format(x)).collect()
}

fn golden_checks(req: &ReportRequest, report: &mut Report) -> Result<()> {
    let golden: Golden = toml::from_str(GOLDEN_GSP4)
        .map_err(|e| Error::Internal(format!("embedded reference data: {e}")))?;
    let iwahori = Session::for_level(2, SiegelLevel::all(2), req.cap, Notation::Word)?;
    let ctx = &iwahori.ctx;
    let parse_set = |words: &[String]| -> Result<BTreeSet<Elt>> {
        words.iter().map(|w| ctx.parse(w)).collect()
    };

    let adm = &iwahori.adm;
    report.compare("adm: size", 13, adm.len());
    for (rank, words) in [
        (2, &golden.adm.p_rank_2),
        (1, &golden.adm.p_rank_1),
        (0, &golden.adm.p_rank_0),
    ] {
        let expected = parse_set(words)?;
        let actual: BTreeSet<Elt> = adm
            .elements()
            .iter()
            .filter(|x| ctx.model().p_rank(x.canonical()) == Some(rank))
            .cloned()
            .collect();
        report.compare(&format!("adm: p-rank {rank} elements"), show(ctx, &expected), show(ctx, &actual));
    }
    let maximals: BTreeSet<Elt> = adm.maximals().iter().cloned().collect();
    report.compare(
        "adm: maximal translations",
        show(ctx, &parse_set(&golden.adm.p_rank_2)?),
        show(ctx, &maximals),
    );

    for lvl in &golden.level {
        let level = SiegelLevel::new(2, lvl.indices.iter().copied())?;
        let s = Session::for_level(2, level, req.cap, Notation::Word)?;
        let name = &lvl.name;
        let (ekor, kr, _, comps) = s.summary_counts()?;
        report.compare(&format!("{name}: EKOR count"), lvl.ekor_count, ekor);
        report.compare(&format!("{name}: KR count"), lvl.kr_count, kr);
        report.compare(&format!("{name}: components"), lvl.components, comps);

        if let Some(covers) = &lvl.ekor_covers {
            let p = ekor_poset(&s.ctx, &s.adm, &s.k, OrderKind::KSigma)?;
            let expected: BTreeSet<(String, String)> = covers
                .iter()
                .map(|[a, b]| Ok((s.ctx.format(&s.ctx.parse(a)?), s.ctx.format(&s.ctx.parse(b)?))))
                .collect::<Result<_>>()?;
            let actual: BTreeSet<(String, String)> = p.cover_words().into_iter().collect();
            report.compare(&format!("{name}: EKOR closure covers"), expected, actual);
        }
        if let Some(covers) = &lvl.kr_covers {
            let p = bruhat_poset(&s.ctx, &s.adm, &s.k)?;
            let class = |w: &str| -> Result<String> {
                Ok(s.ctx.format(&s.k.min_double(&s.ctx, &s.ctx.parse(w)?)))
            };
            let expected: BTreeSet<(String, String)> = covers
                .iter()
                .map(|[a, b]| Ok((class(a)?, class(b)?)))
                .collect::<Result<_>>()?;
            let actual: BTreeSet<(String, String)> = p.cover_words().into_iter().collect();
            report.compare(&format!("{name}: KR closure covers"), expected, actual);
        }

        let records = decorate_kr(&s.ctx, &s.adm, &s.k)?;
        for row in &lvl.row {
            let rep = s.k.min_double(&s.ctx, &s.ctx.parse(&row.kr_type)?);
            let label = format!("{name}: row [{}]", row.kr_type);
            let Some(rec) = records.iter().find(|r| r.rep == rep) else {
                report.record(&label, false, "KR type not found");
                continue;
            };
            if let Some(members) = &row.members {
                let expected: BTreeSet<Elt> = members.iter().map(|w| s.ctx.parse(w)).collect::<Result<_>>()?;
                let actual: BTreeSet<Elt> = rec.members.iter().cloned().collect();
                report.compare(&format!("{label} members"), show(&s.ctx, &expected), show(&s.ctx, &actual));
            }
            let expected: BTreeMap<String, (u32, u32)> = row
                .ekor
                .iter()
                .zip(row.dims.iter().zip(&row.p_ranks))
                .map(|(w, (&d, &p))| Ok((s.ctx.format(&s.ctx.parse(w)?), (d, p))))
                .collect::<Result<_>>()?;
            let actual: BTreeMap<String, (u32, u32)> = rec
                .ekor
                .iter()
                .map(|x| {
                    (
                        s.ctx.format(x),
                        (
                            s.ctx.length_by_descents(x),
                            s.ctx.model().p_rank(x.canonical()).unwrap_or(u32::MAX),
                        ),
                    )
                })
                .collect();
            report.compare(&format!("{label} EKOR (dim, p-rank)"), expected, actual);
        }
    }

    let classes = b_set(ctx, adm, &iwahori.k)?;
    report.compare("newton: class count", golden.newton.classes, classes.len());
    let hn = fully_hn_decomposable(ctx, adm, &iwahori.k)?;
    report.compare("newton: fully Hodge-Newton decomposable", golden.newton.fully_hn, hn.decomposable);
    Ok(())
}

/// Versioned JSON schema describing every artifact's JSON output.
pub fn json_schema() -> String {
    let element = json!({
        "type": "object",
        "required": ["word", "window", "length", "p_rank", "kappa"],
        "properties": {
            "word": {"type": "string", "description": "reduced word, e.g. \"s0 s1 tau\""},
            "window": {"type": "array", "items": {"type": "integer"}},
            "length": {"type": "integer", "minimum": 0},
            "p_rank": {"type": ["integer", "null"], "minimum": 0},
            "kappa": {"type": "integer"}
        }
    });
    let rational = json!({"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"});
    let node = json!({
        "allOf": [{"$ref": "#/$defs/element"}],
        "required": ["dim"],
        "properties": {"dim": {"type": "integer", "minimum": 0}}
    });
    let poset = json!({
        "type": "object",
        "required": ["nodes", "covers"],
        "properties": {
            "nodes": {"type": "array", "items": {"$ref": "#/$defs/node"}},
            "covers": {
                "type": "array",
                "description": "Hasse edges [lower, upper] as node indices",
                "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
            }
        }
    });
    let newton_class = json!({
        "type": "object",
        "required": ["nu", "kappa", "basic"],
        "properties": {
            "nu": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
            "kappa": {"type": "integer"},
            "basic": {"type": "boolean"},
            "straight_rep": {"type": "string"},
            "leaf_dimension": {"type": ["integer", "null"]},
            "mu_minus_nu_coroot_coefficients": {
                "type": ["array", "null"],
                "items": {"$ref": "#/$defs/rational"}
            }
        }
    });
    let header = json!({
        "type": "object",
        "required": ["schema_version", "artifact", "group", "g", "level", "mu"],
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "artifact": {"enum": ["adm", "ekor", "kr", "hasse-ekor", "hasse-kr", "newton", "zip", "summary"]},
            "group": {"type": "string"},
            "g": {"type": "integer", "minimum": 1},
            "level": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1, "uniqueItems": true},
            "mu": {"type": "array", "items": {"type": "integer"}}
        }
    });
    let schema = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "strata-atlas output",
        "schema_version": SCHEMA_VERSION,
        "$defs": {
            "element": element,
            "rational": rational,
            "node": node,
            "poset": poset,
            "newton_class": newton_class,
            "header": header
        },
        "allOf": [{"$ref": "#/$defs/header"}],
        "properties": {
            "elements": {"type": "array", "items": {"$ref": "#/$defs/element"}},
            "maximals": {"type": "array", "items": {"$ref": "#/$defs/element"}},
            "strata": {"type": "array"},
            "nodes": {"type": "array", "items": {"$ref": "#/$defs/node"}},
            "covers": {"$ref": "#/$defs/poset/properties/covers"},
            "classes": {"type": "array", "items": {"$ref": "#/$defs/newton_class"}},
            "order": {"type": "array"},
            "fully_hn_decomposable": {"type": "boolean"},
            "data": {"type": "array"},
            "ekor_strata": {"type": "integer"},
            "kr_strata": {"type": "integer"},
            "newton_classes": {"type": "integer"},
            "components": {"type": "integer"}
        }
    });
    pretty(&schema)
}
