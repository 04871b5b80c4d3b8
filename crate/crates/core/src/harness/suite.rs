//! Equivalence and preservation suites over exhaustive and seeded instances.
//!
//! Work is split into independent (instance, check, coefficient) tasks that
//! run on a worker pool; records are sorted by instance digest, then check
//! name, so the report does not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::ser::Serializer;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::{Face, RelativePair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::format::{write_facets, write_poset};
use crate::harness::enumerate::{canonical_complexes_upto, MAX_CANONICAL_VERTICES};
use crate::harness::generate::{
    derive_seed, generate_random_complex, generate_random_poset, generate_semipure_poset, generate_shellable, rng,
    ShellableInstance,
};
use crate::homology::{reduced_homology, Coefficient};
use crate::poset::FinitePoset;
use crate::scm::{is_shellable, is_shelling_order, Checker, RankLevel, RankSetMode, ScmVerdict, Witness};
use crate::sr::{hochster_betti_ideal, stanley_reisner_generators};

/// A group of related checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Homology,
    Routes,
    PureCollapse,
    Shellable,
    Join,
    OrdinalSum,
    OrderComplex,
    Barycentric,
    Products,
    IntervalPoset,
    Preservation,
    Skeleta,
    TypeSelection,
    Semipure,
    Freeness,
    EagonReiner,
    Hochster,
    Relative,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Homology,
        Family::Routes,
        Family::PureCollapse,
        Family::Shellable,
        Family::Join,
        Family::OrdinalSum,
        Family::OrderComplex,
        Family::Barycentric,
        Family::Products,
        Family::IntervalPoset,
        Family::Preservation,
        Family::Skeleta,
        Family::TypeSelection,
        Family::Semipure,
        Family::Freeness,
        Family::EagonReiner,
        Family::Hochster,
        Family::Relative,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Homology => "homology",
            Family::Routes => "routes",
            Family::PureCollapse => "pure-collapse",
            Family::Shellable => "shellable",
            Family::Join => "join",
            Family::OrdinalSum => "ordinal-sum",
            Family::OrderComplex => "order-complex",
            Family::Barycentric => "barycentric",
            Family::Products => "products",
            Family::IntervalPoset => "interval-poset",
            Family::Preservation => "preservation",
            Family::Skeleta => "skeleta",
            Family::TypeSelection => "type-selection",
            Family::Semipure => "semipure",
            Family::Freeness => "freeness",
            Family::EagonReiner => "eagon-reiner",
            Family::Hochster => "hochster",
            Family::Relative => "relative",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.iter().copied().find(|f| f.name() == s).ok_or_else(|| format!("unknown suite family `{s}`"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Every canonical complex on at most this many vertices is checked.
    pub exhaustive_vertices: usize,
    /// Vertex bound for random complexes in the SCM families.
    pub max_vertices: usize,
    /// Vertex bound for random complexes in the homology family.
    pub homology_vertices: usize,
    /// Element bound for random posets.
    pub max_elements: usize,
    /// Element bound for semipure posets.
    pub semipure_elements: usize,
    /// Random instances per family.
    pub samples: usize,
    pub coefficients: Vec<Coefficient>,
    pub families: Vec<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_ms: Option<u64>,
    /// Worker threads; 0 uses the global pool. Not part of the report.
    #[serde(skip)]
    pub jobs: usize,
    /// Records wall time per check, which makes reports nondeterministic.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            exhaustive_vertices: 4,
            max_vertices: 7,
            homology_vertices: 8,
            max_elements: 9,
            semipure_elements: 10,
            samples: 50,
            coefficients: vec![Coefficient::Integers, Coefficient::Rationals, Coefficient::PrimeField(2)],
            families: Family::ALL.to_vec(),
            budget_ms: None,
            jobs: 0,
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn only(mut self, family: Family) -> Self {
        self.families = vec![family];
        self
    }

    fn fields(&self) -> Vec<Coefficient> {
        self.coefficients.iter().copied().filter(Coefficient::is_field).collect()
    }
}

/// Result of one route or property inside a record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds(bool),
    Budget,
    Failed(String),
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Outcome::Holds(b) => s.serialize_bool(*b),
            Outcome::Budget => s.serialize_str("budget"),
            Outcome::Failed(e) => s.serialize_str(&format!("error: {e}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<Coefficient>,
    pub instance: String,
    pub verdicts: BTreeMap<String, Outcome>,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl CheckRecord {
    pub fn has_budget(&self) -> bool {
        self.verdicts.values().any(|v| *v == Outcome::Budget)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub records: usize,
    pub disagreements: usize,
    pub budget_exhausted: usize,
    /// Distinct instances per family.
    pub instances: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn disagreements(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.agreement)
    }
}

/// Collects outcomes for one task.
pub struct Probe {
    checker: Checker,
    verdicts: BTreeMap<String, Outcome>,
    witness: Option<Witness>,
    skipped: bool,
}

impl Probe {
    pub fn checker(&self) -> &Checker {
        &self.checker
    }

    fn record(&mut self, name: impl Into<String>, r: Result<(bool, Option<Witness>)>) -> Option<bool> {
        let (outcome, value) = match r {
            Ok((b, w)) => {
                if !b && self.witness.is_none() {
                    self.witness = w;
                }
                (Outcome::Holds(b), Some(b))
            }
            Err(Error::BudgetExhausted) => (Outcome::Budget, None),
            Err(e) => (Outcome::Failed(e.to_string()), None),
        };
        self.verdicts.insert(name.into(), outcome);
        value
    }

    pub fn verdict(&mut self, name: impl Into<String>, r: Result<ScmVerdict>) -> Option<bool> {
        self.record(name, r.map(|v| (v.verdict, v.witness)))
    }

    pub fn flag(&mut self, name: impl Into<String>, r: Result<bool>) -> Option<bool> {
        self.record(name, r.map(|b| (b, None)))
    }

    /// Drops the record: an implication whose premise does not hold.
    pub fn skip(&mut self) {
        self.skipped = true;
    }
}

type Run = Arc<dyn Fn(&mut Probe) + Send + Sync>;

struct Task {
    family: Family,
    name: String,
    coeff: Option<Coefficient>,
    digest: String,
    run: Run,
}

pub fn digest(text: &str) -> String {
    let h = Sha256::digest(text.as_bytes());
    hex::encode(&h[..8])
}

fn complex_digest(c: &SimplicialComplex) -> String {
    digest(&format!("complex\n{}", write_facets(c)))
}

fn poset_digest(p: &FinitePoset) -> String {
    digest(&format!("poset\n{}", write_poset(p)))
}

fn pair_digest(a: &str, b: &str) -> String {
    digest(&format!("{a}\n--\n{b}"))
}

fn task(family: Family, name: &str, coeff: Option<Coefficient>, digest: String, run: impl Fn(&mut Probe) + Send + Sync + 'static) -> Task {
    Task { family, name: format!("{}/{}", family.name(), name), coeff, digest, run: Arc::new(run) }
}

fn coeff_name(c: Coefficient) -> String {
    c.code()
}

// ---------------------------------------------------------------- instances

const STREAM_COMPLEX: u64 = 1;
const STREAM_SHELLABLE: u64 = 2;
const STREAM_POSET: u64 = 3;
const STREAM_SEMIPURE: u64 = 4;
const STREAM_PAIR_A: u64 = 5;
const STREAM_PAIR_B: u64 = 6;
const STREAM_HOMOLOGY: u64 = 7;

/// The first `count` distinct draws (by digest) over indices `0..`, giving up
/// after `DRAW_LIMIT * count` attempts.
fn distinct<T>(count: usize, key: impl Fn(&T) -> String, draw: impl Fn(u64) -> Option<T>) -> Vec<T> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count && i < (DRAW_LIMIT * count.max(1)) as u64 {
        if let Some(x) = draw(i) {
            if seen.insert(key(&x)) {
                out.push(x);
            }
        }
        i += 1;
    }
    out
}

const DRAW_LIMIT: usize = 50;

/// Distinct seeded random complexes with `max(1, max_v - 3) ..= max_v` vertices.
pub fn random_complexes(seed: u64, stream: u64, count: usize, max_v: usize) -> Vec<SimplicialComplex> {
    distinct(count, complex_digest, |i| {
        let s = derive_seed(seed, stream, i);
        let mut r = rng(s);
        let lo = max_v.saturating_sub(3).max(1);
        let n = r.gen_range(lo..=max_v.max(lo));
        let density = [0.35, 0.5, 0.65][r.gen_range(0..3)];
        Some(generate_random_complex(n, density, s).expect("within bounds"))
    })
}

/// Distinct seeded shellable complexes with 3..=max_v vertices and up to 8 facets.
pub fn shellable_complexes(seed: u64, stream: u64, count: usize, max_v: usize) -> Vec<ShellableInstance> {
    distinct(count, |inst: &ShellableInstance| complex_digest(&inst.complex), |i| {
        let s = derive_seed(seed, stream, i);
        let mut r = rng(s);
        let n = r.gen_range(3.min(max_v)..=max_v);
        let mut facets = r.gen_range(1..=8);
        loop {
            if let Ok(inst) = generate_shellable(n, facets, s) {
                return Some(inst);
            }
            facets -= 1;
        }
    })
}

/// Distinct seeded random posets with `1..=max_m` elements.
pub fn random_posets(seed: u64, stream: u64, count: usize, max_m: usize) -> Vec<FinitePoset> {
    distinct(count, poset_digest, |i| Some(random_poset_draw(seed, stream, max_m, i)))
}

fn random_poset_draw(seed: u64, stream: u64, max_m: usize, i: u64) -> FinitePoset {
    let s = derive_seed(seed, stream, i);
    let mut r = rng(s);
    let m = r.gen_range(1..=max_m);
    let density = [0.2, 0.35, 0.5][r.gen_range(0..3)];
    generate_random_poset(m, density, s).expect("within bounds")
}

fn semipure_draw(seed: u64, stream: u64, max_m: usize, i: u64) -> Option<FinitePoset> {
    let s = derive_seed(seed, stream, i);
    let m = rng(s).gen_range(2.min(max_m)..=max_m);
    generate_semipure_poset(m, s).ok()
}

/// Distinct seeded semipure posets with `2..=max_m` elements.
pub fn semipure_posets(seed: u64, stream: u64, count: usize, max_m: usize) -> Vec<FinitePoset> {
    distinct(count, poset_digest, |i| semipure_draw(seed, stream, max_m, i))
}

/// The first `count` distinct seeded semipure posets that are SCM over `coeff`.
pub fn scm_semipure_posets(seed: u64, stream: u64, count: usize, max_m: usize, coeff: Coefficient) -> Vec<FinitePoset> {
    let checker = Checker::new(coeff);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut start = 0u64;
    let batch = (count as u64).max(8) * 4;
    while out.len() < count && start < batch * DRAW_LIMIT as u64 {
        let found: Vec<FinitePoset> = (start..start + batch)
            .into_par_iter()
            .filter_map(|i| {
                let p = semipure_draw(seed, stream, max_m, i)?;
                checker.poset_is_scm_intervals(&p).ok()?.verdict.then_some(p)
            })
            .collect();
        out.extend(found.into_iter().filter(|p| seen.insert(poset_digest(p))));
        start += batch;
    }
    out.truncate(count);
    out
}

/// Shifts the vertices of `b` past those of `a`.
pub fn disjoint_copy(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let offset = a.ground().iter().max().copied().unwrap_or(0);
    let map: BTreeMap<u32, u32> = b.ground().iter().map(|&v| (v, v + offset)).collect();
    b.relabel(&map)
}

/// `c`-fold max-deletion in the face poset: generated by the
/// `(|G| - c)`-subsets of every facet `G`.
pub fn coskeleton(c: &SimplicialComplex, codim: usize) -> SimplicialComplex {
    let faces: Vec<Face> = c
        .facets()
        .iter()
        .filter(|g| g.len() > codim)
        .flat_map(|g| g.subsets_of_size(g.len() - codim))
        .collect();
    if faces.is_empty() {
        return SimplicialComplex::empty(c.ground().iter().copied());
    }
    SimplicialComplex::from_facets(faces, c.ground().iter().copied()).expect("subfaces of facets")
}

fn subsets(items: &[usize]) -> Vec<BTreeSet<usize>> {
    (1u32..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect())
        .collect()
}

fn set_name(s: &BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", v.join(","))
}

/// Removes the listed elements.
fn remove(p: &FinitePoset, gone: &[usize]) -> FinitePoset {
    p.filter(|x| !gone.contains(&x))
}

// ------------------------------------------------------------------ families

fn homology_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in random_complexes(cfg.seed, STREAM_HOMOLOGY, cfg.samples, cfg.homology_vertices) {
        let d = complex_digest(&c);
        let c = Arc::new(c);
        let cc = c.clone();
        tasks.push(task(Family::Homology, "uct", None, d.clone(), move |p| {
            let z = reduced_homology(&cc, Coefficient::Integers);
            let top = cc.dim().unwrap_or(-1);
            for prime in [2u64, 3, 5] {
                let fp = reduced_homology(&cc, Coefficient::PrimeField(prime as u32));
                let ok = (-1..=top).all(|r| {
                    let divisible = |deg: i32| z.torsion_u64(deg).iter().filter(|&&t| t % prime == 0).count();
                    fp.betti(r) == z.betti(r) + divisible(r) + if r > -1 { divisible(r - 1) } else { 0 }
                });
                p.flag(format!("f{prime}"), Ok(ok));
            }
            p.flag("expected", Ok(true));
        }));
        tasks.push(task(Family::Homology, "euler", None, d, move |p| {
            let q = reduced_homology(&c, Coefficient::Rationals);
            let sign = |r: i32| if r.rem_euclid(2) == 0 { 1i64 } else { -1 };
            // f_vector starts at f_{-1}
            let faces: i64 = c.f_vector().iter().enumerate().map(|(i, &f)| sign(i as i32 - 1) * f as i64).sum();
            let top = c.dim().unwrap_or(-1);
            let homology: i64 = (-1..=top).map(|r| sign(r) * q.betti(r) as i64).sum();
            p.flag("faces", Ok(faces == homology));
            p.flag("expected", Ok(true));
        }));
    }
    tasks
}

fn scm_complexes(cfg: &SuiteConfig) -> Vec<SimplicialComplex> {
    let mut cs = canonical_complexes_upto(cfg.exhaustive_vertices.min(5)).expect("within bounds");
    cs.extend(random_complexes(cfg.seed, STREAM_COMPLEX, cfg.samples, cfg.max_vertices));
    cs
}

fn routes_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in complexes {
        let d = complex_digest(c);
        let c = Arc::new(c.clone());
        for &k in &cfg.coefficients {
            let c = c.clone();
            tasks.push(task(Family::Routes, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("links", ch.is_scm_links(&c));
                p.verdict("duval", ch.is_scm_duval(&c));
                p.verdict("filtration", ch.is_scm_filtration(&c));
                if k.is_field() {
                    p.verdict("dual", ch.is_scm_dual(&c));
                }
            }));
        }
    }
    tasks
}

fn pure_collapse_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in complexes.iter().filter(|c| c.is_pure() && !c.is_void()) {
        let d = complex_digest(c);
        let c = Arc::new(c.clone());
        for &k in &cfg.coefficients {
            let c = c.clone();
            tasks.push(task(Family::PureCollapse, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("links", ch.is_scm_links(&c));
                p.verdict("cm", ch.is_cm(&c));
            }));
        }
    }
    tasks
}

fn shellable_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for inst in shellable_complexes(cfg.seed, STREAM_SHELLABLE, cfg.samples, cfg.homology_vertices) {
        let d = complex_digest(&inst.complex);
        let inst = Arc::new(inst);
        for &k in &cfg.coefficients {
            let inst = inst.clone();
            tasks.push(task(Family::Shellable, &coeff_name(k), Some(k), d.clone(), move |p| {
                p.flag("certified_order", Ok(is_shelling_order(&inst.order)));
                p.flag("shellable", Ok(is_shellable(&inst.complex).is_shellable()));
                let ch = *p.checker();
                p.verdict("links", ch.is_scm_links(&inst.complex));
            }));
        }
    }
    tasks
}

fn join_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let max_v = cfg.max_vertices.min(5);
    let a = random_complexes(cfg.seed, STREAM_PAIR_A, cfg.samples, max_v);
    let b = random_complexes(cfg.seed, STREAM_PAIR_B, cfg.samples, max_v);
    let mut tasks = Vec::new();
    for (x, y) in a.into_iter().zip(b) {
        let y = disjoint_copy(&x, &y);
        let d = pair_digest(&write_facets(&x), &write_facets(&y));
        let j = Arc::new((x.join(&y).expect("disjoint grounds"), x, y));
        for &k in &cfg.coefficients {
            let j1 = j.clone();
            tasks.push(task(Family::Join, &format!("scm/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (join, x, y) = &*j1;
                p.verdict("join", ch.is_scm_links(join));
                let fx = ch.is_scm_links(x).map(|v| v.verdict);
                let fy = ch.is_scm_links(y).map(|v| v.verdict);
                p.flag("factors", fx.and_then(|a| fy.map(|b| a && b)));
            }));
            let j2 = j.clone();
            tasks.push(task(Family::Join, &format!("acyclic/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (join, x, y) = &*j2;
                let premise = (p.verdict("left", ch.is_sequentially_acyclic(x)), p.verdict("right", ch.is_sequentially_acyclic(y)));
                if premise != (Some(true), Some(true)) {
                    return p.skip();
                }
                p.verdict("join", ch.is_sequentially_acyclic(join));
            }));
        }
    }
    tasks
}

fn poset_pairs(cfg: &SuiteConfig, max_m: usize) -> Vec<(FinitePoset, FinitePoset)> {
    let key = |(a, b): &(FinitePoset, FinitePoset)| pair_digest(&write_poset(a), &write_poset(b));
    distinct(cfg.samples, key, |i| {
        let a = random_poset_draw(cfg.seed, STREAM_PAIR_A, max_m, i);
        let b = random_poset_draw(cfg.seed, STREAM_PAIR_B, max_m, i);
        Some((a, b.with_label_prefix("q")))
    })
}

fn scm(ch: &Checker, p: &FinitePoset) -> Result<bool> {
    ch.poset_is_scm_intervals(p).map(|v| v.verdict)
}

fn seq(ch: &Checker, p: &FinitePoset) -> Result<bool> {
    ch.is_sequentially_acyclic(&p.order_complex()).map(|v| v.verdict)
}

fn both(a: Result<bool>, b: Result<bool>) -> Result<bool> {
    Ok(a? && b?)
}

fn ordinal_sum_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for (a, b) in poset_pairs(cfg, cfg.max_elements.min(5)) {
        let d = pair_digest(&write_poset(&a), &write_poset(&b));
        let sum = a.ordinal_sum(&b).expect("disjoint labels");
        let data = Arc::new((sum, a, b));
        for &k in &cfg.coefficients {
            let d1 = data.clone();
            tasks.push(task(Family::OrdinalSum, &format!("scm/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (sum, a, b) = &*d1;
                p.verdict("sum", ch.poset_is_scm_intervals(sum));
                p.flag("factors", both(scm(&ch, a), scm(&ch, b)));
            }));
            // only the forward implication: a cone point makes any sum acyclic
            let d2 = data.clone();
            tasks.push(task(Family::OrdinalSum, &format!("acyclic/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (sum, a, b) = &*d2;
                if (p.flag("left", seq(&ch, a)), p.flag("right", seq(&ch, b))) != (Some(true), Some(true)) {
                    return p.skip();
                }
                p.flag("sum", seq(&ch, sum));
            }));
        }
    }
    tasks
}

fn order_complex_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for poset in random_posets(cfg.seed, STREAM_POSET, cfg.samples, cfg.max_elements) {
        let d = poset_digest(&poset);
        let poset = Arc::new(poset);
        for &k in &cfg.coefficients {
            let poset = poset.clone();
            tasks.push(task(Family::OrderComplex, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("intervals", ch.poset_is_scm_intervals(&poset));
                p.verdict("links", ch.is_scm_links(&poset.order_complex()));
            }));
        }
    }
    tasks
}

fn barycentric_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in canonical_complexes_upto(cfg.exhaustive_vertices.min(5)).expect("within bounds") {
        let d = complex_digest(&c);
        let Ok(fp) = FinitePoset::face_poset(&c) else { continue };
        let data = Arc::new((c, fp));
        for &k in &cfg.coefficients {
            let data = data.clone();
            tasks.push(task(Family::Barycentric, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (c, fp) = &*data;
                p.verdict("complex", ch.is_scm_links(c));
                p.verdict("face_poset", ch.poset_is_scm_intervals(fp));
            }));
        }
    }
    tasks
}

fn products_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for (a, b) in poset_pairs(cfg, cfg.max_elements.min(5) - 1) {
        let d = pair_digest(&write_poset(&a), &write_poset(&b));
        let data = Arc::new((a, b));
        for &k in &cfg.coefficients {
            let d1 = data.clone();
            tasks.push(task(Family::Products, &format!("with-minima/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (a, b) = (d1.0.adjoin_bounds(true, false), d1.1.adjoin_bounds(true, false));
                p.verdict("product", ch.poset_is_scm_intervals(&a.product(&b)));
                p.flag("factors", both(scm(&ch, &a), scm(&ch, &b)));
            }));
            let d2 = data.clone();
            tasks.push(task(Family::Products, &format!("minus-extremes/{}", coeff_name(k)), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (a, b) = &*d2;
                let premise = (p.flag("left", seq(&ch, a)), p.flag("right", seq(&ch, b)));
                if premise != (Some(true), Some(true)) {
                    return p.skip();
                }
                let (a1, b1) = (a.adjoin_bounds(true, false), b.adjoin_bounds(true, false));
                let prod = a1.product(&b1);
                let bottom = prod.minimum().expect("product of posets with minima");
                p.flag("bottom_removed", seq(&ch, &remove(&prod, &[bottom])));
                let (a2, b2) = (a.adjoin_bounds(true, true), b.adjoin_bounds(true, true));
                let prod = a2.product(&b2);
                let ends = [prod.minimum().expect("bounded"), prod.maximum().expect("bounded")];
                p.flag("bounds_removed", seq(&ch, &remove(&prod, &ends)));
            }));
        }
    }
    tasks
}

fn interval_poset_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for poset in random_posets(cfg.seed, STREAM_PAIR_A, cfg.samples, cfg.max_elements.min(6)) {
        let d = poset_digest(&poset);
        let data = Arc::new((poset.interval_poset(), poset));
        for &k in &cfg.coefficients {
            let data = data.clone();
            tasks.push(task(Family::IntervalPoset, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("interval_poset", ch.poset_is_scm_intervals(&data.0));
                p.verdict("poset", ch.poset_is_scm_intervals(&data.1));
            }));
        }
    }
    tasks
}

fn preservation_posets(cfg: &SuiteConfig) -> Vec<FinitePoset> {
    scm_semipure_posets(cfg.seed, STREAM_SEMIPURE, cfg.samples, cfg.semipure_elements, Coefficient::Rationals)
}

fn preservation_tasks(cfg: &SuiteConfig, posets: &[FinitePoset]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for poset in posets {
        let d = poset_digest(poset);
        let poset = Arc::new(poset.clone());
        for &k in &cfg.coefficients {
            let poset = poset.clone();
            tasks.push(task(Family::Preservation, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                if p.flag("premise", scm(&ch, &poset)) != Some(true) {
                    return p.skip();
                }
                let top = poset.top_rank();
                for s in subsets(&(0..=top).collect::<Vec<_>>()) {
                    let r = poset.rank_selected(&s).and_then(|sel| scm(&ch, &sel));
                    p.flag(format!("rank_selected{}", set_name(&s)), r);
                }
                for t in 0..=top {
                    p.flag(format!("max_deleted{t}"), scm(&ch, &poset.max_deleted(t)));
                }
                // bounded instance: P̂ is SCM exactly when P is
                let hat = poset.adjoin_bounds(true, true);
                let len = hat.top_rank();
                for s in 0..len {
                    for t in 0..len {
                        let r = hat.truncation(s, t).and_then(|tr| scm(&ch, &tr));
                        p.flag(format!("truncation{s},{t}"), r);
                    }
                }
            }));
        }
    }
    tasks
}

fn skeleta_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for inst in shellable_complexes(cfg.seed, STREAM_PAIR_B, cfg.samples, cfg.max_vertices) {
        let d = complex_digest(&inst.complex);
        let c = Arc::new(inst.complex);
        for &k in &cfg.coefficients {
            let c = c.clone();
            tasks.push(task(Family::Skeleta, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                if p.verdict("premise", ch.is_scm_links(&c)) != Some(true) {
                    return p.skip();
                }
                let dim = c.dim().unwrap_or(-1);
                for r in 0..dim {
                    p.verdict(format!("skeleton{r}"), ch.is_scm_links(&c.skeleton(r)));
                }
                for codim in 1..=dim.max(0) as usize {
                    p.verdict(format!("coskeleton{codim}"), ch.is_scm_links(&coskeleton(&c, codim)));
                }
            }));
        }
    }
    tasks
}

fn type_selection_tasks(cfg: &SuiteConfig, posets: &[FinitePoset]) -> Vec<Task> {
    let mut balanced: Vec<(SimplicialComplex, crate::complex::VertexColoring)> = Vec::new();
    for poset in posets.iter().filter(|p| p.len() <= 9) {
        balanced.push((poset.order_complex(), poset.rank_coloring().expect("semipure")));
    }
    for inst in shellable_complexes(cfg.seed, STREAM_SHELLABLE ^ 0xff, cfg.samples / 4, 4) {
        let fp = FinitePoset::face_poset(&inst.complex).expect("face poset");
        balanced.push((fp.order_complex(), fp.rank_coloring().expect("face posets are semipure")));
    }
    let mut tasks = Vec::new();
    for (c, coloring) in balanced {
        let d = complex_digest(&c);
        let data = Arc::new((c, coloring));
        for &k in &cfg.coefficients {
            let data = data.clone();
            tasks.push(task(Family::TypeSelection, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let (c, coloring) = &*data;
                p.flag("balanced", Ok(c.is_completely_balanced(coloring)));
                if p.verdict("premise", ch.is_scm_links(c)) != Some(true) {
                    return p.skip();
                }
                let colors: Vec<usize> = coloring.colors().into_iter().map(|x| x as usize).collect();
                for s in subsets(&colors) {
                    let cs: BTreeSet<u32> = s.iter().map(|&x| x as u32).collect();
                    let r = c.type_selected(coloring, &cs).and_then(|sel| ch.is_scm_links(&sel));
                    p.verdict(format!("type{}", set_name(&s)), r);
                }
            }));
        }
    }
    tasks
}

fn semipure_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    // half arbitrary, half SCM; the SCM half is topped up past any overlap
    let mut posets = semipure_posets(cfg.seed, STREAM_SEMIPURE, cfg.samples / 2, cfg.semipure_elements);
    let mut seen: BTreeSet<String> = posets.iter().map(poset_digest).collect();
    let scm = scm_semipure_posets(cfg.seed, STREAM_SEMIPURE ^ 0xff, cfg.samples, cfg.semipure_elements, Coefficient::Rationals);
    for p in scm {
        if posets.len() >= cfg.samples {
            break;
        }
        if seen.insert(poset_digest(&p)) {
            posets.push(p);
        }
    }
    for poset in posets {
        let d = poset_digest(&poset);
        let poset = Arc::new(poset);
        for &k in &cfg.coefficients {
            let poset = poset.clone();
            tasks.push(task(Family::Semipure, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("intervals", ch.poset_is_scm_intervals(&poset));
                p.verdict("rank_layers", ch.semipure_is_scm_rankgen(&poset));
                for (level, lname) in [(RankLevel::Layers, "layers"), (RankLevel::Ideals, "ideals")] {
                    for (mode, mname) in [(RankSetMode::AllSubsets, "all-subsets"), (RankSetMode::RankIntervals, "rank-intervals")] {
                        p.verdict(format!("{lname}/{mname}"), ch.rank_selection_profile(&poset, mode, level));
                    }
                }
            }));
        }
    }
    tasks
}

fn freeness_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    let mut all: Vec<SimplicialComplex> = complexes.to_vec();
    all.extend(shellable_complexes(cfg.seed, STREAM_SHELLABLE ^ 0xf0, cfg.samples, cfg.max_vertices).into_iter().map(|i| i.complex));
    for c in all {
        let d = complex_digest(&c);
        tasks.push(task(Family::Freeness, "z", Some(Coefficient::Integers), d, move |p| {
            let ch = *p.checker();
            if p.verdict("premise", ch.is_sequentially_acyclic(&c)) != Some(true) {
                return p.skip();
            }
            let h = reduced_homology(&c, Coefficient::Integers);
            let top = c.dim().unwrap_or(-1);
            p.flag("torsion_free", Ok((-1..=top).all(|r| h.torsion(r).is_empty())));
            let dims: BTreeSet<i32> = c.facets().iter().map(Face::dim).collect();
            p.flag("facet_free_vanishing", Ok((-1..=top).filter(|r| !dims.contains(r)).all(|r| h.betti(r) == 0)));
        }));
    }
    tasks
}

fn pure_dual_ideals(complexes: &[SimplicialComplex]) -> Vec<SimplicialComplex> {
    complexes.iter().filter(|c| c.is_pure() && !c.is_void()).cloned().collect()
}

fn eagon_reiner_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in pure_dual_ideals(complexes) {
        let d = complex_digest(&c);
        let c = Arc::new(c);
        for k in cfg.fields() {
            let c = c.clone();
            tasks.push(task(Family::EagonReiner, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.verdict("cm", ch.is_cm(&c));
                let ideal = stanley_reisner_generators(&c.alexander_dual());
                p.flag("linear_resolution", ch.has_linear_resolution(&ideal));
            }));
        }
    }
    tasks
}

fn hochster_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    let mut pool = canonical_complexes_upto(MAX_CANONICAL_VERTICES).expect("within bounds");
    pool.extend(complexes.iter().filter(|c| c.ground().len() <= 6).cloned());
    for c in pure_dual_ideals(&pool) {
        let d = complex_digest(&c);
        let ideal = Arc::new(stanley_reisner_generators(&c.alexander_dual()));
        for k in cfg.fields() {
            let ideal = ideal.clone();
            tasks.push(task(Family::Hochster, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                p.flag("linear_resolution", ch.has_linear_resolution(&ideal));
                let deg = ideal.degrees().first().copied().unwrap_or(0);
                p.flag("betti_linear", hochster_betti_ideal(&ideal.complex(), k).map(|t| t.is_linear(deg)));
            }));
        }
    }
    tasks
}

fn relative_tasks(cfg: &SuiteConfig, complexes: &[SimplicialComplex]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for c in complexes {
        let d = complex_digest(c);
        let c = Arc::new(c.clone());
        for &k in &cfg.coefficients {
            let c = c.clone();
            tasks.push(task(Family::Relative, &coeff_name(k), Some(k), d.clone(), move |p| {
                let ch = *p.checker();
                let pair = RelativePair::new((*c).clone(), SimplicialComplex::void(c.ground().iter().copied())).expect("void is a subcomplex");
                p.verdict("relative", ch.relative_is_cm(&pair));
                p.verdict("absolute", ch.is_cm(&c));
            }));
        }
    }
    tasks
}

fn build_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let families: BTreeSet<Family> = cfg.families.iter().copied().collect();
    let needs_complexes = families.iter().any(|f| {
        matches!(f, Family::Routes | Family::PureCollapse | Family::Freeness | Family::EagonReiner | Family::Hochster | Family::Relative)
    });
    let complexes = if needs_complexes { scm_complexes(cfg) } else { Vec::new() };
    let preserved = if families.contains(&Family::Preservation) || families.contains(&Family::TypeSelection) {
        preservation_posets(cfg)
    } else {
        Vec::new()
    };
    let mut tasks = Vec::new();
    for f in families {
        tasks.extend(match f {
            Family::Homology => homology_tasks(cfg),
            Family::Routes => routes_tasks(cfg, &complexes),
            Family::PureCollapse => pure_collapse_tasks(cfg, &complexes),
            Family::Shellable => shellable_tasks(cfg),
            Family::Join => join_tasks(cfg),
            Family::OrdinalSum => ordinal_sum_tasks(cfg),
            Family::OrderComplex => order_complex_tasks(cfg),
            Family::Barycentric => barycentric_tasks(cfg),
            Family::Products => products_tasks(cfg),
            Family::IntervalPoset => interval_poset_tasks(cfg),
            Family::Preservation => preservation_tasks(cfg, &preserved),
            Family::Skeleta => skeleta_tasks(cfg),
            Family::TypeSelection => type_selection_tasks(cfg, &preserved),
            Family::Semipure => semipure_tasks(cfg),
            Family::Freeness => freeness_tasks(cfg, &complexes),
            Family::EagonReiner => eagon_reiner_tasks(cfg, &complexes),
            Family::Hochster => hochster_tasks(cfg, &complexes),
            Family::Relative => relative_tasks(cfg, &complexes),
        });
    }
    tasks
}

fn run_task(t: &Task, cfg: &SuiteConfig) -> Option<CheckRecord> {
    let start = Instant::now();
    let coeff = t.coeff.unwrap_or(Coefficient::Integers);
    let deadline = cfg.budget_ms.map(|ms| start + Duration::from_millis(ms));
    let mut probe = Probe { checker: Checker::with_deadline(coeff, deadline), verdicts: BTreeMap::new(), witness: None, skipped: false };
    (t.run)(&mut probe);
    if probe.skipped {
        return None;
    }
    let decided: BTreeSet<bool> = probe.verdicts.values().filter_map(|v| if let Outcome::Holds(b) = v { Some(*b) } else { None }).collect();
    let failed = probe.verdicts.values().any(|v| matches!(v, Outcome::Failed(_)));
    Some(CheckRecord {
        name: t.name.clone(),
        family: t.family,
        coefficient: t.coeff,
        instance: t.digest.clone(),
        agreement: decided.len() <= 1 && !failed,
        verdicts: probe.verdicts,
        witness: probe.witness,
        wall_ms: cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Runs every selected family and returns a report sorted by instance digest
/// and check name.
pub fn run_equivalence_suite(config: &SuiteConfig) -> Report {
    let go = || {
        let tasks = build_tasks(config);
        let mut records: Vec<CheckRecord> = tasks.par_iter().filter_map(|t| run_task(t, config)).collect();
        records.sort_by(|a, b| (&a.instance, &a.name).cmp(&(&b.instance, &b.name)));
        records
    };
    let records = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build().expect("thread pool").install(go)
    } else {
        go()
    };
    let mut summary = Summary { records: records.len(), ..Summary::default() };
    let mut seen: BTreeMap<String, BTreeSet<&str>> = BTreeMap::new();
    for r in &records {
        summary.disagreements += usize::from(!r.agreement);
        summary.budget_exhausted += usize::from(r.has_budget());
        seen.entry(r.family.name().to_string()).or_default().insert(&r.instance);
    }
    summary.instances = seen.into_iter().map(|(k, v)| (k, v.len())).collect();
    Report { tool_version: env!("CARGO_PKG_VERSION"), config: config.clone(), summary, records }
}
