//! Decision procedures for acyclicity, Cohen–Macaulayness and sequential
//! Cohen–Macaulayness, each computed from homology.
//!
//! The routes are implemented independently of each other so that their
//! agreement can be tested:
//!
//! * links: every link (including `lk ∅ = Δ`) is sequentially acyclic;
//! * pure skeleta: every `Δ^[r]` is Cohen–Macaulay;
//! * poset intervals: every open interval of `P̂` is sequentially acyclic;
//! * rank layers: every `P^[j]` of a semipure poset is Cohen–Macaulay;
//! * rank selections: the conditions on `(P^[j])_S` and `(P^⟨j⟩)_S`.
//!
//! The filtration and Alexander-dual routes live in [`crate::sr`].
//!
//! Faces are visited by increasing dimension, then lexicographically, and
//! the first failure in that order is the reported witness regardless of how
//! the work is scheduled.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{first_nonvanishing_degree, Coefficient};
use crate::poset::FinitePoset;

/// Why a check failed; each variant names one homology group to recompute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `H̃_degree(Δ^⟨m⟩) ≠ 0` with `degree < m`.
    Sequential { m: i32, degree: i32 },
    /// `lk F` is not homology-spherical: `H̃_degree(lk F) ≠ 0` below its top dimension.
    Spherical { face: Face, degree: i32 },
    /// `lk F` is not sequentially acyclic.
    Link { face: Face, m: i32, degree: i32 },
    /// `Δ^[r]` is not Cohen–Macaulay, failing at `face`.
    PureSkeleton { r: i32, face: Face, degree: i32 },
    /// The open interval `(lower, upper)` of `P̂` is not sequentially acyclic.
    Interval { lower: String, upper: String, m: i32, degree: i32 },
    /// `Δ(P^[j])` is not Cohen–Macaulay; `chain` is the offending face.
    RankLayer { j: usize, chain: Vec<String>, degree: i32 },
    /// A rank-selected subposet has nonzero homology in `degree`.
    RankSelection { j: usize, ranks: Vec<usize>, degree: i32 },
    /// `Δ(P_S)` is not sequentially acyclic.
    RankSelectionSequential { ranks: Vec<usize>, m: i32, degree: i32 },
    /// Relative link homology of `(lk_Δ F, lk_Γ F)` is nonzero below the top.
    Relative { face: Face, degree: i32 },
    /// The pair `(Δ_layer, Δ_layer ∩ Δ^⟨layer+1⟩)` is not relatively Cohen–Macaulay.
    Filtration { layer: i32, face: Face, degree: i32 },
    /// The squarefree degree-`d` part of the dual ideal has no linear resolution.
    ComponentwiseLinear { d: usize, face: Face, degree: i32 },
}

/// Outcome of a check: `witness` is set exactly when `verdict` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScmVerdict {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub coefficient: Coefficient,
}

impl ScmVerdict {
    pub(crate) fn from_failure(coefficient: Coefficient, failure: Option<Witness>) -> Self {
        ScmVerdict { verdict: failure.is_none(), witness: failure, coefficient }
    }
}

/// Runs checks over one coefficient ring, optionally under a wall-clock deadline.
#[derive(Clone, Copy, Debug)]
pub struct Checker {
    coeff: Coefficient,
    deadline: Option<Instant>,
}

impl Checker {
    pub fn new(coeff: Coefficient) -> Self {
        Checker { coeff, deadline: None }
    }

    pub fn with_budget(coeff: Coefficient, budget: Duration) -> Self {
        Checker { coeff, deadline: Some(Instant::now() + budget) }
    }

    pub fn with_deadline(coeff: Coefficient, deadline: Option<Instant>) -> Self {
        Checker { coeff, deadline }
    }

    pub fn coefficient(&self) -> Coefficient {
        self.coeff
    }

    pub(crate) fn tick(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::BudgetExhausted),
            _ => Ok(()),
        }
    }

    /// First nonvanishing degree `<= t`, after checking the budget.
    pub(crate) fn nonvanishing(&self, complex: &SimplicialComplex, t: i32) -> Result<Option<i32>> {
        self.tick()?;
        Ok(first_nonvanishing_degree(complex, t, self.coeff))
    }

    fn verdict(&self, failure: Option<Witness>) -> ScmVerdict {
        ScmVerdict::from_failure(self.coeff, failure)
    }

    /// `(m, degree)` of the first `m` for which `Δ^⟨m⟩` is not `(m-1)`-acyclic.
    pub(crate) fn sequential_failure(&self, complex: &SimplicialComplex) -> Result<Option<(i32, i32)>> {
        let Some(dim) = complex.dim() else { return Ok(None) };
        // Δ^⟨m⟩ is constant on runs a..=b of m; one computation up to degree b-1 covers the run
        let mut a = 0;
        while a <= dim {
            let gen = complex.generated_above(a);
            let mut b = a;
            while b < dim && complex.generated_above(b + 1).facets().len() == gen.facets().len() {
                b += 1;
            }
            if let Some(r) = self.nonvanishing(&gen, b - 1)? {
                return Ok(Some((a.max(r + 1), r)));
            }
            a = b + 1;
        }
        Ok(None)
    }

    pub fn is_sequentially_acyclic(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let w = self.sequential_failure(complex)?.map(|(m, degree)| Witness::Sequential { m, degree });
        Ok(self.verdict(w))
    }

    /// Failing degree when `Δ` is not `(dim Δ - 1)`-acyclic.
    pub(crate) fn spherical_failure(&self, complex: &SimplicialComplex) -> Result<Option<i32>> {
        match complex.dim() {
            None | Some(-1) => Ok(None),
            Some(d) => self.nonvanishing(complex, d - 1),
        }
    }

    pub fn is_homology_spherical(&self, complex: &SimplicialComplex) -> Result<bool> {
        Ok(self.spherical_failure(complex)?.is_none())
    }

    /// First `(F, degree)` with `lk F` not homology-spherical.
    pub(crate) fn cm_failure(&self, complex: &SimplicialComplex) -> Result<Option<(Face, i32)>> {
        let faces = complex.faces();
        first_failure(&faces, |f| {
            let lk = complex.link(f).expect("face of the complex");
            Ok(self.spherical_failure(&lk)?.map(|d| (f.clone(), d)))
        })
    }

    /// Every link, including `lk ∅ = Δ`, is homology-spherical.
    pub fn is_cm(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let w = self.cm_failure(complex)?.map(|(face, degree)| Witness::Spherical { face, degree });
        Ok(self.verdict(w))
    }

    /// Every link, including `lk ∅ = Δ`, is sequentially acyclic.
    pub fn is_scm_links(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let faces = complex.faces();
        let w = first_failure(&faces, |f| {
            let lk = complex.link(f).expect("face of the complex");
            Ok(self.sequential_failure(&lk)?.map(|(m, degree)| Witness::Link { face: f.clone(), m, degree }))
        })?;
        Ok(self.verdict(w))
    }

    /// Every pure skeleton `Δ^[r]`, `0 <= r <= dim Δ`, is Cohen–Macaulay.
    pub fn is_scm_duval(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let Some(dim) = complex.dim() else { return Ok(self.verdict(None)) };
        for r in 0..=dim {
            let sk = complex.pure_skeleton(r).expect("r within range");
            if let Some((face, degree)) = self.cm_failure(&sk)? {
                return Ok(self.verdict(Some(Witness::PureSkeleton { r, face, degree })));
            }
        }
        Ok(self.verdict(None))
    }

    /// Every open interval of `P̂` is sequentially acyclic.
    pub fn poset_is_scm_intervals(&self, poset: &FinitePoset) -> Result<ScmVerdict> {
        let hat = poset.adjoin_bounds(true, true);
        let (bot, top) = (poset.len(), poset.len() + 1);
        // (0̂, 1̂) first, then lower and upper intervals, then interior ones
        let mut pairs = vec![(bot, top)];
        pairs.extend((0..poset.len()).map(|y| (bot, y)));
        pairs.extend((0..poset.len()).map(|x| (x, top)));
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                if poset.less(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        let w = first_failure(&pairs, |&(x, y)| {
            let iv = hat.open_interval(x, y).expect("x < y");
            Ok(self.sequential_failure(&iv.order_complex())?.map(|(m, degree)| Witness::Interval {
                lower: hat.label(x).to_string(),
                upper: hat.label(y).to_string(),
                m,
                degree,
            }))
        })?;
        Ok(self.verdict(w))
    }

    /// Every rank layer `P^[j]` is Cohen–Macaulay (semipure `P` only).
    pub fn semipure_is_scm_rankgen(&self, poset: &FinitePoset) -> Result<ScmVerdict> {
        if !poset.is_semipure() {
            return Err(Error::NotSemipure);
        }
        for j in 0..=poset.top_rank() {
            let layer = poset.rank_generated_ideal(j)?;
            if let Some((face, degree)) = self.cm_failure(&layer.order_complex())? {
                let chain = layer.chain_labels(&face);
                return Ok(self.verdict(Some(Witness::RankLayer { j, chain, degree })));
            }
        }
        Ok(self.verdict(None))
    }

    /// Rank-selection conditions on a semipure poset.
    ///
    /// For `Layers` and `Ideals`, each `j >= 1` and each admissible nonempty
    /// `S ⊆ {1..j}`, the selection `(P^[j])_S` (resp. `(P^⟨j⟩)_S`) must be
    /// `(|S| - 2)`-acyclic, i.e. homology-spherical. For `Whole`, every `P_S`
    /// with nonempty `S ⊆ {1..top}` must be sequentially acyclic; that
    /// condition is necessary for SCM but not sufficient.
    pub fn rank_selection_profile(&self, poset: &FinitePoset, mode: RankSetMode, level: RankLevel) -> Result<ScmVerdict> {
        if !poset.is_semipure() {
            return Err(Error::NotSemipure);
        }
        let ranks = poset.ranks();
        let top = poset.top_rank();
        if level == RankLevel::Whole {
            let sets = mode.sets(top);
            let w = first_failure(&sets, |s| {
                let sel = poset.filter(|x| s.contains(&ranks[x]));
                Ok(self.sequential_failure(&sel.order_complex())?.map(|(m, degree)| Witness::RankSelectionSequential {
                    ranks: s.iter().copied().collect(),
                    m,
                    degree,
                }))
            })?;
            return Ok(self.verdict(w));
        }
        for j in 1..=top {
            let q = match level {
                RankLevel::Layers => poset.rank_generated_ideal(j)?,
                _ => poset.maxrank_ideal(j)?,
            };
            // ranks are taken from P: Q may acquire a minimum that P lacks
            let qranks: Vec<usize> = q.labels().iter().map(|l| ranks[poset.index_of(l).expect("subposet label")]).collect();
            let sets = mode.sets(j);
            let w = first_failure(&sets, |s| {
                let sel = q.filter(|x| s.contains(&qranks[x]));
                let t = s.len() as i32 - 2;
                Ok(self.nonvanishing(&sel.order_complex(), t)?.map(|degree| Witness::RankSelection {
                    j,
                    ranks: s.iter().copied().collect(),
                    degree,
                }))
            })?;
            if w.is_some() {
                return Ok(self.verdict(w));
            }
        }
        Ok(self.verdict(None))
    }
}

/// Which rank sets `S` a rank-selection condition quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankSetMode {
    AllSubsets,
    RankIntervals,
}

impl RankSetMode {
    /// Nonempty admissible subsets of `{1..j}`, by size then lexicographically.
    pub fn sets(&self, j: usize) -> Vec<BTreeSet<usize>> {
        let mut out: Vec<BTreeSet<usize>> = match self {
            RankSetMode::AllSubsets => {
                assert!(j < 24, "too many rank subsets");
                (1u32..1 << j).map(|mask| (1..=j).filter(|&r| mask & (1 << (r - 1)) != 0).collect()).collect()
            }
            RankSetMode::RankIntervals => (1..=j).flat_map(|a| (a..=j).map(move |b| (a..=b).collect())).collect(),
        };
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// Which subposets rank selection is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankLevel {
    /// `P^[j]`
    Layers,
    /// `P^⟨j⟩`
    Ideals,
    /// `P` itself
    Whole,
}

/// Parallel search for the first item (in slice order) whose check fails.
pub(crate) fn first_failure<T, W, F>(items: &[T], check: F) -> Result<Option<W>>
where
    T: Sync,
    W: Send,
    F: Fn(&T) -> Result<Option<W>> + Sync,
{
    let found = items.par_iter().find_map_first(|item| match check(item) {
        Ok(None) => None,
        Ok(Some(w)) => Some(Ok(w)),
        Err(e) => Some(Err(e)),
    });
    found.transpose()
}

pub fn is_sequentially_acyclic(complex: &SimplicialComplex, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).is_sequentially_acyclic(complex).expect("no budget")
}

pub fn is_homology_spherical(complex: &SimplicialComplex, coeff: Coefficient) -> bool {
    Checker::new(coeff).is_homology_spherical(complex).expect("no budget")
}

pub fn is_cm(complex: &SimplicialComplex, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).is_cm(complex).expect("no budget")
}

pub fn is_scm_links(complex: &SimplicialComplex, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).is_scm_links(complex).expect("no budget")
}

pub fn is_scm_duval(complex: &SimplicialComplex, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).is_scm_duval(complex).expect("no budget")
}

pub fn poset_is_scm_intervals(poset: &FinitePoset, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).poset_is_scm_intervals(poset).expect("no budget")
}

pub fn semipure_is_scm_rankgen(poset: &FinitePoset, coeff: Coefficient) -> Result<ScmVerdict> {
    Checker::new(coeff).semipure_is_scm_rankgen(poset)
}

pub fn rank_selection_profile(poset: &FinitePoset, coeff: Coefficient, mode: RankSetMode, level: RankLevel) -> Result<ScmVerdict> {
    Checker::new(coeff).rank_selection_profile(poset, mode, level)
}

/// Result of a bounded shelling search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "order", rename_all = "snake_case")]
pub enum Shelling {
    Shellable(Vec<Face>),
    NotShellable,
    /// Too many facets or too many search steps.
    Unknown,
}

impl Shelling {
    pub fn is_shellable(&self) -> bool {
        matches!(self, Shelling::Shellable(_))
    }
}

pub const DEFAULT_SHELLING_FACETS: usize = 8;
pub const DEFAULT_SHELLING_STEPS: usize = 1 << 20;

/// Nonpure shellability with the default bounds.
pub fn is_shellable(complex: &SimplicialComplex) -> Shelling {
    is_shellable_bounded(complex, DEFAULT_SHELLING_FACETS, DEFAULT_SHELLING_STEPS)
}

/// `F_j` may follow `prev` when `⟨prev⟩ ∩ ⟨F_j⟩` is pure of dimension `dim F_j - 1`.
pub fn shelling_step_ok(prev: &[Face], next: &Face) -> bool {
    if prev.is_empty() {
        return true;
    }
    let meets: Vec<Face> = prev.iter().map(|f| f.intersection(next)).collect();
    meets.iter().all(|m| meets.iter().any(|k| m.is_subset(k) && k.len() + 1 == next.len()))
}

/// Depth-first search over facet orders; the feasibility of a prefix depends
/// only on its set of facets, so failed sets are memoized.
pub fn is_shellable_bounded(complex: &SimplicialComplex, max_facets: usize, max_steps: usize) -> Shelling {
    let facets = complex.facets();
    let n = facets.len();
    if n > max_facets || n >= 63 {
        return Shelling::Unknown;
    }
    let mut dead = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(n);
    let mut steps = 0usize;
    match shell_dfs(facets, 0, &mut order, &mut dead, &mut steps, max_steps) {
        Some(true) => Shelling::Shellable(order.iter().map(|&i| facets[i].clone()).collect()),
        Some(false) => Shelling::NotShellable,
        None => Shelling::Unknown,
    }
}

fn shell_dfs(
    facets: &[Face],
    used: u64,
    order: &mut Vec<usize>,
    dead: &mut std::collections::HashSet<u64>,
    steps: &mut usize,
    max_steps: usize,
) -> Option<bool> {
    if order.len() == facets.len() {
        return Some(true);
    }
    if dead.contains(&used) {
        return Some(false);
    }
    *steps += 1;
    if *steps > max_steps {
        return None;
    }
    let prev: Vec<Face> = order.iter().map(|&i| facets[i].clone()).collect();
    for i in 0..facets.len() {
        if used & (1 << i) != 0 || !shelling_step_ok(&prev, &facets[i]) {
            continue;
        }
        order.push(i);
        if shell_dfs(facets, used | (1 << i), order, dead, steps, max_steps)? {
            return Some(true);
        }
        order.pop();
    }
    dead.insert(used);
    Some(false)
}

/// Checks that `order` is a shelling of its facets.
pub fn is_shelling_order(order: &[Face]) -> bool {
    (0..order.len()).all(|j| shelling_step_ok(&order[..j], &order[j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets_auto(faces.iter().map(|f| Face::new(f.iter().copied())))
    }

    const Z: Coefficient = Coefficient::Integers;

    #[test]
    fn sequential_acyclicity_examples() {
        assert!(is_sequentially_acyclic(&cx(&[&[1, 2, 3], &[3, 4]]), Z).verdict);
        let v = is_sequentially_acyclic(&cx(&[&[1, 2, 3], &[4, 5]]), Z);
        assert!(!v.verdict);
        assert_eq!(v.witness, Some(Witness::Sequential { m: 1, degree: 0 }));
        assert!(is_sequentially_acyclic(&SimplicialComplex::void([]), Z).verdict);
        assert!(is_sequentially_acyclic(&SimplicialComplex::empty([]), Z).verdict);
        // pure and 1-acyclic of dim 2
        assert!(is_sequentially_acyclic(&SimplicialComplex::simplex([1, 2, 3]), Z).verdict);
    }

    #[test]
    fn cm_examples() {
        assert!(is_cm(&SimplicialComplex::simplex([1, 2, 3, 4]), Z).verdict);
        let two_edges = cx(&[&[1, 2], &[3, 4]]);
        let v = is_cm(&two_edges, Z);
        assert_eq!(v.witness, Some(Witness::Spherical { face: Face::empty(), degree: 0 }));
    }

    #[test]
    fn spherical_conventions() {
        assert!(is_homology_spherical(&SimplicialComplex::simplex_boundary([1, 2, 3]), Z));
        assert!(is_homology_spherical(&cx(&[&[1], &[2]]), Z));
        assert!(is_homology_spherical(&SimplicialComplex::empty([]), Z));
        assert!(is_homology_spherical(&SimplicialComplex::void([]), Z));
        assert!(!is_homology_spherical(&cx(&[&[1, 2, 3], &[4, 5]]), Z));
    }

    #[test]
    fn link_and_duval_routes_on_examples() {
        let cases: [(&[&[u32]], bool); 5] = [
            (&[&[1, 2, 3], &[3, 4]], true),
            (&[&[1, 2, 3], &[4, 5]], false),
            (&[&[1, 2], &[3]], true),
            (&[&[1, 2], &[3, 4]], false),
            (&[&[1, 2, 3], &[1, 4], &[5]], true),
        ];
        for (faces, expected) in cases {
            let c = cx(faces);
            assert_eq!(is_scm_links(&c, Z).verdict, expected, "{c}");
            assert_eq!(is_scm_duval(&c, Z).verdict, expected, "{c}");
        }
        let bad = is_scm_links(&cx(&[&[1, 2, 3], &[4, 5]]), Z);
        assert!(matches!(bad.witness, Some(Witness::Link { ref face, .. }) if face.is_empty()));
    }

    #[test]
    fn poset_interval_examples() {
        assert!(poset_is_scm_intervals(&FinitePoset::chain(4), Z).verdict);
        let b3 = FinitePoset::boolean(3);
        let proper = b3.open_interval(b3.minimum().unwrap(), b3.maximum().unwrap()).unwrap();
        assert!(poset_is_scm_intervals(&proper, Z).verdict);
        // an edge plus an isolated point is shellable
        let chain_and_point = FinitePoset::from_labeled(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(poset_is_scm_intervals(&chain_and_point, Z).verdict);
        let split = FinitePoset::from_labeled(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let v = poset_is_scm_intervals(&split, Z);
        assert!(!v.verdict);
        assert!(matches!(v.witness, Some(Witness::Interval { ref lower, ref upper, .. }) if lower == "0^" && upper == "1^"));
    }

    #[test]
    fn rank_layers_of_a_face_poset() {
        let c = cx(&[&[1, 2, 3], &[3, 4]]);
        let p = FinitePoset::face_poset(&c).unwrap();
        assert!(p.is_semipure());
        assert!(semipure_is_scm_rankgen(&p, Z).unwrap().verdict);
        let bad = FinitePoset::face_poset(&cx(&[&[1, 2, 3], &[4, 5]])).unwrap();
        assert!(!semipure_is_scm_rankgen(&bad, Z).unwrap().verdict);
        let nonsemi = FinitePoset::from_labeled(
            &["z", "a", "b", "c", "t"],
            &[("z", "a"), ("z", "b"), ("b", "c"), ("a", "t"), ("c", "t")],
        )
        .unwrap();
        assert!(matches!(semipure_is_scm_rankgen(&nonsemi, Z), Err(Error::NotSemipure)));
    }

    #[test]
    fn rank_selection_modes_on_boolean_lattice() {
        let b3 = FinitePoset::boolean(3);
        for mode in [RankSetMode::AllSubsets, RankSetMode::RankIntervals] {
            for level in [RankLevel::Layers, RankLevel::Ideals, RankLevel::Whole] {
                assert!(rank_selection_profile(&b3, Z, mode, level).unwrap().verdict);
            }
        }
        let chain = FinitePoset::chain(4);
        assert!(rank_selection_profile(&chain, Z, RankSetMode::AllSubsets, RankLevel::Layers).unwrap().verdict);
    }

    #[test]
    fn rank_sets() {
        let all = RankSetMode::AllSubsets.sets(3);
        assert_eq!(all.len(), 7);
        let iv = RankSetMode::RankIntervals.sets(3);
        assert_eq!(iv.len(), 6);
        assert!(iv.iter().all(|s| s.iter().max().unwrap() - s.iter().min().unwrap() + 1 == s.len()));
    }

    #[test]
    fn shellability_examples() {
        assert!(is_shellable(&SimplicialComplex::simplex([1, 2, 3])).is_shellable());
        match is_shellable(&cx(&[&[1, 2, 3], &[3, 4]])) {
            Shelling::Shellable(order) => assert_eq!(order, vec![Face::new([1, 2, 3]), Face::new([3, 4])]),
            other => panic!("{other:?}"),
        }
        assert_eq!(is_shellable(&cx(&[&[1, 2], &[3, 4]])), Shelling::NotShellable);
        // an edge then a disjoint point is a nonpure shelling
        assert!(is_shellable(&cx(&[&[1, 2], &[3]])).is_shellable());
        let many = SimplicialComplex::from_facets_auto((0..9u32).map(|i| Face::new([2 * i, 2 * i + 1])));
        assert_eq!(is_shellable(&many), Shelling::Unknown);
        assert!(!is_shelling_order(&[Face::new([3, 4]), Face::new([1, 2, 3])]));
    }
}
