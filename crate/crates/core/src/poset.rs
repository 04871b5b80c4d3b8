//! Finite posets, their order complexes and the standard constructions.
//!
//! Elements are indexed `0..n` and carry unique string labels. The strict
//! order is stored as a dense reachability matrix built once at
//! construction. Vertex `i` of an order complex is element `i`.
//!
//! Ranks: when `P` has a minimum, `r(x)` is the length of the longest chain
//! in `[0̂, x]`. When it does not, ranks are computed in `P ∪ {0̂}`, so atoms
//! have rank 1.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, VertexColoring};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    lt: Vec<bool>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lt == other.lt
    }
}

impl Eq for FinitePoset {}

impl FinitePoset {
    /// Builds the poset generated by the strict relations `a < b` (given by index).
    ///
    /// Relations are closed transitively; redundant ones are fine.
    pub fn from_relations(labels: Vec<String>, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier(l.clone()));
            }
        }
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::CyclicOrder(labels[a].clone()));
            }
            succ[a].insert(b);
        }
        let mut lt = vec![false; n * n];
        for s in 0..n {
            let mut stack: Vec<usize> = succ[s].iter().copied().collect();
            while let Some(v) = stack.pop() {
                if v == s {
                    return Err(Error::CyclicOrder(labels[s].clone()));
                }
                if !lt[s * n + v] {
                    lt[s * n + v] = true;
                    stack.extend(succ[v].iter().copied());
                }
            }
        }
        Ok(Self::from_order(labels, index, lt))
    }

    /// Builds from labels and relations given by label.
    pub fn from_labeled<S: AsRef<str>>(labels: &[S], relations: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let pos: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut rel = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            let ia = *pos.get(a.as_ref()).ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let ib = *pos.get(b.as_ref()).ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            rel.push((ia, ib));
        }
        Self::from_relations(labels, rel)
    }

    /// `lt` must already be a strict order.
    fn from_order(labels: Vec<String>, index: HashMap<String, usize>, lt: Vec<bool>) -> Self {
        let n = labels.len();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if lt[a * n + b] && !(0..n).any(|c| lt[a * n + c] && lt[c * n + b]) {
                    upper[a].push(b);
                    lower[b].push(a);
                }
            }
        }
        FinitePoset { labels, index, lt, upper, lower }
    }

    fn from_order_labels(labels: Vec<String>, lt: Vec<bool>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self::from_order(labels, index, lt)
    }

    /// `0 < 1 < … < n-1`, labelled by their positions.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_order_labels(labels, (0..n * n).map(|k| k / n < k % n).collect())
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_order_labels(labels, vec![false; n * n])
    }

    /// Subsets of `{1..n}` under inclusion, labelled by their face notation.
    pub fn boolean(n: u32) -> Self {
        let all = Face::new(1..=n);
        let mut subsets: Vec<Face> = all.all_subsets().collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let m = subsets.len();
        let lt = (0..m * m).map(|k| {
            let (a, b) = (&subsets[k / m], &subsets[k % m]);
            a.len() < b.len() && a.is_subset(b)
        });
        Self::from_order_labels(subsets.iter().map(|f| f.to_string()).collect(), lt.collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Strict order.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.len() + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.less(b, a)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// All cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.upper.iter().enumerate().flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b))).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper[x].is_empty()).collect()
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.upper[x].is_empty()
    }

    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements()[..] {
            [m] => Some(m),
            _ => None,
        }
    }

    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [m] => Some(m),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum().is_some() && self.maximum().is_some()
    }

    /// Induced subposet on `keep`, which is sorted and deduplicated first.
    pub fn induced(&self, keep: &[usize]) -> FinitePoset {
        let keep: Vec<usize> = keep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let m = keep.len();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let lt = (0..m * m).map(|k| self.less(keep[k / m], keep[k % m])).collect();
        Self::from_order_labels(labels, lt)
    }

    /// Induced subposet on the elements satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(usize) -> bool) -> FinitePoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| pred(x)).collect();
        self.induced(&keep)
    }

    /// The opposite order.
    pub fn dual(&self) -> FinitePoset {
        let n = self.len();
        let lt = (0..n * n).map(|k| self.less(k % n, k / n)).collect();
        Self::from_order(self.labels.clone(), self.index.clone(), lt)
    }

    fn fresh_label(&self, base: &str) -> String {
        let mut l = base.to_string();
        while self.index.contains_key(&l) {
            l.push('\'');
        }
        l
    }

    /// Adds a new minimum and/or maximum (`P̂`, or `Ṕ` with bottom only).
    /// New elements are appended: bottom first, then top.
    pub fn adjoin_bounds(&self, bottom: bool, top: bool) -> FinitePoset {
        let n = self.len();
        let mut labels = self.labels.clone();
        let b = bottom.then(|| {
            labels.push(self.fresh_label("0^"));
            labels.len() - 1
        });
        let t = top.then(|| {
            let l = self.fresh_label("1^");
            labels.push(l);
            labels.len() - 1
        });
        let m = labels.len();
        let mut lt = vec![false; m * m];
        for a in 0..n {
            for c in 0..n {
                lt[a * m + c] = self.less(a, c);
            }
        }
        if let Some(b) = b {
            for x in 0..m {
                lt[b * m + x] = x != b;
            }
        }
        if let Some(t) = t {
            for x in 0..m {
                lt[x * m + t] = x != t;
            }
        }
        Self::from_order_labels(labels, lt)
    }

    fn check_leq(&self, x: usize, y: usize) -> Result<()> {
        if self.leq(x, y) {
            Ok(())
        } else {
            Err(Error::IncomparableEndpoints { lower: self.labels[x].clone(), upper: self.labels[y].clone() })
        }
    }

    /// `(x, y) = {z : x < z < y}`.
    pub fn open_interval(&self, x: usize, y: usize) -> Result<FinitePoset> {
        self.check_leq(x, y)?;
        Ok(self.filter(|z| self.less(x, z) && self.less(z, y)))
    }

    /// `[x, y] = {z : x ≤ z ≤ y}`.
    pub fn closed_interval(&self, x: usize, y: usize) -> Result<FinitePoset> {
        self.check_leq(x, y)?;
        Ok(self.filter(|z| self.leq(x, z) && self.leq(z, y)))
    }

    pub fn open_interval_by_label(&self, x: &str, y: &str) -> Result<FinitePoset> {
        self.open_interval(self.element(x)?, self.element(y)?)
    }

    pub fn closed_interval_by_label(&self, x: &str, y: &str) -> Result<FinitePoset> {
        self.closed_interval(self.element(x)?, self.element(y)?)
    }

    /// `P_{≥x}`, or `P_{>x}` when `strict`.
    pub fn principal_filter(&self, x: usize, strict: bool) -> FinitePoset {
        self.filter(|z| self.less(x, z) || (!strict && z == x))
    }

    /// `P_{≤x}`, or `P_{<x}` when `strict`.
    pub fn principal_ideal(&self, x: usize, strict: bool) -> FinitePoset {
        self.filter(|z| self.less(z, x) || (!strict && z == x))
    }

    /// Lower order ideal generated by `gens`.
    pub fn lower_ideal(&self, gens: &[usize]) -> FinitePoset {
        self.filter(|z| gens.iter().any(|&g| self.leq(z, g)))
    }

    /// Every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &FinitePoset) -> Result<FinitePoset> {
        if let Some(l) = other.labels.iter().find(|l| self.index.contains_key(*l)) {
            return Err(Error::IdentifierCollision(l.clone()));
        }
        let (n, k) = (self.len(), other.len());
        let m = n + k;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let lt = (0..m * m)
            .map(|p| {
                let (a, b) = (p / m, p % m);
                match (a < n, b < n) {
                    (true, true) => self.less(a, b),
                    (false, false) => other.less(a - n, b - n),
                    (true, false) => true,
                    (false, true) => false,
                }
            })
            .collect();
        Ok(Self::from_order_labels(labels, lt))
    }

    /// Componentwise order on pairs, labelled `(a,b)`; element `(i, j)` has index `i·|Q| + j`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let (n, k) = (self.len(), other.len());
        let m = n * k;
        let labels = (0..m).map(|p| format!("({},{})", self.labels[p / k], other.labels[p % k])).collect();
        let lt = (0..m * m)
            .map(|p| {
                let (a, b) = (p / m, p % m);
                let (a1, a2, b1, b2) = (a / k, a % k, b / k, b % k);
                a != b && self.leq(a1, b1) && other.leq(a2, b2)
            })
            .collect();
        Self::from_order_labels(labels, lt)
    }

    /// Closed intervals `[x, y]` ordered by inclusion, labelled `[x,y]`.
    pub fn interval_poset(&self) -> FinitePoset {
        let ivs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| (0..self.len()).filter(move |&y| self.leq(x, y)).map(move |y| (x, y)))
            .collect();
        let m = ivs.len();
        let labels = ivs.iter().map(|&(x, y)| format!("[{},{}]", self.labels[x], self.labels[y])).collect();
        let lt = (0..m * m)
            .map(|p| {
                let ((x, y), (u, v)) = (ivs[p / m], ivs[p % m]);
                p / m != p % m && self.leq(u, x) && self.leq(y, v)
            })
            .collect();
        Self::from_order_labels(labels, lt)
    }

    /// Maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for m in self.minimal_elements() {
            self.extend_chains(m, &mut path, &mut out);
        }
        out
    }

    fn extend_chains(&self, x: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        path.push(x);
        if self.upper[x].is_empty() {
            out.push(path.clone());
        } else {
            for &y in &self.upper[x] {
                self.extend_chains(y, path, out);
            }
        }
        path.pop();
    }

    /// Complex of chains on vertices `0..n`. The empty poset gives the empty complex.
    pub fn order_complex(&self) -> SimplicialComplex {
        let ground = 0..self.len() as u32;
        let facets: Vec<Face> = self.maximal_chains().into_iter().map(|c| Face::new(c.into_iter().map(|x| x as u32))).collect();
        let facets = if facets.is_empty() { vec![Face::empty()] } else { facets };
        SimplicialComplex::from_facets(facets, ground).expect("chain vertices lie in the ground set")
    }

    /// Nonempty faces of `Δ` ordered by inclusion, labelled by face notation.
    pub fn face_poset(complex: &SimplicialComplex) -> Result<FinitePoset> {
        if complex.is_void() || complex.is_empty_complex() {
            return Err(Error::DegenerateComplex);
        }
        let faces: Vec<Face> = complex.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let m = faces.len();
        let lt = (0..m * m)
            .map(|p| {
                let (a, b) = (&faces[p / m], &faces[p % m]);
                a.len() < b.len() && a.is_subset(b)
            })
            .collect();
        Ok(Self::from_order_labels(faces.iter().map(|f| f.to_string()).collect(), lt))
    }

    /// `ℓ(P)`: longest chain cardinality minus one; `-1` for the empty poset.
    pub fn length(&self) -> i32 {
        let depth = self.longest_from_below();
        depth.iter().copied().max().map_or(-1, |d| d as i32)
    }

    /// Element indices in a linear extension (bottom first).
    fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        let below: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| self.less(y, x)).count()).collect();
        order.sort_by_key(|&x| below[x]);
        order
    }

    /// Longest chain ending at each element, counted in covers.
    fn longest_from_below(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.len()];
        for x in self.linear_extension() {
            d[x] = self.lower[x].iter().map(|&y| d[y] + 1).max().unwrap_or(0);
        }
        d
    }

    /// Shortest saturated chain from a minimal element to each element.
    fn shortest_from_below(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.len()];
        for x in self.linear_extension() {
            d[x] = self.lower[x].iter().map(|&y| d[y] + 1).min().unwrap_or(0);
        }
        d
    }

    /// `1` when ranks are measured from an adjoined bottom, else `0`.
    fn rank_offset(&self) -> usize {
        usize::from(self.minimum().is_none())
    }

    /// Rank of each element under the convention in the module docs.
    pub fn ranks(&self) -> Vec<usize> {
        let off = self.rank_offset();
        self.longest_from_below().into_iter().map(|d| d + off).collect()
    }

    /// Ranks, coranks (bounded posets only) and length.
    pub fn rank_profile(&self) -> RankProfile {
        let coranks = self.is_bounded().then(|| self.dual().longest_from_below());
        RankProfile { ranks: self.ranks(), coranks, length: self.length(), adjoined_bottom: self.rank_offset() == 1 }
    }

    /// Every `[0̂, x]` is pure (in `P ∪ {0̂}` when `P` has no minimum).
    pub fn is_semipure(&self) -> bool {
        if self.rank_offset() == 0 {
            self.longest_from_below() == self.shortest_from_below()
        } else {
            // with an adjoined bottom every minimal element has rank 1
            self.adjoin_bounds(true, false).is_semipure()
        }
    }

    /// All maximal chains have the same length.
    pub fn is_pure(&self) -> bool {
        let mut lens = self.maximal_chains().into_iter().map(|c| c.len());
        match lens.next() {
            None => true,
            Some(l) => lens.all(|k| k == l),
        }
    }

    /// Highest rank present: `ℓ(P)`, or `ℓ(P) + 1` with an adjoined bottom.
    pub fn top_rank(&self) -> usize {
        (self.length() + self.rank_offset() as i32).max(0) as usize
    }

    /// `P_S = {x : r(x) ∈ S}`. Without a minimum, `0 ∈ S` adds a new bottom.
    pub fn rank_selected(&self, s: &BTreeSet<usize>) -> Result<FinitePoset> {
        self.check_rank_set(s, self.top_rank())?;
        let ranks = self.ranks();
        if s.contains(&0) && self.rank_offset() == 1 {
            let with_bottom = self.adjoin_bounds(true, false);
            let wr = with_bottom.ranks();
            return Ok(with_bottom.filter(|x| s.contains(&wr[x])));
        }
        Ok(self.filter(|x| s.contains(&ranks[x])))
    }

    fn check_rank_set(&self, s: &BTreeSet<usize>, top: usize) -> Result<()> {
        match s.iter().next_back() {
            Some(&m) if m > top => Err(Error::OutOfRange { what: "rank", value: m as i64, range: format!("[0, {top}]") }),
            _ => Ok(()),
        }
    }

    /// `P_S^T = {x : r(x) ∈ S, r*(x) ∈ T}` for bounded `P`.
    pub fn birank_selected(&self, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> Result<FinitePoset> {
        if !self.is_bounded() {
            return Err(Error::NotBounded);
        }
        let top = self.top_rank();
        self.check_rank_set(s, top)?;
        self.check_rank_set(t, top)?;
        let r = self.ranks();
        let co = self.dual().longest_from_below();
        Ok(self.filter(|x| s.contains(&r[x]) && t.contains(&co[x])))
    }

    /// Truncation `P_S^T` with `S = {s..ℓ}`, `T = {t..ℓ}`.
    pub fn truncation(&self, s: usize, t: usize) -> Result<FinitePoset> {
        let top = self.top_rank();
        let ss = (s..=top).collect();
        let tt = (t..=top).collect();
        self.birank_selected(&ss, &tt)
    }

    /// `P^{(t)}`: removes maximal elements of rank at least `t`.
    pub fn max_deleted(&self, t: usize) -> FinitePoset {
        let r = self.ranks();
        self.filter(|x| !(self.is_maximal(x) && r[x] >= t))
    }

    fn require_semipure(&self) -> Result<()> {
        if self.is_semipure() {
            Ok(())
        } else {
            Err(Error::NotSemipure)
        }
    }

    /// `P^[j]`: lower ideal generated by the elements of rank `j`.
    pub fn rank_generated_ideal(&self, j: usize) -> Result<FinitePoset> {
        self.require_semipure()?;
        let r = self.ranks();
        let gens: Vec<usize> = (0..self.len()).filter(|&x| r[x] == j).collect();
        Ok(self.lower_ideal(&gens))
    }

    /// `P^⟨j⟩`: lower ideal generated by the maximal elements of rank at least `j`.
    pub fn maxrank_ideal(&self, j: usize) -> Result<FinitePoset> {
        self.require_semipure()?;
        let r = self.ranks();
        let gens: Vec<usize> = (0..self.len()).filter(|&x| self.is_maximal(x) && r[x] >= j).collect();
        Ok(self.lower_ideal(&gens))
    }

    /// Rank coloring of `Δ(P)` shifted so that minimal elements get color 0.
    pub fn rank_coloring(&self) -> Result<VertexColoring> {
        self.require_semipure()?;
        let off = self.rank_offset();
        Ok(self.ranks().into_iter().enumerate().map(|(x, r)| (x as u32, (r - off) as u32)).collect())
    }

    /// Labels of the vertices of a face of an order complex.
    pub fn chain_labels(&self, face: &Face) -> Vec<String> {
        face.vertices().iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    /// Order-isomorphism test by backtracking over degree-compatible images.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        let n = self.len();
        if n != other.len() || self.covers().len() != other.covers().len() {
            return false;
        }
        let sig = |p: &FinitePoset| -> Vec<(usize, usize, usize, usize)> {
            let m = p.len();
            (0..m)
                .map(|x| {
                    let below = (0..m).filter(|&y| p.less(y, x)).count();
                    let above = (0..m).filter(|&y| p.less(x, y)).count();
                    (below, above, p.lower[x].len(), p.upper[x].len())
                })
                .collect()
        };
        let (sa, sb) = (sig(self), sig(other));
        let mut ca = sa.clone();
        let mut cb = sb.clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return false;
        }
        let order = self.linear_extension();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.iso_extend(other, &order, 0, &sa, &sb, &mut image, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_extend(
        &self,
        other: &FinitePoset,
        order: &[usize],
        k: usize,
        sa: &[(usize, usize, usize, usize)],
        sb: &[(usize, usize, usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(k) else { return true };
        for y in 0..other.len() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent = order[..k].iter().all(|&z| {
                let w = image[z];
                self.less(z, x) == other.less(w, y) && self.less(x, z) == other.less(y, w)
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if self.iso_extend(other, order, k + 1, sa, sb, image, used) {
                return true;
            }
            used[y] = false;
        }
        image[x] = usize::MAX;
        false
    }

    /// Relabels elements by position (`0..n`) and returns a copy.
    pub fn with_index_labels(&self) -> FinitePoset {
        let labels = (0..self.len()).map(|i| i.to_string()).collect();
        Self::from_order_labels(labels, self.lt.clone())
    }

    /// Prefixes every label; used to make two posets disjoint.
    pub fn with_label_prefix(&self, prefix: &str) -> FinitePoset {
        let labels = self.labels.iter().map(|l| format!("{prefix}{l}")).collect();
        Self::from_order_labels(labels, self.lt.clone())
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "elements")?;
        for l in &self.labels {
            write!(f, " {l}")?;
        }
        for (a, b) in self.covers() {
            write!(f, "\n{} < {}", self.labels[a], self.labels[b])?;
        }
        Ok(())
    }
}

impl Serialize for FinitePoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            elements: &'a [String],
            covers: Vec<(&'a str, &'a str)>,
        }
        let covers = self.covers().into_iter().map(|(a, b)| (self.labels[a].as_str(), self.labels[b].as_str())).collect();
        Repr { elements: &self.labels, covers }.serialize(s)
    }
}

/// Ranks (per element), coranks for bounded posets, and the length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub ranks: Vec<usize>,
    pub coranks: Option<Vec<usize>>,
    pub length: i32,
    /// Ranks were measured from an adjoined bottom.
    pub adjoined_bottom: bool,
}

impl RankProfile {
    pub fn corank(&self, x: usize) -> Result<usize> {
        self.coranks.as_ref().map(|c| c[x]).ok_or(Error::NotBounded)
    }

    /// Elements grouped by rank.
    pub fn levels(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &r) in self.ranks.iter().enumerate() {
            out.entry(r).or_default().push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{reduced_homology, Coefficient};

    fn fan() -> FinitePoset {
        FinitePoset::from_labeled(&["z", "a", "b", "c"], &[("z", "a"), ("z", "b"), ("b", "c")]).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn covers_are_irredundant() {
        let p = FinitePoset::from_labeled(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(p.less(0, 2));
    }

    #[test]
    fn cycles_and_duplicates_are_rejected() {
        assert!(matches!(
            FinitePoset::from_labeled(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::CyclicOrder(_))
        ));
        assert!(matches!(FinitePoset::from_labeled(&["a", "a"], &[]), Err(Error::DuplicateIdentifier(_))));
        assert!(matches!(FinitePoset::from_labeled(&["a"], &[("a", "q")]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn order_complexes_of_chains_and_antichains() {
        let a = FinitePoset::antichain(3).order_complex();
        assert_eq!(a.facets().len(), 3);
        assert_eq!(a.dim(), Some(0));
        let c = FinitePoset::chain(4).order_complex();
        assert_eq!(c, SimplicialComplex::simplex(0..4));
        assert!(FinitePoset::antichain(0).order_complex().is_empty_complex());
    }

    #[test]
    fn proper_part_of_b3_is_a_hexagon() {
        let b3 = FinitePoset::boolean(3);
        let bot = b3.minimum().unwrap();
        let top = b3.maximum().unwrap();
        let proper = b3.open_interval(bot, top).unwrap();
        let oc = proper.order_complex();
        assert_eq!(oc.f_vector(), vec![1, 6, 6]);
        assert_eq!(reduced_homology(&oc, Coefficient::Integers).betti_vector(), vec![0, 0, 1]);
        // atoms and coatoms
        let sel = b3.rank_selected(&set(&[1, 2])).unwrap();
        assert_eq!(sel.order_complex().f_vector(), vec![1, 6, 6]);
    }

    #[test]
    fn face_poset_examples() {
        let e = FinitePoset::face_poset(&SimplicialComplex::simplex([1, 2])).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.minimal_elements().len(), 2);
        assert!(e.maximum().is_some());
        assert_eq!(FinitePoset::face_poset(&SimplicialComplex::simplex([7])).unwrap().len(), 1);
        let sd = FinitePoset::face_poset(&SimplicialComplex::simplex([1, 2, 3])).unwrap().order_complex();
        assert_eq!(sd.f_vector(), vec![1, 7, 12, 6]);
        assert!(FinitePoset::face_poset(&SimplicialComplex::empty([1])).is_err());
    }

    #[test]
    fn adjoining_bounds() {
        let d = FinitePoset::antichain(2).adjoin_bounds(true, true);
        assert_eq!(d.len(), 4);
        assert!(d.is_bounded());
        assert_eq!(d.covers().len(), 4);
        let c = FinitePoset::chain(3).adjoin_bounds(true, false);
        assert!(c.is_isomorphic(&FinitePoset::chain(4)));
        let p = fan();
        assert_eq!(p.adjoin_bounds(true, true).length(), p.length() + 2);
        assert_eq!(FinitePoset::chain(2).fresh_label("0"), "0'");
    }

    #[test]
    fn intervals() {
        let d = FinitePoset::antichain(2).adjoin_bounds(true, true);
        let mid = d.open_interval(2, 3).unwrap();
        assert!(mid.is_isomorphic(&FinitePoset::antichain(2)));
        assert_eq!(d.closed_interval(0, 0).unwrap().len(), 1);
        assert!(matches!(d.open_interval(0, 1), Err(Error::IncomparableEndpoints { .. })));
        let p = fan();
        assert_eq!(p.principal_ideal(3, true).len(), 2);
        assert_eq!(p.principal_filter(0, false).len(), 4);
    }

    #[test]
    fn ordinal_sums() {
        let a = FinitePoset::from_labeled(&["x"], &[]).unwrap();
        let b = FinitePoset::from_labeled(&["y"], &[]).unwrap();
        assert!(a.ordinal_sum(&b).unwrap().is_isomorphic(&FinitePoset::chain(2)));
        assert!(matches!(a.ordinal_sum(&a), Err(Error::IdentifierCollision(_))));
        let e = FinitePoset::antichain(0);
        assert_eq!(fan().ordinal_sum(&e).unwrap(), fan());
    }

    #[test]
    fn products() {
        let sq = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        assert!(sq.is_isomorphic(&FinitePoset::boolean(2)));
        let one = FinitePoset::chain(1);
        assert!(fan().product(&one).is_isomorphic(&fan()));
        assert_eq!(fan().product(&sq).len(), 16);
    }

    #[test]
    fn interval_posets() {
        assert!(FinitePoset::antichain(3).interval_poset().is_isomorphic(&FinitePoset::antichain(3)));
        let i = FinitePoset::chain(2).interval_poset();
        assert_eq!(i.len(), 3);
        assert_eq!(i.maximal_elements().len(), 1);
        let p = fan();
        let comparable = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).filter(|&(x, y)| p.leq(x, y)).count();
        assert_eq!(p.interval_poset().len(), comparable);
    }

    #[test]
    fn ranks_and_semipurity() {
        let c = FinitePoset::chain(3);
        let rp = c.rank_profile();
        assert_eq!(rp.ranks, vec![0, 1, 2]);
        assert_eq!(rp.length, 2);
        let p = fan();
        assert_eq!(p.ranks(), vec![0, 1, 1, 2]);
        assert!(p.is_semipure());
        assert!(!p.is_pure());
        assert!(matches!(p.rank_profile().corank(0), Err(Error::NotBounded)));
        // [0̂, t] holds maximal chains of lengths 2 and 3
        let bad = FinitePoset::from_labeled(
            &["z", "a", "b", "c", "t"],
            &[("z", "a"), ("z", "b"), ("b", "c"), ("a", "t"), ("c", "t")],
        )
        .unwrap();
        assert!(!bad.is_semipure());
        // minimum-free: atoms get rank 1
        let anti = FinitePoset::antichain(2);
        assert_eq!(anti.ranks(), vec![1, 1]);
        assert!(anti.is_semipure());
    }

    #[test]
    fn coranks_in_pure_bounded_posets() {
        let b3 = FinitePoset::boolean(3);
        let rp = b3.rank_profile();
        for x in 0..b3.len() {
            assert_eq!(rp.corank(x).unwrap() as i32, rp.length - rp.ranks[x] as i32);
        }
    }

    #[test]
    fn rank_selection_examples() {
        let b3 = FinitePoset::boolean(3);
        assert_eq!(b3.rank_selected(&set(&[0, 1, 2, 3])).unwrap(), b3);
        assert_eq!(b3.rank_selected(&set(&[0])).unwrap().len(), 1);
        assert!(b3.rank_selected(&set(&[4])).is_err());
        let trunc = b3.birank_selected(&set(&[1, 2, 3]), &set(&[1, 2, 3])).unwrap();
        assert_eq!(trunc.len(), 6);
        assert_eq!(b3.birank_selected(&set(&[0, 1, 2, 3]), &set(&[0, 1, 2, 3])).unwrap(), b3);
        assert!(matches!(fan().birank_selected(&set(&[0]), &set(&[0])), Err(Error::NotBounded)));
        // pure bounded: corank constraint is a rank constraint
        let st = b3.birank_selected(&set(&[0, 1, 2]), &set(&[2, 3])).unwrap();
        assert_eq!(st, b3.rank_selected(&set(&[0, 1])).unwrap());
        // min-free with 0 ∈ S adds a bottom
        let anti = FinitePoset::antichain(2);
        let sel = anti.rank_selected(&set(&[0, 1])).unwrap();
        assert_eq!(sel.len(), 3);
        assert!(sel.minimum().is_some());
    }

    #[test]
    fn max_deletion_examples() {
        let p = fan();
        assert_eq!(p.max_deleted(9), p);
        let ap = FinitePoset::antichain(3).adjoin_bounds(true, false);
        assert_eq!(ap.max_deleted(0).len(), 1);
        let d = p.max_deleted(2);
        assert_eq!(d.labels(), &["z", "a", "b"]);
    }

    #[test]
    fn ideals_of_the_fan() {
        let p = fan();
        assert_eq!(p.maxrank_ideal(0).unwrap(), p);
        assert_eq!(p.maxrank_ideal(2).unwrap().labels(), &["z", "b", "c"]);
        assert_eq!(p.rank_generated_ideal(1).unwrap().labels(), &["z", "a", "b"]);
        let b3 = FinitePoset::boolean(3);
        assert_eq!(b3.rank_generated_ideal(3).unwrap(), b3);
        assert_eq!(b3.maxrank_ideal(3).unwrap(), b3);
    }

    #[test]
    fn rank_coloring_is_completely_balanced() {
        let p = fan();
        let tau = p.rank_coloring().unwrap();
        assert!(p.order_complex().is_completely_balanced(&tau));
        let anti = FinitePoset::antichain(2).ordinal_sum(&FinitePoset::chain(1).with_label_prefix("t")).unwrap();
        let tau = anti.rank_coloring().unwrap();
        assert!(anti.order_complex().is_completely_balanced(&tau));
        let sel = p.order_complex().type_selected(&tau_for(&p), &set32(&[1])).unwrap();
        assert_eq!(sel.facets().len(), 2);
    }

    fn tau_for(p: &FinitePoset) -> VertexColoring {
        p.rank_coloring().unwrap()
    }

    fn set32(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn isomorphism() {
        let b2 = FinitePoset::boolean(2);
        assert!(b2.is_isomorphic(&b2.dual()));
        assert!(!fan().is_isomorphic(&fan().dual()));
        assert!(!FinitePoset::chain(3).is_isomorphic(&FinitePoset::antichain(3)));
    }
}
