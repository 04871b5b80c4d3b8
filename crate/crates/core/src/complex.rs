//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] is the downward closure of an antichain of
//! [`Face`]s over an explicit ground set. The ground set may contain vertices
//! that appear in no face; Alexander duality and Stanley-Reisner ideals are
//! taken relative to it.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces
//! at all, while the *empty* complex has exactly one face, the empty set.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of faces under which a membership index is memoized.
pub const DEFAULT_INDEX_THRESHOLD: usize = 1 << 20;

/// A face: a strictly ascending list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face from arbitrary vertices, sorting and dropping repeats.
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Wraps an already strictly ascending vector.
    pub(crate) fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `-1` for the empty face.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face::from_sorted(self.0.iter().copied().filter(|v| other.contains_vertex(*v)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face::from_sorted(self.0.iter().copied().filter(|v| !other.contains_vertex(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains_vertex(*v))
    }

    /// The face with the vertex at `position` removed.
    pub fn without_position(&self, position: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(position);
        Face(v)
    }

    /// All subsets of this face with exactly `size` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Face> {
        let n = self.0.len();
        if size > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Face(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = size;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - size {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Every subset of this face (including the empty face and the face itself).
    pub fn all_subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 64, "face too large for subset enumeration");
        (0u64..(1u64 << n)).map(move |mask| {
            Face((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect())
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v)
    }
}

/// Keeps only inclusion-maximal faces, sorted lexicographically.
fn maximal_faces(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in all {
        if !kept.iter().any(|k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// A finite simplicial complex over an explicit ground set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: Vec<u32>,
    facets: Vec<Face>,
    #[serde(skip)]
    index_threshold: Option<usize>,
    #[serde(skip)]
    index: OnceLock<Option<HashSet<Face>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.facets.hash(state);
    }
}

impl SimplicialComplex {
    fn raw(ground: Vec<u32>, facets: Vec<Face>) -> Self {
        SimplicialComplex {
            ground,
            facets,
            index_threshold: None,
            index: OnceLock::new(),
        }
    }

    /// Builds the complex generated by `faces` over `ground`.
    ///
    /// Dominated and repeated faces are dropped and the facets are sorted. An
    /// empty face list gives the void complex; `[∅]` gives the empty complex.
    pub fn from_facets(
        faces: impl IntoIterator<Item = Face>,
        ground: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let ground: Vec<u32> = ground.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let faces: Vec<Face> = faces.into_iter().collect();
        for f in &faces {
            for &v in f.vertices() {
                if ground.binary_search(&v).is_err() {
                    return Err(Error::VertexOutsideGround { vertex: v });
                }
            }
        }
        Ok(Self::raw(ground, maximal_faces(faces)))
    }

    /// Builds a complex whose ground set is the union of the listed vertices.
    pub fn from_facets_auto(faces: impl IntoIterator<Item = Face>) -> Self {
        let faces: Vec<Face> = faces.into_iter().collect();
        let ground: BTreeSet<u32> = faces.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        Self::raw(ground.into_iter().collect(), maximal_faces(faces))
    }

    /// The complex with no faces at all.
    pub fn void(ground: impl IntoIterator<Item = u32>) -> Self {
        let ground: BTreeSet<u32> = ground.into_iter().collect();
        Self::raw(ground.into_iter().collect(), Vec::new())
    }

    /// The complex whose only face is the empty face.
    pub fn empty(ground: impl IntoIterator<Item = u32>) -> Self {
        let ground: BTreeSet<u32> = ground.into_iter().collect();
        Self::raw(ground.into_iter().collect(), vec![Face::empty()])
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        let f = Face::new(vertices);
        Self::raw(f.vertices().to_vec(), vec![f])
    }

    /// The boundary of the simplex on `vertices`.
    pub fn simplex_boundary(vertices: impl IntoIterator<Item = u32>) -> Self {
        let f = Face::new(vertices);
        let n = f.len();
        let facets = if n == 0 { Vec::new() } else { f.subsets_of_size(n - 1) };
        Self::raw(f.vertices().to_vec(), maximal_faces(facets))
    }

    /// Overrides the face count below which membership queries are indexed.
    pub fn with_index_threshold(mut self, threshold: usize) -> Self {
        self.index_threshold = Some(threshold);
        self.index = OnceLock::new();
        self
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Maximum facet dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(Face::dim).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Vertices that lie in some face.
    pub fn vertices(&self) -> Vec<u32> {
        let s: BTreeSet<u32> = self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        s.into_iter().collect()
    }

    fn index(&self) -> Option<&HashSet<Face>> {
        self.index
            .get_or_init(|| {
                let threshold = self.index_threshold.unwrap_or(DEFAULT_INDEX_THRESHOLD);
                let mut bound: usize = 0;
                for f in &self.facets {
                    if f.len() >= 40 {
                        return None;
                    }
                    bound = bound.saturating_add(1usize << f.len());
                    if bound > threshold {
                        return None;
                    }
                }
                Some(self.facets.iter().flat_map(|f| f.all_subsets()).collect())
            })
            .as_ref()
    }

    /// Membership in the downward closure of the facets.
    pub fn contains(&self, face: &Face) -> bool {
        match self.index() {
            Some(idx) => idx.contains(face),
            None => self.facets.iter().any(|f| face.is_subset(f)),
        }
    }

    /// All faces of dimension `d`, sorted lexicographically.
    pub fn faces_of_dim(&self, d: i32) -> Vec<Face> {
        if d < -1 {
            return Vec::new();
        }
        let size = (d + 1) as usize;
        let set: BTreeSet<Face> = self
            .facets
            .iter()
            .filter(|f| f.len() >= size)
            .flat_map(|f| f.subsets_of_size(size))
            .collect();
        set.into_iter().collect()
    }

    /// All faces ordered by increasing dimension, then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (-1..=d).flat_map(|k| self.faces_of_dim(k)).collect(),
        }
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    /// Face counts `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|k| self.faces_of_dim(k).len()).collect(),
        }
    }

    /// `lk F = {G ∈ Δ : F ∪ G ∈ Δ, F ∩ G = ∅}` over the ground set minus `F`.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex(face.clone()));
        }
        let ground = self.ground.iter().copied().filter(|v| !face.contains_vertex(*v)).collect();
        let facets = self.facets.iter().filter(|f| face.is_subset(f)).map(|f| f.difference(face));
        Ok(Self::raw(ground, maximal_faces(facets)))
    }

    /// Subcomplex generated by the facets of dimension at least `m`.
    pub fn generated_above(&self, m: i32) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|f| f.dim() >= m).cloned().collect();
        Self::raw(self.ground.clone(), facets)
    }

    /// Subcomplex generated by the facets of dimension exactly `j`.
    pub fn facet_layer(&self, j: i32) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|f| f.dim() == j).cloned().collect();
        Self::raw(self.ground.clone(), facets)
    }

    /// Subcomplex generated by all faces of dimension `r`.
    pub fn pure_skeleton(&self, r: i32) -> Result<SimplicialComplex> {
        let dim = self.dim();
        match dim {
            Some(d) if (-1..=d).contains(&r) => {
                Ok(Self::raw(self.ground.clone(), self.faces_of_dim(r)))
            }
            _ => Err(Error::OutOfRange {
                what: "pure skeleton dimension",
                value: r as i64,
                range: match dim {
                    Some(d) => format!("[-1, {d}]"),
                    None => "(void complex)".to_string(),
                },
            }),
        }
    }

    /// All faces of dimension at most `r`.
    pub fn skeleton(&self, r: i32) -> SimplicialComplex {
        if r < -1 {
            return Self::raw(self.ground.clone(), Vec::new());
        }
        let size = (r + 1) as usize;
        let facets = self.facets.iter().flat_map(|f| {
            if f.len() <= size {
                vec![f.clone()]
            } else {
                f.subsets_of_size(size)
            }
        });
        Self::raw(self.ground.clone(), maximal_faces(facets))
    }

    /// Join with a complex on a disjoint ground set.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(&v) = self.ground.iter().find(|v| other.ground.binary_search(v).is_ok()) {
            return Err(Error::OverlappingGround { vertex: v });
        }
        let mut ground = self.ground.clone();
        ground.extend_from_slice(&other.ground);
        ground.sort_unstable();
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(g));
            }
        }
        facets.sort();
        Ok(Self::raw(ground, facets))
    }

    /// Induced subcomplex `Δ(A) = {F ∈ Δ : F ⊆ A}` with ground set `A`.
    pub fn induced(&self, subset: &[u32]) -> Result<SimplicialComplex> {
        let a = Face::new(subset.iter().copied());
        for &v in a.vertices() {
            if self.ground.binary_search(&v).is_err() {
                return Err(Error::VertexOutsideGround { vertex: v });
            }
        }
        if self.is_void() {
            return Ok(Self::void(a.vertices().iter().copied()));
        }
        let facets = self.facets.iter().map(|f| f.intersection(&a));
        Ok(Self::raw(a.vertices().to_vec(), maximal_faces(facets)))
    }

    /// Complement of `A` in the ground set.
    pub fn complement(&self, a: &Face) -> Face {
        Face::from_sorted(self.ground.iter().copied().filter(|v| !a.contains_vertex(*v)).collect())
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::empty()];
        }
        let mut out = BTreeSet::new();
        for f in self.faces() {
            let top = f.vertices().last().copied();
            for &v in &self.ground {
                if top.is_some_and(|t| v <= t) || f.contains_vertex(v) {
                    continue;
                }
                let mut cand = f.vertices().to_vec();
                cand.push(v);
                let cand = Face::from_sorted(cand);
                if self.contains(&cand) {
                    continue;
                }
                if (0..cand.len()).all(|i| self.contains(&cand.without_position(i))) {
                    out.insert(cand);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `Δ* = {A ⊆ V : V ∖ A ∉ Δ}` over the same ground set `V`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets = self.minimal_nonfaces().iter().map(|m| self.complement(m)).collect::<Vec<_>>();
        Self::raw(self.ground.clone(), maximal_faces(facets))
    }

    /// Cone with a fresh apex vertex.
    pub fn cone(&self, apex: u32) -> Result<SimplicialComplex> {
        if self.ground.binary_search(&apex).is_ok() {
            return Err(Error::ApexCollision { apex });
        }
        let mut ground = self.ground.clone();
        ground.push(apex);
        ground.sort_unstable();
        let apex_face = Face::from_sorted(vec![apex]);
        let facets = if self.is_void() {
            vec![apex_face]
        } else {
            self.facets.iter().map(|f| f.union(&apex_face)).collect()
        };
        Ok(Self::raw(ground, maximal_faces(facets)))
    }

    /// Face-wise intersection of two subcomplexes; the ground sets are intersected too.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let ground: Vec<u32> = self.ground.iter().copied().filter(|v| other.ground.binary_search(v).is_ok()).collect();
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.intersection(g));
            }
        }
        Self::raw(ground, maximal_faces(facets))
    }

    /// Union of two complexes; ground sets are merged.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let ground: BTreeSet<u32> = self.ground.iter().chain(other.ground.iter()).copied().collect();
        let facets = self.facets.iter().chain(other.facets.iter()).cloned();
        Self::raw(ground.into_iter().collect(), maximal_faces(facets))
    }

    /// True when every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// Renames vertices; `map` must be injective on the ground set.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> SimplicialComplex {
        let m = |v: u32| *map.get(&v).unwrap_or(&v);
        let ground: BTreeSet<u32> = self.ground.iter().map(|&v| m(v)).collect();
        let facets = self.facets.iter().map(|f| Face::new(f.vertices().iter().map(|&v| m(v))));
        Self::raw(ground.into_iter().collect(), maximal_faces(facets))
    }

    /// Returns a copy with a different (larger) ground set.
    pub fn with_ground(&self, ground: impl IntoIterator<Item = u32>) -> Result<SimplicialComplex> {
        Self::from_facets(self.facets.clone(), ground)
    }

    /// Subcomplex `Δ_S = {G : τ(G) ⊆ S}` of a completely balanced complex.
    pub fn type_selected(&self, coloring: &VertexColoring, colors: &BTreeSet<u32>) -> Result<SimplicialComplex> {
        if !self.is_completely_balanced(coloring) {
            return Err(Error::NotCompletelyBalanced);
        }
        let keep: Vec<u32> = self
            .ground
            .iter()
            .copied()
            .filter(|v| coloring.color(*v).is_some_and(|c| colors.contains(&c)))
            .collect();
        self.induced(&keep)
    }

    /// Every facet `F` has color set exactly `{0, …, |F|-1}`.
    pub fn is_completely_balanced(&self, coloring: &VertexColoring) -> bool {
        self.facets.iter().all(|f| {
            let mut colors = Vec::with_capacity(f.len());
            for &v in f.vertices() {
                match coloring.color(v) {
                    Some(c) => colors.push(c),
                    None => return false,
                }
            }
            colors.sort_unstable();
            colors.iter().enumerate().all(|(i, &c)| c as usize == i)
        })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "<void>");
        }
        write!(f, "<")?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, ">")
    }
}

/// A map from vertices to non-negative colors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring(BTreeMap<u32, u32>);

impl VertexColoring {
    pub fn new(map: BTreeMap<u32, u32>) -> Self {
        VertexColoring(map)
    }

    pub fn color(&self, v: u32) -> Option<u32> {
        self.0.get(&v).copied()
    }

    pub fn colors(&self) -> BTreeSet<u32> {
        self.0.values().copied().collect()
    }
}

impl FromIterator<(u32, u32)> for VertexColoring {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        VertexColoring(iter.into_iter().collect())
    }
}

/// A complex together with a subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativePair {
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
}

impl RelativePair {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(Error::NotASubcomplex);
        }
        Ok(RelativePair { ambient, sub })
    }

    /// The pair `(Δ, void)`, whose relative homology is the reduced homology of `Δ`.
    pub fn absolute(ambient: SimplicialComplex) -> Self {
        let sub = SimplicialComplex::void(ambient.ground().iter().copied());
        RelativePair { ambient, sub }
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }
}
