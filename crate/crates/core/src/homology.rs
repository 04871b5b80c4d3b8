//! Reduced and relative simplicial homology over ℤ, ℚ and 𝔽_p.
//!
//! Chain groups are spanned by the faces of a complex (including the empty
//! face, which gives the augmented complex) minus the faces of an optional
//! subcomplex. Field coefficients are handled by computing ranks in that
//! field directly; ℤ goes through the Smith normal form. The two are never
//! derived from each other, so the universal coefficient identity is an
//! independent check.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::complex::{Face, RelativePair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, SnfResult, SparseMatrix};

/// Coefficient ring for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    Integers,
    Rationals,
    PrimeField(u32),
}

impl Coefficient {
    pub fn prime_field(p: u32) -> Result<Self> {
        if linalg::is_prime(p) {
            Ok(Coefficient::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Coefficient::Integers)
    }

    /// Short name: `z`, `q`, `f<p>`.
    pub fn code(&self) -> String {
        match self {
            Coefficient::Integers => "z".into(),
            Coefficient::Rationals => "q".into(),
            Coefficient::PrimeField(p) => format!("f{p}"),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for Coefficient {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "z" | "zz" | "integers" => Ok(Coefficient::Integers),
            "q" | "qq" | "rationals" => Ok(Coefficient::Rationals),
            other => {
                let digits = other.strip_prefix('f').or_else(|| other.strip_prefix("gf")).ok_or_else(|| format!("unknown coefficient `{s}`"))?;
                let p: u32 = digits.parse().map_err(|_| format!("unknown coefficient `{s}`"))?;
                Coefficient::prime_field(p).map_err(|e| e.to_string())
            }
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

/// Signed incidence matrix `∂_d : C_d → C_{d-1}` with its face labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: i32,
    pub row_faces: Vec<Face>,
    pub col_faces: Vec<Face>,
    pub matrix: SparseMatrix,
}

/// Homology in one degree: free rank plus invariant factors > 1 (ℤ only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHomology {
    pub degree: i32,
    pub betti: usize,
    #[serde(serialize_with = "serialize_factors")]
    pub torsion: Vec<BigInt>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

fn serialize_factors<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for f in v {
        match u64::try_from(f) {
            Ok(x) => seq.serialize_element(&x)?,
            Err(_) => seq.serialize_element(&f.to_string())?,
        }
    }
    seq.end()
}

/// Homology in degrees `-1..=dim`; every other degree is zero.
///
/// Serializes as `{"coefficient": .., "degrees": {"r": [betti, [torsion..]]}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub coefficient: Coefficient,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyProfile {
    fn get(&self, r: i32) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == r)
    }

    pub fn betti(&self, r: i32) -> usize {
        self.get(r).map_or(0, |d| d.betti)
    }

    pub fn torsion(&self, r: i32) -> Vec<BigInt> {
        self.get(r).map_or_else(Vec::new, |d| d.torsion.clone())
    }

    pub fn torsion_u64(&self, r: i32) -> Vec<u64> {
        self.torsion(r).iter().map(|f| u64::try_from(f).expect("torsion factor fits u64")).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(DegreeHomology::is_zero)
    }

    /// First degree with nonzero homology.
    pub fn first_nonzero(&self) -> Option<i32> {
        self.degrees.iter().find(|d| !d.is_zero()).map(|d| d.degree)
    }

    /// Betti numbers from degree -1 upward.
    pub fn betti_vector(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Degrees<'a>(&'a [DegreeHomology]);
        struct Entry<'a>(&'a DegreeHomology);
        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                struct Factors<'a>(&'a [BigInt]);
                impl Serialize for Factors<'_> {
                    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                        serialize_factors(self.0, s)
                    }
                }
                (self.0.betti, Factors(&self.0.torsion)).serialize(s)
            }
        }
        impl Serialize for Degrees<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for d in self.0 {
                    m.serialize_entry(&d.degree.to_string(), &Entry(d))?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("HomologyProfile", 2)?;
        st.serialize_field("coefficient", &self.coefficient)?;
        st.serialize_field("degrees", &Degrees(&self.degrees))?;
        st.end()
    }
}

/// Cells of a (relative) augmented chain complex, grouped by dimension.
struct ChainComplex {
    /// `cells[d + 1]` lists the d-faces in lexicographic order.
    cells: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl ChainComplex {
    /// Faces of `ambient` not in `sub`, up to dimension `top`.
    fn new(ambient: &SimplicialComplex, sub: Option<&SimplicialComplex>, top: i32) -> Self {
        let mut cells = Vec::new();
        if let Some(dim) = ambient.dim() {
            for d in -1..=top.min(dim) {
                let mut faces = ambient.faces_of_dim(d);
                if let Some(s) = sub {
                    faces.retain(|f| !s.contains(f));
                }
                cells.push(faces);
            }
        }
        let index = cells.iter().map(|fs| fs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect()).collect();
        ChainComplex { cells, index }
    }

    fn rank(&self, d: i32) -> usize {
        self.cells.get((d + 1) as usize).map_or(0, Vec::len)
    }

    /// `∂_d`; degree -1 maps into the zero group and has no rows.
    fn boundary(&self, d: i32) -> BoundaryMatrix {
        let empty = Vec::new();
        let cols = self.cells.get((d + 1) as usize).unwrap_or(&empty);
        let rows: &Vec<Face> = if d >= 0 { self.cells.get(d as usize).unwrap_or(&empty) } else { &empty };
        let mut trip = Vec::new();
        if d >= 0 {
            let row_index = &self.index[d as usize];
            for (c, f) in cols.iter().enumerate() {
                for i in 0..f.len() {
                    if let Some(&r) = row_index.get(&f.without_position(i)) {
                        trip.push((r, c, if i % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
        }
        BoundaryMatrix {
            degree: d,
            row_faces: rows.clone(),
            col_faces: cols.clone(),
            matrix: SparseMatrix::from_triplets(rows.len(), cols.len(), trip),
        }
    }
}

/// Cached boundary data for one coefficient ring.
struct Ranks<'a> {
    chain: &'a ChainComplex,
    coeff: Coefficient,
    cache: HashMap<i32, (usize, Vec<BigInt>)>,
}

impl<'a> Ranks<'a> {
    fn new(chain: &'a ChainComplex, coeff: Coefficient) -> Self {
        Ranks { chain, coeff, cache: HashMap::new() }
    }

    /// Rank of `∂_d` and, over ℤ, its invariant factors > 1.
    fn boundary(&mut self, d: i32) -> &(usize, Vec<BigInt>) {
        if !self.cache.contains_key(&d) {
            let entry = if self.chain.rank(d) == 0 || d < 0 {
                (0, Vec::new())
            } else {
                let m = self.chain.boundary(d).matrix;
                match self.coeff {
                    Coefficient::Integers => {
                        let snf = linalg::smith_normal_form(&m);
                        (snf.rank, snf.torsion())
                    }
                    Coefficient::Rationals => (linalg::rank_rational(&m), Vec::new()),
                    Coefficient::PrimeField(p) => (linalg::rank_mod_p(&m, p), Vec::new()),
                }
            };
            self.cache.insert(d, entry);
        }
        &self.cache[&d]
    }

    fn degree(&mut self, r: i32) -> DegreeHomology {
        let n = self.chain.rank(r);
        let rank_out = self.boundary(r).0;
        let (rank_in, torsion) = self.boundary(r + 1).clone();
        DegreeHomology { degree: r, betti: n - rank_out - rank_in, torsion }
    }
}

/// `∂_degree` of the augmented chain complex of `Δ`.
pub fn boundary_matrix(complex: &SimplicialComplex, degree: i32) -> Result<BoundaryMatrix> {
    let dim = complex.dim().ok_or(Error::DegenerateComplex)?;
    if !(-1..=dim).contains(&degree) {
        return Err(Error::OutOfRange { what: "boundary degree", value: degree as i64, range: format!("[-1, {dim}]") });
    }
    Ok(ChainComplex::new(complex, None, degree).boundary(degree))
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    linalg::smith_normal_form(m)
}

fn profile(chain: &ChainComplex, top: Option<i32>, coeff: Coefficient) -> HomologyProfile {
    let mut ranks = Ranks::new(chain, coeff);
    let degrees = match top {
        None => Vec::new(),
        Some(t) => (-1..=t).map(|r| ranks.degree(r)).collect(),
    };
    HomologyProfile { coefficient: coeff, degrees }
}

/// Reduced homology; the void complex has the zero profile.
pub fn reduced_homology(complex: &SimplicialComplex, coeff: Coefficient) -> HomologyProfile {
    let dim = complex.dim();
    let chain = ChainComplex::new(complex, None, dim.unwrap_or(-1) + 1);
    profile(&chain, dim, coeff)
}

/// Homology of the quotient chain complex `C(ambient) / C(sub)`.
pub fn relative_homology(pair: &RelativePair, coeff: Coefficient) -> HomologyProfile {
    let dim = pair.ambient().dim();
    let sub = if pair.sub().is_void() { None } else { Some(pair.sub()) };
    let chain = ChainComplex::new(pair.ambient(), sub, dim.unwrap_or(-1) + 1);
    profile(&chain, dim, coeff)
}

/// Lowest degree `r <= t` with nonzero reduced homology, if any.
///
/// Only faces up to dimension `t + 1` are generated.
pub fn first_nonvanishing_degree(complex: &SimplicialComplex, t: i32, coeff: Coefficient) -> Option<i32> {
    first_nonvanishing(complex, None, t, coeff)
}

/// Relative version of [`first_nonvanishing_degree`].
pub fn first_nonvanishing_relative(pair: &RelativePair, t: i32, coeff: Coefficient) -> Option<i32> {
    let sub = if pair.sub().is_void() { None } else { Some(pair.sub()) };
    first_nonvanishing(pair.ambient(), sub, t, coeff)
}

fn first_nonvanishing(ambient: &SimplicialComplex, sub: Option<&SimplicialComplex>, t: i32, coeff: Coefficient) -> Option<i32> {
    let dim = ambient.dim()?;
    let top = t.min(dim);
    if top < -1 {
        return None;
    }
    let chain = ChainComplex::new(ambient, sub, top + 1);
    let mut ranks = Ranks::new(&chain, coeff);
    (-1..=top).find(|&r| !ranks.degree(r).is_zero())
}

/// `H̃_r(Δ; k) = 0` for every `r <= t`. The void complex is acyclic in every degree.
pub fn is_t_acyclic(complex: &SimplicialComplex, t: i32, coeff: Coefficient) -> bool {
    first_nonvanishing_degree(complex, t, coeff).is_none()
}
