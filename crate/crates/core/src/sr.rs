//! Squarefree monomial ideals and the algebraic SCM routes.
//!
//! A squarefree monomial `x_A` is stored by its support `A`. The
//! Stanley–Reisner ideal `I_Δ` is generated by the minimal nonfaces of `Δ`.
//!
//! * relative CM: Stanley's vanishing of `H̃_i(lk_Δ A, lk_Γ A)` below `dim lk_Δ A`;
//! * filtration: every pair `(Δ_i, Δ_i ∩ Δ^⟨i+1⟩)` is relatively CM;
//! * linear resolution (Eagon–Reiner): `I_Γ` generated in one degree has a
//!   linear resolution iff `Γ*` is CM;
//! * componentwise linear: every squarefree part `J_[d]` has a linear
//!   resolution; for `J = I_{Δ*}` this is equivalent to `Δ` being SCM.
//!
//! Graded Betti numbers come from Hochster's formula and serve as an
//! independent oracle for the resolution checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::{Face, RelativePair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{first_nonvanishing_relative, reduced_homology, Coefficient};
use crate::scm::{first_failure, Checker, ScmVerdict, Witness};

/// Ideal generated by squarefree monomials, kept as inclusion-minimal supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SquarefreeIdeal {
    ground: Vec<u32>,
    generators: Vec<Face>,
}

impl SquarefreeIdeal {
    /// Non-minimal generators are dropped; supports must lie in `ground`.
    pub fn new(ground: impl IntoIterator<Item = u32>, generators: impl IntoIterator<Item = Face>) -> Result<Self> {
        let ground: Vec<u32> = ground.into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let mut gens: Vec<Face> = generators.into_iter().collect();
        for g in &gens {
            if let Some(&v) = g.vertices().iter().find(|v| ground.binary_search(v).is_err()) {
                return Err(Error::VertexOutsideGround { vertex: v });
            }
        }
        gens.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut minimal: Vec<Face> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.is_subset(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        Ok(SquarefreeIdeal { ground, generators: minimal })
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `x_A ∈ J` iff some generator divides it.
    pub fn contains(&self, support: &Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(support))
    }

    /// Generator degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.generators.iter().map(Face::len).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Γ` with `I_Γ = J`: faces are the supports containing no generator.
    pub fn complex(&self) -> SimplicialComplex {
        let ground = Face::new(self.ground.iter().copied());
        let dual_facets: Vec<Face> = self.generators.iter().map(|g| ground.difference(g)).collect();
        SimplicialComplex::from_facets(dual_facets, self.ground.iter().copied())
            .expect("complements lie in the ground set")
            .alexander_dual()
    }

    /// `J_[d]`: all squarefree degree-`d` monomials of `J`.
    pub fn squarefree_part(&self, d: usize) -> SquarefreeIdeal {
        let ground = Face::new(self.ground.iter().copied());
        let gens: Vec<Face> = if d > ground.len() {
            Vec::new()
        } else {
            ground.subsets_of_size(d).into_iter().filter(|a| self.contains(a)).collect()
        };
        SquarefreeIdeal { ground: self.ground.clone(), generators: gens }
    }
}

/// Minimal nonfaces of `Δ` as generators of `I_Δ`.
pub fn stanley_reisner_generators(complex: &SimplicialComplex) -> SquarefreeIdeal {
    SquarefreeIdeal { ground: complex.ground().to_vec(), generators: complex.minimal_nonfaces() }
}

/// Nonzero graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedBettiTable(BTreeMap<(usize, usize), usize>);

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// For an ideal's table: `β_{i,j} = 0` unless `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.0.keys().all(|&(i, j)| j == i + d)
    }

    /// Ideal table from the quotient table: `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    pub fn shift_to_ideal(&self) -> GradedBettiTable {
        GradedBettiTable(self.0.iter().filter(|((i, _), _)| *i > 0).map(|(&(i, j), &v)| ((i - 1, j), v)).collect())
    }
}

impl Serialize for GradedBettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (&(i, j), v) in &self.0 {
            m.serialize_entry(&format!("{i},{j}"), v)?;
        }
        m.end()
    }
}

fn require_field(coeff: Coefficient) -> Result<()> {
    if coeff.is_field() {
        Ok(())
    } else {
        Err(Error::NonFieldCoefficient(coeff.code()))
    }
}

/// `β_{i,j}(S/I_Γ) = Σ_{|W| = j} dim H̃_{j-i-1}(Γ_W; k)`.
pub fn hochster_betti(complex: &SimplicialComplex, coeff: Coefficient) -> Result<GradedBettiTable> {
    require_field(coeff)?;
    let ground = Face::new(complex.ground().iter().copied());
    let subsets: Vec<Face> = ground.all_subsets().collect();
    let parts: Vec<Vec<((usize, usize), usize)>> = subsets
        .par_iter()
        .map(|w| {
            let j = w.len();
            let sub = complex.induced(w.vertices()).expect("subset of the ground set");
            let h = reduced_homology(&sub, coeff);
            h.degrees
                .iter()
                .filter(|d| d.betti > 0)
                // degree r = j - i - 1, so i = j - 1 - r
                .filter_map(|d| {
                    let i = j as i32 - 1 - d.degree;
                    (i >= 0).then_some(((i as usize, j), d.betti))
                })
                .collect()
        })
        .collect();
    let mut table = BTreeMap::new();
    for ((i, j), v) in parts.into_iter().flatten() {
        *table.entry((i, j)).or_insert(0) += v;
    }
    Ok(GradedBettiTable(table))
}

/// Betti table of the ideal `I_Γ` itself.
pub fn hochster_betti_ideal(complex: &SimplicialComplex, coeff: Coefficient) -> Result<GradedBettiTable> {
    if complex.is_void() {
        // I = (1)
        require_field(coeff)?;
        return Ok(GradedBettiTable([((0, 0), 1)].into_iter().collect()));
    }
    Ok(hochster_betti(complex, coeff)?.shift_to_ideal())
}

impl Checker {
    /// First `(A, degree)` where the relative link homology fails to vanish.
    pub(crate) fn relative_cm_failure(&self, pair: &RelativePair) -> Result<Option<(Face, i32)>> {
        let faces = pair.ambient().faces();
        first_failure(&faces, |a| {
            self.tick()?;
            let lk = pair.ambient().link(a).expect("face of the ambient complex");
            let Some(dim) = lk.dim() else { return Ok(None) };
            let sub_lk = if pair.sub().contains(a) {
                pair.sub().link(a).expect("face of the subcomplex")
            } else {
                SimplicialComplex::void(lk.ground().iter().copied())
            };
            let lp = RelativePair::new(lk, sub_lk).expect("links of a subcomplex form a subcomplex");
            Ok(first_nonvanishing_relative(&lp, dim - 1, self.coefficient()).map(|d| (a.clone(), d)))
        })
    }

    pub fn relative_is_cm(&self, pair: &RelativePair) -> Result<ScmVerdict> {
        let w = self.relative_cm_failure(pair)?.map(|(face, degree)| Witness::Relative { face, degree });
        Ok(ScmVerdict::from_failure(self.coefficient(), w))
    }

    /// Every nonvoid layer pair `(Δ_i, Δ_i ∩ Δ^⟨i+1⟩)` is relatively CM.
    pub fn is_scm_filtration(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let Some(dim) = complex.dim() else { return Ok(ScmVerdict::from_failure(self.coefficient(), None)) };
        for i in -1..=dim {
            let layer = complex.facet_layer(i);
            if layer.is_void() {
                continue;
            }
            let above = complex.generated_above(i + 1);
            let pair = RelativePair::new(layer.clone(), layer.intersection(&above)).expect("intersection is a subcomplex");
            if let Some((face, degree)) = self.relative_cm_failure(&pair)? {
                return Ok(ScmVerdict::from_failure(self.coefficient(), Some(Witness::Filtration { layer: i, face, degree })));
            }
        }
        Ok(ScmVerdict::from_failure(self.coefficient(), None))
    }

    fn linear_resolution_failure(&self, ideal: &SquarefreeIdeal) -> Result<Option<(Face, i32)>> {
        require_field(self.coefficient())?;
        if ideal.degrees().len() > 1 {
            return Err(Error::MixedDegrees);
        }
        self.cm_failure(&ideal.complex().alexander_dual())
    }

    /// `J` (one generator degree) has a linear resolution iff `Γ_J*` is CM.
    pub fn has_linear_resolution(&self, ideal: &SquarefreeIdeal) -> Result<bool> {
        Ok(self.linear_resolution_failure(ideal)?.is_none())
    }

    fn componentwise_failure(&self, ideal: &SquarefreeIdeal) -> Result<Option<Witness>> {
        require_field(self.coefficient())?;
        let Some(&lo) = ideal.degrees().first() else { return Ok(None) };
        for d in lo..=ideal.ground().len() {
            let part = ideal.squarefree_part(d);
            if let Some((face, degree)) = self.linear_resolution_failure(&part)? {
                return Ok(Some(Witness::ComponentwiseLinear { d, face, degree }));
            }
        }
        Ok(None)
    }

    pub fn is_componentwise_linear(&self, ideal: &SquarefreeIdeal) -> Result<bool> {
        Ok(self.componentwise_failure(ideal)?.is_none())
    }

    /// `Δ` is SCM iff `I_{Δ*}` is componentwise linear (field coefficients).
    pub fn is_scm_dual(&self, complex: &SimplicialComplex) -> Result<ScmVerdict> {
        let ideal = stanley_reisner_generators(&complex.alexander_dual());
        let w = self.componentwise_failure(&ideal)?;
        Ok(ScmVerdict::from_failure(self.coefficient(), w))
    }
}

pub fn relative_is_cm(pair: &RelativePair, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).relative_is_cm(pair).expect("no budget")
}

pub fn is_scm_filtration(complex: &SimplicialComplex, coeff: Coefficient) -> ScmVerdict {
    Checker::new(coeff).is_scm_filtration(complex).expect("no budget")
}

pub fn has_linear_resolution(ideal: &SquarefreeIdeal, coeff: Coefficient) -> Result<bool> {
    Checker::new(coeff).has_linear_resolution(ideal)
}

pub fn is_componentwise_linear(ideal: &SquarefreeIdeal, coeff: Coefficient) -> Result<bool> {
    Checker::new(coeff).is_componentwise_linear(ideal)
}

pub fn is_scm_dual(complex: &SimplicialComplex, coeff: Coefficient) -> Result<ScmVerdict> {
    Checker::new(coeff).is_scm_dual(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scm::is_cm;

    fn cx(faces: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets_auto(faces.iter().map(|f| Face::new(f.iter().copied())))
    }

    const Q: Coefficient = Coefficient::Rationals;

    #[test]
    fn generators_examples() {
        assert!(stanley_reisner_generators(&SimplicialComplex::simplex([1, 2, 3])).is_zero());
        let t = stanley_reisner_generators(&SimplicialComplex::simplex_boundary([1, 2, 3]));
        assert_eq!(t.generators(), &[Face::new([1, 2, 3])]);
        let g = stanley_reisner_generators(&cx(&[&[1, 2], &[3]]));
        assert_eq!(g.generators(), &[Face::new([1, 3]), Face::new([2, 3])]);
    }

    #[test]
    fn ideal_complex_round_trip() {
        for c in [cx(&[&[1, 2], &[3]]), cx(&[&[1, 2, 3], &[3, 4]]), SimplicialComplex::simplex([1, 2])] {
            assert_eq!(stanley_reisner_generators(&c).complex(), c);
        }
        let unit = SquarefreeIdeal::new([1, 2], [Face::empty()]).unwrap();
        assert!(unit.complex().is_void());
        let minimal = SquarefreeIdeal::new([1, 2, 3], [Face::new([1]), Face::new([1, 2])]).unwrap();
        assert_eq!(minimal.generators(), &[Face::new([1])]);
    }

    #[test]
    fn relative_examples() {
        let two = cx(&[&[1, 2], &[3, 4]]);
        assert_eq!(relative_is_cm(&RelativePair::absolute(two.clone()), Q).verdict, is_cm(&two, Q).verdict);
        let tri = SimplicialComplex::simplex([1, 2, 3]);
        let bd = SimplicialComplex::simplex_boundary([1, 2, 3]);
        assert!(relative_is_cm(&RelativePair::new(tri, bd).unwrap(), Q).verdict);
        let sub = SimplicialComplex::from_facets([Face::new([3, 4])], [1, 2, 3, 4]).unwrap();
        let pair = RelativePair::new(two, sub).unwrap();
        // cells {1}, {2}, {1,2}: H_0 has rank one
        let v = relative_is_cm(&pair, Q);
        assert_eq!(v.witness, Some(Witness::Relative { face: Face::empty(), degree: 0 }));
    }

    #[test]
    fn filtration_examples() {
        assert!(is_scm_filtration(&cx(&[&[1, 2, 3], &[3, 4]]), Q).verdict);
        assert!(!is_scm_filtration(&cx(&[&[1, 2, 3], &[4, 5]]), Q).verdict);
        let pure = SimplicialComplex::simplex_boundary([1, 2, 3, 4]);
        assert_eq!(is_scm_filtration(&pure, Q).verdict, is_cm(&pure, Q).verdict);
        let two = cx(&[&[1, 2], &[3, 4]]);
        assert!(!is_scm_filtration(&two, Coefficient::Integers).verdict);
    }

    #[test]
    fn linear_resolution_examples() {
        let full = SquarefreeIdeal::new(1..=4, Face::new(1..=4).subsets_of_size(2)).unwrap();
        assert!(has_linear_resolution(&full, Q).unwrap());
        let single = SquarefreeIdeal::new(1..=4, [Face::new([1, 3])]).unwrap();
        assert!(has_linear_resolution(&single, Q).unwrap());
        let mixed = SquarefreeIdeal::new(1..=3, [Face::new([1]), Face::new([2, 3])]).unwrap();
        assert!(matches!(has_linear_resolution(&mixed, Q), Err(Error::MixedDegrees)));
        assert!(matches!(has_linear_resolution(&single, Coefficient::Integers), Err(Error::NonFieldCoefficient(_))));
        // x1x2, x3x4 has a nonlinear syzygy
        let two = SquarefreeIdeal::new(1..=4, [Face::new([1, 2]), Face::new([3, 4])]).unwrap();
        assert!(!has_linear_resolution(&two, Q).unwrap());
    }

    #[test]
    fn componentwise_examples() {
        let good = stanley_reisner_generators(&cx(&[&[1, 2, 3], &[3, 4]]).alexander_dual());
        assert!(is_componentwise_linear(&good, Q).unwrap());
        let bad = stanley_reisner_generators(&cx(&[&[1, 2, 3], &[4, 5]]).alexander_dual());
        assert!(!is_componentwise_linear(&bad, Q).unwrap());
    }

    #[test]
    fn hochster_examples() {
        let s = hochster_betti(&SimplicialComplex::simplex([1, 2, 3]), Q).unwrap();
        assert_eq!(s.entries().len(), 1);
        assert_eq!(s.get(0, 0), 1);
        let t = hochster_betti(&SimplicialComplex::simplex_boundary([1, 2, 3]), Q).unwrap();
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.entries().len(), 2);
        let ideal = hochster_betti_ideal(&SimplicialComplex::simplex_boundary([1, 2, 3]), Q).unwrap();
        assert_eq!(ideal.entries().iter().collect::<Vec<_>>(), vec![(&(0, 3), &1)]);
        assert!(matches!(hochster_betti(&SimplicialComplex::simplex([1]), Coefficient::Integers), Err(Error::NonFieldCoefficient(_))));
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"0,0":1,"1,3":1}"#);
    }
}
