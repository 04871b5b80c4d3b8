//! Independent re-verification of witnesses: each witness names one
//! homology group, which is recomputed here without running the check again.

use crate::complex::{Face, RelativePair, SimplicialComplex};
use crate::homology::{reduced_homology, relative_homology, Coefficient};
use crate::poset::FinitePoset;
use crate::scm::{RankLevel, Witness};
use crate::sr::stanley_reisner_generators;

fn nonzero(c: &SimplicialComplex, degree: i32, coeff: Coefficient) -> bool {
    let h = reduced_homology(c, coeff);
    h.betti(degree) > 0 || !h.torsion(degree).is_empty()
}

/// `H̃_degree(Δ^⟨m⟩) ≠ 0` with `degree < m`.
fn sequential_holds(c: &SimplicialComplex, m: i32, degree: i32, coeff: Coefficient) -> bool {
    degree < m && nonzero(&c.generated_above(m), degree, coeff)
}

/// `lk F` has nonzero homology below its top dimension.
fn spherical_holds(c: &SimplicialComplex, face: &Face, degree: i32, coeff: Coefficient) -> bool {
    let Ok(lk) = c.link(face) else { return false };
    matches!(lk.dim(), Some(d) if degree < d) && nonzero(&lk, degree, coeff)
}

fn relative_holds(pair: &RelativePair, face: &Face, degree: i32, coeff: Coefficient) -> bool {
    let Ok(lk) = pair.ambient().link(face) else { return false };
    let Some(d) = lk.dim() else { return false };
    let sub = pair.sub().link(face).unwrap_or_else(|_| SimplicialComplex::void(lk.ground().iter().copied()));
    let Ok(lp) = RelativePair::new(lk, sub) else { return false };
    let h = relative_homology(&lp, coeff);
    degree < d && (h.betti(degree) > 0 || !h.torsion(degree).is_empty())
}

/// Re-verifies a witness produced by a complex-level check.
pub fn reverify_complex(c: &SimplicialComplex, w: &Witness, coeff: Coefficient) -> bool {
    match w {
        Witness::Sequential { m, degree } => sequential_holds(c, *m, *degree, coeff),
        Witness::Spherical { face, degree } => spherical_holds(c, face, *degree, coeff),
        Witness::Link { face, m, degree } => match c.link(face) {
            Ok(lk) => sequential_holds(&lk, *m, *degree, coeff),
            Err(_) => false,
        },
        Witness::PureSkeleton { r, face, degree } => match c.pure_skeleton(*r) {
            Ok(sk) => spherical_holds(&sk, face, *degree, coeff),
            Err(_) => false,
        },
        Witness::Relative { face, degree } => relative_holds(&RelativePair::absolute(c.clone()), face, *degree, coeff),
        Witness::Filtration { layer, face, degree } => {
            let lay = c.facet_layer(*layer);
            let sub = lay.intersection(&c.generated_above(layer + 1));
            match RelativePair::new(lay, sub) {
                Ok(pair) => relative_holds(&pair, face, *degree, coeff),
                Err(_) => false,
            }
        }
        Witness::ComponentwiseLinear { d, face, degree } => {
            let part = stanley_reisner_generators(&c.alexander_dual()).squarefree_part(*d);
            spherical_holds(&part.complex().alexander_dual(), face, *degree, coeff)
        }
        _ => false,
    }
}

/// Re-verifies a `Relative` witness against an explicit pair.
pub fn reverify_pair(pair: &RelativePair, w: &Witness, coeff: Coefficient) -> bool {
    match w {
        Witness::Relative { face, degree } => relative_holds(pair, face, *degree, coeff),
        _ => false,
    }
}

/// Re-verifies a witness produced by a poset-level check. `level` is needed
/// only for `RankSelection` witnesses.
pub fn reverify_poset(p: &FinitePoset, w: &Witness, coeff: Coefficient, level: Option<RankLevel>) -> bool {
    match w {
        Witness::Interval { lower, upper, m, degree } => {
            let hat = p.adjoin_bounds(true, true);
            let (Some(x), Some(y)) = (hat.index_of(lower), hat.index_of(upper)) else { return false };
            match hat.open_interval(x, y) {
                Ok(iv) => sequential_holds(&iv.order_complex(), *m, *degree, coeff),
                Err(_) => false,
            }
        }
        Witness::RankLayer { j, chain, degree } => {
            let Ok(layer) = p.rank_generated_ideal(*j) else { return false };
            let idx: Option<Vec<u32>> = chain.iter().map(|l| layer.index_of(l).map(|i| i as u32)).collect();
            match idx {
                Some(idx) => spherical_holds(&layer.order_complex(), &Face::new(idx), *degree, coeff),
                None => false,
            }
        }
        Witness::RankSelection { j, ranks, degree } => {
            let q = match level {
                Some(RankLevel::Layers) => p.rank_generated_ideal(*j),
                Some(RankLevel::Ideals) => p.maxrank_ideal(*j),
                _ => return false,
            };
            let Ok(q) = q else { return false };
            let r = p.ranks();
            let sel = q.filter(|x| ranks.contains(&r[p.index_of(q.label(x)).expect("subposet label")]));
            *degree <= ranks.len() as i32 - 2 && nonzero(&sel.order_complex(), *degree, coeff)
        }
        Witness::RankSelectionSequential { ranks, m, degree } => {
            let r = p.ranks();
            let sel = p.filter(|x| ranks.contains(&r[x]));
            sequential_holds(&sel.order_complex(), *m, *degree, coeff)
        }
        other => reverify_complex(&p.order_complex(), other, coeff),
    }
}
