use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use scm_core::format::{parse_facets, parse_ideal, parse_poset, write_facets, write_ideal, write_poset};
use scm_core::harness::generate::{generate_random_complex, generate_random_poset, generate_semipure_poset, generate_shellable};
use scm_core::harness::witness::{reverify_complex, reverify_poset};
use scm_core::homology::{boundary_matrix, reduced_homology};
use scm_core::scm::Checker;
use scm_core::sr::stanley_reisner_generators;
use scm_core::{Coefficient, Face, FinitePoset, SimplicialComplex};

const Z: Coefficient = Coefficient::Integers;
const Q: Coefficient = Coefficient::Rationals;

fn complex(max_v: usize) -> impl Strategy<Value = SimplicialComplex> {
    (0..=max_v, 0.2f64..0.8, any::<u64>()).prop_map(|(n, d, s)| generate_random_complex(n, d, s).unwrap())
}

fn poset(max_m: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max_m, 0.1f64..0.6, any::<u64>()).prop_map(|(m, d, s)| generate_random_poset(m, d, s).unwrap())
}

fn semipure(max_m: usize) -> impl Strategy<Value = FinitePoset> {
    (2..=max_m, any::<u64>()).prop_map(|(m, s)| generate_semipure_poset(m, s).unwrap())
}

fn top(c: &SimplicialComplex) -> i32 {
    c.dim().unwrap_or(-1)
}

/// Brute-force face set, used as an oracle for subcomplex operations.
fn face_set(c: &SimplicialComplex) -> BTreeSet<Face> {
    c.facets().iter().flat_map(|f| f.all_subsets().collect::<Vec<_>>()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn universal_coefficients(c in complex(7)) {
        let z = reduced_homology(&c, Z);
        for p in [2u64, 3, 5] {
            let fp = reduced_homology(&c, Coefficient::PrimeField(p as u32));
            let div = |r: i32| z.torsion_u64(r).iter().filter(|&&t| t % p == 0).count();
            for r in -1..=top(&c) {
                let below = if r > -1 { div(r - 1) } else { 0 };
                prop_assert_eq!(fp.betti(r), z.betti(r) + div(r) + below, "p = {}, degree {}", p, r);
            }
        }
        let q = reduced_homology(&c, Q);
        for r in -1..=top(&c) {
            prop_assert_eq!(q.betti(r), z.betti(r));
        }
    }

    #[test]
    fn euler_poincare(c in complex(8)) {
        let q = reduced_homology(&c, Q);
        let sign = |i: i32| if i.rem_euclid(2) == 0 { 1i64 } else { -1 };
        let faces: i64 = c.f_vector().iter().enumerate().map(|(i, &f)| sign(i as i32 - 1) * f as i64).sum();
        let betti: i64 = (-1..=top(&c)).map(|r| sign(r) * q.betti(r) as i64).sum();
        prop_assert_eq!(faces, betti);
    }

    #[test]
    fn boundary_squares_to_zero(c in complex(7)) {
        for d in 0..top(&c) {
            let lower = boundary_matrix(&c, d).unwrap();
            let upper = boundary_matrix(&c, d + 1).unwrap();
            prop_assert_eq!(&lower.col_faces, &upper.row_faces);
            prop_assert!(lower.matrix.mul(&upper.matrix).is_zero());
        }
    }

    #[test]
    fn relabeling_preserves_invariants(c in complex(6), shift in 0usize..6) {
        let ground = c.ground().to_vec();
        let n = ground.len();
        let map: BTreeMap<u32, u32> = ground.iter().enumerate().map(|(i, &v)| (v, ground[(i + shift) % n.max(1)] + 100)).collect();
        let d = c.relabel(&map);
        prop_assert_eq!(reduced_homology(&c, Z).betti_vector(), reduced_homology(&d, Z).betti_vector());
        let ch = Checker::new(Q);
        prop_assert_eq!(ch.is_scm_links(&c).unwrap().verdict, ch.is_scm_links(&d).unwrap().verdict);
        prop_assert_eq!(ch.is_cm(&c).unwrap().verdict, ch.is_cm(&d).unwrap().verdict);
    }

    #[test]
    fn witnesses_reverify(c in complex(6)) {
        for k in [Z, Q, Coefficient::PrimeField(2)] {
            let ch = Checker::new(k);
            for v in [ch.is_scm_links(&c).unwrap(), ch.is_scm_duval(&c).unwrap(), ch.is_cm(&c).unwrap(), ch.is_sequentially_acyclic(&c).unwrap()] {
                prop_assert_eq!(v.verdict, v.witness.is_none());
                if let Some(w) = &v.witness {
                    prop_assert!(reverify_complex(&c, w, k), "witness {:?}", w);
                }
            }
        }
    }

    #[test]
    fn poset_witnesses_reverify(p in semipure(8)) {
        let ch = Checker::new(Q);
        for v in [ch.poset_is_scm_intervals(&p).unwrap(), ch.semipure_is_scm_rankgen(&p).unwrap()] {
            if let Some(w) = &v.witness {
                prop_assert!(reverify_poset(&p, w, Q, None), "witness {:?}", w);
            }
        }
    }

    #[test]
    fn routes_agree_over_rationals(c in complex(5)) {
        let ch = Checker::new(Q);
        let links = ch.is_scm_links(&c).unwrap().verdict;
        prop_assert_eq!(ch.is_scm_duval(&c).unwrap().verdict, links);
        prop_assert_eq!(ch.is_scm_filtration(&c).unwrap().verdict, links);
        prop_assert_eq!(ch.is_scm_dual(&c).unwrap().verdict, links);
    }

    #[test]
    fn shellings_are_scm(n in 3usize..7, facets in 1usize..6, seed in any::<u64>()) {
        if let Ok(inst) = generate_shellable(n, facets, seed) {
            prop_assert!(Checker::new(Z).is_scm_links(&inst.complex).unwrap().verdict);
        }
    }

    #[test]
    fn facet_format_round_trip(c in complex(8)) {
        prop_assert_eq!(parse_facets(&write_facets(&c)).unwrap(), c);
    }

    #[test]
    fn ideal_format_round_trip(c in complex(6)) {
        let i = stanley_reisner_generators(&c);
        prop_assert_eq!(parse_ideal(&write_ideal(&i)).unwrap(), i);
    }

    #[test]
    fn poset_format_round_trip(p in poset(10)) {
        prop_assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }

    #[test]
    fn alexander_duality_is_an_involution(c in complex(6)) {
        prop_assert_eq!(c.alexander_dual().alexander_dual(), c.clone());
        let faces = face_set(&c);
        let dual = face_set(&c.alexander_dual());
        let ground = Face::new(c.ground().iter().copied());
        for a in ground.all_subsets() {
            prop_assert_eq!(dual.contains(&a), !faces.contains(&c.complement(&a)));
        }
    }

    #[test]
    fn subcomplex_operations_match_face_sets(c in complex(6), m in -1i32..4) {
        let faces = face_set(&c);
        let skel: BTreeSet<Face> = faces.iter().filter(|f| f.dim() <= m).cloned().collect();
        if !c.is_void() {
            prop_assert_eq!(face_set(&c.skeleton(m)), skel);
        }
        let above: BTreeSet<Face> = c.facets().iter().filter(|f| f.dim() >= m).flat_map(|f| f.all_subsets().collect::<Vec<_>>()).collect();
        prop_assert_eq!(face_set(&c.generated_above(m)), above);
        for f in faces.iter().take(4) {
            let link: BTreeSet<Face> = faces.iter().filter(|g| g.is_disjoint(f) && faces.contains(&g.union(f))).cloned().collect();
            prop_assert_eq!(face_set(&c.link(f).unwrap()), link);
        }
    }

    #[test]
    fn poset_identities(p in poset(8)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().order_complex(), p.order_complex());
        let hat = p.adjoin_bounds(true, true);
        prop_assert!(hat.is_bounded());
        let ch = Checker::new(Q);
        prop_assert_eq!(ch.poset_is_scm_intervals(&p).unwrap().verdict, ch.is_scm_links(&p.order_complex()).unwrap().verdict);
    }

    #[test]
    fn rank_selection_subposets(p in semipure(9)) {
        let top = p.top_rank();
        let ranks = p.ranks();
        for mask in 1u32..(1 << (top + 1)) {
            let s: BTreeSet<usize> = (0..=top).filter(|i| mask & (1 << i) != 0).collect();
            let sel = p.rank_selected(&s).unwrap();
            let bottom = usize::from(s.contains(&0) && p.minimum().is_none());
            prop_assert_eq!(sel.len(), ranks.iter().filter(|r| s.contains(r)).count() + bottom);
        }
    }
}

#[test]
fn ordinal_sum_acyclicity_converse_fails() {
    // two disjoint 2-chains below a point: the sum is a cone, the factor is not acyclic
    let p = FinitePoset::from_labeled(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
    let q = FinitePoset::from_labeled(&["t"], &[]).unwrap();
    let sum = p.ordinal_sum(&q).unwrap();
    let ch = Checker::new(Z);
    assert!(ch.is_sequentially_acyclic(&sum.order_complex()).unwrap().verdict);
    assert!(!ch.is_sequentially_acyclic(&p.order_complex()).unwrap().verdict);
    assert!(ch.is_sequentially_acyclic(&q.order_complex()).unwrap().verdict);
    // the SCM statement itself is an equivalence here
    assert!(!ch.poset_is_scm_intervals(&sum).unwrap().verdict);
    assert!(!ch.poset_is_scm_intervals(&p).unwrap().verdict);
}

#[test]
fn shipped_fixtures_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let rp2 = parse_facets(&std::fs::read_to_string(dir.join("rp2.facets")).unwrap()).unwrap();
    assert_eq!(rp2.f_vector(), vec![1, 6, 15, 10]);
    let torus = parse_facets(&std::fs::read_to_string(dir.join("torus.facets")).unwrap()).unwrap();
    assert_eq!(torus.f_vector(), vec![1, 7, 21, 14]);
    let p = parse_poset(&std::fs::read_to_string(dir.join("counterexample.poset")).unwrap()).unwrap();
    assert!(p.is_semipure());
    assert_eq!(p.len(), 6);
}
