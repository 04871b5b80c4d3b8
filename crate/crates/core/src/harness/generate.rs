//! Seeded instance generators. Every generator is a pure function of its
//! arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::scm::shelling_step_ok;

pub const MAX_GENERATED_VERTICES: usize = 16;
pub const MAX_GENERATED_ELEMENTS: usize = 24;
pub const MAX_SHELLING_FACETS: usize = 8;
const RETRY_BUDGET: usize = 10_000;
const RESTART_AFTER: usize = 400;

/// SplitMix64 finalizer; derives independent streams from one seed.
pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::Bound { what, value, bound });
    }
    Ok(())
}

fn check_density(density: f64) -> Result<()> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::OutOfRange { what: "density (per mille)", value: (density * 1000.0) as i64, range: "(0, 1000]".into() });
    }
    Ok(())
}

fn random_face(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Face {
    Face::new((1..=n as u32).filter(|_| rng.gen_bool(density)))
}

/// Complex on `{1..n}` generated by between 1 and `n + 2` random faces, each
/// vertex kept with probability `density`. Can be void or empty.
pub fn generate_random_complex(n: usize, density: f64, seed: u64) -> Result<SimplicialComplex> {
    check_bound("vertices", n, MAX_GENERATED_VERTICES)?;
    check_density(density)?;
    let mut rng = rng(seed);
    if n == 0 {
        let empty = rng.gen_bool(0.5);
        return Ok(if empty { SimplicialComplex::empty([]) } else { SimplicialComplex::void([]) });
    }
    let k = rng.gen_range(1..=n + 2);
    let faces: Vec<Face> = (0..k).map(|_| random_face(&mut rng, n, density)).collect();
    Ok(SimplicialComplex::from_facets(faces, 1..=n as u32).expect("faces drawn from the ground set"))
}

/// A complex on `{1..n}` with a certified shelling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellableInstance {
    pub complex: SimplicialComplex,
    pub order: Vec<Face>,
}

/// Grows a shelling one facet at a time. Proposals either extend a ridge of
/// an existing facet or are uniform random faces; each accepted facet keeps
/// every earlier facet maximal and satisfies the shelling condition.
pub fn generate_shellable(n: usize, facets: usize, seed: u64) -> Result<ShellableInstance> {
    check_bound("vertices", n, MAX_GENERATED_VERTICES)?;
    check_bound("facets", facets, MAX_SHELLING_FACETS)?;
    if n == 0 || facets == 0 {
        return Err(Error::OutOfRange { what: "vertices and facets", value: 0, range: ">= 1".into() });
    }
    let mut rng = rng(seed);
    let ground: Vec<u32> = (1..=n as u32).collect();
    // a partial shelling can get stuck; restart after a run of rejections
    let mut attempts = 0;
    let order = 'restart: loop {
        let first_size = rng.gen_range(1..=n);
        let mut order = vec![Face::new(ground.choose_multiple(&mut rng, first_size).copied())];
        let mut stuck = 0;
        while order.len() < facets {
            attempts += 1;
            stuck += 1;
            if attempts > RETRY_BUDGET {
                return Err(Error::GeneratorExhausted { attempts: RETRY_BUDGET });
            }
            if stuck > RESTART_AFTER {
                continue 'restart;
            }
            let candidate = if rng.gen_bool(0.7) {
                let base = order.choose(&mut rng).expect("nonempty");
                let ridge = base.without_position(rng.gen_range(0..base.len()));
                let outside: Vec<u32> = ground.iter().copied().filter(|v| !base.contains_vertex(*v)).collect();
                if outside.is_empty() {
                    continue;
                }
                let extra = rng.gen_range(1..=outside.len().min(2));
                ridge.union(&Face::new(outside.choose_multiple(&mut rng, extra).copied()))
            } else {
                let size = rng.gen_range(1..=n);
                Face::new(ground.choose_multiple(&mut rng, size).copied())
            };
            if order.iter().any(|f| candidate.is_subset(f) || f.is_subset(&candidate)) {
                continue;
            }
            if shelling_step_ok(&order, &candidate) {
                order.push(candidate);
                stuck = 0;
            }
        }
        break order;
    };
    let complex = SimplicialComplex::from_facets(order.clone(), ground).expect("faces drawn from the ground set");
    debug_assert!(crate::scm::is_shelling_order(&order));
    Ok(ShellableInstance { complex, order })
}

/// Random order on `m` elements labelled `p0..`: `i < j` is a relation with
/// probability `density`, then closed transitively.
pub fn generate_random_poset(m: usize, density: f64, seed: u64) -> Result<FinitePoset> {
    check_bound("elements", m, MAX_GENERATED_ELEMENTS)?;
    check_density(density)?;
    let mut rng = rng(seed);
    let mut rel = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if rng.gen_bool(density) {
                rel.push((i, j));
            }
        }
    }
    let labels = (0..m).map(|i| format!("p{i}")).collect();
    FinitePoset::from_relations(labels, rel)
}

/// Layered poset whose cover relations only join consecutive layers, so every
/// lower interval is pure.
pub fn generate_semipure_poset(m: usize, seed: u64) -> Result<FinitePoset> {
    check_bound("elements", m, MAX_GENERATED_ELEMENTS)?;
    let mut rng = rng(seed);
    for _ in 0..RETRY_BUDGET {
        let max_layers = m.clamp(1, 4);
        let layers = rng.gen_range(1..=max_layers);
        let mut level = vec![0usize; m];
        // every layer gets one element, the rest are spread at random
        for (i, l) in level.iter_mut().enumerate() {
            *l = if i < layers { i } else { rng.gen_range(0..layers) };
        }
        level.sort_unstable();
        let mut rel = Vec::new();
        for x in 0..m {
            if level[x] == 0 {
                continue;
            }
            let below: Vec<usize> = (0..m).filter(|&y| level[y] + 1 == level[x]).collect();
            let k = rng.gen_range(1..=below.len());
            rel.extend(below.choose_multiple(&mut rng, k).map(|&y| (y, x)));
        }
        let labels = (0..m).map(|i| format!("p{i}")).collect();
        let p = FinitePoset::from_relations(labels, rel)?;
        if p.is_semipure() {
            return Ok(p);
        }
    }
    Err(Error::GeneratorExhausted { attempts: RETRY_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scm::{is_shellable, is_shelling_order};

    #[test]
    fn deterministic() {
        assert_eq!(generate_random_complex(6, 0.5, 7).unwrap(), generate_random_complex(6, 0.5, 7).unwrap());
        assert_eq!(generate_shellable(6, 5, 3).unwrap(), generate_shellable(6, 5, 3).unwrap());
        assert_eq!(generate_random_poset(7, 0.3, 1).unwrap(), generate_random_poset(7, 0.3, 1).unwrap());
        assert_eq!(generate_semipure_poset(8, 2).unwrap(), generate_semipure_poset(8, 2).unwrap());
    }

    #[test]
    fn shellable_outputs_are_certified() {
        for seed in 0..40 {
            let inst = generate_shellable(6, 1 + (seed as usize % 8), seed).unwrap();
            assert!(is_shelling_order(&inst.order));
            assert_eq!(inst.complex.facets().len(), inst.order.len());
            assert!(is_shellable(&inst.complex).is_shellable());
        }
    }

    #[test]
    fn semipure_outputs_are_semipure() {
        for seed in 0..40 {
            let p = generate_semipure_poset(1 + seed as usize % 10, seed).unwrap();
            assert!(p.is_semipure());
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(generate_random_complex(99, 0.5, 0), Err(Error::Bound { .. })));
        assert!(matches!(generate_shellable(5, 9, 0), Err(Error::Bound { .. })));
        assert!(generate_random_complex(4, 0.0, 0).is_err());
    }

    #[test]
    fn streams_differ() {
        assert_ne!(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
        assert_ne!(derive_seed(1, 0, 0), derive_seed(1, 1, 0));
    }
}
