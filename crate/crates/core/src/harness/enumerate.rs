//! Exhaustive enumeration of small complexes and layered posets.

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

pub const MAX_CANONICAL_VERTICES: usize = 5;

fn mask_face(mask: u32) -> Face {
    Face::new((0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    perm.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// Facet list of `Δ` as sorted faces.
fn facet_key(masks: &[u32]) -> Vec<Face> {
    let mut fs: Vec<Face> = masks.iter().map(|&m| mask_face(m)).collect();
    fs.sort();
    fs
}

/// Lexicographically least facet list over all relabelings of `{1..n}`.
pub fn canonical_form(complex: &SimplicialComplex) -> Result<Vec<Face>> {
    let n = complex.ground().len();
    if n > MAX_CANONICAL_VERTICES || complex.ground().iter().enumerate().any(|(i, &v)| v != i as u32 + 1) {
        return Err(Error::Bound { what: "canonical ground {1..n}", value: n, bound: MAX_CANONICAL_VERTICES });
    }
    let masks: Vec<u32> = complex.facets().iter().map(|f| f.vertices().iter().fold(0, |a, &v| a | 1 << (v - 1))).collect();
    Ok(canonical_masks(&masks, &permutations(n)))
}

fn canonical_masks(masks: &[u32], perms: &[Vec<usize>]) -> Vec<Face> {
    perms
        .iter()
        .map(|p| facet_key(&masks.iter().map(|&m| permute_mask(m, p)).collect::<Vec<_>>()))
        .min()
        .expect("at least the identity")
}

/// Every antichain of subsets of `{0..n-1}` as bitmasks, i.e. every labeled
/// complex on `{1..n}` by its facets. Includes the void and empty complexes.
pub fn labeled_facet_sets(n: usize) -> Result<Vec<Vec<u32>>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::Bound { what: "vertices", value: n, bound: MAX_CANONICAL_VERTICES });
    }
    let subsets: Vec<u32> = (0..1u32 << n).collect();
    let mut out = Vec::new();
    fn go(i: usize, subsets: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == subsets.len() {
            out.push(cur.clone());
            return;
        }
        go(i + 1, subsets, cur, out);
        let s = subsets[i];
        if cur.iter().all(|&c| c & s != c && c & s != s) {
            cur.push(s);
            go(i + 1, subsets, cur, out);
            cur.pop();
        }
    }
    go(0, &subsets, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of labeled complexes on `{1..n}` other than the void and empty ones.
pub fn labeled_count(n: usize) -> Result<usize> {
    Ok(labeled_facet_sets(n)?.len() - 2)
}

/// One representative per relabeling class of complexes on ground `{1..n}`,
/// in canonical form and sorted.
pub fn canonical_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    let perms = permutations(n);
    let classes: BTreeSet<Vec<Face>> = labeled_facet_sets(n)?.iter().map(|m| canonical_masks(m, &perms)).collect();
    Ok(classes
        .into_iter()
        .map(|fs| SimplicialComplex::from_facets(fs, 1..=n as u32).expect("faces drawn from the ground set"))
        .collect())
}

/// Canonical complexes on grounds `{1..k}` for every `k <= n`.
pub fn canonical_complexes_upto(n: usize) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(canonical_complexes(k)?);
    }
    Ok(out)
}

/// Layered poset shape: layer sizes and, per element above the first layer,
/// its lower covers as a bitmask over the previous layer.
fn layered_poset(layers: &[usize], covers: &[u32]) -> FinitePoset {
    let mut labels = Vec::new();
    let mut start = Vec::new();
    for (l, &size) in layers.iter().enumerate() {
        start.push(labels.len());
        for i in 0..size {
            labels.push(format!("{}{}", (b'a' + l as u8) as char, i + 1));
        }
    }
    let mut rel = Vec::new();
    let mut k = 0;
    for l in 1..layers.len() {
        for i in 0..layers[l] {
            let x = start[l] + i;
            for j in 0..layers[l - 1] {
                if covers[k] & (1 << j) != 0 {
                    rel.push((start[l - 1] + j, x));
                }
            }
            k += 1;
        }
    }
    FinitePoset::from_relations(labels, rel).expect("layers are acyclic")
}

fn compositions(m: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for k in 1..=rest {
            cur.push(k);
            go(rest - k, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(m, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Visits every layered semipure poset with exactly `m` elements and at most
/// `max_length + 1` layers. Within a layer the cover masks are nondecreasing,
/// which removes the permutations of interchangeable elements. The visitor
/// returns `false` to stop; the return value reports whether it stopped.
pub fn for_each_layered_poset(m: usize, max_length: usize, visit: &mut dyn FnMut(FinitePoset) -> bool) -> bool {
    for layers in compositions(m, max_length + 1) {
        let mut slots: Vec<(usize, usize, bool)> = Vec::new();
        for l in 1..layers.len() {
            for i in 0..layers[l] {
                slots.push((l, layers[l - 1], i > 0));
            }
        }
        let mut covers = vec![0u32; slots.len()];
        if !assign(&layers, &slots, 0, &mut covers, visit) {
            return false;
        }
    }
    true
}

fn assign(layers: &[usize], slots: &[(usize, usize, bool)], k: usize, covers: &mut Vec<u32>, visit: &mut dyn FnMut(FinitePoset) -> bool) -> bool {
    if k == slots.len() {
        return visit(layered_poset(layers, covers));
    }
    let (_, width, tied) = slots[k];
    let lo = if tied { covers[k - 1] } else { 1 };
    for mask in lo..1u32 << width {
        covers[k] = mask;
        if !assign(layers, slots, k + 1, covers, visit) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_counts_match_dedekind() {
        let counts: Vec<usize> = (0..=4).map(|n| labeled_facet_sets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
    }

    #[test]
    fn canonical_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| canonical_complexes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 5, 10, 30]);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let a = SimplicialComplex::from_facets([Face::new([1, 2]), Face::new([3])], 1..=3).unwrap();
        let b = SimplicialComplex::from_facets([Face::new([2, 3]), Face::new([1])], 1..=3).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_eq!(canonical_form(&a).unwrap(), vec![Face::new([1]), Face::new([2, 3])]);
    }

    #[test]
    fn layered_posets_are_semipure() {
        let mut n = 0;
        for_each_layered_poset(5, 3, &mut |p| {
            assert!(p.is_semipure());
            assert_eq!(p.len(), 5);
            n += 1;
            true
        });
        assert!(n > 0);
    }
}
