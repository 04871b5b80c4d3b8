use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::dense::{inv_mod, reduce_mod};
use super::SparseMatrix;

/// Repeatedly eliminates ±1 pivots (a valid step over ℤ, ℚ and every field),
/// preferring pivots with the least fill-in. Returns the number of pivots
/// removed and the dense residual block. `None` on `i64` overflow.
pub(super) fn eliminate_unit_pivots(m: &SparseMatrix) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut rows: Vec<BTreeMap<usize, i64>> = m.rows.iter().map(|r| r.iter().copied().collect()).collect();
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            cols[c].insert(r);
        }
    }
    let mut units = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'search: for (c, col) in cols.iter().enumerate() {
            for &r in col {
                let v = rows[r][&c];
                if v != 1 && v != -1 {
                    continue;
                }
                let cost = (rows[r].len() - 1) * (col.len() - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let pv = pivot_row[&pc];
        for &c in pivot_row.keys() {
            cols[c].remove(&pr);
        }
        let others: Vec<usize> = cols[pc].iter().copied().collect();
        for r in others {
            // pv is ±1, so a_rc / pv = a_rc * pv
            let factor = rows[r][&pc] * pv;
            for (&c, &v) in &pivot_row {
                let cur = rows[r].get(&c).copied().unwrap_or(0);
                let new = cur.checked_sub(factor.checked_mul(v)?)?;
                if new == 0 {
                    rows[r].remove(&c);
                    cols[c].remove(&r);
                } else {
                    if cur == 0 {
                        cols[c].insert(r);
                    }
                    rows[r].insert(c, new);
                }
            }
        }
        debug_assert!(cols[pc].is_empty());
        units += 1;
    }
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&c| !cols[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![0i64; live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (&c, &v) in &rows[r] {
            dense[i][col_pos[&c]] = v;
        }
    }
    Some((units, dense))
}

/// Row-by-row reduction against stored pivots keyed by leading column.
pub(super) fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let p = p as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for row in &m.rows {
        let mut v: Vec<(usize, u64)> = row.iter().map(|&(c, x)| (c, reduce_mod(x, p))).filter(|e| e.1 != 0).collect();
        while let Some(&(lead, a)) = v.first() {
            match pivots.get(&lead) {
                Some(piv) => v = axpy(&v, a, piv, p),
                None => {
                    let inv = inv_mod(a, p);
                    for e in v.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(lead, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `v - a * piv` for sorted sparse vectors mod p.
fn axpy(v: &[(usize, u64)], a: u64, piv: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(v.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < piv.len() {
        let take_v = j >= piv.len() || (i < v.len() && v[i].0 < piv[j].0);
        let take_p = i >= v.len() || (j < piv.len() && piv[j].0 < v[i].0);
        if take_v {
            out.push(v[i]);
            i += 1;
        } else if take_p {
            out.push((piv[j].0, (p - a * piv[j].1 % p) % p));
            j += 1;
        } else {
            let x = (v[i].1 + p - a * piv[j].1 % p) % p;
            if x != 0 {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
