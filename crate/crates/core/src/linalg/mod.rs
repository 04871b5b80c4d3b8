//! Exact linear algebra over ℤ, ℚ and prime fields.
//!
//! Matrices arrive as [`SparseMatrix`] with small integer entries (boundary
//! matrices have entries in {-1, 0, 1}). Small matrices go straight to dense
//! routines; larger ones are first shrunk by eliminating unit pivots in
//! sparse form and only the residual block is densified.
//!
//! Integer work starts in checked `i64`/`i128` and restarts in `BigInt` on
//! overflow, so results are always exact.

mod dense;
mod sparse;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

pub use dense::gcd_lcm_chain;

/// Below this size in both dimensions the dense routines are used directly.
pub const DENSE_CUTOFF: usize = 64;

/// Row-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "entry ({r},{c}) outside {nrows}x{ncols}");
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        SparseMatrix { nrows, ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(|e| *e.1 != 0).map(move |(c, &v)| (r, c, v)));
        Self::from_triplets(nrows, ncols, trip)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r].binary_search_by_key(&c, |e| e.0).map_or(0, |i| self.rows[r][i].1)
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                out[r][c] = v;
            }
        }
        out
    }

    /// Matrix product; used to check that consecutive boundaries compose to zero.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut trip = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = std::collections::BTreeMap::new();
            for &(k, a) in row {
                for &(c, b) in &other.rows[k] {
                    *acc.entry(c).or_insert(0i64) += a * b;
                }
            }
            trip.extend(acc.into_iter().map(|(c, v)| (r, c, v)));
        }
        SparseMatrix::from_triplets(self.nrows, other.ncols, trip)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn is_small(&self) -> bool {
        self.nrows <= DENSE_CUTOFF && self.ncols <= DENSE_CUTOFF
    }
}

/// Invariant factors `d_1 | d_2 | … | d_k` (all positive) and the rank `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

/// Smith normal form invariant factors of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    let (units, residual) = if m.is_small() {
        (0, m.to_dense())
    } else {
        match sparse::eliminate_unit_pivots(m) {
            Some(r) => r,
            None => (0, m.to_dense()),
        }
    };
    let mut factors: Vec<BigInt> = vec![BigInt::one(); units];
    let rest = match dense::snf_diagonal_i64(residual.clone()) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => dense::snf_diagonal_big(residual.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()),
    };
    factors.extend(rest);
    let factors = gcd_lcm_chain(factors);
    debug_assert!(factors.iter().all(|f| f.is_positive()));
    let rank = factors.len();
    SnfResult { factors, rank }
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    let (units, residual) = if m.is_small() {
        (0, m.to_dense())
    } else {
        match sparse::eliminate_unit_pivots(m) {
            Some(r) => r,
            None => (0, m.to_dense()),
        }
    };
    let rest = match dense::bareiss_rank_i128(&residual) {
        Some(r) => r,
        None => dense::bareiss_rank_big(residual.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()),
    };
    units + rest
}

/// Rank over the prime field with `p` elements.
pub fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    if m.is_small() {
        dense::rank_mod_p(&m.to_dense(), p)
    } else {
        sparse::rank_mod_p(m, p)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
