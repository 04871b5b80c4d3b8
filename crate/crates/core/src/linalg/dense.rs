use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer arithmetic where every operation may report overflow.
pub(crate) trait CheckedInt: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn abs(&self) -> Self;
    fn quot(&self, d: &Self) -> Option<Self>;
    fn mul(&self, b: &Self) -> Option<Self>;
    fn sub(&self, b: &Self) -> Option<Self>;

    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.sub(&q.mul(b)?)
    }
}

macro_rules! checked_prim {
    ($t:ty) => {
        impl CheckedInt for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn abs_lt(&self, other: &Self) -> bool {
                self.unsigned_abs() < other.unsigned_abs()
            }
            fn abs(&self) -> Self {
                <$t>::abs(*self)
            }
            fn quot(&self, d: &Self) -> Option<Self> {
                self.checked_div(*d)
            }
            fn mul(&self, b: &Self) -> Option<Self> {
                self.checked_mul(*b)
            }
            fn sub(&self, b: &Self) -> Option<Self> {
                self.checked_sub(*b)
            }
        }
    };
}

checked_prim!(i64);
checked_prim!(i128);

impl CheckedInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn mul(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
    fn sub(&self, b: &Self) -> Option<Self> {
        Some(self - b)
    }
}

/// Diagonalizes by unimodular row and column operations, returning the
/// absolute values of the nonzero diagonal entries in elimination order.
/// `None` signals arithmetic overflow.
fn snf_diagonal<T: CheckedInt>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            let pivot_row = a[t].clone();
            for row in a.iter_mut().skip(t + 1) {
                if row[t].is_zero() {
                    continue;
                }
                let q = row[t].quot(&pivot_row[t])?;
                for j in t..n {
                    row[j] = row[j].sub_mul(&q, &pivot_row[j])?;
                }
                if !row[t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    let pivot_col = row[t].clone();
                    row[j] = row[j].sub_mul(&q, &pivot_col)?;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Bring the smallest leftover in row/column t to the pivot; it is
            // strictly smaller than the current pivot, so this terminates.
            let mut best = (t, t);
            for i in t + 1..m {
                if !a[i][t].is_zero() && a[i][t].abs_lt(&a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() && a[t][j].abs_lt(&a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

pub(crate) fn snf_diagonal_i64(a: Vec<Vec<i64>>) -> Option<Vec<i64>> {
    snf_diagonal(a)
}

pub(crate) fn snf_diagonal_big(a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    snf_diagonal(a).expect("bigint arithmetic cannot overflow")
}

/// Turns any positive diagonal into the divisibility chain with the same
/// product structure, using `diag(a, b) ~ diag(gcd, lcm)`.
pub fn gcd_lcm_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Fraction-free (Bareiss) row echelon rank.
fn bareiss_rank<T: CheckedInt>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for c in 0..n {
        if rank == m {
            break;
        }
        let Some(r) = (rank..m).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, r);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let lead = row[c].clone();
            for j in c + 1..n {
                let num = pivot_row[c].mul(&row[j])?.sub(&lead.mul(&pivot_row[j])?)?;
                row[j] = num.quot(&prev)?;
            }
            row[c] = T::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
    }
    Some(rank)
}

pub(crate) fn bareiss_rank_i128(a: &[Vec<i64>]) -> Option<usize> {
    bareiss_rank(a.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect())
}

pub(crate) fn bareiss_rank_big(a: Vec<Vec<BigInt>>) -> usize {
    bareiss_rank(a).expect("bigint arithmetic cannot overflow")
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn reduce_mod(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

pub(crate) fn rank_mod_p(a: &[Vec<i64>], p: u32) -> usize {
    let p = p as u64;
    let mut a: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&v| reduce_mod(v, p)).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        if rank == m {
            break;
        }
        let Some(r) = (rank..m).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, r);
        let inv = inv_mod(a[rank][c], p);
        for v in a[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                row[j] = (row[j] + p * p - f * pivot_row[j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_normalization() {
        let d: Vec<BigInt> = [4, 6, 1].iter().map(|&v| BigInt::from(v)).collect();
        let c: Vec<i64> = gcd_lcm_chain(d).iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(c, vec![1, 2, 12]);
    }

    #[test]
    fn bareiss_skips_zero_columns() {
        let a = vec![vec![0, 1, 2], vec![0, 2, 4], vec![0, 0, 3]];
        assert_eq!(bareiss_rank_i128(&a), Some(2));
    }

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
