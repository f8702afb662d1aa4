//! Dense linear algebra: exact elimination over any [`Field`] and word-size
//! elimination modulo a prime.

#![allow(clippy::needless_range_loop)]

use crate::field::Field;
use crate::modp::{addmod, invmod, mulmod, submod};

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(mut m: Vec<Vec<F>>, one: &F) -> F {
    let n = m.len();
    let mut acc = one.one_like();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return one.zero_like();
        };
        if piv != c {
            m.swap(piv, c);
            acc = acc.neg();
        }
        let inv = m[c][c].inv().expect("nonzero pivot");
        acc = acc.mul(&m[c][c]);
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].mul(&inv);
            for k in c..n {
                let t = f.mul(&m[c][k]);
                m[r][k] = m[r][k].sub(&t);
            }
        }
    }
    acc
}

/// Fraction-free (Bareiss) rank. Every division performed is exact in the
/// coefficient ring generated by the entries, so intermediate entries stay
/// integral when the input is.
pub fn bareiss_rank<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let Some(mut prev_p) = m[0].first().map(|x| x.one_like()) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(piv, rank);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = m[rank][c].mul(&m[r][k]).sub(&m[r][c].mul(&m[rank][k]));
                m[r][k] = v.div(&prev_p).expect("nonzero previous pivot");
            }
            m[r][c] = m[r][c].zero_like();
        }
        prev_p = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Kernel basis in reduced row echelon normal form: one vector per free column,
/// with a 1 in that column and 0 in the other free columns.
pub fn kernel<F: Field>(mut m: Vec<Vec<F>>, ncols: usize, zero: &F) -> Vec<Vec<F>> {
    let pivots = rref(&mut m, ncols);
    kernel_from_rref(&m, &pivots, ncols, zero)
}

fn rref<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(piv, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for k in c..ncols {
            m[r][k] = m[r][k].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..ncols {
                    let t = f.mul(&m[r][k]);
                    m[i][k] = m[i][k].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref<F: Field>(m: &[Vec<F>], pivots: &[usize], ncols: usize, zero: &F) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![zero.zero_like(); ncols];
        v[free] = zero.one_like();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Determinant modulo `p`; destroys the matrix.
pub fn det_mod(m: &mut [Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut acc = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            m.swap(piv, c);
            acc = (p - acc) % p;
        }
        acc = mulmod(acc, m[c][c], p);
        let inv = invmod(m[c][c], p).unwrap();
        let (top, bottom) = m.split_at_mut(c + 1);
        let prow = &top[c];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv, p);
            for k in c..n {
                row[k] = submod(row[k], mulmod(f, prow[k], p), p);
            }
        }
    }
    acc
}

/// Row-echelon reduction modulo `p`; returns pivot columns. Rows are reduced in
/// place to reduced row echelon form.
pub fn rref_mod(m: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = invmod(m[r][c], p).unwrap();
        for k in c..ncols {
            m[r][k] = mulmod(m[r][k], inv, p);
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for k in c..ncols {
                if prow[k] != 0 {
                    row[k] = submod(row[k], mulmod(f, prow[k], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank modulo `p` by forward elimination with delayed reduction.
pub fn rank_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = invmod(m[r][c], p).unwrap();
        let (top, bottom) = m.split_at_mut(r + 1);
        let prow = &top[r];
        let nz: Vec<usize> = (c + 1..ncols).filter(|&k| prow[k] != 0).collect();
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = p - mulmod(row[c], inv, p);
            row[c] = 0;
            for &k in &nz {
                row[k] = addmod(row[k], mulmod(f, prow[k], p), p);
            }
        }
        r += 1;
    }
    r
}

/// Kernel basis modulo `p` in the same normal form as [`kernel`].
pub fn kernel_mod(mut m: Vec<Vec<u64>>, ncols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let pivots = rref_mod(&mut m, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    (pivots, basis)
}
