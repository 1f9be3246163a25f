//! Sparse unit-pivot elimination followed by a dense Smith normal form of
//! whatever is left.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::{Arith, BigZ, CheckedZ};
use super::reduce::SparseCols;

pub(crate) struct Elimination<E> {
    /// Number of unit pivots eliminated (each an invariant factor 1).
    pub unit_pivots: usize,
    /// Nonzero columns left, none containing a unit.
    pub remainder: Vec<Vec<(u32, E)>>,
}

/// Gaussian elimination on unit pivots with a Markowitz-style order:
/// shortest column first, and within it the unit whose row is sparsest.
/// Each step replaces the matrix by a Schur complement, which preserves
/// the remaining invariant factors. Returns `None` on arithmetic overflow.
pub(crate) fn eliminate<A: Arith>(ar: &A, m: &SparseCols) -> Option<Elimination<A::E>> {
    let mut cols: Vec<Vec<(u32, A::E)>> = m
        .cols
        .iter()
        .map(|c| {
            c.iter()
                .map(|&(r, x)| (r, ar.from_i64(x)))
                .filter(|(_, x)| !ar.is_zero(x))
                .collect()
        })
        .collect();
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); m.rows];
    for (j, c) in cols.iter().enumerate() {
        for &(r, _) in c {
            row_cols[r as usize].push(j as u32);
        }
    }
    let mut dead = vec![false; cols.len()];
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> =
        cols.iter().enumerate().filter(|(_, c)| !c.is_empty()).map(|(j, c)| Reverse((c.len(), j as u32))).collect();
    let mut unit_pivots = 0;
    let mut merged: Vec<(u32, A::E)> = Vec::new();
    while let Some(Reverse((len, j))) = heap.pop() {
        let j = j as usize;
        if dead[j] || cols[j].len() != len || len == 0 {
            continue;
        }
        let pivot = cols[j]
            .iter()
            .enumerate()
            .filter_map(|(pos, (r, x))| ar.inverse(x).map(|inv| (row_cols[*r as usize].len(), pos, inv)))
            .min_by_key(|&(weight, pos, _)| (weight, pos));
        let Some((_, pos, inv)) = pivot else { continue };
        let pivot_row = cols[j][pos].0;
        dead[j] = true;
        unit_pivots += 1;
        let pcol = std::mem::take(&mut cols[j]);
        let users = std::mem::take(&mut row_cols[pivot_row as usize]);
        for &k in &users {
            let k = k as usize;
            if dead[k] {
                continue;
            }
            let Ok(at) = cols[k].binary_search_by_key(&pivot_row, |e| e.0) else { continue };
            let factor = ar.mul(&cols[k][at].1, &inv)?;
            // cols[k] -= factor * pcol, merging sorted rows
            merged.clear();
            let (mut a, mut b) = (0, 0);
            let ck = &cols[k];
            while a < ck.len() || b < pcol.len() {
                let ra = ck.get(a).map_or(u32::MAX, |e| e.0);
                let rb = pcol.get(b).map_or(u32::MAX, |e| e.0);
                if ra < rb {
                    merged.push(ck[a].clone());
                    a += 1;
                } else if rb < ra {
                    let zero = ar.from_i64(0);
                    let x = ar.sub_mul(&zero, &factor, &pcol[b].1)?;
                    if !ar.is_zero(&x) {
                        row_cols[rb as usize].push(k as u32);
                        merged.push((rb, x));
                    }
                    b += 1;
                } else {
                    let x = ar.sub_mul(&ck[a].1, &factor, &pcol[b].1)?;
                    if !ar.is_zero(&x) {
                        merged.push((ra, x));
                    }
                    a += 1;
                    b += 1;
                }
            }
            std::mem::swap(&mut cols[k], &mut merged);
            heap.push(Reverse((cols[k].len(), k as u32)));
        }
        for &(r, _) in &pcol {
            if r != pivot_row {
                row_cols[r as usize].retain(|&c| c as usize != j);
            }
        }
    }
    let remainder = cols.into_iter().enumerate().filter(|(j, c)| !dead[*j] && !c.is_empty()).map(|(_, c)| c).collect();
    Some(Elimination { unit_pivots, remainder })
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
pub(crate) fn invariant_factors(m: &SparseCols) -> Vec<BigInt> {
    let (units, dense) = match eliminate(&CheckedZ, m) {
        Some(e) => (e.unit_pivots, to_dense(&CheckedZ, &e.remainder)),
        None => {
            let e = eliminate(&BigZ, m).expect("unbounded arithmetic cannot overflow");
            (e.unit_pivots, to_dense(&BigZ, &e.remainder))
        }
    };
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_invariants(dense));
    factors
}

/// Rank over the field (or ring) of `ar`, by elimination alone.
pub(crate) fn field_rank<A: Arith>(ar: &A, m: &SparseCols) -> usize {
    let e = eliminate(ar, m).expect("field arithmetic cannot overflow");
    debug_assert!(e.remainder.is_empty());
    e.unit_pivots
}

fn to_dense<A: Arith>(ar: &A, cols: &[Vec<(u32, A::E)>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<u32> = cols.iter().flatten().map(|e| e.0).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut dense = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for (r, x) in c {
            let i = rows.binary_search(r).expect("row present");
            dense[i][j] = ar.lift(x);
        }
    }
    dense
}

/// Smith normal form of a dense integer matrix: the nonzero diagonal
/// entries, positive and each dividing the next.
pub(crate) fn dense_invariants(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // bring the smallest nonzero entry of the trailing block to (t, t)
        let Some((pi, pj)) = smallest_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..rows {
                        let sub = &q * &a[i][t];
                        a[i][j] -= sub;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
            // a smaller remainder appeared in row or column t; move it to the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                if !a[i][t].is_zero() && best.is_none_or(|(bi, bj)| a[i][t].abs() < a[bi][bj].abs()) {
                    best = Some((i, t));
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && best.is_none_or(|(bi, bj)| a[t][j].abs() < a[bi][bj].abs()) {
                    best = Some((t, j));
                }
            }
            let (bi, bj) = best.expect("pivot row is nonzero");
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
    }
    normalise_diagonal(diag)
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Turns any diagonal into the divisibility chain with the same Smith form.
fn normalise_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::arith::Fp;

    fn sparse(dense: &[Vec<i64>]) -> SparseCols {
        let rows = dense.len();
        let ncols = dense.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| (0..rows).filter(|&i| dense[i][j] != 0).map(|i| (i as u32, dense[i][j])).collect())
            .collect();
        SparseCols { rows, cols }
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_invariants() {
        assert_eq!(invariant_factors(&sparse(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])), ints(&[1, 1, 1]));
        assert_eq!(invariant_factors(&sparse(&[vec![2, 0], vec![0, 3]])), ints(&[1, 6]));
        assert_eq!(invariant_factors(&sparse(&[vec![0, 0], vec![0, 0]])), ints(&[]));
        assert_eq!(invariant_factors(&sparse(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])), ints(&[2, 6, 12]));
    }

    #[test]
    fn overflow_escalates() {
        // entries near 2^62 overflow i64 during elimination
        let big = 1i64 << 62;
        let m = sparse(&[vec![1, big, 0], vec![big, 3, 0], vec![0, 0, 4]]);
        assert!(eliminate(&CheckedZ, &m).is_none());
        let f = invariant_factors(&m);
        assert_eq!(f.len(), 3);
        let det = BigInt::from(3) - BigInt::from(big) * BigInt::from(big);
        assert_eq!(f.iter().product::<BigInt>(), det.abs() * 4);
    }

    #[test]
    fn rank_mod_p() {
        let m = sparse(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(field_rank(&Fp { p: 2 }, &m), 1);
        assert_eq!(field_rank(&Fp { p: 3 }, &m), 1);
        assert_eq!(field_rank(&Fp { p: 5 }, &m), 2);
    }
}
