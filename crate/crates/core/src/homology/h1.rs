//! The map on first homology induced by a subcomplex inclusion, over a
//! field, by dense linear algebra.

use super::arith::Arith;
use crate::complex::SimplicialComplex;

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce<A: Arith>(ar: &A, m: &mut [Vec<A::E>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ar.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = ar.inverse(&m[r][c]).expect("field");
        for j in 0..cols {
            m[r][j] = ar.mul(&m[r][j], &inv).expect("field");
        }
        for i in 0..rows {
            if i != r && !ar.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..cols {
                    m[i][j] = ar.sub_mul(&m[i][j], &f, &m[r][j]).expect("field");
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rank<A: Arith>(ar: &A, mut m: Vec<Vec<A::E>>) -> usize {
    row_reduce(ar, &mut m).len()
}

/// Dense boundary matrix from arity `a` faces of `k` to arity `a - 1`
/// faces of `rows_of` (which must contain them).
fn boundary<A: Arith>(ar: &A, k: &SimplicialComplex, rows_of: &SimplicialComplex, a: usize) -> Vec<Vec<A::E>> {
    let mut m = vec![vec![ar.from_i64(0); k.count(a)]; rows_of.count(a - 1)];
    for (j, f) in k.faces_of_arity(a).enumerate() {
        for skip in 0..a {
            let sub: Vec<u32> = f.iter().enumerate().filter_map(|(i, &v)| (i != skip).then_some(v)).collect();
            let i = rows_of.index_of(&sub).expect("closed");
            m[i][j] = ar.from_i64(if skip % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Basis of the kernel of `m`, as column vectors.
fn kernel<A: Arith>(ar: &A, mut m: Vec<Vec<A::E>>, cols: usize) -> Vec<Vec<A::E>> {
    let pivots = row_reduce(ar, &mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ar.from_i64(0); cols];
        v[free] = ar.from_i64(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = ar.sub_mul(&ar.from_i64(0), &ar.from_i64(1), &m[r][free]).expect("field");
        }
        basis.push(v);
    }
    basis
}

/// Whether `H₁(K) → H₁(L)` is onto over the field: `Z₁(K) + B₁(L)` must
/// fill `Z₁(L)` inside the edge space of `L`.
pub(crate) fn surjective_over<A: Arith>(ar: &A, k: &SimplicialComplex, l: &SimplicialComplex) -> bool {
    let edges_l = l.count(2);
    if edges_l == 0 {
        return true;
    }
    let z1_l = edges_l - rank(ar, boundary(ar, l, l, 2));
    let b2_l = if l.count(3) > 0 { boundary(ar, l, l, 3) } else { vec![Vec::new(); edges_l] };
    let z1_k = if k.count(2) > 0 { kernel(ar, boundary(ar, k, k, 2), k.count(2)) } else { Vec::new() };
    // columns: boundaries of L's triangles, then K's cycles pushed into L's edges
    let mut m = b2_l;
    for z in &z1_k {
        let mut col = vec![ar.from_i64(0); edges_l];
        for (e, x) in k.faces_of_arity(2).zip(z) {
            col[l.index_of(e).expect("subcomplex")] = x.clone();
        }
        for (row, x) in m.iter_mut().zip(col) {
            row.push(x);
        }
    }
    rank(ar, m) == z1_l
}
