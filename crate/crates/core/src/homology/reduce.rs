//! Free-pair reduction of an augmented chain complex.
//!
//! Two kinds of pair are removed: a cell with exactly one live boundary
//! face together with that face (coreduction), and a cell with exactly one
//! live coface together with that coface (collapse). Both have incidence
//! ±1 and leave the boundary of the surviving cells equal to the
//! restriction of the original boundary, so homology over any ring is
//! unchanged and the survivors can be read straight off the lattice.

use super::lattice::Lattice;

/// Sparse integer columns with a row count.
#[derive(Clone, Debug, Default)]
pub(crate) struct SparseCols {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

pub(crate) struct Reduced {
    /// Surviving cell count per arity.
    pub counts: Vec<usize>,
    /// `matrices[a]` maps surviving arity-`a` cells to surviving
    /// arity-`a-1` cells; `matrices[0]` is empty.
    pub matrices: Vec<SparseCols>,
}

pub(crate) fn reduce<L: Lattice>(lat: &L) -> Reduced {
    let arities = lat.arities();
    let mut alive: Vec<Vec<bool>> = (0..arities).map(|a| vec![true; lat.len(a)]).collect();
    let mut nb: Vec<Vec<u32>> = (0..arities).map(|a| vec![a as u32; lat.len(a)]).collect();
    let mut nc: Vec<Vec<u32>> = (0..arities).map(|a| vec![0; lat.len(a)]).collect();
    let mut buf = Vec::new();
    for a in 1..arities {
        for i in 0..lat.len(a) {
            lat.boundary(a, i, &mut buf);
            for &(b, _) in &buf {
                nc[a - 1][b as usize] += 1;
            }
        }
    }

    let mut stack: Vec<(u8, u32)> = Vec::new();
    if arities > 1 {
        stack.push((1, 0));
    }
    let mut bbuf = Vec::new();
    let mut cbuf = Vec::new();
    loop {
        while let Some((a, i)) = stack.pop() {
            let (a, i) = (a as usize, i as usize);
            if !alive[a][i] {
                continue;
            }
            let pair = if nb[a][i] == 1 {
                lat.boundary(a, i, &mut bbuf);
                let &(s, _) = bbuf.iter().find(|(s, _)| alive[a - 1][*s as usize]).expect("live face");
                Some(((a - 1, s as usize), (a, i)))
            } else if nc[a][i] == 1 {
                lat.cofaces(a, i, &mut cbuf);
                let &(t, _) = cbuf.iter().find(|(t, _)| alive[a + 1][*t as usize]).expect("live coface");
                Some(((a, i), (a + 1, t as usize)))
            } else {
                None
            };
            let Some((lo, hi)) = pair else { continue };
            for (ca, ci) in [lo, hi] {
                alive[ca][ci] = false;
                if ca > 0 {
                    lat.boundary(ca, ci, &mut bbuf);
                    for &(b, _) in &bbuf {
                        let b = b as usize;
                        if alive[ca - 1][b] {
                            nc[ca - 1][b] -= 1;
                            if nc[ca - 1][b] == 1 {
                                stack.push(((ca - 1) as u8, b as u32));
                            }
                        }
                    }
                }
                if ca + 1 < arities {
                    lat.cofaces(ca, ci, &mut cbuf);
                    for &(t, _) in &cbuf {
                        let t = t as usize;
                        if alive[ca + 1][t] {
                            nb[ca + 1][t] -= 1;
                            if nb[ca + 1][t] == 1 {
                                stack.push(((ca + 1) as u8, t as u32));
                            }
                        }
                    }
                }
            }
        }
        // sweep for pairs the cascade did not reach
        for a in 0..arities {
            for i in 0..lat.len(a) {
                if alive[a][i] && (nb[a][i] == 1 || nc[a][i] == 1) {
                    stack.push((a as u8, i as u32));
                }
            }
        }
        if stack.is_empty() {
            break;
        }
    }

    let positions: Vec<Vec<u32>> = alive
        .iter()
        .map(|layer| {
            let mut next = 0u32;
            layer
                .iter()
                .map(|&live| {
                    let p = if live { next } else { u32::MAX };
                    next += live as u32;
                    p
                })
                .collect()
        })
        .collect();
    let counts: Vec<usize> = alive.iter().map(|l| l.iter().filter(|&&x| x).count()).collect();
    let mut matrices = vec![SparseCols::default()];
    for a in 1..arities {
        let mut cols = Vec::with_capacity(counts[a]);
        for i in (0..lat.len(a)).filter(|&i| alive[a][i]) {
            lat.boundary(a, i, &mut bbuf);
            let mut col: Vec<(u32, i64)> = bbuf
                .iter()
                .filter(|(b, _)| alive[a - 1][*b as usize])
                .map(|&(b, s)| (positions[a - 1][b as usize], s as i64))
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            cols.push(col);
        }
        matrices.push(SparseCols { rows: counts[a - 1], cols });
    }
    Reduced { counts, matrices }
}
