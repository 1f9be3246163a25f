//! Face lattices with boundary and coboundary queries, grouped by arity
//! (arity 0 holds the empty face). Signs follow the sorted-vertex
//! orientation: dropping the `j`-th vertex contributes `(-1)^j`.

use rustc_hash::FxHashMap;

use crate::cliques::for_each_clique;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) trait Lattice {
    /// Number of arity layers.
    fn arities(&self) -> usize;
    fn len(&self, arity: usize) -> usize;
    /// Boundary of cell `i` of layer `a` as `(index in layer a-1, sign)`.
    fn boundary(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>);
    /// Cofaces of cell `i` of layer `a` as `(index in layer a+1, sign of
    /// the cell in the coface's boundary)`.
    fn cofaces(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>);

    fn total(&self) -> usize {
        (0..self.arities()).map(|a| self.len(a)).sum()
    }
}

fn sign(j: u32) -> i8 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Clique complex of a graph on at most 64 vertices, faces as bitmasks.
pub(crate) struct MaskLattice {
    adj: Vec<u64>,
    all: u64,
    layers: Vec<Vec<u64>>,
    index: Vec<FxHashMap<u64, u32>>,
}

impl MaskLattice {
    pub(crate) fn clique_complex(g: &Graph, face_limit: usize) -> Result<MaskLattice> {
        let n = g.vertex_count();
        assert!(n <= 64, "mask lattice needs at most 64 vertices");
        let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut layers: Vec<Vec<u64>> = vec![vec![0]];
        for_each_clique(g, usize::MAX, face_limit.saturating_sub(1), |c| {
            if layers.len() <= c.len() {
                layers.push(Vec::new());
            }
            layers[c.len()].push(c.iter().fold(0u64, |m, &v| m | 1 << v));
        })
        .map_err(|e| match e {
            Error::FaceLimit { reached, .. } => Error::FaceLimit { reached: reached + 1, limit: face_limit },
            other => other,
        })?;
        let index = layers
            .iter()
            .map(|layer| {
                let mut map = FxHashMap::with_capacity_and_hasher(layer.len(), Default::default());
                for (i, &m) in layer.iter().enumerate() {
                    map.insert(m, i as u32);
                }
                map
            })
            .collect();
        Ok(MaskLattice { adj, all, layers, index })
    }
}

impl Lattice for MaskLattice {
    fn arities(&self) -> usize {
        self.layers.len()
    }

    fn len(&self, arity: usize) -> usize {
        self.layers.get(arity).map_or(0, |l| l.len())
    }

    fn boundary(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>) {
        out.clear();
        if a == 0 {
            return;
        }
        let m = self.layers[a][i];
        let mut rest = m;
        let mut j = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            out.push((self.index[a - 1][&(m ^ bit)], sign(j)));
            j += 1;
        }
    }

    fn cofaces(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>) {
        out.clear();
        if a + 1 >= self.layers.len() {
            return;
        }
        let m = self.layers[a][i];
        let mut common = self.all & !m;
        let mut rest = m;
        while rest != 0 {
            common &= self.adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        while common != 0 {
            let bit = common & common.wrapping_neg();
            common ^= bit;
            let j = (m & (bit - 1)).count_ones();
            out.push((self.index[a + 1][&(m | bit)], sign(j)));
        }
    }
}

/// Any simplicial complex, with boundaries and cofaces in CSR form.
pub(crate) struct IndexedLattice {
    lens: Vec<usize>,
    /// `bnd[a]`: arity `a` cells have exactly `a` boundary entries each.
    bnd: Vec<Vec<u32>>,
    cof_start: Vec<Vec<u32>>,
    cof: Vec<Vec<(u32, i8)>>,
}

impl IndexedLattice {
    pub(crate) fn new(k: &SimplicialComplex) -> IndexedLattice {
        let arities = k.max_arity() + 1;
        let lens: Vec<usize> = (0..arities).map(|a| k.count(a)).collect();
        let mut bnd: Vec<Vec<u32>> = vec![Vec::new(); arities];
        let mut sub = Vec::new();
        for a in 1..arities {
            let mut col = Vec::with_capacity(lens[a] * a);
            for f in k.faces_of_arity(a) {
                for skip in 0..a {
                    sub.clear();
                    sub.extend(f.iter().enumerate().filter_map(|(j, &v)| (j != skip).then_some(v)));
                    col.push(k.index_of(&sub).expect("closed under subsets") as u32);
                }
            }
            bnd[a] = col;
        }
        let mut cof_start: Vec<Vec<u32>> = Vec::with_capacity(arities);
        let mut cof: Vec<Vec<(u32, i8)>> = Vec::with_capacity(arities);
        for a in 0..arities {
            let mut counts = vec![0u32; lens[a] + 1];
            if a + 1 < arities {
                for &b in &bnd[a + 1] {
                    counts[b as usize + 1] += 1;
                }
            }
            for i in 0..lens[a] {
                counts[i + 1] += counts[i];
            }
            let mut fill = counts.clone();
            let mut entries = vec![(0u32, 0i8); counts[lens[a]] as usize];
            if a + 1 < arities {
                let up = a + 1;
                for (pos, &b) in bnd[up].iter().enumerate() {
                    let (cell, j) = (pos / up, pos % up);
                    entries[fill[b as usize] as usize] = (cell as u32, sign(j as u32));
                    fill[b as usize] += 1;
                }
            }
            cof_start.push(counts);
            cof.push(entries);
        }
        IndexedLattice { lens, bnd, cof_start, cof }
    }
}

impl Lattice for IndexedLattice {
    fn arities(&self) -> usize {
        self.lens.len()
    }

    fn len(&self, arity: usize) -> usize {
        self.lens.get(arity).copied().unwrap_or(0)
    }

    fn boundary(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>) {
        out.clear();
        if a == 0 {
            return;
        }
        out.extend(self.bnd[a][i * a..(i + 1) * a].iter().enumerate().map(|(j, &b)| (b, sign(j as u32))));
    }

    fn cofaces(&self, a: usize, i: usize, out: &mut Vec<(u32, i8)>) {
        out.clear();
        let (s, e) = (self.cof_start[a][i] as usize, self.cof_start[a][i + 1] as usize);
        out.extend_from_slice(&self.cof[a][s..e]);
    }
}
