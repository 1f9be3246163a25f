//! Finite abstract simplicial complexes.
//!
//! Faces are sorted `u32` vertex lists. They are stored grouped by arity
//! (number of vertices, i.e. dimension + 1) in flat arrays, each group in
//! lexicographic order; this "dimension, then lexicographic" order is the
//! canonical face order every boundary matrix derives from.
//!
//! The void complex has no faces at all. Every other complex contains the
//! empty face; the complex consisting of the empty face alone is called the
//! empty complex.

use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::cliques;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::limits::Limits;

#[derive(Clone, PartialEq, Eq, Hash)]
struct FaceLayer {
    arity: usize,
    len: usize,
    data: Vec<u32>,
}

impl FaceLayer {
    fn new(arity: usize) -> FaceLayer {
        FaceLayer { arity, len: 0, data: Vec::new() }
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    fn push(&mut self, face: &[u32]) {
        debug_assert_eq!(face.len(), self.arity);
        self.data.extend_from_slice(face);
        self.len += 1;
    }

    fn position(&self, face: &[u32]) -> Option<usize> {
        if face.len() != self.arity {
            return None;
        }
        if self.arity == 0 {
            return (self.len > 0).then_some(0);
        }
        let (mut lo, mut hi) = (0, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn from_rows(arity: usize, mut rows: Vec<Vec<u32>>) -> FaceLayer {
        rows.sort_unstable();
        rows.dedup();
        let mut layer = FaceLayer::new(arity);
        layer.data.reserve(rows.len() * arity);
        for r in &rows {
            layer.push(r);
        }
        if arity == 0 {
            layer.len = rows.len().min(1);
        }
        layer
    }
}

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `layers[a]` holds the faces with `a` vertices.
    layers: Vec<FaceLayer>,
    /// Maximal faces, when known from the construction.
    facets: Option<Vec<Vec<u32>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.layers == other.layers
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, f={:?}", self.vertex_count, self.f_vector())?;
        if self.num_faces() <= 64 {
            write!(f, ", facets={:?}", self.facets())?;
        }
        write!(f, ")")
    }
}

impl SimplicialComplex {
    /// The complex with no faces, not even the empty one.
    pub fn void(vertex_count: usize) -> SimplicialComplex {
        SimplicialComplex { vertex_count, layers: Vec::new(), facets: Some(Vec::new()) }
    }

    /// The complex whose only face is the empty face.
    pub fn empty(vertex_count: usize) -> SimplicialComplex {
        let mut layer = FaceLayer::new(0);
        layer.len = 1;
        SimplicialComplex { vertex_count, layers: vec![layer], facets: Some(vec![Vec::new()]) }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> SimplicialComplex {
        let all: Vec<u32> = (0..n as u32).collect();
        SimplicialComplex::from_facets(n, &[all]).expect("valid")
    }

    /// All proper faces of the simplex on `n` vertices (a sphere of
    /// dimension `n - 2`).
    pub fn boundary_of_simplex(n: usize) -> SimplicialComplex {
        let facets: Vec<Vec<u32>> = (0..n as u32)
            .map(|skip| (0..n as u32).filter(|&v| v != skip).collect())
            .collect();
        SimplicialComplex::from_facets(n, &facets).expect("valid")
    }

    /// The downward closure of `faces`.
    pub fn from_faces<F: AsRef<[u32]>>(vertex_count: usize, faces: &[F]) -> Result<SimplicialComplex> {
        let mut by_arity: Vec<Vec<Vec<u32>>> = Vec::new();
        for f in faces {
            let mut face = f.as_ref().to_vec();
            face.sort_unstable();
            if face.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("repeated vertex in face {face:?}")));
            }
            if let Some(&bad) = face.iter().find(|&&v| v as usize >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: bad as u64, vertex_count });
            }
            if by_arity.len() <= face.len() {
                by_arity.resize(face.len() + 1, Vec::new());
            }
            by_arity[face.len()].push(face);
        }
        if by_arity.is_empty() {
            return Ok(SimplicialComplex::void(vertex_count));
        }
        // close downwards one codimension at a time
        let mut layers: Vec<FaceLayer> = Vec::with_capacity(by_arity.len());
        for arity in (0..by_arity.len()).rev() {
            let rows = std::mem::take(&mut by_arity[arity]);
            let layer = FaceLayer::from_rows(arity, rows);
            if arity > 0 {
                for i in 0..layer.len {
                    let face = layer.get(i);
                    for skip in 0..arity {
                        let sub: Vec<u32> = face
                            .iter()
                            .enumerate()
                            .filter_map(|(j, &v)| (j != skip).then_some(v))
                            .collect();
                        by_arity[arity - 1].push(sub);
                    }
                }
            }
            layers.push(layer);
        }
        layers.reverse();
        let mut complex = SimplicialComplex { vertex_count, layers, facets: None };
        complex.trim();
        Ok(complex)
    }

    /// The complex generated by `facets`, which are also cached as its
    /// facet list once redundant entries are dropped.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<u32>]) -> Result<SimplicialComplex> {
        let mut complex = SimplicialComplex::from_faces(vertex_count, facets)?;
        complex.facets = None;
        let maximal = complex.compute_facets();
        complex.facets = Some(maximal);
        Ok(complex)
    }

    /// Builds a complex from an explicit face set, erroring unless the set
    /// is closed under taking subsets.
    pub fn from_closed_faces<F: AsRef<[u32]>>(vertex_count: usize, faces: &[F]) -> Result<SimplicialComplex> {
        let closure = SimplicialComplex::from_faces(vertex_count, faces)?;
        let mut given: Vec<Vec<u32>> = faces
            .iter()
            .map(|f| {
                let mut v = f.as_ref().to_vec();
                v.sort_unstable();
                v
            })
            .collect();
        given.sort_unstable();
        given.dedup();
        if given.len() != closure.num_faces() {
            let missing = closure
                .faces()
                .find(|f| given.binary_search_by(|g| g.as_slice().cmp(f)).is_err())
                .map(|f| f.to_vec())
                .unwrap_or_default();
            return Err(Error::Precondition(format!(
                "face set is not closed under subsets; missing {missing:?}"
            )));
        }
        Ok(closure)
    }

    /// Assembles layers that are already closed, sorted and deduplicated.
    fn from_layers(vertex_count: usize, layers: Vec<FaceLayer>) -> SimplicialComplex {
        let mut c = SimplicialComplex { vertex_count, layers, facets: None };
        c.trim();
        c
    }

    /// Rows grouped by arity, closed under subsets by the caller.
    fn from_closed_rows(vertex_count: usize, rows: Vec<Vec<u32>>) -> SimplicialComplex {
        let mut by_arity: Vec<Vec<Vec<u32>>> = Vec::new();
        for r in rows {
            if by_arity.len() <= r.len() {
                by_arity.resize(r.len() + 1, Vec::new());
            }
            by_arity[r.len()].push(r);
        }
        let layers = by_arity
            .into_iter()
            .enumerate()
            .map(|(a, rows)| FaceLayer::from_rows(a, rows))
            .collect();
        let c = SimplicialComplex::from_layers(vertex_count, layers);
        debug_assert!(c.is_closed());
        c
    }

    fn trim(&mut self) {
        while self.layers.last().is_some_and(|l| l.len == 0) {
            self.layers.pop();
        }
    }

    fn is_closed(&self) -> bool {
        self.faces().all(|f| {
            (0..f.len()).all(|skip| {
                let sub: Vec<u32> = f.iter().enumerate().filter_map(|(j, &v)| (j != skip).then_some(v)).collect();
                self.contains(&sub)
            })
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.layers.is_empty()
    }

    /// Dimension; `None` for the void complex and `-1` for the empty one.
    pub fn dim(&self) -> Option<isize> {
        (!self.layers.is_empty()).then(|| self.layers.len() as isize - 2)
    }

    /// Largest number of vertices in a face.
    pub fn max_arity(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    /// Total number of faces, the empty face included.
    pub fn num_faces(&self) -> usize {
        self.layers.iter().map(|l| l.len).sum()
    }

    /// Number of faces with `arity` vertices.
    pub fn count(&self, arity: usize) -> usize {
        self.layers.get(arity).map_or(0, |l| l.len)
    }

    /// Face counts in dimensions `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.layers.iter().skip(1).map(|l| l.len).collect()
    }

    /// The `i`-th face with `arity` vertices in canonical order.
    pub fn face(&self, arity: usize, i: usize) -> &[u32] {
        self.layers[arity].get(i)
    }

    pub fn faces_of_arity(&self, arity: usize) -> impl Iterator<Item = &[u32]> + '_ {
        let layer = self.layers.get(arity);
        (0..layer.map_or(0, |l| l.len)).map(move |i| layer.unwrap().get(i))
    }

    /// All faces in canonical order, starting with the empty face.
    pub fn faces(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.layers.len()).flat_map(move |a| self.faces_of_arity(a))
    }

    /// Position of a sorted face within its arity group.
    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        self.layers.get(face.len())?.position(face)
    }

    /// Whether the (not necessarily sorted) vertex set is a face.
    pub fn contains(&self, face: &[u32]) -> bool {
        if face.windows(2).all(|w| w[0] < w[1]) {
            self.index_of(face).is_some()
        } else {
            let mut f = face.to_vec();
            f.sort_unstable();
            f.windows(2).all(|w| w[0] < w[1]) && self.index_of(&f).is_some()
        }
    }

    /// Vertices that appear as singletons.
    pub fn vertices(&self) -> Vec<u32> {
        self.faces_of_arity(1).map(|f| f[0]).collect()
    }

    /// Inclusion-maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        match &self.facets {
            Some(f) => f.clone(),
            None => self.compute_facets(),
        }
    }

    fn compute_facets(&self) -> Vec<Vec<u32>> {
        let mut maximal: Vec<Vec<bool>> = self.layers.iter().map(|l| vec![true; l.len]).collect();
        for a in 1..self.layers.len() {
            for i in 0..self.layers[a].len {
                let face = self.layers[a].get(i);
                for skip in 0..a {
                    let sub: Vec<u32> =
                        face.iter().enumerate().filter_map(|(j, &v)| (j != skip).then_some(v)).collect();
                    if let Some(p) = self.layers[a - 1].position(&sub) {
                        maximal[a - 1][p] = false;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (a, flags) in maximal.iter().enumerate() {
            for (i, &m) in flags.iter().enumerate() {
                if m {
                    out.push(self.layers[a].get(i).to_vec());
                }
            }
        }
        out
    }

    /// `sum_{d >= -1} (-1)^d f_d`, so the empty face counts `-1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.layers
            .iter()
            .enumerate()
            .map(|(a, l)| if a % 2 == 1 { l.len as i64 } else { -(l.len as i64) })
            .sum()
    }

    /// Whether every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.first_face_missing_from(other).is_none()
    }

    pub(crate) fn first_face_missing_from(&self, other: &SimplicialComplex) -> Option<Vec<u32>> {
        self.faces().find(|f| other.index_of(f).is_none()).map(|f| f.to_vec())
    }

    /// Faces of dimension at most `n` (`n >= -1`).
    pub fn skeleton(&self, n: isize) -> SimplicialComplex {
        let keep = (n + 2).max(0) as usize;
        let layers = self.layers.iter().take(keep).cloned().collect();
        SimplicialComplex::from_layers(self.vertex_count, layers)
    }

    /// Graph on the complex's vertex range with its 1-faces as edges.
    pub fn one_skeleton_graph(&self) -> Graph {
        let edges = self.faces_of_arity(2).map(|f| (f[0], f[1])).collect();
        Graph::from_canonical(self.vertex_count, edges)
    }

    /// Faces in both complexes.
    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.check_same_vertex_count(other)?;
        let rows = self.faces().filter(|f| other.index_of(f).is_some()).map(|f| f.to_vec()).collect();
        Ok(SimplicialComplex::from_closed_rows(self.vertex_count, rows))
    }

    /// Faces in either complex.
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.check_same_vertex_count(other)?;
        let rows = self.faces().chain(other.faces()).map(|f| f.to_vec()).collect();
        Ok(SimplicialComplex::from_closed_rows(self.vertex_count, rows))
    }

    fn check_same_vertex_count(&self, other: &SimplicialComplex) -> Result<()> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::VertexCountMismatch(self.vertex_count, other.vertex_count));
        }
        Ok(())
    }

    /// Disjoint union, with the vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertex_count as u32;
        let rows = self
            .faces()
            .map(|f| f.to_vec())
            .chain(other.faces().map(|f| f.iter().map(|v| v + shift).collect()))
            .collect();
        SimplicialComplex::from_closed_rows(self.vertex_count + other.vertex_count, rows)
    }

    /// The complex with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[u32], vertex_count: usize) -> Result<SimplicialComplex> {
        let rows = self
            .faces()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| perm[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect::<Vec<_>>();
        if rows.iter().flatten().any(|&v| v as usize >= vertex_count) {
            return Err(Error::InvalidParams("relabelling leaves the vertex range".into()));
        }
        let c = SimplicialComplex::from_closed_rows(vertex_count, rows);
        if c.num_faces() != self.num_faces() {
            return Err(Error::InvalidParams("relabelling is not injective on faces".into()));
        }
        Ok(c)
    }

    /// Writes one facet per line; the empty facet is written as `-`.
    pub fn write_facets<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# vertex_count {}", self.vertex_count)?;
        for facet in self.facets() {
            if facet.is_empty() {
                writeln!(out, "-")?;
            } else {
                let line: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Ok(())
    }

    /// Reads the facet-list format. Without a `# vertex_count` comment the
    /// vertex count is one more than the largest vertex index.
    pub fn read_facets<R: BufRead>(input: R) -> Result<SimplicialComplex> {
        let mut declared = None;
        let mut facets = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if let Some(rest) = t.strip_prefix('#') {
                if let Some(n) = rest.trim().strip_prefix("vertex_count") {
                    declared = Some(n.trim().parse::<usize>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: "bad vertex_count".into(),
                    })?);
                }
                continue;
            }
            if t.is_empty() {
                continue;
            }
            if t == "-" {
                facets.push(Vec::new());
                continue;
            }
            let facet = t
                .split_whitespace()
                .map(|x| {
                    x.parse::<u32>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("expected a vertex index, found {x:?}"),
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            facets.push(facet);
        }
        let implied = facets.iter().flatten().map(|&v| v as usize + 1).max().unwrap_or(0);
        SimplicialComplex::from_facets(declared.unwrap_or(implied), &facets)
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary {
            schema_version: crate::SCHEMA_VERSION,
            vertex_count: self.vertex_count,
            dimension: self.dim(),
            f_vector: self.f_vector(),
            facets: self.facets(),
        }
    }
}

/// JSON export of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSummary {
    pub schema_version: u32,
    pub vertex_count: usize,
    pub dimension: Option<isize>,
    pub f_vector: Vec<usize>,
    pub facets: Vec<Vec<u32>>,
}

/// A complex whose vertices stand for faces of another complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLabelledComplex {
    pub complex: SimplicialComplex,
    /// `labels[v]` is the face represented by vertex `v`.
    pub labels: Vec<Vec<u32>>,
}

/// The clique complex, optionally truncated to faces of dimension at most
/// `dim_cap`. Facets come from maximal clique enumeration (before any
/// truncation) or from the truncated face set.
pub fn clique_complex(g: &Graph, dim_cap: Option<usize>, limits: &Limits) -> Result<SimplicialComplex> {
    let max_size = dim_cap.map_or(usize::MAX, |d| d + 1);
    let mut layers: Vec<FaceLayer> = vec![FaceLayer::new(0)];
    layers[0].len = 1;
    // the empty face counts against the ceiling too
    let limit = limits.face_limit.saturating_sub(1);
    cliques::for_each_clique(g, max_size, limit, |c| {
        if layers.len() <= c.len() {
            layers.push(FaceLayer::new(c.len()));
        }
        layers[c.len()].push(c);
    })
    .map_err(|e| match e {
        Error::FaceLimit { reached, .. } => Error::FaceLimit { reached: reached + 1, limit: limits.face_limit },
        other => other,
    })?;
    let mut complex = SimplicialComplex::from_layers(g.vertex_count(), layers);
    if dim_cap.is_none() {
        let mut facets = cliques::maximal_cliques(g);
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        complex.facets = Some(facets);
    }
    Ok(complex)
}

/// The complex of independent sets, i.e. the clique complex of the
/// complement.
pub fn independence_complex(g: &Graph, limits: &Limits) -> Result<SimplicialComplex> {
    clique_complex(&graph::complement(g), None, limits)
}

/// Faces of dimension at most `n`.
pub fn skeleton(k: &SimplicialComplex, n: isize) -> SimplicialComplex {
    k.skeleton(n)
}

/// All unions `σ ∪ τ` with the vertices of `l` shifted past those of `k`.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex, limits: &Limits) -> Result<SimplicialComplex> {
    let n = k.vertex_count + l.vertex_count;
    let total = k.num_faces().saturating_mul(l.num_faces());
    if total > limits.face_limit {
        return Err(Error::FaceLimit { reached: total, limit: limits.face_limit });
    }
    let shift = k.vertex_count as u32;
    let mut rows = Vec::with_capacity(total);
    for s in k.faces() {
        for t in l.faces() {
            let mut f = s.to_vec();
            f.extend(t.iter().map(|v| v + shift));
            rows.push(f);
        }
    }
    Ok(SimplicialComplex::from_closed_rows(n, rows))
}

/// Join with a single apex vertex (the last index).
pub fn cone(k: &SimplicialComplex, limits: &Limits) -> Result<SimplicialComplex> {
    join(k, &SimplicialComplex::simplex(1), limits)
}

/// Unreduced suspension: join with two points (the last two indices).
pub fn suspension(k: &SimplicialComplex, limits: &Limits) -> Result<SimplicialComplex> {
    let s0 = SimplicialComplex::from_facets(2, &[vec![0], vec![1]])?;
    join(k, &s0, limits)
}

fn require_vertex(k: &SimplicialComplex, v: u32) -> Result<()> {
    if k.contains(&[v]) {
        Ok(())
    } else {
        Err(Error::NotAVertex(v))
    }
}

/// Faces `σ` with `σ ∪ {v}` a face.
pub fn star(k: &SimplicialComplex, v: u32) -> Result<SimplicialComplex> {
    require_vertex(k, v)?;
    let mut rows = Vec::new();
    for f in k.faces().filter(|f| f.contains(&v)) {
        rows.push(f.to_vec());
        rows.push(f.iter().copied().filter(|&w| w != v).collect());
    }
    Ok(SimplicialComplex::from_closed_rows(k.vertex_count, rows))
}

/// Faces of the star not containing `v`.
pub fn link(k: &SimplicialComplex, v: u32) -> Result<SimplicialComplex> {
    require_vertex(k, v)?;
    let rows = k
        .faces()
        .filter(|f| f.contains(&v))
        .map(|f| f.iter().copied().filter(|&w| w != v).collect())
        .collect();
    Ok(SimplicialComplex::from_closed_rows(k.vertex_count, rows))
}

/// Barycentric subdivision. Vertex `i` of the result represents the `i`-th
/// nonempty face of `k` in canonical order; faces are chains of faces.
pub fn barycentric_subdivision(k: &SimplicialComplex, limits: &Limits) -> Result<VertexLabelledComplex> {
    if k.count(1) == 0 {
        return Err(Error::Precondition("barycentric subdivision of a complex without vertices".into()));
    }
    let labels: Vec<Vec<u32>> = k.faces().skip(1).map(|f| f.to_vec()).collect();
    // global index of the first face of each arity, shifted past the empty face
    let mut offsets = vec![0usize; k.layers.len()];
    let mut acc = 0;
    for a in 1..k.layers.len() {
        offsets[a] = acc;
        acc += k.layers[a].len;
    }
    let global = |face: &[u32]| offsets[face.len()] + k.index_of(face).expect("subface present");

    let mut rows: Vec<Vec<u32>> = vec![Vec::new()];
    let mut chain: Vec<usize> = Vec::new();
    let mut chain_faces: Vec<Vec<u32>> = Vec::new();
    fn descend(
        chain: &mut Vec<usize>,
        chain_faces: &mut Vec<Vec<u32>>,
        rows: &mut Vec<Vec<u32>>,
        limit: usize,
        global: &dyn Fn(&[u32]) -> usize,
    ) -> Result<()> {
        let mut row: Vec<u32> = chain.iter().map(|&i| i as u32).collect();
        row.sort_unstable();
        rows.push(row);
        if rows.len() > limit {
            return Err(Error::FaceLimit { reached: rows.len(), limit });
        }
        let bottom = chain_faces.last().unwrap().clone();
        let a = bottom.len();
        if a <= 1 {
            return Ok(());
        }
        for mask in 1u64..(1u64 << a) - 1 {
            let sub: Vec<u32> = (0..a).filter(|j| mask >> j & 1 == 1).map(|j| bottom[j]).collect();
            chain.push(global(&sub));
            chain_faces.push(sub);
            descend(chain, chain_faces, rows, limit, global)?;
            chain.pop();
            chain_faces.pop();
        }
        Ok(())
    }
    for top in &labels {
        if top.len() > 63 {
            return Err(Error::FaceLimit { reached: usize::MAX, limit: limits.face_limit });
        }
        chain.push(global(top));
        chain_faces.push(top.clone());
        descend(&mut chain, &mut chain_faces, &mut rows, limits.face_limit, &global)?;
        chain.pop();
        chain_faces.pop();
    }
    let complex = SimplicialComplex::from_closed_rows(labels.len(), rows);
    Ok(VertexLabelledComplex { complex, labels })
}

/// Subcomplex of faces inside `w`, reindexed in increasing vertex order.
/// Returns it with `mapping[new] = old`.
pub fn induced_subcomplex(k: &SimplicialComplex, w: &[u32]) -> Result<(SimplicialComplex, Vec<u32>)> {
    let mut mapping = w.to_vec();
    mapping.sort_unstable();
    mapping.dedup();
    if let Some(&bad) = mapping.iter().find(|&&v| v as usize >= k.vertex_count) {
        return Err(Error::VertexOutOfRange { vertex: bad as u64, vertex_count: k.vertex_count });
    }
    let mut new_index = vec![u32::MAX; k.vertex_count];
    for (i, &v) in mapping.iter().enumerate() {
        new_index[v as usize] = i as u32;
    }
    let rows = k
        .faces()
        .filter(|f| f.iter().all(|&v| new_index[v as usize] != u32::MAX))
        .map(|f| f.iter().map(|&v| new_index[v as usize]).collect())
        .collect();
    Ok((SimplicialComplex::from_closed_rows(mapping.len(), rows), mapping))
}

pub fn one_skeleton_graph(k: &SimplicialComplex) -> Graph {
    k.one_skeleton_graph()
}

/// Exact face-set equality (vertex counts must agree as well).
pub fn complexes_equal(k: &SimplicialComplex, l: &SimplicialComplex) -> bool {
    k == l
}
