//! Generators for the graph families used throughout the crate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{barycentric_subdivision, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::limits::Limits;

/// Name of the generator behind [`random_graph`] and [`random_tree`].
pub const PRNG_ALGORITHM: &str = "ChaCha8";

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let n32 = n as u32;
    let edges = (0..n32).map(|i| (i, (i + 1) % n32)).collect::<Vec<_>>();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParams("path needs n >= 1".into()));
    }
    let edges = (1..n as u32).map(|i| (i - 1, i)).collect::<Vec<_>>();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let n32 = n as u32;
    let edges = (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))).collect();
    Graph::from_canonical(n, edges)
}

/// Parameters of a circular complete graph: `n` and `k` of opposite parity
/// with `1 <= k <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircularParams {
    n: usize,
    k: usize,
}

impl CircularParams {
    pub fn new(n: usize, k: usize) -> Result<CircularParams> {
        if n < 2 || k < 1 || k > n - 1 {
            return Err(Error::InvalidParams(format!("need 1 <= k <= n - 1, got n={n}, k={k}")));
        }
        if (n + k).is_multiple_of(2) {
            return Err(Error::InvalidParams(format!(
                "n and k must have opposite parity, got n={n}, k={k}"
            )));
        }
        Ok(CircularParams { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(n - k - 1) / 2`, the cycle power whose complement this graph is.
    pub fn r(&self) -> usize {
        (self.n - self.k - 1) / 2
    }
}

/// The circular complete graph: vertex `i` is adjacent to
/// `i + r + 1, ..., i + r + k (mod n)`.
pub fn circular_complete(n: usize, k: usize) -> Result<Graph> {
    let params = CircularParams::new(n, k)?;
    let r = params.r();
    let mut edges = Vec::with_capacity(n * k / 2);
    for i in 0..n {
        for j in 1..=k {
            let w = (i + r + j) % n;
            edges.push(((i.min(w)) as u32, (i.max(w)) as u32));
        }
    }
    Ok(Graph::from_canonical(n, edges))
}

/// A graph whose vertices carry signed integer labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    /// `labels[i]` is the label of vertex `i`.
    pub labels: Vec<i64>,
}

impl LabelledGraph {
    pub fn index_of(&self, label: i64) -> Option<u32> {
        self.labels.iter().position(|&l| l == label).map(|i| i as u32)
    }

    /// Indices of the given labels, erroring on unknown labels.
    pub fn indices_of(&self, labels: &[i64]) -> Result<Vec<u32>> {
        labels
            .iter()
            .map(|&l| {
                self.index_of(l)
                    .ok_or_else(|| Error::InvalidParams(format!("no vertex labelled {l}")))
            })
            .collect()
    }
}

/// The auxiliary graph on `{-r..-1} ∪ {1..r}`: the induced subgraph of the
/// circular complete graph on those residues (`-x` is `n - x`), plus the
/// edges `(-i, j)` for `i, j ∈ {1..k-1}` with `i + j <= k`.
///
/// Vertices are indexed in label order `-r, ..., -1, 1, ..., r`. Extra edges
/// whose endpoints fall outside the vertex set (possible only when
/// `r < k - 1`) are omitted.
pub fn s_graph(n: usize, k: usize) -> Result<LabelledGraph> {
    let params = CircularParams::new(n, k)?;
    let r = params.r() as i64;
    if r < 1 {
        return Err(Error::InvalidParams(format!("need r >= 1, got n={n}, k={k}")));
    }
    let labels: Vec<i64> = (-r..=-1).chain(1..=r).collect();
    let index = |label: i64| -> Option<u32> {
        if label < 0 && -label <= r {
            Some((label + r) as u32)
        } else if label > 0 && label <= r {
            Some((r + label - 1) as u32)
        } else {
            None
        }
    };
    let residue = |label: i64| label.rem_euclid(n as i64) as usize;
    let t = circular_complete(n, k)?;
    let mut edges = Vec::new();
    for (a, &la) in labels.iter().enumerate() {
        for (b, &lb) in labels.iter().enumerate().skip(a + 1) {
            if t.has_edge(residue(la) as u32, residue(lb) as u32) {
                edges.push((a as u32, b as u32));
            }
        }
    }
    let k = k as i64;
    for i in 1..k {
        for j in 1..k {
            if i + j <= k {
                if let (Some(a), Some(b)) = (index(-i), index(j)) {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    Ok(LabelledGraph { graph: Graph::from_canonical(labels.len(), edges), labels })
}

/// The 3-sun: a triangle `v1 v2 v3` (vertices 0, 1, 2) and `w1, w2, w3`
/// (vertices 3, 4, 5) with `wi` adjacent to the two `vj`, `j != i`.
pub fn three_sun() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for i in 0..3u32 {
        for j in 0..3u32 {
            if i != j {
                edges.push((j, 3 + i));
            }
        }
    }
    Graph::from_canonical(6, edges)
}

/// Edge subdivision: original vertices first, then one vertex per edge in
/// canonical edge order.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.vertex_count() as u32;
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let e = n + i as u32;
        edges.push((u, e));
        edges.push((v, e));
    }
    Graph::from_canonical(g.vertex_count() + g.edge_count(), edges)
}

/// Square of the edge subdivision.
pub fn total_graph(g: &Graph) -> Graph {
    graph::power(&subdivision(g), 2)
}

/// Line graph built from edge incidences; vertex `i` is the `i`-th edge.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidParams("line graph of an edgeless graph".into()));
    }
    let es = g.edges();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Ok(Graph::from_canonical(es.len(), edges))
}

/// The stable Kneser graph: `n`-subsets of `{1, ..., k + 2n}` with no two
/// cyclically consecutive elements, adjacent when disjoint. Vertices are
/// the subsets in lexicographic order; the subsets are returned as well.
pub fn stable_kneser(n: usize, k: usize) -> Result<(Graph, Vec<Vec<u32>>)> {
    if n < 1 {
        return Err(Error::InvalidParams("stable Kneser graph needs n >= 1".into()));
    }
    let m = (k + 2 * n) as u32;
    let mut subsets = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(start: u32, m: u32, n: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            let wraps = n > 1 && current[0] == 1 && *current.last().unwrap() == m;
            if !wraps {
                out.push(current.clone());
            }
            return;
        }
        for x in start..=m {
            current.push(x);
            rec(x + 2, m, n, current, out);
            current.pop();
        }
    }
    rec(1, m, n, &mut current, &mut subsets);
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Ok((Graph::from_canonical(subsets.len(), edges), subsets))
}

/// One-skeleton of an iterated barycentric subdivision, with enough
/// bookkeeping to locate the original vertices.
#[derive(Clone, Debug)]
pub struct SubdividedSkeleton {
    pub graph: Graph,
    pub subdivisions: u32,
    /// `origin[v]` is the vertex of the graph corresponding to vertex `v`
    /// of the original complex.
    pub origin: Vec<Option<u32>>,
    /// Face of the previous subdivision represented by each vertex
    /// (for zero subdivisions, the singleton of the vertex itself).
    pub labels: Vec<Vec<u32>>,
    /// The subdivided complex itself.
    pub complex: SimplicialComplex,
}

/// `s`-fold barycentric subdivision of `k`, reduced to its one-skeleton.
pub fn subdivided_skeleton(k: &SimplicialComplex, s: u32, limits: &Limits) -> Result<SubdividedSkeleton> {
    let mut complex = k.clone();
    let mut origin: Vec<Option<u32>> = (0..k.vertex_count() as u32)
        .map(|v| k.contains(&[v]).then_some(v))
        .collect();
    let mut labels: Vec<Vec<u32>> = (0..k.vertex_count() as u32).map(|v| vec![v]).collect();
    for _ in 0..s {
        let bary = barycentric_subdivision(&complex, limits)?;
        // the vertex of bary representing the singleton {x}
        let mut singleton = vec![None; complex.vertex_count()];
        for (i, label) in bary.labels.iter().enumerate() {
            if label.len() == 1 {
                singleton[label[0] as usize] = Some(i as u32);
            }
        }
        origin = origin.into_iter().map(|o| o.and_then(|x| singleton[x as usize])).collect();
        labels = bary.labels;
        complex = bary.complex;
    }
    Ok(SubdividedSkeleton {
        graph: complex.one_skeleton_graph(),
        subdivisions: s,
        origin,
        labels,
        complex,
    })
}

/// Open ball `B` (distance `< 2^s`) and sphere `S` (distance `= 2^s`)
/// around an original vertex, as sorted vertex lists.
pub fn balls_and_spheres(gs: &SubdividedSkeleton, v: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    let centre = gs
        .origin
        .get(v as usize)
        .copied()
        .flatten()
        .ok_or(Error::NotAVertex(v))?;
    let radius = 1u32 << gs.subdivisions;
    let dist = graph::multi_source_bfs(&gs.graph, [centre], |_| true);
    let mut ball = Vec::new();
    let mut sphere = Vec::new();
    for (w, d) in dist.iter().enumerate() {
        match d {
            Some(d) if *d < radius => ball.push(w as u32),
            Some(d) if *d == radius => sphere.push(w as u32),
            _ => {}
        }
    }
    Ok((ball, sphere))
}

/// G(n, p) from a seeded ChaCha8 stream; pairs are visited in lexicographic
/// order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_canonical(n, edges))
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf as u32, c as u32));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0] as u32, rest[1] as u32));
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, girth, induced, power};

    #[test]
    fn basic_families() {
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert_eq!(path(2).unwrap(), complete(2));
        assert_eq!(girth(&cycle(6).unwrap()), Some(6));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn circular_examples() {
        for n in (3..20).step_by(2) {
            // a single n-cycle, though not in the standard labelling
            let t = circular_complete(n, 2).unwrap();
            assert!(t.is_connected() && t.vertices().all(|v| t.degree(v) == 2));
        }
        assert_eq!(complement(&circular_complete(9, 2).unwrap()), power(&cycle(9).unwrap(), 3));
        for k in 1..10 {
            assert_eq!(circular_complete(k + 1, k).unwrap(), complete(k + 1));
        }
        assert!(circular_complete(9, 3).is_err());
        assert!(circular_complete(5, 5).is_err());
    }

    #[test]
    fn circular_is_complement_of_cycle_power_exhaustive() {
        for n in 3..=40 {
            for k in (1..n).filter(|k| (n + k) % 2 == 1) {
                let t = circular_complete(n, k).unwrap();
                let r = (n - k - 1) / 2;
                assert_eq!(t, complement(&power(&cycle(n).unwrap(), r as u32)), "n={n} k={k}");
                assert!(t.vertices().all(|v| t.degree(v) == k));
            }
        }
    }

    /// Walks the labelled S graph as a cycle starting at label 1 and checks
    /// every vertex has degree two and the walk visits all vertices.
    fn is_single_cycle(g: &Graph) -> bool {
        if g.vertices().any(|v| g.degree(v) != 2) {
            return false;
        }
        let (mut prev, mut cur, mut steps) = (0u32, g.neighbors(0)[0], 1);
        while cur != 0 {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            steps += 1;
        }
        steps == g.vertex_count()
    }

    #[test]
    fn s_graph_examples() {
        for n in (7..=21).step_by(2) {
            let s = s_graph(n, 2).unwrap();
            assert_eq!(s.graph.vertex_count(), n - 3);
            assert_eq!(s.graph.edge_count(), n - 3);
            assert!(is_single_cycle(&s.graph), "n={n}");
        }
        let s9 = s_graph(9, 2).unwrap();
        let expected = [(1, -3), (2, -3), (2, -2), (3, -2), (3, -1), (-1, 1)];
        for (a, b) in expected {
            assert!(s9.graph.has_edge(s9.index_of(a).unwrap(), s9.index_of(b).unwrap()));
        }
        let s14 = s_graph(14, 3).unwrap();
        assert_eq!(s14.graph.vertex_count(), 10);
        let t = circular_complete(14, 3).unwrap();
        let residues: Vec<u32> = s14.labels.iter().map(|l| l.rem_euclid(14) as u32).collect();
        let (induced_part, _) = induced(&t, &residues).unwrap();
        let extra = s14.graph.edge_count() - induced_part.edge_count();
        assert_eq!(extra, 3);
        for (a, b) in [(-1, 1), (-1, 2), (-2, 1)] {
            assert!(s14.graph.has_edge(s14.index_of(a).unwrap(), s14.index_of(b).unwrap()));
        }
        assert!(s_graph(4, 3).is_err());
    }

    #[test]
    fn three_sun_shape() {
        let s = three_sun();
        assert_eq!(power(&s, 2), complete(6));
        assert!(!s.is_cone());
        assert_eq!(s.edge_count(), 9);
        assert!(!s.has_edge(3, 0) && s.has_edge(3, 1) && s.has_edge(3, 2));
    }

    #[test]
    fn total_and_line_graphs() {
        let mut corpus = vec![complete(3), complete(4), cycle(5).unwrap(), path(4).unwrap()];
        for seed in 0..20 {
            corpus.push(random_graph(7, 0.5, seed).unwrap());
        }
        for g in corpus.into_iter().filter(|g| g.edge_count() > 0) {
            let t = total_graph(&g);
            assert_eq!(t, power(&subdivision(&g), 2));
            let n = g.vertex_count() as u32;
            let originals: Vec<u32> = (0..n).collect();
            let edge_vertices: Vec<u32> = (n..t.vertex_count() as u32).collect();
            assert_eq!(induced(&t, &originals).unwrap().0, g);
            assert_eq!(induced(&t, &edge_vertices).unwrap().0, line_graph(&g).unwrap());
        }
        for n in 4..10 {
            let c = cycle(n).unwrap();
            let l = line_graph(&c).unwrap();
            assert_eq!(l.edge_count(), n);
            assert!(l.vertices().all(|v| l.degree(v) == 2) && l.is_connected());
        }
        assert_eq!(line_graph(&complete(3)).unwrap(), complete(3));
        assert!(line_graph(&Graph::edgeless(3)).is_err());
    }

    #[test]
    fn stable_kneser_examples() {
        for k in 0..6 {
            let (g, _) = stable_kneser(1, k).unwrap();
            assert_eq!(g, complete(k + 2));
        }
        let (g, subsets) = stable_kneser(2, 1).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(subsets, vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]);
        // 5-cycle: each stable pair is disjoint from exactly two others
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn stable_kneser_complement_is_line_graph() {
        for k in 0..6 {
            let (sg, subsets) = stable_kneser(2, k).unwrap();
            let base = complement(&cycle(k + 4).unwrap());
            let line = line_graph(&base).unwrap();
            let perm: Vec<u32> = subsets
                .iter()
                .map(|s| {
                    let e = (s[0] - 1, s[1] - 1);
                    base.edges().iter().position(|&x| x == e).unwrap() as u32
                })
                .collect();
            assert_eq!(complement(&sg).relabel(&perm).unwrap(), line, "k={k}");
        }
    }

    #[test]
    fn subdivided_triangle_boundary_is_long_cycle() {
        let k = SimplicialComplex::boundary_of_simplex(3);
        for s in 0..5 {
            let gs = subdivided_skeleton(&k, s, &Limits::default()).unwrap();
            assert_eq!(gs.graph, {
                let c = gs.graph.clone();
                assert!(c.vertices().all(|v| c.degree(v) == 2) && c.is_connected());
                c
            });
            assert_eq!(gs.graph.vertex_count(), 3 << s);
        }
    }

    #[test]
    fn balls_at_level_zero() {
        let k = SimplicialComplex::simplex(3);
        let gs = subdivided_skeleton(&k, 0, &Limits::default()).unwrap();
        let (b, s) = balls_and_spheres(&gs, 0).unwrap();
        assert_eq!(b, vec![0]);
        assert_eq!(s, vec![1, 2]);
        assert!(balls_and_spheres(&gs, 7).is_err());
    }

    #[test]
    fn ball_intersections_detect_faces() {
        let k = SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let gs = subdivided_skeleton(&k, 2, &Limits::default()).unwrap();
        let balls: Vec<Vec<u32>> = (0..4).map(|v| balls_and_spheres(&gs, v).unwrap().0).collect();
        for mask in 1u32..16 {
            let verts: Vec<u32> = (0..4).filter(|v| mask >> v & 1 == 1).collect();
            let common = gs.graph.vertices().any(|w| verts.iter().all(|&v| balls[v as usize].contains(&w)));
            assert_eq!(common, k.contains(&verts), "{verts:?}");
        }
    }

    #[test]
    fn adjacent_originals_are_two_to_the_s_apart() {
        let k = SimplicialComplex::simplex(3);
        for s in 0..4 {
            let gs = subdivided_skeleton(&k, s, &Limits::default()).unwrap();
            let a = gs.origin[0].unwrap();
            let b = gs.origin[1].unwrap();
            let d = graph::distances_from(&gs.graph, a)[b as usize];
            assert_eq!(d, graph::Distance::Finite(1 << s));
        }
    }

    #[test]
    fn random_generators() {
        assert_eq!(random_graph(8, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(random_graph(8, 1.0, 1).unwrap(), complete(8));
        assert_eq!(random_graph(9, 0.4, 77).unwrap(), random_graph(9, 0.4, 77).unwrap());
        assert!(random_graph(3, 1.5, 0).is_err());
        for n in 1..15 {
            let t = random_tree(n, n as u64).unwrap();
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
            assert_eq!(random_tree(n, 5).unwrap(), random_tree(n, 5).unwrap());
        }
    }
}
