//! Finite simple undirected graphs and the graph-side operations: distances,
//! powers, complements, girth, folds and induced subgraph search.

use std::collections::VecDeque;
use std::fmt;
use std::io::{BufRead, Write};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families;

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Both the canonical sorted edge list and sorted per-vertex neighbour lists
/// are kept; the two always describe the same edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

impl Graph {
    /// Builds a graph, deduplicating repeated and reversed pairs.
    pub fn new(vertex_count: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w as u64, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        Ok(Graph::from_canonical(vertex_count, canon))
    }

    /// `edges` must already be in range and loop-free; ordering is fixed here.
    pub(crate) fn from_canonical(vertex_count: usize, mut edges: Vec<(u32, u32)>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { edges, adjacency }
    }

    pub fn edgeless(vertex_count: usize) -> Graph {
        Graph::from_canonical(vertex_count, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v
            && (u as usize) < self.vertex_count()
            && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.vertex_count() as u32
    }

    /// Closed neighbourhoods as bitsets, `N[v]` at index `v`.
    pub fn closed_neighborhoods(&self) -> Vec<FixedBitSet> {
        let n = self.vertex_count();
        (0..n)
            .map(|v| {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(v);
                for &w in &self.adjacency[v] {
                    set.insert(w as usize);
                }
                set
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        bfs_from(self, 0).iter().all(|d| d.is_some())
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for &(u, v) in &self.edges {
            count += intersect_sorted(self.neighbors(u), self.neighbors(v))
                .filter(|&w| w > v)
                .count();
        }
        count
    }

    /// True if some vertex is adjacent to every other vertex.
    pub fn is_cone(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.adjacency.iter().any(|nb| nb.len() + 1 == n)
    }

    /// Graph with vertex sets of `self` and `other` placed side by side.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count() as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_canonical(self.vertex_count() + other.vertex_count(), edges)
    }

    /// Applies a vertex bijection `perm[old] = new`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Graph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidParams(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p as usize >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidParams("relabelling is not a bijection".into()));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(Graph::from_canonical(n, edges))
    }
}

/// Hop distance between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(u32),
    /// The vertices lie in different components.
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_within(self, r: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= r)
    }
}

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    vertex_count: usize,
    dist: Vec<Distance>,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn get(&self, u: u32, v: u32) -> Distance {
        self.dist[u as usize * self.vertex_count + v as usize]
    }

    /// Largest finite distance, or `Infinite` for a disconnected graph.
    pub fn diameter(&self) -> Distance {
        self.dist.iter().copied().max().unwrap_or(Distance::Finite(0))
    }
}

fn bfs_from(g: &Graph, source: u32) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source as usize] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize].unwrap();
        for &w in g.neighbors(u) {
            if dist[w as usize].is_none() {
                dist[w as usize] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// BFS distances from a set of sources, restricted to vertices where
/// `allowed` holds. Unreached vertices get `None`.
pub fn multi_source_bfs(
    g: &Graph,
    sources: impl IntoIterator<Item = u32>,
    allowed: impl Fn(u32) -> bool,
) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for s in sources {
        if allowed(s) && dist[s as usize].is_none() {
            dist[s as usize] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize].unwrap();
        for &w in g.neighbors(u) {
            if dist[w as usize].is_none() && allowed(w) {
                dist[w as usize] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Single-source hop distances.
pub fn distances_from(g: &Graph, source: u32) -> Vec<Distance> {
    bfs_from(g, source)
        .into_iter()
        .map(|d| d.map_or(Distance::Infinite, Distance::Finite))
        .collect()
}

/// All-pairs BFS distances.
pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in g.vertices() {
        dist.extend(distances_from(g, s));
    }
    DistanceTable { vertex_count: n, dist }
}

/// The `r`-th distance power: `uv` is an edge iff `1 <= dist(u, v) <= r`.
pub fn power(g: &Graph, r: u32) -> Graph {
    let n = g.vertex_count();
    if r == 0 {
        return Graph::edgeless(n);
    }
    if r == 1 {
        return g.clone();
    }
    let mut edges = Vec::new();
    let mut dist = vec![u32::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist[s as usize] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if u > s {
                edges.push((s, u));
            }
            if du == r {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        for t in touched.drain(..) {
            dist[t as usize] = u32::MAX;
        }
    }
    Graph::from_canonical(n, edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count() as u32;
    let mut edges = Vec::new();
    for u in 0..n {
        let nb = g.neighbors(u);
        let mut it = nb.iter().peekable();
        for v in 0..n {
            while it.peek().is_some_and(|&&w| w < v) {
                it.next();
            }
            if v > u && it.peek() != Some(&&v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_canonical(n as usize, edges)
}

/// Induced subgraph on `subset`, reindexed in increasing vertex order.
/// Returns the subgraph together with `mapping[new] = old`.
pub fn induced(g: &Graph, subset: &[u32]) -> Result<(Graph, Vec<u32>)> {
    let n = g.vertex_count();
    let mut mapping: Vec<u32> = subset.to_vec();
    mapping.sort_unstable();
    mapping.dedup();
    if let Some(&bad) = mapping.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad as u64, vertex_count: n });
    }
    let mut new_index = vec![u32::MAX; n];
    for (i, &v) in mapping.iter().enumerate() {
        new_index[v as usize] = i as u32;
    }
    let edges = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let (a, b) = (new_index[u as usize], new_index[v as usize]);
            (a != u32::MAX && b != u32::MAX).then_some((a, b))
        })
        .collect();
    Ok((Graph::from_canonical(mapping.len(), edges), mapping))
}

/// Girth, `None` for a forest.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist.fill(u32::MAX);
        dist[s as usize] = 0;
        parent[s as usize] = u32::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if best.is_some_and(|b| 2 * du + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    let len = du + dist[w as usize] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `N[u] ⊆ N[v]`, i.e. `u` is dominated by `v`.
pub fn is_dominated(g: &Graph, u: u32, v: u32) -> bool {
    if u == v || !g.has_edge(u, v) {
        return false;
    }
    g.neighbors(u).iter().all(|&w| w == v || g.has_edge(v, w))
}

/// Lexicographically smallest `(u, v)` with `u != v` and `N[u] ⊆ N[v]`.
pub fn find_fold(g: &Graph) -> Option<(u32, u32)> {
    for u in g.vertices() {
        for &v in g.neighbors(u) {
            if is_dominated(g, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Fold steps `(removed, dominating)` in original labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldSequence {
    pub steps: Vec<(u32, u32)>,
}

impl FoldSequence {
    /// Replays the folds on `g`, checking the domination condition at each
    /// step against the graph that remains.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut alive = vec![true; g.vertex_count()];
        let closed = g.closed_neighborhoods();
        for &(u, v) in &self.steps {
            let (ui, vi) = (u as usize, v as usize);
            if u == v || ui >= alive.len() || vi >= alive.len() || !alive[ui] || !alive[vi] {
                return false;
            }
            let ok = closed[ui].ones().all(|w| !alive[w] || closed[vi].contains(w));
            if !ok {
                return false;
            }
            alive[ui] = false;
        }
        true
    }
}

/// Greedy folding, always taking the lexicographically smallest available
/// fold, until no fold applies. Returns the folds and the surviving vertices.
pub fn fold_greedily(g: &Graph) -> (Vec<(u32, u32)>, Vec<u32>) {
    let n = g.vertex_count();
    let mut closed = g.closed_neighborhoods();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut steps = Vec::new();
    'outer: while alive.count_ones(..) > 1 {
        for u in alive.ones() {
            for v in alive.ones() {
                if u != v && closed[u].is_subset(&closed[v]) {
                    steps.push((u as u32, v as u32));
                    alive.set(u, false);
                    for set in closed.iter_mut() {
                        set.set(u, false);
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    (steps, alive.ones().map(|v| v as u32).collect())
}

/// Dismantles `g` down to a single vertex if the greedy fold order reaches
/// one; `None` when it gets stuck with two or more vertices left.
pub fn dismantle(g: &Graph) -> Result<Option<FoldSequence>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (steps, rest) = fold_greedily(g);
    Ok((rest.len() == 1).then_some(FoldSequence { steps }))
}

/// True iff some injection `V(H) -> V(G)` is an induced-subgraph
/// isomorphism. Brute force, so `|V(H)|` is capped.
pub fn contains_induced(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    let k = h.vertex_count();
    if k > cap {
        return Err(Error::PatternTooLarge { size: k, cap });
    }
    if k > g.vertex_count() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(k);
    let mut used = vec![false; g.vertex_count()];
    Ok(extend_embedding(g, h, &mut image, &mut used))
}

fn extend_embedding(g: &Graph, h: &Graph, image: &mut Vec<u32>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == h.vertex_count() {
        return true;
    }
    for cand in g.vertices() {
        if used[cand as usize] {
            continue;
        }
        let consistent = (0..i).all(|j| {
            h.has_edge(i as u32, j as u32) == g.has_edge(cand, image[j])
        });
        if !consistent {
            continue;
        }
        used[cand as usize] = true;
        image.push(cand);
        if extend_embedding(g, h, image, used) {
            return true;
        }
        image.pop();
        used[cand as usize] = false;
    }
    false
}

/// True iff `g` has none of C4, C5, C6 or the 3-sun as an induced subgraph.
pub fn is_stability_free(g: &Graph) -> bool {
    let patterns = [
        families::cycle(4).expect("valid"),
        families::cycle(5).expect("valid"),
        families::cycle(6).expect("valid"),
        families::three_sun(),
    ];
    patterns
        .iter()
        .all(|h| !contains_induced(g, h, h.vertex_count()).expect("within cap"))
}

pub(crate) fn intersect_sorted<'a>(a: &'a [u32], b: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let x = a[i];
                    i += 1;
                    j += 1;
                    return Some(x);
                }
            }
        }
        None
    })
}

/// Writes the edge-list format: `n m` then one `u v` line per edge, in
/// canonical order. Header lines are emitted as `# ` comments first.
pub fn write_edge_list<W: Write>(g: &Graph, header: &[String], mut out: W) -> Result<()> {
    for line in header {
        writeln!(out, "# {line}")?;
    }
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &[], &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

/// Reads the edge-list format; blank lines and `#` comments are skipped.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let nums: Vec<u64> = trimmed
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected a non-negative integer, found {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        if nums.len() != 2 {
            return Err(Error::Parse { line: line_no, msg: "expected two integers".into() });
        }
        match header {
            None => header = Some((nums[0] as usize, nums[1] as usize)),
            Some((n, _)) => {
                for &x in &nums {
                    if x >= n as u64 {
                        return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
                    }
                }
                edges.push((nums[0] as u32, nums[1] as u32));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `n m` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, three_sun};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(Graph::new(4, &[]).unwrap().edge_count(), 0);
        assert_eq!(Graph::new(5, &[(0, 1), (1, 0)]).unwrap().edge_count(), 1);
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distances(&cycle(6).unwrap()).get(0, 3), Distance::Finite(3));
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(distances(&two_edges).get(0, 2), Distance::Infinite);
        assert_eq!(distances(&path(4).unwrap()).get(0, 3), Distance::Finite(3));
    }

    #[test]
    fn distance_table_is_a_metric() {
        let g = petersen().disjoint_union(&cycle(5).unwrap());
        let t = distances(&g);
        let n = g.vertex_count() as u32;
        for u in 0..n {
            assert_eq!(t.get(u, u), Distance::Finite(0));
            for v in 0..n {
                assert_eq!(t.get(u, v), t.get(v, u));
                for w in 0..n {
                    if let (Some(a), Some(b)) = (t.get(u, v).finite(), t.get(v, w).finite()) {
                        assert!(t.get(u, w).finite().unwrap() <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn power_examples() {
        let c6 = cycle(6).unwrap();
        let sq = power(&c6, 2);
        // brute force: circulant with steps {1, 2}
        let mut expected = Vec::new();
        for i in 0..6u32 {
            for step in [1, 2] {
                expected.push((i, (i + step) % 6));
            }
        }
        assert_eq!(sq, Graph::new(6, &expected).unwrap());
        assert_eq!(power(&petersen(), 0).edge_count(), 0);
        assert_eq!(power(&c6, 1), c6);
        assert_eq!(power(&path(4).unwrap(), 3), complete(4));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&complete(4)).edge_count(), 0);
        let c5 = cycle(5).unwrap();
        assert_eq!(complement(&complement(&c5)), c5);
        // i -> 2i mod 5 maps C5 onto its complement
        let perm: Vec<u32> = (0..5).map(|i| (2 * i) % 5).collect();
        assert_eq!(c5.relabel(&perm).unwrap(), complement(&c5));
    }

    #[test]
    fn induced_examples() {
        let (g, map) = induced(&cycle(6).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(g, path(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let p = petersen();
        let all: Vec<u32> = p.vertices().collect();
        assert_eq!(induced(&p, &all).unwrap().0, p);
        assert_eq!(induced(&complete(5), &[1, 3]).unwrap().0, complete(2));
        assert!(induced(&complete(3), &[4]).is_err());
    }

    /// Shortest cycle length by enumerating simple cycles through each
    /// starting vertex.
    fn brute_girth(g: &Graph) -> Option<u32> {
        fn walk(g: &Graph, start: u32, cur: u32, len: u32, seen: &mut Vec<bool>, best: &mut Option<u32>) {
            for &w in g.neighbors(cur) {
                if w == start && len >= 3 {
                    *best = Some(best.map_or(len, |b| b.min(len)));
                } else if w > start && !seen[w as usize] {
                    seen[w as usize] = true;
                    walk(g, start, w, len + 1, seen, best);
                    seen[w as usize] = false;
                }
            }
        }
        let mut best = None;
        for s in g.vertices() {
            let mut seen = vec![false; g.vertex_count()];
            seen[s as usize] = true;
            walk(g, s, s, 1, &mut seen, &mut best);
        }
        best
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(7).unwrap()), Some(7));
        assert_eq!(girth(&path(9).unwrap()), None);
        assert_eq!(brute_girth(&petersen()), Some(5));
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&three_sun()), Some(3));
    }

    #[test]
    fn fold_examples() {
        assert_eq!(find_fold(&complete(3)), Some((0, 1)));
        assert_eq!(find_fold(&cycle(5).unwrap()), None);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (u, v) = find_fold(&star).unwrap();
        assert_eq!((u, v), (1, 0));
        // exhaustive check that the answer is the smallest dominated pair
        let mut all = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if is_dominated(&star, a, b) {
                    all.push((a, b));
                }
            }
        }
        assert_eq!(all.first(), Some(&(u, v)));
    }

    #[test]
    fn dismantle_examples() {
        let tree = Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let seq = dismantle(&tree).unwrap().unwrap();
        assert_eq!(seq.steps.len(), 5);
        assert!(seq.is_valid_for(&tree));
        assert_eq!(dismantle(&cycle(4).unwrap()).unwrap(), None);
        let sq = power(&tree, 3);
        assert!(dismantle(&sq).unwrap().unwrap().is_valid_for(&sq));
        assert!(matches!(dismantle(&Graph::edgeless(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn induced_search_examples() {
        assert!(contains_induced(&cycle(6).unwrap(), &path(3).unwrap(), 8).unwrap());
        assert!(!contains_induced(&complete(4), &cycle(4).unwrap(), 8).unwrap());
        assert!(contains_induced(&three_sun(), &complete(3), 8).unwrap());
        assert!(matches!(
            contains_induced(&complete(10), &complete(9), 8),
            Err(Error::PatternTooLarge { size: 9, cap: 8 })
        ));
    }

    #[test]
    fn stability_examples() {
        assert!(is_stability_free(&path(7).unwrap()));
        assert!(!is_stability_free(&cycle(5).unwrap()));
        assert!(!is_stability_free(&three_sun()));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        let text = edge_list_string(&g);
        assert!(text.starts_with("10 15\n0 1\n"));
        assert_eq!(read_edge_list(text.as_bytes()).unwrap(), g);
        let commented = format!("# family=petersen\n\n{text}");
        assert_eq!(read_edge_list(commented.as_bytes()).unwrap(), g);
        assert!(read_edge_list("3 1\n0 5\n".as_bytes()).is_err());
        assert!(read_edge_list("3 2\n0 1\n".as_bytes()).is_err());
    }
}
