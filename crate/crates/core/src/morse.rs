//! Acyclic matchings on face posets, elementary collapses, and the explicit
//! matching that collapses `cl(G^k)` onto `cl(G^{k-1})` for graphs of large
//! girth.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::cliques::maximal_cliques;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{self, Distance, Graph};

/// A set of face pairs `(σ, τ)` with `σ` a codimension-one face of `τ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

impl Matching {
    /// Pairs are normalised to sorted vertex lists and canonical order.
    pub fn new(pairs: Vec<(Vec<u32>, Vec<u32>)>) -> Matching {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(mut s, mut t)| {
                s.sort_unstable();
                t.sort_unstable();
                (s, t)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.cmp(b)));
        pairs.dedup();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(Vec<u32>, Vec<u32>)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Why a matching fails to be acyclic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// `sigma` is not a codimension-one face of `tau`.
    NotCodimensionOne { sigma: Vec<u32>, tau: Vec<u32> },
    /// A face occurs in more than one pair.
    RepeatedFace(Vec<u32>),
    /// A closed V-path `σ₀ ⊂ τ₀ ⊃ σ₁ ⊂ τ₁ ⊃ … ⊃ σ₀`, listed as
    /// `[σ₀, τ₀, σ₁, τ₁, …]`.
    Cycle(Vec<Vec<u32>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Acyclic,
    Violation(Violation),
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verification::Acyclic)
    }
}

fn is_codim_one(sigma: &[u32], tau: &[u32]) -> bool {
    sigma.len() + 1 == tau.len() && sigma.iter().all(|v| tau.binary_search(v).is_ok())
}

fn facets_of(tau: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0..tau.len()).map(move |skip| {
        tau.iter().enumerate().filter_map(|(j, &v)| (j != skip).then_some(v)).collect()
    })
}

/// Checks pairing shape, disjointness and the absence of closed V-paths.
/// Errors if a face of the matching is not a face of `k`.
pub fn verify_matching(k: &SimplicialComplex, m: &Matching) -> Result<Verification> {
    for (s, t) in m.pairs() {
        for f in [s, t] {
            if !k.contains(f) {
                return Err(Error::FaceNotInComplex(f.clone()));
            }
        }
    }
    let mut seen: FxHashMap<&[u32], ()> = FxHashMap::default();
    for (s, t) in m.pairs() {
        if !is_codim_one(s, t) {
            return Ok(Verification::Violation(Violation::NotCodimensionOne {
                sigma: s.clone(),
                tau: t.clone(),
            }));
        }
        for f in [s, t] {
            if seen.insert(f.as_slice(), ()).is_some() {
                return Ok(Verification::Violation(Violation::RepeatedFace(f.clone())));
            }
        }
    }
    Ok(match find_v_cycle(m) {
        Some(cycle) => Verification::Violation(Violation::Cycle(cycle)),
        None => Verification::Acyclic,
    })
}

/// Depth-first search on the digraph whose nodes are the pairs, with an arc
/// from pair `i` to pair `j` when the lower face of `j` is a facet of the
/// upper face of `i`.
fn find_v_cycle(m: &Matching) -> Option<Vec<Vec<u32>>> {
    let lower: FxHashMap<&[u32], usize> =
        m.pairs().iter().enumerate().map(|(i, (s, _))| (s.as_slice(), i)).collect();
    let succ: Vec<Vec<usize>> = m
        .pairs()
        .iter()
        .enumerate()
        .map(|(i, (_, t))| {
            facets_of(t).filter_map(|f| lower.get(f.as_slice()).copied()).filter(|&j| j != i).collect()
        })
        .collect();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; succ.len()];
    for root in 0..succ.len() {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(&child) = succ[node].get(*next) {
                *next += 1;
                match state[child] {
                    0 => {
                        state[child] = 1;
                        stack.push((child, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(n, _)| n == child).unwrap();
                        let mut cycle = Vec::new();
                        for &(n, _) in &stack[start..] {
                            cycle.push(m.pairs()[n].0.clone());
                            cycle.push(m.pairs()[n].1.clone());
                        }
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[node] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Faces of `k` in no pair, in canonical order.
pub fn critical_faces(k: &SimplicialComplex, m: &Matching) -> Result<Vec<Vec<u32>>> {
    if let Verification::Violation(v) = verify_matching(k, m)? {
        return Err(Error::InvalidMatching(format!("{v:?}")));
    }
    let matched: FxHashMap<&[u32], ()> =
        m.pairs().iter().flat_map(|(s, t)| [(s.as_slice(), ()), (t.as_slice(), ())]).collect();
    Ok(k.faces().filter(|f| !matched.contains_key(f)).map(|f| f.to_vec()).collect())
}

/// Result of a greedy collapse: whether the target was reached, and the
/// removed free pairs `(free face, its unique coface)` in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseOutcome {
    pub success: bool,
    pub log: Vec<(Vec<u32>, Vec<u32>)>,
}

/// Greedily removes free pairs of `k` lying outside `l`. A nonempty face is
/// free when it has exactly one proper coface, necessarily of one dimension
/// more. Succeeds iff exactly `l` remains.
pub fn elementary_collapse(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<CollapseOutcome> {
    if k.vertex_count() != l.vertex_count() {
        return Err(Error::VertexCountMismatch(k.vertex_count(), l.vertex_count()));
    }
    if let Some(missing) = l.first_face_missing_from(k) {
        return Err(Error::NotSubcomplex(missing));
    }
    let arities = k.max_arity() + 1;
    let mut offset = vec![0usize; arities + 1];
    for a in 0..arities {
        offset[a + 1] = offset[a] + k.count(a);
    }
    let total = offset[arities];
    let face_of = |id: usize| {
        let a = offset.partition_point(|&o| o <= id) - 1;
        (a, id - offset[a])
    };
    // boundary and coboundary as id lists
    let mut boundary: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut cofaces: Vec<Vec<usize>> = vec![Vec::new(); total];
    for a in 1..arities {
        for (i, f) in k.faces_of_arity(a).enumerate() {
            let id = offset[a] + i;
            for sub in facets_of(f) {
                let sid = offset[a - 1] + k.index_of(&sub).expect("closed");
                boundary[id].push(sid);
                cofaces[sid].push(id);
            }
        }
    }
    let protected: Vec<bool> = (0..total)
        .map(|id| {
            let (a, i) = face_of(id);
            a == 0 || l.contains(k.face(a, i))
        })
        .collect();
    let mut alive = vec![true; total];
    let mut alive_cofaces: Vec<usize> = cofaces.iter().map(|c| c.len()).collect();
    let mut queue: VecDeque<usize> = (0..total).filter(|&id| !protected[id]).collect();
    let mut log = Vec::new();
    while let Some(s) = queue.pop_front() {
        if !alive[s] || alive_cofaces[s] != 1 {
            continue;
        }
        let t = *cofaces[s].iter().find(|&&c| alive[c]).expect("one alive coface");
        if alive_cofaces[t] != 0 {
            continue;
        }
        alive[s] = false;
        alive[t] = false;
        let (sa, si) = face_of(s);
        let (ta, ti) = face_of(t);
        log.push((k.face(sa, si).to_vec(), k.face(ta, ti).to_vec()));
        for &b in boundary[t].iter().chain(&boundary[s]) {
            if alive[b] {
                alive_cofaces[b] -= 1;
                if !protected[b] && alive_cofaces[b] <= 1 {
                    queue.push_back(b);
                }
            }
        }
    }
    let success = (0..total).all(|id| alive[id] == protected[id]);
    Ok(CollapseOutcome { success, log })
}

/// The matching on `cl(G^k)` from the girth-collapse argument. For every
/// maximal clique `σ` of `G^k` the tree `G[σ]` has a centre `v` (the smaller
/// index when there are two); each face `f ⊆ σ` containing a pair at
/// distance exactly `k` with `v ∉ f` is paired with `f ∪ {v}`.
///
/// Requires `k >= 2` and `girth(G) >= 3k + 1`.
pub fn girth_matching(g: &Graph, k: u32) -> Result<Matching> {
    if k < 2 {
        return Err(Error::Precondition(format!("k must be at least 2, got {k}")));
    }
    if let Some(girth) = graph::girth(g) {
        if girth < 3 * k + 1 {
            return Err(Error::Precondition(format!("girth {girth} is below 3k+1 = {}", 3 * k + 1)));
        }
    }
    let dist = graph::distances(g);
    let gk = graph::power(g, k);
    let mut partner: FxHashMap<Vec<u32>, Vec<u32>> = FxHashMap::default();
    let mut pairs = Vec::new();
    for sigma in maximal_cliques(&gk) {
        let v = tree_centre(g, &sigma, k)?;
        let rest: Vec<u32> = sigma.iter().copied().filter(|&w| w != v).collect();
        if rest.len() > 30 {
            return Err(Error::Precondition(format!("clique of size {} is too large", sigma.len())));
        }
        for mask in 1u32..(1u32 << rest.len()) {
            let f: Vec<u32> = (0..rest.len()).filter(|j| mask >> j & 1 == 1).map(|j| rest[j]).collect();
            let long = f.iter().enumerate().any(|(i, &a)| {
                f[i + 1..].iter().any(|&b| dist.get(a, b) == Distance::Finite(k))
            });
            if !long {
                continue;
            }
            let mut t = f.clone();
            t.push(v);
            t.sort_unstable();
            match partner.get(&f) {
                Some(existing) if *existing == t => continue,
                Some(existing) => {
                    return Err(Error::InvalidMatching(format!(
                        "face {f:?} paired with both {existing:?} and {t:?}"
                    )))
                }
                None => {}
            }
            if partner.contains_key(&t) {
                return Err(Error::InvalidMatching(format!("face {t:?} used twice")));
            }
            partner.insert(f.clone(), t.clone());
            partner.insert(t.clone(), f.clone());
            pairs.push((f, t));
        }
    }
    Ok(Matching::new(pairs))
}

/// Centre of the tree `G[σ]`, checking that it is a tree of diameter at
/// most `k`.
fn tree_centre(g: &Graph, sigma: &[u32], k: u32) -> Result<u32> {
    let (h, map) = graph::induced(g, sigma)?;
    if !h.is_connected() || h.edge_count() + 1 != h.vertex_count() {
        return Err(Error::Precondition(format!("G restricted to clique {sigma:?} is not a tree")));
    }
    let table = graph::distances(&h);
    let ecc: Vec<u32> = h
        .vertices()
        .map(|u| h.vertices().map(|w| table.get(u, w).finite().expect("connected")).max().unwrap_or(0))
        .collect();
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    if diameter > k {
        return Err(Error::Precondition(format!("tree on {sigma:?} has diameter {diameter} > {k}")));
    }
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let centre = (0..ecc.len()).find(|&i| ecc[i] == radius).expect("nonempty");
    Ok(map[centre])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, cone};
    use crate::families::{cycle, random_tree};
    use crate::graph::power;
    use crate::limits::Limits;

    fn cl(g: &Graph) -> SimplicialComplex {
        clique_complex(g, None, &Limits::default()).unwrap()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::simplex(2)
    }

    #[test]
    fn small_matchings() {
        let k = edge();
        assert!(verify_matching(&k, &Matching::default()).unwrap().is_ok());
        assert_eq!(critical_faces(&k, &Matching::default()).unwrap().len(), 4);
        let m = Matching::new(vec![(vec![0], vec![0, 1])]);
        assert!(verify_matching(&k, &m).unwrap().is_ok());
        assert_eq!(critical_faces(&k, &m).unwrap(), vec![vec![], vec![1]]);
        let bad = Matching::new(vec![(vec![0], vec![0, 2])]);
        assert!(matches!(verify_matching(&k, &bad), Err(Error::FaceNotInComplex(_))));
    }

    #[test]
    fn cycle_detector_fires_on_square_boundary() {
        let square = clique_complex(&cycle(4).unwrap(), None, &Limits::default()).unwrap();
        // 0 ⊂ 01 ⊃ 1 ⊂ 12 ⊃ 2 ⊂ 23 ⊃ 3 ⊂ 30 ⊃ 0
        let m = Matching::new(vec![
            (vec![0], vec![0, 1]),
            (vec![1], vec![1, 2]),
            (vec![2], vec![2, 3]),
            (vec![3], vec![0, 3]),
        ]);
        match verify_matching(&square, &m).unwrap() {
            Verification::Violation(Violation::Cycle(c)) => assert_eq!(c.len(), 8),
            other => panic!("expected a cycle, got {other:?}"),
        }
        let shape = Matching::new(vec![(vec![0], vec![1, 2])]);
        assert!(matches!(
            verify_matching(&square, &shape).unwrap(),
            Verification::Violation(Violation::NotCodimensionOne { .. })
        ));
        let twice = Matching::new(vec![(vec![0], vec![0, 1]), (vec![1], vec![0, 1])]);
        assert!(matches!(
            verify_matching(&square, &twice).unwrap(),
            Verification::Violation(Violation::RepeatedFace(_))
        ));
    }

    #[test]
    fn cone_matching_leaves_apex() {
        for n in 1..6 {
            let k = SimplicialComplex::simplex(n);
            let pairs = k
                .faces()
                .filter(|f| !f.contains(&0) && !f.is_empty())
                .map(|f| {
                    let mut t = f.to_vec();
                    t.push(0);
                    (f.to_vec(), t)
                })
                .collect();
            let m = Matching::new(pairs);
            assert_eq!(critical_faces(&k, &m).unwrap(), vec![vec![], vec![0]]);
        }
    }

    #[test]
    fn collapse_examples() {
        let tri = SimplicialComplex::simplex(3);
        for v in 0..3u32 {
            let point = SimplicialComplex::from_facets(3, &[vec![v]]).unwrap();
            let out = elementary_collapse(&tri, &point).unwrap();
            assert!(out.success);
            assert_eq!(out.log.len(), 3);
        }
        let circle = SimplicialComplex::boundary_of_simplex(3);
        let point = SimplicialComplex::from_facets(3, &[vec![0]]).unwrap();
        assert!(!elementary_collapse(&circle, &point).unwrap().success);
        let c7 = cycle(7).unwrap();
        assert!(elementary_collapse(&cl(&power(&c7, 2)), &cl(&c7)).unwrap().success);
        assert!(matches!(elementary_collapse(&point, &tri), Err(Error::NotSubcomplex(_))));
        let json = serde_json::to_string(&elementary_collapse(&tri, &point).unwrap()).unwrap();
        assert!(json.starts_with("{\"success\":true,\"log\":[["));
    }

    #[test]
    fn cone_collapses_to_apex() {
        let base = cl(&cycle(5).unwrap());
        let k = cone(&base, &Limits::default()).unwrap();
        let apex = SimplicialComplex::from_facets(6, &[vec![5]]).unwrap();
        assert!(elementary_collapse(&k, &apex).unwrap().success);
    }

    fn check_girth(g: &Graph, k: u32) {
        let m = girth_matching(g, k).unwrap();
        let host = cl(&power(g, k));
        assert!(verify_matching(&host, &m).unwrap().is_ok());
        let lower = cl(&power(g, k - 1));
        let crit = critical_faces(&host, &m).unwrap();
        assert_eq!(crit, lower.faces().map(|f| f.to_vec()).collect::<Vec<_>>());
        assert!(elementary_collapse(&host, &lower).unwrap().success);
    }

    #[test]
    fn girth_matching_on_cycles() {
        check_girth(&cycle(7).unwrap(), 2);
        check_girth(&cycle(13).unwrap(), 4);
        check_girth(&cycle(10).unwrap(), 3);
        assert!(girth_matching(&cycle(6).unwrap(), 2).is_err());
        assert!(girth_matching(&cycle(7).unwrap(), 1).is_err());
    }

    #[test]
    fn girth_matching_on_trees() {
        for seed in 0..10 {
            let t = random_tree(11, seed).unwrap();
            for k in 2..=4 {
                check_girth(&t, k);
            }
        }
    }
}
