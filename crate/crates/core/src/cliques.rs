//! Clique enumeration: all cliques in canonical order, and maximal cliques
//! by Bron–Kerbosch with Tomita pivoting.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, Graph};

/// Calls `visit` on every nonempty clique of `g` (as a sorted vertex list)
/// with at most `max_size` vertices. Within each size the cliques arrive
/// in lexicographic order. Stops with [`Error::FaceLimit`] once more than
/// `limit` cliques have been produced.
pub fn for_each_clique(
    g: &Graph,
    max_size: usize,
    limit: usize,
    mut visit: impl FnMut(&[u32]),
) -> Result<usize> {
    let all: Vec<u32> = g.vertices().collect();
    let mut current = Vec::new();
    let mut count = 0usize;
    extend(g, &all, max_size, limit, &mut current, &mut count, &mut visit)?;
    Ok(count)
}

fn extend(
    g: &Graph,
    candidates: &[u32],
    max_size: usize,
    limit: usize,
    current: &mut Vec<u32>,
    count: &mut usize,
    visit: &mut impl FnMut(&[u32]),
) -> Result<()> {
    if current.len() >= max_size {
        return Ok(());
    }
    for (i, &v) in candidates.iter().enumerate() {
        current.push(v);
        *count += 1;
        if *count > limit {
            return Err(Error::FaceLimit { reached: *count, limit });
        }
        visit(current);
        let next: Vec<u32> = intersect_sorted(&candidates[i + 1..], g.neighbors(v)).collect();
        extend(g, &next, max_size, limit, current, count, visit)?;
        current.pop();
    }
    Ok(())
}

/// All maximal cliques, each sorted, listed in lexicographic order. The
/// graph with no vertices has the single maximal clique `[]`.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let adj: Vec<FixedBitSet> = g
        .vertices()
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            for &w in g.neighbors(v) {
                s.insert(w as usize);
            }
            s
        })
        .collect();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&adj, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort_unstable();
    out
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<u32>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<u32>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximising |P ∩ N(u)| over u ∈ P ∪ X
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&adj[u]).count())
        .expect("P is nonempty");
    let mut todo = p.clone();
    todo.difference_with(&adj[pivot]);
    for v in todo.ones() {
        r.push(v as u32);
        let mut p2 = p.clone();
        p2.intersect_with(&adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[v]);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, random_graph};
    use crate::graph::power;

    fn brute_force_maximal(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.vertex_count();
        let is_clique = |mask: u32| {
            (0..n as u32).all(|u| {
                mask >> u & 1 == 0 || (u + 1..n as u32).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v))
            })
        };
        let cliques: Vec<u32> = (0..1u32 << n).filter(|&m| is_clique(m)).collect();
        let mut out: Vec<Vec<u32>> = cliques
            .iter()
            .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
            .map(|&m| (0..n as u32).filter(|v| m >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn maximal_cliques_match_brute_force() {
        for seed in 0..40 {
            let g = random_graph(9, 0.5, seed).unwrap();
            assert_eq!(maximal_cliques(&g), brute_force_maximal(&g), "seed {seed}");
        }
    }

    #[test]
    fn maximal_cliques_of_cycle_square() {
        let g = power(&cycle(7).unwrap(), 2);
        let expected: Vec<Vec<u32>> = {
            let mut v: Vec<Vec<u32>> = (0..7u32)
                .map(|i| {
                    let mut f = vec![i, (i + 1) % 7, (i + 2) % 7];
                    f.sort();
                    f
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(maximal_cliques(&g), expected);
        assert_eq!(maximal_cliques(&Graph::edgeless(0)), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn clique_enumeration_counts_and_order() {
        let mut seen: Vec<Vec<u32>> = Vec::new();
        let n = for_each_clique(&complete(5), usize::MAX, 100, |c| seen.push(c.to_vec())).unwrap();
        assert_eq!(n, 31);
        let triples: Vec<_> = seen.iter().filter(|c| c.len() == 3).cloned().collect();
        let mut sorted = triples.clone();
        sorted.sort();
        assert_eq!(triples, sorted);
        assert!(matches!(
            for_each_clique(&complete(6), usize::MAX, 10, |_| {}),
            Err(Error::FaceLimit { limit: 10, .. })
        ));
        assert_eq!(for_each_clique(&complete(6), 2, 100, |_| {}).unwrap(), 6 + 15);
    }
}
