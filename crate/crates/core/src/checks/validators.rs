//! One validator per claim. Each returns a [`TheoremReport`] whose
//! evidence records what was computed; failures carry a counterexample.

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::predictions::{predict_clique_cycle_power, predict_ind_circular, predict_ind_cycle};
use super::report::{TheoremReport, HOMOLOGY_LEVEL_NOTE};
use crate::cliques::maximal_cliques;
use crate::complex::{clique_complex, independence_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::families::{self, circular_complete, cycle, s_graph, CircularParams, LabelledGraph};
use crate::graph::{self, Graph};
use crate::homology::{self, clique_homology, integer_homology, HomologyProfile, Tier, WedgePrediction};
use crate::limits::Limits;
use crate::morse::{critical_faces, elementary_collapse, girth_matching, verify_matching, Verification};

fn graph_json(g: &Graph) -> Value {
    json!({"vertex_count": g.vertex_count(), "edges": g.edges()})
}

fn profile_json(p: &HomologyProfile) -> Value {
    serde_json::to_value(p).expect("profile serialises")
}

/// Outcome of the clique-domination test on `G²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCondition {
    pub holds: bool,
    /// First maximal clique of `G²` (in lexicographic order) contained in
    /// no closed neighbourhood of `G`.
    pub witness: Option<Vec<u32>>,
}

/// Whether every clique of `G²` lies inside some closed neighbourhood
/// `N_G[v]`. Checking maximal cliques suffices.
pub fn check_square_condition(g: &Graph) -> SquareCondition {
    let closed = g.closed_neighborhoods();
    let witness = maximal_cliques(&graph::power(g, 2)).into_iter().find(|sigma| {
        let mut s = FixedBitSet::with_capacity(g.vertex_count());
        for &x in sigma {
            s.insert(x as usize);
        }
        !closed.iter().any(|nv| s.is_subset(nv))
    });
    SquareCondition { holds: witness.is_none(), witness }
}

/// The star cluster of a vertex `v` lying in no triangle: the faces `σ` of
/// `ind(G)` avoiding `N[v]` such that `σ ∩ N(w) = ∅` for some neighbour
/// `w` of `v`. Returned on the vertex set of `G`.
pub fn star_cluster(g: &Graph, v: u32, limits: &Limits) -> Result<SimplicialComplex> {
    if v as usize >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v as u64, vertex_count: g.vertex_count() });
    }
    let nbrs = g.neighbors(v);
    if nbrs.is_empty() {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    for (i, &a) in nbrs.iter().enumerate() {
        if let Some(&b) = nbrs[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(Error::Precondition(format!("vertex {v} lies in the triangle {{{v}, {a}, {b}}}")));
        }
    }
    let rest: Vec<u32> = g.vertices().filter(|&x| x != v && !g.has_edge(v, x)).collect();
    let (h, map) = graph::induced(g, &rest)?;
    let ind = independence_complex(&h, limits)?;
    let faces: Vec<Vec<u32>> = ind
        .faces()
        .map(|f| f.iter().map(|&x| map[x as usize]).collect::<Vec<u32>>())
        .filter(|sigma| nbrs.iter().any(|&w| sigma.iter().all(|&x| !g.has_edge(w, x))))
        .collect();
    SimplicialComplex::from_faces(g.vertex_count(), &faces)
}

/// The graph `H` obtained by adding edges along a vertex sequence, the
/// subcomplex `L` of `ind(G)` cut out by the sequence, and whether
/// `L = ind(H)`.
#[derive(Clone, Debug)]
pub struct ExtendedGraph {
    pub graph: Graph,
    pub l: SimplicialComplex,
    pub equal: bool,
}

/// For a sequence `v₁ … v_{2d}` whose windows of `d + 1` consecutive
/// entries starting in the first half are repetition-free, adds the edges
/// `v_i v_j` with `i <= d < j` and `j − i <= d`. `L` consists of the faces
/// of `ind(G)` disjoint from some window `v_s … v_{s+d−1}`, `1 <= s <= d+1`.
pub fn extended_graph(g: &Graph, seq: &[u32], limits: &Limits) -> Result<ExtendedGraph> {
    if seq.len() % 2 == 1 {
        return Err(Error::Precondition(format!("sequence length {} is odd", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x as usize >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange { vertex: bad as u64, vertex_count: g.vertex_count() });
    }
    let d = seq.len() / 2;
    for i in 0..d {
        let mut window = seq[i..=i + d].to_vec();
        window.sort_unstable();
        if window.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("window {:?} repeats a vertex", &seq[i..=i + d])));
        }
    }
    let mut edges = g.edges().to_vec();
    for i in 0..d {
        for j in d..(i + d + 1).min(2 * d) {
            edges.push((seq[i], seq[j]));
        }
    }
    let h = Graph::new(g.vertex_count(), &edges)?;
    let ind_g = independence_complex(g, limits)?;
    let faces: Vec<&[u32]> = ind_g
        .faces()
        .filter(|sigma| (0..=d).any(|s| seq[s..s + d].iter().all(|x| !sigma.contains(x))))
        .collect();
    let l = SimplicialComplex::from_faces(g.vertex_count(), &faces)?;
    let equal = l == independence_complex(&h, limits)?;
    Ok(ExtendedGraph { graph: h, l, equal })
}

/// `G` restricted to the labelled vertices `labels`, vertex `i` of the
/// result standing for `labels[i]`.
fn restrict_by_labels(lg: &LabelledGraph, labels: &[i64]) -> Result<(Graph, Vec<u32>)> {
    let idx = lg.indices_of(labels)?;
    let mut edges = Vec::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if lg.graph.has_edge(idx[a], idx[b]) {
                edges.push((a as u32, b as u32));
            }
        }
    }
    Ok((Graph::new(idx.len(), &edges)?, idx))
}

/// Re-expresses a complex on `old` vertex indices via `positions[old]`.
fn reindex(k: &SimplicialComplex, positions: &[Option<u32>], vertex_count: usize) -> Result<SimplicialComplex> {
    let faces = k
        .faces()
        .map(|f| {
            f.iter()
                .map(|&x| positions[x as usize].ok_or(Error::Precondition(format!("vertex {x} has no image"))))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_faces(vertex_count, &faces)
}

/// `ind(T_{n,k})` against the suspension of `ind(S_{n,k})`, including the
/// identification of the star cluster of vertex 0 with `ind(S_{n,k})`.
/// Requires `n >= 3k − 1` and `n >= k + 3`.
pub fn validate_circular_suspension(n: usize, k: usize, limits: &Limits) -> Result<TheoremReport> {
    let params = CircularParams::new(n, k)?;
    let r = params.r() as i64;
    if n + 1 < 3 * k || r < 1 {
        return Err(Error::Precondition(format!("need n >= 3k - 1 and n >= k + 3, got n={n}, k={k}")));
    }
    let t = circular_complete(n, k)?;
    let s = s_graph(n, k)?;
    let p_t = integer_homology(&independence_complex(&t, limits)?)?;
    let p_s = integer_homology(&independence_complex(&s.graph, limits)?)?;
    let shift_ok = p_t == p_s.suspend();

    // V = {±1, …, ±r} in label order, and the star cluster of 0 on it
    let labels = s.labels.clone();
    let (g_v, _) = restrict_by_labels(&LabelledGraph { graph: relabel_circular(&t, n, &labels)?, labels: labels.clone() }, &labels)?;
    let cluster = star_cluster(&t, 0, limits)?;
    let mut positions = vec![None; n];
    for (i, &lab) in labels.iter().enumerate() {
        positions[lab.rem_euclid(n as i64) as usize] = Some(i as u32);
    }
    let cluster_v = reindex(&cluster, &positions, labels.len())?;
    let seq_labels: Vec<i64> = (-(k as i64 - 1)..=-1).chain(1..k as i64).collect();
    let seq = s.indices_of(&seq_labels)?;
    let ext = extended_graph(&g_v, &seq, limits)?;
    let h_is_s = ext.graph == s.graph;
    let cluster_is_l = cluster_v == ext.l;
    let cluster_ok = p_t == integer_homology(&cluster_v)?.suspend();
    let ok = shift_ok && ext.equal && h_is_s && cluster_is_l && cluster_ok;
    let evidence = json!({
        "ind_t": profile_json(&p_t),
        "ind_s": profile_json(&p_s),
        "suspension_shift": shift_ok,
        "window_complex_equals_ind_h": ext.equal,
        "h_equals_s_graph": h_is_s,
        "star_cluster_equals_window_complex": cluster_is_l,
        "star_cluster_suspension": cluster_ok,
    });
    Ok(TheoremReport::decide("circular-suspension", json!({"n": n, "k": k}), evidence.clone(), ok, || evidence)
        .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// The circular complete graph with vertices reindexed in label order
/// (`labels[i]` read modulo `n`), restricted to those labels.
fn relabel_circular(t: &Graph, n: usize, labels: &[i64]) -> Result<Graph> {
    let res: Vec<u32> = labels.iter().map(|l| l.rem_euclid(n as i64) as u32).collect();
    let mut edges = Vec::new();
    for a in 0..res.len() {
        for b in a + 1..res.len() {
            if t.has_edge(res[a], res[b]) {
                edges.push((a as u32, b as u32));
            }
        }
    }
    Graph::new(res.len(), &edges)
}

/// A rotation or reflection `i ↦ ±i + shift (mod m)` carrying `h` onto
/// `target`, preferring the identity.
fn dihedral_match(h: &Graph, target: &Graph) -> Option<(usize, bool)> {
    let m = h.vertex_count();
    if m != target.vertex_count() {
        return None;
    }
    for reflect in [false, true] {
        for shift in 0..m {
            let perm: Vec<u32> = (0..m)
                .map(|i| {
                    let base = if reflect { (m - i) % m } else { i };
                    ((base + shift) % m) as u32
                })
                .collect();
            if h.relabel(&perm).ok().as_ref() == Some(target) {
                return Some((shift, reflect));
            }
        }
    }
    None
}

/// `ind(S_{n,k})` against the suspension of `ind(T_{n−2(k+1),k})` through
/// the star cluster of vertex −1. Requires `n >= 3k + 3`.
pub fn validate_sgraph_suspension(n: usize, k: usize, limits: &Limits) -> Result<TheoremReport> {
    let params = CircularParams::new(n, k)?;
    if n < 3 * k + 3 {
        return Err(Error::Precondition(format!("need n >= 3k + 3, got n={n}, k={k}")));
    }
    let r = params.r() as i64;
    let ki = k as i64;
    let s = s_graph(n, k)?;
    let minus_one = s.index_of(-1).expect("r >= 1");
    let cluster = star_cluster(&s.graph, minus_one, limits)?;
    // the vertices non-adjacent to −1, in the cyclic order they inherit
    let v_labels: Vec<i64> = (ki..r).chain(-r..=-2).collect();
    let (g_v, idx) = restrict_by_labels(&s, &v_labels)?;
    let mut positions = vec![None; s.graph.vertex_count()];
    for (i, &x) in idx.iter().enumerate() {
        positions[x as usize] = Some(i as u32);
    }
    let cluster_v = reindex(&cluster, &positions, v_labels.len())?;
    let seq_labels: Vec<i64> = (-ki..=-2).chain(-r..=-r + (ki - 2)).collect();
    let seq: Vec<u32> = seq_labels
        .iter()
        .map(|l| v_labels.iter().position(|x| x == l).map(|p| p as u32))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::Precondition("sequence leaves the vertex set".into()))?;
    let ext = extended_graph(&g_v, &seq, limits)?;
    let m = n - 2 * (k + 1);
    let target = circular_complete(m, k)?;
    let iso = dihedral_match(&ext.graph, &target);
    let p_s = integer_homology(&independence_complex(&s.graph, limits)?)?;
    let p_t = integer_homology(&independence_complex(&target, limits)?)?;
    let shift_ok = p_s == p_t.suspend();
    let cluster_is_l = cluster_v == ext.l;
    let cluster_ok = p_s == integer_homology(&cluster_v)?.suspend();
    let ok = shift_ok && ext.equal && iso.is_some() && cluster_is_l && cluster_ok;
    let evidence = json!({
        "ind_s": profile_json(&p_s),
        "ind_t_smaller": profile_json(&p_t),
        "smaller_circular": {"n": m, "k": k},
        "suspension_shift": shift_ok,
        "window_complex_equals_ind_h": ext.equal,
        "h_isomorphism": iso.map(|(shift, reflect)| json!({"shift": shift, "reflect": reflect})),
        "star_cluster_equals_window_complex": cluster_is_l,
        "star_cluster_suspension": cluster_ok,
    });
    Ok(TheoremReport::decide("sgraph-suspension", json!({"n": n, "k": k}), evidence.clone(), ok, || evidence)
        .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// Both suspension recursions wherever their bounds allow.
pub fn validate_suspension_props(n: usize, k: usize, limits: &Limits) -> Result<TheoremReport> {
    let params = CircularParams::new(n, k)?;
    let first = (n + 1 >= 3 * k && params.r() >= 1).then(|| validate_circular_suspension(n, k, limits)).transpose()?;
    let second = (n >= 3 * k + 3).then(|| validate_sgraph_suspension(n, k, limits)).transpose()?;
    if first.is_none() && second.is_none() {
        return Err(Error::Precondition(format!("no suspension recursion applies to n={n}, k={k}")));
    }
    let ok = first.iter().chain(second.iter()).all(|r| r.passed());
    let evidence = json!({
        "circular": first.as_ref().map(|r| &r.evidence),
        "sgraph": second.as_ref().map(|r| &r.evidence),
    });
    Ok(TheoremReport::decide("suspension-recursions", json!({"n": n, "k": k}), evidence.clone(), ok, || evidence)
        .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// `ind(G)` against the suspension of the star cluster of `v`.
pub fn validate_star_cluster(g: &Graph, v: u32, limits: &Limits) -> Result<TheoremReport> {
    let cluster = star_cluster(g, v, limits)?;
    let p_ind = integer_homology(&independence_complex(g, limits)?)?;
    let p_k = integer_homology(&cluster)?;
    let ok = p_ind == p_k.suspend();
    let evidence = json!({"ind": profile_json(&p_ind), "star_cluster": profile_json(&p_k)});
    Ok(TheoremReport::decide(
        "star-cluster",
        json!({"graph": graph_json(g), "v": v}),
        evidence.clone(),
        ok,
        || evidence,
    )
    .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// One cell of the table of `cl(C_n^r)`.
pub fn validate_table_cell(n: usize, r: usize, tier: Tier, limits: &Limits) -> Result<TheoremReport> {
    let pred = predict_clique_cycle_power(n, r)?;
    let g = graph::power(&cycle(n)?, r as u32);
    let h = clique_homology(&g, tier, limits)?;
    let ok = h.matches(&pred);
    let evidence = json!({
        "predicted": pred.render(),
        "tier": h.tier,
        "profile": profile_json(&h.profile),
        "betti_mod2": h.betti_mod2,
        "faces": h.faces,
        "surviving_cells": h.surviving_cells,
    });
    Ok(TheoremReport::decide("table", json!({"n": n, "r": r}), evidence.clone(), ok, || evidence)
        .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// Every cell with `n` and `r` in the given ranges, in row-major order.
pub fn validate_table(
    n_range: std::ops::RangeInclusive<usize>,
    r_range: impl Fn(usize) -> std::ops::RangeInclusive<usize>,
    tier: Tier,
    limits: &Limits,
) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for n in n_range {
        for r in r_range(n) {
            out.push(validate_table_cell(n, r, tier, limits)?);
        }
    }
    Ok(out)
}

/// `ind(C_m)` against its three-way closed form.
pub fn validate_kozlov(m: usize, limits: &Limits) -> Result<TheoremReport> {
    let pred = predict_ind_cycle(m)?;
    let p = integer_homology(&independence_complex(&cycle(m)?, limits)?)?;
    let ok = homology::matches_wedge(&p, &pred);
    let evidence = json!({"predicted": pred.render(), "profile": profile_json(&p)});
    Ok(TheoremReport::decide("kozlov", json!({"m": m}), evidence.clone(), ok, || evidence).with_note(HOMOLOGY_LEVEL_NOTE))
}

/// For each `2 <= k <= r`: the girth matching on `cl(G^k)` is acyclic, its
/// critical faces are exactly `cl(G^{k−1})`, and the greedy collapse
/// reaches `cl(G^{k−1})`. Requires `girth(G) >= 3r + 1`.
pub fn validate_girth_collapse(g: &Graph, r: u32, limits: &Limits) -> Result<TheoremReport> {
    if r < 2 {
        return Err(Error::Precondition(format!("r must be at least 2, got {r}")));
    }
    if let Some(girth) = graph::girth(g) {
        if girth < 3 * r + 1 {
            return Err(Error::Precondition(format!("girth {girth} is below 3r+1 = {}", 3 * r + 1)));
        }
    }
    let mut steps = Vec::new();
    let mut failure = None;
    for k in 2..=r {
        let host = clique_complex(&graph::power(g, k), None, limits)?;
        let lower = clique_complex(&graph::power(g, k - 1), None, limits)?;
        let m = girth_matching(g, k)?;
        let verification = verify_matching(&host, &m)?;
        let acyclic = verification.is_ok();
        let critical_ok = acyclic
            && critical_faces(&host, &m)? == lower.faces().map(|f| f.to_vec()).collect::<Vec<_>>();
        let collapse = elementary_collapse(&host, &lower)?;
        steps.push(json!({
            "k": k,
            "pairs": m.len(),
            "acyclic": acyclic,
            "critical_equals_lower_power": critical_ok,
            "collapse_succeeded": collapse.success,
            "collapse_steps": collapse.log.len(),
        }));
        if failure.is_none() && !(acyclic && critical_ok && collapse.success) {
            failure = Some(match verification {
                Verification::Violation(v) => json!({"k": k, "violation": format!("{v:?}")}),
                Verification::Acyclic => json!({"k": k, "critical_equals_lower_power": critical_ok, "collapse": collapse.success}),
            });
        }
    }
    let params = json!({"graph": graph_json(g), "r": r});
    Ok(match failure {
        None => TheoremReport::pass("girth-collapse", params, json!({"steps": steps})),
        Some(c) => TheoremReport::fail("girth-collapse", params, json!({"steps": steps}), c),
    })
}

/// The girth bound is sharp: `cl(C_{3r}^r)` is a wedge of `r − 1`
/// two-spheres rather than a circle.
pub fn validate_girth_sharpness(r: usize, limits: &Limits) -> Result<TheoremReport> {
    if r < 2 {
        return Err(Error::Precondition(format!("r must be at least 2, got {r}")));
    }
    let pred = WedgePrediction::wedge(r - 1, 2);
    let h = clique_homology(&graph::power(&cycle(3 * r)?, r as u32), Tier::Exact, limits)?;
    let ok = h.matches(&pred);
    let evidence = json!({"predicted": pred.render(), "profile": profile_json(&h.profile)});
    Ok(TheoremReport::decide("girth-sharpness", json!({"r": r}), evidence.clone(), ok, || evidence)
        .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// `cl(T(G))` against `cl(G)` plus one 2-sphere per triangle, and for
/// connected graphs with an edge, `cl(L(G))` against the 2-skeleton of
/// `cl(G)`.
pub fn validate_total_and_line(g: &Graph, limits: &Limits) -> Result<TheoremReport> {
    let cl_g = clique_complex(g, None, limits)?;
    let p_g = integer_homology(&cl_g)?;
    let p_total = clique_homology(&families::total_graph(g), Tier::Exact, limits)?.profile;
    let triangles = g.triangle_count();
    let expected_total = p_g.add_spheres(2, triangles);
    let total_ok = p_total == expected_total;
    let line_applies = g.is_connected() && g.edge_count() > 0;
    let (line_ok, line_evidence) = if line_applies {
        let p_line = clique_homology(&families::line_graph(g)?, Tier::Exact, limits)?.profile;
        let p_skel = integer_homology(&cl_g.skeleton(2))?;
        (p_line == p_skel, json!({"line": profile_json(&p_line), "skeleton": profile_json(&p_skel)}))
    } else {
        (true, Value::Null)
    };
    let evidence = json!({
        "clique": profile_json(&p_g),
        "total": profile_json(&p_total),
        "triangles": triangles,
        "total_ok": total_ok,
        "line_applies": line_applies,
        "line_ok": line_ok,
        "line_profiles": line_evidence,
    });
    Ok(TheoremReport::decide(
        "total-and-line",
        json!({"graph": graph_json(g)}),
        evidence.clone(),
        total_ok && line_ok,
        || evidence,
    )
    .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// `cl(G_s^r)` against `K` for `1 <= r < 2^{s−2}`, where `G_s` is the
/// one-skeleton of the `s`-th barycentric subdivision of `K`.
pub fn validate_universality(k: &SimplicialComplex, s: u32, r: u32, limits: &Limits) -> Result<TheoremReport> {
    if r < 1 || s < 2 || r as u64 >= 1u64 << (s - 2) {
        return Err(Error::Precondition(format!("need 1 <= r < 2^(s-2), got s={s}, r={r}")));
    }
    let gs = families::subdivided_skeleton(k, s, limits)?;
    let p_k = integer_homology(k)?;
    let h = clique_homology(&graph::power(&gs.graph, r), Tier::Exact, limits)?;
    let ok = h.profile == p_k;
    let evidence = json!({
        "complex": profile_json(&p_k),
        "power_clique_complex": profile_json(&h.profile),
        "graph_vertices": gs.graph.vertex_count(),
        "faces": h.faces,
    });
    Ok(TheoremReport::decide(
        "universality",
        json!({"facets": k.facets(), "s": s, "r": r}),
        evidence.clone(),
        ok,
        || evidence,
    )
    .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// Inside `G_s[B_u ∪ B_v]`, the distance from `B_u ∩ S_v` to `S_u ∩ B_v`
/// is exactly `2^s` for every edge `uv` of `K`.
pub fn validate_distance_lemma(k: &SimplicialComplex, s: u32, u: u32, v: u32, limits: &Limits) -> Result<TheoremReport> {
    if s < 1 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    if u == v || !k.contains(&[u, v]) {
        return Err(Error::Precondition(format!("{{{u}, {v}}} is not an edge of the complex")));
    }
    let gs = families::subdivided_skeleton(k, s, limits)?;
    let (b_u, s_u) = families::balls_and_spheres(&gs, u)?;
    let (b_v, s_v) = families::balls_and_spheres(&gs, v)?;
    let n = gs.graph.vertex_count();
    let mark = |set: &[u32]| {
        let mut m = vec![false; n];
        for &x in set {
            m[x as usize] = true;
        }
        m
    };
    let (in_bu, in_su, in_bv, in_sv) = (mark(&b_u), mark(&s_u), mark(&b_v), mark(&s_v));
    let sources: Vec<u32> = (0..n as u32).filter(|&x| in_bu[x as usize] && in_sv[x as usize]).collect();
    let targets: Vec<u32> = (0..n as u32).filter(|&x| in_su[x as usize] && in_bv[x as usize]).collect();
    let dist = graph::multi_source_bfs(&gs.graph, sources.iter().copied(), |x| in_bu[x as usize] || in_bv[x as usize]);
    let found = targets.iter().filter_map(|&t| dist[t as usize]).min();
    let expected = 1u32 << s;
    let evidence = json!({
        "distance": found,
        "expected": expected,
        "sources": sources.len(),
        "targets": targets.len(),
    });
    Ok(TheoremReport::decide(
        "ball-distance",
        json!({"facets": k.facets(), "s": s, "u": u, "v": v}),
        evidence.clone(),
        found == Some(expected),
        || evidence,
    ))
}

/// `H₁(cl(G)) → H₁(cl(G^r))` is onto (over ℚ and small prime fields), the
/// abelian shadow of surjectivity on fundamental groups.
pub fn validate_h1_surjectivity(g: &Graph, r: u32, limits: &Limits) -> Result<TheoremReport> {
    let k = clique_complex(g, None, limits)?;
    let l = clique_complex(&graph::power(g, r), None, limits)?;
    let ok = homology::h1_inclusion_surjective(&k, &l)?;
    let evidence = json!({"surjective": ok});
    Ok(TheoremReport::decide(
        "h1-surjective",
        json!({"graph": graph_json(g), "r": r}),
        evidence.clone(),
        ok,
        || evidence,
    )
    .with_note("checks the induced map on first homology only, not on fundamental groups"))
}

/// On one graph: freedom from induced `C₄, C₅, C₆, S₃` forces the
/// clique-domination condition on `G²`, and the condition forces equal
/// homology of `cl(G)` and `cl(G²)`.
pub fn validate_square_condition(g: &Graph, limits: &Limits) -> Result<TheoremReport> {
    let free = graph::is_stability_free(g);
    let cond = check_square_condition(g);
    let (p_g, p_g2) = if cond.holds {
        (
            Some(clique_homology(g, Tier::Exact, limits)?.profile),
            Some(clique_homology(&graph::power(g, 2), Tier::Exact, limits)?.profile),
        )
    } else {
        (None, None)
    };
    let implication_ok = !free || cond.holds;
    let homology_ok = p_g == p_g2;
    let evidence = json!({
        "forbidden_subgraph_free": free,
        "condition_holds": cond.holds,
        "witness": cond.witness,
        "homology_equal": homology_ok,
    });
    Ok(TheoremReport::decide(
        "square-condition",
        json!({"graph": graph_json(g)}),
        evidence.clone(),
        implication_ok && homology_ok,
        || evidence,
    )
    .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// [`validate_square_condition`] over all labelled graphs on `n` vertices.
pub fn validate_square_condition_exhaustive(n: usize, limits: &Limits) -> Result<TheoremReport> {
    if n > 7 {
        return Err(Error::InvalidParams(format!("exhaustive search over {n} vertices is too large")));
    }
    let pairs: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
    let (mut free_count, mut cond_count, mut graphs) = (0usize, 0usize, 0usize);
    let mut failure = None;
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(u32, u32)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, &edges)?;
        let report = validate_square_condition(&g, limits)?;
        graphs += 1;
        free_count += (report.evidence["forbidden_subgraph_free"].as_bool() == Some(true)) as usize;
        cond_count += (report.evidence["condition_holds"].as_bool() == Some(true)) as usize;
        if !report.passed() {
            failure = Some(json!({"edges": edges, "evidence": report.evidence}));
            break;
        }
    }
    let evidence = json!({"graphs": graphs, "forbidden_subgraph_free": free_count, "condition_holds": cond_count});
    let params = json!({"n": n});
    Ok(match failure {
        None => TheoremReport::pass("square-condition-exhaustive", params, evidence),
        Some(c) => TheoremReport::fail("square-condition-exhaustive", params, evidence, c),
    }
    .with_note(HOMOLOGY_LEVEL_NOTE))
}

/// Dismantlability passes to powers: if `G` folds down to a vertex then so
/// does `G^r`.
pub fn validate_fold_power(g: &Graph, r: u32) -> Result<TheoremReport> {
    let base = graph::dismantle(g)?;
    let pow = graph::dismantle(&graph::power(g, r))?;
    let ok = base.is_none() || pow.is_some();
    let evidence = json!({"graph_dismantlable": base.is_some(), "power_dismantlable": pow.is_some()});
    Ok(TheoremReport::decide(
        "fold-power",
        json!({"graph": graph_json(g), "r": r}),
        evidence.clone(),
        ok,
        || evidence,
    ))
}

/// The two closed forms agree under `k = n − 2r − 1`, and the clique form
/// is invariant under the double suspension `(n, r) ↦ (4r − n, 3r − n)`.
pub fn validate_prediction_consistency(n_max: usize) -> Result<TheoremReport> {
    let mut complement_checks = 0usize;
    let mut shift_checks = 0usize;
    let mut failure = None;
    'outer: for n in 3..=n_max {
        for r in 0..n.div_ceil(2) {
            let k = n - 2 * r - 1;
            if k >= 1 {
                complement_checks += 1;
                let a = predict_clique_cycle_power(n, r)?;
                let b = predict_ind_circular(n, k)?;
                if a != b {
                    failure = Some(json!({"identity": "complement", "n": n, "r": r, "clique": a.render(), "ind": b.render()}));
                    break 'outer;
                }
            }
            if 3 * r >= n && 4 * r >= n + 3 {
                shift_checks += 1;
                let a = predict_clique_cycle_power(n, r)?;
                let b = predict_clique_cycle_power(4 * r - n, 3 * r - n)?.suspend(2);
                if a != b {
                    failure = Some(json!({"identity": "double-suspension", "n": n, "r": r, "big": a.render(), "small": b.render()}));
                    break 'outer;
                }
            }
        }
    }
    let evidence = json!({"complement_checks": complement_checks, "double_suspension_checks": shift_checks});
    let params = json!({"n_max": n_max});
    Ok(match failure {
        None => TheoremReport::pass("prediction-consistency", params, evidence),
        Some(c) => TheoremReport::fail("prediction-consistency", params, evidence, c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, random_graph, random_tree, three_sun};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn square_condition_examples() {
        for seed in 0..10 {
            assert!(check_square_condition(&random_tree(10, seed).unwrap()).holds);
        }
        // frozen regression values
        let sun = check_square_condition(&three_sun());
        assert_eq!(sun.witness, Some((0..6).collect()));
        let c6 = check_square_condition(&cycle(6).unwrap());
        assert!(!c6.holds);
        assert_eq!(c6.witness, Some(vec![0, 2, 4]));
    }

    #[test]
    fn star_cluster_examples() {
        let c5 = cycle(5).unwrap();
        let k = star_cluster(&c5, 0, &lim()).unwrap();
        assert_eq!(integer_homology(&k).unwrap().suspend().betti, vec![0, 1]);
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let k = star_cluster(&two_edges, 0, &lim()).unwrap();
        assert_eq!(k.facets(), vec![vec![2], vec![3]]);
        assert!(validate_star_cluster(&two_edges, 0, &lim()).unwrap().passed());
        assert!(star_cluster(&complete(3), 0, &lim()).is_err());
        assert!(star_cluster(&Graph::edgeless(3), 0, &lim()).is_err());
        let t92 = circular_complete(9, 2).unwrap();
        let k = star_cluster(&t92, 0, &lim()).unwrap();
        let ind_c6 = independence_complex(&cycle(6).unwrap(), &lim()).unwrap();
        assert_eq!(integer_homology(&k).unwrap(), integer_homology(&ind_c6).unwrap());
    }

    /// The star cluster from its definition `st(v) ∩ ⋃ st(w)`.
    fn star_cluster_by_definition(g: &Graph, v: u32) -> SimplicialComplex {
        let ind = independence_complex(g, &lim()).unwrap();
        let st_v = crate::complex::star(&ind, v).unwrap();
        let mut union: Option<SimplicialComplex> = None;
        for &w in g.neighbors(v) {
            let st_w = crate::complex::star(&ind, w).unwrap();
            union = Some(match union {
                None => st_w,
                Some(u) => u.union(&st_w).unwrap(),
            });
        }
        st_v.intersection(&union.unwrap()).unwrap()
    }

    #[test]
    fn star_cluster_matches_definition() {
        let mut checked = 0;
        for seed in 0..60 {
            let g = random_graph(8, 0.35, seed).unwrap();
            for v in g.vertices() {
                if let Ok(k) = star_cluster(&g, v, &lim()) {
                    assert_eq!(k, star_cluster_by_definition(&g, v), "seed {seed} v {v}");
                    assert!(validate_star_cluster(&g, v, &lim()).unwrap().passed());
                    checked += 1;
                }
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn extended_graph_examples() {
        let p3 = path(3).unwrap();
        let ext = extended_graph(&p3, &[0, 2], &lim()).unwrap();
        assert!(ext.graph.has_edge(0, 2));
        assert!(ext.equal);
        assert!(extended_graph(&p3, &[0, 0], &lim()).is_err());
        assert!(extended_graph(&p3, &[0, 1, 2], &lim()).is_err());
        // zero-length sequence: nothing added, L = ind(G)
        let ext = extended_graph(&p3, &[], &lim()).unwrap();
        assert_eq!(ext.graph, p3);
        assert!(ext.equal);
    }

    #[test]
    fn suspension_validators() {
        for (n, k) in [(9, 2), (14, 3), (7, 2), (11, 2), (10, 1)] {
            let rep = validate_suspension_props(n, k, &lim()).unwrap();
            assert!(rep.passed(), "{n} {k}: {}", rep.evidence);
        }
        let rep = validate_sgraph_suspension(14, 3, &lim()).unwrap();
        assert_eq!(rep.evidence["smaller_circular"], json!({"n": 6, "k": 3}));
        assert!(rep.evidence["h_isomorphism"].is_object());
        assert!(validate_sgraph_suspension(11, 3, &lim()).is_err());
        assert!(validate_suspension_props(4, 3, &lim()).is_err());
    }

    #[test]
    fn small_validators() {
        assert!(validate_kozlov(11, &lim()).unwrap().passed());
        assert!(validate_girth_collapse(&cycle(7).unwrap(), 2, &lim()).unwrap().passed());
        assert!(validate_girth_collapse(&cycle(6).unwrap(), 2, &lim()).is_err());
        assert!(validate_girth_sharpness(2, &lim()).unwrap().passed());
        assert!(validate_total_and_line(&complete(4), &lim()).unwrap().passed());
        assert!(validate_total_and_line(&Graph::edgeless(3), &lim()).unwrap().passed());
        assert!(validate_table_cell(12, 4, Tier::Exact, &lim()).unwrap().passed());
        assert!(validate_prediction_consistency(30).unwrap().passed());
        assert!(validate_h1_surjectivity(&cycle(6).unwrap(), 2, &lim()).unwrap().passed());
        assert!(validate_fold_power(&random_tree(9, 3).unwrap(), 3).unwrap().passed());
        let tri = SimplicialComplex::simplex(3);
        assert!(validate_distance_lemma(&tri, 1, 0, 1, &lim()).unwrap().passed());
        assert!(validate_distance_lemma(&tri, 1, 0, 0, &lim()).is_err());
        let circle = SimplicialComplex::boundary_of_simplex(3);
        assert!(validate_universality(&circle, 3, 1, &lim()).unwrap().passed());
        assert!(validate_universality(&circle, 3, 2, &lim()).is_err());
    }

    #[test]
    fn failing_reports_carry_counterexamples() {
        let rep = TheoremReport::decide("x", json!({}), json!({}), false, || json!({"why": 1}));
        assert!(!rep.passed());
        assert!(rep.counterexample.is_some());
    }
}
