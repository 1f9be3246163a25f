//! Reduced simplicial homology.
//!
//! Every computation works on the augmented chain complex (the empty face
//! sits in degree −1). Cells are first thinned out by free-pair reductions,
//! which are exact over any ring; the surviving boundary matrices go
//! through sparse unit-pivot elimination and, over the integers, a dense
//! Smith normal form of whatever does not reduce.

mod arith;
mod h1;
mod lattice;
mod reduce;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::complex::{self, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::limits::Limits;
use arith::{is_prime, to_u64, Fp, Q};
use lattice::{IndexedLattice, Lattice, MaskLattice};
use reduce::{reduce, Reduced, SparseCols};

/// Reduced Betti numbers and torsion coefficients, trimmed after the last
/// nontrivial degree. `betti[i]` and `torsion[i]` describe `H̃ᵢ`; the
/// degree −1 group (nonzero only for the empty complex) is kept apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub betti_minus_one: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl HomologyProfile {
    pub fn new(betti: Vec<usize>, torsion: Vec<Vec<u64>>, betti_minus_one: usize) -> HomologyProfile {
        let mut p = HomologyProfile { betti, torsion, betti_minus_one };
        p.normalise();
        p
    }

    fn normalise(&mut self) {
        let len = self.betti.len().max(self.torsion.len());
        self.betti.resize(len, 0);
        self.torsion.resize(len, Vec::new());
        while self.betti.last() == Some(&0) && self.torsion.last().is_some_and(|t| t.is_empty()) {
            self.betti.pop();
            self.torsion.pop();
        }
    }

    /// Trivial reduced homology.
    pub fn point() -> HomologyProfile {
        HomologyProfile::default()
    }

    /// Homology of a wedge of spheres.
    pub fn from_wedge(w: &WedgePrediction) -> HomologyProfile {
        HomologyProfile::new(w.betti(), Vec::new(), 0)
    }

    pub fn betti(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    pub fn torsion(&self, i: usize) -> &[u64] {
        self.torsion.get(i).map_or(&[], |t| t.as_slice())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(|t| t.is_empty())
    }

    pub fn is_trivial(&self) -> bool {
        self.betti.is_empty() && self.betti_minus_one == 0
    }

    /// `Σ (−1)ⁱ b̃ᵢ` over `i >= −1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let tail: i64 = self.betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        tail - self.betti_minus_one as i64
    }

    /// Homology of the suspension: every group moves up one degree.
    pub fn suspend(&self) -> HomologyProfile {
        let mut betti = vec![self.betti_minus_one];
        betti.extend_from_slice(&self.betti);
        let mut torsion = vec![Vec::new()];
        torsion.extend(self.torsion.iter().cloned());
        HomologyProfile::new(betti, torsion, 0)
    }

    /// Adds `count` to the Betti number in degree `dim`.
    pub fn add_spheres(&self, dim: usize, count: usize) -> HomologyProfile {
        let mut betti = self.betti.clone();
        if betti.len() <= dim {
            betti.resize(dim + 1, 0);
        }
        betti[dim] += count;
        HomologyProfile::new(betti, self.torsion.clone(), self.betti_minus_one)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "betti={:?}", self.betti)?;
        if !self.is_torsion_free() {
            write!(f, " torsion={:?}", self.torsion)?;
        }
        if self.betti_minus_one > 0 {
            write!(f, " betti[-1]={}", self.betti_minus_one)?;
        }
        Ok(())
    }
}

/// A formal wedge of spheres `⋁ (dimension, count)`; no summands means a
/// contractible space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgePrediction {
    summands: Vec<(usize, usize)>,
}

impl WedgePrediction {
    /// Merges equal dimensions, drops empty summands and sorts.
    pub fn new(summands: Vec<(usize, usize)>) -> WedgePrediction {
        let mut merged: Vec<(usize, usize)> = Vec::new();
        let mut s = summands;
        s.sort_unstable();
        for (d, c) in s {
            match merged.last_mut() {
                Some(last) if last.0 == d => last.1 += c,
                _ => merged.push((d, c)),
            }
        }
        merged.retain(|&(_, c)| c > 0);
        WedgePrediction { summands: merged }
    }

    pub fn point() -> WedgePrediction {
        WedgePrediction::default()
    }

    pub fn sphere(dim: usize) -> WedgePrediction {
        WedgePrediction::new(vec![(dim, 1)])
    }

    pub fn wedge(count: usize, dim: usize) -> WedgePrediction {
        WedgePrediction::new(vec![(dim, count)])
    }

    pub fn summands(&self) -> &[(usize, usize)] {
        &self.summands
    }

    pub fn is_contractible(&self) -> bool {
        self.summands.is_empty()
    }

    /// Raises every sphere by `times` dimensions.
    pub fn suspend(&self, times: usize) -> WedgePrediction {
        WedgePrediction { summands: self.summands.iter().map(|&(d, c)| (d + times, c)).collect() }
    }

    /// Reduced Betti numbers of the wedge.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.summands.last().map_or(0, |s| s.0 + 1)];
        for &(d, c) in &self.summands {
            b[d] += c;
        }
        b
    }

    /// `*`, `S^d`, `v^k S^d`, with several summands joined by ` v `.
    pub fn render(&self) -> String {
        if self.summands.is_empty() {
            return "*".to_string();
        }
        self.summands
            .iter()
            .map(|&(d, c)| if c == 1 { format!("S^{d}") } else { format!("v^{c} S^{d}") })
            .collect::<Vec<_>>()
            .join(" v ")
    }

    /// Inverse of [`WedgePrediction::render`].
    pub fn parse(s: &str) -> Result<WedgePrediction> {
        let bad = || Error::Parse { line: 0, msg: format!("not a wedge of spheres: {s:?}") };
        let s = s.trim();
        if s == "*" {
            return Ok(WedgePrediction::point());
        }
        let mut summands = Vec::new();
        for part in s.split(" v ") {
            let part = part.trim();
            let (count, sphere) = match part.strip_prefix("v^") {
                Some(rest) => {
                    let (c, sph) = rest.split_once(' ').ok_or_else(bad)?;
                    (c.parse::<usize>().map_err(|_| bad())?, sph.trim())
                }
                None => (1, part),
            };
            let dim = sphere.strip_prefix("S^").ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?;
            summands.push((dim, count));
        }
        Ok(WedgePrediction::new(summands))
    }
}

impl fmt::Display for WedgePrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// True iff the profile is torsion-free with Betti numbers equal to the
/// sphere counts of the wedge.
pub fn matches_wedge(profile: &HomologyProfile, pred: &WedgePrediction) -> bool {
    profile.betti_minus_one == 0 && profile.is_torsion_free() && profile.betti == pred.betti()
}

/// The boundary map from `dim`-faces to `(dim−1)`-faces in canonical face
/// order; `dim = 0` is the augmentation onto the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    /// Nonzero entries of each column as `(row, ±1)`, rows increasing.
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col].iter().find(|e| e.0 as usize == row).map_or(0, |e| e.1 as i64)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                m[i as usize][j] = x as i64;
            }
        }
        m
    }

    /// Whether `self ∘ upper` vanishes, `upper` being the next boundary map.
    pub fn composes_to_zero(&self, upper: &BoundaryMatrix) -> bool {
        let mut terms: Vec<(u32, i64)> = Vec::new();
        upper.columns.iter().all(|col| {
            terms.clear();
            for &(mid, x) in col {
                terms.extend(self.columns[mid as usize].iter().map(|&(r, y)| (r, x as i64 * y as i64)));
            }
            terms.sort_unstable_by_key(|t| t.0);
            terms.chunk_by(|a, b| a.0 == b.0).all(|run| run.iter().map(|t| t.1).sum::<i64>() == 0)
        })
    }
}

/// Boundary matrices in dimensions `0..=dim K`, the first being the
/// augmentation.
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<Vec<BoundaryMatrix>> {
    if k.is_void() {
        return Err(Error::Precondition("the void complex has no chain complex".into()));
    }
    let lat = IndexedLattice::new(k);
    let mut buf = Vec::new();
    Ok((1..lat.arities())
        .map(|a| {
            let columns = (0..lat.len(a))
                .map(|i| {
                    lat.boundary(a, i, &mut buf);
                    let mut col = buf.clone();
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            BoundaryMatrix { dim: a - 1, rows: lat.len(a - 1), cols: lat.len(a), columns }
        })
        .collect())
}

/// Invariant factors `d₁ | d₂ | …` (all positive) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithForm {
    let rows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let cols = (0..ncols)
        .map(|j| (0..rows).filter(|&i| a[i][j] != 0).map(|i| (i as u32, a[i][j])).collect())
        .collect();
    let invariants = snf::invariant_factors(&SparseCols { rows, cols });
    SmithForm { rank: invariants.len(), invariants }
}

fn integer_profile(red: &Reduced) -> Result<HomologyProfile> {
    let arities = red.counts.len();
    let factors: Vec<Vec<BigInt>> =
        (0..arities).map(|a| if a == 0 { Vec::new() } else { snf::invariant_factors(&red.matrices[a]) }).collect();
    let rank = |a: usize| factors.get(a).map_or(0, |f| f.len());
    let betti_at = |a: usize| red.counts[a] - rank(a) - rank(a + 1);
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for a in 1..arities {
        betti.push(betti_at(a));
        let t = factors.get(a + 1).map_or(Ok(Vec::new()), |f| {
            f.iter().filter(|x| !x.is_one()).map(to_u64).collect::<Result<Vec<u64>>>()
        })?;
        torsion.push(t);
    }
    let minus_one = if arities > 0 { betti_at(0) } else { 0 };
    Ok(HomologyProfile::new(betti, torsion, minus_one))
}

fn field_betti<A: arith::Arith>(ar: &A, red: &Reduced) -> (usize, Vec<usize>) {
    let arities = red.counts.len();
    let ranks: Vec<usize> =
        (0..arities).map(|a| if a == 0 { 0 } else { snf::field_rank(ar, &red.matrices[a]) }).collect();
    let rank = |a: usize| ranks.get(a).copied().unwrap_or(0);
    let betti_at = |a: usize| red.counts[a] - rank(a) - rank(a + 1);
    let mut betti: Vec<usize> = (1..arities).map(betti_at).collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    (if arities > 0 { betti_at(0) } else { 0 }, betti)
}

fn require_nonvoid(k: &SimplicialComplex) -> Result<()> {
    if k.is_void() {
        Err(Error::Precondition("homology of the void complex is undefined".into()))
    } else {
        Ok(())
    }
}

/// Reduced integral homology.
pub fn integer_homology(k: &SimplicialComplex) -> Result<HomologyProfile> {
    require_nonvoid(k)?;
    integer_profile(&reduce(&IndexedLattice::new(k)))
}

/// Reduced Betti numbers over the field with `p` elements, trimmed after
/// the last nonzero degree (degree −1 omitted).
pub fn betti_mod_p(k: &SimplicialComplex, p: u64) -> Result<Vec<usize>> {
    require_nonvoid(k)?;
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::InvalidParams(format!("{p} is not a prime below 2^32")));
    }
    Ok(field_betti(&Fp { p }, &reduce(&IndexedLattice::new(k))).1)
}

/// Reduced rational Betti numbers, trimmed like [`betti_mod_p`].
pub fn rational_betti(k: &SimplicialComplex) -> Result<Vec<usize>> {
    require_nonvoid(k)?;
    Ok(field_betti(&Q, &reduce(&IndexedLattice::new(k))).1)
}

/// Whether `H₁(K) → H₁(L)` induced by inclusion is onto over ℚ and over
/// the fields with 2, 3 and 5 elements.
pub fn h1_inclusion_surjective(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<bool> {
    if k.vertex_count() != l.vertex_count() {
        return Err(Error::VertexCountMismatch(k.vertex_count(), l.vertex_count()));
    }
    if let Some(missing) = k.first_face_missing_from(l) {
        return Err(Error::NotSubcomplex(missing));
    }
    Ok(h1::surjective_over(&Q, k, l) && [2, 3, 5].iter().all(|&p| h1::surjective_over(&Fp { p }, k, l)))
}

/// How a homology computation certifies its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Integer Smith normal form: Betti numbers and torsion.
    Exact,
    /// Rational and mod-2 Betti numbers; equality of the two rules out
    /// 2-torsion, and other torsion is not computed.
    Field,
    /// `Exact` up to the face threshold in [`Limits`], `Field` above it.
    Auto,
}

/// Result of [`clique_homology`] or [`complex_homology`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyComputation {
    /// `Exact` or `Field`, never `Auto`.
    pub tier: Tier,
    /// For the field tier: rational Betti numbers, torsion not computed.
    pub profile: HomologyProfile,
    pub betti_mod2: Option<Vec<usize>>,
    /// Faces of the complex actually built (after folding).
    pub faces: usize,
    /// Cells left after free-pair reduction.
    pub surviving_cells: usize,
    /// Vertices removed by folds before the complex was built.
    pub folded_vertices: usize,
}

impl HomologyComputation {
    /// Profile matches the wedge; for the field tier the mod-2 Betti numbers
    /// must agree as well.
    pub fn matches(&self, pred: &WedgePrediction) -> bool {
        matches_wedge(&self.profile, pred) && self.betti_mod2.as_ref().is_none_or(|b| *b == self.profile.betti)
    }
}

fn compute<L: Lattice>(lat: &L, tier: Tier, limits: &Limits, folded: usize) -> Result<HomologyComputation> {
    let faces = lat.total();
    let tier = match tier {
        Tier::Auto if faces > limits.exact_tier_faces => Tier::Field,
        Tier::Auto => Tier::Exact,
        t => t,
    };
    let red = reduce(lat);
    let surviving_cells = red.counts.iter().sum();
    let (profile, betti_mod2) = match tier {
        Tier::Exact => (integer_profile(&red)?, None),
        _ => {
            let (m1, betti) = field_betti(&Q, &red);
            let (_, mod2) = field_betti(&Fp { p: 2 }, &red);
            (HomologyProfile::new(betti, Vec::new(), m1), Some(mod2))
        }
    };
    Ok(HomologyComputation { tier, profile, betti_mod2, faces, surviving_cells, folded_vertices: folded })
}

/// Homology of `cl(G)`. Dominated vertices are folded away first (each
/// fold is a collapse of the clique complex), then the clique complex of
/// what remains is built directly as a face lattice.
pub fn clique_homology(g: &Graph, tier: Tier, limits: &Limits) -> Result<HomologyComputation> {
    if g.vertex_count() == 0 {
        return complex_homology(&SimplicialComplex::empty(0), tier, limits);
    }
    let (steps, survivors) = graph::fold_greedily(g);
    let (h, _) = graph::induced(g, &survivors)?;
    if h.vertex_count() <= 64 {
        compute(&MaskLattice::clique_complex(&h, limits.face_limit)?, tier, limits, steps.len())
    } else {
        let k = complex::clique_complex(&h, None, limits)?;
        compute(&IndexedLattice::new(&k), tier, limits, steps.len())
    }
}

/// Homology of an arbitrary complex with tier selection.
pub fn complex_homology(k: &SimplicialComplex, tier: Tier, limits: &Limits) -> Result<HomologyComputation> {
    require_nonvoid(k)?;
    compute(&IndexedLattice::new(k), tier, limits, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, cone, independence_complex, suspension};
    use crate::families::{cycle, random_graph};
    use crate::graph::power;

    fn lim() -> Limits {
        Limits::default()
    }

    fn cl(g: &Graph) -> SimplicialComplex {
        clique_complex(g, None, &lim()).unwrap()
    }

    /// The 6-vertex real projective plane.
    fn rp2() -> SimplicialComplex {
        let f = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        SimplicialComplex::from_facets(6, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let edge = SimplicialComplex::simplex(2);
        let m = boundary_matrices(&edge).unwrap();
        assert_eq!(m[1].to_dense(), vec![vec![-1], vec![1]]);
        let oct = cl(&power(&cycle(6).unwrap(), 2));
        let ms = boundary_matrices(&oct).unwrap();
        assert_eq!(ms[2].cols, 8);
        for w in ms.windows(2) {
            assert!(w[0].composes_to_zero(&w[1]));
        }
        assert!(ms.iter().skip(1).all(|m| m.columns.iter().all(|c| c.len() == m.dim + 1)));
    }

    #[test]
    fn profiles_of_small_complexes() {
        let oct = cl(&power(&cycle(6).unwrap(), 2));
        assert_eq!(integer_homology(&oct).unwrap(), HomologyProfile::new(vec![0, 0, 1], vec![], 0));
        assert_eq!(integer_homology(&cl(&power(&cycle(7).unwrap(), 2))).unwrap().betti, vec![0, 1]);
        let ind9 = independence_complex(&cycle(9).unwrap(), &lim()).unwrap();
        assert_eq!(integer_homology(&ind9).unwrap().betti, vec![0, 0, 2]);
        let empty = integer_homology(&SimplicialComplex::empty(0)).unwrap();
        assert_eq!(empty.betti_minus_one, 1);
        assert!(integer_homology(&SimplicialComplex::void(0)).is_err());
    }

    #[test]
    fn projective_plane_torsion() {
        let p = integer_homology(&rp2()).unwrap();
        assert_eq!(p.betti, vec![0, 0]);
        assert_eq!(p.torsion, vec![vec![], vec![2]]);
        assert_eq!(betti_mod_p(&rp2(), 2).unwrap(), vec![0, 1, 1]);
        assert_eq!(betti_mod_p(&rp2(), 3).unwrap(), Vec::<usize>::new());
        assert_eq!(rational_betti(&rp2()).unwrap(), Vec::<usize>::new());
        assert!(!matches_wedge(&p, &WedgePrediction::sphere(2)));
        assert!(betti_mod_p(&rp2(), 4).is_err());
    }

    #[test]
    fn cones_and_suspensions() {
        for seed in 0..10 {
            let k = cl(&random_graph(7, 0.5, seed).unwrap());
            let h = integer_homology(&k).unwrap();
            assert!(integer_homology(&cone(&k, &lim()).unwrap()).unwrap().is_trivial());
            assert_eq!(integer_homology(&suspension(&k, &lim()).unwrap()).unwrap(), h.suspend());
            assert_eq!(h.reduced_euler_characteristic(), k.reduced_euler_characteristic());
            for p in [2, 3] {
                assert_eq!(betti_mod_p(&cone(&k, &lim()).unwrap(), p).unwrap(), Vec::<usize>::new());
            }
        }
    }

    #[test]
    fn wedge_rendering() {
        for s in ["*", "S^3", "v^2 S^2", "S^1 v v^3 S^4"] {
            assert_eq!(WedgePrediction::parse(s).unwrap().render(), s);
        }
        assert!(WedgePrediction::parse("S^").is_err());
        assert_eq!(WedgePrediction::new(vec![(2, 1), (2, 2), (0, 0)]), WedgePrediction::wedge(3, 2));
        assert!(matches_wedge(&HomologyProfile::point(), &WedgePrediction::point()));
        let s4 = HomologyProfile::new(vec![0, 0, 0, 0, 1], vec![], 0);
        assert!(matches_wedge(&s4, &WedgePrediction::sphere(4)));
        let json = serde_json::to_string(&s4).unwrap();
        assert_eq!(json, r#"{"betti":[0,0,0,0,1],"torsion":[[],[],[],[],[]]}"#);
    }

    #[test]
    fn clique_homology_tiers_agree() {
        for (n, r) in [(9, 3), (10, 4), (12, 4), (12, 6), (8, 1)] {
            let g = power(&cycle(n).unwrap(), r);
            let exact = clique_homology(&g, Tier::Exact, &lim()).unwrap();
            let field = clique_homology(&g, Tier::Field, &lim()).unwrap();
            assert_eq!(exact.profile.betti, field.profile.betti);
            assert_eq!(field.betti_mod2.as_ref(), Some(&exact.profile.betti));
            assert_eq!(exact.profile, integer_homology(&cl(&g)).unwrap());
        }
    }

    #[test]
    fn h1_examples() {
        let c6 = cycle(6).unwrap();
        let k = cl(&c6);
        assert!(h1_inclusion_surjective(&k, &k).unwrap());
        assert!(h1_inclusion_surjective(&k, &cl(&power(&c6, 2))).unwrap());
        // a circle into the disjoint union of two circles misses one
        let two = cycle(4).unwrap().disjoint_union(&cycle(4).unwrap());
        let one = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!h1_inclusion_surjective(&cl(&one), &cl(&two)).unwrap());
        assert!(h1_inclusion_surjective(&cl(&two), &cl(&one)).is_err());
    }
}
