//! Copy-wiring graphs and automorphism certificates.
//!
//! A wiring spec describes a graph of n + 1 complete-graph copies K_n with
//! exactly one edge between each pair of copies; D_{1,n} is the instance
//! whose pair {a, b} (a < b) uses position b - 1 on the a side and position
//! a on the b side. Vertex transitivity of every such graph is witnessed
//! constructively: a vertex is determined by its flag (copy, partner copy of
//! its unique external edge), any permutation of copy indices acts on flags,
//! and that action preserves adjacency regardless of the wiring choices.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;

/// A vertex of a wiring graph: (copy index 0..=n, position 0..n).
pub type CopyVertex = (u32, u32);

/// The flag of a vertex: its copy and the copy its unique external edge
/// leads to. Flags are in bijection with vertices, which is what makes
/// copy permutations act on vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    pub copy: u32,
    pub partner: u32,
}

/// n + 1 copies of K_n, one external edge per copy pair.
#[derive(Debug, Clone)]
pub struct HSpec {
    n: u32,
    /// pos_of[a][b]: position on the a side of the {a, b} edge (a != b).
    pos_of: Vec<Vec<u32>>,
    /// partner_of[a][p]: the copy reached from position p of copy a.
    partner_of: Vec<Vec<u32>>,
    graph: Graph,
}

impl HSpec {
    /// Builds a spec from explicit wiring choices: for every pair (a, b)
    /// with a < b, the endpoint positions (on the a side, on the b side).
    /// Rejects incomplete wirings and any copy that reuses a position.
    pub fn from_wiring(n: u32, wiring: &BTreeMap<(u32, u32), (u32, u32)>) -> Result<HSpec> {
        if n < 2 {
            return Err(Error::parameter(format!("n must be at least 2, got {n}")));
        }
        let copies = n as usize + 1;
        let expected_pairs = copies * (copies - 1) / 2;
        if wiring.len() != expected_pairs {
            return Err(Error::parameter(format!(
                "wiring has {} pairs, {} copies need {}",
                wiring.len(),
                copies,
                expected_pairs
            )));
        }

        let mut pos_of = vec![vec![u32::MAX; copies]; copies];
        for (&(a, b), &(pa, pb)) in wiring {
            if a >= b || b as usize >= copies {
                return Err(Error::parameter(format!(
                    "wiring key ({a}, {b}) is not an ordered pair of copies 0..={n}"
                )));
            }
            if pa >= n || pb >= n {
                return Err(Error::parameter(format!(
                    "wiring positions ({pa}, {pb}) for pair ({a}, {b}) must be below n = {n}"
                )));
            }
            pos_of[a as usize][b as usize] = pa;
            pos_of[b as usize][a as usize] = pb;
        }

        let mut partner_of = vec![vec![u32::MAX; n as usize]; copies];
        for a in 0..copies {
            for b in 0..copies {
                if a == b {
                    continue;
                }
                let p = pos_of[a][b] as usize;
                if partner_of[a][p] != u32::MAX {
                    return Err(Error::parameter(format!(
                        "copy {a} wires position {p} to both copy {} and copy {b}",
                        partner_of[a][p]
                    )));
                }
                partner_of[a][p] = b as u32;
            }
        }

        let n_us = n as usize;
        let mut edges = Vec::new();
        for c in 0..copies as u32 {
            for p in 0..n {
                for q in p + 1..n {
                    edges.push((c * n + p, c * n + q));
                }
            }
        }
        for a in 0..copies as u32 {
            for b in a + 1..copies as u32 {
                let pa = pos_of[a as usize][b as usize];
                let pb = pos_of[b as usize][a as usize];
                edges.push((a * n + pa, b * n + pb));
            }
        }
        let graph = Graph::from_edges(copies * n_us, &edges)?;

        Ok(HSpec { n, pos_of, partner_of, graph })
    }

    /// The wiring used by the recursive construction at depth 1: pair
    /// (a, b) with a < b sits at position b - 1 on the a side and position
    /// a on the b side.
    pub fn d1(n: u32) -> Result<HSpec> {
        let mut wiring = BTreeMap::new();
        for a in 0..=n {
            for b in a + 1..=n {
                wiring.insert((a, b), (b - 1, a));
            }
        }
        HSpec::from_wiring(n, &wiring)
    }

    /// A uniformly random valid wiring: every copy independently assigns its
    /// n positions to its n partner copies by a random bijection.
    pub fn random(n: u32, rng: &mut impl Rng) -> Result<HSpec> {
        if n < 2 {
            return Err(Error::parameter(format!("n must be at least 2, got {n}")));
        }
        let copies = n + 1;
        let mut assign: Vec<Vec<u32>> = Vec::with_capacity(copies as usize);
        for a in 0..copies {
            let mut positions: Vec<u32> = (0..n).collect();
            positions.shuffle(rng);
            // positions[i] is copy a's position for its i-th partner.
            let partners: Vec<u32> = (0..copies).filter(|&b| b != a).collect();
            let mut by_partner = vec![u32::MAX; copies as usize];
            for (i, &b) in partners.iter().enumerate() {
                by_partner[b as usize] = positions[i];
            }
            assign.push(by_partner);
        }
        let mut wiring = BTreeMap::new();
        for a in 0..copies {
            for b in a + 1..copies {
                wiring.insert((a, b), (assign[a as usize][b as usize], assign[b as usize][a as usize]));
            }
        }
        HSpec::from_wiring(n, &wiring)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn copies(&self) -> u32 {
        self.n + 1
    }

    pub fn vertex_count(&self) -> u32 {
        self.n * (self.n + 1)
    }

    /// Flat index of a vertex; for the depth-1 wiring this equals the uid of
    /// the label (copy, pos).
    pub fn vertex_index(&self, v: CopyVertex) -> u32 {
        v.0 * self.n + v.1
    }

    pub fn vertex_at(&self, index: u32) -> CopyVertex {
        (index / self.n, index % self.n)
    }

    fn check_vertex(&self, v: CopyVertex) -> Result<()> {
        if v.0 > self.n || v.1 >= self.n {
            return Err(Error::parameter(format!(
                "({}, {}) is not a vertex: copies are 0..={}, positions 0..{}",
                v.0, v.1, self.n, self.n
            )));
        }
        Ok(())
    }

    /// The wired endpoints of the pair {a, b}, returned as (a-side, b-side).
    pub fn wiring_endpoints(&self, a: u32, b: u32) -> Result<(CopyVertex, CopyVertex)> {
        if a >= b || b > self.n {
            return Err(Error::parameter(format!("({a}, {b}) is not an ordered copy pair")));
        }
        Ok(((a, self.pos_of[a as usize][b as usize]), (b, self.pos_of[b as usize][a as usize])))
    }

    /// The graph described by this wiring, on indices copy * n + position.
    pub fn induced_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn flag_of(&self, v: CopyVertex) -> Result<Flag> {
        self.check_vertex(v)?;
        Ok(Flag { copy: v.0, partner: self.partner_of[v.0 as usize][v.1 as usize] })
    }

    pub fn vertex_of(&self, flag: Flag) -> Result<CopyVertex> {
        if flag.copy > self.n || flag.partner > self.n || flag.copy == flag.partner {
            return Err(Error::parameter(format!(
                "({}, {}) is not a flag: needs two distinct copies 0..={}",
                flag.copy, flag.partner, self.n
            )));
        }
        Ok((flag.copy, self.pos_of[flag.copy as usize][flag.partner as usize]))
    }

    /// The automorphism induced by a permutation sigma of copy indices:
    /// transport each vertex along its flag, (c, q) to (sigma c, sigma q).
    ///
    /// This preserves adjacency for any wiring: internal edges stay internal
    /// because images share a copy, and the external edge of the pair {a, b}
    /// maps to the external edge of {sigma a, sigma b} because both of its
    /// endpoint flags do. The returned certificate is still re-verified
    /// edge by edge.
    pub fn induced_automorphism(&self, sigma: &[u32]) -> Result<Automorphism> {
        let copies = self.n as usize + 1;
        if sigma.len() != copies {
            return Err(Error::parameter(format!(
                "sigma permutes {} copies, got {} entries",
                copies,
                sigma.len()
            )));
        }
        let mut seen = vec![false; copies];
        for &c in sigma {
            if c as usize >= copies || seen[c as usize] {
                return Err(Error::parameter("sigma is not a permutation of the copies".to_string()));
            }
            seen[c as usize] = true;
        }

        let mut perm = vec![0u32; self.vertex_count() as usize];
        for copy in 0..=self.n {
            for pos in 0..self.n {
                let flag = self.flag_of((copy, pos))?;
                let image = self.vertex_of(Flag {
                    copy: sigma[flag.copy as usize],
                    partner: sigma[flag.partner as usize],
                })?;
                perm[self.vertex_index((copy, pos)) as usize] = self.vertex_index(image);
            }
        }
        let verified = is_automorphism(&self.graph, &perm)?;
        Ok(Automorphism {
            perm,
            provenance: Provenance::CopyPermutation { sigma: sigma.to_vec() },
            verified,
        })
    }

    /// A verified automorphism mapping u to v: complete the forced choices
    /// sigma(copy of u) = copy of v, sigma(partner of u) = partner of v by
    /// sending the remaining copies ascending to ascending.
    pub fn transitivity_map(&self, u: CopyVertex, v: CopyVertex) -> Result<Automorphism> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let fu = self.flag_of(u)?;
        let fv = self.flag_of(v)?;

        let copies = self.n as usize + 1;
        let mut sigma = vec![u32::MAX; copies];
        sigma[fu.copy as usize] = fv.copy;
        sigma[fu.partner as usize] = fv.partner;
        let mut targets: Vec<u32> = (0..=self.n).filter(|&c| c != fv.copy && c != fv.partner).collect();
        targets.reverse();
        for slot in sigma.iter_mut() {
            if *slot == u32::MAX {
                *slot = targets.pop().expect("counts match");
            }
        }

        let auto = self.induced_automorphism(&sigma)?;
        debug_assert_eq!(auto.apply(self.vertex_index(u)), self.vertex_index(v));
        Ok(auto)
    }

    /// Five-way classification of an ordered vertex pair by copy membership
    /// and where the two external edges lead. The tags name the sub-cases of
    /// the transitivity argument; they are mutually exclusive and cover
    /// every pair of distinct vertices.
    pub fn classify_pair(&self, u: CopyVertex, v: CopyVertex) -> Result<CaseTag> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::parameter("pair classification needs distinct vertices".to_string()));
        }
        if u.0 == v.0 {
            return Ok(CaseTag::SameCopy);
        }
        let fu = self.flag_of(u)?;
        let fv = self.flag_of(v)?;
        if fu.partner == v.0 && fv.partner == u.0 {
            // Both external edges are the {u.0, v.0} edge, so u and v are
            // its endpoints.
            return Ok(CaseTag::WiredPair);
        }
        if fu.partner == v.0 || fv.partner == u.0 {
            return Ok(CaseTag::PartnerInOtherCopy);
        }
        if fu.partner == fv.partner {
            return Ok(CaseTag::SharedThirdCopy);
        }
        Ok(CaseTag::FourCopies)
    }

    /// The literal two-copy swap from the transitivity argument's first
    /// sub-case, reproduced verbatim: given the wired pair (u, v) between
    /// copies i1 = u.0 and i2 = v.0, swap each vertex of K^{i1} with the
    /// vertex of K^{i2} whose external edge leads to the same third copy,
    /// and fix every other vertex.
    ///
    /// This map is generally NOT an automorphism: for x in K^{i1} with
    /// external partner p in a third copy, the image of the edge x -- p is
    /// f(x) -- p, but the only external edge at f(x) leads to p's copy, not
    /// to p itself. The returned certificate records the actual verification
    /// outcome rather than repairing the construction; use
    /// [`HSpec::transitivity_map`] for a map that verifies.
    pub fn literal_copy_swap(&self, u: CopyVertex, v: CopyVertex) -> Result<Automorphism> {
        if self.classify_pair(u, v)? != CaseTag::WiredPair {
            return Err(Error::parameter(
                "literal copy swap needs the wired pair between two copies".to_string(),
            ));
        }
        let (i1, i2) = (u.0, v.0);
        let mut perm: Vec<u32> = (0..self.vertex_count()).collect();
        for pos in 0..self.n {
            let x = (i1, pos);
            let fx = self.flag_of(x)?;
            // x's external edge leads to i2 exactly when x = u; pair x with
            // v itself in that case, otherwise with the i2 vertex wired to
            // the same third copy.
            let y = if fx.partner == i2 {
                v
            } else {
                self.vertex_of(Flag { copy: i2, partner: fx.partner })?
            };
            perm[self.vertex_index(x) as usize] = self.vertex_index(y);
            perm[self.vertex_index(y) as usize] = self.vertex_index(x);
        }
        let verified = is_automorphism(&self.graph, &perm)?;
        Ok(Automorphism { perm, provenance: Provenance::LiteralCopySwap { i1, i2 }, verified })
    }
}

/// How an automorphism certificate was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Flag action of a permutation of copy indices.
    CopyPermutation { sigma: Vec<u32> },
    /// Swap of two server indices inside a complete graph.
    Transposition { a: u32, b: u32 },
    /// Verbatim two-copy swap from the transitivity argument (see
    /// [`HSpec::literal_copy_swap`]); usually fails verification.
    LiteralCopySwap { i1: u32, i2: u32 },
    /// Found by backtracking search.
    Search,
}

/// Result of checking a permutation against a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Pass,
    /// The first edge (by ascending endpoints) whose image is not an edge.
    Fail { edge: (u32, u32) },
}

impl Verification {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verification::Pass)
    }
}

/// A vertex permutation together with where it came from and whether it
/// verified. Constructors in this crate always set `verified` from an
/// actual edge-by-edge check, never from intent.
#[derive(Debug, Clone)]
pub struct Automorphism {
    perm: Vec<u32>,
    provenance: Provenance,
    verified: Verification,
}

impl Automorphism {
    pub fn new(perm: Vec<u32>, provenance: Provenance, graph: &Graph) -> Result<Automorphism> {
        let verified = is_automorphism(graph, &perm)?;
        Ok(Automorphism { perm, provenance, verified })
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.perm[v as usize]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn verified(&self) -> Verification {
        self.verified
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Wire format: an array of (source label, image label) pairs, using
    /// the caller's vertex labeling.
    pub fn to_label_pairs(&self, labels: &[VertexLabel]) -> Vec<(VertexLabel, VertexLabel)> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, &p)| (labels[i].clone(), labels[p as usize].clone()))
            .collect()
    }
}

/// Checks whether `perm` is an automorphism of `graph`: a permutation of the
/// vertices mapping every edge to an edge. (A bijection mapping edges into
/// edges is automatically onto the edge set, so non-edges need no separate
/// check.) Fails early with the first violated edge.
pub fn is_automorphism(graph: &Graph, perm: &[u32]) -> Result<Verification> {
    let n = graph.vertex_count();
    if perm.len() != n {
        return Err(Error::parameter(format!(
            "permutation has {} entries, graph has {} vertices",
            perm.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p as usize >= n || seen[p as usize] {
            return Err(Error::parameter("map is not a permutation of the vertices".to_string()));
        }
        seen[p as usize] = true;
    }
    for (a, b) in graph.edges() {
        if !graph.has_edge(perm[a as usize], perm[b as usize]) {
            return Ok(Verification::Fail { edge: (a, b) });
        }
    }
    Ok(Verification::Pass)
}

/// Sub-cases of the transitivity argument for a pair of distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    /// Different copies, u and v are the wired pair between them (1.1).
    WiredPair,
    /// Different copies, exactly one external edge lands in the other's
    /// copy (1.2.1).
    PartnerInOtherCopy,
    /// Different copies, both external edges lead to one third copy (1.2.2).
    SharedThirdCopy,
    /// Different copies, external edges lead to two further distinct copies
    /// (1.2.3).
    FourCopies,
    /// Same copy (2).
    SameCopy,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            CaseTag::WiredPair => "1.1",
            CaseTag::PartnerInOtherCopy => "1.2.1",
            CaseTag::SharedThirdCopy => "1.2.2",
            CaseTag::FourCopies => "1.2.3",
            CaseTag::SameCopy => "2",
        };
        f.write_str(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn d1_wiring_matches_pairwise_rule() {
        let h = HSpec::d1(2).unwrap();
        assert_eq!(h.wiring_endpoints(0, 1).unwrap(), ((0, 0), (1, 0)));
        assert_eq!(h.wiring_endpoints(0, 2).unwrap(), ((0, 1), (2, 0)));
        assert_eq!(h.wiring_endpoints(1, 2).unwrap(), ((1, 1), (2, 1)));
    }

    #[test]
    fn d1_induced_graph_equals_materialized_depth_one() {
        use crate::params::Params;
        use crate::topology::{Topology, DEFAULT_VERTEX_BUDGET};
        for n in [2, 3, 4] {
            let h = HSpec::d1(n).unwrap();
            let t = Topology::build(&Params::new(1, n).unwrap(), DEFAULT_VERTEX_BUDGET).unwrap();
            // Vertex (copy, pos) has flat index copy * n + pos = uid of the
            // label (copy, pos), so the graphs must agree index by index.
            assert_eq!(h.induced_graph(), t.graph(), "n = {n}");
        }
    }

    #[test]
    fn flags_are_a_bijection() {
        let mut rng = StdRng::seed_from_u64(7);
        for spec in [HSpec::d1(4).unwrap(), HSpec::random(4, &mut rng).unwrap()] {
            let mut seen = std::collections::HashSet::new();
            for copy in 0..=4 {
                for pos in 0..4 {
                    let flag = spec.flag_of((copy, pos)).unwrap();
                    assert_ne!(flag.copy, flag.partner);
                    assert_eq!(spec.vertex_of(flag).unwrap(), (copy, pos));
                    seen.insert((flag.copy, flag.partner));
                }
            }
            assert_eq!(seen.len(), 20);
        }
    }

    #[test]
    fn rejects_position_reuse() {
        // Copy 0 wires position 0 to both other copies.
        let mut wiring = BTreeMap::new();
        wiring.insert((0, 1), (0, 0));
        wiring.insert((0, 2), (0, 0));
        wiring.insert((1, 2), (1, 1));
        assert!(HSpec::from_wiring(2, &wiring).is_err());
    }

    #[test]
    fn rejects_incomplete_wiring() {
        let mut wiring = BTreeMap::new();
        wiring.insert((0, 1), (0, 0));
        assert!(HSpec::from_wiring(2, &wiring).is_err());
    }

    #[test]
    fn induced_map_of_a_copy_swap_is_a_hexagon_reflection() {
        let h = HSpec::d1(2).unwrap();
        let auto = h.induced_automorphism(&[0, 2, 1]).unwrap();
        assert!(auto.verified().is_pass());
        assert!(!auto.is_identity());

        // The hexagon in index order is 0-1-4-5-3-2-0; its automorphisms are
        // the 6 rotations and 6 reflections of that ring.
        let ring = [0u32, 1, 4, 5, 3, 2];
        let mut dihedral = Vec::new();
        for s in 0..6 {
            let mut rot = vec![0u32; 6];
            let mut refl = vec![0u32; 6];
            for i in 0..6 {
                rot[ring[i] as usize] = ring[(i + s) % 6];
                refl[ring[i] as usize] = ring[(s + 6 - i) % 6];
            }
            dihedral.push((rot, true));
            dihedral.push((refl, false));
        }
        let found = dihedral.iter().find(|(p, _)| p == auto.perm());
        let (_, is_rotation) = found.expect("image must be a hexagon symmetry");
        assert!(!is_rotation, "a copy swap reverses the ring orientation");
    }

    #[test]
    fn induced_maps_compose_like_their_copy_permutations() {
        let h = HSpec::d1(4).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let mut sigma: Vec<u32> = (0..=4).collect();
            let mut tau: Vec<u32> = (0..=4).collect();
            sigma.shuffle(&mut rng);
            tau.shuffle(&mut rng);
            let composed: Vec<u32> = (0..=4).map(|i| sigma[tau[i as usize] as usize]).collect();

            let fs = h.induced_automorphism(&sigma).unwrap();
            let ft = h.induced_automorphism(&tau).unwrap();
            let fc = h.induced_automorphism(&composed).unwrap();
            let pointwise: Vec<u32> =
                (0..h.vertex_count()).map(|v| fs.apply(ft.apply(v))).collect();
            assert_eq!(pointwise, fc.perm());
        }
    }

    #[test]
    fn transitivity_map_example() {
        let h = HSpec::d1(2).unwrap();
        let auto = h.transitivity_map((0, 0), (0, 1)).unwrap();
        match auto.provenance() {
            Provenance::CopyPermutation { sigma } => assert_eq!(sigma, &[0, 2, 1]),
            other => panic!("unexpected provenance {other:?}"),
        }
        assert!(auto.verified().is_pass());
        assert_eq!(auto.apply(h.vertex_index((0, 0))), h.vertex_index((0, 1)));
    }

    #[test]
    fn transitivity_map_fixing_a_vertex_may_still_move_others() {
        let h = HSpec::d1(3).unwrap();
        let auto = h.transitivity_map((1, 0), (1, 0)).unwrap();
        assert!(auto.verified().is_pass());
        assert_eq!(auto.apply(h.vertex_index((1, 0))), h.vertex_index((1, 0)));
    }

    #[test]
    fn all_pairs_receive_certificates_even_on_random_wirings() {
        let mut rng = StdRng::seed_from_u64(3);
        let spec = HSpec::random(3, &mut rng).unwrap();
        for u in 0..spec.vertex_count() {
            for v in 0..spec.vertex_count() {
                let auto = spec.transitivity_map(spec.vertex_at(u), spec.vertex_at(v)).unwrap();
                assert!(auto.verified().is_pass());
                assert_eq!(auto.apply(u), v);
            }
        }
    }

    #[test]
    fn classification_covers_all_five_cases_at_n4() {
        let h = HSpec::d1(4).unwrap();
        let mut counts: BTreeMap<CaseTag, u32> = BTreeMap::new();
        for u in 0..h.vertex_count() {
            for v in 0..h.vertex_count() {
                if u == v {
                    continue;
                }
                let tag = h.classify_pair(h.vertex_at(u), h.vertex_at(v)).unwrap();
                *counts.entry(tag).or_insert(0) += 1;
            }
        }
        assert_eq!(counts[&CaseTag::WiredPair], 20);
        assert_eq!(counts[&CaseTag::PartnerInOtherCopy], 120);
        assert_eq!(counts[&CaseTag::SharedThirdCopy], 60);
        assert_eq!(counts[&CaseTag::FourCopies], 120);
        assert_eq!(counts[&CaseTag::SameCopy], 60);
    }

    #[test]
    fn three_copies_cannot_realize_four_copy_pairs() {
        let h = HSpec::d1(2).unwrap();
        for u in 0..h.vertex_count() {
            for v in 0..h.vertex_count() {
                if u == v {
                    continue;
                }
                let tag = h.classify_pair(h.vertex_at(u), h.vertex_at(v)).unwrap();
                assert_ne!(tag, CaseTag::FourCopies);
            }
        }
    }

    #[test]
    fn classify_pair_rejects_equal_vertices() {
        let h = HSpec::d1(2).unwrap();
        assert!(h.classify_pair((0, 0), (0, 0)).is_err());
    }

    #[test]
    fn literal_copy_swap_fails_verification_but_flag_action_passes() {
        // The verbatim two-copy swap breaks the external edges into third
        // copies; the flag action on the same pair verifies.
        let h = HSpec::d1(3).unwrap();
        let (u, v) = h.wiring_endpoints(0, 1).unwrap();
        let literal = h.literal_copy_swap(u, v).unwrap();
        match literal.verified() {
            Verification::Fail { edge: (a, b) } => {
                // The violated edge touches one of the swapped copies.
                assert!(h.vertex_at(a).0 <= 1 || h.vertex_at(b).0 <= 1);
            }
            Verification::Pass => panic!("the literal swap should not verify at n = 3"),
        }
        let flag_action = h.transitivity_map(u, v).unwrap();
        assert!(flag_action.verified().is_pass());
        assert_eq!(flag_action.apply(h.vertex_index(u)), h.vertex_index(v));
    }

    #[test]
    fn literal_copy_swap_requires_a_wired_pair() {
        let h = HSpec::d1(3).unwrap();
        assert!(h.literal_copy_swap((0, 0), (0, 1)).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        let g = Graph::complete(3);
        assert!(is_automorphism(&g, &[0, 1]).is_err());
        assert!(is_automorphism(&g, &[0, 0, 1]).is_err());
        assert!(is_automorphism(&g, &[0, 1, 3]).is_err());
    }

    #[test]
    fn detects_broken_edges_with_first_violation() {
        // Path 0-1-2, swap its endpoint 0 with its center 1: edge (0, 1)
        // survives, edge (1, 2) maps to the non-edge (0, 2).
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        match is_automorphism(&g, &[1, 0, 2]).unwrap() {
            Verification::Fail { edge } => assert_eq!(edge, (1, 2)),
            Verification::Pass => panic!("swap of a path endpoint with its center must fail"),
        }
    }
}
