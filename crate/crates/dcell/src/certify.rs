//! Vertex-transitivity certification.
//!
//! Two positive mechanisms (transposition certificates on complete graphs,
//! copy-permutation certificates on depth-1 wirings), one negative mechanism
//! (a pair of vertices with different six-cycle counts), and two partition
//! tools: cheap refinement by cycle-count invariants and exact orbit
//! computation by per-pair automorphism search.

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::cycles::{cycle_census_graph, cycles_through, witness_pair, CycleBackend};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::params::Params;
use crate::symmetry::{Automorphism, HSpec, Provenance};
use crate::topology::Topology;

/// Hard ceiling for the exact orbit engine: vertex sets are u128 bitsets.
pub const EXHAUSTIVE_VERTEX_CAP: usize = 128;

/// How a vertex partition was obtained. Refinement gives an upper bound on
/// symmetry (orbits refine every invariant partition); search gives the
/// exact orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionMethod {
    InvariantRefinement,
    ExhaustiveSearch,
}

/// A partition of the vertex indices; blocks and their contents ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    method: PartitionMethod,
    blocks: Vec<Vec<u32>>,
}

impl OrbitPartition {
    fn from_ids(method: PartitionMethod, ids: &[usize]) -> OrbitPartition {
        let block_count = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); block_count];
        for (vertex, &id) in ids.iter().enumerate() {
            blocks[id].push(vertex as u32);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        OrbitPartition { method, blocks }
    }

    pub fn method(&self) -> PartitionMethod {
        self.method
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, vertex: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&vertex).is_ok())
    }

    pub fn same_block(&self, a: u32, b: u32) -> bool {
        self.block_of(a).is_some() && self.block_of(a) == self.block_of(b)
    }

    /// True when `other` only merges blocks of `self`, never splits one.
    pub fn refines(&self, other: &OrbitPartition) -> bool {
        self.blocks.iter().all(|block| {
            let target = other.block_of(block[0]);
            target.is_some() && block.iter().all(|&v| other.block_of(v) == target)
        })
    }

    pub fn labeled_blocks(&self, topology: &Topology) -> Vec<Vec<VertexLabel>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&v| topology.label_of(v).clone()).collect())
            .collect()
    }
}

/// Partition of the vertices by their cycle-count signature across the given
/// lengths. Vertices in one orbit always share a signature, so any partition
/// with more than one block disproves vertex transitivity; the converse does
/// not hold.
pub fn invariant_partition(topology: &Topology, lengths: &[u32]) -> Result<OrbitPartition> {
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    lengths.dedup();

    let n = topology.vertex_count();
    let mut signatures: Vec<Vec<u64>> = vec![Vec::with_capacity(lengths.len()); n];
    for &length in &lengths {
        let census = cycle_census_graph(topology.graph(), length)?;
        for (v, sig) in signatures.iter_mut().enumerate() {
            sig.push(census.count_of(v as u32));
        }
    }

    let mut sorted: Vec<&Vec<u64>> = signatures.iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let ids: Vec<usize> = signatures
        .iter()
        .map(|sig| sorted.binary_search(&sig).expect("own signature is present"))
        .collect();
    Ok(OrbitPartition::from_ids(PartitionMethod::InvariantRefinement, &ids))
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Union keeping the smaller index as representative.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
        }
    }
}

/// Parallel color refinement of two copies of the graph, one with `u`
/// individualized and one with `v`. Both colorings draw ids from a shared
/// signature table, so equal ids mean structurally equal roles. Returns
/// None as soon as the color histograms diverge (no automorphism can map
/// u to v), otherwise the stable colorings.
fn paired_refinement(g: &Graph, u: u32, v: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.vertex_count();
    let mut cu = vec![0u32; n];
    let mut cv = vec![0u32; n];
    cu[u as usize] = 1;
    cv[v as usize] = 1;
    let mut classes = 2usize;

    let histogram = |c: &[u32], classes: usize| {
        let mut h = vec![0u32; classes];
        for &x in c {
            h[x as usize] += 1;
        }
        h
    };

    loop {
        if histogram(&cu, classes) != histogram(&cv, classes) {
            return None;
        }

        let signature = |c: &[u32], x: usize| {
            let mut around: Vec<u32> =
                g.neighbors(x as u32).iter().map(|&y| c[y as usize]).collect();
            around.sort_unstable();
            (c[x], around)
        };
        let sigs_u: Vec<_> = (0..n).map(|x| signature(&cu, x)).collect();
        let sigs_v: Vec<_> = (0..n).map(|x| signature(&cv, x)).collect();

        let mut table: std::collections::BTreeMap<&(u32, Vec<u32>), u32> =
            std::collections::BTreeMap::new();
        for sig in sigs_u.iter().chain(&sigs_v) {
            let next = table.len() as u32;
            table.entry(sig).or_insert(next);
        }
        // BTreeMap insertion order is arrival order for the id, which is not
        // canonical; renumber by sorted signature so ids are deterministic.
        let mut renumber: Vec<u32> = vec![0; table.len()];
        for (rank, (_, &id)) in table.iter().enumerate() {
            renumber[id as usize] = rank as u32;
        }
        let ncu: Vec<u32> = sigs_u.iter().map(|s| renumber[table[s] as usize]).collect();
        let ncv: Vec<u32> = sigs_v.iter().map(|s| renumber[table[s] as usize]).collect();
        let new_classes = table.len();

        if new_classes == classes {
            if histogram(&ncu, new_classes) != histogram(&ncv, new_classes) {
                return None;
            }
            return Some((ncu, ncv));
        }
        classes = new_classes;
        cu = ncu;
        cv = ncv;
    }
}

/// Backtracking extension of a partial vertex map, domains as u128 bitsets.
/// Assigning x -> y removes y from every other domain and intersects each
/// unassigned domain with y's neighborhood or its complement according to
/// adjacency with x, so a completed assignment preserves adjacency and
/// non-adjacency in both directions.
fn extend_mapping(adj: &[u128], domains: &[u128], assigned: u128) -> Option<Vec<u32>> {
    let n = adj.len();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    if assigned == full {
        return Some(domains.iter().map(|d| d.trailing_zeros()).collect());
    }

    let x = (0..n)
        .filter(|&x| assigned & (1u128 << x) == 0)
        .min_by_key(|&x| domains[x].count_ones())
        .expect("some vertex is unassigned");
    let mut choices = domains[x];
    while choices != 0 {
        let y = choices.trailing_zeros();
        choices &= choices - 1;

        let y_bit = 1u128 << y;
        let mut next: Vec<u128> = domains.to_vec();
        next[x] = y_bit;
        let mut viable = true;
        for z in 0..n {
            if z == x {
                continue;
            }
            let mut d = next[z] & !y_bit;
            if adj[x] & (1u128 << z) != 0 {
                d &= adj[y as usize];
            } else {
                d &= !adj[y as usize];
            }
            if d == 0 {
                viable = false;
                break;
            }
            next[z] = d;
        }
        if !viable {
            continue;
        }
        if let Some(map) = extend_mapping(adj, &next, assigned | (1u128 << x)) {
            return Some(map);
        }
    }
    None
}

fn adjacency_bitsets(g: &Graph) -> Vec<u128> {
    let mut adj = vec![0u128; g.vertex_count()];
    for (a, b) in g.edges() {
        adj[a as usize] |= 1u128 << b;
        adj[b as usize] |= 1u128 << a;
    }
    adj
}

/// Complete search for an automorphism mapping u to v: color refinement to
/// seed candidate domains, then backtracking. None is a proof that no such
/// automorphism exists; Some is re-verified edge by edge.
pub fn automorphism_mapping(g: &Graph, u: u32, v: u32) -> Result<Option<Automorphism>> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_VERTEX_CAP {
        return Err(Error::Budget {
            vertices: BigUint::from(n),
            budget: EXHAUSTIVE_VERTEX_CAP as u64,
        });
    }
    if u as usize >= n || v as usize >= n {
        return Err(Error::parameter(format!("vertices ({u}, {v}) outside 0..{n}")));
    }

    let Some((cu, cv)) = paired_refinement(g, u, v) else {
        return Ok(None);
    };
    let mut domains = vec![0u128; n];
    for x in 0..n {
        for y in 0..n {
            if cv[y] == cu[x] {
                domains[x] |= 1u128 << y;
            }
        }
        if domains[x] == 0 {
            return Ok(None);
        }
    }

    let adj = adjacency_bitsets(g);
    match extend_mapping(&adj, &domains, 0) {
        None => Ok(None),
        Some(map) => {
            let auto = Automorphism::new(map, Provenance::Search, g)?;
            debug_assert!(auto.verified().is_pass());
            debug_assert_eq!(auto.apply(u), v);
            Ok(Some(auto))
        }
    }
}

/// Exact automorphism orbits by pairwise search, merged through union-find.
/// Every found automorphism merges all of its vertex pairs at once, so the
/// number of searches stays near the number of orbits times the vertex
/// count. Refuses graphs above `cap` vertices (cap itself is limited to
/// the bitset width, 128).
pub fn graph_orbits(g: &Graph, cap: usize) -> Result<OrbitPartition> {
    if cap > EXHAUSTIVE_VERTEX_CAP {
        return Err(Error::parameter(format!(
            "orbit cap {cap} above the engine limit {EXHAUSTIVE_VERTEX_CAP}"
        )));
    }
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::Budget { vertices: BigUint::from(n), budget: cap as u64 });
    }

    let mut uf = UnionFind::new(n);
    for u in 0..n as u32 {
        if uf.find(u) != u {
            continue;
        }
        for v in u + 1..n as u32 {
            if uf.find(v) == uf.find(u) {
                continue;
            }
            if let Some(auto) = automorphism_mapping(g, u, v)? {
                for x in 0..n as u32 {
                    uf.union(x, auto.apply(x));
                }
            }
        }
    }

    let ids: Vec<usize> = (0..n as u32).map(|x| uf.find(x) as usize).collect();
    // Compress representative ids to 0..blocks.
    let mut reps: Vec<usize> = ids.clone();
    reps.sort_unstable();
    reps.dedup();
    let compact: Vec<usize> =
        ids.iter().map(|id| reps.binary_search(id).expect("own rep")).collect();
    Ok(OrbitPartition::from_ids(PartitionMethod::ExhaustiveSearch, &compact))
}

/// Orbits of a materialized topology.
pub fn exhaustive_orbits(topology: &Topology, cap: usize) -> Result<OrbitPartition> {
    graph_orbits(topology.graph(), cap)
}

/// Cost knobs for [`decide`]. The defaults favor exactness at desk scale
/// and explicit refusal beyond it.
#[derive(Debug, Clone)]
pub struct DecideBudget {
    /// Refuse to materialize more vertices than this.
    pub vertex_budget: u64,
    /// For k <= 1, check all ordered pairs up to this n; sample above it.
    pub sample_threshold: u32,
    /// Pair sample size when sampling.
    pub sample_size: u64,
    /// Refuse six-cycle searches whose path-tree bound degree^5 exceeds this.
    pub search_work_budget: u64,
    /// Seed for pair sampling, fixed so identical calls give identical
    /// verdicts.
    pub seed: u64,
}

impl Default for DecideBudget {
    fn default() -> DecideBudget {
        DecideBudget {
            vertex_budget: crate::topology::DEFAULT_VERTEX_BUDGET,
            sample_threshold: 8,
            sample_size: 4096,
            search_work_budget: 50_000_000,
            seed: 0xDCE11,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Decision {
    Transitive,
    NotTransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Server transpositions on a complete graph.
    Transposition,
    /// Copy-permutation flag actions on a depth-1 wiring.
    CopyPermutation,
}

/// One fully spelled-out verified map, included when the instance is small
/// enough to print.
#[derive(Debug, Clone, Serialize)]
pub struct SampleMap {
    pub u: VertexLabel,
    pub v: VertexLabel,
    pub map: Vec<(VertexLabel, VertexLabel)>,
}

/// Positive evidence: how many ordered pairs received a verified
/// automorphism certificate.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub pairs_verified: u64,
    pub total_pairs: u64,
    pub sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<SampleMap>,
}

/// Negative evidence: two vertices with different six-cycle counts.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub u: VertexLabel,
    pub v: VertexLabel,
    pub invariant: String,
    pub count_u: u64,
    pub count_v: u64,
}

/// The decision together with the evidence that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub params: Params,
    pub decision: Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Exact orbit count, filled in when an exhaustive check was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<usize>,
}

impl Verdict {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

fn k0_labels(n: u32) -> Vec<VertexLabel> {
    (0..n as u64).map(|a| VertexLabel::from_u64s(&[a])).collect()
}

fn k1_labels(n: u32) -> Vec<VertexLabel> {
    (0..=n as u64)
        .flat_map(|copy| (0..n as u64).map(move |pos| VertexLabel::from_u64s(&[copy, pos])))
        .collect()
}

/// Ordered pairs to check: everything up to the threshold, a seeded sample
/// beyond it.
fn pair_plan(total: u64, n: u32, budget: &DecideBudget) -> (Vec<(u64, u64)>, bool) {
    if n <= budget.sample_threshold {
        let mut pairs = Vec::with_capacity((total * total) as usize);
        for i in 0..total {
            for j in 0..total {
                pairs.push((i, j));
            }
        }
        (pairs, false)
    } else {
        let mut rng = StdRng::seed_from_u64(budget.seed);
        let pairs = (0..budget.sample_size)
            .map(|_| (rng.gen_range(0..total), rng.gen_range(0..total)))
            .collect();
        (pairs, true)
    }
}

/// Decides vertex transitivity of D_{k,n}: verified positive certificates
/// for k <= 1, a verified six-cycle-count witness for k >= 2. Never
/// guesses: anything the budgets cannot verify is an explicit
/// `Error::Inconclusive`.
pub fn decide(params: &Params, budget: &DecideBudget) -> Result<Verdict> {
    if params.k <= 1 {
        decide_small_depth(params, budget)
    } else {
        decide_by_witness(params, budget)
    }
}

fn decide_small_depth(params: &Params, budget: &DecideBudget) -> Result<Verdict> {
    let n = params.n;
    let (spec, labels, kind, total) = if params.k == 0 {
        let edge_estimate = (n as u64) * (n as u64 - 1) / 2;
        if edge_estimate > budget.vertex_budget {
            return Err(Error::Inconclusive(format!(
                "complete graph on {n} servers is beyond the verification budget"
            )));
        }
        (None, k0_labels(n), CertificateKind::Transposition, n as u64)
    } else {
        let t = n as u64 * (n as u64 + 1);
        if t > budget.vertex_budget {
            return Err(Error::Inconclusive(format!(
                "depth-1 instance with {t} vertices is beyond the verification budget"
            )));
        }
        (Some(HSpec::d1(n)?), k1_labels(n), CertificateKind::CopyPermutation, t)
    };

    let complete = (params.k == 0).then(|| Graph::complete(n as usize));
    let (pairs, sampled) = pair_plan(total, n, budget);
    let mut pairs_verified = 0u64;
    let mut sample = None;

    for &(i, j) in &pairs {
        let auto = match &spec {
            Some(h) => h.transitivity_map(h.vertex_at(i as u32), h.vertex_at(j as u32))?,
            None => {
                let mut perm: Vec<u32> = (0..n).collect();
                perm.swap(i as usize, j as usize);
                Automorphism::new(
                    perm,
                    Provenance::Transposition { a: i as u32, b: j as u32 },
                    complete.as_ref().expect("complete graph built for k = 0"),
                )?
            }
        };
        if !auto.verified().is_pass() || auto.apply(i as u32) != j as u32 {
            return Err(Error::Inconclusive(format!(
                "no verified certificate for the pair ({}, {})",
                labels[i as usize], labels[j as usize]
            )));
        }
        pairs_verified += 1;
        if sample.is_none() && i != j && total <= 64 {
            sample = Some(SampleMap {
                u: labels[i as usize].clone(),
                v: labels[j as usize].clone(),
                map: auto.to_label_pairs(&labels),
            });
        }
    }

    Ok(Verdict {
        params: *params,
        decision: Decision::Transitive,
        certificate: Some(Certificate {
            kind,
            pairs_verified,
            total_pairs: total * total,
            sampled,
            sample,
        }),
        witness: None,
        orbits: None,
    })
}

fn decide_by_witness(params: &Params, budget: &DecideBudget) -> Result<Verdict> {
    let degree = params.degree() as u64;
    let work = degree.saturating_pow(5);
    if work > budget.search_work_budget {
        return Err(Error::Inconclusive(format!(
            "six-cycle search needs about {work} path extensions, budget is {}",
            budget.search_work_budget
        )));
    }

    let (u, v) = witness_pair(params)?;
    let count_u = cycles_through(CycleBackend::Implicit(params), &u, 6, false)?.count;
    let count_v = cycles_through(CycleBackend::Implicit(params), &v, 6, false)?.count;
    if count_u == count_v {
        return Err(Error::Inconclusive(format!(
            "witness pair ({u}, {v}) has equal six-cycle counts {count_u}"
        )));
    }

    Ok(Verdict {
        params: *params,
        decision: Decision::NotTransitive,
        certificate: None,
        witness: Some(Witness {
            u,
            v,
            invariant: "6-cycle count".to_string(),
            count_u,
            count_v,
        }),
        orbits: None,
    })
}
