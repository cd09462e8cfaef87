//! Simple-cycle counting rooted at a vertex.
//!
//! The counter enumerates simple paths of the requested length from the root
//! by depth-first search and counts those whose last vertex closes back to
//! the root; every cycle is traversed once per direction, so the directed
//! total is halved. It runs either on a materialized topology (index-based)
//! or directly on the implicit adjacency oracle (label-based), which covers
//! instances far too large to materialize.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::adjacency::{adjacency_level, edge_between_copies, level_neighbor, neighbors};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::params::Params;
use crate::topology::Topology;

pub const MIN_CYCLE_LENGTH: u32 = 3;
/// Soft cap on countable cycle length; the search space is bounded by
/// degree^(length - 1), so raising this is a cost decision, not a
/// correctness one.
pub const MAX_CYCLE_LENGTH: u32 = 10;

/// Where to read adjacency from.
pub enum CycleBackend<'a> {
    /// Neighbor labels computed on demand; works at any scale.
    Implicit(&'a Params),
    /// Index-based search on a built topology.
    Materialized(&'a Topology),
}

/// A simple cycle in canonical form: the query root first, then the
/// direction whose label sequence is lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleWitness {
    vertices: Vec<VertexLabel>,
}

impl CycleWitness {
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Count (and optionally the witnesses) of simple `length`-cycles through
/// `root`.
#[derive(Debug, Clone)]
pub struct CycleQuery {
    pub root: VertexLabel,
    pub length: u32,
    pub count: u64,
    pub witnesses: Option<Vec<CycleWitness>>,
}

fn check_length(length: u32) -> Result<()> {
    if !(MIN_CYCLE_LENGTH..=MAX_CYCLE_LENGTH).contains(&length) {
        return Err(Error::parameter(format!(
            "cycle length {length} outside supported range {MIN_CYCLE_LENGTH}..={MAX_CYCLE_LENGTH}"
        )));
    }
    Ok(())
}

/// Root-first canonical form: keep the direction with the smaller sequence.
fn canonical<T: Ord + Clone>(path: &[T]) -> Vec<T> {
    let mut reversed = Vec::with_capacity(path.len());
    reversed.push(path[0].clone());
    reversed.extend(path[1..].iter().rev().cloned());
    if reversed[..] < *path {
        reversed
    } else {
        path.to_vec()
    }
}

struct IndexedSearch<'a> {
    graph: &'a Graph,
    root: u32,
    length: usize,
    collect: bool,
    path: Vec<u32>,
    on_path: Vec<bool>,
    directed: u64,
    found: BTreeSet<Vec<u32>>,
}

impl IndexedSearch<'_> {
    fn step(&mut self) {
        let last = *self.path.last().expect("path holds the root");
        if self.path.len() == self.length {
            if self.graph.has_edge(last, self.root) {
                self.directed += 1;
                if self.collect {
                    self.found.insert(canonical(&self.path));
                }
            }
            return;
        }
        for &next in self.graph.neighbors(last) {
            if !self.on_path[next as usize] {
                self.on_path[next as usize] = true;
                self.path.push(next);
                self.step();
                self.path.pop();
                self.on_path[next as usize] = false;
            }
        }
    }
}

/// Directed closed-walk count from `root` (twice the cycle count), plus
/// canonical witnesses when `collect` is set.
fn count_indexed(graph: &Graph, root: u32, length: usize, collect: bool) -> (u64, BTreeSet<Vec<u32>>) {
    let mut on_path = vec![false; graph.vertex_count()];
    on_path[root as usize] = true;
    let mut search = IndexedSearch {
        graph,
        root,
        length,
        collect,
        path: vec![root],
        on_path,
        directed: 0,
        found: BTreeSet::new(),
    };
    search.step();
    (search.directed, search.found)
}

struct ImplicitSearch<'a> {
    params: &'a Params,
    root: VertexLabel,
    length: usize,
    collect: bool,
    path: Vec<VertexLabel>,
    on_path: HashSet<VertexLabel>,
    directed: u64,
    found: BTreeSet<Vec<VertexLabel>>,
}

impl ImplicitSearch<'_> {
    fn step(&mut self) -> Result<()> {
        let last = self.path.last().expect("path holds the root").clone();
        if self.path.len() == self.length {
            if adjacency_level(&last, &self.root, self.params)?.is_some() {
                self.directed += 1;
                if self.collect {
                    self.found.insert(canonical(&self.path));
                }
            }
            return Ok(());
        }
        for (next, _) in neighbors(&last, self.params)? {
            if !self.on_path.contains(&next) {
                self.on_path.insert(next.clone());
                self.path.push(next);
                self.step()?;
                let popped = self.path.pop().expect("pushed above");
                self.on_path.remove(&popped);
            }
        }
        Ok(())
    }
}

/// Counts simple cycles of the given length through `root`. The two
/// backends implement the same search and must agree; tests hold them to
/// that.
pub fn cycles_through(
    backend: CycleBackend,
    root: &VertexLabel,
    length: u32,
    collect: bool,
) -> Result<CycleQuery> {
    check_length(length)?;
    let (directed, witnesses) = match backend {
        CycleBackend::Implicit(params) => {
            root.validate(params)?;
            let mut search = ImplicitSearch {
                params,
                root: root.clone(),
                length: length as usize,
                collect,
                path: vec![root.clone()],
                on_path: HashSet::from([root.clone()]),
                directed: 0,
                found: BTreeSet::new(),
            };
            search.step()?;
            let witnesses = collect.then(|| {
                search
                    .found
                    .into_iter()
                    .map(|vertices| CycleWitness { vertices })
                    .collect::<Vec<_>>()
            });
            (search.directed, witnesses)
        }
        CycleBackend::Materialized(topology) => {
            let root_index = topology.index_of(root)?;
            let (directed, found) = count_indexed(topology.graph(), root_index, length as usize, collect);
            let witnesses = collect.then(|| {
                found
                    .into_iter()
                    .map(|path| CycleWitness {
                        vertices: path.iter().map(|&i| topology.label_of(i).clone()).collect(),
                    })
                    .collect::<Vec<_>>()
            });
            (directed, witnesses)
        }
    };

    debug_assert_eq!(directed % 2, 0, "each cycle closes in two directions");
    let count = directed / 2;
    if let Some(list) = &witnesses {
        debug_assert_eq!(list.len() as u64, count);
    }
    Ok(CycleQuery { root: root.clone(), length, count, witnesses })
}

/// Per-vertex cycle counts over a whole graph, indexed by vertex.
#[derive(Debug, Clone)]
pub struct Census {
    length: u32,
    counts: Vec<u64>,
}

impl Census {
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count_of(&self, vertex: u32) -> u64 {
        self.counts[vertex as usize]
    }

    /// Histogram: cycle count value -> number of vertices showing it.
    pub fn distribution(&self) -> BTreeMap<u64, usize> {
        let mut hist = BTreeMap::new();
        for &c in &self.counts {
            *hist.entry(c).or_insert(0) += 1;
        }
        hist
    }

    /// Total number of distinct cycles of this length in the graph: every
    /// such cycle is counted once per vertex on it.
    pub fn total_cycles(&self) -> u64 {
        let sum: u64 = self.counts.iter().sum();
        debug_assert_eq!(sum % self.length as u64, 0);
        sum / self.length as u64
    }
}

/// Census over an arbitrary graph (used by the partition refinement and by
/// fixtures that are not DCell instances).
pub fn cycle_census_graph(graph: &Graph, length: u32) -> Result<Census> {
    check_length(length)?;
    let counts = (0..graph.vertex_count() as u32)
        .map(|v| count_indexed(graph, v, length as usize, false).0 / 2)
        .collect();
    Ok(Census { length, counts })
}

/// Six-cycle census of a materialized topology, the invariant behind the
/// non-transitivity witnesses.
pub fn six_cycle_census(topology: &Topology) -> Census {
    cycle_census_graph(topology.graph(), 6).expect("6 is within the length cap")
}

/// Why a claimed cycle is not one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleViolation {
    #[error("a cycle needs at least 3 distinct vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {label}: {reason}")]
    InvalidLabel { label: String, reason: String },
    #[error("vertex {0} repeats")]
    Repeated(VertexLabel),
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(VertexLabel, VertexLabel),
}

/// Checks a claimed cycle: valid labels, pairwise distinct, consecutive
/// vertices adjacent, last adjacent to first. Accepts both open notation
/// (v0 .. v_{L-1}) and closed notation (v0 .. v_{L-1} v0). Reports the
/// first violation.
pub fn verify_cycle(candidate: &[VertexLabel], params: &Params) -> std::result::Result<(), CycleViolation> {
    let seq = match candidate {
        [first, .., last] if first == last => &candidate[..candidate.len() - 1],
        _ => candidate,
    };
    if seq.len() < 3 {
        return Err(CycleViolation::TooShort(seq.len()));
    }
    let mut seen = HashSet::new();
    for v in seq {
        v.validate(params).map_err(|e| CycleViolation::InvalidLabel {
            label: v.to_string(),
            reason: e.to_string(),
        })?;
        if !seen.insert(v.clone()) {
            return Err(CycleViolation::Repeated(v.clone()));
        }
    }
    for i in 0..seq.len() {
        let a = &seq[i];
        let b = &seq[(i + 1) % seq.len()];
        let adjacent = adjacency_level(a, b, params)
            .expect("labels validated above")
            .is_some();
        if !adjacent {
            return Err(CycleViolation::NotAdjacent(a.clone(), b.clone()));
        }
    }
    Ok(())
}

/// The two distinguished vertices whose six-cycle counts separate: for
/// n = 2 the pair ((0,..,0,2,1), (0,..,0,3,1,1)), for n >= 3 the pair
/// ((0,..,0), (0,..,0,1,2)). Defined for k >= 2; at k <= 1 no such pair
/// exists.
pub fn witness_pair(params: &Params) -> Result<(VertexLabel, VertexLabel)> {
    if params.k < 2 {
        return Err(Error::parameter(format!(
            "witness pairs exist for k >= 2, got k = {}",
            params.k
        )));
    }
    let k = params.k as usize;
    let (u, v) = if params.n == 2 {
        let mut u = vec![0u64; k - 1];
        u.extend([2, 1]);
        let mut v = vec![0u64; k - 2];
        v.extend([3, 1, 1]);
        (u, v)
    } else {
        let u = vec![0u64; k + 1];
        let mut v = vec![0u64; k - 1];
        v.extend([1, 2]);
        (u, v)
    };
    Ok((VertexLabel::from_u64s(&u), VertexLabel::from_u64s(&v)))
}

/// The vertex whose top-level edge the blocking argument examines: the
/// first witness for n = 2, the second for n >= 3.
pub fn blocked_root(params: &Params) -> Result<VertexLabel> {
    let (u, v) = witness_pair(params)?;
    Ok(if params.n == 2 { u } else { v })
}

/// One potential way to close a short cycle through the root's top-level
/// edge: leave the root's unit through a lower-level neighbor, jump to
/// that neighbor's top-level copy, bridge from there to the partner copy,
/// and walk back to the root's top-level partner.
#[derive(Debug, Clone)]
pub struct BridgeCandidate {
    /// The root's neighbor inside its own top-level unit.
    pub via: VertexLabel,
    pub via_level: u32,
    /// That neighbor's top-level partner.
    pub external: VertexLabel,
    /// The top-level copy the partner lands in.
    pub copy: BigUint,
    /// Endpoints of the unique top-level edge between `copy` and the
    /// root's partner copy, lower-copy side first.
    pub bridge: (VertexLabel, VertexLabel),
    /// Shortest cycle length closable through this configuration: 4 fixed
    /// edges plus the two within-copy walks. None when a walk exceeds the
    /// target length, which certainly blocks.
    pub closing_length: Option<u32>,
    pub blocks_target: bool,
}

/// Blocking report for the distinguished root: every candidate copy
/// reachable from the root's unit, the bridge edge toward the root's
/// partner copy, and the shortest closable cycle length through each.
#[derive(Debug, Clone)]
pub struct BlockedExtensionReport {
    pub root: VertexLabel,
    pub target_length: u32,
    /// The root's top-level neighbor.
    pub top_partner: VertexLabel,
    /// Its copy index.
    pub partner_copy: BigUint,
    pub candidates: Vec<BridgeCandidate>,
}

impl BlockedExtensionReport {
    /// True when no candidate closes a cycle of the target length or less,
    /// i.e. every short cycle through the root stays inside its unit.
    pub fn all_blocked(&self) -> bool {
        self.candidates.iter().all(|c| c.blocks_target)
    }
}

/// BFS distance between two vertices of one top-level unit, using only
/// edges of level < k, capped at `cap` hops.
fn within_copy_distance(
    params: &Params,
    from: &VertexLabel,
    to: &VertexLabel,
    cap: u32,
) -> Result<Option<u32>> {
    if from == to {
        return Ok(Some(0));
    }
    let mut dist: HashMap<VertexLabel, u32> = HashMap::from([(from.clone(), 0)]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == cap {
            continue;
        }
        for (nb, level) in neighbors(&v, params)? {
            if level == params.k || dist.contains_key(&nb) {
                continue;
            }
            if nb == *to {
                return Ok(Some(d + 1));
            }
            dist.insert(nb.clone(), d + 1);
            queue.push_back(nb);
        }
    }
    Ok(None)
}

/// Confirms that no cycle of the target length through the distinguished
/// root uses its top-level edge. Any such cycle would have to leave the
/// root's unit through one of its other neighbors, cross to that neighbor's
/// top-level copy, take the unique bridge edge to the root's partner copy
/// and walk to the partner vertex; the report prices every one of those
/// routes.
pub fn blocked_extension_check(
    root: &VertexLabel,
    params: &Params,
    target_length: u32,
) -> Result<BlockedExtensionReport> {
    check_length(target_length)?;
    let expected = blocked_root(params)?;
    if *root != expected {
        return Err(Error::parameter(format!(
            "blocking argument applies to the distinguished root {expected}, got {root}"
        )));
    }

    let k = params.k;
    let top_partner = level_neighbor(root, k, params)?;
    let partner_copy = top_partner.coord_at_level(k as usize).clone();

    let mut candidates = Vec::new();
    for (via, via_level) in neighbors(root, params)? {
        if via_level == k {
            continue;
        }
        let external = level_neighbor(&via, k, params)?;
        let copy = external.coord_at_level(k as usize).clone();
        debug_assert_ne!(copy, partner_copy, "distinct unit vertices reach distinct copies");

        let (lo, hi) = if copy < partner_copy {
            (copy.clone(), partner_copy.clone())
        } else {
            (partner_copy.clone(), copy.clone())
        };
        let bridge = edge_between_copies(k, &lo, &hi, Some(&[]), params)?;
        let (bridge_in_copy, bridge_in_partner) = if copy < partner_copy {
            (&bridge.0, &bridge.1)
        } else {
            (&bridge.1, &bridge.0)
        };

        // Fixed edges: root -- via, via -- external, the bridge, and
        // top_partner -- root. The two walks stay inside single copies.
        let walk_cap = target_length;
        let d_copy = within_copy_distance(params, &external, bridge_in_copy, walk_cap)?;
        let d_partner = within_copy_distance(params, bridge_in_partner, &top_partner, walk_cap)?;
        let closing_length = match (d_copy, d_partner) {
            (Some(a), Some(b)) => Some(4 + a + b),
            _ => None,
        };
        let blocks_target = closing_length.map_or(true, |c| c > target_length);

        candidates.push(BridgeCandidate {
            via,
            via_level,
            external,
            copy,
            bridge,
            closing_length,
            blocks_target,
        });
    }

    Ok(BlockedExtensionReport { root: root.clone(), target_length, top_partner, partner_copy, candidates })
}
