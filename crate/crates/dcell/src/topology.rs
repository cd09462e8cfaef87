use num_bigint::BigUint;

use crate::adjacency::{adjacency_level, neighbors};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::params::Params;

/// Default refusal threshold for materialization, in vertices. D_{3,2}
/// (1806) and D_{2,4} (420) sit comfortably below it; D_{4,2} (about 3.3
/// million) still fits, D_{3,3} and beyond do not by much or at all.
pub const DEFAULT_VERTEX_BUDGET: u64 = 5_000_000;

/// An edge of the materialized topology: endpoint indices with a < b, plus
/// the level of the link.
pub type LeveledEdge = (u32, u32, u32);

/// A fully materialized D_{k,n}: every vertex label (indexed by uid) and
/// every edge with its level. Vertex i carries the unique label with uid i,
/// so index order, uid order, and lexicographic label order all agree.
#[derive(Debug, Clone)]
pub struct Topology {
    params: Params,
    labels: Vec<VertexLabel>,
    graph: Graph,
    edges: Vec<LeveledEdge>,
    level_edge_counts: Vec<u64>,
}

impl Topology {
    /// Materializes D_{k,n}, refusing if it has more than `budget` vertices.
    pub fn build(params: &Params, budget: u64) -> Result<Topology> {
        let t_big = params.vertex_count();
        let cap = budget.min(u32::MAX as u64);
        if t_big > BigUint::from(cap) {
            return Err(Error::Budget { vertices: t_big, budget });
        }
        let t = u64::try_from(&t_big).expect("checked against cap") as usize;

        let mut labels = Vec::with_capacity(t);
        for m in 0..t {
            labels.push(VertexLabel::from_uid(&BigUint::from(m), params)?);
        }

        let mut edges: Vec<LeveledEdge> = Vec::with_capacity(t * params.degree() as usize / 2);
        for (m, label) in labels.iter().enumerate() {
            for (nb, level) in neighbors(label, params)? {
                let other = u64::try_from(&nb.uid_full(params)?).expect("uid below t") as usize;
                if m < other {
                    edges.push((m as u32, other as u32, level));
                }
            }
        }
        edges.sort_unstable_by_key(|&(a, b, level)| (a, level, b));

        Self::assemble(*params, labels, edges)
    }

    /// Rebuilds a topology from an explicit leveled edge list, validating
    /// every edge against the construction (endpoint labels in range, claimed
    /// level correct, nothing missing or extra). This is the import path for
    /// the edge-list file format.
    pub fn from_leveled_edges(
        params: &Params,
        edges: &[(VertexLabel, VertexLabel, u32)],
    ) -> Result<Topology> {
        let t_big = params.vertex_count();
        let cap = DEFAULT_VERTEX_BUDGET.min(u32::MAX as u64);
        if t_big > BigUint::from(cap) {
            return Err(Error::Budget { vertices: t_big, budget: cap });
        }
        let t = u64::try_from(&t_big).expect("checked against cap") as usize;

        let expected = t * params.degree() as usize / 2;
        if edges.len() != expected {
            return Err(Error::parameter(format!(
                "edge list has {} edges, D_{{{},{}}} has {}",
                edges.len(),
                params.k,
                params.n,
                expected
            )));
        }

        let mut labels = Vec::with_capacity(t);
        for m in 0..t {
            labels.push(VertexLabel::from_uid(&BigUint::from(m), params)?);
        }

        let mut indexed: Vec<LeveledEdge> = Vec::with_capacity(edges.len());
        for (x, y, level) in edges {
            match adjacency_level(x, y, params)? {
                Some(found) if found == *level => {}
                found => {
                    return Err(Error::parameter(format!(
                        "edge {x} -- {y} claims level {level}, construction says {found:?}"
                    )));
                }
            }
            let a = u64::try_from(&x.uid_full(params)?).expect("uid below t") as u32;
            let b = u64::try_from(&y.uid_full(params)?).expect("uid below t") as u32;
            indexed.push((a.min(b), a.max(b), *level));
        }
        indexed.sort_unstable_by_key(|&(a, b, level)| (a, level, b));
        indexed.dedup();
        if indexed.len() != expected {
            return Err(Error::parameter("edge list repeats an edge".to_string()));
        }

        Self::assemble(*params, labels, indexed)
    }

    fn assemble(params: Params, labels: Vec<VertexLabel>, edges: Vec<LeveledEdge>) -> Result<Topology> {
        let plain: Vec<(u32, u32)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
        let graph = Graph::from_edges(labels.len(), &plain)?;
        let mut level_edge_counts = vec![0u64; params.k as usize + 1];
        for &(_, _, level) in &edges {
            level_edge_counts[level as usize] += 1;
        }
        Ok(Topology { params, labels, graph, edges, level_edge_counts })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label_of(&self, index: u32) -> &VertexLabel {
        &self.labels[index as usize]
    }

    /// Index (= uid) of a label, which must be valid for these parameters.
    pub fn index_of(&self, label: &VertexLabel) -> Result<u32> {
        label.validate(&self.params)?;
        let uid = label.uid_full(&self.params)?;
        Ok(u64::try_from(&uid).expect("uid below vertex count") as u32)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Edges as (a, b, level) with a < b, sorted by (a, level, b).
    pub fn leveled_edges(&self) -> &[LeveledEdge] {
        &self.edges
    }

    pub fn level_edge_count(&self, level: u32) -> u64 {
        self.level_edge_counts[level as usize]
    }
}
