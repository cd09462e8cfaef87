use crate::error::{Error, Result};

/// A plain simple undirected graph on indices 0..vertex_count. The topology,
/// the copy-wiring graphs, and the synthetic fixtures in tests all reduce to
/// this for cycle counting and automorphism work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints, and parallel edges.
    pub fn from_edges(vertex_count: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::parameter(format!("loop at vertex {a}")));
            }
            if a as usize >= vertex_count || b as usize >= vertex_count {
                return Err(Error::parameter(format!(
                    "edge ({a}, {b}) outside vertex range 0..{vertex_count}"
                )));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parameter(format!("parallel edge at vertex {v}")));
            }
        }
        Ok(Graph { adj })
    }

    /// K_n on indices 0..n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for a in 0..n as u32 {
            for b in a + 1..n as u32 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of v in ascending order.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Every edge once, as (a, b) with a < b, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if (a as u32) < b {
                    out.push((a as u32, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_shape() {
        let g = Graph::complete(4);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(2, 2));
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn edges_come_back_sorted() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (2, 3)]);
    }
}
