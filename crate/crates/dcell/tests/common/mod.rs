//! Independent oracles for the integration tests.
//!
//! Everything here is deliberately written from the definitions, without
//! reusing the library's closed-form neighbor rule, canonical-direction
//! cycle counter, or seeded orbit search, so agreement between the two
//! routes is meaningful.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dcell::graph::Graph;

/// Edge set of D_{k,n} as uid pairs, computed by the copy-and-join
/// recursion itself: level 0 is a complete graph, level j takes
/// t_{j-1} + 1 disjoint copies and joins copies a < b by the single edge
/// (a, b-1) -- (b, a), with uids shifted into each copy's block.
pub fn recursive_edge_oracle(k: u32, n: u32) -> BTreeSet<(u64, u64)> {
    let mut sizes = vec![n as u64];
    for _ in 0..k {
        let prev = *sizes.last().unwrap();
        sizes.push(prev * (prev + 1));
    }

    let mut edges: Vec<(u64, u64)> = Vec::new();
    for i in 0..n as u64 {
        for j in i + 1..n as u64 {
            edges.push((i, j));
        }
    }
    for level in 1..=k as usize {
        let block = sizes[level - 1];
        let copies = block + 1;
        let mut next = Vec::with_capacity(edges.len() * copies as usize);
        for c in 0..copies {
            for &(a, b) in &edges {
                next.push((c * block + a, c * block + b));
            }
        }
        for a in 0..copies {
            for b in a + 1..copies {
                next.push((a * block + (b - 1), b * block + a));
            }
        }
        edges = next;
    }
    edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect()
}

/// Mixed-radix label of a uid, most significant coordinate first, written
/// directly from the digit decomposition.
pub fn oracle_label(mut uid: u64, k: u32, n: u32) -> Vec<u64> {
    let mut sizes = vec![n as u64];
    for _ in 0..k {
        let prev = *sizes.last().unwrap();
        sizes.push(prev * (prev + 1));
    }
    let mut coords = Vec::with_capacity(k as usize + 1);
    for level in (0..=k as usize).rev() {
        if level == 0 {
            coords.push(uid);
        } else {
            coords.push(uid / sizes[level - 1]);
            uid %= sizes[level - 1];
        }
    }
    coords
}

/// Simple cycles of the given length through `root`, counted by plain path
/// extension: walk every simple path of length - 1 edges out of the root
/// and test closure, then halve because each cycle is traced in both
/// directions. No canonical-form machinery involved.
pub fn naive_cycle_count(g: &Graph, root: u32, length: u32) -> u64 {
    fn extend(g: &Graph, root: u32, length: usize, path: &mut Vec<u32>, used: &mut Vec<bool>) -> u64 {
        let last = *path.last().unwrap();
        if path.len() == length {
            return u64::from(g.has_edge(last, root));
        }
        let mut total = 0;
        for &nb in g.neighbors(last) {
            if !used[nb as usize] {
                used[nb as usize] = true;
                path.push(nb);
                total += extend(g, root, length, path, used);
                path.pop();
                used[nb as usize] = false;
            }
        }
        total
    }

    let mut used = vec![false; g.vertex_count()];
    used[root as usize] = true;
    let directed = extend(g, root, length as usize, &mut vec![root], &mut used);
    debug_assert_eq!(directed % 2, 0);
    directed / 2
}

/// Every automorphism of the graph, by unpruned backtracking over vertex
/// images in index order. Exponential in principle, fine for the small
/// fixtures it is used on.
pub fn enumerate_automorphisms(g: &Graph) -> Vec<Vec<u32>> {
    fn place(
        g: &Graph,
        x: usize,
        map: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let n = g.vertex_count();
        if x == n {
            out.push(map.clone());
            return;
        }
        'candidate: for y in 0..n as u32 {
            if used[y as usize] || g.degree(y) != g.degree(x as u32) {
                continue;
            }
            for z in 0..x {
                if g.has_edge(x as u32, z as u32) != g.has_edge(y, map[z]) {
                    continue 'candidate;
                }
            }
            map[x] = y;
            used[y as usize] = true;
            place(g, x + 1, map, used, out);
            used[y as usize] = false;
        }
    }

    let mut out = Vec::new();
    let n = g.vertex_count();
    place(g, 0, &mut vec![0; n], &mut vec![false; n], &mut out);
    out
}

/// Orbit count implied by a full automorphism list.
pub fn orbit_count(automorphisms: &[Vec<u32>], n: usize) -> usize {
    let mut seen = vec![false; n];
    let mut orbits = 0;
    for v in 0..n {
        if seen[v] {
            continue;
        }
        orbits += 1;
        let mut queue = vec![v];
        seen[v] = true;
        while let Some(x) = queue.pop() {
            for map in automorphisms {
                let y = map[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    orbits
}

/// The cycle graph C_n.
pub fn cycle_graph(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).map(|(a, b)| (a.min(b), a.max(b))).collect();
    Graph::from_edges(n as usize, &edges).unwrap()
}

/// The complete bipartite graph K_{3,3}, parts {0,1,2} and {3,4,5}.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for a in 0..3u32 {
        for b in 3..6u32 {
            edges.push((a, b));
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}
