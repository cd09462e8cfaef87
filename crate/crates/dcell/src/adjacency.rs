//! Implicit adjacency oracle: neighbors of a vertex straight from its label,
//! no materialized graph required.
//!
//! Level-j edges join the t_{j-1} + 1 level-(j-1) units inside one level-j
//! unit in a pairwise fashion: for copies a < b there is exactly one edge,
//! from the vertex with sub-uid b - 1 in copy a to the vertex with sub-uid a
//! in copy b. Every vertex therefore has exactly one level-j link, and its
//! endpoint follows from inverting that rule.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::params::Params;

/// The n - 1 level-0 neighbors: same smallest unit, other server index,
/// ascending.
pub fn level0_neighbors(label: &VertexLabel, params: &Params) -> Result<Vec<VertexLabel>> {
    label.validate(params)?;
    let a0 = label.coord_at_level(0);
    let mut out = Vec::with_capacity(params.n as usize - 1);
    for c in 0..params.n {
        let c = BigUint::from(c);
        if c != *a0 {
            let mut coords = label.coords().to_vec();
            let last = coords.len() - 1;
            coords[last] = c;
            out.push(VertexLabel::new(coords));
        }
    }
    Ok(out)
}

/// The unique level-j neighbor, 1 <= j <= k.
///
/// With i = a_j and m = uid_{j-1}(v): if m >= i the vertex sits on the
/// lower-copy side of its level-j edge and the partner is (copy m + 1,
/// sub-uid i); otherwise the partner is (copy m, sub-uid i - 1). Applying
/// the rule twice returns the original vertex and never fixes one, so
/// level-j edges form a perfect matching on each level-j unit.
pub fn level_neighbor(label: &VertexLabel, j: u32, params: &Params) -> Result<VertexLabel> {
    if j == 0 || j > params.k {
        return Err(Error::parameter(format!(
            "level {} out of range: level links exist for 1..={}",
            j, params.k
        )));
    }
    label.validate(params)?;
    let i = label.coord_at_level(j as usize).clone();
    let m = label.uid(j - 1, params)?;

    let (copy, sub_uid) = if m >= i {
        (&m + BigUint::one(), i)
    } else {
        (m, &i - BigUint::one())
    };

    let suffix = VertexLabel::suffix_of_uid(&sub_uid, j - 1, params)?;
    let prefix_len = (params.k - j) as usize;
    let mut coords = Vec::with_capacity(params.k as usize + 1);
    coords.extend_from_slice(&label.coords()[..prefix_len]);
    coords.push(copy);
    coords.extend_from_slice(suffix.coords());
    Ok(VertexLabel::new(coords))
}

/// All neighbors with their edge levels: the n - 1 level-0 neighbors in
/// ascending server order, then one neighbor per level 1..=k. Exactly
/// (n - 1) + k entries.
pub fn neighbors(label: &VertexLabel, params: &Params) -> Result<Vec<(VertexLabel, u32)>> {
    let mut out: Vec<(VertexLabel, u32)> = level0_neighbors(label, params)?
        .into_iter()
        .map(|nb| (nb, 0))
        .collect();
    for j in 1..=params.k {
        out.push((level_neighbor(label, j, params)?, j));
    }
    Ok(out)
}

/// The unique level-j edge between copies a < b of one level-j unit, as
/// (a-side vertex, b-side vertex). `prefix` gives the coordinates above
/// level j (the enclosing units), defaulting to all zeros; it must have
/// exactly k - j entries.
pub fn edge_between_copies(
    j: u32,
    a: &BigUint,
    b: &BigUint,
    prefix: Option<&[BigUint]>,
    params: &Params,
) -> Result<(VertexLabel, VertexLabel)> {
    if j == 0 || j > params.k {
        return Err(Error::parameter(format!(
            "level {} out of range: level links exist for 1..={}",
            j, params.k
        )));
    }
    if a >= b {
        return Err(Error::parameter(format!("copies must satisfy a < b, got {a} and {b}")));
    }
    let sizes = params.level_sizes();
    if *b > sizes[j as usize - 1] {
        return Err(Error::parameter(format!(
            "copy {} out of range, level {} joins copies 0..={}",
            b,
            j,
            sizes[j as usize - 1]
        )));
    }

    let prefix_len = (params.k - j) as usize;
    let zeros;
    let prefix = match prefix {
        Some(p) => p,
        None => {
            zeros = vec![BigUint::zero(); prefix_len];
            &zeros
        }
    };
    if prefix.len() != prefix_len {
        return Err(Error::parameter(format!(
            "prefix has {} coordinates, level {} of D_{{{},{}}} needs {}",
            prefix.len(),
            j,
            params.k,
            params.n,
            prefix_len
        )));
    }
    for (pos, coord) in prefix.iter().enumerate() {
        let level = params.k as usize - pos;
        if *coord > sizes[level - 1] {
            return Err(Error::label(
                pos,
                format!("is {}, level-{} copy index must not exceed {}", coord, level, sizes[level - 1]),
            ));
        }
    }

    let make = |copy: &BigUint, sub_uid: &BigUint| -> Result<VertexLabel> {
        let suffix = VertexLabel::suffix_of_uid(sub_uid, j - 1, params)?;
        let mut coords = Vec::with_capacity(params.k as usize + 1);
        coords.extend_from_slice(prefix);
        coords.push(copy.clone());
        coords.extend_from_slice(suffix.coords());
        Ok(VertexLabel::new(coords))
    };

    let a_side = make(a, &(b - BigUint::one()))?;
    let b_side = make(b, a)?;
    Ok((a_side, b_side))
}

/// The level of the edge joining x and y, or None if they are equal or
/// non-adjacent.
pub fn adjacency_level(x: &VertexLabel, y: &VertexLabel, params: &Params) -> Result<Option<u32>> {
    x.validate(params)?;
    y.validate(params)?;
    if x == y {
        return Ok(None);
    }
    // First differing coordinate from the most significant end bounds the
    // edge level: an edge at level j keeps everything above j equal.
    let first_diff = x
        .coords()
        .iter()
        .zip(y.coords())
        .position(|(a, b)| a != b)
        .expect("labels differ");
    let j = params.k - first_diff as u32;
    if j == 0 {
        // Same smallest unit, different server: always adjacent.
        return Ok(Some(0));
    }
    if level_neighbor(x, j, params)? == *y {
        Ok(Some(j))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::big;

    fn params(k: u32, n: u32) -> Params {
        Params::new(k, n).unwrap()
    }

    fn label(coords: &[u64]) -> VertexLabel {
        VertexLabel::from_u64s(coords)
    }

    #[test]
    fn level0_lists_other_servers_ascending() {
        let got = level0_neighbors(&label(&[1, 0, 0]), &params(2, 2)).unwrap();
        assert_eq!(got, vec![label(&[1, 0, 1])]);

        let got = level0_neighbors(&label(&[0, 1, 2]), &params(2, 3)).unwrap();
        assert_eq!(got, vec![label(&[0, 1, 0]), label(&[0, 1, 1])]);
    }

    #[test]
    fn neighbor_ladder_of_witness_vertex_n2() {
        // All five neighbors of (0,0,0,2,1) in D_{4,2}, one per level.
        let p = params(4, 2);
        let u = label(&[0, 0, 0, 2, 1]);
        assert_eq!(level0_neighbors(&u, &p).unwrap(), vec![label(&[0, 0, 0, 2, 0])]);
        assert_eq!(level_neighbor(&u, 1, &p).unwrap(), label(&[0, 0, 0, 1, 1]));
        assert_eq!(level_neighbor(&u, 2, &p).unwrap(), label(&[0, 0, 6, 0, 0]));
        assert_eq!(level_neighbor(&u, 3, &p).unwrap(), label(&[0, 6, 0, 0, 0]));
        assert_eq!(level_neighbor(&u, 4, &p).unwrap(), label(&[6, 0, 0, 0, 0]));
    }

    #[test]
    fn top_level_neighbors_of_the_ladder_vertices_n2() {
        // Where each neighbor of (0,0,0,2,1) attaches at level 4: the
        // candidate copies are 5, 4, 37, 253.
        let p = params(4, 2);
        let cases = [
            (label(&[0, 0, 0, 2, 0]), label(&[5, 0, 0, 0, 0])),
            (label(&[0, 0, 0, 1, 1]), label(&[4, 0, 0, 0, 0])),
            (label(&[0, 0, 6, 0, 0]), label(&[37, 0, 0, 0, 0])),
            (label(&[0, 6, 0, 0, 0]), label(&[253, 0, 0, 0, 0])),
        ];
        for (v, want) in cases {
            assert_eq!(level_neighbor(&v, 4, &p).unwrap(), want);
        }
    }

    #[test]
    fn neighbor_ladder_of_witness_vertex_n4() {
        // All six neighbors of (0,0,1,2) in D_{3,4}.
        let p = params(3, 4);
        let v = label(&[0, 0, 1, 2]);
        assert_eq!(
            level0_neighbors(&v, &p).unwrap(),
            vec![label(&[0, 0, 1, 0]), label(&[0, 0, 1, 1]), label(&[0, 0, 1, 3])]
        );
        assert_eq!(level_neighbor(&v, 1, &p).unwrap(), label(&[0, 0, 3, 1]));
        assert_eq!(level_neighbor(&v, 2, &p).unwrap(), label(&[0, 7, 0, 0]));
        assert_eq!(level_neighbor(&v, 3, &p).unwrap(), label(&[7, 0, 0, 0]));
    }

    #[test]
    fn level_links_are_a_fixed_point_free_involution() {
        let p = params(2, 3);
        for m in 0..156u64 {
            let v = VertexLabel::from_uid(&big(m), &p).unwrap();
            for j in 1..=2 {
                let w = level_neighbor(&v, j, &p).unwrap();
                assert_ne!(w, v);
                assert_eq!(level_neighbor(&w, j, &p).unwrap(), v);
            }
        }
    }

    #[test]
    fn neighbors_orders_levels_ascending() {
        let p = params(2, 3);
        let got = neighbors(&label(&[0, 1, 2]), &p).unwrap();
        assert_eq!(
            got,
            vec![
                (label(&[0, 1, 0]), 0),
                (label(&[0, 1, 1]), 0),
                (label(&[0, 3, 1]), 1),
                (label(&[6, 0, 0]), 2),
            ]
        );
        assert_eq!(got.len(), p.degree() as usize);
    }

    #[test]
    fn degenerate_depth_has_no_level_links() {
        let p = params(0, 4);
        assert!(level_neighbor(&label(&[2]), 1, &p).is_err());
        let nbs = neighbors(&label(&[2]), &p).unwrap();
        assert_eq!(nbs, vec![(label(&[0]), 0), (label(&[1]), 0), (label(&[3]), 0)]);
    }

    #[test]
    fn rejects_invalid_labels_with_position() {
        let p = params(2, 2);
        match neighbors(&label(&[0, 2, 2]), &p) {
            Err(crate::error::Error::Label { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected label error, got {other:?}"),
        }
    }

    #[test]
    fn edge_between_copies_examples() {
        let p = params(1, 2);
        let (a, b) = edge_between_copies(1, &big(0), &big(1), None, &p).unwrap();
        assert_eq!((a, b), (label(&[0, 0]), label(&[1, 0])));

        // Top-level edge between copies 4 and 6 of D_{4,2}.
        let p = params(4, 2);
        let (a, b) = edge_between_copies(4, &big(4), &big(6), None, &p).unwrap();
        assert_eq!(a, label(&[4, 0, 0, 2, 1]));
        assert_eq!(b, label(&[6, 0, 0, 2, 0]));

        // Top-level edge between copies 7 and 14 of D_{3,4}.
        let p = params(3, 4);
        let (a, b) = edge_between_copies(3, &big(7), &big(14), None, &p).unwrap();
        assert_eq!(a, label(&[7, 0, 3, 1]));
        assert_eq!(b, label(&[14, 0, 1, 3]));
    }

    #[test]
    fn edge_between_copies_honors_prefix() {
        let p = params(2, 2);
        let prefix = [big(3)];
        let (a, b) = edge_between_copies(1, &big(0), &big(1), Some(&prefix), &p).unwrap();
        assert_eq!((a.clone(), b.clone()), (label(&[3, 0, 0]), label(&[3, 1, 0])));
        // And the endpoints really are level-1 partners.
        assert_eq!(level_neighbor(&a, 1, &p).unwrap(), b);
    }

    #[test]
    fn edge_between_copies_rejects_bad_arguments() {
        let p = params(2, 2);
        assert!(edge_between_copies(1, &big(1), &big(1), None, &p).is_err());
        assert!(edge_between_copies(1, &big(0), &big(3), None, &p).is_err());
        assert!(edge_between_copies(0, &big(0), &big(1), None, &p).is_err());
        assert!(edge_between_copies(1, &big(0), &big(1), Some(&[]), &p).is_err());
    }

    #[test]
    fn adjacency_level_recovers_levels() {
        let p = params(2, 2);
        let v = label(&[3, 1, 1]);
        assert_eq!(adjacency_level(&v, &label(&[3, 1, 0]), &p).unwrap(), Some(0));
        assert_eq!(adjacency_level(&v, &label(&[3, 2, 1]), &p).unwrap(), Some(1));
        assert_eq!(adjacency_level(&v, &label(&[4, 1, 1]), &p).unwrap(), Some(2));
        assert_eq!(adjacency_level(&v, &label(&[3, 0, 1]), &p).unwrap(), None);
        assert_eq!(adjacency_level(&v, &label(&[4, 1, 0]), &p).unwrap(), None);
        assert_eq!(adjacency_level(&v, &v, &p).unwrap(), None);
        assert!(adjacency_level(&v, &label(&[7, 0, 0]), &p).is_err());
    }

    #[test]
    fn adjacency_level_agrees_with_neighbors() {
        let p = params(2, 2);
        for m in 0..42u64 {
            let v = VertexLabel::from_uid(&big(m), &p).unwrap();
            for (nb, level) in neighbors(&v, &p).unwrap() {
                assert_eq!(adjacency_level(&v, &nb, &p).unwrap(), Some(level));
            }
        }
    }
}
