//! Cross-checks of the documented properties of the construction.
//!
//! Each claim recomputes one published figure or structural statement from
//! scratch and compares it with the expected value. A claim fails only on a
//! value mismatch; anything that prevents computing the value at all is an
//! error, not a failed claim.

use serde::Serialize;
use std::fmt::Write as _;

use crate::certify::{
    decide, exhaustive_orbits, invariant_partition, DecideBudget, Decision, EXHAUSTIVE_VERTEX_CAP,
};
use crate::cycles::{
    blocked_extension_check, cycle_census_graph, cycles_through, verify_cycle, witness_pair,
    CycleBackend,
};
use crate::error::Result;
use crate::label::VertexLabel;
use crate::params::Params;
use crate::symmetry::HSpec;
use crate::topology::{Topology, DEFAULT_VERTEX_BUDGET};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
}

/// One recomputed statement: what was expected, what came out.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub location: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
}

impl Claim {
    fn equal(id: &str, location: &str, expected: String, computed: String) -> Claim {
        let status = if expected == computed { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Claim { id: id.to_string(), location: location.to_string(), expected, computed, status }
    }
}

/// All claims, sorted by id, with pass/fail totals.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claims: Vec<Claim>,
    pub passed: usize,
    pub failed: usize,
}

impl ClaimReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Fail)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("claim report serializes")
    }
}

fn params(k: u32, n: u32) -> Result<Params> {
    Params::new(k, n)
}

fn build(k: u32, n: u32) -> Result<Topology> {
    Topology::build(&params(k, n)?, DEFAULT_VERTEX_BUDGET)
}

fn label(coords: &[u64]) -> VertexLabel {
    VertexLabel::from_u64s(coords)
}

fn count_through(k: u32, n: u32, root: &VertexLabel) -> Result<u64> {
    let p = params(k, n)?;
    Ok(cycles_through(CycleBackend::Implicit(&p), root, 6, false)?.count)
}

fn claim_construction_sizes() -> Result<Claim> {
    let mut computed = Vec::new();
    for (k, n) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        computed.push(params(k, n)?.vertex_count().to_string());
    }
    Ok(Claim::equal(
        "CONSTRUCTION_SIZES",
        "recursive construction",
        "6, 42, 1806, 12, 156".to_string(),
        computed.join(", "),
    ))
}

fn claim_depth_zero_shapes() -> Result<Claim> {
    let edge = build(0, 2)?;
    let triangle = build(0, 3)?;
    let triangle_census = cycle_census_graph(triangle.graph(), 3)?;
    let computed = format!(
        "{} vertices, {} edge; {} vertices, {} edges, triangle count {:?}",
        edge.vertex_count(),
        edge.graph().edge_count(),
        triangle.vertex_count(),
        triangle.graph().edge_count(),
        triangle_census.distribution().into_iter().collect::<Vec<_>>(),
    );
    Ok(Claim::equal(
        "DEPTH_ZERO_SHAPES",
        "base of the recursion",
        "2 vertices, 1 edge; 3 vertices, 3 edges, triangle count [(1, 3)]".to_string(),
        computed,
    ))
}

fn claim_d12_is_c6() -> Result<Claim> {
    let t = build(1, 2)?;
    let degrees: Vec<usize> = (0..t.vertex_count() as u32).map(|v| t.graph().degree(v)).collect();
    let census = cycle_census_graph(t.graph(), 6)?;
    let computed = format!(
        "{} vertices, {} edges, degrees {:?}, 6-cycle counts {:?}",
        t.vertex_count(),
        t.graph().edge_count(),
        degrees,
        census.distribution().into_iter().collect::<Vec<_>>(),
    );
    Ok(Claim::equal(
        "D12_IS_C6",
        "smallest non-trivial instance",
        "6 vertices, 6 edges, degrees [2, 2, 2, 2, 2, 2], 6-cycle counts [(1, 6)]".to_string(),
        computed,
    ))
}

fn claim_edge_count_law() -> Result<Claim> {
    let instances = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (2, 4), (3, 2)];
    let mut matching = 0usize;
    let mut detail = String::new();
    for (k, n) in instances {
        let t = build(k, n)?;
        let total: u64 = t.vertex_count() as u64;
        let expected_level0 = total * (n as u64 - 1) / 2;
        let expected_upper = total / 2;
        let ok = (0..=k).all(|j| {
            let expected = if j == 0 { expected_level0 } else { expected_upper };
            t.level_edge_count(j) == expected
        });
        if ok {
            matching += 1;
        } else if detail.is_empty() {
            write!(detail, " (first mismatch at k={k}, n={n})").expect("write to string");
        }
    }
    Ok(Claim::equal(
        "EDGE_COUNT_LAW",
        "level edge counts",
        format!("{}/{} instances", instances.len(), instances.len()),
        format!("{matching}/{} instances{detail}", instances.len()),
    ))
}

fn verified_pairs(spec: &HSpec) -> Result<u64> {
    let t = spec.induced_graph().vertex_count() as u32;
    let mut verified = 0u64;
    for i in 0..t {
        for j in 0..t {
            let auto = spec.transitivity_map(spec.vertex_at(i), spec.vertex_at(j))?;
            if auto.verified().is_pass() && auto.apply(i) == j {
                verified += 1;
            }
        }
    }
    Ok(verified)
}

fn claim_depth_one_all_pairs() -> Result<Claim> {
    let mut verified = 0u64;
    let mut total = 0u64;
    for n in 2..=6u32 {
        let spec = HSpec::d1(n)?;
        let t = (n * (n + 1)) as u64;
        total += t * t;
        verified += verified_pairs(&spec)?;
    }
    Ok(Claim::equal(
        "DEPTH_ONE_ALL_PAIRS",
        "depth-1 transitivity certificates",
        format!("{total}/{total} verified"),
        format!("{verified}/{total} verified"),
    ))
}

fn claim_depth_one_any_wiring() -> Result<Claim> {
    let mut verified = 0u64;
    let wirings = 5u64;
    let n = 4u32;
    let t = (n * (n + 1)) as u64;
    let total = wirings * t * t;
    for seed in 0..wirings {
        let mut rng = StdRng::seed_from_u64(100 + seed);
        let spec = HSpec::random(n, &mut rng)?;
        verified += verified_pairs(&spec)?;
    }
    Ok(Claim::equal(
        "DEPTH_ONE_ANY_WIRING",
        "wiring-independent transitivity",
        format!("{total}/{total} verified"),
        format!("{verified}/{total} verified"),
    ))
}

fn claim_depth_one_single_orbit() -> Result<Claim> {
    let mut counts = Vec::new();
    for n in 2..=4u32 {
        let t = build(1, n)?;
        counts.push(exhaustive_orbits(&t, EXHAUSTIVE_VERTEX_CAP)?.block_count().to_string());
    }
    Ok(Claim::equal(
        "DEPTH_ONE_SINGLE_ORBIT",
        "depth-1 orbit structure",
        "1, 1, 1".to_string(),
        counts.join(", "),
    ))
}

fn claim_unique_six_cycle() -> Result<Claim> {
    let computed = count_through(2, 2, &label(&[0, 2, 1]))?;
    Ok(Claim::equal(
        "D22_UNIQUE_CYCLE",
        "six-cycle counts",
        "1".to_string(),
        computed.to_string(),
    ))
}

fn claim_heavy_vertex() -> Result<Claim> {
    let computed = count_through(2, 2, &label(&[3, 1, 1]))?;
    Ok(Claim::equal(
        "D22_HEAVY_VERTEX",
        "six-cycle counts",
        "2".to_string(),
        computed.to_string(),
    ))
}

fn claim_crossing_cycle() -> Result<Claim> {
    let cycle: Vec<VertexLabel> = [
        [3u64, 1, 1],
        [3, 1, 0],
        [2, 1, 0],
        [2, 1, 1],
        [4, 1, 0],
        [4, 1, 1],
    ]
    .iter()
    .map(|c| label(c))
    .collect();
    let p = params(2, 2)?;
    let valid = verify_cycle(&cycle, &p).is_ok();
    let witnesses =
        cycles_through(CycleBackend::Implicit(&p), &cycle[0], 6, true)?.witnesses.unwrap_or_default();
    let listed = witnesses.iter().any(|w| w.vertices() == cycle.as_slice());
    Ok(Claim::equal(
        "D22_CROSSING_CYCLE",
        "explicit cycle through three copies",
        "valid and listed".to_string(),
        match (valid, listed) {
            (true, true) => "valid and listed".to_string(),
            (v, l) => format!("valid: {v}, listed: {l}"),
        },
    ))
}

fn claim_not_vertex_transitive() -> Result<Claim> {
    let t = build(2, 2)?;
    let orbits = exhaustive_orbits(&t, EXHAUSTIVE_VERTEX_CAP)?.block_count();
    Ok(Claim::equal(
        "D22_NOT_VT",
        "orbit structure of the corrected instance",
        "21 orbits (more than one)".to_string(),
        format!("{orbits} orbits ({})", if orbits > 1 { "more than one" } else { "single" }),
    ))
}

fn claim_orbit_separation() -> Result<Claim> {
    let t = build(2, 2)?;
    let u = t.index_of(&label(&[0, 2, 1])).expect("vertex exists");
    let v = t.index_of(&label(&[3, 1, 1])).expect("vertex exists");
    let orbits = exhaustive_orbits(&t, EXHAUSTIVE_VERTEX_CAP)?;
    let refined = invariant_partition(&t, &[6])?;
    let computed = match (orbits.same_block(u, v), refined.same_block(u, v)) {
        (false, false) => "separated by orbits and by counts".to_string(),
        (o, r) => format!("same orbit: {o}, same count class: {r}"),
    };
    Ok(Claim::equal(
        "D22_WITNESS_SEPARATION",
        "orbit structure of the corrected instance",
        "separated by orbits and by counts".to_string(),
        computed,
    ))
}

fn claim_unique_cycle_deeper() -> Result<Claim> {
    let mut pairs = Vec::new();
    for k in 2..=4u32 {
        let (u, v) = witness_pair(&params(k, 2)?)?;
        let cu = count_through(k, 2, &u)?;
        let cv = count_through(k, 2, &v)?;
        pairs.push(format!("({cu}, {cv})"));
    }
    Ok(Claim::equal(
        "WITNESS_COUNTS_DEEPER",
        "six-cycle counts at deeper levels, n=2",
        "(1, 2), (1, 2), (1, 2)".to_string(),
        pairs.join(", "),
    ))
}

fn claim_baseline_counts() -> Result<Claim> {
    let mut counts = Vec::new();
    for n in 2..=6u32 {
        let t = build(1, n)?;
        let census = cycle_census_graph(t.graph(), 6)?;
        let distribution = census.distribution();
        if distribution.len() != 1 {
            counts.push(format!("non-uniform {distribution:?}"));
        } else {
            counts.push(distribution.keys().next().expect("one entry").to_string());
        }
    }
    Ok(Claim::equal(
        "DEPTH_ONE_BASELINE_COUNTS",
        "six-cycle counts of depth-1 instances",
        "1, 2, 3, 4, 65".to_string(),
        counts.join(", "),
    ))
}

fn claim_separation_wider() -> Result<Claim> {
    let baseline = |n: u32| -> Result<u64> {
        let t = build(1, n)?;
        Ok(cycle_census_graph(t.graph(), 6)?.count_of(0))
    };
    let mut lines = Vec::new();
    let mut all_ordered = true;
    for (k, n) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
        let (u, v) = witness_pair(&params(k, n)?)?;
        let cu = count_through(k, n, &u)?;
        let cv = count_through(k, n, &v)?;
        let base = baseline(n)?;
        all_ordered &= cu > base && base >= cv;
        lines.push(format!("({cu}, {cv})"));
    }
    let ordering = if all_ordered { "strict gap through the baseline" } else { "ordering broken" };
    Ok(Claim::equal(
        "WITNESS_COUNTS_WIDER",
        "six-cycle counts at wider n",
        "(5, 2), (7, 3), (9, 2), (12, 3); strict gap through the baseline".to_string(),
        format!("{}; {ordering}", lines.join(", ")),
    ))
}

fn format_bridges(k: u32, n: u32) -> Result<(String, String, bool)> {
    let p = params(k, n)?;
    let (u, v) = witness_pair(&p)?;
    let root = if n == 2 { u } else { v };
    let report = blocked_extension_check(&root, &p, 6)?;
    let copies = report
        .candidates
        .iter()
        .map(|c| c.copy.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let bridges = report
        .candidates
        .iter()
        .map(|c| format!("({})-({})", c.bridge.0, c.bridge.1))
        .collect::<Vec<_>>()
        .join("; ");
    Ok((copies, bridges, report.all_blocked()))
}

fn claim_candidate_copies_n2() -> Result<Claim> {
    let (copies, _, _) = format_bridges(4, 2)?;
    Ok(Claim::equal(
        "CANDIDATE_COPIES_N2",
        "closing-path candidates at depth 4, n=2",
        "5, 4, 37, 253".to_string(),
        copies,
    ))
}

fn claim_bridge_edges_n2() -> Result<Claim> {
    let (_, bridges, blocked) = format_bridges(4, 2)?;
    let expected = "(5,0,0,2,1)-(6,0,0,2,1); (4,0,0,2,1)-(6,0,0,2,0); \
                    (6,0,6,0,0)-(37,0,1,0,0); (6,6,0,0,0)-(253,0,1,0,0)";
    Ok(Claim::equal(
        "BRIDGE_EDGES_N2",
        "closing-path bridge edges at depth 4, n=2",
        format!("{expected}; all blocked"),
        format!("{bridges}; {}", if blocked { "all blocked" } else { "some admit a cycle" }),
    ))
}

fn claim_candidate_copies_n4() -> Result<Claim> {
    let (copies, _, _) = format_bridges(3, 4)?;
    Ok(Claim::equal(
        "CANDIDATE_COPIES_N4",
        "closing-path candidates at depth 3, n=4",
        "5, 6, 8, 14, 141".to_string(),
        copies,
    ))
}

fn claim_bridge_edges_n4() -> Result<Claim> {
    let (_, bridges, blocked) = format_bridges(3, 4)?;
    let expected = "(5,0,1,2)-(7,0,1,1); (6,0,1,2)-(7,0,1,2); (7,0,1,3)-(8,0,1,3); \
                    (7,0,3,1)-(14,0,1,3); (7,7,0,0)-(141,0,1,3)";
    Ok(Claim::equal(
        "BRIDGE_EDGES_N4",
        "closing-path bridge edges at depth 3, n=4",
        format!("{expected}; all blocked"),
        format!("{bridges}; {}", if blocked { "all blocked" } else { "some admit a cycle" }),
    ))
}

fn claim_decision_matrix() -> Result<Claim> {
    let budget = DecideBudget::default();
    let mut matching = 0usize;
    let mut detail = String::new();
    for k in 0..=3u32 {
        for n in 2..=4u32 {
            let verdict = decide(&params(k, n)?, &budget)?;
            let expected =
                if k <= 1 { Decision::Transitive } else { Decision::NotTransitive };
            if verdict.decision == expected {
                matching += 1;
            } else if detail.is_empty() {
                write!(detail, " (first mismatch at k={k}, n={n})").expect("write to string");
            }
        }
    }
    Ok(Claim::equal(
        "DECISION_MATRIX",
        "decision procedure",
        "12/12 instances".to_string(),
        format!("{matching}/12 instances{detail}"),
    ))
}

/// Recomputes every documented figure and statement. Claims come back
/// sorted by id.
pub fn paper_check() -> Result<ClaimReport> {
    let mut claims = vec![
        claim_construction_sizes()?,
        claim_depth_zero_shapes()?,
        claim_d12_is_c6()?,
        claim_edge_count_law()?,
        claim_depth_one_all_pairs()?,
        claim_depth_one_any_wiring()?,
        claim_depth_one_single_orbit()?,
        claim_unique_six_cycle()?,
        claim_heavy_vertex()?,
        claim_crossing_cycle()?,
        claim_not_vertex_transitive()?,
        claim_orbit_separation()?,
        claim_unique_cycle_deeper()?,
        claim_baseline_counts()?,
        claim_separation_wider()?,
        claim_candidate_copies_n2()?,
        claim_bridge_edges_n2()?,
        claim_candidate_copies_n4()?,
        claim_bridge_edges_n4()?,
        claim_decision_matrix()?,
    ];
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = claims.iter().filter(|c| c.status == ClaimStatus::Pass).count();
    let failed = claims.len() - passed;
    Ok(ClaimReport { claims, passed, failed })
}
