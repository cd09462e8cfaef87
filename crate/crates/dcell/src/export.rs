//! File formats for materialized topologies.
//!
//! Three writers (tab-separated edge list, Graphviz dot, JSON) and the
//! matching readers for the two machine formats. Writers emit edges in the
//! canonical order (first endpoint uid, level, second endpoint uid), so
//! output is byte-stable across runs.

use std::io;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::params::Params;
use crate::topology::Topology;

/// Tab-separated lines `label<TAB>label<TAB>level`, smaller uid first.
pub fn write_edgelist(topology: &Topology, out: &mut impl io::Write) -> io::Result<()> {
    for &(a, b, level) in topology.leveled_edges() {
        writeln!(out, "{}\t{}\t{}", topology.label_of(a), topology.label_of(b), level)?;
    }
    Ok(())
}

/// Graphviz source with the construction level as an edge attribute.
pub fn write_dot(topology: &Topology, out: &mut impl io::Write) -> io::Result<()> {
    writeln!(out, "graph {{")?;
    for &(a, b, level) in topology.leveled_edges() {
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [level={}];",
            topology.label_of(a),
            topology.label_of(b),
            level
        )?;
    }
    writeln!(out, "}}")
}

/// The JSON document shape: parameters, vertex count as a decimal string
/// (it can exceed every fixed-width integer), and labeled leveled edges.
#[derive(Serialize, Deserialize)]
struct JsonTopology {
    params: Params,
    t: String,
    edges: Vec<(VertexLabel, VertexLabel, u32)>,
}

/// Self-describing JSON, reimportable with [`read_json`].
pub fn write_json(topology: &Topology, out: &mut impl io::Write) -> io::Result<()> {
    let doc = JsonTopology {
        params: *topology.params(),
        t: topology.params().vertex_count().to_string(),
        edges: topology
            .leveled_edges()
            .iter()
            .map(|&(a, b, level)| {
                (topology.label_of(a).clone(), topology.label_of(b).clone(), level)
            })
            .collect(),
    };
    serde_json::to_writer(&mut *out, &doc).map_err(io::Error::other)?;
    writeln!(out)
}

/// Parses edge-list text into labeled leveled edges. The parameters are not
/// part of the format, so validation against the construction happens when
/// the caller feeds the result to [`Topology::from_leveled_edges`].
pub fn parse_edgelist(text: &str) -> Result<Vec<(VertexLabel, VertexLabel, u32)>> {
    let mut edges = Vec::new();
    for (number, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [a, b, level] = fields.as_slice() else {
            return Err(Error::parameter(format!(
                "line {}: expected 3 tab-separated fields, got {}",
                number + 1,
                fields.len()
            )));
        };
        let parse_label = |s: &str| {
            s.parse::<VertexLabel>()
                .map_err(|e| Error::parameter(format!("line {}: {e}", number + 1)))
        };
        let level: u32 = level
            .parse()
            .map_err(|_| Error::parameter(format!("line {}: bad level {level:?}", number + 1)))?;
        edges.push((parse_label(a)?, parse_label(b)?, level));
    }
    Ok(edges)
}

/// Reads edge-list text and validates it as a full D_{k,n} topology.
pub fn read_edgelist(params: &Params, text: &str) -> Result<Topology> {
    Topology::from_leveled_edges(params, &parse_edgelist(text)?)
}

/// Reads a JSON document written by [`write_json`], revalidating the edges
/// and the stated vertex count.
pub fn read_json(text: &str) -> Result<Topology> {
    let doc: JsonTopology =
        serde_json::from_str(text).map_err(|e| Error::parameter(format!("bad json: {e}")))?;
    let t = doc.params.vertex_count().to_string();
    if doc.t != t {
        return Err(Error::parameter(format!(
            "document says {} vertices, parameters give {t}",
            doc.t
        )));
    }
    Topology::from_leveled_edges(&doc.params, &doc.edges)
}
