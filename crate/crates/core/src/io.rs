//! Graph serialization: DOT (with a reader for our own output), JSON, and a CSV edge list.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cluster::{ColourCluster, ColouredGraph, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

/// Undirected DOT with one node line per vertex (`colour=i`, `label="v_i_j"`)
/// followed by one line per edge.
pub fn to_dot(cg: &ColouredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for x in cg.graph().vertices() {
        out.push_str(&format!(
            "  {x} [colour={}, label=\"{x}\"];\n",
            cg.colour(x)
        ));
    }
    for (a, b) in cg.graph().edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Reads DOT in the shape written by [`to_dot`]. Other DOT features are rejected.
pub fn from_dot(text: &str) -> Result<ColouredGraph> {
    let bad = |line: &str| Error::Parse(format!("unsupported DOT line {line:?}"));
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    match lines.next() {
        Some(h) if h.starts_with("graph") && h.ends_with('{') => {}
        other => {
            return Err(Error::Parse(format!(
                "expected `graph G {{`, got {other:?}"
            )))
        }
    }
    let mut colouring = Colouring::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for line in lines {
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err(bad(line));
        }
        let body = line.strip_suffix(';').ok_or_else(|| bad(line))?;
        if let Some((a, b)) = body.split_once("--") {
            edges.push((
                VertexLabel::parse_id(a.trim())?,
                VertexLabel::parse_id(b.trim())?,
            ));
        } else if let Some((id, attrs)) = body.split_once('[') {
            let x = VertexLabel::parse_id(id.trim())?;
            let attrs = attrs.strip_suffix(']').ok_or_else(|| bad(line))?;
            let colour = attrs
                .split(',')
                .filter_map(|kv| kv.trim().strip_prefix("colour="))
                .next()
                .ok_or_else(|| bad(line))?
                .parse::<u32>()
                .map_err(|_| bad(line))?;
            colouring.insert(x, colour);
        } else {
            return Err(bad(line));
        }
    }
    if !closed {
        return Err(Error::Parse("missing closing brace".into()));
    }
    let g = Graph::from_edges(colouring.keys().copied(), edges)?;
    ColouredGraph::from_colouring(g, colouring)
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    cluster: Vec<u32>,
    vertices: Vec<VertexLabel>,
    edges: Vec<[String; 2]>,
    colouring: BTreeMap<String, u32>,
}

pub fn to_json(cg: &ColouredGraph) -> String {
    let doc = GraphJson {
        cluster: cg.cluster().sizes().to_vec(),
        vertices: cg.graph().vertices().collect(),
        edges: cg.graph().edges().map(|(a, b)| [a.id(), b.id()]).collect(),
        colouring: cg.colouring().iter().map(|(x, &c)| (x.id(), c)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes") + "\n"
}

pub fn from_json(text: &str) -> Result<ColouredGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges = doc
        .edges
        .iter()
        .map(|[a, b]| Ok((VertexLabel::parse_id(a)?, VertexLabel::parse_id(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let colouring = doc
        .colouring
        .iter()
        .map(|(k, &c)| Ok((VertexLabel::parse_id(k)?, c)))
        .collect::<Result<Colouring>>()?;
    let g = Graph::from_edges(doc.vertices, edges)?;
    ColouredGraph::new(g, colouring, ColourCluster::new(doc.cluster)?)
}

/// Edge list with header `u,v,colour_u,colour_v`.
pub fn to_csv(cg: &ColouredGraph) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u", "v", "colour_u", "colour_v"])
        .expect("in-memory write");
    for (a, b) in cg.graph().edges() {
        w.write_record([
            a.id(),
            b.id(),
            cg.colour(a).to_string(),
            cg.colour(b).to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embodiment::{build, EmbodimentKind};

    fn sample() -> ColouredGraph {
        build(
            EmbodimentKind::Type1Complete,
            &ColourCluster::new(vec![5, 4, 3, 3]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn dot_round_trip() {
        let g = sample();
        let text = to_dot(&g);
        assert!(text.starts_with("graph G {\n"));
        assert!(text.contains("  v_1_1 [colour=1, label=\"v_1_1\"];\n"));
        assert!(text.contains("  v_1_1 -- v_2_1;\n"));
        assert_eq!(from_dot(&text).unwrap(), g);
    }

    #[test]
    fn dot_rejects_foreign_input() {
        assert!(from_dot("digraph G {\n}\n").is_err());
        assert!(from_dot("graph G {\n  a -> b;\n}\n").is_err());
        assert!(from_dot("graph G {\n  v_1_1 [colour=1];\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = sample();
        let text = to_json(&g);
        assert!(text.contains("\"class\": 1"));
        assert_eq!(from_json(&text).unwrap(), g);
    }

    #[test]
    fn csv_rows() {
        let g = build(
            EmbodimentKind::Type1Tree,
            &ColourCluster::new(vec![2, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            to_csv(&g),
            "u,v,colour_u,colour_v\nv_1_1,v_2_1,1,2\nv_1_2,v_2_1,1,2\n"
        );
    }
}
