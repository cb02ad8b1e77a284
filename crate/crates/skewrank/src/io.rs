//! File formats: graph JSON, witness matrix JSON, and DOT emission.
//!
//! Graph JSON is `{"n": 5, "edges": [[1,2], [2,3]]}` with 1-based endpoints
//! and `i < j`. Matrix JSON lists the strictly upper nonzero entries as exact
//! fraction strings: `{"n": 4, "upper": [[1, 2, "1"], [2, 3, "-2/3"]]}`.
//! Emitted documents carry a `schema_version` field; parsers accept input
//! with or without it.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::matrix::{parse_ratio, SkewMatrixQ};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

fn default_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> GraphJson {
        GraphJson {
            schema_version: SCHEMA_VERSION,
            n: g.order(),
            edges: g.edges(),
        }
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    Graph::new(parsed.n, parsed.edges)
}

#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: usize,
    pub upper: Vec<(usize, usize, String)>,
}

impl From<&SkewMatrixQ> for MatrixJson {
    fn from(m: &SkewMatrixQ) -> MatrixJson {
        MatrixJson {
            schema_version: SCHEMA_VERSION,
            n: m.order(),
            upper: m
                .upper_entries()
                .into_iter()
                .map(|(i, j, v)| (i, j, v.to_string()))
                .collect(),
        }
    }
}

pub fn matrix_to_json(m: &SkewMatrixQ) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("matrix serializes")
}

pub fn matrix_from_json(text: &str) -> Result<SkewMatrixQ> {
    let parsed: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let entries = parsed
        .upper
        .into_iter()
        .map(|(i, j, s)| parse_ratio(&s).map(|v| (i, j, v)))
        .collect::<Result<Vec<_>>>()?;
    SkewMatrixQ::from_upper(parsed.n, entries)
}

/// Graphviz DOT form, one vertex and one edge per line, deterministic order.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 1..=g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("  {i} -- {j};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ratio;

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::path(4).unwrap();
        let text = graph_to_json(&g);
        assert_eq!(graph_from_json(&text).unwrap(), g);
        // The bare schema without a version field parses too.
        let bare = r#"{"n": 3, "edges": [[1, 2], [1, 3]]}"#;
        let g = graph_from_json(bare).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3)]);
        assert!(graph_from_json(r#"{"n": 2, "edges": [[1, 1]]}"#).is_err());
        assert!(graph_from_json("not json").is_err());
    }

    #[test]
    fn matrix_json_round_trip() {
        let m =
            SkewMatrixQ::from_upper(3, [(1, 2, ratio(2)), (2, 3, parse_ratio("-5/7").unwrap())])
                .unwrap();
        let text = matrix_to_json(&m);
        assert!(text.contains("-5/7"));
        assert_eq!(matrix_from_json(&text).unwrap(), m);
        assert!(matrix_from_json(r#"{"n": 2, "upper": [[2, 1, "1"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"n": 2, "upper": [[1, 2, "x"]]}"#).is_err());
    }

    #[test]
    fn dot_output_shape() {
        let dot = graph_to_dot(&Graph::path(3).unwrap());
        assert_eq!(dot, "graph {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
    }
}
