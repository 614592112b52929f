//! JSON graph documents and partition files.

use std::path::Path;

use anyhow::{bail, Context};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use szeged_core::index::{mode_edge_weights, WeightMode};
use szeged_core::rational::{parse_rational, to_exact_string};
use szeged_core::{Rational, StrengthWeightedGraph, Weights};

/// A weight in a document: an integer, or a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightValue {
    Integer(i64),
    Text(String),
}

impl WeightValue {
    pub fn from_rational(value: &Rational) -> Self {
        match value.is_integer().then(|| value.numer().to_i64()).flatten() {
            Some(i) => WeightValue::Integer(i),
            None => WeightValue::Text(to_exact_string(value)),
        }
    }

    pub fn to_rational(&self) -> anyhow::Result<Rational> {
        match self {
            WeightValue::Integer(i) => Ok(Rational::from_integer((*i).into())),
            WeightValue::Text(s) => parse_rational(s).with_context(|| format!("invalid weight {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wv: Option<WeightValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sv: Option<WeightValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: usize,
    pub v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub we: Option<WeightValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub se: Option<WeightValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

fn weight_or(value: &Option<WeightValue>, default: i64) -> anyhow::Result<Rational> {
    match value {
        Some(w) => w.to_rational(),
        None => Ok(Rational::from_integer(default.into())),
    }
}

impl GraphDocument {
    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("{} is not a graph document", path.display()))
    }

    /// Builds the graph. Missing `wv` and `se` are 1, missing `sv` is 0 and a
    /// missing `we` comes from `mode` (1 under `Stored`).
    pub fn to_graph(&self, mode: WeightMode) -> anyhow::Result<StrengthWeightedGraph> {
        let n = self.vertices.len();
        let mut slot = vec![None; n];
        for (i, vertex) in self.vertices.iter().enumerate() {
            if vertex.id >= n {
                bail!("vertex id {} out of range: ids must be 0..{}", vertex.id, n);
            }
            if slot[vertex.id].replace(i).is_some() {
                bail!("vertex id {} appears twice", vertex.id);
            }
        }
        let mut weights = Weights::normal(n, self.edges.len());
        for (id, &i) in slot.iter().enumerate() {
            let vertex = &self.vertices[i.expect("ids are dense")];
            weights.vertex_weight[id] = weight_or(&vertex.wv, 1)?;
            weights.vertex_strength[id] = weight_or(&vertex.sv, 0)?;
        }
        for (i, edge) in self.edges.iter().enumerate() {
            weights.edge_strength[i] = weight_or(&edge.se, 1)?;
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        let shape = StrengthWeightedGraph::unweighted(n, edges.clone())?;
        let derived = mode_edge_weights(&shape, mode);
        for (i, edge) in self.edges.iter().enumerate() {
            weights.edge_weight[i] = match (&edge.we, &derived) {
                (Some(w), _) => w.to_rational()?,
                (None, Some(d)) => d[i].clone(),
                (None, None) => Rational::from_integer(1.into()),
            };
        }
        Ok(StrengthWeightedGraph::new(n, edges, weights)?)
    }

    /// Every weight written out; `we` only when `with_edge_weight` is set.
    pub fn from_graph(g: &StrengthWeightedGraph, with_edge_weight: bool) -> Self {
        let vertices = (0..g.vertex_count())
            .map(|id| VertexEntry {
                id,
                wv: Some(WeightValue::from_rational(&g.vertex_weight()[id])),
                sv: Some(WeightValue::from_rational(&g.vertex_strength()[id])),
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| EdgeEntry {
                u,
                v,
                we: with_edge_weight.then(|| WeightValue::from_rational(&g.edge_weight()[i])),
                se: Some(WeightValue::from_rational(&g.edge_strength()[i])),
            })
            .collect();
        GraphDocument { vertices, edges }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// A partition file: a JSON list of edge-index lists.
pub fn read_groups(path: &Path) -> anyhow::Result<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not a list of edge-index lists", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use szeged_core::rational::{int, ratio};

    #[test]
    fn weights_round_trip() {
        for value in [int(0), int(7), ratio(43315, 2), ratio(-1, 3)] {
            assert_eq!(WeightValue::from_rational(&value).to_rational().unwrap(), value);
        }
        assert_eq!(WeightValue::from_rational(&int(54)), WeightValue::Integer(54));
    }

    #[test]
    fn defaults_follow_mode() {
        let doc: GraphDocument = serde_json::from_str(
            r#"{"vertices":[{"id":1},{"id":0,"wv":"5/2"},{"id":2}],"edges":[{"u":0,"v":1},{"u":1,"v":2,"we":9}]}"#,
        )
        .unwrap();
        let g = doc.to_graph(WeightMode::DegreeSum).unwrap();
        assert_eq!(g.vertex_weight(), &[ratio(5, 2), int(1), int(1)]);
        assert_eq!(g.edge_weight(), &[int(3), int(9)]);
        assert_eq!(g.vertex_strength(), &[int(0), int(0), int(0)]);
        let g = doc.to_graph(WeightMode::Stored).unwrap();
        assert_eq!(g.edge_weight(), &[int(1), int(9)]);
    }

    #[test]
    fn sparse_ids_are_rejected() {
        let doc: GraphDocument = serde_json::from_str(r#"{"vertices":[{"id":0},{"id":2}],"edges":[]}"#).unwrap();
        assert!(doc.to_graph(WeightMode::Unit).is_err());
        let doc: GraphDocument = serde_json::from_str(r#"{"vertices":[{"id":0},{"id":0}],"edges":[]}"#).unwrap();
        assert!(doc.to_graph(WeightMode::Unit).is_err());
        assert!(serde_json::from_str::<GraphDocument>(r#"{"vertices":[{"id":0,"wv":1.5}],"edges":[]}"#).is_err());
    }
}
