//! Strength-weighted quotient graphs `G / E_i`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{StrengthWeightedGraph, Weights};
use crate::rational::Rational;
use crate::theta::UnionFind;

/// Quotient of a graph by one edge group.
///
/// Vertices are the components of the graph with the group removed, ordered
/// by their smallest original vertex. Quotient edges are ordered by the
/// smallest original edge in their fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    graph: StrengthWeightedGraph,
    component_map: Vec<usize>,
    edge_fibers: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn graph(&self) -> &StrengthWeightedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> StrengthWeightedGraph {
        self.graph
    }

    /// Quotient vertex holding each original vertex.
    pub fn component_map(&self) -> &[usize] {
        &self.component_map
    }

    /// Original edges over each quotient edge.
    pub fn edge_fibers(&self) -> &[Vec<usize>] {
        &self.edge_fibers
    }
}

/// Builds `G / group` with the induced weights
///
/// * `w_v(X)` = Σ `w_v` over the vertices of X
/// * `s_v(X)` = Σ `s_v` over the vertices of X + Σ `s_e` over the edges of X
/// * `w_e(E)`, `s_e(E)` = Σ over the fiber of E.
pub fn quotient_by_group(g: &StrengthWeightedGraph, group: &[usize]) -> Result<QuotientGraph> {
    let m = g.edge_count();
    let mut in_group = vec![false; m];
    for &e in group {
        if e >= m {
            return Err(Error::GroupNotSubsetOfEdges(e));
        }
        in_group[e] = true;
    }

    let mut uf = UnionFind::new(g.vertex_count());
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        if !in_group[i] {
            uf.union(x, y);
        }
    }
    let components = uf.groups();
    let mut component_map = vec![0; g.vertex_count()];
    for (c, members) in components.iter().enumerate() {
        for &x in members {
            component_map[x] = c;
        }
    }

    let k = components.len();
    let mut vertex_weight = vec![Rational::zero(); k];
    let mut vertex_strength = vec![Rational::zero(); k];
    for (x, &c) in component_map.iter().enumerate() {
        vertex_weight[c] += &g.vertex_weight()[x];
        vertex_strength[c] += &g.vertex_strength()[x];
    }

    let mut edges = Vec::new();
    let mut edge_fibers: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        let (cx, cy) = (component_map[x], component_map[y]);
        if !in_group[i] {
            vertex_strength[cx] += &g.edge_strength()[i];
            continue;
        }
        if cx == cy {
            return Err(Error::GroupEdgeWithinComponent(i));
        }
        let key = (cx.min(cy), cx.max(cy));
        let index = *slot.entry(key).or_insert_with(|| {
            edges.push((cx, cy));
            edge_fibers.push(Vec::new());
            edges.len() - 1
        });
        edge_fibers[index].push(i);
    }

    let edge_weight = edge_fibers.iter().map(|f| f.iter().map(|&e| &g.edge_weight()[e]).sum()).collect();
    let edge_strength = edge_fibers.iter().map(|f| f.iter().map(|&e| &g.edge_strength()[e]).sum()).collect();
    let weights = Weights { vertex_weight, vertex_strength, edge_weight, edge_strength };
    let graph = StrengthWeightedGraph::new(k, edges, weights)?;
    Ok(QuotientGraph { graph, component_map, edge_fibers })
}
