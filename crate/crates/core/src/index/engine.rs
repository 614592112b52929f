use std::borrow::Cow;

use num_traits::Zero;
use rayon::prelude::*;

use super::{EdgeQuantities, IndexDescriptor, WeightMode};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, StrengthWeightedGraph, Weights};
use crate::quotient::quotient_by_group;
use crate::rational::Rational;
use crate::theta::EdgePartition;

/// Largest vertex-pair table `ti_direct` will allocate; above it distances
/// are recomputed by BFS per edge.
pub const DISTANCE_TABLE_CELL_LIMIT: usize = 100_000_000;

/// Degree-derived edge weights, or `None` for [`WeightMode::Stored`].
pub fn mode_edge_weights(g: &StrengthWeightedGraph, mode: WeightMode) -> Option<Vec<Rational>> {
    let weight = |&(u, v): &(usize, usize)| -> Rational {
        let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
        match mode {
            WeightMode::Unit => Rational::from_integer(1.into()),
            WeightMode::DegreeSum => Rational::from_integer((du + dv).into()),
            WeightMode::DegreeProduct => Rational::from_integer((du * dv).into()),
            WeightMode::Stored => unreachable!(),
        }
    };
    match mode {
        WeightMode::Stored => None,
        _ => Some(g.edges().iter().map(weight).collect()),
    }
}

/// The graph with `w_e` replaced according to `mode`; other weights untouched.
pub fn apply_weight_mode(g: &StrengthWeightedGraph, mode: WeightMode) -> Cow<'_, StrengthWeightedGraph> {
    match mode_edge_weights(g, mode) {
        None => Cow::Borrowed(g),
        Some(w) => Cow::Owned(g.with_edge_weights(w).expect("degree weights are nonnegative")),
    }
}

/// Normal strength weights: `w_v = 1`, `s_e = 1`, `s_v = 0`, and `w_e` from
/// `mode` (`Stored` keeps the existing `w_e`).
pub fn normally_weight(g: &StrengthWeightedGraph, mode: WeightMode) -> Result<StrengthWeightedGraph> {
    g.ensure_connected()?;
    let mut weights = Weights::normal(g.vertex_count(), g.edge_count());
    weights.edge_weight = mode_edge_weights(g, mode).unwrap_or_else(|| g.edge_weight().to_vec());
    StrengthWeightedGraph::new(g.vertex_count(), g.edges().to_vec(), weights)
}

struct Totals {
    vertex_weight: Rational,
    strength: Rational,
}

impl Totals {
    fn of(g: &StrengthWeightedGraph) -> Self {
        Totals { vertex_weight: g.total_vertex_weight(), strength: g.total_strength() }
    }
}

/// Quantities of one edge from the BFS rows of its two endpoints.
fn quantities_from_rows(g: &StrengthWeightedGraph, du: &[u32], dv: &[u32], totals: &Totals) -> EdgeQuantities {
    let mut n_u = Rational::zero();
    let mut n_v = Rational::zero();
    let mut m_u = Rational::zero();
    let mut m_v = Rational::zero();
    let (wv, sv, se) = (g.vertex_weight(), g.vertex_strength(), g.edge_strength());

    for x in 0..g.vertex_count() {
        let (n, m) = match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => (&mut n_u, &mut m_u),
            std::cmp::Ordering::Greater => (&mut n_v, &mut m_v),
            std::cmp::Ordering::Equal => continue,
        };
        if !wv[x].is_zero() {
            *n += &wv[x];
        }
        if !sv[x].is_zero() {
            *m += &sv[x];
        }
    }
    for (f, &(a, b)) in g.edges().iter().enumerate() {
        if se[f].is_zero() {
            continue;
        }
        let to_u = du[a].min(du[b]);
        let to_v = dv[a].min(dv[b]);
        match to_u.cmp(&to_v) {
            std::cmp::Ordering::Less => m_u += &se[f],
            std::cmp::Ordering::Greater => m_v += &se[f],
            std::cmp::Ordering::Equal => {}
        }
    }

    let n_0 = &totals.vertex_weight - &n_u - &n_v;
    let m_0 = &totals.strength - &m_u - &m_v;
    EdgeQuantities { n_u, n_v, n_0, m_u, m_v, m_0 }
}

/// The six quantities of edge `e` (by index), oriented as stored.
pub fn edge_quantities(g: &StrengthWeightedGraph, d: &DistanceMatrix, e: usize) -> EdgeQuantities {
    let (u, v) = g.edge(e);
    quantities_from_rows(g, d.row(u), d.row(v), &Totals::of(g))
}

/// Quantities of every edge. They do not depend on `w_e` or `F`, so one table
/// serves every index of the same graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantityTable {
    quantities: Vec<EdgeQuantities>,
}

impl QuantityTable {
    pub fn compute(g: &StrengthWeightedGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n.saturating_mul(n) <= DISTANCE_TABLE_CELL_LIMIT {
            let d = g.all_pairs_distances()?;
            Ok(Self::from_distances(g, &d))
        } else {
            Self::compute_with_bfs(g)
        }
    }

    pub fn from_distances(g: &StrengthWeightedGraph, d: &DistanceMatrix) -> Self {
        let totals = Totals::of(g);
        let quantities =
            g.edges().par_iter().map(|&(u, v)| quantities_from_rows(g, d.row(u), d.row(v), &totals)).collect();
        QuantityTable { quantities }
    }

    /// Two BFS runs per edge, no vertex-pair table.
    pub fn compute_with_bfs(g: &StrengthWeightedGraph) -> Result<Self> {
        g.ensure_connected()?;
        let totals = Totals::of(g);
        let quantities =
            g.edges().par_iter().map(|&(u, v)| quantities_from_rows(g, &g.bfs(u), &g.bfs(v), &totals)).collect();
        Ok(QuantityTable { quantities })
    }

    pub fn quantities(&self) -> &[EdgeQuantities] {
        &self.quantities
    }

    /// `Σ_e w_e(e) F(e)` with `w_e` chosen by the descriptor's mode.
    pub fn index(&self, g: &StrengthWeightedGraph, idx: &IndexDescriptor) -> Result<Rational> {
        assert_eq!(self.quantities.len(), g.edge_count(), "table belongs to another graph");
        let weights = mode_edge_weights(g, idx.weight_mode);
        let weights = weights.as_deref().unwrap_or(g.edge_weight());
        weighted_sum(weights, self.quantities.iter(), idx)
    }
}

fn weighted_sum<'a>(
    weights: &[Rational],
    quantities: impl Iterator<Item = &'a EdgeQuantities>,
    idx: &IndexDescriptor,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for (w, q) in weights.iter().zip(quantities) {
        let value = idx.function.evaluate(q)?;
        if !w.is_zero() {
            total += w * value;
        }
    }
    Ok(total)
}

/// Evaluates the index straight from its definition.
pub fn ti_direct(g: &StrengthWeightedGraph, idx: &IndexDescriptor) -> Result<Rational> {
    QuantityTable::compute(g)?.index(g, idx)
}

/// [`ti_direct`] without the vertex-pair distance table.
pub fn ti_direct_with_bfs(g: &StrengthWeightedGraph, idx: &IndexDescriptor) -> Result<Rational> {
    QuantityTable::compute_with_bfs(g)?.index(g, idx)
}

fn check_partition_fits(g: &StrengthWeightedGraph, p: &EdgePartition) -> Result<()> {
    let covered: usize = p.groups().iter().map(Vec::len).sum();
    if covered != g.edge_count() || p.groups().iter().flatten().any(|&e| e >= g.edge_count()) {
        return Err(Error::NotEdgePartition(format!("partition covers {covered} edges, graph has {}", g.edge_count())));
    }
    Ok(())
}

fn cut_sum(
    g: &StrengthWeightedGraph,
    p: &EdgePartition,
    idx: &IndexDescriptor,
    per_quotient: impl Fn(&StrengthWeightedGraph, &IndexDescriptor) -> Result<Rational> + Sync,
) -> Result<Rational> {
    g.ensure_connected()?;
    check_partition_fits(g, p)?;
    let weighted = apply_weight_mode(g, idx.weight_mode);
    let stored = idx.with_weight_mode(WeightMode::Stored);
    let parts: Vec<Rational> = p
        .groups()
        .par_iter()
        .map(|group| {
            let q = quotient_by_group(&weighted, group)?;
            per_quotient(q.graph(), &stored)
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().sum())
}

/// Cut method: the sum of the index over the quotients `G / E_i`, each with
/// its induced weights used as stored.
pub fn ti_cut(g: &StrengthWeightedGraph, p: &EdgePartition, idx: &IndexDescriptor) -> Result<Rational> {
    cut_sum(g, p, idx, ti_direct)
}

/// Cut method where every quotient must be a tree and is evaluated with
/// [`ti_tree`].
pub fn ti_cut_tree(g: &StrengthWeightedGraph, p: &EdgePartition, idx: &IndexDescriptor) -> Result<Rational> {
    cut_sum(g, p, idx, ti_tree)
}

/// Linear-time evaluation on a tree: one traversal accumulating subtree
/// vertex weight and subtree strength.
pub fn ti_tree(t: &StrengthWeightedGraph, idx: &IndexDescriptor) -> Result<Rational> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.vertex_count();
    let (wv, sv, se) = (t.vertex_weight(), t.vertex_strength(), t.edge_strength());

    // Preorder from vertex 0 with parent edges.
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in t.neighbors(x) {
            if !visited[y] {
                visited[y] = true;
                parent[y] = x;
                parent_edge[y] = t.edge_index(x, y).expect("neighbor edge exists");
                stack.push(y);
            }
        }
    }

    // Subtree sums in reverse preorder.
    let mut sub_weight: Vec<Rational> = wv.to_vec();
    let mut sub_strength: Vec<Rational> = sv.to_vec();
    for &x in order.iter().rev().take(n - 1) {
        let p = parent[x];
        let (w, s) = (sub_weight[x].clone(), &sub_strength[x] + &se[parent_edge[x]]);
        sub_weight[p] += w;
        sub_strength[p] += s;
    }

    let total_weight = &sub_weight[0];
    let total_strength = &sub_strength[0];
    let mut quantities = vec![None; t.edge_count()];
    for &child in &order[1..] {
        let e = parent_edge[child];
        let below_weight = sub_weight[child].clone();
        let below_strength = sub_strength[child].clone();
        let above_weight = total_weight - &below_weight;
        let above_strength = total_strength - &below_strength - &se[e];
        let (n_u, n_v, m_u, m_v) = if t.edge(e).0 == child {
            (below_weight, above_weight, below_strength, above_strength)
        } else {
            (above_weight, below_weight, above_strength, below_strength)
        };
        quantities[e] = Some(EdgeQuantities { n_u, n_v, n_0: Rational::zero(), m_u, m_v, m_0: se[e].clone() });
    }

    let weights = mode_edge_weights(t, idx.weight_mode);
    let weights = weights.as_deref().unwrap_or(t.edge_weight());
    weighted_sum(weights, quantities.iter().map(|q| q.as_ref().expect("every tree edge visited")), idx)
}
