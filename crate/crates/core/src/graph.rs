//! Simple undirected graphs carrying vertex and edge weights.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Marker for an unreachable vertex in a BFS row.
pub const UNREACHABLE: u32 = u32::MAX;

/// The four weight tables of a strength-weighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    pub vertex_weight: Vec<Rational>,
    pub vertex_strength: Vec<Rational>,
    pub edge_weight: Vec<Rational>,
    pub edge_strength: Vec<Rational>,
}

impl Weights {
    /// `w_v = 1`, `s_v = 0`, `w_e = 1`, `s_e = 1`.
    pub fn normal(vertex_count: usize, edge_count: usize) -> Self {
        Weights {
            vertex_weight: vec![Rational::one(); vertex_count],
            vertex_strength: vec![Rational::zero(); vertex_count],
            edge_weight: vec![Rational::one(); edge_count],
            edge_strength: vec![Rational::one(); edge_count],
        }
    }
}

/// A simple finite graph with vertex weights `w_v`, vertex strengths `s_v`,
/// edge weights `w_e` and edge strengths `s_e`.
///
/// Vertices are `0..vertex_count`. The edge list keeps the order it was
/// built with; every edge-indexed table in the crate refers to that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthWeightedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    edge_lookup: HashMap<(usize, usize), usize>,
    weights: Weights,
}

impl StrengthWeightedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, weights: Weights) -> Result<Self> {
        check_len("w_v", vertex_count, weights.vertex_weight.len())?;
        check_len("s_v", vertex_count, weights.vertex_strength.len())?;
        check_len("w_e", edges.len(), weights.edge_weight.len())?;
        check_len("s_e", edges.len(), weights.edge_strength.len())?;
        check_nonnegative("w_v", &weights.vertex_weight)?;
        check_nonnegative("s_v", &weights.vertex_strength)?;
        check_nonnegative("w_e", &weights.edge_weight)?;
        check_nonnegative("s_e", &weights.edge_strength)?;

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_lookup = HashMap::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            for id in [u, v] {
                if id >= vertex_count {
                    return Err(Error::IdOutOfRange { id, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
            if edge_lookup.insert(key(u, v), index).is_some() {
                return Err(Error::DuplicateEdge { index, u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }
        Ok(StrengthWeightedGraph { vertex_count, edges, adjacency, edge_lookup, weights })
    }

    /// Graph with normal unit weights (see [`Weights::normal`]).
    pub fn unweighted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let weights = Weights::normal(vertex_count, edges.len());
        Self::new(vertex_count, edges, weights)
    }

    /// Same graph with the edge weight table replaced.
    pub fn with_edge_weights(&self, edge_weight: Vec<Rational>) -> Result<Self> {
        check_len("w_e", self.edges.len(), edge_weight.len())?;
        check_nonnegative("w_e", &edge_weight)?;
        let mut out = self.clone();
        out.weights.edge_weight = edge_weight;
        Ok(out)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Index of the edge joining `u` and `v`, in either orientation.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&key(u, v)).copied()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn vertex_weight(&self) -> &[Rational] {
        &self.weights.vertex_weight
    }

    pub fn vertex_strength(&self) -> &[Rational] {
        &self.weights.vertex_strength
    }

    pub fn edge_weight(&self) -> &[Rational] {
        &self.weights.edge_weight
    }

    pub fn edge_strength(&self) -> &[Rational] {
        &self.weights.edge_strength
    }

    /// `Σ w_v`.
    pub fn total_vertex_weight(&self) -> Rational {
        self.weights.vertex_weight.iter().sum()
    }

    /// `Σ s_v + Σ s_e`.
    pub fn total_strength(&self) -> Rational {
        self.weights.vertex_strength.iter().chain(&self.weights.edge_strength).sum()
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &y in &self.adjacency[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &y in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True iff there is exactly one component. The empty graph has none.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.vertex_count];
        for start in 0..self.vertex_count {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        stack.push(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// BFS from every vertex.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        let n = self.vertex_count;
        if n == 0 {
            return Err(Error::Disconnected);
        }
        let mut dist = Vec::with_capacity(n * n);
        for source in 0..n {
            let row = self.bfs(source);
            if row.contains(&UNREACHABLE) {
                return Err(Error::Disconnected);
            }
            dist.extend_from_slice(&row);
        }
        Ok(DistanceMatrix { n, dist })
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_len(table: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::WeightTableLength { table, expected, found })
    }
}

fn check_nonnegative(table: &'static str, values: &[Rational]) -> Result<()> {
    match values.iter().position(|w| w.is_negative()) {
        Some(index) => Err(Error::NegativeWeight { table, index }),
        None => Ok(()),
    }
}

/// All-pairs hop distances of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// `d(u, f) = min(d(u, x), d(u, y))` for the edge `f = xy`.
    pub fn vertex_edge_distance(&self, u: usize, f: (usize, usize)) -> u32 {
        self.get(u, f.0).min(self.get(u, f.1))
    }

    /// Sum of `d(u, v)` over unordered pairs.
    pub fn wiener_sum(&self) -> u64 {
        let mut total = 0u64;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                total += u64::from(self.get(u, v));
            }
        }
        total
    }
}
