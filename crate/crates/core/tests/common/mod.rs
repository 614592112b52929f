//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use szeged_core::generators::{HexCell, HexCellSet};
use szeged_core::rational::Rational;
use szeged_core::theta::{coarsen, EdgePartition, ThetaClasses};
use szeged_core::{StrengthWeightedGraph, Weights};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Numerator in `0..=10`, denominator in `{1, 2, 4}`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(0..=10);
    let q: i64 = *[1, 2, 4].choose(rng).unwrap();
    Rational::new(p.into(), q.into())
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Weights {
    Weights {
        vertex_weight: (0..n).map(|_| small_rational(rng)).collect(),
        vertex_strength: (0..n).map(|_| small_rational(rng)).collect(),
        edge_weight: (0..m).map(|_| small_rational(rng)).collect(),
        edge_strength: (0..m).map(|_| small_rational(rng)).collect(),
    }
}

/// Random spanning tree plus extra edges, up to `max_edges` in total.
pub fn random_connected_edges(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let complete = n * (n - 1) / 2;
    let target = rng.gen_range(n - 1..=max_edges.min(complete).max(n - 1));
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    while edges.len() < target {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if present.insert(key) {
            edges.push((a, b));
        }
    }
    edges.shuffle(rng);
    edges
}

pub fn random_connected_graph(
    rng: &mut ChaCha8Rng,
    min_n: usize,
    max_n: usize,
    max_edges: usize,
) -> StrengthWeightedGraph {
    let n = rng.gen_range(min_n..=max_n);
    let edges = random_connected_edges(rng, n, max_edges);
    let weights = random_weights(rng, n, edges.len());
    StrengthWeightedGraph::new(n, edges, weights).unwrap()
}

pub fn random_tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|v| {
            let p = rng.gen_range(0..v);
            if rng.gen_bool(0.5) {
                (p, v)
            } else {
                (v, p)
            }
        })
        .collect();
    edges.shuffle(rng);
    edges
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> StrengthWeightedGraph {
    let edges = random_tree_edges(rng, n);
    let weights = random_weights(rng, n, n - 1);
    StrengthWeightedGraph::new(n, edges, weights).unwrap()
}

/// Groups the classes into a random number of nonempty groups.
pub fn random_coarsening(rng: &mut ChaCha8Rng, tc: &ThetaClasses) -> EdgePartition {
    let r = tc.len();
    let k = rng.gen_range(1..=r);
    let mut order: Vec<usize> = (0..r).collect();
    order.shuffle(rng);
    let mut grouping = vec![Vec::new(); k];
    for (i, &c) in order.iter().enumerate() {
        let slot = if i < k { i } else { rng.gen_range(0..k) };
        grouping[slot].push(c);
    }
    coarsen(tc, &grouping).unwrap()
}

/// Random hole-free polyhex with `h` cells grown from the origin.
pub fn random_benzenoid_cells(rng: &mut ChaCha8Rng, h: usize) -> HexCellSet {
    loop {
        let mut cells = HexCellSet::new([HexCell::new(0, 0)]);
        while cells.len() < h {
            let list: Vec<HexCell> = cells.iter().collect();
            let base = *list.choose(rng).unwrap();
            let next = base.neighbor(rng.gen_range(0..6));
            cells.insert(next);
        }
        if cells.hole_count() == 0 {
            return cells;
        }
    }
}

/// Random catacondensed polyhex with `h` cells.
pub fn random_catacondensed_cells(rng: &mut ChaCha8Rng, h: usize) -> HexCellSet {
    'retry: loop {
        let mut cells = HexCellSet::new([HexCell::new(0, 0)]);
        let mut attempts = 0;
        while cells.len() < h {
            attempts += 1;
            if attempts > 1000 {
                continue 'retry;
            }
            let list: Vec<HexCell> = cells.iter().collect();
            let base = *list.choose(rng).unwrap();
            let next = base.neighbor(rng.gen_range(0..6));
            if cells.contains(next) {
                continue;
            }
            let mut grown = cells.clone();
            grown.insert(next);
            if grown.is_catacondensed() && grown.hole_count() == 0 {
                cells = grown;
            }
        }
        return cells;
    }
}
