//! Djoković–Winkler relation, its transitive closure, and c-partitions.
//!
//! Two edges `u1v1` and `u2v2` are related when
//! `d(u1,u2) + d(v1,v2) != d(u1,v2) + d(u2,v1)`. The closure classes are
//! found by testing every edge pair and merging related pairs in a
//! union-find forest. A c-partition is a partition of the edge set whose
//! groups are unions of closure classes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, StrengthWeightedGraph};

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect(), size: vec![1; len] }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Sets as sorted member lists, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let root = self.find(i);
            if slot[root] == usize::MAX {
                slot[root] = out.len();
                out.push(Vec::new());
            }
            out[slot[root]].push(i);
        }
        out
    }
}

/// The Θ test on two edges given as endpoint pairs. Reflexive by
/// short-circuit when both edges are the same pair.
pub fn theta_related(d: &DistanceMatrix, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let same = e1 == e2 || e1 == (e2.1, e2.0);
    if same {
        return true;
    }
    let (u1, v1) = e1;
    let (u2, v2) = e2;
    d.get(u1, u2) + d.get(v1, v2) != d.get(u1, v2) + d.get(u2, v1)
}

/// Partition of the edge set into Θ* classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ThetaClasses {
    fn from_groups(classes: Vec<Vec<usize>>, edge_count: usize) -> Self {
        let mut class_of = vec![0; edge_count];
        for (c, members) in classes.iter().enumerate() {
            for &e in members {
                class_of[e] = c;
            }
        }
        ThetaClasses { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }

    /// The finest c-partition: every class its own group.
    pub fn to_partition(&self) -> EdgePartition {
        EdgePartition { groups: self.classes.clone(), group_of: self.class_of.clone() }
    }
}

/// Θ* classes of a connected graph.
pub fn theta_star_classes(g: &StrengthWeightedGraph) -> Result<ThetaClasses> {
    let d = g.all_pairs_distances()?;
    Ok(theta_star_classes_with(g, &d))
}

pub fn theta_star_classes_with(g: &StrengthWeightedGraph, d: &DistanceMatrix) -> ThetaClasses {
    let edges = g.edges();
    let m = edges.len();
    let related: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|i| ((i + 1)..m).filter(|&j| theta_related(d, edges[i], edges[j])).collect())
        .collect();
    let mut uf = UnionFind::new(m);
    for (i, partners) in related.iter().enumerate() {
        for &j in partners {
            uf.union(i, j);
        }
    }
    ThetaClasses::from_groups(uf.groups(), m)
}

/// True iff every pair of edges inside `class` is directly Θ-related.
pub fn is_theta_clique(g: &StrengthWeightedGraph, d: &DistanceMatrix, class: &[usize]) -> bool {
    class.iter().enumerate().all(|(a, &i)| class[a + 1..].iter().all(|&j| theta_related(d, g.edge(i), g.edge(j))))
}

/// Connected, bipartite, and Θ already transitive.
pub fn is_partial_cube(g: &StrengthWeightedGraph) -> Result<bool> {
    let d = g.all_pairs_distances()?;
    if !g.is_bipartite() {
        return Ok(false);
    }
    let classes = theta_star_classes_with(g, &d);
    Ok(classes.classes().iter().all(|c| is_theta_clique(g, &d, c)))
}

/// A partition of the edge set into groups, each a union of Θ* classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
}

impl EdgePartition {
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group(&self, index: usize) -> &[usize] {
        &self.groups[index]
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group_of(&self, edge: usize) -> usize {
        self.group_of[edge]
    }
}

/// Merges whole classes. `grouping` must name every class index exactly once.
pub fn coarsen(tc: &ThetaClasses, grouping: &[Vec<usize>]) -> Result<EdgePartition> {
    let r = tc.len();
    let mut seen = vec![false; r];
    for group in grouping {
        if group.is_empty() {
            return Err(Error::NotAPartitionOfClasses("empty group".into()));
        }
        for &c in group {
            if c >= r {
                return Err(Error::NotAPartitionOfClasses(format!("class {c} does not exist")));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::NotAPartitionOfClasses(format!("class {c} listed twice")));
            }
        }
    }
    if let Some(c) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartitionOfClasses(format!("class {c} missing")));
    }

    let mut groups: Vec<Vec<usize>> = grouping
        .iter()
        .map(|group| {
            let mut edges: Vec<usize> = group.iter().flat_map(|&c| tc.classes[c].iter().copied()).collect();
            edges.sort_unstable();
            edges
        })
        .collect();
    groups.sort_by_key(|g| g[0]);
    Ok(build_partition(groups, tc.edge_count()))
}

/// Accepts `candidate` iff it partitions the edge set and no Θ* class
/// straddles two groups. Groups are reordered by smallest edge index.
pub fn validate_c_partition(tc: &ThetaClasses, candidate: &[Vec<usize>]) -> Result<EdgePartition> {
    let m = tc.edge_count();
    let mut owner = vec![usize::MAX; m];
    for (gi, group) in candidate.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::NotEdgePartition(format!("group {gi} is empty")));
        }
        for &e in group {
            if e >= m {
                return Err(Error::NotEdgePartition(format!("edge {e} does not exist")));
            }
            if owner[e] != usize::MAX {
                return Err(Error::NotEdgePartition(format!("edge {e} appears more than once")));
            }
            owner[e] = gi;
        }
    }
    if let Some(e) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotEdgePartition(format!("edge {e} is not covered")));
    }
    for (c, class) in tc.classes().iter().enumerate() {
        let first = owner[class[0]];
        if let Some(&e) = class.iter().find(|&&e| owner[e] != first) {
            let (a, b) = (first.min(owner[e]), first.max(owner[e]));
            return Err(Error::SplitsThetaClass { class: c, first: a, second: b });
        }
    }

    let mut groups: Vec<Vec<usize>> = candidate
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g.sort_unstable();
            g
        })
        .collect();
    groups.sort_by_key(|g| g[0]);
    Ok(build_partition(groups, m))
}

fn build_partition(groups: Vec<Vec<usize>>, edge_count: usize) -> EdgePartition {
    let mut group_of = vec![0; edge_count];
    for (gi, group) in groups.iter().enumerate() {
        for &e in group {
            group_of[e] = gi;
        }
    }
    EdgePartition { groups, group_of }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> StrengthWeightedGraph {
        StrengthWeightedGraph::unweighted(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn path(n: usize) -> StrengthWeightedGraph {
        StrengthWeightedGraph::unweighted(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    #[test]
    fn theta_on_small_graphs() {
        let c4 = cycle(4);
        let d = c4.all_pairs_distances().unwrap();
        assert!(theta_related(&d, (0, 1), (2, 3)));
        assert!(!theta_related(&d, (0, 1), (1, 2)));
        assert!(theta_related(&d, (1, 2), (1, 2)));

        let p3 = path(3);
        let d = p3.all_pairs_distances().unwrap();
        assert!(!theta_related(&d, (0, 1), (1, 2)));
        assert!(theta_related(&d, (0, 1), (0, 1)));
    }

    #[test]
    fn classes_of_cycles() {
        let c6 = theta_star_classes(&cycle(6)).unwrap();
        assert_eq!(c6.classes(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        let c5 = theta_star_classes(&cycle(5)).unwrap();
        assert_eq!(c5.classes(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn tree_edges_are_singleton_classes() {
        for n in 2..=6 {
            let tc = theta_star_classes(&path(n)).unwrap();
            assert_eq!(tc.len(), n - 1);
            assert!(tc.classes().iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn disconnected_has_no_classes() {
        let g = StrengthWeightedGraph::unweighted(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(theta_star_classes(&g), Err(Error::Disconnected));
    }

    #[test]
    fn coarsening() {
        let tc = theta_star_classes(&cycle(6)).unwrap();
        let fine = coarsen(&tc, &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(fine, tc.to_partition());
        let total = coarsen(&tc, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(total.groups(), &[vec![0, 1, 2, 3, 4, 5]]);
        assert!(matches!(coarsen(&tc, &[vec![0], vec![0, 1]]), Err(Error::NotAPartitionOfClasses(_))));
        assert!(matches!(coarsen(&tc, &[vec![0], vec![1]]), Err(Error::NotAPartitionOfClasses(_))));
        let reordered = coarsen(&tc, &[vec![2, 1], vec![0]]).unwrap();
        assert_eq!(reordered.groups(), &[vec![0, 3], vec![1, 2, 4, 5]]);
    }

    #[test]
    fn c_partition_validation() {
        let tc = theta_star_classes(&cycle(6)).unwrap();
        let ok = validate_c_partition(&tc, &[vec![1, 4, 2, 5], vec![3, 0]]).unwrap();
        assert_eq!(ok.groups(), &[vec![0, 3], vec![1, 2, 4, 5]]);
        assert_eq!(ok.group_of(4), 1);
        assert_eq!(
            validate_c_partition(&tc, &[vec![0, 1, 4], vec![3, 2, 5]]),
            Err(Error::SplitsThetaClass { class: 0, first: 0, second: 1 })
        );
        assert!(matches!(validate_c_partition(&tc, &[vec![0, 1, 2, 3, 4]]), Err(Error::NotEdgePartition(_))));
        assert!(matches!(
            validate_c_partition(&tc, &[vec![0, 1, 2, 3, 4, 5], vec![5]]),
            Err(Error::NotEdgePartition(_))
        ));
        let finest: Vec<Vec<usize>> = tc.classes().to_vec();
        assert_eq!(validate_c_partition(&tc, &finest).unwrap(), tc.to_partition());
    }

    #[test]
    fn partial_cube_checks() {
        assert!(is_partial_cube(&cycle(6)).unwrap());
        assert!(!is_partial_cube(&cycle(5)).unwrap());
        assert!(is_partial_cube(&path(4)).unwrap());
    }
}
