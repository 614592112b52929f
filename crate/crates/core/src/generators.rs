//! Molecular graphs on the hexagonal lattice.
//!
//! Cells are addressed by axial coordinates `(q, r)`. Corners live on the
//! triangular lattice in integer coordinates `(i, j)` (basis vectors at 0°
//! and 60°): the cell `(q, r)` is centred at `(2q + r, r - q)` and its corners
//! are the centre plus the six unit offsets below, so two cells share a
//! corner exactly when the integer keys are equal.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::StrengthWeightedGraph;
use crate::theta::{validate_c_partition, EdgePartition, ThetaClasses};

/// Axial neighbour offsets in counter-clockwise order, starting at -30°.
pub const AXIAL_DIRECTIONS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Corner offsets from a cell centre, at 0°, 60°, ..., 300°.
const CORNER_OFFSETS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexCell {
    pub q: i64,
    pub r: i64,
}

impl HexCell {
    pub const fn new(q: i64, r: i64) -> Self {
        HexCell { q, r }
    }

    pub fn neighbor(self, direction: usize) -> HexCell {
        let (dq, dr) = AXIAL_DIRECTIONS[direction];
        HexCell::new(self.q + dq, self.r + dr)
    }

    /// Hex distance from the origin cell.
    pub fn ring(self) -> i64 {
        self.q.abs().max(self.r.abs()).max((self.q + self.r).abs())
    }

    fn corner_key(self, k: usize) -> (i64, i64) {
        let (ci, cj) = (2 * self.q + self.r, self.r - self.q);
        let (di, dj) = CORNER_OFFSETS[k];
        (ci + di, cj + dj)
    }
}

/// A finite set of lattice cells, iterated in `(q, r)` order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HexCellSet {
    cells: BTreeSet<HexCell>,
}

impl HexCellSet {
    pub fn new(cells: impl IntoIterator<Item = HexCell>) -> Self {
        HexCellSet { cells: cells.into_iter().collect() }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::new(pairs.iter().map(|&(q, r)| HexCell::new(q, r)))
    }

    /// `h` cells in a straight row.
    pub fn linear_chain(h: usize) -> Self {
        Self::new((0..h as i64).map(|q| HexCell::new(q, 0)))
    }

    /// All cells within hex distance `radius` of the origin.
    pub fn hexagon(radius: i64) -> Self {
        let mut cells = Vec::new();
        for q in -radius..=radius {
            for r in -radius..=radius {
                let cell = HexCell::new(q, r);
                if cell.ring() <= radius {
                    cells.push(cell);
                }
            }
        }
        Self::new(cells)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: HexCell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn insert(&mut self, cell: HexCell) -> bool {
        self.cells.insert(cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = HexCell> + '_ {
        self.cells.iter().copied()
    }

    /// Edge-connectivity of the cells.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(cell) = queue.pop_front() {
            for d in 0..6 {
                let next = cell.neighbor(d);
                if self.cells.contains(&next) && seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Number of holes of an edge-connected cell complex, from
    /// `V - E + F = 1 - holes`.
    pub fn hole_count(&self) -> usize {
        let lattice = LatticeGraph::build(self);
        let euler = lattice.vertex_count as i64 - lattice.edges.len() as i64 + self.cells.len() as i64;
        (1 - euler).max(0) as usize
    }

    /// True iff no corner belongs to three cells.
    pub fn is_catacondensed(&self) -> bool {
        let mut count: HashMap<(i64, i64), u8> = HashMap::new();
        for cell in self.iter() {
            for k in 0..6 {
                *count.entry(cell.corner_key(k)).or_default() += 1;
            }
        }
        count.values().all(|&c| c < 3)
    }

    fn check_benzenoid(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyCells);
        }
        if !self.is_connected() {
            return Err(Error::DisconnectedCells);
        }
        match self.hole_count() {
            0 => Ok(()),
            holes => Err(Error::HasHole(holes)),
        }
    }
}

/// Edge groups labelled by lattice direction; a fourth group holds the
/// square edges of a phenylene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionPartition {
    groups: Vec<Vec<usize>>,
}

impl DirectionPartition {
    /// Groups indexed by direction label; some may be empty.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn non_empty_groups(&self) -> Vec<Vec<usize>> {
        self.groups.iter().filter(|g| !g.is_empty()).cloned().collect()
    }

    /// Checks the groups against the graph's Θ* classes.
    pub fn validate(&self, tc: &ThetaClasses) -> Result<EdgePartition> {
        validate_c_partition(tc, &self.non_empty_groups())
    }
}

/// Corner vertices and deduplicated edges of a cell set, with the direction
/// label (`k mod 3` for the edge from corner `k` to `k + 1`) of every edge.
struct LatticeGraph {
    vertex_count: usize,
    keys: Vec<(i64, i64)>,
    edges: Vec<(usize, usize)>,
    directions: Vec<usize>,
}

impl LatticeGraph {
    fn build(cells: &HexCellSet) -> Self {
        let mut ids: HashMap<(i64, i64), usize> = HashMap::new();
        let mut keys = Vec::new();
        let mut edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut directions = Vec::new();
        for cell in cells.iter() {
            let corner: [usize; 6] = std::array::from_fn(|k| {
                let key = cell.corner_key(k);
                *ids.entry(key).or_insert_with(|| {
                    keys.push(key);
                    keys.len() - 1
                })
            });
            for k in 0..6 {
                let (a, b) = (corner[k], corner[(k + 1) % 6]);
                edge_ids.entry((a.min(b), a.max(b))).or_insert_with(|| {
                    edges.push((a, b));
                    directions.push(k % 3);
                    edges.len() - 1
                });
            }
        }
        LatticeGraph { vertex_count: keys.len(), keys, edges, directions }
    }

    fn direction_groups(&self, labels: usize) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); labels];
        for (e, &d) in self.directions.iter().enumerate() {
            groups[d].push(e);
        }
        groups
    }
}

/// The benzenoid system spanned by `cells`, with its three direction groups.
pub fn benzenoid(cells: &HexCellSet) -> Result<(StrengthWeightedGraph, DirectionPartition)> {
    cells.check_benzenoid()?;
    let lattice = LatticeGraph::build(cells);
    let groups = lattice.direction_groups(3);
    let graph = StrengthWeightedGraph::unweighted(lattice.vertex_count, lattice.edges)?;
    Ok((graph, DirectionPartition { groups }))
}

/// The phenylene whose hexagonal squeeze is the catacondensed benzenoid on
/// `cells`: every cell gets its own six vertices and each pair of adjacent
/// cells is joined by a square.
///
/// Returns groups `E_1, E_2, E_3` (hexagon edges by direction) and `E_4`
/// (square edges not belonging to any hexagon).
pub fn phenylene_from_squeeze(cells: &HexCellSet) -> Result<(StrengthWeightedGraph, DirectionPartition)> {
    cells.check_benzenoid()?;
    if !cells.is_catacondensed() {
        return Err(Error::NotCatacondensed);
    }
    let list: Vec<HexCell> = cells.iter().collect();
    let index: HashMap<HexCell, usize> = list.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut edges = Vec::new();
    let mut groups = vec![Vec::new(); 4];
    for c in 0..list.len() {
        for k in 0..6 {
            groups[k % 3].push(edges.len());
            edges.push((6 * c + k, 6 * c + (k + 1) % 6));
        }
    }
    for (c, &cell) in list.iter().enumerate() {
        for d in 0..6 {
            let Some(&other) = index.get(&cell.neighbor(d)) else { continue };
            if other < c {
                continue;
            }
            for k in 0..6 {
                let key = cell.corner_key(k);
                if let Some(j) = (0..6).find(|&j| list[other].corner_key(j) == key) {
                    groups[3].push(edges.len());
                    edges.push((6 * c + k, 6 * other + j));
                }
            }
        }
    }
    let graph = StrengthWeightedGraph::unweighted(6 * list.len(), edges)?;
    Ok((graph, DirectionPartition { groups }))
}

/// Cells of the phenylene family member `Ph_n`: a central hexagon with three
/// straight arms of `n` hexagons on alternating sides.
pub fn phenylene_star_cells(n: usize) -> HexCellSet {
    let mut cells = vec![HexCell::new(0, 0)];
    for d in [0, 2, 4] {
        let (dq, dr) = AXIAL_DIRECTIONS[d];
        for k in 1..=n as i64 {
            cells.push(HexCell::new(k * dq, k * dr));
        }
    }
    HexCellSet::new(cells)
}

/// `Ph_n` with its four-group partition.
pub fn phenylene_star(n: usize) -> (StrengthWeightedGraph, DirectionPartition) {
    phenylene_from_squeeze(&phenylene_star_cells(n)).expect("star cell sets are catacondensed")
}

/// The coronoid `Co_n`: the hexagonal benzenoid of all cells within distance
/// `n + 1` of the origin, minus the six corners of the central cell.
pub fn coronoid(n: usize) -> StrengthWeightedGraph {
    let cells = HexCellSet::hexagon(n as i64 + 1);
    let lattice = LatticeGraph::build(&cells);
    let hole: BTreeSet<(i64, i64)> = (0..6).map(|k| HexCell::new(0, 0).corner_key(k)).collect();

    let mut new_id = vec![usize::MAX; lattice.vertex_count];
    let mut count = 0;
    for (v, key) in lattice.keys.iter().enumerate() {
        if !hole.contains(key) {
            new_id[v] = count;
            count += 1;
        }
    }
    let edges = lattice
        .edges
        .iter()
        .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
        .map(|&(a, b)| (new_id[a], new_id[b]))
        .collect();
    StrengthWeightedGraph::unweighted(count, edges).expect("lattice subgraph is simple")
}
