use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },

    #[error("edge {index} duplicates the pair ({u}, {v})")]
    DuplicateEdge { index: usize, u: usize, v: usize },

    #[error("vertex id {id} out of range for a graph with {vertex_count} vertices")]
    IdOutOfRange { id: usize, vertex_count: usize },

    #[error("edge index {index} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },

    #[error("negative {table} weight at position {index}")]
    NegativeWeight { table: &'static str, index: usize },

    #[error("{table} weight table has {found} entries, expected {expected}")]
    WeightTableLength { table: &'static str, expected: usize, found: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("grouping is not a partition of the theta classes: {0}")]
    NotAPartitionOfClasses(String),

    #[error("grouping is not a partition of the edge set: {0}")]
    NotEdgePartition(String),

    #[error("theta class {class} is split between groups {first} and {second}")]
    SplitsThetaClass { class: usize, first: usize, second: usize },

    #[error("edge {0} in the group is not an edge of the graph")]
    GroupNotSubsetOfEdges(usize),

    #[error("group edge {0} joins two vertices of the same component")]
    GroupEdgeWithinComponent(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("function is not symmetric: F({at}) = {value}, F({swapped}) = {swapped_value}")]
    SymmetryViolation { at: String, value: String, swapped: String, swapped_value: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { name: String, position: usize },

    #[error("unknown index `{0}`")]
    UnknownIndex(String),

    #[error("cell set is empty")]
    EmptyCells,

    #[error("cell set is not edge-connected")]
    DisconnectedCells,

    #[error("cell set encloses {0} hole(s); use the coronoid generator for systems with holes")]
    HasHole(usize),

    #[error("cell set is not catacondensed: vertex shared by three cells")]
    NotCatacondensed,
}

impl Error {
    /// Structural errors describe the shape of an otherwise well-formed input.
    pub fn is_structural(&self) -> bool {
        matches!(self, Error::Disconnected | Error::NotATree)
    }
}
