//! Szeged-like topological indices of strength-weighted graphs.
//!
//! An index is `TI_F(G) = Σ_e w_e(e) · F(n_u, n_v, m_u, m_v, n_0, m_0)` for a
//! function `F` symmetric in the two sides of an edge. It can be evaluated
//!
//! * directly from distances ([`index::ti_direct`]),
//! * by the cut method, summing the index over the quotient graphs of a
//!   partition of the edges into unions of Θ* classes ([`index::ti_cut`]),
//! * in linear time on trees ([`index::ti_tree`]).
//!
//! [`generators`] builds benzenoid systems, phenylenes and coronoids on the
//! hexagonal lattice.
//!
//! ```
//! use szeged_core::graph::StrengthWeightedGraph;
//! use szeged_core::index::{ti_cut, ti_direct, IndexDescriptor};
//! use szeged_core::theta::theta_star_classes;
//!
//! let c6 = StrengthWeightedGraph::unweighted(6, (0..6).map(|i| (i, (i + 1) % 6)).collect()).unwrap();
//! let sz = IndexDescriptor::catalog("Sz").unwrap();
//! let classes = theta_star_classes(&c6).unwrap();
//! assert_eq!(ti_direct(&c6, &sz).unwrap(), ti_cut(&c6, &classes.to_partition(), &sz).unwrap());
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod index;
pub mod quotient;
pub mod rational;
pub mod theta;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, StrengthWeightedGraph, Weights};
pub use index::{IndexDescriptor, WeightMode};
pub use rational::Rational;
