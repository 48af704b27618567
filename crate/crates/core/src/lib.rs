//! Minimum monitoring edge-geodetic sets.
//!
//! A vertex set `M` of a connected graph is a monitoring edge-geodetic set
//! (MEG-set) when every edge lies on all shortest paths between some pair
//! of vertices of `M`. This crate computes small and minimum MEG-sets:
//!
//! - [`monitor`]: the monitoring relation, verification, mandatory vertices
//!   and an exhaustive exact solver.
//! - [`interval`]: a polynomial exact algorithm for interval graphs.
//! - [`approx`]: the greedy Set Cover approximation with its size bound.
//! - [`reductions`]: the Vertex Cover gadget, for hard instances with a
//!   known optimum.
//! - [`generators`]: named families and seeded random instances.
//!
//! ```
//! use meg::{Graph, monitor::min_meg_exact};
//!
//! let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
//! let best = min_meg_exact(&p4, None).unwrap().unwrap();
//! assert_eq!(best.meg, vec![0, 3]);
//! ```

pub mod approx;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod io;
pub mod monitor;
pub mod reductions;
pub mod report;
pub mod subsets;

pub use error::{MegError, Result};
pub use graph::{DistanceRow, EdgeId, EdgeSet, Graph, Vertex};
pub use interval::IntervalModel;
pub use monitor::{MegResult, Method, MonitorMethod, WitnessMap};
