//! Deterministic message-level simulator and analytical throughput model for
//! vertex-centric graph processing on multi-FPGA fabrics.
//!
//! The crate is organized around the path an experiment takes:
//!
//! * [`graph`] — compressed adjacency storage, edge-list I/O, and the
//!   synthetic generators (uniform, recursive-quadrant, layered).
//! * [`partition`] — vertex→PE placement heuristics, the per-PE edge
//!   sublists used for receiver-side scatter, and the neighbor filter bitmap.
//! * [`kernel`] — the three-stage gather/apply/scatter kernel contract and
//!   the built-in WCC, BFS, and PageRank kernels.
//! * [`sim`] — the discrete-event engine: PE pipelines, crossbars,
//!   inter-FPGA links with two virtual channels, the floating barrier with
//!   update counting, and distributed termination detection. Also contains
//!   the unicast (per-message) baseline mode.
//! * [`model`] — the analytical throughput limits (PE, memory, network
//!   interface, total network), the unicast baseline limits, and the system
//!   shape optimizer.
//! * [`params`] — `key = value` parameter files with unit suffixes.
//! * [`reference`] — synchronous software implementations of the built-in
//!   algorithms, used as verification oracles.

pub mod graph;
pub mod kernel;
pub mod model;
pub mod params;
pub mod partition;
pub mod reference;
pub mod rng;
pub mod sim;

pub use graph::{DegreeStats, Graph};
pub use kernel::{builtin_kernel, Kernel, KernelSpec};
pub use model::{AlgorithmParams, DatasetParams, LimitBreakdown, PlatformParams};
pub use partition::{NeighborFilterBitmap, PeEdgeSublists, PlacementMap};
pub use sim::{DeliveryMode, RunReport, SimConfig};

/// Vertex identifier. Ids are dense, 0-based, and bounded by the configured
/// id width (32 bits at most in this implementation).
pub type VertexId = u32;
