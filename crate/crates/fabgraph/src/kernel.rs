//! The three-stage vertex kernel contract and the built-in algorithms.
//!
//! A kernel is split into three pure functions with fixed interfaces:
//!
//! * `gather` — called once per received message; folds the message into the
//!   destination vertex's state.
//! * `apply` — called once per vertex at the end of a superstep; may emit at
//!   most one update (this is what bounds per-superstep storage).
//! * `scatter` — called once per outgoing edge of an updating vertex; turns
//!   the update into the message for that neighbor.
//!
//! User algorithms plug in by implementing [`Kernel`]; the engine is generic
//! over it.

use serde::Serialize;

use crate::VertexId;

/// Bit-size metadata for a kernel, consumed by the performance model and by
/// the simulator's traffic accounting. `m_update`/`m_message` are payload
/// sizes; on-wire token sizes additionally carry the sender id (and, for
/// unicast messages, the destination id) plus the round bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelSpec {
    pub name: String,
    pub vertexid_bits: u32,
    /// Bits of state stored per vertex.
    pub m_vertex: u32,
    /// Update payload bits. Zero-payload kernels that only convey the sender
    /// id report `vertexid_bits` here, since that id is the information the
    /// update carries.
    pub m_update: u32,
    /// Message payload bits, under the same convention as `m_update`.
    pub m_message: u32,
    /// Bits per stored edge.
    pub m_edge: u32,
    pub uses_edge_weights: bool,
    /// Set only for kernels that run a fixed number of supersteps.
    pub fixed_supersteps: Option<u64>,
}

impl KernelSpec {
    /// On-wire bits of one broadcast update token: sender id + payload +
    /// round bit.
    pub fn update_wire_bits(&self) -> u64 {
        u64::from(self.vertexid_bits) + u64::from(self.m_update) + 1
    }

    /// On-wire bits of one unicast message token: sender id + destination
    /// id + payload + round bit.
    pub fn message_wire_bits(&self) -> u64 {
        2 * u64::from(self.vertexid_bits) + u64::from(self.m_message) + 1
    }
}

/// The three-function kernel contract. All methods must be pure: equal
/// inputs give equal outputs, and the only state they may read or write is
/// what they are handed. The engine calls them from a single thread but
/// separate simulations may run kernels concurrently.
pub trait Kernel {
    type State: Clone + std::fmt::Debug;
    type Update: Clone + std::fmt::Debug;
    type Message: Clone + std::fmt::Debug;

    fn spec(&self) -> &KernelSpec;

    /// Starting state; activity in the first apply phase is encoded here.
    fn initial_state(&self, vertex: VertexId, num_vertices: u64) -> Self::State;

    /// Folds one received message into the destination's state.
    fn gather(&self, state: Self::State, sender: VertexId, message: &Self::Message)
        -> Self::State;

    /// End-of-superstep per-vertex step; emits at most one update.
    fn apply(
        &self,
        state: Self::State,
        superstep: u64,
        vertex: VertexId,
        num_vertices: u64,
    ) -> (Self::State, Option<Self::Update>);

    /// Produces the message for one outgoing edge. `num_neighbors` is the
    /// sender's outdegree in the whole graph, not the local sublist length.
    fn scatter(
        &self,
        update: &Self::Update,
        sender: VertexId,
        neighbor: VertexId,
        num_neighbors: u64,
        weight: Option<u64>,
    ) -> Self::Message;

    /// Canonical 64-bit encoding of a final state, used for run digests.
    fn state_word(&self, state: &Self::State) -> u64;

    /// Human-readable rendering for state dumps.
    fn state_display(&self, state: &Self::State) -> String;
}

// ---------------------------------------------------------------------------
// Weakly connected components: propagate the lowest seen vertex id.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WccState {
    pub label: VertexId,
    pub active: bool,
}

#[derive(Debug)]
pub struct WccKernel {
    spec: KernelSpec,
}

impl WccKernel {
    pub fn new(vertexid_bits: u32) -> Self {
        WccKernel {
            spec: KernelSpec {
                name: "wcc".into(),
                vertexid_bits,
                m_vertex: vertexid_bits + 1,
                m_update: vertexid_bits,
                m_message: vertexid_bits,
                m_edge: vertexid_bits,
                uses_edge_weights: false,
                fixed_supersteps: None,
            },
        }
    }
}

impl Kernel for WccKernel {
    type State = WccState;
    type Update = VertexId;
    type Message = VertexId;

    fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    fn initial_state(&self, vertex: VertexId, _num_vertices: u64) -> WccState {
        WccState { label: vertex, active: true }
    }

    fn gather(&self, state: WccState, _sender: VertexId, message: &VertexId) -> WccState {
        // Strict comparison: an equal label does not re-activate.
        if state.label > *message {
            WccState { label: *message, active: true }
        } else {
            state
        }
    }

    fn apply(
        &self,
        state: WccState,
        _superstep: u64,
        _vertex: VertexId,
        _num_vertices: u64,
    ) -> (WccState, Option<VertexId>) {
        let update = state.active.then_some(state.label);
        (WccState { label: state.label, active: false }, update)
    }

    fn scatter(
        &self,
        update: &VertexId,
        _sender: VertexId,
        _neighbor: VertexId,
        _num_neighbors: u64,
        _weight: Option<u64>,
    ) -> VertexId {
        *update
    }

    fn state_word(&self, state: &WccState) -> u64 {
        u64::from(state.label) | (u64::from(state.active) << 62)
    }

    fn state_display(&self, state: &WccState) -> String {
        format!("{}", state.label)
    }
}

// ---------------------------------------------------------------------------
// Breadth-first search: each vertex records the sender of the first message
// it receives as its parent in the traversal tree. A vertex is active only
// in the superstep it is first visited; the visited flag suppresses later
// messages.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsState {
    pub parent: VertexId,
    pub visited: bool,
    pub active: bool,
}

#[derive(Debug)]
pub struct BfsKernel {
    spec: KernelSpec,
    root: VertexId,
}

impl BfsKernel {
    pub fn new(vertexid_bits: u32, root: VertexId) -> Self {
        BfsKernel {
            spec: KernelSpec {
                name: "bfs".into(),
                vertexid_bits,
                m_vertex: vertexid_bits + 2,
                // The message body is empty; the sender id is the payload.
                m_update: vertexid_bits,
                m_message: vertexid_bits,
                m_edge: vertexid_bits,
                uses_edge_weights: false,
                fixed_supersteps: None,
            },
            root,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }
}

impl Kernel for BfsKernel {
    type State = BfsState;
    type Update = ();
    type Message = ();

    fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    fn initial_state(&self, vertex: VertexId, _num_vertices: u64) -> BfsState {
        if vertex == self.root {
            BfsState { parent: vertex, visited: true, active: true }
        } else {
            BfsState { parent: 0, visited: false, active: false }
        }
    }

    fn gather(&self, state: BfsState, sender: VertexId, _message: &()) -> BfsState {
        if state.visited {
            state
        } else {
            BfsState { parent: sender, visited: true, active: true }
        }
    }

    fn apply(
        &self,
        state: BfsState,
        _superstep: u64,
        _vertex: VertexId,
        _num_vertices: u64,
    ) -> (BfsState, Option<()>) {
        let update = state.active.then_some(());
        (BfsState { active: false, ..state }, update)
    }

    fn scatter(
        &self,
        _update: &(),
        _sender: VertexId,
        _neighbor: VertexId,
        _num_neighbors: u64,
        _weight: Option<u64>,
    ) {
    }

    fn state_word(&self, state: &BfsState) -> u64 {
        if state.visited {
            u64::from(state.parent) | (1 << 62)
        } else {
            0
        }
    }

    fn state_display(&self, state: &BfsState) -> String {
        if state.visited {
            format!("{}", state.parent)
        } else {
            "-".into()
        }
    }
}

// ---------------------------------------------------------------------------
// PageRank, in the synchronous Pregel formulation: every vertex contributes
// rank/outdegree to each neighbor each superstep, and recomputes
// rank = (1-d)/|V| + d * sum. Runs for a fixed number of supersteps.

pub const PAGERANK_DAMPING: f64 = 0.85;
pub const PAGERANK_SUPERSTEPS: u64 = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrState {
    pub rank: f64,
    pub accum: f64,
    pub active: bool,
}

#[derive(Debug)]
pub struct PrKernel {
    spec: KernelSpec,
    pub damping: f64,
}

impl PrKernel {
    pub fn new(vertexid_bits: u32) -> Self {
        Self::with_damping(vertexid_bits, PAGERANK_DAMPING)
    }

    pub fn with_damping(vertexid_bits: u32, damping: f64) -> Self {
        PrKernel {
            spec: KernelSpec {
                name: "pr".into(),
                vertexid_bits,
                m_vertex: 2 * 64 + 1,
                m_update: 64,
                m_message: 64,
                m_edge: vertexid_bits,
                uses_edge_weights: false,
                fixed_supersteps: Some(PAGERANK_SUPERSTEPS),
            },
            damping,
        }
    }
}

impl Kernel for PrKernel {
    type State = PrState;
    type Update = f64;
    type Message = f64;

    fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    fn initial_state(&self, _vertex: VertexId, num_vertices: u64) -> PrState {
        PrState { rank: 1.0 / num_vertices as f64, accum: 0.0, active: true }
    }

    fn gather(&self, state: PrState, _sender: VertexId, message: &f64) -> PrState {
        PrState { accum: state.accum + message, ..state }
    }

    fn apply(
        &self,
        state: PrState,
        superstep: u64,
        _vertex: VertexId,
        num_vertices: u64,
    ) -> (PrState, Option<f64>) {
        let rank = if superstep == 0 {
            state.rank
        } else {
            (1.0 - self.damping) / num_vertices as f64 + self.damping * state.accum
        };
        let fixed = self.spec.fixed_supersteps.unwrap_or(u64::MAX);
        let update = (superstep < fixed).then_some(rank);
        (PrState { rank, accum: 0.0, active: superstep < fixed }, update)
    }

    fn scatter(
        &self,
        update: &f64,
        _sender: VertexId,
        _neighbor: VertexId,
        num_neighbors: u64,
        _weight: Option<u64>,
    ) -> f64 {
        update / num_neighbors as f64
    }

    fn state_word(&self, state: &PrState) -> u64 {
        state.rank.to_bits()
    }

    fn state_display(&self, state: &PrState) -> String {
        format!("{:.10e}", state.rank)
    }
}

/// Spec metadata for a built-in kernel without constructing it.
pub fn builtin_kernel(name: &str, vertexid_bits: u32) -> Option<KernelSpec> {
    match name {
        "wcc" => Some(WccKernel::new(vertexid_bits).spec.clone()),
        "bfs" => Some(BfsKernel::new(vertexid_bits, 0).spec.clone()),
        "pr" => Some(PrKernel::new(vertexid_bits).spec.clone()),
        _ => None,
    }
}
