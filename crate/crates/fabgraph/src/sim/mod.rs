//! Deterministic message-level simulation of the full system.
//!
//! One `simulate` call runs a kernel over a placed graph until distributed
//! termination. PEs are modeled as a scatter→gather→apply pipeline with unit
//! throughput per stage; FPGAs connect through per-FPGA crossbars and
//! point-to-point links with two virtual channels (one per superstep
//! parity). Superstep boundaries use a floating barrier: every PE sends a
//! per-destination barrier carrying its update count, and a PE's network
//! endpoint releases the barrier into the pipeline only once every counted
//! token of the round has arrived. Termination is detected distributedly
//! from the barriers' activity flags.
//!
//! Two delivery modes exist: the broadcast-update design (scatter runs at
//! the *receiver* over its edge sublists, only updates cross the network)
//! and the unicast baseline (scatter runs at the sender, every message is
//! routed individually). Both share the protocol machinery and produce the
//! same final states for order-insensitive kernels.

mod endpoint;
mod engine;
mod report;

pub use endpoint::{DataDisposition, EndpointState, ProtocolViolation, RoundCompletion};
pub use report::{compute_teps, write_trace_csv, RunReport, SuperstepRow};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::kernel::Kernel;
use crate::partition::PlacementMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeliveryMode {
    /// One update per active vertex crosses the network; receivers expand it
    /// over their local edge sublists.
    BroadcastUpdates,
    /// Per-edge messages are produced at the sender and routed individually.
    UnicastMessages,
}

/// System shape and timing parameters for one simulation.
#[derive(Debug, Clone, Serialize)]
pub struct SimConfig {
    pub n_fpga: u32,
    pub n_pe_per_fpga: u32,
    /// Clock used to convert cycles to seconds for TEPS.
    pub f_clk_hz: f64,
    pub delivery_mode: DeliveryMode,
    /// Consult the neighbor bitmap before fanning updates to remote FPGAs.
    pub filter_enabled: bool,
    /// Virtual channels per link. The floating barrier lets at most two
    /// supersteps coexist on a link, so exactly 2 is supported.
    pub channels: u32,
    /// Per-direction bandwidth of one inter-FPGA link.
    pub link_bandwidth_bits_per_cycle: u32,
    pub link_latency_cycles: u32,
    pub crossbar_latency_cycles: u32,
    pub scatter_memory_latency_cycles: u32,
    /// In-flight edge fetches a PE's scatter may keep outstanding.
    pub scatter_max_outstanding: u32,
    /// Cycles a just-written vertex blocks the gather read stage.
    pub gather_hazard_depth_cycles: u32,
    /// Per-PE update queue capacity; defaults to the PE's vertex count,
    /// which the one-update-per-vertex bound makes sufficient.
    pub update_queue_capacity: Option<u64>,
    /// Seed for scheduler tie-breaking. Changes event interleavings, never
    /// protocol outcomes.
    pub rng_seed: u64,
    /// Non-termination guard.
    pub max_supersteps: u64,
}

impl SimConfig {
    pub fn new(n_fpga: u32, n_pe_per_fpga: u32) -> Self {
        SimConfig {
            n_fpga,
            n_pe_per_fpga,
            f_clk_hz: 1e8,
            delivery_mode: DeliveryMode::BroadcastUpdates,
            filter_enabled: true,
            channels: 2,
            link_bandwidth_bits_per_cycle: 128,
            link_latency_cycles: 32,
            crossbar_latency_cycles: 2,
            scatter_memory_latency_cycles: 4,
            scatter_max_outstanding: 64,
            gather_hazard_depth_cycles: 4,
            update_queue_capacity: None,
            rng_seed: 0,
            max_supersteps: 1_000_000,
        }
    }

    pub fn validate(&self, placement: &PlacementMap) -> Result<(), SimError> {
        let bad = |msg: &str| Err(SimError::InvalidConfig(msg.to_string()));
        if self.n_fpga < 1 || self.n_pe_per_fpga < 1 {
            return bad("n_fpga and n_pe_per_fpga must be at least 1");
        }
        if self.channels != 2 {
            return bad("exactly 2 virtual channels are supported");
        }
        if self.link_bandwidth_bits_per_cycle == 0 {
            return bad("link bandwidth must be positive");
        }
        if !(self.f_clk_hz > 0.0) {
            return bad("f_clk must be positive");
        }
        if self.scatter_max_outstanding == 0 {
            return bad("scatter_max_outstanding must be at least 1");
        }
        if self.update_queue_capacity == Some(0) {
            return bad("update queue capacity must be at least 1");
        }
        if placement.n_fpga() != self.n_fpga || placement.n_pe_per_fpga() != self.n_pe_per_fpga {
            return bad("placement shape does not match SimConfig");
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("update queue overflow on PE {pe} in superstep {round}: {emitted} updates exceed capacity {capacity} (kernel violated the one-update bound)")]
    CapacityViolation { pe: u32, round: u64, emitted: u64, capacity: u64 },
    #[error("superstep cap {limit} exceeded without termination")]
    MaxSupersteps { limit: u64 },
    #[error("protocol violation: {0}")]
    Protocol(#[from] ProtocolViolation),
}

/// Result of a run: the report plus the final state of every vertex.
#[derive(Debug)]
pub struct SimOutcome<S> {
    pub report: RunReport,
    pub states: Vec<S>,
}

/// Runs the configured delivery mode until distributed termination.
pub fn simulate<K: Kernel>(
    graph: &Graph,
    placement: &PlacementMap,
    kernel: &K,
    config: &SimConfig,
) -> Result<SimOutcome<K::State>, SimError> {
    config.validate(placement)?;
    engine::Engine::new(graph, placement, kernel, config).run()
}

/// Runs the unicast (per-message) baseline regardless of the mode in
/// `config`; everything else is honored as configured.
pub fn run_baseline_unicast<K: Kernel>(
    graph: &Graph,
    placement: &PlacementMap,
    kernel: &K,
    config: &SimConfig,
) -> Result<SimOutcome<K::State>, SimError> {
    let mut config = config.clone();
    config.delivery_mode = DeliveryMode::UnicastMessages;
    simulate(graph, placement, kernel, &config)
}
