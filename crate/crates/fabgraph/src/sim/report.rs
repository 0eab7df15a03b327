//! Run results: counters, derived rates, and the per-superstep trace.

use serde::Serialize;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// One superstep's share of the run. `messages` and traffic are attributed
/// to the superstep of the update that caused them, `start_cycle` is the
/// earliest apply start of the superstep, and `cycles` the distance to the
/// next superstep's start (for the last row, to the end of the run).
#[derive(Debug, Clone, Serialize)]
pub struct SuperstepRow {
    pub superstep: u64,
    pub updates: u64,
    pub messages: u64,
    pub inter_fpga_payload_bits: u64,
    pub start_cycle: u64,
    pub cycles: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub kernel: String,
    pub delivery_mode: super::DeliveryMode,
    pub filter_enabled: bool,
    pub n_fpga: u32,
    pub n_pe_per_fpga: u32,
    pub num_vertices: u64,
    pub num_edges: u64,
    /// Supersteps that emitted at least one update.
    pub supersteps: u64,
    /// Apply rounds actually executed; one more than `supersteps` for a run
    /// that ends with the usual quiet detection round.
    pub apply_phases: u64,
    /// The quiet round in which every endpoint raised termination.
    pub termination_round: u64,
    pub updates_emitted: u64,
    /// Scatter kernel invocations, i.e. traversed edges.
    pub messages_generated: u64,
    /// Kernel payload bits carried across inter-FPGA links by data tokens.
    pub inter_fpga_payload_bits: u64,
    /// Full token bits (headers included) of data tokens on the links.
    pub inter_fpga_wire_bits: u64,
    /// Data tokens (updates, or messages in unicast mode) on the links.
    pub inter_fpga_tokens: u64,
    pub inter_fpga_barrier_tokens: u64,
    pub simulated_cycles: u64,
    pub wall_equivalent_seconds: f64,
    pub teps: f64,
    /// Busy PE-pipeline cycles per traversed edge.
    pub cpe_effective: f64,
    /// FNV-1a over the canonical final state words, hex encoded.
    pub state_digest: String,
    pub per_superstep: Vec<SuperstepRow>,
}

/// Traversed edges per second; zero when nothing was traversed.
pub fn compute_teps(messages_generated: u64, simulated_cycles: u64, f_clk_hz: f64) -> f64 {
    if messages_generated == 0 || simulated_cycles == 0 {
        return 0.0;
    }
    messages_generated as f64 / (simulated_cycles as f64 / f_clk_hz)
}

/// FNV-1a over little-endian state words.
pub fn digest_words(words: impl Iterator<Item = u64>) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for word in words {
        for byte in word.to_le_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x1000_0000_01b3);
        }
    }
    hash
}

/// Fixed-header CSV rendering of the per-superstep trace.
pub fn write_trace_csv(report: &RunReport) -> String {
    let mut out = String::from("superstep,updates,messages,inter_fpga_payload_bits,start_cycle,cycles\n");
    for row in &report.per_superstep {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.superstep,
            row.updates,
            row.messages,
            row.inter_fpga_payload_bits,
            row.start_cycle,
            row.cycles
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn teps_unit_arithmetic() {
        assert_eq!(compute_teps(1_000_000, 1_000_000, 1e6), 1e6);
        assert_eq!(compute_teps(0, 123, 1e6), 0.0);
    }

    #[test]
    fn digest_is_order_sensitive_and_stable() {
        let a = digest_words([1u64, 2].into_iter());
        let b = digest_words([2u64, 1].into_iter());
        assert_ne!(a, b);
        assert_eq!(a, digest_words([1u64, 2].into_iter()));
    }
}
