//! Analytical throughput model: four limit formulas, the memory-granularity
//! refinement, the unicast baseline limits, the broadcast-vs-unicast speedup
//! law, the minimum-FPGA constraint, and the system-shape optimizer.
//!
//! All bandwidths are bits per second, sizes are bits, and throughputs are
//! traversed edges per second (TEPS).

use serde::Serialize;
use thiserror::Error;

/// Platform-level inputs.
#[derive(Debug, Clone, Serialize)]
pub struct PlatformParams {
    /// Operating frequency, Hz.
    pub f_clk: f64,
    /// Cycles per traversed edge of one PE.
    pub cpe: f64,
    /// Total network interface bandwidth per FPGA, bits/s (send + receive).
    pub bw_if: f64,
    /// Total bandwidth of the network connecting the FPGAs, bits/s.
    pub bw_network: f64,
    /// Memory interface bandwidth per FPGA, bits/s.
    pub bw_mem: f64,
    /// Memory capacity per FPGA, bits.
    pub m_board: f64,
    /// Bits moved by one memory access.
    pub m_memword: u32,
    pub n_pe_max: u32,
    pub n_pe_min: u32,
}

/// Algorithm-dependent inputs.
#[derive(Debug, Clone, Serialize)]
pub struct AlgorithmParams {
    pub m_vertex: u32,
    pub m_update: u32,
    pub m_message: u32,
    pub m_edge: u32,
    /// Messages per traversed edge. Carried for completeness; every shipped
    /// kernel sends exactly one message per edge, so this stays at 1.
    pub p_msg_per_te: f64,
}

impl Default for AlgorithmParams {
    fn default() -> Self {
        AlgorithmParams { m_vertex: 33, m_update: 32, m_message: 32, m_edge: 32, p_msg_per_te: 1.0 }
    }
}

/// Dataset-dependent inputs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DatasetParams {
    pub num_vertices: u64,
    pub num_edges: u64,
}

impl DatasetParams {
    pub fn avg_degree(&self) -> f64 {
        self.num_edges as f64 / self.num_vertices as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitKind {
    Pe,
    Mem,
    If,
    Net,
}

/// The four limits at one system shape. Network limits are undefined on a
/// single FPGA and reported as `None` there.
#[derive(Debug, Clone, Serialize)]
pub struct LimitBreakdown {
    pub n_fpga: u32,
    pub n_pe_per_fpga: u32,
    pub l_pe: f64,
    pub l_mem: f64,
    pub l_if: Option<f64>,
    pub l_net: Option<f64>,
    /// Minimum of the defined limits.
    pub t_sys: f64,
    /// Which limit(s) bind; more than one on exact ties.
    pub binding: Vec<LimitKind>,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("memory word ({m_memword} bits) is smaller than one edge ({m_edge} bits)")]
    MemWordSmallerThanEdge { m_memword: u32, m_edge: u32 },
    #[error("no feasible FPGA count: dataset needs {needed} boards, domain ends at {max}")]
    EmptyDomain { needed: u64, max: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl PlatformParams {
    pub fn validate(&self) -> Result<(), ModelError> {
        let positive = [
            ("f_clk", self.f_clk),
            ("cpe", self.cpe),
            ("bw_if", self.bw_if),
            ("bw_network", self.bw_network),
            ("bw_mem", self.bw_mem),
            ("m_board", self.m_board),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ModelError::InvalidParameter(format!("{name} must be positive")));
            }
        }
        if self.m_memword == 0 || self.n_pe_max == 0 || self.n_pe_min == 0 {
            return Err(ModelError::InvalidParameter("counts must be at least 1".into()));
        }
        if self.n_pe_min > self.n_pe_max {
            return Err(ModelError::InvalidParameter("n_pe_min exceeds n_pe_max".into()));
        }
        Ok(())
    }
}

/// Cumulative PE throughput limit:
/// `n_fpga * n_pe_per_fpga * f_clk / cpe`.
pub fn limit_pe(platform: &PlatformParams, n_fpga: u32, n_pe_per_fpga: u32) -> f64 {
    f64::from(n_fpga) * f64::from(n_pe_per_fpga) * platform.f_clk / platform.cpe
}

/// Memory interface limit. The plain form is `n_fpga * bw_mem / m_edge`.
/// With `granularity_aware`, the denominator grows by the expected waste of
/// word-granular reads over the per-PE edge sublists: the per-PE spread term
/// `(|V|/|E|) * n_pe_total` is clamped at one because an edge list cannot be
/// spread thinner than one edge per PE.
pub fn limit_mem(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    n_fpga: u32,
    n_pe_per_fpga: u32,
    granularity_aware: bool,
) -> Result<f64, ModelError> {
    let m_edge = f64::from(algorithm.m_edge);
    if !granularity_aware {
        return Ok(f64::from(n_fpga) * platform.bw_mem / m_edge);
    }
    if platform.m_memword < algorithm.m_edge {
        return Err(ModelError::MemWordSmallerThanEdge {
            m_memword: platform.m_memword,
            m_edge: algorithm.m_edge,
        });
    }
    let n_pe_total = f64::from(n_fpga) * f64::from(n_pe_per_fpga);
    let spread = if dataset.num_edges == 0 {
        1.0
    } else {
        (dataset.num_vertices as f64 / dataset.num_edges as f64 * n_pe_total).min(1.0)
    };
    let per_edge = m_edge + spread * (f64::from(platform.m_memword) - m_edge);
    Ok(f64::from(n_fpga) * platform.bw_mem / per_edge)
}

/// Network interface limit of the broadcast-update design:
/// `bw_if / (2 m_update) * n/(n-1) * |E|/|V|`. Undefined for one FPGA.
pub fn limit_if(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    n_fpga: u32,
) -> Option<f64> {
    if n_fpga < 2 {
        return None;
    }
    let n = f64::from(n_fpga);
    Some(
        platform.bw_if / (2.0 * f64::from(algorithm.m_update)) * (n / (n - 1.0))
            * dataset.avg_degree(),
    )
}

/// Total network bandwidth limit of the broadcast-update design:
/// `bw_network / ((n-1) m_update) * |E|/|V|`. Undefined for one FPGA.
pub fn limit_net(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    n_fpga: u32,
) -> Option<f64> {
    if n_fpga < 2 {
        return None;
    }
    let n = f64::from(n_fpga);
    Some(platform.bw_network / ((n - 1.0) * f64::from(algorithm.m_update)) * dataset.avg_degree())
}

/// Interface and network limits of the unicast (per-message) baseline:
/// `l_if = bw_if/(2 m_message) * n^2/(n-1)` and
/// `l_net = bw_network * n / ((n-1) m_message)`.
pub fn baseline_limits_unicast(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    n_fpga: u32,
) -> Option<(f64, f64)> {
    if n_fpga < 2 {
        return None;
    }
    let n = f64::from(n_fpga);
    let m_message = f64::from(algorithm.m_message);
    let l_if = platform.bw_if / (2.0 * m_message) * n * n / (n - 1.0);
    let l_net = platform.bw_network * n / ((n - 1.0) * m_message);
    Some((l_if, l_net))
}

/// Theoretical network-bound speedup of broadcast updates over unicast
/// messages: `(|E|/|V|) * (1/n_fpga) * (m_message/m_update)`, the exact
/// ratio of [`limit_if`] to the baseline interface limit. With the filter
/// enabled the effective speedup never drops below 1, because updates are
/// only fanned to FPGAs that host neighbors.
pub fn speedup_vs_unicast(
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    n_fpga: u32,
) -> f64 {
    dataset.avg_degree() / f64::from(n_fpga) * f64::from(algorithm.m_message)
        / f64::from(algorithm.m_update)
}

/// Fewest FPGAs whose combined board memory holds all vertex state:
/// `ceil(|V| * m_vertex / m_board)`, at least 1.
pub fn min_fpgas(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
) -> u64 {
    let need = dataset.num_vertices as f64 * f64::from(algorithm.m_vertex);
    (need / platform.m_board).ceil().max(1.0) as u64
}

/// Evaluates every limit at one system shape and takes the minimum.
pub fn predict(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    n_fpga: u32,
    n_pe_per_fpga: u32,
    granularity_aware: bool,
) -> Result<LimitBreakdown, ModelError> {
    let l_pe = limit_pe(platform, n_fpga, n_pe_per_fpga);
    let l_mem = limit_mem(platform, algorithm, dataset, n_fpga, n_pe_per_fpga, granularity_aware)?;
    let l_if = limit_if(platform, algorithm, dataset, n_fpga);
    let l_net = limit_net(platform, algorithm, dataset, n_fpga);
    let defined = [
        (LimitKind::Pe, Some(l_pe)),
        (LimitKind::Mem, Some(l_mem)),
        (LimitKind::If, l_if),
        (LimitKind::Net, l_net),
    ];
    let t_sys = defined
        .iter()
        .filter_map(|(_, v)| *v)
        .fold(f64::INFINITY, f64::min);
    let binding = defined
        .iter()
        .filter(|(_, v)| *v == Some(t_sys))
        .map(|(k, _)| *k)
        .collect();
    Ok(LimitBreakdown { n_fpga, n_pe_per_fpga, l_pe, l_mem, l_if, l_net, t_sys, binding })
}

/// The optimizer's output: throughput-maximal FPGA count, then the smallest
/// PE count per FPGA that still sustains that throughput.
#[derive(Debug, Clone, Serialize)]
pub struct SystemChoice {
    pub n_fpga: u32,
    pub n_pe_per_fpga: u32,
    pub t_sys: f64,
    pub breakdown: LimitBreakdown,
}

/// Scans integer FPGA counts in `domain` (clamped from below by
/// [`min_fpgas`]), maximizing `t_sys` at full PE population, then lowers the
/// PE count to the smallest value that keeps `t_sys`. Ties break toward
/// fewer FPGAs, then fewer PEs.
pub fn optimize_system(
    platform: &PlatformParams,
    algorithm: &AlgorithmParams,
    dataset: &DatasetParams,
    domain: std::ops::RangeInclusive<u32>,
    granularity_aware: bool,
) -> Result<SystemChoice, ModelError> {
    platform.validate()?;
    let needed = min_fpgas(platform, algorithm, dataset);
    let lo = (*domain.start()).max(needed.min(u64::from(u32::MAX)) as u32);
    let hi = *domain.end();
    if lo > hi {
        return Err(ModelError::EmptyDomain { needed, max: hi });
    }
    let mut best: Option<LimitBreakdown> = None;
    for n_fpga in lo..=hi {
        let bd = predict(platform, algorithm, dataset, n_fpga, platform.n_pe_max, granularity_aware)?;
        if best.as_ref().is_none_or(|b| bd.t_sys > b.t_sys) {
            best = Some(bd);
        }
    }
    let best = best.expect("domain is non-empty");
    let mut choice_pe = platform.n_pe_max;
    for n_pe in platform.n_pe_min..=platform.n_pe_max {
        let bd = predict(platform, algorithm, dataset, best.n_fpga, n_pe, granularity_aware)?;
        if bd.t_sys >= best.t_sys {
            choice_pe = n_pe;
            break;
        }
    }
    let breakdown =
        predict(platform, algorithm, dataset, best.n_fpga, choice_pe, granularity_aware)?;
    Ok(SystemChoice {
        n_fpga: best.n_fpga,
        n_pe_per_fpga: choice_pe,
        t_sys: breakdown.t_sys,
        breakdown,
    })
}

fn teps_cell(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{:>14.4e}", x),
        None => format!("{:>14}", "-"),
    }
}

/// Aligned text rendering of a breakdown.
pub fn render_table(bd: &LimitBreakdown) -> String {
    let mark = |k: LimitKind| if bd.binding.contains(&k) { " <- binding" } else { "" };
    let mut out = String::new();
    out.push_str(&format!(
        "system shape: {} FPGA(s) x {} PE(s)\n",
        bd.n_fpga, bd.n_pe_per_fpga
    ));
    out.push_str(&format!("  l_pe  {}{}\n", teps_cell(Some(bd.l_pe)), mark(LimitKind::Pe)));
    out.push_str(&format!("  l_mem {}{}\n", teps_cell(Some(bd.l_mem)), mark(LimitKind::Mem)));
    out.push_str(&format!("  l_if  {}{}\n", teps_cell(bd.l_if), mark(LimitKind::If)));
    out.push_str(&format!("  l_net {}{}\n", teps_cell(bd.l_net), mark(LimitKind::Net)));
    out.push_str(&format!("  t_sys {}\n", teps_cell(Some(bd.t_sys))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relaxed_platform() -> PlatformParams {
        PlatformParams {
            f_clk: 1e8,
            cpe: 1.0,
            bw_if: 1e12,
            bw_network: 1e13,
            bw_mem: 1e12,
            m_board: 1e12,
            m_memword: 128,
            n_pe_max: 8,
            n_pe_min: 1,
        }
    }

    fn paper_platform() -> PlatformParams {
        PlatformParams {
            f_clk: 187.5e6,
            cpe: 1.05,
            bw_if: 1.00479e11,
            bw_network: 2e11,
            bw_mem: 8.0 * 8.1 * 1024.0 * 1024.0 * 1024.0,
            m_board: 4.0 * 8.0 * 1024.0 * 1024.0 * 1024.0 * 1024.0,
            m_memword: 128,
            n_pe_max: 9,
            n_pe_min: 1,
        }
    }

    fn deg32_dataset() -> DatasetParams {
        DatasetParams { num_vertices: 1 << 12, num_edges: 32 << 12 }
    }

    fn m128_algorithm() -> AlgorithmParams {
        AlgorithmParams { m_vertex: 64, m_update: 128, m_message: 128, m_edge: 32, p_msg_per_te: 1.0 }
    }

    fn assert_close(got: f64, want: f64, rel: f64) {
        assert!(
            (got - want).abs() <= rel * want.abs(),
            "got {got:e}, want {want:e}"
        );
    }

    #[test]
    fn limit_pe_values() {
        let mut p = relaxed_platform();
        assert_eq!(limit_pe(&p, 1, 1), 1e8);
        p.f_clk = 187.5e6;
        p.cpe = 1.05;
        assert_close(limit_pe(&p, 4, 9), 6428571428.571428, 1e-12);
        assert_eq!(limit_pe(&p, 8, 9), 2.0 * limit_pe(&p, 4, 9));
    }

    #[test]
    fn limit_mem_plain() {
        let mut p = relaxed_platform();
        p.bw_mem = 1e9;
        let a = m128_algorithm();
        let d = deg32_dataset();
        assert_eq!(limit_mem(&p, &a, &d, 1, 1, false).unwrap(), 3.125e7);
    }

    #[test]
    fn limit_mem_granularity_clamp() {
        let mut p = relaxed_platform();
        p.bw_mem = 1e9;
        p.m_memword = 512;
        let a = m128_algorithm();
        // (V/E) * n_pe_total = (100/200) * 2 = 1: exactly the clamp point.
        let d = DatasetParams { num_vertices: 100, num_edges: 200 };
        let refined = limit_mem(&p, &a, &d, 1, 2, true).unwrap();
        assert_eq!(refined, 1.0 * 1e9 / 512.0);
        // Past the clamp the value stays put.
        let refined = limit_mem(&p, &a, &d, 1, 8, true).unwrap();
        assert_eq!(refined, 1.0 * 1e9 / 512.0);
    }

    #[test]
    fn limit_mem_refined_never_exceeds_plain() {
        let mut p = relaxed_platform();
        p.m_memword = 256;
        let a = m128_algorithm();
        for (v, e) in [(100u64, 100u64), (100, 3200), (1000, 2000), (7, 2000)] {
            let d = DatasetParams { num_vertices: v, num_edges: e };
            for n_pe in [1, 3, 9] {
                let plain = limit_mem(&p, &a, &d, 2, n_pe, false).unwrap();
                let refined = limit_mem(&p, &a, &d, 2, n_pe, true).unwrap();
                assert!(refined <= plain);
            }
        }
    }

    #[test]
    fn limit_mem_rejects_small_memword() {
        let mut p = relaxed_platform();
        p.m_memword = 16;
        let a = m128_algorithm();
        assert!(matches!(
            limit_mem(&p, &a, &deg32_dataset(), 1, 1, true),
            Err(ModelError::MemWordSmallerThanEdge { .. })
        ));
    }

    #[test]
    fn limit_if_values() {
        let p = paper_platform();
        let a = m128_algorithm();
        let d = deg32_dataset();
        assert!(limit_if(&p, &a, &d, 1).is_none());
        assert_close(limit_if(&p, &a, &d, 4).unwrap(), 1.67465e10, 1e-9);
        // n=2 vs n=4 scales by (2/1)/(4/3) = 1.5.
        let r = limit_if(&p, &a, &d, 2).unwrap() / limit_if(&p, &a, &d, 4).unwrap();
        assert_close(r, 1.5, 1e-12);
        // Linear in average degree.
        let d2 = DatasetParams { num_vertices: d.num_vertices, num_edges: d.num_edges * 2 };
        assert_close(
            limit_if(&p, &a, &d2, 4).unwrap(),
            2.0 * limit_if(&p, &a, &d, 4).unwrap(),
            1e-12,
        );
    }

    #[test]
    fn limit_net_values() {
        let p = paper_platform();
        let a = m128_algorithm();
        let d = deg32_dataset();
        assert_close(limit_net(&p, &a, &d, 4).unwrap(), 16666666666.666666, 1e-12);
        assert!(limit_net(&p, &a, &d, 1).is_none());
        let mut prev = f64::INFINITY;
        for n in 2..10 {
            let l = limit_net(&p, &a, &d, n).unwrap();
            assert!(l <= prev);
            prev = l;
        }
    }

    #[test]
    fn baseline_values() {
        let p = paper_platform();
        let a = m128_algorithm();
        let (l_if, _) = baseline_limits_unicast(&p, &a, 4).unwrap();
        assert_close(l_if, 2093312500.0, 1e-9);
        // n=2: n^2/(n-1) = 4.
        let (l_if2, _) = baseline_limits_unicast(&p, &a, 2).unwrap();
        assert_close(l_if2, p.bw_if / (2.0 * 128.0) * 4.0, 1e-12);
    }

    #[test]
    fn speedup_values() {
        let a = m128_algorithm();
        let d = deg32_dataset();
        assert_close(speedup_vs_unicast(&a, &d, 4), 8.0, 1e-12);
        let d_boundary = DatasetParams { num_vertices: 100, num_edges: 400 };
        assert_close(speedup_vs_unicast(&a, &d_boundary, 4), 1.0, 1e-12);
    }

    #[test]
    fn speedup_equals_limit_ratio() {
        // The identity holds for unequal update/message sizes too.
        let p = paper_platform();
        let mut a = m128_algorithm();
        a.m_update = 96;
        a.m_message = 160;
        let d = deg32_dataset();
        for n in 2..8 {
            let lhs = limit_if(&p, &a, &d, n).unwrap()
                / baseline_limits_unicast(&p, &a, n).unwrap().0;
            assert_close(lhs, speedup_vs_unicast(&a, &d, n), 1e-12);
        }
    }

    #[test]
    fn min_fpgas_values() {
        let mut p = relaxed_platform();
        p.m_board = 4.0 * 8.0 * 1024.0 * 1024.0 * 1024.0; // 4 GiB in bits
        let mut a = m128_algorithm();
        a.m_vertex = 64;
        let d = DatasetParams { num_vertices: 1 << 30, num_edges: 1 << 33 };
        assert_eq!(min_fpgas(&p, &a, &d), 2);
        let tiny = DatasetParams { num_vertices: 100, num_edges: 400 };
        assert_eq!(min_fpgas(&p, &a, &tiny), 1);
        a.m_vertex = 128;
        assert!(min_fpgas(&p, &a, &d) >= 2);
    }

    #[test]
    fn predict_takes_min_and_marks_binding() {
        let p = paper_platform();
        let a = m128_algorithm();
        let d = deg32_dataset();
        let bd = predict(&p, &a, &d, 4, 9, false).unwrap();
        assert_eq!(bd.t_sys, bd.l_pe.min(bd.l_mem).min(bd.l_if.unwrap()).min(bd.l_net.unwrap()));
        assert_eq!(bd.binding, vec![LimitKind::Pe]);
        let single = predict(&p, &a, &d, 1, 9, false).unwrap();
        assert!(single.l_if.is_none() && single.l_net.is_none());
        assert_eq!(single.t_sys, single.l_pe.min(single.l_mem));
    }

    #[test]
    fn optimizer_synthetic_example() {
        // PE limit 4e8*n against interface limit 1e9*n/(n-1); they cross
        // between n=3 and n=4 and the integer optimum is n=4 with all four
        // PEs needed.
        let p = PlatformParams {
            f_clk: 1e8,
            cpe: 1.0,
            bw_if: 2e10,
            bw_network: 1e18,
            bw_mem: 1e18,
            m_board: 1e18,
            m_memword: 128,
            n_pe_max: 4,
            n_pe_min: 1,
        };
        let a = AlgorithmParams { m_vertex: 64, m_update: 100, m_message: 100, m_edge: 32, p_msg_per_te: 1.0 };
        let d = DatasetParams { num_vertices: 1000, num_edges: 10000 };
        let c = optimize_system(&p, &a, &d, 1..=16, false).unwrap();
        assert_eq!((c.n_fpga, c.n_pe_per_fpga), (4, 4));
        assert_close(c.t_sys, 2e10 / 200.0 * (4.0 / 3.0) * 10.0, 1e-12);
    }

    #[test]
    fn optimizer_monotone_regimes() {
        let mut p = relaxed_platform();
        // Network dominant everywhere: tiny interface bandwidth.
        p.bw_if = 1e3;
        let a = m128_algorithm();
        let d = deg32_dataset();
        let c = optimize_system(&p, &a, &d, 1..=16, false).unwrap();
        assert_eq!(c.n_fpga, 1, "single FPGA avoids the network entirely");

        // PE dominant everywhere: infinite-ish network.
        p.bw_if = 1e18;
        p.bw_network = 1e18;
        let c = optimize_system(&p, &a, &d, 2..=16, false).unwrap();
        assert_eq!(c.n_fpga, 16);
        assert_eq!(c.n_pe_per_fpga, p.n_pe_max);
    }

    #[test]
    fn optimizer_enforces_memory_floor_and_empty_domain() {
        let mut p = relaxed_platform();
        p.m_board = 64.0 * 1024.0; // tiny board memory
        let a = m128_algorithm();
        let d = DatasetParams { num_vertices: 10000, num_edges: 20000 };
        // 10000 * 64 bits = 640000 bits -> needs 10 boards.
        let c = optimize_system(&p, &a, &d, 1..=16, false).unwrap();
        assert!(c.n_fpga >= 10);
        assert!(matches!(
            optimize_system(&p, &a, &d, 1..=4, false),
            Err(ModelError::EmptyDomain { .. })
        ));
    }

    #[test]
    fn monotonicity_in_n_fpga() {
        let p = paper_platform();
        let a = m128_algorithm();
        let d = deg32_dataset();
        let mut prev_pe = 0.0;
        let mut prev_mem = 0.0;
        let mut prev_if = f64::INFINITY;
        let mut prev_net = f64::INFINITY;
        for n in 2..=16 {
            let bd = predict(&p, &a, &d, n, 9, true).unwrap();
            assert!(bd.l_pe >= prev_pe);
            assert!(bd.l_mem >= prev_mem);
            assert!(bd.l_if.unwrap() <= prev_if);
            assert!(bd.l_net.unwrap() <= prev_net);
            prev_pe = bd.l_pe;
            prev_mem = bd.l_mem;
            prev_if = bd.l_if.unwrap();
            prev_net = bd.l_net.unwrap();
        }
    }

    #[test]
    fn table_rendering_mentions_binding() {
        let p = paper_platform();
        let bd = predict(&p, &m128_algorithm(), &deg32_dataset(), 4, 9, false).unwrap();
        let table = render_table(&bd);
        assert!(table.contains("binding"));
        assert!(table.contains("l_net"));
    }
}
