//! Property tests for the structural invariants: partition coverage, greedy
//! balance, filter soundness, generator determinism, model identities, and
//! kernel purity.

use proptest::prelude::*;

use fabgraph::graph::{
    generate_layered, generate_rmat, generate_uniform, load_edge_list, save_edge_list,
    EdgeListOptions, Graph, RMAT_DEFAULT_PROBS,
};
use fabgraph::kernel::{Kernel, WccKernel, WccState};
use fabgraph::model::{
    baseline_limits_unicast, limit_if, limit_mem, optimize_system, predict, speedup_vs_unicast,
    AlgorithmParams, DatasetParams, PlatformParams,
};
use fabgraph::partition::{
    build_filter_bitmap, build_pe_edge_sublists, imbalance, loads, partition_greedy_edges,
    partition_round_robin, Level,
};
use fabgraph::reference;
use fabgraph::VertexId;

fn arb_graph() -> impl proptest::strategy::Strategy<Value = Graph> {
    (1u64..60, 0u64..300, any::<u64>())
        .prop_map(|(v, e, seed)| generate_uniform(v, e, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sublists_cover_edge_multiset(graph in arb_graph(), n_fpga in 1u32..4, n_pe in 1u32..4) {
        let placement = partition_greedy_edges(&graph, n_fpga, n_pe);
        let sublists = build_pe_edge_sublists(&graph, &placement);
        let mut rebuilt: Vec<(VertexId, VertexId)> = Vec::new();
        for pe in 0..placement.n_pes() {
            for v in 0..graph.num_vertices() as VertexId {
                for &u in sublists.sublist(pe, v) {
                    prop_assert_eq!(placement.pe_of(u), pe);
                    rebuilt.push((v, u));
                }
            }
        }
        let mut expected: Vec<_> = graph.edges().collect();
        rebuilt.sort_unstable();
        expected.sort_unstable();
        prop_assert_eq!(rebuilt, expected);
    }

    #[test]
    fn greedy_load_bound(graph in arb_graph(), n_pes in 1u32..8) {
        let placement = partition_greedy_edges(&graph, 1, n_pes);
        let loads = loads(&graph, &placement, Level::Pe);
        let max_deg = graph.degree_stats().max_outdegree;
        let total: u64 = loads.iter().sum();
        let mean = total as f64 / loads.len() as f64;
        let max = *loads.iter().max().unwrap();
        let min = *loads.iter().min().unwrap();
        prop_assert!(max - min <= max_deg);
        prop_assert!(max as f64 <= mean + max_deg as f64);
    }

    #[test]
    fn filter_bit_zero_means_no_edge(graph in arb_graph(), n_fpga in 1u32..5) {
        let placement = partition_round_robin(&graph, n_fpga, 2);
        let bitmap = build_filter_bitmap(&graph, &placement);
        for v in 0..graph.num_vertices() as VertexId {
            for f in 0..n_fpga {
                let brute = graph.neighbors(v).iter().any(|&u| placement.fpga_of(u) == f);
                prop_assert_eq!(bitmap.bit(v, f), brute);
            }
        }
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>()) {
        let a = generate_uniform(64, 256, seed);
        prop_assert_eq!(&a, &generate_uniform(64, 256, seed));
        let r = generate_rmat(6, 4, seed, RMAT_DEFAULT_PROBS).unwrap();
        prop_assert_eq!(&r, &generate_rmat(6, 4, seed, RMAT_DEFAULT_PROBS).unwrap());
        let l = generate_layered(4, 4, 3, seed).unwrap();
        prop_assert_eq!(&l, &generate_layered(4, 4, 3, seed).unwrap());
    }

    #[test]
    fn edge_list_round_trip(graph in arb_graph()) {
        let text = save_edge_list(&graph);
        prop_assume!(!text.is_empty());
        let reloaded = load_edge_list(&text, EdgeListOptions::default()).unwrap();
        prop_assert_eq!(graph.offsets()[..reloaded.offsets().len()].to_vec(), reloaded.offsets().to_vec());
        prop_assert_eq!(graph.neighbors_array(), reloaded.neighbors_array());
    }

    #[test]
    fn layered_levels_equal_layer_index(width in 1u64..6, depth in 1u64..6, deg in 1u64..4, seed in any::<u64>()) {
        let graph = generate_layered(width, depth, deg, seed).unwrap();
        let levels = reference::bfs_levels(&graph, 0);
        for v in 1..graph.num_vertices() {
            let layer = (v - 1) / width + 1;
            prop_assert_eq!(levels[v as usize], Some(layer));
        }
    }

    #[test]
    fn speedup_identity_matches_limit_ratio(
        bw_if in 1e9f64..1e12,
        m_update in 16u32..512,
        m_message in 16u32..512,
        deg in 1u64..128,
        n_fpga in 2u32..12,
    ) {
        let platform = PlatformParams {
            f_clk: 1e8, cpe: 1.0, bw_if, bw_network: 1e12, bw_mem: 1e12,
            m_board: 1e15, m_memword: 512, n_pe_max: 8, n_pe_min: 1,
        };
        let algorithm = AlgorithmParams { m_vertex: 64, m_update, m_message, m_edge: 32, p_msg_per_te: 1.0 };
        let dataset = DatasetParams { num_vertices: 1000, num_edges: 1000 * deg };
        let ratio = limit_if(&platform, &algorithm, &dataset, n_fpga).unwrap()
            / baseline_limits_unicast(&platform, &algorithm, n_fpga).unwrap().0;
        let speedup = speedup_vs_unicast(&algorithm, &dataset, n_fpga);
        prop_assert!((ratio - speedup).abs() <= 1e-9 * speedup.abs());
    }

    #[test]
    fn refined_memory_limit_never_exceeds_plain(
        v in 1u64..5000,
        e in 1u64..100_000,
        n_fpga in 1u32..8,
        n_pe in 1u32..16,
        m_edge in 8u32..128,
    ) {
        let platform = PlatformParams {
            f_clk: 1e8, cpe: 1.0, bw_if: 1e11, bw_network: 1e12, bw_mem: 3.3e10,
            m_board: 1e15, m_memword: 512, n_pe_max: 16, n_pe_min: 1,
        };
        let algorithm = AlgorithmParams { m_vertex: 64, m_update: 64, m_message: 64, m_edge, p_msg_per_te: 1.0 };
        let dataset = DatasetParams { num_vertices: v, num_edges: e };
        let plain = limit_mem(&platform, &algorithm, &dataset, n_fpga, n_pe, false).unwrap();
        let refined = limit_mem(&platform, &algorithm, &dataset, n_fpga, n_pe, true).unwrap();
        prop_assert!(refined <= plain + 1e-9);
        // Clamp form: once the spread term saturates, the word size rules.
        if dataset.num_vertices as f64 / dataset.num_edges as f64
            * f64::from(n_fpga * n_pe) >= 1.0
        {
            let want = f64::from(n_fpga) * platform.bw_mem / 512.0;
            prop_assert!((refined - want).abs() <= 1e-6 * want);
        }
    }

    #[test]
    fn optimizer_matches_brute_force_small(
        f_clk in 1e7f64..1e9,
        cpe in 1.0f64..2.0,
        bw_if in 1e9f64..1e12,
        bw_network in 1e9f64..1e13,
        bw_mem in 1e9f64..1e12,
        n_pe_max in 1u32..12,
        deg in 1u64..64,
    ) {
        let platform = PlatformParams {
            f_clk, cpe, bw_if, bw_network, bw_mem,
            m_board: 1e15, m_memword: 512, n_pe_max, n_pe_min: 1,
        };
        let algorithm = AlgorithmParams { m_vertex: 64, m_update: 128, m_message: 128, m_edge: 32, p_msg_per_te: 1.0 };
        let dataset = DatasetParams { num_vertices: 10_000, num_edges: 10_000 * deg };
        let choice = optimize_system(&platform, &algorithm, &dataset, 1..=8, false).unwrap();
        let mut best: Option<(u32, u32, f64)> = None;
        for n in 1..=8u32 {
            for p in 1..=n_pe_max {
                let t = predict(&platform, &algorithm, &dataset, n, p, false).unwrap().t_sys;
                let better = match best {
                    None => true,
                    Some((_, _, bt)) => t > bt,
                };
                if better {
                    best = Some((n, p, t));
                }
            }
        }
        let (bn, bp, bt) = best.unwrap();
        prop_assert_eq!(choice.n_fpga, bn);
        prop_assert_eq!(choice.n_pe_per_fpga, bp);
        prop_assert_eq!(choice.t_sys, bt);
    }

    #[test]
    fn wcc_kernel_is_pure_and_monotone(label in 0u32..100, msg in 0u32..100, active in any::<bool>()) {
        let kernel = WccKernel::new(32);
        let state = WccState { label, active };
        let once = kernel.gather(state, msg, &msg);
        let twice = kernel.gather(state, msg, &msg);
        prop_assert_eq!(once, twice);
        prop_assert!(once.label <= state.label);
        let (applied, update) = kernel.apply(once, 3, 7, 100);
        let (applied2, update2) = kernel.apply(once, 3, 7, 100);
        prop_assert_eq!(applied, applied2);
        prop_assert_eq!(update, update2);
        prop_assert!(applied.label <= once.label);
    }

    #[test]
    fn imbalance_zero_iff_equal_loads(loads_v in prop::collection::vec(1u64..40, 2..6)) {
        let mut edges = Vec::new();
        for (v, &d) in loads_v.iter().enumerate() {
            for _ in 0..d {
                edges.push((v as VertexId, 0));
            }
        }
        let graph = Graph::from_edges(loads_v.len() as u64, &edges, None);
        let placement = fabgraph::partition::PlacementMap::new(
            loads_v.len() as u32, 1,
            (0..loads_v.len() as u32).collect(),
        );
        let im = imbalance(&graph, &placement, Level::Pe);
        let all_equal = loads_v.iter().all(|&d| d == loads_v[0]);
        prop_assert_eq!(im == 0.0, all_equal);
    }
}
