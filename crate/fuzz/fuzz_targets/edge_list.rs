#![no_main]

use libfuzzer_sys::fuzz_target;

use fabgraph::graph::{load_edge_list, save_edge_list, EdgeListOptions};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Exercise both the default and a narrow id width.
    let _ = load_edge_list(text, EdgeListOptions { vertex_id_bits: 10 });
    let Ok(graph) = load_edge_list(text, EdgeListOptions::default()) else { return };
    // Whatever parsed must satisfy the adjacency invariants and survive a
    // save/load round trip with identical storage.
    let stats = graph.degree_stats();
    assert!(stats.max_outdegree >= stats.min_outdegree);
    let offsets = graph.offsets();
    assert_eq!(offsets[0], 0);
    assert_eq!(*offsets.last().unwrap(), graph.num_edges());
    let reloaded = load_edge_list(&save_edge_list(&graph), EdgeListOptions::default())
        .expect("saved form must reparse");
    assert_eq!(graph.neighbors_array(), reloaded.neighbors_array());
});
