#![no_main]

use libfuzzer_sys::fuzz_target;

use fabgraph::graph::generate_uniform;
use fabgraph::partition::{import_partition, parse_partition_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(ids) = parse_partition_file(text) else { return };
    // Feed the parsed assignment into the two-level import against a graph
    // of the matching size; the placement must respect the file verbatim.
    if ids.is_empty() || ids.len() > 4096 {
        return;
    }
    let graph = generate_uniform(ids.len() as u64, 2 * ids.len() as u64, 7);
    if let Ok(placement) = import_partition(&graph, &ids, 2, None) {
        for (v, &fpga) in ids.iter().enumerate() {
            assert_eq!(placement.fpga_of(v as u32), fpga);
        }
    }
});
