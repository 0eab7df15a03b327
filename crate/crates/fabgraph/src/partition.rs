//! Vertex placement across FPGAs and PEs, the per-PE edge re-layout used by
//! receiver-side scatter, and the inter-FPGA neighbor filter bitmap.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::Graph;
use crate::VertexId;

/// Which aggregation level a load or imbalance figure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Pe,
    Fpga,
}

/// Vertex → global PE assignment. Global PE ids are
/// `fpga * n_pe_per_fpga + local_pe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementMap {
    n_fpga: u32,
    n_pe_per_fpga: u32,
    assignment: Vec<u32>,
}

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("partition file has {got} entries, graph has {want} vertices")]
    LengthMismatch { got: usize, want: u64 },
    #[error("line {line}: fpga id {id} out of range (n_fpga = {n_fpga})")]
    FpgaOutOfRange { line: usize, id: u64, n_fpga: u32 },
    #[error("line {line}: malformed partition entry `{text}`")]
    MalformedLine { line: usize, text: String },
}

impl PlacementMap {
    pub fn new(n_fpga: u32, n_pe_per_fpga: u32, assignment: Vec<u32>) -> Self {
        assert!(n_fpga >= 1 && n_pe_per_fpga >= 1);
        let n_pes = n_fpga * n_pe_per_fpga;
        assert!(assignment.iter().all(|&pe| pe < n_pes));
        PlacementMap { n_fpga, n_pe_per_fpga, assignment }
    }

    pub fn n_fpga(&self) -> u32 {
        self.n_fpga
    }

    pub fn n_pe_per_fpga(&self) -> u32 {
        self.n_pe_per_fpga
    }

    pub fn n_pes(&self) -> u32 {
        self.n_fpga * self.n_pe_per_fpga
    }

    pub fn pe_of(&self, v: VertexId) -> u32 {
        self.assignment[v as usize]
    }

    pub fn fpga_of(&self, v: VertexId) -> u32 {
        self.assignment[v as usize] / self.n_pe_per_fpga
    }

    pub fn fpga_of_pe(&self, pe: u32) -> u32 {
        pe / self.n_pe_per_fpga
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Vertices hosted on each PE, ascending by id. This is the order the
    /// apply stage walks them in.
    pub fn vertices_by_pe(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.n_pes() as usize];
        for (v, &pe) in self.assignment.iter().enumerate() {
            out[pe as usize].push(v as VertexId);
        }
        out
    }
}

/// Round-robin placement: `assignment[v] = v mod n_pes`.
pub fn partition_round_robin(graph: &Graph, n_fpga: u32, n_pe_per_fpga: u32) -> PlacementMap {
    let n_pes = n_fpga * n_pe_per_fpga;
    let assignment = (0..graph.num_vertices()).map(|v| (v % u64::from(n_pes)) as u32).collect();
    PlacementMap::new(n_fpga, n_pe_per_fpga, assignment)
}

/// Greedy edge-balancing placement: vertices are visited in id order
/// (unsorted on purpose) and each goes to the PE with the smallest running
/// outdegree sum; ties break toward the lowest PE id.
pub fn partition_greedy_edges(graph: &Graph, n_fpga: u32, n_pe_per_fpga: u32) -> PlacementMap {
    let n_pes = n_fpga * n_pe_per_fpga;
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> =
        (0..n_pes).map(|pe| Reverse((0u64, pe))).collect();
    let mut assignment = vec![0u32; graph.num_vertices() as usize];
    for v in 0..graph.num_vertices() as VertexId {
        let Reverse((load, pe)) = heap.pop().expect("n_pes >= 1");
        assignment[v as usize] = pe;
        heap.push(Reverse((load + graph.outdegree(v), pe)));
    }
    PlacementMap::new(n_fpga, n_pe_per_fpga, assignment)
}

/// Parses a partition file: one FPGA id per line, line i belongs to vertex
/// i (the METIS output convention). `#` comments and blank lines are
/// skipped.
pub fn parse_partition_file(text: &str) -> Result<Vec<u32>, PartitionError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let id: u32 = body
            .parse()
            .map_err(|_| PartitionError::MalformedLine { line, text: raw.trim().to_string() })?;
        out.push(id);
    }
    Ok(out)
}

/// Two-level placement from an external FPGA partition: the file fixes the
/// FPGA of every vertex verbatim; within each FPGA, PEs are then filled by
/// the greedy edge-balancing rule restricted to that FPGA's vertices.
/// `n_fpga` may be given to validate the file's range; otherwise the
/// largest id seen determines it.
pub fn import_partition(
    graph: &Graph,
    fpga_assignment: &[u32],
    n_pe_per_fpga: u32,
    n_fpga: Option<u32>,
) -> Result<PlacementMap, PartitionError> {
    if fpga_assignment.len() as u64 != graph.num_vertices() {
        return Err(PartitionError::LengthMismatch {
            got: fpga_assignment.len(),
            want: graph.num_vertices(),
        });
    }
    let seen_max = fpga_assignment.iter().copied().max().unwrap_or(0);
    if let Some(n) = n_fpga {
        if seen_max >= n {
            let line = fpga_assignment.iter().position(|&f| f == seen_max).unwrap() + 1;
            return Err(PartitionError::FpgaOutOfRange { line, id: u64::from(seen_max), n_fpga: n });
        }
    }
    let n_fpga = n_fpga.unwrap_or(seen_max + 1);
    let mut heaps: Vec<BinaryHeap<Reverse<(u64, u32)>>> = (0..n_fpga)
        .map(|_| (0..n_pe_per_fpga).map(|pe| Reverse((0u64, pe))).collect())
        .collect();
    let mut assignment = vec![0u32; graph.num_vertices() as usize];
    for v in 0..graph.num_vertices() as VertexId {
        let fpga = fpga_assignment[v as usize];
        let heap = &mut heaps[fpga as usize];
        let Reverse((load, pe)) = heap.pop().expect("n_pe_per_fpga >= 1");
        assignment[v as usize] = fpga * n_pe_per_fpga + pe;
        heap.push(Reverse((load + graph.outdegree(v), pe)));
    }
    Ok(PlacementMap::new(n_fpga, n_pe_per_fpga, assignment))
}

/// The receiver-side edge layout: for every PE `p` and every vertex `v` in
/// the graph, the ordered sublist of `v`'s out-neighbors that are hosted on
/// `p`. The multiset union over PEs equals the graph's edge multiset.
#[derive(Debug, Clone)]
pub struct PeEdgeSublists {
    offsets: Vec<Vec<u64>>,
    neighbors: Vec<Vec<VertexId>>,
    weights: Option<Vec<Vec<u64>>>,
}

impl PeEdgeSublists {
    pub fn n_pes(&self) -> u32 {
        self.offsets.len() as u32
    }

    pub fn sublist(&self, pe: u32, v: VertexId) -> &[VertexId] {
        let offs = &self.offsets[pe as usize];
        let lo = offs[v as usize] as usize;
        let hi = offs[v as usize + 1] as usize;
        &self.neighbors[pe as usize][lo..hi]
    }

    pub fn sublist_weights(&self, pe: u32, v: VertexId) -> Option<&[u64]> {
        self.weights.as_ref().map(|w| {
            let offs = &self.offsets[pe as usize];
            let lo = offs[v as usize] as usize;
            let hi = offs[v as usize + 1] as usize;
            &w[pe as usize][lo..hi]
        })
    }

    pub fn edges_on_pe(&self, pe: u32) -> u64 {
        self.neighbors[pe as usize].len() as u64
    }

    /// Index range of `sublist(pe, v)` for use with the `*_at` accessors.
    pub fn range(&self, pe: u32, v: VertexId) -> (usize, usize) {
        let offs = &self.offsets[pe as usize];
        (offs[v as usize] as usize, offs[v as usize + 1] as usize)
    }

    pub fn neighbor_at(&self, pe: u32, idx: usize) -> VertexId {
        self.neighbors[pe as usize][idx]
    }

    pub fn weight_at(&self, pe: u32, idx: usize) -> Option<u64> {
        self.weights.as_ref().map(|w| w[pe as usize][idx])
    }
}

/// Builds the per-PE edge sublists. Neighbor order within each sublist
/// preserves graph storage order.
pub fn build_pe_edge_sublists(graph: &Graph, placement: &PlacementMap) -> PeEdgeSublists {
    let n_pes = placement.n_pes() as usize;
    let n = graph.num_vertices() as usize;
    let mut counts = vec![vec![0u64; n + 1]; n_pes];
    for v in 0..n {
        for &u in graph.neighbors(v as VertexId) {
            counts[placement.pe_of(u) as usize][v + 1] += 1;
        }
    }
    for pe_counts in &mut counts {
        for i in 0..n {
            pe_counts[i + 1] += pe_counts[i];
        }
    }
    let offsets = counts;
    let mut neighbors: Vec<Vec<VertexId>> =
        offsets.iter().map(|o| vec![0; o[n] as usize]).collect();
    let mut weights: Option<Vec<Vec<u64>>> = graph
        .is_weighted()
        .then(|| offsets.iter().map(|o| vec![0; o[n] as usize]).collect());
    let mut cursor: Vec<Vec<u64>> = offsets.iter().map(|o| o[..n].to_vec()).collect();
    for v in 0..n {
        let nbrs = graph.neighbors(v as VertexId);
        let ws = graph.edge_weights(v as VertexId);
        for (i, &u) in nbrs.iter().enumerate() {
            let pe = placement.pe_of(u) as usize;
            let slot = cursor[pe][v] as usize;
            neighbors[pe][slot] = u;
            if let (Some(w), Some(ws)) = (weights.as_mut(), ws) {
                w[pe][slot] = ws[i];
            }
            cursor[pe][v] += 1;
        }
    }
    PeEdgeSublists { offsets, neighbors, weights }
}

/// Per-vertex, per-FPGA bit table: bit (v, f) is set iff `v` has at least
/// one out-neighbor hosted on FPGA `f`. Consulted before fanning an update
/// out to a remote FPGA.
#[derive(Debug, Clone)]
pub struct NeighborFilterBitmap {
    n_fpga: u32,
    words: Vec<u64>,
}

impl NeighborFilterBitmap {
    pub fn bit(&self, v: VertexId, fpga: u32) -> bool {
        let idx = v as u64 * u64::from(self.n_fpga) + u64::from(fpga);
        self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    pub fn n_fpga(&self) -> u32 {
        self.n_fpga
    }

    /// Total storage footprint in bits (|V| × n_FPGA).
    pub fn size_bits(&self, num_vertices: u64) -> u64 {
        num_vertices * u64::from(self.n_fpga)
    }
}

pub fn build_filter_bitmap(graph: &Graph, placement: &PlacementMap) -> NeighborFilterBitmap {
    let n_fpga = placement.n_fpga();
    let bits = graph.num_vertices() * u64::from(n_fpga);
    let mut words = vec![0u64; bits.div_ceil(64) as usize];
    for v in 0..graph.num_vertices() as VertexId {
        for &u in graph.neighbors(v) {
            let idx = u64::from(v) * u64::from(n_fpga) + u64::from(placement.fpga_of(u));
            words[(idx / 64) as usize] |= 1 << (idx % 64);
        }
    }
    NeighborFilterBitmap { n_fpga, words }
}

/// Outgoing-edge load per PE or per FPGA under a placement.
pub fn loads(graph: &Graph, placement: &PlacementMap, level: Level) -> Vec<u64> {
    let buckets = match level {
        Level::Pe => placement.n_pes(),
        Level::Fpga => placement.n_fpga(),
    };
    let mut out = vec![0u64; buckets as usize];
    for v in 0..graph.num_vertices() as VertexId {
        let bucket = match level {
            Level::Pe => placement.pe_of(v),
            Level::Fpga => placement.fpga_of(v),
        };
        out[bucket as usize] += graph.outdegree(v);
    }
    out
}

/// `(max load − min load) / mean load`, with loads measured in outgoing
/// edges. Zero for an edgeless graph.
pub fn imbalance(graph: &Graph, placement: &PlacementMap, level: Level) -> f64 {
    let loads = loads(graph, placement, level);
    let total: u64 = loads.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let mean = total as f64 / loads.len() as f64;
    let max = *loads.iter().max().unwrap() as f64;
    let min = *loads.iter().min().unwrap() as f64;
    (max - min) / mean
}
