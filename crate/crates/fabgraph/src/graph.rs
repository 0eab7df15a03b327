//! Compressed adjacency storage, edge-list I/O, and synthetic generators.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use thiserror::Error;

use crate::rng::SplitMix64;
use crate::VertexId;

/// Directed graph in compressed sparse row form.
///
/// `offsets` has length `num_vertices + 1`; the out-neighbors of vertex `v`
/// are `neighbors[offsets[v]..offsets[v + 1]]`, in insertion order. Duplicate
/// edges and self-loops are kept as given. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<u64>,
    neighbors: Vec<VertexId>,
    weights: Option<Vec<u64>>,
}

/// Exact degree statistics; the average is kept as a reduced fraction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeStats {
    pub avg_degree_num: u64,
    pub avg_degree_den: u64,
    pub avg_degree: f64,
    pub max_outdegree: u64,
    pub min_outdegree: u64,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: malformed edge `{text}`")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: vertex id {id} does not fit in {bits} bits")]
    IdOverflow { line: usize, id: u64, bits: u32 },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("quadrant probabilities sum to {sum}, expected 1")]
    ProbsNotNormalized { sum: f64 },
    #[error("target degree {target} cannot cover the {tree} tree edges of a layered graph with {vertices} vertices")]
    TargetDegreeTooLow { target: u64, tree: u64, vertices: u64 },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Graph {
    /// Builds a graph from an explicit edge list. The vertex set is
    /// `0..num_vertices`; `num_vertices` must cover every endpoint.
    pub fn from_edges(
        num_vertices: u64,
        edges: &[(VertexId, VertexId)],
        weights: Option<&[u64]>,
    ) -> Self {
        assert!(num_vertices >= 1, "graph must have at least one vertex");
        if let Some(w) = weights {
            assert_eq!(w.len(), edges.len());
        }
        let n = num_vertices as usize;
        let mut counts = vec![0u64; n + 1];
        for &(src, dst) in edges {
            assert!((src as u64) < num_vertices && (dst as u64) < num_vertices);
            counts[src as usize + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut cursor: Vec<u64> = offsets[..n].to_vec();
        let mut neighbors = vec![0 as VertexId; edges.len()];
        let mut laid_weights = weights.map(|_| vec![0u64; edges.len()]);
        for (idx, &(src, dst)) in edges.iter().enumerate() {
            let slot = cursor[src as usize] as usize;
            neighbors[slot] = dst;
            if let (Some(out), Some(w)) = (laid_weights.as_mut(), weights) {
                out[slot] = w[idx];
            }
            cursor[src as usize] += 1;
        }
        Graph { offsets, neighbors, weights: laid_weights }
    }

    pub fn num_vertices(&self) -> u64 {
        (self.offsets.len() - 1) as u64
    }

    pub fn num_edges(&self) -> u64 {
        self.neighbors.len() as u64
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    pub fn neighbors_array(&self) -> &[VertexId] {
        &self.neighbors
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn outdegree(&self, v: VertexId) -> u64 {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let lo = self.offsets[v as usize] as usize;
        let hi = self.offsets[v as usize + 1] as usize;
        &self.neighbors[lo..hi]
    }

    /// Edge weights of `v` aligned with [`Graph::neighbors`].
    pub fn edge_weights(&self, v: VertexId) -> Option<&[u64]> {
        self.weights.as_ref().map(|w| {
            let lo = self.offsets[v as usize] as usize;
            let hi = self.offsets[v as usize + 1] as usize;
            &w[lo..hi]
        })
    }

    /// Iterates all edges as `(src, dst)` pairs in storage order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.num_vertices() as usize).flat_map(move |v| {
            self.neighbors(v as VertexId).iter().map(move |&u| (v as VertexId, u))
        })
    }

    /// New graph with every edge mirrored. Weights are carried over to the
    /// reverse edge. Useful before running label propagation on graphs meant
    /// to be undirected.
    pub fn symmetrized(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.neighbors.len() * 2);
        let mut weights = self.weights.as_ref().map(|_| Vec::with_capacity(self.neighbors.len() * 2));
        for v in 0..self.num_vertices() as VertexId {
            let nbrs = self.neighbors(v);
            let ws = self.edge_weights(v);
            for (i, &u) in nbrs.iter().enumerate() {
                edges.push((v, u));
                edges.push((u, v));
                if let (Some(out), Some(ws)) = (weights.as_mut(), ws) {
                    out.push(ws[i]);
                    out.push(ws[i]);
                }
            }
        }
        Graph::from_edges(self.num_vertices(), &edges, weights.as_deref())
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let n = self.num_vertices();
        let e = self.num_edges();
        let g = gcd(e.max(1), n);
        let (num, den) = if e == 0 { (0, 1) } else { (e / g, n / g) };
        let mut max_d = 0u64;
        let mut min_d = u64::MAX;
        for v in 0..n {
            let d = self.offsets[v as usize + 1] - self.offsets[v as usize];
            max_d = max_d.max(d);
            min_d = min_d.min(d);
        }
        DegreeStats {
            avg_degree_num: num,
            avg_degree_den: den,
            avg_degree: e as f64 / n as f64,
            max_outdegree: max_d,
            min_outdegree: min_d,
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// Options for [`load_edge_list`]. `vertex_id_bits` bounds accepted ids;
/// the default of 32 matches the storage width.
#[derive(Debug, Clone, Copy)]
pub struct EdgeListOptions {
    pub vertex_id_bits: u32,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions { vertex_id_bits: 32 }
    }
}

/// Parses an edge-list text: one `src dst` or `src dst weight` per line,
/// whitespace separated decimal ids, `#` starts a comment. The vertex set is
/// `0..=max_id`, so ids never mentioned become isolated vertices. A weight
/// column, once seen, must be present on every edge.
pub fn load_edge_list(text: &str, opts: EdgeListOptions) -> Result<Graph, GraphError> {
    let bits = opts.vertex_id_bits.min(32);
    let id_limit: u64 = if bits >= 32 { u64::from(u32::MAX) + 1 } else { 1u64 << bits };
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut weights: Vec<u64> = Vec::new();
    let mut saw_weight = false;
    let mut max_id: u64 = 0;
    let mut any = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut fields = body.split_whitespace();
        let Some(src_s) = fields.next() else { continue };
        let malformed = || GraphError::MalformedLine { line, text: raw.trim().to_string() };
        let dst_s = fields.next().ok_or_else(malformed)?;
        let weight_s = fields.next();
        if fields.next().is_some() {
            return Err(malformed());
        }
        let src: u64 = src_s.parse().map_err(|_| malformed())?;
        let dst: u64 = dst_s.parse().map_err(|_| malformed())?;
        for id in [src, dst] {
            if id >= id_limit {
                return Err(GraphError::IdOverflow { line, id, bits });
            }
        }
        match weight_s {
            Some(w) => {
                if !saw_weight && !edges.is_empty() {
                    return Err(malformed());
                }
                saw_weight = true;
                weights.push(w.parse().map_err(|_| malformed())?);
            }
            None => {
                if saw_weight {
                    return Err(malformed());
                }
            }
        }
        max_id = max_id.max(src).max(dst);
        edges.push((src as VertexId, dst as VertexId));
        any = true;
    }

    if !any {
        return Err(GraphError::Empty);
    }
    let num_vertices = max_id + 1;
    let weights = saw_weight.then_some(weights.as_slice());
    Ok(Graph::from_edges(num_vertices, &edges, weights))
}

/// Writes the edge-list text form; inverse of [`load_edge_list`] for graphs
/// with no trailing isolated vertices.
pub fn save_edge_list(graph: &Graph) -> String {
    let mut out = String::with_capacity(graph.num_edges() as usize * 8);
    for v in 0..graph.num_vertices() as VertexId {
        let nbrs = graph.neighbors(v);
        match graph.edge_weights(v) {
            Some(ws) => {
                for (u, w) in nbrs.iter().zip(ws) {
                    let _ = writeln!(out, "{v} {u} {w}");
                }
            }
            None => {
                for u in nbrs {
                    let _ = writeln!(out, "{v} {u}");
                }
            }
        }
    }
    out
}

/// `num_edges` directed edges with both endpoints drawn uniformly from
/// `0..num_vertices` (two SplitMix64 draws per edge: source then
/// destination). Deterministic per seed.
pub fn generate_uniform(num_vertices: u64, num_edges: u64, seed: u64) -> Graph {
    assert!(num_vertices >= 1);
    assert!(num_vertices <= u64::from(u32::MAX) + 1);
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::with_capacity(num_edges as usize);
    for _ in 0..num_edges {
        let src = rng.next_below(num_vertices) as VertexId;
        let dst = rng.next_below(num_vertices) as VertexId;
        edges.push((src, dst));
    }
    Graph::from_edges(num_vertices, &edges, None)
}

/// Graph500-convention quadrant probabilities for [`generate_rmat`].
pub const RMAT_DEFAULT_PROBS: [f64; 4] = [0.57, 0.19, 0.19, 0.05];

/// Recursive-quadrant (R-MAT) generator: `2^scale` vertices and
/// `edgefactor * 2^scale` edges. Each edge makes `scale` quadrant choices,
/// one `next_f64` draw per level, compared against the cumulative
/// probabilities of `probs` in order (upper-left, upper-right, lower-left,
/// lower-right). Deterministic per seed.
pub fn generate_rmat(
    scale: u32,
    edgefactor: u64,
    seed: u64,
    probs: [f64; 4],
) -> Result<Graph, GraphError> {
    assert!(scale >= 1 && scale <= 31);
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(GraphError::ProbsNotNormalized { sum });
    }
    let num_vertices = 1u64 << scale;
    let num_edges = edgefactor * num_vertices;
    let c1 = probs[0];
    let c2 = c1 + probs[1];
    let c3 = c2 + probs[2];
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::with_capacity(num_edges as usize);
    for _ in 0..num_edges {
        let mut src: u64 = 0;
        let mut dst: u64 = 0;
        for _ in 0..scale {
            let r = rng.next_f64();
            let (row, col) = if r < c1 {
                (0, 0)
            } else if r < c2 {
                (0, 1)
            } else if r < c3 {
                (1, 0)
            } else {
                (1, 1)
            };
            src = (src << 1) | row;
            dst = (dst << 1) | col;
        }
        edges.push((src as VertexId, dst as VertexId));
    }
    Ok(Graph::from_edges(num_vertices, &edges, None))
}

/// Layered synthetic graph: one root, then `depth` layers of `width`
/// vertices. Tree edges go root→layer 1 (all positions) and layer i position
/// j → layer i+1 position j, so a breadth-first traversal from the root
/// reaches exactly one new layer per step. Extra edges between vertices of
/// the same layer pad the average degree toward `target_degree` without
/// changing traversal depth. `width == 1` with `target_degree == 1` yields a
/// plain line graph.
pub fn generate_layered(
    width: u64,
    depth: u64,
    target_degree: u64,
    seed: u64,
) -> Result<Graph, GraphError> {
    assert!(width >= 1 && depth >= 1);
    let num_vertices = 1 + width * depth;
    let tree_edges = width * depth;
    // Degree target counted over the layered vertices; the root only ever
    // carries its tree edges.
    let target_total = target_degree * width * depth;
    if target_total < tree_edges {
        return Err(GraphError::TargetDegreeTooLow {
            target: target_degree,
            tree: tree_edges,
            vertices: num_vertices,
        });
    }
    let vertex_at = |layer: u64, pos: u64| -> VertexId { (1 + (layer - 1) * width + pos) as VertexId };

    let mut edges = Vec::with_capacity(target_total as usize);
    for pos in 0..width {
        edges.push((0, vertex_at(1, pos)));
    }
    for layer in 1..depth {
        for pos in 0..width {
            edges.push((vertex_at(layer, pos), vertex_at(layer + 1, pos)));
        }
    }

    // Same-layer padding. Layers with a single vertex cannot host any
    // (self-loops would alter the traversal schedule), so those quotas are
    // dropped and the result may fall short of the target.
    let mut extra = target_total - tree_edges;
    if width > 1 {
        let mut rng = SplitMix64::new(seed);
        let per_layer = extra / depth;
        let remainder = extra % depth;
        for layer in 1..=depth {
            let quota = per_layer + u64::from(layer <= remainder);
            for _ in 0..quota {
                let a = rng.next_below(width);
                let mut b = rng.next_below(width - 1);
                if b >= a {
                    b += 1;
                }
                edges.push((vertex_at(layer, a), vertex_at(layer, b)));
            }
        }
        extra = 0;
    }
    let _ = extra;
    Ok(Graph::from_edges(num_vertices, &edges, None))
}
