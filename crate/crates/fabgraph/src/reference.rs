//! Synchronous software references for the built-in algorithms. These never
//! touch the simulation engine; they exist to check its results.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::kernel::BfsState;
use crate::VertexId;

/// Level of every vertex reachable from `root` by plain queue BFS.
pub fn bfs_levels(graph: &Graph, root: VertexId) -> Vec<Option<u64>> {
    let mut levels = vec![None; graph.num_vertices() as usize];
    levels[root as usize] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let next = levels[v as usize].unwrap() + 1;
        for &u in graph.neighbors(v) {
            if levels[u as usize].is_none() {
                levels[u as usize] = Some(next);
                queue.push_back(u);
            }
        }
    }
    levels
}

/// Fixed point of synchronous minimum-label propagation along directed
/// edges: the label of `v` ends as the smallest id among `v` and the
/// vertices that can reach `v`. On a symmetric graph this is the weak
/// component minimum.
pub fn wcc_fixpoint_labels(graph: &Graph) -> Vec<VertexId> {
    let n = graph.num_vertices() as usize;
    let mut labels: Vec<VertexId> = (0..n as u32).collect();
    loop {
        let mut changed = false;
        let mut next = labels.clone();
        for v in 0..n {
            let lv = labels[v];
            for &u in graph.neighbors(v as VertexId) {
                if lv < next[u as usize] {
                    next[u as usize] = lv;
                    changed = true;
                }
            }
        }
        labels = next;
        if !changed {
            return labels;
        }
    }
}

/// Synchronous power iteration with uniform start and damped redistribution,
/// run for `iterations` rounds. Matches the message-passing formulation on
/// graphs whose every vertex has at least one outgoing edge.
pub fn pagerank_power(graph: &Graph, damping: f64, iterations: u64) -> Vec<f64> {
    let n = graph.num_vertices() as usize;
    let mut rank = vec![1.0 / n as f64; n];
    for _ in 0..iterations {
        let mut accum = vec![0.0f64; n];
        for v in 0..n {
            let nbrs = graph.neighbors(v as VertexId);
            if nbrs.is_empty() {
                continue;
            }
            let share = rank[v] / nbrs.len() as f64;
            for &u in nbrs {
                accum[u as usize] += share;
            }
        }
        for v in 0..n {
            rank[v] = (1.0 - damping) / n as f64 + damping * accum[v];
        }
    }
    rank
}

/// Checks that simulated BFS states form a valid traversal tree rooted at
/// `root` whose levels equal the reference: every visited non-root vertex
/// has a visited parent one level closer to the root with an actual edge to
/// it, the root is its own parent, and visitation matches reachability.
pub fn check_bfs_tree(graph: &Graph, root: VertexId, states: &[BfsState]) -> Result<(), String> {
    let levels = bfs_levels(graph, root);
    for (v, state) in states.iter().enumerate() {
        let v = v as VertexId;
        match levels[v as usize] {
            None => {
                if state.visited {
                    return Err(format!("vertex {v} is unreachable but was visited"));
                }
            }
            Some(level) => {
                if !state.visited {
                    return Err(format!("vertex {v} is reachable but was not visited"));
                }
                if v == root {
                    if state.parent != root {
                        return Err(format!("root parent is {}", state.parent));
                    }
                    continue;
                }
                let p = state.parent;
                if !states[p as usize].visited {
                    return Err(format!("vertex {v} has unvisited parent {p}"));
                }
                let p_level = levels[p as usize].unwrap();
                if p_level + 1 != level {
                    return Err(format!(
                        "vertex {v} at level {level} has parent {p} at level {p_level}"
                    ));
                }
                if !graph.neighbors(p).contains(&v) {
                    return Err(format!("no edge from parent {p} to vertex {v}"));
                }
            }
        }
    }
    Ok(())
}
