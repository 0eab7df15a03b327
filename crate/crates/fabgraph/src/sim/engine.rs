//! The discrete-event core.
//!
//! Heap events exist only for tokens moving through the network (crossbar
//! arbitration, link transmission, endpoint delivery). Everything inside a
//! PE — scatter expansion, gather, the apply phase — is computed eagerly
//! when its trigger is processed, using monotone per-resource "free at"
//! clocks. That works because a PE's pipeline has a single producer in front
//! of each stage, so arrival order at the endpoint fixes all intra-PE
//! ordering, and the barrier release condition (all counted tokens arrived)
//! guarantees the eager state updates land before the apply that reads
//! them.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::graph::Graph;
use crate::kernel::Kernel;
use crate::partition::{
    build_filter_bitmap, build_pe_edge_sublists, NeighborFilterBitmap, PeEdgeSublists,
    PlacementMap,
};
use crate::rng::mix;
use crate::VertexId;

use super::endpoint::{DataDisposition, EndpointState, ProtocolViolation, RoundCompletion};
use super::report::{compute_teps, digest_words, RunReport, SuperstepRow, REPORT_SCHEMA_VERSION};
use super::{DeliveryMode, SimConfig, SimError, SimOutcome};

/// On-wire bits of a barrier token: two PE ids (16 each), the update count
/// (32), the activity flag, and the round bit.
pub const BARRIER_WIRE_BITS: u64 = 66;

#[derive(Debug)]
enum Token<K: Kernel> {
    Update { sender: VertexId, round: u64, payload: K::Update },
    Message { sender: VertexId, dest: VertexId, round: u64, payload: K::Message },
    Barrier { origin_pe: u32, dest_pe: u32, round: u64, expected: u64, any_updates: bool },
}

// Derived `Clone` would demand `K: Clone`; only the payloads need it.
impl<K: Kernel> Clone for Token<K> {
    fn clone(&self) -> Self {
        match self {
            Token::Update { sender, round, payload } => {
                Token::Update { sender: *sender, round: *round, payload: payload.clone() }
            }
            Token::Message { sender, dest, round, payload } => Token::Message {
                sender: *sender,
                dest: *dest,
                round: *round,
                payload: payload.clone(),
            },
            Token::Barrier { origin_pe, dest_pe, round, expected, any_updates } => {
                Token::Barrier {
                    origin_pe: *origin_pe,
                    dest_pe: *dest_pe,
                    round: *round,
                    expected: *expected,
                    any_updates: *any_updates,
                }
            }
        }
    }
}

impl<K: Kernel> Token<K> {
    fn round(&self) -> u64 {
        match self {
            Token::Update { round, .. }
            | Token::Message { round, .. }
            | Token::Barrier { round, .. } => *round,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Token::Update { .. } => "update",
            Token::Message { .. } => "message",
            Token::Barrier { .. } => "barrier",
        }
    }
}

#[derive(Debug)]
enum Action<K: Kernel> {
    XbarArrive { fpga: u32, token: Token<K> },
    LinkEgress { from: u32, to: u32, token: Token<K> },
    Deliver { pe: u32, token: Token<K> },
}

struct Event<K: Kernel> {
    time: u64,
    key: u64,
    seq: u64,
    action: Action<K>,
}

impl<K: Kernel> PartialEq for Event<K> {
    fn eq(&self, other: &Self) -> bool {
        (self.time, self.key, self.seq) == (other.time, other.key, other.seq)
    }
}
impl<K: Kernel> Eq for Event<K> {}
impl<K: Kernel> PartialOrd for Event<K> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<K: Kernel> Ord for Event<K> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.time, self.key, self.seq).cmp(&(other.time, other.key, other.seq))
    }
}

struct PeRuntime<K: Kernel> {
    vertices: Vec<VertexId>,
    capacity: u64,
    scatter_free: u64,
    gather_free: u64,
    mem_inflight: VecDeque<u64>,
    endpoint: EndpointState,
    held: VecDeque<(u64, Token<K>)>,
    sent_counts: Vec<u64>,
    emitted_this_round: u64,
    egress_tail: u64,
}

struct LinkState<K: Kernel> {
    free_at: u64,
    current_round: u64,
    barriers_sent: u32,
    pending: VecDeque<(u64, Token<K>)>,
}

#[derive(Debug, Clone, Copy)]
struct RoundStats {
    updates: u64,
    messages: u64,
    payload_bits: u64,
    apply_start_min: u64,
}

impl Default for RoundStats {
    fn default() -> Self {
        RoundStats { updates: 0, messages: 0, payload_bits: 0, apply_start_min: u64::MAX }
    }
}

pub(super) struct Engine<'a, K: Kernel> {
    graph: &'a Graph,
    placement: &'a PlacementMap,
    kernel: &'a K,
    cfg: &'a SimConfig,
    sublists: PeEdgeSublists,
    filter: NeighborFilterBitmap,
    num_vertices: u64,
    n_fpga: u32,
    n_pe: u32,
    n_pes: u32,
    states: Vec<K::State>,
    last_write: Vec<u64>,
    pes: Vec<PeRuntime<K>>,
    links: Vec<LinkState<K>>,
    xbar_free: Vec<u64>,
    events: BinaryHeap<Reverse<Event<K>>>,
    seq: u64,
    end_time: u64,
    rounds: Vec<RoundStats>,
    updates_emitted: u64,
    messages_generated: u64,
    expected_messages: u64,
    inter_payload_bits: u64,
    inter_wire_bits: u64,
    inter_data_tokens: u64,
    inter_barrier_tokens: u64,
    pe_busy: u64,
    error: Option<SimError>,
}

impl<'a, K: Kernel> Engine<'a, K> {
    pub(super) fn new(
        graph: &'a Graph,
        placement: &'a PlacementMap,
        kernel: &'a K,
        cfg: &'a SimConfig,
    ) -> Self {
        let n_fpga = cfg.n_fpga;
        let n_pe = cfg.n_pe_per_fpga;
        let n_pes = n_fpga * n_pe;
        let num_vertices = graph.num_vertices();
        let states =
            (0..num_vertices).map(|v| kernel.initial_state(v as VertexId, num_vertices)).collect();
        let pes = placement
            .vertices_by_pe()
            .into_iter()
            .map(|vertices| {
                let capacity =
                    cfg.update_queue_capacity.unwrap_or_else(|| (vertices.len() as u64).max(1));
                PeRuntime {
                    vertices,
                    capacity,
                    scatter_free: 0,
                    gather_free: 0,
                    mem_inflight: VecDeque::new(),
                    endpoint: EndpointState::new(n_pes),
                    held: VecDeque::new(),
                    sent_counts: vec![0; n_pes as usize],
                    emitted_this_round: 0,
                    egress_tail: 0,
                }
            })
            .collect();
        let links = (0..n_fpga * n_fpga)
            .map(|_| LinkState {
                free_at: 0,
                current_round: 0,
                barriers_sent: 0,
                pending: VecDeque::new(),
            })
            .collect();
        Engine {
            graph,
            placement,
            kernel,
            cfg,
            sublists: build_pe_edge_sublists(graph, placement),
            filter: build_filter_bitmap(graph, placement),
            num_vertices,
            n_fpga,
            n_pe,
            n_pes,
            states,
            last_write: vec![0; num_vertices as usize],
            pes,
            links,
            xbar_free: vec![0; n_fpga as usize],
            events: BinaryHeap::new(),
            seq: 0,
            end_time: 0,
            rounds: Vec::new(),
            updates_emitted: 0,
            messages_generated: 0,
            expected_messages: 0,
            inter_payload_bits: 0,
            inter_wire_bits: 0,
            inter_data_tokens: 0,
            inter_barrier_tokens: 0,
            pe_busy: 0,
            error: None,
        }
    }

    fn fpga_of_pe(&self, pe: u32) -> u32 {
        pe / self.n_pe
    }

    fn pes_on_fpga(&self, fpga: u32) -> std::ops::Range<u32> {
        fpga * self.n_pe..(fpga + 1) * self.n_pe
    }

    fn push(&mut self, time: u64, action: Action<K>) {
        self.seq += 1;
        let key = mix(self.cfg.rng_seed ^ self.seq);
        self.events.push(Reverse(Event { time, key, seq: self.seq, action }));
    }

    fn chase(&mut self, t: u64) {
        self.end_time = self.end_time.max(t);
    }

    fn fail(&mut self, err: SimError) {
        if self.error.is_none() {
            self.error = Some(err);
        }
    }

    fn ensure_round(&mut self, round: u64) {
        if self.rounds.len() as u64 <= round {
            self.rounds.resize(round as usize + 1, RoundStats::default());
        }
    }

    pub(super) fn run(mut self) -> Result<SimOutcome<K::State>, SimError> {
        // The initial barrier is injected straight into every apply module.
        for pe in 0..self.n_pes {
            self.start_apply(pe, 0, 0);
        }
        while let Some(Reverse(event)) = self.events.pop() {
            if self.error.is_some() {
                break;
            }
            match event.action {
                Action::XbarArrive { fpga, token } => self.xbar_arrive(fpga, event.time, token),
                Action::LinkEgress { from, to, token } => {
                    self.link_egress(from, to, event.time, token)
                }
                Action::Deliver { pe, token } => self.deliver(pe, event.time, token),
            }
        }
        if let Some(err) = self.error.take() {
            return Err(err);
        }
        self.finish()
    }

    // ----- apply phase ----------------------------------------------------

    fn start_apply(&mut self, pe: u32, round: u64, start: u64) {
        if round > self.cfg.max_supersteps {
            self.fail(SimError::MaxSupersteps { limit: self.cfg.max_supersteps });
            return;
        }
        self.ensure_round(round);
        let slot = &mut self.rounds[round as usize];
        slot.apply_start_min = slot.apply_start_min.min(start);

        let p = pe as usize;
        self.pes[p].egress_tail = 0;
        let vertices = std::mem::take(&mut self.pes[p].vertices);
        for (i, &v) in vertices.iter().enumerate() {
            let t_emit = start + i as u64;
            let state = self.states[v as usize].clone();
            let (next, update) = self.kernel.apply(state, round, v, self.num_vertices);
            self.states[v as usize] = next;
            if let Some(payload) = update {
                self.pes[p].emitted_this_round += 1;
                if self.pes[p].emitted_this_round > self.pes[p].capacity {
                    let err = SimError::CapacityViolation {
                        pe,
                        round,
                        emitted: self.pes[p].emitted_this_round,
                        capacity: self.pes[p].capacity,
                    };
                    self.fail(err);
                    break;
                }
                self.updates_emitted += 1;
                self.rounds[round as usize].updates += 1;
                self.expected_messages += self.graph.outdegree(v);
                match self.cfg.delivery_mode {
                    DeliveryMode::BroadcastUpdates => {
                        self.emit_update(pe, v, round, payload, t_emit)
                    }
                    DeliveryMode::UnicastMessages => {
                        self.expand_at_sender(pe, v, round, payload, t_emit)
                    }
                }
            }
        }
        let count = vertices.len() as u64;
        self.pes[p].vertices = vertices;
        if self.error.is_some() {
            return;
        }

        let finish = start + count;
        self.pe_busy += count;
        // The barrier exits strictly behind everything this PE put on the
        // network; a tie would let scheduler jitter serve the barrier first
        // and switch the link's channel under a same-round data token.
        let barrier_time = finish.max(self.pes[p].egress_tail);
        let any_updates = self.pes[p].emitted_this_round > 0;
        let my_fpga = self.fpga_of_pe(pe);
        for dest in 0..self.n_pes {
            let expected = self.pes[p].sent_counts[dest as usize];
            let token = Token::Barrier { origin_pe: pe, dest_pe: dest, round, expected, any_updates };
            let dest_fpga = self.fpga_of_pe(dest);
            if dest_fpga == my_fpga {
                self.push(barrier_time, Action::XbarArrive { fpga: my_fpga, token });
            } else {
                self.push(barrier_time, Action::LinkEgress { from: my_fpga, to: dest_fpga, token });
            }
        }
        self.pes[p].sent_counts.fill(0);
        self.pes[p].emitted_this_round = 0;
        // Apply owns the vertex memory until it finishes.
        self.pes[p].gather_free = self.pes[p].gather_free.max(finish);
        self.chase(barrier_time);
    }

    /// Broadcast mode: one crossbar insertion covers the local FPGA, one
    /// link token per remote FPGA that passes the neighbor filter.
    fn emit_update(&mut self, pe: u32, sender: VertexId, round: u64, payload: K::Update, t: u64) {
        let my_fpga = self.fpga_of_pe(pe);
        let token = Token::Update { sender, round, payload };
        for q in self.pes_on_fpga(my_fpga) {
            self.pes[pe as usize].sent_counts[q as usize] += 1;
        }
        for remote in 0..self.n_fpga {
            if remote == my_fpga {
                continue;
            }
            if self.cfg.filter_enabled && !self.filter.bit(sender, remote) {
                continue;
            }
            for q in self.pes_on_fpga(remote) {
                self.pes[pe as usize].sent_counts[q as usize] += 1;
            }
            self.push(t, Action::LinkEgress { from: my_fpga, to: remote, token: token.clone() });
        }
        self.push(t, Action::XbarArrive { fpga: my_fpga, token });
        let tail = self.pes[pe as usize].egress_tail.max(t + 1);
        self.pes[pe as usize].egress_tail = tail;
    }

    /// Unicast mode: the sender's scatter walks its full adjacency and each
    /// message is routed to its destination PE individually.
    fn expand_at_sender(
        &mut self,
        pe: u32,
        sender: VertexId,
        round: u64,
        payload: K::Update,
        t: u64,
    ) {
        let p = pe as usize;
        let my_fpga = self.fpga_of_pe(pe);
        let graph = self.graph;
        let outdeg = graph.outdegree(sender);
        let start = self.pes[p].scatter_free.max(t);
        self.pes[p].scatter_free = start + outdeg + 1;
        self.pe_busy += outdeg + 1;
        let weights = graph.edge_weights(sender);
        for (i, &dest) in graph.neighbors(sender).iter().enumerate() {
            let issue = start + 1 + i as u64;
            let avail = self.mem_fetch(p, issue);
            let weight = weights.map(|w| w[i]);
            let message = self.kernel.scatter(&payload, sender, dest, outdeg, weight);
            self.messages_generated += 1;
            self.rounds[round as usize].messages += 1;
            let dest_pe = self.placement.pe_of(dest);
            self.pes[p].sent_counts[dest_pe as usize] += 1;
            let token = Token::Message { sender, dest, round, payload: message };
            let dest_fpga = self.fpga_of_pe(dest_pe);
            if dest_fpga == my_fpga {
                self.push(avail, Action::XbarArrive { fpga: my_fpga, token });
            } else {
                self.push(avail, Action::LinkEgress { from: my_fpga, to: dest_fpga, token });
            }
            let tail = self.pes[p].egress_tail.max(avail + 1);
            self.pes[p].egress_tail = tail;
        }
        let free = self.pes[p].scatter_free;
        self.chase(free);
    }

    /// One outstanding-bounded memory fetch; returns data availability.
    fn mem_fetch(&mut self, p: usize, mut issue: u64) -> u64 {
        let latency = u64::from(self.cfg.scatter_memory_latency_cycles);
        let q = &mut self.pes[p].mem_inflight;
        while let Some(&head) = q.front() {
            if head <= issue {
                q.pop_front();
            } else {
                break;
            }
        }
        if q.len() >= self.cfg.scatter_max_outstanding as usize {
            issue = q.pop_front().expect("outstanding >= 1");
        }
        let done = issue + latency;
        q.push_back(done);
        done
    }

    // ----- network --------------------------------------------------------

    fn transmission_cycles(&self, token: &Token<K>) -> u64 {
        let bits = match token {
            Token::Update { .. } => self.kernel.spec().update_wire_bits(),
            Token::Message { .. } => self.kernel.spec().message_wire_bits(),
            Token::Barrier { .. } => BARRIER_WIRE_BITS,
        };
        bits.div_ceil(u64::from(self.cfg.link_bandwidth_bits_per_cycle)).max(1)
    }

    fn xbar_arrive(&mut self, fpga: u32, t: u64, token: Token<K>) {
        let f = fpga as usize;
        let serve = self.xbar_free[f].max(t);
        self.xbar_free[f] = serve + 1;
        let deliver = serve + u64::from(self.cfg.crossbar_latency_cycles);
        match token {
            Token::Update { .. } => {
                for q in self.pes_on_fpga(fpga) {
                    self.push(deliver, Action::Deliver { pe: q, token: token.clone() });
                }
            }
            Token::Message { dest, .. } => {
                let pe = self.placement.pe_of(dest);
                self.push(deliver, Action::Deliver { pe, token });
            }
            Token::Barrier { dest_pe, .. } => {
                self.push(deliver, Action::Deliver { pe: dest_pe, token });
            }
        }
    }

    fn link_egress(&mut self, from: u32, to: u32, t: u64, token: Token<K>) {
        let li = (from * self.n_fpga + to) as usize;
        let round = token.round();
        let current = self.links[li].current_round;
        if round == current + 1 {
            // Next virtual channel: wait until this FPGA finishes the round.
            self.links[li].pending.push_back((t, token));
            return;
        }
        if round != current {
            self.fail(SimError::Protocol(ProtocolViolation::ChannelOutOfWindow {
                round,
                current,
                kind: token.kind(),
            }));
            return;
        }
        self.link_serve(li, to, t, token);
    }

    fn link_serve(&mut self, li: usize, to: u32, t: u64, token: Token<K>) {
        let cycles = self.transmission_cycles(&token);
        let spec = self.kernel.spec();
        let (payload_bits, wire_bits, is_barrier) = match &token {
            Token::Update { .. } => (u64::from(spec.m_update), spec.update_wire_bits(), false),
            Token::Message { .. } => (u64::from(spec.m_message), spec.message_wire_bits(), false),
            Token::Barrier { .. } => (0, BARRIER_WIRE_BITS, true),
        };
        let round = token.round();
        let link = &mut self.links[li];
        let start = link.free_at.max(t);
        let finish = start + cycles;
        link.free_at = finish;
        let mut switched = false;
        if is_barrier {
            self.inter_barrier_tokens += 1;
            self.inter_wire_bits += wire_bits;
            link.barriers_sent += 1;
            if link.barriers_sent == self.n_pe * self.n_pe {
                link.barriers_sent = 0;
                link.current_round += 1;
                switched = true;
            }
        } else {
            self.inter_data_tokens += 1;
            self.inter_payload_bits += payload_bits;
            self.inter_wire_bits += wire_bits;
            self.ensure_round(round);
            self.rounds[round as usize].payload_bits += payload_bits;
        }
        let arrive = finish + u64::from(self.cfg.link_latency_cycles);
        self.push(arrive, Action::XbarArrive { fpga: to, token });
        self.chase(arrive);
        if switched {
            let pending = std::mem::take(&mut self.links[li].pending);
            for (ta, tok) in pending {
                self.link_serve(li, to, ta, tok);
            }
        }
    }

    // ----- endpoint and pipeline -------------------------------------------

    fn deliver(&mut self, pe: u32, t: u64, token: Token<K>) {
        let p = pe as usize;
        self.chase(t);
        match token {
            Token::Barrier { origin_pe, round, expected, any_updates, .. } => {
                match self.pes[p].endpoint.on_barrier(origin_pe, round, expected, any_updates) {
                    Err(violation) => self.fail(violation.into()),
                    Ok(Some(completion)) => self.handle_completion(pe, t, completion),
                    Ok(None) => {}
                }
            }
            data => {
                let sender_pe = match &data {
                    Token::Update { sender, .. } | Token::Message { sender, .. } => {
                        self.placement.pe_of(*sender)
                    }
                    Token::Barrier { .. } => unreachable!(),
                };
                match self.pes[p].endpoint.on_data(sender_pe, data.round()) {
                    Err(violation) => self.fail(violation.into()),
                    Ok((DataDisposition::Deliver, completion)) => {
                        self.pipeline_data(pe, t, data);
                        if let Some(c) = completion {
                            self.handle_completion(pe, t, c);
                        }
                    }
                    Ok((DataDisposition::Hold, _)) => {
                        self.pes[p].held.push_back((t, data));
                    }
                }
            }
        }
    }

    fn handle_completion(&mut self, pe: u32, t: u64, completion: RoundCompletion) {
        let p = pe as usize;
        let mut completion = Some(completion);
        while let Some(c) = completion.take() {
            match c {
                RoundCompletion::SignalTermination { .. } => return,
                RoundCompletion::ReleaseBarrier { round } => {
                    // The released barrier walks the pipeline behind the
                    // round's data, then the apply phase takes over.
                    let s_b = self.pes[p].scatter_free.max(t);
                    self.pes[p].scatter_free = s_b + 1;
                    let g_b = (s_b + 1).max(self.pes[p].gather_free);
                    self.pes[p].gather_free = g_b + 1;
                    self.pe_busy += 2;
                    self.start_apply(pe, round + 1, g_b + 1);
                    if self.error.is_some() {
                        return;
                    }
                    let held = std::mem::take(&mut self.pes[p].held);
                    for (ta, tok) in held {
                        debug_assert_eq!(tok.round(), round + 1);
                        self.pipeline_data(pe, ta, tok);
                    }
                    match self.pes[p].endpoint.poll_completion() {
                        Err(violation) => self.fail(violation.into()),
                        Ok(next) => completion = next,
                    }
                }
            }
        }
    }

    fn pipeline_data(&mut self, pe: u32, t: u64, token: Token<K>) {
        match token {
            Token::Update { sender, round, payload } => {
                self.pipeline_update(pe, t, sender, round, &payload)
            }
            Token::Message { sender, dest, round, payload } => {
                self.gather_message(pe, t, sender, dest, &payload, round)
            }
            Token::Barrier { .. } => unreachable!("barriers are handled by the endpoint"),
        }
    }

    /// Receiver-side scatter: expand one update over the local sublist and
    /// feed the resulting messages straight into this PE's gather.
    fn pipeline_update(&mut self, pe: u32, t: u64, sender: VertexId, round: u64, payload: &K::Update) {
        let p = pe as usize;
        let (lo, hi) = self.sublists.range(pe, sender);
        let count = (hi - lo) as u64;
        let outdeg = self.graph.outdegree(sender);
        let start = self.pes[p].scatter_free.max(t);
        // An empty sublist still costs the lookup slot, but issues no
        // memory request.
        self.pes[p].scatter_free = start + count + 1;
        self.pe_busy += count + 1;
        for (i, idx) in (lo..hi).enumerate() {
            let neighbor = self.sublists.neighbor_at(pe, idx);
            let weight = self.sublists.weight_at(pe, idx);
            let issue = start + 1 + i as u64;
            let avail = self.mem_fetch(p, issue);
            let message = self.kernel.scatter(payload, sender, neighbor, outdeg, weight);
            self.messages_generated += 1;
            self.ensure_round(round);
            self.rounds[round as usize].messages += 1;
            self.gather_message(pe, avail, sender, neighbor, &message, round);
        }
        let free = self.pes[p].scatter_free;
        self.chase(free);
    }

    fn gather_message(
        &mut self,
        pe: u32,
        avail: u64,
        sender: VertexId,
        dest: VertexId,
        message: &K::Message,
        _round: u64,
    ) {
        let p = pe as usize;
        debug_assert_eq!(self.placement.pe_of(dest), pe);
        let base = avail.max(self.pes[p].gather_free);
        let written = self.last_write[dest as usize];
        let ready = if written > 0 {
            base.max(written + u64::from(self.cfg.gather_hazard_depth_cycles))
        } else {
            base
        };
        let stall = ready - base;
        self.pes[p].gather_free = ready + 1;
        self.pe_busy += 1 + stall;
        let state = self.states[dest as usize].clone();
        self.states[dest as usize] = self.kernel.gather(state, sender, message);
        self.last_write[dest as usize] = ready + 1;
        self.chase(ready + 1);
    }

    // ----- wrap-up ---------------------------------------------------------

    fn finish(self) -> Result<SimOutcome<K::State>, SimError> {
        let mut termination = None;
        for (pe, rt) in self.pes.iter().enumerate() {
            let Some(round) = rt.endpoint.terminated_round() else {
                return Err(SimError::InvalidConfig(format!(
                    "internal: PE {pe} never terminated"
                )));
            };
            match termination {
                None => termination = Some(round),
                Some(r) if r == round => {}
                Some(r) => {
                    return Err(SimError::Protocol(ProtocolViolation::RoundOutOfWindow {
                        round,
                        current: r,
                    }));
                }
            }
        }
        let termination_round = termination.unwrap_or(0);
        debug_assert_eq!(
            self.messages_generated, self.expected_messages,
            "scatter fan-out must cover each sender's full outdegree"
        );

        let per_superstep: Vec<SuperstepRow> = self
            .rounds
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let start = if r.apply_start_min == u64::MAX { 0 } else { r.apply_start_min };
                let next = self
                    .rounds
                    .get(i + 1)
                    .map(|n| n.apply_start_min)
                    .filter(|&s| s != u64::MAX)
                    .unwrap_or(self.end_time);
                SuperstepRow {
                    superstep: i as u64,
                    updates: r.updates,
                    messages: r.messages,
                    inter_fpga_payload_bits: r.payload_bits,
                    start_cycle: start,
                    cycles: next.saturating_sub(start),
                }
            })
            .collect();
        let supersteps = per_superstep.iter().filter(|r| r.updates > 0).count() as u64;
        let digest = digest_words(self.states.iter().map(|s| self.kernel.state_word(s)));
        let teps = compute_teps(self.messages_generated, self.end_time, self.cfg.f_clk_hz);
        let report = RunReport {
            schema_version: REPORT_SCHEMA_VERSION,
            kernel: self.kernel.spec().name.clone(),
            delivery_mode: self.cfg.delivery_mode,
            filter_enabled: self.cfg.filter_enabled,
            n_fpga: self.n_fpga,
            n_pe_per_fpga: self.n_pe,
            num_vertices: self.num_vertices,
            num_edges: self.graph.num_edges(),
            supersteps,
            apply_phases: self.rounds.len() as u64,
            termination_round,
            updates_emitted: self.updates_emitted,
            messages_generated: self.messages_generated,
            inter_fpga_payload_bits: self.inter_payload_bits,
            inter_fpga_wire_bits: self.inter_wire_bits,
            inter_fpga_tokens: self.inter_data_tokens,
            inter_fpga_barrier_tokens: self.inter_barrier_tokens,
            simulated_cycles: self.end_time,
            wall_equivalent_seconds: self.end_time as f64 / self.cfg.f_clk_hz,
            teps,
            cpe_effective: if self.messages_generated == 0 {
                0.0
            } else {
                self.pe_busy as f64 / self.messages_generated as f64
            },
            state_digest: format!("{:016x}", digest),
            per_superstep,
        };
        Ok(SimOutcome { report, states: self.states })
    }
}
