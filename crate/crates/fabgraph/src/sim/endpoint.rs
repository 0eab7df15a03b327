//! Per-PE network endpoint: update counting, barrier collection, release,
//! and termination detection.
//!
//! The endpoint is pure protocol state, independent of simulation timing, so
//! it can be driven directly with reordered token sequences. Two channel
//! slots (round parity) let tokens of the next superstep arrive while the
//! current one is still collecting; a held token must be replayed by the
//! caller after the release that makes its round current.

use thiserror::Error;

/// What to do with a data token that just arrived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataDisposition {
    /// Token belongs to the current round: hand it to the PE pipeline.
    Deliver,
    /// Token belongs to the next round: buffer until the round is released.
    Hold,
}

/// Outcome of the round-completion check after a token arrival.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundCompletion {
    /// All barriers present, all counts matched: the barrier is released
    /// into the PE and the endpoint advances to the next round.
    ReleaseBarrier { round: u64 },
    /// Round complete and no PE sent any update: raise termination instead
    /// of passing the barrier on.
    SignalTermination { round: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProtocolViolation {
    #[error("token of round {round} arrived while round {current} is current")]
    RoundOutOfWindow { round: u64, current: u64 },
    #[error("duplicate barrier from PE {origin} for round {round}")]
    DuplicateBarrier { origin: u32, round: u64 },
    #[error("round {round}: received {received} updates from PE {sender}, barrier announced {expected}")]
    CountOverrun { round: u64, sender: u32, received: u64, expected: u64 },
    #[error("token arrived after termination (round {round})")]
    TokenAfterTermination { round: u64 },
    #[error("round {round} token of kind {kind} on a link serving round {current}")]
    ChannelOutOfWindow { round: u64, current: u64, kind: &'static str },
}

#[derive(Debug, Clone)]
struct ChannelSlot {
    barrier: Vec<Option<(u64, bool)>>,
    barriers_received: u32,
    received: Vec<u64>,
}

impl ChannelSlot {
    fn new(n_senders: u32) -> Self {
        ChannelSlot {
            barrier: vec![None; n_senders as usize],
            barriers_received: 0,
            received: vec![0; n_senders as usize],
        }
    }

    fn reset(&mut self) {
        self.barrier.fill(None);
        self.barriers_received = 0;
        self.received.fill(0);
    }
}

/// Protocol state of one PE's endpoint.
#[derive(Debug, Clone)]
pub struct EndpointState {
    n_senders: u32,
    current_round: u64,
    slots: [ChannelSlot; 2],
    terminated: Option<u64>,
}

impl EndpointState {
    pub fn new(n_senders: u32) -> Self {
        EndpointState {
            n_senders,
            current_round: 0,
            slots: [ChannelSlot::new(n_senders), ChannelSlot::new(n_senders)],
            terminated: None,
        }
    }

    pub fn current_round(&self) -> u64 {
        self.current_round
    }

    pub fn terminated_round(&self) -> Option<u64> {
        self.terminated
    }

    fn window_check(&self, round: u64) -> Result<(), ProtocolViolation> {
        if let Some(r) = self.terminated {
            return Err(ProtocolViolation::TokenAfterTermination { round: r });
        }
        if round != self.current_round && round != self.current_round + 1 {
            return Err(ProtocolViolation::RoundOutOfWindow {
                round,
                current: self.current_round,
            });
        }
        Ok(())
    }

    /// Counts one incoming data token (update, or message in unicast mode)
    /// from a vertex hosted on `sender_pe`.
    pub fn on_data(
        &mut self,
        sender_pe: u32,
        round: u64,
    ) -> Result<(DataDisposition, Option<RoundCompletion>), ProtocolViolation> {
        self.window_check(round)?;
        let slot = &mut self.slots[(round & 1) as usize];
        slot.received[sender_pe as usize] += 1;
        if let Some((expected, _)) = slot.barrier[sender_pe as usize] {
            if slot.received[sender_pe as usize] > expected {
                return Err(ProtocolViolation::CountOverrun {
                    round,
                    sender: sender_pe,
                    received: slot.received[sender_pe as usize],
                    expected,
                });
            }
        }
        if round == self.current_round {
            let completion = self.try_complete()?;
            Ok((DataDisposition::Deliver, completion))
        } else {
            Ok((DataDisposition::Hold, None))
        }
    }

    /// Records the barrier from `origin_pe`. `expected` is the number of
    /// data tokens that PE addressed to us this round; `any_updates` says
    /// whether it emitted any updates at all.
    pub fn on_barrier(
        &mut self,
        origin_pe: u32,
        round: u64,
        expected: u64,
        any_updates: bool,
    ) -> Result<Option<RoundCompletion>, ProtocolViolation> {
        self.window_check(round)?;
        let slot = &mut self.slots[(round & 1) as usize];
        if slot.barrier[origin_pe as usize].is_some() {
            return Err(ProtocolViolation::DuplicateBarrier { origin: origin_pe, round });
        }
        if slot.received[origin_pe as usize] > expected {
            return Err(ProtocolViolation::CountOverrun {
                round,
                sender: origin_pe,
                received: slot.received[origin_pe as usize],
                expected,
            });
        }
        slot.barrier[origin_pe as usize] = Some((expected, any_updates));
        slot.barriers_received += 1;
        if round == self.current_round {
            self.try_complete()
        } else {
            Ok(None)
        }
    }

    /// Re-checks the current round. Needed after a release when the next
    /// round's tokens all arrived early (legal on networks that reorder).
    pub fn poll_completion(&mut self) -> Result<Option<RoundCompletion>, ProtocolViolation> {
        if self.terminated.is_some() {
            return Ok(None);
        }
        self.try_complete()
    }

    fn try_complete(&mut self) -> Result<Option<RoundCompletion>, ProtocolViolation> {
        let round = self.current_round;
        let slot = &self.slots[(round & 1) as usize];
        if slot.barriers_received < self.n_senders {
            return Ok(None);
        }
        let mut all_quiet = true;
        for sender in 0..self.n_senders as usize {
            let (expected, any) = slot.barrier[sender].expect("all barriers present");
            if slot.received[sender] != expected {
                return Ok(None);
            }
            all_quiet &= !any;
        }
        if all_quiet {
            self.terminated = Some(round);
            return Ok(Some(RoundCompletion::SignalTermination { round }));
        }
        self.slots[(round & 1) as usize].reset();
        self.current_round = round + 1;
        Ok(Some(RoundCompletion::ReleaseBarrier { round }))
    }
}
