//! Reducing a front to a few candidates and folding the user's choice back
//! into the problem as objective bounds.

mod reduce;
mod session;
mod store;
mod tradeoff;

pub use reduce::{auto_pick, reduce_front, ReducedCandidate, DEFAULT_REDUCTION_K};
pub use session::{
    PendingRound, Round, RoundCandidate, RoundOverrides, Session, SessionSettings, DEFAULT_TAU,
};
pub use store::SessionStore;
pub use tradeoff::{tradeoff_mu, tradeoff_scores, TradeoffScore};
