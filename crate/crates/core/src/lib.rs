//! Exact combinatorics for higher granular operator spaces.
//!
//! * [`order`]: finite posets and bounded lattices.
//! * [`space`]: rough and granular operator spaces, axiom reports,
//!   crisp/rough classification and representation maps.
//! * [`numeric`]: exact rationals and big counts.
//! * [`chain`]: feasibility and model counting when crisp objects form a chain.
//! * [`distribution`]: the general poset regime (scopes, choice counts,
//!   chain-cover plans).
//! * [`oracle`]: brute-force reference implementations.

pub mod order;
pub mod numeric;
pub mod space;
pub mod chain;
pub mod distribution;
pub mod oracle;
