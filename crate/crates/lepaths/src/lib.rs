//! Lattice-path machinery for log-concavity of linear-extension statistics.
//!
//! A poset of width two with a fixed chain partition `(C1, C2)` corresponds to
//! a staircase region of the grid: its linear extensions are exactly the
//! North–East lattice paths inside the region.  This crate builds that
//! dictionary and uses it, together with brute-force enumeration as an
//! independent oracle, to compute and check
//!
//! * the position statistic `N(k)` and the gap statistic `F(k)`, their
//!   `q`-analogues weighted by `wgt(L) = sum_i L(alpha_i)` and multivariate
//!   refinements ([`stats`]);
//! * path counts `K_q(A, B)`, the tail-swapping injection behind the
//!   two-pairs inequality, the criss-cross comparison and the level
//!   decomposition of `F_q(k)^2 - F_q(k-1) F_q(k+1)` ([`paths`]);
//! * equality and vanishing conditions, the promotion-like maps that
//!   construct extensions with prescribed gaps, and a scan harness for the
//!   open equality characterisation on general posets ([`equality`]).
//!
//! Element ids are 0-based (`0..n`); ranks of linear extensions and positions
//! within chains are 1-based, as in the mathematics.

pub mod equality;
pub mod error;
pub mod paths;
pub mod poly;
pub mod poset;
pub mod region;
pub mod stats;

pub use error::{Error, Result};
pub use poly::{MultiPoly, MultiZPoly, QPoly, ZPoly};
pub use poset::{width2_partition, Chain, ChainPartition, LinearExtension, Poset};
pub use region::{GridPoint, NEPath, Region, Step};
