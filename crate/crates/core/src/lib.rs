//! Exact enumeration and statistics for simultaneous `(s,t)`-core partitions.
//!
//! Partitions and beta-sets live in [`partition`] and [`betaset`]; the
//! coordinate systems for `t`-cores are in [`coords`]. [`enumerate`] lists and
//! counts cores, [`stats`] computes exact size averages and cyclic-sum
//! identities, and [`oracle`] holds brute-force cross-checks.

pub mod betaset;
pub mod coords;
pub mod enumerate;
pub mod error;
pub mod modular;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod sample;
pub mod stats;
mod verify;

pub use betaset::{ATuple, BetaSet, CTuple};
pub use coords::{UTuple, ZTuple};
pub use enumerate::{CoreRecord, EnumOptions, Strategy, TripleMethod};
pub use error::{CoreError, Result};
pub use oracle::{VerifyConfig, VerifyReport};
pub use par::Execution;
pub use partition::Partition;
pub use stats::ExactRational;
