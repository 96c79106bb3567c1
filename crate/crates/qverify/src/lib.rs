//! Identity-verification harness: a catalog of q-series identities keyed by
//! stable IDs, batch verification with structured reports, series printing,
//! and golden-file regression.

pub mod catalog;
pub mod checks;
pub mod golden;
pub mod instance;
pub mod report;
pub mod rng;
pub mod runner;
pub mod seriescmd;

pub use instance::{IdentityInstance, Mode};
pub use report::{Report, Summary, Verdict};
pub use runner::{run_all, run_check};
