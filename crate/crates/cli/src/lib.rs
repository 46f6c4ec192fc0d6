//! JSON front end for `ratcurve`.
//!
//! A job is `{"command": ..., "field": "Q" | "Fp:<p>", "payload": {...},
//! "seed": n}`; a batch is an array of jobs. Each job produces one compact
//! JSON value, and batches produce an array in input order.

pub mod jobs;
pub mod selfcheck;
pub mod wire;

pub use jobs::{run_document, run_job, Defaults, Failure, Outcome};
