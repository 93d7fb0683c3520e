//! Invariant reports and the table-verification harness.

mod invariants;
mod tables;

pub use invariants::{InvariantReport, CSV_HEADER};
pub use tables::{
    expected_rows, run_selector, run_suite, EpsilonFilter, ExpectedRow, Quantity, RowResult, VerificationSuite,
    VerifyOptions, SUITES,
};
