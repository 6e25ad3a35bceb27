//! Verification harness: per-graph reports, a parallel runner and the
//! reproduction suites.

mod report;
mod runner;
mod suites;

pub use report::{
    is_cycle, EqualityClassification, ReportFormat, ReportWriter, Status, VerificationReport, CSV_HEADER,
};
pub use runner::{run, Job, Summary};
pub use suites::{
    cactus_population, cactus_suite, check_theorems, cycle_suite, enclosure_suite, internal_triple_suite,
    pruning_suite, random_connected, theta_row, theta_scan, theta_suite, three_connected_suite, tree_suite,
    EnclosureStats, SuiteOutcome, TheoremConfig, ThetaRow,
};
