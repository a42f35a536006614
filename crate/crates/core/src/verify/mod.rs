//! Brute-force oracles, random instances, and property checks.

mod certificate;
mod checks;
mod oracle;
mod random;
mod suite;

pub use certificate::{InstanceDescription, ReductionCertificate, Witness};
pub use checks::{
    augmented_r12_optimum, check_collapse_ratio, check_collapse_ratio_exhaustive, check_cost_limits, check_gadget,
    check_gadget_repair, check_independent_set_bound, check_lreduction_gap, check_lreduction_gap_exhaustive,
    check_mis_equivalence, check_oracle_agreement, AGREEMENT_SCHEMES,
};
pub use oracle::{for_each_coloring, oracle_maxcut, oracle_mis, oracle_opt, SUBSET_LIMIT};
pub use random::{all_graphs, random_coloring, random_feasible_coloring, random_graph, RandomGraphSpec};
pub use suite::{run_suite, sample_graphs, Suite, SuiteConfig};
