//! Explicit formula: zero side, pole term, archimedean term, prime term.

mod pair;
mod report;
mod terms;

pub use pair::{check_pair, make_pair, pair_names, CosineBump, KernelPair, PairArgs, TestFunctionPair, ZeroPair};
pub use report::{
    general_explicit_formula, shifted_explicit_formula, sweep, to_csv, to_text, ExplicitFormulaReport, CSV_HEADER,
};
pub use terms::{
    arch_term, arch_term_difference, arch_term_with, arch_weight, pole_term, pole_term_with, prime_term, prime_term_with, PoleTerm, Term,
};
