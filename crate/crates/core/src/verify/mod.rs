//! Parameter schedule and numerical checks of the lemmas' statements.

mod checks;
mod estimates;
mod schedule;

pub use checks::{check_names, registry, select, Check, CheckContext, CheckOutcome};
pub use estimates::{
    e_mu, g_lower_bound_check, lemma_one_check, lemma_two_check, mean_square_check, oscillatory_arch_integral,
    tail_integral_check, thin_set_density_check, GLowerBound, LemmaOneReport, LemmaTwo, MeanSquare, TailIntegral,
};
pub use schedule::{rho, schedule, ParamSchedule};
