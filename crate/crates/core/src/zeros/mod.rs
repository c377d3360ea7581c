//! Zero-ordinate tables, counting, symmetric differences, and smoothed sums.

mod counting;
mod diff;
mod list;
mod smoothed;

pub use counting::{counting_fit, CountFit, CountingLaw};
pub use diff::{symmetric_difference, ZeroDiff, DEFAULT_MATCH_TOL};
pub use list::{count_zeros, data_dir, load_fixture, load_zeros, load_zeros_auto, ZeroList};
pub use smoothed::{smoothed_zero_sum, zero_envelope, zero_sum_with, Decay, SmoothedSum};
