//! Selberg-class data and Dirichlet-series arithmetic.

mod characters;
mod coeffs;
mod datum;
mod primes;
mod specfile;

pub use characters::DirichletCharacter;
pub use coeffs::{
    dirichlet_from_euler, envelope_a, local_exp, local_log, log_deriv_difference, prime_square_mean_sum,
    prime_square_relation_check, CoeffDifference, Condition, PrimeSquareRelation, TruncatedSeries,
};
pub use datum::{DatumBuilder, GammaFactor, SelbergDatum};
pub use primes::{is_prime, von_mangoldt_table, Sieve, VonMangoldtTable};
pub use specfile::{load_datum, parse_datum};
