//! Exact-arithmetic number theory around Bernoulli numbers, harmonic and
//! power sums, Stirling numbers of the first kind on a prime number of
//! letters, multiple harmonic sums, Bernoulli convolutions, and p-adic root
//! lifting — together with a registry-driven verifier that checks dozens of
//! prime-power congruences relating them at their exact stated moduli.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals in,
//! canonical residues out. There is no floating point anywhere.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactnum`]: primality, modular reduction, p-adic valuations/digits.
//! - [`bernoulli`]: the shared Bernoulli table and derived quotients.
//! - [`sums`]: power sums, harmonic power sums, Fermat/Wilson quotients.
//! - [`stirling`]: exact first-kind Stirling rows and their mod `p^3` forms.
//! - [`mhs`]: multiple harmonic sums `A*_k` and their closed residues.
//! - [`convolutions`]: Bernoulli convolution sums and exact identities.
//! - [`padic_roots`]: roots of `X^{p-1} + (p-1)!` in `Z/p^3`.
//! - [`search`]: Wilson-prime, Kummer-pair and irregular-pair scans.
//! - [`verifier`]: the check registry and the parallel runner.

pub mod bernoulli;
pub mod convolutions;
pub mod error;
pub mod exactnum;
pub mod mhs;
pub mod padic_roots;
pub mod search;
pub mod stirling;
pub mod sums;
pub mod verifier;

pub use error::{Error, Result};
pub use exactnum::{Int, PadicDigit, PrimeModulus, Rational, Residue};
pub use mhs::MhsRow;
pub use padic_roots::RootSet;
pub use search::SearchRecord;
pub use stirling::StirlingRow;
pub use sums::DeltaPair;
pub use verifier::{CheckOutcome, CheckSpec, Status};
