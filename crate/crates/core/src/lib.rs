//! Numerical laboratory for the algebra linking deterministic cyclic systems
//! to the quantum harmonic oscillator.
//!
//! - [`algebra`]: su(2), su(1,1) D⁺ₖ and h(1) ladder representations.
//! - [`contraction`]: scaled ladders, l → ∞ / k → ∞ contraction studies,
//!   the Holstein–Primakoff map and the deformed su(2) identities.
//! - [`evolution`]: the cyclic evolution operator, its DFT spectrum and
//!   period phase.
//! - [`orbits`]: circle and torus orbits with touch-point and density metrics.
//! - [`schwinger`]: the two-mode realization, Casimir sectors and the
//!   dissipative Hamiltonian.
//! - [`cli`]: the `oscillab` command-line front end.

pub mod algebra;
pub mod cli;
pub mod contraction;
pub mod error;
pub mod evolution;
pub mod half;
pub mod operator;
pub mod orbits;
pub mod schwinger;

pub use algebra::{AlgebraKind, LadderRep};
pub use error::{Error, Result};
pub use half::HalfInt;
pub use operator::{OperatorMatrix, Spectrum};
