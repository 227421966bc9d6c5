//! Discrete-time cyclic evolution `U = e^{-iπ/N} P` on `N` states, where `P`
//! shifts `|ν⟩ → |ν+1 mod N⟩`.
//!
//! `U` is circulant, so the DFT of its first column gives its eigenvalues
//! `e^{-iπ(2n+1)/N}`; with `U = e^{-iHτ}` these are the levels
//! `E_n = (n + 1/2) ω`, `ω = 2π/(Nτ)`. After one period `U^N = -I`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::operator::{OperatorMatrix, Spectrum, C64, EXACT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionParams {
    n_states: usize,
    tau: f64,
}

impl EvolutionParams {
    pub fn new(n_states: usize, tau: f64) -> Result<Self> {
        if n_states < 2 {
            return Err(Error::InvalidParameter(format!(
                "number of states must be >= 2, got {n_states}"
            )));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "tau must be positive, got {tau}"
            )));
        }
        Ok(Self { n_states, tau })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// `ω = 2π/(Nτ)`
    pub fn omega(&self) -> f64 {
        2.0 * PI / (self.n_states as f64 * self.tau)
    }

    /// `e^{-iπ/N}`
    pub fn phase(&self) -> C64 {
        C64::from_polar(1.0, -PI / self.n_states as f64)
    }
}

/// `U[(ν+1) mod N, ν] = e^{-iπ/N}`, zero elsewhere.
pub fn build_evolution_operator(p: &EvolutionParams) -> OperatorMatrix {
    let n = p.n_states;
    let phase = p.phase();
    let mut u = DMatrix::zeros(n, n);
    for nu in 0..n {
        u[((nu + 1) % n, nu)] = phase;
    }
    OperatorMatrix::from_parts("U", u)
}

/// The bare shift `P` without the phase factor.
pub fn build_shift_operator(n_states: usize) -> Result<OperatorMatrix> {
    let p = EvolutionParams::new(n_states, 1.0)?;
    Ok(build_evolution_operator(&p)
        .scale(p.phase().conj())
        .with_label("P"))
}

/// Eigenvalues of a circulant matrix: the forward DFT of its first column.
/// Fails if `op` is not circulant.
pub fn circulant_eigenvalues(op: &OperatorMatrix) -> Result<Vec<C64>> {
    let n = op.dim();
    let column: Vec<C64> = (0..n).map(|r| op.get(r, 0)).collect();
    for c in 0..n {
        for r in 0..n {
            let expect = column[(r + n - c) % n];
            let residual = (op.get(r, c) - expect).norm();
            if residual > EXACT_TOLERANCE {
                return Err(Error::ToleranceBreach {
                    check: "circulant structure".into(),
                    residual,
                    tolerance: EXACT_TOLERANCE,
                });
            }
        }
    }
    let mut buffer = column;
    FftPlanner::new().plan_fft_forward(n).process(&mut buffer);
    Ok(buffer)
}

/// Maps an eigenvalue `λ = e^{-iπ(2n+1)/N}` of `U` to its level index `n`,
/// with `arg λ` taken in `(-2π, 0]`.
pub fn eigenphase_level(lambda: C64, n_states: usize) -> usize {
    let mut arg = lambda.arg();
    if arg > 0.0 {
        arg -= 2.0 * PI;
    }
    let level = ((-arg * n_states as f64 / PI - 1.0) / 2.0).round();
    level.max(0.0) as usize
}

/// Energies `E_n` of `H` from the DFT diagonalization of `U`, ascending.
pub fn spectrum_via_dft(p: &EvolutionParams) -> Result<Spectrum> {
    let u = build_evolution_operator(p);
    let eigenvalues = circulant_eigenvalues(&u)?;
    let n = p.n_states;
    let mut energies = vec![None; n];
    for lambda in eigenvalues {
        let level = eigenphase_level(lambda, n);
        if level >= n || energies[level].is_some() {
            return Err(Error::PhaseCollision(level));
        }
        let mut arg = lambda.arg();
        if arg > 0.0 {
            arg -= 2.0 * PI;
        }
        // λ = e^{-iEτ}
        energies[level] = Some(-arg / p.tau);
    }
    let energies: Vec<f64> = energies
        .into_iter()
        .enumerate()
        .map(|(level, e)| e.ok_or(Error::PhaseCollision(level)))
        .collect::<Result<_>>()?;
    Ok(Spectrum::from_real(energies))
}

/// The scalar `φ` with `U^N = φ I`.
pub fn geometric_phase_check(p: &EvolutionParams) -> Result<C64> {
    let u = build_evolution_operator(p);
    let full = u.power(p.n_states as u32);
    let phi = full.get(0, 0);
    let residual = full
        .sub(&OperatorMatrix::identity(p.n_states).scale(phi))?
        .max_abs();
    if residual > EXACT_TOLERANCE {
        return Err(Error::ToleranceBreach {
            check: "U^N proportional to identity".into(),
            residual,
            tolerance: EXACT_TOLERANCE,
        });
    }
    Ok(phi)
}
