//! Scaled ladders and the contraction of su(2) (l → ∞) and su(1,1) (k → ∞)
//! onto h(1), the Holstein–Primakoff map for D⁺₁⁄₂, and the deformed
//! position/momentum identities of the finite su(2) system.
//!
//! The contraction is measured at fixed basis state `n` while the
//! representation label grows; the deviation of `[a,a†]` from the identity
//! is exactly `n/l` (su(2)) or `n/k` (su(1,1)).

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::algebra::{build_su11_rep, build_su2_rep, cartesian_generators, AlgebraKind, LadderRep};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::operator::{commutator, max_abs_diff, OperatorMatrix, C64, I};

/// `a = L₋/√(2l)` and `a† = L₊/√(2l)` (or `√(2k)` for su(1,1)).
pub fn scaled_ladders(rep: &LadderRep) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let scale = match rep.kind() {
        AlgebraKind::Su2 { l } => f64::from(l.twice()).sqrt(),
        AlgebraKind::Su11 { k } => f64::from(k.twice()).sqrt(),
        AlgebraKind::Heisenberg => {
            return Err(Error::UnsupportedKind {
                op: "scaled_ladders",
                kind: rep.kind().to_string(),
            })
        }
    };
    let a = rep.lminus().scale_real(1.0 / scale).with_label("a");
    let adag = rep.lplus().scale_real(1.0 / scale).with_label("a†");
    Ok((a, adag))
}

/// `‖([a,a†] - 1)|n⟩‖` for the scaled ladders of `rep`.
///
/// `n` may reach the top state for su(2), whose irrep is exact; truncated
/// su(1,1) reps exclude their top state.
pub fn contraction_deviation(rep: &LadderRep, n: usize) -> Result<f64> {
    if n >= rep.max_interior() {
        return Err(Error::OutOfRange(format!(
            "state {n} outside interior of {} (dim {})",
            rep.kind(),
            rep.dim()
        )));
    }
    let (a, adag) = scaled_ladders(rep)?;
    let (a, adag) = (a.entries(), adag.entries());
    // ([a,a†] - 1)|n⟩ as two matrix-vector products
    let mut v = a * adag.column(n) - adag * a.column(n);
    v[n] -= C64::new(1.0, 0.0);
    Ok(v.norm())
}

/// `‖(½{a†,a} - (n+½))|n⟩‖`, the anticommutator counterpart.
pub fn anticommutator_deviation(rep: &LadderRep, n: usize) -> Result<f64> {
    if n >= rep.max_interior() {
        return Err(Error::OutOfRange(format!("state {n} outside interior")));
    }
    let (a, adag) = scaled_ladders(rep)?;
    let (a, adag) = (a.entries(), adag.entries());
    let mut v = (adag * a.column(n) + a * adag.column(n)) * C64::new(0.5, 0.0);
    v[n] -= C64::new(n as f64 + 0.5, 0.0);
    Ok(v.norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionFamily {
    Su2,
    Su11,
}

impl ContractionFamily {
    fn build(self, label: HalfInt, interior: usize) -> Result<LadderRep> {
        match self {
            ContractionFamily::Su2 => {
                let rep = build_su2_rep(label);
                if interior > rep.dim() {
                    return Err(Error::InvalidParameter(format!(
                        "interior {interior} exceeds su(2) dimension {} at l={label}",
                        rep.dim()
                    )));
                }
                Ok(rep)
            }
            // one extra row absorbs the truncation edge
            ContractionFamily::Su11 => build_su11_rep(label, interior + 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ContractionFamily::Su2 => "su2",
            ContractionFamily::Su11 => "su11",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationRow {
    pub param: HalfInt,
    pub n: usize,
    pub commutator: f64,
    pub anticommutator: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContractionReport {
    pub family: ContractionFamily,
    pub params: Vec<HalfInt>,
    pub interior: usize,
    pub fit_state: usize,
    /// Row-major over `(param, n)`, params outermost.
    pub deviations: Vec<DeviationRow>,
    pub fitted_slope: f64,
    /// RMS of the log-log fit residuals.
    pub fit_residual: f64,
}

impl ContractionReport {
    pub fn deviation(&self, param_index: usize, n: usize) -> f64 {
        self.deviations[param_index * self.interior + n].commutator
    }
}

/// Least-squares line through `(x, y)`; returns `(slope, intercept, rms)`.
pub fn fit_line(points: &[(f64, f64)]) -> Result<(f64, f64, f64)> {
    if points.len() < 3 {
        return Err(Error::InvalidParameter(format!(
            "rate fit needs at least 3 points, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("degenerate rate fit".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rms = (points
        .iter()
        .map(|p| (p.1 - slope * p.0 - intercept).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    Ok((slope, intercept, rms))
}

/// Sweeps the representation label and measures the commutator and
/// anticommutator deviations for `n = 0..interior`; the decay rate is a
/// log-log fit at `n = fit_state`.
pub fn run_contraction_study(
    family: ContractionFamily,
    params: &[HalfInt],
    interior: usize,
    fit_state: usize,
) -> Result<ContractionReport> {
    if params.is_empty() {
        return Err(Error::InvalidParameter("empty parameter sweep".into()));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "sweep parameters must be strictly ascending".into(),
        ));
    }
    if interior < 2 {
        return Err(Error::InvalidParameter("interior must be >= 2".into()));
    }
    if fit_state == 0 || fit_state >= interior {
        return Err(Error::InvalidParameter(format!(
            "fit state must lie in 1..{interior}, got {fit_state}"
        )));
    }

    let per_param: Vec<Vec<DeviationRow>> = params
        .par_iter()
        .map(|&param| -> Result<Vec<DeviationRow>> {
            let rep = family.build(param, interior)?;
            (0..interior)
                .map(|n| {
                    Ok(DeviationRow {
                        param,
                        n,
                        commutator: contraction_deviation(&rep, n)?,
                        anticommutator: anticommutator_deviation(&rep, n)?,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let deviations: Vec<DeviationRow> = per_param.into_iter().flatten().collect();

    let points: Vec<(f64, f64)> = deviations
        .iter()
        .filter(|row| row.n == fit_state)
        .map(|row| (row.param.value().ln(), row.commutator.ln()))
        .collect();
    let (fitted_slope, _, fit_residual) = fit_line(&points)?;

    Ok(ContractionReport {
        family,
        params: params.to_vec(),
        interior,
        fit_state,
        deviations,
        fitted_slope,
        fit_residual,
    })
}

/// `a = (L₃ + 1/2)^{-1/2} L₋`, `a† = L₊ (L₃ + 1/2)^{-1/2}` on D⁺₁⁄₂.
pub fn holstein_primakoff(rep: &LadderRep) -> Result<(OperatorMatrix, OperatorMatrix)> {
    match rep.kind() {
        AlgebraKind::Su11 { k } if k == HalfInt::ONE_HALF => {}
        other => {
            return Err(Error::UnsupportedKind {
                op: "holstein_primakoff (requires su(1,1) k=1/2)",
                kind: other.to_string(),
            })
        }
    }
    let shifted = rep.l3().shift(C64::new(0.5, 0.0));
    if let Some(bad) = shifted.diagonal_entries().iter().find(|z| z.re <= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "singular Holstein-Primakoff factor: L3 + 1/2 = {}",
            bad.re
        )));
    }
    let f = shifted.map_diagonal("f(L3)", |z| C64::new(1.0 / z.re.sqrt(), 0.0));
    let a = f.product(rep.lminus())?.with_label("a");
    let adag = rep.lplus().product(&f)?.with_label("a†");
    Ok((a, adag))
}

/// `α = √(τ/π)` and `β = -2/(2l+1)·√(π/τ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingPair {
    pub alpha: f64,
    pub beta: f64,
    pub tau: f64,
    pub l: HalfInt,
}

impl ScalingPair {
    pub fn new(l: HalfInt, tau: f64) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "tau must be positive, got {tau}"
            )));
        }
        let dim = f64::from(l.twice()) + 1.0;
        Ok(Self {
            alpha: (tau / PI).sqrt(),
            beta: -2.0 / dim * (PI / tau).sqrt(),
            tau,
            l,
        })
    }

    /// `ω = 2π/(Nτ)` with `N = 2l + 1`.
    pub fn omega(&self) -> f64 {
        2.0 * PI / ((f64::from(self.l.twice()) + 1.0) * self.tau)
    }
}

fn su2_label(rep: &LadderRep, op: &'static str) -> Result<HalfInt> {
    match rep.kind() {
        AlgebraKind::Su2 { l } => Ok(l),
        other => Err(Error::UnsupportedKind {
            op,
            kind: other.to_string(),
        }),
    }
}

/// `x̂ = α L₁`, `p̂ = β L₂`.
pub fn position_momentum(
    rep: &LadderRep,
    tau: f64,
) -> Result<(OperatorMatrix, OperatorMatrix, ScalingPair)> {
    let l = su2_label(rep, "position_momentum")?;
    let scaling = ScalingPair::new(l, tau)?;
    let (l1, l2) = cartesian_generators(rep)?;
    Ok((
        l1.scale_real(scaling.alpha).with_label("x"),
        l2.scale_real(scaling.beta).with_label("p"),
        scaling,
    ))
}

/// `H = ω(L₃ + l + 1/2)` on the su(2) rep, so that `H/ω|n⟩ = (n+1/2)|n⟩`.
pub fn su2_hamiltonian(rep: &LadderRep, tau: f64) -> Result<OperatorMatrix> {
    let l = su2_label(rep, "su2_hamiltonian")?;
    let omega = ScalingPair::new(l, tau)?.omega();
    Ok(rep
        .l3()
        .shift(C64::new(l.value() + 0.5, 0.0))
        .scale_real(omega)
        .with_label("H"))
}

/// `‖[x̂,p̂] - i(1 - (τ/π)H)‖`.
pub fn deformed_commutator_check(rep: &LadderRep, tau: f64) -> Result<f64> {
    let (x, p, _) = position_momentum(rep, tau)?;
    let h = su2_hamiltonian(rep, tau)?;
    let rhs = h.scale_real(-tau / PI).shift(C64::new(1.0, 0.0)).scale(I);
    max_abs_diff(&commutator(&x, &p)?, &rhs)
}

/// The pieces of `H = ½ω²x̂² + ½p̂² + (τ/2π)(ω²/4 + H²)`.
#[derive(Debug, Clone)]
pub struct HamiltonianParts {
    pub hamiltonian: OperatorMatrix,
    pub oscillator: OperatorMatrix,
    pub correction: OperatorMatrix,
}

pub fn hamiltonian_parts(rep: &LadderRep, tau: f64) -> Result<HamiltonianParts> {
    let (x, p, scaling) = position_momentum(rep, tau)?;
    let omega = scaling.omega();
    let h = su2_hamiltonian(rep, tau)?;
    let oscillator = x
        .product(&x)?
        .scale_real(0.5 * omega * omega)
        .add(&p.product(&p)?.scale_real(0.5))?
        .with_label("½ω²x²+½p²");
    let correction = h
        .product(&h)?
        .shift(C64::new(omega * omega / 4.0, 0.0))
        .scale_real(tau / (2.0 * PI))
        .with_label("(τ/2π)(ω²/4+H²)");
    Ok(HamiltonianParts {
        hamiltonian: h,
        oscillator,
        correction,
    })
}

/// `‖H - ½ω²x̂² - ½p̂² - (τ/2π)(ω²/4 + H²)‖`.
pub fn hamiltonian_identity_check(rep: &LadderRep, tau: f64) -> Result<f64> {
    let parts = hamiltonian_parts(rep, tau)?;
    max_abs_diff(
        &parts.hamiltonian,
        &parts.oscillator.add(&parts.correction)?,
    )
}
