//! Deterministic orbits underlying the cyclic systems.
//!
//! The circle system follows `x(t) = cos(αt) cos(βt)`,
//! `y(t) = -cos(αt) sin(βt)`; it touches the unit circle at `t_j = jπ/α`
//! with polar angle `θ_j = j(1 - β/α)π`. With `β/α = (N-2)/N` the touch
//! points visit the `N` sites `2πj/N` once per period.
//!
//! The torus system rotates two angles by fixed increments per step; with an
//! irrational ratio the orbit never closes and fills each circle densely.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Shortest distance between two angles on the circle.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(a - b);
    d.min(TAU - d)
}

/// `β/α`, exact when rational. Floating point cannot decide irrationality,
/// so the tag is the caller's.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrequencyRatio {
    /// `num/den` in lowest terms with `0 < num < den`.
    Rational {
        num: u64,
        den: u64,
    },
    Irrational(f64),
}

impl FrequencyRatio {
    pub fn rational(num: u64, den: u64) -> Result<Self> {
        if num == 0 || num >= den {
            return Err(Error::InvalidParameter(format!(
                "rational ratio needs 0 < num < den, got {num}/{den}"
            )));
        }
        let g = gcd(num, den);
        Ok(FrequencyRatio::Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn irrational(value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "frequency ratio must be positive, got {value}"
            )));
        }
        Ok(FrequencyRatio::Irrational(value))
    }

    pub fn value(self) -> f64 {
        match self {
            FrequencyRatio::Rational { num, den } => num as f64 / den as f64,
            FrequencyRatio::Irrational(q) => q,
        }
    }

    /// Smallest `j > 0` with `j(1 - q)π ≡ 0 mod 2π`.
    pub fn period_steps(self) -> Option<u64> {
        match self {
            FrequencyRatio::Rational { num, den } => {
                let advance = den - num;
                Some(2 * den / gcd(advance, 2 * den))
            }
            FrequencyRatio::Irrational(_) => None,
        }
    }

    /// `θ_j = j(1 - q)π` in `[0, 2π)`, reduced in integer arithmetic when
    /// the ratio is rational.
    pub fn touch_angle(self, j: u64) -> f64 {
        match self {
            FrequencyRatio::Rational { num, den } => {
                let steps = (u128::from(j) * u128::from(den - num)) % u128::from(2 * den);
                steps as f64 * PI / den as f64
            }
            FrequencyRatio::Irrational(q) => {
                let turns = (j as f64 * (1.0 - q)).rem_euclid(2.0);
                wrap_angle(turns * PI)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleDynamics {
    pub alpha: f64,
    pub beta: f64,
    pub ratio: FrequencyRatio,
}

impl CircleDynamics {
    pub fn new(alpha: f64, ratio: FrequencyRatio) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        Ok(Self {
            alpha,
            beta: alpha * ratio.value(),
            ratio,
        })
    }
}

pub fn continuous_position(d: &CircleDynamics, t: f64) -> (f64, f64) {
    let envelope = (d.alpha * t).cos();
    let (s, c) = (d.beta * t).sin_cos();
    (envelope * c, -envelope * s)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TouchPoint {
    pub j: u64,
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitTrace {
    pub dynamics: CircleDynamics,
    pub points: Vec<TouchPoint>,
    pub period_steps: Option<u64>,
}

impl OrbitTrace {
    pub fn angles(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.theta).collect()
    }
}

/// Touch points `j = 1..=count`.
pub fn touch_points(d: &CircleDynamics, count: u64) -> Result<OrbitTrace> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "touch point count must be >= 1".into(),
        ));
    }
    let points = (1..=count)
        .map(|j| {
            let t = j as f64 * PI / d.alpha;
            let (x, y) = continuous_position(d, t);
            TouchPoint {
                j,
                t,
                x,
                y,
                theta: d.ratio.touch_angle(j),
            }
        })
        .collect();
    Ok(OrbitTrace {
        dynamics: *d,
        points,
        period_steps: d.ratio.period_steps(),
    })
}

/// The `N`-site system: `β/α = (N-2)/N`, `α = 1`.
pub fn thooft_system(n_sites: u64) -> Result<CircleDynamics> {
    if n_sites < 3 {
        return Err(Error::InvalidParameter(format!(
            "number of sites must be >= 3, got {n_sites}"
        )));
    }
    CircleDynamics::new(1.0, FrequencyRatio::rational(n_sites - 2, n_sites)?)
}

/// `(x(t), y(t))` sampled uniformly on `[0, t_end]`.
pub fn sample_curve(d: &CircleDynamics, t_end: f64, samples: usize) -> Vec<(f64, f64, f64)> {
    if samples == 0 {
        return Vec::new();
    }
    let step = if samples > 1 {
        t_end / (samples - 1) as f64
    } else {
        0.0
    };
    (0..samples)
        .map(|i| {
            let t = i as f64 * step;
            let (x, y) = continuous_position(d, t);
            (t, x, y)
        })
        .collect()
}

/// Smallest circular separation between any two angles.
pub fn min_separation(angles: &[f64]) -> f64 {
    if angles.len() < 2 {
        return TAU;
    }
    let mut sorted: Vec<f64> = angles.iter().map(|&a| wrap_angle(a)).collect();
    sorted.sort_by(f64::total_cmp);
    let wrap = sorted[0] + TAU - sorted[sorted.len() - 1];
    sorted.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min)
}

/// Largest circular gap left by the angles; `2π` for a single point.
pub fn max_circular_gap(angles: &[f64]) -> f64 {
    if angles.len() < 2 {
        return TAU;
    }
    let mut sorted: Vec<f64> = angles.iter().map(|&a| wrap_angle(a)).collect();
    sorted.sort_by(f64::total_cmp);
    let wrap = sorted[0] + TAU - sorted[sorted.len() - 1];
    sorted.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorusOrbit {
    pub alpha1: f64,
    pub alpha2: f64,
    pub tau: f64,
    pub steps: usize,
    /// Positions after `0..=steps` jumps.
    pub angles: Vec<(f64, f64)>,
}

impl TorusOrbit {
    pub fn start(&self) -> (f64, f64) {
        self.angles[0]
    }

    pub fn end(&self) -> (f64, f64) {
        self.angles[self.steps]
    }

    /// Applies the inverse map `steps` times from the final position.
    pub fn rewind(&self) -> (f64, f64) {
        let (d1, d2) = (self.alpha1 * self.tau, self.alpha2 * self.tau);
        let (mut p1, mut p2) = self.end();
        for _ in 0..self.steps {
            p1 = wrap_angle(p1 - d1);
            p2 = wrap_angle(p2 - d2);
        }
        (p1, p2)
    }

    /// Positions reached by the jumps `1..=steps`.
    pub fn landings(&self) -> &[(f64, f64)] {
        &self.angles[1..]
    }
}

/// Iterates `φᵢ → φᵢ + αᵢτ mod 2π`.
pub fn simulate_torus(
    alpha1: f64,
    alpha2: f64,
    tau: f64,
    steps: usize,
    start: (f64, f64),
) -> Result<TorusOrbit> {
    if steps == 0 {
        return Err(Error::InvalidParameter("torus steps must be >= 1".into()));
    }
    if !(tau > 0.0 && tau.is_finite() && alpha1.is_finite() && alpha2.is_finite()) {
        return Err(Error::InvalidParameter(
            "torus rates must be finite, tau positive".into(),
        ));
    }
    let (d1, d2) = (alpha1 * tau, alpha2 * tau);
    let mut angles = Vec::with_capacity(steps + 1);
    let mut p = (wrap_angle(start.0), wrap_angle(start.1));
    angles.push(p);
    for _ in 0..steps {
        p = (wrap_angle(p.0 + d1), wrap_angle(p.1 + d2));
        angles.push(p);
    }
    Ok(TorusOrbit {
        alpha1,
        alpha2,
        tau,
        steps,
        angles,
    })
}

/// Largest circular gap on each circle, over the landings of the orbit.
pub fn density_metrics(orbit: &TorusOrbit) -> (f64, f64) {
    let first: Vec<f64> = orbit.landings().iter().map(|p| p.0).collect();
    let second: Vec<f64> = orbit.landings().iter().map(|p| p.1).collect();
    (max_circular_gap(&first), max_circular_gap(&second))
}

/// Conjugate golden ratio `(√5 - 1)/2`.
pub fn golden_rotation() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}
