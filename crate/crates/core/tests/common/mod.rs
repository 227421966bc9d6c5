//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here is written against plain `Vec<Vec<Complex64>>` matrices
//! and textbook formulas, so it shares no code path with the library.

#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C;
use oscillab::OperatorMatrix;

pub type Mat = Vec<Vec<C>>;

pub fn zeros(n: usize) -> Mat {
    vec![vec![C::new(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> Mat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C::new(1.0, 0.0);
    }
    m
}

pub fn from_op(op: &OperatorMatrix) -> Mat {
    let n = op.dim();
    (0..n)
        .map(|r| (0..n).map(|c| op.get(r, c)).collect())
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == C::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn lin(a: &Mat, x: C, b: &Mat, y: C) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| x * p + y * q).collect())
        .collect()
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    lin(a, C::new(1.0, 0.0), b, C::new(1.0, 0.0))
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    lin(a, C::new(1.0, 0.0), b, C::new(-1.0, 0.0))
}

pub fn scale(a: &Mat, x: C) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|v| x * v).collect())
        .collect()
}

pub fn comm(a: &Mat, b: &Mat) -> Mat {
    sub(&matmul(a, b), &matmul(b, a))
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|r| (0..n).map(|c| a[c][r].conj()).collect())
        .collect()
}

/// Max-entry distance over the rows and columns in `idx`.
pub fn diff_on(a: &Mat, b: &Mat, idx: &[usize]) -> f64 {
    let mut worst: f64 = 0.0;
    for &r in idx {
        for &c in idx {
            worst = worst.max((a[r][c] - b[r][c]).norm());
        }
    }
    worst
}

pub fn diff(a: &Mat, b: &Mat) -> f64 {
    let idx: Vec<usize> = (0..a.len()).collect();
    diff_on(a, b, &idx)
}

pub fn column_norm(a: &Mat, c: usize) -> f64 {
    a.iter().map(|r| r[c].norm_sqr()).sum::<f64>().sqrt()
}

fn real(v: f64) -> C {
    C::new(v, 0.0)
}

/// su(2) irrep of label `l = twice/2` in the basis `n = 0..2l`, `m = n - l`.
pub fn su2(twice: u32) -> (Mat, Mat, Mat) {
    let l = f64::from(twice) / 2.0;
    let d = twice as usize + 1;
    let (mut l3, mut lp) = (zeros(d), zeros(d));
    for n in 0..d {
        l3[n][n] = real(n as f64 - l);
        if n + 1 < d {
            let nf = n as f64;
            lp[n + 1][n] = real(((2.0 * l - nf) * (nf + 1.0)).sqrt());
        }
    }
    let lm = dagger(&lp);
    (l3, lp, lm)
}

/// Truncated D⁺ₖ, `k = twice/2`, dimension `d`.
pub fn su11(twice: u32, d: usize) -> (Mat, Mat, Mat) {
    let k = f64::from(twice) / 2.0;
    let (mut l3, mut lp) = (zeros(d), zeros(d));
    for n in 0..d {
        let nf = n as f64;
        l3[n][n] = real(nf + k);
        if n + 1 < d {
            lp[n + 1][n] = real(((nf + 2.0 * k) * (nf + 1.0)).sqrt());
        }
    }
    let lm = dagger(&lp);
    (l3, lp, lm)
}

/// Truncated oscillator `(a, a†)`.
pub fn h1(d: usize) -> (Mat, Mat) {
    let mut ad = zeros(d);
    for n in 0..d - 1 {
        ad[n + 1][n] = real(((n + 1) as f64).sqrt());
    }
    (dagger(&ad), ad)
}

pub fn cartesian(lp: &Mat, lm: &Mat) -> (Mat, Mat) {
    let l1 = scale(&add(lp, lm), real(0.5));
    let l2 = scale(&sub(lp, lm), C::new(0.0, -0.5));
    (l1, l2)
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (na, nb) = (a.len(), b.len());
    let mut out = zeros(na * nb);
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Evolution operator from its definition: `|ν⟩ → e^{-iπ/N}|ν+1 mod N⟩`.
pub fn evolution(n: usize) -> Mat {
    let phase = C::from_polar(1.0, -PI / n as f64);
    let mut u = zeros(n);
    for nu in 0..n {
        u[(nu + 1) % n][nu] = phase;
    }
    u
}

pub fn power(a: &Mat, e: usize) -> Mat {
    let mut out = eye(a.len());
    for _ in 0..e {
        out = matmul(&out, a);
    }
    out
}

/// Energies of `U` found by testing every Fourier vector as an eigenvector:
/// `v_m[ν] = e^{2πimν/N}`. Returns `E = -arg(λ)/τ` with `arg ∈ (-2π, 0]`,
/// sorted, and the worst eigen-equation residual.
pub fn evolution_energies(n: usize, tau: f64) -> (Vec<f64>, f64) {
    let u = evolution(n);
    let mut energies = Vec::with_capacity(n);
    let mut worst: f64 = 0.0;
    for m in 0..n {
        let v: Vec<C> = (0..n)
            .map(|nu| C::from_polar(1.0, TAU * (m * nu) as f64 / n as f64))
            .collect();
        let uv: Vec<C> = (0..n)
            .map(|r| (0..n).map(|c| u[r][c] * v[c]).sum())
            .collect();
        let lambda = uv[0] / v[0];
        for r in 0..n {
            worst = worst.max((uv[r] - lambda * v[r]).norm());
        }
        let mut arg = lambda.arg();
        if arg > 0.0 {
            arg -= TAU;
        }
        energies.push(-arg / tau);
    }
    energies.sort_by(f64::total_cmp);
    (energies, worst)
}

/// Symmetric-matrix exponential `e^{θ S}` by cyclic Jacobi diagonalization.
pub fn sym_exp(s: &Mat, theta: f64) -> Mat {
    let n = s.len();
    let mut a: Vec<Vec<f64>> = s.iter().map(|r| r.iter().map(|v| v.re).collect()).collect();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let phi = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (sn, cs) = phi.sin_cos();
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = cs * akp - sn * akq;
                    a[k][q] = sn * akp + cs * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = cs * apk - sn * aqk;
                    a[q][k] = sn * apk + cs * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = cs * vp - sn * vq;
                    row[q] = sn * vp + cs * vq;
                }
            }
        }
    }
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += v[i][k] * (theta * a[k][k]).exp() * v[j][k];
            }
            out[i][j] = real(acc);
        }
    }
    out
}

/// Angle reduced to `[0, 2π)`.
pub fn wrap(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

pub fn circ_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Largest gap between neighbouring points on the circle, by insertion into
/// a sorted list and a full scan.
pub fn brute_max_gap(points: &[f64]) -> f64 {
    let mut sorted: Vec<f64> = Vec::with_capacity(points.len());
    for &p in points {
        let p = wrap(p);
        let at = sorted.partition_point(|&q| q < p);
        sorted.insert(at, p);
    }
    if sorted.len() < 2 {
        return TAU;
    }
    let mut gap = sorted[0] + TAU - sorted[sorted.len() - 1];
    for i in 1..sorted.len() {
        gap = gap.max(sorted[i] - sorted[i - 1]);
    }
    gap
}

/// Smallest pairwise circular distance, all pairs.
pub fn brute_min_pair_distance(points: &[f64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..points.len() {
        for j in 0..i {
            best = best.min(circ_dist(points[i], points[j]));
        }
    }
    best
}
