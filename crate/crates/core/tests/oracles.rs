//! Worked examples checked against independent brute-force computations.

mod common;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use common::*;
use num_complex::Complex64 as C;
use oscillab::algebra::{
    build_h1_rep, build_su11_rep, build_su2_rep, cartesian_generators, check_algebra_relations,
};
use oscillab::contraction::{
    anticommutator_deviation, contraction_deviation, deformed_commutator_check,
    hamiltonian_identity_check, holstein_primakoff, position_momentum, run_contraction_study,
    scaled_ladders, su2_hamiltonian, ContractionFamily,
};
use oscillab::evolution::{
    build_evolution_operator, geometric_phase_check, spectrum_via_dft, EvolutionParams,
};
use oscillab::orbits::{
    density_metrics, golden_rotation, max_circular_gap, min_separation, simulate_torus,
    thooft_system, touch_points, CircleDynamics, FrequencyRatio,
};
use oscillab::schwinger::{
    build_two_mode, casimir, dissipative_hamiltonian, l2_finite_form_residual, l2_relation_check,
    sector_decompose, verify_sectors, DissipativeParams, Su11Generators,
};
use oscillab::HalfInt;

fn h(twice: u32) -> HalfInt {
    HalfInt::from_twice(twice).unwrap()
}

fn r(v: f64) -> C {
    C::new(v, 0.0)
}

const I: C = C::new(0.0, 1.0);

#[test]
fn su2_elements_match_formula() {
    let rep = build_su2_rep(h(6));
    assert!((rep.lplus().get(1, 0).re - 6f64.sqrt()).abs() < 1e-15);
    let (l3, lp, lm) = su2(6);
    assert_eq!(diff(&from_op(rep.l3()), &l3), 0.0);
    assert!(diff(&from_op(rep.lplus()), &lp) < 1e-15);
    assert!(diff(&from_op(rep.lminus()), &lm) < 1e-15);
}

#[test]
fn spin_half_is_pauli() {
    let rep = build_su2_rep(h(1));
    let s3 = vec![vec![r(-0.5), r(0.0)], vec![r(0.0), r(0.5)]];
    let sp = vec![vec![r(0.0), r(0.0)], vec![r(1.0), r(0.0)]];
    assert_eq!(diff(&from_op(rep.l3()), &s3), 0.0);
    assert_eq!(diff(&from_op(rep.lplus()), &sp), 0.0);

    // σ₁/2 and σ₂/2 in the basis (m = -1/2, m = +1/2)
    let s1 = vec![vec![r(0.0), r(0.5)], vec![r(0.5), r(0.0)]];
    let s2 = vec![vec![r(0.0), 0.5 * I], vec![-0.5 * I, r(0.0)]];
    let (l1, l2) = cartesian_generators(&rep).unwrap();
    assert!(diff(&from_op(&l1), &s1) < 1e-15);
    assert!(diff(&from_op(&l2), &s2) < 1e-15);
}

#[test]
fn su11_elements_match_formula() {
    assert!((build_su11_rep(h(2), 4).unwrap().lplus().get(1, 0).re - 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(build_su11_rep(h(1), 8).unwrap().lplus().get(4, 3).re, 4.0);
    for (twice, d) in [(1, 12), (2, 9), (5, 17)] {
        let rep = build_su11_rep(h(twice), d).unwrap();
        let (l3, lp, lm) = su11(twice, d);
        assert_eq!(diff(&from_op(rep.l3()), &l3), 0.0);
        assert!(diff(&from_op(rep.lplus()), &lp) < 1e-14);
        assert!(diff(&from_op(rep.lminus()), &lm) < 1e-14);
    }
}

#[test]
fn h1_elements_match_formula() {
    let rep = build_h1_rep(5).unwrap();
    assert!((rep.lplus().get(3, 2).re - 3f64.sqrt()).abs() < 1e-15);
    let (a, ad) = h1(5);
    assert!(diff(&from_op(rep.lminus()), &a) < 1e-15);
    assert!(diff(&from_op(rep.lplus()), &ad) < 1e-15);
    // [a, a†]|n⟩ = |n⟩ for n ≤ M - 2
    let c = comm(&a, &ad);
    let idx: Vec<usize> = (0..4).collect();
    assert!(diff_on(&c, &eye(5), &idx) < 1e-14);
}

#[test]
fn su11_cartesian_commutator_on_interior() {
    let d = 30;
    let (l3, lp, lm) = su11(1, d);
    let (l1, l2) = cartesian(&lp, &lm);
    let lhs = comm(&l1, &l2);
    let rhs = scale(&l3, -I);
    let idx: Vec<usize> = (0..d - 1).collect();
    assert!(diff_on(&lhs, &rhs, &idx) < 1e-12);

    let rep = build_su11_rep(h(1), d).unwrap();
    let (m1, m2) = cartesian_generators(&rep).unwrap();
    assert!(diff(&from_op(&m1), &l1) < 1e-14);
    assert!(diff(&from_op(&m2), &l2) < 1e-14);
}

/// Worst violation of the three defining relations over the leading block.
fn relation_oracle(l3: &Mat, lp: &Mat, lm: &Mat, sign: f64, interior: usize) -> f64 {
    let idx: Vec<usize> = (0..interior).collect();
    let a = diff_on(&comm(l3, lp), lp, &idx);
    let b = diff_on(&comm(l3, lm), &scale(lm, r(-1.0)), &idx);
    let c = diff_on(&comm(lp, lm), &scale(l3, r(2.0 * sign)), &idx);
    a.max(b).max(c)
}

#[test]
fn truncation_edge_brute_force() {
    let (l3, lp, lm) = su11(1, 40);
    let rep = build_su11_rep(h(1), 40).unwrap();
    let inside = relation_oracle(&l3, &lp, &lm, -1.0, 39);
    let edge = relation_oracle(&l3, &lp, &lm, -1.0, 40);
    assert!(inside < 1e-12);
    assert!(edge > 10.0);
    let lib_inside = check_algebra_relations(&rep, 39).unwrap();
    let lib_edge = check_algebra_relations(&rep, 40).unwrap();
    assert!(lib_inside < 1e-12);
    assert!((lib_edge - edge).abs() < 1e-9 * edge);
}

#[test]
fn scaled_ladder_elements() {
    let (_, ad) = scaled_ladders(&build_su2_rep(h(4))).unwrap();
    assert!((ad.get(1, 0).re - 1.0).abs() < 1e-15);
    let (_, ad) = scaled_ladders(&build_su11_rep(h(1), 8).unwrap()).unwrap();
    assert!((ad.get(4, 3).re - 4.0).abs() < 1e-15);
    // large l: ⟨n+1|a†|n⟩ → √(n+1)
    let (_, ad) = scaled_ladders(&build_su2_rep(h(2000))).unwrap();
    for n in 0..5 {
        assert!((ad.get(n + 1, n).re - ((n + 1) as f64).sqrt()).abs() < 1e-2);
    }
}

/// `‖([a,a†] - 1)|n⟩‖` with `a = L₋/√(2p)` built from formulas.
fn deviation_oracle(lp: &Mat, lm: &Mat, twice_p: u32, n: usize) -> f64 {
    let s = r(1.0 / f64::from(twice_p).sqrt());
    let (a, ad) = (scale(lm, s), scale(lp, s));
    column_norm(&sub(&comm(&a, &ad), &eye(lp.len())), n)
}

#[test]
fn contraction_deviation_examples() {
    let (_, lp, lm) = su2(20);
    let brute = deviation_oracle(&lp, &lm, 20, 2);
    let lib = contraction_deviation(&build_su2_rep(h(20)), 2).unwrap();
    assert!((brute - 0.2).abs() < 1e-12);
    assert!((lib - brute).abs() < 1e-12);

    let (_, lp, lm) = su11(40, 8);
    let brute = deviation_oracle(&lp, &lm, 40, 4);
    let lib = contraction_deviation(&build_su11_rep(h(40), 8).unwrap(), 4).unwrap();
    assert!((brute - 0.2).abs() < 1e-12);
    assert!((lib - brute).abs() < 1e-12);
}

#[test]
fn anticommutator_deviation_matches_brute_force() {
    for (twice, n) in [(10u32, 3usize), (40, 7), (7, 2)] {
        let (_, lp, lm) = su2(twice);
        let s = r(1.0 / f64::from(twice).sqrt());
        let (a, ad) = (scale(&lm, s), scale(&lp, s));
        let half = scale(&add(&matmul(&ad, &a), &matmul(&a, &ad)), r(0.5));
        let shifted = sub(&half, &scale(&eye(lp.len()), r(n as f64 + 0.5)));
        let brute = column_norm(&shifted, n);
        let lib = anticommutator_deviation(&build_su2_rep(h(twice)), n).unwrap();
        assert!((brute - lib).abs() < 1e-12);
        let l = f64::from(twice) / 2.0;
        assert!((brute - (n * n) as f64 / (2.0 * l)).abs() < 1e-12);
    }
}

#[test]
fn contraction_study_examples() {
    let params: Vec<HalfInt> = [10, 20, 40, 80].map(h).to_vec();
    let rep = run_contraction_study(ContractionFamily::Su2, &params, 4, 3).unwrap();
    for (i, want) in [0.6, 0.3, 0.15, 0.075].iter().enumerate() {
        assert!((rep.deviation(i, 3) - want).abs() < 1e-12);
    }
    assert!((rep.fitted_slope + 1.0).abs() < 1e-9);

    let params: Vec<HalfInt> = [2, 4, 8, 16].map(h).to_vec();
    let rep = run_contraction_study(ContractionFamily::Su11, &params, 2, 1).unwrap();
    for (i, want) in [1.0, 0.5, 0.25, 0.125].iter().enumerate() {
        assert!((rep.deviation(i, 1) - want).abs() < 1e-12);
    }
    assert!((rep.fitted_slope + 1.0).abs() < 1e-9);
}

#[test]
fn holstein_primakoff_by_composition() {
    let d = 10;
    let (l3, lp, lm) = su11(1, d);
    // f(L₃) = (L₃ + 1/2)^{-1/2}, diagonal
    let mut f = zeros(d);
    for n in 0..d {
        f[n][n] = r(1.0 / (l3[n][n].re + 0.5).sqrt());
    }
    let a = matmul(&f, &lm);
    let ad = matmul(&lp, &f);
    assert!((ad[4][3].re - 2.0).abs() < 1e-15);
    let (oa, oad) = h1(d);
    assert!(diff(&a, &oa) < 1e-14);
    assert!(diff(&ad, &oad) < 1e-14);

    let (la, lad) = holstein_primakoff(&build_su11_rep(h(1), d).unwrap()).unwrap();
    assert!(diff(&from_op(&la), &a) < 1e-14);
    assert!(diff(&from_op(&lad), &ad) < 1e-14);

    let half = scale(&add(&matmul(&ad, &a), &matmul(&a, &ad)), r(0.5));
    for n in 0..d - 1 {
        assert!((half[n][n].re - (n as f64 + 0.5)).abs() < 1e-13);
    }
}

#[test]
fn position_momentum_spin_half() {
    let rep = build_su2_rep(h(1));
    let (x, p, s) = position_momentum(&rep, PI).unwrap();
    assert!((s.alpha - 1.0).abs() < 1e-15);
    assert!((s.beta + 1.0).abs() < 1e-15);
    let s1 = vec![vec![r(0.0), r(0.5)], vec![r(0.5), r(0.0)]];
    let s2 = vec![vec![r(0.0), 0.5 * I], vec![-0.5 * I, r(0.0)]];
    assert!(diff(&from_op(&x), &s1) < 1e-15);
    assert!(diff(&from_op(&p), &scale(&s2, r(-1.0))) < 1e-15);
}

/// Residuals of the deformed commutator and the Hamiltonian rewrite, built
/// from the su(2) formulas.
fn identity_oracle(twice: u32, tau: f64) -> (f64, f64) {
    let l = f64::from(twice) / 2.0;
    let d = twice as usize + 1;
    let (l3, lp, lm) = su2(twice);
    let (l1, l2) = cartesian(&lp, &lm);
    let alpha = (tau / PI).sqrt();
    let beta = -2.0 / (2.0 * l + 1.0) * (PI / tau).sqrt();
    let omega = TAU / (d as f64 * tau);
    let x = scale(&l1, r(alpha));
    let p = scale(&l2, r(beta));
    let ham = scale(&add(&l3, &scale(&eye(d), r(l + 0.5))), r(omega));
    let rhs8 = scale(&sub(&eye(d), &scale(&ham, r(tau / PI))), I);
    let r8 = diff(&comm(&x, &p), &rhs8);
    let osc = add(
        &scale(&matmul(&x, &x), r(0.5 * omega * omega)),
        &scale(&matmul(&p, &p), r(0.5)),
    );
    let corr = scale(
        &add(&matmul(&ham, &ham), &scale(&eye(d), r(omega * omega / 4.0))),
        r(tau / TAU),
    );
    let r9 = diff(&ham, &add(&osc, &corr));
    (r8, r9)
}

#[test]
fn deformed_identities_examples() {
    for (twice, tau, tol) in [(6u32, 1.0, 1e-12), (1, PI, 1e-12), (50, 0.01, 1e-10)] {
        let (b8, b9) = identity_oracle(twice, tau);
        let rep = build_su2_rep(h(twice));
        let l8 = deformed_commutator_check(&rep, tau).unwrap();
        let l9 = hamiltonian_identity_check(&rep, tau).unwrap();
        assert!(
            b8 < tol && l8 < tol,
            "l={} tau={tau}: {b8} {l8}",
            twice as f64 / 2.0
        );
        assert!(
            b9 < tol && l9 < tol,
            "l={} tau={tau}: {b9} {l9}",
            twice as f64 / 2.0
        );
    }
}

#[test]
fn deformation_visible_at_top_state() {
    let (twice, tau) = (20u32, 1.0);
    let rep = build_su2_rep(h(twice));
    let (x, p, s) = position_momentum(&rep, tau).unwrap();
    let c = oscillab::operator::commutator(&x, &p).unwrap();
    let top = twice as usize;
    let l = f64::from(twice) / 2.0;
    let value = (c.get(top, top) / I).re;
    let expected = 1.0 - (tau / PI) * s.omega() * (2.0 * l + 0.5);
    assert!((value - expected).abs() < 1e-12);
    assert!(value < 0.0);
}

#[test]
fn correction_vanishes_in_the_limit() {
    // ω fixed at 1: τ = 2π/N
    let mut last = f64::INFINITY;
    for twice in [10u32, 40, 160] {
        let d = twice as usize + 1;
        let tau = TAU / d as f64;
        let ham = su2_hamiltonian(&build_su2_rep(h(twice)), tau).unwrap();
        let e = ham.get(2, 2).re;
        let corr = tau / TAU * (0.25 + e * e);
        assert!((corr - 6.5 / d as f64).abs() < 1e-12);
        assert!(corr < last);
        last = corr;
    }
}

#[test]
fn evolution_operator_small_cases() {
    let p = EvolutionParams::new(2, 1.0).unwrap();
    let u = build_evolution_operator(&p);
    let phase = C::from_polar(1.0, -FRAC_PI_2);
    let hand = vec![vec![r(0.0), phase], vec![phase, r(0.0)]];
    assert!(diff(&from_op(&u), &hand) < 1e-15);
    assert!(diff(&matmul(&hand, &hand), &scale(&eye(2), r(-1.0))) < 1e-15);

    let u7 = power(&evolution(7), 7);
    assert!(diff(&u7, &scale(&eye(7), r(-1.0))) < 1e-12);
    let p7 = EvolutionParams::new(7, 1.0).unwrap();
    assert!(diff(&from_op(&build_evolution_operator(&p7)), &evolution(7)) < 1e-15);
}

#[test]
fn evolution_spectrum_via_eigenvectors() {
    for (n, tau) in [(2usize, PI), (7, 1.0), (16, 0.3), (33, 2.0)] {
        let (brute, residual) = evolution_energies(n, tau);
        assert!(residual < 1e-12);
        let lib = spectrum_via_dft(&EvolutionParams::new(n, tau).unwrap())
            .unwrap()
            .real_parts();
        for (a, b) in brute.iter().zip(&lib) {
            assert!((a - b).abs() < 1e-10);
        }
    }
    let (two, _) = evolution_energies(2, PI);
    assert!((two[0] - 0.5).abs() < 1e-12 && (two[1] - 1.5).abs() < 1e-12);
}

#[test]
fn period_phase_by_powering() {
    for n in [3usize, 64] {
        let brute = power(&evolution(n), n);
        let phi = geometric_phase_check(&EvolutionParams::new(n, 1.0).unwrap()).unwrap();
        assert!((phi - brute[0][0]).norm() < 1e-12);
        assert!((phi + 1.0).norm() < 1e-12);
    }
}

#[test]
fn touch_angles_direct_formula() {
    let d = thooft_system(3).unwrap();
    let angles = touch_points(&d, 3).unwrap().angles();
    let expected = [TAU / 3.0, 2.0 * TAU / 3.0, 0.0];
    for (j, (a, e)) in angles.iter().zip(expected).enumerate() {
        let q = 1.0 / 3.0;
        let direct = wrap((j + 1) as f64 * (1.0 - q) * PI);
        assert!(circ_dist(*a, e) < 1e-12);
        assert!(circ_dist(*a, direct) < 1e-12);
    }
}

#[test]
fn irrational_touch_angles_never_close() {
    let q = 5.0 / 3.0 + PI / 40.0;
    let d = CircleDynamics::new(1.0, FrequencyRatio::irrational(q).unwrap()).unwrap();
    let trace = touch_points(&d, 10_000).unwrap();
    for (j, p) in trace.points.iter().enumerate() {
        let direct = wrap((j + 1) as f64 * (1.0 - q) * PI);
        assert!(circ_dist(p.theta, direct) < 1e-9);
        assert!(circ_dist(direct, 0.0) > 1e-9, "returns at j={}", j + 1);
    }
}

#[test]
fn torus_rational_return() {
    let o = simulate_torus(TAU / 5.0, TAU / 7.0, 1.0, 35, (0.3, 1.1)).unwrap();
    let (s, e) = (o.start(), o.end());
    assert!(circ_dist(s.0, e.0) < 1e-9 && circ_dist(s.1, e.1) < 1e-9);
    // no earlier simultaneous return
    for p in &o.angles[1..35] {
        assert!(circ_dist(s.0, p.0).max(circ_dist(s.1, p.1)) > 1e-3);
    }
}

#[test]
fn torus_irrational_never_returns() {
    let g = golden_rotation();
    let o = simulate_torus(TAU * g, TAU * 2f64.sqrt(), 1.0, 10_000, (0.0, 0.0)).unwrap();
    let s = o.start();
    for p in o.landings() {
        assert!(circ_dist(s.0, p.0).max(circ_dist(s.1, p.1)) > 1e-9);
    }
}

#[test]
fn torus_gaps_brute_force() {
    let g = golden_rotation();
    let o = simulate_torus(TAU * g, TAU * g, 1.0, 10_000, (0.0, 0.0)).unwrap();
    let first: Vec<f64> = o.landings().iter().map(|p| p.0).collect();
    let brute = brute_max_gap(&first);
    let (g1, g2) = density_metrics(&o);
    assert!((brute - g1).abs() < 1e-12 && (brute - g2).abs() < 1e-12);
    assert!(g1 < 1e-2);

    for steps in [5usize, 6, 17, 100] {
        let o = simulate_torus(TAU / 5.0, TAU / 5.0, 1.0, steps, (0.0, 0.0)).unwrap();
        let (g1, _) = density_metrics(&o);
        assert!((g1 - TAU / 5.0).abs() < 1e-9);
    }
    let one = simulate_torus(1.0, 1.0, 1.0, 1, (0.0, 0.0)).unwrap();
    assert_eq!(density_metrics(&one).0, TAU);
}

#[test]
fn separation_metrics_brute_force() {
    let q = 5.0 / 3.0 + PI / 40.0;
    let d = CircleDynamics::new(1.0, FrequencyRatio::irrational(q).unwrap()).unwrap();
    let angles = touch_points(&d, 2_000).unwrap().angles();
    assert!((min_separation(&angles) - brute_min_pair_distance(&angles)).abs() < 1e-12);
    assert!((max_circular_gap(&angles) - brute_max_gap(&angles)).abs() < 1e-12);
}

/// Two-mode ladders from Kronecker products of the single-mode formulas.
fn two_mode_oracle(n_max: usize) -> (Mat, Mat, Mat, Mat, Mat) {
    let (a1, ad1) = h1(n_max + 1);
    let id = eye(n_max + 1);
    let (a, ad) = (kron(&a1, &id), kron(&ad1, &id));
    let (b, bd) = (kron(&id, &a1), kron(&id, &ad1));
    let lp = matmul(&ad, &bd);
    let lm = matmul(&a, &b);
    let dim = a.len();
    let l3 = scale(
        &add(&add(&matmul(&ad, &a), &matmul(&bd, &b)), &eye(dim)),
        r(0.5),
    );
    (a, b, lp, lm, l3)
}

#[test]
fn two_mode_actions() {
    let n_max = 4;
    let space = build_two_mode(n_max).unwrap();
    let (_, _, lp, lm, l3) = two_mode_oracle(n_max);
    assert!(diff(&from_op(space.lplus()), &lp) < 1e-14);
    assert!(diff(&from_op(space.lminus()), &lm) < 1e-14);
    assert!(diff(&from_op(space.l3()), &l3) < 1e-14);
    let (vac, one) = (space.index(0, 0), space.index(1, 1));
    assert!((space.lplus().get(one, vac).re - 1.0).abs() < 1e-15);
    assert!((space.l3().get(vac, vac).re - 0.5).abs() < 1e-15);
}

#[test]
fn casimir_brute_force() {
    let n_max = 6;
    let space = build_two_mode(n_max).unwrap();
    let (a, b, lp, lm, l3) = two_mode_oracle(n_max);
    let dim = a.len();
    let l_form = sub(
        &add(&matmul(&l3, &l3), &scale(&eye(dim), r(0.25))),
        &scale(&add(&matmul(&lp, &lm), &matmul(&lm, &lp)), r(0.5)),
    );
    let na = matmul(&dagger(&a), &a);
    let nb = matmul(&dagger(&b), &b);
    let imb = sub(&na, &nb);
    let m_form = scale(&matmul(&imb, &imb), r(0.25));
    let interior: Vec<usize> = (0..dim)
        .filter(|&i| i / (n_max + 1) < n_max && i % (n_max + 1) < n_max)
        .collect();
    // both forms diagonal
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                assert!(m_form[i][j].norm() < 1e-14);
                if interior.contains(&i) && interior.contains(&j) {
                    assert!(l_form[i][j].norm() < 1e-12);
                }
            }
        }
    }
    assert!(diff_on(&l_form, &m_form, &interior) < 1e-12);
    let c = casimir(&space).unwrap();
    assert!(diff_on(&from_op(&c.squared), &l_form, &interior) < 1e-12);
    let s = space.index(3, 1);
    assert!((c.c.get(s, s).re - 1.0).abs() < 1e-15);
}

#[test]
fn sectors_against_direct_reps() {
    let n_max = 7;
    let space = build_two_mode(n_max).unwrap();
    let dec = sector_decompose(&space);
    for sector in &dec.sectors {
        // counting pairs with n_A - n_B = 2j
        let count = (0..=n_max)
            .flat_map(|na| (0..=n_max).map(move |nb| (na, nb)))
            .filter(|&(na, nb)| na as i32 - nb as i32 == sector.twice_j)
            .count();
        assert_eq!(sector.len(), count);
        assert_eq!(count, n_max + 1 - sector.twice_j.unsigned_abs() as usize);
    }
    // j = 1/2 sector against k = 1 elements √((m+2)(m+1))
    let half = dec.get(1).unwrap();
    for m in 0..half.len() - 1 {
        let v = space.lplus().get(half.indices[m + 1], half.indices[m]).re;
        let mf = m as f64;
        assert!((v - ((mf + 2.0) * (mf + 1.0)).sqrt()).abs() < 1e-12);
    }
    // j = 0: integer lowering coefficients
    let zero = dec.get(0).unwrap();
    for m in 1..zero.len() {
        let v = space.lminus().get(zero.indices[m - 1], zero.indices[m]).re;
        assert!((v - m as f64).abs() < 1e-12);
    }
    for check in verify_sectors(&space, &dec).unwrap() {
        assert!(check.residual < 1e-12);
    }
}

#[test]
fn dissipative_elements() {
    let n_max = 5;
    let space = build_two_mode(n_max).unwrap();
    let p = DissipativeParams::new(1.3, 0.7).unwrap();
    let d = dissipative_hamiltonian(&space, &p).unwrap();
    let s = space.index(3, 1);
    assert!((d.h0.get(s, s).re - 2.0 * 1.3).abs() < 1e-14);
    for n in 0..n_max {
        for m in 0..n_max {
            let (from, to) = (space.index(n, m), space.index(n + 1, m + 1));
            let want = C::new(0.0, 0.7 * (((n + 1) * (m + 1)) as f64).sqrt());
            assert!((d.hi.get(to, from) - want).norm() < 1e-13);
        }
    }
}

#[test]
fn l2_relations_brute_force() {
    let (l3, lp, lm) = su11(1, 40);
    let (l1, l2) = cartesian(&lp, &lm);
    let first = comm(&l1, &l3);
    let idx: Vec<usize> = (0..30).collect();
    let r1 = diff_on(&first, &scale(&l2, -I), &idx);
    let r2 = diff_on(&comm(&l1, &first), &scale(&l3, r(-1.0)), &idx);
    assert!(r1 < 1e-12 && r2 < 1e-12);
    let rep = build_su11_rep(h(1), 40).unwrap();
    let (m1, m2) = l2_relation_check(&rep, 30).unwrap();
    assert!(m1 < 1e-12 && m2 < 1e-12);

    let space = build_two_mode(8).unwrap();
    let (m1, m2) = l2_relation_check(&space, 8).unwrap();
    assert!(m1 < 1e-12 && m2 < 1e-12);
}

#[test]
fn finite_quarter_turn_matches_oracle() {
    let n_max = 6;
    let space = build_two_mode(n_max).unwrap();
    let (_, _, lp, lm, l3) = two_mode_oracle(n_max);
    let (l1, l2) = cartesian(&lp, &lm);
    let fwd = sym_exp(&l1, FRAC_PI_2);
    let bwd = sym_exp(&l1, -FRAC_PI_2);
    let lhs = scale(&matmul(&matmul(&fwd, &l3), &bwd), I);
    let idx = space.interior_indices(3).unwrap();
    let brute = diff_on(&lhs, &l2, &idx);
    let lib = l2_finite_form_residual(&space, 3).unwrap();
    assert!(
        (brute - lib).abs() < 1e-8 * brute.max(1.0),
        "{brute} vs {lib}"
    );
}

#[test]
fn oracle_helpers_agree_with_library_products() {
    let rep = build_su2_rep(h(5));
    let lib = oscillab::operator::commutator(rep.lplus(), rep.lminus()).unwrap();
    let (_, lp, lm) = su2(5);
    assert!(diff(&from_op(&lib), &comm(&lp, &lm)) < 1e-13);
}
