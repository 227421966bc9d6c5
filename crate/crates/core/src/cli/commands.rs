use std::f64::consts::{PI, TAU};

use super::expr::parse_real;
use super::report::{Report, Table, Value};
use super::{
    invalid, AlgebraArg, CheckArg, CliError, ContractArgs, EvolveArgs, FamilyArg, OrbitArgs,
    RepArgs, SchwingerArgs, Units,
};
use crate::algebra::{
    build_h1_rep, build_su11_rep, build_su2_rep, check_algebra_relations, LadderRep,
};
use crate::contraction::{
    deformed_commutator_check, hamiltonian_identity_check, holstein_primakoff,
    run_contraction_study, ContractionFamily, ScalingPair,
};
use crate::error::Error;
use crate::evolution::{
    build_evolution_operator, geometric_phase_check, spectrum_via_dft, EvolutionParams,
};
use crate::half::HalfInt;
use crate::operator::{anticommutator, max_abs_diff, OperatorMatrix, Spectrum, C64};
use crate::orbits::{
    density_metrics, golden_rotation, max_circular_gap, min_separation, sample_curve,
    simulate_torus, thooft_system, touch_points, CircleDynamics, FrequencyRatio, OrbitTrace,
};
use crate::schwinger::{
    build_two_mode, casimir_with_tolerance, conjugation_residual,
    dissipative_hamiltonian_with_tolerance, l2_finite_form_residual, l2_relation_check,
    sector_decompose, verify_sectors, DissipativeParams, Su11Generators, TwoModeSpace,
};

type CmdResult = Result<Report, CliError>;

/// Largest matrix dimension for which the dense oracle eigensolve runs.
const DENSE_ORACLE_LIMIT: usize = 256;

fn half_int(value: Option<f64>, name: &str) -> Result<HalfInt, CliError> {
    let v = value.ok_or_else(|| invalid(format!("--{name} is required")))?;
    HalfInt::from_f64(v).map_err(|_| invalid(format!("{name} must be half-integer ≥ 1/2")))
}

fn residual_table() -> Table {
    Table::new("residuals", &["check", "residual", "tolerance", "pass"])
}

fn push_residual(report: &mut Report, table: &mut Table, check: &str, residual: f64, tol: f64) {
    let pass = report.expect_below(check, residual, tol);
    table.push(vec![check.into(), residual.into(), tol.into(), pass.into()]);
}

fn element_rows(table: &mut Table, op: &OperatorMatrix, name: &str) {
    let m = op.entries();
    for c in 0..m.ncols() {
        for r in 0..m.nrows() {
            let z = m[(r, c)];
            if z.norm() > 0.0 {
                table.push(vec![
                    name.into(),
                    r.into(),
                    c.into(),
                    z.re.into(),
                    z.im.into(),
                ]);
            }
        }
    }
}

/// Converts a library tolerance failure into a recorded breach.
fn absorb<T>(
    report: &mut Report,
    table: &mut Table,
    r: crate::Result<T>,
) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::ToleranceBreach {
            check,
            residual,
            tolerance,
        }) => {
            push_residual(report, table, &check, residual, tolerance);
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_rep(a: &RepArgs, tol: f64) -> CmdResult {
    let mut report = Report::new("rep", tol);
    let rep: LadderRep = match a.algebra {
        AlgebraArg::Su2 => {
            let l = half_int(a.l, "l")?;
            report.param("algebra", "su2");
            report.param("l", l);
            build_su2_rep(l)
        }
        AlgebraArg::Su11 => {
            let k = half_int(a.k, "k")?;
            let dim = a.dim.ok_or_else(|| invalid("--dim is required for su11"))?;
            report.param("algebra", "su11");
            report.param("k", k);
            report.param("dim", dim);
            build_su11_rep(k, dim)?
        }
        AlgebraArg::H1 => {
            let dim = a.dim.ok_or_else(|| invalid("--dim is required for h1"))?;
            report.param("algebra", "h1");
            report.param("dim", dim);
            build_h1_rep(dim)?
        }
    };
    let interior = a.interior.unwrap_or(rep.max_interior());
    if interior == 0 || interior > rep.dim() {
        return Err(invalid(format!("interior must lie in 1..={}", rep.dim())));
    }
    report.param("interior", interior);

    let mut elements = Table::new("elements", &["operator", "row", "col", "re", "im"]);
    element_rows(&mut elements, rep.l3(), "L3");
    element_rows(&mut elements, rep.lplus(), "L+");
    element_rows(&mut elements, rep.lminus(), "L-");

    let mut residuals = residual_table();
    let r = check_algebra_relations(&rep, interior)?;
    push_residual(&mut report, &mut residuals, "commutation relations", r, tol);
    report.tables.push(elements);
    report.tables.push(residuals);
    Ok(report)
}

pub fn cmd_contract(a: &ContractArgs, tol: f64) -> CmdResult {
    if let Some(family) = a.family {
        contract_study(a, family, tol)
    } else if a.hp {
        contract_hp(a, tol)
    } else {
        contract_identities(a, tol)
    }
}

fn contract_study(a: &ContractArgs, family: FamilyArg, tol: f64) -> CmdResult {
    let (family, label) = match family {
        FamilyArg::Su2 => (ContractionFamily::Su2, "l"),
        FamilyArg::Su11 => (ContractionFamily::Su11, "k"),
    };
    if a.params.is_empty() {
        return Err(invalid("--params is required"));
    }
    let params = a
        .params
        .iter()
        .map(|&p| half_int(Some(p), label))
        .collect::<Result<Vec<_>, _>>()?;
    let n = a.n.unwrap_or(1);
    let interior = a.interior.unwrap_or(n + 1);
    let mut report = Report::new("contract", tol);
    report.param("mode", "study");
    report.param("family", family.name());
    let joined: Vec<String> = params.iter().map(HalfInt::to_string).collect();
    report.param("params", joined.join(" "));
    report.param("n", n);
    report.param("interior", interior);

    let study = run_contraction_study(family, &params, interior, n)?;
    let mut deviations = Table::new(
        "deviations",
        &[
            label,
            "n",
            "commutator",
            "commutator_closed_form",
            "anticommutator",
            "anticommutator_closed_form",
        ],
    );
    let mut worst: f64 = 0.0;
    for row in &study.deviations {
        let p = row.param.value();
        let m = row.n as f64;
        let comm = m / p;
        let anti = m * m / (2.0 * p);
        worst = worst
            .max((row.commutator - comm).abs() / comm.max(1.0))
            .max((row.anticommutator - anti).abs() / anti.max(1.0));
        deviations.push(vec![
            p.into(),
            row.n.into(),
            row.commutator.into(),
            comm.into(),
            row.anticommutator.into(),
            anti.into(),
        ]);
    }
    let mut fit = Table::new("fit", &["fit_state", "slope", "rms_residual"]);
    fit.push(vec![
        n.into(),
        study.fitted_slope.into(),
        study.fit_residual.into(),
    ]);

    let mut residuals = residual_table();
    push_residual(
        &mut report,
        &mut residuals,
        "deviation vs closed form",
        worst,
        tol,
    );
    push_residual(
        &mut report,
        &mut residuals,
        "slope + 1",
        (study.fitted_slope + 1.0).abs(),
        0.01,
    );
    report.tables.extend([deviations, fit, residuals]);
    Ok(report)
}

fn contract_hp(a: &ContractArgs, tol: f64) -> CmdResult {
    let dim = a.dim.unwrap_or(64);
    if dim < 2 {
        return Err(invalid("--dim must be >= 2"));
    }
    let mut report = Report::new("contract", tol);
    report.param("mode", "hp");
    report.param("dim", dim);
    let rep = build_su11_rep(HalfInt::ONE_HALF, dim)?;
    let h1 = build_h1_rep(dim)?;
    let (hp_a, hp_adag) = holstein_primakoff(&rep)?;
    let dev = max_abs_diff(&hp_a, h1.lminus())?.max(max_abs_diff(&hp_adag, h1.lplus())?);

    let half = anticommutator(&hp_adag, &hp_a)?.scale_real(0.5);
    let mut levels = Table::new("levels", &["n", "half_anticommutator", "expected"]);
    let mut level_dev: f64 = 0.0;
    let mut offdiag: f64 = 0.0;
    for n in 0..dim - 1 {
        let v = half.get(n, n).re;
        let expected = n as f64 + 0.5;
        level_dev = level_dev.max((v - expected).abs());
        for m in 0..dim - 1 {
            if m != n {
                offdiag = offdiag.max(half.get(m, n).norm());
            }
        }
        levels.push(vec![n.into(), v.into(), expected.into()]);
    }
    let mut residuals = residual_table();
    push_residual(&mut report, &mut residuals, "HP vs h1 entrywise", dev, tol);
    push_residual(
        &mut report,
        &mut residuals,
        "half anticommutator levels",
        level_dev.max(offdiag),
        tol,
    );
    report.tables.extend([levels, residuals]);
    Ok(report)
}

fn contract_identities(a: &ContractArgs, tol: f64) -> CmdResult {
    let l = half_int(a.l, "l")?;
    let tau = a.tau.unwrap_or(1.0);
    let scaling = ScalingPair::new(l, tau)?;
    let rep = build_su2_rep(l);
    let mut report = Report::new("contract", tol);
    report.param("mode", "identities");
    report.param("l", l);
    report.param("tau", tau);

    let mut scales = Table::new("scaling", &["alpha", "beta", "omega", "alpha_beta"]);
    scales.push(vec![
        scaling.alpha.into(),
        scaling.beta.into(),
        scaling.omega().into(),
        (scaling.alpha * scaling.beta).into(),
    ]);
    let mut residuals = residual_table();
    let r8 = deformed_commutator_check(&rep, tau)?;
    let r9 = hamiltonian_identity_check(&rep, tau)?;
    push_residual(&mut report, &mut residuals, "deformed commutator", r8, tol);
    push_residual(&mut report, &mut residuals, "hamiltonian rewrite", r9, tol);
    report.tables.extend([scales, residuals]);
    Ok(report)
}

pub fn cmd_evolve(a: &EvolveArgs, tol: f64) -> CmdResult {
    let p = EvolutionParams::new(a.n_states, a.tau)?;
    let n = p.n_states();
    let mut report = Report::new("evolve", tol);
    report.param("N", n);
    report.param("tau", p.tau());
    report.param(
        "units",
        match a.units {
            Units::Absolute => "absolute",
            Units::Omega => "omega",
        },
    );
    let omega = p.omega();
    let unit = match a.units {
        Units::Absolute => 1.0,
        Units::Omega => omega,
    };

    let spectrum = spectrum_via_dft(&p)?;
    let energies = spectrum.real_parts();
    let mut table = Table::new(
        "energies",
        &["n", "energy", "expected", "eigenvalue_re", "eigenvalue_im"],
    );
    let mut worst: f64 = 0.0;
    for (level, &e) in energies.iter().enumerate() {
        let expected = (level as f64 + 0.5) * omega;
        worst = worst.max((e - expected).abs() / omega);
        let lambda = C64::from_polar(1.0, -e * p.tau());
        table.push(vec![
            level.into(),
            (e / unit).into(),
            (expected / unit).into(),
            lambda.re.into(),
            lambda.im.into(),
        ]);
    }

    let mut residuals = residual_table();
    push_residual(
        &mut report,
        &mut residuals,
        "levels (n+1/2) omega",
        worst,
        tol,
    );
    if n <= DENSE_ORACLE_LIMIT {
        let dense = Spectrum::of(&build_evolution_operator(&p), tol);
        let mut phases: Vec<f64> = dense
            .eigenvalues
            .iter()
            .map(|z| {
                let arg = z.arg();
                if arg > 0.0 {
                    arg - TAU
                } else {
                    arg
                }
            })
            .map(|arg| -arg / p.tau())
            .collect();
        phases.sort_by(f64::total_cmp);
        let diff = phases
            .iter()
            .zip(&energies)
            .map(|(x, y)| (x - y).abs() / omega)
            .fold(0.0, f64::max);
        push_residual(
            &mut report,
            &mut residuals,
            "DFT vs dense eigensolve",
            diff,
            1e-10,
        );
    }

    let mut phase = Table::new("phase", &["re", "im", "arg"]);
    if let Some(phi) = absorb(&mut report, &mut residuals, geometric_phase_check(&p))? {
        phase.push(vec![phi.re.into(), phi.im.into(), phi.arg().into()]);
        push_residual(
            &mut report,
            &mut residuals,
            "U^N = -1",
            (phi + 1.0).norm(),
            tol,
        );
    }
    report.tables.extend([table, phase, residuals]);
    Ok(report)
}

fn touch_table(trace: &OrbitTrace) -> Table {
    let mut t = Table::new("touch_points", &["j", "t", "x", "y", "theta"]);
    for p in &trace.points {
        t.push(vec![
            p.j.into(),
            p.t.into(),
            p.x.into(),
            p.y.into(),
            p.theta.into(),
        ]);
    }
    t
}

fn curve_table(d: &CircleDynamics, t_end: f64, samples: usize) -> Table {
    let mut t = Table::new("curve", &["t", "x", "y"]);
    for (time, x, y) in sample_curve(d, t_end, samples) {
        t.push(vec![time.into(), x.into(), y.into()]);
    }
    t
}

fn circle_report(
    mut report: Report,
    d: &CircleDynamics,
    count: u64,
    samples: usize,
    tol: f64,
) -> CmdResult {
    let trace = touch_points(d, count)?;
    let angles = trace.angles();
    let radius_dev = trace
        .points
        .iter()
        .map(|p| (p.x.hypot(p.y) - 1.0).abs())
        .fold(0.0, f64::max);
    let angle_dev = trace
        .points
        .iter()
        .map(|p| {
            crate::orbits::circular_distance(crate::orbits::wrap_angle(p.y.atan2(p.x)), p.theta)
        })
        .fold(0.0, f64::max);
    let mut summary = Table::new(
        "summary",
        &[
            "alpha",
            "beta",
            "ratio",
            "count",
            "period_steps",
            "min_separation",
            "max_gap",
        ],
    );
    summary.push(vec![
        d.alpha.into(),
        d.beta.into(),
        d.ratio.value().into(),
        count.into(),
        match trace.period_steps {
            Some(p) => p.into(),
            None => "none".into(),
        },
        min_separation(&angles).into(),
        max_circular_gap(&angles).into(),
    ]);
    let t_end = trace.points.last().map_or(0.0, |p| p.t);
    let mut residuals = residual_table();
    push_residual(&mut report, &mut residuals, "touch radius", radius_dev, tol);
    push_residual(&mut report, &mut residuals, "touch angle", angle_dev, 1e-9);
    report.tables.extend([
        summary,
        touch_table(&trace),
        curve_table(d, t_end, samples),
        residuals,
    ]);
    Ok(report)
}

pub fn cmd_orbit(a: &OrbitArgs, tol: f64) -> CmdResult {
    let mut report = Report::new("orbit", tol);
    if let Some(n) = a.thooft_n {
        let d = thooft_system(n)?;
        let count = a.count.unwrap_or(n);
        report.param("system", "thooft");
        report.param("N", n);
        report.param("count", count);
        report.param("curve_samples", a.curve_samples);
        return circle_report(report, &d, count, a.curve_samples, tol);
    }
    if a.two_circle {
        let (num, den) = match (a.q_num, a.q_den) {
            (Some(n), Some(d)) if d > 0 => (n, d),
            _ => return Err(invalid("--q-num and --q-den (> 0) are required")),
        };
        let ratio = match &a.q_irr_add {
            Some(expr) => {
                let add = parse_real(expr).map_err(invalid)?;
                FrequencyRatio::irrational(num as f64 / den as f64 + add)?
            }
            None => FrequencyRatio::rational(num, den)?,
        };
        let d = CircleDynamics::new(a.alpha, ratio)?;
        let count = a
            .count
            .unwrap_or_else(|| ratio.period_steps().unwrap_or(100));
        report.param("system", "two-circle");
        report.param("q_num", num);
        report.param("q_den", den);
        report.param("q_irr_add", a.q_irr_add.as_deref().unwrap_or("0"));
        report.param("alpha", a.alpha);
        report.param("count", count);
        report.param("curve_samples", a.curve_samples);
        return circle_report(report, &d, count, a.curve_samples, tol);
    }
    torus(a, report)
}

fn torus(a: &OrbitArgs, mut report: Report) -> CmdResult {
    let (rho1, rho2) = match (&a.ratio, &a.rho1, &a.rho2) {
        (Some(r), None, None) if r == "golden" => (golden_rotation(), 1.0 - golden_rotation()),
        (Some(r), _, _) => {
            return Err(invalid(format!(
                "unknown --ratio '{r}' (expected golden, or --rho1/--rho2)"
            )))
        }
        (None, Some(r1), Some(r2)) => (
            parse_real(r1).map_err(invalid)?,
            parse_real(r2).map_err(invalid)?,
        ),
        _ => {
            return Err(invalid(
                "--torus needs --ratio golden or both --rho1 and --rho2",
            ))
        }
    };
    if !(a.tau > 0.0 && a.tau.is_finite()) {
        return Err(invalid("--tau must be positive"));
    }
    let (alpha1, alpha2) = (TAU * rho1 / a.tau, TAU * rho2 / a.tau);
    let orbit = simulate_torus(alpha1, alpha2, a.tau, a.steps, (a.start1, a.start2))?;
    report.param("system", "torus");
    report.param("rho1", rho1);
    report.param("rho2", rho2);
    report.param("tau", a.tau);
    report.param("steps", a.steps);
    report.param("start", format!("{} {}", a.start1, a.start2));

    let (gap1, gap2) = density_metrics(&orbit);
    let back = orbit.rewind();
    let start = orbit.start();
    let rewind_err = crate::orbits::circular_distance(back.0, start.0)
        .max(crate::orbits::circular_distance(back.1, start.1));
    let mut density = Table::new(
        "density",
        &[
            "steps",
            "max_gap_1",
            "max_gap_2",
            "mean_gap",
            "min_separation_1",
            "min_separation_2",
            "rewind_error",
        ],
    );
    let first: Vec<f64> = orbit.landings().iter().map(|p| p.0).collect();
    let second: Vec<f64> = orbit.landings().iter().map(|p| p.1).collect();
    density.push(vec![
        a.steps.into(),
        gap1.into(),
        gap2.into(),
        (TAU / a.steps as f64).into(),
        min_separation(&first).into(),
        min_separation(&second).into(),
        rewind_err.into(),
    ]);
    let mut residuals = residual_table();
    push_residual(
        &mut report,
        &mut residuals,
        "reversibility",
        rewind_err,
        1e-9,
    );
    report.tables.push(density);
    if a.dump_angles {
        let mut t = Table::new("angles", &["step", "phi1", "phi2"]);
        for (i, (p1, p2)) in orbit.angles.iter().enumerate() {
            t.push(vec![i.into(), (*p1).into(), (*p2).into()]);
        }
        report.tables.push(t);
    }
    report.tables.push(residuals);
    Ok(report)
}

pub fn cmd_schwinger(a: &SchwingerArgs, tol: f64) -> CmdResult {
    let space = build_two_mode(a.nmax)?;
    let mut report = Report::new("schwinger", tol);
    report.param("nmax", a.nmax);
    report.param("check", format!("{:?}", a.check).to_lowercase());
    let mut residuals = residual_table();
    let want = |c: CheckArg| a.check == CheckArg::All || a.check == c;

    if want(CheckArg::Casimir) {
        let cas = casimir_with_tolerance(&space, f64::INFINITY)?;
        push_residual(
            &mut report,
            &mut residuals,
            "Casimir L-form vs mode form",
            cas.residual,
            tol,
        );
    }
    if want(CheckArg::Sectors) {
        let decomposition = sector_decompose(&space);
        let mut t = Table::new("sectors", &["j", "k", "size", "residual"]);
        let mut worst: f64 = 0.0;
        for s in verify_sectors(&space, &decomposition)? {
            worst = worst.max(s.residual);
            let j = f64::from(s.twice_j) / 2.0;
            let k = f64::from(s.twice_j.unsigned_abs() + 1) / 2.0;
            t.push(vec![j.into(), k.into(), s.size.into(), s.residual.into()]);
        }
        push_residual(&mut report, &mut residuals, "sectors vs D+k", worst, tol);
        report.tables.push(t);
    }
    if want(CheckArg::Hamiltonian) {
        let p = DissipativeParams::new(a.big_omega, a.gamma)?;
        report.param("omega_big", p.big_omega);
        report.param("gamma", p.gamma);
        let h = dissipative_hamiltonian_with_tolerance(&space, &p, f64::INFINITY);
        if let Some(h) = absorb(&mut report, &mut residuals, h)? {
            push_residual(
                &mut report,
                &mut residuals,
                "H0 = 2 Omega C",
                h.h0_casimir_residual,
                tol,
            );
            push_residual(
                &mut report,
                &mut residuals,
                "HI = -2 Gamma L2",
                h.hi_l2_residual,
                tol,
            );
            push_residual(
                &mut report,
                &mut residuals,
                "[H0, HI] = 0",
                h.commutator_residual,
                tol,
            );
            push_residual(
                &mut report,
                &mut residuals,
                "H0, HI hermitian",
                h.hermiticity_defect,
                tol,
            );
        }
    }
    if want(CheckArg::L2) {
        let interior = a.interior.unwrap_or(a.nmax);
        report.param("interior", interior);
        let (r1, r2) = l2_relation_check(&space, interior)?;
        push_residual(&mut report, &mut residuals, "[L1,L3] = -i L2", r1, tol);
        push_residual(&mut report, &mut residuals, "[L1,[L1,L3]] = -L3", r2, tol);
        let mut diag = Table::new("l2_diagnostics", &["theta", "conjugation_residual"]);
        for theta in [0.5, 1.0] {
            diag.push(vec![
                theta.into(),
                conjugation_residual(&space, theta, interior)?.into(),
            ]);
        }
        diag.push(vec![
            (PI / 2.0).into(),
            l2_finite_form_residual(&space, interior)?.into(),
        ]);
        report.tables.push(diag);
    }
    if let Some(j) = a.sector {
        let twice = 2.0 * j;
        if (twice - twice.round()).abs() > 1e-9 || twice.round().abs() > a.nmax as f64 {
            return Err(invalid(format!(
                "sector j must be a half-integer with |j| <= {}/2",
                a.nmax
            )));
        }
        let twice_j = twice.round() as i32;
        report.param("sector", j);
        if a.dump {
            report.tables.push(sector_dump(&space, twice_j)?);
        }
    } else if a.dump {
        return Err(invalid("--dump needs --sector"));
    }
    report.tables.push(residuals);
    Ok(report)
}

/// `L₊ = A†B†` inside one sector next to the D⁺ₖ element `√((m+2k)(m+1))`.
fn sector_dump(space: &TwoModeSpace, twice_j: i32) -> Result<Table, CliError> {
    let decomposition = sector_decompose(space);
    let sector = decomposition
        .get(twice_j)
        .ok_or_else(|| invalid(format!("no sector with 2j = {twice_j}")))?;
    let k = sector.k().value();
    let mut t = Table::new(
        "sector_ladder",
        &[
            "m",
            "n_a",
            "n_b",
            "l3",
            "lplus_two_mode",
            "lplus_su11",
            "lplus_squared",
        ],
    );
    for (m, pair) in sector.indices.windows(2).enumerate() {
        let (from, to) = (pair[0], pair[1]);
        let (na, nb) = space.occupation(from);
        let two_mode = space.adag().product(space.bdag())?.get(to, from).re;
        let mf = m as f64;
        let single = ((mf + 2.0 * k) * (mf + 1.0)).sqrt();
        t.push(vec![
            m.into(),
            na.into(),
            nb.into(),
            space.l3().get(from, from).re.into(),
            two_mode.into(),
            single.into(),
            Value::Int(((na + 1) * (nb + 1)) as i64),
        ]);
    }
    Ok(t)
}
