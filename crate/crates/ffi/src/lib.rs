//! C ABI over `oscillab`.
//!
//! Every function returns an [`OslStatus`] and writes results through
//! out-pointers. Representations and two-mode spaces live behind opaque
//! handles that the caller releases with the matching `*_free`. On failure
//! a message is kept per thread and read back with
//! [`osl_last_error_message`].
//!
//! No function unwinds into C: panics are caught and reported as
//! [`OslStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use oscillab::algebra::{
    build_h1_rep, build_su11_rep, build_su2_rep, check_algebra_relations, LadderRep,
};
use oscillab::contraction::contraction_deviation;
use oscillab::evolution::{geometric_phase_check, spectrum_via_dft, EvolutionParams};
use oscillab::orbits::{density_metrics, simulate_torus, thooft_system, touch_points};
use oscillab::schwinger::{
    build_two_mode, casimir, dissipative_hamiltonian, l2_relation_check, sector_decompose,
    verify_sectors, DissipativeParams, TwoModeSpace,
};
use oscillab::{Error, HalfInt};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OslStatus {
    Ok = 0,
    InvalidArgument = 1,
    DimensionMismatch = 2,
    OutOfRange = 3,
    ToleranceBreach = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Selects one of the three ladder generators of a representation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OslGenerator {
    L3 = 0,
    Raise = 1,
    Lower = 2,
}

/// Opaque handle to a ladder representation.
pub struct OslRep(LadderRep);

/// Opaque handle to a truncated two-mode Fock space.
pub struct OslTwoMode(TwoModeSpace);

/// Residuals of the two-mode checks, all max-entry norms on the interior.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OslTwoModeResiduals {
    pub casimir: f64,
    pub sectors: f64,
    pub h0_casimir: f64,
    pub hi_l2: f64,
    pub h0_hi_commutator: f64,
    pub l2_first: f64,
    pub l2_second: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> OslStatus {
    match e {
        Error::InvalidParameter(_) | Error::NonFinite { .. } | Error::UnsupportedKind { .. } => {
            OslStatus::InvalidArgument
        }
        Error::DimensionMismatch { .. } | Error::NotSquare { .. } => OslStatus::DimensionMismatch,
        Error::OutOfRange(_) => OslStatus::OutOfRange,
        Error::ToleranceBreach { .. } => OslStatus::ToleranceBreach,
        Error::PhaseCollision(_) => OslStatus::Internal,
    }
}

fn fail(status: OslStatus, msg: &str) -> OslStatus {
    set_error(msg);
    status
}

fn lib_err(e: Error) -> OslStatus {
    fail(status_of(&e), &e.to_string())
}

/// Runs `f`, clearing the error slot on success and trapping panics.
fn guard(f: impl FnOnce() -> Result<(), OslStatus>) -> OslStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            OslStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(OslStatus::Internal, "internal panic"),
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), OslStatus> {
    if p.is_null() {
        Err(fail(OslStatus::NullPointer, &format!("{name} is null")))
    } else {
        Ok(())
    }
}

fn half(twice: u32) -> Result<HalfInt, OslStatus> {
    HalfInt::from_twice(twice).map_err(lib_err)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn osl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `osl_*` call on the same thread.
#[no_mangle]
pub extern "C" fn osl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

unsafe fn emit_rep(out: *mut *mut OslRep, rep: LadderRep) -> Result<(), OslStatus> {
    *out = Box::into_raw(Box::new(OslRep(rep)));
    Ok(())
}

/// su(2) irrep with label `l = twice_l / 2`.
///
/// # Safety
/// `out` must be valid for a pointer write. The handle written there is
/// released with [`osl_rep_free`].
#[no_mangle]
pub unsafe extern "C" fn osl_rep_su2(twice_l: u32, out: *mut *mut OslRep) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        emit_rep(out, build_su2_rep(half(twice_l)?))
    })
}

/// Truncated D⁺ₖ with `k = twice_k / 2` and `dim` basis states.
///
/// # Safety
/// As for [`osl_rep_su2`].
#[no_mangle]
pub unsafe extern "C" fn osl_rep_su11(
    twice_k: u32,
    dim: usize,
    out: *mut *mut OslRep,
) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        emit_rep(out, build_su11_rep(half(twice_k)?, dim).map_err(lib_err)?)
    })
}

/// Truncated oscillator with `dim` basis states.
///
/// # Safety
/// As for [`osl_rep_su2`].
#[no_mangle]
pub unsafe extern "C" fn osl_rep_h1(dim: usize, out: *mut *mut OslRep) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        emit_rep(out, build_h1_rep(dim).map_err(lib_err)?)
    })
}

/// # Safety
/// `rep` must be null or a handle from an `osl_rep_*` constructor that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn osl_rep_free(rep: *mut OslRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// # Safety
/// `rep` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn osl_rep_dim(rep: *const OslRep, out: *mut usize) -> OslStatus {
    guard(|| {
        non_null(rep, "rep")?;
        non_null(out, "out")?;
        *out = (*rep).0.dim();
        Ok(())
    })
}

/// Matrix element `⟨row|G|col⟩`.
///
/// # Safety
/// `rep` must be a live handle; `re` and `im` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osl_rep_element(
    rep: *const OslRep,
    generator: OslGenerator,
    row: usize,
    col: usize,
    re: *mut f64,
    im: *mut f64,
) -> OslStatus {
    guard(|| {
        non_null(rep, "rep")?;
        non_null(re, "re")?;
        non_null(im, "im")?;
        let rep = &(*rep).0;
        if row >= rep.dim() || col >= rep.dim() {
            return Err(fail(
                OslStatus::OutOfRange,
                &format!("element ({row}, {col}) outside dimension {}", rep.dim()),
            ));
        }
        let op = match generator {
            OslGenerator::L3 => rep.l3(),
            OslGenerator::Raise => rep.lplus(),
            OslGenerator::Lower => rep.lminus(),
        };
        let z = op.get(row, col);
        *re = z.re;
        *im = z.im;
        Ok(())
    })
}

/// Worst violation of the defining commutation relations on the leading
/// `interior` basis states.
///
/// # Safety
/// `rep` must be a live handle and `residual` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn osl_rep_check_relations(
    rep: *const OslRep,
    interior: usize,
    residual: *mut f64,
) -> OslStatus {
    guard(|| {
        non_null(rep, "rep")?;
        non_null(residual, "residual")?;
        *residual = check_algebra_relations(&(*rep).0, interior).map_err(lib_err)?;
        Ok(())
    })
}

/// `‖([a,a†] - 1)|n⟩‖` for the scaled ladders of an su(2) or su(1,1) rep.
///
/// # Safety
/// `rep` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn osl_contraction_deviation(
    rep: *const OslRep,
    n: usize,
    out: *mut f64,
) -> OslStatus {
    guard(|| {
        non_null(rep, "rep")?;
        non_null(out, "out")?;
        *out = contraction_deviation(&(*rep).0, n).map_err(lib_err)?;
        Ok(())
    })
}

/// Ascending energies of the `n_states`-state cyclic evolution with step
/// `tau`, written to `out[0..n_states]`.
///
/// # Safety
/// `out` must be valid for `len` writes of `f64`.
#[no_mangle]
pub unsafe extern "C" fn osl_evolution_energies(
    n_states: usize,
    tau: f64,
    out: *mut f64,
    len: usize,
) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        let p = EvolutionParams::new(n_states, tau).map_err(lib_err)?;
        if len < n_states {
            return Err(fail(
                OslStatus::BufferTooSmall,
                &format!("buffer holds {len}, need {n_states}"),
            ));
        }
        let energies = spectrum_via_dft(&p).map_err(lib_err)?.real_parts();
        std::slice::from_raw_parts_mut(out, n_states).copy_from_slice(&energies);
        Ok(())
    })
}

/// The scalar `φ` with `U^N = φ·1`.
///
/// # Safety
/// `re` and `im` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osl_geometric_phase(
    n_states: usize,
    re: *mut f64,
    im: *mut f64,
) -> OslStatus {
    guard(|| {
        non_null(re, "re")?;
        non_null(im, "im")?;
        let p = EvolutionParams::new(n_states, 1.0).map_err(lib_err)?;
        let phi = geometric_phase_check(&p).map_err(lib_err)?;
        *re = phi.re;
        *im = phi.im;
        Ok(())
    })
}

/// Touch angles `θ_1..θ_count` of the `n_sites` circle system, in `[0, 2π)`.
///
/// # Safety
/// `out` must be valid for `count` writes of `f64`.
#[no_mangle]
pub unsafe extern "C" fn osl_thooft_touch_angles(
    n_sites: u64,
    out: *mut f64,
    count: usize,
) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        let d = thooft_system(n_sites).map_err(lib_err)?;
        let angles = touch_points(&d, count as u64).map_err(lib_err)?.angles();
        std::slice::from_raw_parts_mut(out, count).copy_from_slice(&angles);
        Ok(())
    })
}

/// Largest circular gap on each circle after `steps` torus jumps.
///
/// # Safety
/// `gap1` and `gap2` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osl_torus_max_gaps(
    alpha1: f64,
    alpha2: f64,
    tau: f64,
    steps: usize,
    start1: f64,
    start2: f64,
    gap1: *mut f64,
    gap2: *mut f64,
) -> OslStatus {
    guard(|| {
        non_null(gap1, "gap1")?;
        non_null(gap2, "gap2")?;
        let orbit =
            simulate_torus(alpha1, alpha2, tau, steps, (start1, start2)).map_err(lib_err)?;
        let (g1, g2) = density_metrics(&orbit);
        *gap1 = g1;
        *gap2 = g2;
        Ok(())
    })
}

/// Two-mode space with occupations `0..=n_max` per mode.
///
/// # Safety
/// `out` must be valid for a pointer write; release with
/// [`osl_two_mode_free`].
#[no_mangle]
pub unsafe extern "C" fn osl_two_mode_new(n_max: usize, out: *mut *mut OslTwoMode) -> OslStatus {
    guard(|| {
        non_null(out, "out")?;
        let space = build_two_mode(n_max).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(OslTwoMode(space)));
        Ok(())
    })
}

/// # Safety
/// `space` must be null or a live handle from [`osl_two_mode_new`].
#[no_mangle]
pub unsafe extern "C" fn osl_two_mode_free(space: *mut OslTwoMode) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Runs the Casimir, sector, Hamiltonian and L₂ checks. Returns
/// `ToleranceBreach` when the library rejects a residual outright; the
/// filled residuals are then unspecified.
///
/// # Safety
/// `space` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn osl_two_mode_check(
    space: *const OslTwoMode,
    big_omega: f64,
    gamma: f64,
    out: *mut OslTwoModeResiduals,
) -> OslStatus {
    guard(|| {
        non_null(space, "space")?;
        non_null(out, "out")?;
        let space = &(*space).0;
        let params = DissipativeParams::new(big_omega, gamma).map_err(lib_err)?;
        let cas = casimir(space).map_err(lib_err)?;
        let sectors = verify_sectors(space, &sector_decompose(space))
            .map_err(lib_err)?
            .iter()
            .map(|c| c.residual)
            .fold(0.0, f64::max);
        let ham = dissipative_hamiltonian(space, &params).map_err(lib_err)?;
        let (l2_first, l2_second) = if space.n_max() >= 2 {
            l2_relation_check(space, space.n_max()).map_err(lib_err)?
        } else {
            (0.0, 0.0)
        };
        *out = OslTwoModeResiduals {
            casimir: cas.residual,
            sectors,
            h0_casimir: ham.h0_casimir_residual,
            hi_l2: ham.hi_l2_residual,
            h0_hi_commutator: ham.commutator_residual,
            l2_first,
            l2_second,
        };
        Ok(())
    })
}
