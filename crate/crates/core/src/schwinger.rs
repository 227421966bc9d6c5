//! Two-mode (Schwinger) realization of su(1,1) on a truncated `h(1)⊗h(1)`
//! Fock space:
//!
//! `L₊ = A†B†`, `L₋ = AB`, `L₃ = ½(A†A + B†B + 1)`.
//!
//! The Casimir `C² = ¼ + L₃² - ½(L₊L₋ + L₋L₊)` equals `¼(A†A - B†B)²`, so
//! the basis splits into sectors of fixed `j = (n_A - n_B)/2`; each sector
//! carries D⁺ₖ with `k = |j| + 1/2`. The dissipative Hamiltonian is
//! `H₀ + H_I` with `H₀ = Ω(A†A - B†B)` and `H_I = iΓ(A†B† - AB) = -2ΓL₂`.
//!
//! Truncation is per mode at `n_max`. The interior is the set of states with
//! `n_A, n_B < n_max`; only there do the infinite-dimensional identities
//! hold.

use std::f64::consts::FRAC_PI_2;

use crate::algebra::{build_h1_rep, build_su11_rep, AlgebraKind, LadderRep};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::operator::{commutator, matrix_exponential, OperatorMatrix, C64, EXACT_TOLERANCE, I};

/// Hermiticity tolerance for the assembled Hamiltonians.
pub const HERMITIAN_TOLERANCE: f64 = 1e-13;

/// Access to `L₃, L₊, L₋` of an su(1,1) realization plus its interior.
pub trait Su11Generators {
    fn l3(&self) -> &OperatorMatrix;
    fn lplus(&self) -> &OperatorMatrix;
    fn lminus(&self) -> &OperatorMatrix;
    /// Basis indices on which identities are checked.
    fn interior_indices(&self, interior: usize) -> Result<Vec<usize>>;
}

impl Su11Generators for LadderRep {
    fn l3(&self) -> &OperatorMatrix {
        LadderRep::l3(self)
    }

    fn lplus(&self) -> &OperatorMatrix {
        LadderRep::lplus(self)
    }

    fn lminus(&self) -> &OperatorMatrix {
        LadderRep::lminus(self)
    }

    fn interior_indices(&self, interior: usize) -> Result<Vec<usize>> {
        if !matches!(self.kind(), AlgebraKind::Su11 { .. }) {
            return Err(Error::UnsupportedKind {
                op: "su(1,1) generator checks",
                kind: self.kind().to_string(),
            });
        }
        if interior < 2 || interior > self.dim() - 1 {
            return Err(Error::OutOfRange(format!(
                "interior {interior} (dim {})",
                self.dim()
            )));
        }
        Ok((0..interior).collect())
    }
}

#[derive(Debug, Clone)]
pub struct TwoModeSpace {
    n_max: usize,
    a: OperatorMatrix,
    adag: OperatorMatrix,
    b: OperatorMatrix,
    bdag: OperatorMatrix,
    lplus: OperatorMatrix,
    lminus: OperatorMatrix,
    l3: OperatorMatrix,
}

impl Su11Generators for TwoModeSpace {
    fn l3(&self) -> &OperatorMatrix {
        &self.l3
    }

    fn lplus(&self) -> &OperatorMatrix {
        &self.lplus
    }

    fn lminus(&self) -> &OperatorMatrix {
        &self.lminus
    }

    /// States with `n_A, n_B < interior`.
    fn interior_indices(&self, interior: usize) -> Result<Vec<usize>> {
        if interior < 2 || interior > self.n_max {
            return Err(Error::OutOfRange(format!(
                "interior {interior} (n_max {})",
                self.n_max
            )));
        }
        Ok(self.states_below(interior))
    }
}

fn kron(left: &OperatorMatrix, right: &OperatorMatrix, label: &str) -> OperatorMatrix {
    OperatorMatrix::from_parts(label, left.entries().kronecker(right.entries()))
}

impl TwoModeSpace {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        (self.n_max + 1) * (self.n_max + 1)
    }

    pub fn index(&self, n_a: usize, n_b: usize) -> usize {
        debug_assert!(n_a <= self.n_max && n_b <= self.n_max);
        n_a * (self.n_max + 1) + n_b
    }

    pub fn occupation(&self, index: usize) -> (usize, usize) {
        (index / (self.n_max + 1), index % (self.n_max + 1))
    }

    pub fn a(&self) -> &OperatorMatrix {
        &self.a
    }

    pub fn adag(&self) -> &OperatorMatrix {
        &self.adag
    }

    pub fn b(&self) -> &OperatorMatrix {
        &self.b
    }

    pub fn bdag(&self) -> &OperatorMatrix {
        &self.bdag
    }

    /// Indices of the states with both occupations below `bound`.
    pub fn states_below(&self, bound: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| {
                let (na, nb) = self.occupation(i);
                na < bound && nb < bound
            })
            .collect()
    }

    /// Default interior: both occupations strictly below the cutoff.
    pub fn interior(&self) -> Vec<usize> {
        self.states_below(self.n_max)
    }

    pub fn number_a(&self) -> OperatorMatrix {
        self.adag
            .product(&self.a)
            .expect("same space")
            .with_label("A†A")
    }

    pub fn number_b(&self) -> OperatorMatrix {
        self.bdag
            .product(&self.b)
            .expect("same space")
            .with_label("B†B")
    }
}

pub fn build_two_mode(n_max: usize) -> Result<TwoModeSpace> {
    if n_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "per-mode cutoff must be >= 1, got {n_max}"
        )));
    }
    let mode = build_h1_rep(n_max + 1)?;
    let id = OperatorMatrix::identity(n_max + 1);
    let a = kron(mode.lminus(), &id, "A");
    let adag = kron(mode.lplus(), &id, "A†");
    let b = kron(&id, mode.lminus(), "B");
    let bdag = kron(&id, mode.lplus(), "B†");
    let lplus = adag.product(&bdag)?.with_label("L+");
    let lminus = a.product(&b)?.with_label("L-");
    let l3 = adag
        .product(&a)?
        .add(&bdag.product(&b)?)?
        .shift(C64::new(1.0, 0.0))
        .scale_real(0.5)
        .with_label("L3");
    Ok(TwoModeSpace {
        n_max,
        a,
        adag,
        b,
        bdag,
        lplus,
        lminus,
        l3,
    })
}

fn interior_diff(x: &OperatorMatrix, y: &OperatorMatrix, indices: &[usize]) -> Result<f64> {
    Ok(x.sub(y)?.restrict(indices)?.max_abs())
}

#[derive(Debug, Clone)]
pub struct Casimir {
    /// `¼ + L₃² - ½(L₊L₋ + L₋L₊)`
    pub squared: OperatorMatrix,
    /// `¼(A†A - B†B)²`
    pub squared_modes: OperatorMatrix,
    /// Nonnegative square root of the diagonal of `squared_modes`, which
    /// matches `squared` on the interior.
    pub c: OperatorMatrix,
    /// Max interior distance between the two forms of `C²`.
    pub residual: f64,
}

pub fn casimir(space: &TwoModeSpace) -> Result<Casimir> {
    casimir_with_tolerance(space, EXACT_TOLERANCE)
}

pub fn casimir_with_tolerance(space: &TwoModeSpace, tol: f64) -> Result<Casimir> {
    let (lp, lm, l3) = (&space.lplus, &space.lminus, &space.l3);
    let squared = l3
        .product(l3)?
        .shift(C64::new(0.25, 0.0))
        .sub(&lp.product(lm)?.add(&lm.product(lp)?)?.scale_real(0.5))?
        .with_label("C²");
    let imbalance = space.number_a().sub(&space.number_b())?;
    let squared_modes = imbalance
        .product(&imbalance)?
        .scale_real(0.25)
        .with_label("C² (modes)");
    let residual = interior_diff(&squared, &squared_modes, &space.interior())?;
    if residual > tol {
        return Err(Error::ToleranceBreach {
            check: "Casimir L-form vs mode form".into(),
            residual,
            tolerance: tol,
        });
    }
    let c = squared_modes.map_diagonal("C", |z| C64::new(z.re.max(0.0).sqrt(), 0.0));
    Ok(Casimir {
        squared,
        squared_modes,
        c,
        residual,
    })
}

/// Basis states with fixed `j = (n_A - n_B)/2`, ordered by ascending `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub twice_j: i32,
    pub indices: Vec<usize>,
}

impl Sector {
    pub fn j(&self) -> f64 {
        f64::from(self.twice_j) / 2.0
    }

    /// `k = |j| + 1/2`
    pub fn k(&self) -> HalfInt {
        HalfInt::from_twice(self.twice_j.unsigned_abs() + 1).expect("twice k >= 1")
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorDecomposition {
    /// Ordered by ascending `j`.
    pub sectors: Vec<Sector>,
}

impl SectorDecomposition {
    pub fn get(&self, twice_j: i32) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.twice_j == twice_j)
    }
}

pub fn sector_decompose(space: &TwoModeSpace) -> SectorDecomposition {
    let n = space.n_max as i32;
    let sectors = (-n..=n)
        .map(|twice_j| {
            // n_A - n_B = 2j; m = (n_A + n_B)/2 grows with n_B
            let indices = (0..=space.n_max)
                .filter_map(|n_b| {
                    let n_a = n_b as i32 + twice_j;
                    (0..=n)
                        .contains(&n_a)
                        .then(|| space.index(n_a as usize, n_b))
                })
                .collect();
            Sector { twice_j, indices }
        })
        .collect();
    SectorDecomposition { sectors }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorCheck {
    pub twice_j: i32,
    pub size: usize,
    pub residual: f64,
}

/// Compares each sector restriction of `L₃, L₊, L₋` with the directly built
/// D⁺ₖ, `k = |j| + 1/2`, on the sector interior (all but its top state).
pub fn verify_sectors(
    space: &TwoModeSpace,
    decomposition: &SectorDecomposition,
) -> Result<Vec<SectorCheck>> {
    decomposition
        .sectors
        .iter()
        .map(|sector| {
            let size = sector.len();
            let k = sector.k();
            let residual = if size < 2 {
                (space.l3.get(sector.indices[0], sector.indices[0]).re - k.value()).abs()
            } else {
                let interior = &sector.indices[..size - 1];
                let direct = build_su11_rep(k, size)?;
                let pairs = [
                    (&space.l3, direct.l3()),
                    (&space.lplus, direct.lplus()),
                    (&space.lminus, direct.lminus()),
                ];
                let mut worst: f64 = 0.0;
                for (two_mode, single) in pairs {
                    let restricted = two_mode.restrict(interior)?;
                    let reference = single.leading_block(size - 1)?;
                    worst = worst.max(restricted.sub(&reference)?.max_abs());
                }
                worst
            };
            Ok(SectorCheck {
                twice_j: sector.twice_j,
                size,
                residual,
            })
        })
        .collect()
}

/// `Ω`, `Γ`, with `ω = 2Γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DissipativeParams {
    pub big_omega: f64,
    pub gamma: f64,
}

impl DissipativeParams {
    pub fn new(big_omega: f64, gamma: f64) -> Result<Self> {
        if !big_omega.is_finite() || !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "need finite Omega and positive Gamma, got {big_omega}, {gamma}"
            )));
        }
        Ok(Self { big_omega, gamma })
    }

    pub fn omega(&self) -> f64 {
        2.0 * self.gamma
    }
}

#[derive(Debug, Clone)]
pub struct DissipativeHamiltonian {
    pub h0: OperatorMatrix,
    pub hi: OperatorMatrix,
    /// `‖H₀ - 2ΩC‖` over interior states with `j ≥ 0`.
    pub h0_casimir_residual: f64,
    /// `‖H_I + 2ΓL₂‖` over the interior.
    pub hi_l2_residual: f64,
    /// `‖[H₀, H_I]‖` over the interior.
    pub commutator_residual: f64,
    pub hermiticity_defect: f64,
}

/// `L₁ = (L₊ + L₋)/2`, `L₂ = (L₊ - L₋)/(2i)`.
pub fn generator_pair<G: Su11Generators + ?Sized>(
    g: &G,
) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let l1 = g.lplus().add(g.lminus())?.scale_real(0.5).with_label("L1");
    let l2 = g
        .lplus()
        .sub(g.lminus())?
        .scale(C64::new(1.0, 0.0) / (2.0 * I))
        .with_label("L2");
    Ok((l1, l2))
}

pub fn dissipative_hamiltonian(
    space: &TwoModeSpace,
    p: &DissipativeParams,
) -> Result<DissipativeHamiltonian> {
    dissipative_hamiltonian_with_tolerance(space, p, EXACT_TOLERANCE)
}

pub fn dissipative_hamiltonian_with_tolerance(
    space: &TwoModeSpace,
    p: &DissipativeParams,
    tol: f64,
) -> Result<DissipativeHamiltonian> {
    let h0 = space
        .number_a()
        .sub(&space.number_b())?
        .scale_real(p.big_omega)
        .with_label("H0");
    let hi = space
        .adag
        .product(&space.bdag)?
        .sub(&space.a.product(&space.b)?)?
        .scale(C64::new(0.0, p.gamma))
        .with_label("HI");

    let interior = space.interior();
    let non_negative_j: Vec<usize> = interior
        .iter()
        .copied()
        .filter(|&i| {
            let (na, nb) = space.occupation(i);
            na >= nb
        })
        .collect();
    let c = casimir_with_tolerance(space, tol)?.c;
    let h0_casimir_residual =
        interior_diff(&h0, &c.scale_real(2.0 * p.big_omega), &non_negative_j)?;

    let (_, l2) = generator_pair(space)?;
    let hi_l2_residual = interior_diff(&hi, &l2.scale_real(-2.0 * p.gamma), &interior)?;
    let commutator_residual = commutator(&h0, &hi)?.restrict(&interior)?.max_abs();
    let hermiticity_defect = h0.hermiticity_defect().max(hi.hermiticity_defect());

    for (check, residual, limit) in [
        ("H0 = 2 Omega C", h0_casimir_residual, tol),
        ("HI = -2 Gamma L2", hi_l2_residual, tol),
        ("H0, HI hermitian", hermiticity_defect, HERMITIAN_TOLERANCE),
    ] {
        if residual > limit {
            return Err(Error::ToleranceBreach {
                check: check.into(),
                residual,
                tolerance: limit,
            });
        }
    }
    Ok(DissipativeHamiltonian {
        h0,
        hi,
        h0_casimir_residual,
        hi_l2_residual,
        commutator_residual,
        hermiticity_defect,
    })
}

/// Infinitesimal form of `i e^{(π/2)L₁} L₃ e^{-(π/2)L₁} = L₂`:
/// returns `(‖[L₁,L₃] + iL₂‖, ‖[L₁,[L₁,L₃]] + L₃‖)` on the interior.
pub fn l2_relation_check<G: Su11Generators + ?Sized>(g: &G, interior: usize) -> Result<(f64, f64)> {
    let indices = g.interior_indices(interior)?;
    let (l1, l2) = generator_pair(g)?;
    let first = commutator(&l1, g.l3())?;
    let r1 = first.add(&l2.scale(I))?.restrict(&indices)?.max_abs();
    let second = commutator(&l1, &first)?;
    let r2 = second.add(g.l3())?.restrict(&indices)?.max_abs();
    Ok((r1, r2))
}

/// `‖e^{θL₁} L₃ e^{-θL₁} - (L₃ cos θ - iL₂ sin θ)‖` on the interior, with the
/// exponentials taken on the truncated space.
///
/// The truncated conjugation converges to the exact one as the cutoff grows
/// for `θ` up to about 1; at `θ = π/2` the residual grows with the cutoff.
pub fn conjugation_residual<G: Su11Generators + ?Sized>(
    g: &G,
    theta: f64,
    interior: usize,
) -> Result<f64> {
    let indices = g.interior_indices(interior)?;
    let (l1, l2) = generator_pair(g)?;
    let forward = matrix_exponential(&l1.scale_real(theta));
    let backward = matrix_exponential(&l1.scale_real(-theta));
    let conjugated = forward.product(g.l3())?.product(&backward)?;
    let rotated = g
        .l3()
        .scale_real(theta.cos())
        .sub(&l2.scale(I).scale_real(theta.sin()))?;
    interior_diff(&conjugated, &rotated, &indices)
}

/// Finite form `‖i e^{(π/2)L₁} L₃ e^{-(π/2)L₁} - L₂‖` on the interior.
///
/// `e^{(π/2)L₁}` is not unitary and the truncated conjugation does not
/// converge with the cutoff at this angle; the value is a diagnostic only.
pub fn l2_finite_form_residual<G: Su11Generators + ?Sized>(g: &G, interior: usize) -> Result<f64> {
    conjugation_residual(g, FRAC_PI_2, interior)
}
