//! Matrix representations of su(2), the su(1,1) discrete series D⁺ₖ and the
//! oscillator algebra h(1).
//!
//! Basis index `n = 0..dim-1` labels `|n⟩`; `L₊` sits on the first
//! subdiagonal (row `n+1`, column `n`). For su(2) the diagonal of `L₃` holds
//! `m = n - l`. For h(1) the `L₃` slot holds `N + 1/2`, so that `H/ω = L₃`.
//!
//! su(1,1) and h(1) are infinite dimensional and are truncated at a hard
//! cutoff; their defining relations hold only on the interior span
//! `{|0⟩, .., |dim-2⟩}`.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::operator::{commutator, max_abs_diff, OperatorMatrix, C64, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Su2 { l: HalfInt },
    Su11 { k: HalfInt },
    Heisenberg,
}

impl AlgebraKind {
    pub fn is_truncated(self) -> bool {
        !matches!(self, AlgebraKind::Su2 { .. })
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Su2 { l } => write!(f, "su(2) l={l}"),
            AlgebraKind::Su11 { k } => write!(f, "su(1,1) k={k}"),
            AlgebraKind::Heisenberg => write!(f, "h(1)"),
        }
    }
}

/// `L₃`, `L₊`, `L₋` of one representation on an explicit basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderRep {
    kind: AlgebraKind,
    l3: OperatorMatrix,
    lplus: OperatorMatrix,
    lminus: OperatorMatrix,
}

impl LadderRep {
    /// Assembles a rep from its diagonal and the raising coefficients
    /// `⟨n+1|L₊|n⟩` for `n = 0..dim-2`. `L₋` is the adjoint of `L₊`.
    fn from_ladder(kind: AlgebraKind, diag: &[f64], raise: &[f64]) -> Self {
        let dim = diag.len();
        debug_assert_eq!(raise.len() + 1, dim);
        let mut up = DMatrix::zeros(dim, dim);
        for (n, &c) in raise.iter().enumerate() {
            up[(n + 1, n)] = C64::new(c, 0.0);
        }
        let down = up.transpose();
        let (p, m) = match kind {
            AlgebraKind::Heisenberg => ("a†", "a"),
            _ => ("L+", "L-"),
        };
        Self {
            kind,
            l3: OperatorMatrix::diagonal("L3", diag),
            lplus: OperatorMatrix::from_parts(p, up),
            lminus: OperatorMatrix::from_parts(m, down),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.l3.dim()
    }

    pub fn l3(&self) -> &OperatorMatrix {
        &self.l3
    }

    pub fn lplus(&self) -> &OperatorMatrix {
        &self.lplus
    }

    pub fn lminus(&self) -> &OperatorMatrix {
        &self.lminus
    }

    /// Largest basis index for which the defining relations are exact.
    pub fn max_interior(&self) -> usize {
        if self.kind.is_truncated() {
            self.dim() - 1
        } else {
            self.dim()
        }
    }

    pub fn raising_coefficient(&self, n: usize) -> f64 {
        if n + 1 < self.dim() {
            self.lplus.get(n + 1, n).re
        } else {
            0.0
        }
    }

    pub fn lowering_coefficient(&self, n: usize) -> f64 {
        if n >= 1 && n < self.dim() {
            self.lminus.get(n - 1, n).re
        } else {
            0.0
        }
    }
}

/// Finite irrep of su(2) with `dim = 2l + 1`.
pub fn build_su2_rep(l: HalfInt) -> LadderRep {
    let two_l = f64::from(l.twice());
    let lv = l.value();
    let dim = l.twice() as usize + 1;
    let diag: Vec<f64> = (0..dim).map(|n| n as f64 - lv).collect();
    let raise: Vec<f64> = (0..dim - 1)
        .map(|n| {
            let n = n as f64;
            ((two_l - n) * (n + 1.0)).sqrt()
        })
        .collect();
    LadderRep::from_ladder(AlgebraKind::Su2 { l }, &diag, &raise)
}

/// D⁺ₖ truncated to the lowest `dim` weights.
pub fn build_su11_rep(k: HalfInt, dim: usize) -> Result<LadderRep> {
    if dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "truncation dim must be >= 2, got {dim}"
        )));
    }
    let kv = k.value();
    let diag: Vec<f64> = (0..dim).map(|n| n as f64 + kv).collect();
    let raise: Vec<f64> = (0..dim - 1)
        .map(|n| {
            let n = n as f64;
            ((n + 2.0 * kv) * (n + 1.0)).sqrt()
        })
        .collect();
    Ok(LadderRep::from_ladder(
        AlgebraKind::Su11 { k },
        &diag,
        &raise,
    ))
}

/// Truncated Fock representation of h(1); the `L₃` slot holds `N + 1/2`.
pub fn build_h1_rep(dim: usize) -> Result<LadderRep> {
    if dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "truncation dim must be >= 2, got {dim}"
        )));
    }
    let diag: Vec<f64> = (0..dim).map(|n| n as f64 + 0.5).collect();
    let raise: Vec<f64> = (1..dim).map(|n| (n as f64).sqrt()).collect();
    Ok(LadderRep::from_ladder(
        AlgebraKind::Heisenberg,
        &diag,
        &raise,
    ))
}

/// `L₁ = (L₊ + L₋)/2`, `L₂ = (L₊ - L₋)/(2i)`.
pub fn cartesian_generators(rep: &LadderRep) -> Result<(OperatorMatrix, OperatorMatrix)> {
    if rep.kind == AlgebraKind::Heisenberg {
        return Err(Error::UnsupportedKind {
            op: "cartesian_generators",
            kind: rep.kind.to_string(),
        });
    }
    let l1 = rep.lplus.add(&rep.lminus)?.scale_real(0.5).with_label("L1");
    let l2 = rep
        .lplus
        .sub(&rep.lminus)?
        .scale(C64::new(1.0, 0.0) / (2.0 * I))
        .with_label("L2");
    Ok((l1, l2))
}

/// Max residual of the defining commutators, projected on the first
/// `interior` basis states.
///
/// su(2): `[L₃,L₊] = L₊`, `[L₃,L₋] = -L₋`, `[L₊,L₋] = 2L₃`.
/// su(1,1): the same with `[L₊,L₋] = -2L₃`.
/// h(1): `[N,a†] = a†`, `[N,a] = -a`, `[a,a†] = 1`.
pub fn check_algebra_relations(rep: &LadderRep, interior: usize) -> Result<f64> {
    if interior == 0 || interior > rep.dim() {
        return Err(Error::OutOfRange(format!(
            "interior {interior} (dim {})",
            rep.dim()
        )));
    }
    let project = |op: OperatorMatrix| op.leading_block(interior);
    let (lp, lm, l3) = (&rep.lplus, &rep.lminus, &rep.l3);

    let raise = max_abs_diff(&project(commutator(l3, lp)?)?, &project(lp.clone())?)?;
    let lower = max_abs_diff(
        &project(commutator(l3, lm)?)?,
        &project(lm.scale_real(-1.0))?,
    )?;
    let closing = match rep.kind {
        AlgebraKind::Su2 { .. } => max_abs_diff(
            &project(commutator(lp, lm)?)?,
            &project(l3.scale_real(2.0))?,
        )?,
        AlgebraKind::Su11 { .. } => max_abs_diff(
            &project(commutator(lp, lm)?)?,
            &project(l3.scale_real(-2.0))?,
        )?,
        AlgebraKind::Heisenberg => max_abs_diff(
            &project(commutator(lm, lp)?)?,
            &OperatorMatrix::identity(interior),
        )?,
    };
    Ok(raise.max(lower).max(closing))
}
