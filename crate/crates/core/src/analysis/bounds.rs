use std::f64::consts::PI;

use super::twist::TwistRatio;
use crate::error::{Error, Result};

/// Volume of the regular ideal octahedron.
pub const V_OCT: f64 = 3.663_862_376_708_876;
/// Volume of the regular ideal tetrahedron.
pub const V_TET: f64 = 1.014_941_606_409_653_7;

/// Asymptotic bounds on the relative volume `vol(W(n+1,m)) / (mn)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeBounds {
    pub n: usize,
    /// `v_oct (n−1) / n`
    pub l_n: f64,
    /// `(v_oct (n−2) + 4 v_tet) / n`
    pub u_n: f64,
}

impl VolumeBounds {
    pub fn new(n: usize) -> Self {
        let nf = n as f64;
        VolumeBounds {
            n,
            l_n: V_OCT * (nf - 1.0) / nf,
            u_n: (V_OCT * (nf - 2.0) + 4.0 * V_TET) / nf,
        }
    }

    /// `L_n (1 − 4π²/m²)^{3/2}`, which is only a theorem for `m ≥ 7`.
    pub fn lower_plain(&self, m: usize) -> Option<f64> {
        (m >= 7).then(|| {
            let mf = m as f64;
            self.l_n * (1.0 - 4.0 * PI * PI / (mf * mf)).powf(1.5)
        })
    }
}

/// One refined pair of curves for a given ratio, alongside the plain bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCurves {
    pub m: usize,
    pub k: usize,
    pub variant: u8,
    pub lower_plain: Option<f64>,
    pub upper_plain: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Variants 1 and 2 use `δ = |1 − f_k|`, 3 and 4 use `δ = |1 − g_k|`:
/// `L¹ = L_n(1+δ)`, `U¹ = U_n(1−δ)`, `L² = L_n/(1−δ)`, `U² = U_n/(1+δ)`.
pub fn volume_bound_curves(
    n: usize,
    m: usize,
    ratio: &TwistRatio,
    variant: u8,
) -> Result<BoundCurves> {
    let vb = VolumeBounds::new(n);
    let dev = match variant {
        1 | 2 => (1.0 - ratio.f).abs(),
        3 | 4 => (1.0 - ratio.g).abs(),
        v => return Err(Error::BadVariant(v)),
    };
    let (lower, upper) = if variant % 2 == 1 {
        (vb.l_n * (1.0 + dev), vb.u_n * (1.0 - dev))
    } else {
        if 1.0 - dev <= 0.0 {
            return Err(Error::BoundDivision {
                variant,
                deviation: dev,
            });
        }
        (vb.l_n / (1.0 - dev), vb.u_n / (1.0 + dev))
    };
    Ok(BoundCurves {
        m,
        k: ratio.k,
        variant,
        lower_plain: vb.lower_plain(m),
        upper_plain: vb.u_n,
        lower,
        upper,
    })
}
