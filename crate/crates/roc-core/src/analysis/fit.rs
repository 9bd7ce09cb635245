//! Inverting the ratio laws: recover `(s, q)` from target triangle and
//! four-cycle ratios, or from a target clustering coefficient.

use serde::Serialize;

use crate::error::{Error, Result};

/// Outcome class of the ratio inversion.
///
/// - `exact`: `9 r3^2 <= 4 r4`, both ratios are matched simultaneously.
/// - `approximate`: `3 r3 (3 r3 - 1) <= 4 r4 < 9 r3^2`, the triangle ratio
///   is matched and the four-cycle ratio is off by at most `3 r3 / 4`.
/// - `infeasible`: `4 r4 < 3 r3 (3 r3 - 1)`, no graph has this ratio pair.
///
/// Boundary ties go to the less restrictive regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Exact,
    Approximate,
    Infeasible,
}

/// Fitted model parameters with the regime tag and error bound.
#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub regime: Regime,
    pub s: Option<f64>,
    pub q: Option<f64>,
    /// Four-cycle ratio the fitted parameters actually produce.
    pub r4_achieved: Option<f64>,
    /// Bound on `|r4_achieved - r4|`; zero in the exact regime.
    pub r4_error_bound: Option<f64>,
    pub warnings: Vec<String>,
}

/// Fits `(s, q)` to target ratios `r3` and `r4`.
///
/// Exact regime: `s = 16 r4^2 / (27 r3^3)`, `q = 9 r3^2 / (4 r4)`.
/// Approximate regime: `q = 1`, `s = 3 r3`, achieving `r4 = 9 r3^2 / 4`.
pub fn fit_roc(r3: f64, r4: f64) -> Result<FitResult> {
    if !r3.is_finite() || r3 <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "triangle ratio must be positive (got {r3}); for vanishing \
             triangle density use an independent-pairs graph instead"
        )));
    }
    if !r4.is_finite() || r4 < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "four-cycle ratio must be nonnegative, got {r4}"
        )));
    }

    let mut warnings = Vec::new();
    let result = if 9.0 * r3 * r3 <= 4.0 * r4 {
        let s = 16.0 * r4 * r4 / (27.0 * r3 * r3 * r3);
        let q = 9.0 * r3 * r3 / (4.0 * r4);
        if s < 2.0 {
            warnings.push(format!(
                "fitted community size s = {s} is below 2; the ratio laws \
                 assume large communities"
            ));
        }
        FitResult {
            regime: Regime::Exact,
            s: Some(s),
            q: Some(q),
            r4_achieved: Some(r4),
            r4_error_bound: Some(0.0),
            warnings,
        }
    } else if 3.0 * r3 * (3.0 * r3 - 1.0) <= 4.0 * r4 {
        let s = 3.0 * r3;
        if s < 2.0 {
            warnings.push(format!(
                "fitted community size s = {s} is below 2; the ratio laws \
                 assume large communities"
            ));
        }
        FitResult {
            regime: Regime::Approximate,
            s: Some(s),
            q: Some(1.0),
            r4_achieved: Some(9.0 * r3 * r3 / 4.0),
            r4_error_bound: Some(3.0 * r3 / 4.0),
            warnings,
        }
    } else {
        FitResult {
            regime: Regime::Infeasible,
            s: None,
            q: None,
            r4_achieved: None,
            r4_error_bound: None,
            warnings,
        }
    };
    Ok(result)
}

/// Which parameter is held fixed when inverting the clustering law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClusteringPin {
    /// Solve for `q` with `s` fixed.
    CommunitySize(f64),
    /// Solve for `s` with `q` fixed.
    Density(f64),
}

/// A solved `(s, q)` pair from the clustering inversion.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClusteringFit {
    pub s: f64,
    pub q: f64,
}

/// Solves `s * q^2 = target_cc * d` for the free parameter.
pub fn fit_roc_clustering(d: f64, target_cc: f64, pin: ClusteringPin) -> Result<ClusteringFit> {
    if !d.is_finite() || d <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "expected degree must be positive, got {d}"
        )));
    }
    if !target_cc.is_finite() || target_cc <= 0.0 || target_cc >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "target clustering must be in (0, 1), got {target_cc}"
        )));
    }
    let product = target_cc * d; // = s q^2
    match pin {
        ClusteringPin::Density(q) => {
            if !q.is_finite() || q <= 0.0 || q > 1.0 {
                return Err(Error::InvalidParameter(format!(
                    "pinned density must be in (0, 1], got {q}"
                )));
            }
            let s = product / (q * q);
            if s < 2.0 {
                let q_max = (product / 2.0).sqrt().min(1.0);
                return Err(Error::Unsolvable(format!(
                    "pinned q = {q} gives community size s = {s} below 2; \
                     feasible q interval is (0, {q_max:.6}]"
                )));
            }
            Ok(ClusteringFit { s, q })
        }
        ClusteringPin::CommunitySize(s) => {
            if !s.is_finite() || s < 2.0 {
                return Err(Error::InvalidParameter(format!(
                    "pinned community size must be at least 2, got {s}"
                )));
            }
            let q = (product / s).sqrt();
            if q > 1.0 {
                let s_min = product.max(2.0);
                return Err(Error::Unsolvable(format!(
                    "pinned s = {s} needs density q = {q} above 1; \
                     feasible s interval is [{s_min:.6}, inf)"
                )));
            }
            Ok(ClusteringFit { s, q })
        }
    }
}
