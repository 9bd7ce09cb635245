//! Closed-form motif and clustering predictors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{DrocSpec, RocParams};

/// Flags raised when parameters leave the regime in which the closed forms
/// are good approximations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeWarning {
    /// `d^2 >= n`: the triangle-ratio law assumes the degree is well below
    /// sqrt(n).
    TriangleDegree,
    /// `d^3 >= n`: the four-cycle-ratio law assumes the degree is well
    /// below n^(1/3).
    FourCycleDegree,
    /// `s*q >= d`: the clustering law assumes the within-community degree
    /// is small next to the total degree.
    ClusteringCommunityDegree,
}

impl std::fmt::Display for RegimeWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            RegimeWarning::TriangleDegree => "triangle-degree",
            RegimeWarning::FourCycleDegree => "four-cycle-degree",
            RegimeWarning::ClusteringCommunityDegree => "clustering-community-degree",
        };
        f.write_str(text)
    }
}

/// Predicted motif ratios and clustering for the overlapping-communities
/// model: `r3 = s*q^2/3`, `r4 = s^2*q^3/4`, `cc = s*q^2/d`.
#[derive(Debug, Clone, Serialize)]
pub struct Prediction {
    pub r3_pred: f64,
    pub r4_pred: f64,
    pub cc_pred: f64,
    pub regime_warnings: Vec<RegimeWarning>,
    /// Finite-size clustering value from the membership-count series; filled
    /// by [`predict_roc_stats_exact`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cc_exact_series: Option<f64>,
}

/// The ratio laws on their own: `(s*q^2/3, s^2*q^3/4)`.
///
/// Exposed separately so fitted parameters can be pushed back through the
/// forward map even when they fall outside generator-valid ranges.
pub fn ratio_laws(s: f64, q: f64) -> (f64, f64) {
    (s * q * q / 3.0, s * s * q * q * q / 4.0)
}

/// Evaluates the three closed forms with regime warnings.
pub fn predict_roc_stats(params: &RocParams) -> Prediction {
    let (d, s, q, n) = (params.d, params.s, params.q, params.n as f64);
    let mut regime_warnings = Vec::new();
    if d * d >= n {
        regime_warnings.push(RegimeWarning::TriangleDegree);
    }
    if d * d * d >= n {
        regime_warnings.push(RegimeWarning::FourCycleDegree);
    }
    if s * q >= d {
        regime_warnings.push(RegimeWarning::ClusteringCommunityDegree);
    }
    let (r3_pred, r4_pred) = ratio_laws(s, q);
    Prediction {
        r3_pred,
        r4_pred,
        cc_pred: s * q * q / d,
        regime_warnings,
        cc_exact_series: None,
    }
}

/// Like [`predict_roc_stats`] but also evaluates the exact finite-size
/// clustering series for cross-checking `s*q^2/d`.
pub fn predict_roc_stats_exact(params: &RocParams) -> Prediction {
    let mut prediction = predict_roc_stats(params);
    prediction.cc_exact_series = Some(clustering_exact_series(params));
    prediction
}

/// Expected clustering as a binomial mixture over the number of communities
/// a vertex joins: sum over k of `P[M = k] * s*(s-1)*q^3*k / (s*q*k + 2 - 2q)^2`
/// with `M ~ Bin(K, s/n)`, truncated at the round count `K`.
fn clustering_exact_series(params: &RocParams) -> f64 {
    let rounds = params.community_rounds();
    let p = params.s / params.n as f64;
    let (s, q) = (params.s, params.q);
    let conditional = |k: f64| s * (s - 1.0) * q.powi(3) * k / (s * q * k + 2.0 - 2.0 * q).powi(2);
    if p >= 1.0 {
        // s = n: every vertex joins every round
        return conditional(rounds as f64);
    }
    // binomial pmf tracked in log space to survive large round counts
    let log_ratio = p.ln() - (1.0 - p).ln();
    let mut log_pmf = rounds as f64 * (1.0 - p).ln();
    let mut total = 0.0;
    for k in 1..=rounds {
        let kk = k as f64;
        log_pmf += ((rounds - k + 1) as f64 / kk).ln() + log_ratio;
        let pmf = log_pmf.exp();
        total += pmf * conditional(kk);
        if pmf < 1e-18 && kk > rounds as f64 * p {
            break;
        }
    }
    total
}

/// Predicted clustering interval for the degree-targeted model.
///
/// The closed form carries a target-dependent constant in `[0, 6.2)`; the
/// interval spans both endpoints.
#[derive(Debug, Clone, Serialize)]
pub struct DrocCcPrediction {
    pub lo: f64,
    pub hi: f64,
}

/// Evaluates `(sum_u t(u)^2)^2 / (d^3 n^2 s) * ((1 - e^-t)^2 q^2 + c q^3)`
/// at `c = 0` and `c = 6.2` for a vertex with target degree `t`.
pub fn droc_predict_cc(spec: &DrocSpec, t: f64) -> Result<DrocCcPrediction> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "target degree must be positive, got {t}"
        )));
    }
    let sum_sq: f64 = spec.targets().iter().map(|x| x * x).sum();
    let d = spec.mean_target();
    let n = spec.n() as f64;
    let (s, q) = (spec.s(), spec.q());
    let base = sum_sq * sum_sq / (d.powi(3) * n * n * s);
    let lo = base * (1.0 - (-t).exp()).powi(2) * q * q;
    let hi = lo + base * 6.2 * q.powi(3);
    Ok(DrocCcPrediction { lo, hi })
}
