//! Finite-size evaluation of the connectivity threshold inequalities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::RocParams;

/// Evaluation of the isolation-threshold inequalities at one parameter
/// point. All fields are pure functions of `(n, d, s, q, c, epsilon)`.
#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    pub n: usize,
    pub d: f64,
    pub s: f64,
    pub q: f64,
    pub c: f64,
    pub epsilon: f64,
    /// `(s-1) q (ln n + c) <= d`
    pub isolated_vertex_lower_ok: bool,
    /// `d <= (s-1) q e^{sq} (1 - epsilon)`
    pub isolated_vertex_upper_ok: bool,
    /// `e^{-c} / (1 - epsilon)`, the expected isolated-vertex bound when
    /// both inequalities hold.
    pub expected_isolated_bound: f64,
    /// `d/q > ln(n d / (s^2 q))`: no community is expected to stay disjoint
    /// from all others.
    pub community_isolation_ok: bool,
    /// `d > s q ln(n d / s)`: degrees below 2 are not expected.
    pub degree_lt2_ok: bool,
}

/// Evaluates each threshold inequality exactly as stated, at finite size.
pub fn connectivity_report(params: &RocParams, c: f64, epsilon: f64) -> Result<ConnectivityReport> {
    if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be in (0, 1), got {epsilon}"
        )));
    }
    if !c.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "threshold offset c must be finite, got {c}"
        )));
    }
    let (n, d, s, q) = (params.n as f64, params.d, params.s, params.q);
    Ok(ConnectivityReport {
        n: params.n,
        d,
        s,
        q,
        c,
        epsilon,
        isolated_vertex_lower_ok: (s - 1.0) * q * (n.ln() + c) <= d,
        isolated_vertex_upper_ok: d <= (s - 1.0) * q * (s * q).exp() * (1.0 - epsilon),
        expected_isolated_bound: (-c).exp() / (1.0 - epsilon),
        community_isolation_ok: d / q > (n * d / (s * s * q)).ln(),
        degree_lt2_ok: d > s * q * (n * d / s).ln(),
    })
}
