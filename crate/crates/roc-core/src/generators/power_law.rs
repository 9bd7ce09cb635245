//! Discrete power-law (zeta) target sampling.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::substream;

/// Draws `n` independent targets with `Pr[t = k] proportional to k^-gamma`.
///
/// Requires `gamma > 2` so the distribution has a finite mean. Sampling is
/// by inversion-rejection (Devroye's method for the zeta distribution),
/// which follows the exact law with no truncation.
pub fn sample_power_law(n: usize, gamma: f64, seed: u64) -> Result<Vec<u64>> {
    if !gamma.is_finite() || gamma <= 2.0 {
        return Err(Error::InvalidParameter(format!(
            "power-law exponent must exceed 2 for a finite mean, got {gamma}"
        )));
    }
    let mut rng = substream(seed, 0);
    let exponent = gamma - 1.0;
    let b = 2f64.powf(exponent);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let value = loop {
            let u: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
            let x = u.powf(-1.0 / exponent).floor();
            if !x.is_finite() || x >= u64::MAX as f64 {
                continue;
            }
            debug_assert!(x >= 1.0);
            let t = (1.0 + 1.0 / x).powf(exponent);
            let v: f64 = rng.random();
            if v * x * (t - 1.0) / (b - 1.0) <= t / b {
                break x as u64;
            }
        };
        out.push(value);
    }
    Ok(out)
}
