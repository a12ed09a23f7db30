//! The weighted power mean `phi(a, x) = (w a^p + (1 - w) x^p)^(1/p)` and its
//! inverse in the second argument.

use serde::{Deserialize, Serialize};

use crate::error::{FreError, Result};
use crate::CLASSIFY_EPS;

/// Operator parameters `(w, p)` with `0 < w < 1` and `0 < p < inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct WpmParams {
    w: f64,
    p: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    w: f64,
    p: f64,
}

impl TryFrom<RawParams> for WpmParams {
    type Error = FreError;

    fn try_from(raw: RawParams) -> Result<Self> {
        WpmParams::new(raw.w, raw.p)
    }
}

impl From<WpmParams> for RawParams {
    fn from(params: WpmParams) -> Self {
        RawParams {
            w: params.w,
            p: params.p,
        }
    }
}

impl WpmParams {
    pub fn new(w: f64, p: f64) -> Result<Self> {
        if !(w > 0.0 && w < 1.0) {
            return Err(FreError::Params(format!("w = {w} must lie in (0, 1)")));
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(FreError::Params(format!(
                "p = {p} must be strictly positive and finite"
            )));
        }
        Ok(WpmParams { w, p })
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    #[inline]
    pub(crate) fn pow(&self, t: f64) -> f64 {
        t.powf(self.p)
    }

    #[inline]
    pub(crate) fn root(&self, t: f64) -> f64 {
        t.powf(1.0 / self.p)
    }

    /// `phi(a, x)`. Both arguments are expected in `[0, 1]`.
    #[inline]
    pub fn phi(&self, a: f64, x: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&a) && (0.0..=1.0).contains(&x));
        self.root(self.w * self.pow(a) + (1.0 - self.w) * self.pow(x))
    }

    /// `b / w^(1/p)`: entries above this value make a row unsatisfiable.
    pub fn upper_threshold(&self, b: f64) -> f64 {
        b / self.root(self.w)
    }

    /// `((b^p + w - 1) / w)^(1/p)` when `b^p >= 1 - w`; entries below it can
    /// never reach `b`. `None` when `b^p < 1 - w`, where every entry can.
    pub fn lower_threshold(&self, b: f64) -> Option<f64> {
        let bp = self.pow(b);
        if bp >= 1.0 - self.w {
            Some(self.root((bp + self.w - 1.0) / self.w))
        } else {
            None
        }
    }

    /// The unique `x` in `[0, 1]` with `phi(a, x) = b`.
    ///
    /// Fails with [`FreError::NoSolution`] when `a` is above the upper
    /// threshold or below the lower threshold of `b` (outside the classifier's
    /// tolerance band). Inside the band the result is clamped into `[0, 1]`.
    pub fn phi_inverse_x(&self, a: f64, b: f64) -> Result<f64> {
        let too_large = a > self.upper_threshold(b) + CLASSIFY_EPS;
        let too_small = matches!(self.lower_threshold(b), Some(t) if a < t - CLASSIFY_EPS);
        if too_large || too_small {
            return Err(FreError::NoSolution { a, b });
        }
        let base = (self.pow(b) - self.w * self.pow(a)) / (1.0 - self.w);
        Ok(self.root(base.max(0.0)).min(1.0))
    }
}

/// `max_j phi(a_row[j], x[j])`.
pub fn row_composition(a_row: &[f64], x: &[f64], params: &WpmParams) -> Result<f64> {
    if a_row.is_empty() {
        return Err(FreError::Dimension("empty row".into()));
    }
    if a_row.len() != x.len() {
        return Err(FreError::Dimension(format!(
            "row has {} entries but x has {}",
            a_row.len(),
            x.len()
        )));
    }
    Ok(a_row
        .iter()
        .zip(x)
        .map(|(&a, &xj)| params.phi(a, xj))
        .fold(f64::NEG_INFINITY, f64::max))
}
