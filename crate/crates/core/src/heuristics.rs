//! Policies for the number of switch attempts `w` between connectivity tests.
//!
//! * GMZ: `w + 1` after a passed test, `ceil(w / 2)` after a failed one.
//! * VL: multiply by `1 + q_plus` or `1 - q_minus`; by default
//!   `q_minus = q_plus / (e - 1)`.
//! * SB: `w = ceil(ln(alpha) / ln(rho_bar))`, where `rho_bar` is the mean of
//!   every `rho` reported so far, so that a test passes with probability
//!   about `alpha`.
//!
//! Every policy clamps `w` into `[1, cap]`.

use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: u64 = 10_000;
pub const DEFAULT_Q_PLUS: f64 = 0.1;
pub const DEFAULT_ALPHA: f64 = 0.1;

/// Slack for ceilings of products like `10 * 1.1`.
const CEIL_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HeuristicConfig {
    Gmz,
    Vl { q_plus: f64, q_minus: Option<f64> },
    Sb { alpha: f64 },
    /// Constant `w`; no adjustment.
    Fixed { w: u64 },
}

impl HeuristicConfig {
    pub fn vl(q_plus: f64) -> Self {
        HeuristicConfig::Vl { q_plus, q_minus: None }
    }

    pub fn needs_rho(&self) -> bool {
        matches!(self, HeuristicConfig::Sb { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            HeuristicConfig::Gmz => "gmz",
            HeuristicConfig::Vl { .. } => "vl",
            HeuristicConfig::Sb { .. } => "sb",
            HeuristicConfig::Fixed { .. } => "fixed",
        }
    }

    /// The tunable parameter (`q_plus`, `alpha`, or fixed `w`); GMZ has none.
    pub fn param(&self) -> Option<f64> {
        match *self {
            HeuristicConfig::Gmz => None,
            HeuristicConfig::Vl { q_plus, .. } => Some(q_plus),
            HeuristicConfig::Sb { alpha } => Some(alpha),
            HeuristicConfig::Fixed { w } => Some(w as f64),
        }
    }
}

impl fmt::Display for HeuristicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(p) => write!(f, "{}({p})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

pub fn default_q_minus(q_plus: f64) -> f64 {
    q_plus / (std::f64::consts::E - 1.0)
}

#[derive(Debug, Clone, PartialEq)]
enum Policy {
    Gmz,
    Vl { q_plus: f64, q_minus: f64, value: f64 },
    Sb { alpha: f64, rho_sum: f64, samples: u64 },
    Fixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicState {
    policy: Policy,
    w: u64,
    cap: u64,
}

impl HeuristicState {
    /// GMZ and VL start at `w = 1`. SB needs the `rho` of the starting graph
    /// so that its first `w` already follows the formula.
    pub fn new(config: HeuristicConfig, cap: u64, initial_rho: Option<f64>) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidHeuristic("cap W must be at least 1".into()));
        }
        let policy = match config {
            HeuristicConfig::Gmz => Policy::Gmz,
            HeuristicConfig::Vl { q_plus, q_minus } => {
                let q_minus = q_minus.unwrap_or_else(|| default_q_minus(q_plus));
                if !(q_plus > 0.0 && q_plus.is_finite()) {
                    return Err(Error::InvalidHeuristic(format!("q_plus must be positive, got {q_plus}")));
                }
                if !(q_minus > 0.0 && q_minus < 1.0) {
                    return Err(Error::InvalidHeuristic(format!("q_minus must lie in (0, 1), got {q_minus}")));
                }
                Policy::Vl { q_plus, q_minus, value: 1.0 }
            }
            HeuristicConfig::Sb { alpha } => {
                if !(alpha > 0.0 && alpha < 1.0) {
                    return Err(Error::InvalidHeuristic(format!("alpha must lie in (0, 1), got {alpha}")));
                }
                let rho = initial_rho
                    .ok_or_else(|| Error::InvalidHeuristic("SB needs the initial rho".into()))?;
                check_rho(rho)?;
                Policy::Sb { alpha, rho_sum: rho, samples: 1 }
            }
            HeuristicConfig::Fixed { w } => {
                if w == 0 || w > cap {
                    return Err(Error::InvalidHeuristic(format!("fixed w must lie in [1, {cap}], got {w}")));
                }
                return Ok(Self { policy: Policy::Fixed, w, cap });
            }
        };
        let mut state = Self { policy, w: 1, cap };
        if let Policy::Sb { alpha, rho_sum, samples } = state.policy {
            state.w = sb_budget(alpha, rho_sum / samples as f64, cap);
        }
        Ok(state)
    }

    pub fn gmz(cap: u64) -> Self {
        Self::new(HeuristicConfig::Gmz, cap, None).expect("valid")
    }

    #[inline]
    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Running mean of `rho` (SB only).
    pub fn rho_bar(&self) -> Option<f64> {
        match self.policy {
            Policy::Sb { rho_sum, samples, .. } => Some(rho_sum / samples as f64),
            _ => None,
        }
    }

    pub fn samples(&self) -> Option<u64> {
        match self.policy {
            Policy::Sb { samples, .. } => Some(samples),
            _ => None,
        }
    }

    /// Real-valued VL accumulator.
    pub fn vl_value(&self) -> Option<f64> {
        match self.policy {
            Policy::Vl { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn gmz_update(&mut self, success: bool) {
        debug_assert!(matches!(self.policy, Policy::Gmz));
        self.w = if success {
            (self.w + 1).min(self.cap)
        } else {
            self.w.div_ceil(2).max(1)
        };
    }

    pub fn vl_update(&mut self, success: bool) {
        let cap = self.cap;
        let Policy::Vl { q_plus, q_minus, value } = &mut self.policy else {
            panic!("vl_update on a non-VL state");
        };
        let factor = if success { 1.0 + *q_plus } else { 1.0 - *q_minus };
        *value = (*value * factor).clamp(1.0, cap as f64);
        self.w = ceil_clamped(*value, cap);
    }

    pub fn sb_update(&mut self, rho: f64) -> Result<()> {
        check_rho(rho)?;
        let cap = self.cap;
        let Policy::Sb { alpha, rho_sum, samples } = &mut self.policy else {
            panic!("sb_update on a non-SB state");
        };
        *rho_sum += rho;
        *samples += 1;
        self.w = sb_budget(*alpha, *rho_sum / *samples as f64, cap);
        Ok(())
    }

    /// Dispatches on the policy. SB ignores `success` and requires `rho`.
    pub fn update(&mut self, success: bool, rho: Option<f64>) -> Result<()> {
        match self.policy {
            Policy::Gmz => self.gmz_update(success),
            Policy::Vl { .. } => self.vl_update(success),
            Policy::Sb { .. } => {
                let rho = rho.ok_or_else(|| Error::InvalidHeuristic("SB update without rho".into()))?;
                self.sb_update(rho)?;
            }
            Policy::Fixed => {}
        }
        Ok(())
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidProbability(rho))
    }
}

fn ceil_clamped(x: f64, cap: u64) -> u64 {
    let c = (x - CEIL_EPS).ceil();
    if !(c < cap as f64) {
        cap
    } else if c < 1.0 {
        1
    } else {
        c as u64
    }
}

/// `clamp(ceil(ln(alpha) / ln(rho_bar)), 1, cap)`, with `cap` when
/// `rho_bar == 1`.
pub fn sb_budget(alpha: f64, rho_bar: f64, cap: u64) -> u64 {
    let denom = rho_bar.ln();
    if denom >= 0.0 {
        return cap;
    }
    ceil_clamped(alpha.ln() / denom, cap)
}
