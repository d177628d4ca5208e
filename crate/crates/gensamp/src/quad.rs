//! Gauss-Legendre rules and the panel-doubling adaptive integrator.
//!
//! The adaptive integrator starts from a composite rule whose panel count
//! is proportional to 1 + the caller's oscillation hint, then doubles the
//! panel count until two successive estimates agree to `rel_tol`
//! (relative), with a hard cap of 2^20 nodes.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Nodes and weights on the reference interval [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn legendre_pair(q: usize, x: f64) -> (f64, f64) {
    // P_q(x) and P_q'(x) by the three-term recurrence
    let mut p0 = 1.0;
    let mut p1 = x;
    if q == 0 {
        return (1.0, 0.0);
    }
    for k in 1..q {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = q as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn compute_gauss(q: usize) -> GaussRule {
    assert!(q >= 1);
    let mut nodes = vec![0.0; q];
    let mut weights = vec![0.0; q];
    let half = q.div_ceil(2);
    for i in 0..half {
        // Newton iteration from the Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(q, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(q, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        weights[i] = w;
        nodes[q - 1 - i] = x.abs();
        weights[q - 1 - i] = w;
    }
    if q % 2 == 1 {
        nodes[q / 2] = 0.0;
        let (_, dp) = legendre_pair(q, 0.0);
        weights[q / 2] = 2.0 / (dp * dp);
    }
    GaussRule { nodes, weights }
}

fn rule_cache() -> &'static RwLock<HashMap<usize, Arc<GaussRule>>> {
    static CACHE: std::sync::OnceLock<RwLock<HashMap<usize, Arc<GaussRule>>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Cached Gauss-Legendre rule with `q` nodes.
pub fn gauss_rule(q: usize) -> Arc<GaussRule> {
    if let Some(r) = rule_cache().read().unwrap().get(&q) {
        return r.clone();
    }
    let rule = Arc::new(compute_gauss(q));
    rule_cache().write().unwrap().insert(q, rule.clone());
    rule
}

/// Total node budget for the adaptive integrator.
pub const MAX_NODES: usize = 1 << 20;

const NODES_PER_PANEL: usize = 12;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: Complex64,
    /// Integral of |f| on the same grid, used for absolute floors.
    pub l1: f64,
    /// Panel count of the accepted estimate.
    pub panels: usize,
}

fn composite(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, panels: usize) -> (Complex64, f64) {
    let rule = gauss_rule(NODES_PER_PANEL);
    let h = (b - a) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut l1 = 0.0;
    for p in 0..panels {
        let c = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(c + half * x);
            let wh = w * half;
            acc += wh * v;
            l1 += wh * v.norm();
        }
    }
    (acc, l1)
}

/// Integrate `f` over [a, b] by panel doubling.
///
/// `freq_hint` is the largest oscillation frequency expected of the
/// integrand in periods over the whole interval; the initial panel count
/// is 1 + that. Convergence: |I_2p - I_p| <= max(rel_tol |I_2p|,
/// abs_floor, 1e-15 * L1) where L1 is the on-grid integral of |f|.
pub fn integrate(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    freq_hint: f64,
    rel_tol: f64,
    abs_floor: f64,
) -> Result<QuadOutcome> {
    let mut panels = (1.0 + freq_hint.max(0.0)).ceil() as usize;
    panels = panels.clamp(1, MAX_NODES / (2 * NODES_PER_PANEL));
    let (mut prev, _) = composite(f, a, b, panels);
    loop {
        let next_panels = panels * 2;
        if next_panels * NODES_PER_PANEL > MAX_NODES {
            return Err(Error::QuadratureAccuracy {
                prev,
                last: composite(f, a, b, panels).0,
            });
        }
        let (cur, l1) = composite(f, a, b, next_panels);
        let diff = (cur - prev).norm();
        let tol = (rel_tol * cur.norm()).max(abs_floor).max(1e-15 * l1);
        if diff <= tol {
            return Ok(QuadOutcome {
                value: cur,
                l1,
                panels: next_panels,
            });
        }
        prev = cur;
        panels = next_panels;
    }
}

/// Default relative tolerance used by the converged-quadrature oracle.
pub const DEFAULT_REL_TOL: f64 = 1e-13;
