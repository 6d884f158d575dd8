use crate::centrality::{Measure, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KatzParams {
    /// Attenuation per walk step; must satisfy `beta < 1 / rho(A)`.
    pub beta: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for KatzParams {
    fn default() -> Self {
        Self {
            beta: 0.01,
            tolerance: 1e-9,
            max_iterations: 1000,
        }
    }
}

/// Row sums of `sum_{j>=1} (beta A)^j`, i.e. attenuated counts of all walks
/// leaving each node. Iterates `x <- beta A (x + 1)` from `x = 0`.
pub fn katz_centrality(g: &Graph, params: &KatzParams) -> Result<ScoreVector> {
    let beta = params.beta;
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::invalid(format!("katz beta must lie in [0, 1), got {beta}")));
    }
    let n = g.node_count();
    if beta > 0.0 && beta * g.max_degree() as f64 >= 1.0 {
        // max degree bounds rho(A); only estimate when that bound is not enough
        let rho = spectral_radius(g)?;
        if beta * rho >= 1.0 {
            return Err(Error::invalid(format!(
                "katz beta {beta} exceeds 1/rho(A) = {:.6}",
                1.0 / rho
            )));
        }
    }

    let mut x = vec![0.0; n];
    let mut next = vec![0.0; n];
    for _ in 0..params.max_iterations {
        let mut residual: f64 = 0.0;
        for (u, slot) in next.iter_mut().enumerate() {
            let walk: f64 = g.neighbors(u).iter().map(|&w| x[w] + 1.0).sum();
            *slot = beta * walk;
            residual = residual.max((*slot - x[u]).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if residual < params.tolerance {
            return Ok(ScoreVector::new(Measure::Katz, x));
        }
    }
    let residual = x
        .iter()
        .zip(&next)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Err(Error::Convergence {
        measure: "katz",
        iterations: params.max_iterations,
        residual,
    })
}

/// Power iteration on `A + I`, whose dominant eigenvalue is `rho(A) + 1` and
/// is strictly dominant in modulus for non-negative `A`.
pub(crate) fn spectral_radius(g: &Graph) -> Result<f64> {
    const MAX_ITER: usize = 5000;
    const TOL: f64 = 1e-10;
    let n = g.node_count();
    if n == 0 || g.edge_count() == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / n as f64; n];
    let mut estimate = 0.0;
    for _ in 0..MAX_ITER {
        let mut y: Vec<f64> = (0..n)
            .map(|u| x[u] + g.neighbors(u).iter().map(|&w| x[w]).sum::<f64>())
            .collect();
        let norm: f64 = y.iter().sum();
        let next = norm - 1.0;
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        if (next - estimate).abs() <= TOL * next.max(1.0) {
            return Ok(next);
        }
        estimate = next;
    }
    // slow convergence still leaves a usable estimate from below; pad it
    Ok(estimate * (1.0 + 1e-6))
}
