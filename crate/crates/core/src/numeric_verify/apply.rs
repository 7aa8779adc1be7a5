//! Applying a numeric operator `Σ c x^p D^q` to sampled functions.

use crate::error::{Error, Result};
use crate::operator_algebra::NumericOperator;

use super::grid::GridFunction;

/// Highest derivative order with a finite-difference stencil.
pub const MAX_FD_ORDER: u32 = 4;

/// Fornberg weights for the `order`-th derivative at offset 0 from nodes
/// at integer `offsets` (in units of `h`). Returns weights before the
/// `1/h^order` scaling.
pub fn fd_weights(offsets: &[i32], order: usize) -> Vec<f64> {
    let n = offsets.len();
    let z: Vec<f64> = offsets.iter().map(|&o| f64::from(o)).collect();
    // c[i][k]: weight of node i for derivative k
    let mut c = vec![vec![0.0; order + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = z[0];
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = z[i];
        for j in 0..i {
            let c3 = z[i] - z[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order]).collect()
}

/// Stencil offsets for derivative `order` at node `i` of `n`, fourth-order
/// accurate: symmetric in the interior, shifted one-sided near the ends.
fn stencil_offsets(order: u32, i: usize, n: usize) -> Vec<i32> {
    let symmetric_width = if order.is_multiple_of(2) { order + 3 } else { order + 4 } as usize;
    let half = symmetric_width / 2;
    if i >= half && i + half < n {
        return (-(half as i32)..=half as i32).collect();
    }
    let width = (order + 4) as usize;
    let start = if i < half { 0 } else { n - width };
    (start..start + width).map(|k| k as i32 - i as i32).collect()
}

/// Finite-difference derivative of sampled values.
pub fn fd_derivative(f: &GridFunction, order: u32) -> Result<Vec<f64>> {
    if order > MAX_FD_ORDER {
        return Err(Error::StencilUnsupported(order));
    }
    if order == 0 {
        return Ok(f.values.clone());
    }
    let n = f.values.len();
    let h = f.grid.spacing();
    let scale = h.powi(order as i32);
    Ok((0..n)
        .map(|i| {
            let offs = stencil_offsets(order, i, n);
            let w = fd_weights(&offs, order as usize);
            offs.iter()
                .zip(&w)
                .map(|(&o, &wk)| wk * f.values[(i as i32 + o) as usize])
                .sum::<f64>()
                / scale
        })
        .collect())
}

/// Derivative callback: `deriv(q, x)` returns `f^(q)(x)` for `q ≥ 1`.
pub type Derivatives<'a> = &'a dyn Fn(u32, f64) -> f64;

/// `(op f)(xᵢ)` at every node. Derivatives come from `derivatives` when
/// given, else from fourth-order finite differences (orders up to 4).
pub fn apply_operator(
    op: &NumericOperator,
    f: &GridFunction,
    derivatives: Option<Derivatives<'_>>,
) -> Result<GridFunction> {
    let max_order = op.max_dorder();
    let nodes: Vec<f64> = f.grid.nodes().collect();
    let table: Vec<Vec<f64>> = match derivatives {
        Some(cb) => (0..=max_order)
            .map(|q| {
                if q == 0 {
                    f.values.clone()
                } else {
                    nodes.iter().map(|&x| cb(q, x)).collect()
                }
            })
            .collect(),
        None => {
            if max_order > MAX_FD_ORDER {
                return Err(Error::StencilUnsupported(max_order));
            }
            (0..=max_order).map(|q| fd_derivative(f, q)).collect::<Result<_>>()?
        }
    };
    let values = nodes
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            op.terms
                .iter()
                .map(|t| t.coeff * x.powi(t.xpow) * table[t.dorder as usize][i])
                .sum()
        })
        .collect();
    Ok(GridFunction { grid: f.grid.clone(), values })
}
