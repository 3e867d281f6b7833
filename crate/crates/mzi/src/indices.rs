//! Exact and log-domain evaluation of the multiplicative and additive
//! Zagreb indices.
//!
//! * `pi1`: product of squared vertex degrees.
//! * `pi2`: product of `d(v)^d(v)` over vertices, which equals the product
//!   of `d(u) * d(v)` over edges.
//! * `m1` / `m2`: the additive counterparts, kept as cross-check invariants.
//!
//! All exact values are arbitrary-precision integers; these overflow 64
//! bits already at small orders. Degree-0 vertices contribute a factor 0
//! to `pi1`, while the `0^0` factor in `pi2` is taken to be 1. Connected
//! graphs on at least two vertices never hit either convention.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::Graph;
use crate::{Error, Result};

/// First multiplicative Zagreb index: `prod d(v)^2`.
pub fn pi1(g: &Graph) -> BigUint {
    let mut acc = BigUint::one();
    for v in g.vertices() {
        let d = g.degree(v);
        acc *= BigUint::from(d) * BigUint::from(d);
    }
    acc
}

/// Second multiplicative Zagreb index, computed in the vertex form
/// `prod d(v)^d(v)` (fewer big-integer multiplies than the edge form).
pub fn pi2(g: &Graph) -> BigUint {
    let mut acc = BigUint::one();
    for v in g.vertices() {
        let d = g.degree(v);
        if d > 0 {
            acc *= BigUint::from(d).pow(d as u32);
        }
    }
    acc
}

/// First Zagreb index: `sum d(v)^2`.
pub fn m1(g: &Graph) -> BigUint {
    g.vertices().map(|v| BigUint::from(g.degree(v) * g.degree(v))).sum()
}

/// Second Zagreb index: `sum over edges of d(u) * d(v)`.
pub fn m2(g: &Graph) -> BigUint {
    g.edges()
        .into_iter()
        .map(|(u, v)| BigUint::from(g.degree(u) * g.degree(v)))
        .sum()
}

/// `ln pi1`. Errors if any vertex is isolated.
pub fn pi1_log(g: &Graph) -> Result<f64> {
    let mut acc = 0.0;
    for v in g.vertices() {
        let d = g.degree(v);
        if d == 0 {
            return Err(Error::DegenerateLog);
        }
        acc += 2.0 * (d as f64).ln();
    }
    Ok(acc)
}

/// `ln pi2`. Errors if any vertex is isolated.
pub fn pi2_log(g: &Graph) -> Result<f64> {
    let mut acc = 0.0;
    for v in g.vertices() {
        let d = g.degree(v);
        if d == 0 {
            return Err(Error::DegenerateLog);
        }
        acc += d as f64 * (d as f64).ln();
    }
    Ok(acc)
}
