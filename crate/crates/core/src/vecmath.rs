//! Small slice-based vector and interleaved-complex helpers.
//!
//! Complex vectors are stored as interleaved real pairs
//! `[re z0, im z0, re z1, im z1, ...]`, so one representation serves real
//! and complex contexts.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

/// a + s*b
pub(crate) fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Hermitian inner product Σ x_k · conj(y_k) of interleaved complex vectors,
/// returned as (re, im).
pub(crate) fn cplx_inner(x: &[f64], y: &[f64]) -> (f64, f64) {
    debug_assert_eq!(x.len(), y.len());
    debug_assert_eq!(x.len() % 2, 0);
    let mut re = 0.0;
    let mut im = 0.0;
    for k in (0..x.len()).step_by(2) {
        let (a, b) = (x[k], x[k + 1]);
        let (c, d) = (y[k], y[k + 1]);
        // (a + ib)(c - id)
        re += a * c + b * d;
        im += b * c - a * d;
    }
    (re, im)
}

/// Coordinatewise multiplication by the unit complex scalar re + i·im.
pub(crate) fn cplx_scalar_mul(re: f64, im: f64, v: &[f64]) -> Vec<f64> {
    debug_assert_eq!(v.len() % 2, 0);
    let mut out = Vec::with_capacity(v.len());
    for k in (0..v.len()).step_by(2) {
        let (a, b) = (v[k], v[k + 1]);
        out.push(a * re - b * im);
        out.push(a * im + b * re);
    }
    out
}

/// The m-th root of unity e^{2πi·j/m}, as (re, im). Quarter-turn angles are
/// returned exactly so the even-torsion deck groups contain ±1 and ±i
/// without rounding noise.
pub(crate) fn root_of_unity(m: usize, j: usize) -> (f64, f64) {
    let j = j % m;
    if (4 * j).is_multiple_of(m) {
        return match (4 * j / m) % 4 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
    }
    let theta = std::f64::consts::TAU * (j as f64) / (m as f64);
    (theta.cos(), theta.sin())
}
