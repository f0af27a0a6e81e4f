//! Real zeros of `C_n^(λ)` for `λ > -3/2`, in decreasing order.
//!
//! * `λ > -1/2`: eigenvalues of the Jacobi matrix of the monic recurrence,
//!   each polished by one Newton step.
//! * `-3/2 < λ < -1/2`: the `n - 2` inner zeros interlace with the zeros of
//!   the orthogonal polynomial `C_{n-1}^(λ+1)`, which therefore bracket them;
//!   the single zero above 1 is bracketed by a doubling scan from `1 + 1e-12`.
//! * `λ = -1/2`: `±1` are exact zeros and the inner ones interlace with the
//!   Legendre zeros of degree `n - 1`.
//!
//! At the trivial parameters `λ ∈ {0, -1}` the sign tests run on
//! [`NonTrivialEval`], whose zeros are the limits of the zeros as λ moves off
//! the trivial value.

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{ratio, Params, Regime};
use crate::poly::{eval_recurrence_exact, NonTrivialEval};
use crate::tridiag;

/// Where the outer-zero scan starts.
pub const OUTER_SCAN_START: f64 = 1e-12;
/// The outer-zero scan gives up past this abscissa.
pub const OUTER_SCAN_LIMIT: f64 = 64.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    #[serde(flatten)]
    pub params: Params,
    /// Strictly decreasing.
    pub zeros: Vec<f64>,
    /// Number of zeros with `|x| > 1`.
    pub outside_count: usize,
    /// Estimated absolute error bound, uniform over the zeros.
    pub precision: f64,
}

impl ZeroSet {
    fn new(params: Params, mut zeros: Vec<f64>, precision: f64) -> Self {
        symmetrize(&mut zeros);
        let outside_count = zeros.iter().filter(|z| z.abs() > 1.0).count();
        ZeroSet {
            params,
            zeros,
            outside_count,
            precision,
        }
    }

    /// A zero set from externally supplied values, sorted into decreasing
    /// order but otherwise taken as given.
    pub fn from_values(params: Params, mut zeros: Vec<f64>, precision: f64) -> Self {
        zeros.sort_by(|a, b| b.total_cmp(a));
        let outside_count = zeros.iter().filter(|z| z.abs() > 1.0).count();
        ZeroSet {
            params,
            zeros,
            outside_count,
            precision,
        }
    }

    pub fn largest(&self) -> f64 {
        self.zeros[0]
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// `max_k |x_k + x_{count+1-k}|`.
    pub fn symmetry_defect(&self) -> f64 {
        let m = self.zeros.len();
        (0..m)
            .map(|k| (self.zeros[k] + self.zeros[m - 1 - k]).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.zeros.windows(2).all(|w| w[0] > w[1])
    }
}

/// Enforces `x_k = -x_{m+1-k}` on a decreasing list.
fn symmetrize(zeros: &mut [f64]) {
    let m = zeros.len();
    for k in 0..m / 2 {
        let v = 0.5 * (zeros[k] - zeros[m - 1 - k]);
        zeros[k] = v;
        zeros[m - 1 - k] = -v;
    }
    if m % 2 == 1 {
        zeros[m / 2] = 0.0;
    }
}

/// Diagonal and off-diagonal of the symmetric Jacobi matrix of the
/// ultraspherical recurrence. Requires `λ > -1/2`.
pub fn jacobi_matrix(n: usize, lambda: f64) -> (Vec<f64>, Vec<f64>) {
    let off = (1..n)
        .map(|k| {
            let beta = if k == 1 {
                1.0 / (2.0 * (1.0 + lambda))
            } else {
                let kf = k as f64;
                kf * (kf + 2.0 * lambda - 1.0) / (4.0 * (kf + lambda) * (kf + lambda - 1.0))
            };
            beta.sqrt()
        })
        .collect();
    (vec![0.0; n], off)
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// One Newton step, kept only if it stays inside `[lo, hi]`.
/// Returns the point and the size of the correction (or of the bracket).
fn newton_polish(ev: &NonTrivialEval, x: f64, lo: f64, hi: f64) -> (f64, f64) {
    let (f, df) = ev.value_and_derivative(x);
    if f == 0.0 {
        return (x, 0.0);
    }
    if df == 0.0 || !df.is_finite() {
        return (x, hi - lo);
    }
    let next = x - f / df;
    if next >= lo && next <= hi {
        (next, (next - x).abs())
    } else {
        (x, hi - lo)
    }
}

/// Bisects a sign change of `ev` on `[lo, hi]` down to adjacent floats, then
/// polishes. Returns the zero and an error estimate.
fn bisect_zero(ev: &NonTrivialEval, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let mut f_lo = ev.value(lo);
    let f_hi = ev.value(hi);
    if f_lo == 0.0 {
        return Ok((lo, 0.0));
    }
    if f_hi == 0.0 {
        return Ok((hi, 0.0));
    }
    if sign(f_lo) == sign(f_hi) {
        return Err(Error::BracketFailure(format!(
            "no sign change on [{lo}, {hi}]"
        )));
    }
    loop {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = ev.value(mid);
        if fm == 0.0 {
            return Ok((mid, 0.0));
        }
        if sign(fm) == sign(f_lo) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    let mid = lo + 0.5 * (hi - lo);
    let (x, step) = newton_polish(ev, mid, lo, hi);
    Ok((x, step.max(hi - lo)))
}

/// Zeros of `C_n^(λ)` for `λ > -1/2`.
pub fn zeros_orthogonal(p: &Params) -> Result<ZeroSet> {
    if p.regime() != Regime::Orthogonal {
        return Err(Error::Domain(format!(
            "orthogonal zeros need lambda > -1/2 ({p})"
        )));
    }
    if p.n() == 1 {
        return Ok(ZeroSet::new(p.clone(), vec![0.0], 0.0));
    }
    let ev = NonTrivialEval::new(p);
    let (diag, off) = jacobi_matrix(p.n(), p.lambda_f64());
    let mut zeros = tridiag::eigenvalues(&diag, &off);
    zeros.reverse();
    let mut precision: f64 = 0.0;
    for z in zeros.iter_mut() {
        let slack = 1e-8 * (1.0 + z.abs());
        let (x, step) = newton_polish(&ev, *z, *z - slack, *z + slack);
        *z = x;
        precision = precision.max(step);
    }
    Ok(ZeroSet::new(
        p.clone(),
        zeros,
        precision.max(4.0 * f64::EPSILON),
    ))
}

/// The unique zero of `C_n^(λ)` in `(1, ∞)` for `-3/2 < λ < -1/2`.
fn outer_zero(p: &Params, ev: &NonTrivialEval) -> Result<(f64, f64)> {
    let mut a = 1.0 + OUTER_SCAN_START;
    let mut width = OUTER_SCAN_START;
    let f_a = ev.value(a);
    if f_a == 0.0 {
        return Ok((a, 0.0));
    }
    loop {
        let b = a + width;
        if b > OUTER_SCAN_LIMIT {
            return Err(Error::BracketFailure(format!(
                "no sign change in (1, {OUTER_SCAN_LIMIT}] for {p}"
            )));
        }
        let f_b = ev.value(b);
        if sign(f_b) != sign(f_a) {
            return bisect_zero(ev, a, b);
        }
        a = b;
        width *= 2.0;
    }
}

fn check_quasi(p: &Params) -> Result<()> {
    if p.regime() != Regime::Quasi {
        return Err(Error::Domain(format!(
            "quasi-orthogonal zeros need -3/2 < lambda < -1/2 ({p})"
        )));
    }
    if p.n() >= 2 && p.n_plus_two_lambda() <= BigRational::zero() {
        return Err(Error::DegenerateParameters(format!(
            "n + 2 lambda <= 0 ({p}): the outer zeros are not real"
        )));
    }
    Ok(())
}

/// Inner zeros bracketed by consecutive zeros of `C_{n-1}^(λ+1)`.
fn inner_zeros(p: &Params, ev: &NonTrivialEval) -> Result<(Vec<f64>, f64)> {
    let seed = zeros_orthogonal(&p.shifted(p.n() - 1, 1)?)?;
    let mut out = Vec::with_capacity(p.n().saturating_sub(2));
    let mut precision: f64 = 0.0;
    for w in seed.zeros.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        let (z, err) = bisect_zero(ev, lo, hi).map_err(|_| {
            Error::BracketFailure(format!(
                "interlacing seed ({lo}, {hi}) of C_{}^(lambda+1) holds no sign change for {p}",
                p.n() - 1
            ))
        })?;
        out.push(z);
        precision = precision.max(err);
    }
    Ok((out, precision))
}

/// Zeros of `C_n^(λ)` for `-3/2 < λ < -1/2`; requires `n + 2λ > 0` when `n >= 2`.
pub fn zeros_quasi(p: &Params) -> Result<ZeroSet> {
    check_quasi(p)?;
    if p.n() == 1 {
        return Ok(ZeroSet::new(p.clone(), vec![0.0], 0.0));
    }
    let ev = NonTrivialEval::new(p);
    let (outer, outer_err) = outer_zero(p, &ev)?;
    let (inner, inner_err) = inner_zeros(p, &ev)?;
    let mut zeros = Vec::with_capacity(p.n());
    zeros.push(outer);
    zeros.extend(inner);
    zeros.push(-outer);
    Ok(ZeroSet::new(
        p.clone(),
        zeros,
        outer_err.max(inner_err).max(4.0 * f64::EPSILON),
    ))
}

fn zeros_boundary(p: &Params) -> Result<ZeroSet> {
    if p.n() == 1 {
        return Ok(ZeroSet::new(p.clone(), vec![0.0], 0.0));
    }
    let one = BigRational::from_integer(1.into());
    if !eval_recurrence_exact(p, &one).is_zero() {
        return Err(Error::BracketFailure(format!("C_n(1) != 0 at {p}")));
    }
    let ev = NonTrivialEval::new(p);
    let (inner, err) = inner_zeros(p, &ev)?;
    let mut zeros = Vec::with_capacity(p.n());
    zeros.push(1.0);
    zeros.extend(inner);
    zeros.push(-1.0);
    Ok(ZeroSet::new(p.clone(), zeros, err.max(4.0 * f64::EPSILON)))
}

/// All real (non-trivial) zeros of `C_n^(λ)`, `λ > -3/2`.
pub fn zeros(p: &Params) -> Result<ZeroSet> {
    match p.regime() {
        Regime::Unsupported => Err(Error::Domain(format!(
            "zeros need lambda > -3/2 ({p})"
        ))),
        _ if p.n() == 1 => Ok(ZeroSet::new(p.clone(), vec![0.0], 0.0)),
        Regime::Orthogonal => zeros_orthogonal(p),
        Regime::Boundary => zeros_boundary(p),
        Regime::Quasi => zeros_quasi(p),
    }
}

/// `x_{1,n}(λ)`. In the quasi-orthogonal regime only the outer zero is computed.
pub fn largest_zero(p: &Params) -> Result<f64> {
    match p.regime() {
        Regime::Unsupported => Err(Error::Domain(format!(
            "zeros need lambda > -3/2 ({p})"
        ))),
        _ if p.n() == 1 => Ok(0.0),
        Regime::Boundary => Ok(1.0),
        Regime::Quasi => {
            check_quasi(p)?;
            outer_zero(p, &NonTrivialEval::new(p)).map(|(z, _)| z)
        }
        Regime::Orthogonal => {
            let (diag, off) = jacobi_matrix(p.n(), p.lambda_f64());
            let z = tridiag::kth_eigenvalue(&diag, &off, p.n() - 1);
            let slack = 1e-8;
            Ok(newton_polish(&NonTrivialEval::new(p), z, z - slack, z + slack).0)
        }
    }
}

/// `λ = -1/2` as an exact rational.
pub fn minus_half() -> BigRational {
    ratio(-1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn assert_zeros(zs: &ZeroSet, expected: &[f64], tol: f64) {
        assert_eq!(zs.zeros.len(), expected.len(), "{:?}", zs.zeros);
        for (z, e) in zs.zeros.iter().zip(expected) {
            assert_abs_diff_eq!(*z, *e, epsilon = tol);
        }
    }

    #[test]
    fn orthogonal_examples() {
        assert_zeros(&zeros_orthogonal(&Params::ratio(1, 1, 1)).unwrap(), &[0.0], 0.0);
        let r = 1.0 / 3f64.sqrt();
        assert_zeros(&zeros_orthogonal(&Params::ratio(2, 1, 2)).unwrap(), &[r, -r], 1e-14);
        let r = 1.0 / 2f64.sqrt();
        assert_zeros(&zeros_orthogonal(&Params::ratio(3, 1, 1)).unwrap(), &[r, 0.0, -r], 1e-14);
        assert!(matches!(
            zeros_orthogonal(&Params::ratio(3, -1, 2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn quasi_examples() {
        let r = (6.0f64 / 5.0).sqrt();
        let z = zeros_quasi(&Params::ratio(3, -3, 4)).unwrap();
        assert_zeros(&z, &[r, 0.0, -r], 1e-13);
        assert_eq!(z.outside_count, 2);

        let z = zeros_quasi(&Params::ratio(2, -3, 4)).unwrap();
        assert_zeros(&z, &[2f64.sqrt(), -(2f64.sqrt())], 1e-13);

        let z = zeros_quasi(&Params::ratio(4, -3, 4)).unwrap();
        assert_eq!(z.zeros.len(), 4);
        // bounds at n = 4: (1 - 0.75/10.5)^(-1/2) and sqrt(3/2.5)
        assert!(z.zeros[0] > 1.0377490433 && z.zeros[0] < 1.0954451151);
        // C_4 = -45x⁴/128 + 15x²/32 - 3/32, a quadratic in x²
        let x2 = (15.0 / 32.0 + ((15.0f64 / 32.0).powi(2) - 4.0 * (45.0 / 128.0) * (3.0 / 32.0)).sqrt())
            / (2.0 * 45.0 / 128.0);
        assert_abs_diff_eq!(z.zeros[0], x2.sqrt(), epsilon = 1e-13);
    }

    #[test]
    fn quasi_rejects_degenerate_and_out_of_range() {
        assert!(matches!(
            zeros(&Params::ratio(2, -6, 5)),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            zeros(&Params::ratio(2, -1, 1)),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(zeros(&Params::ratio(5, -3, 2)), Err(Error::Domain(_))));
        assert!(matches!(zeros_quasi(&Params::ratio(5, 1, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn boundary_case() {
        assert_zeros(&zeros(&Params::ratio(2, -1, 2)).unwrap(), &[1.0, -1.0], 0.0);
        let z = zeros(&Params::ratio(5, -1, 2)).unwrap();
        assert_eq!(z.zeros[0], 1.0);
        assert_eq!(z.zeros.len(), 5);
        assert_eq!(z.outside_count, 0);
        // inner zeros of C_5^(-1/2) ∝ (1-x²) P_4'(x): P_4' = (35x³ - 15x)/2
        let r = (15.0f64 / 35.0).sqrt();
        assert_abs_diff_eq!(z.zeros[1], r, epsilon = 1e-14);
    }

    #[test]
    fn trivial_parameter_uses_limit_zeros() {
        let r = 1.5f64.sqrt();
        assert_zeros(&zeros(&Params::ratio(3, -1, 1)).unwrap(), &[r, 0.0, -r], 1e-13);
        // λ = 0: limit polynomial ∝ T_n
        let z = zeros(&Params::ratio(4, 0, 1)).unwrap();
        for (k, x) in z.zeros.iter().enumerate() {
            let t = ((2 * k + 1) as f64 * std::f64::consts::PI / 8.0).cos();
            assert_abs_diff_eq!(*x, t, epsilon = 1e-14);
        }
    }

    #[test]
    fn largest_zero_examples() {
        assert_abs_diff_eq!(largest_zero(&Params::ratio(3, -3, 4)).unwrap(), 1.0954451150103321, epsilon = 1e-13);
        assert_abs_diff_eq!(largest_zero(&Params::ratio(2, -3, 4)).unwrap(), 2f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(largest_zero(&Params::ratio(5, 1, 2)).unwrap(), 0.906_179_845_938_664, epsilon = 1e-14);
    }

    #[test]
    fn near_boundary_follows_linearization() {
        // slope -2/(n²-n) = -1/28 at n = 8
        let z = largest_zero(&Params::ratio(8, -501, 1000)).unwrap();
        assert!(z > 1.0 && z < 1.0002);
        assert_abs_diff_eq!(z - 1.0, 0.001 / 28.0, epsilon = 2e-6);
    }

    #[test]
    fn serde_schema() {
        let z = zeros(&Params::ratio(3, -3, 4)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&z).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        for k in ["n", "lambda", "zeros", "outside_count", "precision"] {
            assert!(keys.contains(&k.to_string()), "{keys:?}");
        }
        assert_eq!(v["lambda"], "-3/4");
        let back: ZeroSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, z);
    }
}
