//! Eigenvalues of symmetric tridiagonal matrices by Sturm-sequence bisection.

/// Number of eigenvalues strictly below `shift`, counted as the negative
/// pivots of the `LDLᵀ` factorization of `T - shift·I`.
pub fn sturm_count(diag: &[f64], off: &[f64], shift: f64) -> usize {
    let max_off_sq = off.iter().map(|e| e * e).fold(1.0, f64::max);
    let pivmin = f64::MIN_POSITIVE * max_off_sq;
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - shift - coupling / q;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0) * 4.0;
    (lo - pad, hi + pad)
}

/// The `k`-th smallest eigenvalue (`k = 0` is the smallest).
///
/// # Panics
///
/// If `k >= diag.len()` or `off.len() + 1 != diag.len()`.
pub fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    assert!(k < diag.len(), "eigenvalue index out of range");
    assert_eq!(off.len() + 1, diag.len(), "off-diagonal length");
    let (mut lo, mut hi) = gershgorin(diag, off);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All eigenvalues in ascending order.
pub fn eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    (0..diag.len()).map(|k| kth_eigenvalue(diag, off, k)).collect()
}
