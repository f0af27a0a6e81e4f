//! Bounds for the largest zero `x_{1,n}(λ)`.
//!
//! Closed forms come from mixed three-term recurrences (an upper bound
//! `√((n-1)/(n+2λ))` and a lower bound with the `(2λ+1)(2λ+3)` correction)
//! and from the Euler–Rayleigh method applied to the t-basis series. The
//! Euler–Rayleigh engine works on the reciprocal-root power sums
//! `S_j = Σ t_k^{-j}`, produced exactly from the series coefficients by
//! Newton's identities.
//!
//! Every rational part of a bound is formed exactly; conversion to `f64`
//! happens once, just before a square root or an m-th root.

use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{rational_to_f64, Params, Regime};
use crate::poly::coeffs_t;
use crate::zeros::largest_zero;

/// Slack used when grading a bound against a computed zero.
pub const STRICTNESS_TOL: f64 = 1e-12;

pub const THM21_UPPER: &str = "thm21_upper";
pub const THM22_LOWER: &str = "thm22_lower";
pub const THM33_LOWER1: &str = "thm33_lower1";
pub const THM33_LOWER2: &str = "thm33_lower2";
pub const THM33_UPPER: &str = "thm33_upper";
pub const ER_LOWER: &str = "er_m_lower";
pub const ER_UPPER: &str = "er_m_upper";
pub const ER_LOWER_RATIO: &str = "er_m_lower_ratio";
pub const ER_UPPER_RATIO: &str = "er_m_upper_ratio";

/// Note attached to bounds used for `λ > -1/2`.
pub const EXTENDED_RANGE_NOTE: &str = "extended range (lambda > -1/2)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Equality,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bound {
    pub label: String,
    pub side: Side,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    /// Signed slack against the witness: positive when the bound holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Bound {
    fn new(label: &str, side: Side, value: f64) -> Self {
        Bound {
            label: label.to_string(),
            side,
            value,
            verdict: None,
            margin: None,
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub params: Params,
    pub bounds: Vec<Bound>,
    pub witness: Option<f64>,
    /// Euler–Rayleigh order used, when such bounds are present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub er_order: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    fn empty(p: &Params) -> Self {
        BoundReport {
            params: p.clone(),
            bounds: Vec::new(),
            witness: None,
            er_order: None,
            notes: Vec::new(),
        }
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.bounds.iter().find(|b| b.label == label).map(|b| b.value)
    }

    pub fn bound(&self, label: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.label == label)
    }

    /// Grades every bound against `witness`.
    pub fn attach_witness(&mut self, witness: f64) {
        self.witness = Some(witness);
        for b in &mut self.bounds {
            let margin = match b.side {
                Side::Lower => witness - b.value,
                Side::Upper => b.value - witness,
            };
            b.margin = Some(margin);
            b.verdict = Some(if margin.abs() <= STRICTNESS_TOL {
                Verdict::Equality
            } else if margin > 0.0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            });
        }
    }

    /// Worst verdict over all graded bounds.
    pub fn verdict(&self) -> Option<Verdict> {
        self.bounds.iter().filter_map(|b| b.verdict).max()
    }

    /// Smallest margin over all graded bounds.
    pub fn min_margin(&self) -> Option<f64> {
        self.bounds
            .iter()
            .filter_map(|b| b.margin)
            .reduce(f64::min)
    }

    pub fn tightest(&self, side: Side) -> Option<f64> {
        let vals = self.bounds.iter().filter(|b| b.side == side).map(|b| b.value);
        match side {
            Side::Lower => vals.reduce(f64::max),
            Side::Upper => vals.reduce(f64::min),
        }
    }
}

/// Exact reciprocal-root power sums `S_1..S_{m_max}` of the t-basis series.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums {
    pub params: Params,
    pub m_max: usize,
    values: Vec<BigRational>,
}

impl PowerSums {
    /// `S_j`, `1 <= j <= m_max`.
    pub fn get(&self, j: usize) -> &BigRational {
        &self.values[j - 1]
    }

    pub fn get_f64(&self, j: usize) -> f64 {
        rational_to_f64(self.get(j))
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Newton's identities for the reciprocals of the roots of
/// `f(t) = a_0 + a_1 t + … + a_n t^n` (`a_0 != 0`):
/// `S_j = -j·a_j - Σ_{i=1}^{j-1} a_i S_{j-i}` after scaling to `a_0 = 1`,
/// with `a_j = 0` for `j > n`.
pub fn newton_power_sums(coeffs: &[BigRational], m: usize) -> Vec<BigRational> {
    assert!(
        coeffs.first().is_some_and(|a0| !a0.is_zero()),
        "constant coefficient must be nonzero"
    );
    let a0 = &coeffs[0];
    let a: Vec<BigRational> = coeffs.iter().map(|c| c / a0).collect();
    let deg = a.len() - 1;
    let mut s: Vec<BigRational> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut v = if j <= deg {
            -(&a[j] * BigInt::from(j))
        } else {
            BigRational::zero()
        };
        for i in 1..j.min(deg + 1) {
            v -= &a[i] * &s[j - i - 1];
        }
        s.push(v);
    }
    s
}

pub fn power_sums(p: &Params, m: usize) -> Result<PowerSums> {
    if m == 0 {
        return Err(Error::Domain("power sums need m >= 1".into()));
    }
    let series = coeffs_t(p)?;
    Ok(PowerSums {
        params: p.clone(),
        m_max: m,
        values: newton_power_sums(&series.coeffs, m),
    })
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn nq(p: &Params) -> BigRational {
    BigRational::from_integer(p.n().into())
}

fn two_lambda_plus(p: &Params, c: i64) -> BigRational {
    p.lambda() * BigInt::from(2) + q(c)
}

fn require_n_at_least_2(p: &Params) -> Result<()> {
    if p.n() < 2 {
        return Err(Error::DegenerateParameters(format!("bound needs n >= 2 ({p})")));
    }
    Ok(())
}

/// `√((n-1)/(n+2λ))`, the recurrence-based upper bound.
pub fn bound_upper_thm21(p: &Params) -> Result<f64> {
    require_n_at_least_2(p)?;
    let denom = p.n_plus_two_lambda();
    if !denom.is_positive() {
        return Err(Error::DegenerateParameters(format!("n + 2 lambda <= 0 ({p})")));
    }
    Ok(rational_to_f64(&((nq(p) - q(1)) / denom)).sqrt())
}

/// `(1 + (2λ+1)(2λ+3)/((n-1)(n+2λ+1)))^{-1/2}`, the recurrence-based lower bound.
pub fn bound_lower_thm22(p: &Params) -> Result<f64> {
    require_n_at_least_2(p)?;
    let d = (nq(p) - q(1)) * (p.n_plus_two_lambda() + q(1));
    if !d.is_positive() {
        return Err(Error::DegenerateParameters(format!("n + 2 lambda + 1 <= 0 ({p})")));
    }
    let arg = q(1) + two_lambda_plus(p, 1) * two_lambda_plus(p, 3) / d;
    if !arg.is_positive() {
        return Err(Error::DegenerateParameters(format!(
            "root argument {} <= 0 ({p})",
            rational_to_f64(&arg)
        )));
    }
    Ok(1.0 / rational_to_f64(&arg).sqrt())
}

/// `[1 + (2λ+1)(2λ+3)/(2(n-1)(n+2λ+1))]^{-1}`, exactly.
pub fn thm33_lower1_exact(p: &Params) -> Result<BigRational> {
    require_n_at_least_2(p)?;
    let d = q(2) * (nq(p) - q(1)) * (p.n_plus_two_lambda() + q(1));
    if d.is_zero() {
        return Err(Error::DegenerateParameters(format!("n + 2 lambda + 1 = 0 ({p})")));
    }
    let inner = q(1) + two_lambda_plus(p, 1) * two_lambda_plus(p, 3) / d;
    if inner.is_zero() {
        return Err(Error::DegenerateParameters(format!("lower bound pole ({p})")));
    }
    Ok(inner.recip())
}

/// `1 - (2λ+1)/(n(n+2λ))`, exactly.
pub fn thm33_upper_exact(p: &Params) -> Result<BigRational> {
    let d = nq(p) * p.n_plus_two_lambda();
    if !d.is_positive() {
        return Err(Error::DegenerateParameters(format!("n + 2 lambda <= 0 ({p})")));
    }
    Ok(q(1) - two_lambda_plus(p, 1) / d)
}

/// `S_2 = 4n(n+2λ)(2n²+4nλ+4λ²+4λ+1) / ((2λ+1)²(2λ+3))`.
pub fn s2_closed_form(p: &Params) -> BigRational {
    let n = nq(p);
    let l = p.lambda();
    let poly = q(2) * &n * &n + q(4) * &n * l + q(4) * l * l + q(4) * l + q(1);
    let a = two_lambda_plus(p, 1);
    q(4) * &n * p.n_plus_two_lambda() * poly / (&a * &a * two_lambda_plus(p, 3))
}

/// The middle lower bound as typeset in the source display, which carries an
/// extra factor 2 in its correction term. Kept only for the erratum check.
pub fn printed_thm33_middle(p: &Params) -> f64 {
    let n = p.n() as f64;
    let l = p.lambda_f64();
    let num = 2.0 * (2.0 * l + 1.0) * (2.0 * l + 3.0).sqrt();
    let den = (n * (2.0 * l + n) * (4.0 * l * l + 4.0 * n * l + 2.0 * n * n + 4.0 * l + 1.0)).sqrt();
    1.0 - num / den
}

fn check_supported(p: &Params) -> Result<()> {
    if p.regime() == Regime::Unsupported {
        return Err(Error::Domain(format!("bounds need lambda > -3/2 ({p})")));
    }
    if !p.n_plus_two_lambda().is_positive() {
        return Err(Error::DegenerateParameters(format!("n + 2 lambda <= 0 ({p})")));
    }
    Ok(())
}

/// The Euler–Rayleigh bounds at `m = 1` in closed form:
/// `lower1 = 1 - 2S_1/S_2`, `lower2 = 1 + 2 S_2^{-1/2}`, `upper = 1 + 2/|S_1|`.
///
/// For `λ > -1/2` only `lower1` and `upper` are emitted, with an
/// extended-range note. At `λ = -1/2` all three collapse to 1.
pub fn bounds_thm33(p: &Params) -> Result<BoundReport> {
    check_supported(p)?;
    require_n_at_least_2(p)?;
    let mut report = BoundReport::empty(p);
    let lower1 = rational_to_f64(&thm33_lower1_exact(p)?);
    let upper = rational_to_f64(&thm33_upper_exact(p)?);
    match p.regime() {
        Regime::Quasi => {
            let s2 = power_sums(p, 2)?.get_f64(2);
            report.bounds.push(Bound::new(THM33_LOWER1, Side::Lower, lower1));
            report.bounds.push(Bound::new(THM33_LOWER2, Side::Lower, 1.0 + 2.0 / s2.sqrt()));
            report.bounds.push(Bound::new(THM33_UPPER, Side::Upper, upper));
            report.notes.push(format!(
                "printed middle expression evaluates to {} (correction term doubled)",
                crate::format::fmt_sig15(printed_thm33_middle(p))
            ));
        }
        Regime::Boundary => {
            report.bounds.push(Bound::new(THM33_LOWER1, Side::Lower, lower1));
            report.bounds.push(Bound::new(THM33_LOWER2, Side::Lower, 1.0));
            report.bounds.push(Bound::new(THM33_UPPER, Side::Upper, upper));
        }
        Regime::Orthogonal => {
            report
                .bounds
                .push(Bound::new(THM33_LOWER1, Side::Lower, lower1).with_note(EXTENDED_RANGE_NOTE));
            report
                .bounds
                .push(Bound::new(THM33_UPPER, Side::Upper, upper).with_note(EXTENDED_RANGE_NOTE));
        }
        Regime::Unsupported => unreachable!(),
    }
    Ok(report)
}

fn root_neg(v: f64, m: usize) -> f64 {
    v.powf(-1.0 / m as f64)
}

/// Euler–Rayleigh chain when every t-root is positive (`λ > -1/2`):
/// `S_m^{-1/m} < t_1 < S_m/S_{m+1}`, mapped through `x = 1 - 2t`.
pub fn er_bounds_positive(p: &Params, m: usize) -> Result<BoundReport> {
    if p.regime() != Regime::Orthogonal {
        return Err(Error::Domain(format!(
            "positive-root Euler-Rayleigh bounds need lambda > -1/2 ({p})"
        )));
    }
    if m == 0 {
        return Err(Error::Domain("order m must be >= 1".into()));
    }
    let s = power_sums(p, m + 1)?;
    let (sm, sm1) = (s.get(m), s.get(m + 1));
    if !sm.is_positive() || !sm1.is_positive() {
        return Err(Error::PreconditionViolated(format!(
            "power sums S_{m}, S_{} must be positive ({p})",
            m + 1
        )));
    }
    let t_lower = root_neg(rational_to_f64(sm), m);
    let t_upper = rational_to_f64(&(sm / sm1));
    let mut report = BoundReport::empty(p);
    report.er_order = Some(m);
    report.bounds.push(Bound::new(ER_LOWER, Side::Lower, 1.0 - 2.0 * t_upper));
    report.bounds.push(Bound::new(ER_UPPER, Side::Upper, 1.0 - 2.0 * t_lower));
    Ok(report)
}

/// Euler–Rayleigh chain with one negative t-root (`-3/2 < λ < -1/2`):
/// `-|S_{2m-1}|^{-1/(2m-1)} < t_1 < -S_{2m}^{-1/(2m)} < S_{2m-1}/S_{2m}` and
/// `S_{2m}/S_{2m+1} < t_1`, mapped through `x = 1 - 2t`.
pub fn er_bounds_quasi(p: &Params, m: usize) -> Result<BoundReport> {
    if p.regime() != Regime::Quasi {
        return Err(Error::Domain(format!(
            "one-negative-root Euler-Rayleigh bounds need -3/2 < lambda < -1/2 ({p})"
        )));
    }
    if m == 0 {
        return Err(Error::Domain("order m must be >= 1".into()));
    }
    let series = coeffs_t(p)?;
    if series.coeffs.len() < 2 || !series.coeffs[1].is_positive() {
        return Err(Error::PreconditionViolated(format!(
            "series coefficient a_1 must be positive ({p})"
        )));
    }
    let s = PowerSums {
        params: p.clone(),
        m_max: 2 * m + 1,
        values: newton_power_sums(&series.coeffs, 2 * m + 1),
    };
    let (odd, even, next_odd) = (s.get(2 * m - 1), s.get(2 * m), s.get(2 * m + 1));
    if !odd.is_negative() || !even.is_positive() || !next_odd.is_negative() {
        return Err(Error::PreconditionViolated(format!(
            "sign pattern S_{} < 0 < S_{} fails ({p})",
            2 * m - 1,
            2 * m
        )));
    }
    let t_lower_root = -root_neg(rational_to_f64(&odd.abs()), 2 * m - 1);
    let t_upper_root = -root_neg(rational_to_f64(even), 2 * m);
    let t_upper_ratio = rational_to_f64(&(odd / even));
    let t_lower_ratio = rational_to_f64(&(even / next_odd));

    let mut report = BoundReport::empty(p);
    report.er_order = Some(m);
    report.bounds.push(Bound::new(ER_LOWER, Side::Lower, 1.0 - 2.0 * t_upper_root));
    report.bounds.push(Bound::new(ER_LOWER_RATIO, Side::Lower, 1.0 - 2.0 * t_upper_ratio));
    report.bounds.push(Bound::new(ER_UPPER, Side::Upper, 1.0 - 2.0 * t_lower_root));
    report.bounds.push(Bound::new(ER_UPPER_RATIO, Side::Upper, 1.0 - 2.0 * t_lower_ratio));
    Ok(report)
}

/// Every applicable bound for `(n, λ)`, graded against the computed `x_{1,n}`.
pub fn bound_report(p: &Params, m: usize) -> Result<BoundReport> {
    check_supported(p)?;
    require_n_at_least_2(p)?;
    let mut report = BoundReport::empty(p);
    match p.regime() {
        Regime::Quasi | Regime::Boundary => {
            report.bounds.push(Bound::new(THM21_UPPER, Side::Upper, bound_upper_thm21(p)?));
            match bound_lower_thm22(p) {
                Ok(v) => report.bounds.push(Bound::new(THM22_LOWER, Side::Lower, v)),
                Err(e) => report.notes.push(format!("{THM22_LOWER} unavailable: {e}")),
            }
        }
        _ => {}
    }
    let thm33 = bounds_thm33(p)?;
    report.bounds.extend(thm33.bounds);
    report.notes.extend(thm33.notes);
    let er = match p.regime() {
        Regime::Quasi => Some(er_bounds_quasi(p, m)?),
        Regime::Orthogonal => Some(er_bounds_positive(p, m)?),
        _ => None,
    };
    if let Some(er) = er {
        report.er_order = er.er_order;
        report.bounds.extend(er.bounds);
    }
    report.attach_witness(largest_zero(p)?);
    Ok(report)
}
