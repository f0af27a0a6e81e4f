//! Degree and exact-rational parameter identifying one polynomial `C_n^(λ)`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parses an exact rational from `"p/q"`, an integer, or a terminating
/// decimal such as `"-0.75"` (read as `-3/4`, never via binary floating point).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(num, den));
    }

    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("not a number: {s:?}")));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(Error::Parse(format!(
            "expected p/q or a terminating decimal, got {s:?}"
        )));
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
        .map_err(|_| Error::Parse(format!("not a number: {s:?}")))?;
    let scale = num::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(mantissa, scale);
    Ok(if negative { -value } else { value })
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fallback for values whose numerator/denominator overflow f64 separately.
        let shift = q.numer().bits().max(q.denom().bits()) as i64 - 900;
        if shift <= 0 {
            return f64::NAN;
        }
        let n = q.numer() >> shift as usize;
        let d = q.denom() >> shift as usize;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Where λ sits relative to the orthogonality threshold `-1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `λ > -1/2`: orthogonal on `(-1, 1)`, all zeros inside.
    Orthogonal,
    /// `λ = -1/2`: double point at `x = ±1`.
    Boundary,
    /// `-3/2 < λ < -1/2`: one zero beyond each endpoint.
    Quasi,
    /// `λ <= -3/2`: not supported for zeros or bounds.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ParamsRepr", try_from = "ParamsRepr")]
pub struct Params {
    n: usize,
    lambda: BigRational,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    n: usize,
    lambda: String,
}

impl From<Params> for ParamsRepr {
    fn from(p: Params) -> Self {
        ParamsRepr {
            n: p.n,
            lambda: format_rational(&p.lambda),
        }
    }
}

impl TryFrom<ParamsRepr> for Params {
    type Error = Error;
    fn try_from(r: ParamsRepr) -> Result<Self> {
        Params::new(r.n, parse_rational(&r.lambda)?)
    }
}

impl Params {
    pub fn new(n: usize, lambda: BigRational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("degree n must be at least 1".into()));
        }
        Ok(Params { n, lambda })
    }

    pub fn parse(n: usize, lambda: &str) -> Result<Self> {
        Params::new(n, parse_rational(lambda)?)
    }

    /// Shorthand for `Params::new(n, num/den)`; panics when `n == 0`.
    pub fn ratio(n: usize, num: i64, den: i64) -> Self {
        Params::new(n, ratio(num, den)).expect("n >= 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn lambda_f64(&self) -> f64 {
        rational_to_f64(&self.lambda)
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        Params::new(n, self.lambda.clone())
    }

    pub fn with_lambda(&self, lambda: BigRational) -> Self {
        Params {
            n: self.n,
            lambda,
        }
    }

    /// Same degree `n'`, parameter shifted by an integer.
    pub fn shifted(&self, n: usize, dlambda: i64) -> Result<Self> {
        Params::new(n, &self.lambda + BigRational::from_integer(dlambda.into()))
    }

    /// True when `C_n^(λ) ≡ 0`, i.e. `λ ∈ {0, -1, …, -⌊(n-1)/2⌋}`.
    pub fn is_trivial(&self) -> bool {
        is_trivial_lambda(self.n, &self.lambda)
    }

    pub fn regime(&self) -> Regime {
        let half = ratio(-1, 2);
        if self.lambda > half {
            Regime::Orthogonal
        } else if self.lambda == half {
            Regime::Boundary
        } else if self.lambda > ratio(-3, 2) {
            Regime::Quasi
        } else {
            Regime::Unsupported
        }
    }

    /// `n + 2λ`, the quantity whose sign separates real from complex outer zeros.
    pub fn n_plus_two_lambda(&self) -> BigRational {
        BigRational::from_integer(self.n.into()) + &self.lambda * BigInt::from(2)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, lambda={}", self.n, format_rational(&self.lambda))
    }
}

pub fn is_trivial_lambda(n: usize, lambda: &BigRational) -> bool {
    if !lambda.is_integer() || lambda.is_positive() {
        return false;
    }
    let k = (-lambda.to_integer()).to_usize().unwrap_or(usize::MAX);
    k <= (n - 1) / 2
}

/// Exceptional parameters of the common-zero lemma: `λ ∈ {-1/2, -3/2, …}`.
pub fn is_negative_half_integer(lambda: &BigRational) -> bool {
    let shifted = lambda + ratio(1, 2);
    shifted.is_integer() && !shifted.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("-0.75").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("5").unwrap(), ratio(5, 1));
        assert_eq!(parse_rational("+2.50").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("6/-8").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1/0", "1e-3", "0.5.1", "-", "pi", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn trivial_set_matches_closed_form() {
        // {0, -1, ..., -floor((n-1)/2)}
        for n in 1..12usize {
            for k in -8i64..=3 {
                let expected = k <= 0 && (-k) as usize <= (n - 1) / 2;
                assert_eq!(is_trivial_lambda(n, &ratio(k, 1)), expected, "n={n} k={k}");
            }
            assert!(!is_trivial_lambda(n, &ratio(-1, 2)));
        }
    }

    #[test]
    fn regimes() {
        assert_eq!(Params::ratio(3, 1, 1).regime(), Regime::Orthogonal);
        assert_eq!(Params::ratio(3, -1, 2).regime(), Regime::Boundary);
        assert_eq!(Params::ratio(3, -3, 4).regime(), Regime::Quasi);
        assert_eq!(Params::ratio(3, -3, 2).regime(), Regime::Unsupported);
    }

    #[test]
    fn serde_uses_rational_string() {
        let p = Params::ratio(3, -3, 4);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":3,"lambda":"-3/4"}"#);
        let back: Params = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
