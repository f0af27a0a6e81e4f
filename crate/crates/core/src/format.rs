//! Locale-free fixed-precision rendering of floats.

/// Formats like C's `%.15g`: 15 significant digits, trailing zeros removed,
/// scientific notation for exponents below -4 or at least 15.
pub fn fmt_sig15(v: f64) -> String {
    fmt_sig(v, 15)
}

/// `%.{digits}g`-style formatting.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let exp_str = if exp < 0 {
            format!("-{:02}", -exp)
        } else {
            format!("+{exp:02}")
        };
        format!("{}e{exp_str}", strip_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to 15 significant digits, so serializers print at most that many.
pub fn round_sig15(v: f64) -> f64 {
    if v.is_finite() {
        fmt_sig15(v).parse().expect("formatted float parses")
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(fmt_sig15(0.375), "0.375");
        assert_eq!(fmt_sig15(-3.0), "-3");
        assert_eq!(fmt_sig15(0.0), "0");
        assert_eq!(fmt_sig15(-0.0), "0");
        assert_eq!(fmt_sig15(1.2f64.sqrt()), "1.09544511501033");
        assert_eq!(fmt_sig15(1e-5), "1e-05");
        assert_eq!(fmt_sig15(1.5e20), "1.5e+20");
        assert_eq!(fmt_sig15(123456789012345.0), "123456789012345");
        assert_eq!(fmt_sig15(1234567890123456.0), "1.23456789012346e+15");
        assert_eq!(fmt_sig15(0.0001), "0.0001");
        assert_eq!(fmt_sig15(0.1 + 0.2), "0.3");
        assert_eq!(fmt_sig(2.0 / 3.0, 4), "0.6667");
    }

    #[test]
    fn rounding_is_idempotent() {
        for v in [1.0 / 3.0, -2f64.sqrt(), 1e-300, 6.02e23] {
            let r = round_sig15(v);
            assert_eq!(round_sig15(r), r);
            assert!((r - v).abs() <= 1e-14 * v.abs());
        }
    }
}
