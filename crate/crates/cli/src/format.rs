//! Fixed-precision float formatting shared by the CSV and JSON emitters.

/// Significant digits for every emitted float.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `%.12g`-style rendering: fixed notation for moderate exponents,
/// scientific otherwise, trailing zeros trimmed.
pub fn sig(x: f64) -> String {
    format_sig(x, SIGNIFICANT_DIGITS)
}

pub fn format_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`], for JSON numbers.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    sig(x).parse().expect("formatted float parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_like_percent_g() {
        assert_eq!(sig(5.0), "5");
        assert_eq!(sig(2.1 + 29.0 * 0.1), "5");
        assert_eq!(sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig(91f64.cbrt()), "4.49794144528");
        assert_eq!(sig(1.25e-7), "1.25e-7");
        assert_eq!(sig(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig(-2.5), "-2.5");
        assert_eq!(sig(9.9999999999995), "10");
        assert_eq!(sig(0.0), "0");
    }

    #[test]
    fn rounding_is_idempotent() {
        for x in [1.0 / 7.0, 2.0f64.sqrt(), 1e-9 / 3.0, 12345.678901234] {
            let once = round_sig(x);
            assert_eq!(round_sig(once), once);
            assert_eq!(sig(once), sig(x));
        }
    }
}
