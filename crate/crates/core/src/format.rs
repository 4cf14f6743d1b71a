//! Number formatting shared by the CLI and the report renderers.

/// Significant digits used for all human-facing output.
pub const SIG_DIGITS: usize = 6;

/// `%g`-style formatting: `digits` significant digits, fixed notation for
/// moderate exponents, scientific otherwise, trailing zeros removed.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let s = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = s.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

/// Six significant digits, the default output precision.
pub fn sig6(x: f64) -> String {
    sig(x, SIG_DIGITS)
}

/// Fixed-width scientific notation with six significant digits, e.g.
/// `2.57691e42`.
pub fn sci6(x: f64) -> String {
    format!("{:.*e}", SIG_DIGITS - 1, x)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to `digits` significant digits, for comparing outputs.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.max(1) - 1, x).parse().expect("round trip")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_formats() {
        assert_eq!(sig6(10.000000000000002), "10");
        assert_eq!(sig6(2.5769082115715274e42), "2.57691e42");
        assert_eq!(sig6(1e-5), "1e-5");
        assert_eq!(sig6(0.000123456789), "0.000123457");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(1234567.0), "1.23457e6");
        assert_eq!(sig6(-3.5), "-3.5");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(999999.6), "1e6");
    }

    #[test]
    fn sci_formats() {
        assert_eq!(sci6(2.5769082115715274e42), "2.57691e42");
        assert_eq!(sci6(1e-5), "1.00000e-5");
        assert_eq!(sci6(0.0), "0.00000e0");
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(2.5769082115715274e42, 6), 2.57691e42);
        assert_eq!(round_sig(0.0, 6), 0.0);
    }
}
