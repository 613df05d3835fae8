//! Number formatting shared by all output files.

use maxcut_qaoa_core::Coeff;

/// Significant digits of every floating-point value written out.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `v` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v)
        .parse()
        .expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Plain decimal text of `v` at [`SIGNIFICANT_DIGITS`] significant digits.
pub fn fmt_sig(v: f64) -> String {
    format!("{}", round_sig(v))
}

/// Exact decimal text of a rational; falls back to `p/q` when the
/// denominator has prime factors other than 2 and 5.
pub fn rational_to_decimal(r: &Coeff) -> String {
    let (mut num, den) = (*r.numer(), *r.denom());
    let mut d = den;
    let (mut twos, mut fives) = (0u32, 0u32);
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    if d != 1 {
        return format!("{num}/{den}");
    }
    // Scale to a power of ten: num/den = num * 2^(k-twos) * 5^(k-fives) / 10^k.
    let k = twos.max(fives);
    num *= 2i64.pow(k - twos) * 5i64.pow(k - fives);
    if k == 0 {
        return num.to_string();
    }
    let sign = if num < 0 { "-" } else { "" };
    let digits = format!("{:0>width$}", num.unsigned_abs(), width = k as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - k as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(rational_to_decimal(&Coeff::new(1, 2)), "0.5");
        assert_eq!(rational_to_decimal(&Coeff::new(-1, 2)), "-0.5");
        assert_eq!(rational_to_decimal(&Coeff::new(-10, 2)), "-5");
        assert_eq!(rational_to_decimal(&Coeff::new(0, 1)), "0");
        assert_eq!(rational_to_decimal(&Coeff::new(23, 25)), "0.92");
        assert_eq!(rational_to_decimal(&Coeff::new(-3, 4)), "-0.75");
        assert_eq!(rational_to_decimal(&Coeff::new(1, 3)), "1/3");
        assert_eq!(rational_to_decimal(&Coeff::new(7, 1)), "7");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(0.1 + 0.2), "0.3");
        assert_eq!(fmt_sig(-0.5), "-0.5");
        assert_eq!(fmt_sig(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_sig(-1e-17), "-0.00000000000000001");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(123456789.1234567), "123456789.123");
    }
}
