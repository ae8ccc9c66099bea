//! C99-style hexadecimal float formatting and parsing.
//!
//! Used by the CSV and checkpoint writers for bit-exact persistence: a finite
//! f64 formatted by [`format_hex`] parses back to the identical bit pattern.

/// Format a finite f64 as a C99 hex-float literal, e.g. `0x1.8p+1` for 3.0.
pub fn format_hex(value: f64) -> String {
    assert!(value.is_finite(), "hex float formatting requires finite values");
    let bits = value.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exp_bits = ((bits >> 52) & 0x7FF) as i64;
    let mantissa = bits & 0xF_FFFF_FFFF_FFFF;

    if exp_bits == 0 && mantissa == 0 {
        return format!("{sign}0x0p+0");
    }

    let (lead, exp, frac) = if exp_bits == 0 {
        // subnormal: value = 0.mantissa * 2^-1022
        (0u64, -1022i64, mantissa)
    } else {
        (1u64, exp_bits - 1023, mantissa)
    };

    let mut frac_str = format!("{frac:013x}");
    while frac_str.ends_with('0') && !frac_str.is_empty() {
        frac_str.pop();
    }
    if frac_str.is_empty() {
        format!("{sign}0x{lead}p{exp:+}")
    } else {
        format!("{sign}0x{lead}.{frac_str}p{exp:+}")
    }
}

/// Parse a C99 hex-float literal produced by [`format_hex`] (or any literal
/// with at most 13 fractional hex digits). Returns None on malformed input.
pub fn parse_hex(text: &str) -> Option<f64> {
    let s = text.trim();
    let (negative, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let s = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X"))?;
    let p_pos = s.find(['p', 'P'])?;
    let (mant_str, exp_str) = s.split_at(p_pos);
    let exp: i64 = exp_str[1..].parse().ok()?;

    let (int_str, frac_str) = match mant_str.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant_str, ""),
    };
    if int_str.is_empty() || frac_str.len() > 13 {
        return None;
    }
    let int_part = u64::from_str_radix(int_str, 16).ok()?;
    let frac_part = if frac_str.is_empty() {
        0
    } else {
        u64::from_str_radix(frac_str, 16).ok()?
    };
    let frac_bits = 4 * frac_str.len() as i64;
    // mantissa fits in far fewer than 63 bits for round-trip input
    let mantissa = int_part.checked_shl(frac_bits as u32)?.checked_add(frac_part)?;
    let magnitude = mantissa as f64 * (exp - frac_bits).exp2();
    Some(if negative { -magnitude } else { magnitude })
}

trait Exp2 {
    fn exp2(self) -> f64;
}

impl Exp2 for i64 {
    fn exp2(self) -> f64 {
        (self as f64).exp2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(format_hex(3.0), "0x1.8p+1");
        assert_eq!(format_hex(1.0), "0x1p+0");
        assert_eq!(format_hex(0.0), "0x0p+0");
        assert_eq!(format_hex(-0.5), "-0x1p-1");
        assert_eq!(parse_hex("0x1.8p+1"), Some(3.0));
        assert_eq!(parse_hex("-0x1p-1"), Some(-0.5));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let mut rng = crate::rng::rng_from_seed(11);
        for _ in 0..2000 {
            let x = crate::rng::standard_normal(&mut rng) * 1e3f64.powf(crate::rng::standard_normal(&mut rng));
            let back = parse_hex(&format_hex(x)).unwrap();
            assert_eq!(x.to_bits(), back.to_bits(), "{x} -> {}", format_hex(x));
        }
        // subnormals and extremes
        for x in [f64::MIN_POSITIVE / 8.0, f64::MAX, -f64::MIN_POSITIVE, 5e-324] {
            let back = parse_hex(&format_hex(x)).unwrap();
            assert_eq!(x.to_bits(), back.to_bits());
        }
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_hex("1.5"), None);
        assert_eq!(parse_hex("0xzp+1"), None);
        assert_eq!(parse_hex("0x1.8"), None);
    }
}
