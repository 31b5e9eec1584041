//! Locale-free number formatting shared by every output format.
//!
//! Default output uses 12 significant digits in the style of C's `%.12g`;
//! `--exact` switches to Rust's shortest round-trip representation.

use serde_json::Value;

const SIG_DIGITS: usize = 12;

/// `%.12g`: 12 significant digits, trailing zeros dropped, scientific
/// notation outside `1e-4 ≤ |x| < 1e12`.
pub fn fmt_g12(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    // the exponent after rounding to 12 digits decides the style
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("`e` formatting always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -4 || exp >= SIG_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// A number for text output: `%.12g`, or shortest round-trip when `exact`.
pub fn fmt_num(x: f64, exact: bool) -> String {
    if exact {
        format!("{x:?}")
    } else {
        fmt_g12(x)
    }
}

/// `x` rounded to 12 significant digits, with `-0` folded into `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x)
        .parse::<f64>()
        .expect("round trip")
        + 0.0
}

/// Rounds every floating-point number in a JSON tree unless `exact`.
pub fn round_json(value: &mut Value, exact: bool) {
    if exact {
        return;
    }
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .map(round12)
                .and_then(serde_json::Number::from_f64)
            {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|v| round_json(v, exact)),
        Value::Object(map) => map.values_mut().for_each(|v| round_json(v, exact)),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_c_printf() {
        // reference strings from printf("%.12g")
        let cases = [
            (0.5549581320873711, "0.554958132087"),
            (0.75, "0.75"),
            (-0.7943524209, "-0.7943524209"),
            (1.0, "1"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (1e-5, "1e-05"),
            (0.0001, "0.0001"),
            (-2.5e-7, "-2.5e-07"),
            (3.0e100, "3e+100"),
            (0.1 + 0.2, "0.3"),
            (9.9999999999996, "10"),
        ];
        for (x, want) in cases {
            assert_eq!(fmt_g12(x), want, "{x:?}");
        }
        // printf would give "-0"; negative zero is folded for stable output
        assert_eq!(fmt_g12(-0.0), "0");
    }

    #[test]
    fn rounding_is_stable() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
    }

    #[test]
    fn json_rounding_keeps_integers() {
        let mut v = serde_json::json!({"n": 5, "x": [0.1 + 0.2, 2.0]});
        round_json(&mut v, false);
        assert_eq!(v.to_string(), r#"{"n":5,"x":[0.3,2.0]}"#);
    }
}
