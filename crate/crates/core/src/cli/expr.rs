//! Tiny real-number expressions for CLI flags: `0.25`, `pi`, `3*pi/40`, `5/3`.

use std::f64::consts::PI;

/// Evaluates a product/quotient chain of numbers and `pi`, left to right,
/// with an optional leading sign.
pub fn parse_real(text: &str) -> Result<f64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(&s)),
    };
    if body.is_empty() {
        return Err(format!("empty expression '{text}'"));
    }
    let mut value = 1.0;
    let mut op = '*';
    let mut token = String::new();
    for c in body.chars().chain(std::iter::once('\0')) {
        if c == '*' || c == '/' || c == '\0' {
            let factor = atom(&token).ok_or_else(|| format!("cannot parse '{text}'"))?;
            value = if op == '*' {
                value * factor
            } else {
                value / factor
            };
            op = c;
            token.clear();
        } else {
            token.push(c);
        }
    }
    let value = sign * value;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("'{text}' is not finite"))
    }
}

fn atom(token: &str) -> Option<f64> {
    if token.eq_ignore_ascii_case("pi") {
        Some(PI)
    } else {
        token.parse::<f64>().ok().filter(|v| v.is_finite())
    }
}
