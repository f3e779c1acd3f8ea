//! Number formatting shared by the CSV, JSON and SVG writers.

use std::fmt::Write;

/// 17 significant digits in scientific notation, enough to round-trip any `f64`.
///
/// Non-finite values print as `null` so JSON stays parseable.
pub fn sig17(v: f64) -> String {
    if v.is_finite() {
        format!("{:.16e}", v + 0.0)
    } else {
        "null".to_string()
    }
}

/// Fixed 12 decimal places, with negative zero folded to zero.
pub fn fixed12(v: f64) -> String {
    format!("{:.12}", v + 0.0)
}

/// JSON string literal with the minimal escapes.
pub fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
