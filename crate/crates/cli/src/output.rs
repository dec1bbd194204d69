use qdiv_core::rational::{self, Rational};

/// CSV with a header row. Values are exact rationals, so nothing needs
/// quoting.
pub fn csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn r(value: &Rational) -> String {
    rational::to_string(value)
}

pub fn json(value: &impl serde::Serialize) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
