//! Fixed significant-digit formatting for CSV and text output.

/// Digits used in CSV files; enough to round-trip any `f64`.
pub const CSV_DIGITS: usize = 17;
/// Digits used for human-readable text output.
pub const TEXT_DIGITS: usize = 15;

/// Format `v` with `digits` significant digits. Plain decimal notation is
/// used for moderate magnitudes, scientific otherwise; trailing zeros are
/// dropped.
pub fn sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let exp = v.abs().log10().floor() as i32;
    if (-5..16).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        // log10 can be off by one right at powers of ten; that only costs
        // or gains a digit, which re-parsing does not mind.
        trim_zeros(s)
    } else {
        let s = format!("{v:.*e}", digits - 1);
        match s.split_once('e') {
            Some((mantissa, e)) => format!("{}e{e}", trim_zeros(mantissa.to_string())),
            None => s,
        }
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}
