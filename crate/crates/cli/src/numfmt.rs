/// `v` with 15 significant digits, without trailing zeros; scientific
/// notation outside `[1e−5, 1e15)`.
pub fn sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{v:.14e}");
        let (mantissa, e) = s.split_once('e').expect("scientific format has an exponent");
        return format!("{}e{e}", trim_zeros(mantissa));
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Short form for error magnitudes.
pub fn sci(v: f64) -> String {
    format!("{v:.3e}")
}
