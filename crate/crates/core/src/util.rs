//! Shared numeric helpers: log⁺, deterministic summation, slope fits, and
//! 12-significant-digit formatting for artifacts.

/// log⁺ x = max(0, log x); zero for x ≤ 1 (including x ≤ 0).
pub fn log_plus(x: f64) -> f64 {
    if x > 1.0 {
        x.ln()
    } else {
        0.0
    }
}

/// log⁺ applied to a quantity already given as log x.
pub fn log_plus_of_log(log_x: f64) -> f64 {
    log_x.max(0.0)
}

/// Pairwise (tree) summation: deterministic and more accurate than a left fold.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// log(e^a + e^b) without overflow.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Least-squares slope of ys against xs.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = pairwise_sum(xs) / n;
    let my = pairwise_sum(ys) / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Fixed-width scientific notation with 12 significant digits.
/// Locale-independent; used for every CSV/JSON/plot artifact.
pub fn format_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{:.11e}", x)
}

/// Parse a grid spec "a:b:n" or "a:b:n:log" into explicit radii.
pub fn parse_grid_spec(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(format!("grid spec must be a:b:n or a:b:n:log, got {spec:?}"));
    }
    let a: f64 = parts[0].parse().map_err(|e| format!("bad grid start: {e}"))?;
    let b: f64 = parts[1].parse().map_err(|e| format!("bad grid stop: {e}"))?;
    let n: usize = parts[2].parse().map_err(|e| format!("bad grid count: {e}"))?;
    let log = match parts.get(3) {
        None => false,
        Some(&"log") => true,
        Some(other) => return Err(format!("bad grid flag {other:?}, expected \"log\"")),
    };
    if !(a > 0.0 && b > a) {
        return Err(format!("grid needs 0 < start < stop, got {a}:{b}"));
    }
    if n < 2 {
        return Err(format!("grid needs at least 2 points, got {n}"));
    }
    Ok(build_grid(a, b, n, log))
}

/// n grid points in [a, b], linear or logarithmically spaced.
pub fn build_grid(a: f64, b: f64, n: usize, log: bool) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let t = i as f64 / (n - 1) as f64;
        if log {
            out.push((a.ln() + t * (b.ln() - a.ln())).exp());
        } else {
            out.push(a + t * (b - a));
        }
    }
    out
}
