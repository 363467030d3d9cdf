//! Nevanlinna proximity, counting, and characteristic functions.
//!
//! m(r,f) comes from adaptive quadrature of log⁺|f| on the circle; N(r,f) is
//! an exact sum over the enumerated poles; T = m + N. The first-main-theorem
//! consistency check and the growth-order estimator live here too.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcmodel::FunctionModel;
use crate::quad::{integrate, QuadratureConfig};
use crate::util::{least_squares_slope, pairwise_sum};
use crate::verify::CheckReport;

/// Locations closer to 0 than this count as the origin in the counting sum.
pub const ORIGIN_TOL: f64 = 1e-10;

const TAU: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Proximity,
    Counting,
    Characteristic,
}

/// One evaluated Nevanlinna quantity at radius r. Counting values are exact
/// (quadrature_error = 0); proximity and characteristic carry a conservative
/// Richardson error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NevanlinnaValue {
    pub r: f64,
    pub value: f64,
    pub quadrature_error: f64,
    pub kind: ValueKind,
}

fn require_positive_radius(r: f64) -> Result<()> {
    if !(r > 0.0) {
        return Err(Error::DomainError(format!("radius must be positive, got {r}")));
    }
    Ok(())
}

/// Raise BoundaryPole if a pole sits on |z| = r. Models whose pole set is not
/// enumerable skip the check (quadrature handles stray singularities by
/// resampling).
fn boundary_precheck(model: &FunctionModel, r: f64) -> Result<()> {
    match model.poles_in_disc(r) {
        Ok(_) => Ok(()),
        Err(Error::Unsupported(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

fn boundary_precheck_at(model: &FunctionModel, a: Complex64, r: f64) -> Result<()> {
    match model.zeros_in_disc(a, r) {
        Ok(_) => Ok(()),
        Err(Error::Unsupported(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

/// m(r,f) = (1/2π) ∫₀^{2π} log⁺|f(re^{iθ})| dθ.
pub fn proximity(model: &FunctionModel, r: f64, cfg: &QuadratureConfig) -> Result<NevanlinnaValue> {
    require_positive_radius(r)?;
    boundary_precheck(model, r)?;
    let (v, e) = integrate(
        |theta| model.log_abs(Complex64::from_polar(r, theta)).max(0.0),
        0.0,
        TAU,
        cfg,
    )?;
    Ok(NevanlinnaValue {
        r,
        value: (v / TAU).max(0.0),
        quadrature_error: e / TAU,
        kind: ValueKind::Proximity,
    })
}

/// m(r, 1/(f−a)) = (1/2π) ∫ log⁺ 1/|f−a| dθ.
pub fn proximity_at(
    model: &FunctionModel,
    a: Complex64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<NevanlinnaValue> {
    require_positive_radius(r)?;
    let g = FunctionModel::shifted(model.clone(), a)?;
    if g.is_identically_zero() {
        return Err(Error::DomainError(
            "the model is identically equal to the target value".into(),
        ));
    }
    boundary_precheck_at(model, a, r)?;
    let (v, e) = integrate(
        |theta| (-g.log_abs(Complex64::from_polar(r, theta))).max(0.0),
        0.0,
        TAU,
        cfg,
    )?;
    Ok(NevanlinnaValue {
        r,
        value: (v / TAU).max(0.0),
        quadrature_error: e / TAU,
        kind: ValueKind::Proximity,
    })
}

fn counting_from_points(points: &[(Complex64, u32)], r: f64) -> f64 {
    let mut terms = Vec::with_capacity(points.len());
    let mut origin_order = 0u32;
    for &(z, m) in points {
        let d = z.norm();
        if d <= ORIGIN_TOL {
            origin_order += m;
        } else {
            terms.push(m as f64 * (r / d).ln());
        }
    }
    terms.push(origin_order as f64 * r.ln());
    pairwise_sum(&terms)
}

/// N(r,f) = Σ_{0<|z|<r} ord_z(f) log(r/|z|) + ord₀(f)·log r, exact.
pub fn counting(model: &FunctionModel, r: f64) -> Result<NevanlinnaValue> {
    require_positive_radius(r)?;
    let poles = model.poles_in_disc(r)?;
    Ok(NevanlinnaValue {
        r,
        value: counting_from_points(&poles, r),
        quadrature_error: 0.0,
        kind: ValueKind::Counting,
    })
}

/// N(r, 1/(f−a)): counting function of the a-points.
pub fn counting_at(model: &FunctionModel, a: Complex64, r: f64) -> Result<NevanlinnaValue> {
    require_positive_radius(r)?;
    let zeros = model.zeros_in_disc(a, r)?;
    Ok(NevanlinnaValue {
        r,
        value: counting_from_points(&zeros, r),
        quadrature_error: 0.0,
        kind: ValueKind::Counting,
    })
}

/// T(r,f) = m(r,f) + N(r,f).
pub fn characteristic(
    model: &FunctionModel,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<NevanlinnaValue> {
    let m = proximity(model, r, cfg)?;
    let n = counting(model, r)?;
    Ok(NevanlinnaValue {
        r,
        value: m.value + n.value,
        quadrature_error: m.quadrature_error,
        kind: ValueKind::Characteristic,
    })
}

/// T(r, 1/(f−a)) = m(r, 1/(f−a)) + N(r, 1/(f−a)).
pub fn characteristic_at(
    model: &FunctionModel,
    a: Complex64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<NevanlinnaValue> {
    let m = proximity_at(model, a, r, cfg)?;
    let n = counting_at(model, a, r)?;
    Ok(NevanlinnaValue {
        r,
        value: m.value + n.value,
        quadrature_error: m.quadrature_error,
        kind: ValueKind::Characteristic,
    })
}

/// m(r, f⁽ᵏ⁾/f⁽ʲ⁾) via the overflow-free quotient evaluation path.
pub fn proximity_quotient(
    model: &FunctionModel,
    k: u32,
    j: u32,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<NevanlinnaValue> {
    require_positive_radius(r)?;
    boundary_precheck(model, r)?;
    // probe once so order errors and identically-vanishing f^{(j)} surface
    // as typed errors rather than quadrature failures
    let probe = model.derivative_quotient_log(Complex64::from_polar(r, 0.37), k, j)?;
    if probe.log_mod().is_nan() {
        return Err(Error::DomainError(format!(
            "derivative of order {j} appears to vanish identically; the quotient is undefined"
        )));
    }
    let (v, e) = integrate(
        |theta| {
            let z = Complex64::from_polar(r, theta);
            match model.derivative_quotient_log(z, k, j) {
                Ok(lc) => lc.log_mod().max(0.0),
                Err(_) => f64::NAN,
            }
        },
        0.0,
        TAU,
        cfg,
    )?;
    Ok(NevanlinnaValue {
        r,
        value: (v / TAU).max(0.0),
        quadrature_error: e / TAU,
        kind: ValueKind::Proximity,
    })
}

/// Moduli of poles and of a-points (for each requested a) out to `r_max`,
/// sorted ascending. Models without enumerable sets contribute nothing.
pub fn singular_moduli(model: &FunctionModel, targets: &[Complex64], r_max: f64) -> Vec<f64> {
    let mut moduli = Vec::new();
    // grow the query radius slightly if a candidate sits on the query circle
    let mut collect = |res: Result<Vec<(Complex64, u32)>>| {
        if let Ok(pts) = res {
            moduli.extend(pts.iter().map(|(z, _)| z.norm()));
        }
    };
    for factor in [1.5, 1.5061, 1.5127] {
        match model.poles_in_disc(r_max * factor) {
            Err(Error::BoundaryPole { .. }) => continue,
            other => {
                collect(other);
                break;
            }
        }
    }
    for &a in targets {
        for factor in [1.5, 1.5061, 1.5127] {
            match model.zeros_in_disc(a, r_max * factor) {
                Err(Error::BoundaryPole { .. }) => continue,
                other => {
                    collect(other);
                    break;
                }
            }
        }
    }
    moduli.retain(|m| m.is_finite());
    moduli.sort_by(|a, b| a.partial_cmp(b).unwrap());
    moduli
}

/// Pre-filter a radius grid: any r within 10×guard (relative) of a singular
/// modulus is nudged outward. Returns (requested, used) pairs.
pub fn nudge_radii(grid: &[f64], moduli: &[f64], guard: f64) -> Vec<(f64, f64)> {
    grid.iter()
        .map(|&r0| {
            let mut r = r0;
            for _ in 0..8 {
                let window = 10.0 * guard * r;
                match moduli.iter().find(|&&m| (r - m).abs() < window) {
                    Some(&m) => r = m + window,
                    None => break,
                }
            }
            (r0, r)
        })
        .collect()
}

/// First main theorem as a bounded-oscillation check: d(r) = |T(r,f) −
/// T(r,1/(f−a))| should stay O(1), tested as a fitted log-r slope. Differences
/// below 3× the accumulated quadrature error are noise and clip to zero.
pub fn first_main_check(
    model: &FunctionModel,
    a: Complex64,
    r_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<CheckReport> {
    if r_grid.is_empty() {
        return Err(Error::GridTooSmall("first main check needs a nonempty grid".into()));
    }
    let r_max = r_grid.iter().cloned().fold(0.0, f64::max);
    let moduli = singular_moduli(model, &[a], r_max);
    let nudged = nudge_radii(r_grid, &moduli, cfg.singularity_guard);
    let mut grid = Vec::new();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut clipped = Vec::new();
    let mut tol_used = 0.0f64;
    for (_, r) in nudged {
        let tf = characteristic(model, r, cfg)?;
        let ti = characteristic_at(model, a, r, cfg)?;
        let tol = 3.0 * (tf.quadrature_error + ti.quadrature_error);
        let d = (tf.value - ti.value).abs();
        grid.push(r);
        lhs.push(tf.value);
        rhs.push(ti.value);
        clipped.push(if d <= tol { 0.0 } else { d });
        tol_used = tol_used.max(tol);
    }
    let logs: Vec<f64> = grid.iter().map(|r| r.ln()).collect();
    let slope = least_squares_slope(&logs, &clipped);
    Ok(CheckReport::bounded_oscillation(
        "first-main-theorem".to_string(),
        grid,
        lhs,
        rhs,
        slope,
        tol_used,
    ))
}

/// Least-squares slope of log T against log r: the order-of-growth estimate.
pub fn growth_order_estimate(
    model: &FunctionModel,
    r_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let r_min = r_grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let r_max = r_grid.iter().cloned().fold(0.0, f64::max);
    if r_grid.len() < 2 || !(r_max / r_min >= 10.0) {
        return Err(Error::GridTooSmall(format!(
            "growth order needs a grid spanning a decade with at least 2 points, got {} points over [{r_min}, {r_max}]",
            r_grid.len()
        )));
    }
    let moduli = singular_moduli(model, &[], r_max);
    let nudged = nudge_radii(r_grid, &moduli, cfg.singularity_guard);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (_, r) in nudged {
        let t = characteristic(model, r, cfg)?;
        if t.value > 0.0 {
            xs.push(r.ln());
            ys.push(t.value.ln());
        }
    }
    if xs.len() < 2 {
        return Err(Error::GridTooSmall(
            "growth order needs at least two radii with positive characteristic".into(),
        ));
    }
    Ok(least_squares_slope(&xs, &ys))
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::modeltext::parse_model;
    use crate::util::build_grid;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn m(text: &str) -> FunctionModel {
        parse_model(text).unwrap()
    }

    #[test]
    fn proximity_of_monomials_is_exact() {
        for k in 1..=3u32 {
            for &r in &[2.0, 10.0, 100.0] {
                let model = m(&format!("z^{k}"));
                let v = proximity(&model, r, &cfg()).unwrap();
                let want = k as f64 * r.ln();
                assert!((v.value - want).abs() < 1e-9, "k={k} r={r}: {} vs {want}", v.value);
            }
        }
    }

    #[test]
    fn proximity_small_function_vanishes() {
        let v = proximity(&m("1/(z)"), 10.0, &cfg()).unwrap();
        assert_eq!(v.value, 0.0);
        let v = proximity_at(&m("z"), Complex64::new(0.0, 0.0), 10.0, &cfg()).unwrap();
        assert_eq!(v.value, 0.0);
        let v = proximity_at(&m("2*z"), Complex64::new(0.0, 0.0), 10.0, &cfg()).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn proximity_exp_monomial_closed_form() {
        // m(r, exp(zⁿ)) = rⁿ/π (the cosine positive part integrates to 2/n·rⁿ/2…)
        for &(n, r) in &[(2u32, 2.0), (2, 5.0), (3, 2.0), (3, 5.0)] {
            let model = FunctionModel::exp_monomial(n);
            let v = proximity(&model, r, &cfg()).unwrap();
            let want = r.powi(n as i32) / std::f64::consts::PI;
            assert!(
                (v.value - want).abs() < 1e-6 * want,
                "n={n} r={r}: {} vs {want}",
                v.value
            );
        }
    }

    #[test]
    fn proximity_at_matches_reciprocal() {
        let tan = m("tan(z)");
        let cot = FunctionModel::reciprocal(tan.clone()).unwrap();
        let a = Complex64::new(0.0, 0.0);
        for &r in &[2.0, 7.0] {
            let lhs = proximity_at(&tan, a, r, &cfg()).unwrap();
            let rhs = proximity(&cot, r, &cfg()).unwrap();
            assert!((lhs.value - rhs.value).abs() < 1e-10);
        }
    }

    #[test]
    fn counting_examples() {
        // single pole at the origin: N(e, 1/z) = log e = 1
        let v = counting(&m("1/(z)"), std::f64::consts::E).unwrap();
        assert!((v.value - 1.0).abs() < 1e-14);
        assert_eq!(v.quadrature_error, 0.0);

        // two simple tan poles at ±π/2 inside r = 2: N = 2·log(4/π)
        let v = counting(&m("tan(z)"), 2.0).unwrap();
        assert!((v.value - 0.48312895054098089).abs() < 1e-14, "{}", v.value);

        // entire model
        let v = counting(&FunctionModel::exp_monomial(5), 100.0).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn characteristic_exp_and_rational() {
        for &(n, r) in &[(2u32, 2.0), (2, 5.0), (3, 2.0), (3, 5.0)] {
            let t = characteristic(&FunctionModel::exp_monomial(n), r, &cfg()).unwrap();
            let want = r.powi(n as i32) / std::f64::consts::PI;
            assert!((t.value - want).abs() < 1e-6 * want);
        }
        // rational: T(r) ≈ max(deg p, deg q)·log r + O(1); slope fit over a grid
        let model = m("(z^3+1)/(z-2)");
        let grid = build_grid(1e3, 1e6, 6, true);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &r in &grid {
            let t = characteristic(&model, r, &cfg()).unwrap();
            xs.push(r.ln());
            ys.push(t.value);
        }
        let slope = least_squares_slope(&xs, &ys);
        assert!((slope - 3.0).abs() < 1e-3, "T slope {slope}");
    }

    #[test]
    fn characteristic_tan_linear_growth() {
        let t = characteristic(&m("tan(z)"), 50.0, &cfg()).unwrap();
        let want = 2.0 / std::f64::consts::PI;
        let got = t.value / 50.0;
        assert!((got - want).abs() < 0.05 * want, "T(50,tan)/50 = {got}, want ≈ {want}");
    }

    #[test]
    fn first_main_check_examples() {
        let grid = build_grid(2.0, 50.0, 8, true);

        // f = z, a = 1: Jensen gives d(r) = log|f(0)−1| = 0 exactly.
        let report =
            first_main_check(&m("z"), Complex64::new(1.0, 0.0), &grid, &cfg()).unwrap();
        assert!(report.slope_fit.unwrap().abs() <= 0.05);
        for (l, r) in report.lhs.iter().zip(report.rhs.iter()) {
            assert!((l - r).abs() < 1e-6, "{l} vs {r}");
        }

        // f = tan, a = 0.
        let report =
            first_main_check(&m("tan(z)"), Complex64::new(0.0, 0.0), &grid, &cfg()).unwrap();
        assert!(report.slope_fit.unwrap().abs() <= 0.05, "{:?}", report.slope_fit);

        // f = exp(z), a = 0: T(r, 1/f) = T(r, f) exactly.
        let report = first_main_check(
            &FunctionModel::exp_monomial(1),
            Complex64::new(0.0, 0.0),
            &grid,
            &cfg(),
        )
        .unwrap();
        assert!(report.slope_fit.unwrap().abs() <= 1e-9);
    }

    #[test]
    fn growth_orders() {
        let c = cfg();
        let order = growth_order_estimate(&FunctionModel::exp_monomial(3), &build_grid(2.0, 50.0, 8, true), &c).unwrap();
        assert!((order - 3.0).abs() < 0.01, "exp(z³) order {order}");

        let order = growth_order_estimate(&m("(z^3+1)/(z-2)"), &build_grid(1e40, 1e60, 5, true), &c).unwrap();
        assert!(order.abs() < 0.01, "rational order {order}");

        let order = growth_order_estimate(&m("tan(z)"), &build_grid(20.0, 2000.0, 10, true), &c).unwrap();
        assert!((order - 1.0).abs() < 0.02, "tan order {order}");
    }

    #[test]
    fn growth_order_grid_validation() {
        let c = cfg();
        assert!(matches!(
            growth_order_estimate(&m("tan(z)"), &build_grid(5.0, 20.0, 5, true), &c),
            Err(Error::GridTooSmall(_))
        ));
    }

    #[test]
    fn nevanlinna_nonnegative_and_monotone() {
        let model = m("tan(z)");
        let grid = build_grid(1.0, 40.0, 12, true);
        let mut last_n = 0.0;
        for &r in &grid {
            let mv = proximity(&model, r, &cfg()).unwrap();
            let nv = counting(&model, r).unwrap();
            assert!(mv.value >= 0.0 && nv.value >= 0.0);
            assert!(nv.value >= last_n - 1e-12, "N not monotone at r={r}");
            last_n = nv.value;
        }
    }

    #[test]
    fn jensen_reciprocal_residual_bounded() {
        // T(r,f) − T(r,1/f) stays bounded (clipped slope ≤ 0.02)
        for text in ["tan(z)", "(z^2+1)/(z-3)", "exp(z^2)"] {
            let model = m(text);
            let rec = FunctionModel::reciprocal(model.clone()).unwrap();
            let grid = build_grid(2.0, 50.0, 8, true);
            let moduli = singular_moduli(&model, &[Complex64::new(0.0, 0.0)], 50.0);
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for (_, r) in nudge_radii(&grid, &moduli, cfg().singularity_guard) {
                let tf = characteristic(&model, r, &cfg()).unwrap();
                let tr = characteristic(&rec, r, &cfg()).unwrap();
                let tol = 3.0 * (tf.quadrature_error + tr.quadrature_error);
                let d = (tf.value - tr.value).abs();
                xs.push(r.ln());
                ys.push(if d <= tol { 0.0 } else { d });
            }
            let slope = least_squares_slope(&xs, &ys);
            assert!(slope.abs() <= 0.02, "{text}: Jensen residual slope {slope}");
        }
    }

    #[test]
    fn boundary_pole_rejected() {
        let model = m("tan(z)");
        assert!(matches!(
            proximity(&model, std::f64::consts::FRAC_PI_2, &cfg()),
            Err(Error::BoundaryPole { .. })
        ));
    }

    #[test]
    fn nudging_moves_radius_off_poles() {
        let model = m("tan(z)");
        let moduli = singular_moduli(&model, &[], 10.0);
        let g = cfg().singularity_guard;
        let grid = [std::f64::consts::FRAC_PI_2];
        let nudged = nudge_radii(&grid, &moduli, g);
        assert!(nudged[0].1 > std::f64::consts::FRAC_PI_2);
        let far = [3.0];
        let nudged = nudge_radii(&far, &moduli, g);
        assert_eq!(nudged[0].0, nudged[0].1);
    }

    #[test]
    fn quotient_proximity_basics() {
        // f = exp(z): f''/f' = 1, so m = 0.
        let v = proximity_quotient(&FunctionModel::exp_monomial(1), 2, 1, 10.0, &cfg()).unwrap();
        assert!(v.value < 1e-12);

        // f = exp(z²): f'/f = 2z, m(r) = log(2r). Check at r = 10.
        let v = proximity_quotient(&FunctionModel::exp_monomial(2), 1, 0, 10.0, &cfg()).unwrap();
        assert!((v.value - 20.0f64.ln()).abs() < 1e-8, "{}", v.value);

        // order mismatch is a typed error
        assert!(matches!(
            proximity_quotient(&FunctionModel::exp_monomial(2), 1, 2, 10.0, &cfg()),
            Err(Error::OrderError { .. })
        ));
    }
}
