//! Polynomial root finding by Aberth–Ehrlich simultaneous iteration, with
//! cluster detection for multiple roots.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Relative residual tolerance: |p(root)| ≤ TOL_ROOT · Σ|cᵢ||root|^i.
pub const TOL_ROOT: f64 = 1e-12;
/// Default clustering radius for merging floating-point duplicates.
pub const CLUSTER_RADIUS: f64 = 1e-8;
const MAX_ITER: usize = 400;

/// All roots of p, unclustered, in a deterministic order (sorted by re, im).
pub fn polynomial_roots_raw(p: &Polynomial) -> Result<Vec<Complex64>> {
    let deg = p.degree().ok_or_else(|| {
        Error::InvalidConstruction("cannot take roots of the zero polynomial".into())
    })?;
    if deg == 0 {
        return Err(Error::InvalidConstruction(
            "cannot take roots of a constant polynomial".into(),
        ));
    }

    // Strip exact roots at the origin first; they are common (monomials) and
    // the iteration handles them less cleanly than direct removal.
    let mut coeffs = p.coeffs().to_vec();
    let mut origin = 0usize;
    while coeffs[0].norm_sqr() == 0.0 {
        coeffs.remove(0);
        origin += 1;
    }
    let reduced = Polynomial::new(coeffs);
    let mut roots = vec![Complex64::new(0.0, 0.0); origin];
    if let Some(d) = reduced.degree() {
        if d > 0 {
            roots.extend(aberth(&reduced)?);
        }
    }
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

/// Roots merged into (location, multiplicity) records.
///
/// Floating duplicates are merged at `cluster_radius`; genuine multiple roots
/// scatter wider (≈ machine-epsilon^(1/m)), so a second pass merges any
/// tighter group whose centroid also annihilates the first m−1 derivatives.
pub fn roots_with_multiplicity(
    p: &Polynomial,
    cluster_radius: f64,
) -> Result<Vec<(Complex64, u32)>> {
    let raw = polynomial_roots_raw(p)?;
    let first = cluster(&raw, cluster_radius);
    let wide = cluster(&first.iter().map(|&(z, _)| z).collect::<Vec<_>>(), 1e-5);

    let mut merged: Vec<(Complex64, u32)> = Vec::new();
    let mut idx = 0usize;
    for &(center, group) in &wide {
        let members = &first[idx..idx + group as usize];
        idx += group as usize;
        let mult_total: u32 = members.iter().map(|&(_, m)| m).sum();
        if members.len() > 1 && certified_multiplicity(p, center, mult_total) {
            merged.push((polish_multiple(p, center, mult_total), mult_total));
        } else {
            merged.extend_from_slice(members);
        }
    }
    merged.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap()
            .then(a.0.im.partial_cmp(&b.0.im).unwrap())
    });
    Ok(merged)
}

/// Greedy merge of a sorted root list at the given radius; returns centroids
/// with member counts, still sorted.
fn cluster(roots: &[Complex64], radius: f64) -> Vec<(Complex64, u32)> {
    let mut out: Vec<(Complex64, u32)> = Vec::new();
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        let mut sum = roots[i];
        let mut count = 1u32;
        let scale = 1.0f64.max(roots[i].norm());
        for j in (i + 1)..roots.len() {
            if !used[j] && (roots[j] - roots[i]).norm() <= radius * scale {
                used[j] = true;
                sum += roots[j];
                count += 1;
            }
        }
        out.push((sum / count as f64, count));
    }
    out.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap()
            .then(a.0.im.partial_cmp(&b.0.im).unwrap())
    });
    out
}

/// Refine a multiplicity-m cluster centroid: such a point is a simple root of
/// the (m−1)th derivative, where Newton recovers full precision. The centroid
/// is kept if the iteration tries to leave the cluster's neighbourhood.
fn polish_multiple(p: &Polynomial, z0: Complex64, m: u32) -> Complex64 {
    let mut d = p.clone();
    for _ in 0..m.saturating_sub(1) {
        d = d.derivative();
    }
    let dd = d.derivative();
    let mut z = z0;
    for _ in 0..4 {
        let dv = dd.eval(z);
        if dv.norm_sqr() == 0.0 {
            break;
        }
        let step = d.eval(z) / dv;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-15 * z.norm().max(1.0) {
            break;
        }
    }
    let scale = 1.0f64.max(z0.norm());
    if (z - z0).norm() <= 1e-4 * scale {
        z
    } else {
        z0
    }
}

/// True when c behaves like a root of multiplicity m: p and its first m−1
/// derivatives all vanish at c relative to their own scales.
fn certified_multiplicity(p: &Polynomial, c: Complex64, m: u32) -> bool {
    let mut d = p.clone();
    for _ in 0..m {
        let scale = d.scale_at(c.norm()).max(f64::MIN_POSITIVE);
        if d.eval(c).norm() > 1e-6 * scale {
            return false;
        }
        d = d.derivative();
    }
    true
}

fn aberth(p: &Polynomial) -> Result<Vec<Complex64>> {
    let dp = p.derivative();
    let n = p.degree().unwrap();

    // Cauchy-style radius containing all roots, with a few deterministic
    // rescales as a fallback for poor initial spread.
    let lead = p.leading().norm();
    let base_radius = {
        let c0 = p.coeffs()[0].norm();
        if c0 > 0.0 {
            (c0 / lead).powf(1.0 / n as f64)
        } else {
            1.0
        }
    };

    for &factor in &[1.0, 2.0, 0.5, 4.0] {
        let radius = (base_radius * factor).max(1e-3);
        let mut zs: Vec<Complex64> = (0..n)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.7;
                Complex64::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect();

        if aberth_iterate(p, &dp, &mut zs) {
            let ok = zs.iter().all(|&z| p.eval(z).norm() <= TOL_ROOT * p.scale_at(z.norm()) * 1e2);
            if ok {
                return Ok(zs);
            }
        }
    }
    Err(Error::RootFindingFailure(format!(
        "Aberth iteration did not converge for degree {n}"
    )))
}

fn aberth_iterate(p: &Polynomial, dp: &Polynomial, zs: &mut [Complex64]) -> bool {
    let n = zs.len();
    for _ in 0..MAX_ITER {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let zi = zs[i];
            let pv = p.eval(zi);
            if pv.norm() == 0.0 {
                continue;
            }
            let dv = dp.eval(zi);
            let newton = if dv.norm_sqr() == 0.0 {
                // At a critical point: nudge deterministically.
                Complex64::new(1e-8, 1e-8)
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in zs.iter().enumerate() {
                if j != i {
                    let d = zi - zj;
                    if d.norm_sqr() > 0.0 {
                        repulsion += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm_sqr() == 0.0 { newton } else { newton / denom };
            zs[i] = zi - step;
            let rel = step.norm() / 1.0f64.max(zs[i].norm());
            max_step = max_step.max(rel);
        }
        if max_step < 1e-14 {
            return true;
        }
    }
    // Accept on residual even without step convergence (multiple roots
    // stall on steps while residuals are long since at the noise floor).
    zs.iter().all(|&z| p.eval(z).norm() <= TOL_ROOT * p.scale_at(z.norm()) * 1e2)
}
