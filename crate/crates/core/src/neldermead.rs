//! Derivative-free simplex minimization of a function of two variables over
//! a rectangle. Fully deterministic: a fixed initial simplex, the classic
//! reflect/expand/contract/shrink moves, and every candidate clamped into
//! the box.

type Point = [f64; 2];

fn clamp(p: Point, lower: Point, upper: Point) -> Point {
    [
        p[0].clamp(lower[0], upper[0]),
        p[1].clamp(lower[1], upper[1]),
    ]
}

fn diameter(s: &[(Point, f64); 3]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let dx = s[i].0[0] - s[j].0[0];
            let dy = s[i].0[1] - s[j].0[1];
            d = d.max(dx.hypot(dy));
        }
    }
    d
}

/// Minimize `f` over the rectangle `[lower, upper]`, starting from `start`
/// with an initial simplex of edge `scale`. Returns the best point and its
/// value after `max_iters` iterations or once the simplex diameter falls
/// below 1e-10.
pub fn minimize2d(
    f: impl Fn(f64, f64) -> f64,
    start: (f64, f64),
    scale: f64,
    lower: (f64, f64),
    upper: (f64, f64),
    max_iters: usize,
) -> ((f64, f64), f64) {
    let lower = [lower.0, lower.1];
    let upper = [upper.0, upper.1];
    let eval = |p: Point| f(p[0], p[1]);

    let p0 = clamp([start.0, start.1], lower, upper);
    // Step away from a clamped edge toward the interior so the simplex
    // never starts degenerate.
    let step = |p: Point, axis: usize| {
        let mut q = p;
        q[axis] += if p[axis] + scale <= upper[axis] { scale } else { -scale };
        clamp(q, lower, upper)
    };
    let p1 = step(p0, 0);
    let p2 = step(p0, 1);
    let mut simplex = [(p0, eval(p0)), (p1, eval(p1)), (p2, eval(p2))];

    for _ in 0..max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if diameter(&simplex) < 1e-10 {
            break;
        }
        let (best, mid, worst) = (simplex[0], simplex[1], simplex[2]);
        let centroid = [
            0.5 * (best.0[0] + mid.0[0]),
            0.5 * (best.0[1] + mid.0[1]),
        ];
        let reflect = clamp(
            [
                centroid[0] + (centroid[0] - worst.0[0]),
                centroid[1] + (centroid[1] - worst.0[1]),
            ],
            lower,
            upper,
        );
        let fr = eval(reflect);
        if fr < best.1 {
            let expand = clamp(
                [
                    centroid[0] + 2.0 * (centroid[0] - worst.0[0]),
                    centroid[1] + 2.0 * (centroid[1] - worst.0[1]),
                ],
                lower,
                upper,
            );
            let fe = eval(expand);
            simplex[2] = if fe < fr { (expand, fe) } else { (reflect, fr) };
            continue;
        }
        if fr < mid.1 {
            simplex[2] = (reflect, fr);
            continue;
        }
        let toward = if fr < worst.1 { reflect } else { worst.0 };
        let contract = clamp(
            [
                centroid[0] + 0.5 * (toward[0] - centroid[0]),
                centroid[1] + 0.5 * (toward[1] - centroid[1]),
            ],
            lower,
            upper,
        );
        let fc = eval(contract);
        if fc < worst.1.min(fr) {
            simplex[2] = (contract, fc);
            continue;
        }
        for vertex in simplex.iter_mut().skip(1) {
            let shrunk = clamp(
                [
                    best.0[0] + 0.5 * (vertex.0[0] - best.0[0]),
                    best.0[1] + 0.5 * (vertex.0[1] - best.0[1]),
                ],
                lower,
                upper,
            );
            *vertex = (shrunk, eval(shrunk));
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    ((simplex[0].0[0], simplex[0].0[1]), simplex[0].1)
}
