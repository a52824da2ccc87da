use crate::pareto::{lex_cmp, ParetoFront};

/// Index of the front member minimizing `Σ w_m · f_m`, optionally after
/// scaling each objective by `widths`. Ties go to the lexicographically
/// smaller objective vector.
pub fn scalarized_argmin(front: &ParetoFront, weights: &[f64], widths: Option<&[f64]>) -> Option<usize> {
    let members = front.members();
    let cost = |i: usize| -> f64 {
        members[i]
            .objectives
            .iter()
            .enumerate()
            .map(|(m, f)| {
                let (lo, scale) = match widths {
                    Some(w) => (front.ranges()[m].0, w[m]),
                    None => (0.0, 1.0),
                };
                weights[m] * (f - lo) / scale
            })
            .sum()
    };
    (0..members.len()).min_by(|&a, &b| {
        cost(a)
            .total_cmp(&cost(b))
            .then_with(|| lex_cmp(&members[a].objectives, &members[b].objectives))
    })
}

/// Members of a two-objective front that some non-negative weighting can
/// select: the vertices of its lower-left convex hull, after scaling by
/// `widths`. `None` for other objective counts.
pub fn supported_members(front: &ParetoFront, widths: &[f64]) -> Option<Vec<usize>> {
    if front.objective_count() != 2 {
        return None;
    }
    let members = front.members();
    let point = |i: usize| {
        let f = &members[i].objectives;
        (f[0] / widths[0], f[1] / widths[1])
    };
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (point(a), point(b));
        pa.0.total_cmp(&pb.0).then(pa.1.total_cmp(&pb.1))
    });
    // Monotone chain; on a non-dominated front sorted by the first objective
    // the second one decreases, so the lower hull is the whole relevant part.
    let mut hull: Vec<usize> = Vec::new();
    for i in order {
        while hull.len() >= 2 {
            let (o, a, b) = (point(hull[hull.len() - 2]), point(hull[hull.len() - 1]), point(i));
            let cross = (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    Some(hull)
}
