use std::f64::consts::PI;

use hypoly_combinatorics::{is_short, polygon_nonempty, IndexSet, WeightVector};
use nalgebra::{Rotation3, Unit, Vector3};
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{IsomError, Result};
use crate::point::HyperpolygonPoint;
use crate::scalar::Cx;

/// Spinor `q` with `|q|² = 2|v|` whose traceless part `(q q*)_0` corresponds to `v`.
///
/// Convention: `v = (Re c d̄, Im c d̄, (|c|² − |d|²)/2)`.
pub fn lift_vector(v: &Vector3<f64>) -> [Cx<f64>; 2] {
    let len = v.norm();
    let (x, y, z) = (v.x, v.y, v.z);
    if z >= 0.0 {
        let c = (len + z).sqrt();
        let d = if c == 0.0 { 0.0.into() } else { Cx::new(x, -y) / c };
        [Cx::new(c, 0.0), d]
    } else {
        let d = (len - z).sqrt();
        [Cx::new(x, y) / d, Cx::new(d, 0.0)]
    }
}

/// The vector attached to a spinor; inverse of [`lift_vector`] up to phase.
pub fn edge_vector(q: &[Cx<f64>; 2]) -> Vector3<f64> {
    let [c, d] = q;
    let w = c * d.conj();
    Vector3::new(w.re, w.im, (c.norm_sqr() - d.norm_sqr()) / 2.0)
}

/// Lifts a closed polygon to a point with `p = 0`.
pub fn lift_polygon(vectors: &[Vector3<f64>], tol: f64) -> Result<HyperpolygonPoint<f64>> {
    let total: Vector3<f64> = vectors.iter().sum();
    let scale = vectors.iter().map(|v| v.norm()).fold(1.0, f64::max);
    if total.norm() > tol * scale {
        return Err(IsomError::NotClosed { gap: total.norm() });
    }
    Ok(HyperpolygonPoint::from_q(vectors.iter().map(lift_vector).collect()))
}

fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Vector3<f64> {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).sqrt();
    Vector3::new(r * phi.cos(), r * phi.sin(), z)
}

fn interior<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen_range(0.1..0.9)
}

/// A random closed polygon in ℝ³ with the given edge lengths, built from random diagonals.
pub fn random_closed_polygon<R: Rng + ?Sized>(
    lengths: &[f64],
    rng: &mut R,
) -> Result<Vec<Vector3<f64>>> {
    let k = lengths.len();
    let total: f64 = lengths.iter().sum();
    let longest = lengths.iter().cloned().fold(0.0, f64::max);
    if k < 2 || 2.0 * longest > total * (1.0 + 1e-12) {
        return Err(IsomError::Sampling("edge lengths admit no closed polygon".into()));
    }
    if k == 2 {
        let v = random_unit(rng) * lengths[0];
        return Ok(vec![v, -v]);
    }
    let mut diag = vec![lengths[0]];
    for m in 1..k - 2 {
        let rest = &lengths[m + 1..];
        let rest_sum: f64 = rest.iter().sum();
        let rest_max = rest.iter().cloned().fold(0.0, f64::max);
        let prev = diag[m - 1];
        let lo = (prev - lengths[m]).abs().max(2.0 * rest_max - rest_sum).max(0.0);
        let hi = (prev + lengths[m]).min(rest_sum);
        diag.push(interior(rng, lo, hi));
    }
    diag.push(lengths[k - 1]);
    let mut points = vec![random_unit(rng) * diag[0]];
    for m in 1..k - 1 {
        let prev = points[m - 1];
        let (r0, r1, len) = (diag[m - 1], diag[m], lengths[m]);
        let cos = ((r0 * r0 + r1 * r1 - len * len) / (2.0 * r0 * r1)).clamp(-1.0, 1.0);
        let sin = (1.0 - cos * cos).sqrt();
        let u = prev / r0;
        let e1 = u.cross(&random_unit(rng)).normalize();
        let e2 = u.cross(&e1);
        let phi: f64 = rng.gen_range(0.0..2.0 * PI);
        points.push((u * cos + (e1 * phi.cos() + e2 * phi.sin()) * sin) * r1);
    }
    let mut edges = vec![points[0]];
    for m in 1..k - 1 {
        edges.push(points[m] - points[m - 1]);
    }
    edges.push(-points[k - 2]);
    Ok(edges)
}

fn to_f64(alpha: &WeightVector) -> Vec<f64> {
    alpha.iter().map(|a| a.to_f64().unwrap_or(f64::NAN)).collect()
}

/// A random point of the polygon space inside the hyperpolygon space.
pub fn sample_polygon_point<R: Rng + ?Sized>(
    alpha: &WeightVector,
    rng: &mut R,
) -> Result<HyperpolygonPoint<f64>> {
    if !polygon_nonempty(alpha.entries())? {
        return Err(IsomError::Sampling("polygon space is empty".into()));
    }
    let edges = random_closed_polygon(&to_f64(alpha), rng)?;
    lift_polygon(&edges, 1e-9)
}

/// A random point of the core component attached to a short set `S` with `|S| ≥ 2`:
/// the `q_i` for `i ∈ S` are all proportional and `p` vanishes off `S`.
pub fn sample_core_point<R: Rng + ?Sized>(
    alpha: &WeightVector,
    s: IndexSet,
    rng: &mut R,
) -> Result<HyperpolygonPoint<f64>> {
    let n = alpha.n();
    if s.n() != n || s.len() < 2 || !is_short(alpha.entries(), s) {
        return Err(IsomError::Sampling(format!("{s} is not a short set with |S| ≥ 2")));
    }
    let a = to_f64(alpha);
    let inside: Vec<usize> = s.members().map(|i| i - 1).collect();
    let outside: Vec<usize> = s.complement().members().map(|i| i - 1).collect();
    let sum_in: f64 = inside.iter().map(|&i| a[i]).sum();
    let sum_out: f64 = outside.iter().map(|&i| a[i]).sum();
    let max_out = outside.iter().map(|&i| a[i]).fold(0.0, f64::max);

    let target = if outside.len() == 1 {
        sum_out
    } else {
        interior(rng, sum_in.max(2.0 * max_out - sum_out), sum_out)
    };

    let mut shape: Vec<Cx<f64>> = inside
        .iter()
        .map(|_| Cx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mean = shape.iter().sum::<Cx<f64>>() / shape.len() as f64;
    shape.iter_mut().for_each(|z| *z -= mean);
    let reach = |t: f64| -> f64 {
        inside
            .iter()
            .zip(&shape)
            .map(|(&i, z)| (a[i] * a[i] + t * t * z.norm_sqr()).sqrt())
            .sum()
    };
    let mut hi = 1.0;
    while reach(hi) < target {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if reach(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let w_len = reach(t);

    let mut lengths: Vec<f64> = outside.iter().map(|&i| a[i]).collect();
    lengths.push(w_len);
    let edges = random_closed_polygon(&lengths, rng)?;
    let w = edges[edges.len() - 1];
    let rot = Rotation3::rotation_between(&w, &Vector3::z())
        .unwrap_or_else(|| Rotation3::from_axis_angle(&Unit::new_normalize(Vector3::x()), PI));

    let zero = Cx::new(0.0, 0.0);
    let mut p = vec![[zero, zero]; n];
    let mut q = vec![[zero, zero]; n];
    for (&i, z) in inside.iter().zip(&shape) {
        let u = z * t;
        let c = (a[i] + (a[i] * a[i] + u.norm_sqr()).sqrt()).sqrt();
        q[i] = [Cx::new(c, 0.0), zero];
        p[i] = [zero, u / c];
    }
    for (&j, e) in outside.iter().zip(&edges) {
        q[j] = lift_vector(&(rot * e));
    }
    HyperpolygonPoint::new(p, q)
}
