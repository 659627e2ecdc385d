use std::collections::HashMap;

use serde::Serialize;

use super::{continued_sqrt, Diagram, LineKind, QFunction, SingularPoint, StokesLine};
use crate::numerics::{gauss_legendre_segment, Complex};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PurityReport {
    /// `max |wrong part of F| / (1 + |right part of F|)` over the line.
    pub worst: f64,
    /// Value of the recomputed integral at the last point.
    pub last: Complex,
}

/// Recomputes `∫√Q dz` along a polyline with five-point Gauss–Legendre per
/// chord and its own branch continuation, starting from the local
/// expansion at the origin vertex, and reports how far it strays from the
/// real (anti-Stokes) or imaginary (Stokes) axis.
pub fn phase_purity<Q: QFunction + ?Sized>(
    q: &Q,
    origin: &SingularPoint,
    kind: LineKind,
    points: &[Complex],
) -> PurityReport {
    let Some(&first) = points.first() else {
        return PurityReport { worst: 0.0, last: Complex::new(0.0, 0.0) };
    };
    let half_power = (origin.order + 2) as f64 / 2.0;
    let mut w = q.eval(first).sqrt();
    let mut f = w * (first - origin.z) / half_power;
    if kind.right_part(f) < 0.0 {
        w = -w;
        f = -f;
    }
    let mut worst = kind.wrong_part(f).abs() / (1.0 + kind.right_part(f).abs());
    for pair in points.windows(2) {
        let mut reference = w;
        f += gauss_legendre_segment(
            |z| {
                reference = continued_sqrt(q.eval(z), reference);
                reference
            },
            pair[0],
            pair[1],
        );
        w = continued_sqrt(q.eval(pair[1]), w);
        worst = worst.max(kind.wrong_part(f).abs() / (1.0 + kind.right_part(f).abs()));
    }
    PurityReport { worst, last: f }
}

fn segment_distance(p: Complex, a: Complex, b: Complex) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + d * t)).norm()
}

/// Segments bucketed on a square grid for nearest-segment queries.
struct SegmentIndex {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<(Complex, Complex)>>,
    all: Vec<(Complex, Complex)>,
}

impl SegmentIndex {
    fn new(polylines: &[Vec<Complex>], cell: f64) -> Self {
        let mut buckets: HashMap<(i64, i64), Vec<(Complex, Complex)>> = HashMap::new();
        let mut all = Vec::new();
        for line in polylines {
            for pair in line.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let (x0, x1) = ((a.re.min(b.re) / cell).floor() as i64, (a.re.max(b.re) / cell).floor() as i64);
                let (y0, y1) = ((a.im.min(b.im) / cell).floor() as i64, (a.im.max(b.im) / cell).floor() as i64);
                for x in x0..=x1 {
                    for y in y0..=y1 {
                        buckets.entry((x, y)).or_default().push((a, b));
                    }
                }
                all.push((a, b));
            }
            if line.len() == 1 {
                all.push((line[0], line[0]));
                let key = ((line[0].re / cell).floor() as i64, (line[0].im / cell).floor() as i64);
                buckets.entry(key).or_default().push((line[0], line[0]));
            }
        }
        Self { cell, buckets, all }
    }

    fn distance(&self, p: Complex) -> f64 {
        let (cx, cy) = ((p.re / self.cell).floor() as i64, (p.im / self.cell).floor() as i64);
        let mut best = f64::INFINITY;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(segs) = self.buckets.get(&(cx + dx, cy + dy)) {
                    for (a, b) in segs {
                        best = best.min(segment_distance(p, *a, *b));
                    }
                }
            }
        }
        if best <= self.cell {
            return best;
        }
        self.all.iter().map(|(a, b)| segment_distance(p, *a, *b)).fold(f64::INFINITY, f64::min)
    }
}

/// Symmetric Hausdorff distance between two sets of polylines (points of
/// each against segments of the other).
pub fn polyline_hausdorff(a: &[Vec<Complex>], b: &[Vec<Complex>], cell: f64) -> f64 {
    let ia = SegmentIndex::new(a, cell);
    let ib = SegmentIndex::new(b, cell);
    let one_way = |from: &[Vec<Complex>], to: &SegmentIndex| {
        from.iter().flatten().map(|p| to.distance(*p)).fold(0.0, f64::max)
    };
    one_way(a, &ib).max(one_way(b, &ia))
}

fn mapped_distance(d: &Diagram, map: impl Fn(Complex) -> Complex) -> f64 {
    let cell = 0.05 * d.scale;
    [LineKind::AntiStokes, LineKind::Stokes]
        .iter()
        .map(|kind| {
            let lines: Vec<Vec<Complex>> =
                d.lines.iter().filter(|l| l.kind == *kind).map(|l| l.points.clone()).collect();
            let image: Vec<Vec<Complex>> = lines.iter().map(|l| l.iter().map(|z| map(*z)).collect()).collect();
            polyline_hausdorff(&lines, &image, cell)
        })
        .fold(0.0, f64::max)
}

/// Hausdorff distance between the line set and its mirror image in the
/// real axis, per kind (the larger of the two).
pub fn conjugation_distance(d: &Diagram) -> f64 {
    mapped_distance(d, |z| z.conj())
}

/// Same for the point reflection `z → -z`.
pub fn parity_distance(d: &Diagram) -> f64 {
    mapped_distance(d, |z| -z)
}

fn cross(a: Complex, b: Complex) -> f64 {
    a.re * b.im - a.im * b.re
}

fn interpolated_tangent(line: &StokesLine, k: usize, t: f64) -> Complex {
    let v = line.tangent(k) * (1.0 - t) + line.tangent(k + 1) * t;
    v / v.norm()
}

/// Angles between Stokes and anti-Stokes lines where they cross, away
/// from singular points (closer than `exclusion` are skipped). Tangents are
/// interpolated from the field directions stored along each line.
pub fn intersection_angles(d: &Diagram, exclusion: f64) -> Vec<(Complex, f64)> {
    let anti: Vec<&StokesLine> = d.lines.iter().filter(|l| l.kind == LineKind::AntiStokes).collect();
    let stokes: Vec<&StokesLine> = d.lines.iter().filter(|l| l.kind == LineKind::Stokes).collect();
    let near_singular = |z: Complex| d.vertices.iter().any(|v| (v.z - z).norm() < exclusion);
    let mut out = Vec::new();
    for a in &anti {
        for s in &stokes {
            for i in 0..a.points.len().saturating_sub(1) {
                let (p0, p1) = (a.points[i], a.points[i + 1]);
                for j in 0..s.points.len().saturating_sub(1) {
                    let (q0, q1) = (s.points[j], s.points[j + 1]);
                    if p0.re.max(p1.re) < q0.re.min(q1.re)
                        || q0.re.max(q1.re) < p0.re.min(p1.re)
                        || p0.im.max(p1.im) < q0.im.min(q1.im)
                        || q0.im.max(q1.im) < p0.im.min(p1.im)
                    {
                        continue;
                    }
                    let r = p1 - p0;
                    let u = q1 - q0;
                    let denom = cross(r, u);
                    if denom == 0.0 {
                        continue;
                    }
                    let t = cross(q0 - p0, u) / denom;
                    let v = cross(q0 - p0, r) / denom;
                    if !(0.0..=1.0).contains(&t) || !(0.0..=1.0).contains(&v) {
                        continue;
                    }
                    let at = p0 + r * t;
                    if near_singular(at) {
                        continue;
                    }
                    let ta = interpolated_tangent(a, i, t);
                    let ts = interpolated_tangent(s, j, v);
                    let angle = (ta * ts.conj()).arg().abs();
                    out.push((at, angle));
                }
            }
        }
    }
    out
}
