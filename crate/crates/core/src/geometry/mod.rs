//! Global Stokes and anti-Stokes lines.
//!
//! An anti-Stokes line is a path from a singular point along which
//! `∫√Q dz` is real; on a Stokes line it is imaginary. Lines are traced by
//! integrating `dz/ds = κ·conj(√Q)/|√Q|` (κ = 1 or i) in arc length with
//! RK4, carrying the branch of `√Q` along by continuity.

mod checks;
mod export;
mod polynomial;

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{
    conjugation_distance, intersection_angles, parity_distance, phase_purity, polyline_hausdorff, PurityReport,
};
pub(crate) use export::num;
pub use export::{diagram_csv, diagram_svg, parse_diagram_csv, ParsedLine};
pub use polynomial::Polynomial;

use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::potentials::{self, Family, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    AntiStokes,
    Stokes,
}

impl LineKind {
    pub fn name(self) -> &'static str {
        match self {
            LineKind::AntiStokes => "anti_stokes",
            LineKind::Stokes => "stokes",
        }
    }

    /// Direction factor κ: `√Q·dz = κ|√Q| ds`.
    fn kappa(self) -> Complex {
        match self {
            LineKind::AntiStokes => Complex::new(1.0, 0.0),
            LineKind::Stokes => Complex::new(0.0, 1.0),
        }
    }

    /// Part of the phase integral that must vanish on this kind of line.
    pub fn wrong_part(self, f: Complex) -> f64 {
        match self {
            LineKind::AntiStokes => f.im,
            LineKind::Stokes => f.re,
        }
    }

    pub fn right_part(self, f: Complex) -> f64 {
        match self {
            LineKind::AntiStokes => f.re,
            LineKind::Stokes => f.im,
        }
    }
}

/// Zero or pole of `Q`. `leading` is `Q'(z₀)` for a simple zero,
/// `Q''(z₀)/2` for a double zero and the residue for a simple pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingularPoint {
    pub id: VertexId,
    pub z: Complex,
    pub order: i32,
    pub leading: Complex,
}

/// Anything whose Stokes geometry can be traced.
pub trait QFunction: Sync {
    fn eval(&self, z: Complex) -> Complex;
    fn singular_points(&self) -> Result<Vec<SingularPoint>>;
    /// Typical distance of the singular points from the origin.
    fn scale(&self) -> f64;
    /// Schematic cut segments, drawn but never traced.
    fn cuts(&self) -> Vec<(Complex, Complex)> {
        Vec::new()
    }
}

/// One of the built-in families at a fixed parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyQ {
    pub family: Family,
    pub param: f64,
}

impl QFunction for FamilyQ {
    fn eval(&self, z: Complex) -> Complex {
        potentials::q_eval(self.family, z, self.param).unwrap_or(Complex::new(f64::INFINITY, 0.0))
    }

    fn singular_points(&self) -> Result<Vec<SingularPoint>> {
        potentials::vertices(self.family, self.param)
            .into_iter()
            .map(|v| {
                let leading = if v.order < 0 {
                    Complex::new(self.param, 0.0)
                } else {
                    potentials::q_derivative(self.family, v.z, self.param)?
                };
                Ok(SingularPoint { id: v.id, z: v.z, order: v.order, leading })
            })
            .collect()
    }

    fn scale(&self) -> f64 {
        potentials::scale(self.family, self.param)
    }

    /// Cuts of the vertices the built-in itinerary crosses, drawn radially
    /// outward (the budden cut runs from the pole to -c).
    fn cuts(&self) -> Vec<(Complex, Complex)> {
        let r = self.scale();
        let itinerary = crate::connection::builtin_itinerary(self.family);
        let mut out: Vec<(Complex, Complex)> = Vec::new();
        for step in &itinerary.steps {
            if let crate::connection::Step::Cut { vertex } = step {
                if let Ok(v) = potentials::vertex(self.family, self.param, *vertex) {
                    let seg = (v.z, v.z * 2.0);
                    if !out.contains(&seg) {
                        out.push(seg);
                    }
                }
            }
        }
        if self.family == Family::Budden {
            out.push((Complex::new(0.0, 0.0), Complex::new(-r, 0.0)));
        }
        out
    }
}

/// `Q = N(z)/D(z)` with user-supplied polynomials. Zeros of `N` may be
/// simple or double, zeros of `D` must be simple and distinct from those of
/// `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalQ {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl RationalQ {
    pub fn polynomial(p: Polynomial) -> Self {
        Self { numerator: p, denominator: Polynomial::from_real(&[1.0]) }
    }
}

/// Groups roots closer than `tol` into one point of higher multiplicity.
fn cluster_roots(roots: &[Complex], tol: f64) -> Vec<(Complex, usize)> {
    let mut out: Vec<(Complex, usize)> = Vec::new();
    for &r in roots {
        match out.iter_mut().find(|(c, _)| (c - r).norm() < tol) {
            Some((c, m)) => {
                *c = (*c * *m as f64 + r) / (*m as f64 + 1.0);
                *m += 1;
            }
            None => out.push((r, 1)),
        }
    }
    out
}

impl QFunction for RationalQ {
    fn eval(&self, z: Complex) -> Complex {
        self.numerator.eval(z) / self.denominator.eval(z)
    }

    fn singular_points(&self) -> Result<Vec<SingularPoint>> {
        let scale = self.scale();
        let tol = 1e-5 * scale;
        let mut points = Vec::new();
        let d1 = self.numerator.derivative();
        let d2 = d1.derivative();
        for (z, m) in cluster_roots(&self.numerator.roots()?, tol) {
            let den = self.denominator.eval(z);
            let leading = match m {
                1 => d1.eval(z) / den,
                2 => d2.eval(z) / (2.0 * den),
                other => return Err(Error::UnsupportedOrder(other as i32)),
            };
            points.push((z, m as i32, leading));
        }
        let dd = self.denominator.derivative();
        for (z, m) in cluster_roots(&self.denominator.roots()?, tol) {
            if m != 1 {
                return Err(Error::UnsupportedOrder(-(m as i32)));
            }
            points.push((z, -1, self.numerator.eval(z) / dd.eval(z)));
        }
        points.sort_by(|a, b| {
            let key = |z: Complex| (z.arg().rem_euclid(2.0 * PI), z.norm());
            let (ka, kb) = (key(a.0), key(b.0));
            ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
        });
        Ok(points
            .into_iter()
            .enumerate()
            .map(|(k, (z, order, leading))| SingularPoint { id: VertexId(k as u8 + 1), z, order, leading })
            .collect())
    }

    fn scale(&self) -> f64 {
        let mut all = self.numerator.roots().unwrap_or_default();
        all.extend(self.denominator.roots().unwrap_or_default());
        let r = all.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if r > 0.0 {
            r
        } else {
            1.0
        }
    }
}

/// Directions in `[0, 2π)` in which lines of `kind` leave a singular point
/// where `Q ≈ leading·(z - z₀)^order`: the phase of
/// `√leading·(z - z₀)^{(order+2)/2}` is a multiple of π (anti-Stokes) or an
/// odd multiple of π/2 (Stokes). Gives `order + 2` angles (one for a pole).
pub fn emanation_angles(leading: Complex, order: i32, kind: LineKind) -> Result<Vec<f64>> {
    if !matches!(order, -1 | 1 | 2) {
        return Err(Error::UnsupportedOrder(order));
    }
    if leading.norm() == 0.0 || !leading.norm().is_finite() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let half_power = (order + 2) as f64 / 2.0;
    let offset = match kind {
        LineKind::AntiStokes => 0.0,
        LineKind::Stokes => FRAC_PI_2,
    };
    let count = (order + 2) as usize;
    let mut angles: Vec<f64> = (0..count)
        .map(|k| ((k as f64 * PI + offset - leading.arg() / 2.0) / half_power).rem_euclid(2.0 * PI))
        .collect();
    angles.sort_by(f64::total_cmp);
    Ok(angles)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceConfig {
    /// All lengths are multiples of the problem scale.
    pub step: f64,
    pub seed_offset: f64,
    pub r_max: f64,
    pub l_max: f64,
    pub r_min: f64,
    pub h_min: f64,
}

impl Default for TraceConfig {
    fn default() -> Self {
        Self { step: 1e-2, seed_offset: 1e-4, r_max: 6.0, l_max: 20.0, r_min: 1e-3, h_min: 1e-12 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    OuterRadius,
    ArcLength,
    SingularPoint(VertexId),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StokesLine {
    pub kind: LineKind,
    pub origin: VertexId,
    pub angle: f64,
    pub points: Vec<Complex>,
    /// Running `∫√Q dz` from the origin vertex to each point.
    pub phase_integral: Vec<Complex>,
    /// Branch of `√Q` carried along the line, one value per point.
    pub branch: Vec<Complex>,
    pub termination: Termination,
}

impl StokesLine {
    /// Unit tangent at point `k` (direction of travel).
    pub fn tangent(&self, k: usize) -> Complex {
        let w = self.branch[k];
        self.kind.kappa() * w.conj() / w.norm()
    }
}

/// `±√q`, whichever is closer to `reference`.
fn continued_sqrt(q: Complex, reference: Complex) -> Complex {
    let r = q.sqrt();
    if (r - reference).norm_sqr() <= (r + reference).norm_sqr() {
        r
    } else {
        -r
    }
}

fn angle_between(a: Complex, b: Complex) -> f64 {
    (a * b.conj()).arg().abs()
}

const GL3_X: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GL3_W: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

/// `∫√Q dz` along the chord `a → b`, continuing the branch from `w_ref`.
fn chord_integral<Q: QFunction + ?Sized>(q: &Q, a: Complex, b: Complex, w_ref: Complex) -> Complex {
    let mid = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let mut acc = Complex::new(0.0, 0.0);
    let mut w = w_ref;
    for (x, wt) in GL3_X.iter().zip(GL3_W) {
        w = continued_sqrt(q.eval(mid + half * *x), w);
        acc += w * wt;
    }
    acc * half
}

/// Traces one line leaving `origin` at `angle`.
pub fn trace_line<Q: QFunction + ?Sized>(
    q: &Q,
    origin: &SingularPoint,
    angle: f64,
    kind: LineKind,
    config: &TraceConfig,
) -> Result<StokesLine> {
    let scale = q.scale();
    let singulars = q.singular_points()?;
    let kappa = kind.kappa();
    let direction = Complex::from_polar(1.0, angle);
    let r0 = config.seed_offset * scale;
    let mut z = origin.z + direction * r0;
    // Pick the sign of √Q that moves outward along `angle`.
    let mut w = q.eval(z).sqrt();
    if (kappa * w.conj()).re * direction.re + (kappa * w.conj()).im * direction.im < 0.0 {
        w = -w;
    }
    let half_power = (origin.order + 2) as f64 / 2.0;
    let mut f = w * (z - origin.z) / half_power;

    let mut line = StokesLine {
        kind,
        origin: origin.id,
        angle,
        points: vec![z],
        phase_integral: vec![f],
        branch: vec![w],
        termination: Termination::ArcLength,
    };
    let field = |at: Complex, reference: Complex| -> Option<(Complex, Complex)> {
        let v = q.eval(at);
        if !v.norm().is_finite() || v.norm() == 0.0 {
            return None;
        }
        let root = continued_sqrt(v, reference);
        Some((kappa * root.conj() / root.norm(), root))
    };

    let mut arc = r0;
    let mut h_scale = 1.0;
    while arc < config.l_max * scale {
        let nearest = singulars
            .iter()
            .map(|s| ((s.z - z).norm(), s.id))
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .unwrap_or((f64::INFINITY, origin.id));
        let h = (config.step * scale).min(0.5 * nearest.0) * h_scale;
        if h < config.h_min * scale {
            return Err(Error::StepFailure {
                re: z.re,
                im: z.im,
                reason: "step size underflow while continuing the branch of √Q".into(),
            });
        }
        let stage = || -> Option<(Complex, Complex)> {
            let (k1, w1) = field(z, w)?;
            let (k2, w2) = field(z + k1 * (h / 2.0), w1)?;
            let (k3, w3) = field(z + k2 * (h / 2.0), w2)?;
            let (k4, _) = field(z + k3 * h, w3)?;
            let next = z + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
            let (_, w_next) = field(next, w)?;
            Some((next, w_next))
        };
        let Some((mut next, mut w_next)) = stage() else {
            h_scale *= 0.5;
            continue;
        };
        if angle_between(w_next, w) > FRAC_PI_2 {
            h_scale *= 0.5;
            continue;
        }
        let mut f_next = f + chord_integral(q, z, next, w);
        // Corrector: move back onto the line so the wrong part of F vanishes.
        let drift = match kind {
            LineKind::AntiStokes => Complex::new(0.0, f_next.im),
            LineKind::Stokes => Complex::new(f_next.re, 0.0),
        };
        if drift.norm() > 0.0 {
            let moved = next - drift / w_next;
            f_next += chord_integral(q, next, moved, w_next);
            next = moved;
            w_next = continued_sqrt(q.eval(next), w_next);
        }
        arc += (next - z).norm();
        z = next;
        w = w_next;
        f = f_next;
        h_scale = (h_scale * 2.0).min(1.0);
        line.points.push(z);
        line.phase_integral.push(f);
        line.branch.push(w);

        if z.norm() > config.r_max * scale {
            line.termination = Termination::OuterRadius;
            return Ok(line);
        }
        let hit = singulars
            .iter()
            .filter(|s| s.id != origin.id || arc > 0.1 * scale)
            .find(|s| (s.z - z).norm() < config.r_min * scale);
        if let Some(s) = hit {
            line.termination = Termination::SingularPoint(s.id);
            return Ok(line);
        }
    }
    Ok(line)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagram {
    pub label: String,
    pub param: f64,
    pub scale: f64,
    pub vertices: Vec<SingularPoint>,
    pub lines: Vec<StokesLine>,
    pub cuts: Vec<(Complex, Complex)>,
}

/// Which lines leave a singular point. Poles only send out their
/// anti-Stokes line; their Stokes line runs into the adjacent zero and is
/// traced from there.
fn kinds_for(order: i32) -> &'static [LineKind] {
    if order < 0 {
        &[LineKind::AntiStokes]
    } else {
        &[LineKind::AntiStokes, LineKind::Stokes]
    }
}

/// Every line from every singular point, ordered by vertex, kind, angle.
pub fn diagram_of<Q: QFunction + ?Sized>(q: &Q, label: &str, param: f64, config: &TraceConfig) -> Result<Diagram> {
    let (diagram, mut failures) = diagram_of_partial(q, label, param, config)?;
    match failures.is_empty() {
        true => Ok(diagram),
        false => Err(failures.swap_remove(0)),
    }
}

/// Like [`diagram_of`], but keeps the lines that traced successfully and
/// returns the failures alongside.
pub fn diagram_of_partial<Q: QFunction + ?Sized>(
    q: &Q,
    label: &str,
    param: f64,
    config: &TraceConfig,
) -> Result<(Diagram, Vec<Error>)> {
    let vertices = q.singular_points()?;
    let mut jobs = Vec::new();
    for v in &vertices {
        for &kind in kinds_for(v.order) {
            for angle in emanation_angles(v.leading, v.order, kind)? {
                jobs.push((*v, kind, angle));
            }
        }
    }
    let traced: Vec<Result<StokesLine>> =
        jobs.par_iter().map(|(v, kind, angle)| trace_line(q, v, *angle, *kind, config)).collect();
    let mut lines = Vec::with_capacity(traced.len());
    let mut failures = Vec::new();
    for t in traced {
        match t {
            Ok(line) => lines.push(line),
            Err(e) => failures.push(e),
        }
    }
    let diagram = Diagram { label: label.to_string(), param, scale: q.scale(), vertices, lines, cuts: q.cuts() };
    Ok((diagram, failures))
}

/// Diagram of a built-in family at `param` (`E`, or `c` for budden).
pub fn diagram(family: Family, param: f64) -> Result<Diagram> {
    if !(param > 0.0) {
        return Err(Error::InvalidArgument(format!("diagram needs a positive parameter, got {param}")));
    }
    diagram_of(&FamilyQ { family, param }, family.name(), param, &TraceConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn angle_counts() {
        assert_eq!(emanation_angles(c(1.0, 0.0), 1, LineKind::AntiStokes).unwrap().len(), 3);
        assert_eq!(emanation_angles(c(1.0, 2.0), 2, LineKind::Stokes).unwrap().len(), 4);
        assert_eq!(emanation_angles(c(3.0, 0.0), -1, LineKind::AntiStokes).unwrap().len(), 1);
        assert_eq!(emanation_angles(c(0.0, 0.0), 1, LineKind::AntiStokes), Err(Error::DegenerateLeadingCoefficient));
        assert_eq!(emanation_angles(c(1.0, 0.0), 3, LineKind::AntiStokes), Err(Error::UnsupportedOrder(3)));
    }

    #[test]
    fn angle_spacing() {
        let a = emanation_angles(c(-2.0, 0.0), 1, LineKind::AntiStokes).unwrap();
        for k in 0..3 {
            let gap = (a[(k + 1) % 3] - a[k]).rem_euclid(2.0 * PI);
            assert!((gap - 2.0 * PI / 3.0).abs() < 1e-12);
        }
        let d = emanation_angles(c(1.0, 0.0), 2, LineKind::AntiStokes).unwrap();
        for k in 0..4 {
            assert!(((d[(k + 1) % 4] - d[k]).rem_euclid(2.0 * PI) - FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn weber_real_axis_structure() {
        // At +1, Q ≈ -2(z - 1): the anti-Stokes line along the real axis
        // heads to -1, the Stokes line along the real axis heads to +∞.
        let d = diagram(Family::Weber, 1.0).unwrap();
        let from_plus: Vec<&StokesLine> = d.lines.iter().filter(|l| l.origin == VertexId(1)).collect();
        let anti_left = from_plus
            .iter()
            .find(|l| l.kind == LineKind::AntiStokes && (l.angle - PI).abs() < 1e-9)
            .expect("anti-Stokes line along the axis");
        assert_eq!(anti_left.termination, Termination::SingularPoint(VertexId(2)));
        assert!(anti_left.points.iter().all(|z| z.im.abs() < 1e-9));
        let stokes_right = from_plus
            .iter()
            .find(|l| l.kind == LineKind::Stokes && l.angle.abs() < 1e-9)
            .expect("Stokes line along the axis");
        assert_eq!(stokes_right.termination, Termination::OuterRadius);
    }

    #[test]
    fn counts_per_family() {
        for (family, zeros, poles) in [
            (Family::Weber, 2, 0),
            (Family::Quartic, 4, 0),
            (Family::Sextic, 6, 0),
            (Family::PtCubic, 3, 0),
            (Family::Budden, 1, 1),
        ] {
            let d = diagram(family, 1.3).unwrap();
            let anti = d.lines.iter().filter(|l| l.kind == LineKind::AntiStokes).count();
            let stokes = d.lines.iter().filter(|l| l.kind == LineKind::Stokes).count();
            assert_eq!(anti, 3 * zeros + poles, "{family}");
            assert_eq!(stokes, 3 * zeros, "{family}");
        }
    }

    #[test]
    fn budden_pole_line_runs_along_positive_axis() {
        let d = diagram(Family::Budden, 2.0).unwrap();
        let pole = d.lines.iter().find(|l| l.origin == VertexId(0)).unwrap();
        assert_eq!(pole.kind, LineKind::AntiStokes);
        assert!(pole.points.iter().all(|z| z.re > 0.0 && z.im.abs() < 1e-9));
    }

    #[test]
    fn double_zero_emits_four_lines_per_kind() {
        // Q = (z - 1)²(z + 1)
        let q = RationalQ::polynomial(Polynomial::from_real(&[1.0, -1.0, -1.0, 1.0]));
        let points = q.singular_points().unwrap();
        assert_eq!(points.iter().map(|p| p.order).collect::<Vec<_>>().iter().sum::<i32>(), 3);
        let d = diagram_of(&q, "custom", 0.0, &TraceConfig::default()).unwrap();
        let from_double = d.lines.iter().filter(|l| points.iter().any(|p| p.id == l.origin && p.order == 2)).count();
        assert_eq!(from_double, 8);
    }

    #[test]
    fn rational_pole_and_zero() {
        // Q = (z + 2)/z, the budden equation with c = 2.
        let q = RationalQ { numerator: Polynomial::from_real(&[2.0, 1.0]), denominator: Polynomial::from_real(&[0.0, 1.0]) };
        let points = q.singular_points().unwrap();
        assert_eq!(points.len(), 2);
        let pole = points.iter().find(|p| p.order == -1).unwrap();
        assert!((pole.leading - 2.0).norm() < 1e-12);
        let d = diagram_of(&q, "rational", 2.0, &TraceConfig::default()).unwrap();
        assert_eq!(d.lines.len(), 7);
    }

    #[test]
    fn rejects_nonpositive_parameter() {
        assert!(diagram(Family::Quartic, 0.0).is_err());
    }
}
