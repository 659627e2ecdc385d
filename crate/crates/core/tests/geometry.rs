use std::f64::consts::FRAC_PI_2;

use phaseint::geometry::{
    conjugation_distance, diagram, diagram_of, intersection_angles, parity_distance, phase_purity, polyline_hausdorff,
    Diagram, FamilyQ, LineKind, Polynomial, QFunction, RationalQ, Termination, TraceConfig,
};
use phaseint::{Complex, Family, VertexId};

fn purity_of<Q: QFunction>(q: &Q, d: &Diagram) -> f64 {
    let vertices = q.singular_points().unwrap();
    d.lines
        .iter()
        .map(|l| {
            let origin = vertices.iter().find(|v| v.id == l.origin).unwrap();
            phase_purity(q, origin, l.kind, &l.points).worst
        })
        .fold(0.0, f64::max)
}

fn lines_of(d: &Diagram, kind: LineKind, map: impl Fn(Complex) -> Complex) -> Vec<Vec<Complex>> {
    d.lines.iter().filter(|l| l.kind == kind).map(|l| l.points.iter().map(|z| map(*z)).collect()).collect()
}

#[test]
fn every_family_is_pure_along_its_lines() {
    for (family, param) in [
        (Family::Weber, 1.0),
        (Family::Weber, 7.0),
        (Family::Budden, 0.5),
        (Family::Budden, 3.0),
        (Family::Quartic, 1.0604),
        (Family::Sextic, 9.0731),
        (Family::PtCubic, 1.1563),
        (Family::PtCubic, 11.3144),
    ] {
        let q = FamilyQ { family, param };
        let d = diagram(family, param).unwrap();
        let worst = purity_of(&q, &d);
        assert!(worst < 1e-6, "{family} at {param}: {worst:e}");
    }
}

#[test]
fn real_axis_families_are_mirror_symmetric() {
    for (family, param) in [(Family::Weber, 1.0), (Family::Quartic, 3.7997), (Family::Sextic, 1.1448), (Family::Budden, 2.0)] {
        let d = diagram(family, param).unwrap();
        let two_steps = 2.0 * TraceConfig::default().step * d.scale;
        assert!(conjugation_distance(&d) < two_steps, "{family}");
        if family != Family::Budden {
            assert!(parity_distance(&d) < two_steps, "{family}");
        }
    }
}

#[test]
fn pt_cubic_is_symmetric_under_reflection_in_the_imaginary_axis() {
    let d = diagram(Family::PtCubic, 4.1092).unwrap();
    let two_steps = 2.0 * TraceConfig::default().step * d.scale;
    for kind in [LineKind::AntiStokes, LineKind::Stokes] {
        let lines = lines_of(&d, kind, |z| z);
        let image = lines_of(&d, kind, |z| -z.conj());
        let dist = polyline_hausdorff(&lines, &image, 0.05 * d.scale);
        assert!(dist < two_steps, "{kind:?}: {dist}");
    }
}

#[test]
fn stokes_and_anti_stokes_lines_cross_at_right_angles() {
    for (family, param) in [(Family::Quartic, 1.0604), (Family::Sextic, 1.1448), (Family::PtCubic, 1.1563)] {
        let d = diagram(family, param).unwrap();
        let crossings = intersection_angles(&d, 0.05 * d.scale);
        for (z, angle) in crossings {
            assert!((angle - FRAC_PI_2).abs() < 1e-3, "{family} at {z}: {angle}");
        }
    }
}

#[test]
fn weber_lines_end_where_expected() {
    let d = diagram(Family::Weber, 1.0).unwrap();
    let from_plus_one = |kind: LineKind, angle: f64| {
        d.lines
            .iter()
            .find(|l| l.origin == VertexId(1) && l.kind == kind && (l.angle - angle).abs() < 1e-9)
            .unwrap()
    };
    assert_eq!(from_plus_one(LineKind::AntiStokes, std::f64::consts::PI).termination, Termination::SingularPoint(VertexId(2)));
    assert_eq!(from_plus_one(LineKind::Stokes, 0.0).termination, Termination::OuterRadius);
}

#[test]
fn user_polynomial_matches_builtin_family() {
    // E - z^4 at E = 2, entered as coefficients.
    let q = RationalQ::polynomial(Polynomial::from_real(&[2.0, 0.0, 0.0, 0.0, -1.0]));
    let user = diagram_of(&q, "user", 2.0, &TraceConfig::default()).unwrap();
    let builtin = diagram(Family::Quartic, 2.0).unwrap();
    assert_eq!(user.lines.len(), builtin.lines.len());
    for kind in [LineKind::AntiStokes, LineKind::Stokes] {
        let a = lines_of(&user, kind, |z| z);
        let b = lines_of(&builtin, kind, |z| z);
        assert!(polyline_hausdorff(&a, &b, 0.05) < 0.02);
    }
    assert!(purity_of(&q, &user) < 1e-6);
}

#[test]
fn diagrams_trace_quickly() {
    for family in Family::ALL {
        let start = std::time::Instant::now();
        diagram(family, 2.0).unwrap();
        assert!(start.elapsed().as_secs_f64() < 10.0, "{family}");
    }
}
