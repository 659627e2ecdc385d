use std::fmt::Write;

use super::{Diagram, LineKind};
use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::potentials::VertexId;

/// Formats with 10 significant digits.
pub(crate) fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{x:.9e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if (-5..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let plain = format!("{x:.decimals$}");
        if plain.contains('.') {
            plain.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            plain
        }
    } else {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{m}e{exp}")
    }
}

/// One row per traced point.
pub fn diagram_csv(d: &Diagram) -> String {
    let mut out = String::from("line_id,kind,origin_vertex,re,im,re_phase,im_phase\n");
    for (id, line) in d.lines.iter().enumerate() {
        for (z, f) in line.points.iter().zip(&line.phase_integral) {
            let _ = writeln!(
                out,
                "{id},{},{},{},{},{},{}",
                line.kind.name(),
                line.origin,
                num(z.re),
                num(z.im),
                num(f.re),
                num(f.im)
            );
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedLine {
    pub line_id: usize,
    pub kind: LineKind,
    pub origin: VertexId,
    pub points: Vec<Complex>,
    pub phase_integral: Vec<Complex>,
}

/// Reads back the output of [`diagram_csv`].
pub fn parse_diagram_csv(text: &str) -> Result<Vec<ParsedLine>> {
    let mut out: Vec<ParsedLine> = Vec::new();
    for (index, row) in text.lines().enumerate().skip(1) {
        let line = index + 1;
        let bad = |message: String| Error::ItineraryParse { line, message };
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 7 {
            return Err(bad(format!("expected 7 fields, found {}", fields.len())));
        }
        let float = |s: &str| s.parse::<f64>().map_err(|_| bad(format!("`{s}` is not a number")));
        let line_id: usize = fields[0].parse().map_err(|_| bad(format!("bad line id `{}`", fields[0])))?;
        let kind = match fields[1] {
            "anti_stokes" => LineKind::AntiStokes,
            "stokes" => LineKind::Stokes,
            other => return Err(bad(format!("unknown kind `{other}`"))),
        };
        let origin = VertexId(fields[2].parse().map_err(|_| bad(format!("bad vertex `{}`", fields[2])))?);
        let z = Complex::new(float(fields[3])?, float(fields[4])?);
        let f = Complex::new(float(fields[5])?, float(fields[6])?);
        match out.last_mut() {
            Some(last) if last.line_id == line_id => {
                last.points.push(z);
                last.phase_integral.push(f);
            }
            _ => out.push(ParsedLine { line_id, kind, origin, points: vec![z], phase_integral: vec![f] }),
        }
    }
    Ok(out)
}

/// Static SVG: solid anti-Stokes lines, dashed Stokes lines, dotted cuts,
/// filled vertices.
pub fn diagram_svg(d: &Diagram) -> String {
    let size = 600.0;
    let extent = 3.0 * d.scale;
    let map = |z: Complex| ((z.re / extent + 1.0) * size / 2.0, (1.0 - z.im / extent) * size / 2.0);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r#"<title>Stokes diagram: {} at {}</title>"#, d.label, num(d.param));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<defs><clipPath id="frame"><rect width="{size}" height="{size}"/></clipPath></defs>"#);
    let _ = writeln!(out, r#"<g clip-path="url(#frame)" fill="none">"#);
    for (a, b) in &d.cuts {
        let (x0, y0) = map(*a);
        let (x1, y1) = map(*b);
        let _ = writeln!(
            out,
            r#"<line class="cut" x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="grey" stroke-width="1.5" stroke-dasharray="1 3"/>"#
        );
    }
    for line in &d.lines {
        let mut path = String::new();
        for (k, z) in line.points.iter().enumerate() {
            let (x, y) = map(*z);
            let _ = write!(path, "{}{x:.2} {y:.2}", if k == 0 { "M" } else { " L" });
        }
        let dash = match line.kind {
            LineKind::AntiStokes => "",
            LineKind::Stokes => r#" stroke-dasharray="6 4""#,
        };
        let _ = writeln!(
            out,
            r#"<path class="{}" data-origin="{}" d="{path}" stroke="black" stroke-width="1.2"{dash}/>"#,
            line.kind.name(),
            line.origin
        );
    }
    let _ = writeln!(out, "</g>");
    for v in &d.vertices {
        let (x, y) = map(v.z);
        let fill = if v.order < 0 { "white" } else { "black" };
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="{fill}" stroke="black"/><text x="{:.2}" y="{:.2}" font-size="12">{}</text>"#,
            x + 5.0,
            y - 5.0,
            v.id
        );
    }
    out.push_str("</svg>\n");
    out
}
