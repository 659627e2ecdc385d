use std::io::Write;
use std::path::Path;

use crate::geometry::Diagram;

pub(crate) use crate::geometry::num;

/// Rounds to 10 significant digits so JSON numbers match the CSV text.
pub(crate) fn r10(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.9e}").parse().unwrap_or(x)
}

/// `sig` significant digits in positional notation.
pub(crate) fn fixed_sig(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// `sig` significant digits in `m.mmmme-k` notation.
pub(crate) fn sci_sig(x: f64, sig: usize) -> String {
    let digits = sig.saturating_sub(1);
    format!("{x:.digits$e}")
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory and a rename, or to `stdout` when no path is given.
pub(crate) fn emit(contents: &str, path: Option<&Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        // A closed pipe (`phaseint ... | head`) is not an error.
        None => match stdout.write_all(contents.as_bytes()).and_then(|_| stdout.flush()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        },
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(contents.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}

pub(crate) fn diagram_json(d: &Diagram) -> serde_json::Value {
    let lines: Vec<serde_json::Value> = d
        .lines
        .iter()
        .enumerate()
        .map(|(id, l)| {
            serde_json::json!({
                "line_id": id,
                "kind": l.kind.name(),
                "origin_vertex": l.origin.0,
                "points": l.points.iter().map(|z| [r10(z.re), r10(z.im)]).collect::<Vec<_>>(),
                "phase_integral": l.phase_integral.iter().map(|z| [r10(z.re), r10(z.im)]).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "family": d.label,
        "param": r10(d.param),
        "vertices": d.vertices.iter().map(|v| serde_json::json!({
            "id": v.id.0, "order": v.order, "re": r10(v.z.re), "im": r10(v.z.im)
        })).collect::<Vec<_>>(),
        "cuts": d.cuts.iter().map(|(a, b)| [[r10(a.re), r10(a.im)], [r10(b.re), r10(b.im)]]).collect::<Vec<_>>(),
        "lines": lines,
    })
}
