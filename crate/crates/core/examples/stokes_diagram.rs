// Trace the Stokes and anti-Stokes lines of the sextic oscillator at its
// ground energy and write them as SVG and CSV next to each other.
//
// ```bash
// cargo run --release --example stokes_diagram -- /tmp/sextic
// ```

use std::error::Error;
use std::path::{Path, PathBuf};

use phaseint::geometry::{diagram, diagram_csv, diagram_svg, LineKind, Termination};
use phaseint::Family;

pub fn write_diagram(stem: &Path) -> Result<(PathBuf, PathBuf), Box<dyn Error>> {
    let d = diagram(Family::Sextic, 1.1448)?;
    let anti = d.lines.iter().filter(|l| l.kind == LineKind::AntiStokes).count();
    let joined = d.lines.iter().filter(|l| matches!(l.termination, Termination::SingularPoint(_))).count();
    println!("{} vertices, {anti} anti-Stokes and {} Stokes lines", d.vertices.len(), d.lines.len() - anti);
    println!("{joined} lines end on another turning point");
    let svg = stem.with_extension("svg");
    let csv = stem.with_extension("csv");
    std::fs::write(&svg, diagram_svg(&d))?;
    std::fs::write(&csv, diagram_csv(&d))?;
    Ok((svg, csv))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = std::env::temp_dir().join("phaseint-example");
    std::fs::create_dir_all(&dir)?;
    let (svg, csv) = write_diagram(&dir.join("sextic"))?;
    println!("wrote {} and {}", svg.display(), csv.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(stem) => {
            let (svg, csv) = write_diagram(Path::new(&stem))?;
            println!("wrote {} and {}", svg.display(), csv.display());
            Ok(())
        }
        None => run_example(),
    }
}
