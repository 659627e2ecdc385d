use std::fmt::Write as _;
use std::io::Write;

use serde_json::{json, Value};

use super::output::{diagram_json, emit, fixed_sig, num, r10, sci_sig};
use super::{
    ConfigFile, DiagramArgs, Failure, Format, ItineraryArgs, OracleArgs, OutputArgs, ProfileArgs, StokesArgs,
    TableArgs,
};
use crate::connection::{
    quantization_residuals, run_itinerary, terminal_normalisation, Dominance, Itinerary, Orientation,
    TerminalReadout,
};
use crate::connection::builtin_itinerary;
use crate::geometry::{diagram_csv, diagram_of_partial, diagram_svg, FamilyQ, TraceConfig};
use crate::numerics::Complex;
use crate::oracle::{self, OracleConfig};
use crate::potentials::{potential_profile, Family};
use crate::quantization::{level_table, pi_level_self_consistent, LevelTable};
use crate::stokes_exact::{gap_sweep, linspace};

type CmdResult = Result<i32, Failure>;

fn fill_output(out: &mut OutputArgs, cfg: &ConfigFile) -> Result<(), Failure> {
    cfg.fill(&mut out.format, "format")?;
    cfg.fill(&mut out.output, "output")?;
    Ok(())
}

fn require_family(family: &mut Option<Family>, cfg: &ConfigFile) -> Result<Family, Failure> {
    cfg.fill(family, "family")?;
    family.ok_or_else(|| Failure::usage("missing family (weber, budden, quartic, sextic or pt_cubic)"))
}

fn require_format(out: &OutputArgs, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let format = out.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        let names: Vec<String> = allowed.iter().map(Format::to_string).collect();
        Err(Failure::usage(format!("`{command}` writes {}, not {format}", names.join(", "))))
    }
}

fn oracle_config(args: &mut OracleArgs, cfg: &ConfigFile) -> Result<OracleConfig, Failure> {
    cfg.fill(&mut args.box_half_width, "box-half-width")?;
    cfg.fill(&mut args.grid_points, "grid-points")?;
    cfg.fill(&mut args.shooting_step, "shooting-step")?;
    cfg.fill(&mut args.energy_scan_max, "energy-scan-max")?;
    cfg.fill(&mut args.scan_step, "scan-step")?;
    let d = OracleConfig::default();
    let config = OracleConfig {
        box_half_width: args.box_half_width.unwrap_or(d.box_half_width),
        grid_points: args.grid_points.unwrap_or(d.grid_points),
        shooting_step: args.shooting_step.unwrap_or(d.shooting_step),
        energy_scan_max: args.energy_scan_max.unwrap_or(d.energy_scan_max),
        scan_step: args.scan_step.unwrap_or(d.scan_step),
    };
    config.validate()?;
    Ok(config)
}

fn pair(z: Complex) -> Value {
    json!([r10(z.re), r10(z.im)])
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub(super) fn table(mut a: TableArgs, cfg: &ConfigFile, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let family = require_family(&mut a.family, cfg)?;
    cfg.fill(&mut a.n_max, "n-max")?;
    cfg.switch(&mut a.no_oracle, "no-oracle")?;
    cfg.switch(&mut a.self_consistent, "self-consistent")?;
    fill_output(&mut a.out, cfg)?;
    if !family.has_bound_states() {
        return Err(Failure::usage(format!("{family} has no bound states")));
    }
    let format = require_format(&a.out, Format::Text, &[Format::Text, Format::Csv, Format::Json], "table")?;
    let oracle = oracle_config(&mut a.oracle, cfg)?;
    let n_max = a.n_max.unwrap_or(4);

    let mut table = level_table(family, n_max, (!a.no_oracle).then_some(&oracle))?;
    if a.self_consistent && family.has_correction() {
        for row in &mut table.rows {
            row.e_pi = pi_level_self_consistent(family, row.n)?;
        }
    }
    let text = match format {
        Format::Text => table_text(&table),
        Format::Csv => table_csv(&table),
        _ => to_json_text(&table_json(&table, !a.no_oracle, a.self_consistent)),
    };
    emit(&text, a.out.output.as_deref(), stdout)?;
    match &table.oracle_error {
        Some(message) => {
            let _ = writeln!(stderr, "warning: oracle failed, E_exact omitted: {message}");
            Ok(3)
        }
        None => Ok(0),
    }
}

fn q_label(family: Family) -> &'static str {
    match family {
        Family::Weber => "E - z^2",
        Family::Budden => "1 + c/z",
        Family::Quartic => "E - z^4",
        Family::Sextic => "E - z^6",
        Family::PtCubic => "E - iz^3",
    }
}

fn table_text(t: &LevelTable) -> String {
    let energy = |x: f64| format!("{x:.4}");
    let wkb = |x: f64| if t.family == Family::PtCubic { fixed_sig(x, 6) } else { energy(x) };
    let cosine = |x: f64| match x {
        0.0 => "0".to_string(),
        x if x.abs() >= 0.1 => fixed_sig(x, 6),
        x => sci_sig(x, 5),
    };
    let mut out = format!("Energy levels, Q = {}\n", q_label(t.family));
    let _ = writeln!(out, "{:<3} {:>10} {:>10} {:>12} {:>10}", "n", "E_exact", "E_wkb", "cos(W)", "E_PI");
    for r in &t.rows {
        let exact = r.e_exact.map_or("-".to_string(), energy);
        let _ = writeln!(
            out,
            "{:<3} {:>10} {:>10} {:>12} {:>10}",
            r.n,
            exact,
            wkb(r.e_wkb),
            cosine(r.cos_w),
            energy(r.e_pi)
        );
    }
    out
}

fn table_csv(t: &LevelTable) -> String {
    let mut out = String::from("n,e_exact,e_wkb,cos_w,e_pi\n");
    for r in &t.rows {
        let exact = r.e_exact.map_or(String::new(), num);
        let _ = writeln!(out, "{},{},{},{},{}", r.n, exact, num(r.e_wkb), num(r.cos_w), num(r.e_pi));
    }
    out
}

fn table_json(t: &LevelTable, oracle: bool, self_consistent: bool) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "e_exact": r.e_exact.map(r10),
                "e_wkb": r10(r.e_wkb),
                "cos_w": r10(r.cos_w),
                "e_pi": r10(r.e_pi),
            })
        })
        .collect();
    json!({
        "family": t.family.name(),
        "oracle": oracle,
        "self_consistent": self_consistent,
        "oracle_error": t.oracle_error,
        "rows": rows,
    })
}

pub(super) fn stokes(mut a: StokesArgs, cfg: &ConfigFile, stdout: &mut dyn Write) -> CmdResult {
    let family = require_family(&mut a.family, cfg)?;
    cfg.fill(&mut a.from, "from")?;
    cfg.fill(&mut a.to, "to")?;
    cfg.fill(&mut a.points, "points")?;
    cfg.fill(&mut a.at, "at")?;
    fill_output(&mut a.out, cfg)?;
    if !matches!(family, Family::Weber | Family::Budden) {
        return Err(Failure::usage(format!("no exact Stokes constant for {family} (weber or budden only)")));
    }
    let format = require_format(&a.out, Format::Csv, &[Format::Csv, Format::Json], "stokes")?;
    let params = match a.at {
        Some(at) if at > 0.0 => vec![at],
        Some(at) => return Err(Failure::usage(format!("--at must be positive, got {at}"))),
        None => {
            let (from, to) = (a.from.unwrap_or(0.2), a.to.unwrap_or(20.0));
            let points = a.points.unwrap_or(200);
            if !(from > 0.0 && to > from) {
                return Err(Failure::usage(format!("range must satisfy 0 < from < to, got [{from}, {to}]")));
            }
            if points == 0 {
                return Err(Failure::usage("--points must be at least 1"));
            }
            linspace(from, to, points)
        }
    };
    let samples = gap_sweep(family, &params)?;
    let text = match format {
        Format::Csv => {
            let mut out = String::from("param,re_s,im_s,gap\n");
            for s in &samples {
                let _ = writeln!(out, "{},{},{},{}", num(s.parameter), num(s.s.re), num(s.s.im), num(s.gap));
            }
            out
        }
        _ => {
            let rows: Vec<Value> = samples
                .iter()
                .map(|s| json!({"param": r10(s.parameter), "re_s": r10(s.s.re), "im_s": r10(s.s.im), "gap": r10(s.gap)}))
                .collect();
            to_json_text(&json!({ "family": family.name(), "samples": rows }))
        }
    };
    emit(&text, a.out.output.as_deref(), stdout)?;
    Ok(0)
}

pub(super) fn diagram(mut a: DiagramArgs, cfg: &ConfigFile, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let family = require_family(&mut a.family, cfg)?;
    cfg.fill(&mut a.e, "E")?;
    cfg.fill(&mut a.c, "c")?;
    fill_output(&mut a.out, cfg)?;
    let format = require_format(&a.out, Format::Svg, &[Format::Svg, Format::Csv, Format::Json], "diagram")?;
    let param = match (family, a.e, a.c) {
        (Family::Budden, None, c) => c.unwrap_or(1.0),
        (Family::Budden, Some(_), _) => return Err(Failure::usage("budden takes --c, not --E")),
        (_, e, None) => e.unwrap_or(1.0),
        (other, _, Some(_)) => return Err(Failure::usage(format!("{other} takes --E, not --c"))),
    };
    if !(param > 0.0) {
        return Err(Failure::usage(format!("diagram needs a positive parameter, got {param}")));
    }
    let (d, failures) =
        diagram_of_partial(&FamilyQ { family, param }, family.name(), param, &TraceConfig::default())?;
    let text = match format {
        Format::Svg => diagram_svg(&d),
        Format::Csv => diagram_csv(&d),
        _ => to_json_text(&diagram_json(&d)),
    };
    emit(&text, a.out.output.as_deref(), stdout)?;
    if failures.is_empty() {
        return Ok(0);
    }
    for f in &failures {
        let _ = writeln!(stderr, "warning: {f}");
    }
    let _ = writeln!(stderr, "warning: {} line(s) failed to trace; output is partial", failures.len());
    Ok(4)
}

pub(super) fn profile(mut a: ProfileArgs, cfg: &ConfigFile, stdout: &mut dyn Write) -> CmdResult {
    let family = require_family(&mut a.family, cfg)?;
    cfg.fill(&mut a.e, "E")?;
    cfg.fill(&mut a.x_min, "x-min")?;
    cfg.fill(&mut a.x_max, "x-max")?;
    cfg.fill(&mut a.points, "points")?;
    fill_output(&mut a.out, cfg)?;
    if !family.has_bound_states() {
        return Err(Failure::usage(format!("{family} has no real-axis bound-state profile")));
    }
    let format = require_format(&a.out, Format::Csv, &[Format::Csv, Format::Json, Format::Svg], "profile")?;
    let (x_min, x_max) = (a.x_min.unwrap_or(-2.5), a.x_max.unwrap_or(2.5));
    let points = a.points.unwrap_or(201);
    if !(x_max > x_min) || points < 2 {
        return Err(Failure::usage("profile needs x-min < x-max and at least 2 points"));
    }
    let e = match a.e {
        Some(e) => e,
        None => oracle::levels(family, 0, &OracleConfig::default())?[0].value,
    };
    let samples = potential_profile(family, e, &linspace(x_min, x_max, points))?;
    let text = match format {
        Format::Csv => {
            let mut out = String::from("x,V\n");
            for (x, v) in &samples {
                let _ = writeln!(out, "{},{}", num(*x), num(*v));
            }
            out
        }
        Format::Json => {
            let pts: Vec<Value> = samples.iter().map(|(x, v)| json!([r10(*x), r10(*v)])).collect();
            to_json_text(&json!({ "family": family.name(), "E": r10(e), "points": pts }))
        }
        _ => profile_svg(family, e, &samples),
    };
    emit(&text, a.out.output.as_deref(), stdout)?;
    Ok(0)
}

fn profile_svg(family: Family, e: f64, samples: &[(f64, f64)]) -> String {
    let (w, h, pad) = (600.0, 400.0, 40.0);
    let (x0, x1) = (samples[0].0, samples[samples.len() - 1].0);
    let vmin = samples.iter().map(|s| s.1).fold(f64::INFINITY, f64::min).min(0.0);
    let vmax = samples.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max).max(0.0);
    let span = if vmax > vmin { vmax - vmin } else { 1.0 };
    let px = |x: f64| pad + (x - x0) / (x1 - x0) * (w - 2.0 * pad);
    let py = |v: f64| h - pad - (v - vmin) / span * (h - 2.0 * pad);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="grey" stroke-width="1"/>"#,
        num(pad),
        num(py(0.0)),
        num(w - pad),
        num(py(0.0))
    );
    if x0 < 0.0 && x1 > 0.0 {
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="grey" stroke-width="1"/>"#,
            num(px(0.0)),
            num(pad),
            num(px(0.0)),
            num(h - pad)
        );
    }
    let path: Vec<String> = samples.iter().map(|(x, v)| format!("{},{}", num(px(*x)), num(py(*v)))).collect();
    let _ = writeln!(out, r#"<polyline fill="none" stroke="black" stroke-width="1.5" points="{}"/>"#, path.join(" "));
    let _ = writeln!(
        out,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="14">{} V(x), E = {}</text>"#,
        num(pad),
        family.name(),
        num(e)
    );
    out.push_str("</svg>\n");
    out
}

pub(super) fn itinerary(mut a: ItineraryArgs, cfg: &ConfigFile, stdout: &mut dyn Write) -> CmdResult {
    let family = require_family(&mut a.family, cfg)?;
    cfg.fill(&mut a.w, "W")?;
    cfg.fill(&mut a.s_re, "s-re")?;
    cfg.fill(&mut a.s_im, "s-im")?;
    cfg.fill(&mut a.file, "file")?;
    fill_output(&mut a.out, cfg)?;
    require_format(&a.out, Format::Json, &[Format::Json], "itinerary")?;
    let w = a.w.ok_or_else(|| Failure::usage("missing --W"))?;
    let s = Complex::new(a.s_re.unwrap_or(0.0), a.s_im.unwrap_or(1.0));
    let it = match &a.file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
            Itinerary::parse(family, &text)
                .map_err(|e| Failure { code: 5, message: format!("{}: {e}", path.display()) })?
        }
        None => builtin_itinerary(family),
    };
    let out = run_itinerary(w, s, &it)?;
    let readout = TerminalReadout::of(family);
    let dominant = out.coeff(readout.anchor, readout.dominant);
    let subdominant = out.coeff(readout.anchor, readout.dominant.flipped());
    let residuals = match terminal_normalisation(family, s) {
        Ok((kd, ks)) => {
            let (cd, cs) = quantization_residuals(family, w, s)?;
            json!({
                "dominant": pair(dominant / kd),
                "symmetry": pair(subdominant / ks),
                "closed_form_dominant": pair(cd),
                "closed_form_symmetry": pair(cs),
            })
        }
        Err(_) => Value::Null,
    };
    let terms: Vec<Value> = out
        .terms
        .iter()
        .map(|t| {
            json!({
                "anchor": t.anchor.0,
                "orientation": match t.orientation {
                    Orientation::FromAnchor => "from_anchor",
                    Orientation::ToAnchor => "to_anchor",
                },
                "dominance": match t.dominance {
                    Dominance::Dominant => "dominant",
                    Dominance::Subdominant => "subdominant",
                },
                "coeff": pair(t.coeff),
            })
        })
        .collect();
    let steps: Vec<String> = it.to_text().lines().map(str::to_string).collect();
    let report = json!({
        "family": family.name(),
        "W": r10(w),
        "s": pair(s),
        "itinerary": steps,
        "terminal": terms,
        "readout": {
            "anchor": readout.anchor.0,
            "dominant": pair(dominant),
            "subdominant": pair(subdominant),
        },
        "residuals": residuals,
    });
    emit(&to_json_text(&report), a.out.output.as_deref(), stdout)?;
    Ok(0)
}
