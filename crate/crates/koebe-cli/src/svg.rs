//! Static SVG export: the boundary curve as a single closed path, an
//! origin marker, and the inscribed circle at the measured minimum
//! distance. The viewBox fits the curve bounding box with a 5% margin.

use std::io::Write;

use koebe::boundary::BoundaryCurve;

use crate::output::CliError;

pub fn write_curve(w: &mut dyn Write, curve: &BoundaryCurve, min_distance: f64) -> Result<(), CliError> {
    let pts: Vec<(f64, f64)> = curve
        .samples
        .iter()
        .map(|s| (s.re.to_f64(), -s.im.to_f64())) // SVG y axis points down
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let margin = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
    let (vx, vy) = (x0 - margin, y0 - margin);
    let (vw, vh) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let stroke = 0.004 * vw.max(vh);

    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#
    )?;
    let title = match &curve.family {
        Some(spec) => format!("{spec}"),
        None => "boundary curve".to_string(),
    };
    writeln!(w, "  <title>{title}</title>")?;

    let mut d = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{x:.6} {y:.6} "));
    }
    d.push('Z');
    writeln!(
        w,
        r##"  <path d="{d}" fill="none" stroke="#1a1a1a" stroke-width="{stroke:.6}"/>"##
    )?;
    writeln!(
        w,
        r##"  <circle cx="0" cy="0" r="{min_distance:.6}" fill="none" stroke="#2060c0" stroke-width="{stroke:.6}" stroke-dasharray="{dash:.6}"/>"##,
        dash = 3.0 * stroke
    )?;
    writeln!(
        w,
        r##"  <circle cx="0" cy="0" r="{r:.6}" fill="#c03030"/>"##,
        r = 1.5 * stroke
    )?;
    writeln!(w, "</svg>")?;
    w.flush()?;
    Ok(())
}
