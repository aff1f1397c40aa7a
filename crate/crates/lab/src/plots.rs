//! Static SVG log-log scatter plots with a least-squares slope.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use kobayashi_core::numeric::linear_fit;

use crate::report::{fit_points, ReportBundle, SummaryInput, FITS};

const W: f64 = 480.0;
const H: f64 = 360.0;
const PAD: f64 = 56.0;

fn axis_label(which: &str) -> (&'static str, &'static str) {
    match which {
        "visibility" => ("log ‖x−y‖", "log D"),
        _ => ("log g(‖x−y‖)", "log L_e"),
    }
}

/// SVG document for the given `(log x, log y)` points, or `None` with
/// fewer than three points.
pub fn svg_plot(title: &str, labels: (&str, &str), pts: &[(f64, f64)]) -> Option<String> {
    if pts.len() < 3 {
        return None;
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = pts.iter().copied().unzip();
    let fit = linear_fit(&xs, &ys)?;
    let lo = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let pad = |a: f64, b: f64| if b - a > 0.0 { (a - 0.05 * (b - a), b + 0.05 * (b - a)) } else { (a - 1.0, b + 1.0) };
    let (x0, x1) = pad(lo(&xs), hi(&xs));
    let (y0, y1) = pad(lo(&ys), hi(&ys));
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{:.3} {:.3} L{:.3} {:.3} L{:.3} {:.3}" fill="none" stroke="black"/>"#,
        PAD,
        PAD,
        PAD,
        H - PAD,
        W - PAD,
        H - PAD
    );
    for k in 0..=4 {
        let fx = x0 + (x1 - x0) * k as f64 / 4.0;
        let fy = y0 + (y1 - y0) * k as f64 / 4.0;
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="10" text-anchor="middle">{fx:.2}</text>"#, sx(fx), H - PAD + 14.0);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="10" text-anchor="end">{fy:.2}</text>"#, PAD - 4.0, sy(fy) + 3.0);
    }
    for (x, y) in pts {
        let _ = writeln!(s, r##"<circle cx="{:.3}" cy="{:.3}" r="2.5" fill="#1f77b4"/>"##, sx(*x), sy(*y));
    }
    let line = |x: f64| fit.slope * x + fit.intercept;
    let _ = writeln!(
        s,
        r##"<path d="M{:.3} {:.3} L{:.3} {:.3}" stroke="#d62728" fill="none"/>"##,
        sx(x0),
        sy(line(x0)),
        sx(x1),
        sy(line(x1))
    );
    let _ = writeln!(s, r#"<text x="{:.3}" y="20" font-size="13" text-anchor="middle">{title}</text>"#, W / 2.0);
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-size="12">slope {:.2} ± {:.2} (n = {})</text>"#,
        PAD + 8.0,
        PAD + 14.0,
        fit.slope,
        fit.slope_stderr,
        fit.n
    );
    let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="11" text-anchor="middle">{}</text>"#, W / 2.0, H - 12.0, labels.0);
    let _ = writeln!(
        s,
        r#"<text x="14" y="{:.3}" font-size="11" text-anchor="middle" transform="rotate(-90 14 {:.3})">{}</text>"#,
        H / 2.0,
        H / 2.0,
        labels.1
    );
    s.push_str("</svg>\n");
    Some(s)
}

/// Writes one SVG per fitted relation that has at least three points.
pub fn emit_plots(bundle: &ReportBundle, dir: &Path, stem: &str) -> std::io::Result<Vec<PathBuf>> {
    let inputs: Vec<SummaryInput> = bundle.rows.iter().map(SummaryInput::from).collect();
    let mut written = Vec::new();
    for name in FITS {
        let pts = fit_points(&inputs, name);
        if let Some(svg) = svg_plot(name, axis_label(name), &pts) {
            let path = dir.join(format!("{stem}_{name}.svg"));
            std::fs::write(&path, svg)?;
            written.push(path);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_slope_annotation() {
        let pts: Vec<(f64, f64)> = [1e-3f64, 1e-2, 1e-1].iter().map(|x| (x.ln(), (x * x).ln())).collect();
        let svg = svg_plot("t", ("x", "y"), &pts).unwrap();
        assert!(svg.contains("slope 2.00 ± 0.00"), "{svg}");
        assert!(svg_plot("t", ("x", "y"), &pts[..2]).is_none());
    }
}
