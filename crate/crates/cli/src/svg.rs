//! Polar chart as standalone SVG 1.1.
//!
//! Only wedges are drawn as `<path>` elements; grid, sector borders and the
//! legend use circles, lines and rects.

use std::fmt::Write;

use hardness_core::PolarPlotSpec;

const SIZE: f64 = 560.0;
const CENTER: f64 = 240.0;
const RADIUS: f64 = 200.0;

fn point(radius: f64, deg: f64) -> (f64, f64) {
    // clockwise from twelve o'clock
    let rad = deg.to_radians();
    (CENTER + radius * rad.sin(), CENTER - radius * rad.cos())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn wedge_path(radius: f64, start_deg: f64, end_deg: f64) -> String {
    let r = radius * RADIUS;
    let (x0, y0) = point(r, start_deg);
    let (x1, y1) = point(r, end_deg);
    let large = u8::from(end_deg - start_deg > 180.0);
    format!(
        "M {CENTER:.3} {CENTER:.3} L {x0:.3} {y0:.3} A {r:.3} {r:.3} 0 {large} 1 {x1:.3} {y1:.3} Z"
    )
}

pub fn render(spec: &PolarPlotSpec) -> String {
    let mut s = String::new();
    let height = 2.0 * CENTER;
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{height}" viewBox="0 0 {SIZE} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"  <rect x="0" y="0" width="{SIZE}" height="{height}" fill="white"/>"#
    );

    let _ = writeln!(
        s,
        r#"  <g id="grid" fill="none" stroke="lightgray" stroke-width="1">"#
    );
    for k in 1..=4 {
        let r = RADIUS * k as f64 / 4.0;
        let _ = writeln!(s, r#"    <circle cx="{CENTER}" cy="{CENTER}" r="{r}"/>"#);
    }
    for sector in &spec.sectors {
        let (x, y) = point(RADIUS, sector.start_deg);
        let _ = writeln!(
            s,
            r#"    <line x1="{CENTER}" y1="{CENTER}" x2="{x:.3}" y2="{y:.3}"/>"#
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(
        s,
        r#"  <g id="wedges" stroke="white" stroke-width="0.5" fill-opacity="0.8">"#
    );
    for w in &spec.wedges {
        let _ = writeln!(
            s,
            r#"    <path d="{}" fill="{}"><title>{} = {}</title></path>"#,
            wedge_path(w.radius, w.start_deg, w.end_deg),
            escape(&w.color),
            w.measure.name(),
            w.value
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(
        s,
        r#"  <g id="labels" font-family="sans-serif" font-size="11" text-anchor="middle">"#
    );
    for w in &spec.wedges {
        let (x, y) = point(RADIUS + 14.0, (w.start_deg + w.end_deg) / 2.0);
        let _ = writeln!(
            s,
            r#"    <text x="{x:.3}" y="{:.3}">{}</text>"#,
            y + 4.0,
            w.measure.name()
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(
        s,
        r#"  <text id="score" x="{CENTER}" y="{:.3}" font-family="sans-serif" font-size="28" font-weight="bold" text-anchor="middle">{}</text>"#,
        CENTER + 10.0,
        escape(&spec.score_label)
    );

    let _ = writeln!(
        s,
        r#"  <g id="legend" font-family="sans-serif" font-size="12">"#
    );
    for (k, sector) in spec.sectors.iter().enumerate() {
        let y = 40.0 + 22.0 * k as f64;
        let _ = writeln!(
            s,
            r#"    <rect x="{}" y="{y}" width="14" height="14" fill="{}"/>"#,
            2.0 * CENTER + 4.0,
            escape(&sector.color)
        );
        let _ = writeln!(
            s,
            r#"    <text x="{}" y="{}">{}</text>"#,
            2.0 * CENTER + 22.0,
            y + 11.0,
            sector.category.name()
        );
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, "</svg>");
    s
}
