//! Text renderings shared by the command-line tool: fixed-precision numbers,
//! CSV tables and small self-contained SVG figures.
//!
//! Everything here is a pure function of its input. No timestamps, no
//! locale, so identical data always yields identical bytes.

use std::fmt::Write as _;

use crate::geometry::Vec2;

/// Significant digits used for every number written by this module.
pub const SIGNIFICANT_DIGITS: usize = 10;

/// Upper bound on vertices in one SVG path.
pub const MAX_SVG_POINTS: usize = 5000;

/// Formats `x` with 10 significant digits and a period decimal separator.
/// Plain notation for 1e-5 <= |x| < 1e10, scientific otherwise; trailing
/// zeros are dropped.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    // Round first so the exponent reflects the rounded value.
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..10).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.to_string()
    }
}

/// `fmt_num` for present values, empty string otherwise.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// A header plus rows of already formatted cells.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn push_numbers(&mut self, row: &[f64]) {
        self.push(row.iter().map(|&x| fmt_num(x)).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        for line in std::iter::once(&self.header).chain(&self.rows) {
            w.write_record(line).expect("writing to memory cannot fail");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("cells are UTF-8")
    }

    /// Rows as an array of objects keyed by the header. Cells that parse as
    /// numbers become JSON numbers, empty cells become null.
    pub fn to_json(&self) -> serde_json::Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.clone(), json_cell(v)))
                    .collect::<serde_json::Map<_, _>>();
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

fn json_cell(v: &str) -> serde_json::Value {
    if v.is_empty() {
        return serde_json::Value::Null;
    }
    match v.parse::<f64>() {
        Ok(x) if x.is_finite() => serde_json::Number::from_f64(x).map(serde_json::Value::Number).unwrap_or(serde_json::Value::Null),
        _ => serde_json::Value::String(v.to_string()),
    }
}

/// Keeps at most `max` points, always including both endpoints.
pub fn downsample<T: Copy>(points: &[T], max: usize) -> Vec<T> {
    if points.len() <= max || max < 2 {
        return points.to_vec();
    }
    let last = points.len() - 1;
    (0..max).map(|i| points[i * last / (max - 1)]).collect()
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn svg_open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_num(width),
        h = fmt_num(height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn svg_text(out: &mut String, x: f64, y: f64, anchor: &str, size: f64, text: &str) {
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="{anchor}" font-family="sans-serif" font-size="{}">{}</text>"#,
        fmt_num(x),
        fmt_num(y),
        fmt_num(size),
        xml_escape(text)
    );
}

fn path_data(points: &[(f64, f64)]) -> String {
    let mut d = String::with_capacity(points.len() * 24);
    for (i, (x, y)) in points.iter().enumerate() {
        let _ = write!(d, "{}{:.3},{:.3}", if i == 0 { "M" } else { " L" }, x, y);
    }
    d
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Bounds {
    fn of(points: impl Iterator<Item = (f64, f64)>) -> Self {
        let mut b = Bounds {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for (x, y) in points.filter(|(x, y)| x.is_finite() && y.is_finite()) {
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        if !b.x0.is_finite() {
            return Bounds { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 };
        }
        if b.x1 - b.x0 <= 0.0 {
            b.x0 -= 0.5;
            b.x1 += 0.5;
        }
        if b.y1 - b.y0 <= 0.0 {
            b.y0 -= 0.5;
            b.y1 += 0.5;
        }
        b
    }
}

/// Plane curves drawn side by side in equal-aspect panels, one per entry.
pub fn svg_curve_gallery(title: &str, curves: &[(String, Vec<Vec2>)]) -> String {
    let panel = 320.0;
    let pad = 20.0;
    let top = 40.0;
    let width = (curves.len().max(1) as f64) * panel;
    let mut out = String::new();
    svg_open(&mut out, width, panel + top);
    svg_text(&mut out, width / 2.0, 24.0, "middle", 16.0, title);
    for (i, (label, pts)) in curves.iter().enumerate() {
        let pts = downsample(pts, MAX_SVG_POINTS);
        let b = Bounds::of(pts.iter().map(|p| (p.x, p.y)));
        let span = (b.x1 - b.x0).max(b.y1 - b.y0);
        let scale = (panel - 2.0 * pad) / span;
        let cx = 0.5 * (b.x0 + b.x1);
        let cy = 0.5 * (b.y0 + b.y1);
        let ox = i as f64 * panel + panel / 2.0;
        let oy = top + panel / 2.0;
        let mapped: Vec<(f64, f64)> = pts.iter().map(|p| (ox + (p.x - cx) * scale, oy - (p.y - cy) * scale)).collect();
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="1"/>"#,
            path_data(&mapped),
            PALETTE[i % PALETTE.len()]
        );
        svg_text(&mut out, ox, top + panel - 4.0, "middle", 12.0, label);
    }
    out.push_str("</svg>\n");
    out
}

/// One or more y-series against a shared x axis.
pub fn svg_line_plot(title: &str, x_label: &str, x: &[f64], series: &[(String, Vec<f64>)]) -> String {
    let (w, h) = (720.0, 440.0);
    let (left, right, top, bottom) = (70.0, 20.0, 40.0, 50.0);
    let mut out = String::new();
    svg_open(&mut out, w, h);
    svg_text(&mut out, w / 2.0, 24.0, "middle", 16.0, title);
    let b = Bounds::of(series.iter().flat_map(|(_, ys)| x.iter().copied().zip(ys.iter().copied())));
    let sx = |v: f64| left + (v - b.x0) / (b.x1 - b.x0) * (w - left - right);
    let sy = |v: f64| h - bottom - (v - b.y0) / (b.y1 - b.y0) * (h - top - bottom);
    let _ = writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        fmt_num(left),
        fmt_num(top),
        fmt_num(w - left - right),
        fmt_num(h - top - bottom)
    );
    svg_text(&mut out, left, h - bottom + 16.0, "start", 11.0, &fmt_num(b.x0));
    svg_text(&mut out, w - right, h - bottom + 16.0, "end", 11.0, &fmt_num(b.x1));
    svg_text(&mut out, left - 4.0, h - bottom, "end", 11.0, &fmt_num(b.y0));
    svg_text(&mut out, left - 4.0, top + 10.0, "end", 11.0, &fmt_num(b.y1));
    svg_text(&mut out, w / 2.0, h - 12.0, "middle", 13.0, x_label);
    for (i, (label, ys)) in series.iter().enumerate() {
        let pts: Vec<(f64, f64)> = x.iter().zip(ys).filter(|(a, b)| a.is_finite() && b.is_finite()).map(|(&a, &b)| (sx(a), sy(b))).collect();
        let pts = downsample(&pts, MAX_SVG_POINTS);
        let colour = PALETTE[i % PALETTE.len()];
        let _ = writeln!(out, r#"<path d="{}" fill="none" stroke="{colour}" stroke-width="1.2"/>"#, path_data(&pts));
        svg_text(&mut out, w - right - 8.0, top + 18.0 + 16.0 * i as f64, "end", 12.0, label);
    }
    out.push_str("</svg>\n");
    out
}

/// Grouped bars: one group per category, one bar per series. Missing
/// values leave a gap.
pub fn svg_bar_chart(title: &str, categories: &[String], series: &[(String, Vec<Option<f64>>)]) -> String {
    let group = 160.0;
    let (left, top, bottom, plot_h) = (60.0, 40.0, 60.0, 300.0);
    let w = left + group * categories.len().max(1) as f64 + 20.0;
    let h = top + plot_h + bottom;
    let mut out = String::new();
    svg_open(&mut out, w, h);
    svg_text(&mut out, w / 2.0, 24.0, "middle", 16.0, title);
    let max = series
        .iter()
        .flat_map(|(_, v)| v.iter().flatten().copied())
        .filter(|v| v.is_finite())
        .fold(0.0f64, f64::max);
    let max = if max > 0.0 { max } else { 1.0 };
    let base = top + plot_h;
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        fmt_num(left),
        fmt_num(base),
        fmt_num(w - 20.0),
        fmt_num(base)
    );
    svg_text(&mut out, left - 4.0, top + 10.0, "end", 11.0, &fmt_num(max));
    let bar_w = (group - 40.0) / series.len().max(1) as f64;
    for (c, name) in categories.iter().enumerate() {
        let gx = left + c as f64 * group + 20.0;
        for (k, (_, values)) in series.iter().enumerate() {
            if let Some(v) = values.get(c).copied().flatten().filter(|v| v.is_finite() && *v > 0.0) {
                let bh = v / max * plot_h;
                let _ = writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
                    fmt_num(gx + k as f64 * bar_w),
                    fmt_num(base - bh),
                    fmt_num(bar_w * 0.9),
                    fmt_num(bh),
                    PALETTE[k % PALETTE.len()]
                );
            }
        }
        svg_text(&mut out, gx + (group - 40.0) / 2.0, base + 16.0, "middle", 10.0, name);
    }
    for (k, (label, _)) in series.iter().enumerate() {
        let y = h - 24.0;
        let x = left + 160.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="10" height="10" fill="{}"/>"#,
            fmt_num(x),
            fmt_num(y - 9.0),
            PALETTE[k % PALETTE.len()]
        );
        svg_text(&mut out, x + 14.0, y, "start", 12.0, label);
    }
    out.push_str("</svg>\n");
    out
}
