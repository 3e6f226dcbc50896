//! Plots of the modified weight parameters `w_i* = p + 1 - w_i`.

use std::fmt::Write as _;

use symreg_core::simulator::WeightTrace;

/// Two columns, `i` and `w_i*`, separated by a tab.
pub fn weight_table(trace: &WeightTrace) -> String {
    let mut out = String::from("# i\tw*\n");
    for (i, w) in trace.w_mod.iter().enumerate() {
        let _ = writeln!(out, "{i}\t{w}");
    }
    out
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 240.0;
const MARGIN: f64 = 40.0;

/// A standalone SVG drawing `w_i*` as a polyline over `i`.
pub fn weight_svg(trace: &WeightTrace, title: &str) -> String {
    let values = &trace.w_mod;
    let last = values.len().saturating_sub(1).max(1) as f64;
    let lo = values.iter().copied().min().unwrap_or(0).min(0);
    let hi = values.iter().copied().max().unwrap_or(1).max(lo + 1);
    let x_of = |i: usize| MARGIN + (WIDTH - 2.0 * MARGIN) * i as f64 / last;
    let y_of = |v: i64| HEIGHT - MARGIN - (HEIGHT - 2.0 * MARGIN) * (v - lo) as f64 / (hi - lo) as f64;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (x0, x1) = (MARGIN, WIDTH - MARGIN);
    let (y_bottom, y_top) = (HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(
        svg,
        r#"<path d="M{x0},{y_top} L{x0},{y_bottom} L{x1},{y_bottom}" fill="none" stroke="black"/>"#
    );
    for v in lo..=hi {
        let y = y_of(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{x0}" y1="{y:.2}" x2="{x1}" y2="{y:.2}" stroke="#ddd"/><text x="{}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="end">{v}</text>"##,
            x0 - 6.0,
            y + 3.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{x1}" y="{}" font-family="sans-serif" font-size="10" text-anchor="end">{}</text>"#,
        y_bottom + 16.0,
        values.len().saturating_sub(1)
    );
    let points: Vec<String> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("{:.2},{:.2}", x_of(i), y_of(v)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
        points.join(" ")
    );
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use symreg_core::simulator::weight_trace;
    use symreg_core::{BitString, RegisterParams};

    fn trace(bits: &str, k: usize, p: usize, length: usize) -> WeightTrace {
        let a: BitString = bits.parse().unwrap();
        weight_trace(&a, RegisterParams::new(k, p, a.len()).unwrap(), length).unwrap()
    }

    #[test]
    fn table_has_one_row_per_index() {
        let t = trace("110", 0, 2, 6);
        let table = weight_table(&t);
        assert_eq!(table.lines().count(), 8);
        assert!(table.contains("\n5\t0\n"));
        let single = weight_table(&trace("110", 0, 2, 0));
        assert_eq!(single, "# i\tw*\n0\t1\n");
    }

    #[test]
    fn svg_is_self_contained() {
        let svg = weight_svg(&trace("11100001100001", 3, 2, 80), "w* <A>");
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("w* &lt;A&gt;"));
        assert!(!svg.contains("href"));
        let polyline = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        assert_eq!(polyline.matches(',').count(), 81);
    }
}
