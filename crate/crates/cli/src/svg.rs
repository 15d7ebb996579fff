//! Thread diagrams as SVG. Geometry is fixed (value × scale pixels, one
//! 18px row per order) so output is byte-stable for given inputs.

use std::fmt::Write;

use psp_threads::{Layer, ThreadDiagram};

pub const DEFAULT_SCALE: i64 = 6;
pub const ROW: i64 = 18;
const BAR: i64 = 12;
const MARGIN: i64 = 24;

fn layer_opacity(layer: Layer) -> &'static str {
    match layer {
        Layer::Core => "1",
        Layer::Below | Layer::Above => "0.4",
    }
}

/// Render `d`; rows run from order `p+1` at the top down to `-1`.
pub fn render(d: &ThreadDiagram, scale: i64) -> String {
    let width = (d.to - d.from).max(0);
    let rows = d.p + 3;
    let (w, h) = (width * scale + 2 * MARGIN, rows * ROW + 2 * MARGIN);
    let px = |v: i64| MARGIN + (v - d.from) * scale;
    let row_y = |i: i64| MARGIN + (d.p + 1 - i) * ROW;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<title>{} n={} p={} [{}, {})</title>"#, d.basis, d.n, d.p, d.from, d.to);
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#);
    if width > 0 {
        // stride boundaries
        let a3 = d.basis.a3;
        let mut v = d.from.div_euclid(a3) * a3;
        while v <= d.to {
            if v >= d.from {
                let x = px(v);
                let _ = writeln!(s, r##"<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{}" stroke="#999" stroke-dasharray="2,2"/>"##, h - MARGIN);
                let _ = writeln!(s, r#"<text x="{x}" y="{}" font-size="9" text-anchor="middle">{v}</text>"#, h - MARGIN + 12);
            }
            v += a3;
        }
        for &m in &d.marks {
            let _ = writeln!(
                s,
                r##"<rect class="break" x="{}" y="{MARGIN}" width="{scale}" height="{}" fill="#e0457b" fill-opacity="0.35"/>"##,
                px(m),
                rows * ROW
            );
        }
        for i in -1..=d.p + 1 {
            let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="9" text-anchor="end">{i}</text>"#, MARGIN - 4, row_y(i) + BAR - 2);
        }
        for t in &d.threads {
            let (lo, hi) = (t.thread.start.max(d.from), t.thread.end.min(d.to - 1));
            let (x, y) = (px(lo), row_y(t.thread.i));
            let bw = (hi - lo + 1) * scale;
            let _ = writeln!(
                s,
                r##"<rect class="thread" data-i="{}" data-c2="{}" data-start="{}" data-end="{}" x="{x}" y="{y}" width="{bw}" height="{BAR}" fill="#3a6ea5" fill-opacity="{}"/>"##,
                t.thread.i,
                t.thread.c2,
                t.thread.start,
                t.thread.end,
                layer_opacity(t.layer)
            );
            let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="8" fill="white" text-anchor="middle">{}</text>"#, x + bw / 2, y + BAR - 3, t.thread.c2);
        }
    }
    s.push_str("</svg>\n");
    s
}
