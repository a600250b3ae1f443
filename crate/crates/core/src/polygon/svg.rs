//! SVG drawing of a lattice polygon: unit grid, 20 px per lattice unit,
//! edges labelled by the 1-based rows of `B` they come from.

use std::fmt::Write;

use super::LatticePolygon;

pub const UNIT: i64 = 20;
const MARGIN: i64 = 2;

pub fn to_svg(p: &LatticePolygon, title: &str) -> String {
    let (lo, hi) = p.bounding_box();
    let w = (hi[0] - lo[0] + 2 * MARGIN) * UNIT;
    let h = (hi[1] - lo[1] + 2 * MARGIN) * UNIT;
    // Lattice y grows upwards, SVG y downwards.
    let px = |x: i64| (x - lo[0] + MARGIN) * UNIT;
    let py = |y: i64| (hi[1] - y + MARGIN) * UNIT;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, r##"<g stroke="#ddd" stroke-width="1">"##);
    for x in lo[0] - MARGIN..=hi[0] + MARGIN {
        let _ = writeln!(s, r#"<line x1="{0}" y1="0" x2="{0}" y2="{h}"/>"#, px(x));
    }
    for y in lo[1] - MARGIN..=hi[1] + MARGIN {
        let _ = writeln!(s, r#"<line x1="0" y1="{0}" x2="{w}" y2="{0}"/>"#, py(y));
    }
    let _ = writeln!(s, "</g>");
    let pts: Vec<String> = p.vertices().iter().map(|v| format!("{},{}", px(v[0]), py(v[1]))).collect();
    let _ = writeln!(s, r##"<polygon points="{}" fill="#cde" stroke="#024" stroke-width="2"/>"##, pts.join(" "));
    for q in p.lattice_points() {
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="2.5" fill="#024"/>"##, px(q[0]), py(q[1]));
    }
    let n = p.vertices().len();
    for (k, e) in p.edges().iter().enumerate() {
        let a = p.vertices()[k];
        let b = p.vertices()[(k + 1) % n];
        let label: Vec<String> = e.rows.iter().map(|r| (r + 1).to_string()).collect();
        // Midpoint nudged outwards along the right-hand normal.
        let (mx, my) = ((px(a[0]) + px(b[0])) as f64 / 2.0, (py(a[1]) + py(b[1])) as f64 / 2.0);
        let (dx, dy) = (e.vector[0] as f64, e.vector[1] as f64);
        let len = dx.hypot(dy).max(1.0);
        let (nx, ny) = (dy / len * 10.0, dx / len * 10.0);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" font-family="sans-serif" text-anchor="middle">{}</text>"#,
            mx + nx,
            my + ny + 4.0,
            label.join(",")
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BConfig;
    use crate::polygon::build_pb;

    #[test]
    fn triangle_svg() {
        let b = BConfig::new(vec![[1, 0], [0, 1], [-1, -1]]).unwrap();
        let s = to_svg(&build_pb(&b), "P_B");
        assert!(s.starts_with("<svg"));
        assert!(s.contains(r#"width="100""#));
        assert!(s.contains(">3</text>"));
        assert_eq!(s.matches("<circle").count(), 3);
    }
}
