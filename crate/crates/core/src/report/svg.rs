//! Figures. Exact values become floats only here, at the drawing boundary.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::json::ConicInfo;
use crate::config::CevianConfig;
use crate::conic::Conic;
use crate::kernel::{join, HLine, HPoint, Rat};

const WIDTH: f64 = 800.0;
const SAMPLES: usize = 4096;

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn xy(p: &HPoint) -> Option<(f64, f64)> {
    p.cartesian().ok().map(|(x, y)| (f(&x), f(&y)))
}

/// Maps plane coordinates to pixels; y grows downward in SVG.
#[derive(Debug, Clone, Copy)]
pub struct Viewport {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
    pub scale: f64,
}

impl Viewport {
    /// Bounding box of the triangle, widened by 20% of its larger side on
    /// every edge.
    pub fn fit(cfg: &CevianConfig) -> Self {
        let pts: Vec<(f64, f64)> = cfg.tri.vertices().iter().filter_map(xy).collect();
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let m = 0.2 * (x1 - x0).max(y1 - y0);
        let (x0, y0, x1, y1) = (x0 - m, y0 - m, x1 + m, y1 + m);
        Viewport { x0, y0, x1, y1, scale: WIDTH / (x1 - x0) }
    }

    pub fn height(&self) -> f64 {
        (self.y1 - self.y0) * self.scale
    }

    pub fn to_pixel(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)
    }

    fn contains(&self, x: f64, y: f64, slack: f64) -> bool {
        let w = (self.x1 - self.x0) * slack;
        let h = (self.y1 - self.y0) * slack;
        x >= self.x0 - w && x <= self.x1 + w && y >= self.y0 - h && y <= self.y1 + h
    }

    /// The segment of `l` inside the viewport, if any.
    fn clip_line(&self, l: &HLine) -> Option<((f64, f64), (f64, f64))> {
        let [a, b, c] = l.coords().clone().map(|v| v.to_f64().unwrap_or(f64::NAN));
        let mut hits = Vec::new();
        if b.abs() > 1e-300 {
            for x in [self.x0, self.x1] {
                let y = -(a * x + c) / b;
                if y >= self.y0 && y <= self.y1 {
                    hits.push((x, y));
                }
            }
        }
        if a.abs() > 1e-300 {
            for y in [self.y0, self.y1] {
                let x = -(b * y + c) / a;
                if x >= self.x0 && x <= self.x1 {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).unwrap_or(std::cmp::Ordering::Equal));
        match (hits.first(), hits.last()) {
            (Some(&p), Some(&q)) if p != q => Some((p, q)),
            _ => None,
        }
    }
}

/// Polylines tracing a nondegenerate conic through `base`, one point per
/// direction of the pencil at `base`. A new branch starts wherever the
/// curve passes through infinity or leaves the padded viewport.
pub fn conic_polylines(c: &Conic, base: &HPoint, vp: &Viewport) -> Vec<Vec<(f64, f64)>> {
    let m = c.matrix().0.map(|row| row.map(|x| f(&x)));
    let p = base.to_rats().map(|x| f(&x));
    let bil = |u: &[f64; 3], v: &[f64; 3]| -> f64 {
        (0..3).map(|i| (0..3).map(|j| u[i] * m[i][j] * v[j]).sum::<f64>()).sum()
    };
    let mut lines = Vec::new();
    let mut cur: Vec<(f64, f64)> = Vec::new();
    let mut last_w = 0.0f64;
    for k in 0..=SAMPLES {
        let t = std::f64::consts::PI * k as f64 / SAMPLES as f64;
        let q = [t.cos(), t.sin(), 0.0];
        let pq = bil(&p, &q);
        let qq = bil(&q, &q);
        let r: [f64; 3] = std::array::from_fn(|i| qq * p[i] - 2.0 * pq * q[i]);
        let w = r[2];
        let flip = w * last_w < 0.0;
        last_w = w;
        if w.abs() < 1e-12 || flip {
            if cur.len() > 1 {
                lines.push(std::mem::take(&mut cur));
            }
            cur.clear();
            if w.abs() < 1e-12 {
                continue;
            }
        }
        let (x, y) = (r[0] / w, r[1] / w);
        if vp.contains(x, y, 1.0) {
            cur.push((x, y));
        } else if cur.len() > 1 {
            lines.push(std::mem::take(&mut cur));
        } else {
            cur.clear();
        }
    }
    if cur.len() > 1 {
        lines.push(cur);
    }
    lines
}

fn polyline(s: &mut String, vp: &Viewport, pts: &[(f64, f64)], class: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&(x, y)| {
            let (px, py) = vp.to_pixel(x, y);
            format!("{px:.2},{py:.2}")
        })
        .collect();
    let _ = writeln!(s, r#"  <polyline class="{class}" points="{}"/>"#, coords.join(" "));
}

fn segment(s: &mut String, vp: &Viewport, a: (f64, f64), b: (f64, f64), class: &str) {
    let (x1, y1) = vp.to_pixel(a.0, a.1);
    let (x2, y2) = vp.to_pixel(b.0, b.1);
    let _ = writeln!(
        s,
        r#"  <line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
    );
}

fn full_line(s: &mut String, vp: &Viewport, l: &HLine, class: &str) {
    if let Some((a, b)) = vp.clip_line(l) {
        segment(s, vp, a, b, class);
    }
}

fn mark(s: &mut String, vp: &Viewport, p: &HPoint, label: &str, id: &str) {
    let Some((x, y)) = xy(p) else { return };
    if !vp.contains(x, y, 0.0) {
        return;
    }
    let (px, py) = vp.to_pixel(x, y);
    let r = if id == "Z" { 5 } else { 3 };
    let _ = writeln!(s, r#"  <circle id="{id}" class="pt" cx="{px:.2}" cy="{py:.2}" r="{r}"/>"#);
    let _ = writeln!(
        s,
        r#"  <text class="label" x="{:.2}" y="{:.2}">{label}</text>"#,
        px + 6.0,
        py - 6.0
    );
}

/// The figure, plus any warnings that were also written into it.
pub fn render(cfg: &CevianConfig, info: &ConicInfo) -> (String, Vec<String>) {
    let vp = Viewport::fit(cfg);
    let mut warnings = Vec::new();
    let mut s = String::new();
    let h = vp.height();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{h:.0}" viewBox="0 0 {WIDTH:.0} {h:.0}">"#
    );
    let _ = writeln!(
        s,
        "  <style>.tri{{fill:none;stroke:#000;stroke-width:1.5}} .cev{{stroke:#888;stroke-dasharray:4 3}} \
         .conic{{fill:none;stroke:#c0392b;stroke-width:1.5}} .axis{{stroke:#2471a3}} \
         .degenerate{{stroke:#c0392b;stroke-dasharray:8 4}} .pt{{fill:#000}} #Z{{fill:#c0392b}} \
         .label{{font:12px sans-serif}} .warning{{font:14px sans-serif;fill:#c0392b}}</style>"
    );
    let _ = writeln!(s, r#"  <clipPath id="view"><rect x="0" y="0" width="{WIDTH:.0}" height="{h:.0}"/></clipPath>"#);
    let _ = writeln!(s, r#"  <g clip-path="url(#view)">"#);

    let [a, b, c] = cfg.tri.vertices();
    let verts: Vec<(f64, f64)> = [a, b, c].iter().filter_map(|p| xy(p)).collect();
    let mut closed = verts.clone();
    closed.push(verts[0]);
    polyline(&mut s, &vp, &closed, "tri");
    for (v, d) in [a, b, c].iter().zip(&cfg.cevian) {
        if let (Some(v), Some(d)) = (xy(v), xy(d)) {
            segment(&mut s, &vp, v, d, "cev");
        }
    }

    match &info.conic {
        Some(conic) if !conic.is_degenerate() => {
            for branch in conic_polylines(conic, a, &vp) {
                polyline(&mut s, &vp, &branch, "conic");
            }
        }
        _ => {
            let msg = "degenerate conic: median and opposite side".to_string();
            for (i, v) in [a, b, c].into_iter().enumerate() {
                let Ok(median) = join(v, &cfg.g) else { continue };
                if crate::kernel::incident(&cfg.p, &median) {
                    full_line(&mut s, &vp, &median, "degenerate");
                    let [p, q] = [&cfg.tri.vertices()[(i + 1) % 3], &cfg.tri.vertices()[(i + 2) % 3]];
                    if let Ok(side) = join(p, q) {
                        full_line(&mut s, &vp, &side, "degenerate");
                    }
                }
            }
            let _ = writeln!(s, r#"  <text class="warning" x="10" y="20">{msg}</text>"#);
            warnings.push(msg);
        }
    }

    if let Some(gv) = cfg.gv() {
        full_line(&mut s, &vp, &gv, "axis");
        if let Some(j) = &cfg.j {
            if let Ok(l) = join(&cfg.g1, j) {
                full_line(&mut s, &vp, &l, "axis");
            }
        }
        if let Some(jp) = &cfg.j_prime {
            if let Ok(l) = join(&cfg.g2, jp) {
                full_line(&mut s, &vp, &l, "axis");
            }
        }
    }

    let named: [(&str, &str, Option<&HPoint>); 16] = [
        ("A", "A", Some(a)),
        ("B", "B", Some(b)),
        ("C", "C", Some(c)),
        ("D", "D", Some(&cfg.cevian[0])),
        ("E", "E", Some(&cfg.cevian[1])),
        ("F", "F", Some(&cfg.cevian[2])),
        ("P", "P", Some(&cfg.p)),
        ("P'", "Pprime", Some(&cfg.p_prime)),
        ("Q", "Q", Some(&cfg.q)),
        ("Q'", "Qprime", Some(&cfg.q_prime)),
        ("G", "G", Some(&cfg.g)),
        ("V", "V", cfg.v.as_ref()),
        ("G1", "G1", Some(&cfg.g1)),
        ("G2", "G2", Some(&cfg.g2)),
        ("J", "J", cfg.j.as_ref()),
        ("J'", "Jprime", cfg.j_prime.as_ref()),
    ];
    for (label, id, p) in named {
        if let Some(p) = p {
            mark(&mut s, &vp, p, label, id);
        }
    }
    if let Some(z) = &info.center {
        mark(&mut s, &vp, z, "Z", "Z");
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, "</svg>");
    (s, warnings)
}
