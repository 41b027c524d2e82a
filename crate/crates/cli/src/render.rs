//! Static SVG rendering of points, lines and curves in the affine chart
//! z = 1. Lines are clipped to the window, curves are traced by marching
//! squares over a sign grid (density is cosmetic and non-contractual),
//! points at infinity are listed in a legend instead of drawn.

use hexagram_core::{HomCurve, ProjLine, ProjPoint};
use num_traits::ToPrimitive;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 48.0;
const PALETTE: [&str; 6] = ["#1f6fb2", "#b23a1f", "#2e8540", "#8a6d1f", "#6d3ab2", "#1fb2a5"];

pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self, String> {
        if !(xmin < xmax && ymin < ymax) {
            return Err("empty window: need xmin < xmax and ymin < ymax".into());
        }
        Ok(Self { xmin, xmax, ymin, ymax })
    }

    fn sx(&self, x: f64) -> f64 {
        MARGIN + (x - self.xmin) / (self.xmax - self.xmin) * (SIZE - 2.0 * MARGIN)
    }

    fn sy(&self, y: f64) -> f64 {
        MARGIN + (self.ymax - y) / (self.ymax - self.ymin) * (SIZE - 2.0 * MARGIN)
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.xmin && x <= self.xmax && y >= self.ymin && y <= self.ymax
    }
}

pub struct Figure {
    pub points: Vec<(String, ProjPoint)>,
    pub lines: Vec<(String, ProjLine)>,
    pub curves: Vec<(String, HomCurve)>,
}

fn to_f64(r: &hexagram_core::Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Intersection of the affine line `a·x + b·y + c = 0` with the window
/// boundary, as zero, one or two corner-deduplicated endpoints.
fn clip_line(a: f64, b: f64, c: f64, w: &Window) -> Option<((f64, f64), (f64, f64))> {
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-9 * (1.0 + w.xmax.abs() + w.ymax.abs());
    let mut push = |x: f64, y: f64| {
        let inside =
            x >= w.xmin - eps && x <= w.xmax + eps && y >= w.ymin - eps && y <= w.ymax + eps;
        if inside && !hits.iter().any(|(hx, hy)| (hx - x).abs() < eps && (hy - y).abs() < eps) {
            hits.push((x, y));
        }
    };
    if b.abs() > 1e-12 {
        for x in [w.xmin, w.xmax] {
            push(x, -(a * x + c) / b);
        }
    }
    if a.abs() > 1e-12 {
        for y in [w.ymin, w.ymax] {
            push(-(b * y + c) / a, y);
        }
    }
    if hits.len() >= 2 {
        Some((hits[0], hits[1]))
    } else {
        None
    }
}

/// Marching squares over the sign grid of `P(x, y, 1)`.
fn trace_curve(curve: &HomCurve, w: &Window, samples: usize) -> Vec<((f64, f64), (f64, f64))> {
    let n = samples.clamp(16, 2048);
    // compile the curve once into (coeff, i, j, k) with f64 coefficients
    let exps = hexagram_core::curves::monomial_exponents(curve.degree());
    let terms: Vec<(f64, usize, usize)> = exps
        .iter()
        .zip(curve.coeffs())
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(&(i, j, _), c)| (to_f64(c), i, j))
        .collect();
    let eval = |x: f64, y: f64| -> f64 {
        terms
            .iter()
            .map(|&(c, i, j)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    };
    let dx = (w.xmax - w.xmin) / n as f64;
    let dy = (w.ymax - w.ymin) / n as f64;
    let mut values = vec![vec![0.0f64; n + 1]; n + 1];
    for (r, row) in values.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = eval(w.xmin + c as f64 * dx, w.ymin + r as f64 * dy);
        }
    }
    let mut segments = Vec::new();
    let interp = |va: f64, vb: f64| -> f64 {
        if (va - vb).abs() < 1e-300 {
            0.5
        } else {
            va / (va - vb)
        }
    };
    for r in 0..n {
        for c in 0..n {
            let x0 = w.xmin + c as f64 * dx;
            let y0 = w.ymin + r as f64 * dy;
            let v = [
                values[r][c],
                values[r][c + 1],
                values[r + 1][c + 1],
                values[r + 1][c],
            ];
            // edge order: bottom, right, top, left
            let mut crossings: Vec<(f64, f64)> = Vec::new();
            let edges = [
                (0usize, 1usize, (x0, y0), (x0 + dx, y0)),
                (1, 2, (x0 + dx, y0), (x0 + dx, y0 + dy)),
                (2, 3, (x0 + dx, y0 + dy), (x0, y0 + dy)),
                (3, 0, (x0, y0 + dy), (x0, y0)),
            ];
            for (ia, ib, pa, pb) in edges {
                let (va, vb) = (v[ia], v[ib]);
                if (va > 0.0 && vb <= 0.0) || (va <= 0.0 && vb > 0.0) {
                    let t = interp(va, vb);
                    crossings.push((pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1)));
                }
            }
            if crossings.len() >= 2 {
                segments.push((crossings[0], crossings[1]));
                if crossings.len() == 4 {
                    segments.push((crossings[2], crossings[3]));
                }
            }
        }
    }
    segments
}

fn fmt2(v: f64) -> String {
    format!("{v:.2}")
}

/// Renders the figure into a standalone SVG 1.1 document.
pub fn render(figure: &Figure, w: &Window, samples: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n",
        s = SIZE
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{s}\" height=\"{s}\" fill=\"white\"/>\n",
        s = SIZE
    ));
    out.push_str(&format!(
        "<rect x=\"{m}\" y=\"{m}\" width=\"{iw}\" height=\"{iw}\" fill=\"none\" stroke=\"#cccccc\"/>\n",
        m = MARGIN,
        iw = SIZE - 2.0 * MARGIN
    ));
    // light axes when visible
    if w.xmin < 0.0 && w.xmax > 0.0 {
        out.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{m}\" x2=\"{x}\" y2=\"{b}\" stroke=\"#dddddd\"/>\n",
            x = fmt2(w.sx(0.0)),
            m = MARGIN,
            b = SIZE - MARGIN
        ));
    }
    if w.ymin < 0.0 && w.ymax > 0.0 {
        out.push_str(&format!(
            "<line x1=\"{m}\" y1=\"{y}\" x2=\"{r}\" y2=\"{y}\" stroke=\"#dddddd\"/>\n",
            y = fmt2(w.sy(0.0)),
            m = MARGIN,
            r = SIZE - MARGIN
        ));
    }

    let mut legend: Vec<String> = Vec::new();

    for (idx, (label, curve)) in figure.curves.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let segments = trace_curve(curve, w, samples);
        let mut path = String::new();
        for ((ax, ay), (bx, by)) in &segments {
            path.push_str(&format!(
                "M{} {} L{} {} ",
                fmt2(w.sx(*ax)),
                fmt2(w.sy(*ay)),
                fmt2(w.sx(*bx)),
                fmt2(w.sy(*by))
            ));
        }
        if path.is_empty() {
            legend.push(format!("curve {label}: no branch inside the window"));
        } else {
            out.push_str(&format!(
                "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"><title>{label}</title></path>\n",
                path.trim_end()
            ));
        }
    }

    for (idx, (label, line)) in figure.lines.iter().enumerate() {
        let color = PALETTE[(idx + 2) % PALETTE.len()];
        let coeffs = line.coeffs();
        let (a, b, c) = (to_f64(&coeffs[0]), to_f64(&coeffs[1]), to_f64(&coeffs[2]));
        if a.abs() < 1e-12 && b.abs() < 1e-12 {
            legend.push(format!("line {label}: the line at infinity"));
            continue;
        }
        match clip_line(a, b, c, w) {
            Some(((x1, y1), (x2, y2))) => {
                out.push_str(&format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"1\"/>\n",
                    fmt2(w.sx(x1)),
                    fmt2(w.sy(y1)),
                    fmt2(w.sx(x2)),
                    fmt2(w.sy(y2))
                ));
                out.push_str(&format!(
                    "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{color}\">{label}</text>\n",
                    fmt2(w.sx(x1) + 4.0),
                    fmt2(w.sy(y1) - 4.0)
                ));
            }
            None => legend.push(format!("line {label}: outside the window")),
        }
    }

    for (label, point) in &figure.points {
        match point.affine() {
            Some((x, y)) => {
                let (x, y) = (to_f64(&x), to_f64(&y));
                if w.contains(x, y) {
                    out.push_str(&format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"3.5\" fill=\"#222222\"/>\n",
                        fmt2(w.sx(x)),
                        fmt2(w.sy(y))
                    ));
                    out.push_str(&format!(
                        "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"#222222\">{label}</text>\n",
                        fmt2(w.sx(x) + 5.0),
                        fmt2(w.sy(y) - 5.0)
                    ));
                } else {
                    legend.push(format!("point {label}: outside the window at ({x}, {y})"));
                }
            }
            None => {
                let c = point.canonical();
                legend.push(format!("point {label}: at infinity, direction {}", c));
            }
        }
    }

    for (i, entry) in legend.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{m}\" y=\"{y}\" font-size=\"11\" fill=\"#555555\">{entry}</text>\n",
            m = MARGIN,
            y = fmt2(SIZE - MARGIN + 14.0 * (i as f64 + 1.0))
        ));
    }
    out.push_str("</svg>\n");
    out
}
