//! JSON input/output documents.
//!
//! Every scalar is an exact rational serialized as a string `"p/q"` (or an
//! integer string); integer JSON literals are accepted on input, floating
//! point never is — exactness has to survive serialization. Parse errors
//! carry serde_json's line/column diagnostics.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use hexagram_core::{
    HomCurve, MSConfig, NinePointConfig, ProjLine, ProjPoint, Rational, TriFrame,
};

/// Exact rational scalar with string serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

struct RatVisitor;

impl<'de> Visitor<'de> for RatVisitor {
    type Value = Rat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an exact rational: integer or \"p/q\" string")
    }

    fn visit_str<E: de::Error>(self, s: &str) -> Result<Rat, E> {
        hexagram_core::parse_rational(s)
            .map(Rat)
            .map_err(|e| E::custom(format!("{e}")))
    }

    fn visit_i64<E: de::Error>(self, n: i64) -> Result<Rat, E> {
        Ok(Rat(hexagram_core::rat(n)))
    }

    fn visit_u64<E: de::Error>(self, n: u64) -> Result<Rat, E> {
        i64::try_from(n)
            .map(|n| Rat(hexagram_core::rat(n)))
            .map_err(|_| E::custom("integer literal out of range, use a string"))
    }

    fn visit_f64<E: de::Error>(self, _: f64) -> Result<Rat, E> {
        Err(E::custom(
            "floating-point literals are not exact; write rationals as \"p/q\"",
        ))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        deserializer.deserialize_any(RatVisitor)
    }
}

pub type Triple = [Rat; 3];

pub fn triple_to_point(t: &Triple) -> Result<ProjPoint, String> {
    ProjPoint::new([t[0].0.clone(), t[1].0.clone(), t[2].0.clone()])
        .map_err(|e| format!("bad point: {e}"))
}

pub fn triple_to_line(t: &Triple) -> Result<ProjLine, String> {
    ProjLine::new([t[0].0.clone(), t[1].0.clone(), t[2].0.clone()])
        .map_err(|e| format!("bad line: {e}"))
}

pub fn point_to_triple(p: &ProjPoint) -> Triple {
    let c = p.canonical();
    let c = c.coords();
    [Rat(c[0].clone()), Rat(c[1].clone()), Rat(c[2].clone())]
}

pub fn line_to_triple(l: &ProjLine) -> Triple {
    let c = l.canonical();
    let c = c.coeffs();
    [Rat(c[0].clone()), Rat(c[1].clone()), Rat(c[2].clone())]
}

/// `{"degree": n, "coefficients": [...]}` with coefficients in the canonical
/// monomial order (z-degree ascending, then y-degree ascending — a conic
/// reads x², xy, y², xz, yz, z²).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveDoc {
    pub degree: usize,
    pub coefficients: Vec<Rat>,
}

impl CurveDoc {
    pub fn to_curve(&self) -> Result<HomCurve, String> {
        HomCurve::new(
            self.degree,
            self.coefficients.iter().map(|r| r.0.clone()).collect(),
        )
        .map_err(|e| format!("bad curve: {e}"))
    }

    pub fn from_curve(c: &HomCurve) -> Self {
        let canonical = c.canonical();
        Self {
            degree: canonical.degree(),
            coefficients: canonical.coeffs().iter().cloned().map(Rat).collect(),
        }
    }
}

/// `{"points": [[..], ..]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointsDoc {
    pub points: Vec<Triple>,
}

impl PointsDoc {
    pub fn to_points(&self) -> Result<Vec<ProjPoint>, String> {
        self.points.iter().map(triple_to_point).collect()
    }

    pub fn from_points(points: &[ProjPoint]) -> Self {
        Self {
            points: points.iter().map(point_to_triple).collect(),
        }
    }
}

/// `{"lines": [[..], [..], [..]]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinesDoc {
    pub lines: Vec<Triple>,
}

impl LinesDoc {
    pub fn to_lines(&self) -> Result<Vec<ProjLine>, String> {
        self.lines.iter().map(triple_to_line).collect()
    }

    pub fn frame(&self) -> Result<TriFrame, String> {
        let lines = self.to_lines()?;
        if lines.len() != 3 {
            return Err(format!("need exactly 3 lines, got {}", lines.len()));
        }
        TriFrame::new(lines[0].clone(), lines[1].clone(), lines[2].clone())
            .map_err(|e| format!("bad frame: {e}"))
    }
}

/// Combined curve + frame instance, emitted by `char-number --emit-config`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveLinesDoc {
    pub curve: CurveDoc,
    pub lines: Vec<Triple>,
}

/// Nine points on a frame under the fixed labeling: the first two points
/// per line feed the hexagon, the third is the remaining point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NineDoc {
    pub lines: Vec<Triple>,
    pub points_on_a: Vec<Triple>,
    pub points_on_b: Vec<Triple>,
    pub points_on_c: Vec<Triple>,
}

impl NineDoc {
    pub fn to_config(&self) -> Result<NinePointConfig, String> {
        let frame = LinesDoc { lines: self.lines.clone() }.frame()?;
        let group = |v: &Vec<Triple>, name: &str| -> Result<[ProjPoint; 3], String> {
            if v.len() != 3 {
                return Err(format!("{name} needs exactly 3 points"));
            }
            Ok([
                triple_to_point(&v[0])?,
                triple_to_point(&v[1])?,
                triple_to_point(&v[2])?,
            ])
        };
        NinePointConfig::new(
            frame,
            group(&self.points_on_a, "points_on_a")?,
            group(&self.points_on_b, "points_on_b")?,
            group(&self.points_on_c, "points_on_c")?,
        )
        .map_err(|e| format!("bad nine-point configuration: {e}"))
    }

    pub fn from_config(cfg: &NinePointConfig) -> Self {
        let f = cfg.frame();
        Self {
            lines: vec![
                line_to_triple(f.a()),
                line_to_triple(f.b()),
                line_to_triple(f.c()),
            ],
            points_on_a: cfg.on_a().iter().map(point_to_triple).collect(),
            points_on_b: cfg.on_b().iter().map(point_to_triple).collect(),
            points_on_c: cfg.on_c().iter().map(point_to_triple).collect(),
        }
    }
}

/// Morgan-Scott pencil configuration document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MsDoc {
    pub mu: usize,
    pub u: Triple,
    pub v: Triple,
    pub w: Triple,
    pub pencil_uv: Vec<[Rat; 2]>,
    pub pencil_vw: Vec<[Rat; 2]>,
    pub pencil_wu: Vec<[Rat; 2]>,
}

impl MsDoc {
    pub fn to_config(&self) -> Result<MSConfig, String> {
        let pen = |v: &Vec<[Rat; 2]>| -> Vec<(Rational, Rational)> {
            v.iter().map(|[a, b]| (a.0.clone(), b.0.clone())).collect()
        };
        MSConfig::new(
            self.mu,
            triple_to_line(&self.u)?,
            triple_to_line(&self.v)?,
            triple_to_line(&self.w)?,
            [pen(&self.pencil_uv), pen(&self.pencil_vw), pen(&self.pencil_wu)],
        )
        .map_err(|e| format!("bad spline configuration: {e}"))
    }

    pub fn from_config(cfg: &MSConfig) -> Self {
        let pen = |p: &Vec<(Rational, Rational)>| -> Vec<[Rat; 2]> {
            p.iter()
                .map(|(a, b)| [Rat(a.clone()), Rat(b.clone())])
                .collect()
        };
        let [uv, vw, wu] = cfg.pencils();
        Self {
            mu: cfg.mu(),
            u: line_to_triple(cfg.u()),
            v: line_to_triple(cfg.v()),
            w: line_to_triple(cfg.w()),
            pencil_uv: pen(uv),
            pencil_vw: pen(vw),
            pencil_wu: pen(wu),
        }
    }
}

/// Figure document for `render`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FigureDoc {
    #[serde(default)]
    pub window: Option<WindowDoc>,
    #[serde(default)]
    pub points: Vec<LabeledPoint>,
    #[serde(default)]
    pub lines: Vec<LabeledLine>,
    #[serde(default)]
    pub curves: Vec<LabeledCurve>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowDoc {
    pub xmin: Rat,
    pub xmax: Rat,
    pub ymin: Rat,
    pub ymax: Rat,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub label: String,
    pub point: Triple,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledLine {
    pub label: String,
    pub line: Triple,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledCurve {
    pub label: String,
    pub curve: CurveDoc,
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| format!("serialization failed: {e}"))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
