//! Homogeneous points and lines in the projective plane.
//!
//! A point is a nonzero coordinate triple `(x, y, z)` up to scale; a line is
//! a nonzero coefficient triple `[X, Y, Z]` up to scale, with incidence
//! `Xx + Yy + Zz = 0`. Values keep exactly the representative they were
//! constructed with — several quantities downstream (decomposition
//! coefficients, characteristic ratios) are representative-dependent, and a
//! silent rescale would change them. Operations that *produce* points or
//! lines return the canonical representative: coprime integer entries, first
//! nonzero entry positive.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{canonical_coprime, rat, Rational};

pub(crate) type Triple = [Rational; 3];

fn triple_from(values: Vec<Rational>) -> Triple {
    let mut it = values.into_iter();
    [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
}

pub(crate) fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &Triple, b: &Triple) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn det3(a: &Triple, b: &Triple, c: &Triple) -> Rational {
    dot(a, &cross(b, c))
}

pub(crate) fn proj_eq(a: &Triple, b: &Triple) -> bool {
    cross(a, b).iter().all(Rational::is_zero)
}

fn is_zero_triple(t: &Triple) -> bool {
    t.iter().all(Rational::is_zero)
}

/// Solves `p = alpha·u + beta·v` exactly on the first coordinate pair with a
/// nonzero 2x2 minor, then checks the remaining coordinate.
pub(crate) fn decompose_triple(p: &Triple, u: &Triple, v: &Triple) -> Result<(Rational, Rational)> {
    if proj_eq(u, v) {
        return Err(Error::DegenerateBasis);
    }
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let d = &u[i] * &v[j] - &u[j] * &v[i];
        if d.is_zero() {
            continue;
        }
        let alpha = (&p[i] * &v[j] - &p[j] * &v[i]) / &d;
        let beta = (&u[i] * &p[j] - &u[j] * &p[i]) / &d;
        let k = 3 - i - j;
        if &alpha * &u[k] + &beta * &v[k] != p[k] {
            return Err(Error::PointOffSpan);
        }
        return Ok((alpha, beta));
    }
    unreachable!("distinct projective triples always have a nonzero 2x2 minor")
}

/// A projective point. Equality is projective: `p == q` iff `p = λq`.
#[derive(Debug, Clone)]
pub struct ProjPoint {
    coords: Triple,
}

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if is_zero_triple(&coords) {
            return Err(Error::ZeroTriple);
        }
        Ok(Self { coords })
    }

    /// Integer-coordinate shorthand; panics on the zero triple.
    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([rat(x), rat(y), rat(z)]).expect("nonzero triple")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Canonical representative: coprime integers, first nonzero entry
    /// positive.
    pub fn canonical(&self) -> ProjPoint {
        ProjPoint {
            coords: triple_from(canonical_coprime(&self.coords)),
        }
    }

    /// Same point under a different representative.
    pub fn scaled(&self, lambda: &Rational) -> Result<ProjPoint> {
        if lambda.is_zero() {
            return Err(Error::ZeroTriple);
        }
        Ok(ProjPoint {
            coords: [
                &self.coords[0] * lambda,
                &self.coords[1] * lambda,
                &self.coords[2] * lambda,
            ],
        })
    }

    /// The dual line with the same coordinate triple.
    pub fn dual(&self) -> ProjLine {
        ProjLine {
            coeffs: self.coords.clone(),
        }
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine chart coordinates `(x/z, y/z)` when finite.
    pub fn affine(&self) -> Option<(Rational, Rational)> {
        if self.is_at_infinity() {
            None
        } else {
            Some((
                &self.coords[0] / &self.coords[2],
                &self.coords[1] / &self.coords[2],
            ))
        }
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        proj_eq(&self.coords, &other.coords)
    }
}

impl Eq for ProjPoint {}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// A projective line given by its coefficient triple.
#[derive(Debug, Clone)]
pub struct ProjLine {
    coeffs: Triple,
}

impl ProjLine {
    pub fn new(coeffs: [Rational; 3]) -> Result<Self> {
        if is_zero_triple(&coeffs) {
            return Err(Error::ZeroTriple);
        }
        Ok(Self { coeffs })
    }

    pub fn ints(a: i64, b: i64, c: i64) -> Self {
        Self::new([rat(a), rat(b), rat(c)]).expect("nonzero triple")
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    pub fn canonical(&self) -> ProjLine {
        ProjLine {
            coeffs: triple_from(canonical_coprime(&self.coeffs)),
        }
    }

    pub fn scaled(&self, lambda: &Rational) -> Result<ProjLine> {
        if lambda.is_zero() {
            return Err(Error::ZeroTriple);
        }
        Ok(ProjLine {
            coeffs: [
                &self.coeffs[0] * lambda,
                &self.coeffs[1] * lambda,
                &self.coeffs[2] * lambda,
            ],
        })
    }

    pub fn dual(&self) -> ProjPoint {
        ProjPoint {
            coords: self.coeffs.clone(),
        }
    }

    /// Exact incidence test.
    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.coords).is_zero()
    }
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        proj_eq(&self.coeffs, &other.coeffs)
    }
}

impl Eq for ProjLine {}

impl std::fmt::Display for ProjLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}, {}]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

/// Intersection point of two distinct lines (cross product of coefficient
/// triples), canonically normalized.
pub fn meet(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint> {
    if l1 == l2 {
        return Err(Error::LinesCoincide);
    }
    Ok(ProjPoint {
        coords: cross(&l1.coeffs, &l2.coeffs),
    }
    .canonical())
}

/// Line through two distinct points, canonically normalized. Dual of [`meet`].
pub fn join(p1: &ProjPoint, p2: &ProjPoint) -> Result<ProjLine> {
    if p1 == p2 {
        return Err(Error::PointsCoincide);
    }
    Ok(ProjLine {
        coeffs: cross(&p1.coords, &p2.coords),
    }
    .canonical())
}

/// True iff the 3x3 coordinate determinant vanishes exactly.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(&p.coords, &q.coords, &r.coords).is_zero()
}

/// Dual of [`collinear`] on coefficient triples.
pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    det3(&l.coeffs, &m.coeffs, &n.coeffs).is_zero()
}

/// A planar figure of points and lines, the unit on which duality acts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Figure {
    pub points: Vec<ProjPoint>,
    pub lines: Vec<ProjLine>,
}

impl Figure {
    /// Number of incident (point, line) pairs; preserved by duality.
    pub fn incidences(&self) -> usize {
        self.points
            .iter()
            .map(|p| self.lines.iter().filter(|l| l.contains(p)).count())
            .sum()
    }
}

/// Swaps the roles of points and lines, keeping coordinate triples verbatim,
/// so `dualize(dualize(f)) == f`.
pub fn dualize(figure: &Figure) -> Figure {
    Figure {
        points: figure.lines.iter().map(ProjLine::dual).collect(),
        lines: figure.points.iter().map(ProjPoint::dual).collect(),
    }
}

/// Coefficients of `p ≡ alpha·u + beta·v` for a fixed ordered basis pair,
/// stored as a coprime-integer pair with first nonzero entry positive.
///
/// The pair depends on the representatives of `u` and `v` (rescaling `u` by
/// λ multiplies `beta/alpha` by λ); it does not depend on the representative
/// of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    alpha: Rational,
    beta: Rational,
}

impl Decomposition {
    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `beta/alpha`; `None` when `alpha = 0` (the point is `v`).
    pub fn ratio(&self) -> Option<Rational> {
        if self.alpha.is_zero() {
            None
        } else {
            Some(&self.beta / &self.alpha)
        }
    }

    /// `alpha·u + beta·v`, for round-trip checks.
    pub fn recombine(&self, u: &ProjPoint, v: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new([
            &self.alpha * &u.coords[0] + &self.beta * &v.coords[0],
            &self.alpha * &u.coords[1] + &self.beta * &v.coords[1],
            &self.alpha * &u.coords[2] + &self.beta * &v.coords[2],
        ])
    }
}

/// Decomposes `p` over the ordered basis pair `(u, v)`.
pub fn decompose(p: &ProjPoint, u: &ProjPoint, v: &ProjPoint) -> Result<Decomposition> {
    let (alpha, beta) = decompose_triple(&p.coords, &u.coords, &v.coords)?;
    let pair = canonical_coprime(&[alpha, beta]);
    Ok(Decomposition {
        alpha: pair[0].clone(),
        beta: pair[1].clone(),
    })
}

/// The classical cross ratio `(a1 b2)/(a2 b1)` of two points against a basis
/// pair. Kept only to contrast with the characteristic ratio `b1 b2/(a1 a2)`,
/// which multiplies the coefficients the other way.
pub fn cross_ratio(
    u: &ProjPoint,
    v: &ProjPoint,
    p1: &ProjPoint,
    p2: &ProjPoint,
) -> Result<Rational> {
    let d1 = decompose(p1, u, v)?;
    let d2 = decompose(p2, u, v)?;
    if d1.alpha.is_zero() || d1.beta.is_zero() || d2.alpha.is_zero() || d2.beta.is_zero() {
        return Err(Error::IndeterminateRatio);
    }
    Ok((&d1.alpha * &d2.beta) / (&d2.alpha * &d1.beta))
}

/// Three lines with no common point together with canonical vertex
/// representatives `u = c×a`, `v = a×b`, `w = b×c`, so that `u, v` lie on
/// `a`, `v, w` on `b` and `w, u` on `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriFrame {
    a: ProjLine,
    b: ProjLine,
    c: ProjLine,
    u: ProjPoint,
    v: ProjPoint,
    w: ProjPoint,
}

impl TriFrame {
    pub fn new(a: ProjLine, b: ProjLine, c: ProjLine) -> Result<Self> {
        if det3(&a.coeffs, &b.coeffs, &c.coeffs).is_zero() {
            return Err(Error::InvalidConfig(
                "frame lines must be distinct with no common point".into(),
            ));
        }
        let u = ProjPoint {
            coords: cross(&c.coeffs, &a.coeffs),
        }
        .canonical();
        let v = ProjPoint {
            coords: cross(&a.coeffs, &b.coeffs),
        }
        .canonical();
        let w = ProjPoint {
            coords: cross(&b.coeffs, &c.coeffs),
        }
        .canonical();
        Ok(Self { a, b, c, u, v, w })
    }

    pub fn a(&self) -> &ProjLine {
        &self.a
    }

    pub fn b(&self) -> &ProjLine {
        &self.b
    }

    pub fn c(&self) -> &ProjLine {
        &self.c
    }

    pub fn u(&self) -> &ProjPoint {
        &self.u
    }

    pub fn v(&self) -> &ProjPoint {
        &self.v
    }

    pub fn w(&self) -> &ProjPoint {
        &self.w
    }

    /// The same frame with rescaled vertex representatives. Individual
    /// decomposition ratios change covariantly under this; cyclic products
    /// do not, which is what the rescaling exists to demonstrate.
    pub fn with_vertex_scales(
        &self,
        lu: &Rational,
        lv: &Rational,
        lw: &Rational,
    ) -> Result<TriFrame> {
        Ok(TriFrame {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            u: self.u.scaled(lu)?,
            v: self.v.scaled(lv)?,
            w: self.w.scaled(lw)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn meet_of_axes() {
        let p = meet(&ProjLine::ints(1, 0, 0), &ProjLine::ints(0, 1, 0)).unwrap();
        assert_eq!(p, ProjPoint::ints(0, 0, 1));
    }

    #[test]
    fn meet_of_frame_lines_matches_reference_vertex() {
        // c: -x+z  and  a: x+z  intersect at the vertex (0,-1,0) ~ (0,1,0)
        let p = meet(&ProjLine::ints(-1, 0, 1), &ProjLine::ints(1, 0, 1)).unwrap();
        assert_eq!(p, ProjPoint::ints(0, -1, 0));
        assert_eq!(p.coords(), ProjPoint::ints(0, 1, 0).coords());
    }

    #[test]
    fn meet_of_parallels_is_at_infinity() {
        let p = meet(&ProjLine::ints(1, 0, -1), &ProjLine::ints(1, 0, -2)).unwrap();
        assert_eq!(p, ProjPoint::ints(0, 1, 0));
        assert!(p.is_at_infinity());
    }

    #[test]
    fn meet_rejects_coincident_lines() {
        let l = ProjLine::ints(1, 2, 3);
        let l2 = l.scaled(&frac(-5, 7)).unwrap();
        assert_eq!(meet(&l, &l2).unwrap_err(), Error::LinesCoincide);
    }

    #[test]
    fn join_examples() {
        let l = join(&ProjPoint::ints(0, 0, 1), &ProjPoint::ints(0, 1, 0)).unwrap();
        assert_eq!(l, ProjLine::ints(1, 0, 0));
        // two reference points of the worked example span the line x+z=0
        let p1 = ProjPoint::new([rat(-4), rat(-1), rat(4)]).unwrap();
        let p2 = ProjPoint::new([rat(-1), frac(-3, 2), rat(1)]).unwrap();
        assert_eq!(join(&p1, &p2).unwrap(), ProjLine::ints(1, 0, 1));
        let l3 = join(&ProjPoint::ints(1, 0, 1), &ProjPoint::ints(0, 1, 1)).unwrap();
        assert_eq!(l3, ProjLine::ints(1, 1, -1));
        assert!(l3.contains(&ProjPoint::ints(1, 0, 1)));
        assert!(l3.contains(&ProjPoint::ints(0, 1, 1)));
    }

    #[test]
    fn join_rejects_equal_points() {
        let p = ProjPoint::ints(1, 2, 3);
        assert_eq!(join(&p, &p).unwrap_err(), Error::PointsCoincide);
    }

    #[test]
    fn collinearity_determinant() {
        assert!(collinear(
            &ProjPoint::ints(1, 0, 0),
            &ProjPoint::ints(0, 1, 0),
            &ProjPoint::ints(1, 1, 0)
        ));
        assert!(!collinear(
            &ProjPoint::ints(1, 0, 0),
            &ProjPoint::ints(0, 1, 0),
            &ProjPoint::ints(0, 0, 1)
        ));
    }

    #[test]
    fn dualize_swaps_roles_and_preserves_incidence() {
        assert_eq!(ProjPoint::ints(1, 2, 3).dual(), ProjLine::ints(1, 2, 3));
        let triangle = Figure {
            points: vec![
                ProjPoint::ints(0, 0, 1),
                ProjPoint::ints(1, 0, 1),
                ProjPoint::ints(0, 1, 1),
            ],
            lines: vec![
                ProjLine::ints(0, 1, 0),
                ProjLine::ints(1, 0, 0),
                ProjLine::ints(1, 1, -1),
            ],
        };
        let dual = dualize(&triangle);
        assert_eq!(dual.incidences(), triangle.incidences());
        assert_eq!(dualize(&dual), triangle);
    }

    #[test]
    fn decompose_standard_basis() {
        let d = decompose(
            &ProjPoint::ints(1, 1, 0),
            &ProjPoint::ints(1, 0, 0),
            &ProjPoint::ints(0, 1, 0),
        )
        .unwrap();
        assert_eq!((d.alpha(), d.beta()), (&rat(1), &rat(1)));
    }

    #[test]
    fn decompose_worked_example_point() {
        // p5 = (1,-3/2,1) over (w,u) with w=(1,1,1), u=(0,-1,0):
        // alpha=1, beta=5/2, stored as the coprime pair (2,5).
        let p5 = ProjPoint::new([rat(1), frac(-3, 2), rat(1)]).unwrap();
        let w = ProjPoint::ints(1, 1, 1);
        let u = ProjPoint::ints(0, -1, 0);
        let d = decompose(&p5, &w, &u).unwrap();
        assert_eq!((d.alpha(), d.beta()), (&rat(2), &rat(5)));
        assert_eq!(d.ratio().unwrap(), frac(5, 2));
        assert_eq!(d.recombine(&w, &u).unwrap(), p5);
    }

    #[test]
    fn decompose_ratio_depends_on_basis_representative() {
        // Same point, but the sign of u's representative flips the ratio.
        let p1 = ProjPoint::new([rat(-4), rat(-1), rat(4)]).unwrap();
        let v = ProjPoint::ints(-1, 1, 1);
        let d_minus = decompose(&p1, &ProjPoint::ints(0, -1, 0), &v).unwrap();
        assert_eq!(d_minus.ratio().unwrap(), frac(4, 5));
        let d_plus = decompose(&p1, &ProjPoint::ints(0, 1, 0), &v).unwrap();
        assert_eq!(d_plus.ratio().unwrap(), frac(-4, 5));
        assert_eq!(
            (d_plus.alpha(), d_plus.beta()),
            (&rat(5), &rat(-4)),
        );
    }

    #[test]
    fn decompose_errors() {
        let u = ProjPoint::ints(1, 0, 0);
        let v = ProjPoint::ints(0, 1, 0);
        assert_eq!(
            decompose(&ProjPoint::ints(0, 0, 1), &u, &v).unwrap_err(),
            Error::PointOffSpan
        );
        assert_eq!(
            decompose(&u, &u, &u.scaled(&rat(3)).unwrap()).unwrap_err(),
            Error::DegenerateBasis
        );
    }

    #[test]
    fn cross_ratio_differs_from_characteristic_ratio() {
        let u = ProjPoint::ints(1, 0, 0);
        let v = ProjPoint::ints(0, 1, 0);
        let p1 = ProjPoint::ints(1, 2, 0);
        let p2 = ProjPoint::ints(1, 3, 0);
        assert_eq!(cross_ratio(&u, &v, &p1, &p2).unwrap(), frac(3, 2));
        // characteristic ratio of the same data is (2·3)/(1·1) = 6
        let r1 = decompose(&p1, &u, &v).unwrap().ratio().unwrap();
        let r2 = decompose(&p2, &u, &v).unwrap().ratio().unwrap();
        assert_eq!(r1 * r2, rat(6));
    }

    #[test]
    fn triframe_is_deterministic_and_canonical() {
        let a = ProjLine::ints(1, 0, 1);
        let b = ProjLine::ints(0, -1, 1);
        let c = ProjLine::ints(-1, 0, 1);
        let f = TriFrame::new(a.clone(), b.clone(), c.clone()).unwrap();
        assert_eq!(f.u().coords(), ProjPoint::ints(0, 1, 0).coords());
        assert_eq!(f.v().coords(), ProjPoint::ints(1, -1, -1).coords());
        assert_eq!(f.w().coords(), ProjPoint::ints(1, 1, 1).coords());
        // scaling the input lines does not move the canonical vertices
        let f2 = TriFrame::new(
            a.scaled(&frac(7, 3)).unwrap(),
            b.scaled(&rat(-2)).unwrap(),
            c.scaled(&frac(1, 5)).unwrap(),
        )
        .unwrap();
        assert_eq!(f.u().coords(), f2.u().coords());
        assert_eq!(f.v().coords(), f2.v().coords());
        assert_eq!(f.w().coords(), f2.w().coords());
    }

    #[test]
    fn triframe_rejects_concurrent_lines() {
        assert!(TriFrame::new(
            ProjLine::ints(1, 0, 0),
            ProjLine::ints(0, 1, 0),
            ProjLine::ints(1, 1, 0)
        )
        .is_err());
    }
}
