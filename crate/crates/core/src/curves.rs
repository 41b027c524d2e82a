//! Homogeneous algebraic plane curves and their characteristic invariants.
//!
//! A curve of degree `n` is a dense coefficient table over the monomials
//! `x^i y^j z^k`, `i+j+k = n`, ordered by `z`-degree ascending and then
//! `y`-degree ascending (so a conic reads `x², xy, y², xz, yz, z²` — the
//! classical `A..F` order). Characteristic ratios of curve/line
//! intersections are never obtained by root finding: the restriction of the
//! curve to a line is a binary form whose endpoint coefficients are the
//! curve values at the basis points, and the ratio is the symmetric function
//! `(-1)^n P(u)/P(v)` of all n complex roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::projective::{cross, ProjLine, ProjPoint, TriFrame};
use crate::rational::{canonical_coprime, pow_rat, Rational};

/// Exponent triples `(i, j, k)` of degree `n`, in the canonical table order.
pub fn monomial_exponents(degree: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(coefficient_count(degree));
    for k in 0..=degree {
        for j in 0..=(degree - k) {
            out.push((degree - k - j, j, k));
        }
    }
    out
}

/// Number of degree-`n` monomials in three variables: `(n+1)(n+2)/2`.
pub fn coefficient_count(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

fn monomial_index(degree: usize, j: usize, k: usize) -> usize {
    // offset of the k-block plus j
    k * (degree + 1) - k * (k.saturating_sub(1)) / 2 + j
}

/// A homogeneous polynomial of degree `n ≥ 1` in `(x, y, z)`, not
/// identically zero. `P(λp) = λⁿ P(p)`, so membership `P(p) = 0` is
/// representative-free while the raw value is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCurve {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl HomCurve {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidConfig("curve degree must be at least 1".into()));
        }
        if coeffs.len() != coefficient_count(degree) {
            return Err(Error::InvalidConfig(format!(
                "degree {degree} needs {} coefficients, got {}",
                coefficient_count(degree),
                coeffs.len()
            )));
        }
        if coeffs.iter().all(Rational::is_zero) {
            return Err(Error::InvalidConfig("zero polynomial is not a curve".into()));
        }
        Ok(Self { degree, coeffs })
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(degree, coeffs.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    /// The degree-1 curve cut out by a line.
    pub fn from_line(l: &ProjLine) -> HomCurve {
        let c = l.coeffs();
        HomCurve {
            degree: 1,
            coeffs: vec![c[0].clone(), c[1].clone(), c[2].clone()],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        debug_assert_eq!(i + j + k, self.degree);
        &self.coeffs[monomial_index(self.degree, j, k)]
    }

    /// Coefficient vector rescaled to coprime integers with first nonzero
    /// entry positive; the deterministic representative of the curve.
    pub fn canonical(&self) -> HomCurve {
        HomCurve {
            degree: self.degree,
            coeffs: canonical_coprime(&self.coeffs),
        }
    }

    /// Projective equality of curves (coefficient vectors up to scale).
    pub fn same_curve(&self, other: &HomCurve) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let n = self.coeffs.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.coeffs[i] * &other.coeffs[j] != &self.coeffs[j] * &other.coeffs[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn scale(&self, lambda: &Rational) -> Result<HomCurve> {
        if lambda.is_zero() {
            return Err(Error::InvalidConfig("zero scale".into()));
        }
        Ok(HomCurve {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * lambda).collect(),
        })
    }

    /// Exact polynomial product; degrees add.
    pub fn multiply(&self, other: &HomCurve) -> HomCurve {
        let degree = self.degree + other.degree;
        let mut coeffs = vec![Rational::zero(); coefficient_count(degree)];
        for ((_, j1, k1), c1) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
            if c1.is_zero() {
                continue;
            }
            for ((_, j2, k2), c2) in monomial_exponents(other.degree).into_iter().zip(&other.coeffs)
            {
                if c2.is_zero() {
                    continue;
                }
                coeffs[monomial_index(degree, j1 + j2, k1 + k2)] += c1 * c2;
            }
        }
        HomCurve { degree, coeffs }
    }

    /// Sum of two curves of equal degree; errors if everything cancels.
    pub fn add(&self, other: &HomCurve) -> Result<HomCurve> {
        if self.degree != other.degree {
            return Err(Error::InvalidConfig("cannot add curves of different degree".into()));
        }
        HomCurve::new(
            self.degree,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exact value of `P` at the given representative of `p`.
    pub fn evaluate(&self, p: &ProjPoint) -> Rational {
        let [x, y, z] = p.coords();
        let mut xp = vec![Rational::one()];
        let mut yp = vec![Rational::one()];
        let mut zp = vec![Rational::one()];
        for e in 1..=self.degree {
            xp.push(&xp[e - 1] * x);
            yp.push(&yp[e - 1] * y);
            zp.push(&zp[e - 1] * z);
        }
        let mut acc = Rational::zero();
        for ((i, j, k), c) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
            if !c.is_zero() {
                acc += c * &xp[i] * &yp[j] * &zp[k];
            }
        }
        acc
    }

    /// `(∂P/∂x, ∂P/∂y, ∂P/∂z)` evaluated at `p`.
    pub fn gradient_at(&self, p: &ProjPoint) -> [Rational; 3] {
        let [x, y, z] = p.coords();
        let mut xp = vec![Rational::one()];
        let mut yp = vec![Rational::one()];
        let mut zp = vec![Rational::one()];
        for e in 1..=self.degree {
            xp.push(&xp[e - 1] * x);
            yp.push(&yp[e - 1] * y);
            zp.push(&zp[e - 1] * z);
        }
        let mut g = [Rational::zero(), Rational::zero(), Rational::zero()];
        for ((i, j, k), c) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            if i > 0 {
                g[0] += c * Rational::from_integer(i.into()) * &xp[i - 1] * &yp[j] * &zp[k];
            }
            if j > 0 {
                g[1] += c * Rational::from_integer(j.into()) * &xp[i] * &yp[j - 1] * &zp[k];
            }
            if k > 0 {
                g[2] += c * Rational::from_integer(k.into()) * &xp[i] * &yp[j] * &zp[k - 1];
            }
        }
        g
    }

    /// Determinant of the 3x3 Hessian of `P` at `p`.
    pub fn hessian_det_at(&self, p: &ProjPoint) -> Rational {
        let second = |da: usize, db: usize| -> Rational {
            let [x, y, z] = p.coords();
            let mut acc = Rational::zero();
            for ((i, j, k), c) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
                if c.is_zero() {
                    continue;
                }
                let mut e = [i, j, k];
                let mut factor = BigInt::one();
                for d in [da, db] {
                    if e[d] == 0 {
                        factor = BigInt::zero();
                        break;
                    }
                    factor *= BigInt::from(e[d]);
                    e[d] -= 1;
                }
                if factor.is_zero() {
                    continue;
                }
                let mut term = c * Rational::from_integer(factor);
                for _ in 0..e[0] {
                    term *= x;
                }
                for _ in 0..e[1] {
                    term *= y;
                }
                for _ in 0..e[2] {
                    term *= z;
                }
                acc += term;
            }
            acc
        };
        let h: Vec<Vec<Rational>> = (0..3)
            .map(|r| (0..3).map(|c| second(r, c)).collect())
            .collect();
        &h[0][0] * (&h[1][1] * &h[2][2] - &h[1][2] * &h[2][1])
            - &h[0][1] * (&h[1][0] * &h[2][2] - &h[1][2] * &h[2][0])
            + &h[0][2] * (&h[1][0] * &h[2][1] - &h[1][1] * &h[2][0])
    }

    /// The binary form `g(s,t) = P(s·u + t·v)` expanded exactly. The zero
    /// form is a legal output and means `join(u,v)` is a component of the
    /// curve. By construction `g(1,0) = P(u)` and `g(0,1) = P(v)`.
    pub fn restrict_to_line(&self, u: &ProjPoint, v: &ProjPoint) -> Result<BinaryForm> {
        if u == v {
            return Err(Error::DegenerateBasis);
        }
        let lin = |cu: &Rational, cv: &Rational| BinaryForm {
            degree: 1,
            coeffs: vec![cu.clone(), cv.clone()],
        };
        let uc = u.coords();
        let vc = v.coords();
        let lx = lin(&uc[0], &vc[0]);
        let ly = lin(&uc[1], &vc[1]);
        let lz = lin(&uc[2], &vc[2]);
        let pow_table = |l: &BinaryForm| -> Vec<BinaryForm> {
            let mut t = vec![BinaryForm::one()];
            for e in 1..=self.degree {
                t.push(t[e - 1].multiply(l));
            }
            t
        };
        let px = pow_table(&lx);
        let py = pow_table(&ly);
        let pz = pow_table(&lz);
        let mut acc = BinaryForm::zero(self.degree);
        for ((i, j, k), c) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let term = px[i].multiply(&py[j]).multiply(&pz[k]);
            for (idx, tc) in term.coeffs.iter().enumerate() {
                acc.coeffs[idx] += c * tc;
            }
        }
        Ok(acc)
    }

    /// True iff the line divides the curve, tested by restricting to two
    /// points of the line and checking for the zero form.
    pub fn contains_line(&self, l: &ProjLine) -> bool {
        let p = point_on_line(l, None);
        let q = point_on_line(l, Some(&p));
        self.restrict_to_line(&p, &q)
            .map(|g| g.is_zero())
            .unwrap_or(false)
    }

    /// Tangent line at a smooth point of the curve: the gradient
    /// coefficients, which contain `p` by the Euler relation.
    pub fn tangent_line(&self, p: &ProjPoint) -> Result<ProjLine> {
        if !self.evaluate(p).is_zero() {
            return Err(Error::NotOnCurve);
        }
        let g = self.gradient_at(p);
        if g.iter().all(Rational::is_zero) {
            return Err(Error::SingularPoint);
        }
        ProjLine::new(g)
    }

    /// True iff the Hessian determinant vanishes at the smooth point `p`.
    pub fn is_flex(&self, p: &ProjPoint) -> Result<bool> {
        if !self.evaluate(p).is_zero() {
            return Err(Error::NotOnCurve);
        }
        if self.gradient_at(p).iter().all(Rational::is_zero) {
            return Err(Error::SingularPoint);
        }
        Ok(self.hessian_det_at(p).is_zero())
    }
}

impl std::fmt::Display for HomCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for ((i, j, k), c) in monomial_exponents(self.degree).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (var, e) in [("x", i), ("y", j), ("z", k)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{e}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A deterministic point on `l`: the first nonzero cross product with a
/// coordinate axis that differs from `avoid`.
pub(crate) fn point_on_line(l: &ProjLine, avoid: Option<&ProjPoint>) -> ProjPoint {
    for axis in [
        ProjLine::ints(1, 0, 0),
        ProjLine::ints(0, 1, 0),
        ProjLine::ints(0, 0, 1),
    ] {
        let c = cross(l.coeffs(), axis.coeffs());
        if c.iter().all(Rational::is_zero) {
            continue;
        }
        let p = ProjPoint::new(c).expect("nonzero cross product").canonical();
        if avoid.map_or(true, |a| &p != a) {
            return p;
        }
    }
    unreachable!("a projective line carries at least two distinct axis sections")
}

/// Binary form `g(s,t) = Σ c_i s^(n-i) t^i`. Realizes the intersection
/// divisor of a curve with a line; the roots `(s_i : t_i)` are the
/// decomposition coefficients of the intersection points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::InvalidConfig(format!(
                "binary form of degree {degree} needs {} coefficients",
                degree + 1
            )));
        }
        Ok(Self { degree, coeffs })
    }

    fn one() -> Self {
        Self {
            degree: 0,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn evaluate(&self, s: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..(self.degree - i) {
                term *= s;
            }
            for _ in 0..i {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    pub fn multiply(&self, other: &BinaryForm) -> BinaryForm {
        let degree = self.degree + other.degree;
        let mut coeffs = vec![Rational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { degree, coeffs }
    }

    /// Divides out the linear factor vanishing at the root `(s0 : t0)`,
    /// verifying exactness. Fails with `PointOffSpan` if `(s0 : t0)` is not
    /// a root.
    pub fn divide_root(&self, s0: &Rational, t0: &Rational) -> Result<BinaryForm> {
        if self.degree == 0 {
            return Err(Error::InvalidConfig("cannot divide a constant form".into()));
        }
        if (s0.is_zero() && t0.is_zero()) || !self.evaluate(s0, t0).is_zero() {
            return Err(Error::PointOffSpan);
        }
        let n = self.degree;
        let mut h = vec![Rational::zero(); n];
        if t0.is_zero() {
            // factor is t (up to scale): coefficients shift down
            for i in 0..n {
                h[i] = -(&self.coeffs[i + 1] / s0);
            }
        } else {
            // g = (t0·s - s0·t)·h  =>  h_i = (c_i + s0·h_{i-1}) / t0
            for i in 0..n {
                let prev = if i == 0 { Rational::zero() } else { h[i - 1].clone() };
                h[i] = (&self.coeffs[i] + s0 * prev) / t0;
            }
            debug_assert!((-(s0 * &h[n - 1])) == self.coeffs[n]);
        }
        Ok(BinaryForm {
            degree: n - 1,
            coeffs: h,
        })
    }

    /// All rational projective roots with multiplicity, as canonical coprime
    /// integer pairs `(s, t)`, sorted deterministically. Roots are certified
    /// by exact evaluation and extracted by exact division.
    pub fn rational_roots(&self) -> Vec<((BigInt, BigInt), usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let ints = canonical_coprime(&self.coeffs);
        let mut form = BinaryForm {
            degree: self.degree,
            coeffs: ints,
        };
        let mut found: Vec<((BigInt, BigInt), usize)> = Vec::new();
        let record = |root: (BigInt, BigInt), acc: &mut Vec<((BigInt, BigInt), usize)>| {
            if let Some(e) = acc.iter_mut().find(|(r, _)| *r == root) {
                e.1 += 1;
            } else {
                acc.push((root, 1));
            }
        };
        // roots at the basis points first
        while form.degree > 0 && form.coeffs[0].is_zero() {
            form = form.divide_root(&Rational::one(), &Rational::zero()).unwrap();
            record((BigInt::one(), BigInt::zero()), &mut found);
        }
        while form.degree > 0 && form.coeffs[form.degree].is_zero() {
            form = form.divide_root(&Rational::zero(), &Rational::one()).unwrap();
            record((BigInt::zero(), BigInt::one()), &mut found);
        }
        if form.degree > 0 {
            let lead = form.coeffs[0].numer().clone();
            let trail = form.coeffs[form.degree].numer().clone();
            let ps = divisors(&trail);
            let qs = divisors(&lead);
            'cand: for p in &ps {
                for q in &qs {
                    if p.gcd(q) != BigInt::one() {
                        continue;
                    }
                    for sp in [p.clone(), -p.clone()] {
                        let s = Rational::from_integer(sp.clone());
                        let t = Rational::from_integer(q.clone());
                        while form.degree > 0 && form.evaluate(&s, &t).is_zero() {
                            form = form.divide_root(&s, &t).unwrap();
                            record((sp.clone(), q.clone()), &mut found);
                        }
                        if form.degree == 0 {
                            break 'cand;
                        }
                    }
                }
            }
        }
        found.sort_by(|((s1, t1), _), ((s2, t2), _)| {
            // order: (1:0) first, then by s/t ascending
            match (t1.is_zero(), t2.is_zero()) {
                (true, true) => std::cmp::Ordering::Equal,
                (true, false) => std::cmp::Ordering::Less,
                (false, true) => std::cmp::Ordering::Greater,
                (false, false) => {
                    let l = Rational::new(s1.clone(), t1.clone());
                    let r = Rational::new(s2.clone(), t2.clone());
                    l.cmp(&r)
                }
            }
        });
        found
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// A characteristic ratio: a finite nonzero rational unless some
/// intersection point coincides with a basis point (`Zero` when a point sits
/// at `u`, `Infinite` when one sits at `v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharRatio {
    Finite(Rational),
    Zero,
    Infinite,
}

impl CharRatio {
    pub fn combine(self, other: CharRatio) -> Result<CharRatio> {
        use CharRatio::*;
        Ok(match (self, other) {
            (Finite(a), Finite(b)) => Finite(a * b),
            (Zero, Infinite) | (Infinite, Zero) => return Err(Error::IndeterminateRatio),
            (Zero, _) | (_, Zero) => Zero,
            (Infinite, _) | (_, Infinite) => Infinite,
        })
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            CharRatio::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl std::fmt::Display for CharRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CharRatio::Finite(r) => write!(f, "{r}"),
            CharRatio::Zero => write!(f, "0 (degenerate)"),
            CharRatio::Infinite => write!(f, "infinite (degenerate)"),
        }
    }
}

/// `[u,v; p_1..p_k]`: the product of `beta/alpha` over the decompositions of
/// the listed points, each factor raised to its multiplicity.
pub fn char_ratio_points(
    u: &ProjPoint,
    v: &ProjPoint,
    points: &[(ProjPoint, usize)],
) -> Result<CharRatio> {
    let mut acc = CharRatio::Finite(Rational::one());
    for (p, mult) in points {
        let d = crate::projective::decompose(p, u, v)?;
        let factor = if d.alpha().is_zero() {
            CharRatio::Infinite
        } else if d.beta().is_zero() {
            CharRatio::Zero
        } else {
            CharRatio::Finite(pow_rat(&(d.beta() / d.alpha()), *mult))
        };
        acc = acc.combine(factor)?;
    }
    Ok(acc)
}

/// Characteristic ratio of all `n` intersections (with multiplicity, over
/// the complex closure) of the curve with `join(u,v)`, computed through the
/// endpoint identity `(-1)^n g(1,0)/g(0,1) = (-1)^n P(u)/P(v)` — Vieta on
/// the restricted binary form, no root finding.
pub fn char_ratio_curve_line(c: &HomCurve, u: &ProjPoint, v: &ProjPoint) -> Result<CharRatio> {
    let g = c.restrict_to_line(u, v)?;
    if g.is_zero() {
        return Err(Error::LineComponent);
    }
    let pu = &g.coeffs()[0];
    let pv = &g.coeffs()[g.degree()];
    match (pu.is_zero(), pv.is_zero()) {
        (true, true) => Err(Error::IndeterminateRatio),
        (true, false) => Ok(CharRatio::Zero),
        (false, true) => Ok(CharRatio::Infinite),
        (false, false) => {
            let mut r = pu / pv;
            if c.degree() % 2 == 1 {
                r = -r;
            }
            Ok(CharRatio::Finite(r))
        }
    }
}

/// The characteristic number: the cyclic product
/// `[u,v; Γ∩a]·[v,w; Γ∩b]·[w,u; Γ∩c]` over a frame. All three factors are
/// computed independently and multiplied; that the result is `(-1)^n` is a
/// theorem checked by the test suite, not an assumption.
pub fn char_number(c: &HomCurve, frame: &TriFrame) -> Result<Rational> {
    // a frame line dividing the curve forces both its vertices onto the
    // curve, so the component check comes first
    for line in [frame.a(), frame.b(), frame.c()] {
        if c.contains_line(line) {
            return Err(Error::LineComponent);
        }
    }
    for vertex in [frame.u(), frame.v(), frame.w()] {
        if c.evaluate(vertex).is_zero() {
            return Err(Error::VertexOnCurve);
        }
    }
    let factors = [
        char_ratio_curve_line(c, frame.u(), frame.v())?,
        char_ratio_curve_line(c, frame.v(), frame.w())?,
        char_ratio_curve_line(c, frame.w(), frame.u())?,
    ];
    let mut acc = Rational::one();
    for f in factors {
        match f {
            CharRatio::Finite(r) => acc *= r,
            CharRatio::Zero | CharRatio::Infinite => {
                return Err(Error::Internal("degenerate ratio despite vertices off the curve"))
            }
        }
    }
    Ok(acc)
}

/// Deterministic basis of the space of degree-`d` curves through all the
/// given points: the nullspace of the evaluation matrix (rows = points,
/// columns = monomials). Empty when no such curve exists.
pub fn fit_curves(points: &[ProjPoint], degree: usize) -> Vec<HomCurve> {
    let exps = monomial_exponents(degree);
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            let mut xp = vec![Rational::one()];
            let mut yp = vec![Rational::one()];
            let mut zp = vec![Rational::one()];
            for e in 1..=degree {
                xp.push(&xp[e - 1] * x);
                yp.push(&yp[e - 1] * y);
                zp.push(&zp[e - 1] * z);
            }
            exps.iter().map(|&(i, j, k)| &xp[i] * &yp[j] * &zp[k]).collect()
        })
        .collect();
    let m = if rows.is_empty() {
        RatMatrix::zero(0, exps.len())
    } else {
        RatMatrix::from_rows(rows)
    };
    m.nullspace()
        .into_iter()
        .map(|v| HomCurve::new(degree, v).expect("nullspace vectors are nonzero"))
        .collect()
}

/// True iff the six points lie on a common conic (vanishing 6x6 determinant
/// of degree-2 monomial evaluations, tested via the nullspace).
pub fn conic_through_six(points: &[ProjPoint; 6]) -> bool {
    !fit_curves(points, 2).is_empty()
}

/// Membership of a curve in the projective span of a basis (all of matching
/// degree).
pub fn in_span(basis: &[HomCurve], c: &HomCurve) -> bool {
    if basis.is_empty() {
        return false;
    }
    let rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
    let base = RatMatrix::from_rows(rows.clone());
    let mut with = rows;
    with.push(c.coeffs().to_vec());
    base.rank() == RatMatrix::from_rows(with).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{decompose, join};
    use crate::rational::{frac, rat};

    fn worked_cubic() -> HomCurve {
        HomCurve::from_ints(
            3,
            &[-1120, 560, -60, 1008, 0, -450, 1200, 580, -1514, -729],
        )
        .unwrap()
    }

    fn unit_circleish() -> HomCurve {
        // x^2 + y^2 - z^2
        HomCurve::from_ints(2, &[1, 0, 1, 0, 0, -1]).unwrap()
    }

    #[test]
    fn monomial_order_is_the_classical_conic_order() {
        assert_eq!(
            monomial_exponents(2),
            vec![(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
        );
        assert_eq!(coefficient_count(3), 10);
    }

    #[test]
    fn evaluate_worked_cubic() {
        let c = worked_cubic();
        assert_eq!(c.evaluate(&ProjPoint::ints(0, -1, 0)), rat(-1008));
        assert_eq!(c.evaluate(&ProjPoint::ints(0, 1, 0)), rat(1008));
        let p1 = ProjPoint::ints(-4, -1, 4);
        assert!(c.evaluate(&p1).is_zero());
        assert_eq!(unit_circleish().evaluate(&ProjPoint::ints(0, 0, 1)), rat(-1));
        assert_eq!(
            HomCurve::from_ints(2, &[1, 0, 1, 0, 0, 1])
                .unwrap()
                .evaluate(&ProjPoint::ints(0, 0, 1)),
            rat(1)
        );
    }

    #[test]
    fn restriction_of_a_line_to_itself_is_zero() {
        let a = HomCurve::from_line(&ProjLine::ints(1, 0, 1));
        let g = a
            .restrict_to_line(&ProjPoint::ints(0, 1, 0), &ProjPoint::ints(-1, 1, 1))
            .unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn restriction_endpoints_are_curve_values() {
        let conic = unit_circleish();
        let u = ProjPoint::ints(1, 0, 1);
        let v = ProjPoint::ints(0, 1, 1);
        let g = conic.restrict_to_line(&u, &v).unwrap();
        assert_eq!(g.coeffs(), &[rat(0), rat(-2), rat(0)]);

        let c = worked_cubic();
        let u = ProjPoint::ints(0, -1, 0);
        let v = ProjPoint::ints(-1, 1, 1);
        let g = c.restrict_to_line(&u, &v).unwrap();
        assert_eq!(g.coeffs(), &[rat(-1008), rat(4284), rat(-5040), rat(1575)]);
        assert_eq!(g.coeffs()[0], c.evaluate(&u));
        assert_eq!(g.coeffs()[3], c.evaluate(&v));
    }

    #[test]
    fn char_ratio_of_single_point() {
        let u = ProjPoint::ints(1, 0, 0);
        let v = ProjPoint::ints(0, 1, 0);
        let p = ProjPoint::ints(3, 6, 0); // 3u + 6v
        let r = char_ratio_points(&u, &v, &[(p, 1)]).unwrap();
        assert_eq!(r.as_finite().unwrap(), &rat(2));
        assert_eq!(
            char_ratio_points(&u, &v, &[(u.clone(), 1)]).unwrap(),
            CharRatio::Zero
        );
        assert_eq!(
            char_ratio_points(&u, &v, &[(v.clone(), 1)]).unwrap(),
            CharRatio::Infinite
        );
    }

    #[test]
    fn char_ratio_worked_example_line_a() {
        // over the reference representatives u=(0,-1,0), v=(-1,1,1):
        // factors 4/5, 2/5, 2 multiply to 16/25
        let u = ProjPoint::ints(0, -1, 0);
        let v = ProjPoint::ints(-1, 1, 1);
        let pts = [
            (ProjPoint::ints(-4, -1, 4), 1usize),
            (ProjPoint::new([rat(-1), frac(-3, 2), rat(1)]).unwrap(), 1),
            (ProjPoint::ints(2, -1, -2), 1),
        ];
        let factors: Vec<Rational> = pts
            .iter()
            .map(|(p, _)| decompose(p, &u, &v).unwrap().ratio().unwrap())
            .collect();
        assert_eq!(factors, vec![frac(4, 5), frac(2, 5), rat(2)]);
        let r = char_ratio_points(&u, &v, &pts).unwrap();
        assert_eq!(r.as_finite().unwrap(), &frac(16, 25));

        // Vieta endpoint identity gives the same value without the roots
        let via_curve = char_ratio_curve_line(&worked_cubic(), &u, &v).unwrap();
        assert_eq!(via_curve.as_finite().unwrap(), &frac(16, 25));
    }

    #[test]
    fn char_ratio_swap_inverts() {
        let c = worked_cubic();
        let u = ProjPoint::ints(0, -1, 0);
        let v = ProjPoint::ints(-1, 1, 1);
        let r = char_ratio_curve_line(&c, &u, &v).unwrap();
        let r_swapped = char_ratio_curve_line(&c, &v, &u).unwrap();
        assert_eq!(
            r.as_finite().unwrap() * r_swapped.as_finite().unwrap(),
            rat(1)
        );
    }

    #[test]
    fn char_ratio_product_of_lines() {
        // (x)(y) at u=(1,1,1), v=(1,-1,1): (-1)^2 P(u)/P(v) = -1
        let c = HomCurve::from_line(&ProjLine::ints(1, 0, 0))
            .multiply(&HomCurve::from_line(&ProjLine::ints(0, 1, 0)));
        let r = char_ratio_curve_line(&c, &ProjPoint::ints(1, 1, 1), &ProjPoint::ints(1, -1, 1))
            .unwrap();
        assert_eq!(r.as_finite().unwrap(), &rat(-1));
    }

    #[test]
    fn char_number_of_worked_cubic_frame() {
        let frame = TriFrame::new(
            ProjLine::ints(1, 0, 1),
            ProjLine::ints(0, -1, 1),
            ProjLine::ints(-1, 0, 1),
        )
        .unwrap();
        assert_eq!(char_number(&worked_cubic(), &frame).unwrap(), rat(-1));
    }

    #[test]
    fn char_number_of_conic_is_plus_one() {
        // x=0, y=0, x+y+3z=0 keeps all vertices off the conic
        let frame = TriFrame::new(
            ProjLine::ints(1, 0, 0),
            ProjLine::ints(0, 1, 0),
            ProjLine::ints(1, 1, 3),
        )
        .unwrap();
        assert_eq!(char_number(&unit_circleish(), &frame).unwrap(), rat(1));
    }

    #[test]
    fn char_number_rejects_vertex_on_curve() {
        // x=0, y=0, x+y+z=0 puts the vertex (0,1,-1) on the conic
        let frame = TriFrame::new(
            ProjLine::ints(1, 0, 0),
            ProjLine::ints(0, 1, 0),
            ProjLine::ints(1, 1, 1),
        )
        .unwrap();
        assert_eq!(
            char_number(&unit_circleish(), &frame).unwrap_err(),
            Error::VertexOnCurve
        );
    }

    #[test]
    fn char_number_of_line_times_conic() {
        let line = HomCurve::from_line(&ProjLine::ints(1, 1, 7));
        let product = line.multiply(&unit_circleish());
        let frame = TriFrame::new(
            ProjLine::ints(1, 0, 0),
            ProjLine::ints(0, 1, 0),
            ProjLine::ints(1, 1, 3),
        )
        .unwrap();
        assert_eq!(char_number(&product, &frame).unwrap(), rat(-1));
        assert_eq!(char_number(&line, &frame).unwrap(), rat(-1));
    }

    #[test]
    fn char_number_rejects_line_component() {
        let a = ProjLine::ints(1, 0, 0);
        let frame = TriFrame::new(
            a.clone(),
            ProjLine::ints(0, 1, 0),
            ProjLine::ints(1, 1, 3),
        )
        .unwrap();
        let c = HomCurve::from_line(&a).multiply(&unit_circleish());
        assert_eq!(char_number(&c, &frame).unwrap_err(), Error::LineComponent);
    }

    #[test]
    fn fit_conic_through_five_points() {
        let pts = vec![
            ProjPoint::ints(3, 4, 5),
            ProjPoint::ints(-3, 4, 5),
            ProjPoint::ints(4, 3, 5),
            ProjPoint::ints(0, 1, 1),
            ProjPoint::ints(1, 0, 1),
        ];
        let basis = fit_curves(&pts, 2);
        assert_eq!(basis.len(), 1);
        assert!(basis[0].same_curve(&unit_circleish()));
    }

    #[test]
    fn fit_line_through_two_points() {
        let p = ProjPoint::ints(1, 2, 1);
        let q = ProjPoint::ints(3, -1, 1);
        let basis = fit_curves(&[p.clone(), q.clone()], 1);
        assert_eq!(basis.len(), 1);
        let l = join(&p, &q).unwrap();
        assert!(basis[0].same_curve(&HomCurve::from_line(&l)));
    }

    #[test]
    fn conic_through_six_examples() {
        let on_conic = [
            ProjPoint::ints(3, 4, 5),
            ProjPoint::ints(-3, 4, 5),
            ProjPoint::ints(4, 3, 5),
            ProjPoint::ints(-4, 3, 5),
            ProjPoint::ints(0, 1, 1),
            ProjPoint::ints(1, 0, 1),
        ];
        assert!(conic_through_six(&on_conic));
        let mut off = on_conic.clone();
        off[5] = ProjPoint::ints(1, 2, 1);
        assert!(!conic_through_six(&off));
    }

    #[test]
    fn tangent_lines() {
        let conic = unit_circleish();
        assert_eq!(
            conic.tangent_line(&ProjPoint::ints(1, 0, 1)).unwrap(),
            ProjLine::ints(1, 0, -1)
        );
        let fermat = HomCurve::from_ints(3, &[1, 0, 0, 1, 0, 0, 0, 0, 0, -1]).unwrap();
        assert_eq!(
            fermat.tangent_line(&ProjPoint::ints(0, 1, 1)).unwrap(),
            ProjLine::ints(0, 1, -1)
        );
        let cusp = HomCurve::from_ints(3, &[-1, 0, 0, 0, 0, 0, 1, 0, 0, 0]).unwrap(); // y^2 z - x^3
        assert_eq!(
            cusp.tangent_line(&ProjPoint::ints(1, 1, 1)).unwrap(),
            ProjLine::ints(-3, 2, 1)
        );
        assert!(cusp.tangent_line(&ProjPoint::ints(1, 1, 1)).unwrap()
            .contains(&ProjPoint::ints(1, 1, 1)));
        assert_eq!(
            conic.tangent_line(&ProjPoint::ints(5, 5, 1)).unwrap_err(),
            Error::NotOnCurve
        );
        assert_eq!(
            cusp.tangent_line(&ProjPoint::ints(0, 0, 1)).unwrap_err(),
            Error::SingularPoint
        );
    }

    #[test]
    fn flex_detection_on_fermat_cubic() {
        let fermat = HomCurve::from_ints(3, &[1, 0, 0, 1, 0, 0, 0, 0, 0, -1]).unwrap();
        assert!(fermat.is_flex(&ProjPoint::ints(0, 1, 1)).unwrap());
        assert!(fermat.is_flex(&ProjPoint::ints(1, 0, 1)).unwrap());
        // nodal cubic y^2 z - x^3 - x^2 z at a generic smooth point
        let nodal = HomCurve::from_ints(3, &[-1, 0, 0, 0, -1, 0, 1, 0, 0, 0]).unwrap();
        assert!(!nodal.is_flex(&ProjPoint::ints(3, 6, 1)).unwrap());
    }

    #[test]
    fn contains_line_detects_components() {
        let a = ProjLine::ints(1, 0, 1);
        let c = HomCurve::from_line(&a).multiply(&unit_circleish());
        assert!(c.contains_line(&a));
        assert!(!c.contains_line(&ProjLine::ints(0, 1, 0)));
        assert!(!unit_circleish().contains_line(&a));
    }

    #[test]
    fn binary_form_division_and_roots() {
        // restriction of the worked cubic to line a over the canonical frame
        let c = worked_cubic();
        let u = ProjPoint::ints(0, 1, 0);
        let v = ProjPoint::ints(1, -1, -1);
        let g = c.restrict_to_line(&u, &v).unwrap();
        let roots = g.rational_roots();
        assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), 3);
        for ((s, t), _) in &roots {
            let s = Rational::from_integer(s.clone());
            let t = Rational::from_integer(t.clone());
            assert!(g.evaluate(&s, &t).is_zero());
        }
        // dividing all roots out leaves a constant
        let mut h = g.clone();
        for ((s, t), m) in &roots {
            for _ in 0..*m {
                h = h
                    .divide_root(
                        &Rational::from_integer(s.clone()),
                        &Rational::from_integer(t.clone()),
                    )
                    .unwrap();
            }
        }
        assert_eq!(h.degree(), 0);
        assert!(!h.coeffs()[0].is_zero());
    }

    #[test]
    fn multiply_is_evaluation_compatible() {
        let c1 = worked_cubic();
        let c2 = unit_circleish();
        let prod = c1.multiply(&c2);
        let p = ProjPoint::ints(2, 3, 5);
        assert_eq!(prod.evaluate(&p), c1.evaluate(&p) * c2.evaluate(&p));
        assert_eq!(prod.degree(), 5);
    }
}
