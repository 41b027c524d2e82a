//! Singularity of Morgan-Scott-type spline spaces by exact rank
//! computation.
//!
//! A configuration is given in pencil normal form: three lines `u, v, w`
//! with no common point (the inner triangle edges) and, for each of the
//! three pencils `(u,v)`, `(v,w)`, `(w,u)`, the `μ+1` interior edges
//! `l = a·u + b·v` written by their coefficient pairs. The global
//! conformality system equates, per inner vertex, a combination of
//! `(μ+1)`-th powers of the incident edge forms to zero; its solution-space
//! dimension `τ` is the surplus over the generic spline dimension
//! `C(μ+3, 2)`. A reduced single-equation system in the `3μ+3` edge
//! unknowns has the same nullity; both are computed and compared on every
//! call.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::projective::{collinear, concurrent, decompose, join, ProjLine, ProjPoint};
use crate::rational::Rational;

/// Morgan-Scott-type configuration in pencil normal form.
#[derive(Debug, Clone)]
pub struct MSConfig {
    mu: usize,
    u: ProjLine,
    v: ProjLine,
    w: ProjLine,
    /// Pencil coefficient pairs over `(u,v)`, `(v,w)`, `(w,u)`, `μ+1` each.
    pencils: [Vec<(Rational, Rational)>; 3],
}

impl MSConfig {
    pub fn new(
        mu: usize,
        u: ProjLine,
        v: ProjLine,
        w: ProjLine,
        pencils: [Vec<(Rational, Rational)>; 3],
    ) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidConfig("smoothness mu must be at least 1".into()));
        }
        if concurrent(&u, &v, &w) {
            return Err(Error::InvalidConfig(
                "inner edge lines must be distinct with no common point".into(),
            ));
        }
        for pencil in &pencils {
            if pencil.len() != mu + 1 {
                return Err(Error::InvalidConfig(format!(
                    "each pencil needs exactly {} edges",
                    mu + 1
                )));
            }
            for (a, b) in pencil {
                if a.is_zero() && b.is_zero() {
                    return Err(Error::InvalidConfig("zero pencil pair".into()));
                }
            }
            for i in 0..pencil.len() {
                for j in (i + 1)..pencil.len() {
                    let (a1, b1) = &pencil[i];
                    let (a2, b2) = &pencil[j];
                    if a1 * b2 == a2 * b1 {
                        return Err(Error::InvalidConfig(
                            "pencil edges must be pairwise distinct".into(),
                        ));
                    }
                }
            }
        }
        Ok(Self { mu, u, v, w, pencils })
    }

    /// Integer-pair convenience constructor for tests and generators.
    pub fn from_int_pairs(
        mu: usize,
        u: ProjLine,
        v: ProjLine,
        w: ProjLine,
        pencils: [&[(i64, i64)]; 3],
    ) -> Result<Self> {
        let conv = |p: &[(i64, i64)]| {
            p.iter()
                .map(|&(a, b)| (crate::rational::rat(a), crate::rational::rat(b)))
                .collect::<Vec<_>>()
        };
        Self::new(mu, u, v, w, [conv(pencils[0]), conv(pencils[1]), conv(pencils[2])])
    }

    /// Dual configuration of points on a frame: each point on frame line
    /// `a`/`b`/`c` decomposes over the vertex pair `(u,v)`/`(v,w)`/`(w,u)`,
    /// and the coefficients become the pencil pairs of the dual edge lines,
    /// with the frame vertices turning into the lines `u, v, w`.
    pub fn from_dual_points(
        frame: &crate::projective::TriFrame,
        on_a: &[ProjPoint],
        on_b: &[ProjPoint],
        on_c: &[ProjPoint],
    ) -> Result<Self> {
        let n = on_a.len();
        if n < 2 || on_b.len() != n || on_c.len() != n {
            return Err(Error::InvalidConfig(
                "need mu+1 >= 2 points on each frame line".into(),
            ));
        }
        let bases = [
            (frame.u(), frame.v()),
            (frame.v(), frame.w()),
            (frame.w(), frame.u()),
        ];
        let groups = [on_a, on_b, on_c];
        let mut pencils: [Vec<(Rational, Rational)>; 3] = Default::default();
        for (slot, ((p1, p2), group)) in pencils.iter_mut().zip(bases.iter().zip(groups)) {
            for p in group {
                let d = decompose(p, p1, p2)?;
                slot.push((d.alpha().clone(), d.beta().clone()));
            }
        }
        Self::new(
            n - 1,
            frame.u().dual(),
            frame.v().dual(),
            frame.w().dual(),
            pencils,
        )
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn u(&self) -> &ProjLine {
        &self.u
    }

    pub fn v(&self) -> &ProjLine {
        &self.v
    }

    pub fn w(&self) -> &ProjLine {
        &self.w
    }

    pub fn pencils(&self) -> &[Vec<(Rational, Rational)>; 3] {
        &self.pencils
    }

    fn basis_pairs(&self) -> [(&ProjLine, &ProjLine); 3] {
        [(&self.u, &self.v), (&self.v, &self.w), (&self.w, &self.u)]
    }
}

/// Dimension report for `S_{μ+1}^μ` over a Morgan-Scott-type partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplineDimReport {
    /// `C(μ+3, 2)`, the generic dimension.
    pub generic_dim: usize,
    /// Nullity of the conformality system.
    pub tau: usize,
    /// `generic_dim + tau`.
    pub total_dim: usize,
    /// `tau > 0`.
    pub singular: bool,
}

/// Coefficient vector of `(t0·x + t1·y + t2·z)^d` over the canonical
/// degree-d monomial order, via multinomial expansion.
fn linear_form_power(t: &[Rational; 3], d: usize) -> Vec<Rational> {
    let mut factorial = vec![BigInt::one(); d + 1];
    for i in 1..=d {
        factorial[i] = &factorial[i - 1] * BigInt::from(i);
    }
    let mut tp = [vec![Rational::one()], vec![Rational::one()], vec![Rational::one()]];
    for var in 0..3 {
        for e in 1..=d {
            let prev = tp[var][e - 1].clone();
            tp[var].push(prev * &t[var]);
        }
    }
    crate::curves::monomial_exponents(d)
        .into_iter()
        .map(|(i, j, k)| {
            let multinomial = &factorial[d] / (&factorial[i] * &factorial[j] * &factorial[k]);
            Rational::from_integer(multinomial) * &tp[0][i] * &tp[1][j] * &tp[2][k]
        })
        .collect()
}

fn pencil_edge_form(
    pair: &(Rational, Rational),
    basis: (&ProjLine, &ProjLine),
    d: usize,
) -> Vec<Rational> {
    let (a, b) = pair;
    let (l1, l2) = basis;
    let t = [
        a * &l1.coeffs()[0] + b * &l2.coeffs()[0],
        a * &l1.coeffs()[1] + b * &l2.coeffs()[1],
        a * &l1.coeffs()[2] + b * &l2.coeffs()[2],
    ];
    linear_form_power(&t, d)
}

/// The full per-vertex conformality system: `3·C(μ+3,2)` equations in the
/// `3μ+6` unknowns `(λ_1..λ_{3μ+3}, λ_u, λ_v, λ_w)`, with the vertex blocks
/// signed `(+u, +v)`, `(-v, +w)`, `(-w, -u)`.
pub fn conformality_matrix(cfg: &MSConfig) -> RatMatrix {
    let d = cfg.mu + 1;
    let nm = crate::curves::coefficient_count(d);
    let edge_cols = 3 * d;
    let ncols = edge_cols + 3;
    let upow = linear_form_power(cfg.u.coeffs(), d);
    let vpow = linear_form_power(cfg.v.coeffs(), d);
    let wpow = linear_form_power(cfg.w.coeffs(), d);
    // per block: (vertex column, sign, power vector)
    let vertex_terms: [Vec<(usize, i64, &Vec<Rational>)>; 3] = [
        vec![(edge_cols, 1, &upow), (edge_cols + 1, 1, &vpow)],
        vec![(edge_cols + 1, -1, &vpow), (edge_cols + 2, 1, &wpow)],
        vec![(edge_cols + 2, -1, &wpow), (edge_cols, -1, &upow)],
    ];
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(3 * nm);
    for (blk, basis) in cfg.basis_pairs().into_iter().enumerate() {
        let mut cols: Vec<Vec<Rational>> = vec![vec![Rational::zero(); nm]; ncols];
        for (i, pair) in cfg.pencils[blk].iter().enumerate() {
            cols[blk * d + i] = pencil_edge_form(pair, basis, d);
        }
        for (ci, sign, vec) in &vertex_terms[blk] {
            cols[*ci] = vec
                .iter()
                .map(|c| if *sign < 0 { -c.clone() } else { c.clone() })
                .collect();
        }
        for r in 0..nm {
            rows.push((0..ncols).map(|c| cols[c][r].clone()).collect());
        }
    }
    RatMatrix::from_rows(rows)
}

/// The reduced system `Σ λ_i l_i^{μ+1} = 0`: `C(μ+3,2)` equations in the
/// `3μ+3` edge unknowns. Its nullity equals the nullity of the full system.
pub fn reduced_matrix(cfg: &MSConfig) -> RatMatrix {
    let d = cfg.mu + 1;
    let nm = crate::curves::coefficient_count(d);
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(3 * d);
    for (blk, basis) in cfg.basis_pairs().into_iter().enumerate() {
        for pair in &cfg.pencils[blk] {
            cols.push(pencil_edge_form(pair, basis, d));
        }
    }
    let rows = (0..nm)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    RatMatrix::from_rows(rows)
}

/// Computes `τ` from the full conformality system, cross-checks it against
/// the reduced system, and reports the dimension dichotomy.
pub fn spline_dim(cfg: &MSConfig) -> Result<SplineDimReport> {
    let full = conformality_matrix(cfg);
    let tau = full.cols() - full.rank();
    let reduced = reduced_matrix(cfg);
    let tau_reduced = reduced.cols() - reduced.rank();
    if tau != tau_reduced {
        return Err(Error::ConformalityBridge);
    }
    let generic_dim = crate::curves::coefficient_count(cfg.mu + 1);
    Ok(SplineDimReport {
        generic_dim,
        tau,
        total_dim: generic_dim + tau,
        singular: tau > 0,
    })
}

/// The closed-form singularity criterion: the three-pencil product of `a/b`
/// ratios equals `(-1)^{μ+1}`. Requires every coefficient nonzero (a zero
/// coefficient means an edge passes through the opposite inner vertex).
pub fn product_criterion(cfg: &MSConfig) -> Result<bool> {
    let mut prod = Rational::one();
    for pencil in &cfg.pencils {
        for (a, b) in pencil {
            if a.is_zero() || b.is_zero() {
                return Err(Error::InvalidConfig("edge through opposite vertex".into()));
            }
            prod *= a / b;
        }
    }
    let target = if (cfg.mu + 1) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(prod == target)
}

/// Dimension of the continuous piecewise-linear space over the three-edge
/// partition: `3 + τ` where `τ` is the nullity of the degree-1 conformality
/// system. Equals 4 exactly when the `b/a` ratio product is -1; the two
/// computations are compared on every call.
pub fn s10_dim(
    u: &ProjLine,
    v: &ProjLine,
    w: &ProjLine,
    pairs: &[(Rational, Rational); 3],
) -> Result<usize> {
    if concurrent(u, v, w) {
        return Err(Error::InvalidConfig(
            "frame lines must be distinct with no common point".into(),
        ));
    }
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidConfig("degenerate pencil pair".into()));
        }
    }
    let bases = [(u, v), (v, w), (w, u)];
    let upow = [u.coeffs()[0].clone(), u.coeffs()[1].clone(), u.coeffs()[2].clone()];
    let vpow = [v.coeffs()[0].clone(), v.coeffs()[1].clone(), v.coeffs()[2].clone()];
    let wpow = [w.coeffs()[0].clone(), w.coeffs()[1].clone(), w.coeffs()[2].clone()];
    let vertex_terms: [Vec<(usize, i64, &[Rational; 3])>; 3] = [
        vec![(3, 1, &upow), (4, 1, &vpow)],
        vec![(4, -1, &vpow), (5, 1, &wpow)],
        vec![(5, -1, &wpow), (3, -1, &upow)],
    ];
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for blk in 0..3 {
        let mut cols: Vec<[Rational; 3]> = vec![
            [Rational::zero(), Rational::zero(), Rational::zero()];
            6
        ];
        let (a, b) = &pairs[blk];
        let (l1, l2) = bases[blk];
        cols[blk] = [
            a * &l1.coeffs()[0] + b * &l2.coeffs()[0],
            a * &l1.coeffs()[1] + b * &l2.coeffs()[1],
            a * &l1.coeffs()[2] + b * &l2.coeffs()[2],
        ];
        for (ci, sign, vec) in &vertex_terms[blk] {
            cols[*ci] = if *sign < 0 {
                [-vec[0].clone(), -vec[1].clone(), -vec[2].clone()]
            } else {
                (*vec).clone()
            };
        }
        for r in 0..3 {
            rows.push((0..6).map(|c| cols[c][r].clone()).collect());
        }
    }
    let m = RatMatrix::from_rows(rows);
    let tau = m.cols() - m.rank();
    let mut prod = Rational::one();
    for (a, b) in pairs {
        prod *= b / a;
    }
    let by_product = prod == -Rational::one();
    if by_product != (tau == 1) {
        return Err(Error::ConformalityBridge);
    }
    Ok(3 + tau)
}

/// Full Morgan-Scott vertex data: outer triangle `A, B, C` and inner
/// triangle `a, b, c` with `a` across from `A` (connectors run `a–B`, `a–C`
/// and so on; `A–a`, `B–b`, `C–c` are the diagnostic diagonals).
#[derive(Debug, Clone)]
pub struct MorganScott {
    outer: [ProjPoint; 3],
    inner: [ProjPoint; 3],
}

impl MorganScott {
    pub fn new(outer: [ProjPoint; 3], inner: [ProjPoint; 3]) -> Result<Self> {
        if collinear(&outer[0], &outer[1], &outer[2]) {
            return Err(Error::InvalidConfig("outer triangle is degenerate".into()));
        }
        if collinear(&inner[0], &inner[1], &inner[2]) {
            return Err(Error::InvalidConfig("inner triangle is collapsed".into()));
        }
        for o in &outer {
            for i in &inner {
                if o == i {
                    return Err(Error::InvalidConfig(
                        "inner and outer vertices must be distinct".into(),
                    ));
                }
            }
        }
        Ok(Self { outer, inner })
    }

    /// The μ=1 pencil configuration: inner edge lines `u = (c,a)`,
    /// `v = (a,b)`, `w = (b,c)` (so the pencil vertices are `a`, `b`, `c`),
    /// with the two connectors at each inner vertex decomposed over the two
    /// inner edges through it.
    pub fn config(&self) -> Result<MSConfig> {
        let [big_a, big_b, big_c] = &self.outer;
        let [a, b, c] = &self.inner;
        let u = join(c, a)?;
        let v = join(a, b)?;
        let w = join(b, c)?;
        let dec = |l: &ProjLine, l1: &ProjLine, l2: &ProjLine| -> Result<(Rational, Rational)> {
            let d = decompose(&l.dual(), &l1.dual(), &l2.dual())?;
            Ok((d.alpha().clone(), d.beta().clone()))
        };
        // connectors at a (= u∩v): a–B and a–C; at b (= v∩w): b–C, b–A;
        // at c (= w∩u): c–A, c–B
        let pencils = [
            vec![dec(&join(a, big_b)?, &u, &v)?, dec(&join(a, big_c)?, &u, &v)?],
            vec![dec(&join(b, big_c)?, &v, &w)?, dec(&join(b, big_a)?, &v, &w)?],
            vec![dec(&join(c, big_a)?, &w, &u)?, dec(&join(c, big_b)?, &w, &u)?],
        ];
        MSConfig::new(1, u, v, w, pencils)
    }

    /// Concurrency of the diagonals `A–a`, `B–b`, `C–c`, decided by the
    /// dual determinant.
    pub fn connectors_concurrent(&self) -> Result<bool> {
        let la = join(&self.outer[0], &self.inner[0])?;
        let lb = join(&self.outer[1], &self.inner[1])?;
        let lc = join(&self.outer[2], &self.inner[2])?;
        Ok(concurrent(&la, &lb, &lc))
    }
}

/// The geometric singularity test for μ=1 Morgan-Scott data: true iff the
/// three diagonals are concurrent.
pub fn ms_geometric_check(ms: &MorganScott) -> Result<bool> {
    ms.connectors_concurrent()
}
