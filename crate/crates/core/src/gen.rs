//! Seeded random configuration generators for property batches.
//!
//! All generators draw from a caller-supplied ChaCha RNG so that every
//! batch is reproducible from its seed. Rejection loops retry until the
//! drawn configuration satisfies the contract of the consuming operation
//! (distinct points, no vertex hits, no collinear triples, and so on).

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curves::{conic_through_six, HomCurve};
use crate::pascal::{HexConfig, NinePointConfig};
use crate::projective::{ProjLine, ProjPoint, TriFrame};
use crate::rational::{rat, Rational};
use crate::spline::{MSConfig, MorganScott};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational with numerator in `[-bound, bound]` and denominator in
/// `[1, den_bound]`.
pub fn small_rational(rng: &mut ChaCha8Rng, bound: i64, den_bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=den_bound);
    Rational::new(n.into(), d.into())
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng, bound: i64, den_bound: i64) -> Rational {
    loop {
        let r = small_rational(rng, bound, den_bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> ProjPoint {
    loop {
        let coords = [
            rat(rng.gen_range(-bound..=bound)),
            rat(rng.gen_range(-bound..=bound)),
            rat(rng.gen_range(-bound..=bound)),
        ];
        if let Ok(p) = ProjPoint::new(coords) {
            return p;
        }
    }
}

pub fn random_line(rng: &mut ChaCha8Rng, bound: i64) -> ProjLine {
    loop {
        let coeffs = [
            rat(rng.gen_range(-bound..=bound)),
            rat(rng.gen_range(-bound..=bound)),
            rat(rng.gen_range(-bound..=bound)),
        ];
        if let Ok(l) = ProjLine::new(coeffs) {
            return l;
        }
    }
}

pub fn random_frame(rng: &mut ChaCha8Rng) -> TriFrame {
    loop {
        let a = random_line(rng, 6);
        let b = random_line(rng, 6);
        let c = random_line(rng, 6);
        if let Ok(f) = TriFrame::new(a, b, c) {
            return f;
        }
    }
}

pub fn random_curve(rng: &mut ChaCha8Rng, degree: usize) -> HomCurve {
    loop {
        let coeffs: Vec<Rational> = (0..crate::curves::coefficient_count(degree))
            .map(|_| rat(rng.gen_range(-9..=9)))
            .collect();
        if let Ok(c) = HomCurve::new(degree, coeffs) {
            return c;
        }
    }
}

/// A random curve/frame pair valid for the characteristic number: no frame
/// vertex on the curve and no frame line a component of it.
pub fn curve_frame_instance(rng: &mut ChaCha8Rng, degree: usize) -> (HomCurve, TriFrame) {
    loop {
        let curve = random_curve(rng, degree);
        let frame = random_frame(rng);
        if curve.evaluate(frame.u()).is_zero()
            || curve.evaluate(frame.v()).is_zero()
            || curve.evaluate(frame.w()).is_zero()
        {
            continue;
        }
        if curve.contains_line(frame.a())
            || curve.contains_line(frame.b())
            || curve.contains_line(frame.c())
        {
            continue;
        }
        return (curve, frame);
    }
}

/// `k` distinct rational points on a random irreducible conic: distinct
/// parameters through the rational parametrization `(s², st, t²)` of
/// `xz = y²`, pushed through a random invertible projective transform.
pub fn points_on_conic(rng: &mut ChaCha8Rng, k: usize) -> Vec<ProjPoint> {
    let m = random_invertible(rng);
    let mut params: Vec<Rational> = Vec::new();
    while params.len() < k {
        let t = small_rational(rng, 12, 4);
        if !params.contains(&t) {
            params.push(t);
        }
    }
    params
        .into_iter()
        .map(|t| {
            // (1, t, t^2) on xz = y^2, then transformed
            let base = [Rational::one(), t.clone(), &t * &t];
            let coords = [
                &m[0][0] * &base[0] + &m[0][1] * &base[1] + &m[0][2] * &base[2],
                &m[1][0] * &base[0] + &m[1][1] * &base[1] + &m[1][2] * &base[2],
                &m[2][0] * &base[0] + &m[2][1] * &base[1] + &m[2][2] * &base[2],
            ];
            ProjPoint::new(coords).expect("invertible image of a point").canonical()
        })
        .collect()
}

fn random_invertible(rng: &mut ChaCha8Rng) -> [[Rational; 3]; 3] {
    loop {
        let m: [[Rational; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| rat(rng.gen_range(-5..=5)))
        });
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        if !det.is_zero() {
            return m;
        }
    }
}

/// A hexagon inscribed in a random conic whose Pascal mapping is
/// well-defined.
pub fn conic_hexagon(rng: &mut ChaCha8Rng) -> HexConfig {
    loop {
        let pts = points_on_conic(rng, 6);
        let arr: [ProjPoint; 6] = pts.try_into().expect("six points");
        if let Ok(hex) = HexConfig::new(arr) {
            if hex.pascal_mapping().is_ok() {
                return hex;
            }
        }
    }
}

/// A hexagon in general position that does not lie on any conic.
pub fn generic_hexagon(rng: &mut ChaCha8Rng) -> HexConfig {
    loop {
        let pts: [ProjPoint; 6] = std::array::from_fn(|_| random_point(rng, 10));
        if conic_through_six(&pts) {
            continue;
        }
        if let Ok(hex) = HexConfig::new(pts) {
            if hex.pascal_mapping().is_ok() {
                return hex;
            }
        }
    }
}

/// A point of `join(u, v)` built from an explicit coefficient pair.
pub fn pencil_point(u: &ProjPoint, v: &ProjPoint, alpha: &Rational, beta: &Rational) -> ProjPoint {
    let uc = u.coords();
    let vc = v.coords();
    ProjPoint::new([
        alpha * &uc[0] + beta * &vc[0],
        alpha * &uc[1] + beta * &vc[1],
        alpha * &uc[2] + beta * &vc[2],
    ])
    .expect("pencil point")
}

/// `n` points per frame line with prescribed or random ratio product.
/// When `product_target` is given, the last point's ratio is solved so the
/// product of all `3n` ratios equals it exactly.
pub fn frame_points(
    rng: &mut ChaCha8Rng,
    frame: &TriFrame,
    n: usize,
    product_target: Option<Rational>,
) -> [Vec<ProjPoint>; 3] {
    let bases = [
        (frame.u(), frame.v()),
        (frame.v(), frame.w()),
        (frame.w(), frame.u()),
    ];
    'outer: loop {
        let mut ratios: Vec<Rational> = (0..3 * n - 1)
            .map(|_| nonzero_rational(rng, 8, 4))
            .collect();
        match &product_target {
            Some(t) => {
                let partial: Rational = ratios.iter().product();
                ratios.push(t / partial);
            }
            None => ratios.push(nonzero_rational(rng, 8, 4)),
        }
        // distinct ratios per line so the points are distinct
        for line in 0..3 {
            let slice = &ratios[line * n..(line + 1) * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    if slice[i] == slice[j] {
                        continue 'outer;
                    }
                }
            }
        }
        let groups: [Vec<ProjPoint>; 3] = std::array::from_fn(|line| {
            let (p1, p2) = bases[line];
            ratios[line * n..(line + 1) * n]
                .iter()
                .map(|r| pencil_point(p1, p2, &Rational::one(), r))
                .collect()
        });
        // the hexagon from the first two per line must avoid collinear triples
        let six = [
            groups[0][0].clone(),
            groups[0][1].clone(),
            groups[1][0].clone(),
            groups[1][1].clone(),
            groups[2][0].clone(),
            groups[2][1].clone(),
        ];
        let mut ok = true;
        'coll: for i in 0..6 {
            for j in (i + 1)..6 {
                for k in (j + 1)..6 {
                    if crate::projective::collinear(&six[i], &six[j], &six[k]) {
                        ok = false;
                        break 'coll;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        return groups;
    }
}

/// A nine-point frame configuration. With `on_cubic` the ratio product is
/// forced to -1 (so a cubic besides the line triple passes through the
/// points); otherwise the product is anything but -1.
pub fn nine_point_config(rng: &mut ChaCha8Rng, on_cubic: bool) -> NinePointConfig {
    loop {
        let frame = random_frame(rng);
        let target = on_cubic.then(|| -Rational::one());
        let groups = frame_points(rng, &frame, 3, target);
        if !on_cubic {
            // reject the measure-zero case where the product lands on -1
            let prod: Rational = {
                let mut p = Rational::one();
                let bases = [
                    (frame.u(), frame.v()),
                    (frame.v(), frame.w()),
                    (frame.w(), frame.u()),
                ];
                let mut ok = true;
                for (g, (b1, b2)) in groups.iter().zip(bases) {
                    for pt in g {
                        match crate::projective::decompose(pt, b1, b2)
                            .ok()
                            .and_then(|d| d.ratio())
                        {
                            Some(r) if !r.is_zero() => p *= r,
                            _ => ok = false,
                        }
                    }
                }
                if !ok {
                    continue;
                }
                p
            };
            if prod == -Rational::one() {
                continue;
            }
        }
        let [ga, gb, gc] = groups;
        if let Ok(cfg) = NinePointConfig::new(
            frame,
            [ga[0].clone(), ga[1].clone(), ga[2].clone()],
            [gb[0].clone(), gb[1].clone(), gb[2].clone()],
            [gc[0].clone(), gc[1].clone(), gc[2].clone()],
        ) {
            return cfg;
        }
    }
}

/// A random Morgan-Scott-type pencil configuration; `singular` solves the
/// last coefficient pair so the `a/b` ratio product is `(-1)^{μ+1}`.
pub fn ms_config(rng: &mut ChaCha8Rng, mu: usize, singular: bool) -> MSConfig {
    loop {
        let u = random_line(rng, 5);
        let v = random_line(rng, 5);
        let w = random_line(rng, 5);
        let count = 3 * (mu + 1);
        let mut pairs: Vec<(Rational, Rational)> = (0..count - 1)
            .map(|_| (Rational::one(), nonzero_rational(rng, 9, 3)))
            .collect();
        if singular {
            // product of a/b must be (-1)^(mu+1): solve the last b
            let mut partial = Rational::one();
            for (a, b) in &pairs {
                partial *= a / b;
            }
            let target = if (mu + 1) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            let last_ab = &target / partial; // a/b of the last edge
            pairs.push((last_ab, Rational::one()));
        } else {
            pairs.push((Rational::one(), nonzero_rational(rng, 9, 3)));
        }
        let pencils: [Vec<(Rational, Rational)>; 3] = [
            pairs[0..mu + 1].to_vec(),
            pairs[mu + 1..2 * (mu + 1)].to_vec(),
            pairs[2 * (mu + 1)..].to_vec(),
        ];
        let Ok(cfg) = MSConfig::new(mu, u, v, w, pencils) else {
            continue;
        };
        if !singular {
            // keep the non-singular side clean of accidental criterion hits
            match crate::spline::product_criterion(&cfg) {
                Ok(false) => {}
                _ => continue,
            }
        }
        return cfg;
    }
}

/// Morgan-Scott vertex data; `concurrent` uses a homothety of the outer
/// triangle (all three diagonals pass through the center), otherwise the
/// inner vertices are perturbed until the diagonals are in general position.
pub fn morgan_scott(rng: &mut ChaCha8Rng, concurrent: bool) -> MorganScott {
    loop {
        let outer: [ProjPoint; 3] = std::array::from_fn(|_| {
            let x = small_rational(rng, 8, 2);
            let y = small_rational(rng, 8, 2);
            ProjPoint::new([x, y, Rational::one()]).unwrap()
        });
        let inner: [ProjPoint; 3] = if concurrent {
            let cx = small_rational(rng, 4, 3);
            let cy = small_rational(rng, 4, 3);
            let lambda = nonzero_rational(rng, 3, 4);
            if lambda.is_one() {
                continue;
            }
            std::array::from_fn(|i| {
                let (px, py) = outer[i].affine().unwrap();
                ProjPoint::new([
                    &cx + &lambda * (&px - &cx),
                    &cy + &lambda * (&py - &cy),
                    Rational::one(),
                ])
                .unwrap()
            })
        } else {
            std::array::from_fn(|_| {
                let x = small_rational(rng, 8, 3);
                let y = small_rational(rng, 8, 3);
                ProjPoint::new([x, y, Rational::one()]).unwrap()
            })
        };
        let Ok(ms) = MorganScott::new(outer, inner) else {
            continue;
        };
        let Ok(is_concurrent) = ms.connectors_concurrent() else {
            continue;
        };
        if is_concurrent != concurrent {
            continue;
        }
        if ms.config().is_err() {
            continue;
        }
        return ms;
    }
}
