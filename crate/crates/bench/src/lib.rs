//! Shared fixtures for the kernel benchmarks.

use hexagram_core::gen;
use hexagram_core::{HomCurve, MSConfig, NinePointConfig, RatMatrix, Rational, TriFrame};

pub fn random_matrix(seed: u64, rows: usize, cols: usize) -> RatMatrix {
    let mut r = gen::rng(seed);
    let data: Vec<Rational> = (0..rows * cols)
        .map(|_| gen::small_rational(&mut r, 99, 7))
        .collect();
    RatMatrix::new(rows, cols, data)
}

pub fn curve_frame(seed: u64, degree: usize) -> (HomCurve, TriFrame) {
    let mut r = gen::rng(seed);
    gen::curve_frame_instance(&mut r, degree)
}

pub fn nine_points(seed: u64) -> NinePointConfig {
    let mut r = gen::rng(seed);
    gen::nine_point_config(&mut r, true)
}

pub fn spline_config(seed: u64, mu: usize) -> MSConfig {
    let mut r = gen::rng(seed);
    gen::ms_config(&mut r, mu, true)
}
