//! Exact dense linear algebra over the rationals.
//!
//! Rank, nullspace and determinant are computed by fraction-free
//! (Bareiss-style) elimination on the integer matrix obtained by clearing
//! each row's denominators. Pivots are the first nonzero entry in column
//! order — exact arithmetic needs no magnitude pivoting — so every output is
//! deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{canonical_coprime, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

struct Echelon {
    /// Integer echelon rows (pivot rows keep their eliminated tails).
    mat: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    row_swaps: usize,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows*cols");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut s = Rational::zero();
                for c in 0..self.cols {
                    s += self.at(r, c) * &v[c];
                }
                s
            })
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.echelon().pivot_cols.len()
    }

    /// Basis of the right nullspace, one vector per free column in ascending
    /// column order. Each vector is rescaled to coprime integers with its
    /// first nonzero entry positive and satisfies `M·x = 0` exactly.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let rank = ech.pivot_cols.len();
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for r in (0..rank).rev() {
                let pc = ech.pivot_cols[r];
                let mut s = Rational::zero();
                for j in pc + 1..self.cols {
                    if !x[j].is_zero() && !ech.mat[r][j].is_zero() {
                        s += Rational::from_integer(ech.mat[r][j].clone()) * &x[j];
                    }
                }
                x[pc] = -s / Rational::from_integer(ech.mat[r][pc].clone());
            }
            basis.push(canonical_coprime(&x));
        }
        basis
    }

    /// Determinant of a square matrix; zero exactly when the rank is
    /// deficient.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let (int_rows, scales) = self.integer_rows();
        let ech = echelon_of(int_rows, self.cols);
        if ech.pivot_cols.len() < n {
            return Rational::zero();
        }
        // Bareiss keeps the running principal minor in the last pivot.
        let mut det_int = ech.mat[n - 1][ech.pivot_cols[n - 1]].clone();
        if ech.row_swaps % 2 == 1 {
            det_int = -det_int;
        }
        let mut scale = BigInt::one();
        for s in scales {
            scale *= s;
        }
        Rational::new(det_int, scale)
    }

    /// Clears denominators row by row; returns the integer matrix and the
    /// factor each row was multiplied by.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut den = BigInt::one();
            for c in 0..self.cols {
                den = den.lcm(self.at(r, c).denom());
            }
            let row = (0..self.cols)
                .map(|c| {
                    let v = self.at(r, c);
                    v.numer() * (&den / v.denom())
                })
                .collect();
            out.push(row);
            scales.push(den);
        }
        (out, scales)
    }

    fn echelon(&self) -> Echelon {
        let (int_rows, _) = self.integer_rows();
        echelon_of(int_rows, self.cols)
    }
}

/// Fraction-free forward elimination. After step k every updated entry is a
/// (k+1)-minor of the input divided by the previous pivot, so the divisions
/// below are exact.
fn echelon_of(mut mat: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let rows = mat.len();
    let mut pivot_cols = Vec::new();
    let mut row_swaps = 0usize;
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        if found != pr {
            mat.swap(found, pr);
            row_swaps += 1;
        }
        for i in pr + 1..rows {
            for j in col + 1..cols {
                let num = &mat[pr][col] * &mat[i][j] - &mat[i][col] * &mat[pr][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free division must be exact");
                mat[i][j] = q;
            }
            mat[i][col] = BigInt::zero();
        }
        prev = mat[pr][col].clone();
        pivot_cols.push(col);
        pr += 1;
    }
    Echelon {
        mat,
        pivot_cols,
        row_swaps,
    }
}
