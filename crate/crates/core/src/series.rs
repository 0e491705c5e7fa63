//! Truncated integer power series in one variable q.
//!
//! Used for Hilbert series of free graded-commutative algebras and for
//! coefficientwise products and exact divisions of dimension tables. All
//! coefficients are exact i64 values; the scales handled here stay far
//! below overflow.

use crate::algebra::FreeCGA;

/// Coefficients by degree, inclusive up to the truncation bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<i64>,
}

impl Series {
    pub fn one(max_degree: u32) -> Self {
        let mut coeffs = vec![0; max_degree as usize + 1];
        coeffs[0] = 1;
        Series { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Series { coeffs }
    }

    pub fn from_dims(dims: &[usize], max_degree: u32) -> Self {
        let mut coeffs = vec![0; max_degree as usize + 1];
        for (d, &v) in dims.iter().enumerate().take(coeffs.len()) {
            coeffs[d] = v as i64;
        }
        Series { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn max_degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn dims(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .map(|&c| usize::try_from(c).expect("nonnegative table"))
            .collect()
    }

    /// Hilbert series of a free graded-commutative algebra: a factor
    /// 1/(1-q^d) per even generator and (1+q^d) per odd generator.
    pub fn free_cga(algebra: &FreeCGA, max_degree: u32) -> Self {
        let mut s = Series::one(max_degree);
        for g in algebra.generators() {
            let d = g.degree as usize;
            if g.is_odd() {
                s.mul_one_plus(d);
            } else {
                s.div_one_minus(d);
            }
        }
        s
    }

    /// Hilbert series of a graded complete intersection: free series times
    /// one (1-q^d) factor per relation degree.
    pub fn complete_intersection(gen_degrees: &[u32], rel_degrees: &[u32], max_degree: u32) -> Self {
        let mut s = Series::one(max_degree);
        for &d in gen_degrees {
            s.div_one_minus(d as usize);
        }
        for &d in rel_degrees {
            s.mul_one_minus(d as usize);
        }
        s
    }

    /// Multiplies by (1+q^d) in place.
    pub fn mul_one_plus(&mut self, d: usize) {
        if d == 0 {
            panic!("degree must be positive");
        }
        for i in (d..self.coeffs.len()).rev() {
            self.coeffs[i] += self.coeffs[i - d];
        }
    }

    /// Multiplies by (1-q^d) in place.
    pub fn mul_one_minus(&mut self, d: usize) {
        for i in (d..self.coeffs.len()).rev() {
            self.coeffs[i] -= self.coeffs[i - d];
        }
    }

    /// Multiplies by 1/(1-q^d) in place.
    pub fn div_one_minus(&mut self, d: usize) {
        if d == 0 {
            panic!("degree must be positive");
        }
        for i in d..self.coeffs.len() {
            self.coeffs[i] += self.coeffs[i - d];
        }
    }

    /// Divides by (1+q^d): the unique series quotient on truncations.
    pub fn div_one_plus(&self, d: usize) -> Series {
        let mut out = self.coeffs.clone();
        for i in d..out.len() {
            out[i] -= out[i - d];
        }
        Series { coeffs: out }
    }

    /// Coefficientwise-truncated product.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![0i64; n];
        for i in 0..n {
            for j in 0..(n - i) {
                if self.coeffs[i] != 0 && other.coeffs[j] != 0 {
                    out[i + j] += self.coeffs[i] * other.coeffs[j];
                }
            }
        }
        Series { coeffs: out }
    }
}
