//! Exact integer and rational matrices: fraction-free (Bareiss) determinants and
//! rational inverses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn identity_rat(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn to_rat(m: &IntMatrix) -> RatMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect()
        })
        .collect()
}

pub fn mul_rat(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mul_int(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec_int(a: &IntMatrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

/// Determinant by Bareiss fraction-free elimination. Every intermediate value is
/// an integer (a minor of the input), so the result is exact.
pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rational inverse by Gauss-Jordan elimination; `None` for a singular matrix.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity_rat(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Leading principal minors, each computed exactly.
pub fn leading_minors(m: &IntMatrix) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: IntMatrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            bareiss_determinant(&sub)
        })
        .collect()
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn is_positive(q: &BigRational) -> bool {
    q.is_positive()
}
