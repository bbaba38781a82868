//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A value is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` of Q(ζ_N), i.e.
//! reduced modulo the N-th cyclotomic polynomial Φ_N. Because Φ_N is the minimal
//! polynomial of ζ_N this basis is a Q-basis, so the coefficient vector is unique
//! and equality of values is equality of vectors. Values of different orders are
//! compared and combined after lifting both into Q(ζ_lcm).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Precomputed data for one field Q(ζ_N).
#[derive(Debug)]
struct Field {
    order: u64,
    degree: usize,
    /// `powers[k]` is ζ^k reduced to the power basis, for `0 <= k < N`.
    powers: Vec<Vec<BigInt>>,
}

fn field(order: u64) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&order) {
        return Arc::clone(f);
    }
    let built = Arc::new(Field::build(order));
    cache.lock().unwrap().entry(order).or_insert(built).clone()
}

impl Field {
    fn build(order: u64) -> Field {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by ζ and reduce with the monic relation ζ^d = -Σ φ_i ζ^i
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi[i];
                }
            }
        }
        Field {
            order,
            degree,
            powers,
        }
    }
}

/// Integer coefficients of Φ_N, lowest degree first.
pub fn cyclotomic_polynomial(order: u64) -> Vec<BigInt> {
    assert!(order > 0);
    // x^N - 1
    let mut num = vec![BigInt::zero(); order as usize + 1];
    num[0] = -BigInt::one();
    num[order as usize] = BigInt::one();
    for d in 1..order {
        if order.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// An exact element of Q(ζ_N).
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    fn from_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), field(order).degree);
        CyclotomicNumber { order, coeffs }
    }

    fn from_power_coeffs(f: &Field, unreduced: &[BigRational]) -> Self {
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in unreduced.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < f.degree {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&f.powers[k % f.order as usize]) {
                    if !p.is_zero() {
                        *o += c * BigRational::from_integer(p.clone());
                    }
                }
            }
        }
        CyclotomicNumber::from_coeffs(f.order, out)
    }

    pub fn zero(order: u64) -> Self {
        let f = field(order.max(1));
        CyclotomicNumber::from_coeffs(f.order, vec![BigRational::zero(); f.degree])
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, q: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    /// ζ_N^k.
    pub fn root_of_unity(order: u64, k: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let f = field(order);
        let k = k.rem_euclid(order as i64) as usize;
        let coeffs = f.powers[k]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Ok(CyclotomicNumber::from_coeffs(order, coeffs))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients in the power basis of Q(ζ_N); unique for a fixed order.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express the value in Q(ζ_L); `L` must be a multiple of the current order.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift Q(zeta_{}) into Q(zeta_{})",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let f = field(target);
        let step = (target / self.order) as usize;
        let mut unreduced = vec![BigRational::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            unreduced[i * step] = c.clone();
        }
        Self::from_power_coeffs(&f, &unreduced)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = a.order.lcm(&b.order);
        (a.lift(l), b.lift(l))
    }

    /// The Galois automorphism ζ ↦ ζ^k, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let f = field(self.order);
        let n = self.order as i64;
        debug_assert!(n == 1 || k.rem_euclid(n).gcd(&n) == 1);
        let mut unreduced = vec![BigRational::zero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = (i as i64 * k).rem_euclid(n) as usize;
            unreduced[idx] += c;
        }
        Self::from_power_coeffs(&f, &unreduced)
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        let n = self.order;
        let mut acc = CyclotomicNumber::one(n);
        for k in 1..n.max(2) {
            if k.gcd(&n) == 1 {
                acc = &acc * &self.galois(k as i64);
            }
        }
        acc.to_rational()
            .expect("norm of a cyclotomic number is rational")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.order));
        }
        let n = self.order;
        // a^{-1} = (product of the other conjugates) / N(a)
        let mut others = CyclotomicNumber::one(n);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k as i64);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let (a, b) = Self::common(self, rhs);
        Ok(&a * &b.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber::from_coeffs(self.order, self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CyclotomicNumber::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image under the embedding ζ_N ↦ exp(2πi/N).
    pub fn embed(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order != rhs.order {
            let (a, b) = CyclotomicNumber::common(self, rhs);
            return &a + &b;
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicNumber::from_coeffs(self.order, coeffs)
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order != rhs.order {
            let (a, b) = CyclotomicNumber::common(self, rhs);
            return &a * &b;
        }
        let f = field(self.order);
        let d = f.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber::from_power_coeffs(&f, &prod)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber::from_coeffs(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_negative() {
                format!("({c})")
            } else {
                c.to_string()
            };
            terms.push(match k {
                0 => coeff,
                1 => format!("{coeff}*z{}", self.order),
                _ => format!("{coeff}*z{}^{k}", self.order),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}


#[cfg(test)]
mod properties {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    const ORDERS: [u64; 8] = [1, 3, 4, 5, 8, 10, 12, 20];

    fn element(order: u64) -> impl Strategy<Value = CyclotomicNumber> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..6).prop_map(move |terms| {
            terms.into_iter().enumerate().fold(
                CyclotomicNumber::zero(order),
                |acc, (k, (num, den))| {
                    let q = BigRational::new(BigInt::from(num), BigInt::from(den));
                    let z = CyclotomicNumber::root_of_unity(order, k as i64).unwrap();
                    acc + z.scale(&q)
                },
            )
        })
    }

    fn pair() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber)> {
        prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (element(n), element(n)))
    }

    proptest! {
        #[test]
        fn addition_cancels((a, b) in pair()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn division_undoes_multiplication((a, b) in pair()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        }

        #[test]
        fn embedding_is_a_ring_homomorphism((a, b) in pair()) {
            let close = |x: num_complex::Complex64, y: num_complex::Complex64| (x - y).norm() < 1e-9;
            prop_assert!(close((&a + &b).embed(), a.embed() + b.embed()));
            prop_assert!(close((&a * &b).embed(), a.embed() * b.embed()));
        }

        #[test]
        fn norm_form_is_non_negative((a, _) in pair()) {
            let n = (&a * &a.conj()).embed();
            prop_assert!(n.re > -1e-12 && n.im.abs() < 1e-9);
            // over Q the field norm is the element itself; from N = 3 on the field is CM
            if a.order() > 2 {
                prop_assert!(!a.norm().is_negative());
            }
            prop_assert_eq!(a.norm().is_zero(), a.is_zero());
        }

        #[test]
        fn roots_of_unity_have_the_expected_order(n in 1u64..=30, k in -40i64..=40) {
            let z = CyclotomicNumber::root_of_unity(n, k).unwrap();
            let expected = n / n.gcd(&(k.rem_euclid(n as i64) as u64));
            let one = CyclotomicNumber::one(n);
            let order = (1..=n).find(|&m| z.pow(m) == one).unwrap();
            prop_assert_eq!(order, expected);
        }

    }
}
