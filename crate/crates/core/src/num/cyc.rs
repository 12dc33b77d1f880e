//! Exact arithmetic in the cyclotomic field Q(ζ₈).
//!
//! An element is stored as `c0 + c1·ζ + c2·ζ² + c3·ζ³` with rational
//! components, using the relation ζ⁴ = −1. The imaginary unit is ζ².

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// An element of Q(ζ₈).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycRat {
    c: [BigRat; 4],
}

impl CycRat {
    pub fn new(c0: BigRat, c1: BigRat, c2: BigRat, c3: BigRat) -> Self {
        CycRat {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn zero() -> Self {
        CycRat::default()
    }

    pub fn one() -> Self {
        CycRat::from_rat(BigRat::one())
    }

    pub fn from_rat(r: BigRat) -> Self {
        CycRat {
            c: [r, BigRat::zero(), BigRat::zero(), BigRat::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycRat::from_rat(BigRat::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        CycRat::from_rat(BigRat::new(BigInt::from(n), BigInt::from(d)))
    }

    /// ζ₈ raised to `k` (any integer).
    pub fn zeta8_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut out = CycRat::zero();
        if k < 4 {
            out.c[k] = BigRat::one();
        } else {
            out.c[k - 4] = -BigRat::one();
        }
        out
    }

    pub fn zeta8() -> Self {
        CycRat::zeta8_pow(1)
    }

    /// The imaginary unit, ζ₈².
    pub fn i() -> Self {
        CycRat::zeta8_pow(2)
    }

    pub fn components(&self) -> &[BigRat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.is_rational()
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRat> {
        self.is_rational().then_some(&self.c[0])
    }

    /// The element as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.numer().clone())
    }

    /// Multiplication by ζ₈^k, which only permutes and negates components.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut out = CycRat::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let e = (j + k) % 8;
            if e < 4 {
                out.c[e] = cj.clone();
            } else {
                out.c[e - 4] = -cj.clone();
            }
        }
        out
    }

    /// If the element is ±ζ₈^k (a root of unity of the field), return k mod 8.
    pub fn root_of_unity_index(&self) -> Option<i64> {
        let nonzero: Vec<usize> = (0..4).filter(|&j| !self.c[j].is_zero()).collect();
        if nonzero.len() != 1 {
            return None;
        }
        let j = nonzero[0];
        let v = &self.c[j];
        if v.is_one() {
            Some(j as i64)
        } else if (-v.clone()).is_one() {
            Some(j as i64 + 4)
        } else {
            None
        }
    }

    /// The Galois automorphism ζ ↦ ζ^j for odd j.
    pub fn galois(&self, j: i64) -> Self {
        debug_assert!(j % 2 != 0);
        let mut out = CycRat::zero();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let e = (k as i64 * j).rem_euclid(8) as usize;
            if e < 4 {
                out.c[e] += ck;
            } else {
                out.c[e - 4] -= ck;
            }
        }
        out
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRat {
        let prod = self * &self.galois(3) * self.galois(5) * self.galois(7);
        debug_assert!(prod.is_rational());
        prod.c[0].clone()
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(CycRat::from_rat(r.recip()));
        }
        if let Some(k) = self.root_of_unity_index() {
            return Some(CycRat::zeta8_pow(-k));
        }
        let cofactor = self.galois(3) * self.galois(5) * self.galois(7);
        let norm = (self * &cofactor).c[0].clone();
        Some(cofactor.scale_rat(&norm.recip()))
    }

    pub fn scale_rat(&self, r: &BigRat) -> Self {
        if r.is_zero() {
            return CycRat::zero();
        }
        CycRat {
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    /// Integer power; negative exponents invert. Panics on `0^negative`.
    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero in Q(ζ₈)").pow(-e);
        }
        if let Some(k) = self.root_of_unity_index() {
            return CycRat::zeta8_pow(k * e);
        }
        let mut base = self.clone();
        let mut acc = CycRat::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Least common multiple of the component denominators.
    pub fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.c
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }
}

impl From<i64> for CycRat {
    fn from(n: i64) -> Self {
        CycRat::from_int(n)
    }
}

impl From<BigRat> for CycRat {
    fn from(r: BigRat) -> Self {
        CycRat::from_rat(r)
    }
}

impl From<BigInt> for CycRat {
    fn from(n: BigInt) -> Self {
        CycRat::from_rat(BigRat::from_integer(n))
    }
}

impl<'a> Add<&'a CycRat> for &'a CycRat {
    type Output = CycRat;
    fn add(self, rhs: &CycRat) -> CycRat {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CycRat {
    type Output = CycRat;
    fn add(mut self, rhs: CycRat) -> CycRat {
        self += &rhs;
        self
    }
}

impl AddAssign<&CycRat> for CycRat {
    fn add_assign(&mut self, rhs: &CycRat) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycRat> for CycRat {
    fn sub_assign(&mut self, rhs: &CycRat) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Sub<&'a CycRat> for &'a CycRat {
    type Output = CycRat;
    fn sub(self, rhs: &CycRat) -> CycRat {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CycRat {
    type Output = CycRat;
    fn sub(mut self, rhs: CycRat) -> CycRat {
        self -= &rhs;
        self
    }
}

impl Neg for CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        CycRat {
            c: self.c.map(|x| -x),
        }
    }
}

impl Neg for &CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        -self.clone()
    }
}

impl<'a> Mul<&'a CycRat> for &'a CycRat {
    type Output = CycRat;
    fn mul(self, rhs: &CycRat) -> CycRat {
        if let Some(r) = rhs.as_rational() {
            return self.scale_rat(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale_rat(r);
        }
        let mut out = CycRat::zero();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                let e = i + j;
                if e < 4 {
                    out.c[e] += p;
                } else {
                    out.c[e - 4] -= p;
                }
            }
        }
        out
    }
}

impl Mul for CycRat {
    type Output = CycRat;
    fn mul(self, rhs: CycRat) -> CycRat {
        &self * &rhs
    }
}

impl Mul<CycRat> for &CycRat {
    type Output = CycRat;
    fn mul(self, rhs: CycRat) -> CycRat {
        self * &rhs
    }
}

impl Mul<&CycRat> for CycRat {
    type Output = CycRat;
    fn mul(self, rhs: &CycRat) -> CycRat {
        &self * rhs
    }
}

fn fmt_rat(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `a + b*z8 + c*z8^2 + d*z8^3`, omitting zero terms. The output
/// parses back in the expression grammar.
impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let neg = ck.is_negative();
            let mag = fmt_rat(&ck.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    let z = if k == 1 {
                        "z8".to_string()
                    } else {
                        format!("z8^{k}")
                    };
                    if ck.abs().is_one() {
                        write!(f, "{z}")?;
                    } else {
                        write!(f, "{mag}*{z}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_powers() {
        let z = CycRat::zeta8();
        assert_eq!(z.pow(8), CycRat::one());
        assert_eq!(z.pow(4), CycRat::from_int(-1));
        assert_eq!(z.pow(2), CycRat::i());
        assert_eq!(&z * &z.pow(7), CycRat::one());
        assert_eq!(z.pow(-1), CycRat::zeta8_pow(7));
    }

    #[test]
    fn inverse_of_one_minus_i() {
        let a = CycRat::one() - CycRat::i();
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, CycRat::one());
        // 1/(1-i) = (1+i)/2
        assert_eq!(
            b,
            (CycRat::one() + CycRat::i()).scale_rat(&BigRat::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn norm_is_rational() {
        let a = CycRat::from_int(3) + CycRat::zeta8_pow(1)
            - CycRat::zeta8_pow(3).scale_rat(&BigRat::new(2.into(), 5.into()));
        let n = a.norm();
        assert!(!n.is_zero());
        assert_eq!(&a * &a.inv().unwrap(), CycRat::one());
    }

    #[test]
    fn galois_is_a_ring_map() {
        let a = CycRat::from_int(2) + CycRat::zeta8();
        let b = CycRat::i() - CycRat::zeta8_pow(3);
        for j in [1, 3, 5, 7] {
            assert_eq!((&a * &b).galois(j), a.galois(j) * b.galois(j));
        }
    }

    #[test]
    fn display_round_trip_shape() {
        let a = CycRat::from_frac(1, 2) - CycRat::zeta8_pow(2)
            + CycRat::zeta8_pow(3).scale_rat(&BigRat::new(3.into(), 4.into()));
        assert_eq!(a.to_string(), "1/2 - z8^2 + 3/4*z8^3");
        assert_eq!(CycRat::from_int(-1).to_string(), "-1");
        assert_eq!(CycRat::zeta8_pow(5).to_string(), "-z8");
    }
}
