//! Integer convolution kernels.
//!
//! A block of Q(ζ₈) coefficients is brought over a common denominator so that
//! products and inverses run on integer vectors, one per power of ζ₈.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::num::{BigRat, CycRat};

/// `value[i] = (Σ_k comps[k][i]·ζ^k) / den`. Absent components are all zero.
pub(crate) struct Scaled {
    pub den: BigInt,
    pub comps: [Option<Vec<BigInt>>; 4],
}

pub(crate) fn to_scaled(coeffs: &[CycRat]) -> Scaled {
    let mut den = BigInt::one();
    for c in coeffs {
        for r in c.components() {
            if !r.denom().is_one() {
                den = den.lcm(r.denom());
            }
        }
    }
    let mut comps: [Option<Vec<BigInt>>; 4] = Default::default();
    for k in 0..4 {
        if coeffs.iter().all(|c| c.components()[k].is_zero()) {
            continue;
        }
        let v = coeffs
            .iter()
            .map(|c| {
                let r = &c.components()[k];
                if r.denom().is_one() {
                    r.numer() * &den
                } else {
                    r.numer() * (&den / r.denom())
                }
            })
            .collect();
        comps[k] = Some(v);
    }
    Scaled { den, comps }
}

pub(crate) fn from_scaled(
    comps: &[Option<Vec<BigInt>>; 4],
    den: &BigInt,
    len: usize,
) -> Vec<CycRat> {
    (0..len)
        .map(|i| {
            let part = |k: usize| match &comps[k] {
                Some(v) if !v[i].is_zero() => BigRat::new(v[i].clone(), den.clone()),
                _ => BigRat::zero(),
            };
            CycRat::new(part(0), part(1), part(2), part(3))
        })
        .collect()
}

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(|x| x.bits()).max().unwrap_or(0)
}

/// Truncated Cauchy product of two integer sequences, keeping `len` terms.
pub(crate) fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let len = len.min(a.len() + b.len());
    let guard = 64 - (len as u64).leading_zeros() as u64 + 1;
    if max_bits(a) + max_bits(b) + guard < 126 {
        let a: Vec<i128> = a.iter().map(|x| x.to_i128().unwrap()).collect();
        let b: Vec<i128> = b.iter().map(|x| x.to_i128().unwrap()).collect();
        let mut out = vec![0i128; len];
        for (i, &ai) in a.iter().enumerate().take(len) {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(len - i) {
                out[i + j] += ai * bj;
            }
        }
        return out.into_iter().map(BigInt::from).collect();
    }
    let mut out = vec![BigInt::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Product of two coefficient blocks of equal length `len`.
pub(crate) fn mul_blocks(a: &[CycRat], b: &[CycRat], len: usize) -> Vec<CycRat> {
    let sa = to_scaled(&a[..len]);
    let sb = to_scaled(&b[..len]);
    let mut out: [Option<Vec<BigInt>>; 4] = Default::default();
    for (i, ai) in sa.comps.iter().enumerate() {
        let Some(ai) = ai else { continue };
        for (j, bj) in sb.comps.iter().enumerate() {
            let Some(bj) = bj else { continue };
            let prod = convolve(ai, bj, len);
            let e = i + j;
            let slot = out[e % 4].get_or_insert_with(|| vec![BigInt::zero(); len]);
            if e < 4 {
                for (s, p) in slot.iter_mut().zip(prod) {
                    *s += p;
                }
            } else {
                for (s, p) in slot.iter_mut().zip(prod) {
                    *s -= p;
                }
            }
        }
    }
    let den = sa.den * sb.den;
    from_scaled(&out, &den, len)
}

type ZCyc = [BigInt; 4];

fn zcyc_mul_acc(acc: &mut ZCyc, a: &ZCyc, b: &ZCyc, scale: &BigInt) {
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let mut p = ai * bj;
            if !scale.is_one() {
                p *= scale;
            }
            let e = i + j;
            if e < 4 {
                acc[e] += p;
            } else {
                acc[e - 4] -= p;
            }
        }
    }
}

/// Inverse of a block whose first coefficient is exactly 1.
///
/// With `w_k = H_k / D`, the inverse is `G_n / D^n` where
/// `G_n = -Σ_{k=1..n} H_k · D^(k-1) · G_(n-k)`, so all work stays in Z[ζ₈].
pub(crate) fn invert_monic(w: &[CycRat]) -> Vec<CycRat> {
    let len = w.len();
    if len == 0 {
        return Vec::new();
    }
    debug_assert!(w[0].is_one());
    let s = to_scaled(w);
    let h: Vec<ZCyc> = (0..len)
        .map(|i| {
            std::array::from_fn(|k| match &s.comps[k] {
                Some(v) => v[i].clone(),
                None => BigInt::zero(),
            })
        })
        .collect();
    let d = s.den;
    let mut dpow = vec![BigInt::one()];
    for k in 1..len {
        let next = &dpow[k - 1] * &d;
        dpow.push(next);
    }
    let rational = h.iter().all(|z| z[1..].iter().all(Zero::is_zero));

    let mut g: Vec<ZCyc> = Vec::with_capacity(len);
    g.push([
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ]);
    for n in 1..len {
        let mut acc: ZCyc = Default::default();
        if rational {
            for k in 1..=n {
                if h[k][0].is_zero() || g[n - k][0].is_zero() {
                    continue;
                }
                let mut p = &h[k][0] * &g[n - k][0];
                if k > 1 {
                    p *= &dpow[k - 1];
                }
                acc[0] += p;
            }
        } else {
            for k in 1..=n {
                zcyc_mul_acc(&mut acc, &h[k], &g[n - k], &dpow[k - 1]);
            }
        }
        for x in acc.iter_mut() {
            *x = -std::mem::take(x);
        }
        g.push(acc);
    }
    g.into_iter()
        .enumerate()
        .map(|(n, z)| {
            let den = &dpow[n];
            let part = |x: &BigInt| {
                if x.is_zero() {
                    BigRat::zero()
                } else {
                    BigRat::new(x.clone(), den.clone())
                }
            };
            CycRat::new(part(&z[0]), part(&z[1]), part(&z[2]), part(&z[3]))
        })
        .collect()
}

/// Multiplier by a fixed scalar, specialised for rationals and roots of unity.
#[derive(Clone, Debug)]
pub(crate) enum Multiplier {
    Zero,
    Rational(BigRat),
    Zeta { k: i64 },
    General(CycRat),
}

impl Multiplier {
    pub fn new(c: &CycRat) -> Self {
        if c.is_zero() {
            Multiplier::Zero
        } else if let Some(k) = c.root_of_unity_index() {
            Multiplier::Zeta { k }
        } else if let Some(r) = c.as_rational() {
            Multiplier::Rational(r.clone())
        } else {
            Multiplier::General(c.clone())
        }
    }

    pub fn apply(&self, x: &CycRat) -> CycRat {
        match self {
            Multiplier::Zero => CycRat::zero(),
            Multiplier::Rational(r) => x.scale_rat(r),
            Multiplier::Zeta { k } => {
                if *k == 0 {
                    x.clone()
                } else if *k == 4 {
                    -x
                } else {
                    x.mul_zeta_pow(*k)
                }
            }
            Multiplier::General(c) => x * c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolve_fast_and_slow_agree() {
        let a: Vec<BigInt> = (0..20).map(|i| BigInt::from(i * 7 - 30)).collect();
        let b: Vec<BigInt> = (0..20).map(|i| BigInt::from(3 - i)).collect();
        let fast = convolve(&a, &b, 20);
        let big = BigInt::from(1u64) << 200;
        let a2: Vec<BigInt> = a.iter().map(|x| x * &big).collect();
        let slow = convolve(&a2, &b, 20);
        for (f, s) in fast.iter().zip(slow.iter()) {
            assert_eq!(&(f * &big), s);
        }
    }
}
