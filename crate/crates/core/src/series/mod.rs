//! Truncated Laurent series in `q` over Q(ζ₈).
//!
//! A [`LaurentSeries`] stores the coefficients of `q^e` for every exponent in
//! its validity window `[min_exp, trunc)`. Coefficients below `min_exp` are
//! known to be zero; nothing is known at or beyond `trunc`. Every operation
//! propagates the window pessimistically, so a result never claims an exponent
//! it could not compute exactly.

mod kernel;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::CycRat;

pub(crate) use kernel::Multiplier;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    trunc: i64,
    coeffs: Vec<CycRat>,
}

/// A coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub exp: i64,
    pub lhs: CycRat,
    pub rhs: CycRat,
}

/// Outcome of comparing two series over an explicit window `[lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub window: (i64, i64),
    pub first_discrepancy: Option<Discrepancy>,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.first_discrepancy.is_none()
    }

    pub fn window_len(&self) -> i64 {
        (self.window.1 - self.window.0).max(0)
    }
}

impl LaurentSeries {
    /// Builds a series from its coefficient block starting at `min_exp`; the
    /// window ends right after the last supplied coefficient.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<CycRat>) -> Self {
        let trunc = min_exp + coeffs.len() as i64;
        LaurentSeries {
            min_exp,
            trunc,
            coeffs,
        }
    }

    /// The zero series known on `[min_exp, trunc)`.
    pub fn zero_window(min_exp: i64, trunc: i64) -> Self {
        let trunc = trunc.max(min_exp);
        LaurentSeries {
            min_exp,
            trunc,
            coeffs: vec![CycRat::zero(); (trunc - min_exp) as usize],
        }
    }

    pub fn zero(trunc: i64) -> Self {
        Self::zero_window(0.min(trunc), trunc)
    }

    pub fn one(trunc: i64) -> Self {
        Self::constant(CycRat::one(), trunc)
    }

    pub fn constant(c: CycRat, trunc: i64) -> Self {
        Self::monomial(c, 0, trunc)
    }

    /// `c·q^e`, exact below `trunc`.
    pub fn monomial(c: CycRat, e: i64, trunc: i64) -> Self {
        let mut s = Self::zero_window(e.min(trunc), trunc);
        if e < trunc {
            s.coeffs[0] = c;
        }
        s
    }

    /// An exact polynomial (or Laurent polynomial), cut at `trunc`.
    pub fn polynomial<I>(terms: I, trunc: i64) -> Self
    where
        I: IntoIterator<Item = (i64, CycRat)>,
    {
        let terms: Vec<(i64, CycRat)> = terms.into_iter().collect();
        let lo = terms
            .iter()
            .map(|t| t.0)
            .min()
            .unwrap_or(0)
            .min(0)
            .min(trunc);
        let mut s = Self::zero_window(lo, trunc);
        for (e, c) in terms {
            if e < trunc {
                let i = (e - lo) as usize;
                s.coeffs[i] += &c;
            }
        }
        s
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn window(&self) -> (i64, i64) {
        (self.min_exp, self.trunc)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[CycRat] {
        &self.coeffs
    }

    /// Exact coefficient of `q^n`; exponents below the window are zero.
    pub fn coeff(&self, n: i64) -> Result<CycRat> {
        if n >= self.trunc {
            return Err(Error::OutOfWindow {
                exp: n,
                lo: self.min_exp,
                hi: self.trunc,
            });
        }
        Ok(self.get(n).cloned().unwrap_or_default())
    }

    /// Guarded accessor: `None` below `min_exp` (known zero). Reading at or
    /// beyond the truncation order is a logic error.
    #[inline]
    fn get(&self, n: i64) -> Option<&CycRat> {
        debug_assert!(
            n < self.trunc,
            "read q^{n} beyond truncation {}",
            self.trunc
        );
        if n < self.min_exp {
            None
        } else {
            self.coeffs.get((n - self.min_exp) as usize)
        }
    }

    /// Iterates `(exponent, coefficient)` over the window, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycRat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Exponent of the lowest nonzero known coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_exp + i as i64)
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycRat::is_zero)
    }

    /// Drops leading zero coefficients so that `min_exp` is the valuation
    /// (a zero series keeps its window start).
    pub fn trim(mut self) -> Self {
        if let Some(v) = self.valuation() {
            let k = (v - self.min_exp) as usize;
            self.coeffs.drain(..k);
            self.min_exp = v;
        }
        self
    }

    /// Lowers the truncation order to `min(trunc, t)`.
    pub fn truncate(mut self, t: i64) -> Self {
        if t < self.trunc {
            let t = t.max(self.min_exp);
            self.coeffs.truncate((t - self.min_exp) as usize);
            self.trunc = t;
        }
        self
    }

    /// Extends the known-zero region down to `lo` (no effect if already lower).
    pub fn with_min_exp(mut self, lo: i64) -> Self {
        if lo < self.min_exp {
            let pad = (self.min_exp - lo) as usize;
            let mut v = vec![CycRat::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.min_exp = lo;
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.trunc.min(other.trunc);
        let mut out = Self::zero_window(lo, hi);
        let lo = out.min_exp;
        for (e, c) in self.terms() {
            if e >= out.trunc {
                break;
            }
            out.coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            if e >= out.trunc {
                break;
            }
            let slot = &mut out.coeffs[(e - lo) as usize];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let min_exp = self.min_exp + other.min_exp;
        let trunc = (self.trunc + other.min_exp).min(other.trunc + self.min_exp);
        let len = (trunc - min_exp).max(0) as usize;
        let coeffs = if len == 0 {
            Vec::new()
        } else {
            kernel::mul_blocks(&self.coeffs, &other.coeffs, len)
        };
        LaurentSeries {
            min_exp,
            trunc: min_exp + len as i64,
            coeffs,
        }
    }

    /// Multiplicative inverse. If `f = q^v·u` with `u(0) ≠ 0`, the result is
    /// `q^{-v}·u^{-1}`, valid on `[-v, trunc - 2v)`.
    pub fn invert(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::ZeroLeadingTerm)?;
        let start = (v - self.min_exp) as usize;
        let lead = self.coeffs[start].clone();
        let lead_inv = lead.inv().ok_or(Error::ZeroLeadingTerm)?;
        let monic: Vec<CycRat> = if lead.is_one() {
            self.coeffs[start..].to_vec()
        } else {
            let m = Multiplier::new(&lead_inv);
            self.coeffs[start..].iter().map(|c| m.apply(c)).collect()
        };
        let mut inv = kernel::invert_monic(&monic);
        if !lead_inv.is_one() {
            let m = Multiplier::new(&lead_inv);
            for c in inv.iter_mut() {
                *c = m.apply(c);
            }
        }
        Ok(LaurentSeries::from_coeffs(-v, inv))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        let m = Multiplier::new(c);
        LaurentSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|x| m.apply(x)).collect(),
        }
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        LaurentSeries {
            min_exp: self.min_exp + d,
            trunc: self.trunc + d,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn into_shifted(mut self, d: i64) -> Self {
        self.min_exp += d;
        self.trunc += d;
        self
    }

    /// `f(q) ↦ f(q^k)` for `k ≥ 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1, got {k}");
        if k == 1 {
            return self.clone();
        }
        let min_exp = self.min_exp * k;
        let trunc = self.trunc * k;
        let mut coeffs = vec![CycRat::zero(); (trunc - min_exp) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        LaurentSeries {
            min_exp,
            trunc,
            coeffs,
        }
    }

    /// `Σ_n a(ℓn + r) q^n`, over every `n` with `min_exp ≤ ℓn + r < trunc`.
    pub fn dissect(&self, ell: i64, r: i64) -> Self {
        assert!(ell >= 1, "dissect needs ell >= 1, got {ell}");
        let n_lo = ceil_div(self.min_exp - r, ell);
        let n_hi = ceil_div(self.trunc - r, ell).max(n_lo);
        let coeffs = (n_lo..n_hi)
            .map(|n| self.get(ell * n + r).cloned().unwrap_or_default())
            .collect();
        LaurentSeries {
            min_exp: n_lo,
            trunc: n_hi,
            coeffs,
        }
    }

    /// `f(q) ↦ f(-q)`: flips the sign of every odd-exponent coefficient.
    pub fn negate_variable(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs: self
                .terms()
                .map(|(e, c)| if e.rem_euclid(2) == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let base_valuation = self.valuation();
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result.unwrap_or_else(|| {
            // f^0 = 1, exact as far as f's own relative precision reaches.
            let rel = match base_valuation {
                Some(v) => self.trunc - v,
                None => self.trunc - self.min_exp,
            };
            Self::one(rel.max(0))
        }))
    }

    /// Multiplies by the binomial `(1 − c·q^e)` in place of a full product.
    pub fn mul_binomial(&self, c: &CycRat, e: i64) -> Self {
        if e == 0 {
            return self.scale(&(CycRat::one() - c.clone()));
        }
        if e < 0 {
            // 1 − c q^e = −c q^e (1 − c⁻¹ q^{−e})
            let ci = c.inv().expect("binomial with zero coefficient");
            return self.mul_binomial(&ci, -e).scale(&-c).into_shifted(e);
        }
        let m = Multiplier::new(c);
        let mut coeffs = self.coeffs.clone();
        let e = e as usize;
        for i in (e..coeffs.len()).rev() {
            let t = m.apply(&coeffs[i - e]);
            coeffs[i] -= &t;
        }
        LaurentSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Divides by `(1 − c·q^e)`, i.e. multiplies by its geometric expansion.
    pub fn div_binomial(&self, c: &CycRat, e: i64) -> Result<Self> {
        if e == 0 {
            let d = (CycRat::one() - c.clone())
                .inv()
                .ok_or(Error::ZeroLeadingTerm)?;
            return Ok(self.scale(&d));
        }
        if e < 0 {
            // 1/(1 − c q^e) = −c⁻¹ q^{−e} / (1 − c⁻¹ q^{−e})
            let ci = c.inv().ok_or(Error::ZeroLeadingTerm)?;
            return Ok(self.div_binomial(&ci, -e)?.scale(&-ci).into_shifted(-e));
        }
        let m = Multiplier::new(c);
        let mut coeffs = self.coeffs.clone();
        let e = e as usize;
        for i in e..coeffs.len() {
            let t = m.apply(&coeffs[i - e]);
            coeffs[i] += &t;
        }
        Ok(LaurentSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs,
        })
    }

    /// Compares `self` and `other` on `[min(min_exp), t)`. Both series must be
    /// known below `t`.
    pub fn equals_up_to(&self, other: &Self, t: i64) -> Result<Comparison> {
        for s in [self, other] {
            if t > s.trunc {
                return Err(Error::OutOfWindow {
                    exp: t - 1,
                    lo: s.min_exp,
                    hi: s.trunc,
                });
            }
        }
        let lo = self.min_exp.min(other.min_exp);
        let zero = CycRat::zero();
        let mut first = None;
        for e in lo..t {
            let a = self.get(e).unwrap_or(&zero);
            let b = other.get(e).unwrap_or(&zero);
            if a != b {
                first = Some(Discrepancy {
                    exp: e,
                    lhs: a.clone(),
                    rhs: b.clone(),
                });
                break;
            }
        }
        Ok(Comparison {
            window: (lo, t.max(lo)),
            first_discrepancy: first,
        })
    }

    /// Compares on the full intersection of the two windows.
    pub fn compare(&self, other: &Self) -> Comparison {
        let t = self.trunc.min(other.trunc);
        self.equals_up_to(other, t)
            .expect("intersection is inside both windows")
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [window {}..{})", self.min_exp, self.trunc)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc)
    }
}

impl Zero for LaurentSeries {
    fn zero() -> Self {
        LaurentSeries::from_coeffs(0, Vec::new())
    }

    fn is_zero(&self) -> bool {
        LaurentSeries::is_zero(self)
    }
}

impl std::ops::Add for LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> Self {
        LaurentSeries::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(min: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::from_coeffs(min, c.iter().map(|&x| CycRat::from_int(x)).collect())
    }

    fn geometric(t: i64) -> LaurentSeries {
        s(0, &vec![1; t as usize])
    }

    #[test]
    fn add_cancels_and_keeps_laurent_window() {
        let a = s(-1, &[1, 0, 0]);
        let b = s(-1, &[-1, 1, 0]);
        let c = a.add(&b);
        assert_eq!(c.min_exp(), -1);
        assert_eq!(c.coeff(-1).unwrap(), CycRat::zero());
        assert_eq!(c.coeff(0).unwrap(), CycRat::one());
        let d = s(0, &[1, 1]).add(&s(0, &[1, -1]));
        assert_eq!(d.coeffs(), &[CycRat::from_int(2), CycRat::zero()]);
    }

    #[test]
    fn mul_window_and_telescoping() {
        let p = (s(0, &[1, -1, 0, 0, 0, 0, 0, 0, 0, 0])).mul(&geometric(10));
        assert_eq!(p.window(), (0, 10));
        assert!(p.equals_up_to(&LaurentSeries::one(10), 10).unwrap().equal());
        let z = CycRat::zeta8();
        let a = LaurentSeries::polynomial([(0, CycRat::one()), (1, z.clone())], 10);
        let b = LaurentSeries::polynomial([(0, CycRat::one()), (1, -z)], 10);
        let c = a.mul(&b);
        assert_eq!(c.coeff(2).unwrap(), -CycRat::i());
        assert_eq!(c.coeff(1).unwrap(), CycRat::zero());
    }

    #[test]
    fn invert_examples() {
        let g = s(0, &[1, -1, 0, 0, 0, 0]).invert().unwrap();
        assert_eq!(g, geometric(6));
        let h = s(0, &[2, 0, 0]).invert().unwrap();
        assert_eq!(h.coeff(0).unwrap(), CycRat::from_frac(1, 2));
        let k = s(0, &[0, 1, -1, 0, 0]).invert().unwrap();
        assert_eq!(k.min_exp(), -1);
        assert_eq!(k.trunc(), 3);
        assert!(k.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(s(0, &[0, 0]).invert(), Err(Error::ZeroLeadingTerm));
    }

    #[test]
    fn invert_cyclotomic_leading_term() {
        let f = LaurentSeries::polynomial(
            [
                (0, CycRat::one() - CycRat::i()),
                (1, CycRat::zeta8()),
                (3, CycRat::from_frac(1, 3)),
            ],
            12,
        );
        let prod = f.mul(&f.invert().unwrap());
        assert!(prod.compare(&LaurentSeries::one(12)).equal());
    }

    #[test]
    fn scale_and_shift() {
        let f = s(0, &[1, 1]);
        let g = f.shift(5);
        assert_eq!(g.window(), (5, 7));
        assert!(f.scale(&CycRat::zero()).is_zero());
        let h = f.scale(&CycRat::zeta8());
        assert_eq!(h.coeff(1).unwrap(), CycRat::zeta8());
    }

    #[test]
    fn substitution_and_dissection() {
        let f = s(0, &[1, 1]);
        let g = f.substitute_power(3);
        assert_eq!(g.window(), (0, 6));
        assert_eq!(g.coeff(3).unwrap(), CycRat::one());
        assert_eq!(g.coeff(1).unwrap(), CycRat::zero());
        let l = s(-1, &[1, 1]).substitute_power(2);
        assert_eq!(l.window(), (-2, 2));
        assert_eq!(l.coeff(-2).unwrap(), CycRat::one());

        let d = s(0, &[1, 2, 3, 4]).dissect(2, 1);
        assert_eq!(d, s(0, &[2, 4]));
        let f = s(-3, &[5, 1, 2, 3, 4, 7, 9]);
        assert_eq!(f.dissect(1, 0), f);
    }

    #[test]
    fn dissection_round_trip_with_negative_exponents() {
        let f = s(-5, &[3, 1, -4, 1, 5, -9, 2, 6, 5, 3, 5, 8, 9]);
        for ell in [2, 3, 4, 8] {
            let mut acc = LaurentSeries::zero_window(f.min_exp(), f.trunc());
            for r in 0..ell {
                let part = f.dissect(ell, r).substitute_power(ell).shift(r);
                acc = acc.add(&part.with_min_exp(f.min_exp()));
            }
            let cmp = acc.compare(&f);
            assert!(cmp.equal(), "ell={ell}: {cmp:?}");
        }
    }

    #[test]
    fn equals_up_to_reports_first_discrepancy() {
        let a = s(
            0,
            &vec![1, 1]
                .into_iter()
                .chain(std::iter::repeat_n(0, 98))
                .collect::<Vec<_>>(),
        );
        let mut bc = vec![0; 100];
        bc[0] = 1;
        bc[1] = 1;
        bc[99] = 1;
        let b = s(0, &bc);
        assert!(a.equals_up_to(&b, 50).unwrap().equal());
        let c = a.equals_up_to(&b, 100).unwrap();
        assert_eq!(c.first_discrepancy.unwrap().exp, 99);
        assert!(a.equals_up_to(&b, 101).is_err());
        assert_eq!(geometric(10).coeff(7).unwrap(), CycRat::one());
        assert!(geometric(10).coeff(10).is_err());
    }

    #[test]
    fn binomial_helpers_match_full_products() {
        let f = s(-2, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        for (c, e) in [
            (CycRat::from_int(-1), 1),
            (CycRat::zeta8(), 3),
            (CycRat::from_frac(2, 3), 2),
            (CycRat::i(), -1),
            (CycRat::from_int(3), 0),
        ] {
            let bin = LaurentSeries::polynomial([(0, CycRat::one()), (e, -c.clone())], 40);
            let want = f.mul(&bin);
            let got = f.mul_binomial(&c, e);
            assert!(got.compare(&want).equal(), "mul c={c} e={e}");
            let want = f.mul(&bin.invert().unwrap());
            let got = f.div_binomial(&c, e).unwrap();
            assert!(got.compare(&want).equal(), "div c={c} e={e}");
            assert_eq!(got.trunc(), want.trunc());
        }
    }

    #[test]
    fn negate_variable_flips_odd_terms() {
        let f = s(-1, &[1, 1, 1, 1]);
        let g = f.negate_variable();
        assert_eq!(g, s(-1, &[-1, 1, -1, 1]));
    }

    #[test]
    fn powers() {
        let f = s(0, &[1, -1, 0, 0, 0, 0]);
        let g = f.pow(-2).unwrap();
        // 1/(1-q)^2 = Σ (n+1) q^n
        for n in 0..6 {
            assert_eq!(g.coeff(n).unwrap(), CycRat::from_int(n + 1));
        }
        assert_eq!(f.pow(0).unwrap(), LaurentSeries::one(6));
    }
}
