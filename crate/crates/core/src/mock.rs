//! The universal mock theta function `g(x; q)`, Watson's `ω(q)`, Appell–Lerch
//! sums, and the bivariate rank / odd-rank generating functions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::CycRat;
use crate::series::LaurentSeries;
use crate::theta::{eval_eta_quotient, EtaQuotientSpec};

/// The argument `x = c·q^a` of `g(x; q^m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GArg {
    pub c: CycRat,
    pub a: i64,
    pub m: i64,
}

impl GArg {
    pub fn new(c: CycRat, a: i64, m: i64) -> Self {
        GArg { c, a, m }
    }

    /// True exactly when some denominator factor is `1 − 1·q^0`.
    pub fn is_pole(&self) -> bool {
        self.c.is_one() && self.m != 0 && self.a.rem_euclid(self.m) == 0
    }

    /// The mirror argument `q^m / x` under `g(x; q) = g(q/x; q)`.
    pub fn mirror(&self) -> GArg {
        GArg {
            c: self.c.inv().expect("g argument coefficient is nonzero"),
            a: self.m - self.a,
            m: self.m,
        }
    }

    /// Canonical representative of `{x, q^m/x}`: the one with the smaller
    /// nonnegative `a`. Evaluation never normalizes, so symmetry checks stay
    /// genuine comparisons of two different expansions.
    pub fn normalize(&self) -> GArg {
        let mirror = self.mirror();
        if mirror.a >= 0 && (self.a < 0 || mirror.a < self.a) {
            mirror
        } else {
            self.clone()
        }
    }

    fn validate(&self) -> Result<CycRat> {
        if self.m < 1 {
            return Err(Error::InvalidArgument(format!(
                "g base exponent must be >= 1, got {}",
                self.m
            )));
        }
        if self.is_pole() {
            return Err(Error::PoleAtOne);
        }
        self.c
            .inv()
            .ok_or_else(|| Error::InvalidArgument("g argument coefficient is zero".into()))
    }
}

fn pole(e: Error) -> Error {
    match e {
        Error::ZeroLeadingTerm => Error::PoleAtOne,
        other => other,
    }
}

/// `g(x; q^m) = Σ_{n≥0} q^{m·n(n+1)} / ((x; q^m)_{n+1} (q^m/x; q^m)_{n+1})`.
pub fn g_series(arg: &GArg, t: i64) -> Result<LaurentSeries> {
    let ci = arg.validate()?;
    let (c, a, m) = (&arg.c, arg.a, arg.m);
    let mut acc = LaurentSeries::zero(t);
    let mut term = LaurentSeries::one(t)
        .div_binomial(c, a)
        .and_then(|s| s.div_binomial(&ci, m - a))
        .map_err(pole)?
        .truncate(t);
    let mut n = 0i64;
    loop {
        acc = acc.add(&term);
        n += 1;
        // Every later term has valuation at least m·n(n+1).
        if m * n * (n + 1) >= t {
            break;
        }
        term = term
            .into_shifted(2 * n * m)
            .truncate(t)
            .div_binomial(c, a + n * m)
            .and_then(|s| s.div_binomial(&ci, m - a + n * m))
            .map_err(pole)?
            .truncate(t);
    }
    Ok(acc.truncate(t))
}

/// `g(x; q^m) = x^{-1}(−1 + Σ_{n≥0} q^{m n²} / ((x; q^m)_{n+1} (q^m/x; q^m)_n))`,
/// an independent expansion used as an oracle for [`g_series`].
pub fn g_series_alt(arg: &GArg, t: i64) -> Result<LaurentSeries> {
    let ci = arg.validate()?;
    let (c, a, m) = (&arg.c, arg.a, arg.m);
    // The outer x^{-1} shifts by -a, so the inner sum is needed to t + a.
    let inner_t = t + a;
    let mut acc = LaurentSeries::constant(CycRat::from_int(-1), inner_t);
    let mut term = LaurentSeries::one(inner_t)
        .div_binomial(c, a)
        .map_err(pole)?
        .truncate(inner_t);
    let mut n = 0i64;
    loop {
        acc = acc.add(&term);
        n += 1;
        if m * n * n >= inner_t {
            break;
        }
        term = term
            .into_shifted((2 * n - 1) * m)
            .truncate(inner_t)
            .div_binomial(c, a + n * m)
            .and_then(|s| s.div_binomial(&ci, n * m - a))
            .map_err(pole)?
            .truncate(inner_t);
    }
    Ok(acc.scale(&ci).into_shifted(-a).truncate(t))
}

/// `q·ω(q) = Σ_{n≥0} q^{2n(n+1)+1} / (q; q²)²_{n+1}`.
pub fn omega_series(t: i64) -> LaurentSeries {
    let one = CycRat::one();
    let mut acc = LaurentSeries::zero(t);
    let mut term = LaurentSeries::monomial(one.clone(), 1, t);
    term = term
        .div_binomial(&one, 1)
        .and_then(|s| s.div_binomial(&one, 1))
        .expect("positive exponents");
    let mut n = 0i64;
    loop {
        acc = acc.add(&term);
        n += 1;
        if 2 * n * (n + 1) + 1 >= t {
            break;
        }
        let e = 2 * n + 1;
        term = term
            .into_shifted(4 * n)
            .truncate(t)
            .div_binomial(&one, e)
            .and_then(|s| s.div_binomial(&one, e))
            .expect("positive exponents");
    }
    acc
}

/// Fine's form `q·ω(q) = Σ_{n≥0} q^{n+1} / (q; q²)_{n+1}`.
pub fn fine_sum_series(t: i64) -> LaurentSeries {
    let one = CycRat::one();
    let mut acc = LaurentSeries::zero(t);
    let mut term = LaurentSeries::monomial(one.clone(), 1, t)
        .div_binomial(&one, 1)
        .expect("positive exponent");
    let mut n = 0i64;
    loop {
        acc = acc.add(&term);
        n += 1;
        if n + 1 >= t {
            break;
        }
        term = term
            .into_shifted(1)
            .truncate(t)
            .div_binomial(&one, 2 * n + 1)
            .expect("positive exponent");
    }
    acc
}

/// `(1/J_2) Σ_{n∈Z} (−1)^n q^{3n² + b·n + c0} / (1 − ζ q^{2n+1})^p`.
///
/// For `2n + 1 < 0` each factor is rewritten as
/// `−ζ^{-1} q^{-(2n+1)} / (1 − ζ^{-1} q^{-(2n+1)})`, so every expansion uses
/// positive powers only.
pub(crate) fn appell_sum(zeta: &CycRat, b: i64, c0: i64, p: u32, t: i64) -> Result<LaurentSeries> {
    if zeta.is_zero() {
        return Err(Error::InvalidArgument(
            "Appell–Lerch root must be nonzero".into(),
        ));
    }
    let valuation = |n: i64| -> i64 {
        let base = 3 * n * n + b * n + c0;
        if 2 * n + 1 < 0 {
            base - p as i64 * (2 * n + 1)
        } else {
            base
        }
    };
    // The valuation is a convex quadratic on each tail; past its vertex it
    // only grows, so each direction stops at the first term beyond the window
    // once it has cleared `reach`.
    let reach = (b.abs() + 2 * p as i64) / 6 + 1;
    let mut acc = LaurentSeries::zero(t);
    for (start, dir) in [(0i64, 1i64), (-1, -1)] {
        let mut n = start;
        while n.abs() <= reach || valuation(n) < t {
            if valuation(n) < t {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let e = 3 * n * n + b * n + c0;
                let lift = p as i64 * (2 * n + 1).abs();
                let mut term = LaurentSeries::monomial(CycRat::from_int(sign), e, t + lift);
                for _ in 0..p {
                    term = term.div_binomial(zeta, 2 * n + 1)?;
                }
                acc = acc.add(&term.truncate(t));
            }
            n += dir;
        }
    }
    let j2_inv = eval_eta_quotient(&EtaQuotientSpec::new([(2, -1)]), t);
    let lo = acc.min_exp();
    Ok(acc
        .mul(&j2_inv.with_min_exp(0))
        .truncate(t)
        .with_min_exp(lo.min(0)))
}

/// `R₁⁰(ζ; q) = (1/J_2) Σ_n (−1)^n q^{3n²+3n+1} / (1 − ζ q^{2n+1})`.
pub fn appell_lerch_r0(zeta: &CycRat, t: i64) -> Result<LaurentSeries> {
    appell_sum(zeta, 3, 1, 1, t)
}

/// Exact joint coefficients `Σ c(m, n) z^m q^n` for `0 ≤ n < T` with
/// `|m| ≤ n`. Counts are integers, so rows hold `BigInt`s rather than field
/// elements; specialising at a root of unity gives a [`LaurentSeries`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    fn zeros(t: usize) -> Self {
        BivariateSeries {
            rows: (0..t).map(|n| vec![BigInt::zero(); 2 * n + 1]).collect(),
        }
    }

    /// Number of rows (the truncation order in `q`).
    pub fn trunc(&self) -> usize {
        self.rows.len()
    }

    /// Coefficient of `z^m q^n` (zero outside the row's support).
    pub fn get(&self, m: i64, n: usize) -> BigInt {
        let row = &self.rows[n];
        let idx = m + n as i64;
        if idx < 0 || idx as usize >= row.len() {
            BigInt::zero()
        } else {
            row[idx as usize].clone()
        }
    }

    /// Row `n` as `(m, count)` pairs for `m = -n..=n`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.rows[n]
            .iter()
            .enumerate()
            .map(move |(i, v)| (i as i64 - n as i64, v))
    }

    /// Substitutes `z = ζ` for a root of unity in Q(ζ₈).
    pub fn specialize(&self, zeta: &CycRat) -> Result<LaurentSeries> {
        let k = zeta.root_of_unity_index().ok_or_else(|| {
            Error::InvalidArgument(format!("cannot specialise at non-root-of-unity {zeta}"))
        })?;
        let coeffs = (0..self.rows.len())
            .map(|n| {
                let mut buckets = vec![BigInt::zero(); 8];
                for (m, v) in self.row(n) {
                    if !v.is_zero() {
                        buckets[(k * m).rem_euclid(8) as usize] += v;
                    }
                }
                let mut acc = CycRat::zero();
                for (r, b) in buckets.into_iter().enumerate() {
                    if !b.is_zero() {
                        acc += &(CycRat::zeta8_pow(r as i64) * CycRat::from(b));
                    }
                }
                acc
            })
            .collect();
        Ok(LaurentSeries::from_coeffs(0, coeffs))
    }

    fn add_shifted(&mut self, term: &BivariateSeries) {
        for (dst, src) in self.rows.iter_mut().zip(&term.rows) {
            for (d, s) in dst.iter_mut().zip(src) {
                if !s.is_zero() {
                    *d += s;
                }
            }
        }
    }

    /// Multiplies by `q^s`.
    fn shift_q(&self, s: usize) -> BivariateSeries {
        let t = self.rows.len();
        let mut out = BivariateSeries::zeros(t);
        for n in s..t {
            let src = &self.rows[n - s];
            let off = s; // row n has s more slots on each side than row n - s
            for (i, v) in src.iter().enumerate() {
                out.rows[n][i + off] = v.clone();
            }
        }
        out
    }

    /// Divides by `(1 − z^dz q^e)` for `e ≥ 1`, `|dz| ≤ e`, in place.
    fn div_binomial(&mut self, dz: i64, e: usize) {
        let t = self.rows.len();
        for n in e..t {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - e];
            let dst = &mut hi[0];
            // z^m in row n - e lands on z^{m+dz} in row n.
            let offset = (e as i64 + dz) as usize;
            for (i, v) in src.iter().enumerate() {
                if !v.is_zero() {
                    dst[i + offset] += v;
                }
            }
        }
    }
}

/// `R₁(z; q) = Σ_{n≥0} q^{n²} / ((zq; q)_n (z^{-1}q; q)_n)`, rows `0..T`.
pub fn rank_bivariate(t: usize) -> BivariateSeries {
    let mut acc = BivariateSeries::zeros(t);
    if t == 0 {
        return acc;
    }
    let mut term = BivariateSeries::zeros(t);
    term.rows[0][0] = BigInt::from(1);
    let mut n = 0usize;
    loop {
        acc.add_shifted(&term);
        n += 1;
        if n * n >= t {
            break;
        }
        term = term.shift_q(2 * n - 1);
        term.div_binomial(1, n);
        term.div_binomial(-1, n);
    }
    acc
}

/// `R₁⁰(z; q) = Σ_{n≥0} q^{2n(n+1)+1} / ((zq; q²)_{n+1} (z^{-1}q; q²)_{n+1})`.
pub fn odd_rank_bivariate(t: usize) -> BivariateSeries {
    let mut acc = BivariateSeries::zeros(t);
    if t <= 1 {
        return acc;
    }
    let mut term = BivariateSeries::zeros(t);
    term.rows[1][1] = BigInt::from(1);
    term.div_binomial(1, 1);
    term.div_binomial(-1, 1);
    let mut n = 0usize;
    loop {
        acc.add_shifted(&term);
        n += 1;
        if 2 * n * (n + 1) + 1 >= t {
            break;
        }
        term = term.shift_q(4 * n);
        term.div_binomial(1, 2 * n + 1);
        term.div_binomial(-1, 2 * n + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn garg(c: CycRat, a: i64, m: i64) -> GArg {
        GArg::new(c, a, m)
    }

    #[test]
    fn g_at_q_base_q2_gives_p_omega() {
        let g = g_series(&garg(CycRat::one(), 1, 2), 10).unwrap();
        let expect = [1, 2, 3, 4, 6, 8, 10, 14, 18, 22];
        for (n, &v) in expect.iter().enumerate() {
            assert_eq!(g.coeff(n as i64).unwrap(), CycRat::from_int(v), "n={n}");
        }
    }

    #[test]
    fn g_at_minus_one_constant_term() {
        let g = g_series(&garg(CycRat::from_int(-1), 0, 1), 10).unwrap();
        assert_eq!(g.coeff(0).unwrap(), CycRat::from_frac(1, 2));
    }

    #[test]
    fn g_formulas_agree() {
        for arg in [
            garg(CycRat::one(), 1, 2),
            garg(CycRat::from_int(-1), 0, 4),
            garg(CycRat::i(), 0, 8),
            garg(CycRat::zeta8(), 1, 2),
            garg(CycRat::from_int(-1), 4, 8),
            garg(CycRat::from_int(-1), 5, 2),
        ] {
            let a = g_series(&arg, 50).unwrap();
            let b = g_series_alt(&arg, 50).unwrap();
            let cmp = a.compare(&b);
            assert!(cmp.equal(), "{arg:?}: {cmp:?}");
            assert_eq!(cmp.window.1, 50);
        }
    }

    #[test]
    fn g_symmetry_and_pole() {
        let a = g_series(&garg(CycRat::one(), 1, 4), 60).unwrap();
        let b = g_series(&garg(CycRat::one(), 3, 4), 60).unwrap();
        assert!(a.compare(&b).equal());
        assert_eq!(
            g_series(&garg(CycRat::one(), 0, 3), 10),
            Err(Error::PoleAtOne)
        );
        assert_eq!(
            g_series(&garg(CycRat::one(), 6, 3), 10),
            Err(Error::PoleAtOne)
        );
        assert_eq!(
            garg(CycRat::i(), 3, 4).normalize(),
            garg(-CycRat::i(), 1, 4)
        );
    }

    #[test]
    fn omega_and_fine_agree() {
        let w = omega_series(40);
        assert_eq!(w.coeff(0).unwrap(), CycRat::zero());
        for (n, v) in [(1, 1), (2, 2), (3, 3), (4, 4)] {
            assert_eq!(w.coeff(n).unwrap(), CycRat::from_int(v));
        }
        assert!(w.compare(&fine_sum_series(40)).equal());
        let g = g_series(&garg(CycRat::one(), 1, 2), 39).unwrap().shift(1);
        assert!(w.compare(&g).equal());
    }

    #[test]
    fn appell_lerch_matches_bivariate_and_g() {
        let t = 60;
        let biv = odd_rank_bivariate(t as usize);
        for k in 0..8 {
            let z = CycRat::zeta8_pow(k);
            let r = appell_lerch_r0(&z, t).unwrap();
            assert_eq!(r.coeff(0).unwrap(), CycRat::zero());
            let s = biv.specialize(&z).unwrap();
            assert!(r.compare(&s).equal(), "k={k}");
            let g = g_series(&garg(z, 1, 2), t - 1).unwrap().shift(1);
            assert!(r.compare(&g).equal(), "k={k}");
        }
    }

    #[test]
    fn bivariate_rows() {
        let r = rank_bivariate(10);
        let total: BigInt = r.row(4).map(|(_, v)| v.clone()).sum();
        assert_eq!(total, BigInt::from(5));
        assert_eq!(r.get(3, 4), BigInt::from(1));
        assert_eq!(r.get(0, 0), BigInt::from(1));
        let o = odd_rank_bivariate(30);
        assert_eq!(o.get(0, 1), BigInt::from(1));
        for n in 0..30 {
            for m in -(n as i64)..=(n as i64) {
                assert_eq!(o.get(m, n), o.get(-m, n));
                if (n as i64 - m).rem_euclid(2) == 0 {
                    assert!(o.get(m, n).is_zero(), "N0({m},{n})");
                }
            }
        }
    }
}
