//! Infinite products and theta functions.
//!
//! `J_m = (q^m; q^m)_∞` comes from Euler's pentagonal sum and `j(x; q)` from the
//! bilateral triple-product sum; the product forms are kept as independent
//! oracles. Eta quotients use the logarithmic-derivative recurrence over the
//! integers and are memoized, because the identity catalog evaluates the same
//! quotients many times.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::CycRat;
use crate::series::LaurentSeries;

/// `(q^m; q^m)_∞` to `O(q^T)` via `Σ_n (-1)^n q^{m·n(3n-1)/2}`.
pub fn eta_product(m: i64, t: i64) -> LaurentSeries {
    assert!(m >= 1, "eta_product needs m >= 1");
    let t = t.max(0);
    let mut coeffs = vec![CycRat::zero(); t as usize];
    if t > 0 {
        coeffs[0] = CycRat::one();
    }
    let mut n = 1i64;
    loop {
        let e1 = m * n * (3 * n - 1) / 2;
        if e1 >= t {
            break;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        coeffs[e1 as usize] += &CycRat::from_int(sign);
        let e2 = m * n * (3 * n + 1) / 2;
        if e2 < t {
            coeffs[e2 as usize] += &CycRat::from_int(sign);
        }
        n += 1;
    }
    LaurentSeries::from_coeffs(0, coeffs)
}

/// `prefactor · q^{q_shift} · Π J_m^{e_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    factors: Vec<(i64, i64)>,
    pub prefactor: CycRat,
    pub q_shift: i64,
}

impl Default for EtaQuotientSpec {
    fn default() -> Self {
        EtaQuotientSpec {
            factors: Vec::new(),
            prefactor: CycRat::one(),
            q_shift: 0,
        }
    }
}

impl EtaQuotientSpec {
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(factors: I) -> Self {
        let mut s = EtaQuotientSpec::default();
        for (m, e) in factors {
            s.push(m, e);
        }
        s
    }

    pub fn with_prefactor(mut self, c: CycRat, q_shift: i64) -> Self {
        self.prefactor = c;
        self.q_shift = q_shift;
        self
    }

    fn push(&mut self, m: i64, e: i64) {
        assert!(m >= 1, "eta factor J_{m} needs m >= 1");
        match self.factors.binary_search_by_key(&m, |f| f.0) {
            Ok(i) => {
                self.factors[i].1 += e;
                if self.factors[i].1 == 0 {
                    self.factors.remove(i);
                }
            }
            Err(i) if e != 0 => self.factors.insert(i, (m, e)),
            Err(_) => {}
        }
    }

    /// Normalized `(m, exponent)` pairs: sorted, distinct, nonzero exponents.
    pub fn factors(&self) -> &[(i64, i64)] {
        &self.factors
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for &(m, e) in &other.factors {
            s.push(m, e);
        }
        s.prefactor = &self.prefactor * &other.prefactor;
        s.q_shift += other.q_shift;
        s
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut s = EtaQuotientSpec::new(self.factors.iter().map(|&(m, e)| (m, e * k)));
        s.prefactor = self.prefactor.pow(k);
        s.q_shift = self.q_shift * k;
        s
    }

    /// Weight-free check: true when the spec is just a scalar times `q^d`.
    pub fn is_monomial(&self) -> bool {
        self.factors.is_empty()
    }
}

type QuotientCache = RwLock<HashMap<Vec<(i64, i64)>, Arc<Vec<BigInt>>>>;

fn quotient_cache() -> &'static QuotientCache {
    static CACHE: OnceLock<QuotientCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer coefficients of `Π J_m^{e_m}` for exponents `0..len`.
///
/// Writing `P = Π J_m^{e_m}`, `q·P'/P = Σ_n b_n q^n` with
/// `b_n = -Σ_{m | n} e_m · m · σ(n/m)`, hence `n·a_n = Σ_{k=1..n} b_k a_{n-k}`.
pub fn eta_quotient_coeffs(factors: &[(i64, i64)], len: usize) -> Arc<Vec<BigInt>> {
    let key = factors.to_vec();
    if let Some(hit) = quotient_cache().read().unwrap().get(&key) {
        if hit.len() >= len {
            return Arc::clone(hit);
        }
    }
    let start = quotient_cache()
        .read()
        .unwrap()
        .get(&key)
        .map(|v| v.as_ref().clone());
    let mut a = start.unwrap_or_else(|| vec![BigInt::one()]);
    if a.len() < len {
        let sigma = divisor_sums(len);
        let mut b = vec![0i64; len];
        for &(m, e) in factors {
            let mut n = m as usize;
            while n < len {
                b[n] -= e * m * sigma[n / m as usize];
                n += m as usize;
            }
        }
        let nonzero: Vec<usize> = (1..len).filter(|&k| b[k] != 0).collect();
        for n in a.len()..len {
            let mut acc = BigInt::zero();
            for &k in nonzero.iter().take_while(|&&k| k <= n) {
                let ank = &a[n - k];
                if !ank.is_zero() {
                    acc += ank * b[k];
                }
            }
            let (q, r) = acc.div_rem(&BigInt::from(n as i64));
            debug_assert!(r.is_zero(), "eta quotient recurrence lost integrality");
            a.push(q);
        }
    }
    let a = Arc::new(a);
    let mut guard = quotient_cache().write().unwrap();
    let slot = guard.entry(key).or_insert_with(|| Arc::clone(&a));
    if slot.len() < a.len() {
        *slot = Arc::clone(&a);
    }
    Arc::clone(&a)
}

fn divisor_sums(len: usize) -> Vec<i64> {
    let mut s = vec![0i64; len.max(1)];
    for d in 1..len {
        let mut n = d;
        while n < len {
            s[n] += d as i64;
            n += d;
        }
    }
    s
}

/// Evaluates an eta quotient to `O(q^T)`.
pub fn eval_eta_quotient(spec: &EtaQuotientSpec, t: i64) -> LaurentSeries {
    let len = (t - spec.q_shift).max(0) as usize;
    let base: Vec<CycRat> = if spec.factors.is_empty() {
        let mut v = vec![CycRat::zero(); len];
        if len > 0 {
            v[0] = CycRat::one();
        }
        v
    } else {
        let ints = eta_quotient_coeffs(&spec.factors, len);
        ints[..len]
            .iter()
            .map(|x| CycRat::from(x.clone()))
            .collect()
    };
    LaurentSeries::from_coeffs(0, base)
        .scale(&spec.prefactor)
        .into_shifted(spec.q_shift)
}

/// The same quotient assembled from `eta_product` by multiplication and
/// inversion; an independent oracle for [`eval_eta_quotient`].
pub fn eval_eta_quotient_naive(spec: &EtaQuotientSpec, t: i64) -> Result<LaurentSeries> {
    let len = (t - spec.q_shift).max(0);
    let mut acc = LaurentSeries::one(len);
    for &(m, e) in &spec.factors {
        acc = acc.mul(&eta_product(m, len).pow(e)?);
    }
    Ok(acc.scale(&spec.prefactor).into_shifted(spec.q_shift))
}

fn check_theta_args(c: &CycRat, a: i64, m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!(
            "theta modulus must be >= 1, got {m}"
        )));
    }
    if c.is_zero() {
        return Err(Error::InvalidArgument(
            "theta argument coefficient is zero".into(),
        ));
    }
    if c.is_one() && a.rem_euclid(m) == 0 {
        return Err(Error::DegenerateTheta { a, m });
    }
    Ok(())
}

/// `j(c·q^a; q^m)` to `O(q^T)` from the bilateral sum
/// `Σ_n (-1)^n c^n q^{m·n(n-1)/2 + a·n}`.
pub fn jacobi_j(c: &CycRat, a: i64, m: i64, t: i64) -> Result<LaurentSeries> {
    check_theta_args(c, a, m)?;
    let exp = |n: i64| m * n * (n - 1) / 2 + a * n;
    // The exponent is a convex quadratic in n with its vertex near 1/2 - a/m.
    let vertex = (m - 2 * a).div_euclid(2 * m);
    let mut terms: Vec<(i64, CycRat)> = Vec::new();
    let unit = c.root_of_unity_index();
    let c_inv = c.inv().expect("nonzero");
    let power = |n: i64| -> CycRat {
        match unit {
            Some(k) => CycRat::zeta8_pow(k * n),
            None if n >= 0 => c.pow(n),
            None => c_inv.pow(-n),
        }
    };
    let mut n = vertex;
    loop {
        let e = exp(n);
        if e >= t && n > vertex + 1 {
            break;
        }
        if e < t {
            let term = power(n);
            terms.push((e, if n % 2 == 0 { term } else { -term }));
        }
        n += 1;
    }
    let mut n = vertex - 1;
    loop {
        let e = exp(n);
        if e >= t && n < vertex - 1 {
            break;
        }
        if e < t {
            let term = power(n);
            terms.push((e, if n % 2 == 0 { term } else { -term }));
        }
        n -= 1;
    }
    Ok(LaurentSeries::polynomial(terms, t))
}

/// `Π (1 − c·q^e)` over the given exponents, exact to `O(q^T)`. Factors with
/// `e ≤ 0` are finite in number and shift the window; they are applied first.
fn binomial_product<I>(factors: I, t: i64) -> Result<LaurentSeries>
where
    I: IntoIterator<Item = (CycRat, i64)>,
{
    let mut nonpos = Vec::new();
    let mut pos = Vec::new();
    for (c, e) in factors {
        if e <= 0 {
            nonpos.push((c, e));
        } else {
            pos.push((c, e));
        }
    }
    let lift: i64 = nonpos.iter().map(|(_, e)| -e).sum();
    let mut acc = LaurentSeries::one(t + lift);
    for (c, e) in &pos {
        if *e < acc.trunc() {
            acc = acc.mul_binomial(c, *e);
        }
    }
    for (c, e) in &nonpos {
        if *e == 0 && c.is_one() {
            return Ok(LaurentSeries::zero(t));
        }
        acc = acc.mul_binomial(c, *e);
    }
    Ok(acc.truncate(t))
}

/// Product form `(x; q^m)_∞ (q^m/x; q^m)_∞ (q^m; q^m)_∞` with `x = c·q^a`.
pub fn jacobi_j_product(c: &CycRat, a: i64, m: i64, t: i64) -> Result<LaurentSeries> {
    check_theta_args(c, a, m)?;
    let ci = c.inv().expect("nonzero");
    let mut factors = Vec::new();
    // Enough factors to cover every exponent below t, including the finitely
    // many non-positive ones that shift the window down.
    let bound = t + (a.abs() + m) * 2;
    let mut k = 0;
    while a + k * m < bound || m - a + k * m < bound {
        factors.push((c.clone(), a + k * m));
        factors.push((ci.clone(), m - a + k * m));
        factors.push((CycRat::one(), m + k * m));
        k += 1;
    }
    let min_e: i64 = factors.iter().map(|f| f.1.min(0)).sum();
    let prod = binomial_product(factors, t)?;
    debug_assert!(prod.min_exp() >= min_e.min(0));
    Ok(prod)
}

/// `φ(q^k) = Σ_{n∈Z} q^{k n²}`.
pub fn phi(k: i64, t: i64) -> LaurentSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while k * n * n < t {
        let w = if n == 0 { 1 } else { 2 };
        terms.push((k * n * n, CycRat::from_int(w)));
        n += 1;
    }
    LaurentSeries::polynomial(terms, t)
}

/// `ψ(q^k) = Σ_{n≥0} q^{k n(n+1)/2}`.
pub fn psi(k: i64, t: i64) -> LaurentSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while k * n * (n + 1) / 2 < t {
        terms.push((k * n * (n + 1) / 2, CycRat::one()));
        n += 1;
    }
    LaurentSeries::polynomial(terms, t)
}

/// `Π_{k=0}^{n-1} (1 − c·q^{a+km})`.
pub fn pochhammer_fin(c: &CycRat, a: i64, m: i64, n: i64, t: i64) -> Result<LaurentSeries> {
    if m < 1 || n < 0 {
        return Err(Error::InvalidArgument(format!(
            "finite Pochhammer needs m >= 1 and n >= 0 (m={m}, n={n})"
        )));
    }
    binomial_product((0..n).map(|k| (c.clone(), a + k * m)), t)
}

/// `(c·q^a; q^m)_∞` for `a ≥ 1`.
pub fn pochhammer_inf(c: &CycRat, a: i64, m: i64, t: i64) -> Result<LaurentSeries> {
    if a < 1 {
        return Err(Error::NonconvergentProduct { a, m });
    }
    if m < 1 {
        return Err(Error::InvalidArgument(format!(
            "Pochhammer base must be >= 1, got {m}"
        )));
    }
    let count = if a >= t { 0 } else { (t - a + m - 1) / m };
    binomial_product((0..count).map(|k| (c.clone(), a + k * m)), t)
}

/// A theta-type atom, evaluable by its sum and by its product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaAtom {
    J(i64),
    Jac { c: CycRat, a: i64, m: i64 },
    Phi(i64),
    Psi(i64),
    PochInf { c: CycRat, a: i64, m: i64 },
    PochFin { c: CycRat, a: i64, m: i64, n: i64 },
}

impl ThetaAtom {
    /// `J_{a,m} = j(q^a; q^m)`.
    pub fn jsub(a: i64, m: i64) -> Self {
        ThetaAtom::Jac {
            c: CycRat::one(),
            a,
            m,
        }
    }

    /// `J̄_{a,m} = j(-q^a; q^m)`.
    pub fn jbar(a: i64, m: i64) -> Self {
        ThetaAtom::Jac {
            c: CycRat::from_int(-1),
            a,
            m,
        }
    }

    /// Primary evaluation (sums where available).
    pub fn eval(&self, t: i64) -> Result<LaurentSeries> {
        match self {
            ThetaAtom::J(m) => Ok(eta_product(*m, t)),
            ThetaAtom::Jac { c, a, m } => jacobi_j(c, *a, *m, t),
            ThetaAtom::Phi(k) => Ok(phi(*k, t)),
            ThetaAtom::Psi(k) => Ok(psi(*k, t)),
            ThetaAtom::PochInf { c, a, m } => pochhammer_inf(c, *a, *m, t),
            ThetaAtom::PochFin { c, a, m, n } => pochhammer_fin(c, *a, *m, *n, t),
        }
    }

    /// Oracle evaluation through products of binomials.
    pub fn eval_product(&self, t: i64) -> Result<LaurentSeries> {
        let one = CycRat::one();
        match self {
            ThetaAtom::J(m) => pochhammer_inf(&one, *m, *m, t),
            ThetaAtom::Jac { c, a, m } => jacobi_j_product(c, *a, *m, t),
            ThetaAtom::Phi(k) => {
                // φ(q) = J_2^5 / (J_1^2 J_4^2), at q^k.
                let base = EtaQuotientSpec::new([(2 * k, 5), (*k, -2), (4 * k, -2)]);
                eval_eta_quotient_naive(&base, t)
            }
            ThetaAtom::Psi(k) => {
                let base = EtaQuotientSpec::new([(2 * k, 2), (*k, -1)]);
                eval_eta_quotient_naive(&base, t)
            }
            ThetaAtom::PochInf { .. } | ThetaAtom::PochFin { .. } => self.eval(t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.as_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn pentagonal_expansion() {
        let j1 = eta_product(1, 13);
        assert_eq!(ints(&j1), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(eta_product(2, 20), eta_product(1, 10).substitute_power(2));
    }

    #[test]
    fn eta_quotient_recurrence_matches_naive() {
        for spec in [
            EtaQuotientSpec::new([(2, 4), (1, -2), (4, -1)]),
            EtaQuotientSpec::new([(2, 22), (1, -13), (4, -8)]),
            EtaQuotientSpec::new([(32, 6), (64, 1), (16, -4), (128, -2)]),
            EtaQuotientSpec::new([]),
        ] {
            let a = eval_eta_quotient(&spec, 120);
            let b = eval_eta_quotient_naive(&spec, 120).unwrap();
            assert!(a.compare(&b).equal(), "{spec:?}");
            assert_eq!(a.window(), (0, 120));
        }
        let id = EtaQuotientSpec::new([(1, 1)]).mul(&EtaQuotientSpec::new([(1, -1)]));
        assert!(id.is_monomial());
    }

    #[test]
    fn quotient_with_prefactor_and_shift() {
        let spec = EtaQuotientSpec::new([(1, -1)]).with_prefactor(CycRat::from_frac(1, 2), -1);
        let s = eval_eta_quotient(&spec, 5);
        assert_eq!(s.window(), (-1, 5));
        assert_eq!(s.coeff(-1).unwrap(), CycRat::from_frac(1, 2));
        assert_eq!(s.coeff(3).unwrap(), CycRat::from_frac(5, 2));
    }

    #[test]
    fn theta_sum_matches_product() {
        let cases = [
            (CycRat::from_int(-1), 1, 4),
            (CycRat::one(), 1, 2),
            (CycRat::one(), 1, 3),
            (CycRat::i(), 0, 1),
            (CycRat::zeta8(), 3, 2),
            (CycRat::from_int(-1), 0, 8),
            (CycRat::from_int(-1), 5, 2),
            (CycRat::from_int(-1), -3, 4),
        ];
        for (c, a, m) in cases {
            let s = jacobi_j(&c, a, m, 80).unwrap();
            let p = jacobi_j_product(&c, a, m, 80).unwrap();
            let cmp = s.compare(&p);
            assert!(cmp.equal(), "j({c}·q^{a}; q^{m}): {cmp:?}");
            assert_eq!(s.trunc(), 80);
        }
    }

    #[test]
    fn degenerate_and_nonconvergent() {
        assert_eq!(
            jacobi_j(&CycRat::one(), 4, 2, 10),
            Err(Error::DegenerateTheta { a: 4, m: 2 })
        );
        assert_eq!(
            pochhammer_inf(&CycRat::one(), 0, 1, 10),
            Err(Error::NonconvergentProduct { a: 0, m: 1 })
        );
    }

    #[test]
    fn phi_psi_and_pochhammer() {
        assert_eq!(ints(&phi(1, 10)), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert_eq!(ints(&psi(1, 7)), vec![1, 1, 0, 1, 0, 0, 1]);
        let one = CycRat::one();
        let p = pochhammer_fin(&one, 1, 1, 2, 6).unwrap();
        assert_eq!(ints(&p), vec![1, -1, -1, 1, 0, 0]);
        assert_eq!(
            pochhammer_fin(&one, 1, 1, 0, 4).unwrap(),
            LaurentSeries::one(4)
        );
        let two = pochhammer_fin(&CycRat::from_int(-1), 0, 1, 1, 4).unwrap();
        assert_eq!(ints(&two), vec![2, 0, 0, 0]);
        assert_eq!(pochhammer_inf(&one, 1, 1, 40).unwrap(), eta_product(1, 40));
        let split = pochhammer_inf(&one, 2, 2, 40)
            .unwrap()
            .mul(&pochhammer_inf(&one, 1, 2, 40).unwrap());
        assert_eq!(split, eta_product(1, 40));
        let m1 = CycRat::from_int(-1);
        let half = pochhammer_inf(&m1, 1, 2, 60).unwrap();
        let jj = half.mul(&half).mul(&eta_product(2, 60));
        assert!(jj.compare(&jacobi_j(&m1, 1, 2, 60).unwrap()).equal());
    }
}
