use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use super::ast::{Atom, Expr};
use crate::error::{Error, Result};
use crate::mock::{appell_lerch_r0, g_series, g_series_alt, GArg};
use crate::num::CycRat;
use crate::rank::{
    eta0_moment, eta0_moment_series, eta_moment, odd_class_table, p_omega_series, OddRankTable,
    RankTable,
};
use crate::series::LaurentSeries;
use crate::theta::{
    eval_eta_quotient, jacobi_j, jacobi_j_product, phi, pochhammer_fin, pochhammer_inf, psi,
    EtaQuotientSpec,
};

/// Lazily built tables shared by every evaluation in a run.
pub struct EvalContext {
    n_max: usize,
    enum_cap: u32,
    rank: Mutex<Option<Arc<RankTable>>>,
    odd: Mutex<Option<Arc<OddRankTable>>>,
}

impl EvalContext {
    pub fn new(n_max: usize, enum_cap: u32) -> Self {
        EvalContext {
            n_max,
            enum_cap,
            rank: Mutex::new(None),
            odd: Mutex::new(None),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn rank_table(&self) -> Result<Arc<RankTable>> {
        let mut slot = self.rank.lock().unwrap();
        if let Some(t) = slot.as_ref() {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(RankTable::build(self.n_max)?);
        *slot = Some(Arc::clone(&t));
        Ok(t)
    }

    pub fn odd_table(&self) -> Result<Arc<OddRankTable>> {
        let mut slot = self.odd.lock().unwrap();
        if let Some(t) = slot.as_ref() {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(OddRankTable::build(self.n_max, self.enum_cap)?);
        *slot = Some(Arc::clone(&t));
        Ok(t)
    }
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext::new(600, 40)
    }
}

/// Evaluates `expr` so that the result is exact on `[min_exp, t)`.
///
/// Negative shifts, divisions by non-units and Laurent factors all eat into
/// the window, so the tree is re-evaluated at a higher working order until the
/// requested one is met.
pub fn eval(expr: &Expr, ctx: &EvalContext, t: i64) -> Result<LaurentSeries> {
    let mut work = t;
    for _ in 0..8 {
        let s = Evaluator { ctx }.eval(expr, work, &mut Vec::new())?;
        if s.trunc() >= t {
            return Ok(s.truncate(t));
        }
        work += (t - s.trunc()).max(1);
    }
    Err(Error::WindowTooSmall {
        needed: t,
        got: work,
    })
}

struct Evaluator<'a> {
    ctx: &'a EvalContext,
}

fn wrap(path: &[String], e: Error) -> Error {
    match e {
        Error::Eval { .. } => e,
        other => Error::Eval {
            path: path.join(" > "),
            source: Box::new(other),
        },
    }
}

/// Recognizes products of `J_m` powers, literal factors and powers of `q`.
fn as_eta_quotient(e: &Expr) -> Option<EtaQuotientSpec> {
    match e {
        Expr::J(m) => Some(EtaQuotientSpec::new([(*m, 1)])),
        Expr::Q => Some(EtaQuotientSpec::default().with_prefactor(CycRat::one(), 1)),
        Expr::Mul(a, b) => Some(as_eta_quotient(a)?.mul(&as_eta_quotient(b)?)),
        Expr::Div(a, b) => Some(as_eta_quotient(a)?.mul(&as_eta_quotient(b)?.pow(-1))),
        Expr::Pow(a, k) => Some(as_eta_quotient(a)?.pow(*k)),
        Expr::Neg(a) => {
            let s = as_eta_quotient(a)?;
            let (c, d) = (-s.prefactor.clone(), s.q_shift);
            Some(s.with_prefactor(c, d))
        }
        _ => {
            let c = e.as_constant()?;
            if c.is_zero() {
                None
            } else {
                Some(EtaQuotientSpec::default().with_prefactor(c, 0))
            }
        }
    }
}

fn has_factors(s: &EtaQuotientSpec) -> bool {
    !s.factors().is_empty() || s.q_shift != 0
}

impl Evaluator<'_> {
    fn eval(&self, e: &Expr, t: i64, path: &mut Vec<String>) -> Result<LaurentSeries> {
        if let Some(spec) = as_eta_quotient(e).filter(has_factors) {
            // q^d · (power series) needs the power series to t − d.
            let body = eval_eta_quotient(
                &EtaQuotientSpec::new(spec.factors().iter().copied()),
                t - spec.q_shift,
            );
            return Ok(body.scale(&spec.prefactor).into_shifted(spec.q_shift));
        }
        if let Some(c) = e.as_constant() {
            return Ok(LaurentSeries::constant(c, t));
        }
        match e {
            Expr::Q => Ok(LaurentSeries::monomial(CycRat::one(), 1, t)),
            Expr::J(m) => Ok(eval_eta_quotient(&EtaQuotientSpec::new([(*m, 1)]), t)),
            Expr::Atom(a) => {
                path.push(a.to_string());
                let r = self.atom(a, t).map_err(|err| wrap(path, err));
                path.pop();
                r
            }
            Expr::Neg(a) => self.child(a, t, path, "neg").map(|s| s.neg()),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let x = self.child(a, t, path, "lhs")?;
                let y = self.child(b, t, path, "rhs")?;
                Ok(if matches!(e, Expr::Add(..)) {
                    x.add(&y)
                } else {
                    x.sub(&y)
                })
            }
            Expr::Mul(a, b) => {
                let x = self.child(a, t, path, "lhs")?;
                let y = self.child(b, t - x.min_exp().min(0), path, "rhs")?;
                let x = if y.min_exp() < 0 {
                    self.child(a, t - y.min_exp(), path, "lhs")?
                } else {
                    x
                };
                Ok(x.mul(&y))
            }
            Expr::Div(a, b) => {
                let y = self.child(b, t, path, "divisor")?;
                let v = y.valuation().unwrap_or(0);
                let y = if v > 0 {
                    self.child(b, t + 2 * v, path, "divisor")?
                } else {
                    y
                };
                let x = self.child(a, t + v, path, "dividend")?;
                path.push("/".into());
                let r = x.div(&y).map_err(|err| wrap(path, err));
                path.pop();
                r
            }
            Expr::Pow(a, k) => {
                let x = self.child(a, t, path, "base")?;
                path.push(format!("^{k}"));
                let r = x.pow(*k).map_err(|err| wrap(path, err));
                path.pop();
                r
            }
            Expr::Subst(a, k) => {
                let inner = (t + k - 1).div_euclid(*k);
                Ok(self.child(a, inner, path, "sub")?.substitute_power(*k))
            }
            Expr::Dissect(a, ell, r) => {
                Ok(self.child(a, ell * t + r, path, "dis")?.dissect(*ell, *r))
            }
            Expr::Shift(a, d) => Ok(self.child(a, t - d, path, "shift")?.into_shifted(*d)),
            Expr::NegQ(a) => Ok(self.child(a, t, path, "neg")?.negate_variable()),
            Expr::Int(_) | Expr::Z8 | Expr::I => unreachable!("constants are folded above"),
        }
    }

    fn child(
        &self,
        e: &Expr,
        t: i64,
        path: &mut Vec<String>,
        label: &str,
    ) -> Result<LaurentSeries> {
        path.push(label.to_string());
        let r = self.eval(e, t, path);
        path.pop();
        r
    }

    fn atom(&self, a: &Atom, t: i64) -> Result<LaurentSeries> {
        let t0 = t.max(0);
        match a {
            Atom::Jac { c, a, m } => jacobi_j(c, *a, *m, t),
            Atom::JacProd { c, a, m } => jacobi_j_product(c, *a, *m, t),
            Atom::G { c, a, m } => g_series(&GArg::new(c.clone(), *a, *m), t),
            Atom::GAlt { c, a, m } => g_series_alt(&GArg::new(c.clone(), *a, *m), t),
            Atom::Phi(k) => Ok(phi(*k, t)),
            Atom::Psi(k) => Ok(psi(*k, t)),
            Atom::Poch { c, a, m } => pochhammer_inf(c, *a, *m, t),
            Atom::PochFin { c, a, m, n } => pochhammer_fin(c, *a, *m, *n, t),
            Atom::POmega => Ok(p_omega_series(t)),
            Atom::R0(c) => appell_lerch_r0(c, t),
            Atom::Andrews(k) => eta0_moment_series(*k, t),
            Atom::OddClass { a, modulus, ell, r } => {
                if 8 % modulus == 0 {
                    let needed = (ell * (t0 - 1) + r).max(0) as usize;
                    odd_class_table(needed).class_series(*a, *modulus, *ell, *r, t0)
                } else {
                    self.ctx
                        .odd_table()?
                        .counts()
                        .class_series(*a, *modulus, *ell, *r, t0)
                }
            }
            Atom::RankClass { a, modulus, ell, r } => self
                .ctx
                .rank_table()?
                .counts()
                .class_series(*a, *modulus, *ell, *r, t0),
            Atom::R0Table(c) => odd_class_table(t0 as usize).specialize(c, t0),
            Atom::R1Table(c) => self.ctx.rank_table()?.counts().specialize(c, t0),
            Atom::Eta(k) => {
                let table = self.ctx.rank_table()?;
                let coeffs = (0..t0)
                    .map(|n| eta_moment(&table, *k, n).map(CycRat::from))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LaurentSeries::from_coeffs(0, coeffs))
            }
            Atom::Eta0(k) => {
                let table = self.ctx.odd_table()?;
                let coeffs = (0..t0)
                    .map(|n| {
                        if n == 0 {
                            Ok(CycRat::zero())
                        } else {
                            eta0_moment(&table, *k, n).map(CycRat::from)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(LaurentSeries::from_coeffs(0, coeffs))
            }
        }
    }
}

/// Integer coefficients of a series on `[0, t)`, failing on non-integers.
pub fn integer_coeffs(s: &LaurentSeries, t: i64) -> Result<Vec<BigInt>> {
    (0..t)
        .map(|n| {
            let c = s.coeff(n)?;
            c.as_integer()
                .ok_or_else(|| Error::NotIntegral(format!("coefficient of q^{n} is {c}")))
        })
        .collect()
}
