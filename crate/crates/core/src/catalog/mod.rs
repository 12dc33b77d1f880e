//! A declarative catalog of identities, congruences and inequalities, and the
//! engine that checks them.
//!
//! Every series is written in the expression grammar of [`crate::expr`], so an
//! entry reads as its formula. Entry ids are `group/label`; a filter selects
//! entries whose id or label starts with it.

mod entries;

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{self, Atom, EvalContext, Expr};
use crate::rank::residue;

pub use entries::{catalog, MANIFEST};

/// Orders for entries whose deepest base is `q^64` or beyond.
pub const DEEP_ORDER: i64 = 512;
pub const DEEP_MIN_ORDER: i64 = 256;
pub const DEFAULT_ORDER: i64 = 200;
/// Smallest order any entry accepts.
pub const MIN_ORDER: i64 = 8;
/// Every verified equality must be checked on at least this many exponents.
pub const MIN_WINDOW: i64 = 16;

/// How an entry is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `lhs = rhs` on the common window; each `also` expression must equal
    /// `lhs` as well.
    Equality {
        lhs: String,
        rhs: String,
        also: Vec<String>,
    },
    /// `f(ℓn + r) ≡ 0 (mod modulus)` for every listed progression, where
    /// `series = Σ f(n) q^n`, and every argument up to the bound.
    Congruence {
        series: String,
        progressions: Vec<(i64, i64)>,
        modulus: u64,
        arg_max: Option<i64>,
    },
    /// `N⁰(k, 2k; n)` even for every `k ≥ 1` and every `n` in the table.
    HalfClassParity,
    /// `f(ℓn + r) > 0` for `n ≥ n_start`.
    Inequality {
        series: String,
        ell: i64,
        r: i64,
        n_start: i64,
        arg_max: Option<i64>,
    },
    /// Records which `f(ℓn + r)` vanish mod `modulus`; never fails.
    Scan {
        series: String,
        ell: i64,
        r: i64,
        modulus: u64,
        arg_max: Option<i64>,
    },
    /// An equality kept in its printed form; the outcome is reported, never
    /// gated on.
    PrintedEquality { lhs: String, rhs: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub mode: Mode,
    pub default_order: i64,
    pub min_order: i64,
    /// Upper bound imposed by the range the statement covers or by table size.
    pub max_order: Option<i64>,
    /// One-line description of the statement.
    pub statement: String,
    pub note: Option<String>,
}

impl CatalogEntry {
    pub fn label(&self) -> &str {
        self.id.rsplit('/').next().unwrap_or(&self.id)
    }

    pub fn group(&self) -> &str {
        self.id.split('/').next().unwrap_or(&self.id)
    }

    pub fn matches(&self, filter: &str) -> bool {
        self.id.starts_with(filter) || self.label().starts_with(filter)
    }

    pub fn is_equality(&self) -> bool {
        matches!(self.mode, Mode::Equality { .. })
    }

    /// Order used for a run with the given override.
    pub fn effective_order(&self, order: Option<i64>) -> Result<i64> {
        let mut t = order.unwrap_or(self.default_order);
        if let Some(max) = self.max_order {
            t = t.min(max);
        }
        let needed = self.min_order.max(MIN_ORDER);
        if t < needed {
            return Err(Error::WindowTooSmall { needed, got: t });
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Reported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub exp: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one entry. Serializes to exactly
/// `{id, status, window, firstDiscrepancy, wallMs}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    pub window: [i64; 2],
    #[serde(rename = "firstDiscrepancy")]
    pub first_discrepancy: Option<DiscrepancyReport>,
    #[serde(rename = "wallMs")]
    pub wall_ms: u64,
    /// Human-readable observations (errors, scan results); text output only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(id: &str) -> Self {
        VerificationReport {
            id: id.to_string(),
            status: Status::Verified,
            window: [0, 0],
            first_discrepancy: None,
            wall_ms: 0,
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, exp: i64, lhs: impl ToString, rhs: impl ToString) {
        if self.first_discrepancy.is_none() {
            self.first_discrepancy = Some(DiscrepancyReport {
                exp,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.status = Status::Failed;
    }

    pub fn window_len(&self) -> i64 {
        self.window[1] - self.window[0]
    }
}

/// Options shared by a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Overrides every entry's default order (still clamped per entry).
    pub order: Option<i64>,
    /// Table range for table-backed atoms and congruence scans.
    pub n_max: usize,
    pub enum_cap: u32,
    /// Worker threads; 0 picks the machine default.
    pub threads: usize,
    /// When false, `wallMs` is written as 0 so reports are byte-identical.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: None,
            n_max: 600,
            enum_cap: 40,
            threads: 0,
            timing: true,
        }
    }
}

/// Largest `m` among `J_m`, theta/g bases and substitution powers, with
/// substitutions multiplying through.
pub fn deepest_base(e: &Expr) -> i64 {
    match e {
        Expr::J(m) => *m,
        Expr::Atom(a) => match a {
            Atom::Jac { m, .. }
            | Atom::JacProd { m, .. }
            | Atom::G { m, .. }
            | Atom::GAlt { m, .. }
            | Atom::Poch { m, .. }
            | Atom::PochFin { m, .. } => *m,
            Atom::Phi(k) | Atom::Psi(k) => 4 * k,
            _ => 1,
        },
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Shift(a, _) | Expr::NegQ(a) => deepest_base(a),
        Expr::Dissect(a, _, _) => deepest_base(a),
        Expr::Subst(a, k) => k * deepest_base(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            deepest_base(a).max(deepest_base(b))
        }
        Expr::Int(_) | Expr::Z8 | Expr::I | Expr::Q => 1,
    }
}

/// Entries matching `filter` (all entries when `None`), sorted by id.
pub fn select(filter: Option<&str>) -> Result<Vec<CatalogEntry>> {
    let mut v: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| filter.is_none_or(|f| e.matches(f)))
        .collect();
    if v.is_empty() {
        return Err(Error::EmptySelection(filter.unwrap_or("").to_string()));
    }
    v.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(v)
}

/// Checks one entry. Errors become failed reports with a note.
pub fn verify_entry(
    entry: &CatalogEntry,
    ctx: &EvalContext,
    opts: &VerifyOptions,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(&entry.id);
    if let Err(e) = run(entry, ctx, opts, &mut report) {
        report.status = Status::Failed;
        report.notes.push(format!("error: {e}"));
    }
    if opts.timing {
        report.wall_ms = start.elapsed().as_millis() as u64;
    }
    report
}

/// Checks every entry matching `filter`, in parallel, in id order.
pub fn verify_all(filter: Option<&str>, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let entries = select(filter)?;
    let ctx = EvalContext::new(opts.n_max, opts.enum_cap);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    // Heaviest entries first keeps the pool busy; output order is by id.
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(weight(&entries[i])));
    let mut done: Vec<(usize, VerificationReport)> = pool.install(|| {
        order
            .par_iter()
            .map(|&i| (i, verify_entry(&entries[i], &ctx, opts)))
            .collect()
    });
    done.sort_by_key(|(i, _)| *i);
    Ok(done.into_iter().map(|(_, r)| r).collect())
}

fn weight(e: &CatalogEntry) -> i64 {
    match &e.mode {
        Mode::Equality { .. } | Mode::PrintedEquality { .. } => e.default_order,
        _ => 0,
    }
}

fn arg_bound(arg_max: Option<i64>, opts: &VerifyOptions) -> i64 {
    arg_max.unwrap_or(opts.n_max as i64).min(opts.n_max as i64)
}

fn table_values(series: &str, ctx: &EvalContext, bound: i64) -> Result<Vec<BigInt>> {
    let s = expr::eval_str(series, ctx, bound + 1)?;
    expr::integer_coeffs(&s, bound + 1)
}

fn run(
    entry: &CatalogEntry,
    ctx: &EvalContext,
    opts: &VerifyOptions,
    report: &mut VerificationReport,
) -> Result<()> {
    match &entry.mode {
        Mode::Equality { lhs, rhs, also } => {
            let t = entry.effective_order(opts.order)?;
            let l = expr::eval_str(lhs, ctx, t)?;
            let r = expr::eval_str(rhs, ctx, t)?;
            let cmp = l.equals_up_to(&r, t)?;
            report.window = [cmp.window.0, cmp.window.1];
            if let Some(d) = cmp.first_discrepancy {
                report.fail(d.exp, d.lhs, d.rhs);
            } else if cmp.window_len() < MIN_WINDOW {
                report.status = Status::Failed;
                report.notes.push(format!(
                    "window of {} coefficients is below {MIN_WINDOW}",
                    cmp.window_len()
                ));
            }
            for extra in also {
                let x = expr::eval_str(extra, ctx, t)?;
                let c = l.equals_up_to(&x, t)?;
                match c.first_discrepancy {
                    None => report.notes.push(format!("also holds: {extra}")),
                    Some(d) => {
                        report
                            .notes
                            .push(format!("differs from `{extra}` at q^{}", d.exp));
                        report.fail(d.exp, d.lhs, d.rhs);
                    }
                }
            }
        }
        Mode::PrintedEquality { lhs, rhs } => {
            let t = entry.effective_order(opts.order)?;
            let l = expr::eval_str(lhs, ctx, t)?;
            let r = expr::eval_str(rhs, ctx, t)?;
            let cmp = l.equals_up_to(&r, t)?;
            report.window = [cmp.window.0, cmp.window.1];
            report.status = Status::Reported;
            match cmp.first_discrepancy {
                None => report.notes.push("printed form holds on the window".into()),
                Some(d) => {
                    report.notes.push(format!(
                        "printed form differs first at q^{}: {} vs {}",
                        d.exp, d.lhs, d.rhs
                    ));
                    report.first_discrepancy = Some(DiscrepancyReport {
                        exp: d.exp,
                        lhs: d.lhs.to_string(),
                        rhs: d.rhs.to_string(),
                    });
                }
            }
        }
        Mode::Congruence {
            series,
            progressions,
            modulus,
            arg_max,
        } => {
            let bound = arg_bound(*arg_max, opts);
            let values = table_values(series, ctx, bound)?;
            let mut lo = i64::MAX;
            let mut checked = 0usize;
            for &(ell, r) in progressions {
                let mut arg = r;
                while arg <= bound {
                    lo = lo.min(arg);
                    checked += 1;
                    let v = &values[arg as usize];
                    if residue(v, *modulus) != 0 {
                        report.fail(arg, v, format!("0 mod {modulus}"));
                    }
                    arg += ell;
                }
            }
            report.window = [lo.min(bound + 1), bound + 1];
            report.notes.push(format!("{checked} instances checked"));
        }
        Mode::HalfClassParity => {
            let table = ctx.odd_table()?;
            let n_max = table.n_max() as i64;
            let mut checked = 0usize;
            // N⁰(k, 2k; n) sums the odd multiples of k; it vanishes for k > n.
            for n in 1..=n_max {
                for k in 1..=n {
                    let mut v = BigInt::zero();
                    let mut m = k;
                    while m <= n {
                        v += table.get(m, n)? + table.get(-m, n)?;
                        m += 2 * k;
                    }
                    checked += 1;
                    if residue(&v, 2) != 0 {
                        report.fail(n, &v, format!("0 mod 2 (k = {k})"));
                    }
                }
            }
            report.window = [1, n_max + 1];
            report.notes.push(format!("{checked} (k, n) pairs checked"));
        }
        Mode::Inequality {
            series,
            ell,
            r,
            n_start,
            arg_max,
        } => {
            let bound = arg_bound(*arg_max, opts);
            let values = table_values(series, ctx, bound)?;
            let first = ell * n_start + r;
            let mut arg = first;
            let mut checked = 0usize;
            while arg <= bound {
                checked += 1;
                let v = &values[arg as usize];
                if !v.is_positive() {
                    report.fail(arg, v, "> 0");
                }
                arg += ell;
            }
            report.window = [first, bound + 1];
            report.notes.push(format!("{checked} instances checked"));
        }
        Mode::Scan {
            series,
            ell,
            r,
            modulus,
            arg_max,
        } => {
            report.status = Status::Reported;
            let bound = arg_bound(*arg_max, opts);
            let values = table_values(series, ctx, bound)?;
            let mut arg = *r;
            let mut seen = Vec::new();
            while arg <= bound {
                let v = &values[arg as usize];
                let res = residue(v, *modulus);
                seen.push(format!("{arg}: {} mod {modulus}", res));
                if res != 0 && report.first_discrepancy.is_none() {
                    report.first_discrepancy = Some(DiscrepancyReport {
                        exp: arg,
                        lhs: v.to_string(),
                        rhs: format!("0 mod {modulus}"),
                    });
                }
                arg += ell;
            }
            report.window = [*r, bound + 1];
            if seen.is_empty() {
                report
                    .notes
                    .push(format!("no instance within n <= {bound}"));
            } else {
                report.notes.push(format!("residues: {}", seen.join(", ")));
            }
            if values.iter().all(|v| v.is_zero()) {
                report.notes.push("series vanished identically".into());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn catalog_matches_frozen_manifest() {
        let ids: BTreeSet<String> = catalog().into_iter().map(|e| e.id).collect();
        let manifest: BTreeSet<String> = MANIFEST.iter().map(|s| s.to_string()).collect();
        let extra: Vec<_> = ids.difference(&manifest).collect();
        let missing: Vec<_> = manifest.difference(&ids).collect();
        assert!(
            extra.is_empty() && missing.is_empty(),
            "extra {extra:?}, missing {missing:?}"
        );
        assert_eq!(ids.len(), catalog().len(), "duplicate ids");
    }

    #[test]
    fn every_expression_parses() {
        for e in catalog() {
            let texts: Vec<&String> = match &e.mode {
                Mode::Equality { lhs, rhs, also } => {
                    let mut v = vec![lhs, rhs];
                    v.extend(also);
                    v
                }
                Mode::PrintedEquality { lhs, rhs } => vec![lhs, rhs],
                Mode::Congruence { series, .. }
                | Mode::Inequality { series, .. }
                | Mode::Scan { series, .. } => vec![series],
                Mode::HalfClassParity => vec![],
            };
            for t in texts {
                expr::parse(t).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            }
        }
    }

    #[test]
    fn filters_select_groups() {
        assert_eq!(select(Some("thm-mod2")).unwrap().len(), 14);
        assert_eq!(select(Some("thm-mod4")).unwrap().len(), 21);
        assert!(matches!(
            select(Some("no-such-prefix")),
            Err(Error::EmptySelection(_))
        ));
        let one = select(Some("N08-48-8n1-diff")).unwrap();
        assert_eq!(one.len(), 1);
        assert!(select(Some("conj-sec5"))
            .unwrap()
            .iter()
            .all(|e| matches!(e.mode, Mode::Scan { .. })));
    }

    #[test]
    fn order_rules() {
        let deep = select(Some("thm-mod8/N48-2n1")).unwrap().remove(0);
        assert_eq!(deep.default_order, DEEP_ORDER);
        assert_eq!(deep.effective_order(None).unwrap(), DEEP_ORDER);
        assert!(matches!(
            deep.effective_order(Some(200)),
            Err(Error::WindowTooSmall {
                needed: 256,
                got: 200
            })
        ));
        let plain = select(Some("thm-mod2/N02-4n1")).unwrap().remove(0);
        assert_eq!(plain.effective_order(None).unwrap(), DEFAULT_ORDER);
        assert!(plain.effective_order(Some(4)).is_err());
    }

    #[test]
    fn small_entries_verify() {
        let opts = VerifyOptions {
            order: Some(40),
            n_max: 120,
            timing: false,
            ..Default::default()
        };
        let reports = verify_all(Some("thm-mod2"), &opts).unwrap();
        for r in &reports {
            assert_eq!(
                r.status,
                Status::Verified,
                "{} {:?} {:?}",
                r.id,
                r.first_discrepancy,
                r.notes
            );
            assert!(r.window_len() >= MIN_WINDOW);
        }
        let json = serde_json::to_string(&reports[0]).unwrap();
        assert!(json.starts_with(r#"{"id":"thm-mod2/"#));
        assert!(json.contains(r#""status":"verified","window":["#));
        assert!(json.ends_with(r#""firstDiscrepancy":null,"wallMs":0}"#));
    }
}
