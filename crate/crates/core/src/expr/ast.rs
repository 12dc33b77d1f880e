use std::fmt;

use num_bigint::BigInt;

use crate::num::CycRat;

/// An expression tree over series atoms. Constants inside atom argument lists
/// are folded to [`CycRat`] at parse time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `z8`, a primitive eighth root of unity.
    Z8,
    /// `i = z8^2`.
    I,
    /// The series variable.
    Q,
    /// `J_m = (q^m; q^m)_∞`.
    J(i64),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `sub(e, k)`: replace `q` by `q^k`.
    Subst(Box<Expr>, i64),
    /// `dis(e, ℓ, r)`: coefficients at `ℓn + r`.
    Dissect(Box<Expr>, i64, i64),
    /// `shift(e, d)`: multiply by `q^d`.
    Shift(Box<Expr>, i64),
    /// `neg(e)`: replace `q` by `-q`.
    NegQ(Box<Expr>),
}

/// Function-style atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `j(c·q^a; q^m)` by its bilateral sum.
    Jac {
        c: CycRat,
        a: i64,
        m: i64,
    },
    /// `j(c·q^a; q^m)` by its product.
    JacProd {
        c: CycRat,
        a: i64,
        m: i64,
    },
    /// `g(c·q^a; q^m)`.
    G {
        c: CycRat,
        a: i64,
        m: i64,
    },
    /// `g(c·q^a; q^m)` by the alternative expansion.
    GAlt {
        c: CycRat,
        a: i64,
        m: i64,
    },
    Phi(i64),
    Psi(i64),
    /// `Σ p_ω(n) q^n`.
    POmega,
    /// `Σ_n N⁰(a, M; ℓn + r) q^n`.
    OddClass {
        a: i64,
        modulus: i64,
        ell: i64,
        r: i64,
    },
    /// `Σ_n N(a, M; ℓn + r) q^n`.
    RankClass {
        a: i64,
        modulus: i64,
        ell: i64,
        r: i64,
    },
    /// `R₁⁰(c; q)` by the Appell–Lerch sum.
    R0(CycRat),
    /// `R₁⁰(c; q)` from the odd-rank residue table.
    R0Table(CycRat),
    /// `R₁(c; q)` from the rank table.
    R1Table(CycRat),
    /// `Σ η_k(n) q^n` from the rank table.
    Eta(u32),
    /// `Σ η⁰_k(n) q^n` from the odd-rank table.
    Eta0(u32),
    /// Andrews' bilateral sum for `Σ η⁰_{2k}(n) q^n`.
    Andrews(u32),
    /// `(c·q^a; q^m)_∞`.
    Poch {
        c: CycRat,
        a: i64,
        m: i64,
    },
    /// `(c·q^a; q^m)_n`.
    PochFin {
        c: CycRat,
        a: i64,
        m: i64,
        n: i64,
    },
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    /// Exact value when the tree is built from literals only.
    pub fn as_constant(&self) -> Option<CycRat> {
        Some(match self {
            Expr::Int(n) => CycRat::from(n.clone()),
            Expr::Z8 => CycRat::zeta8(),
            Expr::I => CycRat::i(),
            Expr::Neg(e) => -e.as_constant()?,
            Expr::Add(a, b) => a.as_constant()? + b.as_constant()?,
            Expr::Sub(a, b) => a.as_constant()? - b.as_constant()?,
            Expr::Mul(a, b) => a.as_constant()? * b.as_constant()?,
            Expr::Div(a, b) => a.as_constant()? * b.as_constant()?.inv()?,
            Expr::Pow(a, k) => {
                let c = a.as_constant()?;
                if *k < 0 && c.is_zero() {
                    return None;
                }
                c.pow(*k)
            }
            _ => return None,
        })
    }

    /// Binding strength used by the printer.
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Mul(..) | Expr::Div(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn paren(f: &mut fmt::Formatter<'_>, child: &Expr, min: u8) -> fmt::Result {
    if child.prec() < min {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Prints a constant so that it re-parses to the same value.
fn fmt_const(f: &mut fmt::Formatter<'_>, c: &CycRat) -> fmt::Result {
    write!(f, "{c}")
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cam = |f: &mut fmt::Formatter<'_>, name: &str, c: &CycRat, a: i64, m: i64| {
            write!(f, "{name}(")?;
            fmt_const(f, c)?;
            write!(f, ", {a}, {m})")
        };
        match self {
            Atom::Jac { c, a, m } => cam(f, "j", c, *a, *m),
            Atom::JacProd { c, a, m } => cam(f, "jprod", c, *a, *m),
            Atom::G { c, a, m } => cam(f, "g", c, *a, *m),
            Atom::GAlt { c, a, m } => cam(f, "galt", c, *a, *m),
            Atom::Poch { c, a, m } => cam(f, "poch", c, *a, *m),
            Atom::PochFin { c, a, m, n } => {
                write!(f, "pochf(")?;
                fmt_const(f, c)?;
                write!(f, ", {a}, {m}, {n})")
            }
            Atom::Phi(k) => write!(f, "phi({k})"),
            Atom::Psi(k) => write!(f, "psi({k})"),
            Atom::POmega => write!(f, "pw"),
            Atom::OddClass { a, modulus, ell, r } => write!(f, "N0({a}, {modulus}, {ell}, {r})"),
            Atom::RankClass { a, modulus, ell, r } => write!(f, "N({a}, {modulus}, {ell}, {r})"),
            Atom::R0(c) => write!(f, "R0({c})"),
            Atom::R0Table(c) => write!(f, "R0t({c})"),
            Atom::R1Table(c) => write!(f, "R1({c})"),
            Atom::Eta(k) => write!(f, "eta({k})"),
            Atom::Eta0(k) => write!(f, "eta0({k})"),
            Atom::Andrews(k) => write!(f, "andrews({k})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Z8 => write!(f, "z8"),
            Expr::I => write!(f, "i"),
            Expr::Q => write!(f, "q"),
            Expr::J(m) => write!(f, "J{m}"),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                paren(f, e, 3)
            }
            Expr::Add(a, b) => {
                paren(f, a, 1)?;
                write!(f, " + ")?;
                paren(f, b, 2)
            }
            Expr::Sub(a, b) => {
                paren(f, a, 1)?;
                write!(f, " - ")?;
                paren(f, b, 2)
            }
            Expr::Mul(a, b) => {
                paren(f, a, 3)?;
                write!(f, "*")?;
                paren(f, b, 4)
            }
            Expr::Div(a, b) => {
                paren(f, a, 3)?;
                write!(f, "/")?;
                paren(f, b, 4)
            }
            Expr::Pow(a, k) => {
                paren(f, a, 5)?;
                if *k < 0 {
                    write!(f, "^({k})")
                } else {
                    write!(f, "^{k}")
                }
            }
            Expr::Subst(e, k) => write!(f, "sub({e}, {k})"),
            Expr::Dissect(e, l, r) => write!(f, "dis({e}, {l}, {r})"),
            Expr::Shift(e, d) => write!(f, "shift({e}, {d})"),
            Expr::NegQ(e) => write!(f, "neg({e})"),
        }
    }
}
