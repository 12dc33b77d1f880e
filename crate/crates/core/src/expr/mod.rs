//! A small expression language for series: a parser into [`Expr`] trees and
//! an exact evaluator over [`crate::LaurentSeries`].

mod ast;
mod eval;
mod parser;

pub use ast::{Atom, Expr};
pub use eval::{eval, integer_coeffs, EvalContext};
pub use parser::parse;

/// Parses and evaluates `src` to order `t`.
pub fn eval_str(src: &str, ctx: &EvalContext, t: i64) -> crate::Result<crate::LaurentSeries> {
    eval(&parse(src)?, ctx, t)
}
