//! Concrete syntax for the value-passing process language.
//!
//! ```text
//! process  = parallel { "\" ident }           -- restriction, loosest
//! parallel = sum { "|" sum }                  -- left-associative
//! sum      = prefix { "+" prefix }            -- left-associative
//! prefix   = ident "!" "(" expr ")" "." prefix
//!          | ident "?" "(" ident ")" "." prefix
//!          | "rep" "(" process ")" | "0" | "(" process ")"
//! expr     = mul { "+" mul }
//! mul      = atom { "*" atom }
//! atom     = nat | ident | "(" expr ")"
//! ```
//!
//! Identifiers are `letter { letter | digit | "_" }`; `rep` is reserved.
//! Comments run from `--` to the end of the line; whitespace is
//! insignificant. Value expressions appear only inside `!( ... )`, so value
//! `+`/`*` never clash with process `+`.
//!
//! [`parse`] produces a span-carrying surface tree, [`elaborate`] turns it
//! into a process term (receive binders become real functions, evaluated
//! under the value environment when the continuation is expanded), and
//! [`pretty`] prints terms back in canonical form.

mod ast;
mod elab;
mod lex;
mod parse;
mod pretty;

pub use ast::{Expr, ExprKind, Pos, Proc, ProcKind, Span};
pub use elab::{elaborate, ElabError};
pub use lex::MAX_LITERAL;
pub use parse::{parse, ParseError};
pub use pretty::pretty;
