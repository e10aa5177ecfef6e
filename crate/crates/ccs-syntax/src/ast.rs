//! The surface tree: parse output with source spans on every node and
//! variables still symbolic.

use std::fmt;
use std::rc::Rc;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A half-open source range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: Pos,
    pub end: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proc {
    pub kind: ProcKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProcKind {
    Nil,
    Send {
        chan: String,
        value: Expr,
        cont: Rc<Proc>,
    },
    Recv {
        chan: String,
        binder: String,
        cont: Rc<Proc>,
    },
    Sum(Rc<Proc>, Rc<Proc>),
    Par(Rc<Proc>, Rc<Proc>),
    Rep(Rc<Proc>),
    Restrict {
        chan: String,
        body: Rc<Proc>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Lit(u64),
    Var(String),
    Add(Rc<Expr>, Rc<Expr>),
    Mul(Rc<Expr>, Rc<Expr>),
}
