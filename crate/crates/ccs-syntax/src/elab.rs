//! Elaboration of surface trees into process terms.
//!
//! Variable scope is checked up front so the whole elaboration either fails
//! with a position or produces a total term: receive binders become function
//! values that extend the environment, and value expressions are evaluated
//! under that environment when the continuation is expanded.

use std::rc::Rc;

use thiserror::Error;

use bialg::lang::ccs::{Ccs, CcsF};
use bialg::rec::{func, Term};

use crate::ast::{Expr, ExprKind, Pos, Proc, ProcKind};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ElabError {
    #[error("{pos}: unbound variable `{name}`")]
    UnboundVariable { name: String, pos: Pos },
}

/// Persistent binder environment; extension is sharing-friendly because
/// receive continuations hold on to the environment they closed over.
#[derive(Clone)]
struct Env(Option<Rc<Binding>>);

struct Binding {
    name: String,
    value: u64,
    rest: Env,
}

impl Env {
    fn empty() -> Self {
        Env(None)
    }

    fn bind(&self, name: &str, value: u64) -> Self {
        Env(Some(Rc::new(Binding {
            name: name.to_string(),
            value,
            rest: self.clone(),
        })))
    }

    fn lookup(&self, name: &str) -> Option<u64> {
        let mut cur = self;
        while let Some(b) = &cur.0 {
            if b.name == name {
                return Some(b.value);
            }
            cur = &b.rest;
        }
        None
    }
}

pub fn elaborate(ast: &Proc) -> Result<Term<CcsF>, ElabError> {
    check_scope(ast, &mut Vec::new())?;
    Ok(build(ast, &Env::empty()))
}

fn check_scope(proc: &Proc, bound: &mut Vec<String>) -> Result<(), ElabError> {
    match &proc.kind {
        ProcKind::Nil => Ok(()),
        ProcKind::Send { value, cont, .. } => {
            check_expr(value, bound)?;
            check_scope(cont, bound)
        }
        ProcKind::Recv { binder, cont, .. } => {
            bound.push(binder.clone());
            let result = check_scope(cont, bound);
            bound.pop();
            result
        }
        ProcKind::Sum(l, r) | ProcKind::Par(l, r) => {
            check_scope(l, bound)?;
            check_scope(r, bound)
        }
        ProcKind::Rep(p) => check_scope(p, bound),
        ProcKind::Restrict { body, .. } => check_scope(body, bound),
    }
}

fn check_expr(expr: &Expr, bound: &[String]) -> Result<(), ElabError> {
    match &expr.kind {
        ExprKind::Lit(_) => Ok(()),
        ExprKind::Var(name) => {
            if bound.iter().any(|b| b == name) {
                Ok(())
            } else {
                Err(ElabError::UnboundVariable {
                    name: name.clone(),
                    pos: expr.span.start,
                })
            }
        }
        ExprKind::Add(l, r) | ExprKind::Mul(l, r) => {
            check_expr(l, bound)?;
            check_expr(r, bound)
        }
    }
}

// Scope-checked input, so lookups cannot fail.
fn build(proc: &Proc, env: &Env) -> Term<CcsF> {
    match &proc.kind {
        ProcKind::Nil => Term::new(Ccs::Nil),
        ProcKind::Send { chan, value, cont } => Term::new(Ccs::Send(
            chan.clone(),
            eval_expr(value, env),
            build(cont, env),
        )),
        ProcKind::Recv { chan, binder, cont } => {
            let cont = Rc::clone(cont);
            let binder = binder.clone();
            let env = env.clone();
            Term::new(Ccs::Recv(
                chan.clone(),
                func(move |v| build(&cont, &env.bind(&binder, v))),
            ))
        }
        ProcKind::Sum(l, r) => Term::new(Ccs::Sum(build(l, env), build(r, env))),
        ProcKind::Par(l, r) => Term::new(Ccs::Par(build(l, env), build(r, env))),
        ProcKind::Rep(p) => Term::new(Ccs::Rep(build(p, env))),
        ProcKind::Restrict { chan, body } => {
            Term::new(Ccs::Restrict(chan.clone(), build(body, env)))
        }
    }
}

fn eval_expr(expr: &Expr, env: &Env) -> u64 {
    match &expr.kind {
        ExprKind::Lit(n) => *n,
        ExprKind::Var(name) => env.lookup(name).expect("scope-checked"),
        ExprKind::Add(l, r) => eval_expr(l, env)
            .checked_add(eval_expr(r, env))
            .expect("value expression overflowed 64-bit arithmetic"),
        ExprKind::Mul(l, r) => eval_expr(l, env)
            .checked_mul(eval_expr(r, env))
            .expect("value expression overflowed 64-bit arithmetic"),
    }
}
