//! Canonical printing of surface trees. Parentheses are inserted exactly
//! where precedence requires, so printing is a fixed point of
//! `parse . pretty`.

use crate::ast::{Expr, ExprKind, Proc, ProcKind};

// Precedence levels, loosest to tightest.
const RESTRICT: u8 = 0;
const PAR: u8 = 1;
const SUM: u8 = 2;
const PREFIX: u8 = 3;

pub fn pretty(proc: &Proc) -> String {
    let mut out = String::new();
    print_proc(proc, RESTRICT, &mut out);
    out
}

fn print_proc(proc: &Proc, min_level: u8, out: &mut String) {
    let level = match &proc.kind {
        ProcKind::Restrict { .. } => RESTRICT,
        ProcKind::Par(_, _) => PAR,
        ProcKind::Sum(_, _) => SUM,
        _ => PREFIX,
    };
    let parens = level < min_level;
    if parens {
        out.push('(');
    }
    match &proc.kind {
        ProcKind::Nil => out.push('0'),
        ProcKind::Send { chan, value, cont } => {
            out.push_str(chan);
            out.push_str("!(");
            print_expr(value, 0, out);
            out.push_str(").");
            print_proc(cont, PREFIX, out);
        }
        ProcKind::Recv { chan, binder, cont } => {
            out.push_str(chan);
            out.push_str("?(");
            out.push_str(binder);
            out.push_str(").");
            print_proc(cont, PREFIX, out);
        }
        ProcKind::Sum(l, r) => {
            print_proc(l, SUM, out);
            out.push_str(" + ");
            print_proc(r, SUM + 1, out);
        }
        ProcKind::Par(l, r) => {
            print_proc(l, PAR, out);
            out.push_str(" | ");
            print_proc(r, PAR + 1, out);
        }
        ProcKind::Rep(p) => {
            out.push_str("rep(");
            print_proc(p, RESTRICT, out);
            out.push(')');
        }
        ProcKind::Restrict { chan, body } => {
            print_proc(body, RESTRICT, out);
            out.push_str(" \\ ");
            out.push_str(chan);
        }
    }
    if parens {
        out.push(')');
    }
}

fn print_expr(expr: &Expr, min_level: u8, out: &mut String) {
    let level = match &expr.kind {
        ExprKind::Add(_, _) => 0,
        ExprKind::Mul(_, _) => 1,
        _ => 2,
    };
    let parens = level < min_level;
    if parens {
        out.push('(');
    }
    match &expr.kind {
        ExprKind::Lit(n) => out.push_str(&n.to_string()),
        ExprKind::Var(name) => out.push_str(name),
        ExprKind::Add(l, r) => {
            print_expr(l, 0, out);
            out.push_str(" + ");
            print_expr(r, 1, out);
        }
        ExprKind::Mul(l, r) => {
            print_expr(l, 1, out);
            out.push_str(" * ");
            print_expr(r, 2, out);
        }
    }
    if parens {
        out.push(')');
    }
}
