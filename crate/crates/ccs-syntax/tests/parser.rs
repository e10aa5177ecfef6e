//! Grammar coverage, error positions, the pretty-print fixed point, and
//! equivalence of the bundled sources with the programmatic examples.

use std::fs;
use std::path::PathBuf;

use bialg::equiv::{beh_eq, term_tab, SampleConfig};
use bialg::lang::ccs::{examples, nub_first, outputs, sem_ccs, Ccs};
use ccs_syntax::{elaborate, parse, pretty, ElabError, ParseError, ProcKind};

const SAMPLES: [u64; 4] = [0, 1, 2, 3];

fn program(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../programs")
        .join(name);
    fs::read_to_string(path).expect("bundled program")
}

#[test]
fn parses_the_inactive_process() {
    let ast = parse("0").unwrap();
    assert!(matches!(ast.kind, ProcKind::Nil));
}

#[test]
fn parses_a_parallel_of_prefixes() {
    let ast = parse("a!(3).0 | a?(x).out!(x).0").unwrap();
    let ProcKind::Par(l, r) = &ast.kind else {
        panic!("expected a parallel composition");
    };
    match &l.kind {
        ProcKind::Send { chan, cont, .. } => {
            assert_eq!(chan, "a");
            assert!(matches!(cont.kind, ProcKind::Nil));
        }
        _ => panic!("expected a send on the left"),
    }
    match &r.kind {
        ProcKind::Recv { chan, binder, .. } => {
            assert_eq!(chan, "a");
            assert_eq!(binder, "x");
        }
        _ => panic!("expected a receive on the right"),
    }
}

#[test]
fn incomplete_prefix_is_an_error_with_position() {
    match parse("a!(3)") {
        Err(ParseError::Syntax { pos, expected, .. }) => {
            assert_eq!((pos.line, pos.col), (1, 6));
            assert!(expected.contains('.'), "expected mentions the dot: {expected}");
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn numeric_process_other_than_zero_is_rejected() {
    assert!(matches!(parse("3"), Err(ParseError::Syntax { .. })));
}

#[test]
fn oversized_literals_are_rejected() {
    match parse("a!(99999999999).0") {
        Err(ParseError::NumberTooLarge { pos, .. }) => {
            assert_eq!((pos.line, pos.col), (1, 4));
        }
        other => panic!("expected a literal-size error, got {other:?}"),
    }
}

#[test]
fn reports_line_and_column_across_lines() {
    match parse("0 |\n  5") {
        Err(ParseError::Syntax { pos, .. }) => assert_eq!((pos.line, pos.col), (2, 3)),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn precedence_restriction_is_loosest() {
    // Without parentheses the restriction applies to the whole parallel.
    let ast = parse("a!(1).0 | b!(2).0 \\ c").unwrap();
    assert!(matches!(ast.kind, ProcKind::Restrict { .. }));
    // Parenthesising confines it.
    let ast = parse("a!(1).0 | (b!(2).0 \\ c)").unwrap();
    assert!(matches!(ast.kind, ProcKind::Par(_, _)));
}

#[test]
fn precedence_parallel_binds_looser_than_sum() {
    let ast = parse("0 + 0 | 0").unwrap();
    let ProcKind::Par(l, _) = &ast.kind else {
        panic!("expected a parallel composition at the top");
    };
    assert!(matches!(l.kind, ProcKind::Sum(_, _)));
}

#[test]
fn parallel_and_sum_associate_left() {
    let ast = parse("0 | 0 | 0").unwrap();
    let ProcKind::Par(l, _) = &ast.kind else {
        panic!()
    };
    assert!(matches!(l.kind, ProcKind::Par(_, _)));
    let ast = parse("0 + 0 + 0").unwrap();
    let ProcKind::Sum(l, _) = &ast.kind else {
        panic!()
    };
    assert!(matches!(l.kind, ProcKind::Sum(_, _)));
}

#[test]
fn restrictions_nest_left_to_right() {
    let ast = parse("0 \\ a \\ b").unwrap();
    let ProcKind::Restrict { chan, body } = &ast.kind else {
        panic!()
    };
    assert_eq!(chan, "b");
    assert!(matches!(
        &body.kind,
        ProcKind::Restrict { chan, .. } if chan == "a"
    ));
}

#[test]
fn value_expressions_nest_by_precedence() {
    let t = elaborate(&parse("c!(1 + 2 * 3).0").unwrap()).unwrap();
    match t.node() {
        Ccs::Send(_, v, _) => assert_eq!(v, 7),
        _ => panic!("expected a send"),
    }
    let t = elaborate(&parse("c!((1 + 2) * 3).0").unwrap()).unwrap();
    match t.node() {
        Ccs::Send(_, v, _) => assert_eq!(v, 9),
        _ => panic!("expected a send"),
    }
}

#[test]
fn elaborate_evaluates_under_the_binder_environment() {
    let t = elaborate(&parse("c?(x).d!(x + 1).0").unwrap()).unwrap();
    let Ccs::Recv(chan, k) = t.node() else {
        panic!("expected a receive");
    };
    assert_eq!(chan, "c");
    match k(2).node() {
        Ccs::Send(d, v, rest) => {
            assert_eq!((d.as_str(), v), ("d", 3));
            assert!(matches!(rest.node(), Ccs::Nil));
        }
        _ => panic!("expected the send continuation"),
    }
}

#[test]
fn shadowing_uses_the_innermost_binder() {
    let t = elaborate(&parse("c?(x).c?(x).d!(x).0").unwrap()).unwrap();
    let Ccs::Recv(_, outer) = t.node() else {
        panic!()
    };
    let Ccs::Recv(_, inner) = outer(1).node() else {
        panic!()
    };
    match inner(9).node() {
        Ccs::Send(_, v, _) => assert_eq!(v, 9),
        _ => panic!("expected a send"),
    }
}

#[test]
fn unbound_variables_are_reported_with_their_position() {
    match elaborate(&parse("d!(y).0").unwrap()) {
        Err(ElabError::UnboundVariable { name, pos }) => {
            assert_eq!(name, "y");
            assert_eq!((pos.line, pos.col), (1, 4));
        }
        Ok(_) => panic!("expected an unbound-variable error, got a term"),
    }
}

#[test]
fn binder_does_not_leak_out_of_its_continuation() {
    assert!(matches!(
        elaborate(&parse("c?(x).0 | d!(x).0").unwrap()),
        Err(ElabError::UnboundVariable { .. })
    ));
}

#[test]
fn pretty_print_is_a_fixed_point_on_the_bundled_programs() {
    for name in ["nats.ccs", "counter.ccs", "countertest.ccs"] {
        let src = program(name);
        let once = pretty(&parse(&src).unwrap_or_else(|e| panic!("{name}: {e}")));
        let twice = pretty(&parse(&once).unwrap_or_else(|e| panic!("{name} reprint: {e}")));
        assert_eq!(once, twice, "{name}");
    }
}

// Structural equality up to source spans.
fn same_shape(a: &ccs_syntax::Proc, b: &ccs_syntax::Proc) -> bool {
    use ProcKind::*;
    match (&a.kind, &b.kind) {
        (Nil, Nil) => true,
        (
            Send { chan: c1, value: v1, cont: k1 },
            Send { chan: c2, value: v2, cont: k2 },
        ) => c1 == c2 && same_expr(v1, v2) && same_shape(k1, k2),
        (
            Recv { chan: c1, binder: b1, cont: k1 },
            Recv { chan: c2, binder: b2, cont: k2 },
        ) => c1 == c2 && b1 == b2 && same_shape(k1, k2),
        (Sum(l1, r1), Sum(l2, r2)) | (Par(l1, r1), Par(l2, r2)) => {
            same_shape(l1, l2) && same_shape(r1, r2)
        }
        (Rep(p1), Rep(p2)) => same_shape(p1, p2),
        (
            Restrict { chan: c1, body: p1 },
            Restrict { chan: c2, body: p2 },
        ) => c1 == c2 && same_shape(p1, p2),
        _ => false,
    }
}

fn same_expr(a: &ccs_syntax::Expr, b: &ccs_syntax::Expr) -> bool {
    use ccs_syntax::ExprKind::*;
    match (&a.kind, &b.kind) {
        (Lit(n), Lit(m)) => n == m,
        (Var(x), Var(y)) => x == y,
        (Add(l1, r1), Add(l2, r2)) | (Mul(l1, r1), Mul(l2, r2)) => {
            same_expr(l1, l2) && same_expr(r1, r2)
        }
        _ => false,
    }
}

#[test]
fn pretty_print_round_trips_structurally() {
    let sources = [
        "0",
        "a!(1).0",
        "a?(x).b!(x * 2 + 1).0",
        "(0 + a!(1).0) | rep(b?(y).0) \\ a \\ b",
        "a!(1).(0 | 0) + b?(z).(0 + 0)",
    ];
    for src in sources {
        let ast = parse(src).unwrap();
        let printed = pretty(&ast);
        let reparsed = parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert!(same_shape(&ast, &reparsed), "{src} vs {printed}");
    }
}

#[test]
fn bundled_nats_elaborates_to_the_example_process() {
    let t = elaborate(&parse(&program("nats.ccs")).unwrap()).unwrap();
    let reference = examples::nats();
    assert_eq!(term_tab(&t, &SAMPLES), term_tab(&reference, &SAMPLES));
    assert!(beh_eq(
        &sem_ccs(&t),
        &sem_ccs(&reference),
        &SampleConfig::with_depth(4)
    ));
    assert_eq!(outputs(&sem_ccs(&t), 5, usize::MAX), vec![0, 1, 2, 3, 4]);
}

#[test]
fn bundled_counter_test_elaborates_to_the_example_process() {
    let t = elaborate(&parse(&program("countertest.ccs")).unwrap()).unwrap();
    let reference = examples::counter_test();
    assert_eq!(term_tab(&t, &SAMPLES), term_tab(&reference, &SAMPLES));
    assert!(beh_eq(
        &sem_ccs(&t),
        &sem_ccs(&reference),
        &SampleConfig::with_depth(4)
    ));
    let all = outputs(&sem_ccs(&t), usize::MAX, usize::MAX);
    assert_eq!(nub_first(&all), vec![4, 3, 2, 1]);
}

#[test]
fn bundled_counter_parses_and_hides_its_state_channel() {
    let t = elaborate(&parse(&program("counter.ccs")).unwrap()).unwrap();
    assert!(matches!(t.node(), Ccs::Restrict(c, _) if c == "init"));
}
