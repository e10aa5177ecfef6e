//! Bounded-depth behavioral equality, truncation, trace trees, and
//! deterministic term generators.
//!
//! Behaviors may be infinite and may branch through functions (a receive's
//! successor depends on the received value), so equality is decided on
//! finite, fully materialized truncations: function-valued slots become
//! finite tables over a sample set, and every reported result carries the
//! depth and sample set that produced it.

pub mod gen;

use std::fmt;
use std::rc::Rc;

use crate::free::FreeTerm;
use crate::lang::ccs::{Act, Acts, ActsF, Ccs, CcsF, Chan, Val};
use crate::lang::razor::{BranchF, Razor, RazorF, StopAndGo, StopAndGoF};
use crate::lang::stream::{Cell, StreamF, ValAdd, ValAddF};
use crate::rec::{func, Behavior, Func, Of, Shape, Term, Value};

/// Depth, receive-value sample set, and generator seed for one comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub depth: usize,
    pub receive_samples: Vec<Val>,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(depth: usize, receive_samples: Vec<Val>, seed: u64) -> Self {
        assert!(!receive_samples.is_empty(), "sample set must be nonempty");
        SampleConfig {
            depth,
            receive_samples,
            seed,
        }
    }

    pub fn with_depth(depth: usize) -> Self {
        SampleConfig {
            depth,
            ..SampleConfig::default()
        }
    }
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            depth: 5,
            receive_samples: vec![0, 1, 2, 3],
            seed: 0,
        }
    }
}

/// Shapes whose layers can be fully materialized: slot values are converted
/// by an explicit function and function-valued slots become finite tables
/// over a sample set.
pub trait Materialize: Shape {
    /// A finite, function-free image of one layer.
    type Table<T: Value>: Value;

    fn tabulate<X: Value, T: Value>(
        layer: Self::Of<X>,
        samples: &[Val],
        conv: Func<X, T>,
    ) -> Self::Table<T>;

    /// Structural equality of two tables, delegating slot comparison.
    fn table_eq<T: Value>(
        a: &Self::Table<T>,
        b: &Self::Table<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool;

    /// Rendering with an explicit slot renderer, used for diagnostics.
    fn table_fmt<T: Value>(table: &Self::Table<T>, slot: &mut dyn FnMut(&T) -> String) -> String;
}

impl Materialize for StreamF {
    type Table<T: Value> = Cell<T>;

    fn tabulate<X: Value, T: Value>(layer: Cell<X>, _samples: &[Val], conv: Func<X, T>) -> Cell<T> {
        Cell {
            head: layer.head,
            tail: conv(layer.tail),
        }
    }

    fn table_eq<T: Value>(
        a: &Cell<T>,
        b: &Cell<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        a.head == b.head && slot_eq(&a.tail, &b.tail)
    }

    fn table_fmt<T: Value>(table: &Cell<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        format!("{} :< {}", table.head, slot(&table.tail))
    }
}

impl Materialize for ValAddF {
    type Table<T: Value> = ValAdd<T>;

    fn tabulate<X: Value, T: Value>(
        layer: ValAdd<X>,
        _samples: &[Val],
        conv: Func<X, T>,
    ) -> ValAdd<T> {
        ValAddF::map(layer, conv)
    }

    fn table_eq<T: Value>(
        a: &ValAdd<T>,
        b: &ValAdd<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        match (a, b) {
            (ValAdd::Val(n), ValAdd::Val(m)) => n == m,
            (ValAdd::Add(a1, a2), ValAdd::Add(b1, b2)) => slot_eq(a1, b1) && slot_eq(a2, b2),
            _ => false,
        }
    }

    fn table_fmt<T: Value>(table: &ValAdd<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        match table {
            ValAdd::Val(n) => format!("val {n}"),
            ValAdd::Add(l, r) => format!("add({}, {})", slot(l), slot(r)),
        }
    }
}

impl Materialize for RazorF {
    type Table<T: Value> = Razor<T>;

    fn tabulate<X: Value, T: Value>(
        layer: Razor<X>,
        _samples: &[Val],
        conv: Func<X, T>,
    ) -> Razor<T> {
        RazorF::map(layer, conv)
    }

    fn table_eq<T: Value>(
        a: &Razor<T>,
        b: &Razor<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        match (a, b) {
            (Razor::Val(n), Razor::Val(m)) => n == m,
            (Razor::Add(a1, a2), Razor::Add(b1, b2)) => slot_eq(a1, b1) && slot_eq(a2, b2),
            (Razor::Amb(a1, a2), Razor::Amb(b1, b2)) => slot_eq(a1, b1) && slot_eq(a2, b2),
            _ => false,
        }
    }

    fn table_fmt<T: Value>(table: &Razor<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        match table {
            Razor::Val(n) => format!("val {n}"),
            Razor::Add(l, r) => format!("add({}, {})", slot(l), slot(r)),
            Razor::Amb(l, r) => format!("amb({}, {})", slot(l), slot(r)),
        }
    }
}

impl Materialize for StopAndGoF {
    type Table<T: Value> = StopAndGo<T>;

    fn tabulate<X: Value, T: Value>(
        layer: StopAndGo<X>,
        _samples: &[Val],
        conv: Func<X, T>,
    ) -> StopAndGo<T> {
        StopAndGoF::map(layer, conv)
    }

    fn table_eq<T: Value>(
        a: &StopAndGo<T>,
        b: &StopAndGo<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        match (a, b) {
            (StopAndGo::Stopped(n), StopAndGo::Stopped(m)) => n == m,
            (StopAndGo::Step(xs), StopAndGo::Step(ys)) => {
                xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| slot_eq(x, y))
            }
            _ => false,
        }
    }

    fn table_fmt<T: Value>(table: &StopAndGo<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        match table {
            StopAndGo::Stopped(n) => format!("stop {n}"),
            StopAndGo::Step(xs) => {
                let parts: Vec<String> = xs.iter().map(&mut *slot).collect();
                format!("step[{}]", parts.join(", "))
            }
        }
    }
}

impl Materialize for BranchF {
    type Table<T: Value> = Vec<T>;

    fn tabulate<X: Value, T: Value>(layer: Vec<X>, _samples: &[Val], conv: Func<X, T>) -> Vec<T> {
        layer.into_iter().map(|x| conv(x)).collect()
    }

    fn table_eq<T: Value>(
        a: &Vec<T>,
        b: &Vec<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| slot_eq(x, y))
    }

    fn table_fmt<T: Value>(table: &Vec<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        let parts: Vec<String> = table.iter().map(&mut *slot).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A materialized action: receives become finite `(value, successor)` tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActTab<T> {
    Send(Chan, Val, T),
    Recv(Chan, Vec<(Val, T)>),
    Silent(T),
}

impl Materialize for ActsF {
    type Table<T: Value> = Vec<ActTab<T>>;

    fn tabulate<X: Value, T: Value>(
        layer: Acts<X>,
        samples: &[Val],
        conv: Func<X, T>,
    ) -> Vec<ActTab<T>> {
        layer
            .0
            .into_iter()
            .map(|act| match act {
                Act::Send(c, v, x) => ActTab::Send(c, v, conv(x)),
                Act::Recv(c, k) => ActTab::Recv(
                    c,
                    samples.iter().map(|&v| (v, conv(k(v)))).collect(),
                ),
                Act::Silent(x) => ActTab::Silent(conv(x)),
            })
            .collect()
    }

    fn table_eq<T: Value>(
        a: &Vec<ActTab<T>>,
        b: &Vec<ActTab<T>>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        a.len() == b.len()
            && a.iter().zip(b).all(|(x, y)| match (x, y) {
                (ActTab::Send(c1, v1, t1), ActTab::Send(c2, v2, t2)) => {
                    c1 == c2 && v1 == v2 && slot_eq(t1, t2)
                }
                (ActTab::Recv(c1, tab1), ActTab::Recv(c2, tab2)) => {
                    c1 == c2
                        && tab1.len() == tab2.len()
                        && tab1
                            .iter()
                            .zip(tab2)
                            .all(|((v1, t1), (v2, t2))| v1 == v2 && slot_eq(t1, t2))
                }
                (ActTab::Silent(t1), ActTab::Silent(t2)) => slot_eq(t1, t2),
                _ => false,
            })
    }

    fn table_fmt<T: Value>(table: &Vec<ActTab<T>>, slot: &mut dyn FnMut(&T) -> String) -> String {
        let parts: Vec<String> = table
            .iter()
            .map(|act| match act {
                ActTab::Send(c, v, t) => format!("{c}!({v}) -> {}", slot(t)),
                ActTab::Recv(c, tab) => {
                    let entries: Vec<String> =
                        tab.iter().map(|(v, t)| format!("{v} -> {}", slot(t))).collect();
                    format!("{c}?{{{}}}", entries.join(", "))
                }
                ActTab::Silent(t) => format!("tau -> {}", slot(t)),
            })
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A materialized process layer: receive binders become finite tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CcsTab<T> {
    Send(Chan, Val, T),
    Recv(Chan, Vec<(Val, T)>),
    Sum(T, T),
    Nil,
    Par(T, T),
    Rep(T),
    Restrict(Chan, T),
}

impl Materialize for CcsF {
    type Table<T: Value> = CcsTab<T>;

    fn tabulate<X: Value, T: Value>(
        layer: Ccs<X>,
        samples: &[Val],
        conv: Func<X, T>,
    ) -> CcsTab<T> {
        match layer {
            Ccs::Send(c, v, x) => CcsTab::Send(c, v, conv(x)),
            Ccs::Recv(c, k) => {
                CcsTab::Recv(c, samples.iter().map(|&v| (v, conv(k(v)))).collect())
            }
            Ccs::Sum(l, r) => CcsTab::Sum(conv(l), conv(r)),
            Ccs::Nil => CcsTab::Nil,
            Ccs::Par(l, r) => CcsTab::Par(conv(l), conv(r)),
            Ccs::Rep(p) => CcsTab::Rep(conv(p)),
            Ccs::Restrict(c, p) => CcsTab::Restrict(c, conv(p)),
        }
    }

    fn table_eq<T: Value>(
        a: &CcsTab<T>,
        b: &CcsTab<T>,
        slot_eq: &mut dyn FnMut(&T, &T) -> bool,
    ) -> bool {
        match (a, b) {
            (CcsTab::Send(c1, v1, t1), CcsTab::Send(c2, v2, t2)) => {
                c1 == c2 && v1 == v2 && slot_eq(t1, t2)
            }
            (CcsTab::Recv(c1, tab1), CcsTab::Recv(c2, tab2)) => {
                c1 == c2
                    && tab1.len() == tab2.len()
                    && tab1
                        .iter()
                        .zip(tab2)
                        .all(|((v1, t1), (v2, t2))| v1 == v2 && slot_eq(t1, t2))
            }
            (CcsTab::Sum(a1, a2), CcsTab::Sum(b1, b2)) => slot_eq(a1, b1) && slot_eq(a2, b2),
            (CcsTab::Nil, CcsTab::Nil) => true,
            (CcsTab::Par(a1, a2), CcsTab::Par(b1, b2)) => slot_eq(a1, b1) && slot_eq(a2, b2),
            (CcsTab::Rep(a1), CcsTab::Rep(b1)) => slot_eq(a1, b1),
            (CcsTab::Restrict(c1, a1), CcsTab::Restrict(c2, b1)) => c1 == c2 && slot_eq(a1, b1),
            _ => false,
        }
    }

    fn table_fmt<T: Value>(table: &CcsTab<T>, slot: &mut dyn FnMut(&T) -> String) -> String {
        match table {
            CcsTab::Send(c, v, t) => format!("{c}!({v}).{}", slot(t)),
            CcsTab::Recv(c, tab) => {
                let entries: Vec<String> =
                    tab.iter().map(|(v, t)| format!("{v} -> {}", slot(t))).collect();
                format!("{c}?{{{}}}", entries.join(", "))
            }
            CcsTab::Sum(l, r) => format!("({} + {})", slot(l), slot(r)),
            CcsTab::Nil => "0".to_string(),
            CcsTab::Par(l, r) => format!("({} | {})", slot(l), slot(r)),
            CcsTab::Rep(p) => format!("rep({})", slot(p)),
            CcsTab::Restrict(c, p) => format!("({} \\ {c})", slot(p)),
        }
    }
}

/// A finite, fully materialized truncation of a behavior: `Cut` marks where
/// the depth budget ran out.
pub enum TruncTree<B: Materialize> {
    Cut,
    Node(Rc<B::Table<TruncTree<B>>>),
}

impl<B: Materialize> Clone for TruncTree<B> {
    fn clone(&self) -> Self {
        match self {
            TruncTree::Cut => TruncTree::Cut,
            TruncTree::Node(t) => TruncTree::Node(Rc::clone(t)),
        }
    }
}

impl<B: Materialize> PartialEq for TruncTree<B> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (TruncTree::Cut, TruncTree::Cut) => true,
            (TruncTree::Node(a), TruncTree::Node(b)) => {
                B::table_eq(a, b, &mut |x: &TruncTree<B>, y: &TruncTree<B>| x == y)
            }
            _ => false,
        }
    }
}

impl<B: Materialize> Eq for TruncTree<B> {}

impl<B: Materialize> fmt::Debug for TruncTree<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncTree::Cut => write!(f, "..."),
            TruncTree::Node(t) => {
                write!(f, "{}", B::table_fmt(t, &mut |c: &TruncTree<B>| format!("{c:?}")))
            }
        }
    }
}

impl<B: Materialize> TruncTree<B> {
    /// True when `self` equals `other` with extra `Cut`s allowed in `self`:
    /// a shallower truncation is a prefix of a deeper one.
    pub fn is_prefix_of(&self, other: &TruncTree<B>) -> bool {
        match (self, other) {
            (TruncTree::Cut, _) => true,
            (TruncTree::Node(a), TruncTree::Node(b)) => {
                B::table_eq(a, b, &mut |x: &TruncTree<B>, y: &TruncTree<B>| {
                    x.is_prefix_of(y)
                })
            }
            (TruncTree::Node(_), TruncTree::Cut) => false,
        }
    }
}

/// Forces exactly the layers within `cfg.depth` and materializes them,
/// tabulating receive continuations at `cfg.receive_samples`.
pub fn truncate<B: Materialize>(b: &Behavior<B>, cfg: &SampleConfig) -> TruncTree<B> {
    truncate_at(b, cfg.depth, &cfg.receive_samples)
}

fn truncate_at<B: Materialize>(b: &Behavior<B>, depth: usize, samples: &[Val]) -> TruncTree<B> {
    if depth == 0 {
        return TruncTree::Cut;
    }
    let samples_owned: Vec<Val> = samples.to_vec();
    let table = B::tabulate(
        b.observe(),
        samples,
        func(move |child: Behavior<B>| truncate_at(&child, depth - 1, &samples_owned)),
    );
    TruncTree::Node(Rc::new(table))
}

/// Bounded behavioral equality: structural equality of the two truncations.
pub fn beh_eq<B: Materialize>(a: &Behavior<B>, b: &Behavior<B>, cfg: &SampleConfig) -> bool {
    truncate(a, cfg) == truncate(b, cfg)
}

/// The depth-bounded trace tree of iterating `coalg` from `seed`, built
/// directly (no behavior nodes involved). Produces the same shape as
/// `truncate(ana(coalg, seed), cfg)`.
pub fn trace_tree<B: Materialize, X: Value>(
    coalg: &Func<X, Of<B, X>>,
    seed: X,
    cfg: &SampleConfig,
) -> TruncTree<B> {
    trace_tree_at(coalg, seed, cfg.depth, &cfg.receive_samples)
}

fn trace_tree_at<B: Materialize, X: Value>(
    coalg: &Func<X, Of<B, X>>,
    seed: X,
    depth: usize,
    samples: &[Val],
) -> TruncTree<B> {
    if depth == 0 {
        return TruncTree::Cut;
    }
    let samples_owned: Vec<Val> = samples.to_vec();
    let coalg_inner = coalg.clone();
    let table = B::tabulate(
        coalg(seed),
        samples,
        func(move |next: X| trace_tree_at(&coalg_inner, next, depth - 1, &samples_owned)),
    );
    TruncTree::Node(Rc::new(table))
}

/// A fully materialized term: receive binders tabulated at the sample set.
pub struct TermTab<S: Materialize>(pub Rc<S::Table<TermTab<S>>>);

impl<S: Materialize> Clone for TermTab<S> {
    fn clone(&self) -> Self {
        TermTab(Rc::clone(&self.0))
    }
}

impl<S: Materialize> PartialEq for TermTab<S> {
    fn eq(&self, other: &Self) -> bool {
        S::table_eq(&self.0, &other.0, &mut |x: &TermTab<S>, y: &TermTab<S>| {
            x == y
        })
    }
}

impl<S: Materialize> Eq for TermTab<S> {}

impl<S: Materialize> fmt::Debug for TermTab<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            S::table_fmt(&self.0, &mut |c: &TermTab<S>| format!("{c:?}"))
        )
    }
}

/// Materializes a term for structural comparison.
pub fn term_tab<S: Materialize>(t: &Term<S>, samples: &[Val]) -> TermTab<S> {
    let samples_owned: Vec<Val> = samples.to_vec();
    TermTab(Rc::new(S::tabulate(
        t.node(),
        samples,
        func(move |child: Term<S>| term_tab(&child, &samples_owned)),
    )))
}

/// A fully materialized free term over signature `S` with `u64` leaves.
pub enum FreeTab<S: Materialize> {
    Var(u64),
    Op(Rc<S::Table<FreeTab<S>>>),
}

impl<S: Materialize> Clone for FreeTab<S> {
    fn clone(&self) -> Self {
        match self {
            FreeTab::Var(x) => FreeTab::Var(*x),
            FreeTab::Op(t) => FreeTab::Op(Rc::clone(t)),
        }
    }
}

impl<S: Materialize> PartialEq for FreeTab<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FreeTab::Var(a), FreeTab::Var(b)) => a == b,
            (FreeTab::Op(a), FreeTab::Op(b)) => {
                S::table_eq(a, b, &mut |x: &FreeTab<S>, y: &FreeTab<S>| x == y)
            }
            _ => false,
        }
    }
}

impl<S: Materialize> Eq for FreeTab<S> {}

impl<S: Materialize> fmt::Debug for FreeTab<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeTab::Var(x) => write!(f, "?{x}"),
            FreeTab::Op(t) => write!(
                f,
                "{}",
                S::table_fmt(t, &mut |c: &FreeTab<S>| format!("{c:?}"))
            ),
        }
    }
}

/// Materializes a free term with `u64` metavariables.
pub fn free_tab<S: Materialize>(ft: &FreeTerm<S, u64>, samples: &[Val]) -> FreeTab<S> {
    match ft {
        FreeTerm::Var(x) => FreeTab::Var(*x),
        FreeTerm::Op(node) => {
            let samples_owned: Vec<Val> = samples.to_vec();
            FreeTab::Op(Rc::new(S::tabulate(
                (**node).clone(),
                samples,
                func(move |child: FreeTerm<S, u64>| free_tab(&child, &samples_owned)),
            )))
        }
    }
}

/// Materialized equality of a single layer over `u64` slots, used by the
/// functor-law checks.
pub fn plain_layer_eq<S: Materialize>(a: Of<S, u64>, b: Of<S, u64>, samples: &[Val]) -> bool {
    let ta = S::tabulate(a, samples, func(|n: u64| n));
    let tb = S::tabulate(b, samples, func(|n: u64| n));
    S::table_eq(&ta, &tb, &mut |n, m| n == m)
}

/// Materialized equality of a doubly nested layer `B(S(u64))`, used by the
/// naturality checks.
pub fn nested_layer_eq<B: Materialize, S: Materialize>(
    a: Of<B, Of<S, u64>>,
    b: Of<B, Of<S, u64>>,
    samples: &[Val],
) -> bool {
    let tab = |layer: Of<B, Of<S, u64>>| {
        let samples_owned: Vec<Val> = samples.to_vec();
        B::tabulate(
            layer,
            samples,
            func(move |inner: Of<S, u64>| {
                S::tabulate(inner, &samples_owned, func(|n: u64| n))
            }),
        )
    };
    B::table_eq(&tab(a), &tab(b), &mut |x: &S::Table<u64>, y: &S::Table<u64>| {
        S::table_eq(x, y, &mut |n, m| n == m)
    })
}

/// Materialized equality of a behavior layer over free terms `B(S*(u64))`,
/// used by the rule naturality checks.
pub fn rule_output_eq<B: Materialize, S: Materialize>(
    a: Of<B, FreeTerm<S, u64>>,
    b: Of<B, FreeTerm<S, u64>>,
    samples: &[Val],
) -> bool {
    let tab = |layer: Of<B, FreeTerm<S, u64>>| {
        let samples_owned: Vec<Val> = samples.to_vec();
        B::tabulate(
            layer,
            samples,
            func(move |ft: FreeTerm<S, u64>| free_tab(&ft, &samples_owned)),
        )
    };
    B::table_eq(&tab(a), &tab(b), &mut |x: &FreeTab<S>, y: &FreeTab<S>| {
        x == y
    })
}

/// Canonical rendering of a CCS behavior to bounded depth: per layer, one
/// string per action with its successor rendered recursively, the list
/// sorted, and (optionally) duplicates removed. Two behaviors with equal
/// canonical strings are bounded-depth bisimilar up to action reordering
/// (and duplication, when `dedup` is set).
pub fn canon_acts(b: &Behavior<ActsF>, depth: usize, samples: &[Val], dedup: bool) -> String {
    if depth == 0 {
        return "...".to_string();
    }
    let mut parts: Vec<String> = b
        .observe()
        .0
        .into_iter()
        .map(|act| match act {
            Act::Send(c, v, next) => {
                format!("{c}!({v}).{}", canon_acts(&next, depth - 1, samples, dedup))
            }
            Act::Recv(c, k) => {
                let entries: Vec<String> = samples
                    .iter()
                    .map(|&v| format!("{v}:{}", canon_acts(&k(v), depth - 1, samples, dedup)))
                    .collect();
                format!("{c}?[{}]", entries.join(","))
            }
            Act::Silent(next) => format!("tau.{}", canon_acts(&next, depth - 1, samples, dedup)),
        })
        .collect();
    parts.sort();
    if dedup {
        parts.dedup();
    }
    format!("{{{}}}", parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::ccs::{self, sem_ccs};
    use crate::lang::razor::{self, sem_razor, StopAndGo};
    use crate::lang::stream::{sem_stream, DemoState};
    use crate::rec::ana;
    use crate::{gsos, lang};

    fn const_stream(n: u64) -> Behavior<StreamF> {
        ana(func(move |()| Cell::new(n, ())), ())
    }

    #[test]
    fn truncate_cuts_at_the_depth_budget() {
        let tree = truncate(&const_stream(0), &SampleConfig::with_depth(2));
        let expect: TruncTree<StreamF> = TruncTree::Node(Rc::new(Cell::new(
            0,
            TruncTree::Node(Rc::new(Cell::new(0, TruncTree::Cut))),
        )));
        assert_eq!(tree, expect);
    }

    #[test]
    fn truncate_of_a_leaf_is_depth_independent() {
        let b = sem_razor(&razor::val(3));
        let expect: TruncTree<StopAndGoF> = TruncTree::Node(Rc::new(StopAndGo::Stopped(3)));
        assert_eq!(truncate(&b, &SampleConfig::with_depth(1)), expect);
        assert_eq!(truncate(&b, &SampleConfig::with_depth(9)), expect);
    }

    #[test]
    fn truncate_tabulates_receive_continuations() {
        let b = sem_ccs(&ccs::recv("a", |_| ccs::nil()));
        let tree = truncate(&b, &SampleConfig::with_depth(1));
        match tree {
            TruncTree::Node(table) => {
                assert_eq!(table.len(), 1);
                match &table[0] {
                    ActTab::Recv(c, entries) => {
                        assert_eq!(c, "a");
                        assert_eq!(entries.len(), 4);
                        assert!(entries.iter().all(|(_, t)| *t == TruncTree::Cut));
                    }
                    _ => panic!("expected a receive"),
                }
            }
            TruncTree::Cut => panic!("expected a node"),
        }
    }

    #[test]
    fn beh_eq_accepts_equal_streams_and_rejects_different_leaves() {
        let cfg = SampleConfig::with_depth(10);
        assert!(beh_eq(
            &sem_stream(&lang::stream::add(lang::stream::val(1), lang::stream::val(2))),
            &sem_stream(&lang::stream::val(3)),
            &cfg
        ));
        assert!(!beh_eq(
            &sem_razor(&razor::val(1)),
            &sem_razor(&razor::val(2)),
            &SampleConfig::with_depth(3)
        ));
    }

    #[test]
    fn trace_tree_matches_truncate_of_the_unfold() {
        let coalg = lang::stream::demo_coalg();
        let cfg = SampleConfig::with_depth(3);
        let direct: TruncTree<StreamF> = trace_tree(&coalg, DemoState::X1, &cfg);
        let b: Behavior<StreamF> = ana(coalg.clone(), DemoState::X1);
        let via_ana = truncate(&b, &cfg);
        assert_eq!(direct, via_ana);
        let labels = match &direct {
            TruncTree::Node(c1) => {
                let l1 = c1.head;
                match &c1.tail {
                    TruncTree::Node(c2) => {
                        let l2 = c2.head;
                        match &c2.tail {
                            TruncTree::Node(c3) => vec![l1, l2, c3.head],
                            _ => panic!("depth 3 expected"),
                        }
                    }
                    _ => panic!("depth 2 expected"),
                }
            }
            _ => panic!("depth 1 expected"),
        };
        assert_eq!(labels, vec![1, 2, 2]);
    }

    #[test]
    fn trace_tree_of_the_inactive_process_is_an_empty_leaf() {
        let coalg = gsos::opsem_coalg(&ccs::CcsRules);
        let tree: TruncTree<ActsF> = trace_tree(&coalg, ccs::nil(), &SampleConfig::with_depth(4));
        match tree {
            TruncTree::Node(table) => assert!(table.is_empty()),
            TruncTree::Cut => panic!("expected a node"),
        }
    }

    #[test]
    fn shallower_truncations_are_prefixes_of_deeper_ones() {
        let mut rng = gen::Rng::new(99);
        for _ in 0..20 {
            let t = gen::ccs_term(&mut rng, 6);
            let b = sem_ccs(&t);
            for k in 1..4 {
                let shallow = truncate(&b, &SampleConfig::with_depth(k));
                let deep = truncate(&b, &SampleConfig::with_depth(k + 1));
                assert!(shallow.is_prefix_of(&deep));
            }
        }
    }

    #[test]
    fn beh_eq_is_an_equivalence_on_samples() {
        let cfg = SampleConfig::with_depth(4);
        let mut rng = gen::Rng::new(5);
        let terms: Vec<_> = (0..6).map(|_| gen::razor_term(&mut rng, 7, true)).collect();
        let behaviors: Vec<_> = terms.iter().map(sem_razor).collect();
        for a in &behaviors {
            assert!(beh_eq(a, a, &cfg));
            for b in &behaviors {
                assert_eq!(beh_eq(a, b, &cfg), beh_eq(b, a, &cfg));
                for c in &behaviors {
                    if beh_eq(a, b, &cfg) && beh_eq(b, c, &cfg) {
                        assert!(beh_eq(a, c, &cfg));
                    }
                }
            }
        }
    }

    fn ccs_size_sampled(t: &crate::rec::Term<CcsF>) -> usize {
        match t.node() {
            Ccs::Nil => 1,
            Ccs::Send(_, _, p) => 1 + ccs_size_sampled(&p),
            // Generated continuations share one shape across values.
            Ccs::Recv(_, k) => 1 + ccs_size_sampled(&k(0)),
            Ccs::Sum(l, r) | Ccs::Par(l, r) => 1 + ccs_size_sampled(&l) + ccs_size_sampled(&r),
            Ccs::Rep(p) | Ccs::Restrict(_, p) => 1 + ccs_size_sampled(&p),
        }
    }

    #[test]
    fn generators_respect_their_size_budget() {
        let mut rng = gen::Rng::new(0x512E);
        for _ in 0..200 {
            let size = 1 + rng.below(12) as usize;
            assert!(ccs_size_sampled(&gen::ccs_term(&mut rng, size)) <= size);
            assert!(
                crate::lang::razor::term_size(&gen::razor_term(&mut rng, size, true)) <= size
            );
        }
    }

    #[test]
    fn generators_are_deterministic_and_respect_floors() {
        let s1 = gen::stream_term(&mut gen::Rng::new(11), 9);
        let s2 = gen::stream_term(&mut gen::Rng::new(11), 9);
        assert_eq!(term_tab(&s1, &[0]), term_tab(&s2, &[0]));
        let c1 = gen::ccs_term(&mut gen::Rng::new(12), 8);
        let c2 = gen::ccs_term(&mut gen::Rng::new(12), 8);
        let samples = [0, 1, 2, 3];
        assert_eq!(term_tab(&c1, &samples), term_tab(&c2, &samples));
        // Size 1 pins the shape entirely.
        let nil_tab = term_tab(&ccs::nil(), &samples);
        assert_eq!(term_tab(&gen::ccs_term(&mut gen::Rng::new(3), 1), &samples), nil_tab);
        match gen::stream_term(&mut gen::Rng::new(4), 1).node() {
            ValAdd::Val(_) => {}
            _ => panic!("size one must be a literal"),
        }
    }
}
