//! Stream arithmetic: literals and addition interpreted into constant
//! streams by a simple distributive law.
//!
//! A literal emits itself forever; an addition emits the pointwise sum of its
//! operands' emissions, so every label of a term's stream equals the term's
//! total sum. Also hosts the three-state demo transition system used to
//! exhibit full abstraction of unfolds.

use crate::law::{self, DistLaw};
use crate::rec::{cata, func, Behavior, Func, Shape, Term, Value};

/// Signature: numeric literals and binary addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValAdd<X> {
    Val(u64),
    Add(X, X),
}

/// Shape marker for [`ValAdd`].
pub struct ValAddF;

impl Shape for ValAddF {
    type Of<X: Value> = ValAdd<X>;

    fn map<A: Value, B: Value>(layer: ValAdd<A>, f: Func<A, B>) -> ValAdd<B> {
        match layer {
            ValAdd::Val(n) => ValAdd::Val(n),
            ValAdd::Add(l, r) => ValAdd::Add(f(l), f(r)),
        }
    }
}

/// One stream cell: an emitted label and the rest of the stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell<X> {
    pub head: u64,
    pub tail: X,
}

impl<X> Cell<X> {
    pub fn new(head: u64, tail: X) -> Self {
        Cell { head, tail }
    }
}

/// Shape marker for [`Cell`].
pub struct StreamF;

impl Shape for StreamF {
    type Of<X: Value> = Cell<X>;

    fn map<A: Value, B: Value>(layer: Cell<A>, f: Func<A, B>) -> Cell<B> {
        Cell {
            head: layer.head,
            tail: f(layer.tail),
        }
    }
}

pub fn val(n: u64) -> Term<ValAddF> {
    Term::new(ValAdd::Val(n))
}

pub fn add(l: Term<ValAddF>, r: Term<ValAddF>) -> Term<ValAddF> {
    Term::new(ValAdd::Add(l, r))
}

/// Evaluator algebra: combines one layer into the total sum.
pub fn desem_nat(layer: ValAdd<u64>) -> u64 {
    match layer {
        ValAdd::Val(n) => n,
        ValAdd::Add(n, m) => n + m,
    }
}

/// A term's total sum, the fold of [`desem_nat`].
pub fn term_sum(t: &Term<ValAddF>) -> u64 {
    cata(func(desem_nat), t)
}

/// The distributive law: `Val n` emits `n` and repeats itself, `Add` emits
/// the sum of its operands' labels and recurses on their tails.
#[derive(Clone, Copy, Debug, Default)]
pub struct StreamLaw;

impl DistLaw for StreamLaw {
    type Sig = ValAddF;
    type Bhv = StreamF;

    fn dist<X: Value>(&self, layer: ValAdd<Cell<X>>) -> Cell<ValAdd<X>> {
        match layer {
            ValAdd::Val(n) => Cell::new(n, ValAdd::Val(n)),
            ValAdd::Add(l, r) => Cell::new(l.head + r.head, ValAdd::Add(l.tail, r.tail)),
        }
    }
}

/// Stream semantics of a term: the constant stream of its total sum.
pub fn sem_stream(t: &Term<ValAddF>) -> Behavior<StreamF> {
    law::sem(&StreamLaw, t)
}

/// Hand-written recursive transcription of the operational model, kept as an
/// independent oracle for the derived [`law::opsem`].
pub fn opsem_reference(t: &Term<ValAddF>) -> Cell<Term<ValAddF>> {
    match t.node() {
        ValAdd::Val(n) => Cell::new(n, val(n)),
        ValAdd::Add(t1, t2) => {
            let Cell { head: n, tail: t1n } = opsem_reference(&t1);
            let Cell { head: m, tail: t2n } = opsem_reference(&t2);
            Cell::new(n + m, add(t1n, t2n))
        }
    }
}

/// The three-state demo transition system: each state emits one label and
/// moves on. The second and third states are distinct yet emit the same
/// trace, so their unfoldings are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoState {
    X1,
    X2,
    X3,
}

/// Transition map of the demo system.
pub fn demo_step(s: DemoState) -> Cell<DemoState> {
    match s {
        DemoState::X1 => Cell::new(1, DemoState::X2),
        DemoState::X2 => Cell::new(2, DemoState::X3),
        DemoState::X3 => Cell::new(2, DemoState::X3),
    }
}

/// The demo transition map as a coalgebra value.
pub fn demo_coalg() -> Func<DemoState, Cell<DemoState>> {
    func(demo_step)
}

/// First `count` labels of a stream.
pub fn labels(b: &Behavior<StreamF>, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut cur = b.clone();
    for _ in 0..count {
        let cell = cur.observe();
        out.push(cell.head);
        cur = cell.tail;
    }
    out
}
