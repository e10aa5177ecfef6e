//! Shapes, inductive terms, coinductive behaviors, and the fold/unfold
//! recursion schemes connecting them.
//!
//! A [`Shape`] is a one-slot container: signatures (one layer of syntax) and
//! behavior functors (one layer of observation) both implement it. [`Term`]
//! is the least fixed point of a shape (finite, eagerly built); [`Behavior`]
//! is the greatest fixed point (possibly infinite, expanded on demand, each
//! node forced at most once). [`cata`] consumes terms with an algebra,
//! [`ana`] produces behaviors from a coalgebra.

use std::cell::{OnceCell, RefCell};
use std::rc::Rc;

/// Shared function values. The whole pipeline passes functions around and
/// stores them inside data (receive continuations), so they are reference
/// counted and callable any number of times.
pub type Func<A, B> = Rc<dyn Fn(A) -> B>;

/// Wraps a closure into a [`Func`].
pub fn func<A, B>(f: impl Fn(A) -> B + 'static) -> Func<A, B> {
    Rc::new(f)
}

/// The identity function as a [`Func`].
pub fn ident<A>() -> Func<A, A> {
    Rc::new(|a| a)
}

/// Composition `g` after `f` as a [`Func`].
pub fn compose<A: 'static, B: 'static, C: 'static>(g: Func<B, C>, f: Func<A, B>) -> Func<A, C> {
    func(move |a| g(f(a)))
}

/// Bound satisfied by everything a shape slot may hold: owned data that is
/// cheap to clone (terms and behaviors are `Rc`-backed, so cloning them is a
/// pointer bump).
pub trait Value: Clone + 'static {}
impl<T: Clone + 'static> Value for T {}

/// A parameterized container with one generic slot and a structure-preserving
/// map over that slot.
///
/// `map` must neither invent nor inspect slot values, only pass each one to
/// `f`; the functor laws (identity and composition) are checked by the test
/// suite for every bundled shape.
pub trait Shape: 'static {
    type Of<X: Value>: Value;

    fn map<A: Value, B: Value>(layer: Self::Of<A>, f: Func<A, B>) -> Self::Of<B>;
}

/// One layer of shape `S` with slots of type `X`.
pub type Of<S, X> = <S as Shape>::Of<X>;

/// Finite syntax tree over signature shape `S`.
///
/// Construction is eager and the tree is immutable; sharing is by reference
/// count, so cloning a term is cheap.
pub struct Term<S: Shape>(Rc<Of<S, Term<S>>>);

impl<S: Shape> Term<S> {
    /// Wraps one layer of syntax into a term.
    pub fn new(node: Of<S, Term<S>>) -> Self {
        Term(Rc::new(node))
    }

    /// Exposes the top layer. Inverse of [`Term::new`].
    pub fn node(&self) -> Of<S, Term<S>> {
        (*self.0).clone()
    }
}

impl<S: Shape> Clone for Term<S> {
    fn clone(&self) -> Self {
        Term(Rc::clone(&self.0))
    }
}

// Stack headroom for the recursion schemes: `cata` recurses as deep as the
// term, so grow the stack in segments once the red zone is reached. Terms of
// depth >= 10^5 are supported this way.
const RED_ZONE: usize = 128 * 1024;
const GROW_BY: usize = 16 * 1024 * 1024;

/// Fold: consumes a finite term bottom-up with the algebra `alg`.
///
/// Satisfies `cata(alg, Term::new(s)) == alg(S::map(s, |t| cata(alg, t)))`.
/// Totality of `alg` on every layer occurring in the term is the caller's
/// obligation.
pub fn cata<S: Shape, A: Value>(alg: Func<Of<S, A>, A>, t: &Term<S>) -> A {
    stacker::maybe_grow(RED_ZONE, GROW_BY, || {
        let rec = {
            let alg = alg.clone();
            func(move |sub: Term<S>| cata(alg.clone(), &sub))
        };
        alg(S::map(t.node(), rec))
    })
}

/// Unfold: builds a lazy behavior by repeatedly applying `coalg` from `seed`.
///
/// Expansion is demand-driven: nothing is computed until the result is
/// observed, and each node is expanded exactly once.
pub fn ana<B: Shape, X: Value>(coalg: Func<X, Of<B, X>>, seed: X) -> Behavior<B> {
    Behavior::defer(move || {
        let layer = coalg(seed);
        B::map(layer, func(move |x| ana(coalg.clone(), x)))
    })
}

/// Lazily expanded, memoized tree over behavior shape `B`.
///
/// Each node's layer is computed at most once; every later observation
/// returns the same layer. Nodes are `Rc`-shared and single-threaded by
/// construction (the type is not `Send`), so forcing cannot race.
pub struct Behavior<B: Shape> {
    node: Rc<Node<B>>,
}

struct Node<B: Shape> {
    value: OnceCell<Of<B, Behavior<B>>>,
    thunk: RefCell<Option<Box<dyn FnOnce() -> Of<B, Behavior<B>>>>>,
}

impl<B: Shape> Behavior<B> {
    /// A node whose layer is computed by `thunk` on first observation.
    pub fn defer(thunk: impl FnOnce() -> Of<B, Behavior<B>> + 'static) -> Self {
        Behavior {
            node: Rc::new(Node {
                value: OnceCell::new(),
                thunk: RefCell::new(Some(Box::new(thunk))),
            }),
        }
    }

    /// A node whose layer is already known.
    pub fn from_layer(layer: Of<B, Behavior<B>>) -> Self {
        let cell = OnceCell::new();
        let _ = cell.set(layer);
        Behavior {
            node: Rc::new(Node {
                value: cell,
                thunk: RefCell::new(None),
            }),
        }
    }

    /// Forces this node (at most once) and returns its layer.
    pub fn observe(&self) -> Of<B, Behavior<B>> {
        if let Some(layer) = self.node.value.get() {
            return layer.clone();
        }
        let thunk = self
            .node
            .thunk
            .borrow_mut()
            .take()
            .expect("behavior node observed during its own expansion");
        let layer = thunk();
        // The cell is empty here: we held the unique thunk.
        let _ = self.node.value.set(layer);
        self.node.value.get().expect("just set").clone()
    }

    /// True when both handles point at the same node.
    pub fn same_node(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.node, &other.node)
    }
}

impl<B: Shape> Clone for Behavior<B> {
    fn clone(&self) -> Self {
        Behavior {
            node: Rc::clone(&self.node),
        }
    }
}
