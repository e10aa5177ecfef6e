//! The free monad over a signature: terms with metavariables.
//!
//! Rules whose conclusions nest several constructors (replication steps to a
//! parallel composition wrapping another replication, say) target
//! [`FreeTerm`] rather than a single layer of signature.

use std::rc::Rc;

use crate::rec::{func, ident, Func, Of, Shape, Value};

/// A finite tree of signature layers whose leaves are either metavariables
/// (`Var`) or nothing at all.
pub enum FreeTerm<S: Shape, X: Value> {
    Var(X),
    Op(Rc<Of<S, FreeTerm<S, X>>>),
}

impl<S: Shape, X: Value> FreeTerm<S, X> {
    /// Embeds a metavariable (the monad's `return`).
    pub fn var(x: X) -> Self {
        FreeTerm::Var(x)
    }

    /// Embeds one layer of signature.
    pub fn op(layer: Of<S, FreeTerm<S, X>>) -> Self {
        FreeTerm::Op(Rc::new(layer))
    }
}

impl<S: Shape, X: Value> Clone for FreeTerm<S, X> {
    fn clone(&self) -> Self {
        match self {
            FreeTerm::Var(x) => FreeTerm::Var(x.clone()),
            FreeTerm::Op(node) => FreeTerm::Op(Rc::clone(node)),
        }
    }
}

/// Structural recursion: replaces `Var` by `gen` and every `Op` layer by
/// `alg`, bottom-up.
pub fn eval<S: Shape, X: Value, A: Value>(
    alg: Func<Of<S, A>, A>,
    gen: Func<X, A>,
    ft: FreeTerm<S, X>,
) -> A {
    match ft {
        FreeTerm::Var(x) => gen(x),
        FreeTerm::Op(node) => {
            let rec = {
                let alg = alg.clone();
                let gen = gen.clone();
                func(move |sub| eval(alg.clone(), gen.clone(), sub))
            };
            alg(S::map((*node).clone(), rec))
        }
    }
}

/// Functorial map over the metavariables.
pub fn map_free<S: Shape, X: Value, Y: Value>(
    f: Func<X, Y>,
    ft: FreeTerm<S, X>,
) -> FreeTerm<S, Y> {
    eval(
        func(FreeTerm::op),
        func(move |x| FreeTerm::Var(f(x))),
        ft,
    )
}

/// Monadic bind: substitutes `k` for every metavariable.
pub fn bind<S: Shape, X: Value, Y: Value>(
    ft: FreeTerm<S, X>,
    k: Func<X, FreeTerm<S, Y>>,
) -> FreeTerm<S, Y> {
    eval(func(FreeTerm::op), k, ft)
}

/// Collapses one level of nesting: `flatten = bind(_, ident)`.
pub fn flatten<S: Shape, X: Value>(ft: FreeTerm<S, FreeTerm<S, X>>) -> FreeTerm<S, X> {
    bind(ft, ident())
}

/// Restricts an algebra on free terms to single layers.
/// `floor_free(f) = f . op . map var`.
pub fn floor_free<S: Shape, A: Value>(f: Func<FreeTerm<S, A>, A>) -> Func<Of<S, A>, A> {
    func(move |layer| f(FreeTerm::op(S::map(layer, func(FreeTerm::var)))))
}

/// Extends a single-layer algebra to whole free terms by evaluation.
/// Inverse of [`floor_free`] on single layers.
pub fn ceil_free<S: Shape, A: Value>(g: Func<Of<S, A>, A>) -> Func<FreeTerm<S, A>, A> {
    func(move |ft| eval(g.clone(), ident(), ft))
}
