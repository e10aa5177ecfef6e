//! The free copointed functor: a behavior layer paired with a copy of the
//! state it was observed from.
//!
//! Rules over the copointed functor can repeat an operand unchanged by
//! projecting the copy instead of rebuilding it from observations, which is
//! exactly what congruence rules need.

use crate::rec::{func, Func, Of, Shape, Value};

/// A retained input together with one behavior layer over it.
pub struct CoPointed<B: Shape, X: Value> {
    pub copy: X,
    pub layer: Of<B, X>,
}

impl<B: Shape, X: Value> CoPointed<B, X> {
    pub fn new(copy: X, layer: Of<B, X>) -> Self {
        CoPointed { copy, layer }
    }
}

impl<B: Shape, X: Value> Clone for CoPointed<B, X> {
    fn clone(&self) -> Self {
        CoPointed {
            copy: self.copy.clone(),
            layer: self.layer.clone(),
        }
    }
}

/// Functorial map: rewrites the copy and every slot of the layer with `f`.
pub fn pmap<B: Shape, X: Value, Y: Value>(f: Func<X, Y>, p: CoPointed<B, X>) -> CoPointed<B, Y> {
    let copy = f(p.copy);
    CoPointed {
        copy,
        layer: B::map(p.layer, f),
    }
}

/// Counit: projects the retained copy.
pub fn counit<B: Shape, X: Value>(p: CoPointed<B, X>) -> X {
    p.copy
}

/// Pairs two functions on a shared argument: `fanout(f, g)(x) = (f(x), g(x))`.
pub fn fanout<X: Value, A: 'static, B: 'static>(f: Func<X, A>, g: Func<X, B>) -> Func<X, (A, B)> {
    func(move |x: X| (f(x.clone()), g(x)))
}

/// Lifts a plain coalgebra to a copointed one by retaining the input.
pub fn ceil_co<B: Shape, X: Value>(g: Func<X, Of<B, X>>) -> Func<X, CoPointed<B, X>> {
    func(move |x: X| CoPointed {
        copy: x.clone(),
        layer: g(x),
    })
}

/// Drops the copy of a copointed coalgebra, keeping the behavior layer.
/// Inverse of [`ceil_co`] when the copointed coalgebra retains its input.
pub fn floor_co<B: Shape, X: Value>(c: Func<X, CoPointed<B, X>>) -> Func<X, Of<B, X>> {
    func(move |x| c(x).layer)
}
