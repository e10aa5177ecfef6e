//! GSOS rules and the distributive law recovered from them.
//!
//! A [`RhoRule`] maps one layer of syntax over copointed behaviors to one
//! behavior layer over free terms: premises may use both an operand's
//! observation and the operand itself, and conclusions may nest arbitrarily
//! many constructors. [`rho_to_lambda`] turns such a rule into a distributive
//! law of the free monad over the copointed functor, from which the
//! operational model [`opsem`], the denotational model [`desem`] and the
//! universal semantics [`sem`] are derived exactly as in [`crate::law`], with
//! floor/ceiling conversions making the carriers match.

use crate::copointed::{ceil_co, counit, floor_co, pmap, CoPointed};
use crate::free::{ceil_free, eval, flatten, floor_free, map_free, FreeTerm};
use crate::rec::{ana, cata, func, Behavior, Func, Of, Shape, Term, Value};

/// A GSOS rule for signature `Sig` and behavior `Bhv`.
///
/// `rho` must be uniform in `X` (same convention as
/// [`crate::law::DistLaw::dist`]); naturality is checked by the test suite.
pub trait RhoRule: Clone + 'static {
    type Sig: Shape;
    type Bhv: Shape;

    fn rho<X: Value>(
        &self,
        layer: Of<Self::Sig, CoPointed<Self::Bhv, X>>,
    ) -> Of<Self::Bhv, FreeTerm<Self::Sig, X>>;
}

/// The distributive law induced by a rule: evaluation with the rule on `Op`
/// layers and copy-preserving reinjection on `Var` leaves.
///
/// The copy component of the result is the input free term with every
/// metavariable replaced by its retained copy; the behavior component applies
/// the rule and flattens the doubled free-term nesting.
pub fn rho_to_lambda<R: RhoRule, X: Value>(
    rule: &R,
    ft: FreeTerm<R::Sig, CoPointed<R::Bhv, X>>,
) -> CoPointed<R::Bhv, FreeTerm<R::Sig, X>> {
    let gen = func(|p: CoPointed<R::Bhv, X>| pmap(func(FreeTerm::var), p));
    let alg = {
        let rule = rule.clone();
        func(
            move |layer: Of<R::Sig, CoPointed<R::Bhv, FreeTerm<R::Sig, X>>>| {
                let copy = FreeTerm::op(<R::Sig>::map(layer.clone(), func(counit)));
                let stepped = <R::Bhv>::map(rule.rho(layer), func(flatten));
                CoPointed::new(copy, stepped)
            },
        )
    };
    eval(alg, gen, ft)
}

/// The operational model: one observation step of a term, as a fold.
pub fn opsem<R: RhoRule>(rule: &R, t: &Term<R::Sig>) -> Of<R::Bhv, Term<R::Sig>> {
    opsem_coalg(rule)(t.clone())
}

/// The operational model as a reusable coalgebra value.
pub fn opsem_coalg<R: RhoRule>(rule: &R) -> Func<Term<R::Sig>, Of<R::Bhv, Term<R::Sig>>> {
    let alg: Func<
        Of<R::Sig, CoPointed<R::Bhv, Term<R::Sig>>>,
        CoPointed<R::Bhv, Term<R::Sig>>,
    > = {
        let rule = rule.clone();
        let reinject: Func<FreeTerm<R::Sig, Term<R::Sig>>, Term<R::Sig>> =
            ceil_free(func(Term::new));
        floor_free(func(move |ft| {
            pmap(reinject.clone(), rho_to_lambda(&rule, ft))
        }))
    };
    floor_co(func(move |t: Term<R::Sig>| cata(alg.clone(), &t)))
}

/// The denotational model: folds one layer of syntax over behaviors into a
/// behavior, as an unfold.
pub fn desem<R: RhoRule>(rule: &R, layer: Of<R::Sig, Behavior<R::Bhv>>) -> Behavior<R::Bhv> {
    desem_alg(rule)(layer)
}

/// The denotational model as a reusable algebra value.
pub fn desem_alg<R: RhoRule>(rule: &R) -> Func<Of<R::Sig, Behavior<R::Bhv>>, Behavior<R::Bhv>> {
    let coalg: Func<
        FreeTerm<R::Sig, Behavior<R::Bhv>>,
        Of<R::Bhv, FreeTerm<R::Sig, Behavior<R::Bhv>>>,
    > = {
        let rule = rule.clone();
        let observe_cp = ceil_co(func(|b: Behavior<R::Bhv>| b.observe()));
        floor_co(func(move |ft| {
            rho_to_lambda(&rule, map_free(observe_cp.clone(), ft))
        }))
    };
    floor_free(func(move |ft| ana(coalg.clone(), ft)))
}

/// Universal semantics: the fold of the denotational model.
pub fn sem<R: RhoRule>(rule: &R, t: &Term<R::Sig>) -> Behavior<R::Bhv> {
    cata(desem_alg(rule), t)
}

/// The same map along the operational route. Coincides with [`sem`] at every
/// truncation depth.
pub fn sem_via_unfold<R: RhoRule>(rule: &R, t: &Term<R::Sig>) -> Behavior<R::Bhv> {
    ana(opsem_coalg(rule), t.clone())
}
