//! A bialgebraic semantics toolkit.
//!
//! Write down one rule set describing how each syntax constructor behaves and
//! get back two interpreters that provably agree: a compositional
//! denotational one (a fold over syntax) and a fully abstract operational one
//! (an unfold into behavior trees). Two rule flavours are supported:
//!
//! - [`law::DistLaw`] — simple distributive laws `S(B x) -> B(S x)`, enough
//!   for deterministic languages such as the stream arithmetic of
//!   [`lang::stream`];
//! - [`gsos::RhoRule`] — GSOS rules `S(<B> x) -> B(S* x)` over the copointed
//!   functor and the free monad, enough for non-deterministic languages such
//!   as the razor of [`lang::razor`] and the value-passing CCS of
//!   [`lang::ccs`].
//!
//! [`equiv`] provides the testing substrate: bounded-depth truncation,
//! behavioral equality with sampled receive continuations, trace trees, and
//! deterministic term generators.
// The pipeline's types really are this nested; aliases for every
// intermediate would hide more than they explain.
#![allow(clippy::type_complexity)]

pub mod copointed;
pub mod equiv;
pub mod free;
pub mod gsos;
pub mod lang;
pub mod law;
pub mod rec;

pub use rec::{ana, cata, compose, func, ident, Behavior, Func, Of, Shape, Term, Value};
