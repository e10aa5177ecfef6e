//! The razor: literals and addition with an explicit stop-or-step behavior
//! and non-deterministic small steps, plus `Amb` as a deliberate extension.
//!
//! Pure literal/addition terms always stop in one observation (their operand
//! behaviors are all stopped, by induction), which would leave the stepping
//! clauses of the rule untested; `Amb` forces genuine branching through them.
//! The plain small-step relation of the unextended language is kept as a
//! contrast: unfolding it forgets every label (see the test suite), which is
//! what motivates the stop-or-step behavior in the first place.

use std::fmt;

use crate::copointed::CoPointed;
use crate::free::FreeTerm;
use crate::gsos::{self, RhoRule};
use crate::lang::stream::{self, ValAdd, ValAddF};
use crate::rec::{func, Behavior, Func, Shape, Term, Value};

/// Signature: literals, addition, and ambiguous choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Razor<X> {
    Val(u64),
    Add(X, X),
    Amb(X, X),
}

/// Shape marker for [`Razor`].
pub struct RazorF;

impl Shape for RazorF {
    type Of<X: Value> = Razor<X>;

    fn map<A: Value, B: Value>(layer: Razor<A>, f: Func<A, B>) -> Razor<B> {
        match layer {
            Razor::Val(n) => Razor::Val(n),
            Razor::Add(l, r) => Razor::Add(f(l), f(r)),
            Razor::Amb(l, r) => Razor::Amb(f(l), f(r)),
        }
    }
}

/// Behavior: either stopped with a final number, or stepping to finitely many
/// successors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StopAndGo<X> {
    Stopped(u64),
    Step(Vec<X>),
}

/// Shape marker for [`StopAndGo`].
pub struct StopAndGoF;

impl Shape for StopAndGoF {
    type Of<X: Value> = StopAndGo<X>;

    fn map<A: Value, B: Value>(layer: StopAndGo<A>, f: Func<A, B>) -> StopAndGo<B> {
        match layer {
            StopAndGo::Stopped(n) => StopAndGo::Stopped(n),
            StopAndGo::Step(xs) => StopAndGo::Step(xs.into_iter().map(|x| f(x)).collect()),
        }
    }
}

/// Bare finite branching, used to unfold the plain small-step relation.
pub struct BranchF;

impl Shape for BranchF {
    type Of<X: Value> = Vec<X>;

    fn map<A: Value, B: Value>(layer: Vec<A>, f: Func<A, B>) -> Vec<B> {
        layer.into_iter().map(|x| f(x)).collect()
    }
}

pub fn val(n: u64) -> Term<RazorF> {
    Term::new(Razor::Val(n))
}

pub fn add(l: Term<RazorF>, r: Term<RazorF>) -> Term<RazorF> {
    Term::new(Razor::Add(l, r))
}

pub fn amb(l: Term<RazorF>, r: Term<RazorF>) -> Term<RazorF> {
    Term::new(Razor::Amb(l, r))
}

/// Number of constructors in a term.
pub fn term_size(t: &Term<RazorF>) -> usize {
    match t.node() {
        Razor::Val(_) => 1,
        Razor::Add(l, r) | Razor::Amb(l, r) => 1 + term_size(&l) + term_size(&r),
    }
}

/// Total sum of an `Amb`-free term; `None` when the term contains `Amb`.
pub fn amb_free_sum(t: &Term<RazorF>) -> Option<u64> {
    match t.node() {
        Razor::Val(n) => Some(n),
        Razor::Add(l, r) => Some(amb_free_sum(&l)? + amb_free_sum(&r)?),
        Razor::Amb(_, _) => None,
    }
}

/// The plain small-step relation on literal/addition terms: literals do not
/// reduce, an addition of two literals reduces to their sum, and otherwise
/// reduction is congruent on the left then the right operand.
pub fn smallstep(t: &Term<ValAddF>) -> Vec<Term<ValAddF>> {
    match t.node() {
        ValAdd::Val(_) => vec![],
        ValAdd::Add(t1, t2) => {
            if let (ValAdd::Val(n), ValAdd::Val(m)) = (t1.node(), t2.node()) {
                return vec![stream::val(n + m)];
            }
            let mut out: Vec<Term<ValAddF>> = smallstep(&t1)
                .into_iter()
                .map(|t1n| stream::add(t1n, t2.clone()))
                .collect();
            out.extend(
                smallstep(&t2)
                    .into_iter()
                    .map(|t2n| stream::add(t1.clone(), t2n)),
            );
            out
        }
    }
}

/// [`smallstep`] as a coalgebra value over [`BranchF`].
pub fn smallstep_coalg() -> Func<Term<ValAddF>, Vec<Term<ValAddF>>> {
    func(|t: Term<ValAddF>| smallstep(&t))
}

/// The razor's rule set.
///
/// A literal stops with its value; an addition of two stopped operands stops
/// with the sum; when both operands step, the right-derived successors are
/// listed before the left-derived ones; when exactly one operand steps, the
/// other is repeated from its retained copy. `Amb` steps to both operands.
#[derive(Clone, Copy, Debug, Default)]
pub struct RazorRules;

impl RhoRule for RazorRules {
    type Sig = RazorF;
    type Bhv = StopAndGoF;

    fn rho<X: Value>(
        &self,
        layer: Razor<CoPointed<StopAndGoF, X>>,
    ) -> StopAndGo<FreeTerm<RazorF, X>> {
        use StopAndGo::{Step, Stopped};
        let add_ft = |l: FreeTerm<RazorF, X>, r: FreeTerm<RazorF, X>| {
            FreeTerm::op(Razor::Add(l, r))
        };
        match layer {
            Razor::Val(n) => Stopped(n),
            Razor::Add(p1, p2) => match (p1.layer, p2.layer) {
                (Stopped(n), Stopped(m)) => Stopped(n + m),
                (Step(xs1), Step(xs2)) => {
                    let mut out: Vec<FreeTerm<RazorF, X>> = xs2
                        .into_iter()
                        .map(|x2n| add_ft(FreeTerm::var(p1.copy.clone()), FreeTerm::var(x2n)))
                        .collect();
                    out.extend(
                        xs1.into_iter()
                            .map(|x1n| add_ft(FreeTerm::var(x1n), FreeTerm::var(p2.copy.clone()))),
                    );
                    Step(out)
                }
                (Stopped(_), Step(xs2)) => Step(
                    xs2.into_iter()
                        .map(|x2n| add_ft(FreeTerm::var(p1.copy.clone()), FreeTerm::var(x2n)))
                        .collect(),
                ),
                (Step(xs1), Stopped(_)) => Step(
                    xs1.into_iter()
                        .map(|x1n| add_ft(FreeTerm::var(x1n), FreeTerm::var(p2.copy.clone())))
                        .collect(),
                ),
            },
            Razor::Amb(p1, p2) => Step(vec![FreeTerm::var(p1.copy), FreeTerm::var(p2.copy)]),
        }
    }
}

/// Razor semantics through the rule pipeline.
pub fn sem_razor(t: &Term<RazorF>) -> Behavior<StopAndGoF> {
    gsos::sem(&RazorRules, t)
}

/// A finite, fully materialized behavior tree, as produced by the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleTree {
    Leaf(u64),
    Node(Vec<OracleTree>),
}

/// Term too large for exhaustive oracle evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeBoundExceeded {
    pub size: usize,
    pub bound: usize,
}

impl fmt::Display for SizeBoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term size {} exceeds the oracle bound {}",
            self.size, self.bound
        )
    }
}

impl std::error::Error for SizeBoundExceeded {}

enum OracleStep {
    Stopped(u64),
    Step(Vec<Term<RazorF>>),
}

// One step of the relational rules, applied directly to concrete terms.
fn oracle_step(t: &Term<RazorF>) -> OracleStep {
    match t.node() {
        Razor::Val(n) => OracleStep::Stopped(n),
        Razor::Add(t1, t2) => match (oracle_step(&t1), oracle_step(&t2)) {
            (OracleStep::Stopped(n), OracleStep::Stopped(m)) => OracleStep::Stopped(n + m),
            (OracleStep::Step(s1), OracleStep::Step(s2)) => {
                let mut out: Vec<Term<RazorF>> =
                    s2.into_iter().map(|t2n| add(t1.clone(), t2n)).collect();
                out.extend(s1.into_iter().map(|t1n| add(t1n, t2.clone())));
                OracleStep::Step(out)
            }
            (OracleStep::Stopped(_), OracleStep::Step(s2)) => {
                OracleStep::Step(s2.into_iter().map(|t2n| add(t1.clone(), t2n)).collect())
            }
            (OracleStep::Step(s1), OracleStep::Stopped(_)) => {
                OracleStep::Step(s1.into_iter().map(|t1n| add(t1n, t2.clone())).collect())
            }
        },
        Razor::Amb(t1, t2) => OracleStep::Step(vec![t1, t2]),
    }
}

/// Brute-force model: exhaustively enumerates the relational rules on
/// concrete terms, independently of the rule pipeline. `Amb`-free terms
/// yield a single leaf carrying the term's sum.
pub fn razor_oracle(t: &Term<RazorF>, bound: usize) -> Result<OracleTree, SizeBoundExceeded> {
    let size = term_size(t);
    if size > bound {
        return Err(SizeBoundExceeded { size, bound });
    }
    Ok(oracle_tree(t))
}

fn oracle_tree(t: &Term<RazorF>) -> OracleTree {
    match oracle_step(t) {
        OracleStep::Stopped(n) => OracleTree::Leaf(n),
        OracleStep::Step(succs) => {
            OracleTree::Node(succs.iter().map(oracle_tree).collect())
        }
    }
}

/// Compares a behavior against an oracle tree, layer by layer. `fuel` bounds
/// the walk so a defective (infinite) behavior fails instead of diverging.
pub fn matches_oracle(b: &Behavior<StopAndGoF>, tree: &OracleTree, fuel: usize) -> bool {
    if fuel == 0 {
        return false;
    }
    match (b.observe(), tree) {
        (StopAndGo::Stopped(n), OracleTree::Leaf(m)) => n == *m,
        (StopAndGo::Step(bs), OracleTree::Node(ts)) => {
            bs.len() == ts.len()
                && bs
                    .iter()
                    .zip(ts.iter())
                    .all(|(b, t)| matches_oracle(b, t, fuel - 1))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::{free_tab, term_tab};
    use crate::lang::stream;

    fn vterm_eq(a: &Term<ValAddF>, b: &Term<ValAddF>) -> bool {
        term_tab(a, &[0]) == term_tab(b, &[0])
    }

    #[test]
    fn smallstep_of_a_literal_is_empty() {
        assert!(smallstep(&stream::val(3)).is_empty());
    }

    #[test]
    fn smallstep_reduces_a_sum_of_literals() {
        let succ = smallstep(&stream::add(stream::val(1), stream::val(2)));
        assert_eq!(succ.len(), 1);
        assert!(vterm_eq(&succ[0], &stream::val(3)));
    }

    #[test]
    fn smallstep_is_congruent_left_then_right() {
        let t = stream::add(
            stream::add(stream::val(1), stream::val(2)),
            stream::add(stream::val(3), stream::val(4)),
        );
        let succ = smallstep(&t);
        assert_eq!(succ.len(), 2);
        assert!(vterm_eq(
            &succ[0],
            &stream::add(stream::val(3), stream::add(stream::val(3), stream::val(4)))
        ));
        assert!(vterm_eq(
            &succ[1],
            &stream::add(stream::add(stream::val(1), stream::val(2)), stream::val(7))
        ));
    }

    fn cp(copy: u64, layer: StopAndGo<u64>) -> CoPointed<StopAndGoF, u64> {
        CoPointed::new(copy, layer)
    }

    fn ft_eq(a: &FreeTerm<RazorF, u64>, b: &FreeTerm<RazorF, u64>) -> bool {
        free_tab(a, &[0]) == free_tab(b, &[0])
    }

    fn add_of_vars(l: u64, r: u64) -> FreeTerm<RazorF, u64> {
        FreeTerm::op(Razor::Add(FreeTerm::var(l), FreeTerm::var(r)))
    }

    #[test]
    fn rule_stops_literals() {
        assert!(matches!(
            RazorRules.rho::<u64>(Razor::Val(6)),
            StopAndGo::Stopped(6)
        ));
    }

    #[test]
    fn rule_sums_two_stopped_operands() {
        let out = RazorRules.rho(Razor::Add(
            cp(10, StopAndGo::Stopped(1)),
            cp(20, StopAndGo::Stopped(2)),
        ));
        assert!(matches!(out, StopAndGo::Stopped(3)));
    }

    #[test]
    fn rule_lists_right_successors_before_left_when_both_step() {
        let out = RazorRules.rho(Razor::Add(
            cp(10, StopAndGo::Step(vec![11])),
            cp(20, StopAndGo::Step(vec![21])),
        ));
        match out {
            StopAndGo::Step(xs) => {
                assert_eq!(xs.len(), 2);
                assert!(ft_eq(&xs[0], &add_of_vars(10, 21)));
                assert!(ft_eq(&xs[1], &add_of_vars(11, 20)));
            }
            _ => panic!("expected a step"),
        }
    }

    #[test]
    fn rule_repeats_the_stopped_side_from_its_copy() {
        let left_stopped = RazorRules.rho(Razor::Add(
            cp(10, StopAndGo::Stopped(5)),
            cp(20, StopAndGo::Step(vec![21, 22])),
        ));
        match left_stopped {
            StopAndGo::Step(xs) => {
                assert_eq!(xs.len(), 2);
                assert!(ft_eq(&xs[0], &add_of_vars(10, 21)));
                assert!(ft_eq(&xs[1], &add_of_vars(10, 22)));
            }
            _ => panic!("expected a step"),
        }
        let right_stopped = RazorRules.rho(Razor::Add(
            cp(10, StopAndGo::Step(vec![11])),
            cp(20, StopAndGo::Stopped(5)),
        ));
        match right_stopped {
            StopAndGo::Step(xs) => {
                assert_eq!(xs.len(), 1);
                assert!(ft_eq(&xs[0], &add_of_vars(11, 20)));
            }
            _ => panic!("expected a step"),
        }
    }

    #[test]
    fn rule_steps_amb_to_both_copies() {
        let out = RazorRules.rho(Razor::Amb(
            cp(1, StopAndGo::Stopped(0)),
            cp(2, StopAndGo::Step(vec![9])),
        ));
        match out {
            StopAndGo::Step(xs) => {
                assert_eq!(xs.len(), 2);
                assert!(ft_eq(&xs[0], &FreeTerm::var(1)));
                assert!(ft_eq(&xs[1], &FreeTerm::var(2)));
            }
            _ => panic!("expected a step"),
        }
    }

    #[test]
    fn sem_razor_examples() {
        assert!(matches!(sem_razor(&val(5)).observe(), StopAndGo::Stopped(5)));
        assert!(matches!(
            sem_razor(&add(add(val(1), val(2)), val(4))).observe(),
            StopAndGo::Stopped(7)
        ));
        match sem_razor(&amb(val(1), val(2))).observe() {
            StopAndGo::Step(bs) => {
                assert_eq!(bs.len(), 2);
                assert!(matches!(bs[0].observe(), StopAndGo::Stopped(1)));
                assert!(matches!(bs[1].observe(), StopAndGo::Stopped(2)));
            }
            _ => panic!("expected a step"),
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(razor_oracle(&val(9), 8), Ok(OracleTree::Leaf(9)));
        assert_eq!(
            razor_oracle(&add(val(2), val(3)), 8),
            Ok(OracleTree::Leaf(5))
        );
        assert_eq!(
            razor_oracle(&amb(val(0), amb(val(1), val(2))), 8),
            Ok(OracleTree::Node(vec![
                OracleTree::Leaf(0),
                OracleTree::Node(vec![OracleTree::Leaf(1), OracleTree::Leaf(2)]),
            ]))
        );
    }

    #[test]
    fn oracle_rejects_oversized_terms() {
        let t = add(add(val(1), val(2)), add(val(3), val(4)));
        assert_eq!(
            razor_oracle(&t, 6),
            Err(SizeBoundExceeded { size: 7, bound: 6 })
        );
    }

    #[test]
    fn sem_matches_the_oracle_on_an_amb_tree() {
        let t = amb(val(0), amb(val(1), val(2)));
        let tree = razor_oracle(&t, 16).unwrap();
        assert!(matches_oracle(&sem_razor(&t), &tree, 32));
    }
}
