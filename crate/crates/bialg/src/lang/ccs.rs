//! Value-passing CCS: processes that send and receive numbers over named
//! channels, with choice, parallel composition, replication, and channel
//! restriction.
//!
//! The behavior of a process is a finite list of actions, each carrying its
//! successor; receives carry a function from the received value to the
//! successor, which keeps the action list finite even though a receive can
//! accept any number. Action order follows the rule set exactly (choice:
//! left before right; parallel: left merge before its mirror; merge: plain
//! actions before synchronisations), and traversals rely on that order.

use crate::copointed::CoPointed;
use crate::free::FreeTerm;
use crate::gsos::{self, RhoRule};
use crate::rec::{func, Behavior, Func, Shape, Term, Value};

/// Channel names; nonempty by the smart-constructor contract.
pub type Chan = String;

/// Values passed over channels.
pub type Val = u64;

/// Signature of processes.
#[derive(Clone)]
pub enum Ccs<X: Value> {
    /// Send `Val` on `Chan`, then continue.
    Send(Chan, Val, X),
    /// Receive a value on `Chan`; the continuation depends on it.
    Recv(Chan, Func<Val, X>),
    /// Behave as either side.
    Sum(X, X),
    /// The inactive process.
    Nil,
    /// Run both sides concurrently, possibly communicating.
    Par(X, X),
    /// Arbitrarily many parallel copies.
    Rep(X),
    /// Hide communication on `Chan` from the environment.
    Restrict(Chan, X),
}

/// Shape marker for [`Ccs`].
pub struct CcsF;

impl Shape for CcsF {
    type Of<X: Value> = Ccs<X>;

    fn map<A: Value, B: Value>(layer: Ccs<A>, f: Func<A, B>) -> Ccs<B> {
        match layer {
            Ccs::Send(c, v, x) => Ccs::Send(c, v, f(x)),
            Ccs::Recv(c, k) => Ccs::Recv(c, func(move |v| f(k(v)))),
            Ccs::Sum(l, r) => Ccs::Sum(f(l), f(r)),
            Ccs::Nil => Ccs::Nil,
            Ccs::Par(l, r) => Ccs::Par(f(l), f(r)),
            Ccs::Rep(p) => Ccs::Rep(f(p)),
            Ccs::Restrict(c, p) => Ccs::Restrict(c, f(p)),
        }
    }
}

/// One observable action and its successor.
#[derive(Clone)]
pub enum Act<X: Value> {
    /// A send of `Val` on `Chan`.
    Send(Chan, Val, X),
    /// A receive on `Chan`; the successor depends on the received value.
    Recv(Chan, Func<Val, X>),
    /// An internal communication, invisible to the environment.
    Silent(X),
}

/// The behavior layer: a finite, ordered list of available actions.
#[derive(Clone)]
pub struct Acts<X: Value>(pub Vec<Act<X>>);

/// Shape marker for [`Acts`].
pub struct ActsF;

impl Shape for ActsF {
    type Of<X: Value> = Acts<X>;

    fn map<A: Value, B: Value>(layer: Acts<A>, f: Func<A, B>) -> Acts<B> {
        Acts(
            layer
                .0
                .into_iter()
                .map(|act| match act {
                    Act::Send(c, v, x) => Act::Send(c, v, f(x)),
                    Act::Recv(c, k) => {
                        let f = f.clone();
                        Act::Recv(c, func(move |v| f(k(v))))
                    }
                    Act::Silent(x) => Act::Silent(f(x)),
                })
                .collect(),
        )
    }
}

/// Order-preserving concatenation of action lists.
pub fn bapp<X: Value>(a: Acts<X>, b: Acts<X>) -> Acts<X> {
    let mut items = a.0;
    items.extend(b.0);
    Acts(items)
}

/// Order-preserving selection of the actions satisfying `keep`.
pub fn bfilter<X: Value>(keep: impl Fn(&Act<X>) -> bool, a: Acts<X>) -> Acts<X> {
    Acts(a.0.into_iter().filter(|act| keep(act)).collect())
}

fn assert_chan(c: &str) -> Chan {
    assert!(!c.is_empty(), "channel names must be nonempty");
    c.to_string()
}

pub fn send(chan: &str, value: Val, cont: Term<CcsF>) -> Term<CcsF> {
    Term::new(Ccs::Send(assert_chan(chan), value, cont))
}

pub fn recv(chan: &str, cont: impl Fn(Val) -> Term<CcsF> + 'static) -> Term<CcsF> {
    Term::new(Ccs::Recv(assert_chan(chan), func(cont)))
}

pub fn sum(l: Term<CcsF>, r: Term<CcsF>) -> Term<CcsF> {
    Term::new(Ccs::Sum(l, r))
}

pub fn nil() -> Term<CcsF> {
    Term::new(Ccs::Nil)
}

pub fn par(l: Term<CcsF>, r: Term<CcsF>) -> Term<CcsF> {
    Term::new(Ccs::Par(l, r))
}

pub fn rep(p: Term<CcsF>) -> Term<CcsF> {
    Term::new(Ccs::Rep(p))
}

pub fn res(chan: &str, p: Term<CcsF>) -> Term<CcsF> {
    Term::new(Ccs::Restrict(assert_chan(chan), p))
}

/// Restriction of a whole channel list, folded from the right: the first
/// channel ends up outermost.
pub fn res_all(chans: &[&str], p: Term<CcsF>) -> Term<CcsF> {
    chans.iter().rev().fold(p, |acc, c| res(c, acc))
}

/// The CCS rule set, one clause per constructor.
#[derive(Clone, Copy, Debug, Default)]
pub struct CcsRules;

type FT<X> = FreeTerm<CcsF, X>;

fn ft_par<X: Value>(l: FT<X>, r: FT<X>) -> FT<X> {
    FreeTerm::op(Ccs::Par(l, r))
}

// Actions of `a` in the presence of `b`: every action of `a` continues in
// parallel with `b`'s copy, and every send of `a` that meets a matching
// receive of `b` also yields a silent synchronisation.
fn lmerge<X: Value>(
    a: &CoPointed<ActsF, X>,
    b: &CoPointed<ActsF, X>,
) -> Acts<FreeTerm<CcsF, X>> {
    let other = b.copy.clone();
    let plain = ActsF::map(
        a.layer.clone(),
        func(move |y: X| ft_par(FreeTerm::var(y), FreeTerm::var(other.clone()))),
    );
    let mut silents = Vec::new();
    for act in &a.layer.0 {
        if let Act::Send(c, m, y) = act {
            for partner in &b.layer.0 {
                if let Act::Recv(c2, k) = partner {
                    if c == c2 {
                        silents.push(Act::Silent(ft_par(
                            FreeTerm::var(y.clone()),
                            FreeTerm::var(k(*m)),
                        )));
                    }
                }
            }
        }
    }
    bapp(plain, Acts(silents))
}

impl RhoRule for CcsRules {
    type Sig = CcsF;
    type Bhv = ActsF;

    fn rho<X: Value>(&self, layer: Ccs<CoPointed<ActsF, X>>) -> Acts<FreeTerm<CcsF, X>> {
        match layer {
            Ccs::Send(c, v, p) => Acts(vec![Act::Send(c, v, FreeTerm::var(p.copy))]),
            Ccs::Recv(c, k) => Acts(vec![Act::Recv(
                c,
                func(move |v| FreeTerm::var(k(v).copy)),
            )]),
            Ccs::Nil => Acts(vec![]),
            Ccs::Sum(l, r) => bapp(
                ActsF::map(l.layer, func(FreeTerm::var)),
                ActsF::map(r.layer, func(FreeTerm::var)),
            ),
            Ccs::Par(l, r) => bapp(lmerge(&l, &r), lmerge(&r, &l)),
            Ccs::Rep(p) => {
                let copy = p.copy;
                ActsF::map(
                    p.layer,
                    func(move |y: X| {
                        ft_par(
                            FreeTerm::var(y),
                            FreeTerm::op(Ccs::Rep(FreeTerm::var(copy.clone()))),
                        )
                    }),
                )
            }
            Ccs::Restrict(c, p) => {
                let wrap = {
                    let c = c.clone();
                    func(move |y: X| {
                        FreeTerm::op(Ccs::Restrict(c.clone(), FreeTerm::var(y)))
                    })
                };
                bfilter(
                    move |act| match act {
                        Act::Send(c2, _, _) | Act::Recv(c2, _) => *c2 != c,
                        Act::Silent(_) => true,
                    },
                    ActsF::map(p.layer, wrap),
                )
            }
        }
    }
}

/// CCS semantics through the rule pipeline.
pub fn sem_ccs(t: &Term<CcsF>) -> Behavior<ActsF> {
    gsos::sem(&CcsRules, t)
}

/// Collects sent values depth-first, left to right: a send emits its value
/// and continues, a silent step continues, a receive contributes nothing.
///
/// Traversal is demand-driven and halts after `max_count` emissions, or
/// `max_depth` layers down any path. Use `usize::MAX` for "unbounded".
pub fn outputs(b: &Behavior<ActsF>, max_count: usize, max_depth: usize) -> Vec<Val> {
    let mut out = Vec::new();
    outputs_walk(b, max_count, max_depth, &mut out);
    out
}

fn outputs_walk(b: &Behavior<ActsF>, max_count: usize, depth_left: usize, out: &mut Vec<Val>) {
    if out.len() >= max_count || depth_left == 0 {
        return;
    }
    for act in b.observe().0 {
        if out.len() >= max_count {
            return;
        }
        match act {
            Act::Send(_, v, next) => {
                out.push(v);
                outputs_walk(&next, max_count, depth_left - 1, out);
            }
            Act::Recv(_, _) => {}
            Act::Silent(next) => outputs_walk(&next, max_count, depth_left - 1, out),
        }
    }
}

/// Keeps the first occurrence of each value, preserving order.
pub fn nub_first(values: &[Val]) -> Vec<Val> {
    let mut seen = std::collections::HashSet::new();
    values
        .iter()
        .copied()
        .filter(|v| seen.insert(*v))
        .collect()
}

/// The bundled example processes.
pub mod examples {
    use super::*;

    /// Emits the naturals on channel `output`, one per communication round:
    /// a replicated iterator receives the current value on the hidden
    /// channel `i`, publishes it, and hands the successor to the next copy.
    pub fn nats() -> Term<CcsF> {
        let iter = recv("i", |i| {
            send("output", i, send("i", i + 1, nil()))
        });
        res("i", par(send("i", 0, nil()), rep(iter)))
    }

    /// A one-cell store holding a number: serves a read request on `rd` by
    /// publishing the value on `count`, and a write request on `wt` by
    /// replacing it. The cell's state travels on the hidden channel `init`.
    pub fn counter() -> Term<CcsF> {
        let iter = rep(recv("init", |v| {
            sum(
                recv("rd", move |_| send("count", v, send("init", v, nil()))),
                recv("wt", |i| send("init", i, nil())),
            )
        }));
        res("init", par(send("init", 0, nil()), iter))
    }

    /// Reads the counter and passes the value on.
    pub fn read(k: impl Fn(Val) -> Term<CcsF> + 'static) -> Term<CcsF> {
        send("rd", 0, recv("count", k))
    }

    /// Overwrites the counter.
    pub fn write(v: Val, p: Term<CcsF>) -> Term<CcsF> {
        send("wt", v, p)
    }

    /// Increments the counter without any locking.
    pub fn incr(p: Term<CcsF>) -> Term<CcsF> {
        read(move |v| write(v + 1, p.clone()))
    }

    /// Two unsynchronised clients race four unlocked increments against each
    /// other; a final read publishes whichever count survived the
    /// interleaving. Every outcome in 1..=4 is reachable.
    pub fn counter_test() -> Term<CcsF> {
        let reporter = incr(incr(read(|v| send("output", v, nil()))));
        res_all(
            &["rd", "wt", "count"],
            par(par(counter(), incr(incr(nil()))), reporter),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::free_tab;

    fn ft_eq(a: &FreeTerm<CcsF, u64>, b: &FreeTerm<CcsF, u64>, samples: &[Val]) -> bool {
        free_tab(a, samples) == free_tab(b, samples)
    }

    fn var(x: u64) -> FT<u64> {
        FreeTerm::var(x)
    }

    #[test]
    fn bapp_concatenates_in_order() {
        let a = Acts(vec![Act::Silent(1u64)]);
        let b = Acts(vec![Act::Silent(2u64), Act::Silent(3u64)]);
        let out = bapp(a, b);
        let values: Vec<u64> = out
            .0
            .iter()
            .map(|act| match act {
                Act::Silent(x) => *x,
                _ => panic!("unexpected action"),
            })
            .collect();
        assert_eq!(values, vec![1, 2, 3]);
    }

    #[test]
    fn bapp_with_an_empty_left_is_identity() {
        let out = bapp(Acts(Vec::new()), Acts(vec![Act::Silent(7u64)]));
        assert_eq!(out.0.len(), 1);
    }

    #[test]
    fn bfilter_keeps_only_matching_actions() {
        let acts: Acts<u64> = Acts(vec![
            Act::Send("a".into(), 1, 10),
            Act::Silent(20),
        ]);
        let silent_only = bfilter(|act| matches!(act, Act::Silent(_)), acts);
        assert_eq!(silent_only.0.len(), 1);
        assert!(matches!(silent_only.0[0], Act::Silent(20)));
    }

    #[test]
    fn rule_sends_one_action_with_the_copy() {
        let out = CcsRules.rho(Ccs::Send(
            "a".into(),
            3,
            CoPointed::<ActsF, u64>::new(7, Acts(Vec::new())),
        ));
        assert_eq!(out.0.len(), 1);
        match &out.0[0] {
            Act::Send(c, v, succ) => {
                assert_eq!(c, "a");
                assert_eq!(*v, 3);
                assert!(ft_eq(succ, &var(7), &[0]));
            }
            _ => panic!("expected a send"),
        }
    }

    #[test]
    fn rule_receives_one_action_returning_the_copy() {
        let out = CcsRules.rho(Ccs::Recv(
            "a".into(),
            func(|v: Val| CoPointed::<ActsF, u64>::new(v * 2, Acts(Vec::new()))),
        ));
        assert_eq!(out.0.len(), 1);
        match &out.0[0] {
            Act::Recv(c, k) => {
                assert_eq!(c, "a");
                for v in [0, 1, 5] {
                    assert!(ft_eq(&k(v), &var(v * 2), &[0]));
                }
            }
            _ => panic!("expected a receive"),
        }
    }

    #[test]
    fn rule_gives_the_inactive_process_no_actions() {
        assert!(CcsRules.rho::<u64>(Ccs::Nil).0.is_empty());
    }

    #[test]
    fn rule_orders_choice_left_then_right() {
        let out = CcsRules.rho(Ccs::Sum(
            CoPointed::<ActsF, u64>::new(1, Acts(vec![Act::Silent(10)])),
            CoPointed::<ActsF, u64>::new(2, Acts(vec![Act::Silent(20)])),
        ));
        assert_eq!(out.0.len(), 2);
        match (&out.0[0], &out.0[1]) {
            (Act::Silent(l), Act::Silent(r)) => {
                assert!(ft_eq(l, &var(10), &[0]));
                assert!(ft_eq(r, &var(20), &[0]));
            }
            _ => panic!("expected two silent actions"),
        }
    }

    #[test]
    fn rule_merges_parallel_actions_and_synchronisations() {
        // Left: a process sending 7 on "c"; right: a process receiving on
        // "c". Expect, in order: the left-derived send, the synchronisation,
        // then the mirror pass's receive.
        let k_recv = func(|v: Val| 300 + v);
        let out = CcsRules.rho(Ccs::Par(
            CoPointed::<ActsF, u64>::new(100, Acts(vec![Act::Send("c".into(), 7, 101)])),
            CoPointed::<ActsF, u64>::new(200, Acts(vec![Act::Recv("c".into(), k_recv)])),
        ));
        let samples = [0, 1, 2, 3];
        assert_eq!(out.0.len(), 3);
        match &out.0[0] {
            Act::Send(c, v, succ) => {
                assert_eq!((c.as_str(), *v), ("c", 7));
                let expect = FreeTerm::op(Ccs::Par(var(101), var(200)));
                assert!(ft_eq(succ, &expect, &samples));
            }
            _ => panic!("expected the left-derived send first"),
        }
        match &out.0[1] {
            Act::Silent(succ) => {
                let expect = FreeTerm::op(Ccs::Par(var(101), var(307)));
                assert!(ft_eq(succ, &expect, &samples));
            }
            _ => panic!("expected the synchronisation second"),
        }
        match &out.0[2] {
            Act::Recv(c, k) => {
                assert_eq!(c, "c");
                for v in samples {
                    let expect = FreeTerm::op(Ccs::Par(var(300 + v), var(100)));
                    assert!(ft_eq(&k(v), &expect, &samples));
                }
            }
            _ => panic!("expected the mirrored receive last"),
        }
    }

    #[test]
    fn rule_restriction_filters_and_rewraps() {
        let out = CcsRules.rho(Ccs::Restrict(
            "c".into(),
            CoPointed::<ActsF, u64>::new(
                1,
                Acts(vec![
                    Act::Send("c".into(), 1, 10),
                    Act::Send("d".into(), 2, 11),
                    Act::Recv("c".into(), func(|v: Val| v)),
                    Act::Silent(12),
                ]),
            ),
        ));
        assert_eq!(out.0.len(), 2);
        match &out.0[0] {
            Act::Send(c, v, succ) => {
                assert_eq!((c.as_str(), *v), ("d", 2));
                let expect = FreeTerm::op(Ccs::Restrict("c".into(), var(11)));
                assert!(ft_eq(succ, &expect, &[0]));
            }
            _ => panic!("expected the unrestricted send"),
        }
        assert!(matches!(&out.0[1], Act::Silent(_)));
    }

    #[test]
    fn rule_replication_spawns_a_fresh_copy() {
        let out = CcsRules.rho(Ccs::Rep(CoPointed::<ActsF, u64>::new(
            5,
            Acts(vec![Act::Silent(6)]),
        )));
        assert_eq!(out.0.len(), 1);
        match &out.0[0] {
            Act::Silent(succ) => {
                let expect = FreeTerm::op(Ccs::Par(
                    var(6),
                    FreeTerm::op(Ccs::Rep(var(5))),
                ));
                assert!(ft_eq(succ, &expect, &[0]));
            }
            _ => panic!("expected one silent action"),
        }
    }

    #[test]
    fn outputs_of_nil_is_empty() {
        assert!(outputs(&sem_ccs(&nil()), usize::MAX, 16).is_empty());
    }

    #[test]
    fn outputs_of_a_single_send() {
        let b = sem_ccs(&send("a", 1, nil()));
        let layer = b.observe();
        assert_eq!(layer.0.len(), 1);
        match &layer.0[0] {
            Act::Send(c, v, succ) => {
                assert_eq!((c.as_str(), *v), ("a", 1));
                assert!(succ.observe().0.is_empty());
            }
            _ => panic!("expected a send"),
        }
        assert_eq!(outputs(&b, usize::MAX, 16), vec![1]);
    }

    #[test]
    fn nub_first_keeps_first_occurrences() {
        assert_eq!(nub_first(&[4, 3, 4, 2, 3, 1]), vec![4, 3, 2, 1]);
    }

    #[test]
    fn nats_has_the_expected_structure() {
        let t = examples::nats();
        let Ccs::Restrict(c, body) = t.node() else {
            panic!("expected a restriction");
        };
        assert_eq!(c, "i");
        let Ccs::Par(seed, iter) = body.node() else {
            panic!("expected a parallel composition");
        };
        match seed.node() {
            Ccs::Send(c, 0, rest) => {
                assert_eq!(c, "i");
                assert!(matches!(rest.node(), Ccs::Nil));
            }
            _ => panic!("expected the seeding send"),
        }
        let Ccs::Rep(recv_node) = iter.node() else {
            panic!("expected a replication");
        };
        let Ccs::Recv(c, k) = recv_node.node() else {
            panic!("expected a receive");
        };
        assert_eq!(c, "i");
        for v in [0u64, 3] {
            match k(v).node() {
                Ccs::Send(out, value, rest) => {
                    assert_eq!((out.as_str(), value), ("output", v));
                    match rest.node() {
                        Ccs::Send(c2, v2, tail) => {
                            assert_eq!((c2.as_str(), v2), ("i", v + 1));
                            assert!(matches!(tail.node(), Ccs::Nil));
                        }
                        _ => panic!("expected the successor send"),
                    }
                }
                _ => panic!("expected the publishing send"),
            }
        }
    }

    #[test]
    fn counter_test_restricts_rd_wt_count_outermost_first() {
        let mut t = examples::counter_test();
        for expected in ["rd", "wt", "count"] {
            match t.node() {
                Ccs::Restrict(c, inner) => {
                    assert_eq!(c, expected);
                    t = inner;
                }
                _ => panic!("expected a restriction on {expected}"),
            }
        }
        assert!(matches!(t.node(), Ccs::Par(_, _)));
    }

    #[test]
    fn counter_offers_read_then_write_handlers() {
        let Ccs::Restrict(_, body) = examples::counter().node() else {
            panic!("expected a restriction");
        };
        let Ccs::Par(_, iter) = body.node() else {
            panic!("expected a parallel composition");
        };
        let Ccs::Rep(r) = iter.node() else {
            panic!("expected a replication");
        };
        let Ccs::Recv(c, k) = r.node() else {
            panic!("expected the state receive");
        };
        assert_eq!(c, "init");
        let Ccs::Sum(read_side, write_side) = k(5).node() else {
            panic!("expected a choice");
        };
        match read_side.node() {
            Ccs::Recv(c, k_rd) => {
                assert_eq!(c, "rd");
                match k_rd(0).node() {
                    Ccs::Send(c2, v2, _) => assert_eq!((c2.as_str(), v2), ("count", 5)),
                    _ => panic!("expected the count publication"),
                }
            }
            _ => panic!("expected the read handler on the left"),
        }
        match write_side.node() {
            Ccs::Recv(c, k_wt) => {
                assert_eq!(c, "wt");
                match k_wt(9).node() {
                    Ccs::Send(c2, v2, _) => assert_eq!((c2.as_str(), v2), ("init", 9)),
                    _ => panic!("expected the state update"),
                }
            }
            _ => panic!("expected the write handler on the right"),
        }
    }
}
