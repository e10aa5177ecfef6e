//! Deterministic generators for terms and sampled layers. Everything is
//! seed-driven (splitmix64), with no ambient randomness, so every reported
//! counterexample can be replayed from its seed.

use crate::copointed::CoPointed;
use crate::lang::ccs::{self, Act, Acts, ActsF, Ccs, CcsF};
use crate::lang::razor::{self, RazorF, StopAndGo, StopAndGoF};
use crate::lang::stream::{self, Cell, ValAdd, ValAddF};
use crate::rec::{func, Term};

/// splitmix64; a full-period generator small enough to inline here.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

/// Which bundled language a generated term belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lang {
    Stream,
    Razor,
    RazorAmb,
    Ccs,
}

impl Lang {
    pub fn name(&self) -> &'static str {
        match self {
            Lang::Stream => "stream",
            Lang::Razor => "razor",
            Lang::RazorAmb => "razor+amb",
            Lang::Ccs => "ccs",
        }
    }
}

// Literals stay well below 2^16 so sums never approach overflow.
const MAX_LIT: u64 = 1 << 16;

/// A literal/addition term of at most `size` constructors (at least one).
pub fn stream_term(rng: &mut Rng, size: usize) -> Term<ValAddF> {
    if size < 3 {
        stream::val(rng.below(MAX_LIT))
    } else {
        let left = 1 + rng.below((size - 2) as u64) as usize;
        let right = size - 1 - left;
        stream::add(stream_term(rng, left), stream_term(rng, right))
    }
}

/// A razor term of at most `size` constructors. `Amb` nodes appear only when
/// the extension is enabled.
pub fn razor_term(rng: &mut Rng, size: usize, amb_enabled: bool) -> Term<RazorF> {
    if size < 3 {
        razor::val(rng.below(MAX_LIT))
    } else {
        let left = 1 + rng.below((size - 2) as u64) as usize;
        let right = size - 1 - left;
        let l = razor_term(rng, left, amb_enabled);
        let r = razor_term(rng, right, amb_enabled);
        if amb_enabled && rng.chance(40) {
            razor::amb(l, r)
        } else {
            razor::add(l, r)
        }
    }
}

const CHANS: [&str; 3] = ["a", "b", "c"];

fn chan(rng: &mut Rng) -> &'static str {
    CHANS[rng.below(CHANS.len() as u64) as usize]
}

/// A CCS process of at most `size` constructors. Size 1 is always `nil`.
/// Receive continuations embed the received value in a later send, so
/// sampling them at different values tells them apart. Replication is kept
/// rare: every `rep` multiplies the width of the behavior tree.
pub fn ccs_term(rng: &mut Rng, size: usize) -> Term<CcsF> {
    if size <= 1 {
        return ccs::nil();
    }
    if size == 2 {
        // Too small for the binary constructors or a receive template.
        return match rng.below(4) {
            0 => ccs::send(chan(rng), rng.below(16), ccs::nil()),
            1 => ccs::res(chan(rng), ccs::nil()),
            2 => ccs::rep(ccs::nil()),
            _ => ccs::nil(),
        };
    }
    match rng.below(100) {
        0..=24 => ccs::send(chan(rng), rng.below(16), ccs_term(rng, size - 1)),
        25..=49 => {
            let out = chan(rng);
            let offset = rng.below(8);
            let rest = ccs_term(rng, size - 3);
            ccs::recv(chan(rng), move |v| {
                ccs::send(out, v + offset, rest.clone())
            })
        }
        50..=64 => {
            let left = 1 + rng.below((size - 2) as u64) as usize;
            let right = size - 1 - left;
            ccs::sum(ccs_term(rng, left), ccs_term(rng, right))
        }
        65..=79 => {
            let left = 1 + rng.below((size - 2) as u64) as usize;
            let right = size - 1 - left;
            ccs::par(ccs_term(rng, left), ccs_term(rng, right))
        }
        80..=89 => ccs::res(chan(rng), ccs_term(rng, size - 1)),
        90..=94 => ccs::rep(ccs_term(rng, (size - 1).min(3))),
        _ => ccs::nil(),
    }
}

/// Every razor term of at most `max_size` constructors whose literals come
/// from `values`, in a deterministic order. With `amb_enabled` both binary
/// constructors are enumerated.
pub fn enumerate_razor(max_size: usize, values: &[u64], amb_enabled: bool) -> Vec<Term<RazorF>> {
    let mut by_size: Vec<Vec<Term<RazorF>>> = vec![Vec::new(); max_size + 1];
    for size in 1..=max_size {
        let mut terms = Vec::new();
        if size == 1 {
            terms.extend(values.iter().map(|&v| razor::val(v)));
        }
        if size >= 3 {
            for left in 1..=(size - 2) {
                let right = size - 1 - left;
                for l in &by_size[left] {
                    for r in &by_size[right] {
                        terms.push(razor::add(l.clone(), r.clone()));
                        if amb_enabled {
                            terms.push(razor::amb(l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        by_size[size] = terms;
    }
    by_size.into_iter().flatten().collect()
}

/// A stream-behavior layer over `u64` slots.
pub fn cell_layer(rng: &mut Rng) -> Cell<u64> {
    Cell::new(rng.below(MAX_LIT), rng.below(MAX_LIT))
}

/// A stop-or-step layer over `u64` slots.
pub fn stop_and_go_layer(rng: &mut Rng) -> StopAndGo<u64> {
    if rng.chance(40) {
        StopAndGo::Stopped(rng.below(MAX_LIT))
    } else {
        let n = rng.below(4);
        StopAndGo::Step((0..n).map(|_| rng.below(MAX_LIT)).collect())
    }
}

/// An action-list layer over `u64` slots; receive continuations are affine
/// in the received value so distinct samples give distinct successors.
pub fn acts_layer(rng: &mut Rng) -> Acts<u64> {
    let n = rng.below(4);
    Acts(
        (0..n)
            .map(|_| match rng.below(3) {
                0 => Act::Send(chan(rng).to_string(), rng.below(16), rng.below(MAX_LIT)),
                1 => {
                    let scale = 1 + rng.below(4);
                    let offset = rng.below(16);
                    Act::Recv(chan(rng).to_string(), func(move |v| scale * v + offset))
                }
                _ => Act::Silent(rng.below(MAX_LIT)),
            })
            .collect(),
    )
}

/// A distributive-law input for the stream language.
pub fn stream_law_input(rng: &mut Rng) -> ValAdd<Cell<u64>> {
    if rng.chance(40) {
        ValAdd::Val(rng.below(MAX_LIT))
    } else {
        ValAdd::Add(cell_layer(rng), cell_layer(rng))
    }
}

fn copointed_stop_go(rng: &mut Rng) -> CoPointed<StopAndGoF, u64> {
    CoPointed::new(rng.below(MAX_LIT), stop_and_go_layer(rng))
}

fn copointed_acts(rng: &mut Rng) -> CoPointed<ActsF, u64> {
    CoPointed::new(rng.below(MAX_LIT), acts_layer(rng))
}

/// A rule input for the razor: one syntax layer over copointed behaviors.
pub fn razor_rule_input(rng: &mut Rng) -> razor::Razor<CoPointed<StopAndGoF, u64>> {
    use razor::Razor;
    match rng.below(100) {
        0..=29 => Razor::Val(rng.below(MAX_LIT)),
        30..=69 => Razor::Add(copointed_stop_go(rng), copointed_stop_go(rng)),
        _ => Razor::Amb(copointed_stop_go(rng), copointed_stop_go(rng)),
    }
}

/// A plain literal/addition layer over `u64` slots.
pub fn val_add_layer(rng: &mut Rng) -> ValAdd<u64> {
    if rng.chance(40) {
        ValAdd::Val(rng.below(MAX_LIT))
    } else {
        ValAdd::Add(rng.below(MAX_LIT), rng.below(MAX_LIT))
    }
}

/// A razor syntax layer over `u64` slots.
pub fn razor_layer(rng: &mut Rng) -> razor::Razor<u64> {
    use razor::Razor;
    match rng.below(3) {
        0 => Razor::Val(rng.below(MAX_LIT)),
        1 => Razor::Add(rng.below(MAX_LIT), rng.below(MAX_LIT)),
        _ => Razor::Amb(rng.below(MAX_LIT), rng.below(MAX_LIT)),
    }
}

/// A CCS syntax layer over `u64` slots; receive binders are affine.
pub fn ccs_layer(rng: &mut Rng) -> Ccs<u64> {
    match rng.below(7) {
        0 => Ccs::Send(chan(rng).to_string(), rng.below(16), rng.below(MAX_LIT)),
        1 => {
            let scale = 1 + rng.below(4);
            let offset = rng.below(16);
            Ccs::Recv(chan(rng).to_string(), func(move |v| scale * v + offset))
        }
        2 => Ccs::Sum(rng.below(MAX_LIT), rng.below(MAX_LIT)),
        3 => Ccs::Nil,
        4 => Ccs::Par(rng.below(MAX_LIT), rng.below(MAX_LIT)),
        5 => Ccs::Rep(rng.below(MAX_LIT)),
        _ => Ccs::Restrict(chan(rng).to_string(), rng.below(MAX_LIT)),
    }
}

/// A bare branching layer over `u64` slots.
pub fn branch_layer(rng: &mut Rng) -> Vec<u64> {
    let n = rng.below(5);
    (0..n).map(|_| rng.below(MAX_LIT)).collect()
}

/// A free term over the literal/addition signature with `u64` metavariables.
pub fn free_val_add(rng: &mut Rng, size: usize) -> crate::free::FreeTerm<ValAddF, u64> {
    use crate::free::FreeTerm;
    if size <= 1 {
        if rng.chance(70) {
            FreeTerm::var(rng.below(MAX_LIT))
        } else {
            FreeTerm::op(ValAdd::Val(rng.below(MAX_LIT)))
        }
    } else {
        let left = 1 + rng.below((size - 1).max(1) as u64) as usize;
        let right = (size - left).max(1);
        FreeTerm::op(ValAdd::Add(
            free_val_add(rng, left),
            free_val_add(rng, right),
        ))
    }
}

/// A free razor term with `u64` metavariables.
pub fn free_razor(rng: &mut Rng, size: usize) -> crate::free::FreeTerm<RazorF, u64> {
    use crate::free::FreeTerm;
    use razor::Razor;
    if size <= 1 {
        if rng.chance(70) {
            FreeTerm::var(rng.below(MAX_LIT))
        } else {
            FreeTerm::op(Razor::Val(rng.below(MAX_LIT)))
        }
    } else {
        let left = 1 + rng.below((size - 1).max(1) as u64) as usize;
        let right = (size - left).max(1);
        let l = free_razor(rng, left);
        let r = free_razor(rng, right);
        if rng.chance(50) {
            FreeTerm::op(Razor::Add(l, r))
        } else {
            FreeTerm::op(Razor::Amb(l, r))
        }
    }
}

/// A free CCS term with `u64` metavariables.
pub fn free_ccs(rng: &mut Rng, size: usize) -> crate::free::FreeTerm<CcsF, u64> {
    use crate::free::FreeTerm;
    if size <= 1 {
        if rng.chance(70) {
            FreeTerm::var(rng.below(MAX_LIT))
        } else {
            FreeTerm::op(Ccs::Nil)
        }
    } else {
        match rng.below(5) {
            0 => FreeTerm::op(Ccs::Send(
                chan(rng).to_string(),
                rng.below(16),
                free_ccs(rng, size - 1),
            )),
            1 => {
                let inner = free_ccs(rng, size - 1);
                let scale = 1 + rng.below(4);
                FreeTerm::op(Ccs::Recv(
                    chan(rng).to_string(),
                    func(move |v| {
                        crate::free::bind(
                            inner.clone(),
                            func(move |leaf: u64| FreeTerm::var(leaf + scale * v)),
                        )
                    }),
                ))
            }
            2 => {
                let left = 1 + rng.below((size - 1).max(1) as u64) as usize;
                let right = (size - left).max(1);
                FreeTerm::op(Ccs::Par(free_ccs(rng, left), free_ccs(rng, right)))
            }
            3 => FreeTerm::op(Ccs::Rep(free_ccs(rng, size - 1))),
            _ => FreeTerm::op(Ccs::Restrict(
                chan(rng).to_string(),
                free_ccs(rng, size - 1),
            )),
        }
    }
}

/// A free razor term over copointed behaviors, the input shape of the
/// rule-to-law construction.
pub fn razor_rtl_input(
    rng: &mut Rng,
    size: usize,
) -> crate::free::FreeTerm<RazorF, CoPointed<StopAndGoF, u64>> {
    use crate::free::FreeTerm;
    use razor::Razor;
    if size <= 1 {
        if rng.chance(60) {
            FreeTerm::var(copointed_stop_go(rng))
        } else {
            FreeTerm::op(Razor::Val(rng.below(MAX_LIT)))
        }
    } else {
        let left = 1 + rng.below((size - 1).max(1) as u64) as usize;
        let right = (size - left).max(1);
        let l = razor_rtl_input(rng, left);
        let r = razor_rtl_input(rng, right);
        if rng.chance(50) {
            FreeTerm::op(Razor::Add(l, r))
        } else {
            FreeTerm::op(Razor::Amb(l, r))
        }
    }
}

/// A rule input for CCS: one syntax layer over copointed behaviors.
pub fn ccs_rule_input(rng: &mut Rng) -> Ccs<CoPointed<ActsF, u64>> {
    match rng.below(100) {
        0..=14 => Ccs::Send(chan(rng).to_string(), rng.below(16), copointed_acts(rng)),
        15..=29 => {
            let copy_scale = 1 + rng.below(4);
            let layer_rng = Rng::new(rng.next_u64());
            Ccs::Recv(
                chan(rng).to_string(),
                func(move |v| {
                    let mut r = layer_rng.clone();
                    CoPointed::new(copy_scale * v, acts_layer(&mut r))
                }),
            )
        }
        30..=44 => Ccs::Sum(copointed_acts(rng), copointed_acts(rng)),
        45..=54 => Ccs::Nil,
        55..=74 => Ccs::Par(copointed_acts(rng), copointed_acts(rng)),
        75..=84 => Ccs::Rep(copointed_acts(rng)),
        _ => Ccs::Restrict(chan(rng).to_string(), copointed_acts(rng)),
    }
}
