//! Simple distributive laws and the semantics they induce.
//!
//! A [`DistLaw`] rearranges one layer of syntax over one layer of behavior.
//! From it we derive, in one construction each:
//!
//! - the operational model [`opsem`], a coalgebra on terms built as a fold;
//! - the denotational model [`desem`], an algebra on behaviors built as an
//!   unfold;
//! - the universal semantics [`sem`], the fold of the denotational model,
//!   which coincides at every depth with the unfold of the operational model
//!   ([`sem_via_unfold`]).

use crate::rec::{ana, cata, func, Behavior, Func, Of, Shape, Term, Value};

/// A distributive law of signature `Sig` over behavior `Bhv`.
///
/// `dist` must be uniform in `X`: it may rearrange slot values but never
/// inspect or fabricate them. Uniformity cannot be expressed in the type, so
/// the naturality law `B::map(S::map(f)) . dist == dist . S::map(B::map(f))`
/// is checked by the test suite on sampled inputs.
pub trait DistLaw: Clone + 'static {
    type Sig: Shape;
    type Bhv: Shape;

    fn dist<X: Value>(
        &self,
        layer: Of<Self::Sig, Of<Self::Bhv, X>>,
    ) -> Of<Self::Bhv, Of<Self::Sig, X>>;
}

/// One observation step of a term, computed as a fold over the law.
pub fn opsem<L: DistLaw>(law: &L, t: &Term<L::Sig>) -> Of<L::Bhv, Term<L::Sig>> {
    cata(opsem_alg(law), t)
}

fn opsem_alg<L: DistLaw>(
    law: &L,
) -> Func<Of<L::Sig, Of<L::Bhv, Term<L::Sig>>>, Of<L::Bhv, Term<L::Sig>>> {
    let law = law.clone();
    func(move |layer| <L::Bhv>::map(law.dist(layer), func(Term::new)))
}

/// The operational model as a reusable coalgebra value.
pub fn opsem_coalg<L: DistLaw>(law: &L) -> Func<Term<L::Sig>, Of<L::Bhv, Term<L::Sig>>> {
    let law = law.clone();
    func(move |t| opsem(&law, &t))
}

/// Folds one layer of syntax over behaviors into a behavior, as an unfold.
pub fn desem<L: DistLaw>(law: &L, layer: Of<L::Sig, Behavior<L::Bhv>>) -> Behavior<L::Bhv> {
    ana(desem_step(law), layer)
}

fn desem_step<L: DistLaw>(
    law: &L,
) -> Func<Of<L::Sig, Behavior<L::Bhv>>, Of<L::Bhv, Of<L::Sig, Behavior<L::Bhv>>>> {
    let law = law.clone();
    func(move |layer: Of<L::Sig, Behavior<L::Bhv>>| {
        law.dist(<L::Sig>::map(
            layer,
            func(|b: Behavior<L::Bhv>| b.observe()),
        ))
    })
}

/// The denotational model as a reusable algebra value.
pub fn desem_alg<L: DistLaw>(law: &L) -> Func<Of<L::Sig, Behavior<L::Bhv>>, Behavior<L::Bhv>> {
    let law = law.clone();
    func(move |layer| desem(&law, layer))
}

/// Universal semantics: the fold of the denotational model.
pub fn sem<L: DistLaw>(law: &L, t: &Term<L::Sig>) -> Behavior<L::Bhv> {
    cata(desem_alg(law), t)
}

/// The same map along the operational route: the unfold of the operational
/// model. Coincides with [`sem`] at every truncation depth.
pub fn sem_via_unfold<L: DistLaw>(law: &L, t: &Term<L::Sig>) -> Behavior<L::Bhv> {
    ana(opsem_coalg(law), t.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::gen::{stream_term, Rng};
    use crate::equiv::{beh_eq, term_tab, SampleConfig};
    use crate::lang::stream::{
        add, labels, opsem_reference, sem_stream, term_sum, val, Cell, StreamLaw, ValAdd,
    };

    fn stream_term_eq(a: &Term<crate::lang::stream::ValAddF>, b: &Term<crate::lang::stream::ValAddF>) -> bool {
        let samples = [0];
        term_tab(a, &samples) == term_tab(b, &samples)
    }

    #[test]
    fn opsem_on_a_literal_repeats_it() {
        let Cell { head, tail } = opsem(&StreamLaw, &val(5));
        assert_eq!(head, 5);
        assert!(stream_term_eq(&tail, &val(5)));
    }

    #[test]
    fn opsem_on_an_addition_sums_the_heads() {
        let t = add(val(1), val(2));
        let Cell { head, tail } = opsem(&StreamLaw, &t);
        assert_eq!(head, 3);
        assert!(stream_term_eq(&tail, &t));
    }

    #[test]
    fn opsem_agrees_with_the_recursive_transcription() {
        let mut rng = Rng::new(0xA11CE);
        for _ in 0..100 {
            let size = 1 + rng.below(20) as usize;
            let t = stream_term(&mut rng, size);
            let derived = opsem(&StreamLaw, &t);
            let reference = opsem_reference(&t);
            assert_eq!(derived.head, reference.head);
            assert!(stream_term_eq(&derived.tail, &reference.tail));
        }
    }

    #[test]
    fn desem_on_a_literal_layer_is_a_constant_stream() {
        let b = desem(&StreamLaw, ValAdd::Val(7));
        assert_eq!(labels(&b, 5), vec![7; 5]);
    }

    #[test]
    fn desem_on_an_addition_layer_sums_pointwise() {
        // Oracle: zip the operand label sequences with addition.
        let ramp = |start: u64| ana(func(move |n: u64| Cell::new(n, n + 1)), start);
        let a = ramp(3);
        let b = ramp(10);
        let expect: Vec<u64> = (0..10).map(|i| (3 + i) + (10 + i)).collect();
        let summed = desem(&StreamLaw, ValAdd::Add(a, b));
        assert_eq!(labels(&summed, 10), expect);
    }

    #[test]
    fn desem_on_a_constant_shape_reproduces_the_constant_stream() {
        let b = desem(&StreamLaw, ValAdd::Val(0));
        assert_eq!(labels(&b, 6), vec![0; 6]);
    }

    #[test]
    fn sem_of_small_sums() {
        assert_eq!(labels(&sem(&StreamLaw, &add(val(2), val(3))), 4), vec![5; 4]);
        assert_eq!(labels(&sem(&StreamLaw, &val(0)), 4), vec![0; 4]);
    }

    #[test]
    fn both_routes_coincide_on_random_terms() {
        let mut rng = Rng::new(0xC01D);
        let cfg = SampleConfig::with_depth(8);
        for _ in 0..50 {
            let size = 1 + rng.below(16) as usize;
            let t = stream_term(&mut rng, size);
            assert!(beh_eq(&sem(&StreamLaw, &t), &sem_via_unfold(&StreamLaw, &t), &cfg));
        }
    }

    #[test]
    fn sem_stream_labels_equal_the_term_sum() {
        let mut rng = Rng::new(7);
        for _ in 0..40 {
            let size = 1 + rng.below(16) as usize;
            let t = stream_term(&mut rng, size);
            assert_eq!(labels(&sem_stream(&t), 10), vec![term_sum(&t); 10]);
        }
    }
}
