//! The property suites behind `bialg check`. Every report line carries the
//! parameters (seed, depth, samples) needed to replay it; the first failing
//! term is printed in materialized form.

use bialg::equiv::gen::{self, Lang, Rng};
use bialg::equiv::{term_tab, truncate, Materialize, SampleConfig, TruncTree};
use bialg::gsos;
use bialg::lang::ccs::CcsRules;
use bialg::lang::razor::{amb_free_sum, matches_oracle, razor_oracle, sem_razor, RazorRules};
use bialg::lang::stream::{labels, sem_stream, term_sum, StreamLaw};
use bialg::law;
use bialg::rec::{func, Behavior, Shape, Term};

fn term_size(rng: &mut Rng, lang: Lang) -> usize {
    match lang {
        Lang::Stream | Lang::Razor | Lang::RazorAmb => 1 + rng.below(16) as usize,
        Lang::Ccs => 2 + rng.below(9) as usize,
    }
}

struct Outcome {
    passed: usize,
    failed: usize,
    first_failure: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn report(&self, suite: &str, lang: &str, params: &str) -> bool {
        let total = self.passed + self.failed;
        println!("{suite} {lang}: {}/{} passed ({params})", self.passed, total);
        if let Some(cx) = &self.first_failure {
            println!("first counterexample: {cx}");
        }
        self.failed == 0
    }
}

// One coincidence comparison per generated term, dispatched by language so
// each uses its own pipeline.
fn per_lang<SBuild, GBuild, CBuild>(
    lang: Lang,
    terms: usize,
    seed: u64,
    mut stream_case: SBuild,
    mut razor_case: GBuild,
    mut ccs_case: CBuild,
) -> Outcome
where
    SBuild: FnMut(&Term<bialg::lang::stream::ValAddF>) -> bool,
    GBuild: FnMut(&Term<bialg::lang::razor::RazorF>) -> bool,
    CBuild: FnMut(&Term<bialg::lang::ccs::CcsF>) -> bool,
{
    let mut rng = Rng::new(seed);
    let mut outcome = Outcome::new();
    let samples = [0, 1, 2, 3];
    for index in 0..terms {
        let size = term_size(&mut rng, lang);
        match lang {
            Lang::Stream => {
                let t = gen::stream_term(&mut rng, size);
                outcome.record(stream_case(&t), || {
                    format!("term #{index} (size {size}): {:?}", term_tab(&t, &samples))
                });
            }
            Lang::Razor | Lang::RazorAmb => {
                let t = gen::razor_term(&mut rng, size, lang == Lang::RazorAmb);
                outcome.record(razor_case(&t), || {
                    format!("term #{index} (size {size}): {:?}", term_tab(&t, &samples))
                });
            }
            Lang::Ccs => {
                let t = gen::ccs_term(&mut rng, size);
                outcome.record(ccs_case(&t), || {
                    format!("term #{index} (size {size}): {:?}", term_tab(&t, &samples))
                });
            }
        }
    }
    outcome
}

fn trees_equal<B: Materialize>(a: &Behavior<B>, b: &Behavior<B>, cfg: &SampleConfig) -> bool {
    truncate(a, cfg) == truncate(b, cfg)
}

pub fn coincidence(lang: Lang, terms: usize, depth: usize, samples: &[u64], seed: u64) -> bool {
    let cfg = SampleConfig::new(depth, samples.to_vec(), seed);
    let outcome = per_lang(
        lang,
        terms,
        seed,
        |t| trees_equal(&law::sem(&StreamLaw, t), &law::sem_via_unfold(&StreamLaw, t), &cfg),
        |t| {
            trees_equal(
                &gsos::sem(&RazorRules, t),
                &gsos::sem_via_unfold(&RazorRules, t),
                &cfg,
            )
        },
        |t| {
            trees_equal(
                &gsos::sem(&CcsRules, t),
                &gsos::sem_via_unfold(&CcsRules, t),
                &cfg,
            )
        },
    );
    outcome.report(
        "coincidence",
        lang.name(),
        &format!("seed={seed}, depth={depth}, samples={}", samples.len()),
    )
}

pub fn compositionality(
    lang: Lang,
    terms: usize,
    depth: usize,
    samples: &[u64],
    seed: u64,
) -> bool {
    let cfg = SampleConfig::new(depth, samples.to_vec(), seed);
    let outcome = per_lang(
        lang,
        terms,
        seed,
        |t| {
            let via_parts = law::desem(
                &StreamLaw,
                <bialg::lang::stream::ValAddF as Shape>::map(
                    t.node(),
                    func(|sub: Term<bialg::lang::stream::ValAddF>| law::sem(&StreamLaw, &sub)),
                ),
            );
            trees_equal(&law::sem(&StreamLaw, t), &via_parts, &cfg)
        },
        |t| {
            let via_parts = gsos::desem(
                &RazorRules,
                <bialg::lang::razor::RazorF as Shape>::map(
                    t.node(),
                    func(|sub: Term<bialg::lang::razor::RazorF>| gsos::sem(&RazorRules, &sub)),
                ),
            );
            trees_equal(&gsos::sem(&RazorRules, t), &via_parts, &cfg)
        },
        |t| {
            let via_parts = gsos::desem(
                &CcsRules,
                <bialg::lang::ccs::CcsF as Shape>::map(
                    t.node(),
                    func(|sub: Term<bialg::lang::ccs::CcsF>| gsos::sem(&CcsRules, &sub)),
                ),
            );
            trees_equal(&gsos::sem(&CcsRules, t), &via_parts, &cfg)
        },
    );
    outcome.report(
        "compositionality",
        lang.name(),
        &format!("seed={seed}, depth={depth}, samples={}", samples.len()),
    )
}

pub fn razor_oracle_suite(amb_enabled: bool, exhaustive_size: usize) -> bool {
    let values = [0u64, 1, 2];
    let terms = gen::enumerate_razor(exhaustive_size, &values, amb_enabled);
    let mut outcome = Outcome::new();
    for (index, t) in terms.iter().enumerate() {
        let ok = match razor_oracle(t, exhaustive_size) {
            Ok(tree) => matches_oracle(&sem_razor(t), &tree, 64),
            Err(_) => false,
        };
        outcome.record(ok, || {
            format!("term #{index}: {:?}", term_tab(t, &[0, 1, 2, 3]))
        });
    }
    let lang = if amb_enabled { "razor+amb" } else { "razor" };
    let mut all_ok = outcome.report(
        "oracle",
        lang,
        &format!("exhaustive, size<={exhaustive_size}, literals in {values:?}"),
    );

    if !amb_enabled {
        // Without branching the rule pipeline must agree with plain
        // evaluation: one leaf carrying the term's sum.
        let mut sums = Outcome::new();
        for (index, t) in terms.iter().enumerate() {
            let expected = amb_free_sum(t).expect("enumerated without amb");
            let tree: TruncTree<bialg::lang::razor::StopAndGoF> =
                truncate(&sem_razor(t), &SampleConfig::with_depth(2));
            let ok = match tree {
                TruncTree::Node(layer) => {
                    matches!(*layer, bialg::lang::razor::StopAndGo::Stopped(n) if n == expected)
                }
                TruncTree::Cut => false,
            };
            sums.record(ok, || {
                format!("term #{index}: {:?}", term_tab(t, &[0, 1, 2, 3]))
            });
        }
        all_ok &= sums.report("oracle (leaf sums)", lang, "exhaustive");
    }
    all_ok
}

pub fn stream_oracle_suite(terms: usize, depth: usize, seed: u64) -> bool {
    let mut rng = Rng::new(seed);
    let mut outcome = Outcome::new();
    for index in 0..terms {
        let size = 1 + rng.below(16) as usize;
        let t = gen::stream_term(&mut rng, size);
        let expected = term_sum(&t);
        let ok = labels(&sem_stream(&t), depth) == vec![expected; depth];
        outcome.record(ok, || {
            format!("term #{index} (size {size}): {:?}", term_tab(&t, &[0]))
        });
    }
    outcome.report(
        "oracle",
        "stream",
        &format!("seed={seed}, labels checked to depth {depth}"),
    )
}
