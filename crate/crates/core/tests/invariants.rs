use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use isg::classification::{
    classify_min_semitransitive, enumerate_minimal_transitive_subsemigroups,
};
use isg::constructions::{build_gt, recognize_brandt};
use isg::search::{
    certify_minimal_transitive, enumerate_subsemigroups, relabeling_invariant_form, Dedupe,
    SearchConfig, Target,
};
use isg::verify::random_gt_presentation;
use isg::{is_transitive, Presentation};

#[test]
fn catalog_entries_are_minimal_and_recognized() {
    for n in 1..=4 {
        let catalog = enumerate_minimal_transitive_subsemigroups(n).unwrap();
        assert_eq!(catalog.len(), catalog.expected_count());
        for e in &catalog.entries {
            assert!(is_transitive(&e.semigroup));
            assert!(certify_minimal_transitive(&e.semigroup).unwrap(), "n = {n}");
            if let Presentation::Brandt(p) = &e.presentation {
                let q = recognize_brandt(&e.semigroup).unwrap();
                assert_eq!(q.group().order(), p.group().order());
                assert_eq!(
                    e.semigroup.len(),
                    p.index_count().pow(2) * p.group().order() + 1
                );
            }
        }
    }
}

#[test]
fn search_is_deterministic_across_thread_counts() {
    let cfg = SearchConfig::new(4)
        .max_cardinality(5)
        .target(Target::SemitransitiveNotTransitive);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| enumerate_subsemigroups(&cfg).unwrap().semigroups)
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn conjugation_dedupe_finds_every_relabeled_copy() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = SearchConfig::new(3)
        .target(Target::Transitive)
        .dedupe(Dedupe::Conjugation);
    let classes = enumerate_subsemigroups(&cfg).unwrap().semigroups;
    let forms: Vec<Vec<String>> = classes.iter().map(relabeling_invariant_form).collect();
    for s in &classes {
        let mut sigma: Vec<usize> = (1..=3).collect();
        sigma.shuffle(&mut rng);
        let moved = relabeling_invariant_form(&s.relabel(&sigma));
        assert_eq!(forms.iter().filter(|f| **f == moved).count(), 1);
    }
    let all = enumerate_subsemigroups(&SearchConfig::new(3).target(Target::Transitive))
        .unwrap()
        .semigroups;
    let distinct: std::collections::BTreeSet<Vec<String>> =
        all.iter().map(relabeling_invariant_form).collect();
    assert_eq!(distinct.len(), classes.len());
}

#[test]
fn classification_inverts_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let p = random_gt_presentation(&mut rng, 2);
        let s = build_gt(&p);
        if s.len() != p.degree() + 1 {
            assert!(matches!(
                classify_min_semitransitive(&s),
                Err(isg::Error::Precondition(_))
            ));
            continue;
        }
        let q = classify_min_semitransitive(&s).unwrap();
        assert_eq!(build_gt(&q), s);
        assert_eq!(q.k(), p.k());
        assert_eq!(q.group().order(), p.degree() / p.k());
        let sizes = q.blocks().iter().map(|b| b.len()).dedup().count();
        assert_eq!(sizes, 1);
    }
}
