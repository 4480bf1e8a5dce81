//! Capped search for semitransitive, non-transitive subsemigroups of `IS_n`
//! with at most `n + 1` elements, each classified as a `(G x T^1)/I`.
//!
//!     cargo run --release --example search -- 4

use isg::{
    build_gt, classify_min_semitransitive, enumerate_subsemigroups, Dedupe, SearchConfig, Target,
};

fn main() -> Result<(), isg::Error> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let cfg = SearchConfig::new(n)
        .max_cardinality(n + 1)
        .target(Target::SemitransitiveNotTransitive)
        .dedupe(Dedupe::Conjugation);
    let out = enumerate_subsemigroups(&cfg)?;
    println!(
        "{:?} after {} closed sets; {} classes up to relabeling",
        out.status,
        out.nodes,
        out.semigroups.len()
    );
    for s in &out.semigroups {
        let p = classify_min_semitransitive(s)?;
        assert_eq!(build_gt(&p), *s);
        println!(
            "  k = {}, |G| = {}: {}",
            p.k(),
            p.group().order(),
            s.element_strings().join(" ")
        );
    }
    Ok(())
}
