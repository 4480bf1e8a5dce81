//! The acceptance criteria as runnable checks, shared by the `acceptance`
//! test target and the `verify` subcommand.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action;
use crate::classification::{
    check_min_semitransitive_structure, classify_min_semitransitive,
    enumerate_minimal_transitive_subsemigroups, extract_inverse_transitive, group_oracle_cap,
    minimal_transitive_subgroups_with_cap,
};
use crate::constructions::{build_brandt, build_gt, gamma, BrandtPresentation, GtPresentation};
use crate::golden;
use crate::partial_perm::{PartialPerm, PointSet};
use crate::perm_group::PermGroup;
use crate::search::{
    certify_minimal_semitransitive, enumerate_subsemigroups, inclusion_minimal,
    relabeling_invariant_form, Dedupe, SearchConfig, SearchStatus, Target,
};
use crate::semigroup::Semigroup;

/// Randomized cases per property suite.
pub const PROPERTY_CASES: usize = 100;
pub const PROPERTY_SEED: u64 = 0x5eed_1505;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Degrees for the counting check.
    pub count_degrees: Vec<usize>,
    /// Degrees for the exhaustive lattice cross-check.
    pub lattice_degrees: Vec<usize>,
    /// Degrees for the capped semitransitive search.
    pub semitransitive_degrees: Vec<usize>,
    pub cases: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            count_degrees: (1..=6).collect(),
            lattice_degrees: vec![2, 3],
            semitransitive_degrees: vec![2, 3, 4],
            cases: PROPERTY_CASES,
            seed: PROPERTY_SEED,
        }
    }
}

impl VerifyConfig {
    /// The default plan with every degree range truncated at `n_max`.
    pub fn up_to(n_max: usize) -> Self {
        let mut cfg = Self::default();
        cfg.count_degrees.retain(|&n| n <= n_max);
        cfg.lattice_degrees.retain(|&n| n <= n_max);
        cfg.semitransitive_degrees.retain(|&n| n <= n_max);
        cfg
    }
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} ({}) [{:.2}s]",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Outcome = Result<String, String>;

fn timed(id: &'static str, title: &'static str, check: impl FnOnce() -> Outcome) -> Criterion {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Criterion {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn parse_all(list: &[&str], degree: usize) -> Result<Vec<PartialPerm>, String> {
    list.iter()
        .map(|s| PartialPerm::parse(s, degree).map_err(|e| format!("{s}: {e}")))
        .collect()
}

fn canonical_strings(elements: impl IntoIterator<Item = PartialPerm>) -> BTreeSet<String> {
    elements.into_iter().map(|e| e.to_string()).collect()
}

fn first_block(d: usize) -> PointSet {
    (1..=d).collect()
}

pub fn golden_brandt() -> Criterion {
    timed("AC1", "Brandt semigroup over C4 in IS_8", || {
        let c4 = PermGroup::generate(4, first_block(4), parse_all(&["(1,2,3,4)"], 4)?)
            .map_err(|e| e.to_string())?;
        let p = BrandtPresentation::standard(8, c4).map_err(|e| e.to_string())?;
        let built = canonical_strings(build_brandt(&p).iter().cloned());
        let listed = canonical_strings(parse_all(&golden::BRANDT_17, 8)?);
        ensure(listed.len() == 17, || {
            format!("listing has {} distinct elements", listed.len())
        })?;
        ensure(built == listed, || {
            format!(
                "built but not listed: {:?}; listed but not built: {:?}",
                built.difference(&listed).collect::<Vec<_>>(),
                listed.difference(&built).collect::<Vec<_>>()
            )
        })?;
        Ok("17 of 17 elements match".into())
    })
}

pub fn golden_gt() -> Criterion {
    timed("AC2", "(G x T^1)/I with k = 4 in IS_8", || {
        let g = PermGroup::generate(8, first_block(2), parse_all(&["(1,2)3]4]5]6]7]8]"], 8)?)
            .map_err(|e| e.to_string())?;
        let p = GtPresentation::standard(8, 4, g).map_err(|e| e.to_string())?;
        ensure(p.chain().to_string() == "(1,3,5,7](2,4,6,8]", || {
            format!("chain is {}", p.chain())
        })?;
        let built = canonical_strings(build_gt(&p).iter().cloned());
        let listed = canonical_strings(parse_all(&golden::GT_9, 8)?);
        ensure(built == listed, || {
            format!(
                "built but not listed: {:?}; listed but not built: {:?}",
                built.difference(&listed).collect::<Vec<_>>(),
                listed.difference(&built).collect::<Vec<_>>()
            )
        })?;
        Ok("9 of 9 elements match".into())
    })
}

pub fn golden_semitransitive() -> Criterion {
    timed(
        "AC3",
        "five-element minimal semitransitive semigroup",
        || {
            let s = Semigroup::closure(parse_all(&golden::FIVE_ELEMENT_GENERATORS, 3)?)
                .map_err(|e| e.to_string())?;
            let listed = canonical_strings(parse_all(&golden::FIVE_ELEMENT, 3)?);
            ensure(canonical_strings(s.iter().cloned()) == listed, || {
                format!("closure is {:?}", s.element_strings())
            })?;
            ensure(action::is_semitransitive(&s), || {
                "not semitransitive".into()
            })?;
            ensure(!action::is_transitive(&s), || "transitive".into())?;
            let minimal = certify_minimal_semitransitive(&s).map_err(|e| e.to_string())?;
            ensure(minimal, || {
                "a proper semitransitive subsemigroup exists".into()
            })?;
            ensure(s.len() > s.degree() + 1, || "not larger than n + 1".into())?;
            Ok("closure matches, semitransitive, not transitive, minimal, 5 > 4".into())
        },
    )
}

pub fn counting(degrees: &[usize]) -> Criterion {
    timed("AC4", "catalog size equals the divisor sum of t(d)", || {
        let cap = group_oracle_cap();
        let mut parts = Vec::new();
        for &n in degrees {
            let catalog =
                enumerate_minimal_transitive_subsemigroups(n).map_err(|e| e.to_string())?;
            let mut expected = 0;
            for d in (1..=n).filter(|d| n % d == 0) {
                expected += minimal_transitive_subgroups_with_cap(d, cap)
                    .map_err(|e| e.to_string())?
                    .count();
            }
            ensure(catalog.len() == expected, || {
                format!("n = {n}: {} entries, divisor sum {expected}", catalog.len())
            })?;
            for e in &catalog.entries {
                ensure(action::is_transitive(&e.semigroup), || {
                    format!("n = {n}: intransitive entry")
                })?;
            }
            parts.push(format!("n={n}:{expected}"));
        }
        Ok(parts.join(" "))
    })
}

pub fn lattice_cross_check(degrees: &[usize]) -> Criterion {
    timed("AC5", "lattice search finds exactly the catalog", || {
        let mut parts = Vec::new();
        for &n in degrees {
            let cfg = SearchConfig::new(n)
                .target(Target::Transitive)
                .dedupe(Dedupe::Conjugation);
            let out = enumerate_subsemigroups(&cfg).map_err(|e| e.to_string())?;
            ensure(out.status == SearchStatus::Complete, || {
                format!("n = {n}: search incomplete")
            })?;
            let found: BTreeSet<Vec<String>> = inclusion_minimal(&out.semigroups)
                .iter()
                .map(relabeling_invariant_form)
                .collect();
            let catalog =
                enumerate_minimal_transitive_subsemigroups(n).map_err(|e| e.to_string())?;
            let listed: BTreeSet<Vec<String>> = catalog
                .entries
                .iter()
                .map(|e| relabeling_invariant_form(&e.semigroup))
                .collect();
            ensure(found == listed, || {
                format!(
                    "n = {n}: search {} classes, catalog {}",
                    found.len(),
                    listed.len()
                )
            })?;
            parts.push(format!("n={n}:{}", found.len()));
        }
        Ok(parts.join(" "))
    })
}

pub fn semitransitive_classification(degrees: &[usize]) -> Criterion {
    timed(
        "AC6",
        "least-size semitransitive semigroups are (G x T^1)/I",
        || {
            let mut parts = Vec::new();
            for &n in degrees {
                let cfg = SearchConfig::new(n)
                    .max_cardinality(n + 1)
                    .target(Target::SemitransitiveNotTransitive);
                let out = enumerate_subsemigroups(&cfg).map_err(|e| e.to_string())?;
                ensure(out.status != SearchStatus::BudgetTruncated, || {
                    format!("n = {n}: budget")
                })?;
                if let Some(s) = out.semigroups.iter().find(|s| s.len() <= n) {
                    return Err(format!(
                        "n = {n}: {} elements: {:?}",
                        s.len(),
                        s.element_strings()
                    ));
                }
                let mut classified = 0;
                for s in &out.semigroups {
                    let report = check_min_semitransitive_structure(s)
                        .map_err(|e| format!("n = {n}: {e}"))?;
                    ensure(report.passed(), || format!("n = {n}: {report}"))?;
                    let p = classify_min_semitransitive(s).map_err(|e| format!("n = {n}: {e}"))?;
                    ensure(build_gt(&p) == *s, || format!("n = {n}: rebuild differs"))?;
                    classified += 1;
                }
                ensure(classified > 0, || format!("n = {n}: nothing found"))?;
                parts.push(format!("n={n}:{classified}"));
            }
            Ok(parts.join(" "))
        },
    )
}

pub fn random_partial_perm(rng: &mut impl Rng, n: usize, density: f64) -> PartialPerm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    let pairs: Vec<(usize, usize)> = (1..=n)
        .zip(images)
        .filter(|_| rng.gen_bool(density))
        .collect();
    PartialPerm::from_pairs(n, pairs).expect("injective by construction")
}

fn random_permutation_of(rng: &mut impl Rng, degree: usize, points: &[usize]) -> PartialPerm {
    let mut images = points.to_vec();
    images.shuffle(rng);
    PartialPerm::from_pairs(degree, points.iter().copied().zip(images)).expect("bijection")
}

fn random_blocks(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut points: Vec<usize> = (1..=n).collect();
    points.shuffle(rng);
    points.chunks(n / k).map(|c| c.to_vec()).collect()
}

/// Random blocks, group and bijections with block size 1..=3 and 2..=3 blocks.
pub fn random_brandt_presentation(rng: &mut impl Rng) -> BrandtPresentation {
    let d = rng.gen_range(1..=3);
    let k = rng.gen_range(2..=3);
    let n = d * k;
    let blocks = random_blocks(rng, n, k);
    let gens: Vec<PartialPerm> = (0..rng.gen_range(1..=2))
        .map(|_| random_permutation_of(rng, n, &blocks[0]))
        .collect();
    let first: PointSet = blocks[0].iter().copied().collect();
    let group = PermGroup::generate(n, first, gens).expect("permutations of the first block");
    let bijections = blocks
        .iter()
        .map(|b| {
            let mut target = b.clone();
            target.shuffle(rng);
            PartialPerm::from_pairs(n, blocks[0].iter().copied().zip(target)).expect("bijection")
        })
        .collect();
    let sets = blocks.iter().map(|b| b.iter().copied().collect()).collect();
    BrandtPresentation::new(n, sets, group, bijections).expect("valid by construction")
}

/// Random labeled blocks and a random transitive group on the first one.
pub fn random_gt_presentation(rng: &mut impl Rng, min_k: usize) -> GtPresentation {
    let m = rng.gen_range(1..=3);
    let k = rng.gen_range(min_k.max(2)..=4);
    let n = m * k;
    let blocks = random_blocks(rng, n, k);
    let first: PointSet = blocks[0].iter().copied().collect();
    loop {
        let gens: Vec<PartialPerm> = (0..rng.gen_range(1..=2))
            .map(|_| random_permutation_of(rng, n, &blocks[0]))
            .collect();
        let group =
            PermGroup::generate(n, first.clone(), gens).expect("permutations of the first block");
        if group.is_transitive() {
            return GtPresentation::new(n, blocks, group).expect("valid by construction");
        }
    }
}

/// Closure of one to three random elements of `IS_n`.
pub fn random_closure(rng: &mut impl Rng, n: usize, density: f64) -> Semigroup {
    let count = rng.gen_range(1..=3);
    Semigroup::closure((0..count).map(|_| random_partial_perm(rng, n, density))).expect("non-empty")
}

/// Rejection-samples random closures until one is transitive.
pub fn random_transitive_closure(rng: &mut impl Rng, n: usize) -> Semigroup {
    loop {
        let s = random_closure(rng, n, 0.8);
        if action::is_transitive(&s) {
            return s;
        }
    }
}

fn suite(
    name: &str,
    cases: usize,
    mut case: impl FnMut(usize) -> Result<(), String>,
) -> Result<String, String> {
    for i in 0..cases {
        case(i).map_err(|e| format!("{name}, case {i}: {e}"))?;
    }
    Ok(format!("{name}:{cases}"))
}

fn brandt_law(p: &BrandtPresentation) -> Result<(), String> {
    let k = p.index_count();
    let group = p.group().elements();
    for i in 0..k {
        for j in 0..k {
            for g in group {
                let a = p.element(i, g, j);
                for l in 0..k {
                    for m in 0..k {
                        for h in group {
                            let b = p.element(l, h, m);
                            let want = if j == l {
                                p.element(i, &(g * h), m)
                            } else {
                                PartialPerm::zero(p.degree())
                            };
                            if &a * &b != want {
                                return Err(format!("M({i},{g},{j}) M({l},{h},{m})"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn property_suites(cases: usize, seed: u64) -> Criterion {
    timed("AC7", "randomized property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done = Vec::new();

        done.push(suite("laws", cases, |_| {
            let n = rng.gen_range(1..=8);
            let [f, g, h] = [0; 3].map(|_| random_partial_perm(&mut rng, n, 0.7));
            ensure(&(&f * &g) * &h == &f * &(&g * &h), || {
                format!("associativity {f} {g} {h}")
            })?;
            let fi = f.inverse();
            ensure(&(&f * &fi) * &f == f, || format!("f f' f for {f}"))?;
            ensure(&(&fi * &f) * &fi == fi, || format!("f' f f' for {f}"))?;
            ensure((&f * &g).inverse() == &g.inverse() * &fi, || {
                format!("(fg)' for {f} {g}")
            })
        })?);

        done.push(suite("round-trip", cases, |_| {
            let n = rng.gen_range(1..=9);
            let f = random_partial_perm(&mut rng, n, 0.6);
            let text = f.to_string();
            let back = PartialPerm::parse(&text, n).map_err(|e| format!("{text}: {e}"))?;
            ensure(back == f && back.to_string() == text, || {
                format!("{text} came back as {back}")
            })
        })?);

        done.push(suite("brandt", cases, |_| {
            let p = random_brandt_presentation(&mut rng);
            let s = build_brandt(&p);
            let k = p.index_count();
            let d = p.blocks()[0].len();
            ensure(s.len() == k * k * p.group().order() + 1, || {
                format!("size {}", s.len())
            })?;
            ensure(s.iter().all(|f| f.is_zero() || f.rank() == d), || {
                "non-uniform rank".into()
            })?;
            brandt_law(&p)
        })?);

        done.push(suite("implications", cases, |i| {
            let s = if i % 4 == 0 {
                build_brandt(&random_brandt_presentation(&mut rng))
            } else {
                let n = rng.gen_range(2..=4);
                random_closure(&mut rng, n, 0.7)
            };
            let tr = action::is_transitive(&s);
            let semi = action::is_semitransitive(&s);
            ensure(!tr || semi, || {
                format!(
                    "transitive but not semitransitive: {:?}",
                    s.element_strings()
                )
            })?;
            ensure(!(semi && s.is_inverse_semigroup()) || tr, || {
                format!(
                    "inverse, semitransitive, intransitive: {:?}",
                    s.element_strings()
                )
            })
        })?);

        let emitted = enumerate_subsemigroups(
            &SearchConfig::new(3).target(Target::SemitransitiveNotTransitive),
        )
        .map_err(|e| e.to_string())?
        .semigroups;
        done.push(suite("zero-and-nilpotent", emitted.len(), |i| {
            let s = &emitted[i];
            ensure(s.zero().is_some(), || {
                format!("no zero in {:?}", s.element_strings())
            })?;
            ensure(!s.nilpotents().is_empty(), || {
                format!("no nilpotent in {:?}", s.element_strings())
            })
        })?);

        done.push(suite("extraction", cases, |_| {
            let s = random_transitive_closure(&mut rng, 4);
            let t = extract_inverse_transitive(&s).map_err(|e| e.to_string())?;
            ensure(t.is_subset_of(&s), || "not a subset".into())?;
            ensure(t.is_inverse_semigroup(), || "not inverse".into())?;
            ensure(action::is_transitive(&t), || "not transitive".into())
        })?);

        done.push(suite("gamma", cases, |_| {
            let p = random_gt_presentation(&mut rng, 3);
            let s = build_gt(&p);
            let r = action::r_structure(&s).map_err(|e| e.to_string())?;
            let red = gamma(&s, &r).map_err(|e| e.to_string())?;
            ensure(red.is_homomorphism(&s), || {
                format!("not a homomorphism on k = {}", p.k())
            })?;
            ensure(red.image().len() == s.len() - p.group().order(), || {
                "image size".into()
            })
        })?);

        ensure(emitted.len() >= cases, || {
            format!(
                "only {} semigroups for the zero-and-nilpotent suite",
                emitted.len()
            )
        })?;
        Ok(done.join(" "))
    })
}

/// Runs every criterion in dependency order.
pub fn run(cfg: &VerifyConfig) -> Vec<Criterion> {
    vec![
        golden_brandt(),
        golden_gt(),
        golden_semitransitive(),
        counting(&cfg.count_degrees),
        lattice_cross_check(&cfg.lattice_degrees),
        semitransitive_classification(&cfg.semitransitive_degrees),
        property_suites(cfg.cases, cfg.seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_criteria_pass() {
        for c in [golden_brandt(), golden_gt(), golden_semitransitive()] {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn small_plan_passes() {
        let cfg = VerifyConfig::up_to(3);
        for c in [
            counting(&cfg.count_degrees),
            lattice_cross_check(&cfg.lattice_degrees),
            semitransitive_classification(&cfg.semitransitive_degrees),
        ] {
            assert!(c.passed, "{c}");
        }
    }
}
