//! Brute-force verification machinery: enumeration of the closed subsets of
//! `IS_n` and minimality certificates.
//!
//! Enumeration grows closed sets one element at a time, re-closing after
//! each addition and keeping a visited set of closed sets (optionally up to
//! relabeling of points). Expansion runs level by level; each level is
//! expanded in parallel and merged in a fixed order, so results never depend
//! on scheduling.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::action;
use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;
use crate::semigroup::Semigroup;

/// Uncapped enumeration is only attempted up to this degree.
pub const MAX_UNCAPPED_DEGREE: usize = 3;
/// Capped enumeration is only attempted up to this degree.
pub const MAX_SEARCH_DEGREE: usize = 6;
/// Default size limit for minimality certificates.
pub const CERTIFY_THRESHOLD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Any,
    Transitive,
    SemitransitiveNotTransitive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedupe {
    None,
    /// Identify semigroups that differ by a relabeling of the points.
    Conjugation,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub degree: usize,
    pub max_cardinality: Option<usize>,
    pub target: Target,
    pub dedupe: Dedupe,
    pub node_budget: u64,
}

impl SearchConfig {
    pub fn new(degree: usize) -> Self {
        SearchConfig {
            degree,
            max_cardinality: None,
            target: Target::Any,
            dedupe: Dedupe::None,
            node_budget: 5_000_000,
        }
    }

    pub fn max_cardinality(mut self, cap: usize) -> Self {
        self.max_cardinality = Some(cap);
        self
    }

    pub fn target(mut self, target: Target) -> Self {
        self.target = target;
        self
    }

    pub fn dedupe(mut self, dedupe: Dedupe) -> Self {
        self.dedupe = dedupe;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every closed subset was visited.
    Complete,
    /// Every closed subset within the cardinality cap was visited; larger
    /// ones exist.
    CapTruncated,
    /// The node budget ran out; results are partial.
    BudgetTruncated,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Matching semigroups, sorted by size and then canonical element list.
    pub semigroups: Vec<Semigroup>,
    pub status: SearchStatus,
    /// Closed sets visited.
    pub nodes: u64,
}

/// All of `IS_n` with a product table or a direct code lookup.
struct Universe {
    degree: usize,
    elements: Vec<PartialPerm>,
    code_to_index: Vec<u32>,
    table: Option<Vec<u16>>,
    arrows: Vec<Vec<(usize, usize)>>,
}

impl Universe {
    fn new(degree: usize) -> Self {
        let base = degree + 1;
        let codes = base.pow(degree as u32);
        let mut elements = Vec::new();
        for code in 0..codes {
            let mut c = code;
            let images: Vec<u32> = (0..degree)
                .map(|_| {
                    let y = (c % base) as u32;
                    c /= base;
                    y
                })
                .collect();
            let mut seen = vec![false; base];
            if images
                .iter()
                .all(|&y| y == 0 || !std::mem::replace(&mut seen[y as usize], true))
            {
                elements.push(PartialPerm::from_raw(images));
            }
        }
        let mut keyed: Vec<(String, PartialPerm)> =
            elements.into_iter().map(|e| (e.to_string(), e)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let elements: Vec<PartialPerm> = keyed.into_iter().map(|(_, e)| e).collect();
        let mut code_to_index = vec![u32::MAX; codes];
        for (i, e) in elements.iter().enumerate() {
            code_to_index[e.encode()] = i as u32;
        }
        let arrows = elements.iter().map(|e| e.arrows().collect()).collect();
        let mut u = Universe {
            degree,
            elements,
            code_to_index,
            table: None,
            arrows,
        };
        if u.elements.len() <= 2000 {
            let m = u.elements.len();
            let mut table = Vec::with_capacity(m * m);
            for a in 0..m {
                for b in 0..m {
                    table.push(u.compute_product(a, b) as u16);
                }
            }
            u.table = Some(table);
        }
        u
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn compute_product(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose_unchecked(&self.elements[b]);
        self.code_to_index[p.encode()] as usize
    }

    #[inline]
    fn product(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.len() + b] as usize,
            None => self.compute_product(a, b),
        }
    }

    fn index_of(&self, f: &PartialPerm) -> usize {
        self.code_to_index[f.encode()] as usize
    }

    /// Re-closes `base ∪ {x}`; `None` once the result exceeds `cap`.
    fn extend(&self, base: &[u32], member: &[bool], x: usize, cap: usize) -> Option<Vec<u32>> {
        let mut elems: Vec<u32> = base.to_vec();
        let mut added: Vec<u32> = Vec::new();
        let contains = |added: &[u32], y: u32| member[y as usize] || added.contains(&y);
        elems.push(x as u32);
        added.push(x as u32);
        if elems.len() > cap {
            return None;
        }
        let mut i = base.len();
        while i < elems.len() {
            let a = elems[i] as usize;
            for j in 0..=i {
                let b = elems[j] as usize;
                for p in [self.product(a, b), self.product(b, a)] {
                    let p = p as u32;
                    if !contains(&added, p) {
                        elems.push(p);
                        added.push(p);
                        if elems.len() > cap {
                            return None;
                        }
                    }
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// Index maps of all point relabelings, identity first.
    fn relabelings(&self) -> Vec<Vec<u32>> {
        (1..=self.degree)
            .permutations(self.degree)
            .map(|sigma| {
                self.elements
                    .iter()
                    .map(|e| self.index_of(&e.relabel(&sigma)) as u32)
                    .collect()
            })
            .collect()
    }

    fn matches(&self, elems: &[u32], target: Target) -> bool {
        if target == Target::Any {
            return true;
        }
        let n = self.degree;
        let mut reach = vec![false; (n + 1) * (n + 1)];
        for &e in elems {
            for &(x, y) in &self.arrows[e as usize] {
                reach[x * (n + 1) + y] = true;
            }
        }
        let r = |x: usize, y: usize| reach[x * (n + 1) + y];
        let transitive = (1..=n).all(|x| (1..=n).all(|y| r(x, y)));
        match target {
            Target::Any => true,
            Target::Transitive => transitive,
            Target::SemitransitiveNotTransitive => {
                !transitive && (1..=n).all(|x| (x..=n).all(|y| r(x, y) || r(y, x)))
            }
        }
    }

    fn to_semigroup(&self, elems: &[u32]) -> Semigroup {
        Semigroup::from_closed(
            self.degree,
            elems
                .iter()
                .map(|&i| self.elements[i as usize].clone())
                .collect(),
        )
    }
}

fn canonical_key(elems: &[u32], relabelings: &[Vec<u32>]) -> Vec<u32> {
    relabelings
        .iter()
        .map(|map| {
            let mut image: Vec<u32> = elems.iter().map(|&e| map[e as usize]).collect();
            image.sort_unstable();
            image
        })
        .min()
        .expect("at least the identity relabeling")
}

/// Enumerates the closed subsets of `IS_n` within the configured caps and
/// returns those matching the target.
pub fn enumerate_subsemigroups(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let n = cfg.degree;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    match cfg.max_cardinality {
        None if n > MAX_UNCAPPED_DEGREE => {
            return Err(Error::Precondition(format!(
                "uncapped enumeration is limited to degree {MAX_UNCAPPED_DEGREE}; set a cardinality cap"
            )))
        }
        Some(_) if n > MAX_SEARCH_DEGREE => {
            return Err(Error::Precondition(format!(
                "capped enumeration is limited to degree {MAX_SEARCH_DEGREE}"
            )))
        }
        Some(0) => return Err(Error::Precondition("cardinality cap must be positive".into())),
        _ => {}
    }
    let universe = Universe::new(n);
    let cap = cfg.max_cardinality.unwrap_or(usize::MAX);
    let relabelings = match cfg.dedupe {
        Dedupe::None => vec![(0..universe.len() as u32).collect()],
        Dedupe::Conjugation => universe.relabelings(),
    };

    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut found: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut cap_hit = false;
    let mut nodes: u64 = 0;
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    let mut root = true;

    while !frontier.is_empty() {
        let expansions: Vec<(Vec<Vec<u32>>, bool)> = frontier
            .par_iter()
            .map(|base| {
                let mut member = vec![false; universe.len()];
                for &e in base {
                    member[e as usize] = true;
                }
                let mut children = Vec::new();
                let mut hit = false;
                let mut seen_here: HashSet<Vec<u32>> = HashSet::new();
                for x in 0..universe.len() {
                    if member[x] {
                        continue;
                    }
                    match universe.extend(base, &member, x, cap) {
                        None => hit = true,
                        Some(child) => {
                            if seen_here.insert(child.clone()) {
                                children.push(child);
                            }
                        }
                    }
                }
                (children, hit)
            })
            .collect();
        if !root {
            nodes += frontier.len() as u64;
        }
        root = false;
        let mut next = Vec::new();
        for (children, hit) in expansions {
            cap_hit |= hit;
            for child in children {
                let key = canonical_key(&child, &relabelings);
                if visited.insert(key.clone()) {
                    if universe.matches(&child, cfg.target) {
                        found.push((key, child.clone()));
                    }
                    next.push(child);
                }
            }
        }
        if nodes + next.len() as u64 > cfg.node_budget {
            return Err(Error::BudgetExhausted {
                budget: cfg.node_budget,
                found: found.len(),
            });
        }
        frontier = next;
    }

    found.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let semigroups = found
        .iter()
        .map(|(key, _)| universe.to_semigroup(key))
        .collect();
    Ok(SearchOutcome {
        semigroups,
        status: if cap_hit {
            SearchStatus::CapTruncated
        } else {
            SearchStatus::Complete
        },
        nodes,
    })
}

/// All of `IS_n` as a semigroup.
pub fn full_inverse_symmetric_semigroup(n: usize) -> Semigroup {
    let u = Universe::new(n);
    Semigroup::from_closed(n, u.elements)
}

/// The least sorted element-string list over all relabelings of the points:
/// equal exactly for semigroups that differ by a relabeling.
pub fn relabeling_invariant_form(s: &Semigroup) -> Vec<String> {
    (1..=s.degree())
        .permutations(s.degree())
        .map(|sigma| {
            let mut image: Vec<String> = s.iter().map(|e| e.relabel(&sigma).to_string()).collect();
            image.sort();
            image
        })
        .min()
        .expect("at least one relabeling")
}

/// Keeps the semigroups of `list` that contain no relabeled copy of another
/// member as a proper subset.
pub fn inclusion_minimal(list: &[Semigroup]) -> Vec<Semigroup> {
    list.iter()
        .filter(|s| {
            !list.iter().any(|t| {
                t.len() < s.len()
                    && t.degree() == s.degree()
                    && (1..=t.degree())
                        .permutations(t.degree())
                        .any(|sigma| t.iter().all(|e| s.contains(&e.relabel(&sigma))))
            })
        })
        .cloned()
        .collect()
}

enum Requirement {
    Transitive,
    Semitransitive,
}

/// Searches for a proper closed subset of `s` satisfying the requirement.
/// Each step takes the first unmet point pair and branches over the elements
/// of `s` that realize it; any proper witness contains one of the branches,
/// so the search is exhaustive.
fn has_proper_witness(s: &Semigroup, req: Requirement) -> bool {
    let n = s.degree();
    let pairs: Vec<(usize, usize)> = match req {
        Requirement::Transitive => (1..=n).cartesian_product(1..=n).collect(),
        Requirement::Semitransitive => (1..=n).flat_map(|x| (x..=n).map(move |y| (x, y))).collect(),
    };
    let realizes = |e: &PartialPerm, (x, y): (usize, usize)| match req {
        Requirement::Transitive => e.apply(x) == Some(y),
        Requirement::Semitransitive => e.apply(x) == Some(y) || e.apply(y) == Some(x),
    };
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(current) = stack.pop() {
        let unmet = pairs
            .iter()
            .copied()
            .find(|&pair| !current.iter().any(|&i| realizes(s.element(i), pair)));
        let Some(pair) = unmet else {
            return true;
        };
        for i in 0..s.len() {
            if current.binary_search(&i).is_ok() || !realizes(s.element(i), pair) {
                continue;
            }
            let mut gens = current.clone();
            gens.push(i);
            let child = s.sub_closure(&gens);
            if child.len() < s.len() && visited.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    false
}

fn check_threshold(s: &Semigroup, threshold: usize) -> Result<()> {
    if s.len() > threshold {
        return Err(Error::TooLarge {
            operation: "minimality certification (use the structural Brandt check instead)",
            size: s.len(),
            limit: threshold,
        });
    }
    Ok(())
}

/// No proper subsemigroup of `s` is transitive.
pub fn certify_minimal_transitive(s: &Semigroup) -> Result<bool> {
    certify_minimal_transitive_with_threshold(s, CERTIFY_THRESHOLD)
}

pub fn certify_minimal_transitive_with_threshold(s: &Semigroup, threshold: usize) -> Result<bool> {
    if !action::is_transitive(s) {
        return Err(Error::Precondition("not transitive".into()));
    }
    check_threshold(s, threshold)?;
    Ok(!has_proper_witness(s, Requirement::Transitive))
}

/// No proper subsemigroup of `s` is semitransitive.
pub fn certify_minimal_semitransitive(s: &Semigroup) -> Result<bool> {
    certify_minimal_semitransitive_with_threshold(s, CERTIFY_THRESHOLD)
}

pub fn certify_minimal_semitransitive_with_threshold(
    s: &Semigroup,
    threshold: usize,
) -> Result<bool> {
    if !action::is_semitransitive(s) {
        return Err(Error::Precondition("not semitransitive".into()));
    }
    check_threshold(s, threshold)?;
    Ok(!has_proper_witness(s, Requirement::Semitransitive))
}

/// Checks the minimality certificate against plain enumeration of every
/// closed subset of `s`. Test oracle for tiny semigroups.
pub fn minimal_by_lattice(s: &Semigroup, pred: impl Fn(&Semigroup) -> bool) -> bool {
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(current) = stack.pop() {
        for i in 0..s.len() {
            if current.binary_search(&i).is_ok() {
                continue;
            }
            let mut gens = current.clone();
            gens.push(i);
            let child = s.sub_closure(&gens);
            if child.len() < s.len() && visited.insert(child.clone()) {
                let sub = Semigroup::from_closed(
                    s.degree(),
                    child.iter().map(|&j| s.element(j).clone()).collect(),
                );
                if pred(&sub) {
                    return false;
                }
                stack.push(child);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn universe_sizes() {
        // |IS_n| = sum_k C(n,k)^2 k!
        assert_eq!(Universe::new(1).len(), 2);
        assert_eq!(Universe::new(2).len(), 7);
        assert_eq!(Universe::new(3).len(), 34);
        assert_eq!(Universe::new(4).len(), 209);
    }

    #[test]
    fn universe_products_agree_with_compose() {
        let u = Universe::new(3);
        for a in 0..u.len() {
            for b in 0..u.len() {
                assert_eq!(u.elements[u.product(a, b)], &u.elements[a] * &u.elements[b]);
            }
        }
    }

    #[test]
    fn degree_one_has_three_subsemigroups() {
        let out = enumerate_subsemigroups(&SearchConfig::new(1)).unwrap();
        assert_eq!(out.semigroups.len(), 3);
        assert_eq!(out.status, SearchStatus::Complete);
    }

    #[test]
    fn degree_two_lattice_matches_subset_scan() {
        // Oracle: test every subset of IS_2 for closure.
        let full = full_inverse_symmetric_semigroup(2);
        let m = full.len();
        let mut closed = 0;
        for mask in 1u32..(1 << m) {
            let subset: Vec<PartialPerm> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| full.element(i).clone())
                .collect();
            if Semigroup::from_elements(subset).is_ok() {
                closed += 1;
            }
        }
        let out = enumerate_subsemigroups(&SearchConfig::new(2)).unwrap();
        assert_eq!(out.semigroups.len(), closed);
    }

    #[test]
    fn conjugation_dedupe_is_sound() {
        let plain = enumerate_subsemigroups(&SearchConfig::new(2)).unwrap();
        let classes =
            enumerate_subsemigroups(&SearchConfig::new(2).dedupe(Dedupe::Conjugation)).unwrap();
        let mut forms: Vec<Vec<String>> = plain
            .semigroups
            .iter()
            .map(relabeling_invariant_form)
            .collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), classes.semigroups.len());
        for s in &classes.semigroups {
            let swapped = s.relabel(&[2, 1]);
            assert!(classes
                .semigroups
                .iter()
                .any(|t| relabeling_invariant_form(t) == relabeling_invariant_form(&swapped)));
        }
    }

    #[test]
    fn capped_search_reports_truncation() {
        let cfg = SearchConfig::new(2).max_cardinality(2);
        let out = enumerate_subsemigroups(&cfg).unwrap();
        assert_eq!(out.status, SearchStatus::CapTruncated);
        assert!(out.semigroups.iter().all(|s| s.len() <= 2));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let cfg = SearchConfig::new(3).node_budget(5);
        assert!(matches!(
            enumerate_subsemigroups(&cfg),
            Err(Error::BudgetExhausted { budget: 5, .. })
        ));
    }

    #[test]
    fn degree_limits() {
        assert!(enumerate_subsemigroups(&SearchConfig::new(4)).is_err());
        assert!(enumerate_subsemigroups(&SearchConfig::new(7).max_cardinality(8)).is_err());
    }

    #[test]
    fn degree_two_minimal_transitive() {
        let cfg = SearchConfig::new(2)
            .target(Target::Transitive)
            .dedupe(Dedupe::Conjugation);
        let out = enumerate_subsemigroups(&cfg).unwrap();
        let minimal = inclusion_minimal(&out.semigroups);
        let sizes: Vec<usize> = minimal.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![2, 5]);
    }

    #[test]
    fn certify_transitive_examples() {
        let id_zero = Semigroup::closure([PartialPerm::identity(1), PartialPerm::zero(1)]).unwrap();
        assert!(!certify_minimal_transitive(&id_zero).unwrap());
        let id = Semigroup::closure([PartialPerm::identity(1)]).unwrap();
        assert!(certify_minimal_transitive(&id).unwrap());
        assert!(certify_minimal_transitive(&brandt_17()).unwrap());
        assert!(certify_minimal_transitive(&five_element_example()).is_err());
    }

    #[test]
    fn certify_semitransitive_examples() {
        assert!(certify_minimal_semitransitive(&five_element_example()).unwrap());
        let small = Semigroup::closure([PartialPerm::identity(2), pp("(1,2]", 2)]).unwrap();
        assert!(certify_minimal_semitransitive(&small).unwrap());
        let c3_zero = Semigroup::closure([pp("(1,2,3)", 3), PartialPerm::zero(3)]).unwrap();
        assert!(!certify_minimal_semitransitive(&c3_zero).unwrap());
    }

    #[test]
    fn certificates_agree_with_lattice_oracle() {
        let cases = [five_element_example(), gt_9()];
        for s in &cases {
            assert_eq!(
                certify_minimal_semitransitive(s).unwrap(),
                minimal_by_lattice(s, action::is_semitransitive)
            );
        }
        let c3_zero = Semigroup::closure([pp("(1,2,3)", 3), PartialPerm::zero(3)]).unwrap();
        assert!(!minimal_by_lattice(&c3_zero, action::is_transitive));
        assert!(minimal_by_lattice(&brandt_17(), action::is_transitive));
    }

    #[test]
    fn certification_threshold() {
        let full = full_inverse_symmetric_semigroup(3);
        assert!(matches!(
            certify_minimal_transitive(&full),
            Err(Error::TooLarge { .. })
        ));
        assert!(!certify_minimal_transitive_with_threshold(&full, 40).unwrap());
    }
}
