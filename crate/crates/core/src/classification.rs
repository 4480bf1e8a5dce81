//! The two classifications made executable: minimal transitive subsemigroups
//! of `IS_n` (Brandt semigroups over minimal transitive groups, or the groups
//! themselves) and semitransitive, non-transitive subsemigroups of the least
//! possible size `n + 1` (the `(G x T^1)/I` actions).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::action::{self, RStructure};
use crate::constructions::{build_gt, gamma, BrandtPresentation, GtPresentation};
use crate::error::{Error, Result};
use crate::partial_perm::{PartialPerm, PointSet};
use crate::perm_group::PermGroup;
use crate::semigroup::Semigroup;
use crate::text::{write_presentation, Presentation};

pub const DEFAULT_GROUP_ORACLE_CAP: usize = 6;
pub const GROUP_ORACLE_CAP_ENV: &str = "ISG_GROUP_ORACLE_CAP";

/// The degree cap for subgroup scans: `ISG_GROUP_ORACLE_CAP` if set to a
/// number, else 6.
pub fn group_oracle_cap() -> usize {
    std::env::var(GROUP_ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GROUP_ORACLE_CAP)
}

/// Minimal transitive subgroups of `S_d`, up to conjugacy and up to abstract
/// isomorphism.
#[derive(Clone, Debug)]
pub struct MinimalTransitiveGroups {
    pub degree: usize,
    /// One representative per conjugacy class in `S_d`, sorted by order.
    pub conjugacy_classes: Vec<PermGroup>,
    /// One representative per abstract isomorphism class.
    pub isomorphism_classes: Vec<PermGroup>,
}

impl MinimalTransitiveGroups {
    /// `t(d)`: the number of isomorphism classes.
    pub fn count(&self) -> usize {
        self.isomorphism_classes.len()
    }
}

/// `S_d` as index tables.
struct Symmetric {
    degree: usize,
    perms: Vec<Vec<u8>>,
    mul: Vec<u32>,
    conj: Vec<Vec<u32>>,
}

impl Symmetric {
    fn new(degree: usize) -> Self {
        let perms: Vec<Vec<u8>> = (0..degree as u8).permutations(degree).collect();
        let index: HashMap<&Vec<u8>, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        let m = perms.len();
        let compose =
            |a: &[u8], b: &[u8]| -> Vec<u8> { a.iter().map(|&x| b[x as usize]).collect() };
        let mut mul = Vec::with_capacity(m * m);
        for a in &perms {
            for b in &perms {
                mul.push(index[&compose(a, b)]);
            }
        }
        let inverse: Vec<u32> = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u8; degree];
                for (x, &y) in p.iter().enumerate() {
                    inv[y as usize] = x as u8;
                }
                index[&inv]
            })
            .collect();
        let conj = (0..m)
            .map(|s| {
                (0..m)
                    .map(|h| mul[mul[inverse[s] as usize * m + h] as usize * m + s])
                    .collect()
            })
            .collect();
        Symmetric {
            degree,
            perms,
            mul,
            conj,
        }
    }

    fn identity(&self) -> u32 {
        // permutations() yields the identity first
        0
    }

    fn generate(&self, gens: &[u32]) -> Vec<u32> {
        let m = self.perms.len();
        let mut seen = vec![false; m];
        seen[self.identity() as usize] = true;
        let mut elements = vec![self.identity()];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i] as usize;
            for &g in gens {
                let y = self.mul[x * m + g as usize];
                if !std::mem::replace(&mut seen[y as usize], true) {
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        elements
    }

    fn is_transitive(&self, group: &[u32]) -> bool {
        let orbit: HashSet<u8> = group.iter().map(|&g| self.perms[g as usize][0]).collect();
        orbit.len() == self.degree
    }

    fn conjugate(&self, group: &[u32], s: usize) -> Vec<u32> {
        let mut image: Vec<u32> = group.iter().map(|&h| self.conj[s][h as usize]).collect();
        image.sort_unstable();
        image
    }

    fn canonical(&self, group: &[u32]) -> Vec<u32> {
        (0..self.perms.len())
            .map(|s| self.conjugate(group, s))
            .min()
            .expect("S_d is non-empty")
    }

    /// Some conjugate of `small` lies inside `big`.
    fn embeds(&self, small: &[u32], big: &[u32]) -> bool {
        (0..self.perms.len()).any(|s| {
            small
                .iter()
                .all(|&h| big.binary_search(&self.conj[s][h as usize]).is_ok())
        })
    }

    fn to_perm_group(&self, group: &[u32]) -> PermGroup {
        let d = self.degree;
        let points: PointSet = (1..=d).collect();
        let gens = group.iter().map(|&g| {
            PartialPerm::from_pairs(
                d,
                self.perms[g as usize]
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| (x + 1, y as usize + 1)),
            )
            .expect("permutation")
        });
        PermGroup::generate(d, points, gens)
            .expect("subgroup of S_d")
            .with_small_generating_set()
    }
}

/// Minimal transitive subgroups of `S_d`, using the environment cap.
pub fn minimal_transitive_subgroups(d: usize) -> Result<MinimalTransitiveGroups> {
    minimal_transitive_subgroups_with_cap(d, group_oracle_cap())
}

/// Subgroups are grown from cyclic subgroups by joining one more cyclic
/// subgroup at a time, keeping one representative per conjugacy class.
/// Transitive subgroups are recorded and not grown further: every proper
/// subgroup of a minimal transitive group is intransitive, so each minimal
/// transitive class is reached along intransitive joins.
pub fn minimal_transitive_subgroups_with_cap(
    d: usize,
    cap: usize,
) -> Result<MinimalTransitiveGroups> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    if d > cap {
        return Err(Error::DegreeOverCap { degree: d, cap });
    }
    let sym = Symmetric::new(d);
    let m = sym.perms.len() as u32;

    let mut cyclic: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut cyclic_seen: HashSet<Vec<u32>> = HashSet::new();
    for g in 0..m {
        let c = sym.generate(&[g]);
        if cyclic_seen.insert(c.clone()) {
            cyclic.push((g, c));
        }
    }

    let mut transitive: Vec<Vec<u32>> = Vec::new();
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut exact_seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<(Vec<u32>, Vec<u32>)> = VecDeque::new();
    let mut consider =
        |group: Vec<u32>, gens: Vec<u32>, queue: &mut VecDeque<(Vec<u32>, Vec<u32>)>| {
            if !exact_seen.insert(group.clone()) {
                return;
            }
            let key = sym.canonical(&group);
            if !visited.insert(key.clone()) {
                return;
            }
            if sym.is_transitive(&key) {
                transitive.push(key);
            } else {
                queue.push_back((group, gens));
            }
        };
    for (g, c) in &cyclic {
        consider(c.clone(), vec![*g], &mut queue);
    }
    while let Some((group, gens)) = queue.pop_front() {
        for (g, _) in &cyclic {
            if group.binary_search(g).is_ok() {
                continue;
            }
            let mut more = gens.clone();
            more.push(*g);
            let joined = sym.generate(&more);
            consider(joined, more, &mut queue);
        }
    }

    let mut minimal: Vec<Vec<u32>> = transitive
        .iter()
        .filter(|h| {
            !transitive
                .iter()
                .any(|t| t.len() < h.len() && h.len() % t.len() == 0 && sym.embeds(t, h))
        })
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let conjugacy_classes: Vec<PermGroup> = minimal.iter().map(|h| sym.to_perm_group(h)).collect();
    let mut isomorphism_classes: Vec<PermGroup> = Vec::new();
    for g in &conjugacy_classes {
        if !isomorphism_classes.iter().any(|h| h.is_isomorphic(g)) {
            isomorphism_classes.push(g.clone());
        }
    }
    Ok(MinimalTransitiveGroups {
        degree: d,
        conjugacy_classes,
        isomorphism_classes,
    })
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Block size `d`, a divisor of `n`.
    pub divisor: usize,
    /// Number of blocks `n / d`.
    pub blocks: usize,
    /// Position of this entry among those with the same divisor.
    pub class_id: usize,
    pub presentation: Presentation,
    pub semigroup: Semigroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorCount {
    pub divisor: usize,
    /// `t(d)` as reported by the subgroup scan.
    pub t: usize,
    /// Conjugacy classes of minimal transitive subgroups of `S_d`.
    pub conjugacy_classes: usize,
    /// Catalog entries for this divisor.
    pub entries: usize,
}

#[derive(Clone, Debug)]
pub struct MinimalTransitiveCatalog {
    pub degree: usize,
    pub entries: Vec<CatalogEntry>,
    pub counts: Vec<DivisorCount>,
}

impl MinimalTransitiveCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum over d | n of t(d)`.
    pub fn expected_count(&self) -> usize {
        self.counts.iter().map(|c| c.t).sum()
    }

    /// Presentation blocks followed by a `divisor,t,entries` table.
    pub fn to_text(&self) -> String {
        let mut out = format!("# minimal transitive subsemigroups of IS_{}\n", self.degree);
        for e in &self.entries {
            out.push_str(&format!(
                "# divisor {} blocks {} class {} size {}\n",
                e.divisor,
                e.blocks,
                e.class_id,
                e.semigroup.len()
            ));
            out.push_str(&write_presentation(&e.presentation));
        }
        out.push_str("# summary\ndivisor,t,entries\n");
        for c in &self.counts {
            out.push_str(&format!("{},{},{}\n", c.divisor, c.t, c.entries));
        }
        out
    }
}

/// One semigroup per divisor `d` of `n` and per isomorphism type of minimal
/// transitive subgroup of `S_d`: the group itself when `d = n`, otherwise the
/// Brandt semigroup over it with `n / d` blocks.
///
/// Entries are built from every conjugacy class the subgroup scan returns and
/// then deduplicated by abstract semigroup isomorphism, so the count does not
/// reuse the group isomorphism test behind `t(d)`.
pub fn enumerate_minimal_transitive_subsemigroups(n: usize) -> Result<MinimalTransitiveCatalog> {
    enumerate_minimal_transitive_subsemigroups_with_cap(n, group_oracle_cap())
}

pub fn enumerate_minimal_transitive_subsemigroups_with_cap(
    n: usize,
    cap: usize,
) -> Result<MinimalTransitiveCatalog> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let per_divisor = divisors
        .par_iter()
        .map(|&d| catalog_entries_for_divisor(n, d, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut counts = Vec::new();
    let mut entries = Vec::new();
    for (count, mut list) in per_divisor {
        counts.push(count);
        entries.append(&mut list);
    }
    Ok(MinimalTransitiveCatalog {
        degree: n,
        entries,
        counts,
    })
}

/// The catalog entries of `IS_n` with block size `d`, together with their
/// count record.
pub fn catalog_entries_for_divisor(
    n: usize,
    d: usize,
    cap: usize,
) -> Result<(DivisorCount, Vec<CatalogEntry>)> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::Precondition(format!("{d} does not divide {n}")));
    }
    let groups = minimal_transitive_subgroups_with_cap(d, cap)?;
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for g in &groups.conjugacy_classes {
        let presentation = if d == n {
            Presentation::Group(g.clone())
        } else {
            Presentation::Brandt(BrandtPresentation::standard(n, g.clone())?)
        };
        let semigroup = presentation.build();
        if entries
            .iter()
            .any(|e| e.semigroup.is_isomorphic(&semigroup))
        {
            continue;
        }
        entries.push(CatalogEntry {
            divisor: d,
            blocks: n / d,
            class_id: entries.len(),
            presentation,
            semigroup,
        });
    }
    let count = DivisorCount {
        divisor: d,
        t: groups.count(),
        conjugacy_classes: groups.conjugacy_classes.len(),
        entries: entries.len(),
    };
    Ok((count, entries))
}

/// Finds `a` in `s` with `i a = j` whose inverse also lies in `s`.
fn inverse_pair(s: &Semigroup, i: usize, j: usize) -> Result<(PartialPerm, PartialPerm)> {
    let find = |x: usize, y: usize| {
        s.iter()
            .find(|f| f.apply(x) == Some(y))
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("no element maps {x} to {y}")))
    };
    let mut phi = find(i, j)?;
    let mut psi = find(j, i)?;
    loop {
        let phi_keeps = (&(&phi * &psi) * &phi).rank() == phi.rank();
        let psi_keeps = (&(&psi * &phi) * &psi).rank() == psi.rank();
        if phi_keeps || psi_keeps {
            let swapped = !phi_keeps;
            let (f, g) = if swapped { (&psi, &phi) } else { (&phi, &psi) };
            let g = &(g * f) * g;
            let inv = if &(f * &g) * f == *f {
                g
            } else {
                let domain = f.dom();
                let cycle = f * &g;
                let identity = PartialPerm::partial_identity(f.degree(), &domain);
                let mut power = cycle.clone();
                let mut k = 1;
                while power != identity {
                    power = &power * &cycle;
                    k += 1;
                    if k > 1 << 20 {
                        return Err(Error::Structure(format!(
                            "{cycle} never returns to the identity"
                        )));
                    }
                }
                let alpha = &(&g * f).pow(k - 1) * &g;
                &(&alpha * f) * &alpha
            };
            if inv != f.inverse() {
                return Err(Error::Structure(format!("failed to invert {f}")));
            }
            let f = f.clone();
            return Ok(if swapped { (inv, f) } else { (f, inv) });
        }
        let next_phi = &(&phi * &psi) * &phi;
        let next_psi = &(&psi * &phi) * &psi;
        phi = next_phi;
        psi = next_psi;
    }
}

/// An inverse transitive subsemigroup of a transitive `s`: for every pair of
/// points an element mapping one to the other is chosen together with its
/// inverse, and the result is the closure of all chosen pairs.
pub fn extract_inverse_transitive(s: &Semigroup) -> Result<Semigroup> {
    if !action::is_transitive(s) {
        return Err(Error::Precondition("not transitive".into()));
    }
    if s.iter().all(|f| f.is_zero()) {
        return Err(Error::Precondition("no non-zero element".into()));
    }
    let n = s.degree();
    let mut generators: Vec<PartialPerm> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if generators.iter().any(|g| g.apply(i) == Some(j)) {
                continue;
            }
            let (a, inv) = inverse_pair(s, i, j)?;
            generators.push(a);
            generators.push(inv);
        }
    }
    let t = Semigroup::closure(generators)?;
    if !t.is_subset_of(s) || !t.is_inverse_semigroup() || !action::is_transitive(&t) {
        return Err(Error::Structure(
            "extracted subsemigroup fails its postconditions".into(),
        ));
    }
    Ok(t)
}

/// The three structural lemmas about semitransitive, non-transitive
/// subsemigroups of size `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Every non-zero element is defined on all of `M_1` and hits all of `M_k`.
    DomainRange,
    /// Each element either permutes both `M_1` and `M_k`, or misses `M_1` in
    /// its range and `M_k` in its domain.
    InvariantAction,
    /// Some element has domain `M_1` and range `M_k`.
    SpecialElement,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::DomainRange => "domain/range lemma",
            Lemma::InvariantAction => "invariant-action lemma",
            Lemma::SpecialElement => "special-element lemma",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureReport {
    Passed {
        classes: RStructure,
        /// An element with domain `M_1` and range `M_k`.
        special: PartialPerm,
    },
    Violated {
        lemma: Lemma,
        element: Option<PartialPerm>,
    },
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        matches!(self, StructureReport::Passed { .. })
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureReport::Passed { classes, special } => {
                write!(
                    f,
                    "passed: class sizes {:?}, special element {special}",
                    classes.class_sizes()
                )
            }
            StructureReport::Violated {
                lemma,
                element: Some(e),
            } => write!(f, "{lemma} violated by {e}"),
            StructureReport::Violated {
                lemma,
                element: None,
            } => write!(f, "{lemma} violated"),
        }
    }
}

fn permutes(f: &PartialPerm, set: &PointSet) -> bool {
    set.iter()
        .all(|&x| f.apply(x).is_some_and(|y| set.contains(&y)))
}

/// Checks the three lemmas elementwise. Precondition failures are errors;
/// lemma failures are reported.
pub fn check_min_semitransitive_structure(s: &Semigroup) -> Result<StructureReport> {
    let n = s.degree();
    let classes = action::r_structure(s).map_err(|e| Error::Precondition(e.to_string()))?;
    if classes.len() < 2 {
        return Err(Error::Precondition("transitive".into()));
    }
    if s.len() != n + 1 {
        return Err(Error::Precondition(format!(
            "has {} elements, not n + 1 = {}",
            s.len(),
            n + 1
        )));
    }
    let first = classes.first().clone();
    let last = classes.last().clone();
    for f in s.iter().filter(|f| !f.is_zero()) {
        if !first.is_subset(&f.dom()) || !last.is_subset(&f.ran()) {
            return Ok(StructureReport::Violated {
                lemma: Lemma::DomainRange,
                element: Some(f.clone()),
            });
        }
    }
    for f in s.iter() {
        let keeps = permutes(f, &first) && permutes(f, &last);
        let avoids = f.ran().is_disjoint(&first) && f.dom().is_disjoint(&last);
        if !keeps && !avoids {
            return Ok(StructureReport::Violated {
                lemma: Lemma::InvariantAction,
                element: Some(f.clone()),
            });
        }
    }
    match s.iter().find(|f| f.dom() == first && f.ran() == last) {
        Some(special) => Ok(StructureReport::Passed {
            classes,
            special: special.clone(),
        }),
        None => Ok(StructureReport::Violated {
            lemma: Lemma::SpecialElement,
            element: None,
        }),
    }
}

/// Recovers a `(G x T^1)/I` presentation whose build equals `s`, for a
/// semitransitive, non-transitive `s` with `n + 1` elements.
///
/// With two classes the chain element is the special element. With more,
/// the last class is removed, the smaller semigroup is classified, and a
/// preimage of its chain element is taken. Blocks are labeled by listing
/// `M_1` in increasing order and following the chain element.
pub fn classify_min_semitransitive(s: &Semigroup) -> Result<GtPresentation> {
    let report = check_min_semitransitive_structure(s)?;
    let (classes, special) = match report {
        StructureReport::Passed { classes, special } => (classes, special),
        other => return Err(Error::Structure(other.to_string())),
    };
    let chain = if classes.len() == 2 {
        special
    } else {
        let reduction = gamma(s, &classes)?;
        let smaller = classify_min_semitransitive(reduction.image())
            .map_err(|e| Error::Structure(format!("after removing the last class: {e}")))?;
        let target = smaller.chain();
        s.iter()
            .find(|f| reduction.apply(f).is_ok_and(|g| g == target))
            .cloned()
            .ok_or_else(|| Error::Structure(format!("no preimage of the chain element {target}")))?
    };

    let first = classes.first().clone();
    let mut blocks: Vec<Vec<usize>> = vec![first.iter().copied().collect()];
    for i in 1..classes.len() {
        let next = blocks[i - 1]
            .iter()
            .map(|&x| chain.apply(x))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::Structure(format!(
                    "chain element {chain} stops before class {}",
                    i + 1
                ))
            })?;
        blocks.push(next);
    }

    let group_part: Vec<PartialPerm> = s
        .iter()
        .filter(|f| permutes(f, &first))
        .map(|f| f.restrict(&first))
        .collect();
    let group = PermGroup::generate(s.degree(), first.clone(), group_part.iter().cloned())?;
    if group.order() != group_part.len() {
        return Err(Error::Structure(
            "the elements fixing M_1 do not restrict to a group".into(),
        ));
    }
    let p = GtPresentation::new(s.degree(), blocks, group.with_small_generating_set())?;
    if build_gt(&p) != *s {
        return Err(Error::Structure(
            "the recovered presentation builds a different semigroup".into(),
        ));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_brandt;
    use crate::fixtures::*;

    /// Independent scan over subgroups generated by two elements, the first
    /// taken up to conjugacy by its cycle type. A candidate is minimal when
    /// no two of its elements generate a proper transitive subgroup. Every
    /// minimal transitive subgroup of `S_d` for `d <= 6` is two-generated.
    fn two_generated_oracle(d: usize) -> (usize, usize) {
        let points: PointSet = (1..=d).collect();
        let all: Vec<PartialPerm> = (1..=d)
            .permutations(d)
            .map(|p| PartialPerm::from_pairs(d, (1..=d).zip(p)).unwrap())
            .collect();
        let cycle_type = |g: &PartialPerm| {
            let mut lens: Vec<usize> = g.cycle_chain().cycles.iter().map(|c| c.len()).collect();
            lens.sort_unstable();
            lens
        };
        let mut reps: Vec<&PartialPerm> = Vec::new();
        let mut types: HashSet<Vec<usize>> = HashSet::new();
        for g in &all {
            if types.insert(cycle_type(g)) {
                reps.push(g);
            }
        }
        let generate = |a: &PartialPerm, b: &PartialPerm| {
            PermGroup::generate(d, points.clone(), [a.clone(), b.clone()]).unwrap()
        };
        let mut candidates: Vec<PermGroup> = Vec::new();
        let mut seen: HashSet<Vec<PartialPerm>> = HashSet::new();
        for a in &reps {
            for b in &all {
                let g = generate(a, b);
                if g.is_transitive() && seen.insert(g.elements().to_vec()) {
                    candidates.push(g);
                }
            }
        }
        candidates.sort_by_key(|g| g.order());
        let minimal: Vec<&PermGroup> = candidates
            .iter()
            .filter(|h| {
                !h.elements().iter().any(|a| {
                    h.elements().iter().any(|b| {
                        let sub = generate(a, b);
                        sub.order() < h.order() && sub.is_transitive()
                    })
                })
            })
            .collect();
        let mut conj: HashSet<Vec<PartialPerm>> = HashSet::new();
        for g in &minimal {
            let key = (1..=d)
                .permutations(d)
                .map(|sigma| {
                    let mut e: Vec<PartialPerm> =
                        g.elements().iter().map(|x| x.relabel(&sigma)).collect();
                    e.sort();
                    e
                })
                .min()
                .unwrap();
            conj.insert(key);
        }
        let mut iso: Vec<&PermGroup> = Vec::new();
        for g in &minimal {
            if !iso.iter().any(|h| h.is_isomorphic(g)) {
                iso.push(g);
            }
        }
        (conj.len(), iso.len())
    }

    #[test]
    fn subgroup_scan_small_degrees() {
        let t: Vec<usize> = (1..=5)
            .map(|d| minimal_transitive_subgroups_with_cap(d, 6).unwrap().count())
            .collect();
        assert_eq!(t, vec![1, 1, 1, 2, 1]);
        let three = minimal_transitive_subgroups_with_cap(3, 6).unwrap();
        assert_eq!(three.conjugacy_classes.len(), 1);
        assert_eq!(three.conjugacy_classes[0].order(), 3);
        let four = minimal_transitive_subgroups_with_cap(4, 6).unwrap();
        let mut profiles: Vec<Vec<usize>> = four
            .isomorphism_classes
            .iter()
            .map(|g| g.order_profile())
            .collect();
        profiles.sort();
        assert_eq!(profiles, vec![vec![1, 2, 2, 2], vec![1, 2, 4, 4]]);
    }

    #[test]
    fn subgroup_scan_agrees_with_two_generated_scan() {
        for d in 1..=6 {
            let groups = minimal_transitive_subgroups_with_cap(d, 6).unwrap();
            assert_eq!(
                two_generated_oracle(d),
                (groups.conjugacy_classes.len(), groups.count()),
                "degree {d}"
            );
        }
    }

    #[test]
    fn subgroup_scan_respects_cap() {
        assert!(matches!(
            minimal_transitive_subgroups_with_cap(7, 6),
            Err(Error::DegreeOverCap { degree: 7, cap: 6 })
        ));
    }

    #[test]
    fn catalog_small_degrees() {
        let one = enumerate_minimal_transitive_subsemigroups_with_cap(1, 6).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.entries[0].semigroup.len(), 1);
        let three = enumerate_minimal_transitive_subsemigroups_with_cap(3, 6).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(three.expected_count(), 2);
        let sizes: Vec<usize> = three.entries.iter().map(|e| e.semigroup.len()).collect();
        assert_eq!(sizes, vec![10, 3]);
        for e in &three.entries {
            assert!(action::is_transitive(&e.semigroup));
        }
    }

    #[test]
    fn catalog_of_degree_eight_contains_the_c4_example() {
        let (count, entries) = catalog_entries_for_divisor(8, 4, 6).unwrap();
        assert_eq!(count.entries, 2);
        let target = brandt_17();
        assert!(entries.iter().any(|e| e.semigroup.is_isomorphic(&target)));
    }

    #[test]
    fn catalog_text_has_summary() {
        let text = enumerate_minimal_transitive_subsemigroups_with_cap(4, 6)
            .unwrap()
            .to_text();
        assert!(text.contains("divisor,t,entries\n1,1,1\n2,1,1\n4,2,2\n"));
        let parsed = crate::text::read_presentations(&text).unwrap();
        assert_eq!(parsed.len(), 4);
    }

    #[test]
    fn extraction_keeps_an_inverse_input() {
        let s = brandt_17();
        let t = extract_inverse_transitive(&s).unwrap();
        assert!(t.is_subset_of(&s) && t.is_inverse_semigroup() && action::is_transitive(&t));
    }

    #[test]
    fn extraction_drops_a_non_invertible_companion() {
        let mut gens = brandt_17_listing();
        gens.push(pp("(1,2,5](3,4,6,7,8]", 8));
        let s = Semigroup::closure(gens).unwrap();
        assert!(!s.is_inverse_semigroup());
        let t = extract_inverse_transitive(&s).unwrap();
        assert!(t.is_subset_of(&s) && t.is_inverse_semigroup() && action::is_transitive(&t));
    }

    #[test]
    fn extraction_preconditions() {
        assert!(extract_inverse_transitive(&five_element_example()).is_err());
    }

    #[test]
    fn structure_checks() {
        assert!(check_min_semitransitive_structure(&gt_9())
            .unwrap()
            .passed());
        let trivial = PermGroup::trivial(3, [1].into_iter().collect()).unwrap();
        let p = GtPresentation::standard(3, 3, trivial).unwrap();
        let s = build_gt(&p);
        assert_eq!(s.len(), 4);
        assert!(check_min_semitransitive_structure(&s).unwrap().passed());
        assert!(matches!(
            check_min_semitransitive_structure(&five_element_example()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_min_semitransitive_structure(&brandt_17()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classification_of_the_nine_element_example() {
        let p = classify_min_semitransitive(&gt_9()).unwrap();
        assert_eq!(p.k(), 4);
        assert_eq!(p.group().order(), 2);
        assert_eq!(build_gt(&p), gt_9());
    }

    #[test]
    fn classification_round_trips_on_built_instances() {
        let c3 = PermGroup::generate(6, [1, 2, 3].into_iter().collect(), [pp("(1,2,3)4]5]6]", 6)])
            .unwrap();
        let p = GtPresentation::standard(6, 2, c3).unwrap();
        let s = build_gt(&p);
        assert_eq!(build_gt(&classify_min_semitransitive(&s).unwrap()), s);
        let trivial = PermGroup::trivial(4, [1].into_iter().collect()).unwrap();
        let s = build_gt(&GtPresentation::standard(4, 4, trivial).unwrap());
        assert_eq!(build_gt(&classify_min_semitransitive(&s).unwrap()), s);
    }

    #[test]
    fn brandt_over_a_non_minimal_group_is_not_minimal() {
        let s3 = PermGroup::generate(3, (1..=3).collect(), [pp("(1,2,3)", 3), pp("(1,2)(3)", 3)])
            .unwrap();
        let s = build_brandt(&BrandtPresentation::standard(6, s3).unwrap());
        assert_eq!(s.len(), 25);
        assert!(!crate::search::certify_minimal_transitive_with_threshold(&s, 32).unwrap());
    }
}
