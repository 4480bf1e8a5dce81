//! Finite subsemigroups of `IS_n` stored as closed, canonically ordered
//! element sets.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;

/// Semigroups up to this size get an index-based product table on first use.
pub const CAYLEY_TABLE_LIMIT: usize = 512;

/// Ideal enumeration is a test oracle and only runs up to this size.
pub const IDEAL_ENUMERATION_LIMIT: usize = 24;

/// A composition-closed set of partial permutations of a common degree.
///
/// Elements are sorted by their canonical cycle-chain string, so two
/// semigroups are equal exactly when they have the same elements.
#[derive(Clone)]
pub struct Semigroup {
    degree: usize,
    elements: Vec<PartialPerm>,
    index: HashMap<PartialPerm, usize>,
    table: OnceLock<Option<Vec<u32>>>,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Semigroup {}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("degree", &self.degree)
            .field(
                "elements",
                &self
                    .elements
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn common_degree(elements: &[PartialPerm]) -> Result<usize> {
    let degree = elements.first().ok_or(Error::EmptyGenerators)?.degree();
    for e in elements {
        if e.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: e.degree(),
            });
        }
    }
    Ok(degree)
}

/// Breadth-first closure; `None` once more than `cap` elements appear.
pub(crate) fn close_capped(generators: &[PartialPerm], cap: usize) -> Option<Vec<PartialPerm>> {
    let mut seen: HashSet<PartialPerm> = HashSet::new();
    let mut elements: Vec<PartialPerm> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    if elements.len() > cap {
        return None;
    }
    let mut i = 0;
    while i < elements.len() {
        for j in 0..=i {
            for product in [
                elements[i].compose_unchecked(&elements[j]),
                elements[j].compose_unchecked(&elements[i]),
            ] {
                if seen.insert(product.clone()) {
                    elements.push(product);
                    if elements.len() > cap {
                        return None;
                    }
                }
            }
        }
        i += 1;
    }
    Some(elements)
}

impl Semigroup {
    /// The subsemigroup generated by `generators`.
    pub fn closure(generators: impl IntoIterator<Item = PartialPerm>) -> Result<Self> {
        let generators: Vec<PartialPerm> = generators.into_iter().collect();
        let degree = common_degree(&generators)?;
        let elements = close_capped(&generators, usize::MAX).expect("uncapped closure");
        Ok(Self::from_closed(degree, elements))
    }

    /// Wraps an element set, checking that it is closed.
    pub fn from_elements(elements: impl IntoIterator<Item = PartialPerm>) -> Result<Self> {
        let mut elements: Vec<PartialPerm> = elements.into_iter().collect();
        let degree = common_degree(&elements)?;
        elements.sort();
        elements.dedup();
        let set: HashSet<&PartialPerm> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                let ab = a.compose_unchecked(b);
                if !set.contains(&ab) {
                    return Err(Error::NotClosed(format!("{a} * {b} = {ab} is missing")));
                }
            }
        }
        Ok(Self::from_closed(degree, elements))
    }

    /// Wraps an element set known to be closed and duplicate-free.
    pub(crate) fn from_closed(degree: usize, elements: Vec<PartialPerm>) -> Self {
        let mut keyed: Vec<(String, PartialPerm)> =
            elements.into_iter().map(|e| (e.to_string(), e)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let elements: Vec<PartialPerm> = keyed.into_iter().map(|(_, e)| e).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Semigroup {
            degree,
            elements,
            index,
            table: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PartialPerm> {
        self.elements.iter()
    }

    pub fn element(&self, i: usize) -> &PartialPerm {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &PartialPerm) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &PartialPerm) -> bool {
        self.index.contains_key(f)
    }

    pub fn is_subset_of(&self, other: &Semigroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Canonical element strings, in order.
    pub fn element_strings(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.to_string()).collect()
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let m = self.len();
                if m > CAYLEY_TABLE_LIMIT {
                    return None;
                }
                let mut table = Vec::with_capacity(m * m);
                for a in &self.elements {
                    for b in &self.elements {
                        table.push(self.index[&a.compose_unchecked(b)] as u32);
                    }
                }
                Some(table)
            })
            .as_ref()
    }

    /// Index of the product of elements `a` and `b`.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.len() + b] as usize,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])],
        }
    }

    /// The subsemigroup generated by some of our elements, as sorted indices.
    pub(crate) fn sub_closure(&self, generators: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        let mut elems = Vec::new();
        for &g in generators {
            if !std::mem::replace(&mut member[g], true) {
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            for j in 0..=i {
                for p in [
                    self.product(elems[i], elems[j]),
                    self.product(elems[j], elems[i]),
                ] {
                    if !std::mem::replace(&mut member[p], true) {
                        elems.push(p);
                    }
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn idempotents(&self) -> Vec<&PartialPerm> {
        self.elements.iter().filter(|e| e.is_idempotent()).collect()
    }

    /// The nowhere-defined map, when it belongs to the semigroup.
    pub fn zero(&self) -> Option<&PartialPerm> {
        self.elements.iter().find(|e| e.is_zero())
    }

    /// Any two-sided absorbing element, found from the product table alone.
    pub fn absorbing_element(&self) -> Option<&PartialPerm> {
        (0..self.len())
            .find(|&z| (0..self.len()).all(|a| self.product(z, a) == z && self.product(a, z) == z))
            .map(|z| &self.elements[z])
    }

    /// Non-zero elements some power of which is the zero map. Empty when the
    /// zero map is not a member.
    pub fn nilpotents(&self) -> Vec<&PartialPerm> {
        let Some(zero) = self.zero().and_then(|z| self.index_of(z)) else {
            return Vec::new();
        };
        (0..self.len())
            .filter(|&a| a != zero)
            .filter(|&a| {
                let mut p = a;
                for _ in 0..self.len() {
                    if p == zero {
                        return true;
                    }
                    p = self.product(p, a);
                }
                p == zero
            })
            .map(|a| &self.elements[a])
            .collect()
    }

    /// Every `a` has some `b` with `aba = a`.
    pub fn is_regular(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).any(|b| self.product(self.product(a, b), a) == a))
    }

    /// Regular with commuting idempotents.
    pub fn is_inverse_semigroup(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        let idem: Vec<usize> = (0..self.len())
            .filter(|&e| self.product(e, e) == e)
            .collect();
        idem.iter().all(|&e| {
            idem.iter()
                .all(|&f| self.product(e, f) == self.product(f, e))
        })
    }

    pub fn is_group(&self) -> bool {
        let idem: Vec<usize> = (0..self.len())
            .filter(|&e| self.product(e, e) == e)
            .collect();
        let [e] = idem[..] else { return false };
        (0..self.len()).all(|a| {
            self.product(e, a) == a
                && self.product(a, e) == a
                && (0..self.len()).any(|b| self.product(a, b) == e && self.product(b, a) == e)
        })
    }

    /// `S^1 a S^1` as sorted indices.
    pub fn principal_ideal(&self, a: usize) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        member[a] = true;
        for x in 0..self.len() {
            member[self.product(x, a)] = true;
            member[self.product(a, x)] = true;
            let xa = self.product(x, a);
            for y in 0..self.len() {
                member[self.product(xa, y)] = true;
            }
        }
        (0..self.len()).filter(|&i| member[i]).collect()
    }

    /// Whether the non-empty subset `subset` is a two-sided ideal.
    pub fn is_ideal(&self, subset: &[PartialPerm]) -> Result<bool> {
        let mut member = vec![false; self.len()];
        for f in subset {
            let i = self
                .index_of(f)
                .ok_or_else(|| Error::NotASubset(f.to_string()))?;
            member[i] = true;
        }
        if subset.is_empty() {
            return Ok(false);
        }
        Ok((0..self.len()).filter(|&j| member[j]).all(|j| {
            (0..self.len()).all(|s| member[self.product(s, j)] && member[self.product(j, s)])
        }))
    }

    /// No proper ideals.
    pub fn is_simple(&self) -> bool {
        (0..self.len()).all(|a| self.principal_ideal(a).len() == self.len())
    }

    /// Has the zero map, `S^2 != {0}`, and no proper non-zero ideals.
    pub fn is_zero_simple(&self) -> bool {
        let Some(zero) = self.zero().and_then(|z| self.index_of(z)) else {
            return false;
        };
        let square_nonzero =
            (0..self.len()).any(|a| (0..self.len()).any(|b| self.product(a, b) != zero));
        square_nonzero
            && (0..self.len())
                .filter(|&a| a != zero)
                .all(|a| self.principal_ideal(a).len() == self.len())
    }

    /// All ideals, as unions of principal ideals. Test oracle; small
    /// semigroups only.
    pub fn ideals(&self) -> Result<Vec<Semigroup>> {
        if self.len() > IDEAL_ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                operation: "ideal enumeration",
                size: self.len(),
                limit: IDEAL_ENUMERATION_LIMIT,
            });
        }
        let principal: Vec<u32> = (0..self.len())
            .map(|a| {
                self.principal_ideal(a)
                    .iter()
                    .fold(0u32, |m, &i| m | (1 << i))
            })
            .collect();
        let mut seen: HashSet<u32> = principal.iter().copied().collect();
        let mut queue: VecDeque<u32> = seen.iter().copied().collect();
        while let Some(mask) = queue.pop_front() {
            for &p in &principal {
                let u = mask | p;
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        let mut masks: Vec<u32> = seen.into_iter().collect();
        masks.sort_unstable();
        Ok(masks
            .into_iter()
            .map(|m| {
                let elems = (0..self.len())
                    .filter(|&i| m & (1 << i) != 0)
                    .map(|i| self.elements[i].clone())
                    .collect();
                Semigroup::from_closed(self.degree, elems)
            })
            .collect())
    }

    /// Conjugate copy under the point relabeling `x -> relabel[x - 1]`.
    pub fn relabel(&self, relabel: &[usize]) -> Semigroup {
        Semigroup::from_closed(
            self.degree,
            self.elements.iter().map(|e| e.relabel(relabel)).collect(),
        )
    }

    /// Abstract isomorphism test, ignoring the action on points.
    pub fn is_isomorphic(&self, other: &Semigroup) -> bool {
        abstract_isomorphism(self, other).is_some()
    }

    /// Canonical text: a `degree:` header and one element per line.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("degree: {}\n", self.degree);
        for e in &self.elements {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }
}

impl<'a> IntoIterator for &'a Semigroup {
    type Item = &'a PartialPerm;
    type IntoIter = std::slice::Iter<'a, PartialPerm>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Per-element isomorphism invariant: idempotency, index and period of the
/// monogenic subsemigroup, and the sizes of the principal one-sided ideals.
fn element_invariant(s: &Semigroup, a: usize) -> (bool, usize, usize, usize, usize) {
    let mut powers = vec![a];
    let mut pos = HashMap::from([(a, 0usize)]);
    let (index, period) = loop {
        let next = s.product(*powers.last().unwrap(), a);
        if let Some(&at) = pos.get(&next) {
            break (at + 1, powers.len() - at);
        }
        pos.insert(next, powers.len());
        powers.push(next);
    };
    let right: HashSet<usize> = (0..s.len()).map(|x| s.product(a, x)).collect();
    let left: HashSet<usize> = (0..s.len()).map(|x| s.product(x, a)).collect();
    (s.product(a, a) == a, index, period, right.len(), left.len())
}

/// Finds an isomorphism `a -> b` as an index map, if one exists.
pub(crate) fn abstract_isomorphism(a: &Semigroup, b: &Semigroup) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let m = a.len();
    let inv_a: Vec<_> = (0..m).map(|x| element_invariant(a, x)).collect();
    let inv_b: Vec<_> = (0..m).map(|x| element_invariant(b, x)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..m)
        .map(|x| (0..m).filter(|&y| inv_b[y] == inv_a[x]).collect())
        .collect();

    // Greedy generating set, rarest invariant first.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&x| candidates[x].len());
    let mut generators = Vec::new();
    let mut covered = vec![false; m];
    for x in order {
        if !covered[x] {
            generators.push(x);
            for y in a.sub_closure(&generators) {
                covered[y] = true;
            }
        }
    }

    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];
    if extend_isomorphism(a, b, &generators, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &Semigroup,
    b: &Semigroup,
    generators: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == generators.len() {
        return map.iter().all(|&y| y != usize::MAX);
    }
    let g = generators[depth];
    for &image in &candidates[g] {
        if used[image] {
            continue;
        }
        let saved_map = map.clone();
        let saved_used = used.clone();
        map[g] = image;
        used[image] = true;
        if propagate(a, b, &generators[..=depth], map, used)
            && extend_isomorphism(a, b, generators, candidates, depth + 1, map, used)
        {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Extends the map along right multiplication by assigned generators,
/// checking `f(xg) = f(x)f(g)` and injectivity.
fn propagate(
    a: &Semigroup,
    b: &Semigroup,
    generators: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let mut queue: VecDeque<usize> = (0..a.len()).filter(|&x| map[x] != usize::MAX).collect();
    while let Some(x) = queue.pop_front() {
        for &g in generators {
            let y = a.product(x, g);
            let fy = b.product(map[x], map[g]);
            if map[y] == usize::MAX {
                if used[fy] {
                    return false;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    true
}
