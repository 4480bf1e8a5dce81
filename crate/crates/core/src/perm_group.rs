//! Permutation groups on a subset `Ω` of `{1, ..., n}`, stored as partial
//! permutations of degree `n` whose domain and range are both `Ω`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::partial_perm::{PartialPerm, PointSet};
use crate::semigroup::Semigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    points: PointSet,
    generators: Vec<PartialPerm>,
    // sorted
    elements: Vec<PartialPerm>,
}

impl PermGroup {
    /// The group generated by `generators`, each a permutation of `points`.
    pub fn generate(
        degree: usize,
        points: PointSet,
        generators: impl IntoIterator<Item = PartialPerm>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidPresentation(
                "group acts on an empty set".into(),
            ));
        }
        if let Some(&p) = points.iter().next_back().filter(|&&p| p > degree) {
            return Err(Error::PointOutOfRange { point: p, degree });
        }
        let identity = PartialPerm::partial_identity(degree, &points);
        let mut gens = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if g.dom() != points || g.ran() != points {
                return Err(Error::InvalidPresentation(format!(
                    "{g} is not a permutation of {points:?}"
                )));
            }
            if g != identity && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let mut seen: HashSet<PartialPerm> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.compose_unchecked(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<PartialPerm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            points,
            generators: gens,
            elements,
        })
    }

    pub fn trivial(degree: usize, points: PointSet) -> Result<Self> {
        Self::generate(degree, points, [])
    }

    /// The group of all elements of `s` whose domain and range equal `points`,
    /// restricted to those points. Fails if they do not form a group.
    pub fn from_semigroup_part(s: &Semigroup, points: &PointSet) -> Result<Self> {
        let members: Vec<PartialPerm> = s
            .iter()
            .filter(|f| f.dom() == *points && f.ran() == *points)
            .cloned()
            .collect();
        let group = Self::generate(s.degree(), points.clone(), members.iter().cloned())?;
        if group.order() != members.len() {
            return Err(Error::Structure(format!(
                "elements acting on {points:?} do not form a group"
            )));
        }
        Ok(group.with_small_generating_set())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn generators(&self) -> &[PartialPerm] {
        &self.generators
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> PartialPerm {
        PartialPerm::partial_identity(self.degree, &self.points)
    }

    pub fn contains(&self, g: &PartialPerm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.points == other.points
            && self.elements.iter().all(|g| other.contains(g))
    }

    /// Transitive on its point set.
    pub fn is_transitive(&self) -> bool {
        let first = *self.points.iter().next().expect("non-empty point set");
        let orbit: PointSet = self
            .elements
            .iter()
            .filter_map(|g| g.apply(first))
            .collect();
        orbit == self.points
    }

    /// Re-derives a generating set greedily from the elements.
    pub fn with_small_generating_set(mut self) -> Self {
        let mut gens: Vec<PartialPerm> = Vec::new();
        let mut covered: HashSet<PartialPerm> = HashSet::from([self.identity()]);
        // Prefer elements of large order: fewer generators.
        let mut by_order: Vec<&PartialPerm> = self.elements.iter().collect();
        by_order.sort_by_key(|g| std::cmp::Reverse(element_order(g)));
        for g in by_order {
            if covered.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let sub = PermGroup::generate(self.degree, self.points.clone(), gens.clone())
                .expect("elements of a group");
            covered = sub.elements.into_iter().collect();
            if covered.len() == self.order() {
                break;
            }
        }
        self.generators = gens;
        self
    }

    /// `{ bij^-1 g bij }`: the same group moved along a bijection from our
    /// points onto another point set.
    pub fn transport(&self, bijection: &PartialPerm) -> Result<PermGroup> {
        if bijection.dom() != self.points {
            return Err(Error::InvalidPresentation(format!(
                "{bijection} is not defined on exactly {:?}",
                self.points
            )));
        }
        let inv = bijection.inverse();
        PermGroup::generate(
            self.degree,
            bijection.ran(),
            self.generators.iter().map(|g| &(&inv * g) * bijection),
        )
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements.iter().map(element_order).collect();
        orders.sort_unstable();
        orders
    }

    /// Abstract group isomorphism: order and element-order profile first,
    /// then a search for a generator assignment that extends to an
    /// isomorphism.
    pub fn is_isomorphic(&self, other: &PermGroup) -> bool {
        if self.order() != other.order() || self.order_profile() != other.order_profile() {
            return false;
        }
        let gens = self.clone().with_small_generating_set().generators;
        let mut assignment = Vec::new();
        assign_generators(&gens, other, &mut assignment)
    }

    pub fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_closed(self.degree, self.elements.clone())
    }
}

/// Order of a permutation of its domain.
pub fn element_order(g: &PartialPerm) -> usize {
    g.cycle_chain()
        .cycles
        .iter()
        .fold(1, |acc, c| num_lcm(acc, c.len()))
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn assign_generators(
    gens: &[PartialPerm],
    target: &PermGroup,
    images: &mut Vec<PartialPerm>,
) -> bool {
    if images.len() == gens.len() {
        return extends_to_isomorphism(gens, images, target);
    }
    let wanted = element_order(&gens[images.len()]);
    for candidate in &target.elements {
        if element_order(candidate) != wanted {
            continue;
        }
        images.push(candidate.clone());
        if assign_generators(gens, target, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Walks all words in the generators, checking that the assignment is a
/// well-defined injective homomorphism onto `target`.
fn extends_to_isomorphism(
    gens: &[PartialPerm],
    images: &[PartialPerm],
    target: &PermGroup,
) -> bool {
    let source_id = PartialPerm::partial_identity(gens[0].degree(), &gens[0].dom());
    let mut map: HashMap<PartialPerm, PartialPerm> =
        HashMap::from([(source_id.clone(), target.identity())]);
    let mut hit: HashSet<PartialPerm> = HashSet::from([target.identity()]);
    let mut queue = VecDeque::from([source_id]);
    while let Some(x) = queue.pop_front() {
        let fx = map[&x].clone();
        for (g, h) in gens.iter().zip(images) {
            let y = &x * g;
            let fy = &fx * h;
            match map.get(&y) {
                Some(existing) if *existing != fy => return false,
                Some(_) => {}
                None => {
                    if !hit.insert(fy.clone()) {
                        return false;
                    }
                    map.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    hit.len() == target.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::pp;

    fn pts(n: usize) -> PointSet {
        (1..=n).collect()
    }

    #[test]
    fn cyclic_group_of_order_four() {
        let g = PermGroup::generate(8, pts(4), [pp("(1,2,3,4)5]6]7]8]", 8)]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_transitive());
        assert_eq!(g.order_profile(), vec![1, 2, 4, 4]);
        assert!(g.contains(&pp("(1,3)(2,4)5]6]7]8]", 8)));
    }

    #[test]
    fn generators_must_permute_the_point_set() {
        assert!(PermGroup::generate(3, pts(2), [pp("(1,2,3)", 3)]).is_err());
        assert!(PermGroup::generate(3, pts(4), []).is_err());
    }

    #[test]
    fn transport_moves_the_group() {
        let g = PermGroup::generate(8, pts(4), [pp("(1,2,3,4)5]6]7]8]", 8)]).unwrap();
        let moved = g.transport(&pp("(1,5](2,6](3,7](4,8]", 8)).unwrap();
        assert!(moved.contains(&pp("(5,6,7,8)1]2]3]4]", 8)));
        assert_eq!(moved.order(), 4);
    }

    #[test]
    fn isomorphism_of_small_groups() {
        let c4 = PermGroup::generate(4, pts(4), [pp("(1,2,3,4)", 4)]).unwrap();
        let klein =
            PermGroup::generate(4, pts(4), [pp("(1,2)(3,4)", 4), pp("(1,3)(2,4)", 4)]).unwrap();
        let c4_other = PermGroup::generate(4, pts(4), [pp("(1,3,2,4)", 4)]).unwrap();
        assert!(!c4.is_isomorphic(&klein));
        assert!(c4.is_isomorphic(&c4_other));
        // S_3 acting naturally and regularly.
        let s3 = PermGroup::generate(3, pts(3), [pp("(1,2,3)", 3), pp("(1,2)(3)", 3)]).unwrap();
        let s3_regular = PermGroup::generate(
            6,
            pts(6),
            [pp("(1,2,3)(4,5,6)", 6), pp("(1,4)(2,6)(3,5)", 6)],
        )
        .unwrap();
        let c6 = PermGroup::generate(6, pts(6), [pp("(1,2,3,4,5,6)", 6)]).unwrap();
        assert_eq!(s3_regular.order(), 6);
        assert!(s3.is_isomorphic(&s3_regular));
        assert!(!s3_regular.is_isomorphic(&c6));
    }

    #[test]
    fn small_generating_set_generates() {
        let s4 = PermGroup::generate(
            4,
            pts(4),
            [
                pp("(1,2)(3)(4)", 4),
                pp("(1,2,3,4)", 4),
                pp("(2,3)(1)(4)", 4),
            ],
        )
        .unwrap()
        .with_small_generating_set();
        assert_eq!(s4.order(), 24);
        let again = PermGroup::generate(4, pts(4), s4.generators().to_vec()).unwrap();
        assert_eq!(again.order(), 24);
        assert!(s4.generators().len() <= 2);
    }
}
