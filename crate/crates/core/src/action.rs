//! How a subsemigroup of `IS_n` acts on the points `{1, ..., n}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partial_perm::{Point, PointSet};
use crate::semigroup::Semigroup;

/// `reach[x][y]` is true when some element maps `x` to `y` (1-based, row and
/// column 0 unused).
fn reach_matrix(s: &Semigroup) -> Vec<Vec<bool>> {
    let n = s.degree();
    let mut reach = vec![vec![false; n + 1]; n + 1];
    for f in s {
        for (x, y) in f.arrows() {
            reach[x][y] = true;
        }
    }
    reach
}

/// The orbit `xS` of every point, in point order.
pub fn orbits(s: &Semigroup) -> Vec<PointSet> {
    let reach = reach_matrix(s);
    (1..=s.degree())
        .map(|x| (1..=s.degree()).filter(|&y| reach[x][y]).collect())
        .collect()
}

/// Every ordered pair `(x, y)` is realized by some element.
pub fn is_transitive(s: &Semigroup) -> bool {
    reach_matrix(s)
        .iter()
        .skip(1)
        .all(|row| row.iter().skip(1).all(|&r| r))
}

fn incomparable_pair(s: &Semigroup) -> Option<(Point, Point)> {
    let reach = reach_matrix(s);
    let n = s.degree();
    (1..=n)
        .flat_map(|x| (x..=n).map(move |y| (x, y)))
        .find(|&(x, y)| !reach[x][y] && !reach[y][x])
}

/// Every pair `{x, y}`, including `x = y`, is realized in at least one
/// direction.
pub fn is_semitransitive(s: &Semigroup) -> bool {
    incomparable_pair(s).is_none()
}

/// Points from which every point (itself included) is reached by some
/// element.
pub fn cyclic_points(s: &Semigroup) -> PointSet {
    let reach = reach_matrix(s);
    (1..=s.degree())
        .filter(|&x| reach[x].iter().skip(1).all(|&r| r))
        .collect()
}

/// The classes `M_1 > ... > M_k` of the preorder `x <= y` iff some element
/// maps `x` to `y`, for a semitransitive action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RStructure {
    classes: Vec<PointSet>,
}

impl RStructure {
    pub fn classes(&self) -> &[PointSet] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn first(&self) -> &PointSet {
        &self.classes[0]
    }

    pub fn last(&self) -> &PointSet {
        self.classes.last().expect("at least one class")
    }

    /// 0-based position of the class containing `x`.
    pub fn class_of(&self, x: Point) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&x))
    }
}

/// Computes the ordered classes from the sets `xS^1`. Fails when the action
/// is not semitransitive, since the preorder is then not total.
pub fn r_structure(s: &Semigroup) -> Result<RStructure> {
    if let Some((x, y)) = incomparable_pair(s) {
        return Err(Error::NotSemitransitive(x, y));
    }
    let mut by_orbit: BTreeMap<PointSet, PointSet> = BTreeMap::new();
    for (i, mut orbit) in orbits(s).into_iter().enumerate() {
        orbit.insert(i + 1);
        by_orbit.entry(orbit).or_default().insert(i + 1);
    }
    let mut keyed: Vec<(PointSet, PointSet)> = by_orbit.into_iter().collect();
    keyed.sort_by_key(|k| std::cmp::Reverse(k.0.len()));
    debug_assert!(keyed.windows(2).all(|w| w[0].0.is_superset(&w[1].0)));
    Ok(RStructure {
        classes: keyed.into_iter().map(|(_, class)| class).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::partial_perm::PartialPerm;

    fn set(points: &[Point]) -> PointSet {
        points.iter().copied().collect()
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&brandt_17()));
        assert!(!is_transitive(
            &Semigroup::closure([PartialPerm::identity(2)]).unwrap()
        ));
        assert!(is_transitive(
            &Semigroup::closure([PartialPerm::identity(1)]).unwrap()
        ));
        assert!(!is_transitive(&five_element_example()));
    }

    #[test]
    fn semitransitivity() {
        assert!(is_semitransitive(&five_element_example()));
        assert!(is_semitransitive(&brandt_17()));
        assert!(is_semitransitive(&gt_9()));
        // A nilpotent chain alone never maps a point to itself.
        let nil = Semigroup::closure([pp("(1,2]", 2)]).unwrap();
        assert!(!is_semitransitive(&nil));
    }

    #[test]
    fn cyclic_points_examples() {
        assert_eq!(cyclic_points(&brandt_17()), (1..=8).collect());
        assert_eq!(cyclic_points(&five_element_example()), set(&[1, 2]));
        assert_eq!(cyclic_points(&gt_9()), set(&[1, 2]));
    }

    #[test]
    fn r_structure_examples() {
        let r = r_structure(&five_element_example()).unwrap();
        assert_eq!(r.classes(), &[set(&[1, 2]), set(&[3])]);
        assert_eq!(r.class_sizes(), vec![2, 1]);
        let r = r_structure(&brandt_17()).unwrap();
        assert_eq!(r.classes(), &[(1..=8).collect::<PointSet>()]);
        let r = r_structure(&gt_9()).unwrap();
        assert_eq!(
            r.classes(),
            &[set(&[1, 2]), set(&[3, 4]), set(&[5, 6]), set(&[7, 8])]
        );
        assert_eq!(r.class_of(6), Some(2));
        assert_eq!(r.first(), &cyclic_points(&gt_9()));
    }

    #[test]
    fn r_structure_requires_semitransitivity() {
        let s = Semigroup::closure([PartialPerm::identity(2)]).unwrap();
        assert!(matches!(
            r_structure(&s),
            Err(Error::NotSemitransitive(1, 2))
        ));
    }
}
