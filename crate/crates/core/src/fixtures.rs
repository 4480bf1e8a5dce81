//! Shared test data.

use crate::golden;
use crate::partial_perm::PartialPerm;
use crate::semigroup::Semigroup;

pub fn pp(text: &str, degree: usize) -> PartialPerm {
    PartialPerm::parse(text, degree).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// The five-element minimal semitransitive semigroup on three points.
pub fn five_element_example() -> Semigroup {
    Semigroup::closure([pp("(1,2)(3)", 3), pp("(1,3]2]", 3)]).unwrap()
}

/// The 17-element minimal transitive Brandt semigroup over `C_4` in `IS_8`.
pub fn brandt_17_listing() -> Vec<PartialPerm> {
    golden::BRANDT_17.iter().map(|s| pp(s, 8)).collect()
}

pub fn brandt_17() -> Semigroup {
    Semigroup::from_elements(brandt_17_listing()).unwrap()
}

/// The nine-element `(G x T^1)/I` semigroup on eight points with four classes.
pub fn gt_9_listing() -> Vec<PartialPerm> {
    golden::GT_9.iter().map(|s| pp(s, 8)).collect()
}

pub fn gt_9() -> Semigroup {
    Semigroup::from_elements(gt_9_listing()).unwrap()
}
