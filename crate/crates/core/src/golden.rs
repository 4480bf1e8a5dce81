//! Worked examples with their reference element listings.

/// The 17-element Brandt semigroup over `⟨(1,2,3,4)⟩` with blocks
/// `{1..4}, {5..8}` and `π_2: i ↦ i + 4`, degree 8.
pub const BRANDT_17: [&str; 17] = [
    "(1,2,3,4)5]6]7]8]",
    "(1,3)(2,4)5]6]7]8]",
    "(1,4,3,2)5]6]7]8]",
    "(1)(2)(3)(4)5]6]7]8]",
    "(1,5](2,6](3,7](4,8]",
    "(1,6](2,7](3,8](4,5]",
    "(1,7](2,8](3,5](4,6]",
    "(1,8](2,5](3,6](4,7]",
    "(5,1](6,2](7,3](8,4]",
    "(6,1](7,2](8,3](5,4]",
    "(7,1](8,2](5,3](6,4]",
    "(8,1](5,2](6,3](7,4]",
    "(5,6,7,8)1]2]3]4]",
    "(5,7)(6,8)1]2]3]4]",
    "(5,8,7,6)1]2]3]4]",
    "(5)(6)(7)(8)1]2]3]4]",
    "0",
];

/// The nine-element `(G x T^1)/I` with `G = {e, (1,2)(3,4)(5,6)(7,8)}` and
/// chain `(1,3,5,7](2,4,6,8]`, degree 8.
pub const GT_9: [&str; 9] = [
    "(1)(2)(3)(4)(5)(6)(7)(8)",
    "(1,2)(3,4)(5,6)(7,8)",
    "(1,3,5,7](2,4,6,8]",
    "(1,4,5,8](2,3,6,7]",
    "(1,5](3,7](2,6](4,8]",
    "(1,6](2,5](3,8](4,7]",
    "(1,7](2,8]3]4]5]6]",
    "(1,8](2,7]3]4]5]6]",
    "0",
];

/// A minimal semitransitive subsemigroup of `IS_3` with five elements,
/// more than the least possible size 4.
pub const FIVE_ELEMENT: [&str; 5] = ["(1,2)(3)", "(1)(2)(3)", "(1,3]2]", "(2,3]1]", "0"];

/// Generators of [`FIVE_ELEMENT`].
pub const FIVE_ELEMENT_GENERATORS: [&str; 2] = ["(1,2)(3)", "(1,3]2]"];
