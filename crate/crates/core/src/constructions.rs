//! The two explicit families of subsemigroups of `IS_n`:
//!
//! * Brandt subsemigroups `B(G; M_1..M_k; π_1..π_k)`, whose non-zero
//!   elements are `M(i,g,j) = π_i⁻¹ g π_j` for `g` in a group `G` acting on
//!   the block `M_1` and bijections `π_i: M_1 → M_i`;
//! * semitransitive quotients `(G × T¹)/I`, generated by a group acting
//!   diagonally on `k` labeled blocks and the nilpotent chain map that moves
//!   each block onto the next.

use crate::action::{self, RStructure};
use crate::error::{Error, Result};
use crate::partial_perm::{PartialPerm, Point, PointSet};
use crate::perm_group::PermGroup;
use crate::semigroup::Semigroup;

fn check_partition(degree: usize, blocks: &[PointSet]) -> Result<()> {
    let mut seen = vec![false; degree + 1];
    for block in blocks {
        if block.is_empty() {
            return Err(Error::InvalidPresentation("empty block".into()));
        }
        for &p in block {
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPresentation(format!(
                    "point {p} lies in two blocks"
                )));
            }
        }
    }
    if let Some(p) = (1..=degree).find(|&p| !seen[p]) {
        return Err(Error::InvalidPresentation(format!(
            "point {p} lies in no block"
        )));
    }
    let size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != size) {
        return Err(Error::InvalidPresentation(
            "blocks have unequal sizes".into(),
        ));
    }
    Ok(())
}

/// Consecutive blocks `{1..d}, {d+1..2d}, ...`.
pub fn consecutive_blocks(degree: usize, block_size: usize) -> Vec<PointSet> {
    (0..degree / block_size)
        .map(|i| (i * block_size + 1..=(i + 1) * block_size).collect())
        .collect()
}

/// The data `(G; M_i; π_i)` of a Brandt subsemigroup, normalized so that
/// `π_1` is the identity of `M_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrandtPresentation {
    degree: usize,
    blocks: Vec<PointSet>,
    group: PermGroup,
    bijections: Vec<PartialPerm>,
}

impl BrandtPresentation {
    /// Validates and normalizes. `group` acts on `blocks[0]`, and
    /// `bijections[i]` maps `blocks[0]` onto `blocks[i]`.
    pub fn new(
        degree: usize,
        blocks: Vec<PointSet>,
        group: PermGroup,
        bijections: Vec<PartialPerm>,
    ) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::InvalidPresentation(
                "a Brandt presentation needs at least two blocks".into(),
            ));
        }
        check_partition(degree, &blocks)?;
        if group.degree() != degree || *group.points() != blocks[0] {
            return Err(Error::InvalidPresentation(
                "the group must act on the first block".into(),
            ));
        }
        if bijections.len() != blocks.len() {
            return Err(Error::InvalidPresentation(format!(
                "{} bijections for {} blocks",
                bijections.len(),
                blocks.len()
            )));
        }
        for (pi, block) in bijections.iter().zip(&blocks) {
            if pi.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: pi.degree(),
                });
            }
            if pi.dom() != blocks[0] || pi.ran() != *block {
                return Err(Error::InvalidPresentation(format!(
                    "{pi} is not a bijection from {:?} onto {:?}",
                    blocks[0], block
                )));
            }
        }
        // B(G; π_i) = B(π_1⁻¹ G π_1; π_1⁻¹ π_i) as sets, so we may take π_1 = e.
        let first_inv = bijections[0].inverse();
        let group = group.transport(&bijections[0])?;
        let bijections = bijections.iter().map(|pi| &first_inv * pi).collect();
        Ok(BrandtPresentation {
            degree,
            blocks,
            group,
            bijections,
        })
    }

    /// Blocks `{1..d}, {d+1..2d}, ...` with `π_i: x ↦ x + (i-1)d`, for a group
    /// acting on `{1..d}`.
    pub fn standard(degree: usize, group: PermGroup) -> Result<Self> {
        let d = group.points().len();
        if *group.points() != (1..=d).collect::<PointSet>() {
            return Err(Error::InvalidPresentation(
                "standard presentations need a group on {1..d}".into(),
            ));
        }
        if d == 0 || !degree.is_multiple_of(d) {
            return Err(Error::InvalidPresentation(format!(
                "block size {d} does not divide degree {degree}"
            )));
        }
        let blocks = consecutive_blocks(degree, d);
        let bijections = (0..blocks.len())
            .map(|i| PartialPerm::from_pairs(degree, (1..=d).map(|x| (x, x + i * d))))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::generate(
            degree,
            group.points().clone(),
            group
                .generators()
                .iter()
                .map(|g| PartialPerm::from_pairs(degree, g.arrows()).expect("group element")),
        )?;
        Self::new(degree, blocks, group, bijections)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn bijections(&self) -> &[PartialPerm] {
        &self.bijections
    }

    /// Number of blocks `|I|`.
    pub fn index_count(&self) -> usize {
        self.blocks.len()
    }

    /// `M(i, g, j) = π_i⁻¹ g π_j` (0-based block indices).
    pub fn element(&self, i: usize, g: &PartialPerm, j: usize) -> PartialPerm {
        &(&self.bijections[i].inverse() * g) * &self.bijections[j]
    }

    /// Same blocks and group, with each `π_i` replaced by `π_i g_i`
    /// (`g_i` a permutation of `M_1`).
    pub fn retwisted(&self, twists: &[PartialPerm]) -> Result<Self> {
        let bijections = self
            .bijections
            .iter()
            .zip(twists)
            .map(|(pi, g)| g * pi)
            .collect();
        Self::new(
            self.degree,
            self.blocks.clone(),
            self.group.clone(),
            bijections,
        )
    }
}

/// `{ M(i,g,j) } ∪ {0}`, of size `k²|G| + 1`.
pub fn build_brandt(p: &BrandtPresentation) -> Semigroup {
    let k = p.index_count();
    let mut elements = vec![PartialPerm::zero(p.degree)];
    for i in 0..k {
        for j in 0..k {
            for g in p.group.elements() {
                elements.push(p.element(i, g, j));
            }
        }
    }
    Semigroup::from_closed(p.degree, elements)
}

/// Recovers a normalized presentation of a transitive inverse semigroup
/// with zero whose non-zero elements all have the same rank.
pub fn recognize_brandt(s: &Semigroup) -> Result<BrandtPresentation> {
    let n = s.degree();
    if s.zero().is_none() {
        return Err(Error::NotBrandt("no zero element".into()));
    }
    let nonzero: Vec<&PartialPerm> = s.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::NotBrandt("only the zero element".into()));
    }
    let rank = nonzero[0].rank();
    if let Some(f) = nonzero.iter().find(|f| f.rank() != rank) {
        return Err(Error::NotBrandt(format!(
            "mixed ranks: {} has rank {}, expected {rank}",
            f,
            f.rank()
        )));
    }
    if !action::is_transitive(s) {
        return Err(Error::NotBrandt("not transitive".into()));
    }
    if !s.is_inverse_semigroup() {
        return Err(Error::NotBrandt("not an inverse semigroup".into()));
    }
    if rank == n {
        return Err(Error::NotBrandt(
            "a single block: this is a group with zero".into(),
        ));
    }
    let first_block = nonzero
        .iter()
        .find(|f| f.dom().contains(&1))
        .expect("transitive action moves point 1")
        .dom();
    let from_first: Vec<&PartialPerm> = nonzero
        .iter()
        .copied()
        .filter(|f| f.dom() == first_block)
        .collect();
    let mut blocks: Vec<PointSet> = vec![first_block.clone()];
    let mut bijections = vec![PartialPerm::partial_identity(n, &first_block)];
    for x in 1..=n {
        if blocks.iter().any(|b| b.contains(&x)) {
            continue;
        }
        let pi = from_first
            .iter()
            .find(|f| f.ran().contains(&x))
            .ok_or_else(|| {
                Error::NotBrandt(format!("nothing maps {first_block:?} onto point {x}"))
            })?;
        let range = pi.ran();
        if blocks.iter().any(|b| !b.is_disjoint(&range)) {
            return Err(Error::NotBrandt(format!(
                "range {range:?} overlaps an existing block"
            )));
        }
        blocks.push(range);
        bijections.push((*pi).clone());
    }
    let group = PermGroup::from_semigroup_part(s, &first_block)?;
    let p = BrandtPresentation::new(n, blocks, group, bijections)?;
    if build_brandt(&p) != *s {
        return Err(Error::NotBrandt(
            "the recovered presentation builds a different semigroup".into(),
        ));
    }
    Ok(p)
}

/// The data of a `(G × T¹)/I` action: `k` labeled blocks
/// `M_i = {a_{i,1}, ..., a_{i,m}}`, a transitive group on `M_1` extended
/// diagonally, and the chain map `a_{i,j} ↦ a_{i+1,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtPresentation {
    degree: usize,
    blocks: Vec<Vec<Point>>,
    group: PermGroup,
}

impl GtPresentation {
    /// `blocks[i][j]` is the point `a_{i+1, j+1}`.
    pub fn new(degree: usize, blocks: Vec<Vec<Point>>, group: PermGroup) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::InvalidPresentation(
                "the chain length k must exceed 1".into(),
            ));
        }
        let sets: Vec<PointSet> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
        if sets.iter().zip(&blocks).any(|(s, b)| s.len() != b.len()) {
            return Err(Error::InvalidPresentation(
                "a point repeats inside a block".into(),
            ));
        }
        check_partition(degree, &sets)?;
        if group.degree() != degree || *group.points() != sets[0] {
            return Err(Error::InvalidPresentation(
                "the group must act on the first block".into(),
            ));
        }
        if !group.is_transitive() {
            return Err(Error::InvalidPresentation(
                "the group must be transitive on the first block".into(),
            ));
        }
        Ok(GtPresentation {
            degree,
            blocks,
            group,
        })
    }

    /// Consecutive ascending blocks of size `n/k`, for a group on `{1..n/k}`.
    pub fn standard(degree: usize, k: usize, group: PermGroup) -> Result<Self> {
        if k <= 1 {
            return Err(Error::InvalidPresentation(
                "the chain length k must exceed 1".into(),
            ));
        }
        if !degree.is_multiple_of(k) {
            return Err(Error::InvalidPresentation(format!(
                "k = {k} does not divide n = {degree}"
            )));
        }
        let m = degree / k;
        let blocks = (0..k)
            .map(|i| (i * m + 1..=(i + 1) * m).collect())
            .collect();
        Self::new(degree, blocks, group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Chain length, the number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// `φ: a_{i,j} ↦ a_{i+1,j}`, undefined on the last block.
    pub fn chain(&self) -> PartialPerm {
        let pairs = self
            .blocks
            .windows(2)
            .flat_map(|w| w[0].iter().copied().zip(w[1].iter().copied()));
        PartialPerm::from_pairs(self.degree, pairs).expect("blocks form a partition")
    }

    /// Extends `g` from `M_1` to every block along the labeling.
    pub fn diagonal(&self, g: &PartialPerm) -> PartialPerm {
        let first = &self.blocks[0];
        let position = |x: Point| first.iter().position(|&p| p == x).expect("point of M_1");
        let pairs = self.blocks.iter().flat_map(|block| {
            first.iter().map(move |&x| {
                (
                    block[position(x)],
                    block[position(g.apply(x).expect("permutation of M_1"))],
                )
            })
        });
        PartialPerm::from_pairs(self.degree, pairs).expect("diagonal action is a permutation")
    }
}

/// `{ ĝ φ^t : g ∈ G, 0 ≤ t < k } ∪ {0}`, of size `|G|·k + 1`.
pub fn build_gt(p: &GtPresentation) -> Semigroup {
    let chain = p.chain();
    let mut elements = vec![PartialPerm::zero(p.degree)];
    for g in p.group.elements() {
        let mut x = p.diagonal(g);
        for _ in 0..p.k() {
            elements.push(x.clone());
            x = &x * &chain;
        }
    }
    Semigroup::from_closed(p.degree, elements)
}

/// The map that forgets the last class `M_k`: class-preserving elements are
/// restricted to `X ∖ M_k`, and elements missing `M_k` in their domain lose
/// the last point of every chain. Points of `X ∖ M_k` are renumbered
/// `1, 2, ...` in increasing order.
#[derive(Clone, Debug)]
pub struct GammaReduction {
    kept: Vec<Point>,
    last: PointSet,
    degree: usize,
    image: Semigroup,
}

impl GammaReduction {
    /// Original labels of the new points `1, 2, ...`.
    pub fn kept_points(&self) -> &[Point] {
        &self.kept
    }

    pub fn image(&self) -> &Semigroup {
        &self.image
    }

    /// The image of one element of the source.
    pub fn apply(&self, f: &PartialPerm) -> Result<PartialPerm> {
        gamma_element(f, &self.kept, &self.last, self.degree)
    }

    /// Relabels an element of the image back onto the original points
    /// (undefined on `M_k`).
    pub fn lift(&self, f: &PartialPerm) -> PartialPerm {
        PartialPerm::from_pairs(
            self.degree,
            f.arrows()
                .map(|(x, y)| (self.kept[x - 1], self.kept[y - 1])),
        )
        .expect("relabeling is injective")
    }

    /// Checks `γ(ab) = γ(a)γ(b)` on every pair of the source.
    pub fn is_homomorphism(&self, source: &Semigroup) -> bool {
        let images: Vec<PartialPerm> = source
            .iter()
            .map(|f| self.apply(f).expect("defined on the source"))
            .collect();
        (0..source.len()).all(|a| {
            (0..source.len()).all(|b| {
                let ab = source.product(a, b);
                images[ab] == &images[a] * &images[b]
            })
        })
    }
}

fn gamma_element(
    f: &PartialPerm,
    kept: &[Point],
    last: &PointSet,
    degree: usize,
) -> Result<PartialPerm> {
    let preserves = f.image_of(last) == *last;
    let avoids = f.dom().is_disjoint(last);
    if !preserves && !avoids {
        return Err(Error::Structure(format!(
            "{f} neither preserves the last class nor avoids it"
        )));
    }
    let mut new_label = vec![0usize; degree + 1];
    for (i, &p) in kept.iter().enumerate() {
        new_label[p] = i + 1;
    }
    PartialPerm::from_pairs(
        kept.len(),
        f.arrows()
            .filter(|(x, y)| !last.contains(x) && !last.contains(y))
            .map(|(x, y)| (new_label[x], new_label[y])),
    )
}

/// Applies the reduction to every element and checks that the image is a
/// semigroup.
pub fn gamma(s: &Semigroup, r: &RStructure) -> Result<GammaReduction> {
    if r.len() < 2 {
        return Err(Error::Precondition(
            "the reduction needs at least two classes".into(),
        ));
    }
    let last = r.last().clone();
    let kept: Vec<Point> = (1..=s.degree()).filter(|p| !last.contains(p)).collect();
    let images = s
        .iter()
        .map(|f| gamma_element(f, &kept, &last, s.degree()))
        .collect::<Result<Vec<_>>>()?;
    let image = Semigroup::from_elements(images)?;
    Ok(GammaReduction {
        kept,
        last,
        degree: s.degree(),
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn pts(range: std::ops::RangeInclusive<usize>) -> PointSet {
        range.collect()
    }

    fn c4_presentation() -> BrandtPresentation {
        let g = PermGroup::generate(8, pts(1..=4), [pp("(1,2,3,4)5]6]7]8]", 8)]).unwrap();
        BrandtPresentation::new(
            8,
            vec![pts(1..=4), pts(5..=8)],
            g,
            vec![pp("(1)(2)(3)(4)5]6]7]8]", 8), pp("(1,5](2,6](3,7](4,8]", 8)],
        )
        .unwrap()
    }

    #[test]
    fn brandt_over_c4_is_the_17_element_listing() {
        let s = build_brandt(&c4_presentation());
        assert_eq!(s, brandt_17());
    }

    #[test]
    fn rank_one_brandt_on_three_points() {
        let trivial = PermGroup::trivial(3, pts(1..=1)).unwrap();
        let p = BrandtPresentation::standard(3, trivial).unwrap();
        let s = build_brandt(&p);
        assert_eq!(s.len(), 10);
        // Oracle: all rank-one maps of IS_3, plus zero.
        let mut want = vec![PartialPerm::zero(3)];
        for x in 1..=3 {
            for y in 1..=3 {
                want.push(PartialPerm::from_pairs(3, [(x, y)]).unwrap());
            }
        }
        assert_eq!(s, Semigroup::from_elements(want).unwrap());
    }

    #[test]
    fn single_block_is_rejected() {
        let g = PermGroup::generate(4, pts(1..=4), [pp("(1,2,3,4)", 4)]).unwrap();
        let err = BrandtPresentation::new(4, vec![pts(1..=4)], g.clone(), vec![g.identity()]);
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn invalid_brandt_data() {
        let g = PermGroup::trivial(3, pts(1..=1)).unwrap();
        // unequal blocks
        let e = BrandtPresentation::new(3, vec![pts(1..=1), pts(2..=3)], g.clone(), vec![]);
        assert!(e.is_err());
        // bijection with the wrong range
        let e = BrandtPresentation::new(
            2,
            vec![pts(1..=1), pts(2..=2)],
            PermGroup::trivial(2, pts(1..=1)).unwrap(),
            vec![pp("(1)2]", 2), pp("(1)2]", 2)],
        );
        assert!(e.is_err());
    }

    #[test]
    fn normalization_keeps_the_element_set() {
        let p = c4_presentation();
        // π_1 = (1,2,3,4), π_2 = (1,6](2,7](3,8](4,5]
        let q = BrandtPresentation::new(
            8,
            p.blocks().to_vec(),
            p.group().clone(),
            vec![pp("(1,2,3,4)5]6]7]8]", 8), pp("(1,6](2,7](3,8](4,5]", 8)],
        )
        .unwrap();
        assert!(q.bijections()[0].is_idempotent());
        assert_eq!(build_brandt(&q), build_brandt(&p));
    }

    #[test]
    fn brandt_multiplication_rule() {
        let p = c4_presentation();
        let group = p.group().elements();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        for g in group {
                            for h in group {
                                let prod = &p.element(i, g, j) * &p.element(k, h, l);
                                if j == k {
                                    assert_eq!(prod, p.element(i, &(g * h), l));
                                } else {
                                    assert!(prod.is_zero());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn recognize_round_trips() {
        let p = c4_presentation();
        let s = build_brandt(&p);
        let q = recognize_brandt(&s).unwrap();
        assert_eq!(build_brandt(&q), s);
        assert_eq!(q.group().order(), 4);
        assert_eq!(q.index_count(), 2);

        let rank1 = build_brandt(
            &BrandtPresentation::standard(3, PermGroup::trivial(3, pts(1..=1)).unwrap()).unwrap(),
        );
        let q = recognize_brandt(&rank1).unwrap();
        assert_eq!(q.group().order(), 1);
        assert_eq!(q.blocks(), &[pts(1..=1), pts(2..=2), pts(3..=3)]);
    }

    #[test]
    fn recognize_rejects_non_brandt_inputs() {
        let c4 = Semigroup::closure([pp("(1,2,3,4)", 4)]).unwrap();
        let err = recognize_brandt(&c4).unwrap_err();
        assert!(err.to_string().contains("not 0-simple Brandt form"));
        assert!(recognize_brandt(&five_element_example()).is_err());
        // mixed ranks
        let mixed =
            Semigroup::closure([PartialPerm::identity(2), pp("(1,2]", 2), pp("(2,1]", 2)]).unwrap();
        assert!(
            matches!(recognize_brandt(&mixed), Err(Error::NotBrandt(m)) if m.contains("mixed ranks"))
        );
    }

    fn gt_example() -> GtPresentation {
        let g = PermGroup::generate(8, pts(1..=2), [pp("(1,2)3]4]5]6]7]8]", 8)]).unwrap();
        GtPresentation::standard(8, 4, g).unwrap()
    }

    #[test]
    fn gt_example_is_the_nine_element_listing() {
        let p = gt_example();
        assert_eq!(p.chain(), pp("(1,3,5,7](2,4,6,8]", 8));
        assert_eq!(
            p.diagonal(&pp("(1,2)3]4]5]6]7]8]", 8)),
            pp("(1,2)(3,4)(5,6)(7,8)", 8)
        );
        assert_eq!(build_gt(&p), gt_9());
    }

    #[test]
    fn small_gt_instances() {
        let s = build_gt(
            &GtPresentation::standard(3, 3, PermGroup::trivial(3, pts(1..=1)).unwrap()).unwrap(),
        );
        let want = Semigroup::closure([PartialPerm::identity(3), pp("(1,2,3]", 3)]).unwrap();
        assert_eq!(s, want);
        assert_eq!(s.len(), 4);
        let s = build_gt(
            &GtPresentation::standard(2, 2, PermGroup::trivial(2, pts(1..=1)).unwrap()).unwrap(),
        );
        assert_eq!(s.element_strings().len(), 3);
        assert!(s.contains(&pp("(1,2]", 2)));
    }

    #[test]
    fn gt_errors() {
        let g = PermGroup::trivial(3, pts(1..=1)).unwrap();
        assert!(GtPresentation::standard(3, 2, g.clone()).is_err());
        assert!(GtPresentation::standard(3, 1, g).is_err());
        let intransitive = PermGroup::trivial(4, pts(1..=2)).unwrap();
        assert!(GtPresentation::standard(4, 2, intransitive).is_err());
    }

    #[test]
    fn gt_output_structure() {
        let s = build_gt(&gt_example());
        assert!(action::is_semitransitive(&s));
        assert!(!action::is_transitive(&s));
        assert!(s.zero().is_some());
        assert!(s.nilpotents().contains(&&pp("(1,3,5,7](2,4,6,8]", 8)));
        let r = action::r_structure(&s).unwrap();
        let blocks: Vec<PointSet> = gt_example()
            .blocks()
            .iter()
            .map(|b| b.iter().copied().collect())
            .collect();
        assert_eq!(r.classes(), &blocks[..]);
    }

    #[test]
    fn gamma_of_the_nine_element_example() {
        let s = gt_9();
        let r = action::r_structure(&s).unwrap();
        let red = gamma(&s, &r).unwrap();
        assert_eq!(red.kept_points(), &[1, 2, 3, 4, 5, 6]);
        assert!(red.is_homomorphism(&s));
        // Oracle: build the k = 3 instance on six points directly.
        let g = PermGroup::generate(6, pts(1..=2), [pp("(1,2)3]4]5]6]", 6)]).unwrap();
        let want = build_gt(&GtPresentation::standard(6, 3, g).unwrap());
        assert_eq!(red.image(), &want);
        assert_eq!(red.image().len(), 7);
        for text in ["(1,7](2,8]3]4]5]6]", "(1,8](2,7]3]4]5]6]", "0"] {
            assert!(red.apply(&pp(text, 8)).unwrap().is_zero());
        }
        assert_eq!(
            red.apply(&PartialPerm::identity(8)).unwrap(),
            PartialPerm::identity(6)
        );
        assert_eq!(
            red.lift(&pp("(1,3,5](2,4,6]", 6)),
            pp("(1,3,5](2,4,6]7]8]", 8)
        );
    }

    #[test]
    fn gamma_needs_two_classes() {
        let s = brandt_17();
        let r = action::r_structure(&s).unwrap();
        assert!(matches!(gamma(&s, &r), Err(Error::Precondition(_))));
    }
}
