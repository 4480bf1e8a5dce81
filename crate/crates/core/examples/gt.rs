//! Builds `(G x T^1)/I` on eight points with four classes, removes the last
//! class with the reduction map, and classifies the result back into a
//! presentation.
//!
//!     cargo run --example gt

use isg::classification::check_min_semitransitive_structure;
use isg::{
    build_gt, classify_min_semitransitive, gamma, r_structure, GtPresentation, PartialPerm,
    PermGroup,
};

fn main() -> Result<(), isg::Error> {
    let g = PermGroup::generate(
        8,
        [1, 2].into_iter().collect(),
        [PartialPerm::parse("(1,2)3]4]5]6]7]8]", 8)?],
    )?;
    let p = GtPresentation::standard(8, 4, g)?;
    println!("chain: {}", p.chain());
    let s = build_gt(&p);
    print!("{}", s.to_file_string());

    println!("{}", check_min_semitransitive_structure(&s)?);

    let classes = r_structure(&s)?;
    let reduced = gamma(&s, &classes)?;
    println!(
        "after removing {:?}: {} elements on points {:?}, homomorphism: {}",
        classes.last(),
        reduced.image().len(),
        reduced.kept_points(),
        reduced.is_homomorphism(&s)
    );

    let q = classify_min_semitransitive(&s)?;
    println!(
        "recovered k = {}, |G| = {}, blocks {:?}",
        q.k(),
        q.group().order(),
        q.blocks()
    );
    assert_eq!(build_gt(&q), s);
    Ok(())
}
