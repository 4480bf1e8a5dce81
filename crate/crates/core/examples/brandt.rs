//! Builds the Brandt semigroup over `⟨(1,2,3,4)⟩` with two blocks in `IS_8`,
//! recognizes it back, and certifies that it is minimal transitive.
//!
//!     cargo run --example brandt

use isg::search::certify_minimal_transitive;
use isg::{
    build_brandt, is_transitive, recognize_brandt, BrandtPresentation, PartialPerm, PermGroup,
};

fn main() -> Result<(), isg::Error> {
    let c4 = PermGroup::generate(4, (1..=4).collect(), [PartialPerm::parse("(1,2,3,4)", 4)?])?;
    let p = BrandtPresentation::standard(8, c4)?;
    let s = build_brandt(&p);
    for e in &s {
        println!("{e}");
    }
    println!("size {} = 2^2 * 4 + 1", s.len());
    println!("transitive: {}", is_transitive(&s));
    println!("inverse: {}", s.is_inverse_semigroup());
    println!("0-simple: {}", s.is_zero_simple());
    println!("minimal transitive: {}", certify_minimal_transitive(&s)?);

    let q = recognize_brandt(&s)?;
    println!(
        "recognized: {} blocks, group of order {}",
        q.index_count(),
        q.group().order()
    );
    Ok(())
}
