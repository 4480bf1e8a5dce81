//! Extracts an inverse transitive subsemigroup from a transitive semigroup
//! that is not inverse.
//!
//!     cargo run --example extraction

use isg::{extract_inverse_transitive, is_transitive, PartialPerm, Semigroup};

fn main() -> Result<(), isg::Error> {
    let gens = [
        "(1,2,3,4)5]6]7]8]",
        "(1,5](2,6](3,7](4,8]",
        "(5,1](6,2](7,3](8,4]",
        "(1,2,5](3,4,6,7,8]",
    ]
    .iter()
    .map(|g| PartialPerm::parse(g, 8))
    .collect::<Result<Vec<_>, _>>()?;
    let s = Semigroup::closure(gens)?;
    println!(
        "S: {} elements, transitive {}, inverse {}",
        s.len(),
        is_transitive(&s),
        s.is_inverse_semigroup()
    );
    let t = extract_inverse_transitive(&s)?;
    println!(
        "T: {} elements, transitive {}, inverse {}",
        t.len(),
        is_transitive(&t),
        t.is_inverse_semigroup()
    );
    println!("T is a subset of S: {}", t.is_subset_of(&s));
    Ok(())
}
