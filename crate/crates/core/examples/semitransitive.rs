//! The five-element minimal semitransitive subsemigroup of `IS_3`, which is
//! larger than the least possible size `n + 1 = 4`.
//!
//!     cargo run --example semitransitive

use isg::search::certify_minimal_semitransitive;
use isg::{cyclic_points, is_semitransitive, is_transitive, r_structure, PartialPerm, Semigroup};

fn main() -> Result<(), isg::Error> {
    let s = Semigroup::closure([
        PartialPerm::parse("(1,2)(3)", 3)?,
        PartialPerm::parse("(1,3]2]", 3)?,
    ])?;
    print!("{}", s.to_file_string());
    println!("semitransitive: {}", is_semitransitive(&s));
    println!("transitive: {}", is_transitive(&s));
    println!("cyclic points: {:?}", cyclic_points(&s));
    println!("classes: {:?}", r_structure(&s)?.classes());
    println!("zero: {:?}", s.zero().map(|z| z.to_string()));
    let nil: Vec<String> = s.nilpotents().iter().map(|e| e.to_string()).collect();
    println!("nilpotents: {nil:?}");
    println!(
        "minimal semitransitive: {}",
        certify_minimal_semitransitive(&s)?
    );
    Ok(())
}
