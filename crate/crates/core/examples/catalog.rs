//! Prints the catalog of minimal transitive subsemigroups of `IS_n`.
//!
//!     cargo run --release --example catalog -- 6

use isg::enumerate_minimal_transitive_subsemigroups;

fn main() -> Result<(), isg::Error> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let catalog = enumerate_minimal_transitive_subsemigroups(n)?;
    print!("{}", catalog.to_text());
    println!(
        "# {} entries, divisor sum {}",
        catalog.len(),
        catalog.expected_count()
    );
    Ok(())
}
