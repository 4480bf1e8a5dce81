//! Minimal transitive subgroups of `S_d` for small `d`.
//!
//!     cargo run --example minimal_groups -- 6

use isg::classification::minimal_transitive_subgroups;

fn main() -> Result<(), isg::Error> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for d in 1..=max {
        let groups = minimal_transitive_subgroups(d)?;
        println!(
            "degree {d}: t = {}, conjugacy classes = {}",
            groups.count(),
            groups.conjugacy_classes.len()
        );
        for g in &groups.conjugacy_classes {
            let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
            println!("  order {:>3}  generated by {}", g.order(), gens.join(", "));
        }
    }
    Ok(())
}
