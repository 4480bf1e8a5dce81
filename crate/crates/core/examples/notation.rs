//! Cycle-chain notation: parsing, canonical printing and composition.
//!
//!     cargo run --example notation

use isg::{CycleChainForm, PartialPerm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = PartialPerm::parse("(1,3,5,7](2,4,6,8]", 8)?;
    let g = PartialPerm::parse("(1,2)(3,4)(5,6)(7,8)", 8)?;
    println!("f      = {f}");
    println!("g      = {g}");
    // Right action: x(fg) = (xf)g.
    println!("fg     = {}", &f * &g);
    println!("gf     = {}", &g * &f);
    println!("f^2    = {}", f.pow(2));
    println!("f^-1   = {}", f.inverse());
    println!(
        "rank f = {}, dom f = {:?}, ran f = {:?}",
        f.rank(),
        f.dom(),
        f.ran()
    );

    let form = CycleChainForm::of(&(&g * &f));
    println!(
        "cycles {:?}, chains {:?}, isolated {:?}",
        form.cycles, form.chains, form.isolated
    );

    // Non-canonical input is accepted and printed canonically.
    let h = PartialPerm::parse("(8,4](5,1](6,2](7,3]", 8)?;
    println!("{h}");

    match PartialPerm::parse("(1,9]", 3) {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}
