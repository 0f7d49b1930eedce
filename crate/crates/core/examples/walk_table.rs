//! Prints simple-path and walk counts out of each orbit of `J3*`.

use homred::hom::{format_walk_table, walk_table};

pub fn run_example() -> homred::Result<bool> {
    let rows = walk_table();
    print!("{}", format_walk_table(&rows));
    let z1 = rows.iter().find(|r| r.label == "z1").expect("z1 row");
    let got: Vec<u32> = z1.profile.d.iter().chain(&z1.profile.w).map(|x| x.try_into().unwrap()).collect();
    Ok(got == [4, 10, 20, 4, 14, 46])
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
