//! Compiles a weighted implication CSP into an unweighted one whose count
//! equals the weighted sum.

use homred::arith::{fmt_rational, rat};
use homred::csp::{compile_weight_gadget, count_csp, count_wcsp, Constraint, CspInstance, WeightedCspInstance};
use homred::formats::write_compiled;

pub fn run_example() -> homred::Result<bool> {
    // x -> y, with x weighted (5, 2).
    let inst = WeightedCspInstance::new(
        CspInstance::new(2, vec![Constraint::Imp(0, 1)])?,
        vec![[rat(5, 1), rat(2, 1)], [rat(1, 1), rat(1, 1)]],
    )?;
    let compiled = compile_weight_gadget(&inst)?;
    print!("{}", write_compiled(&compiled));
    let weighted = count_wcsp(&inst);
    let unweighted = count_csp(&compiled.csp);
    println!("weighted sum {}, compiled count {unweighted}", fmt_rational(&weighted));
    for (b, i) in [(0, 1), (1, 2)] {
        let block = compiled.block(0, b, i).expect("block exists");
        println!("block b={b} i={i}: {} solutions", count_csp(&block.sub_instance()));
    }
    Ok(rat_eq(&weighted, &unweighted))
}

fn rat_eq(a: &homred::arith::Rational, b: &num_bigint::BigUint) -> bool {
    *a == homred::arith::uint_to_rat(b)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
