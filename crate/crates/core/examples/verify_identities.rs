//! Orthogonality, Biedenharn-Elliott and the Pachner moves over small grids.
//!
//! Run with `cargo run --release --example verify_identities`.

use spinnet::exactnum::Spin;
use spinnet::identities::{
    be_check, orthogonality_check, pachner_14_check, pachner_23_check, verify_be_grid, verify_orthogonality_grid,
    BEInstance, BeForm,
};

fn main() -> spinnet::Result<()> {
    let one = Spin::new(2);
    let r = orthogonality_check(one, one, one, one, one, one);
    println!("orthogonality at spin 1: lhs {} rhs {} equal {}", r.lhs, r.rhs, r.equal);

    let inst = BEInstance::uniform(one);
    for form in [BeForm::Standard, BeForm::LiteralPaper] {
        let r = be_check(&inst, form)?;
        println!("{}: lhs {} rhs {} equal {}", form.label(), r.lhs, r.rhs, r.equal);
    }
    println!("2-3 move: {}", pachner_23_check(&inst)?.equal);
    for p_prime in [Spin::new(0), one, Spin::new(4)] {
        println!("1-4 move with p'={p_prime}: {}", pachner_14_check(&inst, p_prime)?.equal);
    }

    let (_, orth) = verify_orthogonality_grid(3)?;
    println!("orthogonality up to 3/2: {orth}");
    for form in [BeForm::Standard, BeForm::LiteralPaper] {
        let (_, summary) = verify_be_grid(2, form)?;
        println!("{} up to 1: {summary}", form.label());
    }
    Ok(())
}
