//! The 144-element symmetry group on a single symbol and canonical quadruples.
//!
//! Run with `cargo run --example symmetry_orbit`.

use spinnet::exactnum::Spin;
use spinnet::symmetry::{
    canonicalize_quadruple, classical_orbit, regge_transform, regularization_bounds, running_range, symmetry_orbit,
};
use spinnet::wigner::{sixj_value, SixJ};

fn main() -> spinnet::Result<()> {
    let s = SixJ::from_twice([2, 4, 4, 4, 2, 4]);
    let value = sixj_value(&s)?;
    let full = symmetry_orbit(&s);
    println!("{s} = {value}");
    println!("classical orbit {} symbols, full orbit {}", classical_orbit(&s).len(), full.len());
    println!("regge image {}", regge_transform(&s)?);
    assert!(full.iter().all(|t| sixj_value(t).as_ref() == Ok(&value)));

    let q = canonicalize_quadruple(Spin::new(4), Spin::new(2), Spin::new(3), Spin::new(3))?;
    let range = running_range(&q);
    println!(
        "canonical a={} b={} c={} d={} s={}, x in [{}, {}], y in [{}, {}]",
        q.a, q.b, q.c, q.d, q.s, range.x_min, range.x_max, range.y_min, range.y_max
    );
    println!("{:?}", regularization_bounds(&q));
    Ok(())
}
