//! Canonical quadruple, running range and the amplitude for each admissible
//! running spin.
//!
//! Run with `cargo run --example regularize`.

use spinnet::exactnum::Spin;
use spinnet::spinnet::{regularized_enumeration, Symbol, SymbolSpins};
use spinnet::symmetry::{canonicalize_quadruple, regularization_bounds, running_range};

fn main() -> spinnet::Result<()> {
    let q = canonicalize_quadruple(Spin::new(2), Spin::new(2), Spin::new(2), Spin::new(2))?;
    let range = running_range(&q);
    let report = regularization_bounds(&q);
    println!("a={} b={} c={} d={} s={}", q.a, q.b, q.c, q.d, q.s);
    println!("x in [{}, {}]", range.x_min, range.x_max);
    println!("{report:?}");

    let others: SymbolSpins = [Symbol::E, Symbol::F, Symbol::P, Symbol::Q, Symbol::R]
        .iter()
        .map(|&s| (s, Spin::new(2)))
        .collect();
    for (x, amp) in regularized_enumeration(&q, &others)? {
        println!("x={x:<4} {amp:<28} ~ {:+.3e}", amp.to_f64());
    }
    Ok(())
}
