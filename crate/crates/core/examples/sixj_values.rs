//! Exact 6j symbols and the cost of reusing them through a symmetry-keyed cache.
//!
//! Run with `cargo run --example sixj_values`.

use spinnet::exactnum::Spin;
use spinnet::wigner::{sixj_value, SixJ, SixJCache};

fn main() -> spinnet::Result<()> {
    for t in [[2, 2, 2, 2, 2, 2], [2, 2, 2, 0, 2, 2], [4, 4, 4, 2, 2, 2], [3, 2, 1, 2, 1, 2], [1, 1, 2, 1, 1, 2]] {
        let s = SixJ::from_twice(t);
        let v = sixj_value(&s)?;
        println!("{s:<32} = {v:<24} ~ {:+.6}", v.to_f64());
    }

    // half-integer input through the parser
    let half: Spin = "1/2".parse()?;
    let s = SixJ::new(half, half, Spin::new(2), half, half, Spin::ZERO);
    println!("{s} = {}", sixj_value(&s)?);

    // an inadmissible triad is an error, not a silent zero
    let bad = SixJ::from_twice([2, 2, 6, 2, 2, 2]);
    println!("{bad}: {}", sixj_value(&bad).unwrap_err());

    let mut cache = SixJCache::new();
    for a in 0..=6 {
        for b in 0..=6 {
            for x in 0..=6 {
                cache.get_or_zero(&SixJ::from_twice([a, b, x, b, a, x]));
            }
        }
    }
    println!("{} orbit representatives cover 343 lookups", cache.len());
    Ok(())
}
