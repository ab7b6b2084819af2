//! Spin labels on the Desargues lines, the induced tetrahedral 6j symbols and
//! the network amplitude.
//!
//! Run with `cargo run --example spin_network`.

use spinnet::exactnum::Spin;
use spinnet::projective::space_dual_desargues;
use spinnet::spinnet::{label_desargues, network_amplitude, transfer_labeling, Symbol, SymbolSpins};

fn main() -> spinnet::Result<()> {
    let mut spins: SymbolSpins = Symbol::ALL.iter().map(|&s| (s, Spin::new(2))).collect();
    for s in [Symbol::A, Symbol::B, Symbol::P, Symbol::R] {
        spins.insert(s, Spin::new(1));
    }

    let labeling = label_desargues(&spins)?;
    for s in Symbol::ALL {
        print!("{}{}={} ", s.name(), s.line_tag(), labeling.spin(s));
    }
    println!();
    for (i, q) in labeling.quadrangle_sixj().iter().enumerate() {
        println!("Q{} {q}", i + 1);
    }
    let simplex = transfer_labeling(&labeling, &space_dual_desargues(labeling.structure())?)?;
    for (i, t) in simplex.tetrahedral_sixj().iter().enumerate() {
        println!("T{} {t}", i + 1);
    }
    let amp = network_amplitude(&labeling)?;
    println!("amplitude {amp} ~ {:.6e}", amp.to_f64());

    // breaking a point triad is reported per point
    spins.insert(Symbol::X, Spin::new(1));
    if let Err(e) = label_desargues(&spins) {
        println!("rejected: {e}");
    }
    Ok(())
}
