//! Builds the (10_3) configuration, checks the quadrangle axiom and prints
//! one quadrangle as DOT.
//!
//! Run with `cargo run --example desargues`.

use spinnet::projective::{
    axiom_one_holds, build_desargues, build_quadrangle, isomorphic, plane_dual, quadrangle, validate_configuration,
    ConfigurationSignature, DotMode,
};

fn main() -> spinnet::Result<()> {
    let d = build_desargues();
    let sig = d.signature().expect("configuration");
    println!("desargues {sig}, valid {}", validate_configuration(&d, ConfigurationSignature::symmetric(10, 3)));
    println!("self-dual {}", isomorphic(&plane_dual(&d), &d));
    println!("every point and line in some quadrangle: {}", axiom_one_holds(&d)?);

    for i in 1..=5 {
        let q = quadrangle(&d, i)?;
        let pts: Vec<_> = q.points().iter().filter_map(|&p| q.point_label(p)).collect();
        let lines: Vec<_> = q.lines().iter().filter_map(|&l| q.line_label(l)).collect();
        println!("Q{i}: {} | {}", pts.join(" "), lines.join(" "));
        assert!(isomorphic(&q, &build_quadrangle()));
    }
    print!("{}", quadrangle(&d, 1)?.to_dot(DotMode::Bipartite));
    Ok(())
}
