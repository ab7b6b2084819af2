//! Space dual of the Desargues configuration as a 4-simplex boundary, and the
//! cross section that recovers the configuration.
//!
//! Run with `cargo run --example space_dual`.

use spinnet::projective::{
    build_desargues, cross_section, cross_section_planes, isomorphic, space_dual_desargues,
};

fn main() -> spinnet::Result<()> {
    let d = build_desargues();
    let c = space_dual_desargues(&d)?;
    println!("f-vector {:?}, simplex boundary {}", c.f_vector(), c.is_simplex_boundary());
    for i in 1..=5 {
        let t = c.tetrahedron_by_index(i).expect("five tetrahedra");
        let colors: Vec<_> = c.tetrahedron_vertices(t).iter().map(|&v| c.vertices[v].color).collect();
        println!("T{i} on vertices {colors:?}");
    }
    for plane in cross_section_planes(&c) {
        println!("plane {}: {} points, {} lines", plane.index, plane.points.len(), plane.lines.len());
    }
    let back = cross_section(&c);
    println!("cross section isomorphic to desargues: {}", isomorphic(&back, &d));
    Ok(())
}
