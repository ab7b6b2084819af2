//! Finite incidence structures and the Desargues pipeline: five quadrangles,
//! the `(10_3)` configuration, its space dual 4-simplex and the cross section
//! back to `(10_3)`.

pub mod desargues;
pub mod incidence;
pub mod simplex;

pub use desargues::{axiom_one_holds, build_desargues, quadrangle, quadrangle_members, DesarguesTags};
pub use incidence::{
    build_quadrangle, isomorphic, plane_dual, validate_configuration, ConfigurationSignature, DotMode,
    IncidenceStructure, Labels, LineId, PointId,
};
pub use simplex::{
    cross_section, cross_section_planes, space_dual_desargues, space_dual_desargues_with_tips, SectionPlane,
    SimplicialComplex4,
};
