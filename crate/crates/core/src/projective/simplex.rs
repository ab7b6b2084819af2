//! The boundary of a 4-simplex obtained as the space dual of the Desargues
//! configuration, and its cross section.

use serde::Serialize;

use super::desargues::{bracket_tag, complement, curly_tag, point_tag, triangle_tag, DesarguesTags, COLORS};
use super::incidence::{IncidenceStructure, Labels, LineId, PointId};
use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type TriangleId = usize;
pub type TetrahedronId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    /// Index of the quadrangle this vertex comes from.
    pub color: u8,
    /// Curly tag listing the complementary colors, e.g. `{2345}` for color 1.
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub vertices: [VertexId; 2],
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    pub edges: [EdgeId; 3],
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tetrahedron {
    pub triangles: [TriangleId; 4],
    /// `i` for `T_i`.
    pub index: u8,
}

/// A pure simplicial complex given by its face maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex4 {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
    pub tetrahedra: Vec<Tetrahedron>,
}

impl SimplicialComplex4 {
    pub fn f_vector(&self) -> [usize; 4] {
        [self.vertices.len(), self.edges.len(), self.triangles.len(), self.tetrahedra.len()]
    }

    pub fn vertex_by_color(&self, color: u8) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.color == color)
    }

    pub fn edge_by_tag(&self, tag: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.tag == tag)
    }

    pub fn tetrahedron_by_index(&self, index: u8) -> Option<TetrahedronId> {
        self.tetrahedra.iter().position(|t| t.index == index)
    }

    pub fn triangle_vertices(&self, t: TriangleId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.triangles[t].edges.iter().flat_map(|&e| self.edges[e].vertices).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn tetrahedron_vertices(&self, t: TetrahedronId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> =
            self.tetrahedra[t].triangles.iter().flat_map(|&f| self.triangle_vertices(f)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn tetrahedron_edges(&self, t: TetrahedronId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> =
            self.tetrahedra[t].triangles.iter().flat_map(|&f| self.triangles[f].edges).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.vertices == [u, v] || e.vertices == [v, u])
    }

    pub fn tetrahedra_containing_triangle(&self, f: TriangleId) -> usize {
        self.tetrahedra.iter().filter(|t| t.triangles.contains(&f)).count()
    }

    pub fn triangles_containing_edge(&self, e: EdgeId) -> usize {
        self.triangles.iter().filter(|f| f.edges.contains(&e)).count()
    }

    /// Face maps are well formed and the complex is the boundary of a
    /// 4-simplex: triangles are genuine triangles, tetrahedra have four
    /// vertices and six edges, every triangle lies in two tetrahedra, every
    /// edge in three triangles and in two faces of each tetrahedron on it.
    pub fn is_simplex_boundary(&self) -> bool {
        if self.f_vector() != [5, 10, 10, 5] {
            return false;
        }
        let triangles_ok = (0..self.triangles.len()).all(|f| {
            let e = self.triangles[f].edges;
            e[0] != e[1] && e[1] != e[2] && e[0] != e[2] && self.triangle_vertices(f).len() == 3
        });
        let tetrahedra_ok = (0..self.tetrahedra.len())
            .all(|t| self.tetrahedron_vertices(t).len() == 4 && self.tetrahedron_edges(t).len() == 6);
        let shared_faces = (0..self.triangles.len()).all(|f| self.tetrahedra_containing_triangle(f) == 2);
        let edge_stars = (0..self.edges.len()).all(|e| {
            self.triangles_containing_edge(e) == 3
                && self.tetrahedra.iter().all(|t| {
                    let n = t.triangles.iter().filter(|&&f| self.triangles[f].edges.contains(&e)).count();
                    n == 0 || n == 2
                })
        });
        triangles_ok && tetrahedra_ok && shared_faces && edge_stars
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serializes")
    }
}

/// Space dual with the default tip pair `Q_1`, `Q_5`.
pub fn space_dual_desargues(d: &IncidenceStructure) -> Result<SimplicialComplex4> {
    space_dual_desargues_with_tips(d, (1, 5))
}

/// Quadrangle `Q_i` becomes vertex `i`, line `[lm]` the edge joining
/// vertices `l` and `m`, point `(ij)` the triangle spanned by its three
/// lines, and the four points of `Q_i` bound the tetrahedron `T_i`.
///
/// The two tip quadrangles are placed first and last in the vertex order.
pub fn space_dual_desargues_with_tips(d: &IncidenceStructure, tips: (u8, u8)) -> Result<SimplicialComplex4> {
    let (t0, t1) = tips;
    if t0 == t1 || !COLORS.contains(&t0) || !COLORS.contains(&t1) {
        return Err(Error::MalformedLabels(format!("tip pair ({t0}, {t1}) is not two distinct quadrangles")));
    }
    let tags = DesarguesTags::read(d)?;

    let mut order = vec![t0];
    order.extend(COLORS.iter().copied().filter(|&c| c != t0 && c != t1));
    order.push(t1);
    let vertex_of = |c: u8| order.iter().position(|&o| o == c).expect("color present");
    let vertices = order.iter().map(|&c| Vertex { color: c, tag: curly_tag(&complement(&[c])) }).collect();

    let edge_of_line = |l: LineId| tags.lines.iter().position(|&(m, _)| m == l).expect("line tagged");
    let edges = tags
        .lines
        .iter()
        .map(|&(_, (l, m))| {
            let (u, v) = (vertex_of(l), vertex_of(m));
            Edge { vertices: [u.min(v), u.max(v)], tag: bracket_tag(l, m) }
        })
        .collect();

    let mut triangles = Vec::with_capacity(10);
    for &(p, (i, j)) in &tags.points {
        let through = d.lines_through(p);
        let edges: [EdgeId; 3] = through
            .iter()
            .map(|&l| edge_of_line(l))
            .collect::<Vec<_>>()
            .try_into()
            .map_err(|_| Error::MalformedLabels(format!("point {} is not on three lines", point_tag(i, j))))?;
        triangles.push(Triangle { edges, tag: triangle_tag(&complement(&[i, j])) });
    }

    let tetrahedra = COLORS
        .iter()
        .map(|&i| {
            let faces: Vec<TriangleId> = tags
                .points
                .iter()
                .enumerate()
                .filter(|(_, (_, t))| t.0 == i || t.1 == i)
                .map(|(f, _)| f)
                .collect();
            Tetrahedron { triangles: faces.try_into().expect("four points per quadrangle"), index: i }
        })
        .collect();

    Ok(SimplicialComplex4 { vertices, edges, triangles, tetrahedra })
}

/// A plane of the cross section: the trace of one tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionPlane {
    pub index: u8,
    pub points: Vec<PointId>,
    pub lines: Vec<LineId>,
}

/// Each edge is cut in a point and each triangle in a line. Points carry the
/// two-color tag of their edge's vertices and lines the bracket tag of the
/// colors their triangle misses, so the result is tagged like the Desargues
/// configuration.
pub fn cross_section(c: &SimplicialComplex4) -> IncidenceStructure {
    let color_pair = |e: EdgeId| {
        let [u, v] = c.edges[e].vertices;
        let (a, b) = (c.vertices[u].color, c.vertices[v].color);
        (a.min(b), a.max(b))
    };
    let mut labels = Labels::default();
    for e in 0..c.edges.len() {
        let (a, b) = color_pair(e);
        labels.points.insert(e, point_tag(a, b));
    }
    for f in 0..c.triangles.len() {
        let colors: Vec<u8> = c.triangle_vertices(f).iter().map(|&v| c.vertices[v].color).collect();
        let rest = complement(&colors);
        if let [l, m] = rest[..] {
            labels.lines.insert(f, bracket_tag(l, m));
        }
    }
    let incidence = c
        .triangles
        .iter()
        .enumerate()
        .flat_map(|(f, t)| t.edges.iter().map(move |&e| (e, f)));
    IncidenceStructure::new((0..c.edges.len()).collect(), (0..c.triangles.len()).collect(), incidence)
        .and_then(|s| s.with_labels(labels))
        .expect("cross section is well formed")
}

pub fn cross_section_planes(c: &SimplicialComplex4) -> Vec<SectionPlane> {
    (0..c.tetrahedra.len())
        .map(|t| SectionPlane {
            index: c.tetrahedra[t].index,
            points: c.tetrahedron_edges(t),
            lines: c.tetrahedra[t].triangles.to_vec(),
        })
        .collect()
}
