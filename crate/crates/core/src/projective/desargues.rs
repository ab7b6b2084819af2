//! The Desargues configuration `(10_3)` as an assembly of five quadrangles.
//!
//! Colors are `1..=5`. The point shared by quadrangles `Q_i` and `Q_j` is
//! tagged `(ij)`; each line carries the bracket tag `[lm]` of the two colors
//! it misses. `Q_i` owns the four points whose tag contains `i` and the six
//! lines whose bracket does not.

use super::incidence::{IncidenceStructure, Labels, LineId, PointId};
use crate::error::{Error, Result};

pub const COLORS: [u8; 5] = [1, 2, 3, 4, 5];

/// The ten unordered color pairs in lexicographic order.
pub fn color_pairs() -> Vec<(u8, u8)> {
    let mut out = Vec::with_capacity(10);
    for i in 1..=5u8 {
        for j in i + 1..=5 {
            out.push((i, j));
        }
    }
    out
}

/// Colors not in `used`, ascending.
pub fn complement(used: &[u8]) -> Vec<u8> {
    COLORS.iter().copied().filter(|c| !used.contains(c)).collect()
}

pub fn point_tag(i: u8, j: u8) -> String {
    format!("({i}{j})")
}

pub fn bracket_tag(l: u8, m: u8) -> String {
    format!("[{l}{m}]")
}

pub fn curly_tag(colors: &[u8]) -> String {
    let digits: String = colors.iter().map(|c| char::from(b'0' + c)).collect();
    format!("{{{digits}}}")
}

pub fn triangle_tag(colors: &[u8]) -> String {
    let digits: String = colors.iter().map(|c| char::from(b'0' + c)).collect();
    format!("<{digits}>")
}

fn parse_pair(tag: &str, open: char, close: char) -> Option<(u8, u8)> {
    let inner = tag.strip_prefix(open)?.strip_suffix(close)?;
    let digits: Vec<u8> = inner.bytes().map(|b| b.wrapping_sub(b'0')).collect();
    match digits[..] {
        [i, j] if (1..=5).contains(&i) && (1..=5).contains(&j) && i != j => Some((i.min(j), i.max(j))),
        _ => None,
    }
}

/// `(ij)` to `(i, j)` with `i < j`.
pub fn parse_point_tag(tag: &str) -> Option<(u8, u8)> {
    parse_pair(tag, '(', ')')
}

/// `[lm]` to `(l, m)` with `l < m`.
pub fn parse_bracket_tag(tag: &str) -> Option<(u8, u8)> {
    parse_pair(tag, '[', ']')
}

fn disjoint(u: (u8, u8), v: (u8, u8)) -> bool {
    u.0 != v.0 && u.0 != v.1 && u.1 != v.0 && u.1 != v.1
}

/// Points are ids `0..10` and lines ids `0..10`, both in color-pair order.
/// Point `(ij)` lies on line `[lm]` exactly when the two pairs are disjoint.
pub fn build_desargues() -> IncidenceStructure {
    let pairs = color_pairs();
    let mut incidence = Vec::new();
    let mut labels = Labels::default();
    for (p, &pt) in pairs.iter().enumerate() {
        labels.points.insert(p, point_tag(pt.0, pt.1));
        labels.lines.insert(p, bracket_tag(pt.0, pt.1));
        for (l, &ln) in pairs.iter().enumerate() {
            if disjoint(pt, ln) {
                incidence.push((p, l));
            }
        }
    }
    IncidenceStructure::new((0..10).collect(), (0..10).collect(), incidence)
        .and_then(|s| s.with_labels(labels))
        .expect("Desargues configuration is well formed")
}

/// Color pairs of every point and line, checked against the incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesTags {
    pub points: Vec<(PointId, (u8, u8))>,
    pub lines: Vec<(LineId, (u8, u8))>,
}

impl DesarguesTags {
    pub fn read(d: &IncidenceStructure) -> Result<DesarguesTags> {
        let points = tags_of(d.points(), |p| d.point_label(p), parse_point_tag, "point")?;
        let lines = tags_of(d.lines(), |l| d.line_label(l), parse_bracket_tag, "line")?;
        for &(p, pt) in &points {
            for &(l, ln) in &lines {
                if d.is_incident(p, l) != disjoint(pt, ln) {
                    return Err(Error::MalformedLabels(format!(
                        "point {} and line {} disagree with the incidence",
                        point_tag(pt.0, pt.1),
                        bracket_tag(ln.0, ln.1)
                    )));
                }
            }
        }
        Ok(DesarguesTags { points, lines })
    }

    pub fn point(&self, pair: (u8, u8)) -> PointId {
        self.points.iter().find(|(_, t)| *t == pair).map(|&(p, _)| p).expect("every pair is tagged")
    }

    pub fn line(&self, pair: (u8, u8)) -> LineId {
        self.lines.iter().find(|(_, t)| *t == pair).map(|&(l, _)| l).expect("every pair is tagged")
    }
}

fn tags_of<'a>(
    ids: &[usize],
    label: impl Fn(usize) -> Option<&'a str>,
    parse: fn(&str) -> Option<(u8, u8)>,
    kind: &str,
) -> Result<Vec<(usize, (u8, u8))>> {
    if ids.len() != 10 {
        return Err(Error::MalformedLabels(format!("expected 10 {kind}s, found {}", ids.len())));
    }
    let mut out = Vec::with_capacity(10);
    for &id in ids {
        let tag = label(id).ok_or_else(|| Error::MalformedLabels(format!("{kind} {id} has no tag")))?;
        let pair = parse(tag).ok_or_else(|| Error::MalformedLabels(format!("{kind} {id} has tag {tag:?}")))?;
        if out.iter().any(|(_, t)| *t == pair) {
            return Err(Error::MalformedLabels(format!("{kind} tag {tag} repeated")));
        }
        out.push((id, pair));
    }
    Ok(out)
}

/// The four points and six lines of `Q_i`.
pub fn quadrangle_members(d: &IncidenceStructure, i: u8) -> Result<(Vec<PointId>, Vec<LineId>)> {
    let tags = DesarguesTags::read(d)?;
    let points = tags.points.iter().filter(|(_, t)| t.0 == i || t.1 == i).map(|&(p, _)| p).collect();
    let lines = tags.lines.iter().filter(|(_, t)| t.0 != i && t.1 != i).map(|&(l, _)| l).collect();
    Ok((points, lines))
}

/// `Q_i` as a structure of its own, with incidence restricted to it.
pub fn quadrangle(d: &IncidenceStructure, i: u8) -> Result<IncidenceStructure> {
    let (points, lines) = quadrangle_members(d, i)?;
    d.substructure(&points, &lines)
}

/// Quadrangle indices sharing point `p`.
pub fn quadrangles_of_point(d: &IncidenceStructure, p: PointId) -> Option<(u8, u8)> {
    d.point_label(p).and_then(parse_point_tag)
}

/// Any two distinct points lying in a common quadrangle are joined by exactly
/// one line.
pub fn axiom_one_holds(d: &IncidenceStructure) -> Result<bool> {
    for i in COLORS {
        let (points, _) = quadrangle_members(d, i)?;
        for (k, &u) in points.iter().enumerate() {
            for &v in &points[k + 1..] {
                let joining = d.lines().iter().filter(|&&l| d.is_incident(u, l) && d.is_incident(v, l)).count();
                if joining != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
