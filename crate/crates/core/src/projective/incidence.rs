use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type PointId = usize;
pub type LineId = usize;

/// Optional human tags for points and lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    #[serde(default)]
    pub points: BTreeMap<PointId, String>,
    #[serde(default)]
    pub lines: BTreeMap<LineId, String>,
}

impl Labels {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.lines.is_empty()
    }
}

#[derive(Deserialize)]
struct RawStructure {
    points: Vec<PointId>,
    lines: Vec<LineId>,
    incidence: Vec<(PointId, LineId)>,
    #[serde(default)]
    labels: Labels,
}

/// A finite set of points and lines with an incidence relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawStructure")]
pub struct IncidenceStructure {
    points: Vec<PointId>,
    lines: Vec<LineId>,
    incidence: BTreeSet<(PointId, LineId)>,
    labels: Labels,
}

impl TryFrom<RawStructure> for IncidenceStructure {
    type Error = Error;

    fn try_from(raw: RawStructure) -> Result<Self> {
        IncidenceStructure::new(raw.points, raw.lines, raw.incidence)?.with_labels(raw.labels)
    }
}

impl IncidenceStructure {
    pub fn new(
        points: Vec<PointId>,
        lines: Vec<LineId>,
        incidence: impl IntoIterator<Item = (PointId, LineId)>,
    ) -> Result<Self> {
        let point_set: BTreeSet<_> = points.iter().copied().collect();
        let line_set: BTreeSet<_> = lines.iter().copied().collect();
        if point_set.len() != points.len() {
            return Err(Error::InvalidStructure("repeated point id".into()));
        }
        if line_set.len() != lines.len() {
            return Err(Error::InvalidStructure("repeated line id".into()));
        }
        let incidence: BTreeSet<_> = incidence.into_iter().collect();
        if let Some(&(p, l)) = incidence
            .iter()
            .find(|(p, l)| !point_set.contains(p) || !line_set.contains(l))
        {
            return Err(Error::InvalidStructure(format!("incidence ({p}, {l}) references an unknown id")));
        }
        Ok(IncidenceStructure { points, lines, incidence, labels: Labels::default() })
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        if let Some(p) = labels.points.keys().find(|p| !self.points.contains(p)) {
            return Err(Error::InvalidStructure(format!("label for unknown point {p}")));
        }
        if let Some(l) = labels.lines.keys().find(|l| !self.lines.contains(l)) {
            return Err(Error::InvalidStructure(format!("label for unknown line {l}")));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn points(&self) -> &[PointId] {
        &self.points
    }

    pub fn lines(&self) -> &[LineId] {
        &self.lines
    }

    pub fn incidence(&self) -> &BTreeSet<(PointId, LineId)> {
        &self.incidence
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn point_label(&self, p: PointId) -> Option<&str> {
        self.labels.points.get(&p).map(String::as_str)
    }

    pub fn line_label(&self, l: LineId) -> Option<&str> {
        self.labels.lines.get(&l).map(String::as_str)
    }

    pub fn point_by_label(&self, tag: &str) -> Option<PointId> {
        self.labels.points.iter().find(|(_, t)| *t == tag).map(|(&p, _)| p)
    }

    pub fn line_by_label(&self, tag: &str) -> Option<LineId> {
        self.labels.lines.iter().find(|(_, t)| *t == tag).map(|(&l, _)| l)
    }

    pub fn is_incident(&self, p: PointId, l: LineId) -> bool {
        self.incidence.contains(&(p, l))
    }

    pub fn lines_through(&self, p: PointId) -> Vec<LineId> {
        self.incidence.iter().filter(|(q, _)| *q == p).map(|&(_, l)| l).collect()
    }

    pub fn points_on(&self, l: LineId) -> Vec<PointId> {
        self.incidence.iter().filter(|(_, m)| *m == l).map(|&(p, _)| p).collect()
    }

    /// `(p, γ, ℓ, π)` when every point has the same degree and every line the
    /// same size.
    pub fn signature(&self) -> Option<ConfigurationSignature> {
        let gamma = uniform(self.points.iter().map(|&p| self.lines_through(p).len()))?;
        let pi = uniform(self.lines.iter().map(|&l| self.points_on(l).len()))?;
        Some(ConfigurationSignature { p: self.points.len(), gamma, l: self.lines.len(), pi })
    }

    /// Restriction to the given points and lines.
    pub fn substructure(&self, points: &[PointId], lines: &[LineId]) -> Result<IncidenceStructure> {
        let incidence = self
            .incidence
            .iter()
            .copied()
            .filter(|(p, l)| points.contains(p) && lines.contains(l));
        let labels = Labels {
            points: self.labels.points.iter().filter(|(p, _)| points.contains(p)).map(|(&p, t)| (p, t.clone())).collect(),
            lines: self.labels.lines.iter().filter(|(l, _)| lines.contains(l)).map(|(&l, t)| (l, t.clone())).collect(),
        };
        IncidenceStructure::new(points.to_vec(), lines.to_vec(), incidence)?.with_labels(labels)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("incidence structure serializes")
    }

    pub fn to_dot(&self, mode: DotMode) -> String {
        let point_name = |p: PointId| self.point_label(p).map_or_else(|| format!("P{p}"), str::to_owned);
        let line_name = |l: LineId| self.line_label(l).map_or_else(|| format!("L{l}"), str::to_owned);
        let mut out = String::new();
        match mode {
            DotMode::Bipartite => {
                out.push_str("graph incidence {\n");
                for &p in &self.points {
                    let _ = writeln!(out, "  p{p} [shape=circle, label=\"{}\"];", point_name(p));
                }
                for &l in &self.lines {
                    let _ = writeln!(out, "  l{l} [shape=box, label=\"{}\"];", line_name(l));
                }
                for &(p, l) in &self.incidence {
                    let _ = writeln!(out, "  p{p} -- l{l};");
                }
            }
            DotMode::Clique => {
                out.push_str("graph configuration {\n");
                for &p in &self.points {
                    let _ = writeln!(out, "  p{p} [label=\"{}\"];", point_name(p));
                }
                for &l in &self.lines {
                    let on = self.points_on(l);
                    for (i, &u) in on.iter().enumerate() {
                        for &v in &on[i + 1..] {
                            let _ = writeln!(out, "  p{u} -- p{v} [label=\"{}\"];", line_name(l));
                        }
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn uniform(mut it: impl Iterator<Item = usize>) -> Option<usize> {
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DotMode {
    #[default]
    Bipartite,
    Clique,
}

/// `(p_γ, ℓ_π)`: `p` points on `γ` lines each, `ℓ` lines through `π` points each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConfigurationSignature {
    pub p: usize,
    pub gamma: usize,
    pub l: usize,
    pub pi: usize,
}

impl ConfigurationSignature {
    pub fn new(p: usize, gamma: usize, l: usize, pi: usize) -> Result<Self> {
        if p * gamma != l * pi || [p, gamma, l, pi].contains(&0) {
            return Err(Error::InvalidStructure(format!("({p}_{gamma}, {l}_{pi}) violates p·γ = ℓ·π")));
        }
        Ok(ConfigurationSignature { p, gamma, l, pi })
    }

    /// `(n_k)`.
    pub fn symmetric(n: usize, k: usize) -> Self {
        ConfigurationSignature { p: n, gamma: k, l: n, pi: k }
    }

    pub fn dual(self) -> Self {
        ConfigurationSignature { p: self.l, gamma: self.pi, l: self.p, pi: self.gamma }
    }

    pub fn is_symmetric(self) -> bool {
        self.p == self.l && self.gamma == self.pi
    }
}

impl std::fmt::Display for ConfigurationSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_symmetric() {
            write!(f, "({}_{})", self.p, self.gamma)
        } else {
            write!(f, "({}_{}, {}_{})", self.p, self.gamma, self.l, self.pi)
        }
    }
}

pub fn validate_configuration(s: &IncidenceStructure, sig: ConfigurationSignature) -> bool {
    s.points.len() == sig.p
        && s.lines.len() == sig.l
        && s.points.iter().all(|&p| s.lines_through(p).len() == sig.gamma)
        && s.lines.iter().all(|&l| s.points_on(l).len() == sig.pi)
}

/// Points become lines and lines become points; labels follow their element.
pub fn plane_dual(s: &IncidenceStructure) -> IncidenceStructure {
    IncidenceStructure {
        points: s.lines.clone(),
        lines: s.points.clone(),
        incidence: s.incidence.iter().map(|&(p, l)| (l, p)).collect(),
        labels: Labels { points: s.labels.lines.clone(), lines: s.labels.points.clone() },
    }
}

/// The complete quadrangle `(4_3, 6_2)`: four points, no three collinear,
/// joined in pairs by six lines.
pub fn build_quadrangle() -> IncidenceStructure {
    let mut incidence = Vec::new();
    let mut labels = Labels::default();
    let mut line = 0;
    for i in 0..4 {
        labels.points.insert(i, format!("P{}", i + 1));
        for j in i + 1..4 {
            incidence.push((i, line));
            incidence.push((j, line));
            labels.lines.insert(line, format!("P{}P{}", i + 1, j + 1));
            line += 1;
        }
    }
    IncidenceStructure::new((0..4).collect(), (0..6).collect(), incidence)
        .and_then(|s| s.with_labels(labels))
        .expect("quadrangle is well formed")
}

/// Whether a bijection of points and of lines preserving incidence exists.
///
/// Points are matched one at a time, keeping degrees and the number of lines
/// shared by every matched pair; a complete point map is accepted when it
/// carries the multiset of lines (as point sets) onto the other one.
pub fn isomorphic(s1: &IncidenceStructure, s2: &IncidenceStructure) -> bool {
    if s1.points.len() != s2.points.len() || s1.lines.len() != s2.lines.len() || s1.incidence.len() != s2.incidence.len() {
        return false;
    }
    let m1 = Matrix::of(s1);
    let m2 = Matrix::of(s2);
    let mut size1: Vec<usize> = m1.line_sets.iter().map(Vec::len).collect();
    let mut size2: Vec<usize> = m2.line_sets.iter().map(Vec::len).collect();
    size1.sort_unstable();
    size2.sort_unstable();
    let mut deg1 = m1.degrees.clone();
    let mut deg2 = m2.degrees.clone();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if size1 != size2 || deg1 != deg2 {
        return false;
    }
    let mut target_lines: Vec<Vec<usize>> = m2.line_sets.clone();
    target_lines.sort();
    let mut map = Vec::with_capacity(m1.n);
    let mut used = vec![false; m2.n];
    extend(&m1, &m2, &target_lines, &mut map, &mut used)
}

struct Matrix {
    n: usize,
    degrees: Vec<usize>,
    shared: Vec<Vec<usize>>,
    line_sets: Vec<Vec<usize>>,
}

impl Matrix {
    fn of(s: &IncidenceStructure) -> Matrix {
        let index: BTreeMap<PointId, usize> = s.points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let n = s.points.len();
        let line_sets: Vec<Vec<usize>> = s
            .lines
            .iter()
            .map(|&l| {
                let mut v: Vec<usize> = s.points_on(l).iter().map(|p| index[p]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut degrees = vec![0; n];
        let mut shared = vec![vec![0; n]; n];
        for set in &line_sets {
            for &u in set {
                degrees[u] += 1;
                for &v in set {
                    if u != v {
                        shared[u][v] += 1;
                    }
                }
            }
        }
        Matrix { n, degrees, shared, line_sets }
    }
}

fn extend(m1: &Matrix, m2: &Matrix, target_lines: &[Vec<usize>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = map.len();
    if k == m1.n {
        let mut image: Vec<Vec<usize>> = m1
            .line_sets
            .iter()
            .map(|set| {
                let mut v: Vec<usize> = set.iter().map(|&u| map[u]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        image.sort();
        return image == target_lines;
    }
    for cand in 0..m2.n {
        if used[cand] || m1.degrees[k] != m2.degrees[cand] {
            continue;
        }
        if (0..k).any(|u| m1.shared[k][u] != m2.shared[cand][map[u]]) {
            continue;
        }
        used[cand] = true;
        map.push(cand);
        if extend(m1, m2, target_lines, map, used) {
            return true;
        }
        map.pop();
        used[cand] = false;
    }
    false
}
