//! Spin labelings of the Desargues configuration and of its space dual
//! 4-simplex, and the amplitudes they carry.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, TriadFailure};
use crate::exactnum::{Spin, SqrtRational};
use crate::identities::BEInstance;
use crate::projective::desargues::{bracket_tag, parse_bracket_tag};
use crate::projective::{build_desargues, IncidenceStructure, LineId, SimplicialComplex4};
use crate::symmetry::CanonicalQuadruple;
use crate::wigner::{sixj_admissible_x, sixj_value, triad_valid, SixJ};

/// The ten spin symbols carried by the lines of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    A,
    B,
    C,
    D,
    E,
    F,
    P,
    Q,
    R,
    X,
}

use Symbol::*;

impl Symbol {
    pub const ALL: [Symbol; 10] = [A, B, C, D, E, F, P, Q, R, X];

    pub fn name(self) -> &'static str {
        match self {
            A => "a",
            B => "b",
            C => "c",
            D => "d",
            E => "e",
            F => "f",
            P => "p",
            Q => "q",
            R => "r",
            X => "x",
        }
    }

    /// Bracket tag `[lm]` of the line carrying this symbol.
    pub fn line_colors(self) -> (u8, u8) {
        match self {
            X => (4, 5),
            P => (2, 3),
            Q => (1, 3),
            R => (1, 2),
            A => (2, 4),
            B => (2, 5),
            C => (3, 5),
            D => (3, 4),
            E => (1, 4),
            F => (1, 5),
        }
    }

    pub fn line_tag(self) -> String {
        let (l, m) = self.line_colors();
        bracket_tag(l, m)
    }

    pub fn from_line_tag(tag: &str) -> Option<Symbol> {
        let colors = parse_bracket_tag(tag)?;
        Symbol::ALL.into_iter().find(|s| s.line_colors() == colors)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name() == s.trim())
            .ok_or_else(|| Error::Parse { what: "symbol", input: s.to_owned() })
    }
}

pub type SymbolSpins = BTreeMap<Symbol, Spin>;

/// `{symbol_spins: {a: "1", b: "3/2", ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub symbol_spins: SymbolSpins,
}

/// The 6j symbol of quadrangle `Q_i`, as symbols, indexed `i - 1`.
pub const QUADRANGLE_SYMBOLS: [[Symbol; 6]; 5] = [
    [A, B, X, C, D, P],
    [C, D, X, E, F, Q],
    [E, F, X, B, A, R],
    [P, Q, R, F, B, C],
    [P, Q, R, E, A, D],
];

fn symbol_sixj(layout: &[Symbol; 6], spins: &SymbolSpins) -> SixJ {
    let s = layout.map(|sym| spins[&sym]);
    SixJ::new(s[0], s[1], s[2], s[3], s[4], s[5])
}

fn check_complete(spins: &SymbolSpins) -> Result<()> {
    match Symbol::ALL.iter().find(|s| !spins.contains_key(s)) {
        Some(missing) => Err(Error::MalformedLabels(format!("symbol {missing} has no spin"))),
        None => Ok(()),
    }
}

/// Spins on the ten lines of the Desargues configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesSpinLabeling {
    structure: IncidenceStructure,
    line_spins: BTreeMap<LineId, Spin>,
    symbol_spins: SymbolSpins,
}

impl DesarguesSpinLabeling {
    /// Attaches spins to the lines without checking any triad.
    pub fn assign(spins: &SymbolSpins) -> Result<Self> {
        check_complete(spins)?;
        let structure = build_desargues();
        let mut line_spins = BTreeMap::new();
        for (&sym, &j) in spins {
            let line = structure
                .line_by_label(&sym.line_tag())
                .ok_or_else(|| Error::MalformedLabels(format!("no line tagged {}", sym.line_tag())))?;
            line_spins.insert(line, j);
        }
        Ok(DesarguesSpinLabeling { structure, line_spins, symbol_spins: spins.clone() })
    }

    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn line_spins(&self) -> &BTreeMap<LineId, Spin> {
        &self.line_spins
    }

    pub fn symbol_spins(&self) -> &SymbolSpins {
        &self.symbol_spins
    }

    pub fn spin(&self, sym: Symbol) -> Spin {
        self.symbol_spins[&sym]
    }

    /// Points whose three lines do not form a triad.
    pub fn point_failures(&self) -> Vec<TriadFailure> {
        let s = &self.structure;
        s.points()
            .iter()
            .filter_map(|&p| {
                let spins: [Spin; 3] = s
                    .lines_through(p)
                    .iter()
                    .map(|l| self.line_spins[l])
                    .collect::<Vec<_>>()
                    .try_into()
                    .expect("three lines through each point");
                (!triad_valid(spins[0], spins[1], spins[2])).then(|| TriadFailure {
                    location: s.point_label(p).unwrap_or_default().to_owned(),
                    spins,
                })
            })
            .collect()
    }

    /// The five quadrangle symbols `Q_1 .. Q_5`.
    pub fn quadrangle_sixj(&self) -> [SixJ; 5] {
        QUADRANGLE_SYMBOLS.map(|layout| symbol_sixj(&layout, &self.symbol_spins))
    }

    pub fn be_instance(&self) -> BEInstance {
        let g = |s| self.spin(s);
        BEInstance { a: g(A), b: g(B), c: g(C), d: g(D), e: g(E), f: g(F), p: g(P), q: g(Q), r: g(R) }
    }

    pub fn to_file(&self) -> LabelingFile {
        LabelingFile { symbol_spins: self.symbol_spins.clone() }
    }
}

/// Attaches the spins and checks the triad at each of the ten points.
pub fn label_desargues(spins: &SymbolSpins) -> Result<DesarguesSpinLabeling> {
    let labeling = DesarguesSpinLabeling::assign(spins)?;
    let failures = labeling.point_failures();
    if failures.is_empty() {
        Ok(labeling)
    } else {
        Err(Error::TriadViolation(failures))
    }
}

/// Spins on the ten edges of the space dual 4-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexSpinLabeling {
    complex: SimplicialComplex4,
    edge_spins: Vec<Spin>,
}

impl SimplexSpinLabeling {
    pub fn complex(&self) -> &SimplicialComplex4 {
        &self.complex
    }

    pub fn edge_spins(&self) -> &[Spin] {
        &self.edge_spins
    }

    pub fn triangle_failures(&self) -> Vec<TriadFailure> {
        self.complex
            .triangles
            .iter()
            .filter_map(|t| {
                let spins = t.edges.map(|e| self.edge_spins[e]);
                (!triad_valid(spins[0], spins[1], spins[2]))
                    .then(|| TriadFailure { location: t.tag.clone(), spins })
            })
            .collect()
    }

    /// The 6j symbol of tetrahedron `T_i` read off its vertices `w < x < y < z`
    /// as `{wy xy wx; xz wz yz}`, so that each triad is a face.
    pub fn tetrahedron_sixj(&self, index: u8) -> Option<SixJ> {
        let c = &self.complex;
        let t = c.tetrahedron_by_index(index)?;
        let v = c.tetrahedron_vertices(t);
        let j = |u: usize, w: usize| self.edge_spins[c.edge_between(v[u], v[w]).expect("edge of tetrahedron")];
        Some(SixJ::new(j(0, 2), j(1, 2), j(0, 1), j(1, 3), j(0, 3), j(2, 3)))
    }

    /// `T_1 .. T_5`.
    pub fn tetrahedral_sixj(&self) -> [SixJ; 5] {
        [1, 2, 3, 4, 5].map(|i| self.tetrahedron_sixj(i).expect("five tetrahedra"))
    }
}

/// Carries line spins to edges through the shared bracket tags.
pub fn transfer_labeling(d: &DesarguesSpinLabeling, c: &SimplicialComplex4) -> Result<SimplexSpinLabeling> {
    let mut edge_spins = Vec::with_capacity(c.edges.len());
    let mut seen = Vec::with_capacity(c.edges.len());
    for edge in &c.edges {
        let line = d
            .structure
            .line_by_label(&edge.tag)
            .ok_or_else(|| Error::LabelTransferMismatch(format!("edge {} has no matching line", edge.tag)))?;
        if seen.contains(&line) {
            return Err(Error::LabelTransferMismatch(format!("line {} reached twice", edge.tag)));
        }
        seen.push(line);
        edge_spins.push(d.line_spins[&line]);
    }
    if seen.len() != d.line_spins.len() {
        return Err(Error::LabelTransferMismatch(format!(
            "{} edges for {} lines",
            seen.len(),
            d.line_spins.len()
        )));
    }
    let labeling = SimplexSpinLabeling { complex: c.clone(), edge_spins };
    let failures = labeling.triangle_failures();
    if failures.is_empty() {
        Ok(labeling)
    } else {
        Err(Error::TriadViolation(failures))
    }
}

/// Product of the five quadrangle 6j values.
pub fn network_amplitude(d: &DesarguesSpinLabeling) -> Result<SqrtRational> {
    let failures = d.point_failures();
    if !failures.is_empty() {
        return Err(Error::TriadViolation(failures));
    }
    d.quadrangle_sixj()
        .iter()
        .try_fold(SqrtRational::one(), |acc, s| Ok(&acc * &sixj_value(s)?))
}

/// Runs `x` over the admissible range of the reference quadrangle
/// `{a b x; c d p}` and returns the amplitude of every labeling whose triads
/// all hold. `others` fixes `e, f, p, q, r`.
pub fn regularized_enumeration(q: &CanonicalQuadruple, others: &SymbolSpins) -> Result<Vec<(Spin, SqrtRational)>> {
    let fixed = [E, F, P, Q, R];
    if let Some(extra) = others.keys().find(|s| !fixed.contains(s)) {
        return Err(Error::MalformedLabels(format!("symbol {extra} is set by the quadrangle or summed")));
    }
    if let Some(missing) = fixed.iter().find(|s| !others.contains_key(s)) {
        return Err(Error::MalformedLabels(format!("symbol {missing} has no spin")));
    }
    let mut base = others.clone();
    base.extend([(A, q.a), (B, q.b), (C, q.c), (D, q.d)]);
    let xs = sixj_admissible_x(q.a, q.b, q.c, q.d);
    let entries = xs
        .par_iter()
        .map(|&x| {
            let mut spins = base.clone();
            spins.insert(X, x);
            match label_desargues(&spins) {
                Ok(labeling) => network_amplitude(&labeling).map(|amp| Some((x, amp))),
                Err(Error::TriadViolation(_)) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let entries: Vec<_> = entries.into_iter().flatten().collect();
    if entries.is_empty() {
        return Err(Error::UnrealizableQuadrangle(format!(
            "{} {} {} {} with e={} f={} p={} q={} r={}",
            q.a, q.b, q.c, q.d, others[&E], others[&F], others[&P], others[&Q], others[&R]
        )));
    }
    Ok(entries)
}
