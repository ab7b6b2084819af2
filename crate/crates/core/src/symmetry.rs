//! Tetrahedral and Regge symmetries of the 6j symbol, canonical ordering of
//! the reference quadrangle and the regularization inequalities built on it.
//!
//! Group elements act on the twice-value vector `[a, b, x, c, d, y]`. Column
//! `k` of `{a b x; c d y}` is the position pair `(k, k + 3)`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Spin;
use crate::wigner::{sixj_admissible_x, SixJ};

/// Linear action on twice-values, scaled by two so that entries are integers:
/// `v' = (M v) / 2`.
type Action = [[i32; 6]; 6];

fn identity_action() -> Action {
    let mut m = [[0; 6]; 6];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    m
}

fn compose(outer: &Action, inner: &Action) -> Action {
    let mut m = [[0; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let s: i32 = (0..6).map(|k| outer[i][k] * inner[k][j]).sum();
            debug_assert!(s % 2 == 0);
            m[i][j] = s / 2;
        }
    }
    m
}

fn apply_action(m: &Action, v: [u32; 6]) -> Option<[u32; 6]> {
    let mut out = [0u32; 6];
    for i in 0..6 {
        let s: i64 = (0..6).map(|k| i64::from(m[i][k]) * i64::from(v[k])).sum();
        if s < 0 || s % 2 != 0 {
            return None;
        }
        out[i] = u32::try_from(s / 2).ok()?;
    }
    Some(out)
}

/// A classical symmetry: permute columns, then exchange upper and lower entries
/// in the flagged columns (always an even number of them).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalSymmetry {
    /// Output column `k` takes input column `column_perm[k]`.
    pub column_perm: [u8; 3],
    pub flips: [bool; 3],
}

impl ClassicalSymmetry {
    pub fn all() -> Vec<ClassicalSymmetry> {
        const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        const FLIPS: [[bool; 3]; 4] = [
            [false, false, false],
            [true, true, false],
            [true, false, true],
            [false, true, true],
        ];
        PERMS
            .iter()
            .flat_map(|&column_perm| FLIPS.iter().map(move |&flips| ClassicalSymmetry { column_perm, flips }))
            .collect()
    }

    fn action(&self) -> Action {
        let mut m = [[0; 6]; 6];
        for k in 0..3 {
            let src = self.column_perm[k] as usize;
            let (up, low) = if self.flips[k] { (src + 3, src) } else { (src, src + 3) };
            m[k][up] = 2;
            m[k + 3][low] = 2;
        }
        m
    }

    pub fn apply(&self, s: &SixJ) -> SixJ {
        let v = apply_action(&self.action(), s.to_twice()).expect("permutations are total");
        SixJ::from_twice(v)
    }
}

/// Regge map keeping column `fixed` and sending the other four entries
/// `v -> s - v` with `s` their semi-sum.
fn regge_action(fixed: usize) -> Action {
    let mut m = [[0; 6]; 6];
    let others: Vec<usize> = (0..6).filter(|&p| p % 3 != fixed).collect();
    m[fixed][fixed] = 2;
    m[fixed + 3][fixed + 3] = 2;
    for &i in &others {
        for &j in &others {
            m[i][j] = if i == j { -1 } else { 1 };
        }
    }
    m
}

struct SymmetryGroup {
    classical: Vec<ClassicalSymmetry>,
    /// Right-coset representatives of the classical subgroup; index 0 is the
    /// identity, 1..=3 the single Regge maps fixing columns 0, 1, 2.
    regge: Vec<(Action, String)>,
    elements: Vec<SymmetryElement>,
    actions: Vec<Action>,
}

fn group() -> &'static SymmetryGroup {
    static GROUP: OnceLock<SymmetryGroup> = OnceLock::new();
    GROUP.get_or_init(build_group)
}

fn build_group() -> SymmetryGroup {
    let classical = ClassicalSymmetry::all();
    let classical_actions: Vec<Action> = classical.iter().map(ClassicalSymmetry::action).collect();
    let mut generators: Vec<(Action, String)> =
        (0..3).map(|k| (regge_action(k), format!("R{}", k + 1))).collect();
    generators.extend(classical_actions.iter().map(|c| (*c, String::from("c"))));

    // closure in breadth-first order, so identity and R1..R3 come first
    let mut order: Vec<(Action, String)> = Vec::new();
    let mut seen: HashSet<Action> = HashSet::new();
    let mut queue: VecDeque<(Action, String)> = VecDeque::from([(identity_action(), String::from("id"))]);
    while let Some((g, word)) = queue.pop_front() {
        if !seen.insert(g) {
            continue;
        }
        for (r, name) in &generators {
            let next_word = if word == "id" { name.clone() } else { format!("{name}*{word}") };
            queue.push_back((compose(r, &g), next_word));
        }
        order.push((g, word));
    }

    // right-coset representatives of the classical subgroup
    let mut covered: HashSet<Action> = HashSet::new();
    let mut regge: Vec<(Action, String)> = Vec::new();
    for (g, word) in order {
        if covered.contains(&g) {
            continue;
        }
        covered.extend(classical_actions.iter().map(|c| compose(c, &g)));
        regge.push((g, word));
    }

    let mut elements = Vec::new();
    let mut actions = Vec::new();
    for (ri, (r, _)) in regge.iter().enumerate() {
        for (c, ca) in classical.iter().zip(&classical_actions) {
            elements.push(SymmetryElement { classical: *c, regge_component: ri as u8 });
            actions.push(compose(ca, r));
        }
    }
    SymmetryGroup { classical, regge, elements, actions }
}

/// One of the 144 symmetries: a Regge coset representative followed by a
/// classical symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub classical: ClassicalSymmetry,
    /// Index into the Regge factor; 0 is the identity.
    pub regge_component: u8,
}

impl SymmetryElement {
    pub fn all() -> &'static [SymmetryElement] {
        &group().elements
    }

    pub fn classical_only() -> &'static [ClassicalSymmetry] {
        &group().classical
    }

    /// Number of distinct Regge coset representatives.
    pub fn regge_factor_order() -> usize {
        group().regge.len()
    }

    pub fn regge_word(&self) -> &'static str {
        &group().regge[self.regge_component as usize].1
    }

    fn action(&self) -> Action {
        let g = group();
        let idx = self.regge_component as usize * g.classical.len()
            + g.classical.iter().position(|c| c == &self.classical).expect("known element");
        g.actions[idx]
    }

    /// Image of `s`, or `None` when a Regge step leaves the spin lattice
    /// (only possible for symbols with invalid triads).
    pub fn apply(&self, s: &SixJ) -> Option<SixJ> {
        apply_action(&self.action(), s.to_twice()).map(SixJ::from_twice)
    }

    /// `self ∘ other`, looked up among the 144 elements.
    pub fn compose(&self, other: &SymmetryElement) -> Option<SymmetryElement> {
        let m = compose(&self.action(), &other.action());
        let g = group();
        g.actions.iter().position(|a| a == &m).map(|i| g.elements[i])
    }

    pub fn is_identity(&self) -> bool {
        self.action() == identity_action()
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "perm{:?} flips{:?} regge[{}]",
            self.classical.column_perm,
            self.classical.flips,
            self.regge_word()
        )
    }
}

/// `{a b x; c d y} -> {s-a s-b x; s-c s-d y}` with `s = (a+b+c+d)/2`.
pub fn regge_transform(s: &SixJ) -> Result<SixJ> {
    apply_action(&regge_action(2), s.to_twice())
        .map(SixJ::from_twice)
        .ok_or_else(|| Error::NegativeSpinAfterTransform(s.to_string()))
}

/// Orbit of `s` under all 144 symmetries (images that leave the spin lattice
/// are skipped, which never happens for valid symbols).
pub fn symmetry_orbit(s: &SixJ) -> BTreeSet<SixJ> {
    SymmetryElement::all().iter().filter_map(|g| g.apply(s)).collect()
}

pub fn classical_orbit(s: &SixJ) -> BTreeSet<SixJ> {
    SymmetryElement::classical_only().iter().map(|c| c.apply(s)).collect()
}

/// The reference quadrangle `(a, b, c, d)` in canonical order, with `c`
/// opposite `a` and `s` the semi-perimeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalQuadruple {
    pub a: Spin,
    pub b: Spin,
    pub c: Spin,
    pub d: Spin,
    pub s: Spin,
    pub regge_applicable: bool,
}

impl CanonicalQuadruple {
    pub fn spins(&self) -> [Spin; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `a <= b <= d <= s` and `d-(b-a) <= c <= d+(b-a)`.
    pub fn satisfies_ordering(&self) -> bool {
        let [a, b, c, d] = self.spins().map(|v| i64::from(v.twice()));
        let s = i64::from(self.s.twice());
        a <= b && b <= d && d <= s && d - (b - a) <= c && c <= d + (b - a)
    }
}

fn quadruple_realizable(a: Spin, b: Spin, c: Spin, d: Spin) -> bool {
    !sixj_admissible_x(a, b, c, d).is_empty() && !sixj_admissible_x(a, d, b, c).is_empty()
}

/// Elements that keep the running column `(x, y)` in place as a set; these
/// act on the quadruple `(a, b, c, d)` as the square's dihedral group
/// combined with the Regge map.
fn quadrangle_stabilizer() -> &'static [SymmetryElement] {
    static STAB: OnceLock<Vec<SymmetryElement>> = OnceLock::new();
    STAB.get_or_init(|| {
        SymmetryElement::all()
            .iter()
            .copied()
            .filter(|g| {
                let m = g.action();
                // output x and y read only input x and y
                [2, 5].iter().all(|&row| (0..6).all(|k| k % 3 == 2 || m[row][k] == 0))
            })
            .collect()
    })
}

/// Relabels `(a, b, c, d)` through classical and Regge moves that keep the
/// running pair `(x, y)` so that `a` is the smallest of the eight parameters
/// `a, b, c, d, s-a, s-b, s-c, s-d`, `c` is opposite `a` and `d >= b`.
/// Ties are broken by the lexicographically smallest twice-value tuple.
pub fn canonicalize_quadruple(a: Spin, b: Spin, c: Spin, d: Spin) -> Result<CanonicalQuadruple> {
    if !quadruple_realizable(a, b, c, d) {
        return Err(Error::UnrealizableQuadrangle(format!("{a}, {b}, {c}, {d}")));
    }
    let total = a.twice() + b.twice() + c.twice() + d.twice();
    let regge_applicable = total.is_multiple_of(2);
    let s_twice = total / 2;

    // placeholders for the running column; only the quadruple is read back
    let probe = SixJ::new(a, b, Spin::new(0), c, d, Spin::new(0));
    let mut images: Vec<[u32; 4]> = Vec::new();
    for g in quadrangle_stabilizer() {
        if !regge_applicable && g.regge_component != 0 {
            continue;
        }
        if let Some(img) = g.apply(&probe) {
            images.push([img.a(), img.b(), img.c(), img.d()].map(Spin::twice));
        }
    }
    let min8 = [a, b, c, d]
        .iter()
        .flat_map(|v| {
            let t = v.twice();
            let mut both = vec![t];
            if regge_applicable {
                both.push(s_twice - t);
            }
            both
        })
        .min()
        .expect("eight parameters");
    let best = images
        .into_iter()
        .filter(|q| q[0] == min8 && q[3] >= q[1])
        .min()
        .ok_or_else(|| Error::UnrealizableQuadrangle(format!("{a}, {b}, {c}, {d}")))?;
    let [a, b, c, d] = best.map(Spin::new);
    Ok(CanonicalQuadruple { a, b, c, d, s: Spin::new(s_twice), regge_applicable })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunningRange {
    pub x_min: Spin,
    pub x_max: Spin,
    pub y_min: Spin,
    pub y_max: Spin,
}

impl RunningRange {
    pub fn x_width_twice(&self) -> u32 {
        self.x_max.twice() - self.x_min.twice()
    }

    pub fn y_width_twice(&self) -> u32 {
        self.y_max.twice() - self.y_min.twice()
    }
}

/// Admissible ranges of the diagonals: `x` from triads `(a b x), (c d x)`,
/// `y` from `(a d y), (b c y)`.
pub fn running_range(q: &CanonicalQuadruple) -> RunningRange {
    let xs = sixj_admissible_x(q.a, q.b, q.c, q.d);
    let ys = sixj_admissible_x(q.a, q.d, q.b, q.c);
    let ends = |v: &[Spin]| (v.first().copied().unwrap_or_default(), v.last().copied().unwrap_or_default());
    let (x_min, x_max) = ends(&xs);
    let (y_min, y_max) = ends(&ys);
    RunningRange { x_min, x_max, y_min, y_max }
}

/// Outcome of the regularization inequality chain on a canonical quadruple.
///
/// `max_r` is the root-of-unity order `r` at which `s <= a + (r-2)/2` becomes
/// tight, i.e. `r = 2(s-a) + 2`, and is `None` when that is below 3.
/// `kappa_twice` is `2κ = r - 2` and `rsym5_holds` tests
/// `r <= (2 x_min + 1) + (2 y_min + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularizationReport {
    pub rsym3_holds: bool,
    pub max_r: Option<u32>,
    pub kappa_twice: Option<u32>,
    pub rsym5_holds: Option<bool>,
}

pub fn regularization_bounds(q: &CanonicalQuadruple) -> RegularizationReport {
    let [a, b, _, d] = q.spins().map(|v| i64::from(v.twice()));
    let s = i64::from(q.s.twice());
    let rsym3_holds = s <= d + (b - a);

    let range = running_range(q);
    let r_star = s - a + 2;
    let dims = i64::from(range.x_min.twice() + range.y_min.twice()) + 2;
    if r_star < 3 {
        return RegularizationReport { rsym3_holds, max_r: None, kappa_twice: None, rsym5_holds: None };
    }
    RegularizationReport {
        rsym3_holds,
        max_r: Some(r_star as u32),
        kappa_twice: Some((r_star - 2) as u32),
        rsym5_holds: Some(r_star <= dims),
    }
}

/// `(2 x_min + 1) + (2 y_min + 1)`.
pub fn rsym5_bound(q: &CanonicalQuadruple) -> u32 {
    let range = running_range(q);
    range.x_min.twice() + range.y_min.twice() + 2
}
