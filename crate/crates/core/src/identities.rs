//! Exact verifiers for the 6j orthogonality relation, the Biedenharn-Elliott
//! identity and the Pachner 2-3 / 1-4 moves built from them.
//!
//! Every sum runs over the range allowed by triad admissibility, so all sums
//! are finite and evaluated exactly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Spin, SqrtRational};
use crate::wigner::{phase, sixj_admissible_x, triad_valid, SixJ, SixJCache};

/// Both sides of an identity, exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCheckResult {
    pub lhs: SqrtRational,
    pub rhs: SqrtRational,
    pub equal: bool,
    pub form: String,
    pub diff: Option<Mismatch>,
}

/// How two unequal sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// `lhs - rhs` when both sides share a radicand (or one is zero).
    pub lhs_minus_rhs: Option<SqrtRational>,
    pub lhs_radicand: String,
    pub rhs_radicand: String,
}

impl ExactCheckResult {
    fn new(lhs: SqrtRational, rhs: SqrtRational, form: &str) -> Self {
        let equal = lhs == rhs;
        let diff = (!equal).then(|| Mismatch {
            lhs_minus_rhs: lhs.checked_sub(&rhs).ok(),
            lhs_radicand: lhs.radicand().to_string(),
            rhs_radicand: rhs.radicand().to_string(),
        });
        ExactCheckResult { lhs, rhs, equal, form: form.to_owned(), diff }
    }
}

fn weight(j: Spin) -> Rational {
    Rational::from_integer(j.dimension().into())
}

/// `Σ_x (2x+1) {a b x; c d y}{c d x; a b y'}` against
/// `δ_{yy'} δ(ady) δ(bcy) / (2y'+1)`.
pub fn orthogonality_check(a: Spin, b: Spin, c: Spin, d: Spin, y: Spin, y_prime: Spin) -> ExactCheckResult {
    orthogonality_check_cached(a, b, c, d, y, y_prime, &mut SixJCache::new())
        .expect("orthogonality terms share a radicand")
}

pub fn orthogonality_check_cached(
    a: Spin,
    b: Spin,
    c: Spin,
    d: Spin,
    y: Spin,
    y_prime: Spin,
    cache: &mut SixJCache,
) -> Result<ExactCheckResult> {
    let mut lhs = SqrtRational::zero();
    for x in sixj_admissible_x(a, b, c, d) {
        let left = cache.get_or_zero(&SixJ::new(a, b, x, c, d, y));
        let right = cache.get_or_zero(&SixJ::new(c, d, x, a, b, y_prime));
        let term = (&left * &right).mul_rational(&weight(x));
        lhs = lhs.checked_add(&term)?;
    }
    let rhs = if y == y_prime && triad_valid(a, d, y) && triad_valid(b, c, y) {
        SqrtRational::from_rational(Rational::new(1.into(), y_prime.dimension().into()))
    } else {
        SqrtRational::zero()
    };
    Ok(ExactCheckResult::new(lhs, rhs, "orthogonality"))
}

/// Which version of the Biedenharn-Elliott sum to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BeForm {
    /// `Σ_x (-1)^{φ+x} (2x+1) ...`
    #[default]
    Standard,
    /// The same sum without the `(2x+1)` weight.
    LiteralPaper,
}

impl BeForm {
    pub fn label(self) -> &'static str {
        match self {
            BeForm::Standard => "be-standard",
            BeForm::LiteralPaper => "be-literal-paper",
        }
    }
}

/// The nine fixed spins of a Biedenharn-Elliott instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BEInstance {
    pub a: Spin,
    pub b: Spin,
    pub c: Spin,
    pub d: Spin,
    pub e: Spin,
    pub f: Spin,
    pub p: Spin,
    pub q: Spin,
    pub r: Spin,
}

/// Position of the summed spin `x` in the three left-hand symbols.
const X_POSITION: usize = 2;

/// Triads of `{a b x; c d y}` as positions in reading order `a b x c d y`.
const TRIAD_POSITIONS: [[usize; 3]; 4] = [[0, 1, 2], [1, 3, 5], [3, 4, 2], [0, 4, 5]];

impl BEInstance {
    pub fn from_twice(t: [u32; 9]) -> Self {
        let [a, b, c, d, e, f, p, q, r] = t.map(Spin::new);
        BEInstance { a, b, c, d, e, f, p, q, r }
    }

    pub fn uniform(j: Spin) -> Self {
        BEInstance { a: j, b: j, c: j, d: j, e: j, f: j, p: j, q: j, r: j }
    }

    pub fn to_twice(&self) -> [u32; 9] {
        [self.a, self.b, self.c, self.d, self.e, self.f, self.p, self.q, self.r].map(Spin::twice)
    }

    /// `{a b x; c d p}`, `{c d x; e f q}`, `{e f x; b a r}`.
    pub fn left_symbols(&self, x: Spin) -> [SixJ; 3] {
        let BEInstance { a, b, c, d, e, f, p, q, r } = *self;
        [
            SixJ::new(a, b, x, c, d, p),
            SixJ::new(c, d, x, e, f, q),
            SixJ::new(e, f, x, b, a, r),
        ]
    }

    /// `{p q r; f b c}`, `{p q r; e a d}`.
    pub fn right_symbols(&self) -> [SixJ; 2] {
        let BEInstance { a, b, c, d, e, f, p, q, r } = *self;
        [SixJ::new(p, q, r, f, b, c), SixJ::new(p, q, r, e, a, d)]
    }

    /// Triads of the five symbols that do not involve `x`, deduplicated.
    pub fn x_free_triads(&self) -> Vec<[Spin; 3]> {
        let placeholder = Spin::ZERO;
        let mut out: Vec<[Spin; 3]> = Vec::new();
        let tagged = self
            .left_symbols(placeholder)
            .into_iter()
            .map(|s| (s, true))
            .chain(self.right_symbols().into_iter().map(|s| (s, false)));
        for (sym, has_x) in tagged {
            let entries = [sym.a(), sym.b(), sym.x(), sym.c(), sym.d(), sym.y()];
            for pos in TRIAD_POSITIONS {
                if has_x && pos.contains(&X_POSITION) {
                    continue;
                }
                let mut t = pos.map(|i| entries[i]);
                t.sort();
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn invalid_triads(&self) -> Vec<[Spin; 3]> {
        self.x_free_triads()
            .into_iter()
            .filter(|t| !triad_valid(t[0], t[1], t[2]))
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.invalid_triads().is_empty()
    }

    /// `2φ` with `φ = a+b+c+d+e+f+p+q+r`.
    pub fn twice_phi(&self) -> i64 {
        self.to_twice().iter().map(|&t| i64::from(t)).sum()
    }

    /// Values of `x` admissible in all three left-hand symbols.
    pub fn admissible_x(&self) -> Vec<Spin> {
        sixj_admissible_x(self.a, self.b, self.c, self.d)
            .into_iter()
            .filter(|&x| triad_valid(self.e, self.f, x))
            .collect()
    }
}

fn be_sides(inst: &BEInstance, form: BeForm, cache: &mut SixJCache) -> Result<(SqrtRational, SqrtRational)> {
    let bad = inst.invalid_triads();
    if !bad.is_empty() {
        return Err(Error::InvalidInstance(bad));
    }
    let mut lhs = SqrtRational::zero();
    for x in inst.admissible_x() {
        let sign = phase(inst.twice_phi() + i64::from(x.twice()))?;
        let [s1, s2, s3] = inst.left_symbols(x);
        let mut term = &(&cache.get_or_zero(&s1) * &cache.get_or_zero(&s2)) * &cache.get_or_zero(&s3);
        let mut factor = Rational::from_integer(sign.into());
        if form == BeForm::Standard {
            factor *= weight(x);
        }
        term = term.mul_rational(&factor);
        lhs = lhs.checked_add(&term)?;
    }
    let [s4, s5] = inst.right_symbols();
    let rhs = &cache.get_or_zero(&s4) * &cache.get_or_zero(&s5);
    Ok((lhs, rhs))
}

/// Biedenharn-Elliott identity
/// `Σ_x (-1)^{φ+x} (2x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
///   = {p q r; f b c}{p q r; e a d}`.
pub fn be_check(inst: &BEInstance, form: BeForm) -> Result<ExactCheckResult> {
    be_check_cached(inst, form, &mut SixJCache::new())
}

pub fn be_check_cached(inst: &BEInstance, form: BeForm, cache: &mut SixJCache) -> Result<ExactCheckResult> {
    let (lhs, rhs) = be_sides(inst, form, cache)?;
    Ok(ExactCheckResult::new(lhs, rhs, form.label()))
}

/// Three tetrahedra glued along the edge `x` against two tetrahedra glued
/// along the face `(p q r)`.
pub fn pachner_23_check(inst: &BEInstance) -> Result<ExactCheckResult> {
    pachner_23_check_cached(inst, &mut SixJCache::new())
}

pub fn pachner_23_check_cached(inst: &BEInstance, cache: &mut SixJCache) -> Result<ExactCheckResult> {
    let (lhs, rhs) = be_sides(inst, BeForm::Standard, cache)?;
    Ok(ExactCheckResult::new(lhs, rhs, "pachner-2-3"))
}

/// Contraction of the Biedenharn-Elliott sum with the orthogonality relation:
///
/// `(2p+1) Σ_x (2x+1) {a b x; c d p'}{a b x; c d p} · BE_lhs(p)
///   = δ_{pp'} {p q r; f b c}{p q r; e a d}`
///
/// The left side glues the three tetrahedra of the 2-3 move to a pair that
/// shares the new edge `x`; orthogonality collapses the pair unless `p = p'`.
pub fn pachner_14_check(inst: &BEInstance, p_prime: Spin) -> Result<ExactCheckResult> {
    pachner_14_check_cached(inst, p_prime, &mut SixJCache::new())
}

pub fn pachner_14_check_cached(inst: &BEInstance, p_prime: Spin, cache: &mut SixJCache) -> Result<ExactCheckResult> {
    let (be_lhs, be_rhs) = be_sides(inst, BeForm::Standard, cache)?;
    let BEInstance { a, b, c, d, p, .. } = *inst;

    let mut overlap = SqrtRational::zero();
    for x in sixj_admissible_x(a, b, c, d) {
        let primed = cache.get_or_zero(&SixJ::new(a, b, x, c, d, p_prime));
        let plain = cache.get_or_zero(&SixJ::new(a, b, x, c, d, p));
        overlap = overlap.checked_add(&(&primed * &plain).mul_rational(&weight(x)))?;
    }
    let lhs = (&overlap * &be_lhs).mul_rational(&weight(p));
    let rhs = if p == p_prime { be_rhs } else { SqrtRational::zero() };
    Ok(ExactCheckResult::new(lhs, rhs, "pachner-1-4"))
}

/// Every `(a, b, c, d, y, y')` with twice-spins up to `max_twice`.
pub fn orthogonality_grid(max_twice: u32) -> impl Iterator<Item = [Spin; 6]> {
    let n = max_twice + 1;
    (0..n.pow(6)).map(move |mut k| {
        let mut out = [Spin::ZERO; 6];
        for slot in out.iter_mut() {
            *slot = Spin::new(k % n);
            k /= n;
        }
        out
    })
}

/// Every nine-spin instance with twice-spins up to `max_twice` whose
/// `x`-free triads all hold, in lexicographic twice-value order.
pub fn be_grid(max_twice: u32) -> Vec<BEInstance> {
    let n = max_twice + 1;
    let range = || 0..n;
    let ok = |a: u32, b: u32, c: u32| triad_valid(Spin::new(a), Spin::new(b), Spin::new(c));
    // triads: (bcp) (adp) (deq) (cfq) (bfr) (aer) (pqr)
    let mut out = Vec::new();
    for a in range() {
        for b in range() {
            for c in range() {
                for d in range() {
                    for p in range() {
                        if !ok(b, c, p) || !ok(a, d, p) {
                            continue;
                        }
                        for e in range() {
                            for q in range() {
                                if !ok(d, e, q) {
                                    continue;
                                }
                                for f in range() {
                                    if !ok(c, f, q) {
                                        continue;
                                    }
                                    for r in range() {
                                        if ok(b, f, r) && ok(a, e, r) && ok(p, q, r) {
                                            out.push(BEInstance::from_twice([a, b, c, d, e, f, p, q, r]));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Which identity a grid run checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    Orthogonality,
    BiedenharnElliott(BeForm),
    Pachner23,
    /// Every instance paired with every `p'` admissible in `(a d p'), (b c p')`.
    Pachner14,
}

/// One point of a verification grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridInstance {
    Orthogonality([Spin; 6]),
    Nine(BEInstance),
    NineWithPrime(BEInstance, Spin),
}

impl GridInstance {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            GridInstance::Orthogonality([a, b, c, d, y, y_prime]) => serde_json::json!({
                "a": a, "b": b, "c": c, "d": d, "y": y, "y_prime": y_prime
            }),
            GridInstance::Nine(inst) => serde_json::to_value(inst).expect("instance serializes"),
            GridInstance::NineWithPrime(inst, p_prime) => {
                let mut v = serde_json::to_value(inst).expect("instance serializes");
                v["p_prime"] = serde_json::to_value(p_prime).expect("spin serializes");
                v
            }
        }
    }
}

/// All grid points of `kind` with twice-spins up to `max_twice`, in
/// lexicographic order.
pub fn grid_instances(kind: GridKind, max_twice: u32) -> Vec<GridInstance> {
    match kind {
        GridKind::Orthogonality => orthogonality_grid(max_twice).map(GridInstance::Orthogonality).collect(),
        GridKind::BiedenharnElliott(_) | GridKind::Pachner23 => {
            be_grid(max_twice).into_iter().map(GridInstance::Nine).collect()
        }
        GridKind::Pachner14 => be_grid(max_twice)
            .into_iter()
            .flat_map(|inst| {
                sixj_admissible_x(inst.a, inst.d, inst.b, inst.c)
                    .into_iter()
                    .map(move |p_prime| GridInstance::NineWithPrime(inst, p_prime))
            })
            .collect(),
    }
}

/// One verification record, as streamed in JSON lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRecord {
    pub instance: serde_json::Value,
    pub lhs: SqrtRational,
    pub rhs: SqrtRational,
    pub equal: bool,
    pub form: String,
}

pub fn check_instance(kind: GridKind, instance: &GridInstance, cache: &mut SixJCache) -> Result<GridRecord> {
    let res = match (kind, instance) {
        (GridKind::Orthogonality, &GridInstance::Orthogonality([a, b, c, d, y, y_prime])) => {
            orthogonality_check_cached(a, b, c, d, y, y_prime, cache)?
        }
        (GridKind::BiedenharnElliott(form), GridInstance::Nine(inst)) => be_check_cached(inst, form, cache)?,
        (GridKind::Pachner23, GridInstance::Nine(inst)) => pachner_23_check_cached(inst, cache)?,
        (GridKind::Pachner14, GridInstance::NineWithPrime(inst, p_prime)) => {
            pachner_14_check_cached(inst, *p_prime, cache)?
        }
        _ => panic!("grid instance {instance:?} does not belong to {kind:?}"),
    };
    Ok(GridRecord { instance: instance.to_json(), lhs: res.lhs, rhs: res.rhs, equal: res.equal, form: res.form })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub instances: usize,
    pub failures: usize,
}

impl GridSummary {
    pub fn add(&mut self, record: &GridRecord) {
        self.instances += 1;
        if !record.equal {
            self.failures += 1;
        }
    }
}

impl std::fmt::Display for GridSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} instances, {} failures", self.instances, self.failures)
    }
}

/// Checks the whole grid in parallel; records come back in grid order.
pub fn verify_grid_records(kind: GridKind, max_twice: u32) -> Result<(Vec<GridRecord>, GridSummary)> {
    let instances = grid_instances(kind, max_twice);
    let records = instances
        .par_iter()
        .map_init(SixJCache::new, |cache, inst| check_instance(kind, inst, cache))
        .collect::<Result<Vec<_>>>()?;
    let mut summary = GridSummary::default();
    records.iter().for_each(|r| summary.add(r));
    Ok((records, summary))
}

pub fn verify_orthogonality_grid(max_twice: u32) -> Result<(Vec<GridRecord>, GridSummary)> {
    verify_grid_records(GridKind::Orthogonality, max_twice)
}

pub fn verify_be_grid(max_twice: u32, form: BeForm) -> Result<(Vec<GridRecord>, GridSummary)> {
    verify_grid_records(GridKind::BiedenharnElliott(form), max_twice)
}
