//! Triads and exact Wigner 6j symbols.
//!
//! The 6j symbol is written `{a b x; c d y}` with triads `(a b x)`,
//! `(b c y)`, `(c d x)`, `(a d y)`. Values follow the Racah single-sum
//! formula, so `{1 1 1; 1 1 1} = 1/6` and the symbol is invariant under the 24
//! column permutations and pairwise upper/lower exchanges.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, FactorialRatio, Rational, Spin, SqrtRational};

pub fn triad_valid(j1: Spin, j2: Spin, j3: Spin) -> bool {
    let (a, b, c) = (j1.twice(), j2.twice(), j3.twice());
    (a + b + c) % 2 == 0 && c <= a + b && a <= b + c && b <= a + c
}

/// An unordered triple of spins; stored sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triad([Spin; 3]);

impl Triad {
    pub fn new(j1: Spin, j2: Spin, j3: Spin) -> Option<Self> {
        triad_valid(j1, j2, j3).then(|| {
            let mut s = [j1, j2, j3];
            s.sort();
            Triad(s)
        })
    }

    pub fn spins(&self) -> [Spin; 3] {
        self.0
    }
}

/// `(-1)^n` where `n = twice_exponent / 2` must be an integer.
pub fn phase(twice_exponent: i64) -> Result<i32> {
    if twice_exponent.rem_euclid(2) != 0 {
        return Err(Error::PhaseParityError { twice_exponent });
    }
    Ok(if (twice_exponent / 2).rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `{a b x; c d y}`: `top = [a, b, x]`, `bottom = [c, d, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixJ {
    pub top: [Spin; 3],
    pub bottom: [Spin; 3],
}

impl SixJ {
    pub fn new(a: Spin, b: Spin, x: Spin, c: Spin, d: Spin, y: Spin) -> Self {
        SixJ { top: [a, b, x], bottom: [c, d, y] }
    }

    /// From twice-values in reading order `a b x c d y`.
    pub fn from_twice(t: [u32; 6]) -> Self {
        let s = t.map(Spin::new);
        SixJ::new(s[0], s[1], s[2], s[3], s[4], s[5])
    }

    pub fn to_twice(&self) -> [u32; 6] {
        let [a, b, x] = self.top;
        let [c, d, y] = self.bottom;
        [a, b, x, c, d, y].map(Spin::twice)
    }

    pub fn a(&self) -> Spin {
        self.top[0]
    }
    pub fn b(&self) -> Spin {
        self.top[1]
    }
    pub fn x(&self) -> Spin {
        self.top[2]
    }
    pub fn c(&self) -> Spin {
        self.bottom[0]
    }
    pub fn d(&self) -> Spin {
        self.bottom[1]
    }
    pub fn y(&self) -> Spin {
        self.bottom[2]
    }

    /// The four triads `(a b x), (b c y), (c d x), (a d y)`.
    pub fn triads(&self) -> [[Spin; 3]; 4] {
        let (a, b, x, c, d, y) = (self.a(), self.b(), self.x(), self.c(), self.d(), self.y());
        [[a, b, x], [b, c, y], [c, d, x], [a, d, y]]
    }

    pub fn invalid_triads(&self) -> Vec<[Spin; 3]> {
        self.triads()
            .into_iter()
            .filter(|t| !triad_valid(t[0], t[1], t[2]))
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.triads().iter().all(|t| triad_valid(t[0], t[1], t[2]))
    }

    pub fn max_twice(&self) -> u32 {
        self.top.iter().chain(&self.bottom).map(|s| s.twice()).max().unwrap_or(0)
    }
}

impl fmt::Display for SixJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{} {} {}; {} {} {}}}",
            self.top[0], self.top[1], self.top[2], self.bottom[0], self.bottom[1], self.bottom[2]
        )
    }
}

/// All `x` with `(a b x)` and `(c d x)` valid, ascending.
pub fn sixj_admissible_x(a: Spin, b: Spin, c: Spin, d: Spin) -> Vec<Spin> {
    let lo = a.twice().abs_diff(b.twice()).max(c.twice().abs_diff(d.twice()));
    let hi = (a.twice() + b.twice()).min(c.twice() + d.twice());
    (lo..=hi)
        .map(Spin::new)
        .filter(|&x| triad_valid(a, b, x) && triad_valid(c, d, x))
        .collect()
}

pub fn sixj_dimension_weight(j: Spin) -> Rational {
    Rational::from_integer(BigInt::from(j.dimension()))
}

/// Exact value of a 6j symbol via the Racah single sum.
///
/// Fails with [`Error::InvalidTriads`] instead of returning zero when a
/// triad is violated; use [`sixj_or_zero`] inside sums.
pub fn sixj_value(s: &SixJ) -> Result<SqrtRational> {
    let bad = s.invalid_triads();
    if !bad.is_empty() {
        return Err(Error::InvalidTriads { symbol: s.to_string(), triads: bad });
    }
    Ok(racah_sum(s))
}

pub fn sixj_or_zero(s: &SixJ) -> SqrtRational {
    if s.is_valid() {
        racah_sum(s)
    } else {
        SqrtRational::zero()
    }
}

// Half-sums of twice-values are integers once all triads hold.
fn half(t: u32) -> u32 {
    debug_assert!(t.is_multiple_of(2));
    t / 2
}

fn racah_sum(s: &SixJ) -> SqrtRational {
    let [a, b, x, c, d, y] = s.to_twice();
    let triads = [[a, b, x], [a, d, y], [c, b, y], [c, d, x]];
    let alphas = triads.map(|[p, q, r]| half(p + q + r));
    let betas = [half(a + b + c + d), half(b + x + d + y), half(x + a + y + c)];

    let max_arg = alphas.iter().copied().max().unwrap_or(0) + 1;
    let mut prefactor = FactorialRatio::new(max_arg);
    for [p, q, r] in triads {
        prefactor.mul_factorial(half(p + q - r));
        prefactor.mul_factorial(half(p + r - q));
        prefactor.mul_factorial(half(q + r - p));
        prefactor.div_factorial(half(p + q + r) + 1);
    }
    let (outside, inside) = prefactor.sqrt_split();

    let t_min = alphas.iter().copied().max().unwrap_or(0);
    let t_max = betas.iter().copied().min().unwrap_or(0);
    let mut sum = Rational::zero();
    for t in t_min..=t_max {
        let mut den = BigInt::from(1);
        for &al in &alphas {
            den *= factorial(t - al);
        }
        for &be in &betas {
            den *= factorial(be - t);
        }
        let term = Rational::new(factorial(t + 1), den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    SqrtRational::from_parts(outside * sum, inside)
}

/// Memo of 6j values keyed by a classical-symmetry representative.
///
/// Not shared: each worker owns one.
#[derive(Debug, Default)]
pub struct SixJCache {
    values: HashMap<[u32; 6], SqrtRational>,
}

impl SixJCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Same contract as [`sixj_or_zero`].
    pub fn get_or_zero(&mut self, s: &SixJ) -> SqrtRational {
        if !s.is_valid() {
            return SqrtRational::zero();
        }
        let key = classical_key(s);
        self.values.entry(key).or_insert_with(|| racah_sum(s)).clone()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Lexicographically smallest twice-tuple among the 24 column permutations
/// and pairwise column flips.
fn classical_key(s: &SixJ) -> [u32; 6] {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    const FLIPS: [[bool; 3]; 4] =
        [[false, false, false], [true, true, false], [true, false, true], [false, true, true]];
    let cols: [[u32; 2]; 3] =
        [0, 1, 2].map(|k| [s.top[k].twice(), s.bottom[k].twice()]);
    let mut best = [u32::MAX; 6];
    for p in PERMS {
        for f in FLIPS {
            let mut v = [0u32; 6];
            for k in 0..3 {
                let [u, l] = cols[p[k]];
                let (u, l) = if f[k] { (l, u) } else { (u, l) };
                v[k] = u;
                v[k + 3] = l;
            }
            best = best.min(v);
        }
    }
    best
}

/// The radicand of the product of the four triangle coefficients, i.e. the
/// square-free part of `prod Delta(abc)^2`.
pub fn triangle_radicand(s: &SixJ) -> BigInt {
    let [a, b, x, c, d, y] = s.to_twice();
    let triads = [[a, b, x], [a, d, y], [c, b, y], [c, d, x]];
    let max_arg = triads.iter().map(|[p, q, r]| half(p + q + r) + 1).max().unwrap_or(1);
    let mut ratio = FactorialRatio::new(max_arg);
    for [p, q, r] in triads {
        ratio.mul_factorial(half(p + q - r));
        ratio.mul_factorial(half(p + r - q));
        ratio.mul_factorial(half(q + r - p));
        ratio.div_factorial(half(p + q + r) + 1);
    }
    ratio.sqrt_split().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sj(t: [u32; 6]) -> SixJ {
        SixJ::from_twice(t)
    }

    fn q(n: i64, d: i64) -> SqrtRational {
        SqrtRational::from_rational(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn triad_examples() {
        assert!(triad_valid(Spin::ZERO, Spin::ZERO, Spin::ZERO));
        assert!(triad_valid(Spin::new(1), Spin::new(1), Spin::new(2)));
        assert!(!triad_valid(Spin::new(1), Spin::new(1), Spin::new(1)));
        assert!(!triad_valid(Spin::new(2), Spin::ZERO, Spin::ZERO));
        assert!(Triad::new(Spin::new(2), Spin::new(1), Spin::new(1)).is_some());
    }

    #[test]
    fn admissible_x_examples() {
        let s = |t: u32| Spin::new(t);
        let twice = |v: Vec<Spin>| v.into_iter().map(Spin::twice).collect::<Vec<_>>();
        assert_eq!(twice(sixj_admissible_x(s(2), s(2), s(2), s(2))), vec![0, 2, 4]);
        assert_eq!(twice(sixj_admissible_x(s(1), s(1), s(1), s(1))), vec![0, 2]);
        // enumerated by hand through triad_valid over 0..=8
        assert_eq!(twice(sixj_admissible_x(s(4), s(2), s(3), s(1))), vec![2, 4]);
        assert!(sixj_admissible_x(s(0), s(0), s(2), s(0)).is_empty());
    }

    #[test]
    fn value_examples() {
        assert_eq!(sixj_value(&sj([0; 6])).unwrap(), SqrtRational::one());
        assert_eq!(sixj_value(&sj([2; 6])).unwrap(), q(1, 6));
        assert_eq!(sixj_value(&sj([2, 2, 2, 0, 2, 2])).unwrap(), q(-1, 3));
        // {2 2 2; 1 1 1} = sqrt(21)/30
        assert_eq!(
            sixj_value(&sj([4, 4, 4, 2, 2, 2])).unwrap(),
            "1/30*sqrt(21)".parse().unwrap()
        );
        // {3/2 1 1/2; 1 1/2 1} = -1/6
        assert_eq!(sixj_value(&sj([3, 2, 1, 2, 1, 2])).unwrap(), q(-1, 6));
    }

    #[test]
    fn invalid_triads_are_errors() {
        let s = sj([2, 0, 0, 0, 0, 0]);
        assert!(matches!(sixj_value(&s), Err(Error::InvalidTriads { .. })));
        assert!(sixj_or_zero(&s).is_zero());
    }

    #[test]
    fn dimension_weights() {
        assert_eq!(sixj_dimension_weight(Spin::ZERO), Rational::from_integer(1.into()));
        assert_eq!(sixj_dimension_weight(Spin::new(1)), Rational::from_integer(2.into()));
        assert_eq!(sixj_dimension_weight(Spin::integer(3)), Rational::from_integer(7.into()));
    }

    #[test]
    fn phases() {
        assert_eq!(phase(0).unwrap(), 1);
        assert_eq!(phase(2).unwrap(), -1);
        assert_eq!(phase(-2).unwrap(), -1);
        assert_eq!(phase(1), Err(Error::PhaseParityError { twice_exponent: 1 }));
    }

    #[test]
    fn cache_agrees_with_direct_evaluation() {
        let mut cache = SixJCache::new();
        for t in [[4, 4, 4, 2, 2, 2], [2, 2, 4, 4, 4, 2], [4, 2, 2, 2, 4, 2], [2, 0, 0, 0, 0, 0]] {
            assert_eq!(cache.get_or_zero(&sj(t)), sixj_or_zero(&sj(t)));
        }
        // the first three share a classical orbit representative
        assert!(cache.len() <= 2);
    }

    #[test]
    fn radicand_matches_triangle_coefficients() {
        for t in [[4, 4, 4, 2, 2, 2], [3, 2, 1, 2, 1, 2], [4, 2, 2, 2, 2, 2], [3, 3, 2, 3, 3, 4]] {
            let s = sj(t);
            let v = sixj_value(&s).unwrap();
            if !v.is_zero() {
                assert_eq!(v.radicand(), &triangle_radicand(&s), "{s}");
            }
        }
    }
}
