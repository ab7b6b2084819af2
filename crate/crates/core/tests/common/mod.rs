//! Test-only reference evaluation of 6j symbols as a contraction of four 3j
//! symbols, each from its own Racah sum with locally computed factorials.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use spinnet::exactnum::SqrtRational;

fn fact(n: i64) -> BigInt {
    assert!(n >= 0);
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// A 3j symbol as `sign * sqrt(square)`, arguments in twice-values.
#[derive(Clone, Debug)]
pub struct ThreeJ {
    pub coeff: BigRational,
    pub square: BigRational,
}

/// `(j1 j2 j3; m1 m2 m3)` with every argument doubled. `None` when zero.
pub fn three_j(j: [i64; 3], m: [i64; 3]) -> Option<ThreeJ> {
    let [j1, j2, j3] = j;
    let [m1, m2, m3] = m;
    if m1 + m2 + m3 != 0 {
        return None;
    }
    if (0..3).any(|k| m[k].abs() > j[k] || (j[k] - m[k]) % 2 != 0) {
        return None;
    }
    if (j1 + j2 + j3) % 2 != 0 || j3 > j1 + j2 || j3 < (j1 - j2).abs() {
        return None;
    }
    let h = |t: i64| t / 2;
    let delta = ratio(
        fact(h(j1 + j2 - j3)) * fact(h(j1 - j2 + j3)) * fact(h(-j1 + j2 + j3)),
        fact(h(j1 + j2 + j3) + 1),
    );
    let ms = fact(h(j1 + m1)) * fact(h(j1 - m1)) * fact(h(j2 + m2)) * fact(h(j2 - m2)) * fact(h(j3 + m3)) * fact(h(j3 - m3));
    let square = delta * ratio(ms, BigInt::one());

    let mut sum = BigRational::zero();
    for k in 0..=h(j1 + j2 + j3) {
        let args = [
            k,
            h(j3 - j2 + m1) + k,
            h(j3 - j1 - m2) + k,
            h(j1 + j2 - j3) - k,
            h(j1 - m1) - k,
            h(j2 + m2) - k,
        ];
        if args.iter().any(|&a| a < 0) {
            continue;
        }
        let den = args.iter().fold(BigInt::one(), |acc, &a| acc * fact(a));
        let term = ratio(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return None;
    }
    let phase = h(j1 - j2 - m3);
    if phase.rem_euclid(2) == 1 {
        sum = -sum;
    }
    Some(ThreeJ { coeff: sum, square })
}

/// `{j1 j2 j3; j4 j5 j6}` (twice-values) as
/// `Σ_m (-1)^{Σ(j-m)} (j1 j2 j3; -m1 -m2 -m3)(j1 j5 j6; m1 -m5 m6)
///   (j4 j2 j6; m4 m2 -m6)(j4 j5 j3; -m4 m5 m3)`.
pub fn sixj_by_contraction(j: [u32; 6]) -> SqrtRational {
    let j = j.map(i64::from);
    let [j1, j2, j3, j4, j5, j6] = j;
    // radicand -> accumulated coefficient
    let mut acc: BTreeMap<BigInt, BigRational> = BTreeMap::new();
    let range = |t: i64| (-t..=t).step_by(2);
    for m1 in range(j1) {
        for m2 in range(j2) {
            for m5 in range(j5) {
                let m3 = -m1 - m2;
                let m6 = m5 - m1;
                let m4 = m6 - m2;
                if m3.abs() > j3 || m6.abs() > j6 || m4.abs() > j4 || (j4 - m4) % 2 != 0 {
                    continue;
                }
                if -m4 + m5 + m3 != 0 {
                    continue;
                }
                let factors = [
                    three_j([j1, j2, j3], [-m1, -m2, -m3]),
                    three_j([j1, j5, j6], [m1, -m5, m6]),
                    three_j([j4, j2, j6], [m4, m2, -m6]),
                    three_j([j4, j5, j3], [-m4, m5, m3]),
                ];
                if factors.iter().any(Option::is_none) {
                    continue;
                }
                let mut coeff = BigRational::one();
                let mut square = BigRational::one();
                for f in factors.into_iter().flatten() {
                    coeff *= f.coeff;
                    square *= f.square;
                }
                let ms = [m1, m2, m3, m4, m5, m6];
                let twice_phase: i64 = (0..6).map(|k| j[k] - ms[k]).sum();
                assert_eq!(twice_phase % 2, 0);
                if (twice_phase / 2) % 2 != 0 {
                    coeff = -coeff;
                }
                let term = SqrtRational::new(coeff, square).expect("positive square");
                *acc.entry(term.radicand().clone()).or_insert_with(BigRational::zero) += term.coeff();
            }
        }
    }
    let nonzero: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    match nonzero.len() {
        0 => SqrtRational::zero(),
        1 => {
            let (r, c) = nonzero.into_iter().next().unwrap();
            SqrtRational::new(c, BigRational::from_integer(r)).unwrap()
        }
        _ => panic!("contraction of {j:?} left several radicands"),
    }
}

/// `{a b c; 0 c b} = (-1)^{a+b+c} / sqrt((2b+1)(2c+1))`, twice-values.
pub fn one_zero_closed_form(a: u32, b: u32, c: u32) -> SqrtRational {
    let dims = BigInt::from((b + 1) * (c + 1));
    let sign: i64 = if ((a + b + c) / 2).is_multiple_of(2) { 1 } else { -1 };
    SqrtRational::new(ratio(BigInt::from(sign), dims.clone()), BigRational::from_integer(dims)).unwrap()
}

pub fn triad(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && c <= a + b && a <= b + c && b <= a + c
}

/// All valid `{a b x; c d y}` with twice-values up to `max`.
pub fn valid_symbols(max: u32) -> Vec<[u32; 6]> {
    let mut out = Vec::new();
    let r = 0..=max;
    for a in r.clone() {
        for b in r.clone() {
            for x in r.clone() {
                if !triad(a, b, x) {
                    continue;
                }
                for c in r.clone() {
                    for d in r.clone() {
                        if !triad(c, d, x) {
                            continue;
                        }
                        for y in r.clone() {
                            if triad(a, d, y) && triad(b, c, y) {
                                out.push([a, b, x, c, d, y]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn is_negative(v: &SqrtRational) -> bool {
    v.coeff().is_negative()
}
