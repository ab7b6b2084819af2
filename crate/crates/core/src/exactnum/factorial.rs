//! Memoized factorials and prime-exponent bookkeeping for factorial ratios.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

/// Environment variable capping the number of memoized factorials.
pub const FACT_CACHE_ENV: &str = "SPINNET_FACT_CACHE";

const DEFAULT_CACHE_CAP: usize = 4096;

fn cache_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(FACT_CACHE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CACHE_CAP)
    })
}

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `n!`, served from a shared table that grows on demand up to the cache cap.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    {
        let t = table().read().expect("factorial table poisoned");
        if n < t.len() {
            return t[n].clone();
        }
    }
    let cap = cache_cap().max(1);
    let mut t = table().write().expect("factorial table poisoned");
    while t.len() <= n.min(cap - 1) {
        let k = t.len();
        let next = &t[k - 1] * BigInt::from(k);
        t.push(next);
    }
    if n < t.len() {
        return t[n].clone();
    }
    // past the cap: continue from the largest cached entry without storing
    let mut acc = t[t.len() - 1].clone();
    for k in t.len()..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Primes up to and including `n`.
pub fn primes_up_to(n: u32) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &is_prime)| is_prime.then_some(k as u32))
        .collect()
}

/// Exponent of prime `p` in `n!` (Legendre).
pub fn legendre(n: u32, p: u32) -> i64 {
    let mut e = 0i64;
    let mut q = u64::from(n);
    let p = u64::from(p);
    while q > 0 {
        q /= p;
        e += q as i64;
    }
    e
}

/// A rational number `prod p^e` built from ratios of factorials.
#[derive(Clone, Debug)]
pub struct FactorialRatio {
    max_arg: u32,
    primes: Vec<u32>,
    exps: Vec<i64>,
}

impl FactorialRatio {
    /// Identity element able to hold factorials of arguments up to `max_arg`.
    pub fn new(max_arg: u32) -> Self {
        let primes = primes_up_to(max_arg);
        let exps = vec![0; primes.len()];
        FactorialRatio { max_arg, primes, exps }
    }

    pub fn mul_factorial(&mut self, n: u32) {
        self.apply(n, 1);
    }

    pub fn div_factorial(&mut self, n: u32) {
        self.apply(n, -1);
    }

    fn apply(&mut self, n: u32, sign: i64) {
        assert!(n <= self.max_arg, "factorial argument {n} beyond prepared prime table");
        for (p, e) in self.primes.iter().zip(self.exps.iter_mut()) {
            if *p > n {
                break;
            }
            *e += sign * legendre(n, *p);
        }
    }

    /// Splits the square root of this ratio as `(outside, inside)` with
    /// `sqrt(ratio) = outside * sqrt(inside)` and `inside` square-free.
    pub fn sqrt_split(&self) -> (num_rational::BigRational, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut inside = BigInt::one();
        for (&p, &e) in self.primes.iter().zip(&self.exps) {
            let half = e.div_euclid(2);
            let odd = e.rem_euclid(2);
            let pb = BigInt::from(p);
            if half > 0 {
                num *= pb.pow(half as u32);
            } else if half < 0 {
                den *= pb.pow((-half) as u32);
            }
            if odd == 1 {
                inside *= &pb;
            }
        }
        (num_rational::BigRational::new(num, den), inside)
    }
}
