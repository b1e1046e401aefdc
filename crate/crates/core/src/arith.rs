//! Arbitrary-precision integer utilities: factorization, extended gcd,
//! modular exponentiation and primality testing.
//!
//! Factorization uses trial division by every prime below 10^6 and then
//! Pollard's rho with Brent's cycle detection on whatever cofactor remains.
//! That handles moduli up to roughly 128 bits whose second-largest prime
//! factor is not too large; it is not meant for cryptographic moduli.
//!
//! Primality is deterministic below 2^64 (Miller-Rabin with the first twelve
//! prime bases, which is exact up to 3.3 * 10^24). Above 2^64 it runs 40
//! Miller-Rabin rounds with random bases, so a composite is reported prime
//! with probability at most 4^-40.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

const TRIAL_DIVISION_LIMIT: u32 = 1_000_000;
const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_DIVISION_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::with_capacity(78_500);
        for i in 2..=limit {
            if composite[i] {
                continue;
            }
            primes.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
        primes
    })
}

/// A modulus together with its prime factorization.
///
/// Primes are strictly increasing, exponents are at least 1, and the product
/// of `p^c` over all entries is the modulus. `m = 1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    modulus: Natural,
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    /// Number of distinct primes, often written ω(m).
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    /// The prime powers `p^c`, one per distinct prime.
    pub fn prime_powers(&self) -> Vec<Natural> {
        self.factors
            .iter()
            .map(|(p, c)| num_traits::pow(p.clone(), *c as usize))
            .collect()
    }

    /// Product of the distinct primes (1 for m = 1).
    pub fn radical(&self) -> Natural {
        self.primes().product()
    }

    /// Largest exponent, 0 for m = 1. For Z/mZ this is the least N with
    /// J^N = 0, J being the Jacobson radical.
    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, c)| c == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{} = 1", self.modulus);
        }
        write!(f, "{} = ", self.modulus)?;
        for (i, (p, c)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *c == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Factors `m` into primes. Rejects `m = 0`.
pub fn factor(m: &Natural) -> Result<Factorization> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut rest = m.clone();
    let mut primes: Vec<Natural> = Vec::new();

    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            primes.push(p_big.clone());
        }
    }

    if !rest.is_one() {
        split_into(rest, &mut primes);
    }
    primes.sort();

    let mut factors: Vec<(Natural, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, c)) if *q == p => *c += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization {
        modulus: m.clone(),
        factors,
    })
}

// `n` has no prime factor below the trial-division limit.
fn split_into(n: Natural, out: &mut Vec<Natural>) {
    if n.is_one() {
        return;
    }
    let limit = BigUint::from(TRIAL_DIVISION_LIMIT);
    if n < &limit * &limit || is_prime(&n) {
        out.push(n);
        return;
    }
    if let Some(root) = exact_square_root(&n) {
        split_into(root.clone(), out);
        split_into(root, out);
        return;
    }
    let d = pollard_brent(&n);
    let cofactor = &n / &d;
    split_into(d, out);
    split_into(cofactor, out);
}

fn exact_square_root(n: &Natural) -> Option<Natural> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// A nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: &Natural) -> Natural {
    if let Some(small) = n.to_u64() {
        return BigUint::from(pollard_brent_u64(small));
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let step = |y: &BigUint| (y * y + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigUint::one();
        let mut d = BigUint::one();
        let mut r: u64 = 1;
        while d.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && d.is_one() {
                ys = y.clone();
                let batch = (r - k).min(128);
                for _ in 0..batch {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                d = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if d == *n {
            // The batch overshot; replay it one step at a time.
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                d = diff.gcd(n);
                if d > one {
                    break;
                }
            }
        }
        if d != *n {
            return d;
        }
        c += 1u32;
    }
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    for c in 1..n {
        let step = |y: u64| ((mul(y, y) as u128 + c as u128) % n as u128) as u64;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut q = 1u64;
        let mut d = 1u64;
        let mut r = 1u64;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && d == 1 {
                ys = y;
                let batch = (r - k).min(128);
                for _ in 0..batch {
                    y = step(y);
                    q = mul(q, x.abs_diff(y));
                }
                d = q.gcd(&n);
                k += batch;
            }
            r *= 2;
        }
        if d == n {
            loop {
                ys = step(ys);
                d = x.abs_diff(ys).gcd(&n);
                if d > 1 {
                    break;
                }
            }
        }
        if d != n {
            return d;
        }
    }
    n
}

/// Returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`.
///
/// `gcd(0, 0)` is 0 with `x = y = 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (Natural, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_zero() {
        return (BigUint::zero(), BigInt::zero(), BigInt::zero());
    }
    if old_r.sign() == Sign::Minus {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    (old_r.into_parts().1, old_s, old_t)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`. Modulo 1 every element is
/// its own (zero) inverse.
pub fn mod_inverse(a: &Natural, m: &Natural) -> Option<Natural> {
    if m.is_zero() {
        return None;
    }
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let (g, x, _) = extended_gcd(&BigInt::from(a.clone()), &BigInt::from(m.clone()));
    if !g.is_one() {
        return None;
    }
    Some(reduce(&x, m))
}

/// The representative of `x` in `[0, m)`. `m` must be nonzero.
pub fn reduce(x: &BigInt, m: &Natural) -> Natural {
    let m_signed = BigInt::from(m.clone());
    x.mod_floor(&m_signed).into_parts().1
}

/// `base^exp mod m`, in `[0, m)`. Rejects `m = 0`.
pub fn mod_pow(base: &Natural, exp: &Natural, m: &Natural) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(base.modpow(exp, m))
}

/// Primality test; exact below 2^64, probabilistic (40 rounds) above.
pub fn is_prime(n: &Natural) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &small_primes()[..64] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let shift = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> shift;

    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(n));
    let low = BigUint::from(2u32);
    let high = n - 1u32;
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&low, &high);
        miller_rabin_round(n, &n_minus_one, &odd, shift, &a)
    })
}

// Rounds for a given candidate are reproducible run to run.
fn seed_for(n: &Natural) -> u64 {
    n.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15, |acc, d| {
        (acc ^ d).rotate_left(23).wrapping_mul(0x100_0000_01b3)
    })
}

fn miller_rabin_round(
    n: &Natural,
    n_minus_one: &Natural,
    odd: &Natural,
    shift: u64,
    a: &Natural,
) -> bool {
    let mut x = a.modpow(odd, n);
    if x.is_one() || x == *n_minus_one {
        return true;
    }
    for _ in 1..shift {
        x = (&x * &x) % n;
        if x == *n_minus_one {
            return true;
        }
    }
    false
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MILLER_RABIN_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    let shift = (n - 1).trailing_zeros();
    let odd = (n - 1) >> shift;
    'witness: for &a in &MILLER_RABIN_BASES {
        let mut x = pow(a, odd);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..shift {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
