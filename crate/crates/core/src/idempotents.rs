//! Idempotents of Z/mZ.
//!
//! With `m = p_1^c_1 ... p_n^c_n`, Z/mZ splits as the product of the local
//! rings Z/p_k^c_k Z, each of which has only the idempotents 0 and 1. So the
//! idempotents are exactly the subset sums of the primitive idempotents
//! `h_k` (the CRT basis for the prime powers), and there are `2^n` of them.
//!
//! On this set `a ∧ b = ab`, `a ∨ b = a + b - ab` and `a' = 1 - a` form a
//! Boolean algebra, and `a ⊕ b = a + b - 2ab` together with multiplication
//! forms a ring of characteristic 2. Under [`support`] all of this is the
//! algebra of subsets of the prime divisors of `m`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{Factorization, Natural};
use crate::crt::{crt_basis, CrtBasis};
use crate::error::{Error, Result};
use crate::residue::Residue;

/// Largest number of distinct primes for which the full set is enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

/// All idempotents of Z/mZ, ascending, with the primitive basis that
/// generates them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSet {
    modulus: Natural,
    basis: CrtBasis,
    members: Vec<Natural>,
}

impl IdempotentSet {
    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    /// Primitive idempotents, one per prime power, in factorization order.
    pub fn basis(&self) -> &CrtBasis {
        &self.basis
    }

    pub fn members(&self) -> &[Natural] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, value: &Natural) -> bool {
        self.members.binary_search(value).is_ok()
    }

    /// The idempotent `sum_k eps_k h_k`; `eps[k]` selects the `k`-th prime
    /// of the factorization.
    pub fn from_epsilon(&self, eps: &[bool]) -> Residue {
        let selected: Vec<Natural> = eps
            .iter()
            .map(|&e| if e { BigUint::one() } else { BigUint::zero() })
            .collect();
        self.basis.combine(&selected)
    }
}

/// The primitive idempotents `h_k` of Z/mZ, with no cap on the number of
/// primes.
pub fn primitive_basis(f: &Factorization) -> CrtBasis {
    crt_basis(&f.prime_powers()).expect("distinct prime powers are pairwise coprime")
}

/// Enumerates every idempotent of Z/mZ, refusing more than
/// [`DEFAULT_ENUMERATION_CAP`] distinct primes.
pub fn enumerate_idempotents(f: &Factorization) -> Result<IdempotentSet> {
    enumerate_idempotents_with_cap(f, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_idempotents_with_cap(f: &Factorization, cap: usize) -> Result<IdempotentSet> {
    let n = f.num_primes();
    if n > cap {
        return Err(Error::TooManyFactors { n, cap });
    }
    let basis = primitive_basis(f);
    let modulus = f.modulus().clone();

    let mut members: Vec<Natural> = Vec::with_capacity(1 << n);
    members.push(BigUint::zero());
    for h in basis.elements() {
        let shifted: Vec<Natural> = members.iter().map(|x| (x + h) % &modulus).collect();
        members.extend(shifted);
    }
    members.sort();

    Ok(IdempotentSet {
        modulus,
        basis,
        members,
    })
}

pub fn is_idempotent(r: &Residue) -> bool {
    r.square() == *r
}

fn require_idempotent(r: &Residue) -> Result<()> {
    if is_idempotent(r) {
        Ok(())
    } else {
        Err(Error::NotIdempotent {
            value: r.value().clone(),
            modulus: r.modulus().clone(),
        })
    }
}

fn require_pair(a: &Residue, b: &Residue) -> Result<()> {
    a.check_same_ring(b)?;
    require_idempotent(a)?;
    require_idempotent(b)
}

/// `a ∧ b = ab`.
pub fn meet(a: &Residue, b: &Residue) -> Result<Residue> {
    require_pair(a, b)?;
    a.mul(b)
}

/// `a ∨ b = a + b - ab`.
pub fn join(a: &Residue, b: &Residue) -> Result<Residue> {
    require_pair(a, b)?;
    a.add(b)?.sub(&a.mul(b)?)
}

/// `a' = 1 - a`.
pub fn complement(a: &Residue) -> Result<Residue> {
    require_idempotent(a)?;
    Residue::one(a.modulus())?.sub(a)
}

/// `a ⊕ b = a + b - 2ab`, the addition of the Boolean ring of idempotents.
pub fn xor_add(a: &Residue, b: &Residue) -> Result<Residue> {
    require_pair(a, b)?;
    let ab = a.mul(b)?;
    a.add(b)?.sub(&ab.add(&ab)?)
}

/// Indices `k` (into `f.factors()`) with `e = 1 (mod p_k^c_k)`.
///
/// This is the set of primes `p_k` not containing `e`, i.e. the clopen
/// subset of Spec(Z/mZ) = {p_1, ..., p_n} attached to `e`.
pub fn support(e: &Residue, f: &Factorization) -> Result<BTreeSet<usize>> {
    if e.modulus() != f.modulus() {
        return Err(Error::ModulusMismatch {
            left: e.modulus().clone(),
            right: f.modulus().clone(),
        });
    }
    require_idempotent(e)?;
    Ok(f.prime_powers()
        .iter()
        .enumerate()
        .filter(|(_, q)| (e.value() % *q).is_one())
        .map(|(k, _)| k)
        .collect())
}

/// The idempotent whose [`support`] is `indices`.
pub fn from_support(indices: &BTreeSet<usize>, f: &Factorization) -> Result<Residue> {
    let n = f.num_primes();
    if let Some(&index) = indices.iter().find(|&&k| k >= n) {
        return Err(Error::SupportIndexOutOfRange { index, n });
    }
    let basis = primitive_basis(f);
    let eps: Vec<Natural> = (0..n)
        .map(|k| {
            if indices.contains(&k) {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    Ok(basis.combine(&eps))
}

/// The nilradical of Z/mZ: the ideal generated by the radical of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nilradical {
    /// `p_1 ... p_n`; the nilpotents are its multiples in `[0, m)`.
    pub generator: Natural,
    /// `prod p_k^(c_k - 1) = m / rad(m)`.
    pub nilpotent_count: Natural,
}

pub fn nilradical(f: &Factorization) -> Nilradical {
    let generator = f.radical();
    let nilpotent_count = f
        .factors()
        .iter()
        .map(|(p, c)| num_traits::pow(p.clone(), (*c - 1) as usize))
        .product();
    Nilradical {
        generator,
        nilpotent_count,
    }
}
