//! Constructive Chinese Remainder Theorem.
//!
//! For pairwise coprime moduli `m_1, ..., m_n` with product `M`, the basis
//! element `h_k` is the residue mod `M` that is 1 mod `m_k` and 0 mod every
//! other `m_j`. Writing `g_k = 1 - h_k` gives `1 = g_k + h_k` with `g_k`
//! divisible by `m_k` and `h_k` divisible by every other modulus. Any system
//! `x = f_k (mod m_k)` is then solved by `x = sum f_k h_k (mod M)`, and
//! `x + MZ` is the full solution set.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{mod_inverse, reduce, Factorization, Natural};
use crate::error::{Error, Result};
use crate::residue::Residue;

/// Simultaneous congruences `x = r_k (mod m_k)` with pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    constraints: Vec<(Natural, Natural)>,
}

impl CongruenceSystem {
    /// Builds a system from `(remainder, modulus)` pairs. Remainders may be
    /// negative and are reduced into `[0, m_k)`.
    pub fn new<I, R, M>(constraints: I) -> Result<Self>
    where
        I: IntoIterator<Item = (R, M)>,
        R: Into<BigInt>,
        M: Into<Natural>,
    {
        let mut out = Vec::new();
        for (r, m) in constraints {
            let m = m.into();
            if m.is_zero() {
                return Err(Error::ZeroModulus);
            }
            out.push((reduce(&r.into(), &m), m));
        }
        if out.is_empty() {
            return Err(Error::EmptySystem);
        }
        let moduli: Vec<Natural> = out.iter().map(|(_, m)| m.clone()).collect();
        check_pairwise_coprime(&moduli)?;
        Ok(CongruenceSystem { constraints: out })
    }

    /// `(remainder, modulus)` pairs with remainders canonicalized.
    pub fn constraints(&self) -> &[(Natural, Natural)] {
        &self.constraints
    }

    pub fn moduli(&self) -> Vec<Natural> {
        self.constraints.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Product of the moduli.
    pub fn big_modulus(&self) -> Natural {
        self.constraints.iter().map(|(_, m)| m).product()
    }
}

fn check_pairwise_coprime(moduli: &[Natural]) -> Result<()> {
    for (i, a) in moduli.iter().enumerate() {
        for (j, b) in moduli.iter().enumerate().skip(i + 1) {
            let g = a.gcd(b);
            if !g.is_one() {
                return Err(Error::NonCoprimeModuli { i, j, gcd: g });
            }
        }
    }
    Ok(())
}

/// Orthogonal idempotent basis `(h_1, ..., h_n)` of Z/MZ for a list of
/// pairwise coprime moduli.
///
/// `h_k = 1 (mod m_k)`, `h_k = 0 (mod m_j)` for `j != k`, so the `h_k` are
/// idempotent, pairwise orthogonal and sum to 1 mod `M`. A modulus equal to
/// 1 gets `h = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtBasis {
    moduli: Vec<Natural>,
    big_modulus: Natural,
    elements: Vec<Natural>,
}

impl CrtBasis {
    pub fn moduli(&self) -> &[Natural] {
        &self.moduli
    }

    pub fn big_modulus(&self) -> &Natural {
        &self.big_modulus
    }

    pub fn elements(&self) -> &[Natural] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `h_k` as a residue mod `M`.
    pub fn element(&self, k: usize) -> Residue {
        Residue::from_natural(&self.elements[k], &self.big_modulus)
            .expect("basis modulus is nonzero")
    }

    /// `g_k = 1 - h_k (mod M)`, the partner of `h_k` in `1 = g_k + h_k`.
    /// It is divisible by `m_k`.
    pub fn cofactor_element(&self, k: usize) -> Residue {
        let one = Residue::one(&self.big_modulus).expect("basis modulus is nonzero");
        one.sub(&self.element(k)).expect("same modulus")
    }

    /// `sum_k r_k h_k (mod M)`. Panics if `remainders.len() != self.len()`.
    pub fn combine(&self, remainders: &[Natural]) -> Residue {
        assert_eq!(
            remainders.len(),
            self.elements.len(),
            "one remainder per modulus"
        );
        let sum: Natural = remainders
            .iter()
            .zip(&self.elements)
            .map(|(r, h)| r * h)
            .sum();
        Residue::from_natural(&sum, &self.big_modulus).expect("basis modulus is nonzero")
    }
}

/// Computes the CRT basis for pairwise coprime moduli.
///
/// `h_k = (M/m_k) * ((M/m_k)^-1 mod m_k) mod M`. An empty list gives the
/// empty basis of the zero ring (`M = 1`).
pub fn crt_basis(moduli: &[Natural]) -> Result<CrtBasis> {
    if moduli.iter().any(Zero::is_zero) {
        return Err(Error::ZeroModulus);
    }
    check_pairwise_coprime(moduli)?;
    let big_modulus: Natural = moduli.iter().product();
    let elements = moduli
        .iter()
        .map(|m_k| {
            let cofactor = &big_modulus / m_k;
            let inverse = mod_inverse(&(&cofactor % m_k), m_k)
                .expect("cofactor is a unit mod m_k for coprime moduli");
            (cofactor * inverse) % &big_modulus
        })
        .collect();
    Ok(CrtBasis {
        moduli: moduli.to_vec(),
        big_modulus,
        elements,
    })
}

/// The unique `x` in `[0, M)` satisfying every congruence of `system`.
pub fn crt_solve(system: &CongruenceSystem) -> Result<Residue> {
    let basis = crt_basis(&system.moduli())?;
    let remainders: Vec<Natural> = system.constraints.iter().map(|(r, _)| r.clone()).collect();
    Ok(basis.combine(&remainders))
}

/// Splits `r` into its images `r mod p_k^c_k` under Z/mZ -> prod Z/p_k^c_k Z.
pub fn crt_split(r: &Residue, f: &Factorization) -> Result<Vec<Residue>> {
    if r.modulus() != f.modulus() {
        return Err(Error::ModulusMismatch {
            left: r.modulus().clone(),
            right: f.modulus().clone(),
        });
    }
    f.prime_powers()
        .iter()
        .map(|q| Residue::from_natural(r.value(), q))
        .collect()
}

/// Inverse of [`crt_split`]: recombines per-prime-power residues into Z/mZ.
pub fn crt_join(parts: &[Residue]) -> Result<Residue> {
    if parts.is_empty() {
        return Residue::zero(&BigUint::one());
    }
    let system = CongruenceSystem::new(
        parts
            .iter()
            .map(|p| (BigInt::from(p.value().clone()), p.modulus().clone())),
    )?;
    crt_solve(&system)
}
