use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{reduce, Natural};
use crate::error::{Error, Result};

/// An element of Z/mZ, stored as its canonical representative in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: Natural,
    modulus: Natural,
}

impl Residue {
    /// Reduces any integer (negative included) into `[0, m)`.
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<Natural>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let value = reduce(&value.into(), &modulus);
        Ok(Residue { value, modulus })
    }

    /// Like [`Residue::new`] for an unsigned value.
    pub fn from_natural(value: &Natural, modulus: &Natural) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(Residue {
            value: value % modulus,
            modulus: modulus.clone(),
        })
    }

    pub fn zero(modulus: &Natural) -> Result<Self> {
        Self::from_natural(&BigUint::zero(), modulus)
    }

    pub fn one(modulus: &Natural) -> Result<Self> {
        Self::from_natural(&BigUint::from(1u32), modulus)
    }

    pub fn value(&self) -> &Natural {
        &self.value
    }

    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    pub fn into_value(self) -> Natural {
        self.value
    }

    pub(crate) fn with_value(&self, value: Natural) -> Residue {
        Residue {
            value: value % &self.modulus,
            modulus: self.modulus.clone(),
        }
    }

    pub(crate) fn check_same_ring(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.clone(),
                right: other.modulus.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.check_same_ring(other)?;
        Ok(self.with_value(&self.value + &other.value))
    }

    pub fn sub(&self, other: &Residue) -> Result<Residue> {
        self.check_same_ring(other)?;
        Ok(self.with_value(&self.value + &self.modulus - &other.value))
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        self.check_same_ring(other)?;
        Ok(self.with_value(&self.value * &other.value))
    }

    pub fn square(&self) -> Residue {
        self.with_value(&self.value * &self.value)
    }

    pub fn pow(&self, exp: &Natural) -> Residue {
        Residue {
            value: self.value.modpow(exp, &self.modulus),
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}
