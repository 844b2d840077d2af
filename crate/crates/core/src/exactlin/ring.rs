use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LinError;

/// The base ring: the integers, or the integers modulo some `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(BigInt),
}

impl RingSpec {
    pub fn zmod(modulus: impl Into<BigInt>) -> Result<Self, LinError> {
        let m = modulus.into();
        if m < BigInt::from(2) {
            return Err(LinError::BadModulus(m));
        }
        Ok(RingSpec::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(m) => Some(m),
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, RingSpec::Integers)
    }

    /// Canonical representative: unchanged over Z, the residue in `[0, m)` over Z/m.
    pub fn reduce(&self, x: BigInt) -> BigInt {
        match self {
            RingSpec::Integers => x,
            RingSpec::IntegersMod(m) => x.mod_floor(m),
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        match self {
            RingSpec::Integers => x.is_zero(),
            RingSpec::IntegersMod(m) => x.mod_floor(m).is_zero(),
        }
    }

    /// Is `x` a unit of the ring?
    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self {
            RingSpec::Integers => x.abs().is_one(),
            RingSpec::IntegersMod(m) => x.gcd(m).is_one(),
        }
    }

    /// Canonical generator of the ideal `(x)`: `|x|` over Z, `gcd(x, m)` over Z/m
    /// (with `m` standing for the zero ideal, which is reported as `0`).
    pub fn ideal_generator(&self, x: &BigInt) -> BigInt {
        match self {
            RingSpec::Integers => x.abs(),
            RingSpec::IntegersMod(m) => {
                let g = x.gcd(m);
                if &g == m {
                    BigInt::zero()
                } else {
                    g
                }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = LinError;

    /// Accepts `Z`, `Z/m` and `Zmod:m` (case-insensitive `z`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("z") {
            return Ok(RingSpec::Integers);
        }
        let rest = t
            .strip_prefix("Z/")
            .or_else(|| t.strip_prefix("z/"))
            .or_else(|| t.strip_prefix("Zmod:"))
            .or_else(|| t.strip_prefix("Zmod"));
        match rest.and_then(|r| r.trim().parse::<BigInt>().ok()) {
            Some(m) => RingSpec::zmod(m),
            None => Err(LinError::BadRing(s.to_string())),
        }
    }
}

/// Inverse of `x` modulo `m`, if it exists.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = x.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
