use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::{gcd, lcm, CycInt};

/// `zeta_N^k` stored as the residue `k mod N`.
///
/// Equality, ordering and hashing all look through the modulus: `zeta_4^2`,
/// `zeta_2^1` and `zeta_6^3` are the same value. Ordering is by the angle
/// `k / N` in `[0, 1)`.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnity {
    modulus: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(modulus: u64, exponent: i64) -> Self {
        assert!(modulus > 0, "root of unity modulus must be positive");
        Self {
            modulus,
            exponent: exponent.rem_euclid(modulus as i64) as u64,
        }
    }

    pub fn one() -> Self {
        Self {
            modulus: 1,
            exponent: 0,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// Lowest-terms presentation: the modulus becomes the multiplicative order.
    pub fn reduced(&self) -> Self {
        let g = gcd(self.modulus, self.exponent);
        Self {
            modulus: self.modulus / g,
            exponent: self.exponent / g,
        }
    }

    pub fn order(&self) -> u64 {
        self.reduced().modulus
    }

    /// Re-express over a multiple of the current modulus.
    pub fn rescale(&self, modulus: u64) -> Option<Self> {
        let reduced = self.reduced();
        modulus.is_multiple_of(reduced.modulus).then(|| Self {
            modulus,
            exponent: reduced.exponent * (modulus / reduced.modulus),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = lcm(self.modulus, other.modulus);
        let a = self.exponent * (m / self.modulus);
        let b = other.exponent * (m / other.modulus);
        Self {
            modulus: m,
            exponent: (a + b) % m,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let m = self.modulus as i128;
        let e = (self.exponent as i128 * k as i128).rem_euclid(m);
        Self {
            modulus: self.modulus,
            exponent: e as u64,
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn conj(&self) -> Self {
        self.inv()
    }

    pub fn to_cycint(&self) -> CycInt {
        CycInt::root(self.modulus, self.exponent)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI * self.exponent as f64 / self.modulus as f64,
        )
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        self.exponent as u128 * other.modulus as u128 == other.exponent as u128 * self.modulus as u128
    }
}

impl Eq for RootOfUnity {}

impl Hash for RootOfUnity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.modulus.hash(state);
        r.exponent.hash(state);
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.exponent as u128 * other.modulus as u128).cmp(&(other.exponent as u128 * self.modulus as u128))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        write!(f, "zeta_{}^{}", r.modulus, r.exponent)
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
