use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::polynomial::cyclotomic_shared;
use super::{euler_phi, lcm};

/// An element of `Z[zeta_N]` in canonical form: the coefficient vector of its
/// residue modulo `Phi_N`, of length exactly `phi(N)`.
#[derive(Clone, Debug)]
pub struct CycInt {
    modulus: u64,
    coeffs: Vec<BigInt>,
}

/// Canonical form of `sum_k raw[k] * zeta_N^k`. Indices are taken mod `N`.
pub fn reduce(modulus: u64, raw: &[BigInt]) -> CycInt {
    assert!(modulus > 0, "cyclotomic modulus must be positive");
    let n = modulus as usize;
    let mut folded = vec![BigInt::zero(); n];
    for (k, c) in raw.iter().enumerate() {
        if !c.is_zero() {
            folded[k % n] += c;
        }
    }
    reduce_folded(modulus, folded)
}

/// [`reduce`] for small integer input.
pub fn reduce_i64(modulus: u64, raw: &[i64]) -> CycInt {
    let raw: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
    reduce(modulus, &raw)
}

// `folded` has length exactly N (or shorter).
fn reduce_folded(modulus: u64, mut folded: Vec<BigInt>) -> CycInt {
    let phi = cyclotomic_shared(modulus);
    let deg = phi.degree().expect("cyclotomic polynomials are nonzero");
    let pc = phi.coeffs();
    if folded.len() < deg {
        folded.resize(deg, BigInt::zero());
    }
    for k in (deg..folded.len()).rev() {
        let c = std::mem::take(&mut folded[k]);
        if c.is_zero() {
            continue;
        }
        for (j, pj) in pc[..deg].iter().enumerate() {
            if !pj.is_zero() {
                folded[k - deg + j] -= &c * pj;
            }
        }
    }
    folded.truncate(deg);
    CycInt {
        modulus,
        coeffs: folded,
    }
}

impl CycInt {
    pub fn zero(modulus: u64) -> Self {
        Self {
            modulus,
            coeffs: vec![BigInt::zero(); euler_phi(modulus) as usize],
        }
    }

    pub fn from_integer(modulus: u64, m: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(modulus);
        out.coeffs[0] = m.into();
        out
    }

    /// `zeta_N^k`
    pub fn root(modulus: u64, exponent: u64) -> Self {
        let mut raw = vec![BigInt::zero(); modulus as usize];
        raw[(exponent % modulus) as usize] = BigInt::one();
        reduce_folded(modulus, raw)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn equals_integer(&self, m: impl Into<BigInt>) -> bool {
        let m = m.into();
        self.coeffs[0] == m && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Re-express over a multiple `target` of the current modulus.
    pub fn rescale(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.modulus),
            "rescale target must be a multiple of {}",
            self.modulus
        );
        if target == self.modulus {
            return self.clone();
        }
        let k = (target / self.modulus) as usize;
        let mut raw = vec![BigInt::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * k] = c.clone();
        }
        reduce_folded(target, raw)
    }

    /// Inverse of [`CycInt::rescale`]: express `self` over a divisor `target`
    /// of its modulus, if the value lies in that subring.
    #[allow(clippy::needless_range_loop)]
    pub fn restrict(&self, target: u64) -> Option<Self> {
        assert!(
            self.modulus.is_multiple_of(target),
            "restrict target must divide {}",
            self.modulus
        );
        if target == self.modulus {
            return Some(self.clone());
        }
        let rows = self.coeffs.len();
        let cols = euler_phi(target) as usize;
        let images: Vec<CycInt> = (0..cols as u64)
            .map(|i| CycInt::root(target, i).rescale(self.modulus))
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = images
                    .iter()
                    .map(|e| BigRational::from_integer(e.coeffs[r].clone()))
                    .collect();
                row.push(BigRational::from_integer(self.coeffs[r].clone()));
                row
            })
            .collect();

        let mut pivots = Vec::with_capacity(cols);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=cols {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        // Inconsistent rows mean the value is outside the subring.
        if m[r..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); cols];
        for (row, &c) in pivots.iter().enumerate() {
            let v = &m[row][cols];
            if !v.is_integer() {
                return None;
            }
            coeffs[c] = v.to_integer();
        }
        Some(Self {
            modulus: target,
            coeffs,
        })
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm(a.modulus, b.modulus);
        (a.rescale(m), b.rescale(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.modulus == other.modulus {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
            return Self {
                modulus: self.modulus,
                coeffs,
            };
        }
        let (a, b) = Self::aligned(self, other);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        Self {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.modulus != other.modulus {
            let (a, b) = Self::aligned(self, other);
            return a.mul(&b);
        }
        let mut raw = vec![BigInt::zero(); self.modulus as usize];
        let n = self.modulus as usize;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[(i + j) % n] += a * b;
            }
        }
        reduce_folded(self.modulus, raw)
    }

    /// Complex conjugation, `zeta^k -> zeta^(N-k)`.
    pub fn conj(&self) -> Self {
        let n = self.modulus as usize;
        let mut raw = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] = c.clone();
        }
        reduce_folded(self.modulus, raw)
    }

    /// Value at `zeta_N = exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.modulus as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n) * c
            })
            .sum()
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycInt {}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "zeta_{}^{k}", self.modulus)?,
                (_, false) => write!(f, "{abs}*zeta_{}^{k}", self.modulus)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn full_root_sum_vanishes() {
        assert!(reduce_i64(5, &[1, 1, 1, 1, 1]).is_zero());
        assert!(reduce_i64(5, &[1, 1, 1, 1, 1]).equals_integer(0));
    }

    #[test]
    fn zeta4_is_canonical() {
        let z = reduce_i64(4, &[0, 1, 0, 0]);
        assert_eq!(z.coeffs(), v(&[0, 1]).as_slice());
    }

    #[test]
    fn zeta6_cubed_is_minus_one() {
        let z = reduce_i64(6, &[0, 0, 0, 1, 0, 0]);
        assert_eq!(z.coeffs(), v(&[-1, 0]).as_slice());
        assert!((z.to_complex() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn ring_examples() {
        assert_eq!(CycInt::root(5, 1).conj(), CycInt::root(5, 4));
        assert!(CycInt::root(4, 1).mul(&CycInt::root(4, 1)).equals_integer(-1));
        assert!(!CycInt::root(5, 1).equals_integer(1));
        assert!(CycInt::root(7, 1).mul(&CycInt::root(7, 6)).equals_integer(1));
    }

    #[test]
    fn mixed_moduli_sum() {
        // zeta_2 + zeta_3 = zeta_6^3 + zeta_6^2
        let s = CycInt::root(2, 1).add(&CycInt::root(3, 1));
        assert_eq!(s.modulus(), 6);
        let expected = reduce_i64(6, &[0, 0, 1, 1, 0, 0]);
        assert_eq!(s, expected);
        assert_eq!(s.coeffs(), v(&[-2, 1]).as_slice());
        let numeric = Complex64::new(-1.0, 0.0) + Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((s.to_complex() - numeric).norm() < 1e-12);
    }

    #[test]
    fn rescale_and_restrict() {
        let x = reduce_i64(12, &[3, -1, 0, 2, 0, 0, 5, 0, 0, 0, 0, 7]);
        let up = x.rescale(60);
        assert_eq!(up, x);
        assert_eq!(up.restrict(12).unwrap().coeffs(), x.coeffs());
        // zeta_8 is not in Z[zeta_4]
        assert!(CycInt::root(8, 1).restrict(4).is_none());
        assert_eq!(CycInt::root(8, 2).restrict(4).unwrap(), CycInt::root(4, 1));
    }

    #[test]
    fn display() {
        assert_eq!(CycInt::from_integer(5, 3).to_string(), "3");
        assert_eq!(reduce_i64(5, &[1, 0, -2]).to_string(), "1 - 2*zeta_5^2");
        assert_eq!(CycInt::zero(7).to_string(), "0");
    }
}
