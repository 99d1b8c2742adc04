use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::{gcd, lcm, reduce, CycInt, RootOfUnity};
use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for length {n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("image {} repeated", i + 1)));
            }
        }
        Ok(Self(images))
    }

    /// From 1-based images, e.g. `[2, 3, 4, 5, 1]` for the cyclic shift.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("images are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(zero_based)
    }

    /// From disjoint cycles in 1-based notation: `from_cycles(5, &[&[2, 5], &[3, 4]])`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidPermutation(format!("cycle entry out of range 1..={n}")));
                }
                if std::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::InvalidPermutation(format!("{a} appears in two cycles")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().map(|&j| other.0[j]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The diagonal matrix `[n, a_1, .., a_dim]` multiplying `x_i` by `zeta_n^{a_i}`,
/// always stored with the minimal `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalElement {
    modulus: u64,
    exps: Vec<u64>,
}

impl DiagonalElement {
    pub fn new(modulus: u64, exps: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus);
        }
        let exps: Vec<u64> = exps.iter().map(|&a| a.rem_euclid(modulus as i64) as u64).collect();
        Ok(Self::canonical(modulus, exps))
    }

    fn canonical(modulus: u64, exps: Vec<u64>) -> Self {
        let g = exps.iter().fold(modulus, |g, &a| gcd(g, a));
        Self {
            modulus: modulus / g,
            exps: exps.into_iter().map(|a| a / g).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            modulus: 1,
            exps: vec![0; dim],
        }
    }

    /// `zeta_n^k * Id`
    pub fn scalar(dim: usize, modulus: u64, k: i64) -> Result<Self> {
        Self::new(modulus, &vec![k; dim])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    /// Multiplicative order, which equals the minimal modulus.
    pub fn order(&self) -> u64 {
        self.modulus
    }

    pub fn is_scalar(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_special_linear(&self) -> bool {
        self.exps.iter().sum::<u64>() % self.modulus == 0
    }

    pub fn entry(&self, i: usize) -> RootOfUnity {
        RootOfUnity::new(self.modulus, self.exps[i] as i64)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let m = lcm(self.modulus, other.modulus);
        let (s, t) = (m / self.modulus, m / other.modulus);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| (a * s + b * t) % m)
            .collect();
        Ok(Self::canonical(m, exps))
    }

    pub fn pow(&self, k: i64) -> Self {
        let n = self.modulus as i128;
        let exps = self
            .exps
            .iter()
            .map(|&a| (a as i128 * k as i128).rem_euclid(n) as u64)
            .collect();
        Self::canonical(self.modulus, exps)
    }

    pub fn to_monomial(&self) -> MonomialElement {
        MonomialElement {
            modulus: self.modulus,
            perm: Permutation::identity(self.dim()),
            twist: self.exps.clone(),
        }
    }
}

impl fmt::Display for DiagonalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.modulus)?;
        for a in &self.exps {
            write!(f, ",{a}")?;
        }
        write!(f, "]")
    }
}

/// A monomial matrix: the linear map `(g v)_i = zeta_N^{twist[i]} v_{perm(i)}`.
///
/// On polynomials `g(f) = f . g`, so the monomial `prod x_i^{e_i}` goes to
/// `zeta_N^{sum e_i twist[i]} prod x_{perm(i)}^{e_i}`. The cyclic shift
/// `tau: (x1, .., x5) -> (x2, .., x5, x1)` has `perm = [1, 2, 3, 4, 0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialElement {
    modulus: u64,
    perm: Permutation,
    twist: Vec<u64>,
}

impl MonomialElement {
    pub fn new(perm: Permutation, modulus: u64, twist: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus);
        }
        if twist.len() != perm.len() {
            return Err(Error::DimensionMismatch {
                expected: perm.len(),
                found: twist.len(),
            });
        }
        let twist = twist.iter().map(|&a| a.rem_euclid(modulus as i64) as u64).collect();
        Ok(Self { modulus, perm, twist })
    }

    pub fn permutation(perm: Permutation) -> Self {
        let n = perm.len();
        Self {
            modulus: 1,
            perm,
            twist: vec![0; n],
        }
    }

    pub fn identity(dim: usize, modulus: u64) -> Self {
        Self {
            modulus,
            perm: Permutation::identity(dim),
            twist: vec![0; dim],
        }
    }

    /// The cyclic coordinate shift `(x1, .., xn) -> (x2, .., xn, x1)`.
    pub fn cyclic_shift(dim: usize) -> Self {
        let perm = Permutation((0..dim).map(|i| (i + 1) % dim).collect());
        Self::permutation(perm)
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn twist(&self) -> &[u64] {
        &self.twist
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.twist.iter().all(|&t| t == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.is_identity()
    }

    /// The twist as a diagonal element in minimal form (ignores the permutation).
    pub fn twist_part(&self) -> DiagonalElement {
        DiagonalElement::canonical(self.modulus, self.twist.clone())
    }

    /// Re-express over a multiple of the current modulus.
    pub fn rescale(&self, modulus: u64) -> Result<Self> {
        if modulus == 0 || !modulus.is_multiple_of(self.modulus) {
            return Err(Error::InvalidModulus);
        }
        let k = modulus / self.modulus;
        Ok(Self {
            modulus,
            perm: self.perm.clone(),
            twist: self.twist.iter().map(|t| t * k).collect(),
        })
    }

    /// Smallest modulus that expresses the same element.
    pub fn minimized(&self) -> Self {
        let g = self.twist.iter().fold(self.modulus, |g, &a| gcd(g, a));
        Self {
            modulus: self.modulus / g,
            perm: self.perm.clone(),
            twist: self.twist.iter().map(|t| t / g).collect(),
        }
    }

    /// The linear map `self . other` (apply `other` first). On polynomials this
    /// is `f -> other(self(f))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if self.modulus != other.modulus {
            let m = lcm(self.modulus, other.modulus);
            return self.rescale(m)?.compose(&other.rescale(m)?);
        }
        Ok(self.compose_same_modulus(other))
    }

    pub(crate) fn compose_same_modulus(&self, other: &Self) -> Self {
        let m = self.modulus;
        let twist = (0..self.dim())
            .map(|i| (self.twist[i] + other.twist[self.perm.apply(i)]) % m)
            .collect();
        Self {
            modulus: m,
            perm: self.perm.then(&other.perm),
            twist,
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let m = self.modulus;
        let twist = (0..self.dim()).map(|j| (m - self.twist[inv.apply(j)]) % m).collect();
        Self {
            modulus: m,
            perm: inv,
            twist,
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.dim(), self.modulus);
        for _ in 0..k {
            acc = acc.compose_same_modulus(self);
        }
        acc
    }

    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose_same_modulus(self);
            k += 1;
        }
        k
    }

    /// `sign(perm) * zeta_N^{sum twist}`.
    pub fn determinant(&self) -> RootOfUnity {
        let sum: u64 = self.twist.iter().sum();
        let d = RootOfUnity::new(self.modulus, sum as i64);
        if self.perm.is_even() {
            d
        } else {
            d.mul(&RootOfUnity::new(2, 1))
        }
    }

    pub fn is_special_linear(&self) -> bool {
        self.determinant().is_one()
    }

    pub fn trace(&self) -> CycInt {
        let mut raw = vec![BigInt::zero(); self.modulus as usize];
        for i in 0..self.dim() {
            if self.perm.apply(i) == i {
                raw[self.twist[i] as usize] += 1;
            }
        }
        reduce(self.modulus, &raw)
    }

    /// Twist exponents at the fixed points of the permutation.
    pub(crate) fn fixed_point_twists(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.dim())
            .filter(|&i| self.perm.apply(i) == i)
            .map(|i| self.twist[i])
    }

    /// Product of the scalars around each permutation cycle, as exponents mod N,
    /// alongside the cycle length.
    pub fn cycle_scalars(&self) -> Vec<(usize, u64)> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| (c.len(), c.iter().map(|&i| self.twist[i]).sum::<u64>() % self.modulus))
            .collect()
    }

    /// A cycle block with scalar product `c` has eigenvalues the `len`-th roots
    /// of `c`, so it contributes eigenvalue 1 exactly once iff `c = 1`.
    pub fn eigenvalue_one_multiplicity(&self) -> usize {
        self.cycle_scalars().iter().filter(|(_, s)| *s == 0).count()
    }

    pub fn is_quasi_reflection(&self) -> bool {
        !self.is_identity() && self.eigenvalue_one_multiplicity() + 1 == self.dim()
    }

    /// Image of the exponent vector under the permutation, with the scalar
    /// exponent (mod N) the twist contributes.
    pub fn act_on_exponents(&self, exps: &[u32]) -> (Vec<u32>, u64) {
        let mut image = vec![0; exps.len()];
        let mut weight = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            image[self.perm.apply(i)] = e;
            weight += e as u64 * self.twist[i];
        }
        (image, weight % self.modulus)
    }

    /// `lambda * self` with `lambda` the root of unity of least exponent making
    /// the determinant 1. The modulus grows to `lcm(N, n * ord(det))`.
    pub fn normalize_to_sl(&self) -> Result<Self> {
        let n = self.dim() as u64;
        let det = self.determinant();
        if det.is_one() {
            return Ok(self.clone());
        }
        let target = lcm(self.modulus, n * det.order());
        let det = det
            .rescale(target)
            .expect("target is a multiple of the determinant order");
        let lifted = self.rescale(target)?;
        // n * k = -e (mod target)
        let e = (target - det.exponent()) % target;
        let k = (0..target)
            .find(|k| (n * k) % target == e)
            .ok_or(Error::NoSolution { modulus: target })?;
        let twist = lifted.twist.iter().map(|t| (t + k) % target).collect();
        Ok(Self {
            modulus: target,
            perm: lifted.perm,
            twist,
        })
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimized();
        write!(f, "{} ", m.perm)?;
        write!(
            f,
            "{}",
            DiagonalElement {
                modulus: m.modulus,
                exps: m.twist
            }
        )
    }
}
