use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclotomic::RootOfUnity;
use crate::monogroup::{DiagonalElement, Permutation};

/// `prod x_i^{exps[i]}`.
///
/// The canonical order lists `x1^d` first and then descends lexicographically
/// in the exponent vector, so "least" means "earliest in that listing".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Relabel variables: `x_i -> x_{perm(i)}`.
    pub fn permuted(&self, perm: &Permutation) -> Self {
        let mut image = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            image[perm.apply(i)] = e;
        }
        Self { exps: image }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{e}", i + 1)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All `C(n + d - 1, d)` monomials of degree `d` in `n` variables, in canonical order.
pub fn monomials_of_degree(dim: usize, degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, remaining - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if dim == 0 {
        return out;
    }
    fill(&mut Vec::with_capacity(dim), degree, dim, &mut out);
    out
}

/// Orbits of `monomials` under the group generated by `perms`, each sorted,
/// ordered by their least member. Images falling outside the list are ignored.
pub fn orbit_decomposition(monomials: &[Monomial], perms: &[Permutation]) -> Vec<Vec<Monomial>> {
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut orbit_of = vec![usize::MAX; monomials.len()];
    let mut orbits: Vec<Vec<Monomial>> = Vec::new();
    let mut order: Vec<usize> = (0..monomials.len()).collect();
    order.sort_by(|&a, &b| monomials[a].cmp(&monomials[b]));
    for start in order {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let m = &monomials[members[k]];
            for p in perms {
                if let Some(&j) = index.get(&m.permuted(p)) {
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                    }
                }
            }
            k += 1;
        }
        let mut orbit: Vec<Monomial> = members.into_iter().map(|i| monomials[i].clone()).collect();
        orbit.sort();
        orbits.push(orbit);
    }
    orbits
}

/// The scalar `zeta_n^{sum a_i e_i}` by which the diagonal element scales `m`.
pub fn weight_of(m: &Monomial, g: &DiagonalElement) -> RootOfUnity {
    assert_eq!(m.dim(), g.dim(), "dimension mismatch");
    let n = g.modulus();
    let e: u64 = m.exps.iter().zip(g.exps()).map(|(&e, &a)| e as u64 * a % n).sum();
    RootOfUnity::new(n, (e % n) as i64)
}
