use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{MonomialElement, Permutation};
use crate::cyclotomic::{lcm, reduce, CycInt};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 2_000_000;

/// A finite monomial group with its full element list.
///
/// All elements share one modulus `N`, the lcm of the generator moduli, so
/// equality and hashing are structural.
#[derive(Clone, Debug)]
pub struct MonomialGroup {
    dim: usize,
    modulus: u64,
    generators: Vec<MonomialElement>,
    elements: Vec<MonomialElement>,
    diag_subgroup: Vec<usize>,
    diag_generators: Vec<MonomialElement>,
}

/// Breadth-first closure of `generators` under composition.
pub fn generate_closure(generators: &[MonomialElement], cap: usize) -> Result<MonomialGroup> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let dim = first.dim();
    if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: g.dim(),
        });
    }
    let modulus = generators.iter().fold(1, |m, g| lcm(m, g.modulus()));
    let gens: Vec<MonomialElement> = generators.iter().map(|g| g.rescale(modulus)).collect::<Result<_>>()?;

    let identity = MonomialElement::identity(dim, modulus);
    let mut seen: HashSet<MonomialElement> = HashSet::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let next = elements[i].compose_same_modulus(g);
            if !seen.contains(&next) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }

    let diag_subgroup: Vec<usize> = (0..elements.len()).filter(|&i| elements[i].is_diagonal()).collect();
    let diag_generators = abelian_generating_set(diag_subgroup.iter().map(|&i| &elements[i]), dim, modulus);
    Ok(MonomialGroup {
        dim,
        modulus,
        generators: gens,
        elements,
        diag_subgroup,
        diag_generators,
    })
}

// Greedy generating set of a finite abelian group given by its elements.
fn abelian_generating_set<'a>(
    elements: impl Iterator<Item = &'a MonomialElement>,
    dim: usize,
    modulus: u64,
) -> Vec<MonomialElement> {
    let mut span: HashSet<MonomialElement> = HashSet::from([MonomialElement::identity(dim, modulus)]);
    let mut gens = Vec::new();
    for x in elements {
        if span.contains(x) {
            continue;
        }
        let mut grown = span.clone();
        let mut power = x.clone();
        while !power.is_identity() {
            for h in &span {
                grown.insert(h.compose_same_modulus(&power));
            }
            power = power.compose_same_modulus(x);
        }
        span = grown;
        gens.push(x.clone());
    }
    gens
}

impl MonomialGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Generators, rescaled to the group modulus.
    pub fn generators(&self) -> &[MonomialElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[MonomialElement] {
        &self.elements
    }

    /// The normal subgroup `D` of elements with trivial permutation part.
    pub fn diag_subgroup(&self) -> impl ExactSizeIterator<Item = &MonomialElement> + '_ {
        self.diag_subgroup.iter().map(|&i| &self.elements[i])
    }

    pub fn diag_order(&self) -> usize {
        self.diag_subgroup.len()
    }

    /// A generating set of `D`, chosen greedily in closure order.
    pub fn diag_generators(&self) -> &[MonomialElement] {
        &self.diag_generators
    }

    pub fn contains(&self, g: &MonomialElement) -> bool {
        g.rescale(self.modulus).is_ok_and(|g| self.elements.contains(&g))
    }

    /// Distinct permutation parts, i.e. the image of `G -> S_n`.
    pub fn permutation_image(&self) -> Vec<Permutation> {
        let set: HashSet<&Permutation> = self.elements.iter().map(|g| g.perm()).collect();
        let mut out: Vec<Permutation> = set.into_iter().cloned().collect();
        out.sort();
        out
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = vec![false; self.dim];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for g in &self.generators {
                let j = g.perm().apply(i);
                if !reached[j] {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    pub fn is_special_linear(&self) -> bool {
        self.generators.iter().all(MonomialElement::is_special_linear)
    }

    /// `sum_g tr(g) * conj(tr(g))`, exact.
    ///
    /// Each term is a double sum over fixed points, so the whole thing is
    /// accumulated as a histogram of exponent differences and reduced once.
    pub fn character_norm(&self) -> CycInt {
        let n = self.modulus as usize;
        let histogram = self
            .elements
            .par_chunks(4096)
            .map(|chunk| {
                let mut h = vec![0u64; n];
                let mut fixed = Vec::with_capacity(self.dim);
                for g in chunk {
                    fixed.clear();
                    fixed.extend(g.fixed_point_twists());
                    for &a in &fixed {
                        for &b in &fixed {
                            h[((a + self.modulus - b) % self.modulus) as usize] += 1;
                        }
                    }
                }
                h
            })
            .reduce(
                || vec![0u64; n],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        let raw: Vec<BigInt> = histogram.into_iter().map(BigInt::from).collect();
        reduce(self.modulus, &raw)
    }

    /// Character criterion: irreducible iff the norm sum equals `|G|`.
    pub fn is_irreducible(&self) -> bool {
        self.character_norm().equals_integer(self.order())
    }

    pub fn quasi_reflections(&self) -> Vec<MonomialElement> {
        self.elements
            .iter()
            .filter(|g| g.is_quasi_reflection())
            .cloned()
            .collect()
    }

    /// `g x g^-1` stays in `D` for every generator `g` and every `x` in `D`.
    pub fn diag_subgroup_is_normal(&self) -> bool {
        let d: HashSet<&MonomialElement> = self.diag_subgroup().collect();
        self.generators.iter().all(|g| {
            let g_inv = g.inverse();
            self.diag_subgroup().all(|x| {
                let c = g.compose_same_modulus(x).compose_same_modulus(&g_inv);
                d.contains(&c)
            })
        })
    }
}
