//! Semi-invariant polynomials of monomial groups.
//!
//! A monomial group permutes monomials up to roots of unity, so every
//! semi-invariant is a sum of pieces supported on single orbits, each with one
//! free coefficient. The solver works class by class:
//!
//! 1. Split the degree-`d` monomials by their weights under a generating set of
//!    the diagonal subgroup `D`.
//! 2. Drop classes that some generator maps off themselves.
//! 3. Within a surviving class, for each orbit ("transport component") and each
//!    candidate character, propagate coefficients along generator edges in a
//!    union-find with root-of-unity potentials; a conflict rules the candidate out.
//! 4. Character candidates for a generator come from its shortest cycle on the
//!    component (`lambda^len = cycle scalar`) and are filtered by its other cycles.
//!
//! Conditions on generators suffice because the action is a homomorphism.

mod monomial;
mod oracle;
mod transport;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::{lcm, RootOfUnity};
use crate::error::{Error, Result};
use crate::monogroup::{MonomialElement, MonomialGroup};

pub use monomial::{monomials_of_degree, orbit_decomposition, weight_of, Monomial};
pub use oracle::{brute_force_semi_invariants, canonical_solutions, ORACLE_MAX_MONOMIALS, ORACLE_MAX_ORDER};
pub use transport::{Conflict, PotentialUnionFind};

/// `(monomial, coefficient)` pairs.
pub type Terms = Vec<(Monomial, RootOfUnity)>;

/// A polynomial whose coefficients are single roots of unity. The first term
/// is the least monomial of its support and has coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiInvariant {
    terms: Vec<(Monomial, RootOfUnity)>,
}

impl SemiInvariant {
    pub fn new(terms: Vec<(Monomial, RootOfUnity)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, RootOfUnity)] {
        &self.terms
    }

    pub fn representative(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Terms sorted by monomial, for order-insensitive comparison.
    pub fn canonical_terms(&self) -> Vec<(Monomial, RootOfUnity)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| a.0.cmp(&b.0));
        t
    }
}

impl fmt::Display for SemiInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

/// All degree-`d` semi-invariants with one character, as a basis of
/// disjointly supported polynomials (one per transport component).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiInvariantSpace {
    pub degree: u32,
    /// Value of the character on each group generator, in generator order.
    pub character: Vec<RootOfUnity>,
    /// Weights of the supporting class under the diagonal generators used.
    pub weights: Vec<RootOfUnity>,
    pub basis: Vec<SemiInvariant>,
}

impl SemiInvariantSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Apply each generator literally and compare with `character(g) * f`.
    pub fn verify(&self, generators: &[MonomialElement]) -> bool {
        generators.len() == self.character.len()
            && self.basis.iter().all(|f| {
                generators
                    .iter()
                    .zip(&self.character)
                    .all(|(g, chi)| scales_by(g, f.terms(), *chi))
            })
    }

    /// `(character, sorted bases)` for comparisons that ignore term order.
    pub fn canonical_form(&self) -> (Vec<RootOfUnity>, Vec<Vec<(Monomial, RootOfUnity)>>) {
        let mut basis: Vec<_> = self.basis.iter().map(SemiInvariant::canonical_terms).collect();
        basis.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        (self.character.clone(), basis)
    }
}

/// `g(f)` for `f = sum c_m m`, using `g(m) = zeta^{w} (g . m)`.
pub fn apply(g: &MonomialElement, terms: &[(Monomial, RootOfUnity)]) -> Vec<(Monomial, RootOfUnity)> {
    terms
        .iter()
        .map(|(m, c)| {
            let (image, w) = g.act_on_exponents(m.exps());
            (Monomial::new(image), c.mul(&RootOfUnity::new(g.modulus(), w as i64)))
        })
        .collect()
}

fn scales_by(g: &MonomialElement, terms: &[(Monomial, RootOfUnity)], chi: RootOfUnity) -> bool {
    let original: HashMap<&Monomial, RootOfUnity> = terms.iter().map(|(m, c)| (m, *c)).collect();
    apply(g, terms)
        .iter()
        .all(|(m, c)| original.get(m).is_some_and(|orig| *c == orig.mul(&chi)))
}

/// The character of `f` on each generator, if `f` is semi-invariant.
pub fn semi_invariant_character(
    generators: &[MonomialElement],
    terms: &[(Monomial, RootOfUnity)],
) -> Option<Vec<RootOfUnity>> {
    let (m0, c0) = terms.first()?;
    generators
        .iter()
        .map(|g| {
            // the coefficient of m0 in g(f) must be chi * c0
            let image = apply(g, terms);
            let (_, c) = image.iter().find(|(m, _)| m == m0)?;
            let chi = c.mul(&c0.inv());
            scales_by(g, terms, chi).then_some(chi)
        })
        .collect()
}

/// Degree-`d` semi-invariant spaces of a closed group. Weight classes use a
/// generating set of the full diagonal subgroup.
pub fn semi_invariants(group: &MonomialGroup, degree: u32) -> Vec<SemiInvariantSpace> {
    solve(group.dim(), group.generators(), group.diag_generators(), degree)
}

/// Same computation straight from a generator list, without enumerating the
/// group. Only the diagonal generators themselves refine the weight classes;
/// the transport step still enforces every condition.
pub fn semi_invariants_of_generators(generators: &[MonomialElement], degree: u32) -> Result<Vec<SemiInvariantSpace>> {
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
    let diag: Vec<MonomialElement> = gens.iter().filter(|g| g.is_diagonal()).cloned().collect();
    Ok(solve(dim, &gens, &diag, degree))
}

// Per-generator action on the local monomial list: image index and weight exponent.
struct ActionTable {
    images: Vec<Vec<(usize, u64)>>,
}

fn solve(dim: usize, gens: &[MonomialElement], diag_gens: &[MonomialElement], degree: u32) -> Vec<SemiInvariantSpace> {
    let monomials = monomials_of_degree(dim, degree);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let modulus = gens.iter().chain(diag_gens).fold(1, |m, g| lcm(m, g.modulus()));

    // Weight exponent vector -> member indices (already in canonical order).
    let mut classes: BTreeMap<Vec<RootOfUnity>, Vec<usize>> = BTreeMap::new();
    for (i, m) in monomials.iter().enumerate() {
        let weights: Vec<RootOfUnity> = diag_gens
            .iter()
            .map(|g| {
                let (_, w) = g.act_on_exponents(m.exps());
                RootOfUnity::new(g.modulus(), w as i64)
            })
            .collect();
        classes.entry(weights).or_default().push(i);
    }

    let table = ActionTable {
        images: gens
            .iter()
            .map(|g| {
                monomials
                    .iter()
                    .map(|m| {
                        let (image, w) = g.act_on_exponents(m.exps());
                        let w = w * (modulus / g.modulus());
                        (index[&Monomial::new(image)], w)
                    })
                    .collect()
            })
            .collect(),
    };

    let mut spaces: Vec<SemiInvariantSpace> = Vec::new();
    for (weights, members) in classes {
        let mut in_class = vec![false; monomials.len()];
        for &i in &members {
            in_class[i] = true;
        }
        let stable = table
            .images
            .iter()
            .all(|img| members.iter().all(|&i| in_class[img[i].0]));
        if !stable {
            continue;
        }

        let mut by_character: BTreeMap<Vec<RootOfUnity>, Vec<SemiInvariant>> = BTreeMap::new();
        for component in components(&members, &table) {
            for (character, poly) in solve_component(&component, &table, modulus, &monomials) {
                by_character.entry(character).or_default().push(poly);
            }
        }
        for (character, basis) in by_character {
            spaces.push(SemiInvariantSpace {
                degree,
                character,
                weights: weights.clone(),
                basis,
            });
        }
    }
    spaces
}

// Orbits of the class under the generator permutations, each sorted, ordered by least member.
fn components(members: &[usize], table: &ActionTable) -> Vec<Vec<usize>> {
    let mut comp_of: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &start in members {
        if comp_of.contains_key(&start) {
            continue;
        }
        let id = out.len();
        comp_of.insert(start, id);
        let mut queue = vec![start];
        let mut k = 0;
        while k < queue.len() {
            let i = queue[k];
            for img in &table.images {
                let j = img[i].0;
                if let std::collections::hash_map::Entry::Vacant(e) = comp_of.entry(j) {
                    e.insert(id);
                    queue.push(j);
                }
            }
            k += 1;
        }
        queue.sort_unstable();
        out.push(queue);
    }
    out
}

// Cycles of one generator on a component: (length, scalar exponent mod N), in
// order of their least member.
fn cycles_on(component: &[usize], images: &[(usize, u64)], modulus: u64) -> Vec<(u64, u64)> {
    let mut seen: HashMap<usize, ()> = HashMap::new();
    let mut out = Vec::new();
    for &start in component {
        if seen.contains_key(&start) {
            continue;
        }
        let (mut len, mut scalar, mut i) = (0u64, 0u64, start);
        loop {
            seen.insert(i, ());
            let (j, w) = images[i];
            scalar = (scalar + w) % modulus;
            len += 1;
            i = j;
            if i == start {
                break;
            }
        }
        out.push((len, scalar));
    }
    out
}

fn solve_component(
    component: &[usize],
    table: &ActionTable,
    modulus: u64,
    monomials: &[Monomial],
) -> Vec<(Vec<RootOfUnity>, SemiInvariant)> {
    let cycles: Vec<Vec<(u64, u64)>> = table
        .images
        .iter()
        .map(|img| cycles_on(component, img, modulus))
        .collect();
    let shortest: Vec<(u64, u64)> = cycles
        .iter()
        .map(|cs| *cs.iter().min_by_key(|(len, _)| *len).expect("components are nonempty"))
        .collect();
    let work = shortest.iter().fold(modulus, |m, (len, _)| lcm(m, len * modulus));
    let lift = work / modulus;

    // lambda^len = zeta_N^s  <=>  lambda = zeta_{len N}^{s + j N}, j < len
    let candidates: Vec<Vec<u64>> = shortest
        .iter()
        .zip(&cycles)
        .map(|(&(len, s), all)| {
            let step = work / (len * modulus);
            (0..len)
                .map(|j| ((s + j * modulus) * step) % work)
                .filter(|&lam| all.iter().all(|&(l, t)| (l * lam) % work == (t * lift) % work))
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }

    let local: HashMap<usize, usize> = component.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    'tuples: loop {
        let lambda: Vec<u64> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        let mut uf = PotentialUnionFind::new(component.len(), work);
        let mut consistent = true;
        'edges: for (img, &lam) in table.images.iter().zip(&lambda) {
            for &i in component {
                let (j, w) = img[i];
                // c_{g.m} = lambda^-1 zeta^w c_m
                let delta = (w * lift + work - lam) % work;
                if uf.merge(local[&i], local[&j], delta).is_err() {
                    consistent = false;
                    break 'edges;
                }
            }
        }
        if consistent {
            out.push((
                lambda
                    .iter()
                    .map(|&l| RootOfUnity::new(work, l as i64).reduced())
                    .collect(),
                transport_polynomial(component, table, &mut uf, &local, work, monomials),
            ));
        }

        // odometer over candidate tuples
        for k in 0..choice.len() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'tuples;
            }
            choice[k] = 0;
        }
        break;
    }
    out
}

// Terms in breadth-first transport order from the least monomial.
fn transport_polynomial(
    component: &[usize],
    table: &ActionTable,
    uf: &mut PotentialUnionFind,
    local: &HashMap<usize, usize>,
    work: u64,
    monomials: &[Monomial],
) -> SemiInvariant {
    let rep = component[0];
    let mut order = vec![rep];
    let mut placed: HashMap<usize, ()> = HashMap::from([(rep, ())]);
    let mut k = 0;
    while k < order.len() {
        let i = order[k];
        for img in &table.images {
            let j = img[i].0;
            if placed.insert(j, ()).is_none() {
                order.push(j);
            }
        }
        k += 1;
    }
    let terms = order
        .into_iter()
        .map(|i| {
            let d = uf.difference(local[&rep], local[&i]).expect("component is connected");
            (monomials[i].clone(), RootOfUnity::new(work, d as i64).reduced())
        })
        .collect();
    SemiInvariant::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogroup::{generate_closure, DiagonalElement, DEFAULT_CAP};

    fn tau() -> MonomialElement {
        MonomialElement::cyclic_shift(5)
    }

    fn diag(n: u64, a: &[i64]) -> MonomialElement {
        DiagonalElement::new(n, a).unwrap().to_monomial()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn linear_forms_of_tau() {
        let g = generate_closure(&[tau()], DEFAULT_CAP).unwrap();
        let spaces = semi_invariants(&g, 1);
        assert_eq!(spaces.len(), 5);
        let mut chars: Vec<RootOfUnity> = spaces.iter().map(|s| s.character[0]).collect();
        chars.sort();
        assert_eq!(chars, (0..5).map(|k| RootOfUnity::new(5, k)).collect::<Vec<_>>());
        for s in &spaces {
            assert_eq!(s.dimension(), 1);
            assert!(s.verify(g.generators()));
            // sum_j omega^j tau^j(x1) with omega = 1 / lambda
            let omega = s.character[0].inv();
            let f = &s.basis[0];
            for (j, (m, c)) in f.terms().iter().enumerate() {
                let mut e = vec![0; 5];
                e[j] = 1;
                assert_eq!(m, &mono(&e));
                assert_eq!(*c, omega.pow(j as i64));
            }
        }
    }

    #[test]
    fn klein_cubic() {
        let g = generate_closure(&[diag(11, &[1, 4, 5, 9, 3]), tau()], DEFAULT_CAP).unwrap();
        let spaces = semi_invariants(&g, 3);
        // one twisted orbit sum per fifth root of unity
        assert_eq!(spaces.len(), 5);
        assert!(spaces.iter().all(|s| s.dimension() == 1 && s.verify(g.generators())));
        let invariant: Vec<_> = spaces
            .iter()
            .filter(|s| s.character.iter().all(RootOfUnity::is_one))
            .collect();
        assert_eq!(invariant.len(), 1);
        assert_eq!(
            invariant[0].basis[0].to_string(),
            "x1^2*x4 + x2^2*x5 + x1*x3^2 + x2*x4^2 + x3*x5^2"
        );
        for d in [1, 2] {
            assert!(semi_invariants(&g, d).is_empty());
        }
    }

    #[test]
    fn heisenberg_has_no_low_degree_semi_invariants() {
        let g = generate_closure(&[diag(5, &[0, 1, 2, 3, 4]), tau()], DEFAULT_CAP).unwrap();
        for d in 1..=4 {
            assert!(semi_invariants(&g, d).is_empty(), "degree {d}");
        }
        assert!(!semi_invariants(&g, 5).is_empty());
    }

    #[test]
    fn generator_only_variant_agrees() {
        let gens = [diag(11, &[1, 4, 5, 9, 3]), tau()];
        let g = generate_closure(&gens, DEFAULT_CAP).unwrap();
        for d in 1..=4 {
            let a: Vec<_> = semi_invariants(&g, d)
                .iter()
                .map(SemiInvariantSpace::canonical_form)
                .collect();
            let mut b: Vec<_> = semi_invariants_of_generators(&gens, d)
                .unwrap()
                .iter()
                .map(SemiInvariantSpace::canonical_form)
                .collect();
            let mut a = a;
            a.sort();
            b.sort();
            assert_eq!(a, b, "degree {d}");
        }
    }

    #[test]
    fn diagonal_only_group() {
        let g = generate_closure(&[diag(3, &[1, 2, 0])], DEFAULT_CAP).unwrap();
        let spaces = semi_invariants(&g, 1);
        // x1, x2, x3 have distinct weights
        assert_eq!(spaces.len(), 3);
        assert!(spaces.iter().all(|s| s.dimension() == 1));
        let spaces = semi_invariants(&g, 2);
        let total: usize = spaces.iter().map(SemiInvariantSpace::dimension).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn character_of_explicit_polynomial() {
        let gens = [diag(11, &[1, 4, 5, 9, 3]), tau()];
        let fermat: Vec<(Monomial, RootOfUnity)> = (0..5)
            .map(|i| {
                let mut e = vec![0; 5];
                e[i] = 3;
                (mono(&e), RootOfUnity::one())
            })
            .collect();
        assert!(semi_invariant_character(&gens[1..], &fermat).is_some());
        assert!(semi_invariant_character(&gens, &fermat).is_none());
    }
}
