//! Exhaustive reference computation, used to cross-check the transport solver.
//!
//! Every group element is applied to every monomial; nothing relies on weight
//! classes or on conditions being checked on generators only.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::{monomials_of_degree, Monomial, SemiInvariant, SemiInvariantSpace, Terms};
use crate::cyclotomic::{lcm, RootOfUnity};
use crate::error::{Error, Result};
use crate::monogroup::{MonomialElement, MonomialGroup};

pub const ORACLE_MAX_MONOMIALS: usize = 126;
pub const ORACLE_MAX_ORDER: usize = 10_000;

/// Degree-`d` semi-invariants of `group`, one space per character, found by
/// brute force. `weights` is left empty.
pub fn brute_force_semi_invariants(group: &MonomialGroup, degree: u32) -> Result<Vec<SemiInvariantSpace>> {
    let monomials = monomials_of_degree(group.dim(), degree);
    if monomials.len() > ORACLE_MAX_MONOMIALS {
        return Err(Error::OracleTooLarge(format!("{} monomials", monomials.len())));
    }
    if group.order() > ORACLE_MAX_ORDER {
        return Err(Error::OracleTooLarge(format!("group of order {}", group.order())));
    }

    let n = group.modulus();
    let gens = group.generators();
    let elements = group.elements();
    let work = gens.iter().fold(n, |m, g| lcm(m, g.order()));
    let lift = work / n;
    let index: HashMap<&MonomialElement, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();

    let act = |g: &MonomialElement, m: &Monomial| -> (Monomial, u64) {
        let (image, w) = g.act_on_exponents(m.exps());
        (Monomial::new(image), w * lift % work)
    };

    // orbits under the full element list
    let mut orbits: Vec<Vec<Monomial>> = Vec::new();
    let mut covered: HashSet<Monomial> = HashSet::new();
    for m in &monomials {
        if covered.contains(m) {
            continue;
        }
        let mut orbit: Vec<Monomial> = elements.iter().map(|g| act(g, m).0).collect();
        orbit.sort();
        orbit.dedup();
        covered.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }

    let mut by_character: BTreeMap<Vec<RootOfUnity>, Vec<SemiInvariant>> = BTreeMap::new();
    for orbit in &orbits {
        let candidates: Vec<Vec<u64>> = gens
            .iter()
            .map(|g| {
                (0..work)
                    .filter(|&k| k * g.order() % work == 0)
                    .filter(|&k| fixes_cycles(g, orbit, k, &act, work))
                    .collect()
            })
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        for lambda in cartesian(&candidates) {
            let Some(on_elements) = extend_character(elements, gens, &index, &lambda, work) else {
                continue;
            };
            let Some(coeffs) = coefficients(elements, orbit, &on_elements, &act, work) else {
                continue;
            };
            let character = lambda
                .iter()
                .map(|&l| RootOfUnity::new(work, l as i64).reduced())
                .collect();
            let terms = orbit
                .iter()
                .map(|m| (m.clone(), RootOfUnity::new(work, coeffs[m] as i64).reduced()))
                .collect();
            by_character
                .entry(character)
                .or_default()
                .push(SemiInvariant::new(terms));
        }
    }

    Ok(by_character
        .into_iter()
        .map(|(character, basis)| SemiInvariantSpace {
            degree,
            character,
            weights: Vec::new(),
            basis,
        })
        .collect())
}

/// Sorted `(character, polynomial)` pairs, independent of how solutions were
/// grouped into spaces or how terms were ordered.
pub fn canonical_solutions(spaces: &[SemiInvariantSpace]) -> Vec<(Vec<RootOfUnity>, Terms)> {
    let mut out: Vec<_> = spaces
        .iter()
        .flat_map(|s| s.basis.iter().map(|f| (s.character.clone(), f.canonical_terms())))
        .collect();
    out.sort();
    out
}

// lambda^len must equal the scalar of each cycle of g on the orbit.
fn fixes_cycles(
    g: &MonomialElement,
    orbit: &[Monomial],
    lambda: u64,
    act: &impl Fn(&MonomialElement, &Monomial) -> (Monomial, u64),
    work: u64,
) -> bool {
    let mut seen: HashSet<Monomial> = HashSet::new();
    for start in orbit {
        if seen.contains(start) {
            continue;
        }
        let (mut len, mut scalar) = (0u64, 0u64);
        let mut m = start.clone();
        loop {
            let (next, w) = act(g, &m);
            seen.insert(m.clone());
            scalar = (scalar + w) % work;
            len += 1;
            m = next;
            if m == *start {
                break;
            }
        }
        if len * lambda % work != scalar {
            return false;
        }
    }
    true
}

fn cartesian(candidates: &[Vec<u64>]) -> Vec<Vec<u64>> {
    candidates.iter().fold(vec![Vec::new()], |acc, cs| {
        acc.iter()
            .flat_map(|prefix| {
                cs.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect()
    })
}

// lambda(e g) = lambda(e) + lambda(g); None if that is not well defined.
fn extend_character(
    elements: &[MonomialElement],
    gens: &[MonomialElement],
    index: &HashMap<&MonomialElement, usize>,
    lambda: &[u64],
    work: u64,
) -> Option<Vec<u64>> {
    let mut value: Vec<Option<u64>> = vec![None; elements.len()];
    let identity = index[&MonomialElement::identity(elements[0].dim(), elements[0].modulus())];
    value[identity] = Some(0);
    let mut queue = vec![identity];
    let mut k = 0;
    while k < queue.len() {
        let e = queue[k];
        let base = value[e].expect("queued elements have values");
        for (g, &l) in gens.iter().zip(lambda) {
            let product = index[&elements[e].compose(g).ok()?];
            let v = (base + l) % work;
            match value[product] {
                None => {
                    value[product] = Some(v);
                    queue.push(product);
                }
                Some(existing) if existing != v => return None,
                Some(_) => {}
            }
        }
        k += 1;
    }
    value.into_iter().collect()
}

// c(h.r) = w_h(r) - lambda(h) with c(r) = 0, then g(f) = lambda(g) f checked
// for every element on every monomial.
fn coefficients(
    elements: &[MonomialElement],
    orbit: &[Monomial],
    lambda: &[u64],
    act: &impl Fn(&MonomialElement, &Monomial) -> (Monomial, u64),
    work: u64,
) -> Option<HashMap<Monomial, u64>> {
    let rep = &orbit[0];
    let mut coeffs: HashMap<Monomial, u64> = HashMap::new();
    for (h, &l) in elements.iter().zip(lambda) {
        let (image, w) = act(h, rep);
        let c = (w + work - l) % work;
        if *coeffs.entry(image).or_insert(c) != c {
            return None;
        }
    }
    for (h, &l) in elements.iter().zip(lambda) {
        for m in orbit {
            let (image, w) = act(h, m);
            if (coeffs[&image] + l) % work != (w + coeffs[m]) % work {
                return None;
            }
        }
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::super::semi_invariants;
    use super::*;
    use crate::monogroup::{generate_closure, DiagonalElement, DEFAULT_CAP};

    fn diag(n: u64, a: &[i64]) -> MonomialElement {
        DiagonalElement::new(n, a).unwrap().to_monomial()
    }

    #[test]
    fn agrees_on_klein_group() {
        let g = generate_closure(
            &[diag(11, &[1, 4, 5, 9, 3]), MonomialElement::cyclic_shift(5)],
            DEFAULT_CAP,
        )
        .unwrap();
        for d in 1..=4 {
            let oracle = brute_force_semi_invariants(&g, d).unwrap();
            assert_eq!(
                canonical_solutions(&oracle),
                canonical_solutions(&semi_invariants(&g, d)),
                "degree {d}"
            );
        }
    }

    #[test]
    fn refuses_large_inputs() {
        let g = generate_closure(&[MonomialElement::cyclic_shift(5)], DEFAULT_CAP).unwrap();
        assert!(matches!(
            brute_force_semi_invariants(&g, 6),
            Err(Error::OracleTooLarge(_))
        ));
    }
}
