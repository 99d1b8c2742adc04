//! Concrete group constructions: the sixteen classes with elements of order 11
//! or 61, the extremal group, the sweep behind the `omega = 1` claim, and the
//! primitive reference list.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, classify_generators, ClassifyOptions, Verdict};
use crate::cyclotomic::RootOfUnity;
use crate::error::Result;
use crate::monogroup::{generate_closure, DiagonalElement, MonomialElement, Permutation, DEFAULT_CAP};
use crate::semiinv::{semi_invariant_character, semi_invariants, semi_invariants_of_generators, Monomial};

fn tau() -> MonomialElement {
    MonomialElement::cyclic_shift(5)
}

fn scalar5() -> MonomialElement {
    DiagonalElement::scalar(5, 5, 1).expect("valid scalar").to_monomial()
}

fn power_sum(degree: u32) -> Vec<(Monomial, RootOfUnity)> {
    (0..5)
        .map(|i| {
            let mut e = vec![0; 5];
            e[i] = degree;
            (Monomial::new(e), RootOfUnity::one())
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalClass {
    pub modulus: u64,
    pub k: u32,
    pub with_scalars: bool,
    pub expected_order: usize,
    pub expected_degree: u32,
}

impl ExceptionalClass {
    pub fn label(&self) -> String {
        let scalars = if self.with_scalars { "+scalars" } else { "" };
        format!("{}/k={}{}", self.modulus, self.k, scalars)
    }

    /// `D = <[n; 1, r, r^2, r^3, r^4]>` with `r = 4^k` (mod 11) or `34^k` (mod 61), then `tau`.
    pub fn generators(&self) -> Vec<MonomialElement> {
        let base = if self.modulus == 11 { 4 } else { 34 };
        let r = (0..self.k).fold(1u64, |acc, _| acc * base % self.modulus);
        let exps: Vec<i64> = (0..5)
            .scan(1u64, |p, _| {
                let v = *p;
                *p = *p * r % self.modulus;
                Some(v as i64)
            })
            .collect();
        let mut gens = vec![
            DiagonalElement::new(self.modulus, &exps).expect("valid").to_monomial(),
            tau(),
        ];
        if self.with_scalars {
            gens.push(scalar5());
        }
        gens
    }
}

pub fn enumerate_exceptional_classes() -> Vec<ExceptionalClass> {
    let mut out = Vec::new();
    for (modulus, degree) in [(11u64, 3u32), (61, 4)] {
        for k in 1..=4 {
            for with_scalars in [false, true] {
                let base = 5 * modulus as usize;
                out.push(ExceptionalClass {
                    modulus,
                    k,
                    with_scalars,
                    expected_order: if with_scalars { 5 * base } else { base },
                    expected_degree: degree,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassOutcome {
    pub order: usize,
    pub verdict: Verdict,
    pub first_degree: Option<u32>,
    pub irreducible: bool,
}

pub fn check_exceptional_class(class: &ExceptionalClass) -> Result<ClassOutcome> {
    let (_, report) = classify_generators(&class.generators(), DEFAULT_CAP, &ClassifyOptions::default())?;
    Ok(ClassOutcome {
        order: report.order,
        verdict: report.verdict,
        first_degree: report.first_semi_invariant_degree,
        irreducible: report.irreducible,
    })
}

impl ClassOutcome {
    pub fn matches(&self, class: &ExceptionalClass) -> bool {
        self.order == class.expected_order
            && self.verdict == Verdict::NotWeaklyExceptional
            && self.first_degree == Some(class.expected_degree)
    }
}

/// `(C5 x C4^4) . S5`: the diagonal part is generated by `[4; 0..1,3..0]`
/// and the scalar, `S5` by `tau` and a lift of `(1 2)` with determinant 1.
pub fn extremal_generators() -> Vec<MonomialElement> {
    let mut gens: Vec<MonomialElement> = (0..4)
        .map(|i| {
            let mut e = [0i64; 5];
            e[i] = 1;
            e[i + 1] = 3;
            DiagonalElement::new(4, &e).expect("valid").to_monomial()
        })
        .collect();
    gens.push(scalar5());
    gens.push(tau());
    let swap = Permutation::from_cycles(5, &[&[1, 2]]).expect("valid");
    gens.push(MonomialElement::new(swap, 4, &[2, 0, 0, 0, 0]).expect("valid"));
    gens
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalBound {
    pub d: u64,
    pub closure_order: usize,
    pub enumerated_order: usize,
    pub same_elements: bool,
}

impl DiagonalBound {
    pub fn holds(&self) -> bool {
        let d4 = (self.d * self.d * self.d * self.d) as usize;
        self.same_elements && self.closure_order == 5 * d4 && self.enumerated_order == 5 * d4
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub order: usize,
    pub irreducible: bool,
    /// `x1^4 + ... + x5^4` appears verbatim as a basis polynomial in degree 4.
    pub quartic_sum_in_basis: bool,
    pub quartic_sum_semi_invariant: bool,
    pub verdict: Verdict,
    pub diagonal_bounds: Vec<DiagonalBound>,
}

impl ExtremalReport {
    pub fn holds(&self) -> bool {
        self.order == 153_600
            && self.irreducible
            && self.quartic_sum_in_basis
            && self.quartic_sum_semi_invariant
            && self.verdict == Verdict::NotWeaklyExceptional
            && self.diagonal_bounds.iter().all(DiagonalBound::holds)
    }
}

pub fn verify_extremal_bound() -> Result<ExtremalReport> {
    let gens = extremal_generators();
    let group = generate_closure(&gens, DEFAULT_CAP)?;
    let report = classify(&group, &ClassifyOptions::default())?;
    let quartic = power_sum(4);
    let mut wanted = quartic.clone();
    wanted.sort();
    let quartic_sum_in_basis = semi_invariants(&group, 4)
        .iter()
        .flat_map(|s| s.basis.iter())
        .any(|f| f.canonical_terms() == wanted);
    let quartic_sum_semi_invariant = semi_invariant_character(group.generators(), &quartic).is_some();
    let diagonal_bounds = [2u64, 3, 4].into_iter().map(diagonal_bound).collect::<Result<_>>()?;
    Ok(ExtremalReport {
        order: group.order(),
        irreducible: report.irreducible,
        quartic_sum_in_basis,
        quartic_sum_semi_invariant,
        verdict: report.verdict,
        diagonal_bounds,
    })
}

/// The diagonal group generated by `zeta_d` on one coordinate (made special
/// linear) and the scalars, against a direct count of `[5d; a]` with
/// `sum a = 0` and `g^d` scalar.
pub fn diagonal_bound(d: u64) -> Result<DiagonalBound> {
    let m = 5 * d;
    let mut gens = vec![scalar5()];
    for i in 1..5 {
        let mut e = [0i64; 5];
        e[i] = 1;
        gens.push(DiagonalElement::new(d, &e)?.to_monomial().normalize_to_sl()?);
    }
    let group = generate_closure(&gens, DEFAULT_CAP)?;
    let closure: BTreeSet<Vec<u64>> = group
        .elements()
        .iter()
        .map(|g| g.rescale(m).map(|g| g.twist().to_vec()))
        .collect::<Result<_>>()?;

    let mut enumerated = BTreeSet::new();
    let mut a = [0u64; 5];
    loop {
        let sum: u64 = a.iter().sum();
        if sum.is_multiple_of(m) && a.iter().all(|&v| (d * v) % m == (d * a[0]) % m) {
            enumerated.insert(a.to_vec());
        }
        let mut k = 0;
        while k < 5 {
            a[k] += 1;
            if a[k] < m {
                break;
            }
            a[k] = 0;
            k += 1;
        }
        if k == 5 {
            break;
        }
    }
    Ok(DiagonalBound {
        d,
        closure_order: group.order(),
        enumerated_order: enumerated.len(),
        same_elements: closure == enumerated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub sweep_size: usize,
    pub examined: usize,
    pub with_family_semi_invariant: usize,
    pub counterexamples: Vec<String>,
}

impl OmegaReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Lifts of the extra generator of `T`, one per transitive overgroup of `C5`.
pub fn extra_permutations() -> Vec<Permutation> {
    let cycles: [&[&[usize]]; 4] = [&[&[2, 5], &[3, 4]], &[&[2, 3, 5, 4]], &[&[1, 2, 3]], &[&[1, 2]]];
    cycles
        .iter()
        .map(|c| Permutation::from_cycles(5, c).expect("valid"))
        .collect()
}

// Exponent vectors mod 4 up to rotation, least rotation first.
fn diagonal_seeds() -> Vec<[i64; 5]> {
    let mut seeds = BTreeSet::new();
    for code in 0..1024usize {
        let e: [i64; 5] = std::array::from_fn(|i| ((code >> (2 * i)) & 3) as i64);
        let least = (0..5)
            .map(|s| std::array::from_fn(|i| e[(i + s) % 5]))
            .min()
            .expect("five rotations");
        seeds.insert(least);
    }
    seeds.into_iter().collect()
}

/// The generator lists of the sweep, in a fixed order.
pub fn omega_sweep() -> Vec<Vec<MonomialElement>> {
    let seeds = diagonal_seeds();
    let perms = extra_permutations();
    let mut out = Vec::new();
    for seed in &seeds {
        let diag = DiagonalElement::new(4, seed)
            .expect("valid")
            .to_monomial()
            .normalize_to_sl()
            .expect("solvable");
        for with_scalars in [false, true] {
            for perm in &perms {
                for code in 0..256usize {
                    let twist: [i64; 5] = std::array::from_fn(|i| {
                        if i == 0 {
                            0
                        } else {
                            ((code >> (2 * (i - 1))) & 3) as i64
                        }
                    });
                    let lift = MonomialElement::new(perm.clone(), 4, &twist)
                        .expect("valid")
                        .normalize_to_sl()
                        .expect("solvable");
                    let mut gens = vec![tau(), lift, diag.clone()];
                    if with_scalars {
                        gens.push(scalar5());
                    }
                    out.push(gens);
                }
            }
        }
    }
    out
}

fn in_square_families(m: &Monomial) -> bool {
    let e = m.exps();
    e.iter().filter(|&&v| v == 2).count() == 2 && e.iter().all(|&v| v == 0 || v == 2)
}

/// Examine the first `budget` groups of the sweep (all of them when `None`).
pub fn verify_omega_rigidity(budget: Option<usize>) -> Result<OmegaReport> {
    let sweep = omega_sweep();
    let sweep_size = sweep.len();
    let take = budget.unwrap_or(sweep_size).min(sweep_size);
    let squares = power_sum(2);
    let results: Vec<(bool, Option<String>)> = sweep[..take]
        .par_iter()
        .map(|gens| -> Result<(bool, Option<String>)> {
            let mut relevant = false;
            for space in semi_invariants_of_generators(gens, 4)? {
                for f in &space.basis {
                    if !f.support().all(in_square_families) {
                        continue;
                    }
                    relevant = true;
                    let omega_trivial = space.character[0].is_one();
                    let squares_ok = semi_invariant_character(gens, &squares).is_some();
                    if !(omega_trivial && squares_ok) {
                        let names: Vec<String> = gens.iter().map(ToString::to_string).collect();
                        return Ok((true, Some(format!("<{}>: {}", names.join(", "), f))));
                    }
                }
            }
            Ok((relevant, None))
        })
        .collect::<Result<_>>()?;
    Ok(OmegaReport {
        sweep_size,
        examined: take,
        with_family_semi_invariant: results.iter().filter(|(r, _)| *r).count(),
        counterexamples: results.into_iter().filter_map(|(_, c)| c).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveEntry {
    pub group: &'static str,
    pub semi_invariant_degree: Option<u32>,
    pub witness: &'static str,
    pub verdict: Verdict,
}

/// The primitive subgroups of `SL5`, as data.
pub fn primitive_reference() -> Vec<PrimitiveEntry> {
    let real = "invariant quadric (conjugate into a real orthogonal group)";
    let entry = |group, degree, witness, verdict| PrimitiveEntry {
        group,
        semi_invariant_degree: degree,
        witness,
        verdict,
    };
    vec![
        entry("A5", Some(2), real, Verdict::NotWeaklyExceptional),
        entry("A6", Some(2), real, Verdict::NotWeaklyExceptional),
        entry("S5", Some(2), real, Verdict::NotWeaklyExceptional),
        entry("S6", Some(2), real, Verdict::NotWeaklyExceptional),
        entry(
            "PSL(2,11)",
            Some(3),
            "Klein cubic threefold",
            Verdict::NotWeaklyExceptional,
        ),
        entry(
            "Sp4(F3)",
            Some(4),
            "Burkhardt quartic threefold",
            Verdict::NotWeaklyExceptional,
        ),
        entry(
            "H <= G <= HM",
            None,
            "none of degree at most 4",
            Verdict::WeaklyExceptional,
        ),
    ]
}

pub fn heisenberg_generators() -> Vec<MonomialElement> {
    vec![
        DiagonalElement::new(5, &[0, 1, 2, 3, 4]).expect("valid").to_monomial(),
        tau(),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergReport {
    pub order: usize,
    pub irreducible: bool,
    pub spaces_by_degree: Vec<usize>,
    pub verdict: Verdict,
}

impl HeisenbergReport {
    pub fn holds(&self) -> bool {
        self.order == 125
            && self.irreducible
            && self.spaces_by_degree.iter().all(|&n| n == 0)
            && self.verdict == Verdict::WeaklyExceptional
    }
}

pub fn verify_heisenberg() -> Result<HeisenbergReport> {
    let opts = ClassifyOptions {
        full: true,
        ..ClassifyOptions::default()
    };
    let (_, report) = classify_generators(&heisenberg_generators(), DEFAULT_CAP, &opts)?;
    Ok(HeisenbergReport {
        order: report.order,
        irreducible: report.irreducible,
        spaces_by_degree: report.semi_invariants_by_degree.values().map(Vec::len).collect(),
        verdict: report.verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_classes_are_listed() {
        let classes = enumerate_exceptional_classes();
        assert_eq!(classes.len(), 16);
        let orders: BTreeSet<usize> = classes.iter().map(|c| c.expected_order).collect();
        assert_eq!(orders, BTreeSet::from([55, 275, 305, 1525]));
        for c in &classes {
            assert!(
                c.generators().iter().all(MonomialElement::is_special_linear),
                "{}",
                c.label()
            );
        }
    }

    #[test]
    fn klein_class() {
        let c = &enumerate_exceptional_classes()[0];
        let out = check_exceptional_class(c).unwrap();
        assert!(out.matches(c), "{out:?}");
    }

    #[test]
    fn small_diagonal_bounds() {
        for d in [2, 3] {
            let b = diagonal_bound(d).unwrap();
            assert!(b.holds(), "{b:?}");
        }
    }

    #[test]
    fn extremal_generators_are_special_linear() {
        assert!(extremal_generators().iter().all(MonomialElement::is_special_linear));
    }

    #[test]
    fn sweep_is_deterministic() {
        assert_eq!(diagonal_seeds().len(), 208);
        let a = omega_sweep();
        assert_eq!(a.len(), 208 * 2 * 4 * 256);
        assert_eq!(a[..3], omega_sweep()[..3]);
    }

    #[test]
    fn heisenberg_live() {
        assert!(verify_heisenberg().unwrap().holds());
    }
}
