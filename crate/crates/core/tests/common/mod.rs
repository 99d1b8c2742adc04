#![allow(dead_code)]

use rand::Rng;
use wexc::monogroup::{generate_closure, DiagonalElement, MonomialElement, MonomialGroup, Permutation};

pub const MODULI: [u64; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

fn random_twisted(rng: &mut impl Rng, perm: Permutation) -> MonomialElement {
    let n = MODULI[rng.gen_range(0..MODULI.len())];
    let twist: Vec<i64> = (0..perm.len()).map(|_| rng.gen_range(0..n as i64)).collect();
    MonomialElement::new(perm, n, &twist)
        .unwrap()
        .normalize_to_sl()
        .unwrap()
}

/// Generators of a small SL monomial group: random diagonal part, permutation
/// image trivial, cyclic or dihedral.
pub fn random_generators(rng: &mut impl Rng, dim: usize) -> Vec<MonomialElement> {
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let n = MODULI[rng.gen_range(0..MODULI.len())];
        let exps: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..n as i64)).collect();
        let d = DiagonalElement::new(n, &exps).unwrap().to_monomial();
        gens.push(d.normalize_to_sl().unwrap());
    }
    let shift = Permutation::from_images((0..dim).map(|i| (i + 1) % dim).collect()).unwrap();
    let reflection = Permutation::from_images((0..dim).map(|i| (dim - i) % dim).collect()).unwrap();
    match rng.gen_range(0..3) {
        0 => {}
        1 => gens.push(random_twisted(rng, shift)),
        _ => {
            gens.push(random_twisted(rng, shift));
            gens.push(random_twisted(rng, reflection));
        }
    }
    gens
}

/// A random group of order at most `cap`, retrying until one fits.
pub fn random_group(rng: &mut impl Rng, dim: usize, cap: usize) -> MonomialGroup {
    loop {
        if let Ok(g) = generate_closure(&random_generators(rng, dim), cap) {
            return g;
        }
    }
}
