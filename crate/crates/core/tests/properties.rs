mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wexc::cyclotomic::{
    cyclotomic_polynomial, divisors, euler_phi, reduce, reduce_i64, CycInt, IntPolynomial, RootOfUnity,
};
use wexc::monogroup::MonomialGroup;
use wexc::semiinv::{
    brute_force_semi_invariants, canonical_solutions, semi_invariant_character, semi_invariants, weight_of,
};

fn cycint() -> impl Strategy<Value = CycInt> {
    (1u64..=64).prop_flat_map(|n| prop::collection::vec(-20i64..=20, n as usize).prop_map(move |c| reduce_i64(n, &c)))
}

fn cycint_pair() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
    (1u64..=64).prop_flat_map(|n| {
        let v = || prop::collection::vec(-20i64..=20, n as usize).prop_map(move |c| reduce_i64(n, &c));
        (v(), v(), v())
    })
}

fn group(dims: &'static [usize], cap: usize) -> impl Strategy<Value = MonomialGroup> {
    (any::<u64>(), 0..dims.len()).prop_map(move |(seed, i)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_group(&mut rng, dims[i], cap)
    })
}

#[test]
fn cyclotomic_product_identity_up_to_64() {
    for n in 1..=64u64 {
        let phi = cyclotomic_polynomial(n);
        assert_eq!(phi.degree(), Some(euler_phi(n) as usize), "N={n}");
        assert!(phi.is_monic());
        let product = divisors(n)
            .into_iter()
            .fold(IntPolynomial::one(), |acc, d| acc.mul(&cyclotomic_polynomial(d)));
        assert_eq!(product, IntPolynomial::x_pow_minus_one(n as usize), "N={n}");
    }
}

#[test]
fn root_times_conjugate_is_one_up_to_64() {
    for n in 1..=64u64 {
        for k in 0..n {
            let z = RootOfUnity::new(n, k as i64).to_cycint();
            assert!(z.mul(&z.conj()).equals_integer(1), "zeta_{n}^{k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduce_is_idempotent(a in cycint()) {
        prop_assert_eq!(reduce(a.modulus(), a.coeffs()), a.clone());
    }

    #[test]
    fn ring_laws((a, b, c) in cycint_pair()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn norm_is_a_nonnegative_real(a in cycint()) {
        let norm = a.mul(&a.conj());
        prop_assert_eq!(norm.conj(), norm.clone());
        let z = norm.to_complex();
        prop_assert!(z.re > -1e-6 && z.im.abs() < 1e-6 * (1.0 + z.re.abs()));
        prop_assert_eq!(norm.is_zero(), a.is_zero());
    }

    #[test]
    fn rescaling_round_trips(a in cycint(), k in 1u64..=6) {
        let up = a.rescale(a.modulus() * k);
        prop_assert_eq!(up.restrict(a.modulus()), Some(a.clone()));
        prop_assert_eq!(up, a);
    }

    #[test]
    fn numerical_shadow(n in 1u64..=64, raw in prop::collection::vec(-20i64..=20, 64)) {
        let raw = &raw[..n as usize];
        let exact = reduce_i64(n, raw).to_complex();
        let mut direct = num_complex::Complex64::new(0.0, 0.0);
        for (k, &c) in raw.iter().enumerate() {
            direct += num_complex::Complex64::from_polar(c as f64, std::f64::consts::TAU * k as f64 / n as f64);
        }
        let scale: f64 = raw.iter().map(|c| c.abs() as f64).sum::<f64>().max(1.0);
        prop_assert!((exact - direct).norm() <= 1e-9 * scale, "{} vs {}", exact, direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // A non-scalar element of D of order p*q (p prime, not 5) has a non-scalar q-th power of order p.
    #[test]
    fn prime_order_non_scalar_elements(g in group(&[5], 4000)) {
        for d in g.diag_subgroup() {
            let is_scalar = |e: &wexc::monogroup::MonomialElement| e.twist().iter().all(|&t| t == e.twist()[0]);
            if is_scalar(d) {
                continue;
            }
            let order = d.order();
            for p in divisors(order).into_iter().filter(|&p| p > 1 && p != 5 && euler_phi(p) == p - 1) {
                let q = order / p;
                if q > 1 {
                    let h = d.pow(q);
                    prop_assert_eq!(h.order(), p);
                    prop_assert!(!is_scalar(&h), "{} ^ {}", d, q);
                }
            }
        }
    }

    #[test]
    fn trace_is_a_class_function(g in group(&[2, 3, 5], 4000), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let a = &g.elements()[i.index(g.order())];
        let b = &g.elements()[j.index(g.order())];
        let conj = a.compose(b).unwrap().compose(&a.inverse()).unwrap();
        prop_assert_eq!(conj.trace(), b.trace());
    }

    #[test]
    fn semi_invariants_verify_and_stay_in_one_weight_class(g in group(&[2, 3, 5], 4000), d in 1u32..=4) {
        for space in semi_invariants(&g, d) {
            prop_assert!(space.verify(g.generators()));
            for f in &space.basis {
                let weights: Vec<Vec<RootOfUnity>> = f
                    .support()
                    .map(|m| g.diag_subgroup().map(|h| weight_of(m, &h.twist_part())).collect())
                    .collect();
                prop_assert!(weights.windows(2).all(|w| w[0] == w[1]));
                // generator conditions suffice: every element scales f
                for h in g.elements() {
                    prop_assert!(semi_invariant_character(std::slice::from_ref(h), f.terms()).is_some());
                }
            }
        }
    }

    #[test]
    fn transport_solver_matches_oracle(g in group(&[2, 3, 5], 2000), d in 1u32..=4) {
        let fast = semi_invariants(&g, d);
        let slow = brute_force_semi_invariants(&g, d).unwrap();
        prop_assert_eq!(canonical_solutions(&fast), canonical_solutions(&slow));
    }
}
