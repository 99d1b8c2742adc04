//! Exact arithmetic in the cyclotomic integers `Z[zeta_N]`.
//!
//! Roots of unity are tracked symbolically as residues, sums of them as
//! integer coefficient vectors reduced modulo the cyclotomic polynomial. Zero
//! testing is exact: a value vanishes iff its canonical vector is zero.

mod cycint;
mod polynomial;
mod root;

pub use cycint::{reduce, reduce_i64, CycInt};
pub use polynomial::{cyclotomic_polynomial, IntPolynomial};
pub use root::RootOfUnity;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
