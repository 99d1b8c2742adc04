//! Which non-scalar diagonal elements `[n; a1..a5]` of `SL5` can keep a
//! `tau`-orbit sum semi-invariant.
//!
//! Every monomial of the orbit must acquire the same scalar, which gives four
//! chain congruences; the determinant condition adds `sum a_i = 0 (mod n)`.
//! Reading `a / n` as a point of `(Q/Z)^5`, the solutions form the finite
//! group `S = {x : A x in Z^5}`. Two routes compute it: a Smith normal form of
//! `A`, and an exhaustive scan over moduli. Both report solutions up to the
//! scalars `zeta_5^k`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::families::OrbitFamily;
use crate::cyclotomic::{gcd, lcm};

/// `rows[0..4]`: consecutive weight differences along the orbit; `rows[4]`: all ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub family: &'static str,
    pub rows: [[i64; 5]; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceSolution {
    /// Only scalars keep the orbit sum semi-invariant.
    ZeroOnly,
    /// Non-scalar solutions exist exactly for these projective orders.
    ModulusForced(BTreeSet<u64>),
    /// Up to scalars, the solutions are `[n; a, r a, r^2 a, r^3 a, r^4 a]`.
    Parametrized { modulus: u64, ratio: u64 },
}

impl fmt::Display for CongruenceSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceSolution::ZeroOnly => f.write_str("ZERO_ONLY"),
            CongruenceSolution::ModulusForced(ns) => {
                let list: Vec<String> = ns.iter().map(u64::to_string).collect();
                write!(f, "MODULUS_FORCED({})", list.join(","))
            }
            CongruenceSolution::Parametrized { modulus, ratio } => write!(f, "PARAMETRIZED({modulus}, {ratio})"),
        }
    }
}

impl Serialize for CongruenceSolution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One solution per non-trivial class modulo scalars: the element of least
/// order in the class (ties: least exponent vector), with the order of the
/// class itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScalarClass {
    pub projective_order: u64,
    pub modulus: u64,
    pub exps: [u64; 5],
}

pub fn derive_constraints(family: &OrbitFamily) -> CongruenceSystem {
    let e = family.representative.exps();
    let shifted = |j: usize, k: usize| i64::from(e[(k + 5 - j % 5) % 5]);
    let mut rows = [[0i64; 5]; 5];
    for (j, row) in rows.iter_mut().take(4).enumerate() {
        for (k, c) in row.iter_mut().enumerate() {
            *c = shifted(j, k) - shifted(j + 1, k);
        }
    }
    rows[4] = [1; 5];
    CongruenceSystem {
        family: family.id,
        rows,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankDeficient;

/// Diagonal entries `d` and a unimodular `Q` with `P A Q = diag(d)` for some unimodular `P`.
#[allow(clippy::needless_range_loop)]
pub fn smith_diagonal(rows: &[[i64; 5]; 5]) -> ([i128; 5], [[i128; 5]; 5]) {
    let mut a: [[i128; 5]; 5] = rows.map(|r| r.map(i128::from));
    let mut q = [[0i128; 5]; 5];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = 1;
    }
    for t in 0..5 {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..5)
                .flat_map(|i| (t..5).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in q.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..5 {
                let f = a[i][t] / p;
                for j in t..5 {
                    a[i][j] -= f * a[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..5 {
                let f = a[t][j] / p;
                for row in a.iter_mut() {
                    row[j] -= f * row[t];
                }
                for row in q.iter_mut() {
                    row[j] -= f * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    let mut d = [0i128; 5];
    for (i, x) in d.iter_mut().enumerate() {
        *x = a[i][i].abs();
    }
    (d, q)
}

/// The scalar classes of `S`, computed from the Smith form.
pub fn solution_classes(system: &CongruenceSystem) -> Result<Vec<ScalarClass>, RankDeficient> {
    let (d, q) = smith_diagonal(&system.rows);
    if d.contains(&0) {
        return Err(RankDeficient);
    }
    let denom = d.iter().fold(1u64, |m, &x| lcm(m, x as u64));
    // x = Q y with y_i in (1/d_i) Z / Z, written over the common denominator
    let basis: Vec<[u64; 5]> = (0..5)
        .map(|i| {
            let step = (denom / d[i] as u64) as i128;
            std::array::from_fn(|j| (q[j][i] * step).rem_euclid(denom as i128) as u64)
        })
        .collect();
    let mut elements: Vec<[u64; 5]> = vec![[0; 5]];
    for (i, b) in basis.iter().enumerate() {
        let mut grown = Vec::with_capacity(elements.len() * d[i] as usize);
        for x in &elements {
            let mut y = *x;
            for _ in 0..d[i] {
                grown.push(y);
                for j in 0..5 {
                    y[j] = (y[j] + b[j]) % denom;
                }
            }
        }
        elements = grown;
    }

    let scalar_step = denom / 5;
    let mut seen: BTreeSet<[u64; 5]> = BTreeSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if is_scalar(&x) || seen.contains(&x) {
            continue;
        }
        let coset: Vec<[u64; 5]> = (0..5).map(|k| x.map(|v| (v + k * scalar_step) % denom)).collect();
        seen.extend(coset.iter().copied());
        let best = coset
            .iter()
            .map(|y| {
                let n = denom / y.iter().fold(denom, |g, &v| gcd(g, v));
                (n, y.map(|v| v * n / denom))
            })
            .min()
            .expect("five elements");
        classes.push(ScalarClass {
            projective_order: projective_order(best.0, &best.1),
            modulus: best.0,
            exps: best.1,
        });
    }
    classes.sort();
    Ok(classes)
}

pub fn solve_congruences(system: &CongruenceSystem) -> Result<CongruenceSolution, RankDeficient> {
    Ok(classify_classes(&solution_classes(system)?))
}

/// Exhaustive scan over `2 <= n <= n_max`, keeping elements of exact order `n`
/// that are least among their scalar multiples.
pub fn brute_force_classes(system: &CongruenceSystem, n_max: u64) -> Vec<ScalarClass> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for b in chain_solutions(&system.rows, n) {
            let sum: u64 = b.iter().sum::<u64>() % n;
            // 5c = -sum (mod n)
            for c in (0..n).filter(|c| (5 * c + sum).is_multiple_of(n)) {
                let a = b.map(|v| (v + c) % n);
                if a.iter().fold(n, |g, &v| gcd(g, v)) != 1 || is_scalar(&a) {
                    continue;
                }
                if least_among_scalar_multiples(n, &a) {
                    out.push(ScalarClass {
                        projective_order: projective_order(n, &a),
                        modulus: n,
                        exps: a,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

pub fn brute_force_congruences(system: &CongruenceSystem, n_max: u64) -> CongruenceSolution {
    classify_classes(&brute_force_classes(system, n_max))
}

/// Shared reading of a class list as one of the three table shapes.
pub fn classify_classes(classes: &[ScalarClass]) -> CongruenceSolution {
    if classes.is_empty() {
        return CongruenceSolution::ZeroOnly;
    }
    let orders: BTreeSet<u64> = classes.iter().map(|c| c.projective_order).collect();
    if orders.len() == 1 {
        let p = *orders.first().expect("nonempty");
        let ratio = |c: &ScalarClass| -> Option<u64> {
            let inv = inverse_mod(c.exps[0], p)?;
            let r = c.exps[1] * inv % p;
            (1..5).all(|i| c.exps[i] == c.exps[i - 1] * r % p).then_some(r)
        };
        let ratios: BTreeSet<Option<u64>> = classes.iter().map(ratio).collect();
        if classes.len() as u64 == p - 1 && classes.iter().all(|c| c.modulus == p) && ratios.len() == 1 {
            if let Some(Some(r)) = ratios.first() {
                return CongruenceSolution::Parametrized { modulus: p, ratio: *r };
            }
        }
    }
    CongruenceSolution::ModulusForced(orders)
}

fn is_scalar(a: &[u64; 5]) -> bool {
    a.iter().all(|&v| v == a[0])
}

// least k >= 1 with k a constant modulo n
fn projective_order(n: u64, a: &[u64; 5]) -> u64 {
    (1..=n)
        .find(|&k| a.iter().all(|&v| (k * v) % n == (k * a[0]) % n))
        .expect("k = n works")
}

fn least_among_scalar_multiples(n: u64, a: &[u64; 5]) -> bool {
    let m = lcm(n, 5);
    let lifted = a.map(|v| v * (m / n));
    (1..5).all(|k| {
        let y = lifted.map(|v| (v + k * (m / 5)) % m);
        let order = m / y.iter().fold(m, |g, &v| gcd(g, v));
        let exps = y.map(|v| v * order / m);
        (n, *a) <= (order, exps)
    })
}

fn inverse_mod(x: u64, n: u64) -> Option<u64> {
    (1..n).find(|&y| x * y % n == 1)
}

// All b in (Z/n)^5 with b_1 = 0 satisfying the four chain rows. Each row has
// zero coefficient sum, so shifting b by a constant changes nothing.
fn chain_solutions(rows: &[[i64; 5]; 5], n: u64) -> Vec<[u64; 5]> {
    let ni = n as i64;
    let chain: Vec<[i64; 5]> = rows[..4].iter().map(|r| r.map(|c| c.rem_euclid(ni))).collect();
    let mut out = Vec::new();
    let mut assigned: [Option<u64>; 5] = [Some(0), None, None, None, None];
    search(&chain, n, &mut assigned, &mut out);
    out
}

fn search(rows: &[[i64; 5]], n: u64, assigned: &mut [Option<u64>; 5], out: &mut Vec<[u64; 5]>) {
    let mut forced: Option<(usize, u64, u64)> = None;
    let mut branch: Option<(usize, usize)> = None;
    for row in rows {
        let free: Vec<usize> = (0..5).filter(|&k| row[k] != 0 && assigned[k].is_none()).collect();
        let partial: u64 = (0..5)
            .filter_map(|k| assigned[k].map(|v| row[k] as u64 * v % n))
            .sum::<u64>()
            % n;
        match free.len() {
            0 if partial != 0 => return,
            1 if forced.is_none() => forced = Some((free[0], row[free[0]] as u64, partial)),
            k if k >= 2 && branch.is_none_or(|(best, _)| k < best) => branch = Some((k, free[0])),
            _ => {}
        }
    }
    if assigned.iter().all(Option::is_some) {
        out.push(assigned.map(|v| v.expect("all assigned")));
        return;
    }
    let (var, values): (usize, Vec<u64>) = match forced {
        // coeff * x + partial = 0 (mod n)
        Some((var, coeff, partial)) => (var, (0..n).filter(|x| (coeff * x + partial) % n == 0).collect()),
        None => {
            // branch inside the row closest to being forced
            let var = branch
                .map(|(_, v)| v)
                .or_else(|| (0..5).find(|&k| assigned[k].is_none()))
                .expect("some variable is free");
            (var, (0..n).collect())
        }
    };
    for v in values {
        assigned[var] = Some(v);
        search(rows, n, assigned, out);
    }
    assigned[var] = None;
}

/// The table as printed, ratios written as powers of 4 (mod 11) or 34 (mod 61).
pub fn printed_table() -> Vec<(&'static str, CongruenceSolution)> {
    use CongruenceSolution::*;
    let forced = |ns: &[u64]| ModulusForced(ns.iter().copied().collect());
    let power = |base: u64, k: u32, n: u64| (0..k).fold(1, |acc, _| acc * base % n);
    let p11 = |k| Parametrized {
        modulus: 11,
        ratio: power(4, k, 11),
    };
    let p61 = |k| Parametrized {
        modulus: 61,
        ratio: power(34, k, 61),
    };
    vec![
        ("A1", ZeroOnly),
        ("B1", forced(&[2])),
        ("B2", ZeroOnly),
        ("B3", ZeroOnly),
        ("C1", forced(&[3])),
        ("C2", p11(3)),
        ("C3", p11(4)),
        ("C4", p11(1)),
        ("C5", p11(2)),
        ("C6", ZeroOnly),
        ("C7", ZeroOnly),
        ("D1", forced(&[2, 4])),
        ("D2", p61(2)),
        ("D3", p61(1)),
        ("D4", p61(4)),
        ("D5", p61(3)),
        ("D6", forced(&[2])),
        ("D7", forced(&[2])),
        ("D8", p11(1)),
        ("D9", p11(2)),
        ("D10", ZeroOnly),
        ("D11", ZeroOnly),
        ("D12", p11(3)),
        ("D13", p11(4)),
        ("D14", ZeroOnly),
    ]
}
