use crate::monogroup::Permutation;
use crate::semiinv::Monomial;

/// A `tau`-orbit of monomials of degree at most 4 in five variables, named by
/// its row in the congruence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitFamily {
    pub id: &'static str,
    pub representative: Monomial,
}

const TABLE: [(&str, [u32; 5]); 25] = [
    ("A1", [1, 0, 0, 0, 0]),
    ("B1", [2, 0, 0, 0, 0]),
    ("B2", [1, 1, 0, 0, 0]),
    ("B3", [1, 0, 1, 0, 0]),
    ("C1", [3, 0, 0, 0, 0]),
    ("C2", [2, 1, 0, 0, 0]),
    ("C3", [2, 0, 1, 0, 0]),
    ("C4", [2, 0, 0, 1, 0]),
    ("C5", [2, 0, 0, 0, 1]),
    ("C6", [1, 1, 1, 0, 0]),
    ("C7", [1, 1, 0, 1, 0]),
    ("D1", [4, 0, 0, 0, 0]),
    ("D2", [3, 1, 0, 0, 0]),
    ("D3", [3, 0, 1, 0, 0]),
    ("D4", [3, 0, 0, 1, 0]),
    ("D5", [3, 0, 0, 0, 1]),
    ("D6", [2, 2, 0, 0, 0]),
    ("D7", [2, 0, 2, 0, 0]),
    ("D8", [2, 1, 1, 0, 0]),
    ("D9", [2, 1, 0, 1, 0]),
    ("D10", [2, 1, 0, 0, 1]),
    ("D11", [2, 0, 1, 1, 0]),
    ("D12", [2, 0, 1, 0, 1]),
    ("D13", [2, 0, 0, 1, 1]),
    ("D14", [1, 1, 1, 1, 0]),
];

/// All 25 families in table order.
pub fn families() -> Vec<OrbitFamily> {
    TABLE
        .iter()
        .map(|(id, e)| OrbitFamily {
            id,
            representative: Monomial::new(e.to_vec()),
        })
        .collect()
}

pub fn family(id: &str) -> Option<OrbitFamily> {
    families().into_iter().find(|f| f.id == id)
}

impl OrbitFamily {
    pub fn degree(&self) -> u32 {
        self.representative.degree()
    }

    /// `m, tau(m), ..., tau^4(m)` with `tau: x_i -> x_{i+1}`.
    pub fn orbit(&self) -> Vec<Monomial> {
        let tau = Permutation::from_one_based(&[2, 3, 4, 5, 1]).expect("valid cycle");
        let mut out = vec![self.representative.clone()];
        for _ in 1..5 {
            let next = out.last().expect("nonempty").permuted(&tau);
            out.push(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiinv::{monomials_of_degree, orbit_decomposition};

    #[test]
    fn representatives_cover_every_orbit_once() {
        let tau = Permutation::from_one_based(&[2, 3, 4, 5, 1]).unwrap();
        let fams = families();
        for d in 1..=4 {
            let orbits = orbit_decomposition(&monomials_of_degree(5, d), std::slice::from_ref(&tau));
            let of_degree: Vec<_> = fams.iter().filter(|f| f.degree() == d).collect();
            assert_eq!(orbits.len(), of_degree.len(), "degree {d}");
            for f in of_degree {
                assert_eq!(orbits.iter().filter(|o| o.contains(&f.representative)).count(), 1);
                assert_eq!(f.orbit().len(), 5);
            }
        }
    }

    #[test]
    fn orbit_follows_the_shift() {
        let c4 = family("C4").unwrap();
        let names: Vec<String> = c4.orbit().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["x1^2*x4", "x2^2*x5", "x1*x3^2", "x2*x4^2", "x3*x5^2"]);
    }
}
