//! The group spec file: a TOML description of a monomial group by diagonal
//! generators and twisted permutation lifts.
//!
//! ```toml
//! diagonal_generators = [
//!     [11, 1, 4, 5, 9, 3],
//! ]
//! dimension = 5
//!
//! [flags]
//! cap = 2000000
//! require_sl = true
//!
//! [[monomial_generators]]
//! perm = [2, 3, 4, 5, 1]
//! ```
//!
//! Permutations are 1-based image lists: `perm[i] = j` sends `x_i` to `x_j`.
//! A twist `[n, a_1, .., a_dim]` multiplies coordinate `i` by `zeta_n^{a_i}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;
use wexc::monogroup::{DiagonalElement, MonomialElement, Permutation, DEFAULT_CAP};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Syntax(String),

    #[error("{path}: {message}")]
    Field { path: String, message: String },

    #[error("spec lists no generators")]
    EmptySpec,
}

fn field(path: impl Into<String>, message: impl Into<String>) -> SpecError {
    SpecError::Field {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    dimension: i64,
    #[serde(default)]
    diagonal_generators: Vec<Vec<i64>>,
    #[serde(default)]
    monomial_generators: Vec<RawMonomial>,
    #[serde(default)]
    flags: RawFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonomial {
    perm: Vec<i64>,
    twist: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    require_sl: Option<bool>,
    cap: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSpec {
    /// 1-based images.
    pub perm: Vec<usize>,
    /// `[n, a_1, .., a_dim]`.
    pub twist: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    pub require_sl: bool,
    pub cap: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Self {
            require_sl: true,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub dimension: usize,
    /// Each entry is `[n, a_1, .., a_dim]`.
    pub diagonal_generators: Vec<Vec<i64>>,
    pub monomial_generators: Vec<MonomialSpec>,
    pub flags: Flags,
}

impl GroupSpec {
    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let raw: RawSpec = toml::from_str(text).map_err(|e| SpecError::Syntax(e.to_string().trim_end().to_string()))?;
        validate(raw)
    }

    /// Diagonal generators first, then the monomial ones, in file order.
    pub fn generators(&self) -> Vec<MonomialElement> {
        let diag = self.diagonal_generators.iter().map(|v| {
            DiagonalElement::new(v[0] as u64, &v[1..])
                .expect("validated")
                .to_monomial()
        });
        let mono = self.monomial_generators.iter().map(|m| {
            let perm = Permutation::from_one_based(&m.perm).expect("validated");
            match &m.twist {
                Some(t) => MonomialElement::new(perm, t[0] as u64, &t[1..]).expect("validated"),
                None => MonomialElement::permutation(perm),
            }
        });
        diag.chain(mono).collect()
    }

    /// Field path of the generator at `index` in [`GroupSpec::generators`] order.
    pub fn generator_path(&self, index: usize) -> String {
        let nd = self.diagonal_generators.len();
        if index < nd {
            format!("diagonal_generators[{index}]")
        } else {
            format!("monomial_generators[{}]", index - nd)
        }
    }

    /// Every generator rescaled into SL; diagonal ones stay diagonal.
    pub fn normalized(&self) -> wexc::Result<Self> {
        let diagonal_generators = self
            .diagonal_generators
            .iter()
            .map(|v| {
                let g = DiagonalElement::new(v[0] as u64, &v[1..])?
                    .to_monomial()
                    .normalize_to_sl()?;
                Ok(twist_vector(&g))
            })
            .collect::<wexc::Result<_>>()?;
        let gens = self.generators();
        let monomial_generators = self
            .monomial_generators
            .iter()
            .zip(&gens[self.diagonal_generators.len()..])
            .map(|(m, g)| {
                let g = g.normalize_to_sl()?;
                let twist = Some(twist_vector(&g)).filter(|t| m.twist.is_some() || t[1..].iter().any(|&a| a != 0));
                Ok(MonomialSpec {
                    perm: m.perm.clone(),
                    twist,
                })
            })
            .collect::<wexc::Result<_>>()?;
        Ok(Self {
            dimension: self.dimension,
            diagonal_generators,
            monomial_generators,
            flags: self.flags.clone(),
        })
    }

    /// Canonical TOML: keys sorted, one generator per line, integers in decimal.
    pub fn to_canonical_toml(&self) -> String {
        let mut out = String::new();
        if self.diagonal_generators.is_empty() {
            out.push_str("diagonal_generators = []\n");
        } else {
            out.push_str("diagonal_generators = [\n");
            for v in &self.diagonal_generators {
                let _ = writeln!(out, "    {},", int_array(v));
            }
            out.push_str("]\n");
        }
        let _ = writeln!(out, "dimension = {}", self.dimension);
        let _ = write!(
            out,
            "\n[flags]\ncap = {}\nrequire_sl = {}\n",
            self.flags.cap, self.flags.require_sl
        );
        for m in &self.monomial_generators {
            let perm: Vec<i64> = m.perm.iter().map(|&p| p as i64).collect();
            let _ = write!(out, "\n[[monomial_generators]]\nperm = {}\n", int_array(&perm));
            if let Some(t) = &m.twist {
                let _ = writeln!(out, "twist = {}", int_array(t));
            }
        }
        out
    }
}

fn int_array(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

// `[n, a_1, ..]` with the minimal modulus.
fn twist_vector(g: &MonomialElement) -> Vec<i64> {
    let m = g.minimized();
    std::iter::once(m.modulus() as i64)
        .chain(m.twist().iter().map(|&a| a as i64))
        .collect()
}

fn validate(raw: RawSpec) -> Result<GroupSpec, SpecError> {
    if raw.dimension < 1 {
        return Err(field("dimension", "must be positive"));
    }
    let dim = raw.dimension as usize;
    for (i, v) in raw.diagonal_generators.iter().enumerate() {
        check_exponents(&format!("diagonal_generators[{i}]"), v, dim)?;
    }
    let mut monomial_generators = Vec::new();
    for (i, m) in raw.monomial_generators.iter().enumerate() {
        let path = format!("monomial_generators[{i}]");
        if m.perm.len() != dim {
            return Err(field(
                format!("{path}.perm"),
                format!("expected {dim} images, found {}", m.perm.len()),
            ));
        }
        let mut seen = vec![false; dim];
        for (j, &p) in m.perm.iter().enumerate() {
            if p < 1 || p as usize > dim {
                return Err(field(
                    format!("{path}.perm[{j}]"),
                    format!("image {p} is outside 1..={dim}"),
                ));
            }
            if std::mem::replace(&mut seen[p as usize - 1], true) {
                return Err(field(
                    format!("{path}.perm[{j}]"),
                    format!("image {p} repeats; not a bijection"),
                ));
            }
        }
        if let Some(t) = &m.twist {
            check_exponents(&format!("{path}.twist"), t, dim)?;
        }
        monomial_generators.push(MonomialSpec {
            perm: m.perm.iter().map(|&p| p as usize).collect(),
            twist: m.twist.clone(),
        });
    }
    if raw.diagonal_generators.is_empty() && monomial_generators.is_empty() {
        return Err(SpecError::EmptySpec);
    }
    let mut flags = Flags::default();
    if let Some(r) = raw.flags.require_sl {
        flags.require_sl = r;
    }
    if let Some(cap) = raw.flags.cap {
        if cap < 1 {
            return Err(field("flags.cap", "must be positive"));
        }
        flags.cap = cap as usize;
    }
    Ok(GroupSpec {
        dimension: dim,
        diagonal_generators: raw.diagonal_generators,
        monomial_generators,
        flags,
    })
}

fn check_exponents(path: &str, v: &[i64], dim: usize) -> Result<(), SpecError> {
    if v.len() != dim + 1 {
        return Err(field(
            path,
            format!("expected {} entries [n, a1..a{dim}], found {}", dim + 1, v.len()),
        ));
    }
    if v[0] < 1 {
        return Err(field(format!("{path}[0]"), "modulus must be positive"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const KLEIN: &str = "dimension = 5\ndiagonal_generators = [[11, 1, 4, 5, 9, 3]]\n\n[[monomial_generators]]\nperm = [2, 3, 4, 5, 1]\n";

    #[test]
    fn parses_and_builds_generators() {
        let s = GroupSpec::parse(KLEIN).unwrap();
        assert_eq!(s.dimension, 5);
        assert_eq!(s.flags, Flags::default());
        let gens = s.generators();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1], MonomialElement::cyclic_shift(5));
        assert_eq!(s.generator_path(1), "monomial_generators[0]");
    }

    #[test]
    fn canonical_form_round_trips() {
        let s = GroupSpec::parse(KLEIN).unwrap();
        let text = s.to_canonical_toml();
        let again = GroupSpec::parse(&text).unwrap();
        assert_eq!(again, s);
        assert_eq!(again.to_canonical_toml(), text);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = KLEIN.replace("[2, 3, 4, 5, 1]", "[2, 2, 4, 5, 1]");
        let e = GroupSpec::parse(&bad).unwrap_err().to_string();
        assert!(e.starts_with("monomial_generators[0].perm[1]"), "{e}");
        let bad = KLEIN.replace("[11, 1, 4, 5, 9, 3]", "[11, 1, 4]");
        let e = GroupSpec::parse(&bad).unwrap_err().to_string();
        assert!(e.starts_with("diagonal_generators[0]:"), "{e}");
        let bad = KLEIN.replace("[11,", "[0,");
        assert!(GroupSpec::parse(&bad).unwrap_err().to_string().contains("modulus"));
        let e = GroupSpec::parse("dimension = 5\ncolour = 1\n").unwrap_err();
        assert!(matches!(e, SpecError::Syntax(_)), "{e}");
        assert!(e.to_string().contains("line"), "{e}");
        assert!(matches!(GroupSpec::parse("dimension = 3\n"), Err(SpecError::EmptySpec)));
    }

    #[test]
    fn normalize_shifts_the_twist() {
        // det of a 4-cycle lift in dim 4 is -1
        let s = GroupSpec::parse("dimension = 4\n[[monomial_generators]]\nperm = [2, 3, 4, 1]\n").unwrap();
        let n = s.normalized().unwrap();
        assert!(n.generators()[0].is_special_linear());
        assert_eq!(n.monomial_generators[0].twist, Some(vec![8, 1, 1, 1, 1]));
        let sl = GroupSpec::parse(KLEIN).unwrap();
        assert_eq!(sl.normalized().unwrap(), sl);
    }
}
