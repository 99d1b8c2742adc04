//! The weak-exceptionality verdict for monomial groups.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monogroup::{generate_closure, MonomialElement, MonomialGroup};
use crate::semiinv::{semi_invariants, SemiInvariantSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotWeaklyExceptional,
    WeaklyExceptional,
    /// No obstruction found, but no theorem covers this dimension.
    WeaklyExceptionalConjectural,
    /// Irreducible but containing quasi-reflections; the criterion does not apply.
    IndeterminateQuasiReflections,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotWeaklyExceptional => "NOT_WEAKLY_EXCEPTIONAL",
            Verdict::WeaklyExceptional => "WEAKLY_EXCEPTIONAL",
            Verdict::WeaklyExceptionalConjectural => "WEAKLY_EXCEPTIONAL_CONJECTURAL",
            Verdict::IndeterminateQuasiReflections => "INDETERMINATE_QUASI_REFLECTIONS",
        })
    }
}

/// The permutation image `T` of `G -> S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TLabel {
    C5,
    D10,
    GA15,
    A5,
    S5,
    Intransitive,
    /// Transitive, outside dimension 5, of the given order.
    Other(usize),
}

impl fmt::Display for TLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TLabel::C5 => f.write_str("C5"),
            TLabel::D10 => f.write_str("D10"),
            TLabel::GA15 => f.write_str("GA15"),
            TLabel::A5 => f.write_str("A5"),
            TLabel::S5 => f.write_str("S5"),
            TLabel::Intransitive => f.write_str("intransitive"),
            TLabel::Other(order) => write!(f, "transitive of order {order}"),
        }
    }
}

impl Serialize for TLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Name the transitive image of a group in dimension 5 by its order.
///
/// The transitive subgroups of `S_5` are told apart by order alone.
pub fn identify_t(group: &MonomialGroup) -> Result<TLabel> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let order = group.permutation_image().len();
    if group.dim() != 5 {
        return Ok(TLabel::Other(order));
    }
    Ok(match order {
        5 => TLabel::C5,
        10 => TLabel::D10,
        20 => TLabel::GA15,
        60 => TLabel::A5,
        120 => TLabel::S5,
        _ => TLabel::Other(order),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Search every degree even after a semi-invariant turns up.
    pub full: bool,
    /// Highest degree to search; never below `dim - 1`.
    pub max_degree: Option<u32>,
    pub require_sl: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            full: false,
            max_degree: None,
            require_sl: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub order: usize,
    pub diag_order: usize,
    pub t_label: TLabel,
    pub irreducible: bool,
    pub quasi_reflections: Vec<String>,
    /// Every searched degree appears, with an empty list when nothing was found.
    pub semi_invariants_by_degree: BTreeMap<u32, Vec<SemiInvariantSpace>>,
    pub first_semi_invariant_degree: Option<u32>,
    pub verdict: Verdict,
    pub reason: String,
}

pub fn classify(group: &MonomialGroup, options: &ClassifyOptions) -> Result<ClassificationReport> {
    let dim = group.dim();
    if dim < 2 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if options.require_sl {
        if let Some((index, g)) = group
            .generators()
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_special_linear())
        {
            return Err(Error::NotSpecialLinear {
                index,
                det: g.determinant().to_string(),
            });
        }
    }

    let t_label = identify_t(group).unwrap_or(TLabel::Intransitive);
    let irreducible = group.is_irreducible();
    let quasi_reflections: Vec<String> = group.quasi_reflections().iter().map(ToString::to_string).collect();

    let low = dim as u32 - 1;
    let top = options.max_degree.map_or(low, |k| k.max(low));
    let mut by_degree = BTreeMap::new();
    for d in 1..=top {
        let spaces = semi_invariants(group, d);
        let found = !spaces.is_empty();
        by_degree.insert(d, spaces);
        if found && !options.full {
            break;
        }
    }
    let first = by_degree.iter().find(|(_, s)| !s.is_empty()).map(|(&d, _)| d);
    let low_semi_invariant = first.filter(|&d| d <= low);

    let (verdict, reason) = if !quasi_reflections.is_empty() {
        if irreducible {
            (
                Verdict::IndeterminateQuasiReflections,
                "irreducible, but contains quasi-reflections".to_string(),
            )
        } else {
            (Verdict::NotWeaklyExceptional, "reducible".to_string())
        }
    } else if !irreducible {
        (Verdict::NotWeaklyExceptional, "reducible".to_string())
    } else if let Some(d) = low_semi_invariant {
        (Verdict::NotWeaklyExceptional, format!("semi-invariant of degree {d}"))
    } else {
        let reason = format!("irreducible with no semi-invariant of degree at most {low}");
        match dim {
            2 | 5 => (Verdict::WeaklyExceptional, reason),
            _ => (Verdict::WeaklyExceptionalConjectural, reason),
        }
    };

    Ok(ClassificationReport {
        dim,
        order: group.order(),
        diag_order: group.diag_order(),
        t_label,
        irreducible,
        quasi_reflections,
        semi_invariants_by_degree: by_degree,
        first_semi_invariant_degree: first,
        verdict,
        reason,
    })
}

/// Closure followed by [`classify`].
pub fn classify_generators(
    generators: &[MonomialElement],
    cap: usize,
    options: &ClassifyOptions,
) -> Result<(MonomialGroup, ClassificationReport)> {
    if options.require_sl {
        if let Some((index, g)) = generators.iter().enumerate().find(|(_, g)| !g.is_special_linear()) {
            return Err(Error::NotSpecialLinear {
                index,
                det: g.determinant().to_string(),
            });
        }
    }
    let group = generate_closure(generators, cap)?;
    let report = classify(&group, options)?;
    Ok((group, report))
}
