use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::congruence::{
    brute_force_congruences, derive_constraints, printed_table, solve_congruences, CongruenceSolution,
};
use super::families::family;
use super::groups::{
    check_exceptional_class, enumerate_exceptional_classes, primitive_reference, verify_extremal_bound,
    verify_heisenberg, verify_omega_rigidity, ClassOutcome,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Solver and printed table disagree; surfaced for review, not a failure.
    Flag,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flag => "FLAG",
        })
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteItem {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl SuiteItem {
    fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self {
            id: id.into(),
            status,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub n_max: u64,
    /// Groups of the omega sweep to examine; `None` runs the whole sweep.
    pub budget: Option<usize>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            n_max: 100,
            budget: None,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }
}

pub fn run_suite(options: &SuiteOptions) -> SuiteReport {
    match options.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
            Ok(pool) => pool.install(|| run_items(options)),
            Err(_) => run_items(options),
        },
        None => run_items(options),
    }
}

fn run_items(options: &SuiteOptions) -> SuiteReport {
    let mut items = congruence_items(options.n_max);
    items.extend(class_items());
    items.extend(extremal_items());
    items.push(match verify_heisenberg() {
        Ok(r) => SuiteItem::new(
            "heisenberg",
            r.holds(),
            format!(
                "order={} irreducible={} spaces_by_degree={:?} verdict={}",
                r.order, r.irreducible, r.spaces_by_degree, r.verdict
            ),
        ),
        Err(e) => SuiteItem::new("heisenberg", false, e.to_string()),
    });
    items.push(match verify_omega_rigidity(options.budget) {
        Ok(r) => SuiteItem::new(
            "omega-rigidity",
            r.holds(),
            format!(
                "examined {} of {} groups; {} with a square-family quartic; {} counterexamples{}",
                r.examined,
                r.sweep_size,
                r.with_family_semi_invariant,
                r.counterexamples.len(),
                r.counterexamples
                    .first()
                    .map(|c| format!(", first: {c}"))
                    .unwrap_or_default()
            ),
        ),
        Err(e) => SuiteItem::new("omega-rigidity", false, e.to_string()),
    });
    for p in primitive_reference() {
        let degree = p.semi_invariant_degree.map_or("none".to_string(), |d| d.to_string());
        items.push(SuiteItem::new(
            format!("primitive/{}", p.group),
            true,
            format!("degree={} witness={} verdict={}", degree, p.witness, p.verdict),
        ));
    }
    SuiteReport { items }
}

fn congruence_items(n_max: u64) -> Vec<SuiteItem> {
    let rows: Vec<(SuiteItem, Option<CongruenceSolution>)> = printed_table()
        .into_par_iter()
        .map(|(id, printed)| {
            let item_id = format!("congruence/{id}");
            let system = derive_constraints(&family(id).expect("table ids are families"));
            let Ok(lattice) = solve_congruences(&system) else {
                return (
                    SuiteItem::new(item_id, false, "constraint matrix is rank deficient"),
                    None,
                );
            };
            let oracle = brute_force_congruences(&system, n_max);
            let detail = format!("lattice={lattice} oracle={oracle} printed={printed}");
            let status = if lattice != oracle {
                Status::Fail
            } else if lattice != printed {
                Status::Flag
            } else {
                Status::Pass
            };
            (
                SuiteItem {
                    id: item_id,
                    status,
                    detail,
                },
                Some(lattice),
            )
        })
        .collect();

    let solved: BTreeMap<&str, u64> = printed_table()
        .iter()
        .zip(&rows)
        .filter_map(|((id, _), (_, s))| match s {
            Some(CongruenceSolution::Parametrized { ratio, .. }) => Some((*id, *ratio)),
            _ => None,
        })
        .collect();
    let mut items: Vec<SuiteItem> = rows.into_iter().map(|(i, _)| i).collect();
    items.push(ratio_item(
        "congruence/ratios-11",
        &solved,
        11,
        "C4",
        &[
            ("C2", 3),
            ("C3", 4),
            ("C5", 2),
            ("D8", 1),
            ("D9", 2),
            ("D12", 3),
            ("D13", 4),
        ],
    ));
    items.push(ratio_item(
        "congruence/ratios-61",
        &solved,
        61,
        "D3",
        &[("D2", 2), ("D4", 4), ("D5", 3)],
    ));
    items
}

// Every listed ratio is the stated power of the base family's ratio.
fn ratio_item(id: &str, solved: &BTreeMap<&str, u64>, n: u64, base: &str, powers: &[(&str, u32)]) -> SuiteItem {
    let Some(&r) = solved.get(base) else {
        return SuiteItem::new(id, false, format!("{base} is not parametrized"));
    };
    let mismatches: Vec<String> = powers
        .iter()
        .filter(|(fam, k)| solved.get(fam) != Some(&(0..*k).fold(1, |acc, _| acc * r % n)))
        .map(|(fam, k)| format!("{fam} != {base}^{k}"))
        .collect();
    let detail = if mismatches.is_empty() {
        format!("ratio({base}) = {r} mod {n}; all powers consistent")
    } else {
        mismatches.join("; ")
    };
    SuiteItem::new(id, mismatches.is_empty(), detail)
}

fn class_items() -> Vec<SuiteItem> {
    let classes = enumerate_exceptional_classes();
    let outcomes: Vec<_> = classes.par_iter().map(check_exceptional_class).collect();
    let mut items = Vec::new();
    for (c, o) in classes.iter().zip(&outcomes) {
        items.push(match o {
            Ok(o) => SuiteItem::new(
                format!("class/{}", c.label()),
                o.matches(c),
                format!(
                    "order={} first_degree={:?} verdict={}",
                    o.order, o.first_degree, o.verdict
                ),
            ),
            Err(e) => SuiteItem::new(format!("class/{}", c.label()), false, e.to_string()),
        });
    }
    // classes come in (without, with) scalar pairs
    for (pair, res) in classes.chunks(2).zip(outcomes.chunks(2)) {
        let id = format!("class-pair/{}/k={}", pair[0].modulus, pair[0].k);
        items.push(match (&res[0], &res[1]) {
            (Ok(a), Ok(b)) => {
                let same = |o: &ClassOutcome| (o.verdict, o.first_degree);
                SuiteItem::new(id, same(a) == same(b), format!("orders {} and {}", a.order, b.order))
            }
            _ => SuiteItem::new(id, false, "class check failed"),
        });
    }
    items
}

fn extremal_items() -> Vec<SuiteItem> {
    match verify_extremal_bound() {
        Ok(r) => {
            let group_ok = r.order == 153_600
                && r.irreducible
                && r.quartic_sum_in_basis
                && r.quartic_sum_semi_invariant
                && r.verdict == crate::classify::Verdict::NotWeaklyExceptional;
            let mut items = vec![SuiteItem::new(
                "extremal/group",
                group_ok,
                format!(
                    "order={} irreducible={} quartic_sum_in_basis={} verdict={}",
                    r.order, r.irreducible, r.quartic_sum_in_basis, r.verdict
                ),
            )];
            for b in &r.diagonal_bounds {
                items.push(SuiteItem::new(
                    format!("extremal/diagonal-d{}", b.d),
                    b.holds(),
                    format!(
                        "closure={} enumerated={} expected={} same_elements={}",
                        b.closure_order,
                        b.enumerated_order,
                        5 * b.d.pow(4),
                        b.same_elements
                    ),
                ));
            }
            items
        }
        Err(e) => vec![SuiteItem::new("extremal/group", false, e.to_string())],
    }
}
