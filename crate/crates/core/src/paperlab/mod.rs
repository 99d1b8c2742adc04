//! Reproducible checks of the dimension-5 monomial classification.

mod congruence;
mod families;
mod groups;
mod suite;

pub use congruence::{
    brute_force_classes, brute_force_congruences, classify_classes, derive_constraints, printed_table, smith_diagonal,
    solution_classes, solve_congruences, CongruenceSolution, CongruenceSystem, RankDeficient, ScalarClass,
};
pub use families::{families, family, OrbitFamily};
pub use groups::{
    check_exceptional_class, diagonal_bound, enumerate_exceptional_classes, extra_permutations, extremal_generators,
    heisenberg_generators, omega_sweep, primitive_reference, verify_extremal_bound, verify_heisenberg,
    verify_omega_rigidity, ClassOutcome, DiagonalBound, ExceptionalClass, ExtremalReport, HeisenbergReport,
    OmegaReport, PrimitiveEntry,
};
pub use suite::{run_suite, Status, SuiteItem, SuiteOptions, SuiteReport};
