//! Discrete Morse functions on hypergraphs, their gradient fields, and the
//! comparison with Morse functions on the associated simplicial complex.

mod discrepancy;
mod extension;
mod function;
mod gradient;

pub use discrepancy::{critical_discrepancy, critical_via_gradient, DiscrepancyCase, DiscrepancyReport};
pub use extension::{candidate_levels, search_extension, ExtensionConfig};
pub use function::{
    critical_set, dim_function, extension_obstruction, is_morse, restrict, satisfies_condition_c, ConditionC,
    CriticalReport, MorseCheck, MorseFunction, MorseViolation, Neighbours, NonCriticalWitness,
};
pub use gradient::{
    extend_gradient, gradient, is_acyclic, is_proper, is_semi_proper, linear_map, proper_violation, AcyclicCheck,
    GradedLinearMap, GradientField, SemiProperCheck,
};
