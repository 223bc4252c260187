//! Finite groups, normalized 3-cocycles, the quasi-Hopf algebras k^ω(G) and
//! the closed forms of their Heisenberg doubles.

mod closed;
mod cocycle;
mod examples;
mod group;
mod invertibility;
mod komega;
mod ratio;
mod section5;

pub use closed::{
    closed_form_dual_double, closed_form_elements, closed_form_plain_double, compare_canonical, compare_doubles,
    compare_u_vtilde, u_ratio, v_tilde_ratio, w_hat_ratio, w_tilde_ratio, ClosedForms,
};
pub use cocycle::{cyclic_cocycle, Cocycle3, CocycleReport, MAX_VIOLATIONS};
pub use examples::{klein_four, mutated_tables, v4_table, V4_TABLE_IDS};
pub use group::{FiniteGroup, GroupError};
pub use invertibility::{invertibility_criterion, ElementProbe, InvertibilityReport};
pub use komega::build_k_omega_g;
pub use ratio::OmegaRatio;
pub use section5::{check_section5_expansions, pentagon_lhs_ratio, pentagon_rhs_ratio, Corruption};

#[cfg(test)]
mod tests;
