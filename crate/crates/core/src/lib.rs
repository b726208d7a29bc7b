//! Monomial ideals with linear quotients: admissible orders, homological
//! shift ideals, polymatroidal families, socles, and a Betti-number oracle.

pub mod error;
pub mod families;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod quotients;
pub mod socle;

pub use error::{Error, Result};
pub use families::{
    borel_closure, check_exchange, is_matroidal, is_polymatroidal, is_strongly_stable, random_polymatroidal,
    random_transversal, realize, veronese_hs, Budget, ExchangeCheck, ExchangeMode, ExchangeWitness, FamilySpec,
    Stability,
};
pub use ideal::{minimal_generators, MonomialIdeal};
pub use monomial::{distance, unit_exchange, Monomial, VariableOrder, MAX_VARS};
pub use oracle::{
    betti_table, betti_table_with, ek_betti, hs_oracle, lcm_lattice, upper_koszul, BettiTable, SimplicialComplexFrame,
};
pub use quotients::{
    certify_lex, certify_order, find_admissible_order, hs1_distance, hs_distance, hs_from_certificate,
    is_taylor_multidegree, taylor_shifts, Admissibility, OrderFailure, OrderSearch, QuotientCertificate, SearchBudget,
    TaylorCap,
};
pub use socle::{
    family_max_pd, family_socle, intersection_graph, max_pd, power_persistence, socle_colon, socle_exchange,
    socle_report, spanning_tree_socle, top_shift, IntersectionGraph, Persistence, SocleReport, SocleRoute,
};
