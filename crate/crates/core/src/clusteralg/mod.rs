//! Geometric cluster algebras of finite type: tropical coefficients, Laurent
//! polynomials in the initial cluster, seeds and their mutation, exchange graphs,
//! universal coefficients and coefficient specialization.

mod exchange;
mod laurent;
mod seed;
mod specialization;
mod tropical;

pub use exchange::{exchange_graph, ExchangeGraph, DEFAULT_BUDGET};
pub use laurent::LaurentPoly;
pub use seed::{universal_seed, universal_ice_quiver, ExchangeRelation, Factor, Monomial, Seed, SeedJson};
pub use specialization::{check_specialization, SpecializationMap, SpecializationReport};
pub use tropical::TropicalMonomial;
