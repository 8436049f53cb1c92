//! The repetition quiver `ZQ`, its framed version, mesh categories, and the
//! identification of `ZQ` with the indecomposables of the derived category.

mod happel;
mod hom;
mod paths;
mod vertex;
mod window;

pub use happel::{DerivedModel, DerivedPoint, Happel};
pub use hom::{FrozenFilter, HomFunctor, MeshCategory, Translated};
pub use paths::{mesh_hom_dim, PathHom};
pub use vertex::{sigma, sigma_inv, RQVertex, VertexMap};
pub use window::{build_zq, ArrowLabel, RepetitionQuiver, TranslationQuiver};
