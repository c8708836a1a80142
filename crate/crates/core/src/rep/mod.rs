//! Representations of finite posets over a field.
//!
//! Hom spaces are solved as one exact linear system, Ext groups come from
//! projective resolutions built by iterated projective covers, and the
//! tilting module of a generalized-interval poset is assembled from
//! pushforwards of projectives.

mod adjoint;
mod hom;
mod module;
mod resolution;
mod tilting;

pub use adjoint::{pushforward, pushforward_morphism, restriction, restriction_morphism};
pub use hom::{hom_space, normalize, HomSpace};
pub use module::{
    cokernel, direct_sum, injective_module, interval_module, kernel, projective_map, projective_module, projective_sum,
    simple_module, Module, Morphism,
};
pub use resolution::{ext_dim, projective_resolution, ProjectiveResolution};
pub use tilting::{end_category, tilting_module, verify_tilting, TiltingModule, TiltingReport};
