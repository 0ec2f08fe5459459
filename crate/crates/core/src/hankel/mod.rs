//! Inverse and binomial transforms, Hankel determinants and Jacobi continued fractions.

mod determinants;
mod jfraction;
mod transforms;

pub use determinants::{
    dodgson_check, hankel_det, hankel_matrix, hankel_transform, hankel_transform_condensation,
    hankel_transform_fast, laymangen_degree_check, laymangen_s1_check,
};
pub use jfraction::{jfraction_contract, jfraction_expand, principal_minor_product, JFraction};
pub use transforms::{
    binomial_transform, binomial_transform_gf, inverse_transform, inverse_transform_iterate,
    inverse_transform_power,
};
