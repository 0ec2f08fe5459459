//! Łukasiewicz words, Motzkin paths, plane and binary trees.
//!
//! Everything here is computed by explicit enumeration and serves as an
//! independent check on the algebraic modules.

mod lgv;
mod motzkin;
mod trees;
mod words;

pub use lgv::{lgv_minor_oracle, swap_tails, LatticePath};
pub use motzkin::{enum_motzkin, motzkin_prime_factorize, motzkin_weight, path_weight, MotzkinPath, Step};
pub use trees::{
    contract_left, contract_left_inverse, contract_right, contract_right_inverse, dihedral_orbits,
    enum_binary_trees, enum_plane_trees, iota_l, iota_l_plane, iota_r, iota_r_plane, tree_bijections,
    tree_to_word, word_to_tree, BinaryTree, OrbitReport, PlaneTree, TreeSide,
};
pub use words::{
    cyclic_bijection, cyclic_bijection_inverse, enum_weighted_words, enum_words, factorize_luk,
    lukasiewicz_series, parens_to_word, reduced_word_series_check, valid_rotations, word_coefficient_oracle,
    word_to_parens, Word,
};
