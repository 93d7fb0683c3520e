//! Free nilpotent presentations and exterior covers.

mod cover;
mod hall;

pub use cover::{
    cover_with, default_lift, diagonal_square_dim, exterior_center, exterior_cover, exterior_square, random_lift,
    tensor_square, Cover,
};
pub use hall::{
    free_nilpotent, free_nilpotent_dim, free_nilpotent_with_limit, hall_basis, hall_basis_with_limit, resource_limit,
    witt_dimension, word_string, FreeNilpotent, HallTree, HallWord, DEFAULT_RESOURCE_LIMIT, RESOURCE_LIMIT_VAR,
};
