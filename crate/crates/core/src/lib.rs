//! Fusion coefficients of the Verlinde algebra of `gl_n` at level `ℓ`, with
//! the combinatorics behind them: partitions on a cylinder, skew and
//! cylindric tableaux, ribbon tabloids and crystal operators.

pub mod crystal;
pub mod cylindric;
pub mod error;
pub mod fusion;
pub mod partitions;
pub mod tableaux;
pub mod tabloids;

pub use crystal::{
    apply_crystal, apply_crystal_tableau, crystal_pairs, lr_via_involution, rs_involution,
    CrystalOp, CrystalPair, SignedPermutation,
};
pub use cylindric::{
    cylindric_kostka, enumerate_cylindric, fusion_pieri, is_cylindric, CylindricTableau,
};
pub use error::{Error, Result};
pub use fusion::{
    expand_product, fusion, fusion_kac_walton, fusion_positive, fusion_signed_det,
    fusion_signed_tabloid, positive_witness, straighten, Method, SchurExpansion,
};
pub use partitions::{
    complement, cutting_point, superpose, window_transform, Cell, FusionContext, Partition,
    SkewShape, TransformCase, WindowTransform,
};
pub use tableaux::{
    enumerate_skew_tableaux, is_lattice, kostka, lr_coefficient, Content, SkewTableau, Word,
};
pub use tabloids::{enumerate_tabloids, inverse_kostka, weight_to_tabloid, Tabloid};
