//! Integrals, Wedderburn blocks, characters and the elements `u` and `v`.

mod blocks;
mod integrals;
mod uv;

pub use blocks::{block_decomposition, center_basis, check_blocks, BlockData};
pub use integrals::{check_integrals, compute_integrals, compute_integrals_with, IntegralPair, RightIntegralConvention};
pub use uv::{check_u_properties, check_v_properties, compute_u, compute_v, VElement};
