//! Burnside rings of finite groups and their unit groups.
//!
//! The crate builds finite groups from presets or permutations, enumerates
//! their subgroup lattices, computes tables of marks and Burnside ring
//! arithmetic, materializes elementary biset operations as matrices, and
//! computes the unit group `B^×(G)` by four independent routes: a search
//! over ±1 mark vectors ([`units::units_oracle`]), the homomorphism
//! conditions on `N_G(H)/H` ([`units::yoshida_rank`]), vanishing on the
//! ε-elements of sections ([`units::section_image_rank`]), and compatible
//! families over sections ([`units::sectional_limit_rank`]).
//!
//! [`lab`] checks the exact-sequence dimension count and the ε identities.

#![allow(clippy::needless_range_loop)]

pub mod bisets;
pub mod burnside;
pub mod error;
pub mod gf2;
pub mod groups;
pub mod lab;
pub mod lattice;
pub mod units;

pub use burnside::{
    BurnsideElem, BurnsideRing, F2BurnsideElem, LinearForm, MarkMatrix, RationalElem,
};
pub use error::{Error, Result};
pub use groups::{build_preset, classify, quotient_group, Group, IsoClassLabel};
pub use lattice::{Section, SectionFilter, Subgroup, SubgroupTable};
pub use units::{Method, UnitGroupDescription};

/// Size limits checked before expensive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest group order accepted by the builders.
    pub max_elements: usize,
    /// Largest number of subgroups enumerated.
    pub max_subgroups: usize,
    /// log2 of the node budget of the unit search.
    pub oracle_bits: u32,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            max_elements: 10_000,
            max_subgroups: 20_000,
            oracle_bits: 24,
        }
    }
}
