//! Root data, Weyl groups, Bruhat order and parabolic quotients.

mod group;
mod parabolic;
mod root_datum;
pub mod type_a;

pub use group::{WeylElt, WeylGroup, DEFAULT_ORDER_LIMIT};
pub use parabolic::{Coset, Parabolic};
pub use root_datum::{Family, RootDatum};

/// A weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

/// Build the Weyl group of type `family` and `rank` with the default order limit.
pub fn weyl_group(family: Family, rank: usize) -> crate::Result<WeylGroup> {
    WeylGroup::new(RootDatum::new(family, rank)?)
}

#[cfg(test)]
mod tests;
