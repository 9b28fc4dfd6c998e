//! Ground sets, posets, accessible distributive lattices and linear extensions.

mod dist;
mod order;
mod poset;
mod subset;

pub use dist::{irr_poset, is_accessible, order_ideals, Accessibility, DistLattice};
pub use order::{
    all_orders, count_linear_extensions, linear_extensions, linear_extensions_with,
    LinearExtensions, TotalOrder,
};
pub use poset::Poset;
pub(crate) use subset::k_subsets;
pub use subset::{Elements, Subset};
