//! Dyck paths, parking functions, dinv statistics, the sweep map image and
//! marked removable corners, and the diagonal-cell deletion used by the
//! downset recursion.

mod marked;
mod parking;
mod path;

pub use marked::{zeta_and_corners, MarkedPath};
pub use parking::{
    descent_composition_of_inverse, enum_pf, forced_pairs, maximal_pf, maximal_pf_and_dinvset,
    path_dinv, ParkingFunction, PfStats,
};
pub use path::{enum_dyck, DyckPath};
