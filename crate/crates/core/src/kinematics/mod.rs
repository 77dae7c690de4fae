//! Elementary rational weights, colored parameter collections, partition
//! enumeration with cardinality profiles, and the coefficient functions of
//! the action and recurrence formulas.

mod collection;
mod funcs;
mod partition;
mod profiles;
mod weights;

pub use collection::{parse_collection, Collection};
pub use funcs::{
    f, f_set, frak_f, frak_f_set, g, g_set, gamma, gamma_set, h, h_set, inv_f, inv_f_set,
    inv_frak_f, inv_frak_f_set, inv_g, inv_g_set, inv_h, inv_h_set, kin_eval, omega, omega_plain,
    prod_pairs, KinFn,
};
pub use partition::{binomial, enum_partitions, partitions_or_empty, Profile, Split};
pub use profiles::{profile_action, profile_rec_b, profile_rec_c, ProfileOutcome};
pub use weights::{kappa, phi_action, psi_rec, shifted, sigma};
