//! Deciding when the Cayley transform `u ↦ (I + u)(I − u)⁻¹` maps a
//! representation's Lie algebra into its group.
//!
//! Three independent routes are provided:
//!
//! * [`cayleycfg`]: the weight-lattice test. The weight diagram must be the
//!   Weyl orbit of the highest weight (of size twice the rank, spanning, and
//!   origin-symmetric), possibly together with the origin.
//! * [`powerspan`]: exact algebraic closure tests (`abc + cba`, odd powers,
//!   cubes of the Cartan) on explicit matrix realizations from [`matrep`].
//! * [`cayleynum`]: floating-point shadows (log-series membership residual,
//!   Padé-order probe) of the exact criteria.
//!
//! [`classify`] runs the weight-lattice test over a bounded window of
//! dominant weights for the classical families.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod exactlin;
pub mod rootsys;
pub mod weightlat;
pub mod cayleycfg;
pub mod matrep;
pub mod powerspan;
pub mod cayleynum;
pub mod classify;
