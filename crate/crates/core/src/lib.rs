//! Casimir-Polder energy shifts of a ground-state atom near perfectly
//! reflecting bodies: a cylindrical wire, a half-plane and, as a reference,
//! an infinite plane mirror.
//!
//! Lengths are in an arbitrary unit `L`, transition energies `E` in `1/L`
//! (with `ħ = c = 1`). The response functions `Ξ_ρ, Ξ_φ, Ξ_z` are in `L⁻³` and
//! combine with the squared dipole matrix elements into the energy shift
//! `ΔW = -Σ Ξ_i |μ_i|²` in units of `μ²/(4πε₀L³)`; see [`shift`].

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod halfplane;
pub mod plane;
pub mod quad;
pub mod shift;
pub mod specfun;
pub mod wire;
pub mod xi;

pub use error::{Error, Result};
pub use halfplane::{xi_halfplane, HalfPlaneConfig};
pub use plane::{xi_plane, PlaneConfig};
pub use quad::QuadSettings;
pub use shift::{energy_shift, isotropic_shift, EnergyShift, Geometry, Transition};
pub use wire::{xi_wire, WireConfig};
pub use xi::XiTriple;
