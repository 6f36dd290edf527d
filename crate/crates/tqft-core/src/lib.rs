//! Exact computations for topological quantum field theories on finite
//! combinatorial spaces.
//!
//! Everything here is exact: vertex sets and simplices are finite integer
//! data, homology ranks come from fraction-free integer elimination, field
//! theory values are formal powers `u^q` with rational exponents, and state
//! sums are exact fractions. No floating point appears anywhere.
//!
//! The crate is organised around a small number of interlocking pieces:
//!
//! - [`complex`] — finite abstract simplicial complexes and marked complexes
//!   `(M, Σ)` whose boundary pieces carry in/out labels.
//! - [`homology`] — chain complexes, Betti numbers (absolute and relative)
//!   and the homological Euler characteristic.
//! - [`gluing`] — gluing morphisms: the quotient construction identifying
//!   two boundary pieces, the five point-set conditions a gluing map must
//!   satisfy, and composition of gluings.
//! - [`quinn`] — the generalized Euler-characteristic theories
//!   `Z_M = u^{c1·χ(M) + c2·χ(Σ_in) + c3·χ(Σ_out)}` together with the
//!   functoriality constraint `c1 + c2 + c3 + c4 = 0`.
//! - [`statesum`] — finite-group state sums on closed triangulated surfaces
//!   with Pachner moves.
//! - [`vect`] — the dimension-zero vector-space theory: cup/cap elements,
//!   the circle invariant and trace closure, over exact rationals.
//!
//! The crate is `no_std` (with `alloc`); all types are immutable after
//! construction and all operations are pure functions, so values may be
//! shared freely across threads.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod complex;
pub mod gluing;
pub mod homology;
pub mod quinn;
pub mod rational;
pub mod rng;
pub mod statesum;
pub mod vect;

pub use complex::{BoundaryComponent, Label, MarkedComplex, Simplex, SimplicialComplex, SimplicialMap};
pub use gluing::{GluingMorphism, GluingSpec};
pub use homology::{betti, BettiVector, ChainComplex};
pub use quinn::{EulerTheoryParams, ZValue};
pub use rational::Rational;
pub use statesum::{Coloring, FiniteGroup, Surface2D};

#[cfg(test)]
mod thread_safety {
    // Everything is immutable after construction, so sharing across
    // threads must stay possible; keep that statically checked.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_send_and_sync() {
        assert_send_sync::<super::SimplicialComplex>();
        assert_send_sync::<super::MarkedComplex>();
        assert_send_sync::<super::GluingMorphism>();
        assert_send_sync::<super::ZValue>();
        assert_send_sync::<super::FiniteGroup>();
        assert_send_sync::<super::Surface2D>();
        assert_send_sync::<super::vect::LinearMap>();
        assert_send_sync::<super::ChainComplex>();
    }
}
