//! Exact-arithmetic verification engine for Chern-number divisibility over
//! the complex cobordism ring and for the symbolic Riemann-Roch pipeline
//! on principally polarized abelian varieties.
//!
//! The crate is organized in layers:
//!
//! * [`arith`] — integers, rationals, valuations, partitions;
//! * [`sym`] — the symbolic coefficient ring `Q[a1..a4, b]`;
//! * [`series`] — sparse truncated graded series over that ring;
//! * [`chern`] — universal characteristic-class polynomials (Segre, power
//!   sums, Todd, Chern character);
//! * [`manifold`] — generator manifolds and their Chern numbers;
//! * [`snf`] — Smith normal form and integer linear systems;
//! * [`lattice`] — spanning sets, Chern matrices, divisibility verdicts;
//! * [`cache`] — on-disk Chern-matrix cache;
//! * [`jacobian`] — the codimension-4 subvariety pipeline and the
//!   multiplier lookup;
//! * [`report`] / [`commands`] — the CLI layer.

pub mod arith;
pub mod sym;
pub mod series;
