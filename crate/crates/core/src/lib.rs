//! Gyration on alternating sign matrices.
//!
//! An ASM of order `n` is equivalently a square-ice orientation of the grid
//! graph `L_n`, a blue/green edge coloring of `L_n` with two edges of each
//! color at every interior vertex, or a height function. Gyration flips
//! every unit square whose edge colors alternate, odd squares first and then
//! even squares. It rotates the blue link pattern one step clockwise, the
//! green one a step counterclockwise, and preserves the total number of
//! closed loops.
//!
//! Modules:
//! - [`grid`]: geometry of `L_n` and the four encodings with conversions.
//! - [`gyration`]: local moves, sweeps, half-steps, reflections, gyration.
//! - [`torus`]: gyration on even-by-even tori.
//! - [`paths`]: path tracing, endpoint labels, link patterns, statistics.
//! - [`enumeration`]: streaming generation of `A_n`, counts, classification.
//! - [`orbits`]: orbit sizes and orders of gyration-derived bijections.
//! - [`conjectures`]: nested link-pattern counts `A_{n,k}` and `B_{n,k}`.
//! - [`format`]: text and JSON file formats.
//! - [`verify`]: exhaustive property suites.

pub mod conjectures;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod grid;
pub mod gyration;
pub mod orbits;
pub mod paths;
pub mod torus;
pub mod verify;

pub use enumeration::{Cap, Workers};
pub use error::{Error, Result};
pub use grid::{
    Asm, BoundaryParity, Color, EdgeColoring, HeightFunction, IceOrientation, Parity, Point,
};
