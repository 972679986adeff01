//! Exact solver for envy-free stick division.
//!
//! Given sticks `L_1, …, L_n` and a target `k`, find the cut length `l*` that
//! yields at least `k` equal pieces of length `l*` (with no leftover piece
//! longer than `l*`) using the fewest cuts. The optimum is the largest
//! feasible cut length, and it is always of the form `L_i / j`.
//!
//! ```
//! use stickcut::{instances, solver, Rational, Strategy, SolveOptions};
//!
//! let inst = instances::gen_example(4, &Rational::from(2)).unwrap();
//! let solution = solver::solve(&inst, Strategy::default(), &SolveOptions::default()).unwrap();
//! assert_eq!(solution.l_star, Rational::from(2));
//! assert_eq!(solution.cuts, 8);
//! ```

pub mod candidates;
pub mod cli;
pub mod counting;
pub mod error;
pub mod instances;
pub mod rational;
pub mod solver;

pub use candidates::Bounds;
pub use counting::{Cutting, IndexSet, Instance};
pub use error::{Error, Result};
pub use rational::Rational;
pub use solver::{Algorithm, Solution, SolveOptions, Strategy};
