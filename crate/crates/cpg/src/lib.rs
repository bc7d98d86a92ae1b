//! Exact-arithmetic solvers and brute-force verifiers for cooperative
//! product games.
//!
//! A cooperative product game gives each player an integer weight of at
//! least 2 and values every nonempty coalition at the product of its
//! members' weights; the empty coalition is worth 0. That multiplicative
//! structure makes the game monotone, superadditive, and convex, so its
//! core is never empty, and a core imputation can be written down in one
//! pass: walk the players in any order and pay each one the amount by which
//! it grows the running product.
//!
//! Everything here is exact. Coalition values are arbitrary-precision
//! integers, payoffs are arbitrary-precision rationals, and no operation
//! rounds, so results are reproducible bit for bit.
//!
//! ```
//! use cpg::{core_check, marginal_vector, CoreVerdict, CpGame, Limits, Permutation};
//!
//! let game = CpGame::new([2u32, 3, 5])?;
//! let vector = marginal_vector(&game, &Permutation::identity(3))?;
//! let payoffs: Vec<String> = vector.payoffs().iter().map(ToString::to_string).collect();
//! assert_eq!(payoffs, ["2", "4", "24"]);
//! assert_eq!(core_check(&game, &vector, &Limits::default())?, CoreVerdict::InCore);
//! # Ok::<(), cpg::Error>(())
//! ```
//!
//! The `examples/` directory is the guided tour: one runnable program per
//! capability, from building games through mixing Weber-set imputations to
//! running the property oracles on counterexample tables. A thin `cpg`
//! binary exposes the same operations for shell use; see the crate README
//! for its formats and exit codes.
//!
//! # Modules
//!
//! - [`model`]: games, players, coalitions, and exact coalition values.
//! - [`solutions`]: imputations, excesses, core checks, marginal vectors,
//!   Shapley, Banzhaf, and Weber-set mixtures.
//! - [`verify`]: exhaustive property oracles over any tabulated game.
//! - [`formats`]: the text formats for games, tables, and imputations.
//! - [`cli`]: the command-line front end as a testable function.
//! - [`limits`]: guard rails for the exponential enumerations.

pub mod cli;
pub mod error;
pub mod formats;
pub mod limits;
pub mod model;
pub mod solutions;
pub mod verify;

pub use error::{Error, Result};
pub use formats::{
    parse_any_game, parse_game, parse_imputation, parse_index_list, parse_mix, parse_rational,
    parse_table, render_game, render_table, AnyGame, ParseError,
};
pub use limits::Limits;
pub use model::{Coalition, CpGame, PlayerId, Value, Weight};
pub use solutions::{
    banzhaf, blocks, core_check, excess, marginal_vector, shapley, weber_mix, CoreVerdict,
    Imputation, Permutation,
};
pub use verify::{
    check_convex, check_monotone, check_superadditive, find_dummies, to_table, CheckResult,
    GameView, TableGame, Witness,
};
