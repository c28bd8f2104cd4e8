//! Exact quantitative invariants of finite simple groups.
//!
//! The crate combines symbolic data (orders of every family of finite
//! simple groups, in factored form) with concrete permutation realizations
//! that can be enumerated or sampled. On top of that sit element-order
//! censuses, prime graphs, Sylow normalizer arithmetic, and a small
//! laboratory for testing recognition statements by comparing invariants
//! across groups of equal order.
//!
//! ```
//! use sgq::catalog::{order_of_descriptor, GroupDescriptor};
//!
//! let m11: GroupDescriptor = "M11".parse().unwrap();
//! assert_eq!(order_of_descriptor(&m11).unwrap().to_string(), "2^4*3^2*5*11");
//! ```

pub mod catalog;
pub mod cli;
pub mod data;
pub mod error;
pub mod factored;
pub mod invariants;
pub mod io;
pub mod lab;
pub mod prime_graph;
pub mod provenance;
pub mod realize;

pub use error::{Error, Result};
pub use factored::{factor_integer, FactoredInteger};
