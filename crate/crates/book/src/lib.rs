//! The chapters of the guide in `book/`, compiled so that every Rust listing
//! runs under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/pairs.md")]
pub mod pairs {}
#[doc = include_str!("../../../book/src/polyhedral-products.md")]
pub mod polyhedral_products {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
