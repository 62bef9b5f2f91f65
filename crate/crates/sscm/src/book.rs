//! Binds the guide chapters in `book/src` as doc tests, so every code
//! block in the book compiles and runs against the crate it documents.
//! Compiled only under `cfg(doctest)`; one module per chapter keeps
//! failures attributable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scenarios.md")]
pub mod scenarios {}

#[doc = include_str!("../../../book/src/link-budget.md")]
pub mod link_budget {}

#[doc = include_str!("../../../book/src/channel-generation.md")]
pub mod channel_generation {}

#[doc = include_str!("../../../book/src/directional.md")]
pub mod directional {}

#[doc = include_str!("../../../book/src/statistics.md")]
pub mod statistics {}

#[doc = include_str!("../../../book/src/ensembles.md")]
pub mod ensembles {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
