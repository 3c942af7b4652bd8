//! Fixture catalog, random generators and verification.

mod catalog;
pub mod random;
pub mod search;
mod verify;

pub use catalog::{fixture, fixture_names, Expectation, Fixture, Property, Tag};
pub use verify::{verify, verify_fixture, Check, VerifyReport};
