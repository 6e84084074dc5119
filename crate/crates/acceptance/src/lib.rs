//! Carrier crate for the acceptance test suite; see `tests/acceptance.rs`.
