//! RSP provider engine: schema catalog, user registry and access control,
//! the in-memory relational store, and the three operation behaviors
//! (header enumeration, auto-joined paginated reads, single-row submits).
//!
//! The engine is a set of pure functions over [`StoreState`]: reads take
//! `&StoreState`, submits take `&mut StoreState` and modify it only when
//! every check passes. Callers that need concurrency wrap the state in a
//! reader-writer lock (the HTTP service does exactly that), which gives the
//! single-writer / multiple-reader contract.

mod audit;
mod auth;
mod catalog;
mod error;
mod fixture;
mod read;
mod state;
mod submit;

pub use audit::audit_state;
pub use auth::{authenticate, hash_password, Principal};
pub use catalog::{ColumnDef, TableDef};
pub use error::EngineError;
pub use fixture::{
    load_fixture_file, load_fixture_state, load_fixture_text, FixtureColumn, FixtureDoc,
    FixtureError, FixtureReference, FixtureTable, FixtureUser,
};
pub use read::{collect_references, plan_fields, read_table, read_table_headers};
pub use state::{StoreState, UserRecord};
pub use submit::{submit, validate_row};
