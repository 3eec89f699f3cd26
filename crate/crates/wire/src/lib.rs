//! RSP wire model: the protocol's data and message types together with the
//! canonical JSON encoding.
//!
//! The encoding is bit-exact: member names are the protocol's PascalCase
//! attribute names, member order is fixed per type, optional members are
//! omitted when absent, and null cells inside row matrices are JSON `null`
//! (distinct from the empty string).

mod cells;
mod codec;
mod types;
mod validate;

#[cfg(feature = "testgen")]
pub mod testgen;

pub use cells::{compare_cells, validate_cell, CellError, DataType};
pub use codec::{decode, decode_kind, encode, encode_message, Message, MessageKind, WireError};
pub use types::{
    ErrorCode, ErrorEnvelope, Field, ReadTableHeadersRequest, ReadTableHeadersResponse,
    ReadTableRequest, ReadTableResponse, Reference, Row, SubmitRequest, SubmitResponse,
    TableHeader, TableMessage,
};
pub use validate::{validate_message, Validate};

/// Grant/action codes carried in `TableMessage::actions`.
pub const ACTION_SELECT: i64 = 1;
pub const ACTION_INSERT: i64 = 2;
pub const ACTION_UPDATE: i64 = 3;
pub const ACTION_DELETE: i64 = 4;

/// Submit operation codes carried in `SubmitRequest::operation`.
pub const OP_INSERT: i64 = 1;
pub const OP_UPDATE: i64 = 2;
pub const OP_DELETE: i64 = 3;
