//! The RSP expression language for `FilterExpression` and `OrderExpression`
//! strings: a minimal SQL-like subset.
//!
//! Filter grammar (keywords case-insensitive, precedence NOT > AND > OR):
//!
//! ```text
//! expr       := or
//! or         := and ("OR" and)*
//! and        := not ("AND" not)*
//! not        := "NOT" not | primary
//! primary    := "(" expr ")" | comparison
//! comparison := fieldref cmpop literal
//!             | fieldref "LIKE" string
//!             | fieldref "IS" ["NOT"] "NULL"
//! fieldref   := ident ["." ident]
//! cmpop      := "=" | "<>" | "<" | "<=" | ">" | ">="
//! ```
//!
//! Order grammar:
//!
//! ```text
//! orderlist := item ("," item)*
//! item      := fieldref ["ASC" | "DESC"]
//! ```
//!
//! Identifiers are `[A-Za-z_][A-Za-z0-9_]*`; strings are single-quoted with
//! `''` escaping a literal quote. Comparisons against a null cell are false;
//! null tests use `IS [NOT] NULL`.

mod ast;
mod bind;
mod eval;
mod lexer;
mod parser;
mod print;
mod sql;

pub use ast::{CompareOp, Direction, FieldRef, FilterAst, Literal, OrderSpec};
pub use bind::{bind_filter, bind_order, BoundColumn, BoundFilter, BoundOrder, BoundOrderItem};
pub use eval::{compare_rows, eval_filter, like_match};
pub use parser::{parse_filter, parse_order};
pub use print::print_filter;
pub use sql::{to_parameterized_sql, SqlFragment};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    /// Syntax or type error in an expression, with a byte position into the
    /// source text and what was expected there.
    #[error("bad expression at offset {position}: {message}")]
    BadExpression { position: usize, message: String },
    /// A field reference that matches no planned field, or more than one.
    #[error("unknown field: {0}")]
    UnknownField(String),
    /// A stored cell that does not parse under its column's canonical
    /// encoding; signals a provider bug, not a caller error.
    #[error("corrupt cell: {0}")]
    CorruptCell(String),
}
