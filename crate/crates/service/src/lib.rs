//! HTTP binding for the RSP provider engine.
//!
//! Three POST endpoints — `/rsp/ReadTableHeaders`, `/rsp/ReadTable` and
//! `/rsp/Submit` — decode a wire request, authenticate, invoke the engine
//! and encode the response. Every response this service produces carries
//! `application/json; charset=utf-8` and is either the operation's response
//! message or an [`rsp_wire::ErrorEnvelope`]; there is no third body shape.
//!
//! Failures map onto a fixed status table: `MalformedMessage`,
//! `BadExpression`, `UnknownField` and `BadOperation` are 400, `AuthFailed`
//! 401, `Forbidden` 403, `UnknownTable` and `NotFound` 404, and
//! `ConstraintViolation` 409.

mod app;
mod config;
mod error;
mod serve;

pub use app::{build_router, SharedState};
pub use config::{LogLevel, ServiceConfig};
pub use error::{envelope_for, map_error, ServiceError};
pub use serve::{serve, ServiceHandle};
