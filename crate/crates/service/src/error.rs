use axum::http::StatusCode;
use thiserror::Error;

use rsp_engine::EngineError;
use rsp_wire::{ErrorCode, ErrorEnvelope};

/// Startup and configuration failures; these are reported before a listener
/// exists and never reach a client.
#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("startup failed: {0}")]
    Startup(String),
}

/// The fixed error-code → HTTP-status table.
pub fn map_error(code: ErrorCode) -> StatusCode {
    match code {
        ErrorCode::AuthFailed => StatusCode::UNAUTHORIZED,
        ErrorCode::Forbidden => StatusCode::FORBIDDEN,
        ErrorCode::UnknownTable | ErrorCode::NotFound => StatusCode::NOT_FOUND,
        ErrorCode::ConstraintViolation => StatusCode::CONFLICT,
        ErrorCode::MalformedMessage
        | ErrorCode::BadExpression
        | ErrorCode::UnknownField
        | ErrorCode::BadOperation => StatusCode::BAD_REQUEST,
    }
}

/// Builds the failure body for an engine error. The message is the error's
/// own display text, which never contains credentials or SQL.
pub fn envelope_for(error: &EngineError) -> (StatusCode, ErrorEnvelope) {
    let code = error.code();
    (
        map_error(code),
        ErrorEnvelope {
            code,
            message: error.to_string(),
        },
    )
}
