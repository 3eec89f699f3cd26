use rsp_expr::ExprError;
use rsp_wire::ErrorCode;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("authentication failed")]
    AuthFailed,
    #[error("action not granted: {0}")]
    Forbidden(String),
    #[error("unknown table: {0}")]
    UnknownTable(String),
    #[error("unknown field: {0}")]
    UnknownField(String),
    #[error("bad expression: {0}")]
    BadExpression(String),
    #[error("bad operation: {0}")]
    BadOperation(String),
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("malformed message: {0}")]
    MalformedMessage(String),
}

impl EngineError {
    pub fn code(&self) -> ErrorCode {
        match self {
            EngineError::AuthFailed => ErrorCode::AuthFailed,
            EngineError::Forbidden(_) => ErrorCode::Forbidden,
            EngineError::UnknownTable(_) => ErrorCode::UnknownTable,
            EngineError::UnknownField(_) => ErrorCode::UnknownField,
            EngineError::BadExpression(_) => ErrorCode::BadExpression,
            EngineError::BadOperation(_) => ErrorCode::BadOperation,
            EngineError::ConstraintViolation(_) => ErrorCode::ConstraintViolation,
            EngineError::NotFound(_) => ErrorCode::NotFound,
            EngineError::MalformedMessage(_) => ErrorCode::MalformedMessage,
        }
    }
}

impl From<ExprError> for EngineError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::BadExpression { .. } => EngineError::BadExpression(e.to_string()),
            ExprError::UnknownField(f) => EngineError::UnknownField(f),
            // A corrupt stored cell is a provider bug; state validation at
            // load and on submit keeps this unreachable.
            ExprError::CorruptCell(m) => EngineError::ConstraintViolation(m),
        }
    }
}
