//! Canonical JSON codec.
//!
//! Encoding refuses messages that violate their own invariants. Decoding is
//! structural: well-formed JSON, every REQUIRED member present, primitive
//! types correct; unknown members are ignored so that old clients keep
//! working against newer providers. Semantic invariants are checked by
//! [`crate::validate_message`] and by the provider engine.

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::types::*;
use crate::validate::{validate_message, Validate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("malformed message: {0}")]
    MalformedMessage(String),
}

macro_rules! wire_messages {
    ($($ty:ident),+ $(,)?) => {
        /// Tag naming each wire message type.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum MessageKind {
            $($ty,)+
        }

        /// A dynamically-typed wire message, for tooling that dispatches on
        /// [`MessageKind`] at runtime.
        #[derive(Debug, Clone, PartialEq)]
        pub enum Message {
            $($ty($ty),)+
        }

        impl MessageKind {
            pub fn as_str(&self) -> &'static str {
                match self {
                    $(MessageKind::$ty => stringify!($ty),)+
                }
            }
        }

        impl Message {
            pub fn kind(&self) -> MessageKind {
                match self {
                    $(Message::$ty(_) => MessageKind::$ty,)+
                }
            }
        }

        /// Decodes `text` as the message type named by `kind`.
        pub fn decode_kind(kind: MessageKind, text: &str) -> Result<Message, WireError> {
            match kind {
                $(MessageKind::$ty => decode::<$ty>(text).map(Message::$ty),)+
            }
        }

        /// Encodes a dynamically-typed message.
        pub fn encode_message(message: &Message) -> Result<String, WireError> {
            match message {
                $(Message::$ty(m) => encode(m),)+
            }
        }
    };
}

wire_messages!(
    ReadTableHeadersRequest,
    ReadTableHeadersResponse,
    ReadTableRequest,
    ReadTableResponse,
    SubmitRequest,
    SubmitResponse,
    ErrorEnvelope,
);

/// Encodes a valid message to its canonical JSON text.
pub fn encode<M: Serialize + Validate>(message: &M) -> Result<String, WireError> {
    let violations = validate_message(message);
    if let Some(first) = violations.into_iter().next() {
        return Err(WireError::InvariantViolation(first));
    }
    serde_json::to_string(message).map_err(|e| WireError::InvariantViolation(e.to_string()))
}

/// Decodes JSON text as message type `M`.
pub fn decode<M: DeserializeOwned>(text: &str) -> Result<M, WireError> {
    serde_json::from_str(text).map_err(|e| WireError::MalformedMessage(e.to_string()))
}
