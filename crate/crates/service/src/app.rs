use std::sync::{Arc, RwLock};
use std::time::Instant;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderValue, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::post;
use axum::Router;

use rsp_engine::{authenticate, read_table, read_table_headers, submit, EngineError, StoreState};
use rsp_wire::{
    decode, encode, ErrorCode, ErrorEnvelope, ReadTableHeadersRequest, ReadTableHeadersResponse,
    ReadTableRequest, ReadTableResponse, SubmitRequest, WireError,
};

use crate::error::envelope_for;

/// The engine state behind the single-writer / multiple-reader lock.
pub type SharedState = Arc<RwLock<StoreState>>;

const CONTENT_TYPE: &str = "application/json; charset=utf-8";

pub fn build_router(state: SharedState) -> Router {
    Router::new()
        .route(
            "/rsp/ReadTableHeaders",
            post(handle_read_table_headers).fallback(method_not_allowed),
        )
        .route(
            "/rsp/ReadTable",
            post(handle_read_table).fallback(method_not_allowed),
        )
        .route(
            "/rsp/Submit",
            post(handle_submit).fallback(method_not_allowed),
        )
        .fallback(unknown_path)
        .with_state(state)
}

fn json_response(status: StatusCode, body: String) -> Response {
    let mut response = (status, body).into_response();
    response
        .headers_mut()
        .insert(header::CONTENT_TYPE, HeaderValue::from_static(CONTENT_TYPE));
    response
}

fn failure(status: StatusCode, code: ErrorCode, message: &str) -> Response {
    let envelope = ErrorEnvelope {
        code,
        message: message.to_string(),
    };
    json_response(status, encode(&envelope).expect("envelope encodes"))
}

async fn method_not_allowed(uri: Uri) -> Response {
    tracing::info!(path = %uri.path(), user = "-", status = 405, "method not allowed");
    failure(
        StatusCode::METHOD_NOT_ALLOWED,
        ErrorCode::MalformedMessage,
        "operations require POST",
    )
}

async fn unknown_path(uri: Uri) -> Response {
    tracing::info!(path = %uri.path(), user = "-", status = 404, "unknown path");
    failure(
        StatusCode::NOT_FOUND,
        ErrorCode::NotFound,
        "no such operation",
    )
}

fn decode_body<M: serde::de::DeserializeOwned>(body: &Bytes) -> Result<M, EngineError> {
    let text = std::str::from_utf8(body)
        .map_err(|_| EngineError::MalformedMessage("request body is not UTF-8".into()))?;
    decode(text).map_err(|e| match e {
        WireError::MalformedMessage(m) | WireError::InvariantViolation(m) => {
            EngineError::MalformedMessage(m)
        }
    })
}

/// Turns a handler outcome into a response and writes the one structured log
/// line for the exchange. The password is never part of the log record.
fn complete(path: &str, user: &str, started: Instant, outcome: Result<String, EngineError>) -> Response {
    let (status, body) = match outcome {
        Ok(body) => (StatusCode::OK, body),
        Err(error) => {
            let (status, envelope) = envelope_for(&error);
            (status, encode(&envelope).expect("envelope encodes"))
        }
    };
    tracing::info!(
        path,
        user,
        status = status.as_u16(),
        duration_ms = started.elapsed().as_millis() as u64,
        "exchange"
    );
    json_response(status, body)
}

async fn handle_read_table_headers(State(state): State<SharedState>, body: Bytes) -> Response {
    let started = Instant::now();
    let mut user = String::from("-");
    let outcome = (|| {
        let request: ReadTableHeadersRequest = decode_body(&body)?;
        user = request.user_name.clone();
        let store = state.read().expect("state lock");
        let principal = authenticate(&store, &request.user_name, &request.password)?;
        let headers = read_table_headers(&store, &principal, request.language.as_deref());
        Ok(encode(&ReadTableHeadersResponse {
            table_headers: headers,
        })
        .expect("engine output satisfies wire invariants"))
    })();
    complete("/rsp/ReadTableHeaders", &user, started, outcome)
}

async fn handle_read_table(State(state): State<SharedState>, body: Bytes) -> Response {
    let started = Instant::now();
    let mut user = String::from("-");
    let outcome = (|| {
        let request: ReadTableRequest = decode_body(&body)?;
        user = request.user_name.clone();
        let store = state.read().expect("state lock");
        let principal = authenticate(&store, &request.user_name, &request.password)?;
        let table = read_table(&store, &principal, &request)?;
        Ok(encode(&ReadTableResponse { table }).expect("engine output satisfies wire invariants"))
    })();
    complete("/rsp/ReadTable", &user, started, outcome)
}

async fn handle_submit(State(state): State<SharedState>, body: Bytes) -> Response {
    let started = Instant::now();
    let mut user = String::from("-");
    let outcome = (|| {
        let request: SubmitRequest = decode_body(&body)?;
        user = request.user_name.clone();
        let mut store = state.write().expect("state lock");
        let principal = authenticate(&store, &request.user_name, &request.password)?;
        let response = submit(&mut store, &principal, &request)?;
        Ok(encode(&response).expect("engine output satisfies wire invariants"))
    })();
    complete("/rsp/Submit", &user, started, outcome)
}
