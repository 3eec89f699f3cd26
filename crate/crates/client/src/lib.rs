//! Typed RSP client: builds wire requests from a small configuration,
//! POSTs them to a provider, decodes the responses and exposes pagination
//! as a row iterator.
//!
//! Failures come in three flavors: [`ClientError::Transport`] for network
//! problems, [`ClientError::Protocol`] for bodies that decode as neither
//! the response type nor an error envelope, and [`ClientError::Remote`]
//! carrying the provider's error code and message.

use std::time::Duration;

use thiserror::Error;

use rsp_wire::{
    decode, encode, ErrorCode, ErrorEnvelope, Field, ReadTableHeadersRequest,
    ReadTableHeadersResponse, ReadTableRequest, ReadTableResponse, Reference, Row, SubmitRequest,
    SubmitResponse, TableHeader, TableMessage,
};

#[derive(Debug, Error)]
pub enum ClientError {
    #[error("transport error: {0}")]
    Transport(String),
    #[error("protocol error: {0}")]
    Protocol(String),
    #[error("remote error {code:?}: {message}")]
    Remote { code: ErrorCode, message: String },
}

/// Connection settings; one value of this plus a reused HTTP connection is
/// the whole client, so concurrent calls on one instance are independent.
#[derive(Debug, Clone)]
pub struct ClientConfig {
    pub base_url: String,
    pub user_name: String,
    pub password: String,
    pub language: Option<String>,
    pub request_timeout: Duration,
    /// Accept self-signed provider certificates (desk testing only).
    pub accept_invalid_certs: bool,
}

impl ClientConfig {
    pub fn new(
        base_url: impl Into<String>,
        user_name: impl Into<String>,
        password: impl Into<String>,
    ) -> Self {
        ClientConfig {
            base_url: base_url.into(),
            user_name: user_name.into(),
            password: password.into(),
            language: None,
            request_timeout: Duration::from_secs(30),
            accept_invalid_certs: false,
        }
    }
}

pub struct Client {
    config: ClientConfig,
    http: reqwest::blocking::Client,
}

impl Client {
    pub fn new(config: ClientConfig) -> Result<Self, ClientError> {
        let url = url::Url::parse(&config.base_url)
            .map_err(|e| ClientError::Protocol(format!("invalid base URL: {e}")))?;
        if !matches!(url.scheme(), "http" | "https") {
            return Err(ClientError::Protocol(format!(
                "base URL must be http or https, got {}",
                url.scheme()
            )));
        }
        let http = reqwest::blocking::Client::builder()
            .timeout(config.request_timeout)
            .danger_accept_invalid_certs(config.accept_invalid_certs)
            .build()
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        Ok(Client { config, http })
    }

    pub fn config(&self) -> &ClientConfig {
        &self.config
    }

    fn post<Req, Resp>(&self, operation: &str, request: &Req) -> Result<Resp, ClientError>
    where
        Req: serde::Serialize + rsp_wire::Validate,
        Resp: serde::de::DeserializeOwned,
    {
        let body = encode(request).map_err(|e| ClientError::Protocol(e.to_string()))?;
        let url = format!(
            "{}/rsp/{operation}",
            self.config.base_url.trim_end_matches('/')
        );
        let response = self
            .http
            .post(url)
            .header("content-type", "application/json; charset=utf-8")
            .body(body)
            .send()
            .map_err(|e| ClientError::Transport(redact(&e.to_string(), &self.config.password)))?;
        let status = response.status();
        let text = response
            .text()
            .map_err(|e| ClientError::Transport(redact(&e.to_string(), &self.config.password)))?;
        if status.is_success() {
            decode(&text).map_err(|e| ClientError::Protocol(e.to_string()))
        } else {
            match decode::<ErrorEnvelope>(&text) {
                Ok(envelope) => Err(ClientError::Remote {
                    code: envelope.code,
                    message: envelope.message,
                }),
                Err(_) => Err(ClientError::Protocol(format!(
                    "status {status} with undecodable error body"
                ))),
            }
        }
    }

    /// Enumerates the tables the configured user may SELECT.
    pub fn fetch_headers(&self) -> Result<Vec<TableHeader>, ClientError> {
        let request = ReadTableHeadersRequest {
            user_name: self.config.user_name.clone(),
            password: self.config.password.clone(),
            language: self.config.language.clone(),
        };
        let response: ReadTableHeadersResponse = self.post("ReadTableHeaders", &request)?;
        Ok(response.table_headers)
    }

    /// One page of a table; `take` 0 means everything after `skip`.
    pub fn fetch_table(
        &self,
        table_name: &str,
        skip: u64,
        take: u64,
        filter: Option<&str>,
        order: Option<&str>,
    ) -> Result<TableMessage, ClientError> {
        let request = ReadTableRequest {
            user_name: self.config.user_name.clone(),
            password: self.config.password.clone(),
            table_name: table_name.to_string(),
            language: self.config.language.clone(),
            skip,
            take,
            order_expression: order.map(str::to_owned),
            filter_expression: filter.map(str::to_owned),
        };
        let response: ReadTableResponse = self.post("ReadTable", &request)?;
        Ok(response.table)
    }

    /// Streams every matching row by requesting pages of `page_size` until a
    /// short or empty page arrives. Metadata comes from the first page.
    pub fn fetch_all_rows(
        &self,
        table_name: &str,
        page_size: u64,
        filter: Option<&str>,
        order: Option<&str>,
    ) -> RowStream<'_> {
        assert!(page_size >= 1, "page_size must be at least 1");
        RowStream {
            client: self,
            table_name: table_name.to_string(),
            page_size,
            filter: filter.map(str::to_owned),
            order: order.map(str::to_owned),
            skip: 0,
            buffered: std::collections::VecDeque::new(),
            fields: None,
            references: None,
            done: false,
        }
    }

    /// Submits one INSERT (1), UPDATE (2) or DELETE (3). `field_names` and
    /// `data` must align; Field metadata beyond the names is inert filler
    /// because the provider matches columns by name.
    pub fn submit(
        &self,
        table_name: &str,
        operation: i64,
        field_names: &[&str],
        data: &[Option<String>],
    ) -> Result<SubmitResponse, ClientError> {
        assert_eq!(
            field_names.len(),
            data.len(),
            "field names and data must align"
        );
        let request = SubmitRequest {
            user_name: self.config.user_name.clone(),
            password: self.config.password.clone(),
            table_name: table_name.to_string(),
            operation,
            fields: field_names
                .iter()
                .map(|name| placeholder_field(table_name, name))
                .collect(),
            data: data.to_vec(),
        };
        self.post("Submit", &request)
    }
}

/// Field metadata stub: correct name and table, placeholder attributes.
pub fn placeholder_field(table_name: &str, name: &str) -> Field {
    Field {
        data_type: "varchar".into(),
        description: None,
        id: format!("{table_name}.{name}"),
        is_auto_generated: false,
        is_display_field: false,
        is_editable: true,
        is_foreign_key: false,
        is_joined: false,
        is_nullable: true,
        is_primary_key: false,
        max_length: None,
        name: name.to_string(),
        referenced_field: None,
        referenced_table: None,
        table: table_name.to_string(),
        title: name.to_string(),
    }
}

fn redact(message: &str, password: &str) -> String {
    if password.is_empty() {
        message.to_string()
    } else {
        message.replace(password, "<redacted>")
    }
}

/// Iterator over rows fetched page by page. Ends on the first page shorter
/// than `page_size`; a request failure is yielded once and ends the stream,
/// after all rows already received.
pub struct RowStream<'a> {
    client: &'a Client,
    table_name: String,
    page_size: u64,
    filter: Option<String>,
    order: Option<String>,
    skip: u64,
    buffered: std::collections::VecDeque<Row>,
    fields: Option<Vec<Field>>,
    references: Option<Vec<Reference>>,
    done: bool,
}

impl RowStream<'_> {
    /// Column metadata from the first fetched page; `None` before the first
    /// call to `next`.
    pub fn fields(&self) -> Option<&[Field]> {
        self.fields.as_deref()
    }

    pub fn references(&self) -> Option<&[Reference]> {
        self.references.as_deref()
    }
}

impl Iterator for RowStream<'_> {
    type Item = Result<Row, ClientError>;

    fn next(&mut self) -> Option<Self::Item> {
        if let Some(row) = self.buffered.pop_front() {
            return Some(Ok(row));
        }
        if self.done {
            return None;
        }
        let page = self.client.fetch_table(
            &self.table_name,
            self.skip,
            self.page_size,
            self.filter.as_deref(),
            self.order.as_deref(),
        );
        match page {
            Ok(table) => {
                if self.fields.is_none() {
                    self.fields = Some(table.fields);
                    self.references = Some(table.references);
                }
                if (table.items.len() as u64) < self.page_size {
                    self.done = true;
                }
                self.skip += table.items.len() as u64;
                self.buffered.extend(table.items);
                self.buffered.pop_front().map(Ok)
            }
            Err(error) => {
                self.done = true;
                Some(Err(error))
            }
        }
    }
}
