use serde::{Deserialize, Serialize};

/// A table row on the wire: one nullable cell string per field.
pub type Row = Vec<Option<String>>;

/// Basic metadata of a data table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct TableHeader {
    pub table_name: String,
    pub singular_title: String,
    pub plural_title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

/// Metadata of a table column, including foreign-key and join flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct Field {
    pub data_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(rename = "ID")]
    pub id: String,
    pub is_auto_generated: bool,
    pub is_display_field: bool,
    pub is_editable: bool,
    pub is_foreign_key: bool,
    pub is_joined: bool,
    pub is_nullable: bool,
    pub is_primary_key: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<u64>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub referenced_field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub referenced_table: Option<String>,
    pub table: String,
    pub title: String,
}

/// A reverse foreign-key edge: `ring_*` is the referencing side, `red_*`
/// the referenced side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct Reference {
    pub red_field: String,
    pub red_table: String,
    pub ring_field: String,
    pub ring_field_title: String,
    pub ring_table: String,
    pub ring_table_plural_title: String,
}

/// Data and metadata of one table: grants, columns, header, rows and
/// incoming references.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct TableMessage {
    pub actions: Vec<i64>,
    pub fields: Vec<Field>,
    pub header: TableHeader,
    pub items: Vec<Row>,
    pub references: Vec<Reference>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct ReadTableHeadersRequest {
    pub user_name: String,
    pub password: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct ReadTableHeadersResponse {
    pub table_headers: Vec<TableHeader>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct ReadTableRequest {
    pub user_name: String,
    pub password: String,
    pub table_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
    pub skip: u64,
    pub take: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_expression: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter_expression: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct ReadTableResponse {
    pub table: TableMessage,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct SubmitRequest {
    pub user_name: String,
    pub password: String,
    pub table_name: String,
    pub operation: i64,
    pub fields: Vec<Field>,
    pub data: Row,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct SubmitResponse {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
}

/// Error codes used in failure envelopes across the whole stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ErrorCode {
    AuthFailed,
    Forbidden,
    UnknownTable,
    UnknownField,
    BadExpression,
    BadOperation,
    ConstraintViolation,
    NotFound,
    MalformedMessage,
}

impl std::fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ErrorCode::AuthFailed => "AuthFailed",
            ErrorCode::Forbidden => "Forbidden",
            ErrorCode::UnknownTable => "UnknownTable",
            ErrorCode::UnknownField => "UnknownField",
            ErrorCode::BadExpression => "BadExpression",
            ErrorCode::BadOperation => "BadOperation",
            ErrorCode::ConstraintViolation => "ConstraintViolation",
            ErrorCode::NotFound => "NotFound",
            ErrorCode::MalformedMessage => "MalformedMessage",
        };
        f.write_str(s)
    }
}

/// Failure envelope returned instead of an operation response.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct ErrorEnvelope {
    pub code: ErrorCode,
    pub message: String,
}
