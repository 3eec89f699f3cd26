//! Random valid-message generators and mutation helpers for codec testing.
//! Only compiled with the `testgen` feature; never used at runtime.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::codec::{Message, MessageKind};
use crate::types::*;

fn ident(rng: &mut impl Rng) -> String {
    let len = rng.gen_range(1..=8);
    let mut s = String::new();
    s.push(rng.gen_range(b'A'..=b'Z') as char);
    for _ in 0..len {
        s.push(rng.gen_range(b'a'..=b'z') as char);
    }
    s
}

fn text(rng: &mut impl Rng) -> String {
    const ALPHABET: &[char] = &[
        'a', 'b', 'z', 'A', 'Z', '0', '9', ' ', '\'', '"', '\\', '%', '_', ';', '-', '.', 'é',
        'ř', '☃',
    ];
    let len = rng.gen_range(1..=12);
    (0..len).map(|_| *ALPHABET.choose(rng).unwrap()).collect()
}

fn opt_text(rng: &mut impl Rng) -> Option<String> {
    rng.gen_bool(0.5).then(|| text(rng))
}

fn language(rng: &mut impl Rng) -> Option<String> {
    rng.gen_bool(0.5).then(|| {
        let mut s = String::new();
        s.push(rng.gen_range(b'a'..=b'z') as char);
        s.push(rng.gen_range(b'a'..=b'z') as char);
        s
    })
}

fn cell(rng: &mut impl Rng) -> Option<String> {
    if rng.gen_bool(0.2) {
        None
    } else {
        Some(text(rng))
    }
}

pub fn table_header(rng: &mut impl Rng) -> TableHeader {
    TableHeader {
        table_name: ident(rng),
        singular_title: text(rng),
        plural_title: text(rng),
        description: opt_text(rng),
    }
}

/// A self-consistent random field; `index` keeps ids unique within a list.
pub fn field(rng: &mut impl Rng, index: usize) -> Field {
    let table = ident(rng);
    let name = format!("{}{}", ident(rng), index);
    let is_foreign_key = rng.gen_bool(0.3);
    let is_auto_generated = rng.gen_bool(0.2);
    let is_joined = rng.gen_bool(0.3);
    let data_type = *["int", "long", "decimal", "varchar", "text", "boolean", "datetime"]
        .choose(rng)
        .unwrap();
    Field {
        data_type: data_type.into(),
        description: opt_text(rng),
        id: format!("{table}.{name}"),
        is_auto_generated,
        is_display_field: is_joined && rng.gen_bool(0.5),
        is_editable: !is_auto_generated && rng.gen_bool(0.7),
        is_foreign_key,
        is_joined,
        is_nullable: rng.gen_bool(0.5),
        is_primary_key: rng.gen_bool(0.2),
        max_length: (data_type == "varchar" && rng.gen_bool(0.5))
            .then(|| rng.gen_range(1..200)),
        name,
        referenced_field: is_foreign_key.then(|| ident(rng)),
        referenced_table: is_foreign_key.then(|| ident(rng)),
        table,
        title: text(rng),
    }
}

pub fn reference(rng: &mut impl Rng) -> Reference {
    let red_table = ident(rng);
    Reference {
        red_field: ident(rng),
        red_table: red_table.clone(),
        ring_field: ident(rng),
        ring_field_title: text(rng),
        ring_table: format!("{red_table}x"),
        ring_table_plural_title: text(rng),
    }
}

pub fn table_message(rng: &mut impl Rng) -> TableMessage {
    let field_count = rng.gen_range(1..=5);
    let fields: Vec<Field> = (0..field_count).map(|i| field(rng, i)).collect();
    let row_count = rng.gen_range(1..=6);
    let items = (0..row_count)
        .map(|_| (0..field_count).map(|_| cell(rng)).collect())
        .collect();
    let mut actions: Vec<i64> = (1..=4).filter(|_| rng.gen_bool(0.6)).collect();
    if actions.is_empty() {
        actions.push(1);
    }
    TableMessage {
        actions,
        fields,
        header: table_header(rng),
        items,
        references: (0..rng.gen_range(0..=2)).map(|_| reference(rng)).collect(),
    }
}

/// Generates a random valid message of the given kind. Container members are
/// always non-empty so that mutation paths through index 0 exist.
pub fn message(kind: MessageKind, rng: &mut impl Rng) -> Message {
    match kind {
        MessageKind::ReadTableHeadersRequest => Message::ReadTableHeadersRequest(ReadTableHeadersRequest {
            user_name: ident(rng),
            password: text(rng),
            language: language(rng),
        }),
        MessageKind::ReadTableHeadersResponse => {
            let n = rng.gen_range(1..=4);
            let table_headers = (0..n)
                .map(|i| {
                    let mut h = table_header(rng);
                    h.table_name = format!("{}{}", h.table_name, i);
                    h
                })
                .collect();
            Message::ReadTableHeadersResponse(ReadTableHeadersResponse { table_headers })
        }
        MessageKind::ReadTableRequest => Message::ReadTableRequest(ReadTableRequest {
            user_name: ident(rng),
            password: text(rng),
            table_name: ident(rng),
            language: language(rng),
            skip: rng.gen_range(0..1000),
            take: rng.gen_range(0..1000),
            order_expression: opt_text(rng),
            filter_expression: opt_text(rng),
        }),
        MessageKind::ReadTableResponse => Message::ReadTableResponse(ReadTableResponse {
            table: table_message(rng),
        }),
        MessageKind::SubmitRequest => {
            let field_count = rng.gen_range(1..=5);
            let fields: Vec<Field> = (0..field_count).map(|i| field(rng, i)).collect();
            let data = (0..field_count).map(|_| cell(rng)).collect();
            Message::SubmitRequest(SubmitRequest {
                user_name: ident(rng),
                password: text(rng),
                table_name: ident(rng),
                operation: rng.gen_range(1..=3),
                fields,
                data,
            })
        }
        MessageKind::SubmitResponse => Message::SubmitResponse(SubmitResponse {
            identity: opt_text(rng),
        }),
        MessageKind::ErrorEnvelope => {
            const CODES: &[ErrorCode] = &[
                ErrorCode::AuthFailed,
                ErrorCode::Forbidden,
                ErrorCode::UnknownTable,
                ErrorCode::UnknownField,
                ErrorCode::BadExpression,
                ErrorCode::BadOperation,
                ErrorCode::ConstraintViolation,
                ErrorCode::NotFound,
                ErrorCode::MalformedMessage,
            ];
            Message::ErrorEnvelope(ErrorEnvelope {
                code: *CODES.choose(rng).unwrap(),
                message: text(rng),
            })
        }
    }
}

pub const ALL_KINDS: &[MessageKind] = &[
    MessageKind::ReadTableHeadersRequest,
    MessageKind::ReadTableHeadersResponse,
    MessageKind::ReadTableRequest,
    MessageKind::ReadTableResponse,
    MessageKind::SubmitRequest,
    MessageKind::SubmitResponse,
    MessageKind::ErrorEnvelope,
];

/// Paths of REQUIRED members (numeric components index into arrays) whose
/// deletion must make decoding fail. Kinds with no required members return
/// an empty list.
pub fn required_member_paths(kind: MessageKind) -> Vec<Vec<&'static str>> {
    let paths: &[&[&str]] = match kind {
        MessageKind::ReadTableHeadersRequest => &[&["UserName"], &["Password"]],
        MessageKind::ReadTableHeadersResponse => &[
            &["TableHeaders"],
            &["TableHeaders", "0", "TableName"],
            &["TableHeaders", "0", "SingularTitle"],
            &["TableHeaders", "0", "PluralTitle"],
        ],
        MessageKind::ReadTableRequest => &[
            &["UserName"],
            &["Password"],
            &["TableName"],
            &["Skip"],
            &["Take"],
        ],
        MessageKind::ReadTableResponse => &[
            &["Table"],
            &["Table", "Actions"],
            &["Table", "Fields"],
            &["Table", "Header"],
            &["Table", "Items"],
            &["Table", "References"],
            &["Table", "Header", "TableName"],
            &["Table", "Fields", "0", "DataType"],
            &["Table", "Fields", "0", "ID"],
            &["Table", "Fields", "0", "Name"],
            &["Table", "Fields", "0", "Table"],
            &["Table", "Fields", "0", "Title"],
            &["Table", "Fields", "0", "IsForeignKey"],
        ],
        MessageKind::SubmitRequest => &[
            &["UserName"],
            &["Password"],
            &["TableName"],
            &["Operation"],
            &["Fields"],
            &["Data"],
            &["Fields", "0", "DataType"],
            &["Fields", "0", "IsNullable"],
        ],
        MessageKind::SubmitResponse => &[],
        MessageKind::ErrorEnvelope => &[&["Code"], &["Message"]],
    };
    paths.iter().map(|p| p.to_vec()).collect()
}

/// Deletes the member at `path` inside a JSON value; returns false if the
/// path does not exist.
pub fn delete_member(value: &mut serde_json::Value, path: &[&str]) -> bool {
    let Some((last, prefix)) = path.split_last() else {
        return false;
    };
    let mut current = value;
    for part in prefix {
        current = match part.parse::<usize>() {
            Ok(i) => match current.as_array_mut().and_then(|a| a.get_mut(i)) {
                Some(v) => v,
                None => return false,
            },
            Err(_) => match current.as_object_mut().and_then(|o| o.get_mut(*part)) {
                Some(v) => v,
                None => return false,
            },
        };
    }
    current
        .as_object_mut()
        .map(|o| o.remove(*last).is_some())
        .unwrap_or(false)
}
