//! Independent brute-force interpreter for filter and order expressions.
//!
//! Deliberately shares no code with the library's bind/eval path: names are
//! resolved by linear scan, cells are decoded into a tagged value enum, and
//! LIKE is matched by translating the pattern to a regex. Used as the
//! ground truth the real evaluator must agree with.

#![allow(dead_code)]

use std::cmp::Ordering;

use rsp_expr::{CompareOp, Direction, FieldRef, FilterAst, Literal, OrderSpec};
use rsp_wire::Field;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Text(String),
    Bool(bool),
    Time(i64),
}

fn decode_cell(field: &Field, cell: &str) -> Value {
    match field.data_type.as_str() {
        "int" | "long" => Value::Num(cell.parse::<i64>().expect("oracle: bad int") as f64),
        "decimal" => Value::Num(cell.parse::<f64>().expect("oracle: bad decimal")),
        "boolean" => Value::Bool(cell == "true"),
        "datetime" => {
            let dt = chrono::NaiveDateTime::parse_from_str(cell, "%Y-%m-%dT%H:%M:%SZ")
                .expect("oracle: bad datetime");
            Value::Time(dt.and_utc().timestamp())
        }
        _ => Value::Text(cell.to_owned()),
    }
}

fn decode_literal(field: &Field, literal: &Literal) -> Value {
    match literal {
        Literal::Integer(n) => match field.data_type.as_str() {
            "datetime" => panic!("oracle: integer literal on datetime"),
            _ => Value::Num(*n as f64),
        },
        Literal::Decimal(s) => Value::Num(s.parse::<f64>().unwrap()),
        Literal::Str(s) => match field.data_type.as_str() {
            "datetime" => decode_cell(field, s),
            _ => Value::Text(s.clone()),
        },
        Literal::Boolean(b) => Value::Bool(*b),
        Literal::Null => panic!("oracle: null literal"),
    }
}

fn lookup<'a>(fields: &'a [Field], field_ref: &FieldRef) -> (usize, &'a Field) {
    let mut found = None;
    for (i, f) in fields.iter().enumerate() {
        let hit = match &field_ref.table_qualifier {
            Some(t) => f.table == *t && f.name == field_ref.column_name,
            None => !f.is_joined && f.name == field_ref.column_name,
        };
        if hit {
            assert!(found.is_none(), "oracle: ambiguous field {field_ref:?}");
            found = Some((i, f));
        }
    }
    found.unwrap_or_else(|| panic!("oracle: unknown field {field_ref:?}"))
}

fn compare_values(a: &Value, b: &Value) -> Ordering {
    match (a, b) {
        (Value::Num(x), Value::Num(y)) => x.partial_cmp(y).unwrap(),
        (Value::Text(x), Value::Text(y)) => x.cmp(y),
        (Value::Bool(x), Value::Bool(y)) => x.cmp(y),
        (Value::Time(x), Value::Time(y)) => x.cmp(y),
        _ => panic!("oracle: mixed value kinds"),
    }
}

fn like_via_regex(pattern: &str, text: &str) -> bool {
    let mut rx = String::from("^");
    for ch in pattern.chars() {
        match ch {
            '%' => rx.push_str("(?s:.*)"),
            '_' => rx.push_str("(?s:.)"),
            c => rx.push_str(&regex::escape(&c.to_string())),
        }
    }
    rx.push('$');
    regex::Regex::new(&rx).unwrap().is_match(text)
}

/// Ground-truth filter evaluation over one row.
pub fn eval(ast: &FilterAst, fields: &[Field], row: &[Option<String>]) -> bool {
    match ast {
        FilterAst::And(l, r) => eval(l, fields, row) && eval(r, fields, row),
        FilterAst::Or(l, r) => eval(l, fields, row) || eval(r, fields, row),
        FilterAst::Not(c) => !eval(c, fields, row),
        FilterAst::Compare(fr, op, literal) => {
            let (i, field) = lookup(fields, fr);
            match &row[i] {
                None => false,
                Some(cell) => {
                    let ord = compare_values(
                        &decode_cell(field, cell),
                        &decode_literal(field, literal),
                    );
                    match op {
                        CompareOp::Eq => ord == Ordering::Equal,
                        CompareOp::Ne => ord != Ordering::Equal,
                        CompareOp::Lt => ord == Ordering::Less,
                        CompareOp::Le => ord != Ordering::Greater,
                        CompareOp::Gt => ord == Ordering::Greater,
                        CompareOp::Ge => ord != Ordering::Less,
                    }
                }
            }
        }
        FilterAst::Like(fr, pattern) => {
            let (i, _) = lookup(fields, fr);
            match &row[i] {
                None => false,
                Some(cell) => like_via_regex(pattern, cell),
            }
        }
        FilterAst::IsNull(fr, negated) => {
            let (i, _) = lookup(fields, fr);
            row[i].is_none() != *negated
        }
    }
}

/// Ground-truth row ordering: extract a key per order item and compare,
/// nulls first under ASC, reversed under DESC.
pub fn compare(
    spec: &OrderSpec,
    fields: &[Field],
    a: &[Option<String>],
    b: &[Option<String>],
) -> Ordering {
    for (fr, direction) in &spec.items {
        let (i, field) = lookup(fields, fr);
        let ord = match (&a[i], &b[i]) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(x), Some(y)) => {
                compare_values(&decode_cell(field, x), &decode_cell(field, y))
            }
        };
        let ord = if *direction == Direction::Desc {
            ord.reverse()
        } else {
            ord
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}
