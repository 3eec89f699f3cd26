//! Random schema, row, and expression generators used by the oracle
//! equivalence tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use rsp_expr::{CompareOp, Direction, FieldRef, FilterAst, Literal, OrderSpec};
use rsp_wire::{Field, Row};

pub const BASE_TABLE: &str = "T";
pub const JOINED_TABLE: &str = "J";

const TYPES: &[&str] = &["int", "long", "decimal", "varchar", "text", "boolean", "datetime"];

fn make_field(table: &str, name: String, data_type: &str, joined: bool) -> Field {
    Field {
        data_type: data_type.into(),
        description: None,
        id: format!("{table}.{name}"),
        is_auto_generated: false,
        is_display_field: joined,
        is_editable: !joined,
        is_foreign_key: false,
        is_joined: joined,
        is_nullable: true,
        is_primary_key: false,
        max_length: None,
        name,
        referenced_field: None,
        referenced_table: None,
        table: table.into(),
        title: "t".into(),
    }
}

/// A planned field list: 1-5 base columns, sometimes one joined column.
pub fn schema(rng: &mut impl Rng) -> Vec<Field> {
    let n = rng.gen_range(1..=5);
    let mut fields: Vec<Field> = (0..n)
        .map(|i| {
            make_field(BASE_TABLE, format!("C{i}"), TYPES.choose(rng).unwrap(), false)
        })
        .collect();
    if rng.gen_bool(0.4) {
        fields.push(make_field(
            JOINED_TABLE,
            "Display".into(),
            ["varchar", "text"].choose(rng).unwrap(),
            true,
        ));
    }
    fields
}

pub fn cell_for(rng: &mut impl Rng, data_type: &str) -> String {
    match data_type {
        "int" | "long" => rng.gen_range(-100i64..100).to_string(),
        "decimal" => {
            let whole = rng.gen_range(-50i64..50);
            let frac = rng.gen_range(0..100);
            format!(
                "{}{}.{:02}",
                if whole < 0 { "-" } else { "" },
                whole.abs(),
                frac
            )
        }
        "boolean" => if rng.gen_bool(0.5) { "true" } else { "false" }.to_string(),
        "datetime" => format!(
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
            rng.gen_range(2020..2025),
            rng.gen_range(1..=12),
            rng.gen_range(1..=28),
            rng.gen_range(0..24),
            rng.gen_range(0..60),
            rng.gen_range(0..60)
        ),
        _ => {
            const ALPHABET: &[char] = &['A', 'B', 'a', 'n', '%', '_', '\'', 'z', ' '];
            let len = rng.gen_range(0..6);
            (0..len).map(|_| *ALPHABET.choose(rng).unwrap()).collect()
        }
    }
}

pub fn row(rng: &mut impl Rng, fields: &[Field]) -> Row {
    fields
        .iter()
        .map(|f| {
            if rng.gen_bool(0.2) {
                None
            } else {
                Some(cell_for(rng, &f.data_type))
            }
        })
        .collect()
}

pub fn rows(rng: &mut impl Rng, fields: &[Field], max: usize) -> Vec<Row> {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| row(rng, fields)).collect()
}

fn field_ref(rng: &mut impl Rng, field: &Field) -> FieldRef {
    let qualify = field.is_joined || rng.gen_bool(0.3);
    FieldRef {
        table_qualifier: qualify.then(|| field.table.clone()),
        column_name: field.name.clone(),
    }
}

fn literal_for(rng: &mut impl Rng, data_type: &str) -> Literal {
    match data_type {
        "int" | "long" => Literal::Integer(rng.gen_range(-100..100)),
        "decimal" => {
            if rng.gen_bool(0.5) {
                Literal::Integer(rng.gen_range(-50..50))
            } else {
                Literal::Decimal(cell_for(rng, "decimal"))
            }
        }
        "boolean" => Literal::Boolean(rng.gen_bool(0.5)),
        "datetime" => Literal::Str(cell_for(rng, "datetime")),
        _ => Literal::Str(cell_for(rng, "varchar")),
    }
}

fn leaf(rng: &mut impl Rng, fields: &[Field]) -> FilterAst {
    let field = fields.choose(rng).unwrap();
    let fr = field_ref(rng, field);
    match rng.gen_range(0..10) {
        0..=1 => FilterAst::IsNull(fr, rng.gen_bool(0.5)),
        2..=3 if field.data_type == "varchar" || field.data_type == "text" => {
            const PATTERNS: &[&str] = &["A%", "%n%", "_", "%", "A__a", "", "%'%", "a%z"];
            FilterAst::Like(fr, PATTERNS.choose(rng).unwrap().to_string())
        }
        _ => {
            let op = if field.data_type == "boolean" {
                *[CompareOp::Eq, CompareOp::Ne].choose(rng).unwrap()
            } else {
                *[
                    CompareOp::Eq,
                    CompareOp::Ne,
                    CompareOp::Lt,
                    CompareOp::Le,
                    CompareOp::Gt,
                    CompareOp::Ge,
                ]
                .choose(rng)
                .unwrap()
            };
            let literal = literal_for(rng, &field.data_type);
            FilterAst::Compare(fr, op, literal)
        }
    }
}

/// A well-typed random filter with the given maximum depth.
pub fn filter(rng: &mut impl Rng, fields: &[Field], depth: usize) -> FilterAst {
    if depth == 0 || rng.gen_bool(0.4) {
        return leaf(rng, fields);
    }
    match rng.gen_range(0..3) {
        0 => FilterAst::And(
            Box::new(filter(rng, fields, depth - 1)),
            Box::new(filter(rng, fields, depth - 1)),
        ),
        1 => FilterAst::Or(
            Box::new(filter(rng, fields, depth - 1)),
            Box::new(filter(rng, fields, depth - 1)),
        ),
        _ => FilterAst::Not(Box::new(filter(rng, fields, depth - 1))),
    }
}

/// A random order spec over distinct fields; may be empty.
pub fn order(rng: &mut impl Rng, fields: &[Field]) -> OrderSpec {
    let mut indices: Vec<usize> = (0..fields.len()).collect();
    indices.shuffle(rng);
    let n = rng.gen_range(0..=indices.len().min(3));
    let items = indices[..n]
        .iter()
        .map(|&i| {
            let fr = field_ref(rng, &fields[i]);
            let dir = if rng.gen_bool(0.5) {
                Direction::Asc
            } else {
                Direction::Desc
            };
            (fr, dir)
        })
        .collect();
    OrderSpec { items }
}
