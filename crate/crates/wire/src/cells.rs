//! Canonical cell encodings for the all-string row matrices.
//!
//! Vocabulary: `int`, `long`, `decimal`, `varchar`, `text`, `boolean`,
//! `datetime`. Integers are optional-minus decimal digits; decimals use a
//! `.` separator with no exponent; booleans are `true`/`false`; datetimes
//! are `YYYY-MM-DDTHH:MM:SSZ` (UTC); varchar/text are verbatim.

use std::cmp::Ordering;

use chrono::NaiveDateTime;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataType {
    Int,
    Long,
    Decimal,
    Varchar,
    Text,
    Boolean,
    DateTime,
}

impl DataType {
    pub fn parse(name: &str) -> Option<DataType> {
        Some(match name {
            "int" => DataType::Int,
            "long" => DataType::Long,
            "decimal" => DataType::Decimal,
            "varchar" => DataType::Varchar,
            "text" => DataType::Text,
            "boolean" => DataType::Boolean,
            "datetime" => DataType::DateTime,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DataType::Int => "int",
            DataType::Long => "long",
            DataType::Decimal => "decimal",
            DataType::Varchar => "varchar",
            DataType::Text => "text",
            DataType::Boolean => "boolean",
            DataType::DateTime => "datetime",
        }
    }

    /// Character types carry data verbatim and may have a max length.
    pub fn is_character(&self) -> bool {
        matches!(self, DataType::Varchar | DataType::Text)
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, DataType::Int | DataType::Long | DataType::Decimal)
    }
}

impl std::fmt::Display for DataType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("cell {cell:?} is not a valid {data_type} value")]
    Invalid { data_type: DataType, cell: String },
}

fn invalid(data_type: DataType, cell: &str) -> CellError {
    CellError::Invalid {
        data_type,
        cell: cell.to_owned(),
    }
}

fn parse_integer(dt: DataType, cell: &str) -> Result<i64, CellError> {
    let digits = cell.strip_prefix('-').unwrap_or(cell);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid(dt, cell));
    }
    cell.parse::<i64>().map_err(|_| invalid(dt, cell))
}

/// A decimal split into sign and digit runs, normalized for comparison.
struct Decimal<'a> {
    negative: bool,
    int_part: &'a str,
    frac_part: &'a str,
}

fn parse_decimal(cell: &str) -> Result<Decimal<'_>, CellError> {
    let (negative, body) = match cell.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, cell),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() || !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(invalid(DataType::Decimal, cell));
    }
    if body.contains('.') && frac_part.is_empty() {
        return Err(invalid(DataType::Decimal, cell));
    }
    Ok(Decimal {
        negative,
        int_part: int_part.trim_start_matches('0'),
        frac_part: frac_part.trim_end_matches('0'),
    })
}

fn compare_decimals(a: &Decimal<'_>, b: &Decimal<'_>) -> Ordering {
    let a_zero = a.int_part.is_empty() && a.frac_part.is_empty();
    let b_zero = b.int_part.is_empty() && b.frac_part.is_empty();
    if a_zero && b_zero {
        return Ordering::Equal;
    }
    let a_neg = a.negative && !a_zero;
    let b_neg = b.negative && !b_zero;
    match (a_neg, b_neg) {
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    let magnitude = compare_magnitudes(a, b);
    if a_neg {
        magnitude.reverse()
    } else {
        magnitude
    }
}

fn compare_magnitudes(a: &Decimal<'_>, b: &Decimal<'_>) -> Ordering {
    match a.int_part.len().cmp(&b.int_part.len()) {
        Ordering::Equal => {}
        other => return other,
    }
    match a.int_part.cmp(b.int_part) {
        Ordering::Equal => {}
        other => return other,
    }
    // Same integer part; fractional digit runs compare lexicographically
    // once trailing zeros are stripped.
    a.frac_part.cmp(b.frac_part)
}

fn check_datetime(cell: &str) -> Result<(), CellError> {
    if cell.len() != 20 || !cell.ends_with('Z') {
        return Err(invalid(DataType::DateTime, cell));
    }
    NaiveDateTime::parse_from_str(cell, "%Y-%m-%dT%H:%M:%SZ")
        .map(|_| ())
        .map_err(|_| invalid(DataType::DateTime, cell))
}

/// Checks that a non-null cell parses under its column's canonical encoding.
pub fn validate_cell(data_type: DataType, cell: &str) -> Result<(), CellError> {
    match data_type {
        DataType::Int | DataType::Long => parse_integer(data_type, cell).map(|_| ()),
        DataType::Decimal => parse_decimal(cell).map(|_| ()),
        DataType::Boolean => match cell {
            "true" | "false" => Ok(()),
            _ => Err(invalid(DataType::Boolean, cell)),
        },
        DataType::DateTime => check_datetime(cell),
        DataType::Varchar | DataType::Text => Ok(()),
    }
}

/// Compares two non-null cells of the same column type: numeric for
/// int/long/decimal, chronological for datetime, code-point lexicographic
/// for character types, `false < true` for booleans.
pub fn compare_cells(data_type: DataType, a: &str, b: &str) -> Result<Ordering, CellError> {
    match data_type {
        DataType::Int | DataType::Long => {
            let va = parse_integer(data_type, a)?;
            let vb = parse_integer(data_type, b)?;
            Ok(va.cmp(&vb))
        }
        DataType::Decimal => {
            let da = parse_decimal(a)?;
            let db = parse_decimal(b)?;
            Ok(compare_decimals(&da, &db))
        }
        DataType::Boolean => {
            let pa = match a {
                "false" => false,
                "true" => true,
                _ => return Err(invalid(data_type, a)),
            };
            let pb = match b {
                "false" => false,
                "true" => true,
                _ => return Err(invalid(data_type, b)),
            };
            Ok(pa.cmp(&pb))
        }
        DataType::DateTime => {
            check_datetime(a)?;
            check_datetime(b)?;
            // Fixed-width UTC format, so byte order is chronological order.
            Ok(a.cmp(b))
        }
        DataType::Varchar | DataType::Text => Ok(a.chars().cmp(b.chars())),
    }
}
