//! Row evaluation. Comparisons against a null cell are false; `IS NULL`
//! tests nullness explicitly. There is no three-valued logic.

use std::cmp::Ordering;

use rsp_wire::{compare_cells, Row};

use crate::ast::{CompareOp, Direction, Literal};
use crate::bind::{BoundColumn, BoundFilter, BoundOrder};
use crate::ExprError;

fn literal_text(literal: &Literal) -> &str {
    match literal {
        Literal::Integer(_) | Literal::Decimal(_) => unreachable!("handled numerically"),
        Literal::Str(s) => s,
        Literal::Boolean(true) => "true",
        Literal::Boolean(false) => "false",
        Literal::Null => unreachable!("null literals are rejected at parse time"),
    }
}

fn corrupt(column: &BoundColumn, cell: &str) -> ExprError {
    ExprError::CorruptCell(format!(
        "cell {cell:?} in column {} is not a valid {}",
        column.name, column.data_type
    ))
}

fn compare_cell_to_literal(
    column: &BoundColumn,
    cell: &str,
    literal: &Literal,
) -> Result<Ordering, ExprError> {
    let literal_canonical;
    let literal_str = match literal {
        Literal::Integer(n) => {
            literal_canonical = n.to_string();
            literal_canonical.as_str()
        }
        Literal::Decimal(s) => s.as_str(),
        _ => literal_text(literal),
    };
    compare_cells(column.data_type, cell, literal_str).map_err(|_| corrupt(column, cell))
}

fn ordering_satisfies(op: CompareOp, ord: Ordering) -> bool {
    match op {
        CompareOp::Eq => ord == Ordering::Equal,
        CompareOp::Ne => ord != Ordering::Equal,
        CompareOp::Lt => ord == Ordering::Less,
        CompareOp::Le => ord != Ordering::Greater,
        CompareOp::Gt => ord == Ordering::Greater,
        CompareOp::Ge => ord != Ordering::Less,
    }
}

/// `%` matches any run of characters, `_` exactly one; case-sensitive.
pub fn like_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0usize, 0usize);
    // Backtrack point: pattern index after the last '%' and the text index
    // it has consumed up to. Two-pointer scan, worst case O(|p|*|t|).
    let mut star: Option<(usize, usize)> = None;
    while ti < t.len() {
        if pi < p.len() && p[pi] == '%' {
            star = Some((pi + 1, ti));
            pi += 1;
        } else if pi < p.len() && (p[pi] == '_' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if let Some((sp, st)) = star {
            pi = sp;
            ti = st + 1;
            star = Some((sp, st + 1));
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == '%' {
        pi += 1;
    }
    pi == p.len()
}

/// Evaluates a bound filter against one materialized row.
pub fn eval_filter(filter: &BoundFilter, row: &Row) -> Result<bool, ExprError> {
    Ok(match filter {
        BoundFilter::And(l, r) => eval_filter(l, row)? && eval_filter(r, row)?,
        BoundFilter::Or(l, r) => eval_filter(l, row)? || eval_filter(r, row)?,
        BoundFilter::Not(c) => !eval_filter(c, row)?,
        BoundFilter::Compare(column, op, literal) => match &row[column.index] {
            None => false,
            Some(cell) => {
                ordering_satisfies(*op, compare_cell_to_literal(column, cell, literal)?)
            }
        },
        BoundFilter::Like(column, pattern) => match &row[column.index] {
            None => false,
            Some(cell) => like_match(pattern, cell),
        },
        BoundFilter::IsNull(column, negated) => (row[column.index].is_none()) != *negated,
    })
}

/// Compares two rows under a bound order: lexicographic over the items,
/// null first under ASC and last under DESC. Ties are left for the caller's
/// stable sort.
pub fn compare_rows(order: &BoundOrder, a: &Row, b: &Row) -> Result<Ordering, ExprError> {
    for item in &order.items {
        let column = &item.column;
        let ord = match (&a[column.index], &b[column.index]) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(x), Some(y)) => {
                compare_cells(column.data_type, x, y).map_err(|_| corrupt(column, x))?
            }
        };
        let ord = match item.direction {
            Direction::Asc => ord,
            Direction::Desc => ord.reverse(),
        };
        if ord != Ordering::Equal {
            return Ok(ord);
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn like_patterns() {
        assert!(like_match("A%", "Anna"));
        assert!(like_match("%nn%", "Anna"));
        assert!(like_match("A__a", "Anna"));
        assert!(!like_match("a%", "Anna"));
        assert!(!like_match("A_", "Anna"));
        assert!(like_match("%", ""));
        assert!(!like_match("_", ""));
        assert!(like_match("100%", "100%x"));
    }
}
