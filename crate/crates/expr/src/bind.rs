//! Name and type resolution against a planned field list.
//!
//! Unqualified names resolve against the base table's own fields only;
//! qualified `Table.Column` names resolve against any field, which is how
//! joined display fields are addressed.

use rsp_wire::{DataType, Field};

use crate::ast::*;
use crate::ExprError;

/// A field reference resolved to a column index in the planned field list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundColumn {
    pub index: usize,
    pub name: String,
    pub data_type: DataType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundFilter {
    And(Box<BoundFilter>, Box<BoundFilter>),
    Or(Box<BoundFilter>, Box<BoundFilter>),
    Not(Box<BoundFilter>),
    Compare(BoundColumn, CompareOp, Literal),
    Like(BoundColumn, String),
    IsNull(BoundColumn, bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundOrderItem {
    pub column: BoundColumn,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundOrder {
    pub items: Vec<BoundOrderItem>,
}

fn resolve(field_ref: &FieldRef, fields: &[Field]) -> Result<BoundColumn, ExprError> {
    let matches: Vec<usize> = match &field_ref.table_qualifier {
        Some(table) => fields
            .iter()
            .enumerate()
            .filter(|(_, f)| f.table == *table && f.name == field_ref.column_name)
            .map(|(i, _)| i)
            .collect(),
        None => fields
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_joined && f.name == field_ref.column_name)
            .map(|(i, _)| i)
            .collect(),
    };
    match matches.as_slice() {
        [index] => {
            let field = &fields[*index];
            let data_type = DataType::parse(&field.data_type).ok_or_else(|| {
                ExprError::CorruptCell(format!(
                    "field {} has unknown data type {:?}",
                    field.id, field.data_type
                ))
            })?;
            Ok(BoundColumn {
                index: *index,
                name: field.name.clone(),
                data_type,
            })
        }
        [] => Err(ExprError::UnknownField(field_ref.to_string())),
        _ => Err(ExprError::UnknownField(format!("{field_ref} is ambiguous"))),
    }
}

fn type_error(message: String) -> ExprError {
    ExprError::BadExpression {
        position: 0,
        message,
    }
}

fn check_operator(column: &BoundColumn, op: CompareOp) -> Result<(), ExprError> {
    let ordered = matches!(
        column.data_type,
        DataType::Int
            | DataType::Long
            | DataType::Decimal
            | DataType::DateTime
            | DataType::Varchar
            | DataType::Text
    );
    match op {
        CompareOp::Eq | CompareOp::Ne => Ok(()),
        _ if ordered => Ok(()),
        _ => Err(type_error(format!(
            "operator {} not supported on {} column {}",
            op.as_str(),
            column.data_type,
            column.name
        ))),
    }
}

fn check_literal(column: &BoundColumn, literal: &Literal) -> Result<(), ExprError> {
    let ok = match (column.data_type, literal) {
        (DataType::Int | DataType::Long, Literal::Integer(_)) => true,
        (DataType::Decimal, Literal::Integer(_) | Literal::Decimal(_)) => true,
        (DataType::Varchar | DataType::Text, Literal::Str(_)) => true,
        (DataType::DateTime, Literal::Str(s)) => {
            return rsp_wire::validate_cell(DataType::DateTime, s).map_err(|_| {
                type_error(format!(
                    "literal {s:?} is not a YYYY-MM-DDTHH:MM:SSZ datetime (column {})",
                    column.name
                ))
            });
        }
        (DataType::Boolean, Literal::Boolean(_)) => true,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(type_error(format!(
            "literal does not match {} column {}",
            column.data_type, column.name
        )))
    }
}

pub fn bind_filter(ast: &FilterAst, fields: &[Field]) -> Result<BoundFilter, ExprError> {
    Ok(match ast {
        FilterAst::And(l, r) => BoundFilter::And(
            Box::new(bind_filter(l, fields)?),
            Box::new(bind_filter(r, fields)?),
        ),
        FilterAst::Or(l, r) => BoundFilter::Or(
            Box::new(bind_filter(l, fields)?),
            Box::new(bind_filter(r, fields)?),
        ),
        FilterAst::Not(c) => BoundFilter::Not(Box::new(bind_filter(c, fields)?)),
        FilterAst::Compare(field_ref, op, literal) => {
            let column = resolve(field_ref, fields)?;
            check_operator(&column, *op)?;
            check_literal(&column, literal)?;
            BoundFilter::Compare(column, *op, literal.clone())
        }
        FilterAst::Like(field_ref, pattern) => {
            let column = resolve(field_ref, fields)?;
            if !column.data_type.is_character() {
                return Err(type_error(format!(
                    "LIKE not supported on {} column {}",
                    column.data_type, column.name
                )));
            }
            BoundFilter::Like(column, pattern.clone())
        }
        FilterAst::IsNull(field_ref, negated) => {
            BoundFilter::IsNull(resolve(field_ref, fields)?, *negated)
        }
    })
}

pub fn bind_order(spec: &OrderSpec, fields: &[Field]) -> Result<BoundOrder, ExprError> {
    let items = spec
        .items
        .iter()
        .map(|(field_ref, direction)| {
            Ok(BoundOrderItem {
                column: resolve(field_ref, fields)?,
                direction: *direction,
            })
        })
        .collect::<Result<Vec<_>, ExprError>>()?;
    Ok(BoundOrder { items })
}
