//! Submit: single-row INSERT, UPDATE and DELETE with full validation and
//! all-or-nothing semantics. Request fields are matched to catalog columns
//! by name only; client-sent metadata flags are never trusted.

use rsp_wire::{Row, SubmitRequest, SubmitResponse, OP_DELETE, OP_INSERT, OP_UPDATE};

use crate::auth::Principal;
use crate::catalog::TableDef;
use crate::error::EngineError;
use crate::state::StoreState;

fn grant_for(operation: i64) -> i64 {
    match operation {
        OP_INSERT => rsp_wire::ACTION_INSERT,
        OP_UPDATE => rsp_wire::ACTION_UPDATE,
        OP_DELETE => rsp_wire::ACTION_DELETE,
        _ => unreachable!("checked before"),
    }
}

/// Checks a full candidate row against the table's constraints. `replacing`
/// excludes one stored row from the uniqueness and lets UPDATE validate its
/// replacement.
fn row_violations(
    state: &StoreState,
    table: &TableDef,
    row: &Row,
    replacing: Option<usize>,
) -> Vec<String> {
    let mut out = Vec::new();
    for (col, cell) in table.columns.iter().zip(row) {
        match cell {
            None => {
                if !col.nullable {
                    out.push(format!("column {} cannot be null", col.name));
                }
            }
            Some(text) => {
                if let Err(e) = rsp_wire::validate_cell(col.data_type, text) {
                    out.push(format!("column {}: {e}", col.name));
                    continue;
                }
                if let Some(max) = col.max_length {
                    if text.chars().count() as u64 > max {
                        out.push(format!(
                            "column {} exceeds max length {max}",
                            col.name
                        ));
                    }
                }
                if let Some((ref_table, _)) = &col.fk_target {
                    let target = &state.catalog[ref_table];
                    let pk = target.pk_index();
                    let exists = state
                        .table_rows(ref_table)
                        .iter()
                        .any(|r| r[pk].as_deref() == Some(text));
                    if !exists {
                        out.push(format!(
                            "column {}: no {ref_table} row with key {text:?}",
                            col.name
                        ));
                    }
                }
            }
        }
    }
    let pk = table.pk_index();
    if let Some(value) = &row[pk] {
        let duplicate = state
            .table_rows(&table.name)
            .iter()
            .enumerate()
            .any(|(i, r)| Some(i) != replacing && r[pk].as_deref() == Some(value.as_str()));
        if duplicate {
            out.push(format!("duplicate primary key {value:?}"));
        }
    }
    out
}

/// Public row validator: named cells against a table's constraints; columns
/// not named are treated as null. Total once the table exists.
pub fn validate_row(
    state: &StoreState,
    table_name: &str,
    cells: &[(String, Option<String>)],
) -> Result<Vec<String>, EngineError> {
    let table = state
        .table(table_name)
        .ok_or_else(|| EngineError::UnknownTable(table_name.to_owned()))?;
    let mut row: Row = vec![None; table.columns.len()];
    let mut out = Vec::new();
    for (name, value) in cells {
        match table.column_index(name) {
            Some(i) => row[i] = value.clone(),
            None => out.push(format!("unknown column {name}")),
        }
    }
    out.extend(row_violations(state, table, &row, None));
    Ok(out)
}

/// Maps the request's field names to column indices.
fn resolve_fields(
    table: &TableDef,
    request: &SubmitRequest,
) -> Result<Vec<usize>, EngineError> {
    if request.data.len() != request.fields.len() {
        return Err(EngineError::MalformedMessage(format!(
            "Data has {} values but Fields has {} entries",
            request.data.len(),
            request.fields.len()
        )));
    }
    let mut indices = Vec::with_capacity(request.fields.len());
    for field in &request.fields {
        let index = table
            .column_index(&field.name)
            .ok_or_else(|| EngineError::UnknownField(field.name.clone()))?;
        if indices.contains(&index) {
            return Err(EngineError::BadOperation(format!(
                "field {} supplied twice",
                field.name
            )));
        }
        indices.push(index);
    }
    Ok(indices)
}

fn constraint_error(violations: Vec<String>) -> EngineError {
    EngineError::ConstraintViolation(violations.join("; "))
}

fn insert(
    state: &mut StoreState,
    table_name: &str,
    indices: &[usize],
    data: &Row,
) -> Result<SubmitResponse, EngineError> {
    let table = &state.catalog[table_name];
    let auto_index = table.auto_generated_index();
    if let Some(auto) = auto_index {
        if indices.contains(&auto) {
            return Err(EngineError::BadOperation(format!(
                "column {} is auto-generated and cannot be supplied",
                table.columns[auto].name
            )));
        }
    }
    let mut row: Row = vec![None; table.columns.len()];
    for (&index, value) in indices.iter().zip(data) {
        row[index] = value.clone();
    }
    let identity = auto_index.map(|auto| {
        let counter = state.identity_counters[table_name];
        row[auto] = Some(counter.to_string());
        counter
    });
    let table = &state.catalog[table_name];
    let violations = row_violations(state, table, &row, None);
    if !violations.is_empty() {
        return Err(constraint_error(violations));
    }
    state.rows.get_mut(table_name).expect("table exists").push(row);
    if let Some(counter) = identity {
        state.identity_counters.insert(table_name.into(), counter + 1);
    }
    Ok(SubmitResponse {
        identity: identity.map(|n| n.to_string()),
    })
}

/// Locates the target row by the primary-key value inside the submitted
/// data; the PK field is identification, never a write.
fn find_target(
    state: &StoreState,
    table: &TableDef,
    indices: &[usize],
    data: &Row,
) -> Result<(usize, String), EngineError> {
    let pk = table.pk_index();
    let pk_position = indices.iter().position(|&i| i == pk).ok_or_else(|| {
        EngineError::BadOperation(format!(
            "fields must include the primary-key column {}",
            table.columns[pk].name
        ))
    })?;
    let value = data[pk_position].clone().ok_or_else(|| {
        EngineError::BadOperation("primary-key value cannot be null".into())
    })?;
    let row_index = state
        .table_rows(&table.name)
        .iter()
        .position(|r| r[pk].as_deref() == Some(value.as_str()))
        .ok_or_else(|| {
            EngineError::NotFound(format!(
                "no {} row with key {value:?}",
                table.name
            ))
        })?;
    Ok((row_index, value))
}

fn update(
    state: &mut StoreState,
    table_name: &str,
    indices: &[usize],
    data: &Row,
) -> Result<SubmitResponse, EngineError> {
    let table = &state.catalog[table_name];
    let pk = table.pk_index();
    let (row_index, _) = find_target(state, table, indices, data)?;
    let mut row = state.table_rows(table_name)[row_index].clone();
    for (&index, value) in indices.iter().zip(data) {
        if index == pk {
            continue;
        }
        let col = &table.columns[index];
        if col.auto_generated || !col.editable {
            return Err(EngineError::BadOperation(format!(
                "column {} is not editable",
                col.name
            )));
        }
        row[index] = value.clone();
    }
    let violations = row_violations(state, table, &row, Some(row_index));
    if !violations.is_empty() {
        return Err(constraint_error(violations));
    }
    state.rows.get_mut(table_name).expect("table exists")[row_index] = row;
    Ok(SubmitResponse { identity: None })
}

fn delete(
    state: &mut StoreState,
    table_name: &str,
    indices: &[usize],
    data: &Row,
) -> Result<SubmitResponse, EngineError> {
    let table = &state.catalog[table_name];
    let (row_index, pk_value) = find_target(state, table, indices, data)?;
    // No cascade: a referenced row cannot be deleted.
    for ring_table in state.catalog.values() {
        for (ci, col) in ring_table.columns.iter().enumerate() {
            let Some((red_table, _)) = &col.fk_target else {
                continue;
            };
            if red_table != table_name {
                continue;
            }
            let referenced = state
                .table_rows(&ring_table.name)
                .iter()
                .any(|r| r[ci].as_deref() == Some(pk_value.as_str()));
            if referenced {
                return Err(EngineError::ConstraintViolation(format!(
                    "row is referenced by {}.{}",
                    ring_table.name, col.name
                )));
            }
        }
    }
    state.rows.get_mut(table_name).expect("table exists").remove(row_index);
    Ok(SubmitResponse { identity: None })
}

/// Applies a submit request; the state changes only if every check passes.
pub fn submit(
    state: &mut StoreState,
    principal: &Principal,
    request: &SubmitRequest,
) -> Result<SubmitResponse, EngineError> {
    if state.table(&request.table_name).is_none() {
        return Err(EngineError::UnknownTable(request.table_name.clone()));
    }
    if !(1..=3).contains(&request.operation) {
        return Err(EngineError::BadOperation(format!(
            "operation {} not in {{1,2,3}}",
            request.operation
        )));
    }
    if !principal.has_grant(&request.table_name, grant_for(request.operation)) {
        return Err(EngineError::Forbidden(format!(
            "operation {} on {} not granted",
            request.operation, request.table_name
        )));
    }
    let table = &state.catalog[&request.table_name];
    let indices = resolve_fields(table, request)?;
    match request.operation {
        OP_INSERT => insert(state, &request.table_name, &indices, &request.data),
        OP_UPDATE => update(state, &request.table_name, &indices, &request.data),
        OP_DELETE => delete(state, &request.table_name, &indices, &request.data),
        _ => unreachable!(),
    }
}
