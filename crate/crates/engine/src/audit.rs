//! Full-state auditor: re-checks every storage invariant from scratch.
//! Used after randomized CRUD sequences to prove referential integrity is
//! preserved by construction.

use std::collections::BTreeSet;

use crate::state::StoreState;

/// Scans the whole store and returns every violated invariant: row shape,
/// cell encodings, nullability, max lengths, duplicate primary keys and
/// dangling foreign keys.
pub fn audit_state(state: &StoreState) -> Vec<String> {
    let mut out = Vec::new();
    for (name, table) in &state.catalog {
        let pk = table.pk_index();
        let mut pk_values = BTreeSet::new();
        for (i, row) in state.table_rows(name).iter().enumerate() {
            if row.len() != table.columns.len() {
                out.push(format!("{name}: row {i}: wrong cell count"));
                continue;
            }
            for (col, cell) in table.columns.iter().zip(row) {
                match cell {
                    None => {
                        if !col.nullable {
                            out.push(format!(
                                "{name}: row {i}: null in non-nullable {}",
                                col.name
                            ));
                        }
                    }
                    Some(text) => {
                        if rsp_wire::validate_cell(col.data_type, text).is_err() {
                            out.push(format!(
                                "{name}: row {i}: invalid {} cell {text:?}",
                                col.data_type
                            ));
                        }
                        if let Some(max) = col.max_length {
                            if text.chars().count() as u64 > max {
                                out.push(format!(
                                    "{name}: row {i}: {} over max length",
                                    col.name
                                ));
                            }
                        }
                        if let Some((ref_table, _)) = &col.fk_target {
                            let target = &state.catalog[ref_table];
                            let tpk = target.pk_index();
                            let exists = state
                                .table_rows(ref_table)
                                .iter()
                                .any(|r| r[tpk].as_deref() == Some(text.as_str()));
                            if !exists {
                                out.push(format!(
                                    "{name}: row {i}: dangling FK {} -> {ref_table} {text:?}",
                                    col.name
                                ));
                            }
                        }
                    }
                }
            }
            match &row.get(pk) {
                Some(Some(value)) => {
                    if !pk_values.insert(value.clone()) {
                        out.push(format!("{name}: row {i}: duplicate primary key"));
                    }
                }
                _ => out.push(format!("{name}: row {i}: null primary key")),
            }
        }
    }
    out
}
