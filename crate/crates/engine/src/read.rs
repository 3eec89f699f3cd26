//! Read-side behaviors: header enumeration, field planning with foreign-key
//! auto-join, reference collection, and the full ReadTable pipeline.

use std::collections::BTreeSet;

use rsp_expr::{bind_filter, bind_order, compare_rows, eval_filter, parse_filter, parse_order};
use rsp_wire::{
    Field, ReadTableRequest, Reference, Row, TableHeader, TableMessage, ACTION_SELECT,
};

use crate::auth::Principal;
use crate::catalog::TableDef;
use crate::error::EngineError;
use crate::state::StoreState;

/// One header per SELECT-granted table, ordered by table name.
pub fn read_table_headers(
    state: &StoreState,
    principal: &Principal,
    language: Option<&str>,
) -> Vec<TableHeader> {
    state
        .catalog
        .values()
        .filter(|table| principal.has_grant(&table.name, ACTION_SELECT))
        .map(|table| TableHeader {
            table_name: table.name.clone(),
            singular_title: table.singular_title(language, &state.default_language),
            plural_title: table.plural_title(language, &state.default_language),
            description: table.description.clone(),
        })
        .collect()
}

fn base_field(
    state: &StoreState,
    table: &TableDef,
    index: usize,
    language: Option<&str>,
) -> Field {
    let col = &table.columns[index];
    Field {
        data_type: col.data_type.as_str().into(),
        description: col.description.clone(),
        id: format!("{}.{}", table.name, col.name),
        is_auto_generated: col.auto_generated,
        is_display_field: false,
        is_editable: col.editable,
        is_foreign_key: col.fk_target.is_some(),
        is_joined: false,
        is_nullable: col.nullable,
        is_primary_key: col.primary_key,
        max_length: col.max_length,
        name: col.name.clone(),
        referenced_field: col.fk_target.as_ref().map(|(_, c)| c.clone()),
        referenced_table: col.fk_target.as_ref().map(|(t, _)| t.clone()),
        table: table.name.clone(),
        title: col.title(language, &state.default_language),
    }
}

/// The planned field list: base columns in catalog order, each foreign key
/// immediately followed by a joined field for the referenced table's display
/// column (when it has one).
pub fn plan_fields(
    state: &StoreState,
    table_name: &str,
    language: Option<&str>,
) -> Result<Vec<Field>, EngineError> {
    let table = state
        .table(table_name)
        .ok_or_else(|| EngineError::UnknownTable(table_name.to_owned()))?;
    let mut fields = Vec::new();
    let mut used_ids = BTreeSet::new();
    for (i, col) in table.columns.iter().enumerate() {
        let field = base_field(state, table, i, language);
        used_ids.insert(field.id.clone());
        fields.push(field);
        let Some((ref_name, _)) = &col.fk_target else {
            continue;
        };
        let ref_table = &state.catalog[ref_name];
        let Some(display_name) = &ref_table.display_column else {
            continue;
        };
        let display = ref_table.column(display_name).expect("validated at load");
        let base_id = format!("{}.{}", ref_table.name, display.name);
        // Two foreign keys into the same table would collide on the joined
        // id; suffix the later ones.
        let mut id = base_id.clone();
        let mut n = 1;
        while !used_ids.insert(id.clone()) {
            n += 1;
            id = format!("{base_id}#{n}");
        }
        fields.push(Field {
            data_type: display.data_type.as_str().into(),
            description: display.description.clone(),
            id,
            is_auto_generated: false,
            is_display_field: true,
            is_editable: false,
            is_foreign_key: false,
            is_joined: true,
            is_nullable: true,
            is_primary_key: false,
            max_length: display.max_length,
            name: display.name.clone(),
            referenced_field: None,
            referenced_table: None,
            table: ref_table.name.clone(),
            title: display.title(language, &state.default_language),
        });
    }
    Ok(fields)
}

/// Incoming foreign-key edges of `table_name`, ordered by referencing table
/// and column.
pub fn collect_references(
    state: &StoreState,
    table_name: &str,
    language: Option<&str>,
) -> Result<Vec<Reference>, EngineError> {
    let table = state
        .table(table_name)
        .ok_or_else(|| EngineError::UnknownTable(table_name.to_owned()))?;
    let mut references = Vec::new();
    for ring_table in state.catalog.values() {
        for col in &ring_table.columns {
            let Some((red_table, red_field)) = &col.fk_target else {
                continue;
            };
            if red_table != table_name {
                continue;
            }
            references.push(Reference {
                red_field: red_field.clone(),
                red_table: table.name.clone(),
                ring_field: col.name.clone(),
                ring_field_title: col.title(language, &state.default_language),
                ring_table: ring_table.name.clone(),
                ring_table_plural_title: ring_table
                    .plural_title(language, &state.default_language),
            });
        }
    }
    references.sort_by(|a, b| {
        (&a.ring_table, &a.ring_field).cmp(&(&b.ring_table, &b.ring_field))
    });
    Ok(references)
}

/// Extends each stored row with the joined display cells, in planned field
/// order. A null foreign key yields a null joined cell.
fn materialize_rows(state: &StoreState, table: &TableDef) -> Vec<Row> {
    let mut joined: Vec<Option<(usize, usize, usize)>> = Vec::new();
    // For each FK column with a display target, precompute (fk column index,
    // target pk index, target display index) keyed by catalog order.
    let mut extended = Vec::new();
    for (ci, col) in table.columns.iter().enumerate() {
        joined.push(None);
        if let Some((ref_name, _)) = &col.fk_target {
            let ref_table = &state.catalog[ref_name];
            if let Some(display_name) = &ref_table.display_column {
                let pk = ref_table.pk_index();
                let display = ref_table.column_index(display_name).expect("validated");
                *joined.last_mut().unwrap() = Some((ci, pk, display));
            }
        }
    }
    for row in state.table_rows(&table.name) {
        let mut out = Vec::with_capacity(row.len() + 2);
        for (ci, cell) in row.iter().enumerate() {
            out.push(cell.clone());
            if let Some((_, pk, display)) = joined[ci] {
                let (ref_name, _) = table.columns[ci].fk_target.as_ref().unwrap();
                let joined_cell = cell.as_ref().and_then(|value| {
                    state
                        .table_rows(ref_name)
                        .iter()
                        .find(|r| r[pk].as_deref() == Some(value))
                        .and_then(|r| r[display].clone())
                });
                out.push(joined_cell);
            }
        }
        extended.push(out);
    }
    extended
}

/// The full ReadTable pipeline: authorize, plan, materialize, filter, sort,
/// paginate, assemble.
pub fn read_table(
    state: &StoreState,
    principal: &Principal,
    request: &ReadTableRequest,
) -> Result<TableMessage, EngineError> {
    let table = state
        .table(&request.table_name)
        .ok_or_else(|| EngineError::UnknownTable(request.table_name.clone()))?;
    if !principal.has_grant(&table.name, ACTION_SELECT) {
        return Err(EngineError::Forbidden(format!(
            "SELECT on {} not granted",
            table.name
        )));
    }
    let language = request.language.as_deref();
    let fields = plan_fields(state, &table.name, language)?;
    let references = collect_references(state, &table.name, language)?;
    let mut rows = materialize_rows(state, table);

    if let Some(filter_text) = request.filter_expression.as_deref() {
        if !filter_text.trim().is_empty() {
            let ast = parse_filter(filter_text)?;
            let bound = bind_filter(&ast, &fields)?;
            let mut kept = Vec::with_capacity(rows.len());
            for row in rows {
                if eval_filter(&bound, &row)? {
                    kept.push(row);
                }
            }
            rows = kept;
        }
    }

    if let Some(order_text) = request.order_expression.as_deref() {
        let spec = parse_order(order_text)?;
        if !spec.items.is_empty() {
            let bound = bind_order(&spec, &fields)?;
            let mut sort_error = None;
            // Stable sort keeps insertion order as the tiebreak.
            rows.sort_by(|a, b| match compare_rows(&bound, a, b) {
                Ok(ord) => ord,
                Err(e) => {
                    sort_error.get_or_insert(e);
                    std::cmp::Ordering::Equal
                }
            });
            if let Some(e) = sort_error {
                return Err(e.into());
            }
        }
    }

    let skip = request.skip as usize;
    let rows: Vec<Row> = if request.take == 0 {
        rows.into_iter().skip(skip).collect()
    } else {
        rows.into_iter().skip(skip).take(request.take as usize).collect()
    };

    Ok(TableMessage {
        actions: principal.actions_for(&table.name),
        fields,
        header: TableHeader {
            table_name: table.name.clone(),
            singular_title: table.singular_title(language, &state.default_language),
            plural_title: table.plural_title(language, &state.default_language),
            description: table.description.clone(),
        },
        items: rows,
        references,
    })
}
