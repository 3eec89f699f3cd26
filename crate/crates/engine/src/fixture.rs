//! Fixture documents: a JSON file declaring schema, rows, users and grants
//! that initializes the reference provider.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use rsp_wire::{validate_cell, DataType};

use crate::auth::hash_password;
use crate::catalog::{ColumnDef, TableDef, Titles};
use crate::state::{StoreState, UserRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("fixture error: {0}")]
pub struct FixtureError(pub String);

fn err(msg: impl Into<String>) -> FixtureError {
    FixtureError(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct FixtureDoc {
    pub default_language: String,
    pub tables: Vec<FixtureTable>,
    pub users: Vec<FixtureUser>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct FixtureTable {
    pub name: String,
    pub singular_titles: Titles,
    pub plural_titles: Titles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display_column: Option<String>,
    pub columns: Vec<FixtureColumn>,
    #[serde(default)]
    pub rows: Vec<Vec<Option<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct FixtureColumn {
    pub name: String,
    pub data_type: String,
    pub nullable: bool,
    pub primary_key: bool,
    pub auto_generated: bool,
    pub editable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub references: Option<FixtureReference>,
    #[serde(default)]
    pub titles: Titles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct FixtureReference {
    pub table: String,
    pub column: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct FixtureUser {
    pub user_name: String,
    /// Either a precomputed hash+salt pair or a plaintext password that is
    /// hashed with a fresh salt on load (dev convenience).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub password_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub salt: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub password: Option<String>,
    pub grants: BTreeMap<String, Vec<i64>>,
}

fn build_column(table: &str, col: &FixtureColumn) -> Result<ColumnDef, FixtureError> {
    let data_type = DataType::parse(&col.data_type).ok_or_else(|| {
        err(format!(
            "table {table}: column {}: unknown data type {:?}",
            col.name, col.data_type
        ))
    })?;
    if col.max_length.is_some() && data_type != DataType::Varchar {
        return Err(err(format!(
            "table {table}: column {}: MaxLength only allowed on varchar",
            col.name
        )));
    }
    if col.auto_generated {
        if !col.primary_key {
            return Err(err(format!(
                "table {table}: column {}: auto-generated requires primary key",
                col.name
            )));
        }
        if !matches!(data_type, DataType::Int | DataType::Long) {
            return Err(err(format!(
                "table {table}: column {}: auto-generated requires int or long",
                col.name
            )));
        }
        if col.editable {
            return Err(err(format!(
                "table {table}: column {}: auto-generated column cannot be editable",
                col.name
            )));
        }
    }
    if col.primary_key && col.nullable {
        return Err(err(format!(
            "table {table}: column {}: primary key cannot be nullable",
            col.name
        )));
    }
    Ok(ColumnDef {
        name: col.name.clone(),
        data_type,
        nullable: col.nullable,
        primary_key: col.primary_key,
        auto_generated: col.auto_generated,
        editable: col.editable,
        max_length: col.max_length,
        fk_target: col
            .references
            .as_ref()
            .map(|r| (r.table.clone(), r.column.clone())),
        titles: col.titles.clone(),
        description: col.description.clone(),
    })
}

/// Builds a validated [`StoreState`] from a parsed fixture document.
pub fn load_fixture_state(doc: &FixtureDoc) -> Result<StoreState, FixtureError> {
    let mut catalog: BTreeMap<String, TableDef> = BTreeMap::new();
    for table in &doc.tables {
        if table.name.is_empty() {
            return Err(err("table with empty name"));
        }
        let mut names = BTreeSet::new();
        let mut columns = Vec::new();
        for col in &table.columns {
            if !names.insert(col.name.as_str()) {
                return Err(err(format!(
                    "table {}: duplicate column {}",
                    table.name, col.name
                )));
            }
            columns.push(build_column(&table.name, col)?);
        }
        let pk_count = columns.iter().filter(|c| c.primary_key).count();
        if pk_count != 1 {
            return Err(err(format!(
                "table {}: expected exactly one primary-key column, found {pk_count}",
                table.name
            )));
        }
        if let Some(display) = &table.display_column {
            match columns.iter().find(|c| c.name == *display) {
                None => {
                    return Err(err(format!(
                        "table {}: DisplayColumn {display:?} does not exist",
                        table.name
                    )))
                }
                Some(c) if c.primary_key => {
                    return Err(err(format!(
                        "table {}: DisplayColumn {display:?} must be a non-key column",
                        table.name
                    )))
                }
                Some(_) => {}
            }
        }
        let def = TableDef {
            name: table.name.clone(),
            singular_titles: table.singular_titles.clone(),
            plural_titles: table.plural_titles.clone(),
            description: table.description.clone(),
            columns,
            display_column: table.display_column.clone(),
        };
        if catalog.insert(table.name.clone(), def).is_some() {
            return Err(err(format!("duplicate table {}", table.name)));
        }
    }

    // Foreign keys must target the single primary-key column of an existing
    // table, and never the column itself.
    for table in catalog.values() {
        for col in &table.columns {
            if let Some((ref_table, ref_column)) = &col.fk_target {
                let target = catalog.get(ref_table).ok_or_else(|| {
                    err(format!(
                        "table {}: column {} references unknown table {ref_table}",
                        table.name, col.name
                    ))
                })?;
                let target_pk = &target.columns[target.pk_index()];
                if target_pk.name != *ref_column {
                    return Err(err(format!(
                        "table {}: column {} must reference the primary key of {ref_table}",
                        table.name, col.name
                    )));
                }
                if table.name == *ref_table && col.name == *ref_column {
                    return Err(err(format!(
                        "table {}: column {} references itself",
                        table.name, col.name
                    )));
                }
            }
        }
    }

    // Rows: shape, cell encodings, nullability, lengths, PK uniqueness.
    let mut rows: BTreeMap<String, Vec<Vec<Option<String>>>> = BTreeMap::new();
    for table in &doc.tables {
        let def = &catalog[&table.name];
        let pk = def.pk_index();
        let mut pk_values = BTreeSet::new();
        for (i, row) in table.rows.iter().enumerate() {
            if row.len() != def.columns.len() {
                return Err(err(format!(
                    "table {}: row {i} has {} cells, expected {}",
                    table.name,
                    row.len(),
                    def.columns.len()
                )));
            }
            for (col, cell) in def.columns.iter().zip(row) {
                match cell {
                    None if !col.nullable => {
                        return Err(err(format!(
                            "table {}: row {i}: null in non-nullable column {}",
                            table.name, col.name
                        )))
                    }
                    None => {}
                    Some(text) => {
                        validate_cell(col.data_type, text).map_err(|e| {
                            err(format!("table {}: row {i}: {e}", table.name))
                        })?;
                        if let Some(max) = col.max_length {
                            if text.chars().count() as u64 > max {
                                return Err(err(format!(
                                    "table {}: row {i}: column {} exceeds max length {max}",
                                    table.name, col.name
                                )));
                            }
                        }
                    }
                }
            }
            let pk_cell = row[pk].clone().expect("primary key is non-nullable");
            if !pk_values.insert(pk_cell) {
                return Err(err(format!(
                    "table {}: row {i}: duplicate primary key",
                    table.name
                )));
            }
        }
        rows.insert(table.name.clone(), table.rows.clone());
    }

    // Second pass: every FK cell must resolve to an existing target row.
    for (name, def) in &catalog {
        for (ci, col) in def.columns.iter().enumerate() {
            let Some((ref_table, _)) = &col.fk_target else {
                continue;
            };
            let target_def = &catalog[ref_table];
            let target_pk = target_def.pk_index();
            for (i, row) in rows[name].iter().enumerate() {
                if let Some(value) = &row[ci] {
                    let found = rows[ref_table]
                        .iter()
                        .any(|r| r[target_pk].as_deref() == Some(value));
                    if !found {
                        return Err(err(format!(
                            "table {name}: row {i}: column {} references missing {ref_table} row {value:?}",
                            col.name
                        )));
                    }
                }
            }
        }
    }

    // Identity counters: 1 + max existing key; empty tables start at 1.
    let mut identity_counters = BTreeMap::new();
    for (name, def) in &catalog {
        if def.auto_generated_index().is_none() {
            continue;
        }
        let pk = def.pk_index();
        let max = rows[name]
            .iter()
            .filter_map(|r| r[pk].as_deref().and_then(|v| v.parse::<i64>().ok()))
            .max()
            .unwrap_or(0);
        identity_counters.insert(name.clone(), max + 1);
    }

    let mut users = BTreeMap::new();
    for user in &doc.users {
        if user.user_name.is_empty() {
            return Err(err("user with empty name"));
        }
        let record = match (&user.password_hash, &user.salt, &user.password) {
            (Some(hash), Some(salt), None) => UserRecord {
                password_hash: hash.clone(),
                salt: salt.clone(),
                grants: BTreeMap::new(),
            },
            (None, None, Some(plain)) => {
                let mut salt_bytes = [0u8; 16];
                rand::thread_rng().fill_bytes(&mut salt_bytes);
                let salt = hex::encode(salt_bytes);
                UserRecord {
                    password_hash: hash_password(&salt, plain),
                    salt,
                    grants: BTreeMap::new(),
                }
            }
            _ => {
                return Err(err(format!(
                    "user {}: provide either PasswordHash+Salt or Password",
                    user.user_name
                )))
            }
        };
        let mut grants: BTreeMap<String, BTreeSet<i64>> = BTreeMap::new();
        for (table, actions) in &user.grants {
            if !catalog.contains_key(table) {
                return Err(err(format!(
                    "user {}: grant on unknown table {table}",
                    user.user_name
                )));
            }
            let set: BTreeSet<i64> = actions.iter().copied().collect();
            if set.iter().any(|a| !(1..=4).contains(a)) {
                return Err(err(format!(
                    "user {}: invalid action code in grants for {table}",
                    user.user_name
                )));
            }
            grants.insert(table.clone(), set);
        }
        let record = UserRecord { grants, ..record };
        if users.insert(user.user_name.clone(), record).is_some() {
            return Err(err(format!("duplicate user {}", user.user_name)));
        }
    }

    if doc.default_language.len() != 2
        || !doc.default_language.bytes().all(|b| b.is_ascii_lowercase())
    {
        return Err(err(format!(
            "DefaultLanguage {:?} is not a two-letter lowercase code",
            doc.default_language
        )));
    }

    Ok(StoreState {
        catalog,
        rows,
        identity_counters,
        users,
        default_language: doc.default_language.clone(),
    })
}

/// Parses and validates a fixture from JSON text.
pub fn load_fixture_text(text: &str) -> Result<StoreState, FixtureError> {
    let doc: FixtureDoc =
        serde_json::from_str(text).map_err(|e| err(format!("invalid fixture JSON: {e}")))?;
    load_fixture_state(&doc)
}

/// Loads a fixture from a file path.
pub fn load_fixture_file(path: &Path) -> Result<StoreState, FixtureError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(format!("cannot read fixture {}: {e}", path.display())))?;
    load_fixture_text(&text)
}
