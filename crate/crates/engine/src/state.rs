use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use rsp_wire::Row;

use crate::catalog::TableDef;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserRecord {
    pub password_hash: String,
    pub salt: String,
    /// table name -> granted action codes (1..=4).
    pub grants: BTreeMap<String, BTreeSet<i64>>,
}

/// The whole provider state: catalog, row storage, identity counters and
/// user registry. All maps are ordered so serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoreState {
    pub catalog: BTreeMap<String, TableDef>,
    pub rows: BTreeMap<String, Vec<Row>>,
    pub identity_counters: BTreeMap<String, i64>,
    pub users: BTreeMap<String, UserRecord>,
    pub default_language: String,
}

impl StoreState {
    pub fn table(&self, name: &str) -> Option<&TableDef> {
        self.catalog.get(name)
    }

    pub fn table_rows(&self, name: &str) -> &[Row] {
        self.rows.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Content hash of the full state; used to prove that failed or
    /// forbidden operations left the store untouched.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_vec(self).expect("state serializes");
        hex::encode(Sha256::digest(&json))
    }
}
