use std::collections::{BTreeMap, BTreeSet};

use sha2::{Digest, Sha256};

use crate::error::EngineError;
use crate::state::StoreState;

/// An authenticated user with its grant map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Principal {
    pub user_name: String,
    pub grants: BTreeMap<String, BTreeSet<i64>>,
}

impl Principal {
    pub fn has_grant(&self, table: &str, action: i64) -> bool {
        self.grants
            .get(table)
            .is_some_and(|actions| actions.contains(&action))
    }

    /// The ascending action codes granted on `table`.
    pub fn actions_for(&self, table: &str) -> Vec<i64> {
        self.grants
            .get(table)
            .map(|set| set.iter().copied().collect())
            .unwrap_or_default()
    }
}

pub fn hash_password(salt: &str, password: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(salt.as_bytes());
    hasher.update(password.as_bytes());
    hex::encode(hasher.finalize())
}

/// Checks credentials against the user registry. The failure is identical
/// for an unknown user and a wrong password, so callers cannot enumerate
/// user names.
pub fn authenticate(
    state: &StoreState,
    user_name: &str,
    password: &str,
) -> Result<Principal, EngineError> {
    match state.users.get(user_name) {
        Some(record) if hash_password(&record.salt, password) == record.password_hash => {
            Ok(Principal {
                user_name: user_name.to_owned(),
                grants: record.grants.clone(),
            })
        }
        Some(_) => Err(EngineError::AuthFailed),
        None => {
            // Burn a hash anyway so the timing profile matches.
            let _ = hash_password("no-such-user", password);
            Err(EngineError::AuthFailed)
        }
    }
}
