use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rsp_wire::DataType;

/// Localized display strings keyed by ISO 639-1 language code.
pub type Titles = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnDef {
    pub name: String,
    pub data_type: DataType,
    pub nullable: bool,
    pub primary_key: bool,
    pub auto_generated: bool,
    pub editable: bool,
    pub max_length: Option<u64>,
    /// Outgoing foreign-key edge: (referenced table, referenced column).
    pub fk_target: Option<(String, String)>,
    pub titles: Titles,
    pub description: Option<String>,
}

impl ColumnDef {
    pub fn title(&self, language: Option<&str>, default_language: &str) -> String {
        localized(&self.titles, language, default_language)
            .unwrap_or_else(|| self.name.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDef {
    pub name: String,
    pub singular_titles: Titles,
    pub plural_titles: Titles,
    pub description: Option<String>,
    pub columns: Vec<ColumnDef>,
    /// Column shown in place of a raw foreign-key value when other tables
    /// join to this one; absent means this table opts out of auto-join.
    pub display_column: Option<String>,
}

impl TableDef {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    pub fn column(&self, name: &str) -> Option<&ColumnDef> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// Index of the single primary-key column (fixture load guarantees
    /// exactly one).
    pub fn pk_index(&self) -> usize {
        self.columns
            .iter()
            .position(|c| c.primary_key)
            .expect("table has exactly one primary key")
    }

    pub fn auto_generated_index(&self) -> Option<usize> {
        self.columns.iter().position(|c| c.auto_generated)
    }

    pub fn singular_title(&self, language: Option<&str>, default_language: &str) -> String {
        localized(&self.singular_titles, language, default_language)
            .unwrap_or_else(|| self.name.clone())
    }

    pub fn plural_title(&self, language: Option<&str>, default_language: &str) -> String {
        localized(&self.plural_titles, language, default_language)
            .unwrap_or_else(|| self.name.clone())
    }
}

/// Fallback chain: requested language, then the default language, then
/// nothing (callers fall back to the bare identifier).
fn localized(titles: &Titles, language: Option<&str>, default_language: &str) -> Option<String> {
    language
        .and_then(|lang| titles.get(lang))
        .or_else(|| titles.get(default_language))
        .cloned()
}
