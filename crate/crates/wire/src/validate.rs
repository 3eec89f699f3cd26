//! Message-level invariant checks, separate from the structural checks the
//! codec performs. Each violation names the offending attribute.

use std::collections::HashSet;

use crate::types::*;

pub trait Validate {
    /// Appends violation descriptions for this value to `out`.
    fn check(&self, out: &mut Vec<String>);
}

/// Returns every invariant violation in `message`; empty means valid.
pub fn validate_message<M: Validate>(message: &M) -> Vec<String> {
    let mut out = Vec::new();
    message.check(&mut out);
    out
}

fn require_non_empty(out: &mut Vec<String>, attr: &str, value: &str) {
    if value.is_empty() {
        out.push(format!("{attr} must be non-empty"));
    }
}

impl Validate for TableHeader {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "TableName", &self.table_name);
        require_non_empty(out, "SingularTitle", &self.singular_title);
        require_non_empty(out, "PluralTitle", &self.plural_title);
    }
}

/// `ID` is `<table>.<name>`, optionally suffixed `#<n>` when a joined field
/// would otherwise collide.
fn id_matches(field: &Field) -> bool {
    let base = format!("{}.{}", field.table, field.name);
    match field.id.strip_prefix(&base) {
        Some("") => true,
        Some(rest) => {
            let digits = rest.strip_prefix('#');
            matches!(digits, Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        }
        None => false,
    }
}

impl Validate for Field {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "Name", &self.name);
        require_non_empty(out, "Table", &self.table);
        if !id_matches(self) {
            out.push(format!(
                "ID {:?} does not match Table.Name ({}.{})",
                self.id, self.table, self.name
            ));
        }
        if self.is_foreign_key {
            if self.referenced_field.is_none() {
                out.push("ReferencedField required for a foreign key".into());
            }
            if self.referenced_table.is_none() {
                out.push("ReferencedTable required for a foreign key".into());
            }
        } else {
            if self.referenced_field.is_some() {
                out.push("ReferencedField only allowed on a foreign key".into());
            }
            if self.referenced_table.is_some() {
                out.push("ReferencedTable only allowed on a foreign key".into());
            }
        }
        if self.max_length.is_some() && self.data_type != "varchar" {
            out.push(format!(
                "MaxLength only allowed for character data types, not {}",
                self.data_type
            ));
        }
        if self.is_auto_generated && self.is_editable {
            out.push("IsEditable must be false for an auto-generated column".into());
        }
        if self.is_display_field && !self.is_joined {
            out.push("IsDisplayField requires IsJoined".into());
        }
    }
}

impl Validate for Reference {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "RedField", &self.red_field);
        require_non_empty(out, "RedTable", &self.red_table);
        require_non_empty(out, "RingField", &self.ring_field);
        require_non_empty(out, "RingFieldTitle", &self.ring_field_title);
        require_non_empty(out, "RingTable", &self.ring_table);
        require_non_empty(out, "RingTablePluralTitle", &self.ring_table_plural_title);
        if self.red_table == self.ring_table && self.red_field == self.ring_field {
            out.push("RingTable/RingField must differ from RedTable/RedField".into());
        }
    }
}

impl Validate for TableMessage {
    fn check(&self, out: &mut Vec<String>) {
        self.header.check(out);
        let mut ids = HashSet::new();
        for field in &self.fields {
            field.check(out);
            if !ids.insert(field.id.as_str()) {
                out.push(format!("Fields contains duplicate ID {:?}", field.id));
            }
        }
        for reference in &self.references {
            reference.check(out);
        }
        for (i, row) in self.items.iter().enumerate() {
            if row.len() != self.fields.len() {
                out.push(format!(
                    "Items row {} has {} cells, expected {}",
                    i,
                    row.len(),
                    self.fields.len()
                ));
            }
        }
        let mut seen = HashSet::new();
        let mut prev = i64::MIN;
        for &action in &self.actions {
            if !(1..=4).contains(&action) {
                out.push(format!("Actions contains invalid code {action}"));
            }
            if !seen.insert(action) {
                out.push(format!("Actions contains duplicate code {action}"));
            }
            if action < prev {
                out.push("Actions must be ascending".into());
            }
            prev = action;
        }
    }
}

impl Validate for ReadTableHeadersRequest {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "UserName", &self.user_name);
        check_language(out, self.language.as_deref());
    }
}

fn check_language(out: &mut Vec<String>, language: Option<&str>) {
    if let Some(lang) = language {
        if lang.len() != 2 || !lang.bytes().all(|b| b.is_ascii_lowercase()) {
            out.push(format!("Language {lang:?} is not a two-letter lowercase code"));
        }
    }
}

impl Validate for ReadTableHeadersResponse {
    fn check(&self, out: &mut Vec<String>) {
        let mut names = HashSet::new();
        for header in &self.table_headers {
            header.check(out);
            if !names.insert(header.table_name.as_str()) {
                out.push(format!(
                    "TableHeaders contains duplicate TableName {:?}",
                    header.table_name
                ));
            }
        }
    }
}

impl Validate for ReadTableRequest {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "TableName", &self.table_name);
        check_language(out, self.language.as_deref());
    }
}

impl Validate for ReadTableResponse {
    fn check(&self, out: &mut Vec<String>) {
        self.table.check(out);
    }
}

impl Validate for SubmitRequest {
    fn check(&self, out: &mut Vec<String>) {
        require_non_empty(out, "TableName", &self.table_name);
        if !(1..=3).contains(&self.operation) {
            out.push(format!("Operation {} not in {{1,2,3}}", self.operation));
        }
        for field in &self.fields {
            field.check(out);
        }
        if self.data.len() != self.fields.len() {
            out.push(format!(
                "Data has {} values, expected {} to match Fields",
                self.data.len(),
                self.fields.len()
            ));
        }
    }
}

impl Validate for SubmitResponse {
    fn check(&self, _out: &mut Vec<String>) {}
}

impl Validate for ErrorEnvelope {
    fn check(&self, _out: &mut Vec<String>) {}
}
