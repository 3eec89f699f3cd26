//! Output rendering. The same TableMessage renders as an aligned text
//! table (nulls shown as `∅`, joined columns marked), RFC-4180 CSV (nulls
//! as empty fields) or the verbatim wire JSON.

use rsp_wire::{encode, TableHeader, TableMessage};

use crate::args::Format;

/// Null marker in the text-table format; CSV uses an empty field and JSON
/// uses `null`, so no format loses the null / empty-string distinction
/// except CSV, which has no way to spell it.
pub const NULL_MARK: &str = "∅";

pub fn render_table_message(table: &TableMessage, format: Format) -> String {
    match format {
        Format::Json => encode(table).expect("decoded message re-encodes"),
        Format::Csv => render_csv(table),
        Format::Table => render_text(table),
    }
}

fn render_csv(table: &TableMessage) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(table.fields.iter().map(|f| f.name.as_str()))
        .expect("csv header");
    for row in &table.items {
        writer
            .write_record(row.iter().map(|cell| cell.as_deref().unwrap_or("")))
            .expect("csv row");
    }
    String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is UTF-8")
}

fn render_text(table: &TableMessage) -> String {
    let headings: Vec<String> = table
        .fields
        .iter()
        .map(|f| {
            if f.is_joined {
                format!("{} (joined)", f.title)
            } else {
                f.title.clone()
            }
        })
        .collect();
    let mut widths: Vec<usize> = headings.iter().map(|h| h.chars().count()).collect();
    for row in &table.items {
        for (i, cell) in row.iter().enumerate() {
            let text = cell.as_deref().unwrap_or(NULL_MARK);
            widths[i] = widths[i].max(text.chars().count());
        }
    }

    let mut out = String::new();
    out.push_str(&format_row(&headings, &widths));
    if !table.items.is_empty() {
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&format_row(&rule, &widths));
        for row in &table.items {
            let cells: Vec<String> = row
                .iter()
                .map(|cell| cell.clone().unwrap_or_else(|| NULL_MARK.to_string()))
                .collect();
            out.push_str(&format_row(&cells, &widths));
        }
    }
    out
}

fn format_row<S: AsRef<str>>(cells: &[S], widths: &[usize]) -> String {
    let mut line = String::new();
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            line.push_str("  ");
        }
        let text = cell.as_ref();
        line.push_str(text);
        if i + 1 < cells.len() {
            let pad = widths[i].saturating_sub(text.chars().count());
            line.extend(std::iter::repeat(' ').take(pad));
        }
    }
    line.push('\n');
    line
}

pub fn render_headers(headers: &[TableHeader]) -> String {
    let mut out = String::new();
    let name_width = headers
        .iter()
        .map(|h| h.table_name.chars().count())
        .max()
        .unwrap_or(0)
        .max("TABLE".len());
    out.push_str(&format!("{:name_width$}  TITLE\n", "TABLE"));
    for header in headers {
        out.push_str(&format!(
            "{:name_width$}  {} / {}\n",
            header.table_name, header.singular_title, header.plural_title
        ));
    }
    out
}
