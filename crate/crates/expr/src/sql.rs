//! Parameterized-SQL emission for external-database adapters. Literal
//! values travel only in the parameter list; the template text contains
//! quoted identifiers and positional `?` placeholders, nothing else from
//! the input.
//!
//! Each comparison is wrapped with `IS NOT NULL` so that standard SQL
//! three-valued logic collapses to the protocol's null-is-false semantics.

use crate::ast::Literal;
use crate::bind::BoundFilter;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqlFragment {
    pub template: String,
    pub params: Vec<Literal>,
}

fn quote_ident(name: &str) -> String {
    format!("\"{}\"", name.replace('"', "\"\""))
}

fn emit(out: &mut String, params: &mut Vec<Literal>, filter: &BoundFilter) {
    match filter {
        BoundFilter::And(l, r) => {
            out.push('(');
            emit(out, params, l);
            out.push_str(" AND ");
            emit(out, params, r);
            out.push(')');
        }
        BoundFilter::Or(l, r) => {
            out.push('(');
            emit(out, params, l);
            out.push_str(" OR ");
            emit(out, params, r);
            out.push(')');
        }
        BoundFilter::Not(c) => {
            out.push_str("(NOT ");
            emit(out, params, c);
            out.push(')');
        }
        BoundFilter::Compare(column, op, literal) => {
            let ident = quote_ident(&column.name);
            out.push('(');
            out.push_str(&ident);
            out.push(' ');
            out.push_str(op.as_str());
            out.push_str(" ? AND ");
            out.push_str(&ident);
            out.push_str(" IS NOT NULL)");
            params.push(literal.clone());
        }
        BoundFilter::Like(column, pattern) => {
            let ident = quote_ident(&column.name);
            out.push('(');
            out.push_str(&ident);
            out.push_str(" LIKE ? AND ");
            out.push_str(&ident);
            out.push_str(" IS NOT NULL)");
            params.push(Literal::Str(pattern.clone()));
        }
        BoundFilter::IsNull(column, negated) => {
            out.push_str(&quote_ident(&column.name));
            out.push_str(if *negated { " IS NOT NULL" } else { " IS NULL" });
        }
    }
}

pub fn to_parameterized_sql(filter: &BoundFilter) -> SqlFragment {
    let mut template = String::new();
    let mut params = Vec::new();
    emit(&mut template, &mut params, filter);
    debug_assert_eq!(
        template.matches('?').count(),
        params.len(),
        "placeholder/parameter count mismatch"
    );
    SqlFragment { template, params }
}
