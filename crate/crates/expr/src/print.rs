//! Canonical filter printer. Output is fully parenthesized, so re-parsing
//! a printed filter yields an equal tree.

use crate::ast::{FilterAst, Literal};

fn print_literal(out: &mut String, literal: &Literal) {
    match literal {
        Literal::Integer(n) => out.push_str(&n.to_string()),
        Literal::Decimal(s) => out.push_str(s),
        Literal::Str(s) => {
            out.push('\'');
            out.push_str(&s.replace('\'', "''"));
            out.push('\'');
        }
        Literal::Boolean(true) => out.push_str("TRUE"),
        Literal::Boolean(false) => out.push_str("FALSE"),
        Literal::Null => out.push_str("NULL"),
    }
}

fn print_node(out: &mut String, ast: &FilterAst) {
    match ast {
        FilterAst::And(l, r) => {
            out.push('(');
            print_node(out, l);
            out.push_str(" AND ");
            print_node(out, r);
            out.push(')');
        }
        FilterAst::Or(l, r) => {
            out.push('(');
            print_node(out, l);
            out.push_str(" OR ");
            print_node(out, r);
            out.push(')');
        }
        FilterAst::Not(c) => {
            out.push_str("(NOT ");
            print_node(out, c);
            out.push(')');
        }
        FilterAst::Compare(field, op, literal) => {
            out.push_str(&field.to_string());
            out.push(' ');
            out.push_str(op.as_str());
            out.push(' ');
            print_literal(out, literal);
        }
        FilterAst::Like(field, pattern) => {
            out.push_str(&field.to_string());
            out.push_str(" LIKE ");
            print_literal(out, &Literal::Str(pattern.clone()));
        }
        FilterAst::IsNull(field, negated) => {
            out.push_str(&field.to_string());
            out.push_str(if *negated { " IS NOT NULL" } else { " IS NULL" });
        }
    }
}

pub fn print_filter(ast: &FilterAst) -> String {
    let mut out = String::new();
    print_node(&mut out, ast);
    out
}
