use crate::ast::*;
use crate::lexer::{lex, Spanned, Tok};
use crate::ExprError;

/// Reserved words, matched case-insensitively; not usable as identifiers.
const KEYWORDS: &[&str] = &[
    "AND", "OR", "NOT", "LIKE", "IS", "NULL", "ASC", "DESC", "TRUE", "FALSE",
];

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ExprError> {
        Ok(Parser { toks: lex(text)?, at: 0 })
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.at]
    }

    fn next(&mut self) -> &Spanned {
        let i = self.at;
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        &self.toks[i]
    }

    fn error(&self, expected: &str) -> ExprError {
        let s = self.peek();
        ExprError::BadExpression {
            position: s.pos,
            message: format!("expected {expected}, found {}", s.tok.describe()),
        }
    }

    /// Returns the uppercased keyword if the current token is that reserved
    /// word.
    fn keyword(&self) -> Option<&'static str> {
        match &self.peek().tok {
            Tok::Ident(s) => KEYWORDS
                .iter()
                .find(|k| k.eq_ignore_ascii_case(s))
                .copied(),
            _ => None,
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.keyword() == Some(kw) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ExprError> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn ident(&mut self, expected: &str) -> Result<String, ExprError> {
        if self.keyword().is_some() {
            return Err(self.error(expected));
        }
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn field_ref(&mut self) -> Result<FieldRef, ExprError> {
        let first = self.ident("a field reference")?;
        if self.peek().tok == Tok::Dot {
            self.next();
            let column = self.ident("a column name after '.'")?;
            Ok(FieldRef {
                table_qualifier: Some(first),
                column_name: column,
            })
        } else {
            Ok(FieldRef {
                table_qualifier: None,
                column_name: first,
            })
        }
    }

    fn or_expr(&mut self) -> Result<FilterAst, ExprError> {
        let mut left = self.and_expr()?;
        while self.eat_keyword("OR") {
            let right = self.and_expr()?;
            left = FilterAst::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and_expr(&mut self) -> Result<FilterAst, ExprError> {
        let mut left = self.not_expr()?;
        while self.eat_keyword("AND") {
            let right = self.not_expr()?;
            left = FilterAst::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn not_expr(&mut self) -> Result<FilterAst, ExprError> {
        if self.eat_keyword("NOT") {
            Ok(FilterAst::Not(Box::new(self.not_expr()?)))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<FilterAst, ExprError> {
        if self.peek().tok == Tok::LParen {
            self.next();
            let inner = self.or_expr()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(inner);
        }
        self.comparison()
    }

    fn comparison(&mut self) -> Result<FilterAst, ExprError> {
        let field = self.field_ref()?;
        if self.eat_keyword("LIKE") {
            let pos = self.peek().pos;
            return match &self.next().tok {
                Tok::Str(s) => Ok(FilterAst::Like(field, s.clone())),
                tok => Err(ExprError::BadExpression {
                    position: pos,
                    message: format!(
                        "expected a string pattern after LIKE, found {}",
                        tok.describe()
                    ),
                }),
            };
        }
        if self.eat_keyword("IS") {
            let negated = self.eat_keyword("NOT");
            if !self.eat_keyword("NULL") {
                return Err(self.error("NULL"));
            }
            return Ok(FilterAst::IsNull(field, negated));
        }
        let op = match self.peek().tok {
            Tok::Eq => CompareOp::Eq,
            Tok::Ne => CompareOp::Ne,
            Tok::Lt => CompareOp::Lt,
            Tok::Le => CompareOp::Le,
            Tok::Gt => CompareOp::Gt,
            Tok::Ge => CompareOp::Ge,
            _ => return Err(self.error("a comparison operator, LIKE or IS")),
        };
        self.next();
        let literal = self.literal()?;
        Ok(FilterAst::Compare(field, op, literal))
    }

    fn literal(&mut self) -> Result<Literal, ExprError> {
        if let Some(kw) = self.keyword() {
            match kw {
                "TRUE" => {
                    self.next();
                    return Ok(Literal::Boolean(true));
                }
                "FALSE" => {
                    self.next();
                    return Ok(Literal::Boolean(false));
                }
                "NULL" => {
                    let pos = self.peek().pos;
                    return Err(ExprError::BadExpression {
                        position: pos,
                        message: "comparisons with NULL must use IS [NOT] NULL".into(),
                    });
                }
                _ => {}
            }
        }
        let pos = self.peek().pos;
        match &self.next().tok {
            Tok::Int(n) => Ok(Literal::Integer(*n)),
            Tok::Dec(s) => Ok(Literal::Decimal(s.clone())),
            Tok::Str(s) => Ok(Literal::Str(s.clone())),
            tok => Err(ExprError::BadExpression {
                position: pos,
                message: format!("expected a literal, found {}", tok.describe()),
            }),
        }
    }

    fn end(&self) -> Result<(), ExprError> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.error("end of expression"))
        }
    }
}

/// Parses a filter expression. The caller decides what an empty string
/// means; this parser requires an expression.
pub fn parse_filter(text: &str) -> Result<FilterAst, ExprError> {
    let mut p = Parser::new(text)?;
    let ast = p.or_expr()?;
    p.end()?;
    Ok(ast)
}

/// Parses an order expression. An empty or blank string parses to an empty
/// spec, meaning provider-default order.
pub fn parse_order(text: &str) -> Result<OrderSpec, ExprError> {
    let mut p = Parser::new(text)?;
    if p.peek().tok == Tok::End {
        return Ok(OrderSpec::default());
    }
    let mut items = Vec::new();
    loop {
        let field = p.field_ref()?;
        let direction = if p.eat_keyword("DESC") {
            Direction::Desc
        } else {
            p.eat_keyword("ASC");
            Direction::Asc
        };
        if items.iter().any(|(f, _)| *f == field) {
            return Err(ExprError::BadExpression {
                position: p.peek().pos,
                message: format!("duplicate field {field} in order expression"),
            });
        }
        items.push((field, direction));
        if p.peek().tok != Tok::Comma {
            break;
        }
        p.next();
    }
    p.end()?;
    Ok(OrderSpec { items })
}
