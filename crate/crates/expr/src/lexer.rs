use crate::ExprError;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Dec(String),
    Str(String),
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    LParen,
    RParen,
    Comma,
    Dot,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Dec(s) => format!("decimal {s}"),
            Tok::Str(_) => "string literal".into(),
            Tok::Eq => "'='".into(),
            Tok::Ne => "'<>'".into(),
            Tok::Lt => "'<'".into(),
            Tok::Le => "'<='".into(),
            Tok::Gt => "'>'".into(),
            Tok::Ge => "'>='".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Dot => "'.'".into(),
            Tok::End => "end of expression".into(),
        }
    }
}

pub struct Spanned {
    pub tok: Tok,
    pub pos: usize,
}

fn bad(pos: usize, message: impl Into<String>) -> ExprError {
    ExprError::BadExpression {
        position: pos,
        message: message.into(),
    }
}

pub fn lex(text: &str) -> Result<Vec<Spanned>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'(' => {
                out.push(Spanned { tok: Tok::LParen, pos: start });
                i += 1;
            }
            b')' => {
                out.push(Spanned { tok: Tok::RParen, pos: start });
                i += 1;
            }
            b',' => {
                out.push(Spanned { tok: Tok::Comma, pos: start });
                i += 1;
            }
            b'.' => {
                out.push(Spanned { tok: Tok::Dot, pos: start });
                i += 1;
            }
            b'=' => {
                out.push(Spanned { tok: Tok::Eq, pos: start });
                i += 1;
            }
            b'<' => {
                i += 1;
                let tok = match bytes.get(i) {
                    Some(b'>') => {
                        i += 1;
                        Tok::Ne
                    }
                    Some(b'=') => {
                        i += 1;
                        Tok::Le
                    }
                    _ => Tok::Lt,
                };
                out.push(Spanned { tok, pos: start });
            }
            b'>' => {
                i += 1;
                let tok = match bytes.get(i) {
                    Some(b'=') => {
                        i += 1;
                        Tok::Ge
                    }
                    _ => Tok::Gt,
                };
                out.push(Spanned { tok, pos: start });
            }
            b'\'' => {
                i += 1;
                let mut value = String::new();
                loop {
                    match bytes.get(i) {
                        None => return Err(bad(start, "unterminated string literal")),
                        Some(b'\'') => {
                            if bytes.get(i + 1) == Some(&b'\'') {
                                value.push('\'');
                                i += 2;
                            } else {
                                i += 1;
                                break;
                            }
                        }
                        Some(_) => {
                            // Strings are UTF-8; copy whole chars.
                            let ch = text[i..].chars().next().unwrap();
                            value.push(ch);
                            i += ch.len_utf8();
                        }
                    }
                }
                out.push(Spanned { tok: Tok::Str(value), pos: start });
            }
            b'-' | b'0'..=b'9' => {
                i += 1;
                if b == b'-' && !bytes.get(i).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(bad(start, "expected digits after '-'"));
                }
                while bytes.get(i).is_some_and(|c| c.is_ascii_digit()) {
                    i += 1;
                }
                let mut is_decimal = false;
                if bytes.get(i) == Some(&b'.') && bytes.get(i + 1).is_some_and(|c| c.is_ascii_digit()) {
                    is_decimal = true;
                    i += 1;
                    while bytes.get(i).is_some_and(|c| c.is_ascii_digit()) {
                        i += 1;
                    }
                }
                let raw = &text[start..i];
                let tok = if is_decimal {
                    Tok::Dec(raw.to_owned())
                } else {
                    Tok::Int(
                        raw.parse::<i64>()
                            .map_err(|_| bad(start, "integer literal out of range"))?,
                    )
                };
                out.push(Spanned { tok, pos: start });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                i += 1;
                while bytes
                    .get(i)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(text[start..i].to_owned()),
                    pos: start,
                });
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(bad(start, format!("unexpected character {ch:?}")));
            }
        }
    }
    out.push(Spanned { tok: Tok::End, pos: text.len() });
    Ok(out)
}
