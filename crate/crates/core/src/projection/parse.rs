use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use thiserror::Error;

use super::{ClauseNode, EspNode, EventNode};
use crate::lexicon::{Animacy, Aspect, EventKind};
use crate::types::CertaintyDegree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseErrorKind {
    Expected { expected: &'static str, found: String },
    DuplicateAttribute(&'static str),
    UnknownAttribute(String),
    MissingAspect,
}

impl fmt::Display for ClauseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClauseErrorKind::Expected { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
            ClauseErrorKind::DuplicateAttribute(name) => write!(f, "duplicate {name} attribute"),
            ClauseErrorKind::UnknownAttribute(value) => {
                write!(f, "unknown attribute value {value:?}")
            }
            ClauseErrorKind::MissingAspect => f.write_str("missing aspect attribute (pfv or imp)"),
        }
    }
}

/// Syntax error; `position` is a character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ClauseParseError {
    pub position: usize,
    pub kind: ClauseErrorKind,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

struct Parser<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    /// characters consumed so far
    offset: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            chars: text.char_indices().peekable(),
            offset: 0,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next().map(|(_, c)| c);
        if c.is_some() {
            self.offset += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        }
    }

    fn error(&mut self, expected: &'static str) -> ClauseParseError {
        ClauseParseError {
            position: self.offset,
            kind: ClauseErrorKind::Expected {
                expected,
                found: self.found(),
            },
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ClauseParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn ident(&mut self, expected: &'static str) -> Result<(usize, &'a str), ClauseParseError> {
        self.skip_ws();
        let start_offset = self.offset;
        let Some(&(start, _)) = self.chars.peek() else {
            return Err(self.error(expected));
        };
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if !is_ident_char(c) {
                break;
            }
            end = i + c.len_utf8();
            self.bump();
        }
        if end == start {
            return Err(self.error(expected));
        }
        Ok((start_offset, &self.text[start..end]))
    }

    fn expr(&mut self) -> Result<ClauseNode, ClauseParseError> {
        let (_, word) = self.ident("a predicate or event")?;
        self.skip_ws();
        let next = self.peek();
        if (word == "E" || word == "NP") && next == Some('(') {
            self.bump();
            let (_, label) = self.ident("an event label")?;
            self.expect(')', "')'")?;
            let kind = if word == "E" {
                EventKind::Clause
            } else {
                EventKind::EventNp
            };
            return Ok(ClauseNode::Event(EventNode {
                label: label.to_string(),
                kind,
            }));
        }
        let (negated, lemma) = if word == "neg" && next.is_some_and(is_ident_char) {
            (true, self.ident("a predicate lemma")?.1)
        } else {
            (false, word)
        };
        self.expect(':', "':' after the lemma")?;
        let (_, reading_id) = self.ident("a reading id")?;
        self.expect('[', "'['")?;
        let attrs = self.attrs()?;
        self.expect('(', "'('")?;
        let child = self.expr()?;
        self.expect(')', "')'")?;
        Ok(ClauseNode::Esp(EspNode {
            lemma: lemma.to_string(),
            reading_id: reading_id.to_string(),
            negated,
            modality: attrs.modality.unwrap_or(CertaintyDegree::CT),
            aspect: attrs.aspect.expect("checked in attrs"),
            animacy: attrs.animacy.unwrap_or(Animacy::Unknown),
            child: Box::new(child),
        }))
    }

    fn attrs(&mut self) -> Result<Attrs, ClauseParseError> {
        let mut attrs = Attrs::default();
        loop {
            let (position, name) = self.ident("an attribute")?;
            let duplicate = |name| ClauseParseError {
                position,
                kind: ClauseErrorKind::DuplicateAttribute(name),
            };
            match name {
                "pfv" | "imp" => {
                    if attrs.aspect.is_some() {
                        return Err(duplicate("aspect"));
                    }
                    attrs.aspect = Some(if name == "pfv" { Aspect::Pfv } else { Aspect::Imp });
                }
                "anim" | "inanim" => {
                    if attrs.animacy.is_some() {
                        return Err(duplicate("animacy"));
                    }
                    attrs.animacy = Some(if name == "anim" {
                        Animacy::Anim
                    } else {
                        Animacy::Inanim
                    });
                }
                "mod" => {
                    if attrs.modality.is_some() {
                        return Err(duplicate("mod"));
                    }
                    self.expect('=', "'=' after mod")?;
                    let (value_position, value) = self.ident("a modality (ct, pr or ps)")?;
                    attrs.modality = Some(match value {
                        "ct" => CertaintyDegree::CT,
                        "pr" => CertaintyDegree::PR,
                        "ps" => CertaintyDegree::PS,
                        other => {
                            return Err(ClauseParseError {
                                position: value_position,
                                kind: ClauseErrorKind::UnknownAttribute(format!("mod={other}")),
                            })
                        }
                    });
                }
                other => {
                    return Err(ClauseParseError {
                        position,
                        kind: ClauseErrorKind::UnknownAttribute(other.to_string()),
                    })
                }
            }
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(']') => {
                    if attrs.aspect.is_none() {
                        return Err(ClauseParseError {
                            position: self.offset,
                            kind: ClauseErrorKind::MissingAspect,
                        });
                    }
                    self.bump();
                    return Ok(attrs);
                }
                _ => return Err(self.error("',' or ']'")),
            }
        }
    }
}

#[derive(Default)]
struct Attrs {
    aspect: Option<Aspect>,
    animacy: Option<Animacy>,
    modality: Option<CertaintyDegree>,
}

/// Parses a clause-embedding expression such as
/// `neg échouer:07[pfv,anim](E(persuader))`.
pub fn parse_clause(text: &str) -> Result<ClauseNode, ClauseParseError> {
    let mut parser = Parser::new(text);
    let node = parser.expr()?;
    parser.skip_ws();
    if parser.peek().is_some() {
        return Err(parser.error("end of input"));
    }
    Ok(node)
}
