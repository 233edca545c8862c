//! Plain-text algebra files.
//!
//! ```text
//! # the three-element Łukasiewicz chain
//! hoop L3
//! elements 3
//! unit 2
//! bottom 0
//! mul
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! imp
//! 2 2 2
//! 1 2 2
//! 0 1 2
//! ```
//!
//! L-algebras use the header `lalg <name>` and carry only an `imp` table.

use std::fmt::Write as _;

use thiserror::Error;

use crate::hoop::{Elem, FiniteHoop, HoopError};
use crate::lalg::{FiniteLAlgebra, LAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] HoopError),
    #[error(transparent)]
    InvalidLAlgebra(#[from] LAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Hoop,
    LAlgebra,
}

/// The syntactic content of an algebra file, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraText {
    pub kind: AlgebraKind,
    pub name: String,
    pub order: usize,
    pub unit: Elem,
    pub bottom: Option<Elem>,
    pub mul: Option<Vec<Elem>>,
    pub imp: Vec<Elem>,
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |(n, _)| *n)
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let item = self
            .items
            .get(self.pos)
            .copied()
            .ok_or_else(|| ParseError::Syntax {
                line: self.last_line(),
                col: 1,
                message: format!("unexpected end of file, expected {what}"),
            })?;
        self.pos += 1;
        Ok(item)
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.items
            .get(self.pos)
            .and_then(|(_, l)| l.split_whitespace().next())
    }
}

fn col_of(line: &str, word: &str) -> usize {
    let base = line.as_ptr() as usize;
    word.as_ptr() as usize - base + 1
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

fn keyword_value<'a>(
    lines: &mut Lines<'a>,
    keyword: &str,
) -> Result<(usize, usize, &'a str), ParseError> {
    let (n, l) = lines.next(&format!("`{keyword}`"))?;
    let words: Vec<&str> = l.split_whitespace().collect();
    if words.first() != Some(&keyword) {
        return Err(syntax(
            n,
            col_of(l, words[0]),
            format!("expected `{keyword}`"),
        ));
    }
    match words.as_slice() {
        [_, v] => Ok((n, col_of(l, v), v)),
        _ => Err(syntax(n, 1, format!("`{keyword}` takes exactly one value"))),
    }
}

fn number(line: usize, col: usize, word: &str) -> Result<usize, ParseError> {
    word.parse()
        .map_err(|_| syntax(line, col, format!("`{word}` is not a non-negative integer")))
}

fn table(lines: &mut Lines<'_>, name: &str, order: usize) -> Result<Vec<Elem>, ParseError> {
    let (n, l) = lines.next(&format!("`{name}`"))?;
    if l.trim() != name {
        let w = l.split_whitespace().next().unwrap_or("");
        return Err(syntax(n, col_of(l, w), format!("expected `{name}`")));
    }
    let mut out = Vec::with_capacity(order * order);
    for _ in 0..order {
        let (n, l) = lines.next(&format!("a row of `{name}`"))?;
        let words: Vec<&str> = l.split_whitespace().collect();
        if words.len() != order {
            let col = words.get(order).map_or(1, |w| col_of(l, w));
            return Err(syntax(
                n,
                col,
                format!("row has {} entries, expected {order}", words.len()),
            ));
        }
        for w in words {
            let v = number(n, col_of(l, w), w)?;
            if v >= order {
                return Err(syntax(
                    n,
                    col_of(l, w),
                    format!("entry {v} is out of range"),
                ));
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// Parses an algebra file without validating the axioms.
pub fn parse_algebra_text(text: &str) -> Result<AlgebraText, ParseError> {
    let mut lines = Lines::new(text);
    let (n, l) = lines.next("a `hoop` or `lalg` header")?;
    let words: Vec<&str> = l.split_whitespace().collect();
    let kind = match words[0] {
        "hoop" => AlgebraKind::Hoop,
        "lalg" => AlgebraKind::LAlgebra,
        w => {
            return Err(syntax(
                n,
                col_of(l, w),
                "expected `hoop <name>` or `lalg <name>`",
            ))
        }
    };
    if words.len() != 2 {
        return Err(syntax(n, 1, "header takes exactly one name"));
    }
    let name = words[1].to_string();

    let (ln, col, v) = keyword_value(&mut lines, "elements")?;
    let order = number(ln, col, v)?;
    if order == 0 {
        return Err(syntax(ln, col, "an algebra needs at least one element"));
    }
    let (ln, col, v) = keyword_value(&mut lines, "unit")?;
    let unit = number(ln, col, v)?;
    if unit >= order {
        return Err(syntax(ln, col, format!("unit {unit} is out of range")));
    }
    let mut bottom = None;
    if lines.peek_keyword() == Some("bottom") {
        let (ln, col, v) = keyword_value(&mut lines, "bottom")?;
        let b = number(ln, col, v)?;
        if b >= order {
            return Err(syntax(ln, col, format!("bottom {b} is out of range")));
        }
        bottom = Some(b);
    }
    let mul = match kind {
        AlgebraKind::Hoop => Some(table(&mut lines, "mul", order)?),
        AlgebraKind::LAlgebra => None,
    };
    let imp = table(&mut lines, "imp", order)?;
    if let Ok((n, l)) = lines.next("") {
        let w = l.split_whitespace().next().unwrap_or("");
        return Err(syntax(n, col_of(l, w), "unexpected trailing content"));
    }
    Ok(AlgebraText {
        kind,
        name,
        order,
        unit,
        bottom,
        mul,
        imp,
    })
}

/// Parses and validates a hoop file, returning its name too.
pub fn parse_algebra_named(text: &str) -> Result<(String, FiniteHoop), ParseError> {
    let t = parse_algebra_text(text)?;
    match t.mul {
        Some(mul) => Ok((
            t.name,
            FiniteHoop::new(t.order, t.unit, mul, t.imp, t.bottom)?,
        )),
        None => Err(syntax(1, 1, "expected a `hoop` file, found `lalg`")),
    }
}

/// Parses and validates a hoop file.
pub fn parse_algebra(text: &str) -> Result<FiniteHoop, ParseError> {
    parse_algebra_named(text).map(|(_, h)| h)
}

/// Parses an L-algebra file. Hoop files are accepted and reduced to their
/// implication.
pub fn parse_lalgebra(text: &str) -> Result<FiniteLAlgebra, ParseError> {
    let t = parse_algebra_text(text)?;
    Ok(FiniteLAlgebra::new(t.order, t.unit, t.imp)?)
}

fn write_table(out: &mut String, name: &str, n: usize, table: &[Elem]) {
    out.push_str(name);
    out.push('\n');
    for row in table.chunks(n) {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Renders a hoop in the text format.
pub fn write_algebra(name: &str, h: &FiniteHoop) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hoop {name}");
    let _ = writeln!(out, "elements {}", h.order());
    let _ = writeln!(out, "unit {}", h.unit());
    if let Some(z) = h.bottom() {
        let _ = writeln!(out, "bottom {z}");
    }
    write_table(&mut out, "mul", h.order(), h.mul_table());
    write_table(&mut out, "imp", h.order(), h.imp_table());
    out
}

/// Renders an L-algebra in the text format.
pub fn write_lalgebra(name: &str, l: &FiniteLAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lalg {name}");
    let _ = writeln!(out, "elements {}", l.order());
    let _ = writeln!(out, "unit {}", l.unit());
    write_table(&mut out, "imp", l.order(), l.imp_table());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{lukasiewicz_chain, HoopAxiom};

    const L3: &str = "# three-element chain\nhoop L3\nelements 3\nunit 2\nbottom 0\nmul\n0 0 0\n0 0 1\n0 1 2\nimp\n2 2 2\n1 2 2\n0 1 2\n";

    #[test]
    fn terminal_file() {
        let h = parse_algebra("hoop T\nelements 1\nunit 0\nmul\n0\nimp\n0\n").unwrap();
        assert_eq!(h.order(), 1);
    }

    #[test]
    fn l3_file() {
        let (name, h) = parse_algebra_named(L3).unwrap();
        assert_eq!(name, "L3");
        assert_eq!(h, lukasiewicz_chain(3));
    }

    #[test]
    fn long_row_is_a_syntax_error() {
        let bad = L3.replace("0 0 1\n", "0 0 1 2\n");
        match parse_algebra(&bad).unwrap_err() {
            ParseError::Syntax {
                line: 8, col: 7, ..
            } => {}
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn bad_tokens() {
        let bad = L3.replace("unit 2", "unit two");
        assert!(matches!(
            parse_algebra(&bad),
            Err(ParseError::Syntax {
                line: 4,
                col: 6,
                ..
            })
        ));
        let bad = L3.replace("0 1 2\nimp", "0 1 9\nimp");
        assert!(matches!(
            parse_algebra(&bad),
            Err(ParseError::Syntax { line: 9, .. })
        ));
        assert!(matches!(parse_algebra(""), Err(ParseError::Syntax { .. })));
        let bad = format!("{L3}extra\n");
        assert!(matches!(
            parse_algebra(&bad),
            Err(ParseError::Syntax { line: 14, .. })
        ));
    }

    #[test]
    fn axiom_errors_pass_through() {
        let bad = L3.replace("0 0 1\n0 1 2\nimp", "0 1 1\n0 1 2\nimp");
        assert!(matches!(
            parse_algebra(&bad),
            Err(ParseError::Invalid(HoopError::AxiomViolation {
                axiom: HoopAxiom::Divisibility,
                ..
            }))
        ));
    }

    #[test]
    fn write_then_parse() {
        let h = lukasiewicz_chain(5);
        assert_eq!(parse_algebra(&write_algebra("L5", &h)).unwrap(), h);
    }
}
