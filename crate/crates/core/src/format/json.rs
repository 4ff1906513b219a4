//! A strict JSON subset: objects, arrays, strings and integers, with positions.
//!
//! No floats, booleans or null. Duplicate keys are rejected. The printer emits one
//! canonical layout: objects one member per line, arrays of scalars on one line,
//! arrays containing containers one element per line, two-space indentation.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// 1-based line and column of the first character of a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub fn error(self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Str(String),
    Array(Vec<Node>),
    /// Members in source order.
    Object(Vec<(String, Node)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub value: Value,
    pub pos: Pos,
}

impl Node {
    pub fn new(value: Value) -> Node {
        Node { value, pos: Pos::default() }
    }

    pub fn int(n: usize) -> Node {
        Node::new(Value::Int(n as i64))
    }

    pub fn str(s: impl Into<String>) -> Node {
        Node::new(Value::Str(s.into()))
    }

    pub fn array(items: Vec<Node>) -> Node {
        Node::new(Value::Array(items))
    }

    pub fn object(members: Vec<(&str, Node)>) -> Node {
        Node::new(Value::Object(members.into_iter().map(|(k, v)| (k.to_string(), v)).collect()))
    }

    fn kind(&self) -> &'static str {
        match self.value {
            Value::Int(_) => "an integer",
            Value::Str(_) => "a string",
            Value::Array(_) => "an array",
            Value::Object(_) => "an object",
        }
    }

    pub fn as_usize(&self) -> Result<usize> {
        match self.value {
            Value::Int(n) if n >= 0 => Ok(n as usize),
            Value::Int(n) => Err(self.pos.error(format!("expected a non-negative integer, found {n}"))),
            _ => Err(self.pos.error(format!("expected an integer, found {}", self.kind()))),
        }
    }

    pub fn as_str(&self) -> Result<&str> {
        match &self.value {
            Value::Str(s) => Ok(s),
            _ => Err(self.pos.error(format!("expected a string, found {}", self.kind()))),
        }
    }

    pub fn as_array(&self) -> Result<&[Node]> {
        match &self.value {
            Value::Array(a) => Ok(a),
            _ => Err(self.pos.error(format!("expected an array, found {}", self.kind()))),
        }
    }

    pub fn as_object(&self) -> Result<&[(String, Node)]> {
        match &self.value {
            Value::Object(m) => Ok(m),
            _ => Err(self.pos.error(format!("expected an object, found {}", self.kind()))),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
    line: usize,
    col: usize,
}

pub fn parse(text: &str) -> Result<Node> {
    let mut p = Parser { src: text.as_bytes(), at: 0, line: 1, col: 1 };
    p.skip_ws();
    let node = p.value(0)?;
    p.skip_ws();
    if p.at < p.src.len() {
        return Err(p.pos().error("trailing characters after the document"));
    }
    Ok(node)
}

const MAX_DEPTH: usize = 64;

impl Parser<'_> {
    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.at += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else if b & 0xC0 != 0x80 {
            // Columns count characters, not UTF-8 continuation bytes.
            self.col += 1;
        }
        Some(b)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.bump();
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(c) if c == b => Ok(()),
            Some(c) => Err(pos.error(format!("expected '{}', found '{}'", b as char, c as char))),
            None => Err(pos.error(format!("expected '{}', found end of input", b as char))),
        }
    }

    fn value(&mut self, depth: usize) -> Result<Node> {
        let pos = self.pos();
        if depth > MAX_DEPTH {
            return Err(pos.error("nesting too deep"));
        }
        let value = match self.peek() {
            Some(b'{') => self.object(depth)?,
            Some(b'[') => self.array(depth)?,
            Some(b'"') => Value::Str(self.string()?),
            Some(b'-' | b'0'..=b'9') => Value::Int(self.integer()?),
            Some(c) => return Err(pos.error(format!("unexpected character '{}'", c as char))),
            None => return Err(pos.error("unexpected end of input")),
        };
        Ok(Node { value, pos })
    }

    fn object(&mut self, depth: usize) -> Result<Value> {
        self.expect(b'{')?;
        let mut members: Vec<(String, Node)> = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'}') {
            self.bump();
            return Ok(Value::Object(members));
        }
        loop {
            self.skip_ws();
            let kpos = self.pos();
            if self.peek() != Some(b'"') {
                return Err(kpos.error("expected a string key"));
            }
            let key = self.string()?;
            if members.iter().any(|(k, _)| *k == key) {
                return Err(kpos.error(format!("duplicate key {key:?}")));
            }
            self.skip_ws();
            self.expect(b':')?;
            self.skip_ws();
            let v = self.value(depth + 1)?;
            members.push((key, v));
            self.skip_ws();
            let pos = self.pos();
            match self.bump() {
                Some(b',') => continue,
                Some(b'}') => return Ok(Value::Object(members)),
                _ => return Err(pos.error("expected ',' or '}'")),
            }
        }
    }

    fn array(&mut self, depth: usize) -> Result<Value> {
        self.expect(b'[')?;
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.bump();
            return Ok(Value::Array(items));
        }
        loop {
            self.skip_ws();
            items.push(self.value(depth + 1)?);
            self.skip_ws();
            let pos = self.pos();
            match self.bump() {
                Some(b',') => continue,
                Some(b']') => return Ok(Value::Array(items)),
                _ => return Err(pos.error("expected ',' or ']'")),
            }
        }
    }

    fn string(&mut self) -> Result<String> {
        self.expect(b'"')?;
        let mut out = Vec::new();
        loop {
            let pos = self.pos();
            match self.bump() {
                None => return Err(pos.error("unterminated string")),
                Some(b'"') => break,
                Some(b'\\') => {
                    let c = match self.bump() {
                        Some(b'"') => '"',
                        Some(b'\\') => '\\',
                        Some(b'/') => '/',
                        Some(b'n') => '\n',
                        Some(b't') => '\t',
                        Some(b'r') => '\r',
                        Some(b'u') => {
                            let mut code = 0u32;
                            for _ in 0..4 {
                                let d = self.bump().and_then(|b| (b as char).to_digit(16));
                                code = code * 16 + d.ok_or_else(|| pos.error("bad \\u escape"))?;
                            }
                            char::from_u32(code).ok_or_else(|| pos.error("\\u escape is not a scalar value"))?
                        }
                        _ => return Err(pos.error("unknown escape")),
                    };
                    let mut buf = [0u8; 4];
                    out.extend_from_slice(c.encode_utf8(&mut buf).as_bytes());
                }
                Some(b) if b < 0x20 => return Err(pos.error("control character in string")),
                Some(b) => out.push(b),
            }
        }
        String::from_utf8(out).map_err(|_| self.pos().error("string is not valid UTF-8"))
    }

    fn integer(&mut self) -> Result<i64> {
        let pos = self.pos();
        let start = self.at;
        if self.peek() == Some(b'-') {
            self.bump();
        }
        let digits = self.at;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        let text = std::str::from_utf8(&self.src[start..self.at]).expect("ascii");
        if self.at == digits {
            return Err(pos.error("expected digits"));
        }
        if self.src[digits] == b'0' && self.at - digits > 1 {
            return Err(pos.error(format!("leading zero in {text}")));
        }
        if matches!(self.peek(), Some(b'.' | b'e' | b'E')) {
            return Err(pos.error("only integers are allowed"));
        }
        text.parse().map_err(|_| pos.error(format!("integer out of range: {text}")))
    }
}

/// Canonical text, ending with a newline.
pub fn emit(node: &Node) -> String {
    let mut out = String::new();
    write_node(&mut out, node, 0);
    out.push('\n');
    out
}

fn is_flat(items: &[Node]) -> bool {
    items.iter().all(|n| matches!(n.value, Value::Int(_) | Value::Str(_)))
}

fn write_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_node(out: &mut String, node: &Node, level: usize) {
    match &node.value {
        Value::Int(n) => {
            let _ = write!(out, "{n}");
        }
        Value::Str(s) => write_string(out, s),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_node(out, item, level);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                indent(out, level + 1);
                write_node(out, item, level + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            indent(out, level);
            out.push(']');
        }
        Value::Object(members) if members.is_empty() => out.push_str("{}"),
        Value::Object(members) => {
            out.push_str("{\n");
            for (i, (k, v)) in members.iter().enumerate() {
                indent(out, level + 1);
                write_string(out, k);
                out.push_str(": ");
                write_node(out, v, level + 1);
                out.push_str(if i + 1 < members.len() { ",\n" } else { "\n" });
            }
            indent(out, level);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_reported() {
        let err = parse("{\n  \"a\": 1,\n  \"a\": 2\n}").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, col: 3, msg: "duplicate key \"a\"".into() });
        let err = parse("[1, 2.5]").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, col: 5, .. }), "{err}");
        assert!(parse("[01]").is_err());
        assert!(parse("true").is_err());
        assert!(parse("[1] x").is_err());
    }

    #[test]
    fn canonical_layout_round_trips() {
        let text = "{\n  \"k\": \"v\\n\",\n  \"xs\": [\n    [0, 1, \"1/2\"],\n    []\n  ],\n  \"o\": {}\n}\n";
        let node = parse(text).unwrap();
        assert_eq!(emit(&node), text);
    }
}
