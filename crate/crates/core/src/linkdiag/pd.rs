//! Text form: `PD[X(a,b,c,d), ...]` followed by one `O` per free loop.

use super::{DiagramError, LinkDiagram};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> DiagramError {
        DiagramError::Syntax { pos: self.base + self.pos, msg: msg.into() }
    }

    fn expect(&mut self, ch: u8) -> Result<(), DiagramError> {
        match self.peek() {
            Some(c) if c == ch => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{}`, found `{}`", ch as char, c as char))),
            None => Err(self.err(format!("expected `{}`, found end of input", ch as char))),
        }
    }

    fn number(&mut self) -> Result<u32, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected edge id"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| self.err("edge id out of range"))
    }
}

/// Parses a single PD expression.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let cleaned = strip_comments(text);
    parse_at(&cleaned, 0)
}

fn parse_at(text: &str, base: usize) -> Result<LinkDiagram, DiagramError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0, base };
    cur.expect(b'P')?;
    cur.expect(b'D')?;
    cur.expect(b'[')?;
    let mut crossings = Vec::new();
    let mut loops = 0;
    if cur.peek() == Some(b']') {
        cur.pos += 1;
    } else {
        loop {
            match cur.peek() {
                Some(b'X') => {
                    cur.pos += 1;
                    let close = match cur.peek() {
                        Some(b'(') => b')',
                        Some(b'[') => b']',
                        _ => return Err(cur.err("expected `(` after X")),
                    };
                    cur.pos += 1;
                    let mut x = [0u32; 4];
                    for (i, slot) in x.iter_mut().enumerate() {
                        if i > 0 {
                            cur.expect(b',')?;
                        }
                        *slot = cur.number()?;
                    }
                    cur.expect(close)?;
                    crossings.push(x);
                }
                Some(b'O') => {
                    cur.pos += 1;
                    loops += 1;
                }
                Some(c) => return Err(cur.err(format!("unexpected `{}`", c as char))),
                None => return Err(cur.err("unterminated PD list")),
            }
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b']') => {
                    cur.pos += 1;
                    break;
                }
                Some(c) => return Err(cur.err(format!("unexpected `{}`", c as char))),
                None => return Err(cur.err("unterminated PD list")),
            }
        }
    }
    loop {
        match cur.peek() {
            Some(b'O') => {
                cur.pos += 1;
                loops += 1;
            }
            Some(c) => return Err(cur.err(format!("trailing `{}`", c as char))),
            None => break,
        }
    }
    LinkDiagram::new(crossings, loops)
}

/// Parses `name: PD[...]` lines; a bare PD expression gets an empty name.
pub fn parse_pd_blocks(text: &str) -> Result<Vec<(String, LinkDiagram)>, DiagramError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if !trimmed.is_empty() {
            let (name, expr, at) = match trimmed.find(':') {
                Some(i) => (trimmed[..i].trim().to_string(), &trimmed[i + 1..], i + 1),
                None => (String::new(), trimmed, 0),
            };
            let lead = body.len() - body.trim_start().len();
            out.push((name, parse_at(expr, offset + lead + at)?));
        }
        offset += line.len();
    }
    Ok(out)
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn format_pd(d: &LinkDiagram) -> String {
    let body: Vec<String> = d
        .crossings()
        .iter()
        .map(|[a, b, c, e]| format!("X({a},{b},{c},{e})"))
        .collect();
    let mut s = format!("PD[{}]", body.join(", "));
    for _ in 0..d.free_loops() {
        s.push_str(" O");
    }
    s
}
