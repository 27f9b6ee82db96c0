//! Text formats for ideals and complexes.
//!
//! Ideal files start with `vars x1 x2 … xn`; every further line holds one generator written
//! as factors joined by `*` with powers by `^` (`x1^2*x3`). Complex files start with
//! `vertices n` and list one facet per line as 1-based vertex indices; the empty facet is
//! written `{}`. Blank lines and lines starting with `#` are ignored in both.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use crate::simplicial::SimplicialComplex;
use crate::varset::{VarSet, MAX_VARS};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, line))
    })
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            line,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.chars.len() + 1, |c| c.0 + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), message)
    }

    fn word(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos].1;
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        (self.pos > start).then(|| {
            let col = self.chars[start].0 + 1;
            (
                col,
                self.chars[start..self.pos].iter().map(|c| c.1).collect(),
            )
        })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn parse_monomial_at(ctx: &RingContext, src: &str, line: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(src, line);
    let n = ctx.n();
    let mut exps = vec![0u64; n];
    loop {
        let Some((col, word)) = cur.word() else {
            return Err(cur.error("expected a variable or `1`"));
        };
        if word.chars().all(|c| c.is_ascii_digit()) {
            if word != "1" {
                return Err(Error::parse(
                    line,
                    col,
                    format!("unexpected number `{word}`"),
                ));
            }
        } else {
            let Some(i) = ctx.index_of(&word) else {
                return Err(Error::parse(
                    line,
                    col,
                    format!("unknown variable `{word}`"),
                ));
            };
            let mut e = 1u64;
            if cur.peek() == Some('^') {
                cur.pos += 1;
                let (ecol, digits) = cur
                    .word()
                    .ok_or_else(|| cur.error("expected an exponent"))?;
                e = digits.parse::<u64>().map_err(|_| {
                    Error::parse(line, ecol, format!("invalid exponent `{digits}`"))
                })?;
            }
            exps[i] = exps[i].saturating_add(e);
        }
        match cur.peek() {
            None => break,
            Some('*') => cur.pos += 1,
            Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
        }
    }
    let exps = exps
        .into_iter()
        .map(|e| ctx.check_exponent(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Monomial::from_exponents(exps))
}

/// Parses a monomial such as `x2*x3` or `x1^2*x4` over `ctx`.
pub fn parse_monomial(ctx: &RingContext, text: &str) -> Result<Monomial> {
    parse_monomial_at(ctx, text, 1)
}

/// Parses the `vars …` header line and returns the ring.
fn parse_header(line_no: usize, line: &str) -> Result<Arc<RingContext>> {
    let mut cur = Cursor::new(line, line_no);
    match cur.word() {
        Some((_, w)) if w == "vars" => {}
        _ => return Err(Error::parse(line_no, 1, "expected `vars` header")),
    }
    let mut names = Vec::new();
    while !cur.at_end() {
        let col = cur.column();
        let Some((_, w)) = cur.word() else {
            return Err(cur.error("expected a variable name"));
        };
        if !crate::ring::is_identifier(&w) {
            return Err(Error::parse(
                line_no,
                col,
                format!("`{w}` is not a variable name"),
            ));
        }
        if names.contains(&w) {
            return Err(Error::parse(
                line_no,
                col,
                format!("duplicate variable `{w}`"),
            ));
        }
        names.push(w);
    }
    if names.is_empty() {
        return Err(cur.error("the ring needs at least one variable"));
    }
    RingContext::new(names).map_err(|e| Error::parse(line_no, 1, e.to_string()))
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let ctx = parse_header(hline, header)?;
    let mut gens = Vec::new();
    for (no, line) in lines {
        gens.push(parse_monomial_at(&ctx, line, no)?);
    }
    MonomialIdeal::new(ctx, gens)
}

/// Writes an ideal in the file format; generators appear in canonical order.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.ctx();
    let mut out = format!("vars {}\n", ctx.names().join(" "));
    for g in ideal.gens() {
        out.push_str(&g.display(ctx).to_string());
        out.push('\n');
    }
    out
}

/// Parses a complex file.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let mut cur = Cursor::new(header, hline);
    match cur.word() {
        Some((_, w)) if w == "vertices" => {}
        _ => return Err(Error::parse(hline, 1, "expected `vertices n` header")),
    }
    let (col, count) = cur
        .word()
        .ok_or_else(|| cur.error("expected the vertex count"))?;
    let n: usize = count
        .parse()
        .map_err(|_| Error::parse(hline, col, format!("invalid vertex count `{count}`")))?;
    if n == 0 || n > MAX_VARS {
        return Err(Error::parse(
            hline,
            col,
            format!("vertex count must lie in 1..={MAX_VARS}"),
        ));
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    let mut facets = Vec::new();
    for (no, line) in lines {
        let mut cur = Cursor::new(line, no);
        if cur.peek() == Some('{') {
            cur.pos += 1;
            if cur.peek() != Some('}') {
                return Err(cur.error("expected `}`"));
            }
            cur.pos += 1;
            if !cur.at_end() {
                return Err(cur.error("unexpected trailing input"));
            }
            facets.push(VarSet::EMPTY);
            continue;
        }
        let mut facet = VarSet::EMPTY;
        while !cur.at_end() {
            let col = cur.column();
            let Some((_, w)) = cur.word() else {
                return Err(cur.error("expected a vertex index"));
            };
            let v: usize = w
                .parse()
                .map_err(|_| Error::parse(no, col, format!("invalid vertex `{w}`")))?;
            if v == 0 || v > n {
                return Err(Error::parse(no, col, format!("vertex {v} outside 1..={n}")));
            }
            facet.insert(v - 1);
        }
        facets.push(facet);
    }
    Ok(SimplicialComplex::new(n, facets))
}

/// Writes a complex in the file format (1-based vertices).
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("vertices {}\n", complex.n());
    for f in complex.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            let verts: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
    }
    out
}
