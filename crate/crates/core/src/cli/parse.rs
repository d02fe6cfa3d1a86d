//! Line-oriented input format.
//!
//! ```text
//! # comment
//! ring 31013 8
//! ideal x1*x6-x2*x5, x1*x7-x3*x5,
//!       x2*x7-x3*x6
//! ```
//!
//! A statement starts with one of `ring`, `ideal`, `complex`, `matrix`,
//! `degmatrix`, `symmetric`; any other non-blank line continues the
//! previous statement. A document holds an optional `ring` line and
//! exactly one object:
//!
//! - `ideal g1, g2, ...` (optionally wrapped in parentheses)
//! - `complex N facets: 123 124 {1,2,10} ...`
//! - `matrix R C rowdeg g1 .. gR coldeg f1 .. fC entries: a b / c d`
//! - `degmatrix R C: 1 0 / 2 1 / 2 1`
//! - `symmetric doubled: 0 2 2` (the values `2d_i`)
//!
//! Polynomials use variables `x1..xn`, `^` for powers and optional `*`
//! between factors. Without a `ring` line the characteristic defaults to
//! 31013 and the arity to the largest variable index.

use crate::classifiers::SymmetricInput;
use crate::error::{Error, Result};
use crate::field::DEFAULT_CHARACTERISTIC;
use crate::groebner::GradedIdeal;
use crate::matrix::{DegreeMatrix, HomogeneousMatrix};
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::polynomial::{Polynomial, Ring};
use crate::simplicial::SimplicialComplex;

/// A parsed object.
#[derive(Clone, Debug)]
pub enum Input {
    Ideal(GradedIdeal),
    Matrix(HomogeneousMatrix),
    Complex(SimplicialComplex),
    Degrees(DegreeMatrix),
    Symmetric(SymmetricInput),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Ideal(_) => "ideal",
            Input::Matrix(_) => "matrix",
            Input::Complex(_) => "complex",
            Input::Degrees(_) => "degmatrix",
            Input::Symmetric(_) => "symmetric",
        }
    }

    /// Ring of a polynomial object.
    pub fn ring(&self) -> Option<Ring> {
        match self {
            Input::Ideal(i) => Some(i.ring()),
            Input::Matrix(m) => Some(m.ring()),
            _ => None,
        }
    }
}

const KEYWORDS: [&str; 6] = ["ring", "ideal", "complex", "matrix", "degmatrix", "symmetric"];

/// A statement glued from its continuation lines, with the source
/// position of every byte.
struct Statement {
    text: String,
    pos: Vec<(usize, usize)>,
}

impl Statement {
    fn at(&self, i: usize) -> (usize, usize) {
        match self.pos.get(i) {
            Some(&p) => p,
            None => self.pos.last().map(|&(l, c)| (l, c + 1)).unwrap_or((1, 1)),
        }
    }

    fn err(&self, i: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.at(i);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

fn statements(text: &str) -> Result<Vec<Statement>> {
    let mut out: Vec<Statement> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let first = trimmed.split(|c: char| c.is_whitespace() || c == ':').next().unwrap_or("");
        let offset = line.len() - trimmed.len();
        let starts = KEYWORDS.contains(&first);
        if !starts && out.is_empty() {
            return Err(Error::Parse {
                line: ln + 1,
                column: offset + 1,
                message: format!("expected one of {}, found `{first}`", KEYWORDS.join(", ")),
            });
        }
        if starts {
            out.push(Statement {
                text: String::new(),
                pos: Vec::new(),
            });
        }
        let st = out.last_mut().unwrap();
        if !st.text.is_empty() {
            let p = *st.pos.last().unwrap();
            st.text.push(' ');
            st.pos.push((p.0, p.1 + 1));
        }
        for (i, ch) in trimmed.char_indices() {
            let mut buf = [0u8; 4];
            for _ in ch.encode_utf8(&mut buf).bytes() {
                st.pos.push((ln + 1, offset + i + 1));
            }
            st.text.push(ch);
        }
    }
    Ok(out)
}

/// Byte cursor over one statement.
struct Cursor<'a> {
    st: &'a Statement,
    bytes: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn new(st: &'a Statement) -> Self {
        Self {
            st,
            bytes: st.text.as_bytes(),
            i: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.i).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        self.st.err(self.i, message)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.i;
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_alphanumeric() {
            self.i += 1;
        }
        &self.st.text[start..self.i]
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let at = {
            self.skip_ws();
            self.i
        };
        let w = self.word();
        if w == kw {
            Ok(())
        } else {
            Err(self.st.err(at, format!("expected `{kw}`, found `{w}`")))
        }
    }

    fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        self.st.text[start..self.i]
            .parse()
            .map_err(|_| self.st.err(start, "number out of range"))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let at = self.i;
        let v = self.unsigned()?;
        let v = i64::try_from(v).map_err(|_| self.st.err(at, "number out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn usize(&mut self) -> Result<usize> {
        let at = {
            self.skip_ws();
            self.i
        };
        let v = self.unsigned()?;
        usize::try_from(v).map_err(|_| self.st.err(at, "number out of range"))
    }

    /// Integers up to (not including) the next `stop` byte or word.
    fn integers_until(&mut self, stop: impl Fn(&mut Self) -> bool) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        while !self.at_end() && !stop(self) {
            out.push(self.integer()?);
        }
        Ok(out)
    }

    fn lookahead_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        self.st.text[self.i..].starts_with(w)
    }
}

/// Largest `k` with `xk` occurring in the statements.
fn max_variable(sts: &[Statement]) -> usize {
    let mut best = 0;
    for st in sts {
        let b = st.text.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i] == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
                let mut j = i + 1;
                let mut v = 0usize;
                while j < b.len() && b[j].is_ascii_digit() {
                    v = v.saturating_mul(10).saturating_add((b[j] - b'0') as usize);
                    j += 1;
                }
                best = best.max(v);
                i = j;
            } else {
                i += 1;
            }
        }
    }
    best
}

/// One polynomial; stops before `,`, `)`, `/` or the end. Inside matrices
/// (`spaced = false`) whitespace also ends the polynomial.
fn polynomial(c: &mut Cursor, ring: Ring, spaced: bool) -> Result<Polynomial> {
    let n = ring.nvars;
    let mut terms: Vec<(i64, Monomial)> = Vec::new();
    let p = ring.characteristic() as i64;
    let start = {
        c.skip_ws();
        c.i
    };
    let mut first = true;
    loop {
        if spaced {
            c.skip_ws();
        }
        let sign = match c.bytes.get(c.i) {
            Some(b'+') if !first => {
                c.i += 1;
                1
            }
            Some(b'-') => {
                c.i += 1;
                -1
            }
            _ if first => 1,
            _ => break,
        };
        first = false;
        let mut coef: i64 = sign;
        let mut exps = vec![0u32; n];
        let mut factors = 0;
        loop {
            if spaced {
                c.skip_ws();
            }
            match c.bytes.get(c.i) {
                Some(d) if d.is_ascii_digit() => {
                    let at = c.i;
                    let mut v: i64 = 0;
                    while let Some(d) = c.bytes.get(c.i).filter(|d| d.is_ascii_digit()) {
                        v = (v * 10 + (d - b'0') as i64) % p;
                        c.i += 1;
                    }
                    if c.bytes.get(c.i) == Some(&b'^') {
                        return Err(c.st.err(at, "powers of constants are not supported"));
                    }
                    coef = coef * v % p;
                }
                Some(b'x') => {
                    let at = c.i;
                    c.i += 1;
                    let idx = c.unsigned_here().map_err(|_| c.st.err(at, "expected a variable index after `x`"))?;
                    if idx == 0 || idx as usize > n {
                        return Err(c.st.err(at, format!("variable x{idx} outside x1..x{n}")));
                    }
                    let mut e = 1u64;
                    if c.bytes.get(c.i) == Some(&b'^') {
                        c.i += 1;
                        e = c.unsigned_here().map_err(|_| c.err("expected an exponent after `^`"))?;
                    }
                    let slot = &mut exps[idx as usize - 1];
                    let total = *slot as u64 + e;
                    if total > u16::MAX as u64 {
                        return Err(c.st.err(at, format!("exponent {total} out of range")));
                    }
                    *slot = total as u32;
                }
                _ if factors == 0 => return Err(c.err("expected a term")),
                _ => break,
            }
            factors += 1;
            if spaced {
                c.skip_ws();
            }
            if c.bytes.get(c.i) == Some(&b'*') {
                c.i += 1;
                let save = c.i;
                if spaced {
                    c.skip_ws();
                }
                if !matches!(c.bytes.get(c.i), Some(b'x') | Some(b'0'..=b'9')) {
                    c.i = save;
                    return Err(c.err("expected a factor after `*`"));
                }
            }
        }
        terms.push((coef, Monomial::from_slice(&exps)));
    }
    if c.i == start {
        return Err(c.err("expected a polynomial"));
    }
    Ok(Polynomial::from_terms(ring, MonomialOrder::Degrevlex, terms))
}

impl Cursor<'_> {
    /// Digits immediately at the cursor, no whitespace skipping.
    fn unsigned_here(&mut self) -> std::result::Result<u64, ()> {
        let start = self.i;
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_digit() {
            self.i += 1;
        }
        self.st.text[start..self.i].parse().map_err(|_| ())
    }
}

fn parse_ring(st: &Statement, p_override: Option<u32>) -> Result<Ring> {
    let mut c = Cursor::new(st);
    c.keyword("ring")?;
    let at_p = {
        c.skip_ws();
        c.i
    };
    let p = c.unsigned()?;
    let at_n = {
        c.skip_ws();
        c.i
    };
    let n = c.usize()?;
    if !c.at_end() {
        return Err(c.err("unexpected text after ring"));
    }
    if n == 0 || n > MAX_VARS {
        return Err(st.err(at_n, format!("arity must be in 1..={MAX_VARS}")));
    }
    let p = u32::try_from(p).map_err(|_| st.err(at_p, "characteristic out of range"))?;
    Ring::new(p_override.unwrap_or(p), n).map_err(|e| match e {
        Error::InvalidCharacteristic(_) if p_override.is_none() => st.err(at_p, e.to_string()),
        e => e,
    })
}

fn parse_ideal(st: &Statement, ring: Ring) -> Result<GradedIdeal> {
    let mut c = Cursor::new(st);
    c.keyword("ideal")?;
    let paren = c.eat(b'(');
    let mut gens = Vec::new();
    if !(paren && c.peek() == Some(b')')) && !c.at_end() {
        loop {
            let at = {
                c.skip_ws();
                c.i
            };
            let g = polynomial(&mut c, ring, true)?;
            if !g.is_homogeneous() {
                return Err(st.err(at, format!("inhomogeneous generator {g}")));
            }
            gens.push(g);
            if !c.eat(b',') {
                break;
            }
        }
    }
    if paren {
        c.expect(b')')?;
    }
    if !c.at_end() {
        return Err(c.err("expected `,` or end of ideal"));
    }
    GradedIdeal::new(ring, gens)
}

fn parse_complex(st: &Statement) -> Result<SimplicialComplex> {
    let mut c = Cursor::new(st);
    c.keyword("complex")?;
    let n = c.usize()?;
    c.keyword("facets")?;
    c.expect(b':')?;
    let mut faces = Vec::new();
    while !c.at_end() {
        let at = c.i;
        let mut face = Vec::new();
        if c.eat(b'{') {
            if !c.eat(b'}') {
                loop {
                    let vat = {
                        c.skip_ws();
                        c.i
                    };
                    let v = c.usize()?;
                    if v == 0 || v > n {
                        return Err(st.err(vat, format!("vertex {v} outside 1..{n}")));
                    }
                    face.push(v - 1);
                    if c.eat(b'}') {
                        break;
                    }
                    c.expect(b',')?;
                }
            }
        } else {
            let w = c.word();
            if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
                return Err(st.err(at, "expected a face such as `123` or `{1,2,10}`"));
            }
            if n > 9 {
                return Err(st.err(at, "use braces for faces when there are more than 9 vertices"));
            }
            for (k, b) in w.bytes().enumerate() {
                let v = (b - b'0') as usize;
                if v == 0 || v > n {
                    return Err(st.err(at + k, format!("vertex {v} outside 1..{n}")));
                }
                face.push(v - 1);
            }
        }
        faces.push(face);
    }
    SimplicialComplex::new(n, faces).map_err(|e| st.err(0, e.to_string()))
}

/// `R` rows of `C` values each, with optional `/` between rows.
fn rows_of<T>(c: &mut Cursor, r: usize, cols: usize, mut item: impl FnMut(&mut Cursor) -> Result<T>) -> Result<Vec<Vec<T>>> {
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        if i > 0 {
            c.eat(b'/');
        }
        let mut row = Vec::with_capacity(cols);
        for _ in 0..cols {
            if c.at_end() || c.peek() == Some(b'/') {
                return Err(c.err(format!("row {} needs {cols} entries", i + 1)));
            }
            row.push(item(c)?);
        }
        rows.push(row);
    }
    if !c.at_end() {
        return Err(c.err(format!("expected exactly {r} rows of {cols} entries")));
    }
    Ok(rows)
}

fn parse_matrix(st: &Statement, ring: Ring) -> Result<HomogeneousMatrix> {
    let mut c = Cursor::new(st);
    c.keyword("matrix")?;
    let r = c.usize()?;
    let cols = c.usize()?;
    c.keyword("rowdeg")?;
    let at_g = c.i;
    let g = c.integers_until(|c| c.lookahead_word("coldeg"))?;
    if g.len() != r {
        return Err(st.err(at_g, format!("expected {r} row degrees, found {}", g.len())));
    }
    c.keyword("coldeg")?;
    let at_f = c.i;
    let f = c.integers_until(|c| c.lookahead_word("entries"))?;
    if f.len() != cols {
        return Err(st.err(at_f, format!("expected {cols} column degrees, found {}", f.len())));
    }
    c.keyword("entries")?;
    c.expect(b':')?;
    let mut bad = None;
    let entries = rows_of(&mut c, r, cols, |c| {
        let at = {
            c.skip_ws();
            c.i
        };
        let p = polynomial(c, ring, false)?;
        if !p.is_homogeneous() && bad.is_none() {
            bad = Some((at, p.to_string()));
        }
        Ok((at, p))
    })?;
    if let Some((at, p)) = bad {
        return Err(st.err(at, format!("inhomogeneous entry {p}")));
    }
    for (i, row) in entries.iter().enumerate() {
        for (j, (at, p)) in row.iter().enumerate() {
            if let Some(d) = p.homogeneous_degree() {
                if d as i64 != f[j] - g[i] {
                    return Err(st.err(
                        *at,
                        format!("entry ({}, {}) has degree {d}, expected {}", i + 1, j + 1, f[j] - g[i]),
                    ));
                }
            }
        }
    }
    let entries = entries.into_iter().map(|row| row.into_iter().map(|(_, p)| p).collect()).collect();
    HomogeneousMatrix::new(ring, g, f, entries).map_err(|e| st.err(0, e.to_string()))
}

fn parse_degmatrix(st: &Statement) -> Result<DegreeMatrix> {
    let mut c = Cursor::new(st);
    c.keyword("degmatrix")?;
    let r = c.usize()?;
    let cols = c.usize()?;
    c.expect(b':')?;
    let rows = rows_of(&mut c, r, cols, |c| c.integer())?;
    DegreeMatrix::new(rows).map_err(|e| st.err(0, e.to_string()))
}

fn parse_symmetric(st: &Statement) -> Result<SymmetricInput> {
    let mut c = Cursor::new(st);
    c.keyword("symmetric")?;
    c.keyword("doubled")?;
    c.expect(b':')?;
    let d = c.integers_until(|_| false)?;
    SymmetricInput::new(d).map_err(|e| st.err(0, e.to_string()))
}

/// Parse a document. `p_override` replaces the characteristic of the
/// `ring` line (or the default) and reduces coefficients accordingly.
pub fn parse_input(text: &str, p_override: Option<u32>) -> Result<Input> {
    let sts = statements(text)?;
    let mut ring_st = None;
    let mut object = None;
    for st in &sts {
        let kw = st.text.split(|c: char| c.is_whitespace() || c == ':').next().unwrap();
        if kw == "ring" {
            if ring_st.replace(st).is_some() {
                return Err(st.err(0, "duplicate ring line"));
            }
        } else if object.replace(st).is_some() {
            return Err(st.err(0, "only one object per document"));
        }
    }
    let Some(obj) = object else {
        return Err(Error::Parse {
            line: sts.last().map(|s| s.at(0).0).unwrap_or(1),
            column: 1,
            message: "no object (ideal, complex, matrix, degmatrix or symmetric) found".into(),
        });
    };
    let ring = || -> Result<Ring> {
        match ring_st {
            Some(st) => parse_ring(st, p_override),
            None => {
                let n = max_variable(std::slice::from_ref(obj)).max(1);
                if n > MAX_VARS {
                    return Err(obj.err(0, format!("at most {MAX_VARS} variables are supported")));
                }
                Ring::new(p_override.unwrap_or(DEFAULT_CHARACTERISTIC), n)
            }
        }
    };
    let kw = obj.text.split(|c: char| c.is_whitespace() || c == ':').next().unwrap();
    Ok(match kw {
        "ideal" => Input::Ideal(parse_ideal(obj, ring()?)?),
        "matrix" => Input::Matrix(parse_matrix(obj, ring()?)?),
        "complex" => Input::Complex(parse_complex(obj)?),
        "degmatrix" => Input::Degrees(parse_degmatrix(obj)?),
        "symmetric" => Input::Symmetric(parse_symmetric(obj)?),
        _ => unreachable!(),
    })
}

/// Inverse of [`parse_input`]: polynomial objects get a `ring` line.
pub fn print_input(input: &Input) -> String {
    let mut out = String::new();
    if let Some(r) = input.ring() {
        out.push_str(&format!("ring {} {}\n", r.characteristic(), r.nvars));
    }
    match input {
        Input::Ideal(i) => {
            let gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
            out.push_str("ideal ");
            out.push_str(&gens.join(", "));
        }
        Input::Matrix(m) => out.push_str(&m.to_string()),
        Input::Complex(d) => out.push_str(&d.to_string()),
        Input::Degrees(d) => out.push_str(&d.to_string()),
        Input::Symmetric(s) => {
            out.push_str("symmetric doubled:");
            for d in s.doubled() {
                out.push_str(&format!(" {d}"));
            }
        }
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests;
