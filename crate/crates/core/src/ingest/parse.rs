//! Group-definition files.
//!
//! ```text
//! # comment
//! name A5
//! degree 5                 | mod M dim D | field Q dim D
//! action orbit             (matrix groups only; vectors, orbit or projective)
//! expect order 60          (also: expect center N, expect classes N)
//! gen (1 2 3 4 5)
//! gen [[1,z^3],[0,1]]
//! ```
//!
//! Cycles are 1-indexed. Matrix entries are integers below the modulus, or
//! for fields also `z`, `z^k` with `z` the primitive element.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::field::{FiniteField, Ring, Zmod};
use crate::permcore::matrix::determinant;
use crate::permcore::{realize, realize_over_field, Action, Caps, Group, Matrix, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Realization {
    PermCycles { degree: usize, gens: Vec<Permutation> },
    MatrixModM { modulus: u32, dim: usize, gens: Vec<Matrix> },
    MatrixGf { q: u32, dim: usize, gens: Vec<Matrix> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Expected {
    pub order: Option<u64>,
    pub center_order: Option<u64>,
    pub class_count: Option<usize>,
}

impl Expected {
    /// Checks each invariant that is present.
    pub fn check(&self, g: &Group, entry: &str) -> Result<()> {
        let fail = |message: String| Error::Validation { entry: entry.to_string(), message };
        if let Some(o) = self.order {
            if g.order_u64() != o {
                return Err(fail(format!("order is {}, expected {o}", g.order())));
            }
        }
        if let Some(z) = self.center_order {
            let got = g.center()?.order_u64();
            if got != z {
                return Err(fail(format!("center order is {got}, expected {z}")));
            }
        }
        if let Some(k) = self.class_count {
            let got = g.class_data()?.len();
            if got != k {
                return Err(fail(format!("class count is {got}, expected {k}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupSpec {
    pub name: Option<String>,
    pub realization: Realization,
    pub action: Action,
    pub expected: Expected,
}

struct Cursor<'a> {
    line: usize,
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.pos + 1
    }

    fn syntax(&self, expected: &[&str]) -> Error {
        Error::Syntax { line: self.line, column: self.col(), expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn semantic_at(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Semantic { line: self.line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && (self.text[self.pos] == b' ' || self.text[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn expect_char(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&[&format!("'{}'", c as char)]))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && !self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).expect("ascii input")
    }

    fn keyword(&mut self, options: &[&str]) -> Result<&'a str> {
        self.skip_ws();
        let save = self.pos;
        let w = self.word();
        if options.contains(&w) {
            Ok(w)
        } else {
            self.pos = save;
            Err(self.syntax(options))
        }
    }

    /// A decimal integer with optional leading minus, returning its column.
    fn integer(&mut self) -> Result<(i64, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.syntax(&["integer"]));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii");
        let v = s.parse::<i64>().map_err(|_| self.semantic_at(start + 1, format!("integer {s} out of range")))?;
        Ok((v, start + 1))
    }

    fn positive(&mut self, what: &str) -> Result<u64> {
        let (v, col) = self.integer()?;
        if v <= 0 {
            return Err(self.semantic_at(col, format!("{what} must be positive")));
        }
        Ok(v as u64)
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax(&["end of line"]))
        }
    }
}

#[derive(Clone, Copy)]
enum Header {
    Perm(usize),
    ModM(u32, usize),
    Gf(u32, usize),
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

pub fn parse_group_file(text: &str) -> Result<GroupSpec> {
    let mut name = None;
    let mut header: Option<Header> = None;
    let mut action: Option<(Action, usize, usize)> = None;
    let mut expected = Expected::default();
    let mut perms: Vec<Permutation> = Vec::new();
    let mut mats: Vec<Matrix> = Vec::new();
    let mut field: Option<FiniteField> = None;
    let mut last_line = 0;

    for (ln, raw) in text.lines().enumerate() {
        last_line = ln + 1;
        if !raw.is_ascii() {
            let col = raw.char_indices().find(|(_, c)| !c.is_ascii()).map_or(1, |(i, _)| i + 1);
            return Err(Error::Syntax { line: ln + 1, column: col, expected: vec!["ASCII text".into()] });
        }
        let body = strip_comment(raw);
        let mut cur = Cursor { line: ln + 1, text: body.as_bytes(), pos: 0 };
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        let allowed: &[&str] = if header.is_none() {
            &["name", "degree", "mod", "field"]
        } else {
            &["name", "action", "expect", "gen"]
        };
        match cur.keyword(allowed)? {
            "name" => {
                cur.skip_ws();
                let rest = body[cur.pos..].trim();
                if rest.is_empty() {
                    return Err(cur.syntax(&["group name"]));
                }
                if name.is_some() {
                    return Err(cur.semantic_at(1, "name given twice"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                let d = cur.positive("degree")?;
                cur.end()?;
                header = Some(Header::Perm(d as usize));
            }
            "mod" => {
                let (m, col) = cur.integer()?;
                if m < 2 || m > u16::MAX as i64 {
                    return Err(cur.semantic_at(col, format!("modulus {m} out of range")));
                }
                cur.keyword(&["dim"])?;
                let d = cur.positive("dimension")?;
                cur.end()?;
                header = Some(Header::ModM(m as u32, d as usize));
            }
            "field" => {
                let (q, col) = cur.integer()?;
                if q < 2 || q > u16::MAX as i64 {
                    return Err(cur.semantic_at(col, format!("field size {q} out of range")));
                }
                let f = FiniteField::new(q as u32).map_err(|e| cur.semantic_at(col, e.to_string()))?;
                cur.keyword(&["dim"])?;
                let d = cur.positive("dimension")?;
                cur.end()?;
                field = Some(f);
                header = Some(Header::Gf(q as u32, d as usize));
            }
            "action" => {
                let col = {
                    cur.skip_ws();
                    cur.col()
                };
                let a = match cur.keyword(&["vectors", "orbit", "projective"])? {
                    "vectors" => Action::Vectors,
                    "orbit" => Action::Orbit,
                    _ => Action::Projective,
                };
                cur.end()?;
                action = Some((a, ln + 1, col));
            }
            "expect" => {
                let what = cur.keyword(&["order", "center", "classes"])?;
                let v = cur.positive(what)?;
                cur.end()?;
                match what {
                    "order" => expected.order = Some(v),
                    "center" => expected.center_order = Some(v),
                    _ => expected.class_count = Some(v as usize),
                }
            }
            _ => match header.expect("gen follows a header") {
                Header::Perm(deg) => {
                    perms.push(parse_cycles(&mut cur, deg)?);
                }
                Header::ModM(m, dim) => {
                    let r = Zmod::new(m)?;
                    mats.push(parse_matrix(&mut cur, dim, &r, None)?);
                }
                Header::Gf(_, dim) => {
                    let f = field.as_ref().expect("field parsed with header");
                    mats.push(parse_matrix(&mut cur, dim, f, Some(f))?);
                }
            },
        }
    }

    let Some(h) = header else {
        return Err(Error::Syntax { line: last_line.max(1), column: 1, expected: vec!["degree".into(), "mod".into(), "field".into()] });
    };
    let realization = match h {
        Header::Perm(degree) => {
            if let Some((_, line, column)) = action {
                return Err(Error::Semantic { line, column, message: "action applies to matrix groups only".into() });
            }
            Realization::PermCycles { degree, gens: perms }
        }
        Header::ModM(modulus, dim) => {
            if let Some((Action::Projective, line, column)) = action {
                return Err(Error::Semantic { line, column, message: "projective action needs a field".into() });
            }
            Realization::MatrixModM { modulus, dim, gens: mats }
        }
        Header::Gf(q, dim) => Realization::MatrixGf { q, dim, gens: mats },
    };
    Ok(GroupSpec { name, realization, action: action.map_or(Action::Vectors, |a| a.0), expected })
}

fn parse_cycles(cur: &mut Cursor, degree: usize) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    cur.skip_ws();
    if cur.at_end() {
        return Err(cur.syntax(&["'('"]));
    }
    while {
        cur.skip_ws();
        !cur.at_end()
    } {
        cur.expect_char(b'(')?;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            cur.skip_ws();
            match cur.peek() {
                Some(b')') => {
                    cur.pos += 1;
                    break;
                }
                Some(b',') if !cycle.is_empty() => {
                    cur.pos += 1;
                }
                Some(c) if c.is_ascii_digit() || c == b'-' => {
                    let (v, col) = cur.integer()?;
                    if v < 1 || v as u64 > degree as u64 {
                        return Err(cur.semantic_at(col, format!("point {v} is outside 1..{degree}")));
                    }
                    let p = v as usize - 1;
                    if used[p] {
                        return Err(cur.semantic_at(col, format!("point {v} appears twice")));
                    }
                    used[p] = true;
                    cycle.push(p);
                }
                _ => {
                    let exp: &[&str] = if cycle.is_empty() { &["point", "')'"] } else { &["point", "','", "')'"] };
                    return Err(cur.syntax(exp));
                }
            }
        }
        for (k, &a) in cycle.iter().enumerate() {
            images[a] = cycle[(k + 1) % cycle.len()] as u32;
        }
    }
    Permutation::from_images(images)
}

fn parse_entry<R: Ring>(cur: &mut Cursor, r: &R, field: Option<&FiniteField>) -> Result<u32> {
    cur.skip_ws();
    if cur.peek() == Some(b'z') {
        let Some(f) = field else {
            return Err(cur.syntax(&["integer"]));
        };
        cur.pos += 1;
        let mut k = 1;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            k = cur.integer()?.0;
        }
        return Ok(f.z_pow(k));
    }
    let (v, col) = cur.integer().map_err(|_| {
        if field.is_some() {
            cur.syntax(&["integer", "'z'"])
        } else {
            cur.syntax(&["integer"])
        }
    })?;
    let bound = field.map_or(r.size() as i64, |f| f.characteristic() as i64);
    if v < 0 || v >= bound {
        return Err(cur.semantic_at(col, format!("entry {v} is outside 0..{}", bound - 1)));
    }
    Ok(v as u32)
}

fn parse_matrix<R: Ring>(cur: &mut Cursor, dim: usize, r: &R, field: Option<&FiniteField>) -> Result<Matrix> {
    cur.skip_ws();
    let start = cur.col();
    cur.expect_char(b'[')?;
    let mut rows: Matrix = Vec::new();
    loop {
        cur.skip_ws();
        let row_col = cur.col();
        cur.expect_char(b'[')?;
        let mut row = vec![parse_entry(cur, r, field)?];
        loop {
            cur.skip_ws();
            match cur.peek() {
                Some(b',') => {
                    cur.pos += 1;
                    row.push(parse_entry(cur, r, field)?);
                }
                Some(b']') => {
                    cur.pos += 1;
                    break;
                }
                _ => return Err(cur.syntax(&["','", "']'"])),
            }
        }
        if row.len() != dim {
            return Err(cur.semantic_at(row_col, format!("row has {} entries, expected {dim}", row.len())));
        }
        rows.push(row);
        cur.skip_ws();
        match cur.peek() {
            Some(b',') => cur.pos += 1,
            Some(b']') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.syntax(&["','", "']'"])),
        }
    }
    cur.end()?;
    if rows.len() != dim {
        return Err(cur.semantic_at(start, format!("matrix has {} rows, expected {dim}", rows.len())));
    }
    if !r.is_unit(determinant(r, &rows)) {
        return Err(cur.semantic_at(start, "matrix is not invertible"));
    }
    Ok(rows)
}

impl GroupSpec {
    /// The group realized as permutations.
    pub fn build(&self, caps: &Caps) -> Result<Group> {
        match &self.realization {
            Realization::PermCycles { degree, gens } => Ok(Group::new(*degree, gens.clone())?.with_caps(*caps)),
            Realization::MatrixModM { modulus, dim, gens } => realize(&Zmod::new(*modulus)?, gens, *dim, self.action, caps),
            Realization::MatrixGf { q, dim, gens } => realize_over_field(&FiniteField::new(*q)?, gens, *dim, self.action, caps),
        }
    }

    pub fn validate(&self, g: &Group, entry: &str) -> Result<()> {
        self.expected.check(g, entry)
    }

    /// Text in the file grammar; parsing it gives back `self`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            writeln!(s, "name {n}").unwrap();
        }
        match &self.realization {
            Realization::PermCycles { degree, .. } => writeln!(s, "degree {degree}").unwrap(),
            Realization::MatrixModM { modulus, dim, .. } => writeln!(s, "mod {modulus} dim {dim}").unwrap(),
            Realization::MatrixGf { q, dim, .. } => writeln!(s, "field {q} dim {dim}").unwrap(),
        }
        if !matches!(self.realization, Realization::PermCycles { .. }) && self.action != Action::Vectors {
            writeln!(s, "action {}", self.action.keyword()).unwrap();
        }
        let e = &self.expected;
        if let Some(v) = e.order {
            writeln!(s, "expect order {v}").unwrap();
        }
        if let Some(v) = e.center_order {
            writeln!(s, "expect center {v}").unwrap();
        }
        if let Some(v) = e.class_count {
            writeln!(s, "expect classes {v}").unwrap();
        }
        match &self.realization {
            Realization::PermCycles { gens, .. } => {
                for g in gens {
                    writeln!(s, "gen {g}").unwrap();
                }
            }
            Realization::MatrixModM { gens, .. } => {
                for m in gens {
                    writeln!(s, "gen {}", matrix_text(m, |v| v.to_string())).unwrap();
                }
            }
            Realization::MatrixGf { q, gens, .. } => {
                let f = FiniteField::new(*q).expect("validated at parse time");
                let entry = |v: u32| -> String {
                    if v < f.characteristic() {
                        v.to_string()
                    } else {
                        format!("z^{}", f.log(v).expect("nonzero"))
                    }
                };
                for m in gens {
                    writeln!(s, "gen {}", matrix_text(m, entry)).unwrap();
                }
            }
        }
        s
    }
}

fn matrix_text(m: &Matrix, entry: impl Fn(u32) -> String) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|&v| entry(v)).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}
