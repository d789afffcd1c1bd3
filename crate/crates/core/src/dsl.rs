//! Text format for representation diagrams.
//!
//! ```text
//! diagram "example"
//! group G1 = SL(4)
//! group G2 = SL(2)
//! group G3 = SO(7)
//! even U1 = G1:std * G2:std
//! odd W1 = G2:std * G3:std   # trailing ^* marks the dual
//! ```
//!
//! Factors missing from a term list act trivially. `std` is the first
//! fundamental weight (the spin module on a `Spin(m)` factor), `triv` the zero
//! weight, and `part(…)` a partition label in the group's classical convention.

use std::fmt;

use crate::partitions::Partition;
use crate::rootdata::{partition_to_weight, spin_label, Chirality, GroupType, ProductGroup, Weight};
use crate::superalg::{Factor, Parity, RepDiagram, Submodule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SourceSpan {
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    fn join(self, other: SourceSpan) -> SourceSpan {
        SourceSpan { end: other.end.max(self.end), ..self }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

type PResult<T> = Result<T, ParseError>;

fn err<T>(span: SourceSpan, message: impl Into<String>) -> PResult<T> {
    Err(ParseError { span, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Equals,
    Star,
    Caret,
    Minus,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(_) => "string".into(),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn here(&self) -> SourceSpan {
        SourceSpan { line: self.line, column: self.col, start: self.pos, end: self.pos }
    }

    fn tokens(mut self) -> PResult<Vec<(Tok, SourceSpan)>> {
        let mut out = Vec::new();
        loop {
            while let Some(c) = self.peek_char() {
                if c == '#' {
                    while self.peek_char().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                } else if c.is_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let start = self.here();
            let Some(c) = self.bump() else {
                out.push((Tok::Eof, start));
                return Ok(out);
            };
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '=' => Tok::Equals,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '-' => Tok::Minus,
                '"' => {
                    let mut s = String::new();
                    loop {
                        match self.bump() {
                            None | Some('\n') => {
                                return err(SourceSpan { end: self.pos, ..start }, "unterminated string")
                            }
                            Some('"') => break,
                            Some('\\') => match self.bump() {
                                Some(e @ ('"' | '\\')) => s.push(e),
                                Some('n') => s.push('\n'),
                                _ => return err(SourceSpan { end: self.pos, ..start }, "invalid escape in string"),
                            },
                            Some(ch) => s.push(ch),
                        }
                    }
                    Tok::Str(s)
                }
                d if d.is_ascii_digit() => {
                    let mut s = String::from(d);
                    while let Some(ch) = self.peek_char().filter(|c| c.is_ascii_digit()) {
                        s.push(ch);
                        self.bump();
                    }
                    match s.parse() {
                        Ok(n) => Tok::Int(n),
                        Err(_) => return err(SourceSpan { end: self.pos, ..start }, "integer too large"),
                    }
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let mut s = String::from(a);
                    while let Some(ch) = self.peek_char().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                        s.push(ch);
                        self.bump();
                    }
                    Tok::Ident(s)
                }
                other => return err(SourceSpan { end: self.pos, ..start }, format!("unexpected character {other:?}")),
            };
            out.push((tok, SourceSpan { end: self.pos, ..start }));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    i: usize,
}

struct FactorDecl {
    name: String,
    group: GroupType,
    spin: Option<Chirality>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn span(&self) -> SourceSpan {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, SourceSpan) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> PResult<SourceSpan> {
        let (t, sp) = self.next();
        if t == want {
            Ok(sp)
        } else {
            err(sp, format!("expected {}, found {}", want.describe(), t.describe()))
        }
    }

    fn keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == k)
    }

    fn ident(&mut self, what: &str) -> PResult<(String, SourceSpan)> {
        match self.next() {
            (Tok::Ident(s), sp) => Ok((s, sp)),
            (t, sp) => err(sp, format!("expected {what}, found {}", t.describe())),
        }
    }

    fn int(&mut self) -> PResult<(u64, SourceSpan)> {
        match self.next() {
            (Tok::Int(n), sp) => Ok((n, sp)),
            (t, sp) => err(sp, format!("expected integer, found {}", t.describe())),
        }
    }

    fn int_list(&mut self, close: Tok) -> PResult<(Vec<u64>, SourceSpan)> {
        let (first, start) = self.int()?;
        let mut xs = vec![first];
        while *self.peek() == Tok::Comma {
            self.next();
            xs.push(self.int()?.0);
        }
        let end = self.expect(close)?;
        Ok((xs, start.join(end)))
    }

    fn group_type(&mut self) -> PResult<(GroupType, Option<Chirality>, SourceSpan)> {
        let (name, sp) = self.ident("group type")?;
        let simple = match name.as_str() {
            "G2" => Some(GroupType::g2()),
            "E6" => Some(GroupType::e6()),
            "E7" => Some(GroupType::e7()),
            _ => None,
        };
        if let Some(g) = simple {
            return Ok((g, None, sp));
        }
        if !matches!(name.as_str(), "SL" | "SO" | "Sp" | "Spin") {
            return err(sp, format!("unknown group type `{name}`"));
        }
        self.expect(Tok::LParen)?;
        let (n, _) = self.int()?;
        let end = self.expect(Tok::RParen)?;
        let mut full = sp.join(end);
        let n = n as usize;
        let semantic = |e: crate::error::Error| ParseError { span: full, message: e.to_string() };
        let group = match name.as_str() {
            "SL" => GroupType::sl(n).map_err(semantic)?,
            "Sp" => GroupType::sp(n).map_err(semantic)?,
            _ if n.is_multiple_of(2) && n < 6 => {
                return err(full, format!("{name}({n}) is not supported: SO(2n) needs n ≥ 3"));
            }
            _ => GroupType::so(n).map_err(semantic)?,
        };
        let mut spin = None;
        if name == "Spin" {
            let mut chirality = if n % 2 == 1 { Chirality::Full } else { Chirality::Plus };
            if *self.peek() == Tok::Minus {
                let m = self.next().1;
                full = full.join(m);
                if n % 2 == 1 {
                    return err(full, format!("Spin({n}) has a single spin module; drop the `-`"));
                }
                chirality = Chirality::Minus;
            }
            spin = Some(chirality);
        }
        Ok((group, spin, full))
    }

    fn term(&mut self, factors: &[FactorDecl]) -> PResult<(usize, Weight, SourceSpan)> {
        let (name, nsp) = self.ident("factor name")?;
        let Some(fi) = factors.iter().position(|f| f.name == name) else {
            return err(nsp, format!("unknown factor name `{name}`"));
        };
        let f = &factors[fi];
        self.expect(Tok::Colon)?;
        let (w, wsp) = self.weight(f.group, f.spin)?;
        Ok((fi, w, nsp.join(wsp)))
    }

    fn weight(&mut self, g: GroupType, spin: Option<Chirality>) -> PResult<(Weight, SourceSpan)> {
        let (tok, sp) = self.next();
        let (w, wsp) = match tok {
            Tok::LBracket => {
                let (xs, body) = self.int_list(Tok::RBracket)?;
                let full = sp.join(body);
                if xs.len() != g.rank() {
                    return err(full, format!("weight length {} ≠ rank {}", xs.len(), g.rank()));
                }
                let mut coords = Vec::with_capacity(xs.len());
                for x in xs {
                    match i32::try_from(x) {
                        Ok(v) => coords.push(v),
                        Err(_) => return err(full, "weight coordinate too large"),
                    }
                }
                (Weight::from_slice(&coords), full)
            }
            Tok::Ident(s) if s == "part" => {
                self.expect(Tok::LParen)?;
                let (xs, body) = self.int_list(Tok::RParen)?;
                let full = sp.join(body);
                let parts: Vec<u32> = xs.iter().map(|&x| x.min(u32::MAX as u64) as u32).collect();
                let lambda = Partition::new(parts).map_err(|e| ParseError { span: full, message: e.to_string() })?;
                let Some(flavor) = g.flavor() else {
                    return err(full, format!("part() needs a classical group, not {}", g.classical_name()));
                };
                let w = partition_to_weight(g, &lambda, flavor)
                    .map_err(|e| ParseError { span: full, message: e.to_string() })?;
                (w, full)
            }
            Tok::Ident(s) if s == "std" => {
                let w = match spin {
                    Some(c) => spin_label(g, c).map_err(|e| ParseError { span: sp, message: e.to_string() })?,
                    None => g.standard(),
                };
                (w, sp)
            }
            Tok::Ident(s) if s == "triv" => (Weight::zero(g.rank()), sp),
            t => return err(sp, format!("expected weight, part(…), std or triv, found {}", t.describe())),
        };
        Ok((w, wsp))
    }

    fn file(&mut self) -> PResult<RepDiagram> {
        let (kw, sp) = self.ident("`diagram`")?;
        if kw != "diagram" {
            return err(sp, format!("expected `diagram`, found `{kw}`"));
        }
        let name = match self.next() {
            (Tok::Str(s), _) => s,
            (t, sp) => return err(sp, format!("expected diagram name string, found {}", t.describe())),
        };
        let mut factors: Vec<FactorDecl> = Vec::new();
        while self.keyword("group") {
            self.next();
            let (fname, fsp) = self.ident("factor name")?;
            if factors.iter().any(|f| f.name == fname) {
                return err(fsp, format!("duplicate factor name `{fname}`"));
            }
            self.expect(Tok::Equals)?;
            let (group, spin, _) = self.group_type()?;
            factors.push(FactorDecl { name: fname, group, spin });
        }
        if factors.is_empty() {
            return err(self.span(), "at least one group required");
        }
        let mut subs: Vec<Submodule> = Vec::new();
        while self.keyword("even") || self.keyword("odd") {
            let (kw, _) = self.ident("parity")?;
            let parity = if kw == "even" { Parity::Even } else { Parity::Odd };
            let (sname, ssp) = self.ident("submodule name")?;
            if factors.iter().any(|f| f.name == sname) || subs.iter().any(|s| s.name == sname) {
                return err(ssp, format!("duplicate name `{sname}`"));
            }
            self.expect(Tok::Equals)?;
            let mut weights: Vec<Option<Weight>> = vec![None; factors.len()];
            let mut whole = ssp;
            loop {
                let (fi, w, tsp) = self.term(&factors)?;
                if weights[fi].is_some() {
                    return err(tsp, format!("factor `{}` appears twice in `{sname}`", factors[fi].name));
                }
                if !w.is_dominant() {
                    return err(tsp, format!("weight {w} is not dominant"));
                }
                weights[fi] = Some(w);
                whole = whole.join(tsp);
                if *self.peek() == Tok::Star {
                    self.next();
                    continue;
                }
                break;
            }
            let mut dual = false;
            if *self.peek() == Tok::Caret {
                let c = self.next().1;
                let s = self.expect(Tok::Star)?;
                whole = whole.join(c.join(s));
                dual = true;
            }
            let weights: Vec<Weight> = weights
                .into_iter()
                .zip(&factors)
                .map(|(w, f)| w.unwrap_or_else(|| Weight::zero(f.group.rank())))
                .collect();
            if weights.iter().all(|w| w.is_zero()) {
                return err(whole, format!("submodule `{sname}` is trivial on every factor"));
            }
            subs.push(Submodule { name: sname, parity, weights, dual });
        }
        if subs.is_empty() {
            return err(self.span(), "at least one submodule required");
        }
        if *self.peek() != Tok::Eof {
            let (t, sp) = self.next();
            return err(sp, format!("expected `even`, `odd` or end of input, found {}", t.describe()));
        }
        let factors = factors.into_iter().map(|f| Factor { name: f.name, group: f.group }).collect();
        RepDiagram::new(&name, factors, subs).map_err(|e| ParseError { span: self.span(), message: e.to_string() })
    }
}

/// Parses one diagram; LF and CRLF line endings are both accepted.
pub fn parse_diagram(text: &str) -> Result<RepDiagram, ParseError> {
    let toks = Lexer { src: text, pos: 0, line: 1, col: 1 }.tokens()?;
    Parser { toks, i: 0 }.file()
}

/// Reads a highest weight for a product group: one `[…]`, `part(…)`, `std` or
/// `triv` per factor, joined by `*`.
pub fn parse_label(group: &ProductGroup, text: &str) -> Result<Weight, ParseError> {
    let toks = Lexer { src: text, pos: 0, line: 1, col: 1 }.tokens()?;
    let mut p = Parser { toks, i: 0 };
    let mut parts = Vec::new();
    for (i, &g) in group.factors().iter().enumerate() {
        if i > 0 {
            p.expect(Tok::Star)?;
        }
        let (w, sp) = p.weight(g, None)?;
        if !w.is_dominant() {
            return err(sp, format!("weight {w} is not dominant"));
        }
        parts.push(w);
    }
    if *p.peek() != Tok::Eof {
        let (t, sp) = p.next();
        let what = if t == Tok::Star { "more factors than the group has".to_string() } else { t.describe() };
        return err(sp, format!("unexpected {what}"));
    }
    Ok(Weight::concat(&parts))
}

fn quote(s: &str) -> String {
    let mut out = String::from('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn render_weight(g: GroupType, w: &Weight) -> String {
    if *w == g.standard() {
        return "std".into();
    }
    let parts: Vec<String> = w.coords().iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Canonical text: header, factors, then submodules, in declaration order.
pub fn render_diagram(d: &RepDiagram) -> String {
    let mut out = format!("diagram {}\n", quote(d.name()));
    for f in d.factors() {
        out.push_str(&format!("group {} = {}\n", f.name, f.group.classical_name()));
    }
    for s in d.submodules() {
        let terms: Vec<String> = s
            .weights
            .iter()
            .zip(d.factors())
            .filter(|(w, _)| !w.is_zero())
            .map(|(w, f)| format!("{}:{}", f.name, render_weight(f.group, w)))
            .collect();
        out.push_str(&format!("{} {} = {}", s.parity, s.name, terms.join(" * ")));
        if s.dual {
            out.push_str(" ^*");
        }
        out.push('\n');
    }
    out
}
