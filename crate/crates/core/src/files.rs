//! Text formats for presentations, monoid tables, Y-sequences and cycles.
//!
//! Presentation files are line-oriented UTF-8 with `#` comments: a
//! `format: presentation/v1` header, a `kind: group` or `kind: monoid`
//! line, a letter declaration, and a block of relators or rules. Monoid
//! tables are CSV with a header row of element names and row i column j
//! holding the index of i·j. Y-sequences use the literal
//! `[(u; r; +1), ...]` and 1-chains a JSON object with an `edges` array.
//!
//! Parsers report 1-based line and column positions; serializers emit a
//! canonical form, so parsing and reprinting a valid file only normalizes
//! whitespace and drops comments.

use num_bigint::BigInt;
use thiserror::Error;

use crate::actions::{FiniteMonoid, MonoidError};
use crate::chains::FormalSum;
use crate::graph::{Edge, Sign};
use crate::peiffer::{RelatorId, YSequence, YSymbol};
use crate::pride::GroupPresentation;
use crate::rewriting::{RewritingSystem, RuleId, SystemError};
use crate::words::{Alphabet, AlphabetError, Letter, Word};

/// A parse failure at a 1-based line and column.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {kind}")]
pub struct FileError {
    pub line: usize,
    pub col: usize,
    pub kind: FileErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileErrorKind {
    #[error("expected `format: presentation/v1`")]
    BadHeader,
    #[error("expected `kind: group` or `kind: monoid`")]
    BadKind,
    #[error("expected `{0}:`")]
    MissingSection(&'static str),
    #[error("expected a word literal")]
    ExpectedWord,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("`1` denotes the empty word and cannot be declared or mixed with letters")]
    ReservedEmptyToken,
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("empty relator")]
    EmptyRelator,
    #[error("relator is not freely reduced")]
    UnreducedRelator,
    #[error("rule line needs a `->` separator")]
    MissingArrow,
    #[error("{0}")]
    BadRule(String),
    #[error("expected a number")]
    BadNumber,
    #[error("index {index} is out of range, {len} {what} declared")]
    BadIndex { index: usize, len: usize, what: &'static str },
    #[error("{0}")]
    BadTable(String),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("the alphabet has no inverse pairing")]
    UnpairedAlphabet,
    #[error("{0}")]
    BadJson(String),
    #[error("unexpected trailing content")]
    TrailingContent,
}

fn err(line: usize, col: usize, kind: FileErrorKind) -> FileError {
    FileError { line, col, kind }
}

/// A parsed presentation file of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Group(GroupPresentation),
    Monoid(RewritingSystem),
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect()
}

fn token_spans(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn col_at(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Splits `key: value`, returning the value slice and its byte offset.
fn key_value<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let rest = line.trim_start().strip_prefix(key)?.trim_start_matches(' ');
    let rest = rest.strip_prefix(':')?;
    Some((rest, line.len() - rest.len()))
}

fn expect_key<'a>(
    lines: &[(usize, &'a str)],
    i: usize,
    key: &'static str,
    eof_line: usize,
) -> Result<(usize, &'a str, usize), FileError> {
    match lines.get(i) {
        None => Err(err(eof_line, 1, FileErrorKind::MissingSection(key))),
        Some(&(no, line)) => match key_value(line, key) {
            Some((value, off)) => Ok((no, value, off)),
            None => Err(err(no, 1, FileErrorKind::MissingSection(key))),
        },
    }
}

/// Parses a word literal occupying `value` at byte `offset` of `line`.
fn parse_word_at(
    al: &Alphabet,
    value: &str,
    offset: usize,
    line: &str,
    line_no: usize,
) -> Result<Word, FileError> {
    let spans = token_spans(value);
    if spans.is_empty() {
        return Err(err(line_no, col_at(line, offset), FileErrorKind::ExpectedWord));
    }
    if spans.len() == 1 && spans[0].1 == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(spans.len());
    for (off, tok) in spans {
        let col = col_at(line, offset + off);
        if tok == "1" {
            return Err(err(line_no, col, FileErrorKind::ReservedEmptyToken));
        }
        match al.letter(tok) {
            Some(l) => letters.push(l),
            None => {
                return Err(err(line_no, col, FileErrorKind::UnknownLetter(tok.to_string())));
            }
        }
    }
    Ok(Word::from_letters(letters))
}

fn alphabet_error(
    e: AlphabetError,
    value: &str,
    offset: usize,
    line: &str,
    line_no: usize,
) -> FileError {
    let find = |needle: &str, nth: usize| {
        token_spans(value)
            .into_iter()
            .filter(|(_, t)| *t == needle)
            .nth(nth)
            .map(|(off, _)| col_at(line, offset + off))
            .unwrap_or(1)
    };
    match e {
        AlphabetError::DuplicateToken(t) => {
            let col = find(&t, 1);
            err(line_no, col, FileErrorKind::DuplicateLetter(t))
        }
        AlphabetError::ReservedToken(t) => err(line_no, find(&t, 0), FileErrorKind::ReservedEmptyToken),
        other => err(line_no, 1, FileErrorKind::BadTable(other.to_string())),
    }
}

/// Parses a presentation file of either kind.
pub fn parse_presentation(text: &str) -> Result<Presentation, FileError> {
    let lines = significant_lines(text);
    let eof_line = text.lines().count().max(1);
    let header = lines
        .first()
        .ok_or(err(1, 1, FileErrorKind::BadHeader))
        .and_then(|&(no, line)| match key_value(line, "format") {
            Some((v, _)) if v.trim() == "presentation/v1" => Ok(()),
            _ => Err(err(no, 1, FileErrorKind::BadHeader)),
        });
    header?;
    let kind = match lines.get(1) {
        Some(&(no, line)) => match key_value(line, "kind") {
            Some((v, _)) => match v.trim() {
                "group" => "group",
                "monoid" => "monoid",
                _ => return Err(err(no, 1, FileErrorKind::BadKind)),
            },
            None => return Err(err(no, 1, FileErrorKind::BadKind)),
        },
        None => return Err(err(eof_line, 1, FileErrorKind::BadKind)),
    };
    if kind == "group" {
        parse_group(&lines, eof_line)
    } else {
        parse_monoid(&lines, eof_line)
    }
}

fn parse_group(lines: &[(usize, &str)], eof_line: usize) -> Result<Presentation, FileError> {
    let (g_no, g_value, g_off) = expect_key(lines, 2, "generators", eof_line)?;
    let tokens: Vec<&str> = token_spans(g_value).into_iter().map(|(_, t)| t).collect();
    let g_line = lines[2].1;
    let al = Alphabet::free_group(&tokens)
        .map_err(|e| alphabet_error(e, g_value, g_off, g_line, g_no))?;
    let (r_no, r_value, _) = expect_key(lines, 3, "relators", eof_line)?;
    if !r_value.trim().is_empty() {
        return Err(err(r_no, 1, FileErrorKind::TrailingContent));
    }
    let mut relators = Vec::new();
    let mut relator_lines = Vec::new();
    let mut i = 4;
    while let Some(&(no, line)) = lines.get(i) {
        if key_value(line, "distinguished").is_some() {
            break;
        }
        let w = parse_word_at(&al, line, 0, line, no)?;
        let spans = token_spans(line);
        if w.is_empty() {
            return Err(err(no, col_at(line, spans[0].0), FileErrorKind::EmptyRelator));
        }
        if let Some(j) = (0..w.len() - 1)
            .find(|&j| al.inverse_letter(w.letters()[j]) == Some(w.letters()[j + 1]))
        {
            return Err(err(no, col_at(line, spans[j + 1].0), FileErrorKind::UnreducedRelator));
        }
        relators.push(w);
        relator_lines.push(no);
        i += 1;
    }
    let mut distinguished = None;
    if let Some(&(no, line)) = lines.get(i) {
        let (value, off) = key_value(line, "distinguished").expect("loop exit condition");
        let col = col_at(line, off + value.len() - value.trim_start().len());
        let index: usize =
            value.trim().parse().map_err(|_| err(no, col, FileErrorKind::BadNumber))?;
        if index >= relators.len() {
            let kind =
                FileErrorKind::BadIndex { index, len: relators.len(), what: "relators" };
            return Err(err(no, col, kind));
        }
        distinguished = Some(index);
        i += 1;
    }
    if let Some(&(no, _)) = lines.get(i) {
        return Err(err(no, 1, FileErrorKind::TrailingContent));
    }
    let g = GroupPresentation::new(al, relators, distinguished)
        .expect("relators validated during parsing");
    Ok(Presentation::Group(g))
}

fn parse_monoid(lines: &[(usize, &str)], eof_line: usize) -> Result<Presentation, FileError> {
    let (l_no, l_value, l_off) = expect_key(lines, 2, "letters", eof_line)?;
    let tokens: Vec<&str> = token_spans(l_value).into_iter().map(|(_, t)| t).collect();
    let l_line = lines[2].1;
    let al = Alphabet::new(&tokens)
        .map_err(|e| alphabet_error(e, l_value, l_off, l_line, l_no))?;
    let (_, r_value, _) = expect_key(lines, 3, "rules", eof_line)?;
    if !r_value.trim().is_empty() {
        let (no, _) = lines[3];
        return Err(err(no, 1, FileErrorKind::TrailingContent));
    }
    let mut pairs = Vec::new();
    let mut rule_lines = Vec::new();
    for &(no, line) in &lines[4.min(lines.len())..] {
        let spans = token_spans(line);
        let arrow = spans.iter().position(|&(_, t)| t == "->").ok_or(err(
            no,
            spans.first().map_or(1, |&(off, _)| col_at(line, off)),
            FileErrorKind::MissingArrow,
        ))?;
        let (arrow_off, _) = spans[arrow];
        let lhs = parse_word_at(&al, &line[..arrow_off], 0, line, no)?;
        let rhs_off = arrow_off + 2;
        let rhs = parse_word_at(&al, &line[rhs_off..], rhs_off, line, no)?;
        pairs.push((lhs, rhs));
        rule_lines.push(no);
    }
    let sys = RewritingSystem::new(al, &pairs).map_err(|e| {
        let at = |id: RuleId| rule_lines.get(id.0 as usize).copied().unwrap_or(1);
        match e {
            SystemError::EqualSides(id) | SystemError::DuplicateRule(id) => {
                err(at(id), 1, FileErrorKind::BadRule(e.to_string()))
            }
            other => err(1, 1, FileErrorKind::BadRule(other.to_string())),
        }
    })?;
    Ok(Presentation::Monoid(sys))
}

/// Prints a presentation in canonical form. For group presentations one
/// token per inverse pair is listed as a generator.
pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = String::from("format: presentation/v1\n");
    match p {
        Presentation::Group(g) => {
            let al = g.alphabet();
            let gens: Vec<&str> = (0..al.len() as Letter)
                .filter(|&l| al.inverse_letter(l).expect("paired") > l)
                .map(|l| al.token(l))
                .collect();
            out.push_str("kind: group\n");
            out.push_str(&format!("generators: {}\n", gens.join(" ")));
            out.push_str("relators:\n");
            for r in g.relators() {
                out.push_str(&format!("  {}\n", al.format_word(r)));
            }
            if let Some(d) = g.distinguished() {
                out.push_str(&format!("distinguished: {d}\n"));
            }
        }
        Presentation::Monoid(m) => {
            let al = m.alphabet();
            out.push_str("kind: monoid\n");
            out.push_str(&format!("letters: {}\n", al.tokens().join(" ")));
            out.push_str("rules:\n");
            for rule in m.rules() {
                out.push_str(&format!(
                    "  {} -> {}\n",
                    al.format_word(&rule.lhs),
                    al.format_word(&rule.rhs)
                ));
            }
        }
    }
    out
}

fn csv_fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in line.char_indices() {
        if c == ',' {
            out.push((start, &line[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &line[start..]));
    out
}

/// Parses a monoid multiplication table from CSV with a header row of
/// element names.
pub fn parse_monoid_table(text: &str) -> Result<FiniteMonoid, FileError> {
    let lines = significant_lines(text);
    let eof_line = text.lines().count().max(1);
    let &(h_no, header) = lines.first().ok_or(err(1, 1, FileErrorKind::Expected("a header row of element names")))?;
    let mut names = Vec::new();
    for (off, field) in csv_fields(header) {
        let name = field.trim();
        if name.is_empty() {
            return Err(err(h_no, col_at(header, off), FileErrorKind::Expected("an element name")));
        }
        names.push(name.to_string());
    }
    let n = names.len();
    if lines.len() < n + 1 {
        let msg = format!("{} table rows for {} elements", lines.len() - 1, n);
        return Err(err(eof_line, 1, FileErrorKind::BadTable(msg)));
    }
    if lines.len() > n + 1 {
        return Err(err(lines[n + 1].0, 1, FileErrorKind::TrailingContent));
    }
    let mut rows = Vec::with_capacity(n);
    for &(no, line) in &lines[1..] {
        let fields = csv_fields(line);
        if fields.len() != n {
            let msg = format!("row has {} entries, expected {}", fields.len(), n);
            return Err(err(no, 1, FileErrorKind::BadTable(msg)));
        }
        let mut row = Vec::with_capacity(n);
        for (off, field) in fields {
            let lead = field.len() - field.trim_start().len();
            let col = col_at(line, off + lead);
            let v: usize =
                field.trim().parse().map_err(|_| err(no, col, FileErrorKind::BadNumber))?;
            if v >= n {
                return Err(err(no, col, FileErrorKind::BadIndex { index: v, len: n, what: "elements" }));
            }
            row.push(v);
        }
        rows.push(row);
    }
    FiniteMonoid::new(names.clone(), rows).map_err(|e| match e {
        MonoidError::DuplicateName(name) => {
            let col = csv_fields(header)
                .into_iter()
                .filter(|(_, f)| f.trim() == name)
                .nth(1)
                .map(|(off, f)| col_at(header, off + f.len() - f.trim_start().len()))
                .unwrap_or(1);
            err(h_no, col, FileErrorKind::DuplicateLetter(name))
        }
        other => err(h_no, 1, FileErrorKind::BadTable(other.to_string())),
    })
}

/// Prints a monoid table as CSV in canonical form.
pub fn serialize_monoid_table(m: &FiniteMonoid) -> String {
    let mut out = m.names().join(",");
    out.push('\n');
    for a in 0..m.len() {
        let row: Vec<String> = (0..m.len()).map(|b| m.mul(a, b).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

struct Cursor {
    chars: Vec<(char, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        let mut chars = Vec::with_capacity(text.len());
        let (mut line, mut col) = (1, 1);
        for c in text.chars() {
            chars.push((c, line, col));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Cursor { chars, pos: 0, end: (line, col) }
    }

    fn here(&self) -> (usize, usize) {
        self.chars.get(self.pos).map_or(self.end, |&(_, l, c)| (l, c))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _, _)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), FileError> {
        let (line, col) = self.here();
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(err(line, col, FileErrorKind::Expected(what)))
        }
    }
}

/// Parses the Y-sequence literal `[(u; r; +1), ...]` over a paired
/// alphabet with `n_relators` relators declared.
pub fn parse_y_sequence(
    al: &Alphabet,
    n_relators: u32,
    text: &str,
) -> Result<YSequence, FileError> {
    if !al.has_pairing() {
        return Err(err(1, 1, FileErrorKind::UnpairedAlphabet));
    }
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    cur.expect('[', "`[`")?;
    cur.skip_ws();
    let mut seq = Vec::new();
    if cur.peek() != Some(']') {
        loop {
            seq.push(parse_y_symbol(al, n_relators, &mut cur)?);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => {
                    cur.bump();
                    cur.skip_ws();
                }
                Some(']') => break,
                _ => {
                    let (line, col) = cur.here();
                    return Err(err(line, col, FileErrorKind::Expected("`,` or `]`")));
                }
            }
        }
    }
    cur.expect(']', "`]`")?;
    cur.skip_ws();
    if cur.peek().is_some() {
        let (line, col) = cur.here();
        return Err(err(line, col, FileErrorKind::TrailingContent));
    }
    Ok(seq)
}

fn parse_y_symbol(al: &Alphabet, n_relators: u32, cur: &mut Cursor) -> Result<YSymbol, FileError> {
    cur.expect('(', "`(`")?;
    let mut word_chars: Vec<(char, usize, usize)> = Vec::new();
    loop {
        match cur.peek() {
            Some(';') => break,
            Some(_) => word_chars.push(cur.chars[cur.pos]),
            None => {
                let (line, col) = cur.here();
                return Err(err(line, col, FileErrorKind::Expected("`;`")));
            }
        }
        cur.bump();
    }
    let u = parse_positioned_word(al, &word_chars, cur.here())?;
    cur.expect(';', "`;`")?;
    cur.skip_ws();
    let (d_line, d_col) = cur.here();
    let mut digits = String::new();
    while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        digits.push(cur.bump().expect("digit peeked"));
    }
    if digits.is_empty() {
        return Err(err(d_line, d_col, FileErrorKind::Expected("a relator index")));
    }
    let r: u32 = digits.parse().map_err(|_| err(d_line, d_col, FileErrorKind::BadNumber))?;
    if r >= n_relators {
        let kind = FileErrorKind::BadIndex {
            index: r as usize,
            len: n_relators as usize,
            what: "relators",
        };
        return Err(err(d_line, d_col, kind));
    }
    cur.skip_ws();
    cur.expect(';', "`;`")?;
    cur.skip_ws();
    let (s_line, s_col) = cur.here();
    let sign = match (cur.bump(), cur.bump()) {
        (Some('+'), Some('1')) => Sign::Plus,
        (Some('-'), Some('1')) => Sign::Minus,
        _ => return Err(err(s_line, s_col, FileErrorKind::Expected("`+1` or `-1`"))),
    };
    cur.skip_ws();
    cur.expect(')', "`)`")?;
    Ok(YSymbol::new(al, &u, RelatorId(r), sign))
}

/// Parses a word from positioned characters, reporting errors at the
/// recorded positions.
fn parse_positioned_word(
    al: &Alphabet,
    chars: &[(char, usize, usize)],
    fallback: (usize, usize),
) -> Result<Word, FileError> {
    let mut tokens: Vec<(String, usize, usize)> = Vec::new();
    let mut in_token = false;
    for &(c, line, col) in chars {
        if c.is_whitespace() {
            in_token = false;
        } else if in_token {
            tokens.last_mut().expect("token started").0.push(c);
        } else {
            tokens.push((c.to_string(), line, col));
            in_token = true;
        }
    }
    if tokens.is_empty() {
        return Err(err(fallback.0, fallback.1, FileErrorKind::ExpectedWord));
    }
    if tokens.len() == 1 && tokens[0].0 == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for (tok, line, col) in tokens {
        if tok == "1" {
            return Err(err(line, col, FileErrorKind::ReservedEmptyToken));
        }
        match al.letter(&tok) {
            Some(l) => letters.push(l),
            None => return Err(err(line, col, FileErrorKind::UnknownLetter(tok))),
        }
    }
    Ok(Word::from_letters(letters))
}

/// Prints a Y-sequence in canonical literal form.
pub fn serialize_y_sequence(al: &Alphabet, seq: &YSequence) -> String {
    let items: Vec<String> = seq
        .iter()
        .map(|s| {
            let sign = match s.sign {
                Sign::Plus => "+1",
                Sign::Minus => "-1",
            };
            format!("({}; {}; {})", al.format_word(&s.u), s.r.0, sign)
        })
        .collect();
    format!("[{}]", items.join(", "))
}

fn json_err(msg: String) -> FileError {
    err(1, 1, FileErrorKind::BadJson(msg))
}

/// Parses a 1-chain from JSON: an object with an `edges` array whose items
/// carry `left`, `rule`, `sign`, `right` and a decimal `coeff`.
pub fn parse_cycle(sys: &RewritingSystem, text: &str) -> Result<FormalSum<Edge>, FileError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        err(e.line().max(1), e.column().max(1), FileErrorKind::BadJson(e.to_string()))
    })?;
    let edges = value
        .get("edges")
        .and_then(|e| e.as_array())
        .ok_or_else(|| json_err("expected a top-level object with an `edges` array".into()))?;
    let al = sys.alphabet();
    let mut terms = Vec::with_capacity(edges.len());
    for (i, item) in edges.iter().enumerate() {
        let at = |field: &str| format!("edges[{i}].{field}");
        let obj = item
            .as_object()
            .ok_or_else(|| json_err(format!("edges[{i}] must be an object")))?;
        let word_field = |field: &str| -> Result<Word, FileError> {
            let s = obj
                .get(field)
                .and_then(|v| v.as_str())
                .ok_or_else(|| json_err(format!("{} must be a word string", at(field))))?;
            al.parse_word(s).map_err(|e| json_err(format!("{}: {e}", at(field))))
        };
        let left = word_field("left")?;
        let right = word_field("right")?;
        let rule = obj
            .get("rule")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| json_err(format!("{} must be a rule index", at("rule"))))?;
        if rule > u32::MAX as u64 || !sys.contains_rule(RuleId(rule as u32)) {
            return Err(json_err(format!("{}: no rule {rule}", at("rule"))));
        }
        let sign = match obj.get("sign").and_then(|v| v.as_i64()) {
            Some(1) => Sign::Plus,
            Some(-1) => Sign::Minus,
            _ => return Err(json_err(format!("{} must be 1 or -1", at("sign")))),
        };
        let coeff = match obj.get("coeff") {
            Some(serde_json::Value::String(s)) => s
                .parse::<BigInt>()
                .map_err(|_| json_err(format!("{} must be a decimal integer", at("coeff"))))?,
            Some(serde_json::Value::Number(n)) => match n.as_i64() {
                Some(v) => BigInt::from(v),
                None => {
                    return Err(json_err(format!("{} must be a decimal integer", at("coeff"))))
                }
            },
            _ => return Err(json_err(format!("{} must be a decimal integer", at("coeff")))),
        };
        let edge = Edge { left, rule: RuleId(rule as u32), sign, right };
        terms.push((edge, coeff));
    }
    Ok(FormalSum::from_terms(terms))
}

/// Prints a 1-chain as deterministic JSON with coefficients as decimal
/// strings.
pub fn serialize_cycle(sys: &RewritingSystem, z: &FormalSum<Edge>) -> String {
    let al = sys.alphabet();
    let edges: Vec<serde_json::Value> = z
        .iter()
        .map(|(e, c)| {
            serde_json::json!({
                "left": al.format_word(&e.left),
                "rule": e.rule.0,
                "sign": e.sign.as_int(),
                "right": al.format_word(&e.right),
                "coeff": c.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "edges": edges }))
        .expect("serializing plain data")
}
