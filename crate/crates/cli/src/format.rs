//! Text formats for triple systems (`LTS n`) and Lie algebras (`LIE m`).
//!
//! ```text
//! # comment
//! LTS 3
//! 2 3 3 1 1
//! ```
//!
//! An `LTS` entry `i j k l q` sets the coefficient of `e_l` in
//! `(e_i, e_j, e_k)` to `q`, with `i < j`; a `LIE` entry `i j k q` sets the
//! coefficient of `e_k` in `[e_i, e_j]`. Indices are one-based, `q` is `p` or
//! `p/q` in lowest terms with `q > 1`, and zero or duplicate entries are
//! rejected. Output lists entries in lexicographic order.

use std::collections::HashSet;
use std::fmt;

use lts_core::{Grading, LieAlgebra, Rational, Sign, TripleSystem};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// One-based line number; 0 when the input ended early.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-comment, non-blank lines with their one-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_digits(s: &str) -> Option<num_bigint::BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `p` or `p/q` in canonical form.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("invalid rational '{s}'");
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (parse_digits(p).ok_or_else(bad)?, parse_digits(q).ok_or_else(bad)?),
        None => (parse_digits(body).ok_or_else(bad)?, One::one()),
    };
    let canonical_digits = |d: &str| d == "0" || !d.starts_with('0');
    let digits_ok = match body.split_once('/') {
        Some((p, q)) => canonical_digits(p) && canonical_digits(q),
        None => canonical_digits(body),
    };
    if !digits_ok || den.is_zero() {
        return Err(bad());
    }
    let value = Rational::new(if neg { -num.clone() } else { num.clone() }, den.clone());
    if value.denom() != &den || value.numer().abs() != num || (neg && value.is_zero()) {
        return Err(format!("rational '{s}' is not in lowest terms"));
    }
    if body.contains('/') && den.is_one() {
        return Err(format!("rational '{s}' is not in lowest terms"));
    }
    Ok(value)
}

fn parse_header(text: &str, keyword: &str) -> Result<(usize, usize), ParseError> {
    let Some((line, header)) = content_lines(text).next() else {
        return err(0, format!("missing '{keyword} n' header"));
    };
    let mut parts = header.split_whitespace();
    if parts.next() != Some(keyword) {
        return err(line, format!("expected '{keyword} n' header"));
    }
    let dim = match (parts.next().and_then(|d| d.parse::<usize>().ok()), parts.next()) {
        (Some(d), None) => d,
        _ => return err(line, format!("expected '{keyword} n' header")),
    };
    Ok((line, dim))
}

fn parse_indices(line: usize, fields: &[&str], dim: usize) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| match f.parse::<usize>() {
            Ok(i) if (1..=dim).contains(&i) => Ok(i - 1),
            Ok(i) => err(line, format!("index {i} out of range 1..{dim}")),
            Err(_) => err(line, format!("invalid index '{f}'")),
        })
        .collect()
}

pub fn parse_lts(text: &str) -> Result<TripleSystem, ParseError> {
    let (header_line, n) = parse_header(text, "LTS")?;
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (line, content) in content_lines(text).filter(|(l, _)| *l > header_line) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 5 {
            return err(line, "expected 'i j k l q'");
        }
        let idx = parse_indices(line, &fields[..4], n)?;
        if idx[0] >= idx[1] {
            return err(line, "i<j required");
        }
        let q = parse_rational(fields[4]).or_else(|m| err(line, m))?;
        if q.is_zero() {
            return err(line, "zero coefficient");
        }
        if !seen.insert((idx[0], idx[1], idx[2], idx[3])) {
            return err(line, "duplicate entry");
        }
        entries.push((idx[0], idx[1], idx[2], idx[3], q));
    }
    Ok(TripleSystem::from_half_entries(n, entries).expect("indices validated"))
}

pub fn write_lts(t: &TripleSystem) -> String {
    let mut out = format!("LTS {}\n", t.dim());
    for (i, j, k, l, q) in t.half_entries() {
        out.push_str(&format!("{} {} {} {} {}\n", i + 1, j + 1, k + 1, l + 1, q));
    }
    out
}

/// A parsed `LIE` file: the algebra and its optional grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieFile {
    pub algebra: LieAlgebra,
    pub grading: Option<Grading>,
}

pub fn parse_lie(text: &str) -> Result<LieFile, ParseError> {
    let (header_line, m) = parse_header(text, "LIE")?;
    let mut grading = None;
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (line, content) in content_lines(text).filter(|(l, _)| *l > header_line) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields[0] == "GRADE" {
            if grading.is_some() || !entries.is_empty() {
                return err(line, "GRADE must directly follow the header");
            }
            let signs: Result<Vec<Sign>, _> = fields[1..]
                .iter()
                .map(|s| match *s {
                    "+" => Ok(Sign::Plus),
                    "-" => Ok(Sign::Minus),
                    other => err(line, format!("invalid sign '{other}'")),
                })
                .collect();
            let signs = signs?;
            if signs.len() != m {
                return err(line, format!("expected {m} signs, found {}", signs.len()));
            }
            grading = Some(Grading::new(signs));
            continue;
        }
        if fields.len() != 4 {
            return err(line, "expected 'i j k q'");
        }
        let idx = parse_indices(line, &fields[..3], m)?;
        if idx[0] >= idx[1] {
            return err(line, "i<j required");
        }
        let q = parse_rational(fields[3]).or_else(|msg| err(line, msg))?;
        if q.is_zero() {
            return err(line, "zero coefficient");
        }
        if !seen.insert((idx[0], idx[1], idx[2])) {
            return err(line, "duplicate entry");
        }
        entries.push((idx[0], idx[1], idx[2], q));
    }
    Ok(LieFile {
        algebra: LieAlgebra::from_half_entries(m, entries).expect("indices validated"),
        grading,
    })
}

pub fn write_lie(g: &LieAlgebra, grading: Option<&Grading>) -> String {
    let mut out = format!("LIE {}\n", g.dim());
    if let Some(gr) = grading {
        out.push_str(&format!("GRADE {gr}\n"));
    }
    for (i, j, k, q) in g.half_entries() {
        out.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, q));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lts_core::exactla::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3"), Ok(int(3)));
        assert_eq!(parse_rational("-1/4"), Ok(rat(-1, 4)));
        assert_eq!(parse_rational("0"), Ok(int(0)));
        for bad in ["2/4", "1/1", "3/-2", "-0", "+1", "01", "1/0", "x", "", "1.5", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lts_round_trip() {
        let text = "LTS 2\n1 2 1 2 1\n1 2 2 1 -1\n";
        let t = parse_lts(text).unwrap();
        assert_eq!(write_lts(&t), text);
        assert_eq!(t.coefficient(1, 0, 0, 1), &int(-1));
    }

    #[test]
    fn lts_comments_and_order() {
        let t = parse_lts("# spherical\n\nLTS 2\n1 2 2 1 -1\n# body\n1 2 1 2 1\n").unwrap();
        assert_eq!(write_lts(&t), "LTS 2\n1 2 1 2 1\n1 2 2 1 -1\n");
    }

    #[test]
    fn lts_errors() {
        let e = |s: &str| parse_lts(s).unwrap_err().to_string();
        assert_eq!(e("LTS 2\n1 1 2 2 1\n"), "line 2: i<j required");
        assert_eq!(e("LTS 2\n2 1 2 2 1\n"), "line 2: i<j required");
        assert_eq!(e("LTS 2\n1 3 2 2 1\n"), "line 2: index 3 out of range 1..2");
        assert_eq!(e("LTS 2\n1 2 1 2 1\n1 2 1 2 2\n"), "line 3: duplicate entry");
        assert_eq!(e("LTS 2\n1 2 1 2 2/4\n"), "line 2: rational '2/4' is not in lowest terms");
        assert_eq!(e("LTS 2\n1 2 1 2 0\n"), "line 2: zero coefficient");
        assert_eq!(e("LTS 2\n1 2 1 2\n"), "line 2: expected 'i j k l q'");
        assert_eq!(e("LIE 2\n"), "line 1: expected 'LTS n' header");
        assert_eq!(e("# only a comment\n"), "missing 'LTS n' header");
    }

    #[test]
    fn lie_round_trip() {
        let text = "LIE 4\nGRADE - - - +\n2 3 4 1\n3 4 1 -1\n";
        let f = parse_lie(text).unwrap();
        assert_eq!(f.grading, Some(Grading::split(3, 1)));
        assert_eq!(write_lie(&f.algebra, f.grading.as_ref()), text);
        let plain = "LIE 3\n1 2 3 1/2\n";
        let f = parse_lie(plain).unwrap();
        assert_eq!(f.grading, None);
        assert_eq!(write_lie(&f.algebra, None), plain);
    }

    #[test]
    fn lie_errors() {
        let e = |s: &str| parse_lie(s).unwrap_err().to_string();
        assert_eq!(e("LIE 3\nGRADE - +\n"), "line 2: expected 3 signs, found 2");
        assert_eq!(e("LIE 2\nGRADE - *\n"), "line 2: invalid sign '*'");
        assert_eq!(e("LIE 2\n2 1 1 1\n"), "line 2: i<j required");
        assert_eq!(
            e("LIE 2\n1 2 1 1\nGRADE - +\n"),
            "line 3: GRADE must directly follow the header"
        );
    }
}
