//! Text forms of complexes and Chow classes.
//!
//! Complex grammar, whitespace-insensitive:
//!
//! ```text
//! complex := "0" "->" sum ("->" sum)* "->" name "->" "0"
//! sum     := term (("+" | "⊕") term)*
//! term    := [count] atom
//! atom    := "O" ["(" int ")"] | "T" ["(" int ")"] | "Om" ["(" int ")"]
//! ```
//!
//! `->` may also be written `→`. The leftmost sum is the highest homological
//! position; the sum next to `name` is position 0. The printer writes the
//! canonical form `0 -> O(-3) -> 4O -> E -> 0`.

use std::fmt;

use num_bigint::BigInt;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::sheaf::{FreeComplex, SheafAtom, SheafSum};

impl fmt::Display for FreeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("0")?;
        for term in self.terms().iter().rev() {
            write!(f, " -> {term}")?;
        }
        write!(f, " -> {} -> 0", self.presented())
    }
}

/// Parses a complex on `P^dim`.
pub fn parse_complex(text: &str, dim: usize) -> Result<FreeComplex> {
    parse_complex_at(text, dim, 1, 0)
}

/// Parses with error positions reported relative to `line` and shifted by `column_offset`.
pub fn parse_complex_at(text: &str, dim: usize, line: usize, column_offset: usize) -> Result<FreeComplex> {
    let chars: Vec<char> = text.chars().collect();
    let err = |col: usize, msg: String| Error::parse(line, column_offset + col + 1, msg);

    // split on arrows, remembering where each segment starts
    let mut segments: Vec<(usize, String)> = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < chars.len() {
        let arrow_len = if chars[i] == '→' {
            1
        } else if chars[i] == '-' && chars.get(i + 1) == Some(&'>') {
            2
        } else {
            0
        };
        if arrow_len > 0 {
            segments.push((start, chars[start..i].iter().collect()));
            i += arrow_len;
            start = i;
        } else {
            i += 1;
        }
    }
    segments.push((start, chars[start..].iter().collect()));

    if segments.len() < 4 {
        return Err(err(0, "expected `0 -> <sum> -> ... -> <name> -> 0`".into()));
    }
    let (first_at, first) = &segments[0];
    if first.trim() != "0" {
        return Err(err(
            first_at + leading_ws(first),
            "complex must start with `0 ->`".into(),
        ));
    }
    let (last_at, last) = &segments[segments.len() - 1];
    if last.trim() != "0" {
        return Err(err(last_at + leading_ws(last), "complex must end with `-> 0`".into()));
    }
    let (name_at, name) = &segments[segments.len() - 2];
    let name = name.trim();
    if name.is_empty() || name == "0" {
        return Err(err(*name_at, "missing name of the presented sheaf".into()));
    }

    let mut written = Vec::new();
    for (at, seg) in &segments[1..segments.len() - 2] {
        written.push(parse_sum(seg, dim).map_err(|(col, msg)| err(at + col, msg))?);
    }
    FreeComplex::from_written(dim, written, name).map_err(|e| match e {
        Error::UnsupportedAtom { .. } | Error::ZeroDimension => err(0, e.to_string()),
        other => other,
    })
}

fn leading_ws(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

/// Parses one `+`-separated sum. Errors carry the column within `seg`.
fn parse_sum(seg: &str, dim: usize) -> std::result::Result<SheafSum, (usize, String)> {
    let chars: Vec<char> = seg.chars().collect();
    let mut p = Cursor { chars: &chars, pos: 0 };
    let mut sum = SheafSum::new();
    p.skip_ws();
    if p.at_end() {
        return Err((p.pos, "empty term".into()));
    }
    loop {
        p.skip_ws();
        let term_at = p.pos;
        let (atom, mult) = parse_term(&mut p)?;
        atom.check_dim(dim).map_err(|e| (term_at, e.to_string()))?;
        sum.add(atom, mult);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('+') | Some('⊕') => {
                p.pos += 1;
            }
            Some(c) => return Err((p.pos, format!("unexpected `{c}`"))),
        }
    }
    Ok(sum)
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }
}

fn parse_term(p: &mut Cursor<'_>) -> std::result::Result<(SheafAtom, u64), (usize, String)> {
    let at = p.pos;
    if p.peek() == Some('-') {
        return Err((at, "negative multiplicity".into()));
    }
    let mult = match p.digits() {
        Some(d) => {
            let m: u64 = d
                .parse()
                .map_err(|_| (at, format!("multiplicity `{d}` is too large")))?;
            if m == 0 {
                return Err((at, "multiplicity must be positive".into()));
            }
            p.skip_ws();
            m
        }
        None => 1,
    };
    let kind_at = p.pos;
    let rest: String = p.chars[p.pos..].iter().take(2).collect();
    let make: fn(i64) -> SheafAtom = if rest.starts_with("Om") {
        p.pos += 2;
        SheafAtom::cotangent
    } else if rest.starts_with('O') {
        p.pos += 1;
        SheafAtom::line
    } else if rest.starts_with('T') {
        p.pos += 1;
        SheafAtom::tangent
    } else {
        return Err((kind_at, "expected `O`, `T` or `Om`".into()));
    };
    p.skip_ws();
    let mut twist = 0i64;
    if p.peek() == Some('(') {
        p.pos += 1;
        p.skip_ws();
        let sign_at = p.pos;
        let negative = match p.peek() {
            Some('-') => {
                p.pos += 1;
                true
            }
            Some('+') => {
                p.pos += 1;
                false
            }
            _ => false,
        };
        p.skip_ws();
        let d = p.digits().ok_or((sign_at, "expected an integer twist".to_string()))?;
        twist = d.parse().map_err(|_| (sign_at, format!("twist `{d}` is too large")))?;
        if negative {
            twist = -twist;
        }
        p.skip_ws();
        if p.peek() != Some(')') {
            return Err((p.pos, "expected `)`".into()));
        }
        p.pos += 1;
    }
    Ok((make(twist), mult))
}

/// Reads a Chow class written either as `1 + 3h + 9h^2 + 27h^3` or as a
/// coefficient list `1 3 9 27` (commas allowed).
pub fn parse_chow_class(text: &str, dim: usize) -> Result<ChowClass> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(1, 1, "empty class"));
    }
    if !compact.contains('h') {
        let coeffs = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::parse(1, 1, format!("bad coefficient `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        return ChowClass::new(dim, coeffs);
    }

    let chars: Vec<char> = compact.chars().collect();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut p = Cursor { chars: &chars, pos: 0 };
    while !p.at_end() {
        let at = p.pos;
        let negative = match p.peek() {
            Some('-') => {
                p.pos += 1;
                true
            }
            Some('+') => {
                p.pos += 1;
                false
            }
            _ if at == 0 => false,
            _ => return Err(Error::parse(1, at + 1, "expected `+` or `-`")),
        };
        let num = p.digits();
        let mut power = 0usize;
        if p.peek() == Some('h') {
            p.pos += 1;
            power = 1;
            if p.peek() == Some('^') {
                p.pos += 1;
                let d = p
                    .digits()
                    .ok_or_else(|| Error::parse(1, p.pos + 1, "expected exponent"))?;
                power = d.parse().map_err(|_| Error::parse(1, p.pos + 1, "bad exponent"))?;
            }
        } else if num.is_none() {
            return Err(Error::parse(1, at + 1, "expected a term"));
        }
        let mut c: BigInt = num
            .map(|d| d.parse().expect("ascii digits"))
            .unwrap_or_else(|| BigInt::from(1));
        if negative {
            c = -c;
        }
        if power > dim {
            return Err(Error::TooManyCoefficients { dim, got: power + 1 });
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::from(0));
        }
        coeffs[power] += c;
    }
    ChowClass::new(dim, coeffs)
}
