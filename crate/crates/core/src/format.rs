//! File formats for ASMs.
//!
//! Text: a line holding `n`, then `n` lines of `n` whitespace-separated
//! entries from `{-1, 0, 1}`. Several matrices in one file are separated by
//! blank lines. Lines starting with `#` are comments.
//!
//! JSON: one object per ASM,
//! `{"n": 3, "entries": [[0,1,0],[1,-1,1],[0,1,0]], "stats": {...}}`, where
//! the optional `stats` holds `blue` and `green` partner arrays (label `i`
//! at index `i - 1`) and the loop count `cycles`.

use crate::error::{Error, Result};
use crate::grid::Asm;
use crate::paths::{statistics, PairingStats};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub fn write_text(a: &Asm) -> String {
    let mut out = format!("{}\n", a.n());
    for row in a.rows() {
        let line: Vec<String> = row.iter().map(i8::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn write_text_many<'a>(asms: impl IntoIterator<Item = &'a Asm>) -> String {
    asms.into_iter()
        .map(write_text)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses exactly one ASM.
pub fn parse_text(src: &str) -> Result<Asm> {
    let mut all = parse_text_many(src)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no matrix found".into(),
        }),
        k => Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected one matrix, found {k}"),
        }),
    }
}

pub fn parse_text_many(src: &str) -> Result<Vec<Asm>> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .peekable();
    let mut out = Vec::new();
    while let Some((ln, header)) = lines.next() {
        let col = header.len() - header.trim_start().len() + 1;
        let n: usize = header.trim().parse().map_err(|_| Error::Parse {
            line: ln,
            column: col,
            message: format!("expected the order n, found {:?}", header.trim()),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: ln,
                column: col,
                message: "order must be at least 1".into(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            let (rl, row) = lines.next().ok_or_else(|| Error::Parse {
                line: ln + r + 1,
                column: 1,
                message: format!("expected row {} of {n}, found end of input", r + 1),
            })?;
            let mut count = 0;
            for (column, tok) in tokens(row) {
                let v: i8 = match tok {
                    "1" | "+1" => 1,
                    "0" => 0,
                    "-1" => -1,
                    _ => {
                        return Err(Error::Parse {
                            line: rl,
                            column,
                            message: format!("entry {tok:?} is not -1, 0 or 1"),
                        })
                    }
                };
                count += 1;
                if count > n {
                    return Err(Error::Parse {
                        line: rl,
                        column,
                        message: format!("row has more than {n} entries"),
                    });
                }
                entries.push(v);
            }
            if count < n {
                return Err(Error::Parse {
                    line: rl,
                    column: row.len() + 1,
                    message: format!("row has {count} entries, expected {n}"),
                });
            }
        }
        let a = Asm::new(n, entries).map_err(|e| Error::Parse {
            line: ln,
            column: col,
            message: e.to_string(),
        })?;
        out.push(a);
    }
    Ok(out)
}

/// Whitespace-separated tokens with 1-based column numbers.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        offset += skip;
        rest = &rest[skip..];
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let col = offset + 1;
        offset += end;
        rest = &rest[end..];
        Some((col, tok))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsmRecord {
    pub n: usize,
    pub entries: Vec<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<PairingStats>,
}

impl AsmRecord {
    pub fn new(a: &Asm, with_stats: bool) -> Self {
        AsmRecord {
            n: a.n(),
            entries: a.rows(),
            stats: with_stats.then(|| statistics(a)),
        }
    }

    pub fn to_asm(&self) -> Result<Asm> {
        let a = Asm::from_rows(&self.entries)?;
        if a.n() != self.n {
            return Err(Error::InvalidAsm(format!(
                "declared order {} but matrix has order {}",
                self.n,
                a.n()
            )));
        }
        Ok(a)
    }
}

pub fn to_json(a: &Asm, with_stats: bool) -> String {
    serde_json::to_string(&AsmRecord::new(a, with_stats)).expect("record serializes")
}

pub fn from_json(src: &str) -> Result<Asm> {
    let rec: AsmRecord = serde_json::from_str(src).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    rec.to_asm()
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_any(src: &str) -> Result<Asm> {
    if src.trim_start().starts_with('{') {
        from_json(src)
    } else {
        parse_text(src)
    }
}
