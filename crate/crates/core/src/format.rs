//! Text formats.
//!
//! Tournament files (`.trn`): the first line is the decimal vertex count `n`,
//! followed by `n` rows of exactly `n` characters over `{0,1}`. Character `j`
//! of row `i` (both 0-based) is `1` iff the arc `i→j` exists. The diagonal is
//! `0`, mirrored off-diagonal positions hold exactly one `1`, and the file
//! ends with a newline. No comments or blank lines.
//!
//! Embedding files:
//!
//! ```text
//! pattern hk
//! k 3
//! branch 4 0 7
//! 1 2 5
//! 1 3 2
//! 2 3 9
//! ```
//!
//! Demand lines are `i j m` with 1-based branch indices and the midpoint
//! vertex id, in lexicographic pair order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::embedding::{Pattern, SubdivisionEmbedding};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub fn write_tournament(t: &Tournament) -> String {
    let n = t.n();
    let mut s = String::with_capacity((n + 1) * (n + 1) + 8);
    let _ = writeln!(s, "{n}");
    for u in 0..n {
        for v in 0..n {
            s.push(if t.has_arc(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

pub fn read_tournament(text: &str) -> Result<Tournament> {
    if !text.ends_with('\n') {
        let last = text.lines().count().max(1);
        return Err(Error::parse(last, 0, "missing trailing newline"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
    let header = lines[0];
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(1, 1, format!("header {header:?} is not a vertex count")))?;
    if n == 0 {
        return Err(Error::parse(1, 1, "vertex count must be at least 1"));
    }
    if lines.len() < n + 1 {
        return Err(Error::parse(
            lines.len() + 1,
            0,
            format!("expected {n} adjacency rows, found {}", lines.len() - 1),
        ));
    }
    if lines.len() > n + 1 {
        return Err(Error::parse(n + 2, 0, "unexpected content after the last row"));
    }

    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        let line_no = i + 2;
        let row = lines[i + 1].as_bytes();
        if row.len() != n {
            return Err(Error::parse(
                line_no,
                0,
                format!("row has {} characters, expected {n}", row.len()),
            ));
        }
        for (j, &c) in row.iter().enumerate() {
            let col = j + 1;
            let bit = match c {
                b'0' => false,
                b'1' => true,
                other => {
                    return Err(Error::parse(
                        line_no,
                        col,
                        format!("unexpected character {:?}", other as char),
                    ))
                }
            };
            if i == j && bit {
                return Err(Error::parse(line_no, col, "diagonal entry must be 0"));
            }
            if j < i && bit == adj[j][i] {
                return Err(Error::parse(
                    line_no,
                    col,
                    format!(
                        "pair {{{j}, {i}}} must carry exactly one arc (found {} in both directions)",
                        if bit { "1" } else { "0" }
                    ),
                ));
            }
            adj[i][j] = bit;
        }
    }
    Tournament::from_adjacency(&adj)
}

pub fn write_embedding(e: &SubdivisionEmbedding) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pattern {}", e.pattern);
    let _ = writeln!(s, "k {}", e.k);
    s.push_str("branch");
    for b in &e.branch {
        let _ = write!(s, " {b}");
    }
    s.push('\n');
    for (&(i, j), &m) in &e.midpoints {
        let _ = writeln!(s, "{} {} {m}", i + 1, j + 1);
    }
    s
}

fn keyword<'a>(line: &'a str, line_no: usize, key: &str) -> Result<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(' ').or(if rest.is_empty() { Some("") } else { None }))
        .ok_or_else(|| Error::parse(line_no, 1, format!("expected a line starting with {key:?}")))
}

fn number(tok: &str, line_no: usize, col: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line_no, col, format!("{tok:?} is not a non-negative integer")))
}

pub fn read_embedding(text: &str) -> Result<SubdivisionEmbedding> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::parse(0, 0, format!("missing {what} line")))
    };

    let (ln, l) = next("pattern")?;
    let pattern: Pattern = keyword(l, ln, "pattern")?
        .trim()
        .parse()
        .map_err(|e: Error| Error::parse(ln, 9, e.to_string()))?;

    let (ln, l) = next("k")?;
    let k = number(keyword(l, ln, "k")?.trim(), ln, 3)?;

    let (ln, l) = next("branch")?;
    let branch = keyword(l, ln, "branch")?
        .split_whitespace()
        .map(|tok| number(tok, ln, 8))
        .collect::<Result<Vec<_>>>()?;
    if branch.len() != k {
        return Err(Error::parse(
            ln,
            1,
            format!("branch line lists {} vertices but k = {k}", branch.len()),
        ));
    }

    let mut midpoints = BTreeMap::new();
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(ln, 1, "demand lines have the form \"i j m\""));
        }
        let i = number(toks[0], ln, 1)?;
        let j = number(toks[1], ln, 1)?;
        let m = number(toks[2], ln, 1)?;
        if i == 0 || j == 0 || i > k || j > k {
            return Err(Error::parse(ln, 1, format!("branch index out of 1..={k}")));
        }
        if midpoints.insert((i - 1, j - 1), m).is_some() {
            return Err(Error::parse(ln, 1, format!("pair ({i}, {j}) listed twice")));
        }
    }
    Ok(SubdivisionEmbedding {
        pattern,
        k,
        branch,
        midpoints,
    })
}
