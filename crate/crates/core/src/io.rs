//! Text matrix files.
//!
//! Sparse form (the one written):
//!
//! ```text
//! R C M
//! i j v        one line per nonzero entry, 1-based, row-major order
//! 0 0 0        terminator
//! ```
//!
//! Dense form, accepted on read: a `R C D` header followed by `R` lines of
//! `C` decimal entries. Blank lines are ignored.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub fn read_matrix<R: Read>(reader: R) -> Result<ExactMatrix> {
    let mut lines = BufReader::new(reader)
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l))
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()));

    let (line_no, header) = match lines.next() {
        Some((n, l)) => (n, l?),
        None => return Err(Error::parse(1, "empty input, expected a `R C M` header")),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(
            line_no,
            format!("malformed header `{header}`"),
        ));
    }
    let rows = parse_count(fields[0], line_no)?;
    let cols = parse_count(fields[1], line_no)?;
    let mut m = ExactMatrix::zeros(rows, cols);

    match fields[2] {
        "M" => {
            let mut seen = HashSet::new();
            let mut last_line = line_no;
            loop {
                let Some((n, line)) = lines.next() else {
                    return Err(Error::parse(
                        last_line + 1,
                        "truncated input, missing `0 0 0` terminator",
                    ));
                };
                let line = line?;
                last_line = n;
                let t: Vec<&str> = line.split_whitespace().collect();
                if t.len() != 3 {
                    return Err(Error::parse(n, format!("expected `i j v`, got `{line}`")));
                }
                let i = parse_count(t[0], n)?;
                let j = parse_count(t[1], n)?;
                let v = parse_int(t[2], n)?;
                if i == 0 && j == 0 {
                    if !v.is_zero() {
                        return Err(Error::parse(n, "terminator must be `0 0 0`"));
                    }
                    break;
                }
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(Error::parse(
                        n,
                        format!("entry ({i}, {j}) outside a {rows}x{cols} matrix"),
                    ));
                }
                if !seen.insert((i, j)) {
                    return Err(Error::parse(n, format!("duplicate entry ({i}, {j})")));
                }
                m.set(i - 1, j - 1, v);
            }
        }
        "D" => {
            for i in 0..rows {
                let Some((n, line)) = lines.next() else {
                    return Err(Error::parse(
                        line_no + i + 1,
                        format!("truncated input, expected {rows} rows"),
                    ));
                };
                let line = line?;
                let t: Vec<&str> = line.split_whitespace().collect();
                if t.len() != cols {
                    return Err(Error::parse(
                        n,
                        format!("expected {cols} entries, got {}", t.len()),
                    ));
                }
                for (j, tok) in t.iter().enumerate() {
                    m.set(i, j, parse_int(tok, n)?);
                }
            }
        }
        other => {
            return Err(Error::parse(
                line_no,
                format!("unknown matrix kind `{other}`, expected M or D"),
            ))
        }
    }

    if let Some((n, line)) = lines.next() {
        let line = line?;
        return Err(Error::parse(
            n,
            format!("unexpected trailing content `{line}`"),
        ));
    }
    Ok(m)
}

pub fn write_matrix<W: Write>(m: &ExactMatrix, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{} {} M", m.rows(), m.cols())?;
    for (i, j, v) in m.iter_row_major() {
        if !v.is_zero() {
            writeln!(w, "{} {} {}", i + 1, j + 1, v)?;
        }
    }
    writeln!(w, "0 0 0")?;
    w.flush()?;
    Ok(())
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<ExactMatrix> {
    read_matrix(File::open(path)?)
}

pub fn write_matrix_file(m: &ExactMatrix, path: impl AsRef<Path>) -> Result<()> {
    write_matrix(m, File::create(path)?)
}

/// The sparse text form as a string.
pub fn matrix_to_string(m: &ExactMatrix) -> String {
    let mut buf = Vec::new();
    write_matrix(m, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a nonnegative count, got `{tok}`")))
}

fn parse_int(tok: &str, line: usize) -> Result<BigInt> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            line,
            format!("expected an integer, got `{tok}`"),
        ));
    }
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected an integer, got `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(s: &str) -> Result<ExactMatrix> {
        read_matrix(s.as_bytes())
    }

    #[test]
    fn sparse_diagonal() {
        let m = read("4 5 M\n1 1 1\n2 2 3\n3 3 9\n0 0 0\n").unwrap();
        assert_eq!(m, ExactMatrix::from_diagonal(4, 5, &[1, 3, 9]));
    }

    #[test]
    fn dense_form() {
        let m = read("2 3 D\n1 -2 3\n0 0 40000000000000000000000\n").unwrap();
        assert_eq!(m.get(0, 1), &BigInt::from(-2));
        assert_eq!(
            m.get(1, 2),
            &"40000000000000000000000".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn writer_is_row_major_sparse() {
        let m = ExactMatrix::from_rows(&[[0, -7], [5, 0]]);
        assert_eq!(matrix_to_string(&m), "2 2 M\n1 2 -7\n2 1 5\n0 0 0\n");
    }

    #[test]
    fn too_many_triples() {
        let text = "2 3 M\n1 1 1\n1 2 1\n1 3 1\n2 1 1\n2 2 1\n2 3 1\n2 3 5\n0 0 0\n";
        match read(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        let cases = [
            ("", 1),
            ("2 3\n", 1),
            ("2 3 X\n0 0 0\n", 1),
            ("2 3 M\n1 1 1\n", 3),
            ("2 3 M\n3 1 1\n0 0 0\n", 2),
            ("2 3 M\n1 1 1x\n0 0 0\n", 2),
            ("2 3 M\n1 1\n0 0 0\n", 2),
            ("2 3 M\n0 0 0\n1 1 1\n", 3),
            ("2 2 D\n1 2\n3\n", 3),
            ("2 2 D\n1 2\n", 3),
        ];
        for (text, line) in cases {
            match read(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }
}
