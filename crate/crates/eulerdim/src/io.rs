//! Context files: Burmeister CXT and a plain CSV cross table.

use std::path::Path;

use eulerdim_core::FormalContext;

use crate::error::{parse_error, Error, Result};

struct Cursor<'a> {
    lines: Vec<&'a str>,
    at: usize,
}

impl<'a> Cursor<'a> {
    /// Next line and its 1-based number.
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let line = self.at + 1;
        let l = self.lines.get(self.at).ok_or_else(|| parse_error(line, format!("unexpected end of file, expected {what}")))?;
        self.at += 1;
        Ok((line, l))
    }

    fn next_non_blank(&mut self, what: &str) -> Result<(usize, &'a str)> {
        loop {
            let (line, l) = self.next(what)?;
            if !l.is_empty() {
                return Ok((line, l));
            }
        }
    }
}

/// Parses Burmeister CXT text.
///
/// Blank lines are accepted after the `B` header line and after the two
/// counts. Incidence rows use `X`/`x` for a cross and `.` for none; trailing
/// whitespace and `\r` are ignored.
pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    let mut cur = Cursor { lines: text.lines().map(str::trim_end).collect(), at: 0 };
    let (line, header) = cur.next("`B` header")?;
    if header != "B" {
        return Err(parse_error(line, format!("expected `B`, found `{header}`")));
    }
    let count = |(line, l): (usize, &str), what: &str| -> Result<usize> {
        l.trim().parse().map_err(|_| parse_error(line, format!("expected the number of {what}, found `{l}`")))
    };
    let ng = count(cur.next_non_blank("object count")?, "objects")?;
    let nm = count(cur.next("attribute count")?, "attributes")?;
    let mut names = Vec::with_capacity(ng + nm);
    for i in 0..ng + nm {
        let what = if i < ng { "object name" } else { "attribute name" };
        let (_, name) = if i == 0 { cur.next_non_blank(what)? } else { cur.next(what)? };
        names.push(name.to_string());
    }
    let attributes = names.split_off(ng);
    let objects = names;
    let mut rows = Vec::with_capacity(ng);
    for name in &objects {
        let (line, row) = cur.next("incidence row")?;
        let cells = row
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(true),
                '.' => Ok(false),
                other => Err(parse_error(line, format!("illegal incidence character `{other}`"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if cells.len() != nm {
            return Err(parse_error(line, format!("row for `{name}` has {} entries, expected {nm}", cells.len())));
        }
        rows.push(cells);
    }
    while cur.at < cur.lines.len() {
        let (line, rest) = cur.next("")?;
        if !rest.is_empty() {
            return Err(parse_error(line, "trailing content after the incidence rows"));
        }
    }
    FormalContext::new(objects, attributes, &rows).map_err(|e| parse_error(1, e.to_string()))
}

/// Canonical CXT text: one blank line after `B` and after the counts,
/// crosses as `X`.
pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = format!("B\n\n{}\n{}\n\n", ctx.n_objects(), ctx.n_attributes());
    for name in ctx.objects().iter().chain(ctx.attributes()) {
        out.push_str(name);
        out.push('\n');
    }
    for g in 0..ctx.n_objects() {
        out.extend((0..ctx.n_attributes()).map(|m| if ctx.incident(g, m) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}

/// Parses a CSV cross table: the header row names the attributes (its first
/// cell is ignored), each further row starts with an object name followed by
/// `1`/`0` cells.
pub fn parse_csv(text: &str) -> Result<FormalContext> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
    let mut records = reader.records();
    let csv_error = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        parse_error(line, e.to_string())
    };
    let Some(header) = records.next() else {
        return Ok(FormalContext::empty());
    };
    let header = header.map_err(csv_error)?;
    let attributes: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();
    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in records {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != attributes.len() + 1 {
            return Err(parse_error(line, format!("{} cells, expected {}", record.len(), attributes.len() + 1)));
        }
        objects.push(record[0].trim().to_string());
        let cells = record
            .iter()
            .skip(1)
            .map(|c| match c.trim() {
                "1" => Ok(true),
                "0" => Ok(false),
                other => Err(parse_error(line, format!("illegal cell `{other}`, expected 1 or 0"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        rows.push(cells);
    }
    FormalContext::new(objects, attributes, &rows).map_err(|e| parse_error(1, e.to_string()))
}

/// Reads a `.cxt` or `.csv` file, chosen by extension.
pub fn read_context(path: &Path) -> Result<FormalContext> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::File { path: path.to_path_buf(), source })?;
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("cxt") => parse_cxt(&text),
        Some("csv") => parse_csv(&text),
        other => Err(Error::Format(other.unwrap_or("").to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_context() {
        let ctx = parse_cxt("B\n\n0\n0\n").unwrap();
        assert_eq!((ctx.n_objects(), ctx.n_attributes()), (0, 0));
        assert_eq!(parse_cxt(&write_cxt(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn single_cross() {
        let ctx = FormalContext::new(vec!["g".into()], vec!["m".into()], &[vec![true]]).unwrap();
        let text = write_cxt(&ctx);
        assert_eq!(text, "B\n\n1\n1\n\ng\nm\nX\n");
        assert_eq!(parse_cxt(&text).unwrap(), ctx);
    }

    #[test]
    fn tolerant_of_missing_blank_lines_and_crlf() {
        let ctx = parse_cxt("B\r\n1\r\n2\r\ng\r\na\r\nb\r\nx.\r\n").unwrap();
        assert!(ctx.incident(0, 0) && !ctx.incident(0, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |t: &str| match parse_cxt(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("A\n"), 1);
        assert_eq!(line("B\n\nzwei\n1\n"), 3);
        assert_eq!(line("B\n\n1\n2\n\ng\na\nb\nX\n"), 9);
        assert_eq!(line("B\n\n1\n2\n\ng\na\nb\nXo\n"), 9);
        assert_eq!(line("B\n\n2\n1\n\ng\nh\na\nX\n"), 10);
        assert_eq!(line("B\n\n1\n1\n\ng\na\nX\nextra\n"), 9);
    }

    #[test]
    fn csv_table() {
        let ctx = parse_csv("name,a,b\ng,1,0\nh, 0 , 1\n").unwrap();
        assert_eq!(ctx.attributes(), ["a", "b"]);
        assert_eq!(ctx.to_matrix(), vec![vec![true, false], vec![false, true]]);
        assert!(matches!(parse_csv("n,a\ng,2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_csv("n,a\ng,1,1\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_csv("").unwrap(), FormalContext::empty());
    }
}
