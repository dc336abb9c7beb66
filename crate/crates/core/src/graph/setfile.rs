//! Plain-text vertex set files: one vertex per line as `i j k`, lines
//! starting with `#` are comments, blank lines are skipped.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::set::VertexSet;
use crate::graph::vertex::Vertex;

/// Parses vertices in file order. Labels may appear in any order on a line
/// but must be distinct and positive.
pub fn parse_vertices<R: BufRead>(reader: R) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<u32> = trimmed
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>().map_err(|e| Error::Parse {
                    line: lineno,
                    message: format!("bad label {t:?}: {e}"),
                })
            })
            .collect::<Result<_>>()?;
        let [a, b, c] = fields[..] else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 labels, found {}", fields.len()),
            });
        };
        let v = Vertex::new(a, b, c).map_err(|_| Error::Parse {
            line: lineno,
            message: format!("labels {a} {b} {c} are not three distinct positive integers"),
        })?;
        out.push(v);
    }
    Ok(out)
}

/// Reads a set file. With `n = None` the ground set is the largest label
/// seen (at least 3).
pub fn read_set<R: BufRead>(reader: R, n: Option<u32>) -> Result<VertexSet> {
    let vertices = parse_vertices(reader)?;
    let n = n.unwrap_or_else(|| {
        vertices
            .iter()
            .map(Vertex::max_elem)
            .max()
            .unwrap_or(3)
            .max(3)
    });
    VertexSet::from_vertices(n, vertices)
}

/// Writes members in colex order, preceded by a one-line comment header.
pub fn write_set<W: Write>(mut writer: W, set: &VertexSet) -> Result<()> {
    writeln!(
        writer,
        "# G({},3,1) vertex set, {} vertices",
        set.n(),
        set.len()
    )?;
    for v in set.iter() {
        writeln!(writer, "{v}")?;
    }
    writer.flush()?;
    Ok(())
}
