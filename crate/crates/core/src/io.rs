//! Edge-list text format: header `n d m`, then one edge per line as
//! space-separated ascending vertex ids.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::hypergraph::{BuildError, Hypergraph};

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: vertices must be ascending, got {edge:?}")]
    NotAscending { line: usize, edge: Vec<u32> },
    #[error("header declares {declared} edges but file has {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Hypergraph, ReadError> {
    let mut lines = reader.lines().enumerate();
    let (n, d, m) = loop {
        match lines.next() {
            None => {
                return Err(ReadError::Format {
                    line: 0,
                    message: "missing header".into(),
                })
            }
            Some((idx, line)) => {
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(ReadError::Format {
                        line: idx + 1,
                        message: format!("header must be `n d m`, got {trimmed:?}"),
                    });
                }
                let parse = |s: &str| -> Result<u64, ReadError> {
                    s.parse().map_err(|_| ReadError::Format {
                        line: idx + 1,
                        message: format!("invalid integer {s:?}"),
                    })
                };
                break (parse(fields[0])? as u32, parse(fields[1])? as u32, parse(fields[2])? as usize);
            }
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut edge = Vec::with_capacity(d as usize);
        for field in trimmed.split_whitespace() {
            edge.push(field.parse::<u32>().map_err(|_| ReadError::Format {
                line: idx + 1,
                message: format!("invalid vertex id {field:?}"),
            })?);
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ReadError::NotAscending {
                line: idx + 1,
                edge,
            });
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(ReadError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Hypergraph::build(n, d, &edges)?)
}

/// Writes the canonical form: edges in colex order, ascending ids per line.
pub fn write_edge_list<W: Write>(mut writer: W, h: &Hypergraph) -> std::io::Result<()> {
    let n = h.vertices().last().copied().unwrap_or(0);
    writeln!(writer, "{} {} {}", n, h.d(), h.edge_count())?;
    for e in h.edges() {
        let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        writeln!(writer, "{}", parts.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let h = Hypergraph::build(6, 3, &[vec![1, 2, 3], vec![2, 4, 6], vec![3, 4, 5]]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &h).unwrap();
        let g = read_edge_list(&buf[..]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn rejects_like_build() {
        let text = "5 3 2\n1 2 3\n1 2 3\n";
        match read_edge_list(text.as_bytes()) {
            Err(ReadError::Build(BuildError::DuplicateEdge { edge })) => {
                assert_eq!(edge, vec![1, 2, 3])
            }
            other => panic!("expected duplicate edge rejection, got {other:?}"),
        }
        let text = "5 3 1\n3 2 1\n";
        assert!(matches!(
            read_edge_list(text.as_bytes()),
            Err(ReadError::NotAscending { .. })
        ));
        let text = "5 3 1\n1 2 6\n";
        assert!(matches!(
            read_edge_list(text.as_bytes()),
            Err(ReadError::Build(BuildError::VertexOutOfRange { vertex: 6, .. }))
        ));
    }

    #[test]
    fn edge_count_must_match_header() {
        let text = "5 3 2\n1 2 3\n";
        assert!(matches!(
            read_edge_list(text.as_bytes()),
            Err(ReadError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn writer_is_deterministic() {
        let h = Hypergraph::build(6, 3, &[vec![3, 4, 5], vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let mut a = Vec::new();
        write_edge_list(&mut a, &h).unwrap();
        let mut b = Vec::new();
        write_edge_list(&mut b, &h).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            String::from_utf8(a).unwrap(),
            "6 3 3\n1 2 3\n3 4 5\n2 4 6\n"
        );
    }
}
