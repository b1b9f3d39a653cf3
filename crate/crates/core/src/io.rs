//! Line-based complex file format.
//!
//! ```text
//! complex <name>
//! vertex <id>
//! edge <id> <from> <to>
//! face <id> <+edge|-edge ...>
//! ```
//!
//! `#` starts a comment. Serialization writes vertices, edges and faces in
//! that order, each sorted by identifier.

use std::fmt::Write as _;

use crate::complex::{validate_complex, EdgeSpec, FaceSpec, TwoComplex};
use crate::error::{Error, Result};

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

fn ident(token: &str, line: usize) -> Result<String> {
    if is_identifier(token) {
        Ok(token.to_string())
    } else {
        Err(Error::Parse {
            line,
            message: format!("invalid identifier `{token}`"),
        })
    }
}

/// Parses without checking closedness or immersion.
pub fn parse_complex(text: &str) -> Result<TwoComplex> {
    let mut name: Option<String> = None;
    let mut vertices = Vec::new();
    let mut edges: Vec<EdgeSpec> = Vec::new();
    let mut faces: Vec<FaceSpec> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::Parse {
                    line,
                    message: format!("`{keyword}` expects {n} arguments, found {}", args.len()),
                })
            }
        };
        match keyword {
            "complex" => {
                arity(1)?;
                if name.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `complex` header".into(),
                    });
                }
                name = Some(ident(args[0], line)?);
            }
            "vertex" => {
                arity(1)?;
                vertices.push(ident(args[0], line)?);
            }
            "edge" => {
                arity(3)?;
                edges.push((ident(args[0], line)?, ident(args[1], line)?, ident(args[2], line)?));
            }
            "face" => {
                if args.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        message: "`face` expects an identifier and at least one letter".into(),
                    });
                }
                let word = args[1..]
                    .iter()
                    .map(|tok| {
                        let (forward, rest) = match tok.as_bytes().first() {
                            Some(b'+') => (true, &tok[1..]),
                            Some(b'-') => (false, &tok[1..]),
                            _ => {
                                return Err(Error::Parse {
                                    line,
                                    message: format!("letter `{tok}` must start with + or -"),
                                })
                            }
                        };
                        Ok((ident(rest, line)?, forward))
                    })
                    .collect::<Result<Vec<_>>>()?;
                faces.push((ident(args[0], line)?, word));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown keyword `{other}`"),
                })
            }
        }
    }
    let name = name.ok_or(Error::Parse {
        line: 1,
        message: "missing `complex <name>` header".into(),
    })?;
    TwoComplex::new(name, vertices, edges, faces)
}

/// Parses and validates: every boundary word must be closed and immersed.
pub fn load_complex(text: &str) -> Result<TwoComplex> {
    let x = parse_complex(text)?;
    let report = validate_complex(&x, false);
    if let Some(w) = report.witnesses.first() {
        let cell = w
            .strip_prefix("face ")
            .and_then(|s| s.split(':').next())
            .unwrap_or("?")
            .to_string();
        return Err(Error::Validation {
            cell,
            message: w.clone(),
        });
    }
    Ok(x)
}

/// Canonical text form.
pub fn serialize_complex(x: &TwoComplex) -> String {
    let mut out = String::new();
    writeln!(out, "complex {}", x.name()).unwrap();
    for v in x.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for e in x.edges() {
        writeln!(out, "edge {} {} {}", e.id, x.vertex_id(e.from), x.vertex_id(e.to)).unwrap();
    }
    for face in x.faces() {
        write!(out, "face {}", face.id).unwrap();
        for l in face.word.letters() {
            let sign = if l.forward { '+' } else { '-' };
            write!(out, " {sign}{}", x.edge_id(l.edge)).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_file() {
        let x = load_complex("complex point\nvertex p\n").unwrap();
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (1, 0, 0));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a loop\ncomplex loop\n\nvertex a # base\nedge e a a\nface F +e\n";
        let x = load_complex(text).unwrap();
        assert_eq!(x.face_count(), 1);
        assert_eq!(serialize_complex(&x), "complex loop\nvertex a\nedge e a a\nface F +e\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = load_complex("complex x\nvertex a\nedge e a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = load_complex("complex x\nvertex a!\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = load_complex("vertex a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn backtracking_face_is_a_validation_error() {
        let err = load_complex("complex x\nvertex a\nvertex b\nedge e a b\nface F +e -e\n").unwrap_err();
        match err {
            Error::Validation { cell, message } => {
                assert_eq!(cell, "F");
                assert!(message.contains("immersion"));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unclosed_face_is_a_validation_error() {
        let err = load_complex("complex x\nvertex a\nvertex b\nvertex c\nedge e a b\nedge f b c\nface F +e +f\n")
            .unwrap_err();
        assert!(matches!(err, Error::Validation { .. }));
    }

    #[test]
    fn serialization_sorts_cells() {
        let text = "complex t\nvertex b\nvertex a\nedge y b a\nedge x a b\nface G +x +y\n";
        let x = load_complex(text).unwrap();
        let s = serialize_complex(&x);
        assert_eq!(
            s,
            "complex t\nvertex a\nvertex b\nedge x a b\nedge y b a\nface G +x +y\n"
        );
        assert_eq!(serialize_complex(&load_complex(&s).unwrap()), s);
    }
}
