//! Serialization: the rotation-text interchange format, planar_code export,
//! DOT export, and JSON views.
//!
//! Rotation text is the canonical bit-exact format:
//!
//! ```text
//! n=<vertices> e=<edges>
//! v<i>: d_a d_b d_c d_d
//! ...
//! e<j>: d_x d_y
//! ...
//! ```
//!
//! with one `v` line per vertex listing its dart ids counterclockwise and
//! one `e` line per edge giving the involution pair, UTF-8 with LF endings.
//! Records concatenate; blank lines between them are ignored.

use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

/// Emits one map in rotation-text form.
pub fn emit_rotation_text(m: &PlanarMap) -> String {
    let mut out = String::new();
    out.push_str(&format!("n={} e={}\n", m.vertex_count(), m.edge_count()));
    for v in 0..m.vertex_count() as u32 {
        out.push_str(&format!("v{v}:"));
        for d in m.vertex_darts(v) {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
    }
    let mut j = 0usize;
    for d in 0..m.dart_count() as u32 {
        if d < m.twin(d) {
            out.push_str(&format!("e{j}: {} {}\n", d, m.twin(d)));
            j += 1;
        }
    }
    out
}

/// Parses a single rotation-text record.
pub fn parse_rotation_text(text: &str) -> Result<PlanarMap> {
    let mut maps = parse_rotation_text_stream(text)?;
    match maps.len() {
        1 => Ok(maps.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 1,
            msg: "no map record found".into(),
        }),
        _ => Err(Error::Parse {
            line: 1,
            msg: "expected a single map record".into(),
        }),
    }
}

/// Parses a concatenation of rotation-text records.
pub fn parse_rotation_text_stream(text: &str) -> Result<Vec<PlanarMap>> {
    let mut maps = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some(&(lineno, line)) = lines.peek() {
        if line.trim().is_empty() {
            lines.next();
            continue;
        }
        let header = line.trim();
        let (nv, ne) = parse_header(header, lineno + 1)?;
        lines.next();
        let mut rotation_lists: Vec<Vec<u32>> = Vec::with_capacity(nv);
        let mut pairing = vec![u32::MAX; 2 * ne];
        let mut seen_darts = vec![false; 2 * ne];
        for v in 0..nv {
            let (lineno, line) = lines.next().ok_or(Error::Parse {
                line: lineno + 1,
                msg: format!("missing vertex line v{v}"),
            })?;
            let darts = parse_prefixed(line, 'v', v, lineno + 1)?;
            for &d in &darts {
                if d as usize >= 2 * ne {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("dart id {d} out of range (2e = {})", 2 * ne),
                    });
                }
                if seen_darts[d as usize] {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("dart {d} appears twice"),
                    });
                }
                seen_darts[d as usize] = true;
            }
            rotation_lists.push(darts);
        }
        for e in 0..ne {
            let (lineno, line) = lines.next().ok_or(Error::Parse {
                line: lineno + 1,
                msg: format!("missing edge line e{e}"),
            })?;
            let pair = parse_prefixed(line, 'e', e, lineno + 1)?;
            if pair.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: "edge line must list exactly two darts".into(),
                });
            }
            let (a, b) = (pair[0], pair[1]);
            for &d in &[a, b] {
                if d as usize >= 2 * ne || pairing[d as usize] != u32::MAX {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("dart {d} out of range or paired twice"),
                    });
                }
            }
            if a == b {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("edge e{e} pairs dart {a} with itself"),
                });
            }
            pairing[a as usize] = b;
            pairing[b as usize] = a;
        }
        maps.push(PlanarMap::build(&rotation_lists, &pairing)?);
    }
    Ok(maps)
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let mut nv = None;
    let mut ne = None;
    for part in line.split_whitespace() {
        if let Some(v) = part.strip_prefix("n=") {
            nv = Some(v.parse().map_err(|_| err(format!("bad vertex count {v:?}")))?);
        } else if let Some(e) = part.strip_prefix("e=") {
            ne = Some(e.parse().map_err(|_| err(format!("bad edge count {e:?}")))?);
        } else {
            return Err(err(format!("unexpected token {part:?} in header")));
        }
    }
    match (nv, ne) {
        (Some(nv), Some(ne)) => Ok((nv, ne)),
        _ => Err(err("header must read n=<vertices> e=<edges>".into())),
    }
}

fn parse_prefixed(line: &str, prefix: char, index: usize, lineno: usize) -> Result<Vec<u32>> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let line = line.trim();
    let (head, rest) = line
        .split_once(':')
        .ok_or_else(|| err(format!("expected {prefix}{index}: ...")))?;
    if head.trim() != format!("{prefix}{index}") {
        return Err(err(format!(
            "expected line label {prefix}{index}, found {:?}",
            head.trim()
        )));
    }
    rest.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| err(format!("bad dart id {tok:?}"))))
        .collect()
}

/// planar_code stream header.
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Encodes simple maps in planar_code: one byte for the vertex count, then
/// for each vertex its clockwise neighbor list as 1-based bytes terminated
/// by a zero. Multigraphs and maps past 255 vertices are refused.
pub fn emit_planar_code(m: &PlanarMap) -> Result<Vec<u8>> {
    if m.has_multi_edge() || m.has_loop() {
        return Err(Error::PlanarCodeUnsupported(
            "planar_code cannot disambiguate parallel edges".into(),
        ));
    }
    if m.vertex_count() > 255 {
        return Err(Error::PlanarCodeUnsupported(format!(
            "vertex count {} exceeds one byte",
            m.vertex_count()
        )));
    }
    let mut out = vec![m.vertex_count() as u8];
    for v in 0..m.vertex_count() as u32 {
        let first = m.vertex_first_darts()[v as usize];
        let mut d = first;
        loop {
            out.push(m.vertex_of(m.twin(d)) as u8 + 1);
            d = m.rot_inv(d);
            if d == first {
                break;
            }
        }
        out.push(0);
    }
    Ok(out)
}

/// DOT rendering of the underlying graph; the embedding is not preserved.
pub fn emit_dot(m: &PlanarMap) -> String {
    let mut out = String::from("graph {\n");
    for d in 0..m.dart_count() as u32 {
        if d < m.twin(d) {
            out.push_str(&format!(
                "  v{} -- v{};\n",
                m.vertex_of(d),
                m.vertex_of(m.twin(d))
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// JSON view of a map: vertex count, edge list and ccw rotations.
pub fn map_to_json(m: &PlanarMap) -> serde_json::Value {
    let rotations: Vec<Vec<u32>> = (0..m.vertex_count() as u32)
        .map(|v| m.vertex_darts(v).collect())
        .collect();
    let edges: Vec<(u32, u32)> = (0..m.dart_count() as u32)
        .filter(|&d| d < m.twin(d))
        .map(|d| (d, m.twin(d)))
        .collect();
    serde_json::json!({
        "n": m.vertex_count(),
        "e": m.edge_count(),
        "rotations": rotations,
        "edges": edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::pmap::fixtures::*;

    #[test]
    fn rotation_text_round_trip() {
        for m in [octahedron(), tetrahedron(), two_one(), bundle(2)] {
            let text = emit_rotation_text(&m);
            let back = parse_rotation_text(&text).unwrap();
            assert!(is_isomorphic(&back, &m));
            // idempotent on canonical forms
            let canon = m.canonical_form();
            let text1 = emit_rotation_text(&canon);
            let again = parse_rotation_text(&text1).unwrap().canonical_form();
            assert_eq!(emit_rotation_text(&again), text1);
        }
    }

    #[test]
    fn stream_round_trip() {
        let text = format!(
            "{}\n{}",
            emit_rotation_text(&octahedron()),
            emit_rotation_text(&two_one())
        );
        let maps = parse_rotation_text_stream(&text).unwrap();
        assert_eq!(maps.len(), 2);
        assert!(is_isomorphic(&maps[0], &octahedron()));
        assert!(is_isomorphic(&maps[1], &two_one()));
    }

    #[test]
    fn parse_reports_duplicate_darts_with_line() {
        let bad = "n=2 e=2\nv0: 0 0\nv1: 2 3\ne0: 0 2\ne1: 1 3\n";
        match parse_rotation_text(bad) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("twice"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_fixed_point_edge() {
        let bad = "n=2 e=2\nv0: 0 1\nv1: 2 3\ne0: 0 0\ne1: 1 3\n";
        assert!(parse_rotation_text(bad).is_err());
    }

    #[test]
    fn planar_code_octahedron() {
        let bytes = emit_planar_code(&octahedron()).unwrap();
        assert_eq!(bytes[0], 6);
        // six vertices, each with 4 neighbors and a terminator
        assert_eq!(bytes.len(), 1 + 6 * 5);
    }

    #[test]
    fn planar_code_refuses_multigraphs() {
        assert!(matches!(
            emit_planar_code(&two_one()),
            Err(Error::PlanarCodeUnsupported(_))
        ));
    }

    #[test]
    fn dot_has_all_edges() {
        let dot = emit_dot(&tetrahedron());
        assert_eq!(dot.matches(" -- ").count(), 6);
    }
}
