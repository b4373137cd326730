use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// p <n> <m>
/// <u> <v>      (m lines, 0-based)
/// ```
///
/// Duplicate edges collapse. Self-loops, out-of-range indices, malformed
/// lines and an edge count different from `m` are errors naming the line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    let mut seen = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                if tokens.len() != 3 || tokens[0] != "p" {
                    return Err(Error::parse(line, "expected header `p <n> <m>`"));
                }
                let n = number(tokens[1], line)?;
                declared = number(tokens[2], line)?;
                graph = Some(Graph::empty(n));
            }
            Some(g) => {
                if tokens.len() != 2 {
                    return Err(Error::parse(line, "expected an edge `<u> <v>`"));
                }
                let u = number(tokens[0], line)?;
                let v = number(tokens[1], line)?;
                if u >= g.n() || v >= g.n() {
                    return Err(Error::parse(
                        line,
                        format!("vertex index out of range 0..{}", g.n()),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at vertex {u}")));
                }
                seen += 1;
                if seen > declared {
                    return Err(Error::parse(
                        line,
                        format!("more edge lines than the declared {declared}"),
                    ));
                }
                g.insert_edge(u, v);
            }
        }
    }

    let g = graph.ok_or_else(|| Error::parse(last_line.max(1), "missing header `p <n> <m>`"))?;
    if seen != declared {
        return Err(Error::parse(
            last_line.max(1),
            format!("declared {declared} edges but found {seen}"),
        ));
    }
    Ok(g)
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn path_on_four() {
        let g = parse_edge_list("p 4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, named::path(4));
    }

    #[test]
    fn edgeless_pair() {
        let g = parse_edge_list("p 2 0\n").unwrap();
        assert_eq!(g, Graph::empty(2));
    }

    #[test]
    fn triangle_with_comments() {
        let g = parse_edge_list("# K3\n\np 3 3\n0 1\n# mid\n1 2\n  0   2 \n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("p 3 3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("p 3 1\n0 0\n", 2),
            ("p 3 1\n0 3\n", 2),
            ("p 3 1\n0 x\n", 2),
            ("p 3\n", 1),
            ("p 3 2\n0 1\n", 2),
            ("p 3 1\n0 1\n1 2\n", 3),
            ("0 1\n", 1),
        ];
        for (text, want) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn round_trip_through_text() {
        let g = named::petersen();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
