use super::IoError;
use crate::graph::Graph;

/// Reads `"n m"` followed by `m` lines `"u v"`. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let malformed = |line: usize, reason: &str| IoError::Malformed {
        line,
        reason: reason.to_string(),
    };

    let (first, header) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| malformed(first, "expected \"n m\""))?;
    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        if pairs.len() == m {
            return Err(malformed(line, "more edges than declared"));
        }
        pairs.push(parse_pair(text).ok_or_else(|| malformed(line, "expected \"u v\""))?);
    }
    if pairs.len() != m {
        return Err(malformed(first, "fewer edges than declared"));
    }
    Ok(Graph::from_edges(n, &pairs)?)
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// Writes the header line and the edges in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;
    use crate::graph::GraphError;

    #[test]
    fn examples() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap().edges(), &[(0, 1)]);
        assert_eq!(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap(), cycle(4).unwrap());
        assert!(matches!(
            parse_edge_list("3 1\n0 5"),
            Err(IoError::Graph(GraphError::VertexOutOfRange { vertex: 5, n: 3 }))
        ));
    }

    #[test]
    fn malformed() {
        for bad in ["", "3", "3 2\n0 1", "2 1\n0 1\n1 0", "2 1\n0 x", "2 1\n0 1 2"] {
            assert!(parse_edge_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn writer_sorts() {
        let g = cycle(4).unwrap();
        assert_eq!(write_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
