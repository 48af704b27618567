//! Plain-text instance formats.
//!
//! Edge lists: a header line `n m` followed by `m` lines `u v` (0-indexed).
//! Interval models: a header line `n` followed by `n` lines `l r`; line
//! `i + 1` holds the interval of vertex `i`.

use std::fmt::Write as _;

use crate::error::{MegError, Result};
use crate::graph::Graph;
use crate::interval::IntervalModel;

fn parse_err(line: usize, msg: impl Into<String>) -> MegError {
    MegError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_fields<T: std::str::FromStr>(line: usize, text: &str, expected: usize) -> Result<Vec<T>> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != expected {
        return Err(parse_err(
            line,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| parse_err(line, format!("invalid integer `{f}`")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let hm = parse_fields::<usize>(hline, header, 2)?;
    let (n, m) = (hm[0], hm[1]);
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        if pairs.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let uv = parse_fields::<usize>(line, text, 2)?;
        pairs.push((uv[0], uv[1]));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {}", pairs.len()),
        ));
    }
    // report structural problems against the offending line
    Graph::from_edge_list(n, &pairs).map_err(|e| {
        let idx = match &e {
            MegError::SelfLoop(v) => pairs.iter().position(|&(a, b)| a == *v && b == *v),
            MegError::VertexOutOfRange { vertex, .. } => pairs
                .iter()
                .position(|&(a, b)| a == *vertex || b == *vertex),
            MegError::DuplicateEdge(a, b) => pairs
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| (x.min(y), x.max(y)) == (*a, *b))
                .nth(1)
                .map(|(i, _)| i),
            _ => None,
        };
        match idx {
            Some(i) => {
                let line = content_lines(text).nth(i + 1).map_or(0, |(l, _)| l);
                parse_err(line, e.to_string())
            }
            None => e,
        }
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<IntervalModel> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n`"))?;
    let n = parse_fields::<usize>(hline, header, 1)?[0];
    let mut intervals = Vec::with_capacity(n);
    for (line, text) in lines {
        if intervals.len() == n {
            return Err(parse_err(
                line,
                format!("more than the declared {n} intervals"),
            ));
        }
        let lr = parse_fields::<i64>(line, text, 2)?;
        if lr[0] > lr[1] {
            return Err(parse_err(
                line,
                format!("left endpoint {} exceeds right endpoint {}", lr[0], lr[1]),
            ));
        }
        intervals.push((lr[0], lr[1]));
    }
    if intervals.len() != n {
        return Err(parse_err(
            hline,
            format!("declared {n} intervals but found {}", intervals.len()),
        ));
    }
    IntervalModel::new(intervals)
}

pub fn write_intervals(model: &IntervalModel) -> String {
    let mut out = String::new();
    writeln!(out, "{}", model.len()).unwrap();
    for &(l, r) in model.intervals() {
        writeln!(out, "{l} {r}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list(""),
            Err(MegError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(MegError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(MegError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(MegError::Parse { line: 2, .. })
        ));
        match parse_edge_list("3 2\n0 1\n1 1\n") {
            Err(MegError::Parse { line: 3, msg }) => assert!(msg.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("3 2\n0 1\n1 0\n") {
            Err(MegError::Parse { line: 3, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("2 1\n0 5\n") {
            Err(MegError::Parse { line: 2, msg }) => assert!(msg.contains("out of range")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn intervals_round_trip() {
        let text = "3\n0 1\n1 2\n2 3\n";
        let model = parse_intervals(text).unwrap();
        assert_eq!(model.intervals(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(write_intervals(&model), text);
        assert!(parse_intervals("1\n3 2\n").is_err());
        assert!(parse_intervals("2\n0 1\n").is_err());
        assert!(parse_intervals("1\n-4 -2\n").is_ok());
    }
}
