//! Argument parsing helpers.

use std::io::{self, BufRead};
use std::ops::RangeInclusive;

use splitfree::{graph6, Error, Graph, VertexPartition};

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// Graph from the argument, or the first non-blank line of standard input.
pub fn read_graph(arg: Option<String>) -> Result<Graph, Error> {
    if let Some(s) = arg {
        return graph6::decode(s.trim());
    }
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            return graph6::decode(line.trim());
        }
    }
    Err(domain("no graph given and standard input is empty"))
}

/// `"7"` or `"5..9"` (inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Error> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| domain(format!("bad number {t:?} in range {s:?}")));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(domain(format!("empty range {s:?}")));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

pub fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| domain(format!("bad vertex {t:?}"))))
        .collect()
}

/// `"0-1,1-2"`.
pub fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t.split_once('-').ok_or_else(|| domain(format!("bad edge {t:?}")))?;
            let a = a.trim().parse().map_err(|_| domain(format!("bad edge {t:?}")))?;
            let b = b.trim().parse().map_err(|_| domain(format!("bad edge {t:?}")))?;
            Ok((a, b))
        })
        .collect()
}

/// `"0,1;2,3"`. Without `n`, the graph size is one more than the vertices listed.
pub fn parse_classes(s: &str, n: Option<usize>) -> Result<VertexPartition, Error> {
    let lists = s.split(';').map(parse_list).collect::<Result<Vec<_>, _>>()?;
    let n = n.unwrap_or_else(|| lists.iter().map(Vec::len).sum::<usize>() + 1);
    VertexPartition::from_lists(n, &lists)
}
