//! Graph sources: inline graph6, a file (graph6 lines or an edge list), or a
//! constructor expression such as `h:8,1` or `clique_join:2,[4,1,1]`.

use parfact::graph::{
    clique_join, complete, complete_bipartite, cycle, empty, h_extremal, parse_edge_list, parse_graph6, path,
    petersen, star, Graph,
};
use parfact::spectral::l_ns;
use parfact::Error;
use std::path::Path;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn numbers(args: &str, want: usize, name: &str) -> Result<Vec<usize>, Error> {
    let v: Vec<usize> = args
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| bad(format!("{name}: {e}")))?;
    if v.len() != want {
        return Err(bad(format!("{name} takes {want} argument(s), got {}", v.len())));
    }
    Ok(v)
}

fn parse_clique_join(args: &str) -> Result<Graph, Error> {
    let (s, rest) = args
        .split_once(',')
        .ok_or_else(|| bad("clique_join expects s,[n1,n2,...]"))?;
    let s: usize = s.trim().parse().map_err(|e| bad(format!("clique_join: {e}")))?;
    let list = rest
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| bad("clique_join parts must be a bracketed list"))?;
    let parts: Vec<usize> = list
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| bad(format!("clique_join: {e}")))?;
    clique_join(s, &parts)
}

/// Builds a graph from `name:args`.
pub fn construct(expr: &str) -> Result<Graph, Error> {
    let (name, args) = expr.split_once(':').unwrap_or((expr, ""));
    let name = name.trim().to_ascii_lowercase();
    match name.as_str() {
        "h" => {
            let v = numbers(args, 2, "h")?;
            h_extremal(v[0], v[1])
        }
        "l" => {
            let v = numbers(args, 2, "l")?;
            Ok(l_ns(v[0], v[1])?.0)
        }
        "clique_join" | "clique-join" => parse_clique_join(args),
        "k" | "complete" => complete(numbers(args, 1, "complete")?[0]),
        "c" | "cycle" => cycle(numbers(args, 1, "cycle")?[0]),
        "p" | "path" => path(numbers(args, 1, "path")?[0]),
        "star" => star(numbers(args, 1, "star")?[0]),
        "empty" => empty(numbers(args, 1, "empty")?[0]),
        "kst" | "bipartite" => {
            let v = numbers(args, 2, "bipartite")?;
            complete_bipartite(v[0], v[1])
        }
        "petersen" if args.trim().is_empty() => petersen(),
        _ => Err(bad(format!("unknown constructor '{name}'"))),
    }
}

fn is_constructor(s: &str) -> bool {
    // ':' never occurs in graph6
    s.contains(':') || s.eq_ignore_ascii_case("petersen")
}

/// One graph from an inline string (graph6 or constructor), no file lookup.
pub fn inline(s: &str) -> Result<Graph, Error> {
    let s = s.trim();
    if is_constructor(s) {
        construct(s)
    } else {
        parse_graph6(s)
    }
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Resolves a `--graph` argument.
pub fn resolve(src: &str) -> Result<Graph, Error> {
    if is_constructor(src) {
        return construct(src);
    }
    let p = Path::new(src);
    if !p.is_file() {
        return parse_graph6(src.trim());
    }
    let text = std::fs::read_to_string(p).map_err(|e| bad(format!("{src}: {e}")))?;
    let mut lines = meaningful_lines(&text);
    match lines.next() {
        None => Err(bad(format!("{src}: no graph in file"))),
        Some(first) if first.starts_with(|c: char| c.is_ascii_digit()) => parse_edge_list(&text),
        Some(first) => {
            if lines.next().is_some() {
                return Err(bad(format!("{src}: several graphs in file, use --batch")));
            }
            inline(first)
        }
    }
}

/// Lines of a batch file, 1-based, with blank lines dropped.
pub fn batch_lines(path: &Path) -> std::io::Result<Vec<(usize, String)>> {
    let text = std::fs::read_to_string(path)?;
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use parfact::graph::write_graph6;

    #[test]
    fn constructors() {
        assert_eq!(construct("h:8,1").unwrap(), h_extremal(8, 1).unwrap());
        assert_eq!(construct("clique_join:2,[4,1,1]").unwrap().order(), 8);
        assert_eq!(construct("clique_join:0,[4]").unwrap(), complete(4).unwrap());
        assert_eq!(construct("l:9,1").unwrap().order(), 9);
        assert_eq!(inline("petersen").unwrap().edge_count(), 15);
        assert!(construct("h:8").is_err());
        assert!(construct("nope:3").is_err());
        assert!(construct("clique_join:2,4,1").is_err());
    }

    #[test]
    fn inline_graph6() {
        let g = complete(5).unwrap();
        assert_eq!(resolve(&write_graph6(&g)).unwrap(), g);
    }
}
