//! Text formats for trees: edge lists, level sequences and family expressions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::families::FamilyParams;
use crate::tree::{CanonicalCode, Tree, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    EdgeList,
    LevelSequence,
    FamilyExpression,
    /// Parenthesised canonical code as printed by `canonical_code`.
    CanonicalCode,
}

impl fmt::Display for TreeFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeFormat::EdgeList => "edge-list",
            TreeFormat::LevelSequence => "level-sequence",
            TreeFormat::FamilyExpression => "family-expression",
            TreeFormat::CanonicalCode => "canonical-code",
        })
    }
}

/// Parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{format} line {line}, column {column}: {message}")]
pub struct ParseError {
    pub format: TreeFormat,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(format: TreeFormat, line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { format, line, column, message: message.into() }
    }
}

pub fn parse_tree(text: &str, format: TreeFormat) -> Result<Tree, ParseError> {
    match format {
        TreeFormat::EdgeList => parse_edge_list(text),
        TreeFormat::LevelSequence => parse_level_sequence(text),
        TreeFormat::FamilyExpression => {
            let params = FamilyParams::from_str(text)
                .map_err(|e| ParseError::new(format, 1, e.column, e.message))?;
            params.construct().map_err(|e| ParseError::new(format, 1, 1, e.to_string()))
        }
        TreeFormat::CanonicalCode => CanonicalCode::parse(text)
            .map(|(_, t)| t)
            .map_err(|e| ParseError::new(format, 1, e.position + 1, e.reason)),
    }
}

/// One `u v` pair per line; blank lines and `#` comments are skipped. Any
/// non-negative integer labels are accepted and renumbered densely.
pub fn parse_edge_list(text: &str) -> Result<Tree, ParseError> {
    let err = |line, column, msg: String| ParseError::new(TreeFormat::EdgeList, line, column, msg);
    let mut edges: Vec<[Vertex; 2]> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<(usize, &str)> = content
            .split_whitespace()
            .map(|w| (w.as_ptr() as usize - raw.as_ptr() as usize + 1, w))
            .collect();
        match fields.as_slice() {
            [] => continue,
            [(cu, u), (cv, v)] => {
                let u = u.parse::<Vertex>().map_err(|_| err(i + 1, *cu, format!("bad vertex id '{u}'")))?;
                let v = v.parse::<Vertex>().map_err(|_| err(i + 1, *cv, format!("bad vertex id '{v}'")))?;
                edges.push([u, v]);
                lines.push(i + 1);
            }
            _ => return Err(err(i + 1, 1, "expected two vertex ids".into())),
        }
    }
    if edges.is_empty() {
        return Err(err(1, 1, "no edges".into()));
    }
    // labels are remapped to 0..n in increasing order; dense input is unchanged
    let mut labels: Vec<Vertex> = edges.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let n = labels.len();
    for e in &mut edges {
        for v in e.iter_mut() {
            *v = labels.binary_search(v).expect("label collected above");
        }
    }
    Tree::new(n, edges).map_err(|e| {
        let line = e.edge_index().map(|i| lines[i]).unwrap_or(lines.len());
        err(line, 1, e.to_string())
    })
}

pub fn parse_level_sequence(text: &str) -> Result<Tree, ParseError> {
    let mut levels = Vec::new();
    for w in text.split_whitespace() {
        let column = w.as_ptr() as usize - text.as_ptr() as usize + 1;
        levels.push(w.parse::<usize>().map_err(|_| {
            ParseError::new(TreeFormat::LevelSequence, 1, column, format!("bad level '{w}'"))
        })?);
    }
    Tree::from_level_sequence(&levels).map_err(|e| {
        ParseError::new(TreeFormat::LevelSequence, 1, e.position + 1, e.reason)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_path() {
        let t = parse_tree("0 1\n1 2\n2 3", TreeFormat::EdgeList).unwrap();
        assert!(t.is_isomorphic(&Tree::path(4)));
    }

    #[test]
    fn edge_list_errors_point_at_lines() {
        let e = parse_edge_list("0 1\n0 2\n1 2").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("cycle"), "{e}");
        let e = parse_edge_list("0 1\n\n1 x").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_edge_list("0 1 2").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn sparse_labels_are_remapped() {
        let t = parse_edge_list("10 20\n20 35\n").unwrap();
        assert_eq!(t.order(), 3);
        assert!(t.is_isomorphic(&Tree::path(3)));
        // two components
        assert!(parse_edge_list("0 1\n2 3\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_edge_list("# star\n0 1\n\n0 2  # leaf\n0 3\n").unwrap();
        assert!(t.is_isomorphic(&Tree::star(4)));
    }

    #[test]
    fn round_trips() {
        let t = parse_tree("CP(7,4)^2", TreeFormat::FamilyExpression).unwrap();
        let again = parse_edge_list(&t.to_edge_list()).unwrap();
        assert_eq!(t.canonical_code(), again.canonical_code());
        let code = t.canonical_code();
        let from_code = parse_tree(code.as_str(), TreeFormat::CanonicalCode).unwrap();
        assert_eq!(from_code.canonical_code(), code);
        let levels: Vec<String> = t.level_sequence().iter().map(|l| l.to_string()).collect();
        let from_levels = parse_level_sequence(&levels.join(" ")).unwrap();
        assert_eq!(from_levels.canonical_code(), code);
    }

    #[test]
    fn family_errors_carry_columns() {
        let e = parse_tree("CP(7,4)^", TreeFormat::FamilyExpression).unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.column > 1);
    }
}
