//! Newick reader. Weights are read as exact rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{is_valid_label, EdgeId, EdgeWeighting, TreeError, VertexId, XTree};
use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("newick error at byte {position}: {kind}")]
pub struct NewickError {
    pub position: usize,
    pub kind: NewickErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NewickErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    MissingSemicolon,
    TrailingInput,
    EmptyLabel,
    InvalidLabel(String),
    InvalidWeight(String),
    InternalLabel(String),
    RootWeight,
    MixedWeights,
    DegreeTwo,
    Tree(TreeError),
}

impl fmt::Display for NewickErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NewickErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            NewickErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            NewickErrorKind::MissingSemicolon => f.write_str("missing terminating ';'"),
            NewickErrorKind::TrailingInput => f.write_str("input continues after ';'"),
            NewickErrorKind::EmptyLabel => f.write_str("leaf without a label"),
            NewickErrorKind::InvalidLabel(l) => write!(f, "invalid leaf label {l:?}"),
            NewickErrorKind::InvalidWeight(w) => write!(f, "invalid weight {w:?}"),
            NewickErrorKind::InternalLabel(l) => {
                write!(f, "interior vertex labels are not supported ({l:?})")
            }
            NewickErrorKind::RootWeight => f.write_str("the outermost group cannot carry a weight"),
            NewickErrorKind::MixedWeights => {
                f.write_str("either every edge or no edge must carry a weight")
            }
            NewickErrorKind::DegreeTwo => {
                f.write_str("group with a single child gives a degree-2 vertex")
            }
            NewickErrorKind::Tree(e) => write!(f, "{e}"),
        }
    }
}

struct Node {
    children: Vec<usize>,
    label: Option<String>,
    weight: Option<Rational>,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    nodes: Vec<Node>,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: NewickErrorKind) -> NewickError {
        NewickError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn token(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len()
            && !b"(),:;".contains(&self.text[self.pos])
            && !self.text[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }

    fn weight(&mut self) -> Result<Option<Rational>, NewickError> {
        if self.peek() != Some(b':') {
            return Ok(None);
        }
        self.pos += 1;
        let start = self.pos;
        let tok = self.token();
        parse_rational(&tok).map(Some).ok_or(NewickError {
            position: start,
            kind: NewickErrorKind::InvalidWeight(tok),
        })
    }

    fn subtree(&mut self) -> Result<usize, NewickError> {
        match self.peek() {
            None => Err(self.err(NewickErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let mut children = vec![self.subtree()?];
                loop {
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            children.push(self.subtree()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(c) => return Err(self.err(NewickErrorKind::UnexpectedChar(c as char))),
                        None => return Err(self.err(NewickErrorKind::UnexpectedEnd)),
                    }
                }
                let at = self.pos;
                let label = self.token();
                if !label.is_empty() {
                    return Err(NewickError {
                        position: at,
                        kind: NewickErrorKind::InternalLabel(label),
                    });
                }
                let weight = self.weight()?;
                self.nodes.push(Node {
                    children,
                    label: None,
                    weight,
                });
                Ok(self.nodes.len() - 1)
            }
            Some(c) if b"),;:".contains(&c) => {
                if c == b',' || c == b')' {
                    Err(self.err(NewickErrorKind::EmptyLabel))
                } else {
                    Err(self.err(NewickErrorKind::UnexpectedChar(c as char)))
                }
            }
            Some(_) => {
                let at = self.pos;
                let label = self.token();
                if !is_valid_label(&label) {
                    return Err(NewickError {
                        position: at,
                        kind: NewickErrorKind::InvalidLabel(label),
                    });
                }
                let weight = self.weight()?;
                self.nodes.push(Node {
                    children: Vec::new(),
                    label: Some(label),
                    weight,
                });
                Ok(self.nodes.len() - 1)
            }
        }
    }
}

/// Parse a Newick string into an X-tree and, when the input carries branch
/// lengths, the matching edge weighting.
///
/// An outermost group with exactly two children is read as a root placed on
/// an edge: the root is suppressed and the two branch lengths are added.
pub fn parse_newick(text: &str) -> Result<(XTree, Option<EdgeWeighting>), NewickError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        nodes: Vec::new(),
    };
    if p.peek() != Some(b'(') {
        return match p.peek() {
            None => Err(p.err(NewickErrorKind::UnexpectedEnd)),
            Some(c) => Err(p.err(NewickErrorKind::UnexpectedChar(c as char))),
        };
    }
    let root = p.subtree()?;
    match p.peek() {
        Some(b';') => p.pos += 1,
        None => return Err(p.err(NewickErrorKind::MissingSemicolon)),
        Some(c) => return Err(p.err(NewickErrorKind::UnexpectedChar(c as char))),
    }
    if p.peek().is_some() {
        return Err(p.err(NewickErrorKind::TrailingInput));
    }
    let end = p.pos;
    let at_end = |kind| NewickError {
        position: end,
        kind,
    };
    let nodes = p.nodes;
    if nodes[root].weight.is_some() {
        return Err(at_end(NewickErrorKind::RootWeight));
    }
    if nodes
        .iter()
        .enumerate()
        .any(|(i, n)| i != root && n.label.is_none() && n.children.len() == 1)
    {
        return Err(at_end(NewickErrorKind::DegreeTwo));
    }

    // (child, parent, weight) for every non-root node
    let mut raw: Vec<(usize, usize, Option<Rational>)> = Vec::new();
    for (i, n) in nodes.iter().enumerate() {
        for &c in &n.children {
            raw.push((c, i, nodes[c].weight.clone()));
        }
    }
    let root_children = &nodes[root].children;
    if root_children.len() == 2 {
        let (l, r) = (root_children[0], root_children[1]);
        let w = match (&nodes[l].weight, &nodes[r].weight) {
            (Some(a), Some(b)) => Some(a + b),
            (None, None) => None,
            _ => return Err(at_end(NewickErrorKind::MixedWeights)),
        };
        raw.retain(|(_, parent, _)| *parent != root);
        raw.push((l, r, w));
    }
    let weighted = raw.iter().filter(|r| r.2.is_some()).count();
    if weighted != 0 && weighted != raw.len() {
        return Err(at_end(NewickErrorKind::MixedWeights));
    }

    // edges are numbered by their lower node in input order
    raw.sort_by_key(|(c, _, _)| *c);
    let vertex = |i: usize| VertexId(i);
    let mut edge_list = Vec::with_capacity(raw.len());
    let mut weights = BTreeMap::new();
    for (k, (c, parent, w)) in raw.into_iter().enumerate() {
        edge_list.push((EdgeId(k), vertex(c), vertex(parent)));
        if let Some(w) = w {
            weights.insert(EdgeId(k), w);
        }
    }
    let leaves = nodes
        .iter()
        .enumerate()
        .filter_map(|(i, n)| n.label.clone().map(|l| (l, vertex(i))))
        .collect();
    let tree =
        XTree::from_parts(leaves, edge_list).map_err(|e| at_end(NewickErrorKind::Tree(e)))?;
    let weighting = if weighted > 0 {
        Some(EdgeWeighting::new(&tree, weights).map_err(|e| at_end(NewickErrorKind::Tree(e)))?)
    } else {
        None
    };
    Ok((tree, weighting))
}

/// Exact value of `"3/2"`, `"-0.25"`, `"1e-3"`, `"7"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all * sign);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(value)
}

pub(crate) fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::tree::are_equivalent;

    #[test]
    fn quartet_and_star() {
        let (t, w) = parse_newick("((a,b),(c,d));").unwrap();
        assert!(w.is_none());
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 5));
        let (s, _) = parse_newick("(a,b,c);").unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (4, 3));
        assert!(s.is_star());
    }

    #[test]
    fn degree_two_is_rejected() {
        let e = parse_newick("(a,(b));").unwrap_err();
        assert_eq!(e.kind, NewickErrorKind::DegreeTwo);
        let e = parse_newick("(a,(b,c),((d,e)));").unwrap_err();
        assert_eq!(e.kind, NewickErrorKind::DegreeTwo);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_newick("((a,b),(c,d))").unwrap_err();
        assert_eq!(e.kind, NewickErrorKind::MissingSemicolon);
        let e = parse_newick("((a,b),(c,d);").unwrap_err();
        assert_eq!(e.kind, NewickErrorKind::UnexpectedChar(';'));
        assert_eq!(e.position, 12);
        let e = parse_newick("((a,),(c,d));").unwrap_err();
        assert_eq!((e.kind, e.position), (NewickErrorKind::EmptyLabel, 4));
        assert!(matches!(
            parse_newick("(a,b,a);").unwrap_err().kind,
            NewickErrorKind::Tree(TreeError::DuplicateLeaf(_))
        ));
        assert!(matches!(
            parse_newick("(a,b);").unwrap_err().kind,
            NewickErrorKind::Tree(TreeError::TooFewLeaves(2))
        ));
        assert!(matches!(
            parse_newick("((a,b)x,c,d);").unwrap_err().kind,
            NewickErrorKind::InternalLabel(_)
        ));
        assert!(matches!(
            parse_newick("(a:1,b,c);").unwrap_err().kind,
            NewickErrorKind::MixedWeights
        ));
        assert!(matches!(
            parse_newick("(a:x,b:1,c:1);").unwrap_err().kind,
            NewickErrorKind::InvalidWeight(_)
        ));
        assert!(matches!(
            parse_newick("(a,b,c); x").unwrap_err().kind,
            NewickErrorKind::TrailingInput
        ));
        assert!(matches!(
            parse_newick("(a,b-c,d);").unwrap_err().kind,
            NewickErrorKind::InvalidLabel(_)
        ));
    }

    #[test]
    fn root_on_an_edge_merges_weights() {
        let (t, w) = parse_newick("((a:1,b:2):3/2,(c:1,d:1):1/2);").unwrap();
        let w = w.unwrap();
        let f = t.edge_for_split(&["a", "b"]).unwrap();
        assert_eq!(w.get(f), Some(&int(2)));
        assert_eq!(
            t.distance(&w, &crate::tree::Cord::new("a", "c").unwrap())
                .unwrap(),
            int(4)
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse_rational("-0.25"), Some(ratio(-1, 4)));
        assert_eq!(parse_rational("1e-3"), Some(ratio(1, 1000)));
        assert_eq!(parse_rational("2.5E2"), Some(int(250)));
        assert_eq!(parse_rational(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("1.2.3"), None);
        assert_eq!(parse_rational("0.1"), Some(ratio(1, 10)));
    }

    #[test]
    fn canonical_round_trip() {
        for s in [
            "((a,b),(c,d));",
            "(a1,a2,(a3,(a4,a5)));",
            "((a,b),c,(d,(e,f)));",
            "(a,b,c,d,(e,f));",
        ] {
            let (t, _) = parse_newick(s).unwrap();
            let (back, _) = parse_newick(&t.canonical_newick()).unwrap();
            assert!(are_equivalent(&t, &back).unwrap(), "{s}");
            assert_eq!(back.canonical_newick(), t.canonical_newick());
        }
    }

    #[test]
    fn weighted_round_trip() {
        let (t, w) = parse_newick("((a:1,b:0.5):2,c:3/4,d:1e1);").unwrap();
        let w = w.unwrap();
        let text = t.to_newick_weighted(&w);
        let (t2, w2) = parse_newick(&text).unwrap();
        let w2 = w2.unwrap();
        for c in t.all_cords() {
            assert_eq!(t.distance(&w, &c).unwrap(), t2.distance(&w2, &c).unwrap());
        }
    }
}
