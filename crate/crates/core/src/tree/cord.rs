use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::TreeError;

/// An unordered pair of distinct leaf labels; stored with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(String, String)", into = "(String, String)")]
pub struct Cord {
    a: String,
    b: String,
}

impl Cord {
    pub fn new(x: impl Into<String>, y: impl Into<String>) -> Result<Self, TreeError> {
        let (x, y) = (x.into(), y.into());
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Cord { a: x, b: y }),
            std::cmp::Ordering::Greater => Ok(Cord { a: y, b: x }),
            std::cmp::Ordering::Equal => Err(TreeError::InvalidCord(format!("{x}{x}"))),
        }
    }

    pub fn a(&self) -> &str {
        &self.a
    }

    pub fn b(&self) -> &str {
        &self.b
    }

    pub fn contains(&self, label: &str) -> bool {
        self.a == label || self.b == label
    }

    /// Parse `"ab"` (two one-character labels) or `"x-y"`.
    pub fn parse_compact(token: &str) -> Result<Self, TreeError> {
        let token = token.trim();
        if let Some((x, y)) = token.split_once('-') {
            return Cord::new(x.trim(), y.trim());
        }
        let chars: Vec<char> = token.chars().collect();
        if chars.len() == 2 {
            return Cord::new(chars[0].to_string(), chars[1].to_string());
        }
        Err(TreeError::InvalidCord(token.to_string()))
    }
}

impl TryFrom<(String, String)> for Cord {
    type Error = TreeError;
    fn try_from((x, y): (String, String)) -> Result<Self, Self::Error> {
        Cord::new(x, y)
    }
}

impl From<Cord> for (String, String) {
    fn from(c: Cord) -> Self {
        (c.a, c.b)
    }
}

impl fmt::Display for Cord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.chars().count() == 1 && self.b.chars().count() == 1 {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "{}-{}", self.a, self.b)
        }
    }
}

/// A duplicate-free set of cords, iterated in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CordSet(BTreeSet<Cord>);

impl CordSet {
    pub fn new() -> Self {
        CordSet(BTreeSet::new())
    }

    /// Every cord over `labels`.
    pub fn complete<S: AsRef<str>>(labels: &[S]) -> Self {
        let mut set = CordSet::new();
        for (i, x) in labels.iter().enumerate() {
            for y in &labels[i + 1..] {
                if let Ok(c) = Cord::new(x.as_ref(), y.as_ref()) {
                    set.insert(c);
                }
            }
        }
        set
    }

    /// `A ∨ B = {ab : a ∈ A, b ∈ B}`.
    pub fn join<S: AsRef<str>, T: AsRef<str>>(a: &[S], b: &[T]) -> Self {
        let mut set = CordSet::new();
        for x in a {
            for y in b {
                if let Ok(c) = Cord::new(x.as_ref(), y.as_ref()) {
                    set.insert(c);
                }
            }
        }
        set
    }

    /// Comma- or whitespace-separated compact cords, e.g. `"ab, cd, a-c"`.
    pub fn parse_compact(text: &str) -> Result<Self, TreeError> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(Cord::parse_compact)
            .collect()
    }

    pub fn insert(&mut self, c: Cord) -> bool {
        self.0.insert(c)
    }

    pub fn remove(&mut self, c: &Cord) -> bool {
        self.0.remove(c)
    }

    pub fn contains(&self, c: &Cord) -> bool {
        self.0.contains(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cord> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &CordSet) -> CordSet {
        CordSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &CordSet) -> CordSet {
        CordSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &CordSet) -> CordSet {
        CordSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn symmetric_difference(&self, other: &CordSet) -> CordSet {
        CordSet(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &CordSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn with(&self, c: &Cord) -> CordSet {
        let mut s = self.clone();
        s.insert(c.clone());
        s
    }

    pub fn without(&self, c: &Cord) -> CordSet {
        let mut s = self.clone();
        s.remove(c);
        s
    }

    /// Labels touched by some cord.
    pub fn endpoints(&self) -> BTreeSet<&str> {
        self.0.iter().flat_map(|c| [c.a(), c.b()]).collect()
    }
}

impl FromIterator<Cord> for CordSet {
    fn from_iter<I: IntoIterator<Item = Cord>>(iter: I) -> Self {
        CordSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CordSet {
    type Item = &'a Cord;
    type IntoIter = std::collections::btree_set::Iter<'a, Cord>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for CordSet {
    type Item = Cord;
    type IntoIter = std::collections::btree_set::IntoIter<Cord>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for CordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for c in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cords_are_order_insensitive() {
        assert_eq!(Cord::new("b", "a").unwrap(), Cord::new("a", "b").unwrap());
        assert!(Cord::new("a", "a").is_err());
    }

    #[test]
    fn compact_forms() {
        let s = CordSet::parse_compact("ab, dc,x1-x2 ba").unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&Cord::new("c", "d").unwrap()));
        assert_eq!(s.to_string(), "{ab,cd,x1-x2}");
    }

    #[test]
    fn join_of_parts() {
        let j = CordSet::join(&["a", "c"], &["b", "d"]);
        assert_eq!(j, CordSet::parse_compact("ab,ad,bc,cd").unwrap());
    }

    #[test]
    fn serde_rejects_loops() {
        assert!(serde_json::from_str::<Cord>(r#"["a","a"]"#).is_err());
        let c: Cord = serde_json::from_str(r#"["b","a"]"#).unwrap();
        assert_eq!(c.a(), "a");
    }
}
