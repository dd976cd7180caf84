//! Plain-text poset format.
//!
//! ```text
//! # optional comments
//! 4
//! 0 < 2
//! 1 < 3
//! ```
//!
//! The first non-comment line is the vertex count; every following line is a
//! relation `u < v`. Whitespace is ignored, so `0<2` works too. Relations need
//! not be covers; the transitive closure is taken.

use std::fmt;
use std::str::FromStr;

use super::{Poset, PosetError};

impl FromStr for Poset {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut n: Option<usize> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if compact.is_empty() {
                continue;
            }
            let parse_num = |t: &str| {
                t.parse::<usize>().map_err(|_| PosetError::Parse {
                    line: line_no,
                    message: format!("expected a vertex index, found {t:?}"),
                })
            };
            match n {
                None => n = Some(parse_num(&compact)?),
                Some(_) => {
                    let (a, b) = compact.split_once('<').ok_or_else(|| PosetError::Parse {
                        line: line_no,
                        message: format!("expected `u < v`, found {:?}", raw.trim()),
                    })?;
                    pairs.push((parse_num(a)?, parse_num(b)?));
                }
            }
        }
        let n = n.ok_or(PosetError::Parse {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        Poset::build(n, &pairs)
    }
}

impl Poset {
    /// Text form listing the cover relations; parses back to an equal poset.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for (u, v) in self.covers() {
            out.push_str(&format!("{u} < {v}\n"));
        }
        out
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let p: Poset = "# N\n4\n0 < 2\n1<2\n  0 <3 \n\n".parse().unwrap();
        assert_eq!(p.covers(), vec![(0, 2), (0, 3), (1, 2)]);
        let q: Poset = p.to_text().parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("".parse::<Poset>(), Err(PosetError::Parse { line: 0, .. })));
        assert!(matches!(
            "2\n0 - 1".parse::<Poset>(),
            Err(PosetError::Parse { line: 2, .. })
        ));
        assert!(matches!("x".parse::<Poset>(), Err(PosetError::Parse { line: 1, .. })));
        assert_eq!("2\n0<1\n1<0".parse::<Poset>().unwrap_err(), PosetError::CycleDetected);
    }
}
