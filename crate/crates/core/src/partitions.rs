//! Binary W-partitions: assignments of disjoint two-element index sets to an
//! ordered set of essential vertices, exhausting {1..k} with k = 2·|W|.

use crate::error::{Error, Result};
use indexmap::{IndexMap, IndexSet};
use std::fmt;

/// A pair of particle indices per vertex of W, pairwise disjoint across
/// vertices and together covering {1..k}. Pairs are stored with the smaller
/// index first; W keeps its given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryWPartition {
    assignment: IndexMap<String, (usize, usize)>,
}

impl BinaryWPartition {
    pub fn new<V: Into<String>>(pairs: Vec<(V, (usize, usize))>) -> Result<BinaryWPartition> {
        let mut assignment = IndexMap::new();
        let mut used = IndexSet::new();
        for (v, (a, b)) in pairs {
            let v = v.into();
            if a == b {
                return Err(Error::InvalidPartition(format!(
                    "pair at `{v}` repeats index {a}"
                )));
            }
            let pair = (a.min(b), a.max(b));
            if pair.0 == 0 {
                return Err(Error::InvalidPartition(format!(
                    "pair at `{v}` uses index 0; particle indices are 1-based"
                )));
            }
            for idx in [pair.0, pair.1] {
                if !used.insert(idx) {
                    return Err(Error::InvalidPartition(format!(
                        "index {idx} appears in more than one pair"
                    )));
                }
            }
            if assignment.insert(v.clone(), pair).is_some() {
                return Err(Error::InvalidPartition(format!(
                    "vertex `{v}` is assigned twice"
                )));
            }
        }
        let k = 2 * assignment.len();
        if used.iter().any(|&i| i > k) {
            return Err(Error::InvalidPartition(format!(
                "indices must exhaust 1..={k} with {} pairs",
                assignment.len()
            )));
        }
        Ok(BinaryWPartition { assignment })
    }

    /// Number of particle indices covered, k = 2·|W|.
    pub fn k(&self) -> usize {
        2 * self.assignment.len()
    }

    /// The vertices of W in order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.assignment.keys().map(String::as_str)
    }

    pub fn pair(&self, v: &str) -> Result<(usize, usize)> {
        self.assignment
            .get(v)
            .copied()
            .ok_or_else(|| Error::InvalidPartition(format!("no pair assigned at `{v}`")))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, (usize, usize))> {
        self.assignment.iter().map(|(v, &p)| (v.as_str(), p))
    }

    fn same_shape(&self, other: &BinaryWPartition) -> Result<()> {
        if self.assignment.len() != other.assignment.len()
            || self
                .assignment
                .keys()
                .zip(other.assignment.keys())
                .any(|(a, b)| a != b)
        {
            return Err(Error::InvalidPartition(
                "partitions are over different vertex sets".into(),
            ));
        }
        Ok(())
    }

    /// Whether no unordered pair occurs in both partitions, regardless of
    /// which vertex carries it.
    pub fn disjoint(&self, other: &BinaryWPartition) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self
            .assignment
            .values()
            .all(|p| !other.assignment.values().any(|q| p == q)))
    }

    /// Size of λ(v) ∩ μ(w) as index sets: 0, 1, or 2.
    pub fn overlap(&self, v: &str, other: &BinaryWPartition, w: &str) -> Result<usize> {
        let (a, b) = self.pair(v)?;
        let (c, d) = other.pair(w)?;
        Ok([a, b].iter().filter(|i| **i == c || **i == d).count())
    }

    /// All binary W-partitions of {1..k} over the ordered vertex set, in a
    /// deterministic order (lexicographic by pair per vertex). The count is
    /// (2d)!/2^d for d = |W|.
    pub fn enumerate(k: usize, w_set: &[String]) -> Result<Vec<BinaryWPartition>> {
        check_w(k, w_set)?;
        let mut out = Vec::new();
        let mut chosen: Vec<(String, (usize, usize))> = Vec::new();
        let free: Vec<usize> = (1..=k).collect();
        enumerate_rec(w_set, &mut chosen, &free, &mut out);
        Ok(out)
    }

    /// The standard disjoint witness pair: λ takes consecutive pairs
    /// {1,2},{3,4},… and μ the cyclic shift {2,3},…,{2d,1}. Returns `None`
    /// for |W| = 1, where only one pair exists.
    pub fn witness_disjoint_pair(
        k: usize,
        w_set: &[String],
    ) -> Result<Option<(BinaryWPartition, BinaryWPartition)>> {
        check_w(k, w_set)?;
        let d = w_set.len();
        if d == 1 {
            return Ok(None);
        }
        let lam = BinaryWPartition::new(
            w_set
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), (2 * i + 1, 2 * i + 2)))
                .collect(),
        )?;
        let mu = BinaryWPartition::new(
            w_set
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let a = 2 * i + 2;
                    let b = if i + 1 == d { 1 } else { 2 * i + 3 };
                    (v.clone(), (a, b))
                })
                .collect(),
        )?;
        Ok(Some((lam, mu)))
    }

    /// Parses the text form `"u:{1,2} w:{3,4}"`.
    pub fn parse(text: &str) -> Result<BinaryWPartition> {
        let mut pairs = Vec::new();
        for token in text.split_whitespace() {
            let bad = |why: &str| Error::Parse(format!("bad partition entry `{token}`: {why}"));
            let (v, rest) = token
                .split_once(':')
                .ok_or_else(|| bad("expected `vertex:{i,j}`"))?;
            let body = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| bad("expected `{i,j}` after the colon"))?;
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| bad("expected two comma-separated indices"))?;
            let a: usize = a.trim().parse().map_err(|_| bad("bad index"))?;
            let b: usize = b.trim().parse().map_err(|_| bad("bad index"))?;
            pairs.push((v.to_string(), (a, b)));
        }
        if pairs.is_empty() {
            return Err(Error::Parse("empty partition text".into()));
        }
        BinaryWPartition::new(pairs)
    }
}

fn check_w(k: usize, w_set: &[String]) -> Result<()> {
    let mut seen = IndexSet::new();
    for v in w_set {
        if !seen.insert(v) {
            return Err(Error::InvalidPartition(format!(
                "vertex `{v}` repeats in W"
            )));
        }
    }
    if w_set.is_empty() || k != 2 * w_set.len() {
        return Err(Error::InvalidPartition(format!(
            "need k = 2·|W| with |W| ≥ 1, got k={k} and |W|={}",
            w_set.len()
        )));
    }
    Ok(())
}

fn enumerate_rec(
    remaining_vertices: &[String],
    chosen: &mut Vec<(String, (usize, usize))>,
    free: &[usize],
    out: &mut Vec<BinaryWPartition>,
) {
    let Some((v, rest)) = remaining_vertices.split_first() else {
        out.push(
            BinaryWPartition::new(chosen.clone()).expect("enumeration yields valid partitions"),
        );
        return;
    };
    for i in 0..free.len() {
        for j in i + 1..free.len() {
            let pair = (free[i], free[j]);
            let mut next_free = free.to_vec();
            next_free.remove(j);
            next_free.remove(i);
            chosen.push((v.clone(), pair));
            enumerate_rec(rest, chosen, &next_free, out);
            chosen.pop();
        }
    }
}

impl fmt::Display for BinaryWPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, (a, b))) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}:{{{a},{b}}}")?;
        }
        Ok(())
    }
}
