//! Integer partitions, conjugation and skew shapes.
//!
//! The empty partition prints as `0` and parses from either `0` or the empty
//! string. Trailing zero parts are accepted on input and stripped.

use std::fmt;
use std::str::FromStr;

use crate::error::ShapeError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(ShapeError::ZeroPart(pos + 1));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing { index: w + 2, parts });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The partition of the transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// True iff the diagram of `inner` sits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including `∅` and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i == outer.len() {
                return;
            }
            for p in 1..=outer[i].min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|_| ShapeError::Malformed(format!("bad part `{tok}` in `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Whether the 1-based cell `(row, col)` belongs to the shape.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row) && col <= self.outer.part(row)
    }

    /// Cells `(row, col)` in row-major order, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// Every skew shape `λ/μ` with `|λ| ≤ max_size`, `λ₁ ≤ max_cols`,
    /// `ℓ(λ) ≤ max_rows`, in a deterministic order.
    pub fn family(max_size: usize, max_cols: usize, max_rows: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            for outer in Partition::all_of_size(size) {
                if outer.first() > max_cols || outer.len() > max_rows {
                    continue;
                }
                for inner in outer.subpartitions() {
                    out.push(SkewShape { outer: outer.clone(), inner });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// Parses `"a,b,c"` or `"a,b,c/d,e"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut halves = s.split('/');
        let outer: Partition = halves.next().unwrap_or("").parse()?;
        let inner: Partition = match halves.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        if halves.next().is_some() {
            return Err(ShapeError::Malformed(format!("more than one `/` in `{s}`")));
        }
        SkewShape::new(outer, inner)
    }
}

/// Parses a skew shape from its text form.
pub fn parse_shape(text: &str) -> Result<SkewShape, ShapeError> {
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[5, 4, 4, 3]).conjugate(), p(&[4, 4, 4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn contains_examples() {
        assert!(p(&[2, 1]).contains(&Partition::empty()));
        assert!(p(&[2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 1]).contains(&p(&[1, 1, 1])));
    }

    #[test]
    fn parse_examples() {
        let s = parse_shape("2,1").unwrap();
        assert_eq!(s.outer(), &p(&[2, 1]));
        assert!(s.inner().is_empty());

        let s = parse_shape("4,4,4,3,1/3,1").unwrap();
        assert_eq!(s.outer().conjugate(), p(&[5, 4, 4, 3]));
        assert_eq!(s.inner().conjugate(), p(&[2, 1, 1]));
        assert_eq!(s.size(), 12);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(parse_shape("1,2"), Err(ShapeError::NotDecreasing { .. })));
        assert!(matches!(parse_shape("2,x"), Err(ShapeError::Malformed(_))));
        assert!(matches!(parse_shape("2/3"), Err(ShapeError::NotContained { .. })));
        assert!(matches!(parse_shape("2,0,1"), Err(ShapeError::ZeroPart(_))));
        assert!(matches!(parse_shape("2/1/1"), Err(ShapeError::Malformed(_))));
    }

    #[test]
    fn trailing_zeros_and_empty() {
        assert_eq!(parse_shape("2,1,0,0/1,0").unwrap().to_string(), "2,1/1");
        assert_eq!(parse_shape("0").unwrap().to_string(), "0/0");
        assert_eq!(parse_shape("2/0").unwrap(), parse_shape("2").unwrap());
        assert_eq!(parse_shape("").unwrap().size(), 0);
    }

    #[test]
    fn conjugation_is_an_involution_up_to_eight() {
        for n in 0..=8 {
            for lam in Partition::all_of_size(n) {
                let c = lam.conjugate();
                assert_eq!(c.size(), lam.size());
                assert_eq!(c.conjugate(), lam);
            }
        }
    }

    #[test]
    fn containment_commutes_with_conjugation() {
        for n in 0..=6 {
            for lam in Partition::all_of_size(n) {
                for k in 0..=n {
                    for mu in Partition::all_of_size(k) {
                        assert_eq!(lam.contains(&mu), lam.conjugate().contains(&mu.conjugate()), "{lam} vs {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // (2,1) contains ∅, (1), (2), (1,1), (2,1)
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn cells_of_skew_shape() {
        let s = parse_shape("3,2/1").unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert!(s.contains_cell(2, 1));
        assert!(!s.contains_cell(1, 1));
    }
}
