//! Reverse plane partitions and the defining sum for dual Grothendieck
//! polynomials.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::poly::{Monomial, MultiPoly};
use crate::shapes::SkewShape;

/// A filling of a skew shape, weakly increasing along rows and down columns.
///
/// `rows[r]` holds the entries of row `r + 1`, left to right, for the cells
/// of the shape only (no padding for the inner partition).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rpp {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Rpp {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let lam = shape.outer();
        let mu = shape.inner();
        let mut rows = rows;
        while rows.len() > lam.len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != lam.len() {
            return Err(TableauError::Invalid(format!(
                "expected {} rows for shape {shape}, got {}",
                lam.len(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let want = lam.part(r + 1) - mu.part(r + 1);
            if row.len() != want {
                return Err(TableauError::Invalid(format!("row {} has {} entries, expected {want}", r + 1, row.len())));
            }
            if row.contains(&0) {
                return Err(TableauError::Invalid(format!("row {} has a non-positive entry", r + 1)));
            }
        }
        let t = Rpp { shape, rows };
        for (r, c) in t.shape.cells() {
            let v = t.get(r, c).unwrap();
            if let Some(left) = t.get(r, c.wrapping_sub(1)) {
                if left > v {
                    return Err(TableauError::Invalid(format!("row {r} decreases at column {c}")));
                }
            }
            if let Some(up) = t.get(r.wrapping_sub(1), c) {
                if up > v {
                    return Err(TableauError::Invalid(format!("column {c} decreases at row {r}")));
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at the 1-based cell `(row, col)`, if that cell is in the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let offset = self.shape.inner().part(row);
        Some(self.rows[row - 1][col - offset - 1])
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Column entries, top to bottom, for 1-based column `col`.
    pub fn column(&self, col: usize) -> Vec<u32> {
        (1..=self.shape.outer().len()).filter_map(|r| self.get(r, col)).collect()
    }

    /// `∏ x_i^{c_i(T)}`, times `∏ t_j^{d_j(T)}` when `refined`.
    pub fn weight(&self, refined: bool) -> MultiPoly {
        let mut x: Vec<u32> = Vec::new();
        for col in 1..=self.shape.outer().first() {
            let distinct: BTreeSet<u32> = self.column(col).into_iter().collect();
            for v in distinct {
                let v = v as usize;
                if x.len() < v {
                    x.resize(v, 0);
                }
                x[v - 1] += 1;
            }
        }
        let mut t: Vec<u32> = Vec::new();
        if refined {
            for (r, c) in self.shape.cells() {
                if let Some(below) = self.get(r + 1, c) {
                    if below == self.get(r, c).unwrap() {
                        if t.len() < r {
                            t.resize(r, 0);
                        }
                        t[r - 1] += 1;
                    }
                }
            }
        }
        let (nx, nt) = (x.len(), t.len());
        MultiPoly::from_terms(nx, nt, [(Monomial::new(x, t), BigInt::one())])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RppJson { shape: self.shape.to_string(), rows: self.rows.clone() })
            .expect("rpp serializes")
    }

    /// Reads `{"shape": "outer/inner", "rows": [[..], ..]}`. Rows may list
    /// only the shape's cells, or be left-padded with `0` for the inner
    /// partition.
    pub fn from_json(text: &str) -> Result<Self, TableauError> {
        let raw: RppJson = serde_json::from_str(text).map_err(|e| TableauError::Invalid(e.to_string()))?;
        let shape: SkewShape = raw.shape.parse().map_err(|e| TableauError::Invalid(format!("{e}")))?;
        let rows = raw
            .rows
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                let pad = shape.inner().part(r + 1);
                if row.len() == shape.outer().part(r + 1) && pad > 0 && row[..pad].iter().all(|&v| v == 0) {
                    row[pad..].to_vec()
                } else {
                    row
                }
            })
            .collect();
        Rpp::new(shape, rows)
    }
}

#[derive(Serialize, Deserialize)]
struct RppJson {
    shape: String,
    rows: Vec<Vec<u32>>,
}

impl fmt::Display for Rpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.outer().len() {
            let pad = self.shape.inner().part(r);
            let cells: Vec<String> =
                (pad + 1..=self.shape.outer().part(r)).map(|c| self.get(r, c).unwrap().to_string()).collect();
            writeln!(f, "{}{}", ". ".repeat(pad), cells.join(" "))?;
        }
        Ok(())
    }
}

/// All RPPs of `shape` with entries in `1..=m`, in lexicographic order of
/// their row-major reading word.
pub fn enumerate_rpp(shape: &SkewShape, m: u32) -> Vec<Rpp> {
    let cells = shape.cells();
    let mut values = vec![0u32; cells.len()];
    let index_of = |r: usize, c: usize| cells.iter().position(|&cell| cell == (r, c));
    let left: Vec<Option<usize>> = cells.iter().map(|&(r, c)| index_of(r, c.wrapping_sub(1))).collect();
    let up: Vec<Option<usize>> = cells.iter().map(|&(r, c)| index_of(r.wrapping_sub(1), c)).collect();

    let mut out = Vec::new();
    fn go(
        k: usize,
        m: u32,
        values: &mut Vec<u32>,
        left: &[Option<usize>],
        up: &[Option<usize>],
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if k == values.len() {
            emit(values);
            return;
        }
        let lo = [left[k], up[k]].iter().flatten().map(|&i| values[i]).max().unwrap_or(1);
        for v in lo..=m {
            values[k] = v;
            go(k + 1, m, values, left, up, emit);
        }
    }
    let mut emit = |vals: &[u32]| {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.outer().len()];
        for (&(r, _), &v) in cells.iter().zip(vals) {
            rows[r - 1].push(v);
        }
        out.push(Rpp { shape: shape.clone(), rows });
    };
    go(0, m, &mut values, &left, &up, &mut emit);
    out
}

/// `Σ_T weight(T)` over RPPs of `shape` with entries at most `m`.
pub fn g_oracle(shape: &SkewShape, m: usize, refined: bool) -> MultiPoly {
    let nt = if refined { shape.outer().len().saturating_sub(1) } else { 0 };
    enumerate_rpp(shape, m as u32).iter().map(|t| t.weight(refined)).sum::<MultiPoly>().with_vars(m, nt)
}

/// A filling where some cells are left empty; every empty cell must have a
/// filled cell somewhere below it in its column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFilling {
    shape: SkewShape,
    rows: Vec<Vec<Option<u32>>>,
}

impl ReducedFilling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Option<u32>>>) -> Result<Self, TableauError> {
        if rows.len() != shape.outer().len() {
            return Err(TableauError::Invalid(format!("expected {} rows", shape.outer().len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.outer().part(r + 1) - shape.inner().part(r + 1) {
                return Err(TableauError::Invalid(format!("row {} has the wrong length", r + 1)));
            }
        }
        Ok(ReducedFilling { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Option<u32>> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        Some(self.rows[row - 1][col - self.shape.inner().part(row) - 1])
    }
}

/// Fills each empty cell with the first filled entry below it.
pub fn complete_filling(f: &ReducedFilling) -> Result<Rpp, TableauError> {
    let shape = f.shape();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.outer().len()];
    for (r, c) in shape.cells() {
        let v = match f.get(r, c).unwrap() {
            Some(v) => v,
            None => (r + 1..=shape.outer().len())
                .find_map(|rr| f.get(rr, c).flatten())
                .ok_or(TableauError::NoFilledCellBelow { row: r, col: c })?,
        };
        rows[r - 1].push(v);
    }
    Rpp::new(shape.clone(), rows)
}
