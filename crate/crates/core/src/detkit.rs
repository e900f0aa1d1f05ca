//! Exact determinants over `MultiPoly` and the matrices of the determinantal
//! formulas for `g_{λ/μ}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::FormulaError;
use crate::poly::MultiPoly;
use crate::shapes::{Partition, SkewShape};
use crate::symfn::{complete_sym, elem_sym, phi_power_h, SymSpec};
use crate::tableaux::g_oracle;

/// A square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    /// Panics unless `entries` is square.
    pub fn new(entries: Vec<Vec<MultiPoly>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix { entries }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        PolyMatrix::new((1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available.
pub fn det(m: &PolyMatrix) -> MultiPoly {
    let n = m.dim();
    assert!(n < 64, "dimension too large for a column bitmask");
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();

    fn minor(m: &PolyMatrix, row: usize, cols: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        if row == m.dim() {
            return MultiPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero();
        let mut sign_pos = true;
        for j in 0..m.dim() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = m.get(row, j);
            if !entry.is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << j), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    if sign_pos {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let nx = m.rows().iter().flatten().map(|p| p.nx()).max().unwrap_or(0);
    let nt = m.rows().iter().flatten().map(|p| p.nt()).max().unwrap_or(0);
    minor(m, 0, all, &mut memo).with_vars(nx, nt)
}

fn check_dimension(lam: &Partition, mu: &Partition, n: usize, by_rows: bool) -> Result<(), FormulaError> {
    if !lam.contains(mu) {
        return Err(FormulaError::Contract(format!("{mu} is not contained in {lam}")));
    }
    let (a, b, what) =
        if by_rows { (lam.len(), mu.len(), "ℓ(λ), ℓ(μ)") } else { (lam.first(), mu.first(), "λ₁, μ₁") };
    if n < a || n < b {
        return Err(FormulaError::Contract(format!("dimension {n} is below {what} = {a}, {b}")));
    }
    Ok(())
}

/// The matrix `[e_{λ'_i - i - μ'_j + j}(…)]` of size `n ≥ λ₁, μ₁`.
///
/// Plain entries take `λ'_i - 1 - μ'_j` leading ones; refined entries take
/// `t_{μ'_j + 1}, …, t_{λ'_i - 1}` instead.
pub fn jt_e_matrix(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    refined: bool,
) -> Result<PolyMatrix, FormulaError> {
    check_dimension(lam, mu, n, false)?;
    let lc = lam.conjugate();
    let mc = mu.conjugate();
    let nt = lc.first().saturating_sub(1);
    Ok(PolyMatrix::from_fn(n, |i, j| {
        let (li, mj) = (lc.part(i) as i64, mc.part(j) as i64);
        let degree = li - i as i64 - mj + j as i64;
        let spec = if refined {
            SymSpec::elementary(degree, 0, m).with_t_range(mj + 1, li - 1)
        } else {
            SymSpec::elementary(degree, li - 1 - mj, m)
        };
        elem_sym(&spec).with_vars(m, if refined { nt } else { 0 })
    }))
}

/// The matrix `[φ^{i-j} h_{λ_i - i - μ_j + j}]` of size `n ≥ ℓ(λ), ℓ(μ)`.
pub fn jt_h_dual_matrix(lam: &Partition, mu: &Partition, n: usize, m: usize) -> Result<PolyMatrix, FormulaError> {
    check_dimension(lam, mu, n, true)?;
    Ok(PolyMatrix::from_fn(n, |i, j| {
        let degree = lam.part(i) as i64 - i as i64 - mu.part(j) as i64 + j as i64;
        phi_power_h(i as i64 - j as i64, degree, m)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HVariant {
    /// `[φ^{i-j} h_{λ_i - i + j}]`
    Phi,
    /// `[h_{λ_i - i + j}(1^{i-1}, x)]`
    Positive,
}

/// Straight-shape `h`-matrices of size `ℓ(λ)`.
pub fn h_straight_matrix(lam: &Partition, m: usize, variant: HVariant) -> PolyMatrix {
    PolyMatrix::from_fn(lam.len(), |i, j| {
        let degree = lam.part(i) as i64 - i as i64 + j as i64;
        match variant {
            HVariant::Phi => phi_power_h(i as i64 - j as i64, degree, m),
            HVariant::Positive => complete_sym(&SymSpec::complete(degree, i as i64 - 1, m)),
        }
    })
}

/// `h_d(1^k, x_v)` as a polynomial in the single variable `x_v`.
fn h_ones_single(d: i64, ones: i64, v: usize) -> MultiPoly {
    if d < 0 {
        return MultiPoly::zero();
    }
    // Σ_j binom(ones + j - 1, j) x_v^{d-j}
    let spec = SymSpec::complete(d, ones, 1);
    let in_x1 = complete_sym(&spec);
    let mut out = MultiPoly::zero();
    for (mono, c) in in_x1.terms() {
        let e = mono.x_exp(1);
        out += &MultiPoly::x(v).pow(e).scale(c);
    }
    out
}

/// The alternant numerator `det[h_{λ_i + n - i}(1^{i-1}, x_j)]`.
pub fn bialternant_numerator(lam: &Partition, n: usize) -> Result<PolyMatrix, FormulaError> {
    if n < lam.len() {
        return Err(FormulaError::Contract(format!("n = {n} is below ℓ(λ) = {}", lam.len())));
    }
    Ok(PolyMatrix::from_fn(n, |i, j| {
        let d = lam.part(i) as i64 + n as i64 - i as i64;
        h_ones_single(d, i as i64 - 1, j).with_vars(n, 0)
    }))
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut out = MultiPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out * &(&MultiPoly::x(i) - &MultiPoly::x(j));
        }
    }
    out.with_vars(n, 0)
}

/// `g_λ(x_1..x_n)` as an alternant divided by the Vandermonde product.
pub fn bialternant(lam: &Partition, n: usize) -> Result<MultiPoly, FormulaError> {
    let num = det(&bialternant_numerator(lam, n)?);
    Ok(num.exact_divide(&vandermonde(n))?.with_vars(n, 0))
}

/// Every route to `g_{λ/μ}` the library knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Oracle,
    JtE,
    JtERefined,
    JtHDual,
    HPhi,
    HPositive,
    Bialternant,
}

impl Formula {
    pub const ALL: [Formula; 7] = [
        Formula::Oracle,
        Formula::JtE,
        Formula::JtERefined,
        Formula::JtHDual,
        Formula::HPhi,
        Formula::HPositive,
        Formula::Bialternant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Oracle => "oracle",
            Formula::JtE => "jt_e",
            Formula::JtERefined => "jt_e_refined",
            Formula::JtHDual => "jt_h_dual",
            Formula::HPhi => "h_phi",
            Formula::HPositive => "h_positive",
            Formula::Bialternant => "bialternant",
        }
    }

    pub fn straight_only(self) -> bool {
        matches!(self, Formula::HPhi | Formula::HPositive | Formula::Bialternant)
    }

    /// Whether the route produces `t`-variables natively.
    pub fn supports_refined(self) -> bool {
        matches!(self, Formula::Oracle | Formula::JtE | Formula::JtERefined)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| FormulaError::UnknownFormula(s.to_string()))
    }
}

/// Computes `g_{λ/μ}(x_1..x_m)` by `formula`, with `t`-variables kept only
/// when `refined` is set. Square formulas use their minimal dimension.
pub fn g_via(formula: Formula, shape: &SkewShape, m: usize, refined: bool) -> Result<MultiPoly, FormulaError> {
    let lam = shape.outer();
    let mu = shape.inner();
    if formula.straight_only() && !shape.is_straight() {
        return Err(FormulaError::Inapplicable {
            formula: formula.name().into(),
            reason: format!("{shape} is not a straight shape"),
        });
    }
    if refined && !formula.supports_refined() {
        return Err(FormulaError::Inapplicable { formula: formula.name().into(), reason: "no refined form".into() });
    }
    let out = match formula {
        Formula::Oracle => g_oracle(shape, m, refined),
        Formula::JtE if refined => det(&jt_e_matrix(lam, mu, lam.first(), m, true)?),
        Formula::JtE => det(&jt_e_matrix(lam, mu, lam.first(), m, false)?),
        Formula::JtERefined => {
            let g = det(&jt_e_matrix(lam, mu, lam.first(), m, true)?);
            if refined {
                g
            } else {
                g.specialize_t_one()
            }
        }
        Formula::JtHDual => det(&jt_h_dual_matrix(lam, mu, lam.len(), m)?),
        Formula::HPhi => det(&h_straight_matrix(lam, m, HVariant::Phi)),
        Formula::HPositive => det(&h_straight_matrix(lam, m, HVariant::Positive)),
        Formula::Bialternant => {
            if m < lam.len() {
                return Err(FormulaError::Inapplicable {
                    formula: formula.name().into(),
                    reason: format!("needs at least ℓ(λ) = {} variables, got {m}", lam.len()),
                });
            }
            bialternant(lam, m)?
        }
    };
    Ok(out.with_vars(m, 0))
}
