//! Elementary and complete symmetric polynomials evaluated on argument lists
//! of the form `(1, …, 1, t_lo, …, t_hi, x_1, …, x_m)`, the `φ^ℓ h_n`
//! expansion, and generalized binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::detkit::{det, PolyMatrix};
use crate::poly::MultiPoly;
use crate::shapes::SkewShape;

/// `a(a-1)⋯(a-k+1)/k!` for any integer `a`; zero for `k < 0`.
pub fn gen_binomial(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Complete,
}

/// Which symmetric polynomial to evaluate, and on which arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymSpec {
    pub kind: SymKind,
    pub degree: i64,
    /// Number of leading `1` arguments; negative counts mean none.
    pub ones: i64,
    /// Inclusive range of `t` indices; empty when `lo > hi`.
    pub t_range: (i64, i64),
    /// Number of `x` variables.
    pub m: usize,
}

impl SymSpec {
    pub fn elementary(degree: i64, ones: i64, m: usize) -> Self {
        SymSpec { kind: SymKind::Elementary, degree, ones, t_range: (1, 0), m }
    }

    pub fn complete(degree: i64, ones: i64, m: usize) -> Self {
        SymSpec { kind: SymKind::Complete, degree, ones, t_range: (1, 0), m }
    }

    pub fn with_t_range(mut self, lo: i64, hi: i64) -> Self {
        self.t_range = (lo, hi);
        self
    }

    fn t_indices(&self) -> impl Iterator<Item = usize> {
        let (lo, hi) = self.t_range;
        (lo.max(1)..=hi).map(|j| j as usize)
    }

    pub fn eval(&self) -> MultiPoly {
        match self.kind {
            SymKind::Elementary => elem_sym(self),
            SymKind::Complete => complete_sym(self),
        }
    }
}

/// `e_d` of the argument multiset, read off `∏(1 + u·arg)` truncated at `u^d`.
pub fn elem_sym(spec: &SymSpec) -> MultiPoly {
    assert_eq!(spec.kind, SymKind::Elementary);
    let d = spec.degree;
    if d < 0 {
        return MultiPoly::zero().with_vars(spec.m, 0);
    }
    let d = d as usize;
    let mut args: Vec<MultiPoly> = spec.t_indices().map(MultiPoly::t).collect();
    args.extend((1..=spec.m).map(MultiPoly::x));
    let ones = spec.ones.max(0);

    // dp[r] = e_r of the arguments seen so far
    let mut dp = vec![MultiPoly::zero(); d + 1];
    dp[0] = MultiPoly::one();
    for a in &args {
        for r in (1..=d).rev() {
            if dp[r - 1].is_zero() {
                continue;
            }
            let add = a * &dp[r - 1];
            dp[r] += &add;
        }
    }
    // the block of ones contributes binom(ones, j) to e_j
    let mut out = MultiPoly::zero();
    for (r, poly) in dp.iter().enumerate() {
        let c = gen_binomial(ones, (d - r) as i64);
        if !c.is_zero() {
            out += &poly.scale(&c);
        }
    }
    let nt = spec.t_range.1.max(0) as usize;
    out.with_vars(spec.m, if spec.t_range.0 <= spec.t_range.1 { nt } else { 0 })
}

/// `h_d` over `(1^ones, x_1, …, x_m)`.
///
/// Panics if `spec.t_range` is nonempty: complete symmetric polynomials are
/// never needed with `t` arguments.
pub fn complete_sym(spec: &SymSpec) -> MultiPoly {
    assert_eq!(spec.kind, SymKind::Complete);
    assert!(spec.t_range.0 > spec.t_range.1, "complete_sym takes no t arguments");
    let d = spec.degree;
    if d < 0 {
        return MultiPoly::zero().with_vars(spec.m, 0);
    }
    let d = d as usize;
    let mut dp = vec![MultiPoly::zero(); d + 1];
    dp[0] = MultiPoly::one();
    for i in 1..=spec.m {
        let a = MultiPoly::x(i);
        for r in 1..=d {
            let add = &a * &dp[r - 1];
            dp[r] += &add;
        }
    }
    // h_j(1^k) = binom(k + j - 1, j)
    let ones = spec.ones.max(0);
    let mut out = MultiPoly::zero();
    for (r, poly) in dp.iter().enumerate() {
        let j = (d - r) as i64;
        let c = if ones == 0 {
            if j == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        } else {
            gen_binomial(ones + j - 1, j)
        };
        if !c.is_zero() {
            out += &poly.scale(&c);
        }
    }
    out.with_vars(spec.m, 0)
}

/// `h_n(x_1..x_m)` with the conventions `h_0 = 1`, `h_n = 0` for `n < 0`.
pub fn h(n: i64, m: usize) -> MultiPoly {
    complete_sym(&SymSpec::complete(n, 0, m))
}

/// `e_n(x_1..x_m)`.
pub fn e(n: i64, m: usize) -> MultiPoly {
    elem_sym(&SymSpec::elementary(n, 0, m))
}

/// `φ^ℓ h_n = Σ_k binom(ℓ+k-1, k) h_{n-k}` in `m` variables.
pub fn phi_power_h(ell: i64, n: i64, m: usize) -> MultiPoly {
    let mut out = MultiPoly::zero().with_vars(m, 0);
    for k in 0..=n.max(-1) {
        let c = gen_binomial(ell + k - 1, k);
        if !c.is_zero() {
            out += &h(n - k, m).scale(&c);
        }
    }
    out
}

/// Classical Jacobi–Trudi determinant `det[h_{λ_i - i - μ_j + j}]`, i.e. the
/// skew Schur polynomial in `m` variables.
pub fn schur_jt(shape: &SkewShape, m: usize) -> MultiPoly {
    let lam = shape.outer();
    let mu = shape.inner();
    let n = lam.len();
    let entries = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let d = lam.part(i) as i64 - i as i64 - mu.part(j) as i64 + j as i64;
                    h(d, m)
                })
                .collect()
        })
        .collect();
    det(&PolyMatrix::new(entries)).with_vars(m, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(gen_binomial(5, 2), BigInt::from(10));
        for a in -5..5 {
            assert_eq!(gen_binomial(a, 0), BigInt::one());
        }
        assert_eq!(gen_binomial(-1, 1), BigInt::from(-1));
        assert_eq!(gen_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(gen_binomial(-2, 2), BigInt::from(3));
        assert_eq!(gen_binomial(3, 5), BigInt::zero());
        assert_eq!(gen_binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn elem_examples() {
        assert_eq!(elem_sym(&SymSpec::elementary(2, 1, 2)), poly("x1*x2 + x1 + x2"));
        assert_eq!(elem_sym(&SymSpec::elementary(2, 0, 2).with_t_range(1, 1)), poly("t1*x1 + t1*x2 + x1*x2"));
        assert!(elem_sym(&SymSpec::elementary(-1, 3, 2)).is_zero());
        assert!(elem_sym(&SymSpec::elementary(0, -2, 2)).is_one());
        // more arguments requested than available
        assert!(elem_sym(&SymSpec::elementary(4, 1, 2)).is_zero());
        // negative prefix clamps to none
        assert_eq!(elem_sym(&SymSpec::elementary(1, -3, 2)), poly("x1 + x2"));
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_sym(&SymSpec::complete(2, 1, 1)), poly("1 + x1 + x1^2"));
        assert!(complete_sym(&SymSpec::complete(0, 4, 3)).is_one());
        assert!(complete_sym(&SymSpec::complete(-3, 2, 3)).is_zero());
        assert_eq!(complete_sym(&SymSpec::complete(2, 0, 2)), poly("x1^2 + x1*x2 + x2^2"));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_power_h(1, 2, 1), poly("1 + x1 + x1^2"));
        for n in 0..4 {
            assert_eq!(phi_power_h(0, n, 2), h(n, 2));
        }
        assert_eq!(phi_power_h(-1, 3, 2), &h(3, 2) - &h(2, 2));
        assert!(phi_power_h(2, -1, 2).is_zero());
    }

    #[test]
    fn phi_power_matches_ones_prefix() {
        for ell in 0..=4 {
            for n in 0..=6 {
                for m in 0..=3 {
                    assert_eq!(
                        phi_power_h(ell, n, m),
                        complete_sym(&SymSpec::complete(n, ell, m)),
                        "ℓ={ell} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn vandermonde_convolution_exhaustive() {
        // Σ_k binom(A-k-1, B-k)·binom(k-1, k-ℓ) = binom(A-1, B-ℓ); k runs over ℓ..=B
        for a in 0..=8i64 {
            for b in 0..=8i64 {
                for ell in 0..=8i64 {
                    let lhs: BigInt =
                        (ell..=b).map(|k| gen_binomial(a - k - 1, b - k) * gen_binomial(k - 1, k - ell)).sum();
                    assert_eq!(lhs, gen_binomial(a - 1, b - ell), "A={a} B={b} ℓ={ell}");
                }
            }
        }
    }

    #[test]
    fn ones_prefix_binomial_expansion() {
        for n in 0..=5 {
            for k in 0..=4 {
                for m in 0..=3 {
                    let lhs = elem_sym(&SymSpec::elementary(n, k, m));
                    let rhs: MultiPoly = (0..=n).map(|l| e(l, m).scale(&gen_binomial(k, n - l))).sum();
                    assert_eq!(lhs, rhs, "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn e_h_duality() {
        for m in 0..=3 {
            for n in 1..=5 {
                let s: MultiPoly = (0..=n)
                    .map(|r| {
                        let term = &e(r, m) * &h(n - r, m);
                        if r % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum();
                assert!(s.is_zero(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn schur_examples() {
        let s21 = "2,1".parse().unwrap();
        assert_eq!(schur_jt(&s21, 2), poly("x1^2*x2 + x1*x2^2"));
        let s1 = "1".parse().unwrap();
        assert_eq!(schur_jt(&s1, 3), poly("x1 + x2 + x3"));
        let empty = "2,1/2,1".parse().unwrap();
        assert!(schur_jt(&empty, 3).is_one());
    }
}
