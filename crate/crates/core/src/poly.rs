//! Sparse polynomials with arbitrary-precision integer coefficients in two
//! families of variables, `x1..xm` and `t1..tL`.
//!
//! Terms are kept in a canonical order: by `x`-degree, then `x`-exponents
//! with larger leading exponents first, then `t`-degree, then `t`-exponents
//! likewise. This order is a monomial order, so the last term is the leading
//! term used by [`MultiPoly::exact_divide`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PolyError;

/// Exponent vectors of a monomial, with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    t: Vec<u32>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn graded_anti_lex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    // trimmed vectors compare lexicographically as if zero-padded
    da.cmp(&db).then_with(|| b.cmp(a))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_anti_lex(&self.x, &other.x).then_with(|| graded_anti_lex(&self.t, &other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(x: Vec<u32>, t: Vec<u32>) -> Self {
        Monomial { x: trim(x), t: trim(t) }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    /// Exponent of `x_i` (1-based).
    pub fn x_exp(&self, i: usize) -> u32 {
        self.x.get(i - 1).copied().unwrap_or(0)
    }

    /// Exponent of `t_j` (1-based).
    pub fn t_exp(&self, j: usize) -> u32 {
        self.t.get(j - 1).copied().unwrap_or(0)
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.t.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.t.is_empty()
    }

    fn add_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
    }

    fn sub_vec(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
        if b.len() > a.len() {
            return None;
        }
        let mut out = a.to_vec();
        for (o, &e) in out.iter_mut().zip(b) {
            *o = o.checked_sub(e)?;
        }
        Some(trim(out))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { x: Monomial::add_vec(&self.x, &other.x), t: Monomial::add_vec(&self.t, &other.t) }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial { x: Monomial::sub_vec(&self.x, &other.x)?, t: Monomial::sub_vec(&self.t, &other.t)? })
    }

    fn fmt_factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |name: char, exps: &[u32]| {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => out.push(format!("{name}{}", i + 1)),
                    _ => out.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        };
        push('t', &self.t);
        push('x', &self.x);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        write!(f, "{}", self.fmt_factors().join("*"))
    }
}

/// A polynomial in `x1..xm`, `t1..tL` with integer coefficients.
///
/// `nx` and `nt` are the declared variable counts; they only affect the
/// JSON form. Equality compares terms.
#[derive(Clone, Debug, Default)]
pub struct MultiPoly {
    nx: usize,
    nt: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant<I: Into<BigInt>>(c: I) -> Self {
        MultiPoly::from_terms(0, 0, [(Monomial::one(), c.into())])
    }

    /// The variable `x_i`, 1-based.
    pub fn x(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        MultiPoly::from_terms(i, 0, [(Monomial::new(e, vec![]), BigInt::one())])
    }

    /// The variable `t_j`, 1-based.
    pub fn t(j: usize) -> Self {
        assert!(j >= 1, "variables are 1-based");
        let mut e = vec![0; j];
        e[j - 1] = 1;
        MultiPoly::from_terms(0, j, [(Monomial::new(vec![], e), BigInt::one())])
    }

    pub fn monomial(m: Monomial) -> Self {
        MultiPoly::from_terms(m.x.len(), m.t.len(), [(m, BigInt::one())])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<T>(nx: usize, nt: usize, terms: T) -> Self
    where
        T: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = MultiPoly { nx, nt, terms: BTreeMap::new() };
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        self.nx = self.nx.max(m.x.len());
        self.nt = self.nt.max(m.t.len());
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    /// Raises the declared variable counts (never lowers them).
    pub fn with_vars(mut self, nx: usize, nt: usize) -> Self {
        self.nx = self.nx.max(nx);
        self.nt = self.nt.max(nt);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Greatest term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn has_t(&self) -> bool {
        self.terms.keys().any(|m| !m.t.is_empty())
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero().with_vars(self.nx, self.nt);
        }
        MultiPoly { nx: self.nx, nt: self.nt, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly::from_terms(
            self.nx.max(mono.x.len()),
            self.nt.max(mono.t.len()),
            self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one().with_vars(self.nx, self.nt);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Sets every `t_j` to 1; the result has no `t`-variables.
    pub fn specialize_t_one(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.nx,
            0,
            self.terms.iter().map(|(m, c)| (Monomial { x: m.x.clone(), t: vec![] }, c.clone())),
        )
    }

    /// The terms of maximal total `x`-degree.
    pub fn top_component(&self) -> MultiPoly {
        let top = self.terms.keys().map(|m| m.x_degree()).max();
        let terms = self.terms.iter().filter(|(m, _)| Some(m.x_degree()) == top).map(|(m, c)| (m.clone(), c.clone()));
        MultiPoly::from_terms(self.nx, self.nt, terms)
    }

    /// The terms of total x-degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.x_degree() == d).map(|(m, c)| (m.clone(), c.clone()));
        MultiPoly::from_terms(self.nx, self.nt, terms)
    }

    /// Exchanges `x_i` and `x_j` (1-based).
    pub fn swap_x(&self, i: usize, j: usize) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| {
            let n = m.x.len().max(i).max(j);
            let mut x = m.x.clone();
            x.resize(n, 0);
            x.swap(i - 1, j - 1);
            (Monomial::new(x, m.t.clone()), c.clone())
        });
        MultiPoly::from_terms(self.nx.max(i).max(j), self.nt, terms)
    }

    /// Exact quotient `self / den`; fails unless the remainder is zero.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (lead_m, lead_c) = den.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero().with_vars(self.nx, self.nt);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let step = MultiPoly::from_terms(0, 0, [(qm, qc)]);
            rem -= &(&step * den);
            quot += &step;
        }
        Ok(quot)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut x = m.x.clone();
                x.resize(self.nx.max(x.len()), 0);
                let mut t = m.t.clone();
                t.resize(self.nt.max(t.len()), 0);
                JsonTerm { c: c.to_string(), x, t }
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<MultiPoly, PolyError> {
        let nx = terms.iter().map(|t| t.x.len()).max().unwrap_or(0);
        let nt = terms.iter().map(|t| t.t.len()).max().unwrap_or(0);
        let parsed = terms
            .iter()
            .map(|t| {
                let c: BigInt = t.c.parse().map_err(|_| PolyError::Parse(format!("bad coefficient `{}`", t.c)))?;
                Ok((Monomial::new(t.x.clone(), t.t.clone()), c))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(MultiPoly::from_terms(nx, nt, parsed))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("terms serialize")
    }

    pub fn from_json(text: &str) -> Result<MultiPoly, PolyError> {
        let terms: Vec<JsonTerm> = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
        MultiPoly::from_json_terms(&terms)
    }
}

/// One term of the JSON form: `{"c": "-3", "x": [..], "t": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub c: String,
    pub x: Vec<u32>,
    pub t: Vec<u32>,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    /// Parses the human-readable form, e.g. `-1 + 3*t2*x1^2 - x2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| PolyError::Parse(format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut neg = false;
        let mut have_op = false;
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && !compact[..i].ends_with('^') {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                    have_op = false;
                }
                if have_op {
                    return Err(err("dangling operator"));
                }
                have_op = true;
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("dangling operator"));
        }
        pieces.push((neg, cur));

        let mut out = MultiPoly::zero();
        for (neg, body) in pieces {
            let mut coeff = BigInt::one();
            let mut x: Vec<u32> = Vec::new();
            let mut t: Vec<u32> = Vec::new();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() {
                    let c: BigInt = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coeff *= c;
                    continue;
                }
                let target = match first {
                    'x' => &mut x,
                    't' => &mut t,
                    _ => return Err(err("unknown variable")),
                };
                let rest = &factor[1..];
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                if idx == 0 {
                    return Err(err("variables are 1-based"));
                }
                if target.len() < idx {
                    target.resize(idx, 0);
                }
                target[idx - 1] += exp;
            }
            if neg {
                coeff = -coeff;
            }
            let (nx, nt) = (x.len(), t.len());
            out += &MultiPoly::from_terms(nx, nt, [(Monomial::new(x, t), coeff)]);
        }
        Ok(out)
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        self.nx = self.nx.max(rhs.nx);
        self.nt = self.nt.max(rhs.nt);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &'a MultiPoly) {
        self.nx = self.nx.max(rhs.nx);
        self.nt = self.nt.max(rhs.nt);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero().with_vars(self.nx.max(rhs.nx), self.nt.max(rhs.nt));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nx: self.nx, nt: self.nt, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut out = MultiPoly::one();
        for p in iter {
            out = &out * &p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let x1 = MultiPoly::x(1);
        let x2 = MultiPoly::x(2);
        let one = MultiPoly::one();
        assert_eq!(&(&x1 + &one) * &(&x1 - &one), poly("x1^2 - 1"));
        let p = poly("3*x1*t2 - x2^3 + 7");
        assert_eq!(&p + &MultiPoly::zero(), p);
        assert_eq!(&(&x1 + &x2) * &(&x1 * &x2), poly("x1^2*x2 + x1*x2^2"));
        assert_eq!(-&p + p.clone(), MultiPoly::zero());
    }

    #[test]
    fn canonical_order_and_printing() {
        let g = poly("x1*x2^2 + x1^2*x2 + x2^2 + x1*x2 + x1^2");
        assert_eq!(g.to_string(), "x1^2 + x1*x2 + x2^2 + x1^2*x2 + x1*x2^2");
        let r = poly("x1*x2 + t1*x2 + x1*t1");
        assert_eq!(r.to_string(), "t1*x1 + t1*x2 + x1*x2");
        assert_eq!(poly("x1^2 - 1").to_string(), "-1 + x1^2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(poly("-2*x3 + 0*x1").to_string(), "-2*x3");
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(poly("t1*x1 + t1*x2 + x1*x2").specialize_t_one(), poly("x1 + x2 + x1*x2"));
        let p = poly("x1 + x2^2");
        assert_eq!(p.specialize_t_one(), p);
        assert_eq!(poly("t1*t2").specialize_t_one(), MultiPoly::one());
        assert_eq!(poly("t1*t2").specialize_t_one().nt(), 0);
    }

    #[test]
    fn top_component_examples() {
        let g = poly("x1^2 + x1*x2 + x2^2 + x1^2*x2 + x1*x2^2");
        assert_eq!(g.top_component(), poly("x1^2*x2 + x1*x2^2"));
        assert_eq!(MultiPoly::constant(5).top_component(), MultiPoly::constant(5));
        assert_eq!(poly("x1 + x2").top_component(), poly("x1 + x2"));
        assert!(MultiPoly::zero().top_component().is_zero());
        assert_eq!(g.homogeneous_component(2), poly("x1^2 + x1*x2 + x2^2"));
        assert!(g.homogeneous_component(4).is_zero());
    }

    #[test]
    fn exact_divide_examples() {
        let d = poly("x1 - x2");
        assert_eq!(poly("x1^2 - x2^2").exact_divide(&d).unwrap(), poly("x1 + x2"));
        assert!(MultiPoly::zero().exact_divide(&d).unwrap().is_zero());
        let num = poly("x1^3") * poly("1 + x2") - poly("x2^3") * poly("1 + x1");
        assert_eq!(num.exact_divide(&d).unwrap(), poly("x1^2 + x1*x2 + x2^2 + x1^2*x2 + x1*x2^2"));
    }

    #[test]
    fn exact_divide_errors() {
        assert_eq!(poly("x1 + 1").exact_divide(&MultiPoly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!(poly("x1^2 + 1").exact_divide(&poly("x1 - x2")), Err(PolyError::NotDivisible));
        assert_eq!(poly("3*x1").exact_divide(&poly("2")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x0", "y1", "x1 +", "3**x1", "x1^a"] {
            assert!(bad.parse::<MultiPoly>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_form() {
        let p = poly("-3*t2*x1^2 + x2").with_vars(3, 2);
        let js = p.to_json();
        assert_eq!(js, r#"[{"c":"1","x":[0,1,0],"t":[0,0]},{"c":"-3","x":[2,0,0],"t":[0,1]}]"#);
        assert_eq!(MultiPoly::from_json(&js).unwrap(), p);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = poly("99999999999*x1 + 99999999999");
        let q = p.pow(4);
        assert_eq!(q.coeff(&Monomial::one()).to_string(), "99999999996000000000059999999999600000000001");
    }

    #[test]
    fn swap_variables() {
        assert_eq!(poly("x1^2*x3 + t1").swap_x(1, 3), poly("x3^2*x1 + t1"));
    }
}
