//! Sparse `Cl_n`-valued polynomials, i.e. elements of `P(R^n) ⊗ Cl_n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::blade::{blade_mul, Blade};
use super::monomial::Monomial;
use super::rational::Rational;
use super::MAX_DIM;
use crate::error::{Error, Result};

pub type Term = (Monomial, Blade);

/// Finite sum of `coeff * monomial ⊗ blade`. Zero coefficients are never
/// stored and terms iterate in lexicographic `(monomial, blade)` order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinorPolynomial {
    n: usize,
    terms: BTreeMap<Term, Rational>,
}

impl SpinorPolynomial {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "unsupported dimension {n}");
        SpinorPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(n: usize, monomial: Monomial, blade: Blade, coeff: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(monomial, blade, coeff);
        p
    }

    pub fn basis_element(n: usize, monomial: Monomial, blade: Blade) -> Self {
        Self::term(n, monomial, blade, Rational::ONE)
    }

    /// Constant `1 ⊗ blade`.
    pub fn blade(n: usize, blade: Blade) -> Self {
        Self::basis_element(n, Monomial::one(n), blade)
    }

    pub fn one(n: usize) -> Self {
        Self::blade(n, Blade::UNIT)
    }

    /// `c * x^exps ⊗ blade`, checked against the dimension.
    pub fn from_parts(exps: &[u32], blade: Blade, coeff: Rational) -> Result<Self> {
        let m = Monomial::from_exponents(exps)?;
        if !blade.fits(exps.len()) {
            return Err(Error::DimensionMismatch {
                expected: exps.len(),
                found: blade.max_index(),
            });
        }
        Ok(Self::term(exps.len(), m, blade, coeff))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial, blade: Blade) -> Rational {
        self.terms
            .get(&(*monomial, blade))
            .cloned()
            .unwrap_or(Rational::ZERO)
    }

    pub fn add_term(&mut self, monomial: Monomial, blade: Blade, coeff: Rational) {
        debug_assert_eq!(monomial.dim(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((monomial, blade)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &SpinorPolynomial) {
        assert_eq!(self.n, other.n, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for ((m, b), v) in &other.terms {
            let term = if c.is_one() { v.clone() } else { c * v };
            self.add_term(*m, *b, term);
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.add_scaled(&Rational::ONE, other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.add_scaled(&-Rational::ONE, other);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        SpinorPolynomial { n: self.n, terms }
    }

    fn map_terms(&self, mut f: impl FnMut(&Term, &Rational) -> Option<(Term, Rational)>) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            if let Some(((m, b), c)) = f(k, v) {
                out.add_term(m, b, c);
            }
        }
        out
    }

    /// Multiplication by the coordinate `x_i`.
    pub fn mul_coordinate(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut out = Self::zero(self.n);
        for ((m, b), c) in &self.terms {
            let m2 = m.with_exponent(i, m.exponent(i) + 1)?;
            out.terms.insert((m2, *b), c.clone());
        }
        Ok(out)
    }

    /// Left multiplication by a blade; signs are folded into coefficients.
    pub fn clifford_left(&self, blade: Blade) -> Result<Self> {
        if !blade.fits(self.n) {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: blade.max_index(),
            });
        }
        Ok(self.clifford_left_unchecked(blade))
    }

    pub(crate) fn clifford_left_unchecked(&self, blade: Blade) -> Self {
        let mut out = Self::zero(self.n);
        for ((m, b), c) in &self.terms {
            let (s, nb) = blade_mul(blade, *b);
            out.terms.insert((*m, nb), if s < 0 { -c } else { c.clone() });
        }
        out
    }

    pub fn clifford_right(&self, blade: Blade) -> Result<Self> {
        if !blade.fits(self.n) {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: blade.max_index(),
            });
        }
        let mut out = Self::zero(self.n);
        for ((m, b), c) in &self.terms {
            let (s, nb) = blade_mul(*b, blade);
            out.terms.insert((*m, nb), if s < 0 { -c } else { c.clone() });
        }
        Ok(out)
    }

    pub fn partial(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        Ok(self.map_terms(|(m, b), c| {
            let a = m.exponent(i);
            (a > 0).then(|| {
                let m2 = m.with_exponent(i, a - 1).expect("decrement");
                ((m2, *b), c * &Rational::from(a))
            })
        }))
    }

    /// The reflection `r_i : x_i -> -x_i` acting on the polynomial part.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut out = self.clone();
        for ((m, _), c) in out.terms.iter_mut() {
            if m.exponent(i) % 2 == 1 {
                *c = -&*c;
            }
        }
        Ok(out)
    }

    /// `(p - r_i p) / x_i`, computed by forming the reflection difference
    /// first and then dividing every surviving term by `x_i`.
    pub fn reflection_quotient(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let diff = self.try_sub(&self.reflect(i)?)?;
        let mut out = Self::zero(self.n);
        for ((m, b), c) in diff.terms {
            let a = m.exponent(i);
            if a == 0 {
                return Err(Error::InexactDivision { index: i });
            }
            out.terms.insert((m.with_exponent(i, a - 1)?, b), c);
        }
        Ok(out)
    }

    /// Product in `P(R^n) ⊗ Cl_n`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for ((m1, b1), c1) in &self.terms {
            for ((m2, b2), c2) in &other.terms {
                let (s, b) = blade_mul(*b1, *b2);
                let c = c1 * c2;
                out.add_term(m1.mul(m2)?, b, if s < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Degree of a homogeneous polynomial; `None` for zero or mixed degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(m, _)| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// True when some term carries a positive power of `x_i`.
    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|(m, _)| m.exponent(i) > 0)
    }

    /// Setting `x_i = 0`.
    pub fn restrict_zero(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        Ok(self.map_terms(|k, c| (k.0.exponent(i) == 0).then(|| (*k, c.clone()))))
    }

    /// Relabels `x_i -> x_{perm[i-1]}` and `e_i -> e_{perm[i-1]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Ok(self.map_terms(|(m, b), c| {
            let (s, nb) = b.permuted(perm);
            Some(((m.permuted(perm), nb), if s < 0 { -c } else { c.clone() }))
        }))
    }

    /// Part of the polynomial supported on the given blade, as a scalar
    /// (unit blade) polynomial.
    pub fn blade_component(&self, blade: Blade) -> Self {
        self.map_terms(|(m, b), c| (*b == blade).then(|| ((*m, Blade::UNIT), c.clone())))
    }

    /// Canonical text form: one `a1,...,an | i1 i2 ... | num/den` line per
    /// term in lexicographic order.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::new();
        for ((m, b), c) in &self.terms {
            s.push_str(&m.to_csv());
            s.push_str(" | ");
            s.push_str(&b.to_index_string());
            if !b.is_unit() {
                s.push(' ');
            }
            s.push_str("| ");
            s.push_str(&c.to_fraction_string());
            s.push('\n');
        }
        s
    }

    pub fn parse_canonical(n: usize, text: &str) -> Result<Self> {
        let mut out = Self::zero(n);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let parts: Vec<&str> = line.split('|').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("malformed term line {line:?}")));
            }
            let exps = parts[0]
                .split(',')
                .map(|a| a.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(e.to_string()))?;
            if exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: exps.len(),
                });
            }
            let idx = parts[1]
                .split_whitespace()
                .map(|a| a.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(e.to_string()))?;
            let blade = Blade::from_indices(&idx)?;
            let c: Rational = parts[2].parse()?;
            out.terms
                .insert((Monomial::from_exponents(&exps)?, blade), c);
        }
        Ok(out)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if perm.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    for &p in perm {
        if p == 0 || p > n || seen[p] {
            return Err(Error::Structure(format!("not a permutation of 1..={n}: {perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Every `monomial ⊗ blade` of polynomial degree `k` over `n` variables.
pub fn basis_of_graded_component(n: usize, k: u32) -> Vec<SpinorPolynomial> {
    graded_terms(n, k, true)
        .into_iter()
        .map(|(m, b)| SpinorPolynomial::basis_element(n, m, b))
        .collect()
}

/// Basis keys of `P_k ⊗ Cl_n` (or `P_k` alone when `with_blades` is false).
pub fn graded_terms(n: usize, k: u32, with_blades: bool) -> Vec<Term> {
    let blades = if with_blades {
        Blade::all(n)
    } else {
        vec![Blade::UNIT]
    };
    let mut out = Vec::new();
    for m in Monomial::all_of_degree(n, k) {
        for &b in &blades {
            out.push((m, b));
        }
    }
    out
}

impl Add for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    /// Panics on a dimension mismatch; see [`SpinorPolynomial::try_add`].
    fn add(self, rhs: &SpinorPolynomial) -> SpinorPolynomial {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl Sub for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    fn sub(self, rhs: &SpinorPolynomial) -> SpinorPolynomial {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl Neg for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    fn neg(self) -> SpinorPolynomial {
        self.scale(&-Rational::ONE)
    }
}

impl fmt::Display for SpinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((m, b), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if m.degree() > 0 {
                write!(f, "{m}")?;
            }
            if !b.is_unit() {
                write!(f, "{b}")?;
            }
            if m.degree() == 0 && b.is_unit() {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
