//! Operator trees and their evaluation.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebra::poly::Term;
use crate::algebra::{Blade, Rational, SpinorPolynomial};
use crate::error::Result;

/// A linear operator on `P(R^n) ⊗ Cl_n`, built from primitives.
///
/// `Compose([a, b, c])` is `a ∘ b ∘ c`: the rightmost factor acts first.
#[derive(Clone)]
pub enum OperatorExpr {
    Identity,
    /// `∂/∂x_i`.
    Partial(usize),
    /// Multiplication by `x_i`.
    MulCoord(usize),
    /// `r_i`, the sign flip of `x_i`.
    Reflect(usize),
    /// `p -> (p - r_i p) / x_i`, with the division carried out exactly.
    ReflectionQuotient(usize),
    /// Left multiplication by a blade.
    CliffordLeft(Blade),
    ScalarMul(Rational),
    Sum(Vec<OperatorExpr>),
    Compose(Vec<OperatorExpr>),
    /// A shared, labelled subtree whose action on basis elements is memoized
    /// by the [`Evaluator`].
    Named(Arc<NamedOp>),
}

pub struct NamedOp {
    pub label: String,
    pub expr: OperatorExpr,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr::Sum(Vec::new())
    }

    pub fn scalar(c: Rational) -> Self {
        OperatorExpr::ScalarMul(c)
    }

    pub fn named(label: impl Into<String>, expr: OperatorExpr) -> Self {
        OperatorExpr::Named(Arc::new(NamedOp {
            label: label.into(),
            expr,
        }))
    }

    /// Sum of the given operators, flattening nested sums.
    pub fn sum(items: impl IntoIterator<Item = OperatorExpr>) -> Self {
        let mut out = Vec::new();
        for it in items {
            match it {
                OperatorExpr::Sum(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            OperatorExpr::Sum(out)
        }
    }

    /// Ordered product, leftmost factor applied last.
    pub fn product(items: impl IntoIterator<Item = OperatorExpr>) -> Self {
        let mut out = Vec::new();
        for it in items {
            match it {
                OperatorExpr::Compose(inner) => out.extend(inner),
                OperatorExpr::Identity => {}
                other => out.push(other),
            }
        }
        match out.len() {
            0 => OperatorExpr::Identity,
            1 => out.pop().unwrap(),
            _ => OperatorExpr::Compose(out),
        }
    }

    pub fn scaled(&self, c: Rational) -> Self {
        if c.is_one() {
            return self.clone();
        }
        OperatorExpr::product([OperatorExpr::ScalarMul(c), self.clone()])
    }

    pub fn then(&self, after: &OperatorExpr) -> Self {
        OperatorExpr::product([after.clone(), self.clone()])
    }

    pub fn square(&self) -> Self {
        OperatorExpr::product([self.clone(), self.clone()])
    }

    pub fn pow(&self, e: u32) -> Self {
        OperatorExpr::product((0..e).map(|_| self.clone()))
    }

    /// Applies the operator with a throwaway evaluator.
    pub fn apply(&self, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        Evaluator::new().apply(self, p)
    }

    /// Prefix rendering used in failure reports.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s);
        s
    }

    fn render_into(&self, s: &mut String) {
        use std::fmt::Write;
        match self {
            OperatorExpr::Identity => s.push_str("id"),
            OperatorExpr::Partial(i) => write!(s, "d{i}").unwrap(),
            OperatorExpr::MulCoord(i) => write!(s, "x{i}").unwrap(),
            OperatorExpr::Reflect(i) => write!(s, "r{i}").unwrap(),
            OperatorExpr::ReflectionQuotient(i) => write!(s, "rq{i}").unwrap(),
            OperatorExpr::CliffordLeft(b) => write!(s, "{b}").unwrap(),
            OperatorExpr::ScalarMul(c) => write!(s, "{c}").unwrap(),
            OperatorExpr::Named(op) => s.push_str(&op.label),
            OperatorExpr::Sum(items) | OperatorExpr::Compose(items) => {
                let head = if matches!(self, OperatorExpr::Sum(_)) { "+" } else { "*" };
                if items.is_empty() {
                    s.push_str(if head == "+" { "0" } else { "id" });
                    return;
                }
                write!(s, "({head}").unwrap();
                for it in items {
                    s.push(' ');
                    it.render_into(s);
                }
                s.push(')');
            }
        }
    }
}

impl fmt::Debug for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        OperatorExpr::sum([self, rhs])
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        OperatorExpr::sum([self, -rhs])
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scaled(-Rational::ONE)
    }
}

/// Composition: `a * b` applies `b` first.
impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        OperatorExpr::product([self, rhs])
    }
}

pub fn commutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
    a.clone() * b.clone() - b.clone() * a.clone()
}

pub fn anticommutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
    a.clone() * b.clone() + b.clone() * a.clone()
}

/// Evaluates operator trees, caching the image of every basis element
/// under each [`NamedOp`] it meets. The cache holds a reference to each
/// named node, so keys stay valid for the evaluator's lifetime.
#[derive(Default)]
pub struct Evaluator {
    cache: HashMap<usize, (Arc<NamedOp>, HashMap<Term, SpinorPolynomial>)>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of cached basis images, across all named nodes.
    pub fn cached_entries(&self) -> usize {
        self.cache.values().map(|(_, m)| m.len()).sum()
    }

    pub fn apply(&mut self, op: &OperatorExpr, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        if p.is_zero() {
            return Ok(p.clone());
        }
        match op {
            OperatorExpr::Identity => Ok(p.clone()),
            OperatorExpr::Partial(i) => p.partial(*i),
            OperatorExpr::MulCoord(i) => p.mul_coordinate(*i),
            OperatorExpr::Reflect(i) => p.reflect(*i),
            OperatorExpr::ReflectionQuotient(i) => p.reflection_quotient(*i),
            OperatorExpr::CliffordLeft(b) => p.clifford_left(*b),
            OperatorExpr::ScalarMul(c) => Ok(p.scale(c)),
            OperatorExpr::Sum(items) => {
                let mut acc = SpinorPolynomial::zero(p.dim());
                for it in items {
                    let v = self.apply(it, p)?;
                    acc.add_scaled(&Rational::ONE, &v);
                }
                Ok(acc)
            }
            OperatorExpr::Compose(items) => {
                let mut cur = p.clone();
                for it in items.iter().rev() {
                    cur = self.apply(it, &cur)?;
                    if cur.is_zero() {
                        break;
                    }
                }
                Ok(cur)
            }
            OperatorExpr::Named(named) => self.apply_named(named, p),
        }
    }

    fn apply_named(&mut self, named: &Arc<NamedOp>, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        let key = Arc::as_ptr(named) as usize;
        let mut acc = SpinorPolynomial::zero(p.dim());
        for (&(m, b), c) in p.terms() {
            let hit = self
                .cache
                .get(&key)
                .and_then(|(_, map)| map.get(&(m, b)))
                .cloned();
            let image = match hit {
                Some(v) => v,
                None => {
                    let basis = SpinorPolynomial::basis_element(p.dim(), m, b);
                    let v = self.apply(&named.expr, &basis)?;
                    self.cache
                        .entry(key)
                        .or_insert_with(|| (named.clone(), HashMap::new()))
                        .1
                        .insert((m, b), v.clone());
                    v
                }
            };
            acc.add_scaled(c, &image);
        }
        Ok(acc)
    }
}
