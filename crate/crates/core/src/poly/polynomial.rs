use std::cmp::Ordering;
use std::fmt;

use super::{Exponent, Monomial, PolyError, TermOrder};
use crate::field::Field;

/// The ambient ring `F[x_1, …, x_n]` together with the active term order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub order: TermOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize, order: TermOrder) -> Self {
        PolyRing { field, nvars, order }
    }

    pub fn with_order(&self, order: TermOrder) -> Self {
        PolyRing { order, ..self.clone() }
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, Monomial::one(self.nvars))
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        debug_assert_eq!(m.nvars(), self.nvars);
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial { ring: self.clone(), terms: vec![(c, m)] }
    }

    /// The variable with zero-based `index`, i.e. `x_{index+1}`.
    pub fn var(&self, index: usize) -> Polynomial<F> {
        self.var_pow(index, 1)
    }

    pub fn var_pow(&self, index: usize, exp: Exponent) -> Polynomial<F> {
        self.term(self.field.one(), Monomial::var(self.nvars, index, exp))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicate
    /// monomials and drops zero coefficients.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (F::Elem, Monomial)>) -> Polynomial<F> {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = self.field.add(&last.0, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.0) {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|t| self.field.is_zero(&t.0)) {
            out.pop();
        }
        Polynomial { ring: self.clone(), terms: out }
    }

    /// `x_{i+1}^e - 1` style helper: `m - 1`.
    pub fn monomial_minus_one(&self, m: Monomial) -> Polynomial<F> {
        self.from_terms([(self.field.one(), m), (self.field.from_i64(-1), Monomial::one(self.nvars))])
    }
}

/// A sparse polynomial: nonzero terms strictly descending in the ring's
/// term order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: PolyRing<F>,
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.field != other.ring.field || self.ring.nvars != other.ring.nvars {
            return false;
        }
        if self.ring.order == other.ring.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.ring.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    /// Wraps already-canonical terms (sorted descending, no zeros, no
    /// duplicates).
    pub(crate) fn from_sorted_unchecked(ring: PolyRing<F>, terms: Vec<(F::Elem, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field.is_zero(&t.0)));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F::Elem, Monomial)> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.ring.field.is_one(&self.terms[0].0)
    }

    pub fn leading_term(&self) -> Option<&(F::Elem, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// The same polynomial with terms re-sorted for `order`.
    pub fn with_order(&self, order: TermOrder) -> Self {
        if order == self.ring.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Polynomial { ring: self.ring.with_order(order), terms }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.nvars != other.ring.nvars {
            return Err(PolyError::AmbientMismatch(self.ring.nvars, other.ring.nvars));
        }
        if self.ring.field != other.ring.field {
            return Err(PolyError::FieldMismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = &self.ring.field;
        let ord = self.ring.order;
        let other = other.with_order(ord);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((fix(&b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { f.sub(&a[i].0, &b[j].0) } else { f.add(&a[i].0, &b[j].0) };
                    if !f.is_zero(&c) {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (fix(&t.0), t.1.clone())));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let f = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        if other.terms.len() == 1 {
            let (c, m) = &other.terms[0];
            return Ok(self.mul_term(c, m));
        }
        if self.terms.len() == 1 {
            let (c, m) = &self.terms[0];
            return Ok(other.with_order(self.ring.order).mul_term(c, m));
        }
        let products =
            self.terms.iter().flat_map(|(a, ma)| other.terms.iter().map(move |(b, mb)| (f.mul(a, b), ma.mul(mb))));
        Ok(self.ring.from_terms(products))
    }

    pub fn neg(&self) -> Self {
        let f = &self.ring.field;
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(c, m)| (f.neg(c), m.clone())).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (f.mul(a, c), m.clone())).collect(),
        }
    }

    /// `c · m · self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(a, t)| (f.mul(a, c), t.mul(m))).collect() }
    }

    /// Scales so the leading coefficient is one. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !self.ring.field.is_one(lc) => {
                let inv = self.ring.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_compatible(divisor)?;
        let divisor = divisor.with_order(self.ring.order);
        let (lc, lm) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let f = &self.ring.field;
        let lc_inv = f.inv(lc).expect("leading coefficient is nonzero");
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((c, m)) = rest.leading_term() {
            let q = m.div(lm).ok_or(PolyError::InexactDivision)?;
            let qc = f.mul(c, &lc_inv);
            rest = rest.merge(&divisor.mul_term(&qc, &q), true);
            quotient.push((qc, q));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Re-embeds into a ring with `extra` new leading variables and the
    /// given term order.
    pub fn prepend_vars(&self, extra: usize, order: TermOrder) -> Self {
        let ring = PolyRing::new(self.ring.field.clone(), self.ring.nvars + extra, order);
        ring.from_terms(self.terms.iter().map(|(c, m)| (c.clone(), m.prepend_vars(extra))))
    }

    /// Projects away the first `count` variables; `None` if any of them
    /// occurs.
    pub fn drop_leading_vars(&self, count: usize, order: TermOrder) -> Option<Self> {
        let ring = PolyRing::new(self.ring.field.clone(), self.ring.nvars - count, order);
        let terms: Option<Vec<_>> =
            self.terms.iter().map(|(c, m)| m.drop_leading_vars(count).map(|m| (c.clone(), m))).collect();
        Some(ring.from_terms(terms?))
    }

    /// Renames variables: variable index `v` becomes `perm[v]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        self.ring.from_terms(self.terms.iter().map(|(c, m)| (c.clone(), m.permute(perm))))
    }

    /// Evaluates at a point given as field elements.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.ring.field;
        self.terms.iter().fold(f.zero(), |acc, (c, m)| {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v = f.mul(&v, x);
                }
            }
            f.add(&acc, &v)
        })
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> std::ops::$trait<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;

            /// Panics when the operands live in different rings; use the
            /// `try_` form for a checked version.
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let (neg, mag) = self.ring.field.sign_magnitude(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `h_U^d`: the sum of all monomials of degree `d` in the variables
/// `{x_u : u ∈ U}`, with `U` given as one-based vertex labels.
///
/// `h_U^0 = 1` for every `U`, including the empty set.
pub fn complete_homogeneous<F: Field>(
    ring: &PolyRing<F>,
    vertices: &[usize],
    d: u32,
) -> Result<Polynomial<F>, PolyError> {
    if d == 0 {
        return Ok(ring.one());
    }
    if vertices.is_empty() {
        return Err(PolyError::EmptyVariableSet(d));
    }
    let mut vars: Vec<usize> = Vec::with_capacity(vertices.len());
    for &v in vertices {
        if v == 0 || v > ring.nvars {
            return Err(PolyError::VariableOutOfRange { index: v, nvars: ring.nvars });
        }
        if !vars.contains(&(v - 1)) {
            vars.push(v - 1);
        }
    }
    let mut terms = Vec::new();
    let mut exps = vec![0 as Exponent; ring.nvars];
    fill_degree(&vars, d as Exponent, &mut exps, &mut |e| {
        terms.push((ring.field.one(), Monomial::new(e)));
    });
    Ok(ring.from_terms(terms))
}

// Enumerates every way of distributing `remaining` among `vars`.
fn fill_degree(vars: &[usize], remaining: Exponent, exps: &mut [Exponent], emit: &mut dyn FnMut(&[Exponent])) {
    match vars {
        [] => {
            if remaining == 0 {
                emit(exps);
            }
        }
        [last] => {
            exps[*last] = remaining;
            emit(exps);
            exps[*last] = 0;
        }
        [first, rest @ ..] => {
            for e in 0..=remaining {
                exps[*first] = e;
                fill_degree(rest, remaining - e, exps, emit);
            }
            exps[*first] = 0;
        }
    }
}
