//! Normal forms, Buchberger's algorithm, reduced Gröbner bases and
//! standard-monomial counting.
//!
//! S-pairs are chosen by the normal strategy (smallest lcm under the term
//! order itself, so Lex does not fall back to degree) and pruned with Buchberger's coprime criterion and the chain criterion in
//! the Gebauer–Möller formulation.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use thiserror::Error;

use crate::field::Field;
use crate::poly::{Exponent, Monomial, PolyError, PolyRing, Polynomial, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("ideal is not zero-dimensional: x{0} has no pure power among the leading monomials")]
    NotZeroDimensional(usize),
    #[error("quotient dimension does not fit in 64 bits")]
    DimensionOverflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    polys: Vec<Polynomial<F>>,
    order: TermOrder,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    /// Wraps polynomials the caller knows to form a Gröbner basis for
    /// `order` (for instance a universal Gröbner basis).
    pub fn from_known_basis(polys: Vec<Polynomial<F>>, order: TermOrder) -> Self {
        let polys = polys.into_iter().map(|p| p.with_order(order)).filter(|p| !p.is_zero()).collect();
        GroebnerBasis { polys, order, reduced: false }
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial<F>> {
        self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_unit())
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        Reducer::new(&self.polys, self.order).reduce(&f.with_order(self.order))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The reduced Gröbner basis of the same ideal.
    pub fn reduce(&self) -> Self {
        reduce_basis(self)
    }

    /// Adds generators and completes to the reduced Gröbner basis of the
    /// enlarged ideal, reusing the fact that `self` is already a basis.
    pub fn extend(&self, gens: &[Polynomial<F>]) -> Self {
        let Some(ring) = ring_of(self.polys.iter().chain(gens), self.order) else {
            return self.clone();
        };
        let mut builder = Builder::new(ring);
        for p in &self.polys {
            builder.seed(p.with_order(self.order));
        }
        for g in gens {
            if builder.add_generator(g.with_order(self.order)) {
                break;
            }
        }
        builder.complete();
        builder.finish(self.order).reduce()
    }
}

fn ring_of<'a, F: Field>(mut polys: impl Iterator<Item = &'a Polynomial<F>>, order: TermOrder) -> Option<PolyRing<F>> {
    polys.next().map(|p| p.ring().with_order(order))
}

struct HeapKey {
    m: Monomial,
    order: TermOrder,
}

impl PartialEq for HeapKey {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for HeapKey {}
impl PartialOrd for HeapKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

/// Reducer set sorted by leading monomial ascending; the first divisor in
/// that presentation is always the one used.
struct Reducer<'a, F: Field> {
    order: TermOrder,
    divisors: Vec<(&'a Monomial, F::Elem, &'a Polynomial<F>)>,
}

impl<'a, F: Field> Reducer<'a, F> {
    fn new(polys: &'a [Polynomial<F>], order: TermOrder) -> Self {
        Self::from_iter(polys.iter(), order)
    }

    fn from_iter(polys: impl Iterator<Item = &'a Polynomial<F>>, order: TermOrder) -> Self {
        let mut divisors: Vec<_> = polys
            .filter_map(|p| {
                debug_assert_eq!(p.order(), order);
                let (lc, lm) = p.leading_term()?;
                Some((lm, p.field().inv(lc).expect("nonzero"), p))
            })
            .collect();
        divisors.sort_by(|a, b| order.cmp(a.0, b.0));
        Reducer { order, divisors }
    }

    fn find(&self, m: &Monomial) -> Option<&(&'a Monomial, F::Elem, &'a Polynomial<F>)> {
        self.divisors.iter().find(|d| d.0.divides(m))
    }

    /// Full reduction: no monomial of the result is divisible by a leading
    /// monomial of the reducer set.
    fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let ring = f.ring().clone();
        if self.divisors.is_empty() || f.is_zero() {
            return f.clone();
        }
        let field = &ring.field;
        let mut coeffs: HashMap<Monomial, F::Elem> = HashMap::with_capacity(f.len() * 2);
        let mut heap = BinaryHeap::with_capacity(f.len() * 2);
        for (c, m) in f.terms() {
            coeffs.insert(m.clone(), c.clone());
            heap.push(HeapKey { m: m.clone(), order: self.order });
        }
        let mut out = Vec::new();
        while let Some(HeapKey { m, .. }) = heap.pop() {
            let c = coeffs.remove(&m).expect("heap and map stay in sync");
            if field.is_zero(&c) {
                continue;
            }
            match self.find(&m) {
                Some((lm, lc_inv, g)) => {
                    let q = m.div(lm).expect("divisor found");
                    let factor = field.mul(&c, lc_inv);
                    for (gc, gm) in &g.terms()[1..] {
                        let key = gm.mul(&q);
                        match coeffs.entry(key) {
                            Entry::Occupied(mut e) => {
                                let v = field.sub_mul(e.get(), &factor, gc);
                                *e.get_mut() = v;
                            }
                            Entry::Vacant(e) => {
                                heap.push(HeapKey { m: e.key().clone(), order: self.order });
                                e.insert(field.neg(&field.mul(&factor, gc)));
                            }
                        }
                    }
                }
                None => out.push((c, m)),
            }
        }
        Polynomial::from_sorted_unchecked(ring, out)
    }
}

/// Fully reduces `f` modulo `basis` under `order`.
///
/// The reducer is always the first basis element, in ascending order of
/// leading monomials, whose leading monomial divides the current term.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: TermOrder) -> Polynomial<F> {
    let basis: Vec<_> = basis.iter().map(|g| g.with_order(order)).collect();
    Reducer::new(&basis, order).reduce(&f.with_order(order))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder<F: Field> {
    ring: PolyRing<F>,
    polys: Vec<Polynomial<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    unit: bool,
}

impl<F: Field> Builder<F> {
    fn new(ring: PolyRing<F>) -> Self {
        Builder { ring, polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), unit: false }
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn active_polys(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p)
    }

    fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        Reducer::from_iter(self.active_polys(), self.ring.order).reduce(f)
    }

    /// Adds a member of a known Gröbner basis without generating pairs.
    fn seed(&mut self, p: Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        if p.is_unit() {
            self.unit = true;
        }
        self.polys.push(p.monic());
        self.active.push(true);
    }

    /// Reduces and inserts a generator. Returns true once the ideal is
    /// known to be the unit ideal.
    fn add_generator(&mut self, g: Polynomial<F>) -> bool {
        if self.unit {
            return true;
        }
        let r = self.reduce(&g);
        if !r.is_zero() {
            self.insert(r.monic());
        }
        self.unit
    }

    fn insert(&mut self, h: Polynomial<F>) {
        if h.is_unit() {
            self.unit = true;
        }
        let hi = self.polys.len();
        let lm_h = h.leading_monomial().expect("nonzero").clone();
        self.polys.push(h);
        self.active.push(true);

        let candidates: Vec<(Pair, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm_g = self.lm(g);
                (Pair { i: g, j: hi, lcm: lm_g.lcm(&lm_h) }, lm_g.coprime(&lm_h))
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs survive this
        // step so they can still eliminate others.
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (idx, (p, coprime)) in candidates.iter().enumerate() {
            let dominated = |q: &(Pair, bool)| q.0.lcm.divides(&p.lcm);
            if *coprime || (!candidates[idx + 1..].iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push((p.clone(), *coprime));
            }
        }

        // Old pairs whose lcm is divisible by lm(h) and differs from both
        // lcms with h are redundant.
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().expect("nonzero");
        self.pairs.retain(|p| !lm_h.divides(&p.lcm) || lm(p.i).lcm(&lm_h) == p.lcm || lm(p.j).lcm(&lm_h) == p.lcm);
        self.pairs.extend(kept.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));

        for g in 0..hi {
            if self.active[g] && lm_h.divides(lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then_with(|| (a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial<F> {
        let one = self.ring.field.one();
        let a = self.polys[p.i].mul_term(&one, &p.lcm.div(self.lm(p.i)).expect("lcm"));
        let b = self.polys[p.j].mul_term(&one, &p.lcm.div(self.lm(p.j)).expect("lcm"));
        &a - &b
    }

    fn complete(&mut self) {
        while !self.unit {
            let Some(pair) = self.next_pair() else { break };
            let s = self.s_polynomial(&pair);
            let r = self.reduce(&s);
            if !r.is_zero() {
                self.insert(r.monic());
            }
        }
    }

    fn finish(self, order: TermOrder) -> GroebnerBasis<F> {
        if self.unit {
            return GroebnerBasis { polys: vec![self.ring.one()], order, reduced: true };
        }
        let polys = self.polys.into_iter().zip(self.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
        GroebnerBasis { polys, order, reduced: false }
    }
}

/// Buchberger's algorithm. The result is a minimal Gröbner basis (not yet
/// inter-reduced) of the ideal generated by `gens`.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: TermOrder) -> GroebnerBasis<F> {
    let Some(ring) = ring_of(gens.iter(), order) else {
        return GroebnerBasis { polys: Vec::new(), order, reduced: true };
    };
    let mut builder = Builder::new(ring);
    for g in gens {
        if builder.add_generator(g.with_order(order)) {
            break;
        }
    }
    builder.complete();
    builder.finish(order)
}

/// Computes the reduced Gröbner basis of `⟨gens⟩` directly.
pub fn reduced_basis<F: Field>(gens: &[Polynomial<F>], order: TermOrder) -> GroebnerBasis<F> {
    reduce_basis(&buchberger(gens, order))
}

/// Turns a Gröbner basis into the unique reduced one: monic members, none
/// of whose monomials is divisible by another member's leading monomial.
/// Members are listed by leading monomial, ascending.
pub fn reduce_basis<F: Field>(basis: &GroebnerBasis<F>) -> GroebnerBasis<F> {
    let order = basis.order;
    let mut polys: Vec<Polynomial<F>> =
        basis.polys.iter().filter(|p| !p.is_zero()).map(|p| p.with_order(order).monic()).collect();
    polys.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    // A member whose leading monomial is divisible by another's is replaced
    // by its normal form modulo the rest. For a Gröbner basis that normal
    // form is zero; for other input this still yields an autoreduced set.
    let mut minimal: Vec<Polynomial<F>> = Vec::with_capacity(polys.len());
    let mut pending = polys;
    while let Some(p) = pending.pop() {
        let lm = p.leading_monomial().unwrap();
        let redundant = minimal.iter().chain(&pending).any(|q| q.leading_monomial().unwrap().divides(lm));
        if !redundant {
            minimal.push(p);
            continue;
        }
        let r = Reducer::from_iter(minimal.iter().chain(&pending), order).reduce(&p);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let lm_r = r.leading_monomial().unwrap().clone();
        // Members whose leading monomial the new one divides go back to
        // the work list.
        let (keep, back): (Vec<_>, Vec<_>) =
            minimal.drain(..).partition(|q| !lm_r.divides(q.leading_monomial().unwrap()));
        minimal = keep;
        pending.extend(back);
        pending.push(r);
    }
    minimal.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    for idx in 0..minimal.len() {
        let reduced = {
            let others = minimal.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, q)| q);
            Reducer::from_iter(others, order).reduce(&minimal[idx])
        };
        minimal[idx] = reduced;
    }
    GroebnerBasis { polys: minimal, order, reduced: true }
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(polys: &[Polynomial<F>], order: TermOrder) -> bool {
    let polys: Vec<_> = polys.iter().filter(|p| !p.is_zero()).map(|p| p.with_order(order).monic()).collect();
    let reducer = Reducer::new(&polys, order);
    let one = match polys.first() {
        Some(p) => p.field().one(),
        None => return true,
    };
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let (li, lj) = (polys[i].leading_monomial().unwrap(), polys[j].leading_monomial().unwrap());
            if li.coprime(lj) {
                continue;
            }
            let lcm = li.lcm(lj);
            let s = &polys[i].mul_term(&one, &lcm.div(li).unwrap()) - &polys[j].mul_term(&one, &lcm.div(lj).unwrap());
            if !reducer.reduce(&s).is_zero() {
                return false;
            }
        }
    }
    true
}

// Per-variable exponent bounds from pure-power leading monomials; a leading
// monomial equal to one signals the unit ideal.
fn box_bounds(lms: &[&Monomial], nvars: usize) -> Result<Option<Vec<Exponent>>, GroebnerError> {
    if lms.iter().any(|m| m.is_one()) {
        return Ok(None);
    }
    let mut bounds: Vec<Option<Exponent>> = vec![None; nvars];
    for m in lms {
        if let Some((v, e)) = m.as_pure_power() {
            bounds[v] = Some(bounds[v].map_or(e, |b| b.min(e)));
        }
    }
    bounds
        .into_iter()
        .enumerate()
        .map(|(v, b)| b.ok_or(GroebnerError::NotZeroDimensional(v + 1)))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

// Depth-first walk over exponent vectors, pruning any prefix that is
// already divisible by a leading monomial (its extensions are too).
fn walk_standard(
    lms: &[&Monomial],
    bounds: &[Exponent],
    exps: &mut Vec<Exponent>,
    var: usize,
    visit: &mut dyn FnMut(&[Exponent]) -> Result<(), GroebnerError>,
) -> Result<(), GroebnerError> {
    if var == bounds.len() {
        return visit(exps);
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        let m = Monomial::new(exps);
        if lms.iter().any(|lm| lm.divides(&m)) {
            break;
        }
        walk_standard(lms, bounds, exps, var + 1, visit)?;
    }
    exps[var] = 0;
    Ok(())
}

/// All monomials outside the initial ideal. Errors if the ideal is not
/// zero-dimensional.
pub fn standard_monomials<F: Field>(basis: &GroebnerBasis<F>, nvars: usize) -> Result<Vec<Monomial>, GroebnerError> {
    let lms = basis.leading_monomials();
    if lms.is_empty() && nvars == 0 {
        return Ok(vec![Monomial::one(0)]);
    }
    let Some(bounds) = box_bounds(&lms, nvars)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    walk_standard(&lms, &bounds, &mut vec![0; nvars], 0, &mut |e| {
        out.push(Monomial::new(e));
        Ok(())
    })?;
    Ok(out)
}

/// `|B(I)|`, the vector-space dimension of the quotient ring, without
/// materializing the monomials.
pub fn count_standard_monomials<F: Field>(basis: &GroebnerBasis<F>, nvars: usize) -> Result<u64, GroebnerError> {
    let lms = basis.leading_monomials();
    if lms.is_empty() && nvars == 0 {
        return Ok(1);
    }
    let Some(bounds) = box_bounds(&lms, nvars)? else {
        return Ok(0);
    };
    let mut count = 0u64;
    walk_standard(&lms, &bounds, &mut vec![0; nvars], 0, &mut |_| {
        count = count.checked_add(1).ok_or(GroebnerError::DimensionOverflow)?;
        Ok(())
    })?;
    Ok(count)
}

/// `dim_k R/⟨gens⟩` computed through a Gröbner basis for `order`.
pub fn quotient_dimension<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    order: TermOrder,
) -> Result<u64, GroebnerError> {
    count_standard_monomials(&buchberger(gens, order), ring.nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::OrderKind;

    fn ring(n: usize, order: TermOrder) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, n, order)
    }

    fn parse_all<F: Field>(r: &PolyRing<F>, ps: &[&str]) -> Vec<Polynomial<F>> {
        ps.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, TermOrder::DEGREVLEX);
        let nf = normal_form(&r.parse("x1^3").unwrap(), &parse_all(&r, &["x1^3 - 1"]), r.order);
        assert!(nf.is_one());
        let nf = normal_form(&r.parse("x1^2*x2").unwrap(), &parse_all(&r, &["x1^2 - 1", "x2^2 - 1"]), r.order);
        assert_eq!(nf.to_string(), "x2");
    }

    #[test]
    fn triangle_graph_polynomial_reduces_to_zero_mod_two_colorings() {
        let r = ring(3, TermOrder::DEGREVLEX);
        let f = r.parse("x1 - x2").unwrap();
        let f = &(&f * &r.parse("x1 - x3").unwrap()) * &r.parse("x2 - x3").unwrap();
        // Independent check: the expansion has 6 terms.
        assert_eq!(f.len(), 6);
        let ink = parse_all(&r, &["x1^2 - 1", "x2^2 - 1", "x3^2 - 1"]);
        for kind in OrderKind::ALL {
            assert!(normal_form(&f, &ink, TermOrder::new(kind)).is_zero());
        }
    }

    #[test]
    fn one_s_polynomial() {
        let r = ring(2, TermOrder::LEX);
        let gb = reduced_basis(&parse_all(&r, &["x1^2 - 1", "x1 + x2"]), TermOrder::LEX);
        let rendered: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["x2^2 - 1", "x1 + x2"]);
        assert!(is_groebner_basis(gb.polys(), TermOrder::LEX));
    }

    #[test]
    fn universal_basis_is_unchanged() {
        for kind in OrderKind::ALL {
            let ord = TermOrder::new(kind);
            let r = ring(3, ord);
            let gens = parse_all(&r, &["x1^3 - 1", "x2^3 - 1", "x3^3 - 1"]);
            let gb = reduced_basis(&gens, ord);
            assert_eq!(gb.len(), 3);
            for g in &gens {
                assert!(gb.polys().contains(g));
            }
        }
    }

    #[test]
    fn unit_ideal() {
        let r = ring(2, TermOrder::DEGREVLEX);
        let gb = reduced_basis(&[r.one()], r.order);
        assert_eq!(gb.polys(), &[r.one()]);
        assert!(gb.is_unit());
        assert_eq!(count_standard_monomials(&gb, 2), Ok(0));
        let gb = reduced_basis(&parse_all(&r, &["x1 - 1", "x1 - 2"]), r.order);
        assert!(gb.is_unit());
    }

    #[test]
    fn reduce_examples() {
        let r = ring(2, TermOrder::LEX);
        let gb = GroebnerBasis::from_known_basis(parse_all(&r, &["x1 + x2", "2*x2^2 - 2"]), TermOrder::LEX);
        let red: Vec<String> = gb.reduce().polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(red, vec!["x2^2 - 1", "x1 + x2"]);
        let gb = GroebnerBasis::from_known_basis(parse_all(&r, &["x1", "x1 + x2"]), TermOrder::LEX);
        let red: Vec<String> = gb.reduce().polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(red, vec!["x2", "x1"]);
    }

    #[test]
    fn standard_monomials_examples() {
        let r = ring(3, TermOrder::DEGREVLEX);
        let gb = reduced_basis(&parse_all(&r, &["x1^3 - 1", "x2^3 - 1", "x3^3 - 1"]), r.order);
        let sm = standard_monomials(&gb, 3).unwrap();
        assert_eq!(sm.len(), 27);
        assert!(sm.iter().all(|m| m.exps().iter().all(|&e| e < 3)));

        let r2 = ring(2, TermOrder::DEGREVLEX);
        let gb = reduced_basis(&[r2.var(0)], r2.order);
        assert_eq!(standard_monomials(&gb, 2), Err(GroebnerError::NotZeroDimensional(2)));
    }

    #[test]
    fn coloring_ideal_of_path_has_six_standard_monomials() {
        // ⟨x3^3 - 1, h_{2,3}^2, x1 + x2 + x3⟩: leading terms x3^3, x2^2, x1,
        // so the standard monomials are x2^a x3^b with a < 2, b < 3.
        for kind in OrderKind::ALL {
            let ord = TermOrder::new(kind);
            let r = ring(3, ord);
            let gens = parse_all(&r, &["x3^3 - 1", "x2^2 + x2*x3 + x3^2", "x1 + x2 + x3"]);
            assert!(is_groebner_basis(&gens, ord));
            assert_eq!(quotient_dimension(&r, &gens, ord), Ok(6));
        }
    }

    #[test]
    fn extend_matches_monolithic() {
        let r = ring(3, TermOrder::DEGREVLEX);
        let base = reduced_basis(&parse_all(&r, &["x1^3 - 1", "x2^3 - 1", "x3^3 - 1"]), r.order);
        let edges = parse_all(&r, &["x1^2 + x1*x2 + x2^2", "x2^2 + x2*x3 + x3^2"]);
        let mut inc = base.clone();
        for e in &edges {
            inc = inc.extend(std::slice::from_ref(e));
        }
        let mut all = base.polys().to_vec();
        all.extend(edges);
        assert_eq!(inc, reduced_basis(&all, r.order));
        assert_eq!(count_standard_monomials(&inc, 3), Ok(12));
    }

    #[test]
    fn reduced_basis_is_presentation_independent() {
        let f = PrimeField::new(7).unwrap();
        for kind in OrderKind::ALL {
            let ord = TermOrder::new(kind);
            let r = PolyRing::new(f, 3, ord);
            let a = parse_all(&r, &["x1^2 - x2", "x2^2 - x3", "x1*x3 - 1"]);
            let mut b = vec![a[2].scale(&3), &a[0] + &a[2], a[1].scale(&5)];
            b.reverse();
            assert_eq!(reduced_basis(&a, ord), reduced_basis(&b, ord));
        }
    }

    #[test]
    fn nf_idempotent_and_sound() {
        let r = ring(3, TermOrder::DEGLEX);
        let gens = parse_all(&r, &["x1^2 - x2*x3", "x2^2 - 1", "x1*x3 - x2"]);
        let gb = reduced_basis(&gens, r.order);
        let f = r.parse("x1^3*x2 + 5*x1*x2*x3^2 - x3").unwrap();
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn dimension_is_order_invariant() {
        let gens_text = ["x1^2 - x2", "x2^3 - x1*x3", "x3^2 - 1"];
        let dims: Vec<u64> = OrderKind::ALL
            .iter()
            .map(|&k| {
                let ord = TermOrder::new(k);
                let r = ring(3, ord);
                quotient_dimension(&r, &parse_all(&r, &gens_text), ord).unwrap()
            })
            .collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "{dims:?}");
    }
}
