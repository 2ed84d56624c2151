//! Ideals with cached reduced Gröbner bases, and the ideal operations built
//! on them: membership, equality, intersection and colon.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::field::Field;
use crate::groebner::{count_standard_monomials, reduce_basis, reduced_basis, GroebnerBasis, GroebnerError};
use crate::poly::{OrderKind, PolyError, PolyRing, Polynomial, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("colon by the zero ideal")]
    ZeroColonDivisor,
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("colon generator division left a remainder")]
    InexactDivision,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// An ideal of `F[x_1, …, x_n]` given by generators.
///
/// Reduced Gröbner bases are computed on demand and cached per term order.
/// When `known_basis` is set the generators already form a Gröbner basis
/// for every order with `x_1 ≻ ⋯ ≻ x_n`, so no Buchberger pass is needed.
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F>>,
    known_basis: bool,
    cache: Mutex<HashMap<TermOrder, Arc<GroebnerBasis<F>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            known_basis: self.known_basis,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("nvars", &self.ring.nvars).field("gens", &self.gens).finish()
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: PolyRing<F>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens, known_basis: false, cache: Mutex::new(HashMap::new()) }
    }

    /// An ideal whose generators are known to be a Gröbner basis for every
    /// supported (non-eliminating) term order.
    pub fn with_known_basis(ring: PolyRing<F>, gens: Vec<Polynomial<F>>) -> Self {
        Ideal { known_basis: true, ..Ideal::new(ring, gens) }
    }

    pub fn unit(ring: PolyRing<F>) -> Self {
        let one = ring.one();
        Ideal::with_known_basis(ring, vec![one])
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn has_known_basis(&self) -> bool {
        self.known_basis
    }

    /// Stores an externally computed reduced basis.
    pub(crate) fn seed_basis(&self, basis: GroebnerBasis<F>) {
        debug_assert!(basis.is_reduced());
        self.cache.lock().expect("cache lock").insert(basis.order(), Arc::new(basis));
    }

    /// The reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner_basis(&self, order: TermOrder) -> Arc<GroebnerBasis<F>> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(&order) {
            return gb.clone();
        }
        let gb = if self.known_basis && order.elim == 0 {
            reduce_basis(&GroebnerBasis::from_known_basis(self.gens.clone(), order))
        } else {
            reduced_basis(&self.gens, order)
        };
        let gb = Arc::new(gb);
        self.cache.lock().expect("cache lock").insert(order, gb.clone());
        gb
    }

    fn check_ring(&self, nvars: usize, field: &F) -> Result<(), IdealError> {
        if self.ring.nvars != nvars || &self.ring.field != field {
            return Err(IdealError::RingMismatch);
        }
        Ok(())
    }

    /// Membership test by normal form against the reduced basis.
    pub fn contains(&self, f: &Polynomial<F>, order: TermOrder) -> Result<bool, IdealError> {
        self.check_ring(f.nvars(), f.field())?;
        Ok(self.groebner_basis(order).contains(f))
    }

    pub fn is_unit(&self, order: TermOrder) -> bool {
        self.groebner_basis(order).is_unit()
    }

    /// `dim_k R/I`; errors if the ideal is not zero-dimensional.
    pub fn quotient_dimension(&self, order: TermOrder) -> Result<u64, IdealError> {
        Ok(count_standard_monomials(&self.groebner_basis(order), self.ring.nvars)?)
    }

    /// `I + ⟨extra⟩`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Self, IdealError> {
        other.check_ring(self.ring.nvars, &self.ring.field)?;
        Ok(self.with_generators(other.gens.iter().cloned()))
    }
}

/// `f ∈ I`.
pub fn contains<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>, order: TermOrder) -> Result<bool, IdealError> {
    ideal.contains(f, order)
}

/// Two ideals are equal iff their reduced Gröbner bases coincide.
pub fn ideals_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>, order: TermOrder) -> Result<bool, IdealError> {
    b.check_ring(a.ring.nvars, &a.ring.field)?;
    Ok(a.groebner_basis(order).polys() == b.groebner_basis(order).polys())
}

/// `I ∩ J` under the default order kind (degree reverse lexicographic).
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>, IdealError> {
    intersect_with(a, b, OrderKind::DegRevLex)
}

/// `I ∩ J` by elimination: with a new variable `t` ranked above every
/// `x_i`, `I ∩ J = (t·I + (1 − t)·J) ∩ F[x]`.
///
/// The result's generators are the `t`-free members of the reduced
/// elimination basis, which form its reduced basis for `kind`.
pub fn intersect_with<F: Field>(a: &Ideal<F>, b: &Ideal<F>, kind: OrderKind) -> Result<Ideal<F>, IdealError> {
    b.check_ring(a.ring.nvars, &a.ring.field)?;
    let ring = a.ring.with_order(TermOrder::new(kind));
    let elim = TermOrder::eliminating(kind, 1);
    let ext = PolyRing::new(ring.field.clone(), ring.nvars + 1, elim);
    let t = ext.var(0);
    let one_minus_t = &ext.one() - &t;

    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    gens.extend(a.gens.iter().map(|g| &t * &g.prepend_vars(1, elim)));
    gens.extend(b.gens.iter().map(|h| &one_minus_t * &h.prepend_vars(1, elim)));

    let gb = reduced_basis(&gens, elim);
    let order = TermOrder::new(kind);
    let kept: Vec<_> = gb.polys().iter().filter_map(|p| p.drop_leading_vars(1, order)).collect();
    let result = Ideal::new(ring, kept.clone());
    result.seed_basis(reduce_basis(&GroebnerBasis::from_known_basis(kept, order)));
    Ok(result)
}

/// `I : J = {h : hJ ⊆ I}` under the default order kind.
pub fn colon<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>, IdealError> {
    colon_with(a, b, OrderKind::DegRevLex)
}

/// `I : J` as the intersection of `I : ⟨g⟩` over the generators `g` of
/// `J`, each single colon obtained as `(I ∩ ⟨g⟩) / g`.
pub fn colon_with<F: Field>(a: &Ideal<F>, b: &Ideal<F>, kind: OrderKind) -> Result<Ideal<F>, IdealError> {
    b.check_ring(a.ring.nvars, &a.ring.field)?;
    let mut divisors: Vec<&Polynomial<F>> = Vec::new();
    for g in b.gens.iter().filter(|g| !g.is_zero()) {
        if !divisors.contains(&g) {
            divisors.push(g);
        }
    }
    if divisors.is_empty() {
        return Err(IdealError::ZeroColonDivisor);
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in divisors {
        let single = colon_by_element(a, g, kind)?;
        acc = Some(match acc {
            None => single,
            Some(prev) => intersect_with(&prev, &single, kind)?,
        });
    }
    Ok(acc.expect("at least one divisor"))
}

fn colon_by_element<F: Field>(a: &Ideal<F>, g: &Polynomial<F>, kind: OrderKind) -> Result<Ideal<F>, IdealError> {
    if g.is_unit() {
        return Ok(a.clone());
    }
    let principal = Ideal::new(a.ring.clone(), vec![g.clone()]);
    let meet = intersect_with(a, &principal, kind)?;
    let order = TermOrder::new(kind);
    let g = g.with_order(order);
    let quotients = meet
        .gens()
        .iter()
        .map(|h| h.div_exact(&g).map_err(|_| IdealError::InexactDivision))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(a.ring.with_order(order), quotients))
}
