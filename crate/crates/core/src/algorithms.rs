//! Decision procedures for k-colorability and unique k-colorability, and
//! the decomposition check `I_{G,k} = ⋂_ν A_ν`.
//!
//! Every entry point takes a [`FieldConfig`] and dispatches to the
//! matching coefficient field at the start of the computation.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{
    coloring_ideal, coloring_ring, edge_generator, graph_polynomial, i_nk_generators, ideal_i_gk, ideal_i_nk,
    ideal_j_nk_capped, nu_basis, recognize_nu_shape, ColoringError,
};
use crate::field::{Field, FieldConfig, FieldError, PrimeField, Rationals};
use crate::graph::{enumerate_colorings, ColorPartition, Graph, GraphError, OracleBudget};
use crate::groebner::{count_standard_monomials, reduced_basis, GroebnerBasis, GroebnerError};
use crate::ideal::{colon_with, ideals_equal, intersect_with, Ideal, IdealError};
use crate::poly::{OrderKind, PolyRing, Polynomial, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("method nf-graph-poly-jnk is capped at n <= {max_n}, k <= {max_k} (got n = {n}, k = {k})")]
    JnkCap { n: usize, k: usize, max_n: usize, max_k: usize },
    #[error("method {0} needs a proper coloring using all k colors")]
    MissingColoring(Method),
    #[error("coloring covers {got} vertices but the graph has {n}")]
    ColoringSize { got: usize, n: usize },
    #[error("supplied coloring {0} is not proper")]
    ImproperColoring(ColorPartition),
    #[error("supplied coloring uses {l} colors, not all k = {k}")]
    NotAllColors { l: usize, k: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl AlgorithmError {
    /// Errors caused by a configuration the tool refuses to run (field
    /// characteristic, size caps, oracle budget) rather than bad input.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            AlgorithmError::Field(_)
                | AlgorithmError::JnkCap { .. }
                | AlgorithmError::Graph(GraphError::BudgetExceeded { .. })
                | AlgorithmError::Coloring(
                    ColoringError::Field(_)
                        | ColoringError::JnkTooLarge { .. }
                        | ColoringError::CliqueLargerThanGraph { .. }
                        | ColoringError::ZeroColors
                )
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    QuotientDim,
    ReduceOne,
    NfGraphPolyInk,
    NfGraphPolyJnk,
    NuBasisMembership,
    ColonMembership,
    QuotientDimFactorial,
    GbShape,
}

impl Method {
    pub const COLORABILITY: [Method; 4] =
        [Method::QuotientDim, Method::ReduceOne, Method::NfGraphPolyInk, Method::NfGraphPolyJnk];
    pub const UNIQUENESS: [Method; 4] =
        [Method::NuBasisMembership, Method::ColonMembership, Method::QuotientDimFactorial, Method::GbShape];

    pub fn name(self) -> &'static str {
        match self {
            Method::QuotientDim => "quotient-dim",
            Method::ReduceOne => "reduce-one",
            Method::NfGraphPolyInk => "nf-graph-poly-ink",
            Method::NfGraphPolyJnk => "nf-graph-poly-jnk",
            Method::NuBasisMembership => "nu-basis-membership",
            Method::ColonMembership => "colon-membership",
            Method::QuotientDimFactorial => "quotient-dim-factorial",
            Method::GbShape => "gb-shape",
        }
    }

    pub fn decides_uniqueness(self) -> bool {
        Method::UNIQUENESS.contains(&self)
    }

    pub fn needs_coloring(self) -> bool {
        matches!(self, Method::NuBasisMembership | Method::ColonMembership)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::COLORABILITY
            .into_iter()
            .chain(Method::UNIQUENESS)
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Evidence backing a verdict; the variant depends on the method.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// `dim_k R/I_{G,k}`.
    Dimension(u64),
    /// Rendered reduced Gröbner basis of `I_{G,k}`.
    Basis(Vec<String>),
    /// The coloring read off the Gröbner basis.
    Partition(ColorPartition),
    /// Normal form of the graph polynomial: term count and leading term.
    Residue { terms: usize, leading: Option<String> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub answer: bool,
    pub method: Method,
    pub order: OrderKind,
    pub field: FieldConfig,
    pub certificate: Option<Certificate>,
    pub elapsed: Duration,
}

impl Verdict {
    pub fn report(&self) -> VerdictReport {
        VerdictReport {
            answer: self.answer,
            method: self.method,
            order: self.order,
            field: self.field,
            dim: match self.certificate {
                Some(Certificate::Dimension(d)) => Some(d),
                _ => None,
            },
            partition: match &self.certificate {
                Some(Certificate::Partition(p)) => Some(p.clone()),
                _ => None,
            },
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        self.report().to_json()
    }
}

/// The JSON form of a [`Verdict`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub answer: bool,
    pub method: Method,
    pub order: OrderKind,
    pub field: FieldConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<ColorPartition>,
    pub elapsed_ms: f64,
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub order: OrderKind,
    pub field: FieldConfig,
    /// Reduce the graph polynomial factor by factor instead of expanding
    /// it first.
    pub incremental: bool,
    /// Build the basis of `I_{G,k}` by adding one edge generator at a time
    /// to the basis of `I_{n,k}`. Off by default: the intermediate ideals
    /// of sparse subgraphs have much larger bases than the final one, and
    /// a single Buchberger run over all generators is usually far faster.
    pub edge_by_edge: bool,
    pub jnk_max_n: usize,
    pub jnk_max_k: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            order: OrderKind::DegRevLex,
            field: FieldConfig::Rationals,
            incremental: true,
            edge_by_edge: false,
            jnk_max_n: 12,
            jnk_max_k: 3,
        }
    }
}

impl SolveOptions {
    pub fn new(order: OrderKind, field: FieldConfig) -> Self {
        SolveOptions { order, field, ..Default::default() }
    }

    /// Expand the graph polynomial and build every basis in one pass.
    pub fn monolithic(self) -> Self {
        SolveOptions { incremental: false, edge_by_edge: false, ..self }
    }

    pub fn edge_by_edge(self) -> Self {
        SolveOptions { edge_by_edge: true, ..self }
    }

    fn term_order(&self) -> TermOrder {
        TermOrder::new(self.order)
    }
}

macro_rules! with_field {
    ($cfg:expr, $k:expr, |$f:ident| $body:expr) => {{
        $cfg.validate($k)?;
        match $cfg {
            FieldConfig::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldConfig::PrimeField(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
        }
    }};
}

/// Decides whether `g` has a proper `k`-coloring.
pub fn is_k_colorable(g: &Graph, k: usize, method: Method, opts: &SolveOptions) -> Result<Verdict, AlgorithmError> {
    assert!(!method.decides_uniqueness(), "{method} decides unique colorability");
    if k == 0 {
        return Err(ColoringError::ZeroColors.into());
    }
    let start = Instant::now();
    let (answer, certificate) = with_field!(opts.field, k, |f| colorable_in(f, g, k, method, opts)?);
    Ok(Verdict { answer, method, order: opts.order, field: opts.field, certificate, elapsed: start.elapsed() })
}

/// Decides whether `g` is uniquely `k`-colorable. `NuBasisMembership`
/// and `ColonMembership` need a proper coloring using all `k` colors.
pub fn is_uniquely_k_colorable(
    g: &Graph,
    k: usize,
    method: Method,
    coloring: Option<&ColorPartition>,
    opts: &SolveOptions,
) -> Result<Verdict, AlgorithmError> {
    assert!(method.decides_uniqueness(), "{method} decides colorability");
    if k == 0 {
        return Err(ColoringError::ZeroColors.into());
    }
    let coloring = if method.needs_coloring() {
        let p = coloring.ok_or(AlgorithmError::MissingColoring(method))?;
        check_coloring(g, k, p)?;
        Some(p)
    } else {
        None
    };
    let start = Instant::now();
    let (answer, certificate) = with_field!(opts.field, k, |f| unique_in(f, g, k, method, coloring, opts)?);
    Ok(Verdict { answer, method, order: opts.order, field: opts.field, certificate, elapsed: start.elapsed() })
}

/// Runs whichever family `method` belongs to.
pub fn decide(
    g: &Graph,
    k: usize,
    method: Method,
    coloring: Option<&ColorPartition>,
    opts: &SolveOptions,
) -> Result<Verdict, AlgorithmError> {
    if method.decides_uniqueness() {
        is_uniquely_k_colorable(g, k, method, coloring, opts)
    } else {
        is_k_colorable(g, k, method, opts)
    }
}

fn check_coloring(g: &Graph, k: usize, p: &ColorPartition) -> Result<(), AlgorithmError> {
    if p.n() != g.n() {
        return Err(AlgorithmError::ColoringSize { got: p.n(), n: g.n() });
    }
    if !p.is_proper_for(g) {
        return Err(AlgorithmError::ImproperColoring(p.clone()));
    }
    if p.len() != k {
        return Err(AlgorithmError::NotAllColors { l: p.len(), k });
    }
    Ok(())
}

/// The reduced Gröbner basis of `I_{G,k}`. Edge by edge, generators are
/// added one at a time starting from the universal basis of `I_{n,k}`;
/// with `stop_at_unit` the loop ends as soon as `1` appears. Either way
/// Buchberger's algorithm stops once it derives a nonzero constant.
pub fn graph_ideal_basis<F: Field>(
    field: F,
    g: &Graph,
    k: usize,
    order: TermOrder,
    edge_by_edge: bool,
    stop_at_unit: bool,
) -> GroebnerBasis<F> {
    let ring = PolyRing::new(field, g.n(), order);
    if !edge_by_edge {
        return reduced_basis(ideal_i_gk(ring.field.clone(), g, k).gens(), order);
    }
    let mut gb = GroebnerBasis::from_known_basis(i_nk_generators(&ring, k), order).reduce();
    for (i, j) in g.edges() {
        gb = gb.extend(&[edge_generator(&ring, i, j, k)]);
        if stop_at_unit && gb.is_unit() {
            break;
        }
    }
    gb
}

/// Normal form of the graph polynomial modulo `basis`. Incrementally,
/// `f := nf((x_i − x_j)·f)` edge by edge, stopping once `f = 0`.
pub fn graph_poly_residue<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
    basis: &GroebnerBasis<F>,
    incremental: bool,
) -> Polynomial<F> {
    if !incremental {
        return basis.normal_form(&graph_polynomial(ring, g));
    }
    let mut f = ring.one();
    for (i, j) in g.edges() {
        let factor = &ring.var(i - 1) - &ring.var(j - 1);
        f = basis.normal_form(&(&factor * &f));
        if f.is_zero() {
            break;
        }
    }
    f
}

fn residue_certificate<F: Field>(f: &Polynomial<F>) -> Certificate {
    let leading = f.leading_term().map(|(c, m)| f.ring().term(c.clone(), m.clone()).to_string());
    Certificate::Residue { terms: f.len(), leading }
}

fn colorable_in<F: Field>(
    field: F,
    g: &Graph,
    k: usize,
    method: Method,
    opts: &SolveOptions,
) -> Result<(bool, Option<Certificate>), AlgorithmError> {
    let order = opts.term_order();
    let n = g.n();
    match method {
        Method::QuotientDim => {
            let gb = graph_ideal_basis(field, g, k, order, opts.edge_by_edge, true);
            let dim = if gb.is_unit() { 0 } else { count_standard_monomials(&gb, n)? };
            Ok((dim != 0, Some(Certificate::Dimension(dim))))
        }
        Method::ReduceOne => {
            let gb = graph_ideal_basis(field, g, k, order, opts.edge_by_edge, true);
            let basis = gb.polys().iter().map(|p| p.to_string()).collect();
            Ok((!gb.is_unit(), Some(Certificate::Basis(basis))))
        }
        Method::NfGraphPolyInk => {
            let ring = PolyRing::new(field, n, order);
            let basis = GroebnerBasis::from_known_basis(i_nk_generators(&ring, k), order);
            let r = graph_poly_residue(&ring, g, &basis, opts.incremental);
            Ok((!r.is_zero(), Some(residue_certificate(&r))))
        }
        Method::NfGraphPolyJnk => {
            if n > opts.jnk_max_n || k > opts.jnk_max_k {
                return Err(AlgorithmError::JnkCap { n, k, max_n: opts.jnk_max_n, max_k: opts.jnk_max_k });
            }
            let j = ideal_j_nk_capped(field, n, k, opts.jnk_max_k)?;
            let ring = j.ring().with_order(order);
            let basis = GroebnerBasis::from_known_basis(j.gens().to_vec(), order);
            let r = graph_poly_residue(&ring, g, &basis, opts.incremental);
            Ok((!r.is_zero(), Some(residue_certificate(&r))))
        }
        _ => unreachable!("not a colorability method"),
    }
}

/// `I_{n,k} : A_ν`, the ideal of all `k`-colorings whose partition is not
/// `ν`. Depends only on the partition, `k`, the field and the order.
pub fn colon_of_coloring<F: Field>(
    field: F,
    p: &ColorPartition,
    k: usize,
    order: OrderKind,
) -> Result<Ideal<F>, AlgorithmError> {
    let a = coloring_ideal(field.clone(), p, k)?;
    let i = ideal_i_nk(field, p.n(), k);
    Ok(colon_with(&i, &a, order)?)
}

fn unique_in<F: Field>(
    field: F,
    g: &Graph,
    k: usize,
    method: Method,
    coloring: Option<&ColorPartition>,
    opts: &SolveOptions,
) -> Result<(bool, Option<Certificate>), AlgorithmError> {
    let order = opts.term_order();
    let n = g.n();
    match method {
        Method::NuBasisMembership => {
            let p = coloring.expect("checked by caller");
            let gb = graph_ideal_basis(field.clone(), g, k, order, opts.edge_by_edge, false);
            let basis = nu_basis(field, p, k, false)?;
            Ok((basis.polys.iter().all(|q| gb.contains(q)), None))
        }
        Method::ColonMembership => {
            let p = coloring.expect("checked by caller");
            let colon = colon_of_coloring(field, p, k, opts.order)?;
            let gb = colon.groebner_basis(order);
            let ring = colon.ring().with_order(order);
            let r = graph_poly_residue(&ring, g, &gb, opts.incremental);
            Ok((r.is_zero(), Some(residue_certificate(&r))))
        }
        Method::QuotientDimFactorial => {
            // The dimension counts labeled colorings, so dim = k! says they
            // form one orbit under permuting the colors. For n >= k that is
            // one partition using every color; for n < k only K_{k-1}
            // qualifies.
            let gb = graph_ideal_basis(field, g, k, order, opts.edge_by_edge, true);
            let dim = if gb.is_unit() { 0 } else { count_standard_monomials(&gb, n)? };
            let factorial = (1..=k as u64).try_fold(1u64, |acc, i| acc.checked_mul(i));
            Ok((Some(dim) == factorial, Some(Certificate::Dimension(dim))))
        }
        Method::GbShape => {
            let gb = graph_ideal_basis(field, g, k, order, opts.edge_by_edge, false);
            match recognize_nu_shape(&gb, n, k) {
                Some(p) => Ok((true, Some(Certificate::Partition(p)))),
                None => Ok((false, None)),
            }
        }
        _ => unreachable!("not a uniqueness method"),
    }
}

/// Outcome of checking `I_{G,k} = ⋂_ν A_ν` over all proper colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub ideal_ok: bool,
    pub partitions: Vec<ColorPartition>,
}

/// Intersects the coloring ideals of every partition the oracle finds and
/// compares the result with `I_{G,k}`. With no proper coloring the empty
/// intersection is taken to be `⟨1⟩`.
pub fn decompose(
    g: &Graph,
    k: usize,
    budget: OracleBudget,
    opts: &SolveOptions,
) -> Result<Decomposition, AlgorithmError> {
    if k == 0 {
        return Err(ColoringError::ZeroColors.into());
    }
    let census = enumerate_colorings(g, k, budget)?;
    let partitions: Vec<ColorPartition> = census.partitions.into_iter().collect();
    let ideal_ok = with_field!(opts.field, k, |f| decompose_in(f, g, k, &partitions, opts)?);
    Ok(Decomposition { ideal_ok, partitions })
}

fn decompose_in<F: Field>(
    field: F,
    g: &Graph,
    k: usize,
    partitions: &[ColorPartition],
    opts: &SolveOptions,
) -> Result<bool, AlgorithmError> {
    let order = opts.term_order();
    let igk = ideal_i_gk(field.clone(), g, k);
    let mut meet: Option<Ideal<F>> = None;
    for p in partitions {
        let a = coloring_ideal(field.clone(), p, k)?;
        meet = Some(match meet {
            None => a,
            Some(prev) => intersect_with(&prev, &a, opts.order)?,
        });
    }
    let meet = meet.unwrap_or_else(|| Ideal::unit(coloring_ring(field, g.n())));
    Ok(ideals_equal(&meet, &igk, order)?)
}
