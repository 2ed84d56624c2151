//! Constructors for the coloring ideals and ν-bases, and recognition of
//! the ν-basis shape in a reduced Gröbner basis.
//!
//! * `I_{n,k} = ⟨x_i^k − 1⟩`: all `k`-colorings, as `k`-th roots of unity.
//! * `I_{G,k} = I_{n,k} + ⟨h_{{i,j}}^{k−1} : {i,j} ∈ E⟩`: proper colorings.
//! * `J_{n,k}`: generated by the Vandermonde products of all `(k+1)`-cliques.
//! * `A_ν`: the coloring ideal of one partition `ν` of the vertices.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::graph::{ColorPartition, Graph};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::poly::{complete_homogeneous, Exponent, PolyError, PolyRing, Polynomial, TermOrder};

/// Largest `k` for which `J_{n,k}` is built unless explicitly overridden;
/// each generator has `(k+1)!` terms.
pub const JNK_DEFAULT_MAX_K: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("partition has {l} classes, more than k = {k}")]
    TooManyClasses { l: usize, k: usize },
    #[error("a reduced ν-basis needs a coloring using all k = {k} colors (got {l})")]
    NotAllColorsUsed { l: usize, k: usize },
    #[error("J_{{n,k}} needs k + 1 <= n (n = {n}, k = {k})")]
    CliqueLargerThanGraph { n: usize, k: usize },
    #[error("J_{{n,k}} with k = {k} exceeds the size cap k <= {max_k}")]
    JnkTooLarge { k: usize, max_k: usize },
    #[error("k must be positive")]
    ZeroColors,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The ring `F[x_1, …, x_n]` with the default presentation order.
pub fn coloring_ring<F: Field>(field: F, n: usize) -> PolyRing<F> {
    PolyRing::new(field, n, TermOrder::DEGREVLEX)
}

fn root_of_unity_relation<F: Field>(ring: &PolyRing<F>, vertex: usize, k: usize) -> Polynomial<F> {
    ring.monomial_minus_one(crate::poly::Monomial::var(ring.nvars, vertex - 1, k as Exponent))
}

/// `{x_i^k − 1 : i ∈ V}`, a universal Gröbner basis of `I_{n,k}`.
pub fn i_nk_generators<F: Field>(ring: &PolyRing<F>, k: usize) -> Vec<Polynomial<F>> {
    (1..=ring.nvars).map(|v| root_of_unity_relation(ring, v, k)).collect()
}

pub fn ideal_i_nk<F: Field>(field: F, n: usize, k: usize) -> Ideal<F> {
    let ring = coloring_ring(field, n);
    let gens = i_nk_generators(&ring, k);
    Ideal::with_known_basis(ring, gens)
}

/// The edge generator `h_{{i,j}}^{k−1} = (x_i^k − x_j^k)/(x_i − x_j)`.
pub fn edge_generator<F: Field>(ring: &PolyRing<F>, i: usize, j: usize, k: usize) -> Polynomial<F> {
    complete_homogeneous(ring, &[i, j], (k - 1) as u32).expect("edge endpoints are vertices")
}

pub fn ideal_i_gk<F: Field>(field: F, g: &Graph, k: usize) -> Ideal<F> {
    let ring = coloring_ring(field, g.n());
    let mut gens = i_nk_generators(&ring, k);
    gens.extend(g.edges().map(|(i, j)| edge_generator(&ring, i, j, k)));
    Ideal::new(ring, gens)
}

/// `∏_{a<b} (x_a − x_b)` over the given vertices, fully expanded.
pub fn vandermonde<F: Field>(ring: &PolyRing<F>, vertices: &[usize]) -> Polynomial<F> {
    let mut f = ring.one();
    for (idx, &a) in vertices.iter().enumerate() {
        for &b in &vertices[idx + 1..] {
            f = &f * &(&ring.var(a - 1) - &ring.var(b - 1));
        }
    }
    f
}

/// The graph polynomial expanded into a single polynomial. Can be very
/// large; the decision procedures reduce it factor by factor instead.
pub fn graph_polynomial<F: Field>(ring: &PolyRing<F>, g: &Graph) -> Polynomial<F> {
    g.edges().fold(ring.one(), |f, (i, j)| &f * &(&ring.var(i - 1) - &ring.var(j - 1)))
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < size - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// `J_{n,k}`, capped at `k <= JNK_DEFAULT_MAX_K`.
pub fn ideal_j_nk<F: Field>(field: F, n: usize, k: usize) -> Result<Ideal<F>, ColoringError> {
    ideal_j_nk_capped(field, n, k, JNK_DEFAULT_MAX_K)
}

/// `J_{n,k}` with one expanded clique polynomial per `(k+1)`-subset of
/// vertices; these form a universal Gröbner basis.
pub fn ideal_j_nk_capped<F: Field>(field: F, n: usize, k: usize, max_k: usize) -> Result<Ideal<F>, ColoringError> {
    if k + 1 > n {
        return Err(ColoringError::CliqueLargerThanGraph { n, k });
    }
    if k > max_k {
        return Err(ColoringError::JnkTooLarge { k, max_k });
    }
    let ring = coloring_ring(field, n);
    let gens = subsets(n, k + 1).iter().map(|s| vandermonde(&ring, s)).collect();
    Ok(Ideal::with_known_basis(ring, gens))
}

/// The `n` polynomials encoding one proper coloring, `g_i` indexed by
/// vertex `i` (stored at position `i − 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct NuBasis<F: Field> {
    pub polys: Vec<Polynomial<F>>,
    pub partition: ColorPartition,
    pub k: usize,
    pub reduced: bool,
}

impl<F: Field> NuBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        self.polys[0].ring()
    }

    pub fn rendered(&self) -> Vec<String> {
        self.polys.iter().map(|p| p.to_string()).collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            k: usize,
            partition: String,
            reduced: bool,
            polynomials: &'a [String],
        }
        serde_json::to_string(&Out {
            k: self.k,
            partition: self.partition.to_string(),
            reduced: self.reduced,
            polynomials: &self.rendered(),
        })
        .expect("ν-basis serializes")
    }
}

/// Builds the ν-basis of a partition with `l <= k` classes and maxima
/// `m_1 < ⋯ < m_l = n`:
///
/// * `g_{m_l} = x_{m_l}^k − 1`
/// * `g_{m_j} = h_{{m_j,…,m_l}}^{k−l+j}` for `j < l`
/// * `g_i = x_i − x_{max cl(i)}` otherwise.
///
/// The reduced variant (only for `l = k`) uses `h_{{m_j,…,m_l}}^{j}` and
/// replaces `g_i` for `i ∈ cl(m_1)` by `h_{{i,m_2,…,m_l}}^1`. For `k = 1`
/// it is `{x_i − 1}`, the reduced basis of the same ideal.
pub fn nu_basis<F: Field>(field: F, p: &ColorPartition, k: usize, reduced: bool) -> Result<NuBasis<F>, ColoringError> {
    if k == 0 {
        return Err(ColoringError::ZeroColors);
    }
    let l = p.len();
    if l > k {
        return Err(ColoringError::TooManyClasses { l, k });
    }
    if reduced && l < k {
        return Err(ColoringError::NotAllColorsUsed { l, k });
    }
    let n = p.n();
    let ring = coloring_ring(field, n);
    let maxima = p.maxima();
    let mut polys = Vec::with_capacity(n);
    for i in 1..=n {
        let class = p.class_index(i).expect("partition covers every vertex");
        let g = if i == n {
            root_of_unity_relation(&ring, i, k)
        } else if reduced && k == 1 {
            ring.monomial_minus_one(crate::poly::Monomial::var(n, i - 1, 1))
        } else if maxima[class] == i {
            // i = m_j with j = class + 1 < l
            let j = class + 1;
            let degree = if reduced { j } else { k - l + j };
            complete_homogeneous(&ring, &maxima[class..], degree as u32)?
        } else if reduced && class == 0 {
            let mut u = vec![i];
            u.extend_from_slice(&maxima[1..]);
            complete_homogeneous(&ring, &u, 1)?
        } else {
            &ring.var(i - 1) - &ring.var(maxima[class] - 1)
        };
        polys.push(g);
    }
    Ok(NuBasis { polys, partition: p.clone(), k, reduced })
}

/// The coloring ideal `A_ν`. Its ν-basis is already a Gröbner basis for
/// every order with `x_n ≺ ⋯ ≺ x_1`, so no Buchberger pass is needed.
pub fn coloring_ideal<F: Field>(field: F, p: &ColorPartition, k: usize) -> Result<Ideal<F>, ColoringError> {
    let basis = nu_basis(field, p, k, false)?;
    let ring = basis.ring().clone();
    Ok(Ideal::with_known_basis(ring, basis.polys))
}

/// Reads a coloring off a reduced Gröbner basis of the ν-basis shape.
///
/// The linear members `x_i − x_m` put `i` into the class of `m`; members
/// `x_i + x_{m_2} + ⋯ + x_{m_k}` put `i` into the first class; every other
/// vertex is a class maximum. The candidate is accepted only if its
/// reduced ν-basis reproduces the given basis exactly.
///
/// The one graph with fewer than `k` vertices whose colorings are a single
/// orbit under permuting colors is `K_{k−1}`; its basis is the ν-basis of
/// the all-singletons partition and is accepted as well.
pub fn recognize_nu_shape<F: Field>(gb: &GroebnerBasis<F>, n: usize, k: usize) -> Option<ColorPartition> {
    if k == 0 || gb.len() != n || n == 0 {
        return None;
    }
    let gb = if gb.is_reduced() { gb.clone() } else { gb.reduce() };
    let order = gb.order();
    let field = gb.polys()[0].field().clone();

    let candidate = if k == 1 {
        ColorPartition::new(vec![(1..=n).collect()]).ok()?
    } else {
        let mut by_vertex: Vec<Option<&Polynomial<F>>> = vec![None; n + 1];
        for p in gb.polys() {
            let (v, _) = p.leading_monomial()?.as_pure_power()?;
            if by_vertex[v + 1].replace(p).is_some() {
                return None;
            }
        }
        let minus_one = field.neg(&field.one());
        let mut parent: Vec<usize> = (0..=n).collect();
        let mut first_class = Vec::new();
        for v in 1..=n {
            let p = by_vertex[v]?;
            if p.total_degree() != Some(1) || p.terms().iter().any(|(_, m)| m.is_one()) {
                continue;
            }
            let terms = p.terms();
            if terms.len() == 2 && terms[1].0 == minus_one {
                let (u, _) = terms[1].1.as_pure_power()?;
                parent[v] = u + 1;
            } else if terms.len() == k && terms.iter().all(|(c, _)| field.is_one(c)) {
                first_class.push(v);
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        if !first_class.is_empty() {
            classes.push(first_class.clone());
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 1..=n {
            if first_class.contains(&v) {
                continue;
            }
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            by_root.entry(root).or_default().push(v);
        }
        classes.extend(by_root.into_values());
        ColorPartition::new(classes).ok()?
    };
    let reduced = candidate.len() == k;
    if !reduced && !(candidate.len() == n && n + 1 == k) {
        return None;
    }

    let expected = nu_basis(field, &candidate, k, reduced).ok()?;
    let expected = GroebnerBasis::from_known_basis(expected.polys, order).reduce();
    let mut expected: Vec<_> = expected.into_polys();
    expected.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    (expected.as_slice() == gb.polys()).then_some(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::is_groebner_basis;
    use crate::ideal::ideals_equal;
    use crate::poly::OrderKind;

    fn strings<F: Field>(ps: &[Polynomial<F>]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn i_nk() {
        let i = ideal_i_nk(Rationals, 3, 3);
        assert_eq!(strings(i.gens()), ["x1^3 - 1", "x2^3 - 1", "x3^3 - 1"]);
        assert_eq!(strings(ideal_i_nk(Rationals, 1, 1).gens()), ["x1 - 1"]);
        for kind in OrderKind::ALL {
            assert_eq!(i.quotient_dimension(TermOrder::new(kind)).unwrap(), 27);
        }
    }

    #[test]
    fn i_gk() {
        let i = ideal_i_gk(Rationals, &Graph::path(3), 3);
        assert_eq!(
            strings(i.gens()),
            ["x1^3 - 1", "x2^3 - 1", "x3^3 - 1", "x1^2 + x1*x2 + x2^2", "x2^2 + x2*x3 + x3^2"]
        );
        assert_eq!(strings(ideal_i_gk(Rationals, &Graph::new(2), 2).gens()), ["x1^2 - 1", "x2^2 - 1"]);
        assert_eq!(strings(ideal_i_gk(Rationals, &Graph::complete(2), 2).gens()), ["x1^2 - 1", "x2^2 - 1", "x1 + x2"]);
    }

    #[test]
    fn j_nk() {
        let j = ideal_j_nk(Rationals, 3, 2).unwrap();
        assert_eq!(j.gens().len(), 1);
        assert_eq!(j.gens()[0].len(), 6);
        assert_eq!(ideal_j_nk(Rationals, 4, 2).unwrap().gens().len(), 4);
        let j = ideal_j_nk(Rationals, 4, 3).unwrap();
        assert!(j.gens().iter().all(|g| g.len() == 24));
        assert_eq!(ideal_j_nk(Rationals, 3, 3).unwrap_err(), ColoringError::CliqueLargerThanGraph { n: 3, k: 3 });
        assert_eq!(ideal_j_nk(Rationals, 9, 5).unwrap_err(), ColoringError::JnkTooLarge { k: 5, max_k: 4 });
        for kind in OrderKind::ALL {
            assert!(is_groebner_basis(ideal_j_nk(Rationals, 5, 2).unwrap().gens(), TermOrder::new(kind)));
        }
    }

    #[test]
    fn path_nu_bases() {
        let nu1: ColorPartition = "1,3;2".parse().unwrap();
        let nu2: ColorPartition = "1;2;3".parse().unwrap();
        let a1 = nu_basis(Rationals, &nu1, 3, false).unwrap();
        let a2 = nu_basis(Rationals, &nu2, 3, false).unwrap();
        assert_eq!(a1.rendered(), ["x1 - x3", "x2^2 + x2*x3 + x3^2", "x3^3 - 1"]);
        assert_eq!(a2.rendered(), ["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3 - 1"]);
        for (p, dim) in [(&nu1, 6), (&nu2, 6)] {
            let a = coloring_ideal(Rationals, p, 3).unwrap();
            for kind in OrderKind::ALL {
                assert_eq!(a.quotient_dimension(TermOrder::new(kind)).unwrap(), dim);
            }
        }
    }

    #[test]
    fn nu_basis_errors() {
        let p: ColorPartition = "1;2;3".parse().unwrap();
        assert_eq!(nu_basis(Rationals, &p, 2, false).unwrap_err(), ColoringError::TooManyClasses { l: 3, k: 2 });
        let q: ColorPartition = "1,3;2".parse().unwrap();
        assert_eq!(nu_basis(Rationals, &q, 3, true).unwrap_err(), ColoringError::NotAllColorsUsed { l: 2, k: 3 });
    }

    #[test]
    fn twelve_vertex_reduced_basis() {
        let p: ColorPartition = "1,5,8,10;2,6,9,11;3,4,7,12".parse().unwrap();
        let b = nu_basis(Rationals, &p, 3, true).unwrap();
        assert_eq!(b.polys[0].to_string(), "x1 + x11 + x12");
        assert_eq!(b.polys[10].to_string(), "x11^2 + x11*x12 + x12^2");
        assert_eq!(b.polys[11].to_string(), "x12^3 - 1");
        assert_eq!(b.polys[3].to_string(), "x4 - x12");
        for kind in OrderKind::ALL {
            let gb = GroebnerBasis::from_known_basis(b.polys.clone(), TermOrder::new(kind)).reduce();
            assert_eq!(recognize_nu_shape(&gb, 12, 3), Some(p.clone()));
        }
    }

    #[test]
    fn reduced_and_plain_bases_generate_same_ideal() {
        let f = PrimeField::new(5).unwrap();
        for text in ["1,4;2,5;3,6", "1,2,3;4;5,6", "2;1,3"] {
            let p: ColorPartition = text.parse().unwrap();
            let k = p.len();
            let plain = nu_basis(f, &p, k, false).unwrap();
            let red = nu_basis(f, &p, k, true).unwrap();
            let a = Ideal::new(plain.ring().clone(), plain.polys);
            let b = Ideal::new(red.ring().clone(), red.polys);
            for kind in OrderKind::ALL {
                assert!(ideals_equal(&a, &b, TermOrder::new(kind)).unwrap());
            }
        }
    }

    #[test]
    fn shape_of_small_graphs() {
        let k3 = ideal_i_gk(Rationals, &Graph::complete(3), 3);
        let p3 = ideal_i_gk(Rationals, &Graph::path(3), 3);
        for kind in OrderKind::ALL {
            let o = TermOrder::new(kind);
            assert_eq!(recognize_nu_shape(&k3.groebner_basis(o), 3, 3), Some("1;2;3".parse().unwrap()));
            assert_eq!(recognize_nu_shape(&p3.groebner_basis(o), 3, 3), None);
        }
    }

    #[test]
    fn single_color() {
        let p: ColorPartition = "1,2,3".parse().unwrap();
        let red = nu_basis(Rationals, &p, 1, true).unwrap();
        assert_eq!(red.rendered(), ["x1 - 1", "x2 - 1", "x3 - 1"]);
        let i = ideal_i_gk(Rationals, &Graph::new(3), 1);
        assert_eq!(recognize_nu_shape(&i.groebner_basis(TermOrder::LEX), 3, 1), Some(p));
    }

    #[test]
    fn json_rendering() {
        let p: ColorPartition = "1,3;2".parse().unwrap();
        let b = nu_basis(Rationals, &p, 3, false).unwrap();
        assert_eq!(
            b.to_json(),
            r#"{"k":3,"partition":"2;1,3","reduced":false,"polynomials":["x1 - x3","x2^2 + x2*x3 + x3^2","x3^3 - 1"]}"#
        );
    }
}
