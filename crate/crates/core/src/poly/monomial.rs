use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// A power product `x_1^e_1 ⋯ x_n^e_n` over a fixed number of variables.
///
/// Variable `x_i` lives at index `i - 1`. The total degree and a divisibility
/// mask (bit `v` set when variable `v mod 64` occurs) are cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 26]>,
    degree: u32,
    mask: u64,
}

fn mask_of(exps: &[Exponent]) -> u64 {
    exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1 << (i % 64))
}

impl Monomial {
    pub fn new(exps: &[Exponent]) -> Monomial {
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), mask: mask_of(exps), exps: SmallVec::from_slice(exps) }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0, mask: 0 }
    }

    /// `x_{index+1}^exp`, with a zero-based `index`.
    pub fn var(nvars: usize, index: usize, exp: Exponent) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m.mask = mask_of(&m.exps);
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exp(&self, index: usize) -> Exponent {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: SmallVec<_> = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { mask: mask_of(&exps), degree: self.degree - other.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<_> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), mask: self.mask | other.mask, exps }
    }

    /// True when no variable occurs in both monomials.
    pub fn coprime(&self, other: &Monomial) -> bool {
        (self.mask & other.mask == 0 && self.nvars() <= 64)
            || self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_v^e` with `e > 0`, returns `(v, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, Exponent)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Prepends `extra` zero exponents (new, more significant variables).
    pub fn prepend_vars(&self, extra: usize) -> Monomial {
        let mut exps: SmallVec<[Exponent; 26]> = SmallVec::from_elem(0, extra);
        exps.extend_from_slice(&self.exps);
        Monomial { mask: mask_of(&exps), degree: self.degree, exps }
    }

    /// Drops the first `count` variables, which must not occur.
    pub fn drop_leading_vars(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial::new(&self.exps[count..]))
    }

    /// Applies a permutation of variables: variable `v` moves to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        for (v, &e) in self.exps.iter().enumerate() {
            exps[perm[v]] = e;
        }
        Monomial::new(&exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::new(&[2, 0, 1]);
        let b = Monomial::new(&[1, 3, 0]);
        assert_eq!(a.mul(&b), Monomial::new(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), Monomial::new(&[2, 3, 1]));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert!(!a.coprime(&b));
        assert!(Monomial::var(3, 1, 2).coprime(&a));
        assert_eq!(a.degree(), 3);
        assert_eq!(a.to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }

    #[test]
    fn pure_powers_and_embedding() {
        assert_eq!(Monomial::var(4, 2, 5).as_pure_power(), Some((2, 5)));
        assert_eq!(Monomial::new(&[1, 1]).as_pure_power(), None);
        assert_eq!(Monomial::one(3).as_pure_power(), None);
        let m = Monomial::new(&[1, 2]).prepend_vars(1);
        assert_eq!(m.exps(), &[0, 1, 2]);
        assert_eq!(m.drop_leading_vars(1), Some(Monomial::new(&[1, 2])));
        assert_eq!(Monomial::new(&[1, 0]).drop_leading_vars(1), None);
    }

    #[test]
    fn divisibility_beyond_mask_width() {
        let mut a = vec![0; 70];
        let mut b = vec![0; 70];
        a[1] = 1;
        b[65] = 1;
        let (a, b) = (Monomial::new(&a), Monomial::new(&b));
        assert!(!a.divides(&b));
        assert!(!b.divides(&a));
        assert!(a.coprime(&b));
    }
}
