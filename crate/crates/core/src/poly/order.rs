use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex];

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" | "lp" => Ok(OrderKind::Lex),
            "deglex" | "dp_lex" | "grlex" => Ok(OrderKind::DegLex),
            "degrevlex" | "grevlex" | "dp" => Ok(OrderKind::DegRevLex),
            _ => Err(format!("unknown term order `{s}` (expected lex, deglex or degrevlex)")),
        }
    }
}

/// A term order with variable significance `x_1 ≻ x_2 ≻ ⋯ ≻ x_n`.
///
/// With `elim > 0` the first `elim` variables form an elimination block:
/// monomials are compared lexicographically on that block first and by
/// `kind` on the remaining variables only when the block exponents agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub elim: usize,
}

impl TermOrder {
    pub const LEX: TermOrder = TermOrder { kind: OrderKind::Lex, elim: 0 };
    pub const DEGLEX: TermOrder = TermOrder { kind: OrderKind::DegLex, elim: 0 };
    pub const DEGREVLEX: TermOrder = TermOrder { kind: OrderKind::DegRevLex, elim: 0 };

    pub fn new(kind: OrderKind) -> TermOrder {
        TermOrder { kind, elim: 0 }
    }

    pub fn eliminating(kind: OrderKind, elim: usize) -> TermOrder {
        TermOrder { kind, elim }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let (ea, eb) = (a.exps(), b.exps());
        if self.elim == 0 {
            return match self.kind {
                OrderKind::Lex => ea.cmp(eb),
                OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
                OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(ea, eb)),
            };
        }
        let e = self.elim.min(ea.len());
        ea[..e].cmp(&eb[..e]).then_with(|| {
            let (ra, rb) = (&ea[e..], &eb[e..]);
            match self.kind {
                OrderKind::Lex => ra.cmp(rb),
                OrderKind::DegLex => degree(ra).cmp(&degree(rb)).then_with(|| ra.cmp(rb)),
                OrderKind::DegRevLex => degree(ra).cmp(&degree(rb)).then_with(|| revlex(ra, rb)),
            }
        })
    }

    /// Checked comparison that rejects monomials from different rings.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::AmbientMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::DEGREVLEX
    }
}

impl From<OrderKind> for TermOrder {
    fn from(kind: OrderKind) -> Self {
        TermOrder::new(kind)
    }
}

fn degree(e: &[u16]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

// Among equal degrees, the monomial with the smaller exponent on the last
// differing variable is larger.
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Compares two monomials under `order`; errors on ambient mismatch.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: TermOrder) -> Result<Ordering, PolyError> {
    order.try_cmp(a, b)
}
