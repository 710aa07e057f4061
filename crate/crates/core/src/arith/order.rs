use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};

/// Global monomial orders, with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    GradedLex,
}

/// How module terms `m e_j` break ties between the monomial and the component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PositionRule {
    #[default]
    TermOverPosition,
    PositionOverTerm,
}

/// Order on terms of a twisted free module `⊕ S(-e_j)`.
///
/// Terms are first compared by twisted degree `deg m + e_j`; for homogeneous
/// vectors every term has the same twisted degree, so this only fixes how
/// different components interleave. Lower component indices are larger.
///
/// Within a twisted degree the grevlex variant compares by the reverse
/// lexicographic rule alone, even across monomials of different degree. This
/// keeps the property that the last variable divides a homogeneous vector iff
/// it divides its leading term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub position: PositionRule,
}

#[inline]
fn lex(a: Monomial, b: Monomial) -> Ordering {
    for i in 0..MAX_VARS {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| b.bits().cmp(&a.bits())),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GradedLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
        }
    }

    #[inline]
    fn cmp_in_weight(&self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => b.bits().cmp(&a.bits()),
            _ => self.cmp(a, b),
        }
    }
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder, position: PositionRule) -> Self {
        ModuleOrder { monomial, position }
    }

    pub fn position_over_term(monomial: MonomialOrder) -> Self {
        ModuleOrder {
            monomial,
            position: PositionRule::PositionOverTerm,
        }
    }

    /// Compares `a e_{ca}` with `b e_{cb}` given the twists of the ambient module.
    #[inline]
    pub fn cmp(&self, a: Monomial, ca: u32, b: Monomial, cb: u32, twists: &[i64]) -> Ordering {
        let wa = a.degree() as i64 + twists[ca as usize];
        let wb = b.degree() as i64 + twists[cb as usize];
        wa.cmp(&wb).then_with(|| match self.position {
            PositionRule::TermOverPosition => self
                .monomial
                .cmp_in_weight(a, b)
                .then_with(|| cb.cmp(&ca)),
            PositionRule::PositionOverTerm => {
                cb.cmp(&ca).then_with(|| self.monomial.cmp_in_weight(a, b))
            }
        })
    }
}
