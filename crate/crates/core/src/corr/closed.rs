//! Sum over fixed-point-free permutations with trace coefficients.

use num_traits::Zero;

use crate::error::Result;
use crate::exact::{pow2, CorrFn, DiffExponent, PolyR};
use crate::jordan::gamma_factor;

use super::combinat::enum_derangements;
use super::InsertionList;

/// Normalization of the trace coefficient. `Corrupted` drops the `2^-s`
/// cycle factor for types B and C; it exists to exercise the checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Prefactor {
    #[default]
    Standard,
    Corrupted,
}

pub fn corr_closed_form(t: &InsertionList) -> Result<CorrFn> {
    corr_closed_form_with(t, Prefactor::Standard)
}

pub fn corr_closed_form_with(t: &InsertionList, prefactor: Prefactor) -> Result<CorrFn> {
    let n = t.n();
    let slots = t.slots();
    let mut out = CorrFn::zero(n);
    for sigma in enum_derangements(n) {
        let mut g = gamma_factor(t.space(), sigma.cycles(), t.entries())?;
        if g.is_zero() {
            continue;
        }
        if prefactor == Prefactor::Corrupted && t.jtype() != crate::superlinear::JType::A {
            g *= pow2(sigma.num_cycles() as i64);
        }
        let den = DiffExponent::from_triples(sigma.image().iter().enumerate().map(|(i, &j)| {
            let (a, b) = (slots[i], slots[j]);
            (a.min(b), a.max(b), 2)
        }));
        out.add_assign(&CorrFn::term(n, den, PolyR::monomial(g, sigma.num_cycles())));
    }
    Ok(out)
}
