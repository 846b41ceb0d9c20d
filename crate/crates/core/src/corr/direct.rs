//! Free-field realization at a positive integer level: the generators live
//! in the Fock space of `h (x) h'` with `h'` an orthonormal `r`-dimensional
//! even space, and the recursion runs there with no symbolic level.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{frac, rat, CorrFn, PolyR};
use crate::fock::{Fock, FockState};
use crate::superlinear::{make_level_space, tensor, tensor_vector, FormedSpace, Vector};

use super::recursion::{Recursion, SlotAlgebra};
use super::InsertionList;

impl SlotAlgebra for Fock {
    type Elem = FockState;

    fn is_zero(&self, x: &FockState) -> bool {
        x.is_zero()
    }

    fn max_weight(&self, x: &FockState) -> u32 {
        x.max_weight()
    }

    fn product(&self, x: &FockState, k: u32, y: &FockState) -> Result<(FockState, PolyR)> {
        let p = self.nth_product(x, k as i64, y);
        Ok((p.without_vacuum(), PolyR::constant(p.vacuum_coeff())))
    }
}

/// `L^r_{a,b} = 1/2 sum_i (a (x) h_i)(-1) (b (x) h_i)(-1)|0>`.
pub fn dual_pair_generator(
    big: &Fock,
    h: &FormedSpace,
    level: &FormedSpace,
    a: &Vector,
    b: &Vector,
) -> Result<FockState> {
    let mut out = FockState::zero();
    for i in 0..level.dim() {
        let hi = level.basis_vector(i);
        let ai = tensor_vector(h, level, a, &hi);
        let bi = tensor_vector(h, level, b, &hi);
        out = out.add(&big.quadratic_state(&ai, 1, &bi, 1)?);
    }
    Ok(out.scale(&frac(1, 2)))
}

pub fn corr_direct(t: &InsertionList, r: u32) -> Result<CorrFn> {
    if r < 1 {
        return Err(Error::InvalidLevel(rat(r as i64)));
    }
    let level = make_level_space(r)?;
    let h = t.space();
    let big = Fock::new(Arc::new(tensor(h, &level)));
    let list = t
        .entries()
        .iter()
        .zip(t.slots())
        .map(|((a, b), &s)| Ok((dual_pair_generator(&big, h, &level, a, b)?, s)))
        .collect::<Result<Vec<_>>>()?;
    let f = Recursion::new(&big, t.n()).eval(&list)?;
    debug_assert!(f.terms().all(|(_, c)| c.degree().unwrap_or(0) == 0 || c.is_zero()));
    Ok(f)
}
