//! Recursive evaluation of `<1', v_1(z_1) ... v_n(z_n) 1>` by repeatedly
//! commuting the annihilation part of the first field to the right.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::Result;
use crate::exact::{CorrFn, PolyR};
use crate::lca::{Lca, LcaElement, Quadratic};

use super::InsertionList;

/// An algebra of fields in which the recursion can run: the `k`-th product
/// of two elements splits into a positive-weight part and a multiple of
/// the vacuum, the latter already expressed as a polynomial in `r`.
pub trait SlotAlgebra {
    type Elem: Clone + Eq + Hash;

    fn is_zero(&self, x: &Self::Elem) -> bool;

    /// Upper bound on the weight of the homogeneous components of `x`.
    fn max_weight(&self, x: &Self::Elem) -> u32;

    fn product(&self, x: &Self::Elem, k: u32, y: &Self::Elem) -> Result<(Self::Elem, PolyR)>;
}

impl SlotAlgebra for Lca {
    type Elem = LcaElement;

    fn is_zero(&self, x: &LcaElement) -> bool {
        x.is_zero()
    }

    fn max_weight(&self, x: &LcaElement) -> u32 {
        x.max_degree()
    }

    fn product(&self, x: &LcaElement, k: u32, y: &LcaElement) -> Result<(LcaElement, PolyR)> {
        let p = self.kth_product(x, k, y)?;
        let central = PolyR::monomial(p.central().clone(), 1);
        Ok((p.quad_part(), central))
    }
}

type Key<E> = Vec<(E, usize)>;

/// Memoized recursion over an ordered list of `(element, slot)` pairs.
pub struct Recursion<'a, A: SlotAlgebra> {
    alg: &'a A,
    n: usize,
    memo: HashMap<Key<A::Elem>, CorrFn>,
}

impl<'a, A: SlotAlgebra> Recursion<'a, A> {
    /// `n` is the number of insertion points of the outer correlation function.
    pub fn new(alg: &'a A, n: usize) -> Self {
        Self {
            alg,
            n,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn eval(&mut self, list: &[(A::Elem, usize)]) -> Result<CorrFn> {
        match list.len() {
            0 => return Ok(CorrFn::one(self.n)),
            1 => return Ok(CorrFn::zero(self.n)),
            _ => {}
        }
        if list.iter().any(|(x, _)| self.alg.is_zero(x)) {
            return Ok(CorrFn::zero(self.n));
        }
        if let Some(hit) = self.memo.get(list) {
            return Ok(hit.clone());
        }

        let (v1, s1) = &list[0];
        let rest = &list[1..];
        let mut out = CorrFn::zero(self.n);
        for (j, (vj, sj)) in rest.iter().enumerate() {
            let kmax = (self.alg.max_weight(v1) + self.alg.max_weight(vj)).saturating_sub(1);
            for k in 0..=kmax {
                let (quad, central) = self.alg.product(v1, k, vj)?;
                if !self.alg.is_zero(&quad) {
                    let mut sub: Key<A::Elem> = rest.to_vec();
                    sub[j] = (quad, *sj);
                    let f = self.eval(&sub)?;
                    if !f.is_zero() {
                        out.add_assign(&f.mul_diffpow(*s1, *sj, k as i64 + 1)?);
                    }
                }
                if !central.is_zero() {
                    let sub: Key<A::Elem> = rest
                        .iter()
                        .enumerate()
                        .filter(|&(l, _)| l != j)
                        .map(|(_, e)| e.clone())
                        .collect();
                    let f = self.eval(&sub)?;
                    if !f.is_zero() {
                        out.add_assign(&f.scale(&central).mul_diffpow(*s1, *sj, k as i64 + 1)?);
                    }
                }
            }
        }
        self.memo.insert(list.to_vec(), out.clone());
        Ok(out)
    }
}

/// Recursion engine on LCA elements placed at the given slots of `n` points.
pub fn corr_recursion_elements(lca: &Lca, n: usize, list: &[(LcaElement, usize)]) -> Result<CorrFn> {
    Recursion::new(lca, n).eval(list)
}

/// The recursion engine applied to an insertion list of generators.
pub fn corr_recursion(t: &InsertionList) -> Result<CorrFn> {
    let lca = Lca::new(t.jtype(), t.rank())?;
    let list = t
        .entries()
        .iter()
        .zip(t.slots())
        .map(|((a, b), &s)| {
            let q = Quadratic {
                a: a.clone(),
                b: b.clone(),
                m: 1,
                n: 1,
                jtype: t.jtype(),
            };
            Ok((lca.element(&q)?, s))
        })
        .collect::<Result<Vec<_>>>()?;
    corr_recursion_elements(&lca, t.n(), &list)
}
