//! Free-field Fock space `S(h_-)` over a formed superspace, with `K = 1`.
//!
//! States are finite sums of canonically ordered monomials
//! `x_1(-m_1) ... x_k(-m_k)|0>`, sorted by (mode ascending, basis index
//! ascending). Reordering tracks Koszul signs and repeated odd factors
//! vanish.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, Rational};
use crate::superlinear::{Parity, SpaceRef, Vector};

/// One creation operator `e_idx(mode)` with `mode <= -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub mode: i32,
    pub idx: u32,
}

impl Factor {
    pub fn new(idx: usize, mode: i32) -> Self {
        debug_assert!(mode <= -1);
        Self {
            mode,
            idx: idx as u32,
        }
    }

    pub fn weight(self) -> u32 {
        (-self.mode) as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FockMonomial(Vec<Factor>);

impl FockMonomial {
    pub fn vacuum() -> Self {
        Self(Vec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|f| f.weight()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FockState {
    terms: BTreeMap<FockMonomial, Rational>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(FockMonomial::vacuum(), Rational::one())
    }

    pub fn monomial(m: FockMonomial, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockState, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &FockState) -> FockState {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &FockState) -> FockState {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> FockState {
        let mut out = FockState::zero();
        out.add_scaled(self, c);
        out
    }

    /// Coefficient of `|0>`.
    pub fn vacuum_coeff(&self) -> Rational {
        self.terms
            .get(&FockMonomial::vacuum())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The state with its vacuum component removed.
    pub fn without_vacuum(&self) -> FockState {
        let mut out = self.clone();
        out.terms.remove(&FockMonomial::vacuum());
        out
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(FockMonomial::weight).max().unwrap_or(0)
    }

    pub fn min_weight(&self) -> u32 {
        self.terms.keys().map(FockMonomial::weight).min().unwrap_or(0)
    }

    /// Largest `m` such that some factor has mode `-m`.
    pub fn max_mode_depth(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|f| f.weight()))
            .max()
            .unwrap_or(0)
    }

    /// `Some(w)` when every monomial has weight `w`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(FockMonomial::weight);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }
}

/// Mode algebra acting on `S(h_-)` for a fixed formed space.
#[derive(Debug, Clone)]
pub struct Fock {
    space: SpaceRef,
}

impl Fock {
    pub fn new(space: SpaceRef) -> Self {
        Self { space }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    fn parity(&self, f: Factor) -> Parity {
        self.space.parity(f.idx as usize)
    }

    fn odd_count(&self, factors: &[Factor]) -> usize {
        factors.iter().filter(|f| self.parity(**f).is_odd()).count()
    }

    pub fn monomial_parity(&self, m: &FockMonomial) -> Parity {
        if self.odd_count(&m.0) % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Left-multiplies `m` by `f` and re-sorts. Returns the canonical
    /// monomial and whether the Koszul sign is negative, or `None` when an
    /// odd factor repeats.
    fn insert(&self, f: Factor, m: &FockMonomial) -> Option<(FockMonomial, bool)> {
        let odd = self.parity(f).is_odd();
        let pos = m.0.partition_point(|x| *x < f);
        if odd && m.0.get(pos) == Some(&f) {
            return None;
        }
        let negate = odd && self.odd_count(&m.0[..pos]) % 2 == 1;
        let mut v = m.0.clone();
        v.insert(pos, f);
        Some((FockMonomial(v), negate))
    }

    /// Canonical form of the ordered product `factors[0] factors[1] ... |0>`.
    pub fn ordered_product(&self, factors: &[Factor]) -> Option<(FockMonomial, bool)> {
        let mut m = FockMonomial::vacuum();
        let mut neg = false;
        for f in factors.iter().rev() {
            let (next, s) = self.insert(*f, &m)?;
            m = next;
            neg ^= s;
        }
        Some((m, neg))
    }

    /// State `factors[0] factors[1] ... |0>` (basis index, mode) in that order.
    pub fn product_state(&self, factors: &[(usize, i32)]) -> FockState {
        let fs: Vec<Factor> = factors.iter().map(|&(i, m)| Factor::new(i, m)).collect();
        match self.ordered_product(&fs) {
            Some((m, neg)) => {
                FockState::monomial(m, if neg { -Rational::one() } else { Rational::one() })
            }
            None => FockState::zero(),
        }
    }

    /// `e_idx(m)` acting on `s`.
    pub fn apply_basis_mode(&self, idx: usize, m: i64, s: &FockState) -> FockState {
        let mut out = FockState::zero();
        if m == 0 {
            return out;
        }
        if m < 0 {
            let f = Factor::new(idx, m as i32);
            for (mono, c) in s.terms() {
                if let Some((next, neg)) = self.insert(f, mono) {
                    out.add_term(next, if neg { -c } else { c.clone() });
                }
            }
            return out;
        }
        let a_odd = self.space.parity(idx).is_odd();
        for (mono, c) in s.terms() {
            let mut odd_before = 0usize;
            for (l, x) in mono.0.iter().enumerate() {
                if x.mode as i64 == -m {
                    let g = self.space.gram(idx, x.idx as usize);
                    if !g.is_zero() {
                        let mut coef = c * g * Rational::from_integer(BigInt::from(m));
                        if a_odd && odd_before % 2 == 1 {
                            coef = -coef;
                        }
                        let mut rest = mono.0.clone();
                        rest.remove(l);
                        out.add_term(FockMonomial(rest), coef);
                    }
                }
                if self.parity(*x).is_odd() {
                    odd_before += 1;
                }
            }
        }
        out
    }

    /// `a(m)` acting on `s` for a homogeneous vector `a` of the ambient space.
    pub fn apply_mode(&self, a: &Vector, m: i64, s: &FockState) -> Result<FockState> {
        if a.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                got: a.dim(),
            });
        }
        let mut out = FockState::zero();
        for (i, c) in a.support() {
            out.add_scaled(&self.apply_basis_mode(i, m, s), c);
        }
        Ok(out)
    }

    /// `a(-m) b(-n)|0>` for vectors `a`, `b`.
    pub fn quadratic_state(&self, a: &Vector, m: u32, b: &Vector, n: u32) -> Result<FockState> {
        let inner = self.apply_mode(b, -(n as i64), &FockState::vacuum())?;
        self.apply_mode(a, -(m as i64), &inner)
    }

    /// Mode `(u)_(n)` of the field of a single monomial acting on `v`,
    /// by structural recursion on the leftmost factor:
    /// `(a(-p) w)_(n) = sum_j binom(p-1+j, j) [ a(-p-j) w_(n+j)
    ///                  + (-1)^(p+1) (-1)^(|a||w|) w_(n-p-j) a(j) ]`.
    fn field_mode(&self, factors: &[Factor], n: i64, v: &FockState) -> FockState {
        let Some((&a, w)) = factors.split_first() else {
            return if n == -1 { v.clone() } else { FockState::zero() };
        };
        if v.is_zero() {
            return FockState::zero();
        }
        let p = a.weight() as i64;
        let idx = a.idx as usize;
        let wt_w: i64 = w.iter().map(|f| f.weight() as i64).sum();
        let wt_v = v.max_weight() as i64;
        let mut out = FockState::zero();

        let jmax = wt_w + wt_v - 1 - n;
        for j in 0..=jmax.max(-1) {
            let inner = self.field_mode(w, n + j, v);
            if inner.is_zero() {
                continue;
            }
            let c = Rational::from_integer(binomial(p - 1 + j, j as u64));
            out.add_scaled(&self.apply_basis_mode(idx, -(p + j), &inner), &c);
        }

        let odd_swap = self.parity(a).is_odd() && self.odd_count(w) % 2 == 1;
        let negate = (p % 2 == 0) ^ odd_swap;
        for j in 1..=v.max_mode_depth() as i64 {
            let av = self.apply_basis_mode(idx, j, v);
            if av.is_zero() {
                continue;
            }
            let inner = self.field_mode(w, n - p - j, &av);
            if inner.is_zero() {
                continue;
            }
            let mut c = Rational::from_integer(binomial(p - 1 + j, j as u64));
            if negate {
                c = -c;
            }
            out.add_scaled(&inner, &c);
        }
        out
    }

    /// `u_(k) v` for any integer `k`.
    pub fn nth_product(&self, u: &FockState, k: i64, v: &FockState) -> FockState {
        let mut out = FockState::zero();
        for (mono, c) in u.terms() {
            out.add_scaled(&self.field_mode(&mono.0, k, v), c);
        }
        out
    }

    /// Translation operator: `T(a(-m) w) = m a(-m-1) w + a(-m) T(w)`.
    pub fn translation(&self, s: &FockState) -> FockState {
        let mut out = FockState::zero();
        for (mono, c) in s.terms() {
            for l in 0..mono.0.len() {
                let mut fs = mono.0.clone();
                let m = fs[l].weight();
                fs[l].mode -= 1;
                if let Some((next, neg)) = self.ordered_product(&fs) {
                    let coef = c * Rational::from_integer(BigInt::from(m));
                    out.add_term(next, if neg { -coef } else { coef });
                }
            }
        }
        out
    }

    /// Debug rendering, e.g. `2*e1(-2)e1(-1)|0>`.
    pub fn render(&self, s: &FockState) -> String {
        if s.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = s
            .terms()
            .map(|(m, c)| {
                let mut t = String::new();
                if !c.is_one() {
                    let _ = write!(t, "{c}*");
                }
                for f in &m.0 {
                    let _ = write!(t, "{}({})", self.space.label(f.idx as usize), f.mode);
                }
                t.push_str("|0>");
                t
            })
            .collect();
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exact::rat;
    use crate::superlinear::{make_type_space, JType};

    fn fock(jt: JType, d: usize) -> Fock {
        Fock::new(Arc::new(make_type_space(jt, d).unwrap()))
    }

    #[test]
    fn annihilation_examples() {
        let f = fock(JType::B, 1);
        let e1 = f.space().basis_vector(0);
        let s = f.product_state(&[(0, -1)]);
        assert_eq!(f.apply_mode(&e1, 1, &s).unwrap(), FockState::vacuum());
        assert!(f.apply_mode(&e1, 0, &s).unwrap().is_zero());

        let c = fock(JType::C, 1);
        let (f1, f2) = (c.space().basis_vector(0), c.space().basis_vector(1));
        let s = c.product_state(&[(0, -1)]);
        assert!(c.apply_mode(&f1, 1, &s).unwrap().is_zero());
        assert_eq!(
            c.apply_mode(&f2, 1, &s).unwrap(),
            FockState::vacuum().scale(&rat(-1))
        );
    }

    #[test]
    fn odd_square_vanishes_and_reorders_with_sign() {
        let c = fock(JType::C, 1);
        assert!(c.product_state(&[(0, -1), (0, -1)]).is_zero());
        let ab = c.product_state(&[(0, -1), (1, -1)]);
        let ba = c.product_state(&[(1, -1), (0, -1)]);
        assert_eq!(ab, ba.scale(&rat(-1)));
    }

    #[test]
    fn nth_product_examples() {
        let f = fock(JType::B, 1);
        let a = f.product_state(&[(0, -1)]);
        assert_eq!(f.nth_product(&a, -1, &FockState::vacuum()), a);
        let x = f.product_state(&[(0, -1), (0, -1)]);
        assert_eq!(f.nth_product(&x, 3, &x), FockState::vacuum().scale(&rat(2)));

        let f2 = fock(JType::B, 2);
        let y = f2.product_state(&[(0, -1), (1, -1)]);
        let expect = f2
            .product_state(&[(0, -1), (0, -1)])
            .add(&f2.product_state(&[(1, -1), (1, -1)]));
        assert_eq!(f2.nth_product(&y, 1, &y), expect);
    }

    #[test]
    fn translation_examples() {
        let f = fock(JType::B, 1);
        assert!(f.translation(&FockState::vacuum()).is_zero());
        assert_eq!(
            f.translation(&f.product_state(&[(0, -1)])),
            f.product_state(&[(0, -2)])
        );
        assert_eq!(
            f.translation(&f.product_state(&[(0, -1), (0, -1)])),
            f.product_state(&[(0, -2), (0, -1)]).scale(&rat(2))
        );
        assert_eq!(
            f.render(&f.product_state(&[(0, -1), (0, -2)])),
            "e1(-2)e1(-1)|0>"
        );
    }

    #[test]
    fn vacuum_coefficients() {
        let f = fock(JType::B, 1);
        assert_eq!(FockState::vacuum().vacuum_coeff(), rat(1));
        assert_eq!(f.product_state(&[(0, -1)]).vacuum_coeff(), rat(0));
        let s = FockState::vacuum()
            .scale(&rat(3))
            .add(&f.product_state(&[(0, -2)]));
        assert_eq!(s.vacuum_coeff(), rat(3));
    }

    #[test]
    fn state_field_identity() {
        let f = fock(JType::C, 2);
        let u = f.product_state(&[(0, -2), (3, -1), (1, -1)]);
        assert_eq!(f.nth_product(&u, -1, &FockState::vacuum()), u);
    }
}
