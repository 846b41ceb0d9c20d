use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{MultiPoly, PolyR, Rational};
use crate::error::{Error, Result};

/// Exponents `e_ij >= 1` of `(z_i - z_j)^(-e_ij)` for slot pairs `i < j`
/// (0-based). Kept sorted by pair, so the derived ordering is the
/// lexicographic order on `(i, j, e)` triples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DiffExponent(Vec<(usize, usize, u32)>);

impl DiffExponent {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Builds from arbitrary `(i, j, e)` triples with `i < j`; repeated pairs
    /// accumulate and zero exponents are dropped.
    pub fn from_triples(triples: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (i, j, e) in triples {
            assert!(i < j, "difference pair must satisfy i < j");
            *map.entry((i, j)).or_insert(0) += e;
        }
        Self(
            map.into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|((i, j), e)| (i, j, e))
                .collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map_or(0, |t| t.2)
    }

    pub fn triples(&self) -> &[(usize, usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree of the denominator.
    pub fn total(&self) -> u32 {
        self.0.iter().map(|t| t.2).sum()
    }

    fn with_exponent(&self, i: usize, j: usize, e: u32) -> Self {
        let mut v: Vec<_> = self
            .0
            .iter()
            .copied()
            .filter(|&(a, b, _)| !(a == i && b == j))
            .collect();
        if e > 0 {
            v.push((i, j, e));
            v.sort();
        }
        Self(v)
    }

    pub fn product(&self, other: &DiffExponent) -> DiffExponent {
        Self::from_triples(self.0.iter().chain(other.0.iter()).copied())
    }
}

/// Degree of a correlation function in `r`; the zero function has its own value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RDegree {
    Zero,
    Degree(usize),
}

/// `sum_terms PolyR(r) * prod (z_i - z_j)^(-e_ij)` over `n` insertion slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrFn {
    n: usize,
    terms: BTreeMap<DiffExponent, PolyR>,
}

impl CorrFn {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: PolyR) -> Self {
        Self::term(n, DiffExponent::one(), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, PolyR::one())
    }

    /// A single term; panics if a pair index is out of range.
    pub fn term(n: usize, den: DiffExponent, coef: PolyR) -> Self {
        assert!(den.0.iter().all(|&(_, j, _)| j < n), "pair index out of range");
        let mut f = Self::zero(n);
        f.add_term(den, coef);
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiffExponent, &PolyR)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, den: &DiffExponent) -> PolyR {
        self.terms.get(den).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, den: DiffExponent, coef: PolyR) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(den) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &coef;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    /// Termwise sum.
    pub fn add(&self, other: &CorrFn) -> Result<CorrFn> {
        if self.n != other.n {
            return Err(Error::SlotMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub(crate) fn add_assign(&mut self, other: &CorrFn) {
        debug_assert_eq!(self.n, other.n);
        for (d, c) in &other.terms {
            self.add_term(d.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> CorrFn {
        CorrFn {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &CorrFn) -> Result<CorrFn> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &PolyR) -> CorrFn {
        let mut out = CorrFn::zero(self.n);
        for (d, p) in &self.terms {
            out.add_term(d.clone(), p * c);
        }
        out
    }

    /// Multiplies by `(z_i - z_j)^(-k)`. For `i > j` the factor is rewritten
    /// as `(-1)^k (z_j - z_i)^(-k)`.
    pub fn mul_diffpow(&self, i: usize, j: usize, k: i64) -> Result<CorrFn> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::InvalidPair(i, j, self.n));
        }
        let (lo, hi, sign) = if i < j {
            (i, j, false)
        } else {
            (j, i, k.rem_euclid(2) == 1)
        };
        let mut out = CorrFn::zero(self.n);
        for (d, c) in &self.terms {
            let e = d.get(lo, hi) as i64 + k;
            if e < 0 {
                return Err(Error::NegativeExponent(lo, hi));
            }
            let coef = if sign { -c } else { c.clone() };
            out.add_term(d.with_exponent(lo, hi, e as u32), coef);
        }
        Ok(out)
    }

    /// Multiplies every term by a fixed monomial in the differences.
    pub fn mul_monomial(&self, den: &DiffExponent) -> CorrFn {
        let mut out = CorrFn::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(d.product(den), c.clone());
        }
        out
    }

    /// Reinterprets the slots through `map[old] = new` in a space of `n` slots.
    /// Differences with a reversed orientation pick up `(-1)^e`.
    pub fn relabel(&self, map: &[usize], n: usize) -> CorrFn {
        let mut out = CorrFn::zero(n);
        for (d, c) in &self.terms {
            let mut neg = false;
            let triples = d.0.iter().map(|&(i, j, e)| {
                let (a, b) = (map[i], map[j]);
                if a < b {
                    (a, b, e)
                } else {
                    neg ^= e % 2 == 1;
                    (b, a, e)
                }
            });
            let den = DiffExponent::from_triples(triples.collect::<Vec<_>>());
            out.add_term(den, if neg { -c } else { c.clone() });
        }
        out
    }

    pub fn degree_r(&self) -> RDegree {
        self.terms
            .values()
            .filter_map(PolyR::degree)
            .max()
            .map_or(RDegree::Zero, RDegree::Degree)
    }

    /// Substitutes a value for `r`, leaving constant coefficients.
    pub fn specialize(&self, r: &Rational) -> CorrFn {
        let mut out = CorrFn::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), PolyR::constant(c.eval(r)));
        }
        out
    }

    pub fn eval(&self, z: &[Rational], r: &Rational) -> Result<Rational> {
        if z.len() != self.n {
            return Err(Error::PointCount {
                expected: self.n,
                got: z.len(),
            });
        }
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                if z[i] == z[j] {
                    return Err(Error::CoincidentPoints(i + 1, j + 1));
                }
            }
        }
        let mut acc = Rational::zero();
        for (d, c) in &self.terms {
            let mut den = Rational::one();
            for &(i, j, e) in d.triples() {
                let diff = &z[i] - &z[j];
                for _ in 0..e {
                    den *= &diff;
                }
            }
            acc += c.eval(r) / den;
        }
        Ok(acc)
    }

    /// Numerator of `self - other` over the common denominator
    /// `prod (z_i - z_j)^(max e_ij)`, expanded with the last slot set to zero
    /// (every term depends on differences only, so this translation loses
    /// nothing). Variables: `z_1 .. z_(n-1)` then `r`.
    pub fn difference_numerator(&self, other: &CorrFn) -> Result<MultiPoly> {
        let diff = self.sub(other)?;
        Ok(diff.numerator())
    }

    fn numerator(&self) -> MultiPoly {
        let zvars = self.n.saturating_sub(1);
        let nvars = zvars + 1;
        let mut maxe: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for d in self.terms.keys() {
            for &(i, j, e) in d.triples() {
                let m = maxe.entry((i, j)).or_insert(0);
                *m = (*m).max(e);
            }
        }
        let var = |s: usize| (s < zvars).then_some(s);
        let mut powers: HashMap<(usize, usize, u32), MultiPoly> = HashMap::new();
        let mut total = MultiPoly::zero(nvars);
        for (d, c) in &self.terms {
            let mut num = MultiPoly::zero(nvars);
            for (k, ck) in c.terms() {
                let mut e = vec![0u16; nvars];
                e[zvars] = k as u16;
                num.add_term(e, ck.clone());
            }
            for (&(i, j), &m) in &maxe {
                let p = m - d.get(i, j);
                if p == 0 {
                    continue;
                }
                let factor = powers
                    .entry((i, j, p))
                    .or_insert_with(|| MultiPoly::diff_power(nvars, var(i), var(j), p));
                num = num.mul(factor);
            }
            total.add_assign(&num);
        }
        total
    }

    /// Equality as rational functions, decided by expanding numerators over
    /// the common denominator.
    pub fn eq_rational(&self, other: &CorrFn) -> Result<bool> {
        Ok(self.difference_numerator(other)?.is_zero())
    }

    /// First differing numerator monomial, rendered, or `None` when equal.
    pub fn difference_witness(&self, other: &CorrFn) -> Result<Option<String>> {
        let num = self.difference_numerator(other)?;
        Ok(num.sorted_terms().first().map(|(e, c)| {
            let zvars = e.len() - 1;
            let mut s = format!("{c}");
            for (v, &k) in e.iter().enumerate() {
                let name = if v < zvars {
                    format!("z{}", v + 1)
                } else {
                    "r".to_string()
                };
                match k {
                    0 => {}
                    1 => s.push_str(&format!("*{name}")),
                    _ => s.push_str(&format!("*{name}^{k}")),
                }
            }
            format!("numerator of difference has monomial {s} (z{} = 0)", self.n)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn dx(t: &[(usize, usize, u32)]) -> DiffExponent {
        DiffExponent::from_triples(t.iter().copied())
    }

    #[test]
    fn add_identity_and_cancellation() {
        let f = CorrFn::term(2, dx(&[(0, 1, 2)]), PolyR::r());
        assert_eq!(f.add(&CorrFn::zero(2)).unwrap(), f);
        let g = CorrFn::term(2, dx(&[(0, 1, 2)]), -&PolyR::r());
        assert!(f.add(&g).unwrap().is_zero());
        let h = CorrFn::term(3, dx(&[(0, 1, 2)]), PolyR::one())
            .add(&CorrFn::term(3, dx(&[(0, 2, 2)]), PolyR::one()))
            .unwrap();
        assert_eq!(h.num_terms(), 2);
        assert_eq!(
            f.add(&CorrFn::zero(3)).unwrap_err(),
            Error::SlotMismatch(2, 3)
        );
    }

    #[test]
    fn mul_diffpow_examples() {
        let one = CorrFn::one(2);
        assert_eq!(
            one.mul_diffpow(0, 1, 4).unwrap(),
            CorrFn::term(2, dx(&[(0, 1, 4)]), PolyR::one())
        );
        assert_eq!(
            one.mul_diffpow(1, 0, 1).unwrap(),
            CorrFn::term(2, dx(&[(0, 1, 1)]), PolyR::constant(rat(-1)))
        );
        let f = CorrFn::term(2, dx(&[(0, 1, 2)]), PolyR::r());
        assert_eq!(
            f.mul_diffpow(0, 1, 2).unwrap(),
            CorrFn::term(2, dx(&[(0, 1, 4)]), PolyR::r())
        );
        assert!(matches!(
            one.mul_diffpow(0, 1, -1),
            Err(Error::NegativeExponent(0, 1))
        ));
        assert!(one.mul_diffpow(1, 1, 1).is_err());
    }

    #[test]
    fn partial_fraction_identity() {
        // 1/(x12 x13) = 1/(x12 x23) - 1/(x13 x23) with x13 = x12 + x23.
        let lhs = CorrFn::term(3, dx(&[(0, 1, 1), (0, 2, 1)]), PolyR::one());
        let rhs = CorrFn::term(3, dx(&[(0, 1, 1), (1, 2, 1)]), PolyR::one())
            .add(&CorrFn::term(
                3,
                dx(&[(0, 2, 1), (1, 2, 1)]),
                PolyR::constant(rat(-1)),
            ))
            .unwrap();
        assert!(lhs.eq_rational(&rhs).unwrap());
        assert!(lhs.eq_rational(&lhs).unwrap());
        let plus = CorrFn::term(3, dx(&[(0, 1, 1), (1, 2, 1)]), PolyR::one())
            .add(&CorrFn::term(3, dx(&[(0, 2, 1), (1, 2, 1)]), PolyR::one()))
            .unwrap();
        assert!(!lhs.eq_rational(&plus).unwrap());
        let f = CorrFn::term(2, dx(&[(0, 1, 2)]), PolyR::r());
        let g = CorrFn::term(2, dx(&[(0, 1, 2)]), &PolyR::r() + &PolyR::one());
        assert!(!f.eq_rational(&g).unwrap());
        assert!(f.difference_witness(&g).unwrap().is_some());
    }

    #[test]
    fn evaluation() {
        assert_eq!(CorrFn::one(3).eval(&[rat(1), rat(5), rat(7)], &rat(9)).unwrap(), rat(1));
        let f = CorrFn::term(2, dx(&[(0, 1, 4)]), PolyR::monomial(frac(1, 2), 1));
        assert_eq!(f.eval(&[rat(1), rat(0)], &rat(2)).unwrap(), rat(1));
        let g = CorrFn::term(2, dx(&[(0, 1, 1)]), PolyR::one());
        assert_eq!(g.eval(&[rat(3), rat(1)], &rat(0)).unwrap(), frac(1, 2));
        assert_eq!(
            g.eval(&[rat(3), rat(3)], &rat(0)).unwrap_err(),
            Error::CoincidentPoints(1, 2)
        );
    }

    #[test]
    fn degree() {
        assert_eq!(CorrFn::zero(2).degree_r(), RDegree::Zero);
        let f = CorrFn::term(2, dx(&[(0, 1, 4)]), PolyR::monomial(frac(1, 2), 1));
        assert_eq!(f.degree_r(), RDegree::Degree(1));
    }
}
