//! Quadratic Lie conformal algebras `C_X` with their central extension.
//!
//! Generators are `L_{a,b}(-m,-n)1 = 1/2 a(-m) b(-n)|0>` inside the Fock
//! space of the type space (with `K = 1`). Products are computed there and
//! the vacuum component of a product is read back as the coefficient of the
//! central element, which acts as the level `r`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, frac, PolyR, Rational};
use crate::fock::{Factor, Fock, FockState};
use crate::superlinear::{make_type_space, JType, SpaceRef, Vector};

/// A quadratic generator `L_{a,b}(-m,-n)1` with general vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub a: Vector,
    pub b: Vector,
    pub m: u32,
    pub n: u32,
    pub jtype: JType,
}

impl Quadratic {
    /// `|x| = m + n`.
    pub fn degree(&self) -> u32 {
        self.m + self.n
    }
}

/// Basis quadratic `L_{e_a, e_b}(-m,-n)1` in canonical orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadKey {
    pub a: usize,
    pub m: u32,
    pub b: usize,
    pub n: u32,
}

/// Element of `C_X + C K`: a combination of quadratics plus `central * K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LcaElement {
    quads: FockState,
    central: Rational,
}

impl LcaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn central_only(c: Rational) -> Self {
        Self {
            quads: FockState::zero(),
            central: c,
        }
    }

    /// Quadratic part as a Fock state over the type space.
    pub fn state(&self) -> &FockState {
        &self.quads
    }

    /// Coefficient of `K` (read as `r` under the level rule).
    pub fn central(&self) -> &Rational {
        &self.central
    }

    pub fn is_zero(&self) -> bool {
        self.quads.is_zero() && self.central.is_zero()
    }

    pub fn quad_part(&self) -> LcaElement {
        LcaElement {
            quads: self.quads.clone(),
            central: Rational::zero(),
        }
    }

    pub fn add(&self, other: &LcaElement) -> LcaElement {
        LcaElement {
            quads: self.quads.add(&other.quads),
            central: &self.central + &other.central,
        }
    }

    pub fn scale(&self, c: &Rational) -> LcaElement {
        LcaElement {
            quads: self.quads.scale(c),
            central: &self.central * c,
        }
    }

    pub fn sub(&self, other: &LcaElement) -> LcaElement {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Largest `|x|` among the quadratics.
    pub fn max_degree(&self) -> u32 {
        self.quads.max_weight()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Level {
    Symbolic,
    Value(Rational),
}

impl Level {
    fn times(&self, c: &Rational) -> PolyR {
        match self {
            Level::Symbolic => PolyR::monomial(c.clone(), 1),
            Level::Value(v) => PolyR::constant(c * v),
        }
    }
}

/// `[x t^p, y t^q]` in `Lie(C + C K)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BracketModes {
    /// `(quadratic, t-exponent) -> coefficient`.
    pub terms: BTreeMap<(QuadKey, i64), Rational>,
    /// Coefficient of `K t^-1` after substituting the level.
    pub central: PolyR,
}

/// Lie conformal algebra `C_X` over a type space.
#[derive(Debug, Clone)]
pub struct Lca {
    jtype: JType,
    fock: Fock,
}

impl Lca {
    pub fn new(jtype: JType, rank: usize) -> Result<Self> {
        let space = Arc::new(make_type_space(jtype, rank)?);
        Ok(Self {
            jtype,
            fock: Fock::new(space),
        })
    }

    pub fn jtype(&self) -> JType {
        self.jtype
    }

    pub fn space(&self) -> &SpaceRef {
        self.fock.space()
    }

    pub fn fock(&self) -> &Fock {
        &self.fock
    }

    pub fn quadratic(&self, a: &Vector, b: &Vector, m: u32, n: u32) -> Result<Quadratic> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidMode);
        }
        let dim = self.space().dim();
        for v in [a, b] {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
        }
        if self.jtype == JType::A {
            let in_h = |v: &Vector, want: bool| {
                v.support().all(|(i, _)| self.space().in_h_half(i) == want)
            };
            if !in_h(a, true) || !in_h(b, false) {
                return Err(Error::WrongHalves);
            }
        }
        if m == n && a == b && a.parity().is_odd() && !a.is_zero() {
            return Err(Error::Parse(
                "odd generator L(a,a;m,m) is the zero state".into(),
            ));
        }
        Ok(Quadratic {
            a: a.clone(),
            b: b.clone(),
            m,
            n,
            jtype: self.jtype,
        })
    }

    /// Weight-(1,1) generator `L_{a,b}`.
    pub fn generator(&self, a: &Vector, b: &Vector) -> Result<Quadratic> {
        self.quadratic(a, b, 1, 1)
    }

    pub fn element(&self, q: &Quadratic) -> Result<LcaElement> {
        if q.jtype != self.jtype {
            return Err(Error::TypeMismatch);
        }
        let s = self.fock.quadratic_state(&q.a, q.m, &q.b, q.n)?;
        Ok(LcaElement {
            quads: s.scale(&frac(1, 2)),
            central: Rational::zero(),
        })
    }

    /// Splits a Fock state into quadratics plus a vacuum multiple (read as
    /// a multiple of `K`).
    pub fn decompose(&self, s: &FockState) -> Result<LcaElement> {
        if s.terms().any(|(m, _)| !(m.is_empty() || m.len() == 2)) {
            return Err(Error::DecompositionResidue);
        }
        Ok(LcaElement {
            quads: s.without_vacuum(),
            central: s.vacuum_coeff(),
        })
    }

    /// `x_(k) y` for `k >= 0`; central parts of the inputs do not contribute.
    pub fn kth_product(&self, x: &LcaElement, k: u32, y: &LcaElement) -> Result<LcaElement> {
        let s = self.fock.nth_product(&x.quads, k as i64, &y.quads);
        self.decompose(&s)
    }

    pub fn translation(&self, x: &LcaElement) -> LcaElement {
        LcaElement {
            quads: self.fock.translation(&x.quads),
            central: Rational::zero(),
        }
    }

    /// `c(x, y) = x_(|x|+|y|-1) y / (|x|+|y|-1)!`, the central coefficient.
    pub fn cocycle(&self, x: &Quadratic, y: &Quadratic) -> Result<Rational> {
        let top = x.degree() + y.degree() - 1;
        let p = self.kth_product(&self.element(x)?, top, &self.element(y)?)?;
        Ok(p.central / Rational::from_integer(factorial(top as u64)))
    }

    /// `[x t^p, y t^q] = sum_k binom(p, k) (x_(k) y) t^(p+q-k)`, with
    /// `K t^n = 0` for `n != -1` and `K t^-1` acting as the level.
    pub fn lie_bracket_modes(
        &self,
        x: &LcaElement,
        p: i64,
        y: &LcaElement,
        q: i64,
        level: &Level,
    ) -> Result<BracketModes> {
        let mut out = BracketModes::default();
        let kmax = (x.max_degree() + y.max_degree()).saturating_sub(1);
        let mut central = Rational::zero();
        for k in 0..=kmax {
            let b = binomial(p, k as u64);
            if b == BigInt::zero() {
                continue;
            }
            let b = Rational::from_integer(b);
            let prod = self.kth_product(x, k, y)?;
            let mode = p + q - k as i64;
            for (key, c) in self.quads(&prod) {
                let e = out.terms.entry((key, mode)).or_insert_with(Rational::zero);
                *e += c * &b;
            }
            if mode == -1 {
                central += &prod.central * &b;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out.central = level.times(&central);
        Ok(out)
    }

    /// Coefficients against the basis quadratics `L_{e_a,e_b}(-m,-n)1`.
    pub fn quads(&self, x: &LcaElement) -> Vec<(QuadKey, Rational)> {
        let two = Rational::from_integer(2.into());
        x.quads
            .terms()
            .filter(|(m, _)| m.len() == 2)
            .map(|(mono, c)| {
                let [f, g]: [Factor; 2] = [mono.factors()[0], mono.factors()[1]];
                let (f, g) = if self.jtype == JType::A && !self.space().in_h_half(f.idx as usize)
                {
                    (g, f)
                } else {
                    (f, g)
                };
                let key = QuadKey {
                    a: f.idx as usize,
                    m: f.weight(),
                    b: g.idx as usize,
                    n: g.weight(),
                };
                (key, c * &two)
            })
            .collect()
    }

    pub fn key_element(&self, key: QuadKey) -> Result<LcaElement> {
        let sp = self.space();
        self.element(&Quadratic {
            a: sp.basis_vector(key.a),
            b: sp.basis_vector(key.b),
            m: key.m,
            n: key.n,
            jtype: self.jtype,
        })
    }

    pub fn render(&self, x: &LcaElement) -> String {
        let sp = self.space();
        let mut parts: Vec<String> = self
            .quads(x)
            .into_iter()
            .map(|(k, c)| {
                format!(
                    "{c}*L({},{};{},{})",
                    sp.label(k.a),
                    sp.label(k.b),
                    k.m,
                    k.n
                )
            })
            .collect();
        if !x.central.is_zero() {
            parts.push(format!("{}*r", x.central));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for QuadKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(#{},#{};{},{})", self.a, self.b, self.m, self.n)
    }
}
