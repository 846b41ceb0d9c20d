//! Hermitian Jordan algebras realized as endomorphism matrices of the type
//! space, with the rank-one rule `(a (x) b)(u) = (b, u) a`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{frac, pow2, Rational};
use crate::superlinear::{FormedSpace, JType, Vector};

/// Dense square rational matrix; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i)).fold(Rational::zero(), |a, x| a + x)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_add(rhs).expect("matrix size mismatch")
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self + &rhs.scale(&-Rational::one())
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("matrix size mismatch")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanElement {
    pub matrix: RatMatrix,
}

impl JordanElement {
    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }
}

/// Matrix of `u -> (b, u) a` on the basis of `space`, restricted to the
/// first `n` basis vectors (the `h` half for type A).
fn rank_one(space: &FormedSpace, n: usize, a: &Vector, b: &Vector) -> RatMatrix {
    let mut m = RatMatrix::zeros(n);
    for u in 0..n {
        let bu = b
            .support()
            .map(|(j, c)| c * space.gram(j, u))
            .fold(Rational::zero(), |x, y| x + y);
        if bu.is_zero() {
            continue;
        }
        for (i, ai) in a.support() {
            if i < n {
                *m.get_mut(i, u) += ai * &bu;
            }
        }
    }
    m
}

/// `L_{a,b*} = a (x) b*` (type A), `a (x) b + b (x) a` (B), `a (x) b - b (x) a` (C).
pub fn endo_from_pair(space: &FormedSpace, a: &Vector, b: &Vector) -> Result<JordanElement> {
    let jtype = space.jtype().ok_or(Error::TypeMismatch)?;
    let matrix = match jtype {
        JType::A => {
            let d = space.rank().unwrap_or(0);
            let ok_a = a.support().all(|(i, _)| space.in_h_half(i));
            let ok_b = b.support().all(|(i, _)| !space.in_h_half(i));
            if !ok_a || !ok_b {
                return Err(Error::WrongHalves);
            }
            rank_one(space, d, a, b)
        }
        JType::B => {
            let n = space.dim();
            &rank_one(space, n, a, b) + &rank_one(space, n, b, a)
        }
        JType::C => {
            let n = space.dim();
            &rank_one(space, n, a, b) - &rank_one(space, n, b, a)
        }
    };
    Ok(JordanElement { matrix })
}

/// `A o B = (AB + BA) / 2`.
pub fn jordan_product(x: &JordanElement, y: &JordanElement) -> Result<JordanElement> {
    let ab = x.matrix.try_mul(&y.matrix)?;
    let ba = y.matrix.try_mul(&x.matrix)?;
    Ok(JordanElement {
        matrix: ab.try_add(&ba)?.scale(&frac(1, 2)),
    })
}

/// `Tr(L_{a_1,b_1} ... L_{a_t,b_t})` for one cycle, in the given order.
pub fn trace_cycle(space: &FormedSpace, pairs: &[(Vector, Vector)]) -> Result<Rational> {
    let (first, rest) = pairs.split_first().ok_or(Error::EmptyCycle)?;
    let mut acc = endo_from_pair(space, &first.0, &first.1)?.matrix;
    for (a, b) in rest {
        acc = acc.try_mul(&endo_from_pair(space, a, b)?.matrix)?;
    }
    Ok(acc.trace())
}

/// `Gamma_X(sigma, T)`: `2^(-s-n) prod Tr` for B and C, `2^(-n) prod Tr` for
/// A, where `s` is the number of cycles and `n` the number of insertions.
/// For type C each cycle contributes the supertrace of the odd space,
/// `-Tr`.
pub fn gamma_factor(
    space: &FormedSpace,
    cycles: &[Vec<usize>],
    pairs: &[(Vector, Vector)],
) -> Result<Rational> {
    let n = pairs.len();
    let mut seen = vec![false; n];
    for c in cycles {
        for &i in c {
            seen[i] = true;
        }
        if c.len() < 2 {
            return Err(Error::FixedPoint(c.first().copied().unwrap_or(0)));
        }
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::FixedPoint(i));
    }
    let s = cycles.len() as i64;
    let jtype = space.jtype().ok_or(Error::TypeMismatch)?;
    let mut acc = match jtype {
        JType::A => pow2(-(n as i64)),
        JType::B | JType::C => pow2(-s - n as i64),
    };
    for c in cycles {
        let ordered: Vec<(Vector, Vector)> = c.iter().map(|&i| pairs[i].clone()).collect();
        let mut t = trace_cycle(space, &ordered)?;
        if jtype == JType::C {
            t = -t;
        }
        acc *= t;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}
