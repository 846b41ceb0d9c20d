//! Parity-graded spaces carrying a non-degenerate supersymmetric form.
//!
//! Basis conventions:
//! * type B, rank `d`: even `e1..ed`, orthonormal;
//! * type C, rank `d`: odd `f1..f2d`, `(f_i, f_{d+i}) = 1 = -(f_{d+i}, f_i)`;
//! * type A, rank `d`: even `e1..ed, e1*..ed*`, both halves isotropic,
//!   `(e_i, e_j*) = (e_j*, e_i) = delta_ij`;
//! * level space `r`: even `h1..hr`, orthonormal.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Koszul sign `(-1)^{|self||other|}` as a boolean "negate".
    pub fn swap_negates(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

/// Hermitian Jordan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum JType {
    A,
    B,
    C,
}

impl JType {
    pub const ALL: [JType; 3] = [JType::A, JType::B, JType::C];
}

impl fmt::Display for JType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JType::A => "A",
            JType::B => "B",
            JType::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for JType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(JType::A),
            "B" | "b" => Ok(JType::B),
            "C" | "c" => Ok(JType::C),
            _ => Err(Error::Parse(format!("unknown Jordan type `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    parity: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parity: Vec<Parity>) -> Self {
        assert_eq!(labels.len(), parity.len());
        Self { labels, parity }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `(p|q)`: counts of even and odd basis vectors.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, idx: usize) -> Parity {
        self.parity[idx]
    }
}

/// Gram matrix over the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Vec<Vec<Rational>>,
}

impl BilinearForm {
    pub fn new(gram: Vec<Vec<Rational>>) -> Self {
        Self { gram }
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    pub fn determinant(&self) -> Rational {
        let n = self.gram.len();
        let mut m = self.gram.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &p;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        det
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    /// Types B and C.
    Type { jtype: JType, rank: usize },
    /// Type A: `h + h*`.
    Doubled { rank: usize },
    Level(u32),
    Tensor,
}

/// Homogeneous vector, dense over the basis of its space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    comps: Vec<Rational>,
    parity: Parity,
}

impl Vector {
    pub fn comps(&self) -> &[Rational] {
        &self.comps
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.comps.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            comps: self.comps.iter().map(|x| x * c).collect(),
            parity: self.parity,
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        if !self.is_zero() && !other.is_zero() && self.parity != other.parity {
            return Err(Error::Inhomogeneous);
        }
        let parity = if self.is_zero() { other.parity } else { self.parity };
        Ok(Vector {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
            parity,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormedSpace {
    space: SuperSpace,
    form: BilinearForm,
    kind: SpaceKind,
    index: HashMap<String, usize>,
}

impl FormedSpace {
    pub fn new(space: SuperSpace, form: BilinearForm, kind: SpaceKind) -> Self {
        let index = space
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Self {
            space,
            form,
            kind,
            index,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sdim(&self) -> (usize, usize) {
        self.space.sdim()
    }

    pub fn parity(&self, idx: usize) -> Parity {
        self.space.parity(idx)
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.space.labels[idx]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn gram(&self, i: usize, j: usize) -> &Rational {
        self.form.entry(i, j)
    }

    pub fn basis_vector(&self, idx: usize) -> Vector {
        let mut comps = vec![Rational::zero(); self.dim()];
        comps[idx] = Rational::one();
        Vector {
            comps,
            parity: self.parity(idx),
        }
    }

    pub fn zero_vector(&self) -> Vector {
        Vector {
            comps: vec![Rational::zero(); self.dim()],
            parity: Parity::Even,
        }
    }

    /// Builds a homogeneous vector from dense components.
    pub fn vector_from_comps(&self, comps: Vec<Rational>) -> Result<Vector> {
        if comps.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: comps.len(),
            });
        }
        let mut parity = None;
        for (i, c) in comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(self.parity(i)),
                Some(p) if p != self.parity(i) => return Err(Error::Inhomogeneous),
                Some(_) => {}
            }
        }
        Ok(Vector {
            comps,
            parity: parity.unwrap_or(Parity::Even),
        })
    }

    pub fn vector(&self, entries: &[(&str, Rational)]) -> Result<Vector> {
        let mut comps = vec![Rational::zero(); self.dim()];
        for (label, c) in entries {
            comps[self.index_of(label)?] += c;
        }
        self.vector_from_comps(comps)
    }

    /// Parses `"e1"`, `"(1/2)e1+(1/3)e2"`, `"2e1-e2*"`.
    pub fn parse_vector(&self, s: &str) -> Result<Vector> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        let mut entries = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let mut sign = Rational::one();
            while let Some(r) = rest.strip_prefix(['+', '-']) {
                if rest.starts_with('-') {
                    sign = -sign;
                }
                rest = r;
            }
            let coef = if let Some(r) = rest.strip_prefix('(') {
                let close = r
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed `(` in `{s}`")))?;
                let q = parse_rational(&r[..close])?;
                rest = &r[close + 1..];
                q
            } else {
                let end = rest
                    .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                    .unwrap_or(rest.len());
                let (num, r) = rest.split_at(end);
                rest = r;
                if num.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(num)?
                }
            };
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (label, r) = rest.split_at(end);
            if label.is_empty() {
                return Err(Error::Parse(format!("missing basis label in `{s}`")));
            }
            entries.push((label, sign * coef));
            rest = r;
        }
        self.vector(&entries)
    }

    /// `(u, v)` extended bilinearly from the gram matrix.
    pub fn form_eval(&self, u: &Vector, v: &Vector) -> Result<Rational> {
        for w in [u, v] {
            if w.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: w.dim(),
                });
            }
        }
        let mut acc = Rational::zero();
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                let g = self.gram(i, j);
                if !g.is_zero() {
                    acc += a * b * g;
                }
            }
        }
        Ok(acc)
    }

    /// `(e_idx, v)`.
    pub fn form_basis_left(&self, idx: usize, v: &Vector) -> Rational {
        v.support()
            .map(|(j, b)| b * self.gram(idx, j))
            .fold(Rational::zero(), |a, x| a + x)
    }

    pub fn is_supersymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let g = self.gram(i, j);
                let t = self.gram(j, i);
                let cross = self.parity(i) != self.parity(j);
                if cross {
                    g.is_zero()
                } else if self.parity(i).swap_negates(self.parity(j)) {
                    *g == -t
                } else {
                    g == t
                }
            })
        })
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.form.determinant().is_zero()
    }

    /// For type A spaces: whether basis index `idx` lies in the `h` half.
    pub fn in_h_half(&self, idx: usize) -> bool {
        match self.kind {
            SpaceKind::Doubled { rank } => idx < rank,
            _ => true,
        }
    }

    /// Rank `d` of a type space.
    pub fn rank(&self) -> Option<usize> {
        match self.kind {
            SpaceKind::Type { rank, .. } | SpaceKind::Doubled { rank } => Some(rank),
            _ => None,
        }
    }

    pub fn jtype(&self) -> Option<JType> {
        match self.kind {
            SpaceKind::Type { jtype, .. } => Some(jtype),
            SpaceKind::Doubled { .. } => Some(JType::A),
            _ => None,
        }
    }
}

pub fn make_type_space(jtype: JType, d: usize) -> Result<FormedSpace> {
    if d < 1 {
        return Err(Error::InvalidRank);
    }
    let zero = || vec![vec![Rational::zero(); 2 * d]; 2 * d];
    let fs = match jtype {
        JType::B => {
            let labels = (1..=d).map(|i| format!("e{i}")).collect();
            let gram = (0..d)
                .map(|i| (0..d).map(|j| rat((i == j) as i64)).collect())
                .collect();
            FormedSpace::new(
                SuperSpace::new(labels, vec![Parity::Even; d]),
                BilinearForm::new(gram),
                SpaceKind::Type { jtype, rank: d },
            )
        }
        JType::C => {
            let labels = (1..=2 * d).map(|i| format!("f{i}")).collect();
            let mut gram = zero();
            for i in 0..d {
                gram[i][d + i] = rat(1);
                gram[d + i][i] = rat(-1);
            }
            FormedSpace::new(
                SuperSpace::new(labels, vec![Parity::Odd; 2 * d]),
                BilinearForm::new(gram),
                SpaceKind::Type { jtype, rank: d },
            )
        }
        JType::A => {
            let labels = (1..=d)
                .map(|i| format!("e{i}"))
                .chain((1..=d).map(|i| format!("e{i}*")))
                .collect();
            let mut gram = zero();
            for i in 0..d {
                gram[i][d + i] = rat(1);
                gram[d + i][i] = rat(1);
            }
            FormedSpace::new(
                SuperSpace::new(labels, vec![Parity::Even; 2 * d]),
                BilinearForm::new(gram),
                SpaceKind::Doubled { rank: d },
            )
        }
    };
    Ok(fs)
}

pub fn make_level_space(r: u32) -> Result<FormedSpace> {
    if r < 1 {
        return Err(Error::InvalidLevel(rat(r as i64)));
    }
    let n = r as usize;
    let labels = (1..=n).map(|i| format!("h{i}")).collect();
    let gram = (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect();
    Ok(FormedSpace::new(
        SuperSpace::new(labels, vec![Parity::Even; n]),
        BilinearForm::new(gram),
        SpaceKind::Level(r),
    ))
}

/// `F (x) G` with basis `(u, x)` at index `u * dim(G) + x`, labelled `"u:x"`,
/// and form `(a (x) x, b (x) y) = (-1)^{|x||b|} (a, b)(x, y)'`.
pub fn tensor(f: &FormedSpace, g: &FormedSpace) -> FormedSpace {
    let (nf, ng) = (f.dim(), g.dim());
    let mut labels = Vec::with_capacity(nf * ng);
    let mut parity = Vec::with_capacity(nf * ng);
    for u in 0..nf {
        for x in 0..ng {
            labels.push(format!("{}:{}", f.label(u), g.label(x)));
            parity.push(f.parity(u).add(g.parity(x)));
        }
    }
    let mut gram = vec![vec![Rational::zero(); nf * ng]; nf * ng];
    for a in 0..nf {
        for x in 0..ng {
            for b in 0..nf {
                let fab = f.gram(a, b);
                if fab.is_zero() {
                    continue;
                }
                for y in 0..ng {
                    let gxy = g.gram(x, y);
                    if gxy.is_zero() {
                        continue;
                    }
                    let mut v = fab * gxy;
                    if g.parity(x).swap_negates(f.parity(b)) {
                        v = -v;
                    }
                    gram[a * ng + x][b * ng + y] = v;
                }
            }
        }
    }
    FormedSpace::new(
        SuperSpace::new(labels, parity),
        BilinearForm::new(gram),
        SpaceKind::Tensor,
    )
}

/// Image of `a (x) x` in `tensor(f, g)`.
pub fn tensor_vector(f: &FormedSpace, g: &FormedSpace, a: &Vector, x: &Vector) -> Vector {
    let ng = g.dim();
    let mut comps = vec![Rational::zero(); f.dim() * ng];
    for (u, cu) in a.support() {
        for (y, cy) in x.support() {
            comps[u * ng + y] = cu * cy;
        }
    }
    Vector {
        comps,
        parity: a.parity().add(x.parity()),
    }
}

/// Shared handle used by the Fock and engine layers.
pub type SpaceRef = Arc<FormedSpace>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_spaces() {
        let b = make_type_space(JType::B, 2).unwrap();
        assert_eq!(b.sdim(), (2, 0));
        assert_eq!(b.form().gram()[0], vec![rat(1), rat(0)]);
        let c = make_type_space(JType::C, 1).unwrap();
        assert_eq!(c.sdim(), (0, 2));
        assert_eq!(
            c.form().gram(),
            &[vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]
        );
        let a = make_type_space(JType::A, 1).unwrap();
        assert_eq!(a.sdim(), (2, 0));
        assert_eq!(
            a.form().gram(),
            &[vec![rat(0), rat(1)], vec![rat(1), rat(0)]]
        );
        assert_eq!(make_type_space(JType::B, 0).unwrap_err(), Error::InvalidRank);
    }

    #[test]
    fn level_spaces() {
        assert_eq!(make_level_space(1).unwrap().form().gram(), &[vec![rat(1)]]);
        let l3 = make_level_space(3).unwrap();
        assert_eq!(l3.sdim(), (3, 0));
        assert!(l3.is_nondegenerate());
        let (p, q) = make_level_space(2).unwrap().sdim();
        assert_eq!(p as i64 - q as i64, 2);
        assert!(make_level_space(0).is_err());
    }

    #[test]
    fn tensor_products() {
        let b1 = make_type_space(JType::B, 1).unwrap();
        let l3 = make_level_space(3).unwrap();
        assert_eq!(tensor(&b1, &l3).sdim(), (3, 0));
        let c1 = make_type_space(JType::C, 1).unwrap();
        let l2 = make_level_space(2).unwrap();
        let t = tensor(&c1, &l2);
        assert_eq!(t.sdim(), (0, 4));
        assert!(t.is_supersymmetric());
        let bl = tensor(&b1, &l3);
        let v = bl.basis_vector(0);
        assert_eq!(bl.form_eval(&v, &v).unwrap(), rat(1));
    }

    #[test]
    fn sdim_formula_and_form_axioms() {
        for jt in JType::ALL {
            for d in 1..=3 {
                let h = make_type_space(jt, d).unwrap();
                assert!(h.is_supersymmetric() && h.is_nondegenerate());
                for r in 1..=3 {
                    let l = make_level_space(r).unwrap();
                    let t = tensor(&h, &l);
                    let (p, q) = h.sdim();
                    let (pp, qq) = l.sdim();
                    assert_eq!(t.sdim(), (p * pp + q * qq, p * qq + pp * q));
                    assert!(t.is_supersymmetric() && t.is_nondegenerate());
                }
            }
        }
    }

    #[test]
    fn form_values() {
        let b = make_type_space(JType::B, 2).unwrap();
        let e1 = b.parse_vector("e1").unwrap();
        assert_eq!(b.form_eval(&e1, &e1).unwrap(), rat(1));
        let c = make_type_space(JType::C, 1).unwrap();
        let (f1, f2) = (c.parse_vector("f1").unwrap(), c.parse_vector("f2").unwrap());
        assert_eq!(c.form_eval(&f1, &f2).unwrap(), rat(1));
        assert_eq!(c.form_eval(&f2, &f1).unwrap(), rat(-1));
        let a = make_type_space(JType::A, 1).unwrap();
        let (x, y) = (a.parse_vector("e1").unwrap(), a.parse_vector("e1*").unwrap());
        assert_eq!(a.form_eval(&x, &y).unwrap(), rat(1));
        assert!(matches!(b.parse_vector("f1"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn vector_parsing() {
        let b = make_type_space(JType::B, 2).unwrap();
        let v = b.parse_vector("(1/2)e1+(1/3)e2").unwrap();
        assert_eq!(v.comps(), &[crate::exact::frac(1, 2), crate::exact::frac(1, 3)]);
        let w = b.parse_vector("2e1 - e2").unwrap();
        assert_eq!(w.comps(), &[rat(2), rat(-1)]);
        let a = make_type_space(JType::A, 2).unwrap();
        let s = a.parse_vector("-e2*").unwrap();
        assert_eq!(s.comps()[3], rat(-1));
    }
}
