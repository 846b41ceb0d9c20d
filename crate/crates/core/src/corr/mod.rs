//! Correlation-function engines and the cross-verification harness.

mod check;
mod closed;
mod combinat;
mod diagrams;
mod direct;
pub mod random;
mod recursion;
pub mod wick;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use check::{corr_check, CheckItem, CheckOptions, CheckReport};
pub use closed::{corr_closed_form, corr_closed_form_with, Prefactor};
pub use combinat::{collapse, enum_derangements, enum_diagrams, Collapsed, CyclePermutation, Diagram, Side, Vertex};
pub use diagrams::{corr_diagram_sum, diagram_term};
pub use direct::{corr_direct, dual_pair_generator};
pub use recursion::{corr_recursion, corr_recursion_elements, Recursion, SlotAlgebra};

use crate::error::{Error, Result};
use crate::superlinear::{make_type_space, JType, SpaceRef, Vector};

/// The sequence `T = (a_1, b_1) ... (a_n, b_n)` of weight-(1,1) generators.
/// Entry `k` sits at insertion point `z_{slots[k]}`; by default `slots[k] = k`.
#[derive(Debug, Clone)]
pub struct InsertionList {
    jtype: JType,
    rank: usize,
    space: SpaceRef,
    entries: Vec<(Vector, Vector)>,
    slots: Vec<usize>,
}

impl InsertionList {
    pub fn new(jtype: JType, rank: usize, entries: Vec<(Vector, Vector)>) -> Result<Self> {
        let space = Arc::new(make_type_space(jtype, rank)?);
        Self::with_space(space, entries)
    }

    pub fn with_space(space: SpaceRef, entries: Vec<(Vector, Vector)>) -> Result<Self> {
        let jtype = space.jtype().ok_or(Error::TypeMismatch)?;
        let rank = space.rank().ok_or(Error::TypeMismatch)?;
        for (a, b) in &entries {
            for v in [a, b] {
                if v.dim() != space.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: space.dim(),
                        got: v.dim(),
                    });
                }
            }
            if jtype == JType::A {
                let ok = a.support().all(|(i, _)| space.in_h_half(i))
                    && b.support().all(|(i, _)| !space.in_h_half(i));
                if !ok {
                    return Err(Error::WrongHalves);
                }
            }
        }
        let slots = (0..entries.len()).collect();
        Ok(Self {
            jtype,
            rank,
            space,
            entries,
            slots,
        })
    }

    /// Builds from basis-label or linear-combination strings.
    pub fn parse(jtype: JType, rank: usize, pairs: &[(&str, &str)]) -> Result<Self> {
        let space = Arc::new(make_type_space(jtype, rank)?);
        let entries = pairs
            .iter()
            .map(|(a, b)| Ok((space.parse_vector(a)?, space.parse_vector(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::with_space(space, entries)
    }

    pub fn jtype(&self) -> JType {
        self.jtype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(Vector, Vector)] {
        &self.entries
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    /// Entry `k` of the result is entry `tau[k]` of `self`, keeping its point.
    pub fn permuted(&self, tau: &[usize]) -> InsertionList {
        assert_eq!(tau.len(), self.n());
        InsertionList {
            jtype: self.jtype,
            rank: self.rank,
            space: self.space.clone(),
            entries: tau.iter().map(|&t| self.entries[t].clone()).collect(),
            slots: tau.iter().map(|&t| self.slots[t]).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recursion,
    Diagrams,
    Closed,
    Direct,
}

impl Method {
    pub const SYMBOLIC: [Method; 3] = [Method::Recursion, Method::Diagrams, Method::Closed];
    pub const ALL: [Method; 4] = [Method::Recursion, Method::Diagrams, Method::Closed, Method::Direct];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recursion => "recursion",
            Method::Diagrams => "diagrams",
            Method::Closed => "closed",
            Method::Direct => "direct",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(Method::Recursion),
            "diagrams" => Ok(Method::Diagrams),
            "closed" => Ok(Method::Closed),
            "direct" => Ok(Method::Direct),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, DiffExponent, PolyR};

    fn two_point(coef: crate::exact::Rational) -> CorrFn {
        CorrFn::term(2, DiffExponent::from_triples([(0, 1, 4)]), PolyR::monomial(coef, 1))
    }

    use crate::exact::CorrFn;

    #[test]
    fn two_point_functions() {
        let b = InsertionList::parse(JType::B, 1, &[("e1", "e1"), ("e1", "e1")]).unwrap();
        let a = InsertionList::parse(JType::A, 1, &[("e1", "e1*"), ("e1", "e1*")]).unwrap();
        for (t, c) in [(&b, frac(1, 2)), (&a, frac(1, 4))] {
            let want = two_point(c.clone());
            assert_eq!(corr_closed_form(t).unwrap(), want);
            assert_eq!(corr_diagram_sum(t).unwrap(), want);
            assert_eq!(corr_recursion(t).unwrap(), want);
            for r in 1..=2 {
                assert_eq!(corr_direct(t, r).unwrap(), want.specialize(&crate::exact::rat(r as i64)));
            }
        }
    }

    #[test]
    fn trivial_lists() {
        let empty = InsertionList::parse(JType::B, 1, &[]).unwrap();
        assert_eq!(corr_recursion(&empty).unwrap(), CorrFn::one(0));
        assert_eq!(corr_closed_form(&empty).unwrap(), CorrFn::one(0));
        assert_eq!(corr_diagram_sum(&empty).unwrap(), CorrFn::one(0));
        assert_eq!(corr_direct(&empty, 3).unwrap(), CorrFn::one(0));
        let one = InsertionList::parse(JType::C, 1, &[("f1", "f2")]).unwrap();
        assert!(corr_recursion(&one).unwrap().is_zero());
        assert!(corr_closed_form(&one).unwrap().is_zero());
        assert!(corr_diagram_sum(&one).unwrap().is_zero());
    }

    #[test]
    fn engines_agree_small() {
        let mut g = random::rng(7);
        for jt in JType::ALL {
            for n in 2..=4 {
                let t = random::random_insertion_list(&mut g, jt, 2, n).unwrap();
                let rep = corr_check(&t, &CheckOptions { permutations: 2, r_samples: vec![1, 2], ..Default::default() }).unwrap();
                assert!(rep.pass, "{jt} n={n}: {:?}", rep.first_failure());
            }
        }
    }

    #[test]
    fn corrupted_prefactor_is_caught() {
        let b = InsertionList::parse(JType::B, 1, &[("e1", "e1"), ("e1", "e1")]).unwrap();
        let opts = CheckOptions {
            methods: vec![Method::Diagrams, Method::Closed],
            prefactor: Prefactor::Corrupted,
            ..Default::default()
        };
        let rep = corr_check(&b, &opts).unwrap();
        assert!(!rep.pass);
        assert!(rep.first_failure().unwrap().witness.is_some());
    }
}
