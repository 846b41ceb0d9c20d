//! Seeded generators for test inputs.

use std::ops::Range;
use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::{frac, Rational};
use crate::superlinear::{make_type_space, FormedSpace, JType, Vector};

use super::InsertionList;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    frac(num, den)
}

/// A nonzero vector supported on the basis indices in `range`.
pub fn random_vector_in<R: Rng>(
    rng: &mut R,
    space: &FormedSpace,
    range: Range<usize>,
) -> Result<Vector> {
    loop {
        let comps: Vec<Rational> = (0..space.dim())
            .map(|i| {
                if range.contains(&i) {
                    small_rational(rng)
                } else {
                    Rational::zero()
                }
            })
            .collect();
        if comps.iter().any(|c| !c.is_zero()) {
            return space.vector_from_comps(comps);
        }
    }
}

/// A nonzero vector of the type space; for type A, `dual` picks the `h*` half.
pub fn random_vector<R: Rng>(rng: &mut R, space: &FormedSpace, dual: bool) -> Result<Vector> {
    let dim = space.dim();
    let range = match space.jtype() {
        Some(JType::A) if dual => dim / 2..dim,
        Some(JType::A) => 0..dim / 2,
        _ => 0..dim,
    };
    random_vector_in(rng, space, range)
}

pub fn random_insertion_list<R: Rng>(
    rng: &mut R,
    jtype: JType,
    rank: usize,
    n: usize,
) -> Result<InsertionList> {
    let space = Arc::new(make_type_space(jtype, rank)?);
    let entries = (0..n)
        .map(|_| Ok((random_vector(rng, &space, false)?, random_vector(rng, &space, true)?)))
        .collect::<Result<Vec<_>>>()?;
    InsertionList::with_space(space, entries)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
