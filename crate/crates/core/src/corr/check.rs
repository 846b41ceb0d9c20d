//! Cross-verification of the engines on one insertion list.

use serde::Serialize;

use crate::error::Result;
use crate::exact::{rat, CorrFn, RDegree};

use super::closed::{corr_closed_form_with, Prefactor};
use super::diagrams::corr_diagram_sum;
use super::direct::corr_direct;
use super::random::{random_permutation, rng};
use super::recursion::corr_recursion;
use super::{InsertionList, Method};

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub methods: Vec<Method>,
    pub r_samples: Vec<u32>,
    pub permutations: usize,
    pub seed: u64,
    pub prefactor: Prefactor,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            methods: Method::ALL.to_vec(),
            r_samples: vec![1, 2, 3],
            permutations: 1,
            seed: 0,
            prefactor: Prefactor::Standard,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub n: usize,
    pub jtype: String,
    pub rank: usize,
    pub pass: bool,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.pass)
    }
}

fn symbolic(t: &InsertionList, m: Method, prefactor: Prefactor) -> Result<CorrFn> {
    match m {
        Method::Recursion => corr_recursion(t),
        Method::Diagrams => corr_diagram_sum(t),
        Method::Closed => corr_closed_form_with(t, prefactor),
        Method::Direct => unreachable!("direct is not symbolic"),
    }
}

fn compare(name: String, lhs: &CorrFn, rhs: &CorrFn) -> Result<CheckItem> {
    let witness = lhs.difference_witness(rhs)?;
    Ok(CheckItem {
        name,
        pass: witness.is_none(),
        witness,
    })
}

pub fn corr_check(t: &InsertionList, opts: &CheckOptions) -> Result<CheckReport> {
    let mut items = Vec::new();
    let mut results: Vec<(Method, CorrFn)> = Vec::new();
    for &m in &opts.methods {
        if m != Method::Direct {
            results.push((m, symbolic(t, m, opts.prefactor)?));
        }
    }

    for (p, (m1, f1)) in results.iter().enumerate() {
        for (m2, f2) in &results[p + 1..] {
            items.push(compare(format!("{m1} = {m2}"), f1, f2)?);
        }
    }

    let bound = t.n() / 2;
    for (m, f) in &results {
        let pass = match f.degree_r() {
            RDegree::Zero => true,
            RDegree::Degree(d) => d <= bound,
        };
        items.push(CheckItem {
            name: format!("{m} degree in r <= {bound}"),
            pass,
            witness: (!pass).then(|| format!("degree {:?}", f.degree_r())),
        });
    }

    if opts.methods.contains(&Method::Direct) {
        for &r in &opts.r_samples {
            let d = corr_direct(t, r)?;
            for (m, f) in &results {
                items.push(compare(format!("direct(r={r}) = {m}(r={r})"), &d, &f.specialize(&rat(r as i64)))?);
            }
        }
    }

    if let Some((m, f)) = results.first() {
        let mut g = rng(opts.seed);
        for _ in 0..opts.permutations {
            let tau = random_permutation(&mut g, t.n());
            let permuted = symbolic(&t.permuted(&tau), *m, opts.prefactor)?;
            items.push(compare(format!("{m} permuted by {tau:?}"), f, &permuted)?);
        }
    }

    Ok(CheckReport {
        n: t.n(),
        jtype: t.jtype().to_string(),
        rank: t.rank(),
        pass: items.iter().all(|i| i.pass),
        items,
    })
}
