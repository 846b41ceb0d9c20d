//! Wick expansion of `x_(k) y` for `x = a_1(-1)...a_m(-1)|0>` and
//! `y = b_1(-1)...b_n(-1)|0>`, written independently of the mode recursion
//! in the fock module so that the two can be compared.
//!
//! Each partial matching `{(i_1, j_1), ..., (i_s, j_s)}` of the `a`s with the
//! `b`s contributes `eps * prod (a_i, b_j) * z^(-2s)` times the remaining
//! creation fields `:prod a_rest(z): prod b_rest(-1)|0>`. The coefficient of
//! `z^(-k-1)` then distributes `2s - k - 1` units of mode among the leftover
//! `a`s.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::Rational;
use crate::fock::{Fock, FockState};
use crate::superlinear::Vector;

/// `v_1(m_1) v_2(m_2) ... |0>` for creation modes.
pub fn creation_state(fock: &Fock, factors: &[(&Vector, i64)]) -> Result<FockState> {
    let mut s = FockState::vacuum();
    for (v, m) in factors.iter().rev() {
        s = fock.apply_mode(v, *m, &s)?;
    }
    Ok(s)
}

/// Koszul sign of the reordering `order` of a sequence with the given
/// oddness flags; `order[p]` is the original index placed at position `p`.
fn reorder_negates(odd: &[bool], order: &[usize]) -> bool {
    let mut neg = false;
    for p in 0..order.len() {
        for q in p + 1..order.len() {
            if odd[order[p]] && odd[order[q]] && order[q] < order[p] {
                neg = !neg;
            }
        }
    }
    neg
}

/// Compositions of `total` into `parts` non-negative integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn matchings(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, m: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == m {
            out.push(cur.clone());
            return;
        }
        go(i + 1, m, used, cur, out);
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, m, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, m, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// `x_(k) y` by Wick contraction.
pub fn wick_product(fock: &Fock, a: &[Vector], k: i64, b: &[Vector]) -> Result<FockState> {
    let sp = fock.space();
    let (m, n) = (a.len(), b.len());
    let odd: Vec<bool> = a.iter().chain(b).map(|v| v.parity().is_odd()).collect();
    let mut out = FockState::zero();
    for pairs in matchings(m, n) {
        let s = pairs.len() as i64;
        let spread = 2 * s - k - 1;
        if spread < 0 {
            continue;
        }
        let mut coef = Rational::one();
        for &(i, j) in &pairs {
            coef *= sp.form_eval(&a[i], &b[j])?;
        }
        if coef.is_zero() {
            continue;
        }
        let a_rest: Vec<usize> = (0..m).filter(|i| pairs.iter().all(|p| p.0 != *i)).collect();
        let b_rest: Vec<usize> = (0..n).filter(|j| pairs.iter().all(|p| p.1 != *j)).collect();
        if a_rest.is_empty() && spread != 0 {
            continue;
        }
        let order: Vec<usize> = pairs
            .iter()
            .flat_map(|&(i, j)| [i, m + j])
            .chain(a_rest.iter().copied())
            .chain(b_rest.iter().map(|j| m + j))
            .collect();
        if reorder_negates(&odd, &order) {
            coef = -coef;
        }
        for ls in compositions(spread as usize, a_rest.len()) {
            let factors: Vec<(&Vector, i64)> = a_rest
                .iter()
                .zip(&ls)
                .map(|(&i, &l)| (&a[i], -1 - l as i64))
                .chain(b_rest.iter().map(|&j| (&b[j], -1)))
                .collect();
            out.add_scaled(&creation_state(fock, &factors)?, &coef);
        }
    }
    Ok(out)
}

/// The same product computed mode by mode in the Fock space.
pub fn brute_product(fock: &Fock, a: &[Vector], k: i64, b: &[Vector]) -> Result<FockState> {
    let x = creation_state(fock, &a.iter().map(|v| (v, -1)).collect::<Vec<_>>())?;
    let y = creation_state(fock, &b.iter().map(|v| (v, -1)).collect::<Vec<_>>())?;
    Ok(fock.nth_product(&x, k, &y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinear::{make_type_space, JType};
    use std::sync::Arc;

    #[test]
    fn compositions_count() {
        // stars and bars: C(total + parts - 1, parts - 1)
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 0).len(), 1);
        assert_eq!(compositions(1, 0).len(), 0);
    }

    #[test]
    fn matching_count() {
        // sum_s C(m,s) C(n,s) s!
        assert_eq!(matchings(2, 2).len(), 1 + 4 + 2);
        assert_eq!(matchings(1, 3).len(), 4);
    }

    #[test]
    fn agrees_on_basis_vectors() {
        for jt in JType::ALL {
            let sp = Arc::new(make_type_space(jt, 2).unwrap());
            let fock = Fock::new(sp.clone());
            let e: Vec<Vector> = (0..sp.dim()).map(|i| sp.basis_vector(i)).collect();
            let a = vec![e[0].clone(), e[1].clone()];
            let b = vec![e[sp.dim() - 1].clone(), e[sp.dim() - 2].clone()];
            for k in -2..=4 {
                assert_eq!(
                    wick_product(&fock, &a, k, &b).unwrap(),
                    brute_product(&fock, &a, k, &b).unwrap(),
                    "type {jt}, k = {k}"
                );
            }
        }
    }
}
