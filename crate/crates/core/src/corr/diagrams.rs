//! Wick-contraction diagrams evaluated one at a time.

use num_traits::Zero;

use crate::error::Result;
use crate::exact::{pow2, CorrFn, DiffExponent, PolyR};
use crate::superlinear::Vector;

use super::combinat::{collapse, enum_diagrams, Diagram, Side, Vertex};
use super::InsertionList;

fn vertex_vector(t: &InsertionList, v: Vertex) -> &Vector {
    let (a, b) = &t.entries()[v.pos];
    match v.side {
        Side::A => a,
        Side::B => b,
    }
}

/// Sign of moving the odd fields from `a_1 b_1 ... a_n b_n` into the order
/// `u_1 v_1 u_2 v_2 ...` of the diagram edges.
fn koszul_sign(t: &InsertionList, d: &Diagram) -> bool {
    let order: Vec<(usize, bool)> = d
        .edges
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .map(|x| (x.index(), vertex_vector(t, x).parity().is_odd()))
        .collect();
    let mut negate = false;
    for (p, &(i, odd_i)) in order.iter().enumerate() {
        if !odd_i {
            continue;
        }
        for &(j, odd_j) in &order[p + 1..] {
            if odd_j && j < i {
                negate = !negate;
            }
        }
    }
    negate
}

/// Contribution of one diagram: `2^-n * sign * prod (u, v) * r^c` over
/// `prod (z_u - z_v)^-2`.
pub fn diagram_term(d: &Diagram, t: &InsertionList) -> Result<CorrFn> {
    let n = t.n();
    let sp = t.space();
    let mut coef = pow2(-(n as i64));
    for &(u, v) in &d.edges {
        coef *= sp.form_eval(vertex_vector(t, u), vertex_vector(t, v))?;
        if coef.is_zero() {
            return Ok(CorrFn::zero(n));
        }
    }
    if koszul_sign(t, d) {
        coef = -coef;
    }
    let slots = t.slots();
    let den = DiffExponent::from_triples(d.edges.iter().map(|&(u, v)| {
        let (i, j) = (slots[u.pos], slots[v.pos]);
        (i.min(j), i.max(j), 2)
    }));
    let c = collapse(d, n).cycles;
    Ok(CorrFn::term(n, den, PolyR::monomial(coef, c)))
}

pub fn corr_diagram_sum(t: &InsertionList) -> Result<CorrFn> {
    let mut out = CorrFn::zero(t.n());
    for d in enum_diagrams(t.n(), t.jtype()) {
        out.add_assign(&diagram_term(&d, t)?);
    }
    Ok(out)
}
