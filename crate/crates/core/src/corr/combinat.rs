//! Fixed-point-free permutations and constrained perfect matchings.

use crate::superlinear::JType;

/// Permutation of `0..n` with no fixed points, kept as its cycle
/// decomposition (each cycle starts at its smallest element).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePermutation {
    image: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl CyclePermutation {
    /// Returns `None` when `image` is not a permutation or has a fixed point.
    pub fn from_image(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        if image.iter().enumerate().any(|(i, &j)| i == j) {
            return None;
        }
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                c.push(i);
                i = image[i];
            }
            cycles.push(c);
        }
        Some(Self { image, cycles })
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `c(sigma)`.
    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }
}

/// All permutations of `0..n` with every cycle of length at least 2, in
/// lexicographic order of their one-line notation.
pub fn enum_derangements(n: usize) -> Vec<CyclePermutation> {
    fn go(i: usize, n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<CyclePermutation>) {
        if i == n {
            out.extend(CyclePermutation::from_image(cur.clone()));
            return;
        }
        for j in 0..n {
            if j != i && !used[j] {
                used[j] = true;
                cur.push(j);
                go(i + 1, n, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// Vertex `a_pos` or `b_pos`; ordering follows the field order
/// `a_1 b_1 a_2 b_2 ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub pos: usize,
    pub side: Side,
}

impl Vertex {
    pub fn index(self) -> usize {
        2 * self.pos + (self.side == Side::B) as usize
    }

    fn from_index(i: usize) -> Self {
        Vertex {
            pos: i / 2,
            side: if i.is_multiple_of(2) { Side::A } else { Side::B },
        }
    }
}

/// A full contraction pattern: `n` disjoint edges, each written with the
/// earlier vertex first, listed in order of their first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub edges: Vec<(Vertex, Vertex)>,
}

/// BC-type diagrams over `n` insertions (type A additionally forbids
/// `a`-`a` and `b*`-`b*` edges), in deterministic order.
pub fn enum_diagrams(n: usize, jtype: JType) -> Vec<Diagram> {
    fn allowed(u: usize, v: usize, jtype: JType) -> bool {
        let (x, y) = (Vertex::from_index(u), Vertex::from_index(v));
        if x.pos == y.pos {
            return false;
        }
        !(jtype == JType::A && x.side == y.side)
    }
    fn go(
        matched: &mut [bool],
        cur: &mut Vec<(Vertex, Vertex)>,
        jtype: JType,
        out: &mut Vec<Diagram>,
    ) {
        let Some(u) = matched.iter().position(|m| !m) else {
            out.push(Diagram { edges: cur.clone() });
            return;
        };
        matched[u] = true;
        for v in u + 1..matched.len() {
            if !matched[v] && allowed(u, v, jtype) {
                matched[v] = true;
                cur.push((Vertex::from_index(u), Vertex::from_index(v)));
                go(matched, cur, jtype, out);
                cur.pop();
                matched[v] = false;
            }
        }
        matched[u] = false;
    }
    let mut out = Vec::new();
    go(&mut vec![false; 2 * n], &mut Vec::with_capacity(n), jtype, &mut out);
    out
}

/// The collapsed multigraph `sigma_D` on insertion positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapsed {
    pub edges: Vec<(usize, usize)>,
    pub cycles: usize,
}

pub fn collapse(d: &Diagram, n: usize) -> Collapsed {
    let edges: Vec<(usize, usize)> = d.edges.iter().map(|(u, v)| (u.pos, v.pos)).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for &(i, j) in &edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
        }
    }
    let cycles = (0..n).filter(|&i| find(&mut parent, i) == i).count();
    Collapsed { edges, cycles }
}
