//! Partition functions `p_R` on chord diagrams and `p̂_R` on tangles.
//!
//! Two independent evaluation strategies are provided. [`eval_tangle`] and
//! [`eval_diagram`] color the directed edges and contract the resulting tensor network
//! (one factor per chord) by variable elimination. [`eval_edge_coloring`] instead colors
//! the chords with the terms of a rank decomposition of `R` and takes traces of matrix
//! products around Wilson loops. The naive sum over all edge colorings lives in [`naive`].

use num_traits::{One, Zero};

use crate::contract::{contract, Factor};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::quantum::QuantumTangle;
use crate::rational::{pow, Q};
use crate::tangle::{ChordDiagram, Tangle};
use crate::tensor::{GlTensor, SymTensor};

/// Edge variables of a tangle are indexed by tail: edge `t` leaves tail `t`.
struct EdgeLayout {
    /// `incoming[v]`: the edge entering head `v` (internal vertex or `2m + sink`).
    incoming: Vec<usize>,
    two_m: usize,
}

impl EdgeLayout {
    fn new(t: &Tangle) -> Self {
        let mut incoming = vec![0; t.wiring().len()];
        for (tail, &head) in t.wiring().iter().enumerate() {
            incoming[head] = tail;
        }
        EdgeLayout { incoming, two_m: 2 * t.m() }
    }

    /// `(u_in, v_in, u_out, v_out)` for chord `i`.
    fn chord_edges(&self, i: usize) -> [usize; 4] {
        let (u, v) = (2 * i, 2 * i + 1);
        [self.incoming[u], self.incoming[v], u, v]
    }

    /// `(a_j, a_j*)` per strand label `j`: the edge leaving root `j` and the edge entering
    /// sink `j`.
    fn boundary(&self, k: usize) -> Vec<usize> {
        (0..k).flat_map(|j| [self.two_m + j, self.incoming[self.two_m + j]]).collect()
    }
}

fn loop_factor(r: &SymTensor, loops: usize) -> Q {
    pow(&Q::from_integer(r.n().into()), loops)
}

/// `p̂_R(T) ∈ gl(n)^{⊗k}`, by tensor-network contraction.
pub fn eval_tangle(r: &SymTensor, t: &Tangle) -> GlTensor {
    let n = r.n();
    let k = t.k();
    let layout = EdgeLayout::new(t);
    let factors: Vec<Factor> = (0..t.m())
        .map(|i| {
            let e = layout.chord_edges(i);
            Factor::tabulate(n, &e, |c| r.get(c[0], c[1], c[2], c[3]).clone())
        })
        .collect();
    let open = layout.boundary(k);
    let contracted = contract(n, t.wiring().len(), factors, &open);
    let scale = loop_factor(r, t.loops());

    let mut out = GlTensor::zero(n, k);
    let positions: Vec<usize> =
        open.iter().map(|v| contracted.vars.iter().position(|x| x == v).unwrap()).collect();
    let mut assign = vec![0; contracted.vars.len()];
    for i in 0..out.entries().len() {
        let idx = out.unflatten(i);
        let mut consistent = true;
        let mut filled = vec![false; assign.len()];
        for (&p, &val) in positions.iter().zip(&idx) {
            if filled[p] && assign[p] != val {
                consistent = false;
                break;
            }
            filled[p] = true;
            assign[p] = val;
        }
        if !consistent {
            continue;
        }
        let flat = assign.iter().fold(0, |acc, &a| acc * n + a);
        out.entries_mut()[i] = &contracted.data[flat] * &scale;
    }
    out
}

/// `p_R(C)`.
pub fn eval_diagram(r: &SymTensor, c: &ChordDiagram) -> Q {
    eval_tangle(r, &c.to_tangle()).as_scalar().cloned().expect("0-tangle yields a scalar")
}

/// `p_R(C)` computed by coloring chords with the terms of [`SymTensor::rank_factorize`]:
/// the even end of chord `i` receives `X_ψ(i)` and the odd end `Y_ψ(i)`, and each Wilson
/// loop contributes the trace of its matrices multiplied in traversal order.
pub fn eval_edge_coloring(r: &SymTensor, c: &ChordDiagram) -> Q {
    let pairs = r.rank_factorize();
    eval_edge_coloring_with(r.n(), &pairs, c)
}

/// As [`eval_edge_coloring`] with a caller-supplied decomposition `R = Σ X_α ⊗ Y_α`.
pub fn eval_edge_coloring_with(n: usize, pairs: &[(QMatrix, QMatrix)], c: &ChordDiagram) -> Q {
    let scale = pow(&Q::from_integer(n.into()), c.loops());
    let m = c.m();
    if m == 0 {
        return scale;
    }
    let colors = pairs.len();
    if colors == 0 {
        return Q::zero();
    }
    let cycles = c.wilson_loops();
    let mut psi = vec![0usize; m];
    let mut total = Q::zero();
    loop {
        let mut prod = Q::one();
        for cycle in &cycles {
            let mut acc = QMatrix::identity(n);
            for &v in cycle {
                let (x, y) = &pairs[psi[v / 2]];
                acc = acc.mul(if v % 2 == 0 { x } else { y });
            }
            prod *= acc.trace();
            if prod.is_zero() {
                break;
            }
        }
        total += prod;
        // next ψ in [colors]^m
        let mut i = 0;
        while i < m {
            psi[i] += 1;
            if psi[i] < colors {
                break;
            }
            psi[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    total * scale
}

/// Linear extension of [`eval_tangle`].
pub fn eval_quantum(r: &SymTensor, x: &QuantumTangle) -> GlTensor {
    let mut acc = GlTensor::zero(r.n(), x.k());
    for (t, c) in x.terms() {
        acc = acc.add(&eval_tangle(r, t).scale(c)).expect("same shape");
    }
    acc
}

/// Checks that an operand has the dimension `n` of the tensor it is paired with.
pub fn check_dimension(r: &SymTensor, n: usize) -> Result<()> {
    if r.n() != n {
        return Err(Error::ShapeMismatch(format!("tensor has n = {}, expected {n}", r.n())));
    }
    Ok(())
}

/// Brute-force sums over every coloring of the directed edges. Exponential in the number
/// of edges; intended as an independent check for small inputs.
pub mod naive {
    use super::*;

    pub fn eval_tangle(r: &SymTensor, t: &Tangle) -> GlTensor {
        let n = r.n();
        let k = t.k();
        let layout = EdgeLayout::new(t);
        let edges = t.wiring().len();
        let boundary = layout.boundary(k);
        let scale = loop_factor(r, t.loops());
        let mut out = GlTensor::zero(n, k);
        let mut phi = vec![0usize; edges];
        let total = n.pow(edges as u32);
        for _ in 0..total {
            let mut w = Q::one();
            for i in 0..t.m() {
                let e = layout.chord_edges(i);
                w *= r.get(phi[e[0]], phi[e[1]], phi[e[2]], phi[e[3]]);
                if w.is_zero() {
                    break;
                }
            }
            if !w.is_zero() {
                let idx: Vec<usize> = boundary.iter().map(|&e| phi[e]).collect();
                let flat = out.flatten(&idx);
                out.entries_mut()[flat] += &w * &scale;
            }
            for slot in phi.iter_mut() {
                *slot += 1;
                if *slot < n {
                    break;
                }
                *slot = 0;
            }
        }
        out
    }

    pub fn eval_diagram(r: &SymTensor, c: &ChordDiagram) -> Q {
        eval_tangle(r, &c.to_tangle()).as_scalar().cloned().unwrap()
    }
}
