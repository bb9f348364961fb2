//! Fixtures and independent reference computations shared by the integration tests.
#![allow(dead_code)]

use chordweight::lie::{builtin, casimir_tensor};
use chordweight::rational::{frac, q};
use chordweight::{ChordDiagram, QMatrix, SymTensor, Q};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/d with |p| ≤ 3 and 1 ≤ d ≤ 3.
pub fn small_rational<R: Rng>(rng: &mut R) -> Q {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_sym_tensor<R: Rng>(n: usize, rng: &mut R) -> SymTensor {
    let raw: Vec<Q> = (0..n.pow(4)).map(|_| small_rational(rng)).collect();
    SymTensor::symmetrized(n, &raw).unwrap()
}

pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> QMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| small_rational(rng)).collect()).collect();
        let h = QMatrix::from_rows(rows).unwrap();
        if naive_rank(&h.to_rows()) == n {
            return h;
        }
    }
}

pub fn counterexample() -> SymTensor {
    let b1 = QMatrix::from_ints(&[&[1, 1], &[0, 0]]);
    let b2 = QMatrix::from_ints(&[&[0, 1], &[0, 1]]);
    SymTensor::from_pairs(2, &[(b1.clone(), b1), (b2.clone(), b2)]).unwrap()
}

pub const LIE_FIXTURES: [&str; 6] = ["sl2", "gl1", "gl2", "gl3", "abelian1", "abelian2"];

pub fn lie_tensor(name: &str) -> SymTensor {
    let (g, rho) = builtin(name).unwrap();
    casimir_tensor(&g, &rho).unwrap()
}

/// Rank by textbook Gaussian elimination over ℚ with partial search for a nonzero pivot.
pub fn naive_rank(rows: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let factor = &a[r][c] / &pivot;
                for j in c..cols {
                    let d = &factor * &a[rank][j];
                    a[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `p_R(C)` straight from the defining sum: every directed edge `v → succ(v)` gets a
/// color, and chord `{2i, 2i+1}` contributes `R[φ(in_u), φ(in_v), φ(out_u), φ(out_v)]`.
pub fn brute_force_p(r: &SymTensor, d: &ChordDiagram) -> Q {
    let n = r.n();
    let succ = d.succ();
    let edges = succ.len();
    // edge e is the one leaving vertex e
    let mut pred = vec![0; edges];
    for (v, &w) in succ.iter().enumerate() {
        pred[w] = v;
    }
    let mut total = Q::zero();
    let mut phi = vec![0usize; edges];
    for _ in 0..n.pow(edges as u32) {
        let mut w = q(1);
        for i in 0..d.m() {
            let (u, v) = (2 * i, 2 * i + 1);
            w *= r.get(phi[pred[u]], phi[pred[v]], phi[u], phi[v]);
        }
        total += w;
        for slot in phi.iter_mut() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    total * chordweight::rational::pow(&q(n as i64), d.loops())
}
