//! Weight-system checks, the trace-like functional θ, the antisymmetrizer Δ, connection
//! submatrices and the permutation product formula.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_diagrams_up_to, enumerate_tangles_up_to, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::linalg::{exact_rank, QMatrix};
use crate::partition::eval_diagram;
use crate::perm::{factorial, Perm};
use crate::quantum::QuantumTangle;
use crate::rational::{pow, Q};
use crate::tangle::{ChordDiagram, Tangle};
use crate::tensor::SymTensor;

/// A rational-valued function on chord diagrams.
pub trait DiagramInvariant: Sync {
    fn value(&self, c: &ChordDiagram) -> Q;

    fn loop_value(&self) -> Q {
        self.value(&ChordDiagram::vertexless_loop())
    }
}

/// The partition function `p_R`.
#[derive(Clone, Debug)]
pub struct PartitionOracle {
    r: SymTensor,
}

impl PartitionOracle {
    pub fn tensor(&self) -> &SymTensor {
        &self.r
    }
}

impl DiagramInvariant for PartitionOracle {
    fn value(&self, c: &ChordDiagram) -> Q {
        eval_diagram(&self.r, c)
    }

    fn loop_value(&self) -> Q {
        Q::from_integer(self.r.n().into())
    }
}

pub fn f_of(r: SymTensor) -> PartitionOracle {
    PartitionOracle { r }
}

/// Wraps a closure as a [`DiagramInvariant`].
pub struct FnOracle<F>(pub F);

impl<F: Fn(&ChordDiagram) -> Q + Sync> DiagramInvariant for FnOracle<F> {
    fn value(&self, c: &ChordDiagram) -> Q {
        (self.0)(c)
    }
}

/// `f` extended linearly to a combination of 0-tangles.
pub fn apply<F: DiagramInvariant + ?Sized>(f: &F, x: &QuantumTangle) -> Result<Q> {
    if x.k() != 0 {
        return Err(Error::LabelMismatch { left: x.k(), right: 0 });
    }
    Ok(x.terms().map(|(t, c)| c * f.value(&t.to_diagram().expect("0-tangle"))).sum())
}

/// `f(x·y)`.
pub fn f_join<F: DiagramInvariant + ?Sized>(f: &F, x: &QuantumTangle, y: &QuantumTangle) -> Result<Q> {
    if x.k() != y.k() {
        return Err(Error::LabelMismatch { left: x.k(), right: y.k() });
    }
    let mut total = Q::zero();
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            total += a * b * f.value(&s.join(t)?);
        }
    }
    Ok(total)
}

/// The four-term element `t¹²t¹³ − t¹³t¹² + t¹²t²³ − t²³t¹²` of ℚ𝒯₃.
pub fn tau4() -> QuantumTangle {
    let t12 = Tangle::chord_between(3, 0, 1);
    let t13 = Tangle::chord_between(3, 0, 2);
    let t23 = Tangle::chord_between(3, 1, 2);
    let c = |a: &Tangle, b: &Tangle| a.compose(b).expect("same k");
    let one = Q::one();
    QuantumTangle::from_terms(
        3,
        [
            (one.clone(), &c(&t12, &t13)),
            (-one.clone(), &c(&t13, &t12)),
            (one.clone(), &c(&t12, &t23)),
            (-one, &c(&t23, &t12)),
        ],
    )
    .expect("all terms are 3-tangles")
}

/// The first failure found by [`is_weight_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `f(τ₄·T) ≠ 0`.
    FourTerm { tangle: Tangle, value: Q },
    /// `f(∅) ≠ 1`.
    EmptyValue { value: Q },
    /// `f(C ⊔ D) ≠ f(C) f(D)`.
    NotMultiplicative { left: ChordDiagram, right: ChordDiagram, union: Q, product: Q },
}

/// Checks `f(τ₄·T) = 0` for every 3-tangle `T` with at most `m_max` chords, then
/// multiplicativity on all pairs of diagrams with at most `m_max` chords (and the
/// vertexless loop). Returns the first failure in enumeration order.
///
/// Panics if the enumeration exceeds [`DEFAULT_BUDGET`] (from `m_max = 4` on); use
/// [`check_weight_system`] to get an error instead.
pub fn is_weight_system<F: DiagramInvariant + ?Sized>(
    f: &F,
    m_max: usize,
) -> std::result::Result<(), Counterexample> {
    match check_weight_system(f, m_max, DEFAULT_BUDGET).expect("enumeration within the default budget") {
        Some(c) => Err(c),
        None => Ok(()),
    }
}

/// As [`is_weight_system`], failing with [`Error::SizeBound`] when an enumeration would
/// scan more than `budget` wirings.
pub fn check_weight_system<F: DiagramInvariant + ?Sized>(
    f: &F,
    m_max: usize,
    budget: u128,
) -> Result<Option<Counterexample>> {
    let tau = tau4();
    let tangles = enumerate_tangles_up_to(3, m_max, budget)?;
    let mut diagrams = enumerate_diagrams_up_to(m_max, budget)?;
    let four_term = tangles.par_iter().find_map_first(|t| {
        let value = f_join(f, &tau, &QuantumTangle::from_tangle(t)).expect("same k");
        (!value.is_zero()).then(|| Counterexample::FourTerm { tangle: t.clone(), value })
    });
    if four_term.is_some() {
        return Ok(four_term);
    }

    let value = f.value(&ChordDiagram::empty());
    if !value.is_one() {
        return Ok(Some(Counterexample::EmptyValue { value }));
    }
    diagrams.push(ChordDiagram::vertexless_loop());
    let values: Vec<Q> = diagrams.par_iter().map(|d| f.value(d)).collect();
    let pairs: Vec<(usize, usize)> =
        (0..diagrams.len()).flat_map(|i| (i..diagrams.len()).map(move |j| (i, j))).collect();
    Ok(pairs.par_iter().find_map_first(|&(i, j)| {
        let union = f.value(&diagrams[i].disjoint_union(&diagrams[j]));
        let product = &values[i] * &values[j];
        (union != product).then(|| Counterexample::NotMultiplicative {
            left: diagrams[i].clone(),
            right: diagrams[j].clone(),
            union,
            product,
        })
    }))
}

/// `θ(x) = f(x·𝟙_k)`.
pub fn theta<F: DiagramInvariant + ?Sized>(f: &F, x: &QuantumTangle) -> Result<Q> {
    f_join(f, x, &QuantumTangle::unit(x.k()))
}

/// Largest `n` accepted by [`delta_tangle`]; Δ has `(n + 1)!` terms.
pub const DELTA_MAX_N: usize = 6;

/// `Δ = Σ_{π ∈ S_{n+1}} sgn(π) T_π`.
pub fn delta_tangle(n: usize) -> Result<QuantumTangle> {
    if n > DELTA_MAX_N {
        return Err(Error::SizeBound(format!("Δ for n = {n} has {}! terms (limit n = {DELTA_MAX_N})", n + 1)));
    }
    let mut x = QuantumTangle::zero(n + 1);
    for pi in Perm::all(n + 1) {
        x.add_term(Q::from_integer(pi.sign().into()), &Tangle::permutation(&pi))?;
    }
    Ok(x)
}

/// `(n + 1)!` as a rational.
pub fn delta_scale(n: usize) -> Q {
    Q::from_integer(i64::try_from(factorial(n + 1)).expect("small").into())
}

/// Largest number of entries [`connection_submatrix`] will compute.
pub const MAX_SUBMATRIX_ENTRIES: usize = 1 << 20;

/// A finite submatrix of the connection matrix, `entries[i][j] = f(rows[i]·cols[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSubmatrix {
    pub k: usize,
    pub rows: Vec<Tangle>,
    pub cols: Vec<Tangle>,
    pub entries: QMatrix,
}

impl ConnectionSubmatrix {
    pub fn rank(&self) -> usize {
        exact_rank(&self.entries.to_rows())
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }
}

pub fn connection_submatrix<F: DiagramInvariant + ?Sized>(
    f: &F,
    k: usize,
    rows: &[Tangle],
    cols: &[Tangle],
) -> Result<ConnectionSubmatrix> {
    if let Some(t) = rows.iter().chain(cols).find(|t| t.k() != k) {
        return Err(Error::LabelMismatch { left: k, right: t.k() });
    }
    let size = rows.len().saturating_mul(cols.len());
    if size > MAX_SUBMATRIX_ENTRIES {
        return Err(Error::SizeBound(format!("{size} entries requested, limit is {MAX_SUBMATRIX_ENTRIES}")));
    }
    let values: Vec<Q> = (0..size)
        .into_par_iter()
        .map(|x| {
            let (i, j) = (x / cols.len(), x % cols.len());
            f.value(&rows[i].join(&cols[j]).expect("same k"))
        })
        .collect();
    let mut entries = QMatrix::zeros(rows.len(), cols.len());
    for (x, v) in values.into_iter().enumerate() {
        entries[(x / cols.len(), x % cols.len())] = v;
    }
    Ok(ConnectionSubmatrix { k, rows: rows.to_vec(), cols: cols.to_vec(), entries })
}

/// Rank of an exhibited connection submatrix against the bound `f(○)^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub k: usize,
    pub family: String,
    pub size: [usize; 2],
    pub rank: usize,
    /// `f(○)^{2k}` as an exact rational string.
    pub bound: String,
    pub ok: bool,
}

pub fn rank_report<F: DiagramInvariant + ?Sized>(f: &F, m: &ConnectionSubmatrix, family: &str) -> RankReport {
    let bound = pow(&f.loop_value(), 2 * m.k);
    let rank = m.rank();
    RankReport {
        k: m.k,
        family: family.to_string(),
        size: [m.rows.len(), m.cols.len()],
        rank,
        ok: Q::from_integer(rank.into()) <= bound,
        bound: crate::rational::format(&bound),
    }
}

/// Largest chord count of `x^{⊔m}` accepted by [`product_formula_sides`].
pub const MAX_PRODUCT_CHORDS: usize = 8;

/// Both sides of `f(x^{⊔m} P_{k,ρ} · P_{k,σ}) = Π_c θ(x^{|c|})`, the product running over
/// the orbits `c` of `ρσ`.
pub fn product_formula_sides<F: DiagramInvariant + ?Sized>(
    f: &F,
    x: &QuantumTangle,
    m: usize,
    rho: &Perm,
    sigma: &Perm,
) -> Result<(Q, Q)> {
    if rho.len() != m || sigma.len() != m {
        return Err(Error::ShapeMismatch(format!("ρ and σ must permute {m} points")));
    }
    let chords = x.terms().map(|(t, _)| t.m()).max().unwrap_or(0);
    if chords * m > MAX_PRODUCT_CHORDS {
        return Err(Error::SizeBound(format!(
            "x^⊔{m} has up to {} chords, limit is {MAX_PRODUCT_CHORDS}",
            chords * m
        )));
    }
    let k = x.k();
    let p_rho = QuantumTangle::from_tangle(&Tangle::block_permutation(k, rho));
    let p_sigma = QuantumTangle::from_tangle(&Tangle::block_permutation(k, sigma));
    let lhs = f_join(f, &x.shift_power(m).compose(&p_rho)?, &p_sigma)?;
    let mut rhs = Q::one();
    for orbit in rho.compose(sigma).orbits() {
        rhs *= theta(f, &x.pow(orbit.len()))?;
    }
    Ok((lhs, rhs))
}

pub fn product_formula_check<F: DiagramInvariant + ?Sized>(
    f: &F,
    x: &QuantumTangle,
    m: usize,
    rho: &Perm,
    sigma: &Perm,
) -> Result<bool> {
    let (l, r) = product_formula_sides(f, x, m, rho, sigma)?;
    Ok(l == r)
}
