//! Permutations of `{0, .., n-1}` and the hyperoctahedral group acting on chord endpoints.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A permutation stored by its images: `self.apply(i) == images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if !is_bijection(&images) {
            return Err(Error::NotABijection(format!("{images:?} is not a permutation")));
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 1]` for the transposition (1 2).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let images = images
            .iter()
            .map(|&x| x.checked_sub(1).ok_or_else(|| Error::Parse("0 in 1-based permutation".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Perm(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Cycles in order of their smallest element; each cycle starts at that element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        cycles(&self.0)
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits().len()
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        let odd = self.orbits().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1;
        if odd {
            -1
        } else {
            1
        }
    }

    /// All permutations of `n` points in lexicographic order of their image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n).permutations(n).map(Perm)
    }
}

pub(crate) fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        if x >= images.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn cycles(images: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = images[x];
        }
        out.push(cycle);
    }
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The group of permutations of `[2m]` preserving the pairs `{2i, 2i+1}`.
///
/// Elements are generated as (chord permutation, endpoint flips): endpoint `2i + e`
/// is sent to `2 σ(i) + (e xor flip_i)`. Order is `2^m m!`.
#[derive(Clone, Copy, Debug)]
pub struct Hyperoctahedral {
    m: usize,
}

impl Hyperoctahedral {
    pub fn new(m: usize) -> Self {
        Hyperoctahedral { m }
    }

    pub fn order(&self) -> u128 {
        factorial(self.m) << self.m
    }

    pub fn element(&self, chords: &[usize], flips: u32) -> Perm {
        let mut images = vec![0; 2 * self.m];
        for (i, &target) in chords.iter().enumerate() {
            let f = ((flips >> i) & 1) as usize;
            images[2 * i] = 2 * target + f;
            images[2 * i + 1] = 2 * target + (1 - f);
        }
        Perm(images)
    }

    pub fn elements(&self) -> impl Iterator<Item = Perm> + '_ {
        let m = self.m;
        (0..m).permutations(m).flat_map(move |chords| {
            (0..1u32 << m).map(move |flips| self.element(&chords, flips))
        })
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let chords = Perm::random(self.m, rng);
        let flips = if self.m == 0 { 0 } else { rng.gen_range(0..1u32 << self.m) };
        self.element(chords.images(), flips)
    }
}
