//! Isomorphism classes of small diagrams and tangles, by brute force over all wirings.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{factorial, Perm};
use crate::tangle::{is_canonical_wiring, ChordDiagram, Tangle};

/// Default limit on the number of wirings scanned by one enumeration call.
pub const DEFAULT_BUDGET: u128 = 3_628_800;

/// Every k-tangle with exactly `m` chords and no vertexless loops, one canonical
/// representative per isomorphism class, in ascending order of wiring.
///
/// Scans all `(2m + k)!` wirings and fails with [`Error::SizeBound`] when that exceeds
/// `budget`.
pub fn enumerate_tangles(k: usize, m: usize, budget: u128) -> Result<Vec<Tangle>> {
    let len = 2 * m + k;
    let count = factorial(len);
    if count > budget {
        return Err(Error::SizeBound(format!(
            "enumerating k = {k}, m = {m} scans {len}! = {count} wirings, budget is {budget}"
        )));
    }
    // Permutations come out in lexicographic order, so keeping exactly the orbit minima
    // yields a sorted list.
    Ok((0..len)
        .permutations(len)
        .filter(|w| is_canonical_wiring(w, m))
        .map(|w| Tangle::new(k, w, 0).expect("a permutation is a valid wiring"))
        .collect())
}

/// All k-tangles with at most `max_m` chords, grouped by chord count.
pub fn enumerate_tangles_up_to(k: usize, max_m: usize, budget: u128) -> Result<Vec<Tangle>> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        out.extend(enumerate_tangles(k, m, budget)?);
    }
    Ok(out)
}

/// Chord diagrams with exactly `m` chords and no vertexless loops, up to isomorphism.
pub fn enumerate_diagrams(m: usize, budget: u128) -> Result<Vec<ChordDiagram>> {
    Ok(enumerate_tangles(0, m, budget)?
        .into_iter()
        .map(|t| t.to_diagram().expect("0-tangle"))
        .collect())
}

pub fn enumerate_diagrams_up_to(max_m: usize, budget: u128) -> Result<Vec<ChordDiagram>> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        out.extend(enumerate_diagrams(m, budget)?);
    }
    Ok(out)
}

/// A uniformly random wiring with a uniformly chosen chord count in `0..=max_m`, returned
/// in canonical form.
pub fn sample_tangle<R: Rng + ?Sized>(k: usize, max_m: usize, rng: &mut R) -> Tangle {
    let m = rng.gen_range(0..=max_m);
    let w = Perm::random(2 * m + k, rng);
    Tangle::new(k, w.images().to_vec(), 0).expect("valid").canonical_form()
}

/// `count` distinct members of `family`, or all of it when it is smaller.
pub fn sample_from<T: Clone, R: Rng + ?Sized>(family: &[T], count: usize, rng: &mut R) -> Vec<T> {
    family.choose_multiple(rng, count.min(family.len())).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use crate::perm::Hyperoctahedral;

    /// Orbit dedup by applying every relabeling and keeping the least image.
    fn brute_classes(k: usize, m: usize) -> BTreeSet<Vec<usize>> {
        let len = 2 * m + k;
        Perm::all(len)
            .map(|w| {
                let t = Tangle::new(k, w.images().to_vec(), 0).unwrap();
                Hyperoctahedral::new(m)
                    .elements()
                    .map(|h| t.relabel(&h).wiring().to_vec())
                    .min()
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn small_diagram_counts() {
        assert_eq!(enumerate_diagrams(0, DEFAULT_BUDGET).unwrap(), vec![ChordDiagram::empty()]);
        let one = enumerate_diagrams(1, DEFAULT_BUDGET).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.iter().any(|d| d.is_isomorphic(&ChordDiagram::theta())));
        assert!(one.iter().any(|d| d.is_isomorphic(&ChordDiagram::dumbbell())));
    }

    #[test]
    fn matches_brute_force_dedup() {
        for (k, m) in [(0, 2), (1, 1), (2, 1), (1, 2), (3, 1)] {
            let got: BTreeSet<Vec<usize>> =
                enumerate_tangles(k, m, DEFAULT_BUDGET).unwrap().iter().map(|t| t.wiring().to_vec()).collect();
            assert_eq!(got, brute_classes(k, m), "k = {k}, m = {m}");
        }
    }

    #[test]
    fn output_is_sorted_and_canonical() {
        let ts = enumerate_tangles(2, 2, DEFAULT_BUDGET).unwrap();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(ts.iter().all(|t| &t.canonical_form() == t));
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(enumerate_tangles(0, 3, 100), Err(Error::SizeBound(_))));
        assert!(enumerate_tangles(0, 0, 1).is_ok());
    }
}
