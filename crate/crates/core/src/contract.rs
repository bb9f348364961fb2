//! Sum-product contraction of small dense tensor networks over `[n]`-valued variables.

use num_traits::{One, Zero};

use crate::rational::Q;

/// A dense factor over distinct variables, row-major in `vars` order.
#[derive(Clone, Debug)]
pub(crate) struct Factor {
    pub vars: Vec<usize>,
    pub data: Vec<Q>,
}

impl Factor {
    /// Tabulates `f` over all assignments of `vars`, which may contain repeats; repeated
    /// variables are collapsed so that `f` only ever sees consistent assignments.
    pub fn tabulate<F: Fn(&[usize]) -> Q>(n: usize, vars: &[usize], f: F) -> Factor {
        let mut distinct: Vec<usize> = Vec::new();
        for &v in vars {
            if !distinct.contains(&v) {
                distinct.push(v);
            }
        }
        let pos: Vec<usize> = vars.iter().map(|v| distinct.iter().position(|d| d == v).unwrap()).collect();
        let size = n.pow(distinct.len() as u32);
        let mut data = Vec::with_capacity(size);
        let mut assign = vec![0; distinct.len()];
        let mut full = vec![0; vars.len()];
        for i in 0..size {
            decode(i, n, &mut assign);
            for (slot, &p) in full.iter_mut().zip(&pos) {
                *slot = assign[p];
            }
            data.push(f(&full));
        }
        Factor { vars: distinct, data }
    }
}

fn decode(mut i: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = i % n;
        i /= n;
    }
}

/// Multiplies `factors` and sums out `eliminate` (if any). The result ranges over the
/// union of the factors' variables minus `eliminate`, in ascending variable order.
fn product_sum(n: usize, factors: &[Factor], eliminate: Option<usize>) -> Factor {
    let mut vars: Vec<usize> = factors.iter().flat_map(|f| f.vars.iter().copied()).collect();
    vars.sort_unstable();
    vars.dedup();
    if let Some(e) = eliminate {
        vars.retain(|&v| v != e);
        vars.push(e);
    }
    let kept = vars.len() - eliminate.is_some() as usize;
    // strides[f][p]: contribution of position p in `vars` to factor f's flat index.
    let strides: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            vars.iter()
                .map(|v| match f.vars.iter().position(|x| x == v) {
                    Some(p) => n.pow((f.vars.len() - 1 - p) as u32),
                    None => 0,
                })
                .collect()
        })
        .collect();
    let inner = if eliminate.is_some() { n } else { 1 };
    let out_size = n.pow(kept as u32);
    let mut data = Vec::with_capacity(out_size);
    let mut assign = vec![0; vars.len()];
    for o in 0..out_size {
        let mut acc = Q::zero();
        for e in 0..inner {
            decode(o * inner + e, n, &mut assign);
            let mut prod = Q::one();
            for (f, s) in factors.iter().zip(&strides) {
                let idx: usize = assign.iter().zip(s).map(|(a, st)| a * st).sum();
                let v = &f.data[idx];
                if v.is_zero() {
                    prod = Q::zero();
                    break;
                }
                prod *= v;
            }
            if !prod.is_zero() {
                acc += prod;
            }
        }
        data.push(acc);
    }
    vars.truncate(kept);
    Factor { vars, data }
}

/// Contracts every variable in `0..num_vars` not listed in `open` and returns a factor
/// over the distinct `open` variables, in the order given.
///
/// Elimination order is greedy: at each step the variable whose elimination produces the
/// smallest intermediate factor goes first.
pub(crate) fn contract(n: usize, num_vars: usize, mut factors: Vec<Factor>, open: &[usize]) -> Factor {
    let mut open_distinct: Vec<usize> = Vec::new();
    for &v in open {
        if !open_distinct.contains(&v) {
            open_distinct.push(v);
        }
    }
    let mut scalar = Q::one();
    for v in 0..num_vars {
        if open_distinct.contains(&v) || factors.iter().any(|f| f.vars.contains(&v)) {
            continue;
        }
        // A closed variable touching no factor sums to n.
        scalar *= Q::from_integer(n.into());
    }

    loop {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..num_vars {
            if open_distinct.contains(&v) {
                continue;
            }
            let touching: Vec<&Factor> = factors.iter().filter(|f| f.vars.contains(&v)).collect();
            if touching.is_empty() {
                continue;
            }
            let mut union: Vec<usize> = touching.iter().flat_map(|f| f.vars.iter().copied()).collect();
            union.sort_unstable();
            union.dedup();
            let cost = union.len();
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, v));
            }
        }
        let Some((_, v)) = best else { break };
        let (touching, rest): (Vec<Factor>, Vec<Factor>) = factors.into_iter().partition(|f| f.vars.contains(&v));
        factors = rest;
        factors.push(product_sum(n, &touching, Some(v)));
    }

    let merged = if factors.is_empty() {
        Factor { vars: Vec::new(), data: vec![Q::one()] }
    } else {
        product_sum(n, &factors, None)
    };
    // Re-layout over open_distinct (open variables absent from every factor broadcast).
    let out_size = n.pow(open_distinct.len() as u32);
    let mut assign = vec![0; open_distinct.len()];
    let mut data = Vec::with_capacity(out_size);
    for o in 0..out_size {
        decode(o, n, &mut assign);
        let idx = merged.vars.iter().fold(0, |acc, v| {
            let p = open_distinct.iter().position(|x| x == v).expect("only open variables survive");
            acc * n + assign[p]
        });
        data.push(&merged.data[idx] * &scalar);
    }
    Factor { vars: open_distinct, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn matrix_chain_trace() {
        // tr(A B) with A = [[1,2],[3,4]], B = [[5,6],[7,8]]: 1*5+2*7+3*6+4*8 = 69
        let a = [1, 2, 3, 4];
        let b = [5, 6, 7, 8];
        let fa = Factor::tabulate(2, &[0, 1], |x| q(a[x[0] * 2 + x[1]]));
        let fb = Factor::tabulate(2, &[1, 0], |x| q(b[x[0] * 2 + x[1]]));
        let out = contract(2, 2, vec![fa, fb], &[]);
        assert_eq!(out.data, vec![q(69)]);
    }

    #[test]
    fn repeated_and_free_variables() {
        // f(x, x) summed over x, times n for an untouched variable.
        let f = Factor::tabulate(3, &[0, 0], |x| q((x[0] + x[1]) as i64));
        let out = contract(3, 2, vec![f], &[]);
        assert_eq!(out.data, vec![q(6 * 3)]);
        // open variable absent from every factor broadcasts
        let out = contract(2, 1, vec![], &[0]);
        assert_eq!(out.data, vec![q(1), q(1)]);
    }
}
