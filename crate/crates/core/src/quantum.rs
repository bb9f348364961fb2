//! Formal rational linear combinations of k-tangles.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::tangle::Tangle;

/// A finite linear combination of canonical k-tangles. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumTangle {
    k: usize,
    terms: BTreeMap<Tangle, Q>,
}

impl QuantumTangle {
    pub fn zero(k: usize) -> Self {
        QuantumTangle { k, terms: BTreeMap::new() }
    }

    pub fn from_tangle(t: &Tangle) -> Self {
        let mut x = Self::zero(t.k());
        x.add_term(Q::one(), t).expect("same k");
        x
    }

    pub fn from_terms<'a, I>(k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Q, &'a Tangle)>,
    {
        let mut x = Self::zero(k);
        for (c, t) in terms {
            x.add_term(c, t)?;
        }
        Ok(x)
    }

    pub fn unit(k: usize) -> Self {
        Self::from_tangle(&Tangle::unit(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tangle, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Tangle) -> Q {
        self.terms.get(&t.canonical_form()).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c · t`, canonicalizing `t`.
    pub fn add_term(&mut self, c: Q, t: &Tangle) -> Result<()> {
        if t.k() != self.k {
            return Err(Error::LabelMismatch { left: self.k, right: t.k() });
        }
        self.add_canonical(c, t.canonical_form());
        Ok(())
    }

    fn add_canonical(&mut self, c: Q, t: Tangle) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &QuantumTangle) -> Result<QuantumTangle> {
        if self.k != other.k {
            return Err(Error::LabelMismatch { left: self.k, right: other.k });
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_canonical(c.clone(), t.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QuantumTangle) -> Result<QuantumTangle> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> QuantumTangle {
        if s.is_zero() {
            return Self::zero(self.k);
        }
        QuantumTangle { k: self.k, terms: self.terms.iter().map(|(t, c)| (t.clone(), c * s)).collect() }
    }

    fn bilinear<F>(&self, other: &QuantumTangle, k: usize, op: F) -> Result<QuantumTangle>
    where
        F: Fn(&Tangle, &Tangle) -> Result<Tangle>,
    {
        let mut out = Self::zero(k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_canonical(ca * cb, op(a, b)?.canonical_form());
            }
        }
        Ok(out)
    }

    /// Bilinear extension of [`Tangle::compose`].
    pub fn compose(&self, other: &QuantumTangle) -> Result<QuantumTangle> {
        if self.k != other.k {
            return Err(Error::LabelMismatch { left: self.k, right: other.k });
        }
        self.bilinear(other, self.k, Tangle::compose)
    }

    /// Bilinear extension of [`Tangle::join`], as a combination of 0-tangles.
    pub fn join(&self, other: &QuantumTangle) -> Result<QuantumTangle> {
        if self.k != other.k {
            return Err(Error::LabelMismatch { left: self.k, right: other.k });
        }
        self.bilinear(other, 0, |a, b| Ok(a.join(b)?.to_tangle()))
    }

    /// Bilinear extension of [`Tangle::shift_union`].
    pub fn shift_union(&self, other: &QuantumTangle) -> QuantumTangle {
        self.bilinear(other, self.k + other.k, |a, b| Ok(a.shift_union(b)))
            .expect("shift_union is total")
    }

    /// `x^{⊔m}`; the zeroth power is the empty 0-tangle.
    pub fn shift_power(&self, m: usize) -> QuantumTangle {
        let mut acc = Self::from_tangle(&Tangle::unit(0));
        for _ in 0..m {
            acc = acc.shift_union(self);
        }
        acc
    }

    /// `x^s` under composition; the zeroth power is `1_k`.
    pub fn pow(&self, s: usize) -> QuantumTangle {
        let mut acc = Self::unit(self.k);
        for _ in 0..s {
            acc = acc.compose(self).expect("same k");
        }
        acc
    }
}
