//! Formal integer linear combinations over an ordered key type.
//!
//! Chains of every dimension (words, edges, 2-cells) are `FormalSum`s; the
//! ordered map keeps term enumeration deterministic and never stores zero
//! coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// A finitely supported function from `K` to the integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> FormalSum<K> {
    /// The zero sum.
    pub fn zero() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    /// The sum `c·k`.
    pub fn singleton(k: K, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    /// Collects terms, combining duplicate keys.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (K, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    /// Adds `c·k` in place.
    pub fn add_term(&mut self, k: K, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `other` in place.
    pub fn add(&mut self, other: &FormalSum<K>)
    where
        K: Clone,
    {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    /// Subtracts `other` in place.
    pub fn sub(&mut self, other: &FormalSum<K>)
    where
        K: Clone,
    {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    /// `self + other`.
    pub fn plus(&self, other: &FormalSum<K>) -> Self
    where
        K: Clone,
    {
        let mut s = self.clone();
        s.add(other);
        s
    }

    /// `self − other`.
    pub fn minus(&self, other: &FormalSum<K>) -> Self
    where
        K: Clone,
    {
        let mut s = self.clone();
        s.sub(other);
        s
    }

    /// `−self`.
    pub fn negated(&self) -> Self
    where
        K: Clone,
    {
        FormalSum { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    /// `c·self`.
    pub fn scaled(&self, c: impl Into<BigInt>) -> Self
    where
        K: Clone,
    {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        FormalSum { terms: self.terms.iter().map(|(k, x)| (k.clone(), x * &c)).collect() }
    }

    /// The coefficient of `k` (zero when absent).
    pub fn coeff(&self, k: &K) -> BigInt {
        self.terms.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when the sum has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of keys with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    /// Keys with nonzero coefficient, in order.
    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Pushes the sum forward along `f`, combining collisions.
    pub fn map_keys<K2: Ord>(&self, mut f: impl FnMut(&K) -> K2) -> FormalSum<K2> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Replaces each term `c·k` by `c·g(k)` for a chain-valued `g`.
    pub fn flat_map<K2: Ord + Clone>(
        &self,
        mut g: impl FnMut(&K) -> FormalSum<K2>,
    ) -> FormalSum<K2> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add(&g(k).scaled(c.clone()));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}
