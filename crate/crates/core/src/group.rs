//! Finite abelian groups of the form Z_{n_1} x ... x Z_{n_r}, with elements
//! addressed by their row-major (mixed-radix) index.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    moduli: Vec<usize>,
    order: usize,
}

impl CyclicProduct {
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::Shape("at least one cyclic factor is required".into()));
        }
        let mut order: usize = 1;
        for &n in &moduli {
            if n == 0 {
                return Err(Error::ZeroModulus);
            }
            order = order.checked_mul(n).ok_or_else(|| Error::Shape("group order overflows".into()))?;
        }
        Ok(CyclicProduct { moduli, order })
    }

    /// The cyclic group Z_n.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Row-major index of an element given by its coordinates (reduced first).
    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.moduli.len());
        coords.iter().zip(&self.moduli).fold(0, |acc, (&c, &n)| acc * n + c % n)
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &n) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = index % n;
            index /= n;
        }
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut a = a;
        let mut b = b;
        let mut stride = 1;
        let mut out = 0;
        for &n in self.moduli.iter().rev() {
            let s = (a % n + b % n) % n;
            out += s * stride;
            stride *= n;
            a /= n;
            b /= n;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let mut stride = 1;
        let mut out = 0;
        for &n in self.moduli.iter().rev() {
            let c = a % n;
            out += ((n - c) % n) * stride;
            stride *= n;
            a /= n;
        }
        out
    }

    /// The permutation b -> b + x, as a lookup table over all b.
    pub fn translation(&self, x: usize) -> Vec<usize> {
        (0..self.order).map(|b| self.add(b, x)).collect()
    }
}
