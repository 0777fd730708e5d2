//! Cocycles over G = Z2 x Zm (m odd) with coefficients in ⟨−1⟩.
//!
//! Elements are ordered g_1 = (0,0), ..., g_m = (0,m−1), g_{m+1} = (1,0), ...,
//! g_{2m} = (1,m−1); the 0-based index of g_i is i − 1. A cocycle is stored
//! in the basis {λ, ∂_2, ..., ∂_{2m−1}}, where ∂_i is the coboundary of the map
//! that is −1 at g_i only.
//!
//! Matrices are packed bit rows with bit 1 meaning −1, so entrywise products
//! are XORs and row sums are population counts.

use std::fmt;

use crate::error::{Error, Result};
use crate::transforms::GrayPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupZ2m {
    m: usize,
}

impl GroupZ2m {
    pub fn new(m: usize) -> Result<Self> {
        if m.is_multiple_of(2) {
            return Err(Error::NotOdd { what: "m", value: m });
        }
        if m < 3 {
            return Err(Error::Shape(format!("m must be at least 3, got {m}")));
        }
        Ok(GroupZ2m { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    /// (a, u) for a 0-based index.
    pub fn element(&self, j: usize) -> (usize, usize) {
        (j / self.m, j % self.m)
    }

    pub fn index(&self, a: usize, u: usize) -> usize {
        (a % 2) * self.m + u % self.m
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, u) = self.element(x);
        let (b, w) = self.element(y);
        self.index(a + b, u + w)
    }
}

/// A 2m x 2m ±1 matrix indexed by g_1..g_{2m}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CocyclicMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl CocyclicMatrix {
    pub fn ones(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        CocyclicMatrix { n, words, bits: vec![0; n * words] }
    }

    /// Builds from a predicate that is true where the entry is −1.
    pub fn from_fn(n: usize, mut negative: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = CocyclicMatrix::ones(n);
        for g in 0..n {
            for h in 0..n {
                if negative(g, h) {
                    out.flip(g, h);
                }
            }
        }
        out
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: r.len() });
        }
        for (g, row) in rows.iter().enumerate() {
            if let Some(&v) = row.iter().find(|&&v| v != 1 && v != -1) {
                return Err(Error::InvalidValue { value: v as i64, position: g });
            }
        }
        Ok(CocyclicMatrix::from_fn(n, |g, h| rows[g][h] == -1))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn flip(&mut self, g: usize, h: usize) {
        self.bits[g * self.words + h / 64] ^= 1 << (h % 64);
    }

    pub fn is_negative(&self, g: usize, h: usize) -> bool {
        self.bits[g * self.words + h / 64] >> (h % 64) & 1 == 1
    }

    pub fn get(&self, g: usize, h: usize) -> i8 {
        if self.is_negative(g, h) {
            -1
        } else {
            1
        }
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &CocyclicMatrix) -> CocyclicMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        CocyclicMatrix {
            n: self.n,
            words: self.words,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn hadamard_assign(&mut self, other: &CocyclicMatrix) {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn row_sum(&self, g: usize) -> i64 {
        let row = &self.bits[g * self.words..(g + 1) * self.words];
        let negatives: u32 = row.iter().map(|w| w.count_ones()).sum();
        self.n as i64 - 2 * negatives as i64
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n).map(|g| self.row_sum(g)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.n).map(|g| (0..self.n).map(|h| self.get(g, h)).collect()).collect()
    }

    /// First row and column all +1.
    pub fn is_normalized(&self) -> bool {
        (0..self.n).all(|i| !self.is_negative(0, i) && !self.is_negative(i, 0))
    }

    /// Negates rows, then columns, so that the first row and column are +1.
    pub fn normalized(&self) -> CocyclicMatrix {
        let n = self.n;
        let row_flip: Vec<bool> = (0..n).map(|g| self.is_negative(g, 0)).collect();
        let col_flip: Vec<bool> = (0..n).map(|h| self.is_negative(0, h) != row_flip[0]).collect();
        CocyclicMatrix::from_fn(n, |g, h| self.is_negative(g, h) ^ row_flip[g] ^ col_flip[h])
    }

    /// ψ(g,h)ψ(gh,k) = ψ(g,hk)ψ(h,k) for all g, h, k.
    pub fn satisfies_cocycle_identity(&self, group: &GroupZ2m) -> bool {
        let n = group.order();
        if n != self.n {
            return false;
        }
        (0..n).all(|g| {
            (0..n).all(|h| {
                let gh = group.add(g, h);
                (0..n).all(|k| {
                    let hk = group.add(h, k);
                    (self.is_negative(g, h) ^ self.is_negative(gh, k))
                        == (self.is_negative(g, hk) ^ self.is_negative(h, k))
                })
            })
        })
    }

    /// Rows as strings of `+`/`-`.
    pub fn row_strings(&self) -> Vec<String> {
        (0..self.n).map(|g| (0..self.n).map(|h| if self.is_negative(g, h) { '-' } else { '+' }).collect()).collect()
    }
}

impl fmt::Debug for CocyclicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CocyclicMatrix {}x{}", self.n, self.n)?;
        for row in self.row_strings() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Sum of |row sum| over every row except the one indexed by the identity.
pub fn row_excess(matrix: &CocyclicMatrix) -> i64 {
    (1..matrix.size()).map(|g| matrix.row_sum(g).abs()).sum()
}

/// λ((a,u),(b,w)) = −1 iff a = b = 1.
pub fn lambda_matrix(m: usize) -> Result<CocyclicMatrix> {
    let group = GroupZ2m::new(m)?;
    Ok(CocyclicMatrix::from_fn(group.order(), |g, h| group.element(g).0 == 1 && group.element(h).0 == 1))
}

/// Coboundary table ∂φ(g,h) = φ(g)φ(h)φ(g+h) of a ±1 map on G.
fn coboundary_table(group: &GroupZ2m, phi: &[i8]) -> CocyclicMatrix {
    let n = group.order();
    CocyclicMatrix::from_fn(n, |g, h| phi[g] * phi[h] * phi[group.add(g, h)] == -1)
}

/// The coboundary of a normalized map, together with e_i = [φ(g_i) = −1] for
/// i = 2..=2m (`exponents[i - 2]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coboundary {
    pub table: CocyclicMatrix,
    pub exponents: Vec<bool>,
}

/// `phi` lists φ(g_1), ..., φ(g_{2m}).
pub fn coboundary_of(m: usize, phi: &[i8]) -> Result<Coboundary> {
    let group = GroupZ2m::new(m)?;
    if phi.len() != group.order() {
        return Err(Error::LengthMismatch { left: phi.len(), right: group.order() });
    }
    if let Some((position, &v)) = phi.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
        return Err(Error::InvalidValue { value: v as i64, position });
    }
    if phi[0] != 1 {
        return Err(Error::NotNormalized);
    }
    Ok(Coboundary { table: coboundary_table(&group, phi), exponents: phi[1..].iter().map(|&v| v == -1).collect() })
}

/// ∂_i for 2 ≤ i ≤ 2m, from the map that is −1 exactly at g_i.
pub fn delta_coboundary(m: usize, i: usize) -> Result<CocyclicMatrix> {
    let group = GroupZ2m::new(m)?;
    if !(2..=2 * m).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, lo: 2, hi: 2 * m });
    }
    let mut phi = vec![1i8; 2 * m];
    phi[i - 1] = -1;
    Ok(coboundary_table(&group, &phi))
}

/// ∂_i as the normalization of the block forms [[C, J], [J, C]] (i ≤ m) or
/// [[J, C], [C, J]] (i > m), where C is the back circulant whose first row is
/// all +1 except at position i (resp. i − m).
pub fn basis_matrix(m: usize, i: usize) -> Result<CocyclicMatrix> {
    let group = GroupZ2m::new(m)?;
    if !(2..=2 * m).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, lo: 2, hi: 2 * m });
    }
    let (pos, c_on_diagonal) = if i <= m { (i - 1, true) } else { (i - m - 1, false) };
    let precursor = CocyclicMatrix::from_fn(2 * m, |g, h| {
        let (a, u) = group.element(g);
        let (b, w) = group.element(h);
        let diagonal_block = a == b;
        // back circulant: entry (u, w) depends on u + w
        diagonal_block == c_on_diagonal && (u + w) % m == pos
    });
    Ok(precursor.normalized())
}

/// ψ = λ^{flag} · ∏ ∂_i^{k_i}, i = 2..2m−1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle {
    group: GroupZ2m,
    lambda: bool,
    exponents: Vec<bool>,
}

impl Cocycle {
    /// `deltas` are the 1-based indices i (2 ≤ i ≤ 2m − 1) with k_i = 1.
    pub fn new(m: usize, lambda: bool, deltas: &[usize]) -> Result<Self> {
        let group = GroupZ2m::new(m)?;
        let mut exponents = vec![false; 2 * m - 2];
        for &i in deltas {
            if !(2..2 * m).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, lo: 2, hi: 2 * m - 1 });
            }
            if exponents[i - 2] {
                return Err(Error::Precondition(format!("basis index {i} listed twice")));
            }
            exponents[i - 2] = true;
        }
        Ok(Cocycle { group, lambda, exponents })
    }

    /// `exponents[i - 2]` is k_i.
    pub fn from_exponents(m: usize, lambda: bool, exponents: Vec<bool>) -> Result<Self> {
        let group = GroupZ2m::new(m)?;
        if exponents.len() != 2 * m - 2 {
            return Err(Error::LengthMismatch { left: exponents.len(), right: 2 * m - 2 });
        }
        Ok(Cocycle { group, lambda, exponents })
    }

    /// Exponents k_2..k_{2m−1} packed into the low bits (bit i − 2).
    pub fn from_mask(m: usize, lambda: bool, mask: u64) -> Result<Self> {
        let exponents = (0..2 * m.max(1) - 2).map(|b| b < 64 && mask >> b & 1 == 1).collect();
        Cocycle::from_exponents(m, lambda, exponents)
    }

    pub fn group(&self) -> GroupZ2m {
        self.group
    }

    pub fn m(&self) -> usize {
        self.group.m
    }

    pub fn lambda_flag(&self) -> bool {
        self.lambda
    }

    pub fn exponents(&self) -> &[bool] {
        &self.exponents
    }

    /// 1-based indices with k_i = 1.
    pub fn deltas(&self) -> Vec<usize> {
        (0..self.exponents.len()).filter(|&j| self.exponents[j]).map(|j| j + 2).collect()
    }

    pub fn matrix(&self) -> CocyclicMatrix {
        cocycle_matrix(self)
    }
}

impl fmt::Display for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.lambda {
            parts.push("λ".to_string());
        }
        parts.extend(self.deltas().into_iter().map(|i| format!("∂{i}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("·"))
        }
    }
}

/// ∏ ∂_i^{k_i} is the coboundary of the map that is −1 exactly at the g_i
/// with k_i = 1, so one table suffices.
pub fn cocycle_matrix(psi: &Cocycle) -> CocyclicMatrix {
    let m = psi.m();
    let mut phi = vec![1i8; 2 * m];
    for i in psi.deltas() {
        phi[i - 1] = -1;
    }
    let mut out = coboundary_table(&psi.group, &phi);
    if psi.lambda {
        out.hadamard_assign(&lambda_matrix(m).expect("group already validated"));
    }
    out
}

/// The same matrix as an explicit entrywise product of λ and the ∂_i.
pub fn cocycle_matrix_by_factors(psi: &Cocycle) -> CocyclicMatrix {
    let m = psi.m();
    let mut out =
        if psi.lambda { lambda_matrix(m).expect("group already validated") } else { CocyclicMatrix::ones(2 * m) };
    for i in psi.deltas() {
        out.hadamard_assign(&delta_coboundary(m, i).expect("index already validated"));
    }
    out
}

/// Row excess at its least possible value: 2m − 2 off the coboundaries,
/// 4m − 2 for a coboundary (flag 0).
pub fn is_quasi_orthogonal(psi: &Cocycle) -> bool {
    let re = row_excess(&cocycle_matrix(psi));
    let m = psi.m() as i64;
    if psi.lambda {
        re == 2 * m - 2
    } else {
        re == 4 * m - 2
    }
}

/// λ·∂φ in the basis, for a normalized (2,m)-array.
///
/// With e_i = [φ(g_i) = −1], ∂φ = ∏_{i=2}^{2m} ∂_i^{e_i}; since
/// ∂_{2m} = ∏_{i=m+1}^{2m−1} ∂_i, the coordinates are k_i = e_i for i ≤ m and
/// k_i = e_i ⊕ e_{2m} for m < i < 2m.
pub fn cocycle_from_array(phi: &GrayPair) -> Result<Cocycle> {
    let m = phi.len();
    GroupZ2m::new(m)?;
    if phi.get(0, 0) != 1 {
        return Err(Error::NotNormalized);
    }
    let e = |i: usize| {
        let j = i - 1;
        phi.get(j / m, j % m) == -1
    };
    let last = e(2 * m);
    let exponents = (2..2 * m).map(|i| if i <= m { e(i) } else { e(i) ^ last }).collect();
    Cocycle::from_exponents(m, true, exponents)
}
