//! Binary s-arrays over Z_{s_1} x ... x Z_{s_r}, their expansion with respect
//! to a type vector, and the perfect/optimal array predicates built on it.

use crate::error::{Error, Result};
use crate::group::CyclicProduct;
use crate::seqcore::{odd_autocorrelation_spectrum, BinarySeq};

/// A ±1-valued map on a product of cyclic groups, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryArray {
    group: CyclicProduct,
    values: Vec<i8>,
}

impl BinaryArray {
    pub fn new(dims: Vec<usize>, values: Vec<i8>) -> Result<Self> {
        if let Some(&s) = dims.iter().find(|&&s| s < 2) {
            return Err(Error::Shape(format!("every dimension must exceed 1, got {s}")));
        }
        let group = CyclicProduct::new(dims)?;
        if values.len() != group.order() {
            return Err(Error::LengthMismatch { left: values.len(), right: group.order() });
        }
        if let Some((position, &v)) = values.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(Error::InvalidValue { value: v as i64, position });
        }
        Ok(BinaryArray { group, values })
    }

    /// A two-dimensional array from its rows.
    pub fn from_rows(rows: &[&[i8]]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::LengthMismatch { left: width, right: r.len() });
        }
        BinaryArray::new(vec![rows.len(), width], rows.concat())
    }

    pub fn from_sequence(seq: &BinarySeq) -> Result<Self> {
        BinaryArray::new(vec![seq.len()], seq.values().to_vec())
    }

    pub fn dims(&self) -> &[usize] {
        self.group.moduli()
    }

    pub fn group(&self) -> &CyclicProduct {
        &self.group
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn get(&self, coords: &[usize]) -> i8 {
        self.values[self.group.index(coords)]
    }

    pub fn autocorrelation(&self) -> Vec<i64> {
        array_autocorrelation(&self.group, &self.values)
    }
}

/// R(x) = Σ_b φ(b)·φ(b + x) over every x of the group.
pub fn array_autocorrelation(group: &CyclicProduct, values: &[i8]) -> Vec<i64> {
    debug_assert_eq!(group.order(), values.len());
    (0..group.order())
        .map(|x| group.translation(x).iter().enumerate().map(|(b, &bx)| (values[b] * values[bx]) as i64).sum())
        .collect()
}

/// The expansion φ' of an array on E = Z_{(z_1+1)s_1} x ... x Z_{(z_r+1)s_r}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedArray {
    base: Vec<usize>,
    z: Vec<bool>,
    group: CyclicProduct,
    values: Vec<i8>,
    h: Vec<usize>,
    k: Vec<usize>,
}

impl ExpandedArray {
    pub fn group(&self) -> &CyclicProduct {
        &self.group
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn get(&self, coords: &[usize]) -> i8 {
        self.values[self.group.index(coords)]
    }

    pub fn type_vector(&self) -> &[bool] {
        &self.z
    }

    pub fn base_dims(&self) -> &[usize] {
        &self.base
    }

    /// Indices of H in E, sorted.
    pub fn h(&self) -> &[usize] {
        &self.h
    }

    /// Indices of the even-weight subgroup K of H, sorted.
    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn in_h(&self, x: usize) -> bool {
        self.h.binary_search(&x).is_ok()
    }

    pub fn autocorrelation(&self) -> Vec<i64> {
        array_autocorrelation(&self.group, &self.values)
    }
}

pub fn expand(phi: &BinaryArray, z: &[bool]) -> Result<ExpandedArray> {
    let base = phi.dims().to_vec();
    if z.len() != base.len() {
        return Err(Error::LengthMismatch { left: z.len(), right: base.len() });
    }
    let dims: Vec<usize> = base.iter().zip(z).map(|(&s, &zi)| if zi { 2 * s } else { s }).collect();
    let group = CyclicProduct::new(dims)?;

    let values = (0..group.order())
        .map(|x| {
            let coords = group.coords(x);
            // x - x̃ has a nonzero (= s_i) component exactly where x_i ≥ s_i
            let weight = coords.iter().zip(&base).filter(|(&c, &s)| c >= s).count();
            let reduced: Vec<usize> = coords.iter().zip(&base).map(|(&c, &s)| c % s).collect();
            let v = phi.get(&reduced);
            if weight % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();

    // H: h_i ∈ {0} when z_i = 0, {0, s_i} when z_i = 1
    let free: Vec<usize> = (0..base.len()).filter(|&i| z[i]).collect();
    let mut h = Vec::with_capacity(1 << free.len());
    let mut k = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut coords = vec![0; base.len()];
        for (bit, &i) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                coords[i] = base[i];
            }
        }
        let idx = group.index(&coords);
        h.push(idx);
        if mask.count_ones() % 2 == 0 {
            k.push(idx);
        }
    }
    h.sort_unstable();
    k.sort_unstable();

    Ok(ExpandedArray { base, z: z.to_vec(), group, values, h, k })
}

/// Generalized perfect binary array of type z: R_{φ'} vanishes off H.
pub fn is_gpba(phi: &BinaryArray, z: &[bool]) -> Result<bool> {
    let e = expand(phi, z)?;
    let r = e.autocorrelation();
    Ok((0..r.len()).all(|x| e.in_h(x) || r[x] == 0))
}

fn check_goba_shape(dims: &[usize]) -> Result<()> {
    let s1 = dims[0];
    if !s1.is_multiple_of(2) || (s1 / 2).is_multiple_of(2) {
        return Err(Error::Shape(format!("first dimension must be twice an odd number, got {s1}")));
    }
    if let Some(&s) = dims[1..].iter().find(|&&s| s % 2 == 0) {
        return Err(Error::Shape(format!("dimensions after the first must be odd, got {s}")));
    }
    Ok(())
}

/// Generalized optimal binary array of type z.
///
/// Requires s_1/2, s_2, ..., s_r odd. Off H every R_{φ'} value must lie in
/// {0, ±2|H|}; when z_1 = 1, exactly half of E must have R_{φ'} = 0. With
/// z_1 = 0 only the first condition is imposed.
pub fn is_goba(phi: &BinaryArray, z: &[bool]) -> Result<bool> {
    check_goba_shape(phi.dims())?;
    let e = expand(phi, z)?;
    let r = e.autocorrelation();
    let peak = 2 * e.h().len() as i64;
    let values_ok = (0..r.len()).all(|x| e.in_h(x) || r[x] == 0 || r[x].abs() == peak);
    if !values_ok {
        return Ok(false);
    }
    if z[0] {
        let zeros = r.iter().filter(|&&v| v == 0).count();
        Ok(zeros == r.len() / 2)
    } else {
        Ok(true)
    }
}

/// Generalized optimal binary sequence of length 2m (m odd), decided from the
/// negaperiodic autocorrelation: every nonzero shift in {0, ±2} and exactly m
/// zeros among the 2m − 1 nonzero shifts.
pub fn is_gobs(varphi: &BinarySeq) -> Result<bool> {
    let n = varphi.len();
    if n % 4 != 2 {
        return Err(Error::Shape(format!("GOBS length must be 2m with m odd, got {n}")));
    }
    let odd = odd_autocorrelation_spectrum(varphi);
    if odd[1..].iter().any(|v| v.abs() > 2) {
        return Ok(false);
    }
    Ok(odd[1..].iter().filter(|&&v| v == 0).count() == n / 2)
}
