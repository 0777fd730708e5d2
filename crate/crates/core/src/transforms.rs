//! Bijections between quaternary sequences of length m, binary (2,m)-arrays
//! (two "Gray rows"), and binary sequences of length 2m.

use crate::arrays::BinaryArray;
use crate::error::{Error, Result};
use crate::seqcore::{BinarySeq, GaussianInt, QuaternarySeq};

/// A binary (2,m)-array held as its two rows φ(0,−) and φ(1,−).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayPair {
    row0: BinarySeq,
    row1: BinarySeq,
}

impl GrayPair {
    pub fn new(row0: BinarySeq, row1: BinarySeq) -> Result<Self> {
        if row0.len() != row1.len() {
            return Err(Error::LengthMismatch { left: row0.len(), right: row1.len() });
        }
        Ok(GrayPair { row0, row1 })
    }

    pub fn from_rows(row0: &[i8], row1: &[i8]) -> Result<Self> {
        GrayPair::new(BinarySeq::new(row0.to_vec())?, BinarySeq::new(row1.to_vec())?)
    }

    pub fn row0(&self) -> &BinarySeq {
        &self.row0
    }

    pub fn row1(&self) -> &BinarySeq {
        &self.row1
    }

    pub fn row(&self, a: usize) -> &BinarySeq {
        if a == 0 {
            &self.row0
        } else {
            &self.row1
        }
    }

    pub fn len(&self) -> usize {
        self.row0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row0.is_empty()
    }

    pub fn get(&self, a: usize, k: usize) -> i8 {
        self.row(a).get(k)
    }

    pub fn to_array(&self) -> BinaryArray {
        let mut values = self.row0.values().to_vec();
        values.extend_from_slice(self.row1.values());
        BinaryArray::new(vec![2, self.len()], values).expect("rows of length 1 do not form a (2,m)-array")
    }

    pub fn from_array(phi: &BinaryArray) -> Result<Self> {
        if phi.dims().len() != 2 || phi.dims()[0] != 2 {
            return Err(Error::Shape(format!("expected a (2,m)-array, got {:?}", phi.dims())));
        }
        let m = phi.dims()[1];
        GrayPair::from_rows(&phi.values()[..m], &phi.values()[m..])
    }

    /// Negates both rows when φ(0,0) = −1, so the result has φ(0,0) = +1.
    pub fn normalized(&self) -> (GrayPair, bool) {
        if self.row0.get(0) == 1 {
            (self.clone(), false)
        } else {
            (GrayPair { row0: self.row0.negated(), row1: self.row1.negated() }, true)
        }
    }
}

/// φ(0,k) = Re f(k) − Im f(k), φ(1,k) = Re f(k) + Im f(k).
pub fn quat_to_array(f: &QuaternarySeq) -> GrayPair {
    let (row0, row1): (Vec<i8>, Vec<i8>) =
        f.values().iter().map(|v| ((v.re - v.im) as i8, (v.re + v.im) as i8)).unzip();
    GrayPair { row0: BinarySeq::new(row0).unwrap(), row1: BinarySeq::new(row1).unwrap() }
}

/// f(k) = (1 − i)/2 · (φ(0,k) + i·φ(1,k)).
pub fn array_to_quat(phi: &GrayPair) -> QuaternarySeq {
    let values: Vec<GaussianInt> = phi
        .row0
        .values()
        .iter()
        .zip(phi.row1.values())
        .map(|(&p0, &p1)| {
            let z = GaussianInt::new(1, -1) * GaussianInt::new(p0 as i64, p1 as i64);
            GaussianInt::new(z.re / 2, z.im / 2)
        })
        .collect();
    QuaternarySeq::from_values(&values).expect("Gray rows always map to units")
}

fn check_half_length(m: usize) -> Result<()> {
    if m.is_multiple_of(2) {
        Err(Error::NotOdd { what: "m", value: m })
    } else if m < 3 {
        Err(Error::Shape(format!("m must exceed 1, got {m}")))
    } else {
        Ok(())
    }
}

/// Where φ(a,k) is read from in a length-2m sequence, and with which sign.
/// `k mod 4` is taken on the representative 0 ≤ k < m.
fn cell(m: usize, a: usize, k: usize) -> (i8, usize) {
    let same = (k + a * m) % (2 * m);
    let other = (k + (1 - a) * m) % (2 * m);
    let alt = |p: usize| if p.is_multiple_of(2) { 1 } else { -1 };
    if m % 4 == 1 {
        match k % 4 {
            0 => (1, same),
            1 => (alt(1 - a), other),
            2 => (-1, same),
            _ => (alt(a), other),
        }
    } else {
        match k % 4 {
            0 => (alt(a), same),
            1 => (1, other),
            2 => (alt(1 - a), same),
            _ => (-1, other),
        }
    }
}

/// Binary sequence of length 2m (m odd, m > 1) to its (2,m)-array.
pub fn sequence_to_array(varphi: &BinarySeq) -> Result<GrayPair> {
    if !varphi.len().is_multiple_of(2) {
        return Err(Error::Shape(format!("length must be 2m, got {}", varphi.len())));
    }
    let m = varphi.len() / 2;
    check_half_length(m)?;
    let mut rows = [vec![0i8; m], vec![0i8; m]];
    for (a, row) in rows.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            let (sign, idx) = cell(m, a, k);
            *slot = sign * varphi.get(idx);
        }
    }
    let [row0, row1] = rows;
    GrayPair::from_rows(&row0, &row1)
}

/// Inverse of [`sequence_to_array`].
pub fn array_to_sequence(phi: &GrayPair) -> Result<BinarySeq> {
    let m = phi.len();
    check_half_length(m)?;
    let mut out = vec![0i8; 2 * m];
    for a in 0..2 {
        for k in 0..m {
            let (sign, idx) = cell(m, a, k);
            out[idx] = sign * phi.get(a, k);
        }
    }
    BinarySeq::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuaternarySeq {
        s.parse().unwrap()
    }

    fn b(s: &str) -> BinarySeq {
        s.parse().unwrap()
    }

    fn gray(r0: &[i8], r1: &[i8]) -> GrayPair {
        GrayPair::from_rows(r0, r1).unwrap()
    }

    #[test]
    fn inverse_gray_mapping_table() {
        // f(k) = i^{Φ^{-1}((1 − φ(1,k))/2, (1 − φ(0,k))/2)}
        let inverse_gray = |hi: u8, lo: u8| match (hi, lo) {
            (0, 0) => 0u8,
            (0, 1) => 1,
            (1, 1) => 2,
            _ => 3,
        };
        for e in 0u8..4 {
            let f = QuaternarySeq::new(vec![e]).unwrap();
            let p = quat_to_array(&f);
            let hi = ((1 - p.get(1, 0)) / 2) as u8;
            let lo = ((1 - p.get(0, 0)) / 2) as u8;
            assert_eq!(inverse_gray(hi, lo), e);
        }
    }

    #[test]
    fn quaternary_to_rows() {
        let p = quat_to_array(&q("-+i+j+i+-"));
        assert_eq!(p.row0().values(), &[-1, 1, -1, 1, 1, 1, -1, 1, -1]);
        assert_eq!(p.row1().values(), &[-1, 1, 1, 1, -1, 1, 1, 1, -1]);
        assert_eq!(quat_to_array(&q("+i+")), gray(&[1, -1, 1], &[1, 1, 1]));
        assert_eq!(quat_to_array(&q("+++")), gray(&[1, 1, 1], &[1, 1, 1]));
    }

    #[test]
    fn rows_to_quaternary() {
        assert_eq!(array_to_quat(&gray(&[1, -1, 1], &[1, 1, 1])), q("+i+"));
        assert_eq!(array_to_quat(&gray(&[1, -1, 1, 1, 1], &[1, -1, 1, 1, 1])), q("+-+++"));
        assert_eq!(array_to_quat(&gray(&[1; 4], &[1; 4])), q("++++"));
        assert!(GrayPair::from_rows(&[1, 1], &[1]).is_err());
    }

    #[test]
    fn sequence_to_array_examples() {
        assert_eq!(sequence_to_array(&b("++---+")).unwrap(), gray(&[1, -1, 1], &[1, 1, 1]));
        assert_eq!(sequence_to_array(&b("+---+++-++")).unwrap(), gray(&[1, -1, 1, 1, 1], &[1, -1, 1, 1, 1]));
        assert_eq!(sequence_to_array(&b("-++-+++-----+---+-")).unwrap(), quat_to_array(&q("-+i+j+i+-")));
    }

    #[test]
    fn array_to_sequence_examples() {
        assert_eq!(array_to_sequence(&gray(&[1, -1, 1], &[1, 1, 1])).unwrap(), b("++---+"));
        assert_eq!(array_to_sequence(&gray(&[1, -1, 1, 1, 1], &[1, -1, 1, 1, 1])).unwrap(), b("+---+++-++"));
    }

    #[test]
    fn bad_lengths() {
        assert!(matches!(sequence_to_array(&b("++++")), Err(Error::NotOdd { .. })));
        assert!(sequence_to_array(&b("+-")).is_err());
        assert!(sequence_to_array(&b("+-+")).is_err());
        assert!(array_to_sequence(&gray(&[1, 1], &[1, 1])).is_err());
    }

    #[test]
    fn normalization_negates_both_rows() {
        let (p, flipped) = gray(&[-1, 1, 1], &[1, -1, 1]).normalized();
        assert!(flipped);
        assert_eq!(p, gray(&[1, -1, -1], &[-1, 1, -1]));
    }
}
