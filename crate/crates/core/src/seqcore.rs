//! Exact periodic correlation of binary and quaternary sequences.
//!
//! Quaternary symbols are stored as exponents `e` standing for `i^e`, so products
//! and conjugates reduce to arithmetic mod 4 and every correlation value is an
//! exact Gaussian integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::CyclicProduct;

/// Longest sequence accepted by the constructors.
pub const MAX_LEN: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub const fn real(re: i64) -> Self {
        GaussianInt { re, im: 0 }
    }

    /// `i^e`.
    pub const fn unit(e: u8) -> Self {
        match e & 3 {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    /// Squared modulus.
    pub const fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub const fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    pub const fn is_real(self) -> bool {
        self.im == 0
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        GaussianInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: GaussianInt) -> GaussianInt {
        GaussianInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        GaussianInt::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt::real(re)
    }
}

/// Real values print as plain integers, others as `a+bi` / `a-bi`.
impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else if self.im > 0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}-{}i", self.re, -self.im)
        }
    }
}

/// A sequence over the fourth roots of unity, read through exponents.
pub trait UnitSequence {
    fn len(&self) -> usize;

    /// Exponent `e` with value `i^e` at position `k mod len`.
    fn exponent(&self, k: usize) -> u8;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Empty)
    } else if n > MAX_LEN {
        Err(Error::TooLong { len: n, max: MAX_LEN })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySeq {
    values: Vec<i8>,
}

impl BinarySeq {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        check_len(values.len())?;
        if let Some((position, &v)) = values.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(Error::InvalidValue { value: v as i64, position });
        }
        Ok(BinarySeq { values })
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry at `k mod n`.
    pub fn get(&self, k: usize) -> i8 {
        self.values[k % self.values.len()]
    }

    pub fn negated(&self) -> BinarySeq {
        BinarySeq { values: self.values.iter().map(|v| -v).collect() }
    }

    /// The length-2n sequence (φ, −φ).
    pub fn sign_doubled(&self) -> BinarySeq {
        let mut values = self.values.clone();
        values.extend(self.values.iter().map(|v| -v));
        BinarySeq { values }
    }

    pub fn to_quaternary(&self) -> QuaternarySeq {
        QuaternarySeq { exponents: self.values.iter().map(|&v| if v == 1 { 0 } else { 2 }).collect() }
    }

    /// Positions holding −1.
    pub fn support(&self) -> Vec<usize> {
        self.values.iter().enumerate().filter(|(_, &v)| v == -1).map(|(k, _)| k).collect()
    }
}

impl UnitSequence for BinarySeq {
    fn len(&self) -> usize {
        self.values.len()
    }

    fn exponent(&self, k: usize) -> u8 {
        if self.get(k) == 1 {
            0
        } else {
            2
        }
    }
}

impl FromStr for BinarySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                symbol => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<i8>>>()?;
        BinarySeq::new(values)
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternarySeq {
    exponents: Vec<u8>,
}

impl QuaternarySeq {
    pub fn new(exponents: Vec<u8>) -> Result<Self> {
        check_len(exponents.len())?;
        if let Some((position, &e)) = exponents.iter().enumerate().find(|(_, &e)| e > 3) {
            return Err(Error::InvalidValue { value: e as i64, position });
        }
        Ok(QuaternarySeq { exponents })
    }

    /// Builds from explicit values in {±1, ±i}.
    pub fn from_values(values: &[GaussianInt]) -> Result<Self> {
        let exponents = values
            .iter()
            .enumerate()
            .map(|(position, &v)| {
                (0u8..4)
                    .find(|&e| GaussianInt::unit(e) == v)
                    .ok_or(Error::InvalidValue { value: v.re + 2 * v.im, position })
            })
            .collect::<Result<Vec<u8>>>()?;
        QuaternarySeq::new(exponents)
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn value(&self, k: usize) -> GaussianInt {
        GaussianInt::unit(self.exponents[k % self.exponents.len()])
    }

    pub fn values(&self) -> Vec<GaussianInt> {
        self.exponents.iter().map(|&e| GaussianInt::unit(e)).collect()
    }

    /// Multiplication of every entry by `i^e`.
    pub fn times_unit(&self, e: u8) -> QuaternarySeq {
        QuaternarySeq { exponents: self.exponents.iter().map(|&x| (x + e) & 3).collect() }
    }

    pub fn conjugate(&self) -> QuaternarySeq {
        QuaternarySeq { exponents: self.exponents.iter().map(|&x| (4 - x) & 3).collect() }
    }

    /// The sequence k -> f(k + s).
    pub fn shifted(&self, s: usize) -> QuaternarySeq {
        let n = self.exponents.len();
        QuaternarySeq { exponents: (0..n).map(|k| self.exponents[(k + s) % n]).collect() }
    }
}

impl UnitSequence for QuaternarySeq {
    fn len(&self) -> usize {
        self.exponents.len()
    }

    fn exponent(&self, k: usize) -> u8 {
        self.exponents[k % self.exponents.len()]
    }
}

impl FromStr for QuaternarySeq {
    type Err = Error;

    /// Alphabet: `+` = 1, `-` = −1, `i` = i, `j` = −i.
    fn from_str(s: &str) -> Result<Self> {
        let exponents = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '+' => Ok(0),
                'i' => Ok(1),
                '-' => Ok(2),
                'j' => Ok(3),
                symbol => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<u8>>>()?;
        QuaternarySeq::new(exponents)
    }
}

impl fmt::Display for QuaternarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.exponents {
            f.write_str(["+", "i", "-", "j"][e as usize])?;
        }
        Ok(())
    }
}

/// R(w) = Σ_k φ(k)·conj(φ(k+w)), indices mod n.
pub fn autocorrelation_at<S: UnitSequence + ?Sized>(s: &S, w: usize) -> GaussianInt {
    let n = s.len();
    // tally of the product exponents e_k - e_{k+w} mod 4
    let mut tally = [0i64; 4];
    for k in 0..n {
        let d = (4 + s.exponent(k) - s.exponent(k + w)) & 3;
        tally[d as usize] += 1;
    }
    GaussianInt::new(tally[0] - tally[2], tally[1] - tally[3])
}

pub fn autocorrelation_spectrum<S: UnitSequence + ?Sized>(s: &S) -> Vec<GaussianInt> {
    (0..s.len()).map(|w| autocorrelation_at(s, w)).collect()
}

/// Real-valued periodic autocorrelation of a binary sequence.
pub fn binary_autocorrelation(phi: &BinarySeq) -> Vec<i64> {
    let v = phi.values();
    let n = v.len();
    (0..n).map(|w| (0..n).map(|k| (v[k] * v[(k + w) % n]) as i64).sum()).collect()
}

/// R_{a,b}(w) = Σ_k a(k)·b(k+w).
pub fn cross_correlation_spectrum(a: &BinarySeq, b: &BinarySeq) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let (a, b) = (a.values(), b.values());
    let n = a.len();
    Ok((0..n).map(|w| (0..n).map(|k| (a[k] * b[(k + w) % n]) as i64).sum()).collect())
}

/// Negaperiodic (odd) autocorrelation: Σ_k (−1)^⌊(k+w)/n⌋ φ(k) φ((k+w) mod n).
pub fn odd_autocorrelation_spectrum(phi: &BinarySeq) -> Vec<i64> {
    let v = phi.values();
    let n = v.len();
    (0..n)
        .map(|w| {
            (0..n)
                .map(|k| {
                    let p = (v[k] * v[(k + w) % n]) as i64;
                    if k + w >= n {
                        -p
                    } else {
                        p
                    }
                })
                .sum()
        })
        .collect()
}

/// |R_f(w)| = 1 at every nonzero shift of an odd-length quaternary sequence.
pub fn is_oqs(f: &QuaternarySeq) -> Result<bool> {
    let m = f.len();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "sequence length", value: m });
    }
    // R(m - w) = conj R(w), so half the shifts decide it
    for w in 1..=(m / 2) {
        let r = autocorrelation_at(f, w);
        if r.norm() != 1 {
            return Ok(false);
        }
        assert!(r.is_real(), "OQS with a non-real correlation value {r} at shift {w}");
    }
    Ok(true)
}

/// Optimal periodic autocorrelation of a binary sequence, by length mod 4.
pub fn is_optimal_binary(phi: &BinarySeq) -> bool {
    let n = phi.len() as i64;
    let allowed: &[i64] = match n % 4 {
        0 => &[0, 4, -4],
        1 => &[1, -3],
        2 => &[2, -2],
        _ => &[-1],
    };
    binary_autocorrelation(phi).iter().skip(1).all(|r| allowed.contains(r))
}

/// d_φ(x) = |N ∩ (x + N)| with N the set where φ = −1.
pub fn difference_counts_of_support(group: &CyclicProduct, phi: &[i8], x: usize) -> Result<usize> {
    if phi.len() != group.order() {
        return Err(Error::LengthMismatch { left: phi.len(), right: group.order() });
    }
    if let Some((position, &v)) = phi.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
        return Err(Error::InvalidValue { value: v as i64, position });
    }
    // a ∈ x + N  ⟺  a - x ∈ N
    let minus_x = group.neg(x);
    Ok((0..phi.len()).filter(|&a| phi[a] == -1 && phi[group.add(a, minus_x)] == -1).count())
}

/// Tabulated lower bound on max_{0<w<n} |R(w)| for binary sequences.
pub fn binary_bound(n: usize) -> i64 {
    match n % 4 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// Tabulated lower bound on max_{0<w<n} |R(w)| for quaternary sequences.
pub fn quaternary_bound(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        0
    } else {
        1
    }
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

    fn reals(v: &[i64]) -> Vec<GaussianInt> {
        v.iter().map(|&x| GaussianInt::real(x)).collect()
    }

    // complex arithmetic on explicit values, independent of the exponent tally
    fn naive_autocorrelation(values: &[GaussianInt]) -> Vec<GaussianInt> {
        let n = values.len();
        (0..n).map(|w| (0..n).fold(GaussianInt::ZERO, |acc, k| acc + values[k] * values[(k + w) % n].conj())).collect()
    }

    #[test]
    fn spectra_of_known_examples() {
        assert_eq!(autocorrelation_spectrum(&q("+i+")), reals(&[3, 1, 1]));
        assert_eq!(autocorrelation_spectrum(&q("+-+++")), reals(&[5, 1, 1, 1, 1]));
        assert_eq!(autocorrelation_spectrum(&q("-+i+j+i+-")), reals(&[9, -1, -1, -1, 1, 1, -1, -1, -1]));
        assert_eq!(autocorrelation_spectrum(&q("++++")), reals(&[4, 4, 4, 4]));
    }

    #[test]
    fn spectrum_matches_naive_complex_sum() {
        for s in ["ij-+", "i", "+-ij-+j", "jjji+"] {
            let f = q(s);
            assert_eq!(autocorrelation_spectrum(&f), naive_autocorrelation(&f.values()));
        }
    }

    #[test]
    fn binary_spectrum_is_real() {
        let phi = b("+--+-++");
        let spec = autocorrelation_spectrum(&phi);
        assert!(spec.iter().all(|r| r.is_real()));
        assert_eq!(spec.iter().map(|r| r.re).collect::<Vec<_>>(), binary_autocorrelation(&phi));
        assert_eq!(spec[0], GaussianInt::real(7));
    }

    #[test]
    fn cross_correlation_examples() {
        assert_eq!(cross_correlation_spectrum(&b("++-"), &b("+-+")).unwrap(), vec![-1, -1, 3]);
        let a = b("+-++-");
        assert_eq!(cross_correlation_spectrum(&a, &a).unwrap(), binary_autocorrelation(&a));
        let ones = BinarySeq::ones(5).unwrap();
        assert!(cross_correlation_spectrum(&ones, &a).unwrap().iter().all(|&r| r == 1));
        assert!(matches!(cross_correlation_spectrum(&b("++"), &b("+++")), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn odd_autocorrelation_examples() {
        assert_eq!(odd_autocorrelation_spectrum(&b("++")), vec![2, 0]);
        let gobs = odd_autocorrelation_spectrum(&b("++---+"));
        assert_eq!(gobs[0], 6);
        assert!(gobs[1..].iter().all(|r| r.abs() <= 2));
    }

    #[test]
    fn oqs_examples() {
        assert!(is_oqs(&q("+i+")).unwrap());
        assert!(!is_oqs(&q("+++")).unwrap());
        assert!(is_oqs(&q("+-+++")).unwrap());
        assert!(is_oqs(&q("-+i+j+i+-")).unwrap());
        assert!(matches!(is_oqs(&q("+i")), Err(Error::NotOdd { .. })));
    }

    #[test]
    fn optimal_binary_examples() {
        assert!(is_optimal_binary(&b("+++-")));
        assert!(!is_optimal_binary(&b("+++++")));
        assert!(is_optimal_binary(&b("++-")));
    }

    #[test]
    fn support_difference_examples() {
        let g = CyclicProduct::cyclic(3).unwrap();
        assert_eq!(difference_counts_of_support(&g, &[1, -1, -1], 1).unwrap(), 1);
        assert_eq!(difference_counts_of_support(&g, &[1, -1, -1], 0).unwrap(), 2);
        assert_eq!(difference_counts_of_support(&g, &[1, 1, 1], 2).unwrap(), 0);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(q("+i-j").exponents(), &[0, 1, 2, 3]);
        assert_eq!(q("+i-j").to_string(), "+i-j");
        assert_eq!(b("+--").values(), &[1, -1, -1]);
        assert!(matches!("+x".parse::<QuaternarySeq>(), Err(Error::InvalidSymbol { symbol: 'x', position: 1 })));
        assert!(matches!("+i".parse::<BinarySeq>(), Err(Error::InvalidSymbol { .. })));
        assert_eq!("".parse::<QuaternarySeq>(), Err(Error::Empty));
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(GaussianInt::new(3, 0).to_string(), "3");
        assert_eq!(GaussianInt::new(1, -2).to_string(), "1-2i");
        assert_eq!(GaussianInt::new(0, 1).to_string(), "0+1i");
    }

    #[test]
    fn from_values_round_trip() {
        let f = q("ij+-");
        assert_eq!(QuaternarySeq::from_values(&f.values()).unwrap(), f);
        assert!(QuaternarySeq::from_values(&[GaussianInt::new(1, 1)]).is_err());
    }
}
