#![allow(dead_code)]

use optseq::arrays::expand;
use optseq::asds::SubsetPair;
use optseq::seqcore::{
    autocorrelation_spectrum, binary_autocorrelation, cross_correlation_spectrum, GaussianInt, QuaternarySeq,
};
use optseq::transforms::quat_to_array;
use optseq::BinarySeq;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> QuaternarySeq {
    s.parse().unwrap()
}

pub fn b(s: &str) -> BinarySeq {
    s.parse().unwrap()
}

/// Every quaternary sequence of length m, in base-4 order with f(0) most significant.
pub fn all_quaternary(m: usize) -> impl Iterator<Item = QuaternarySeq> {
    (0..1u64 << (2 * m)).map(move |code| {
        let exps = (0..m).map(|k| ((code >> (2 * (m - 1 - k))) & 3) as u8).collect();
        QuaternarySeq::new(exps).unwrap()
    })
}

pub fn all_binary(n: usize) -> impl Iterator<Item = BinarySeq> {
    (0..1u64 << n)
        .map(move |code| BinarySeq::new((0..n).map(|k| if code >> k & 1 == 1 { -1 } else { 1 }).collect()).unwrap())
}

pub fn random_quaternary(rng: &mut ChaCha8Rng, m: usize) -> QuaternarySeq {
    QuaternarySeq::new((0..m).map(|_| rng.random_range(0..4u8)).collect()).unwrap()
}

pub fn random_binary_values(rng: &mut ChaCha8Rng, n: usize) -> Vec<i8> {
    (0..n).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect()
}

pub fn random_subset(rng: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    (0..m).filter(|_| rng.random::<bool>()).collect()
}

pub fn random_pair(rng: &mut ChaCha8Rng, m: usize) -> SubsetPair {
    SubsetPair::new(m, &random_subset(rng, m), &random_subset(rng, m)).unwrap()
}

/// Every pair (B, D) of subsets of Z_m.
pub fn all_pairs(m: usize) -> impl Iterator<Item = SubsetPair> {
    (0..1u64 << (2 * m)).map(move |mask| {
        let b: Vec<usize> = (0..m).filter(|&x| mask >> x & 1 == 1).collect();
        let d: Vec<usize> = (0..m).filter(|&x| mask >> (m + x) & 1 == 1).collect();
        SubsetPair::new(m, &b, &d).unwrap()
    })
}

/// Σ_k f(k)·conj(f(k+w)) by direct complex multiplication.
pub fn naive_autocorrelation(values: &[GaussianInt], w: usize) -> GaussianInt {
    let n = values.len();
    (0..n).fold(GaussianInt::ZERO, |acc, k| acc + values[k] * values[(k + w) % n].conj())
}

pub fn naive_is_oqs(f: &QuaternarySeq) -> bool {
    let v = f.values();
    (1..v.len()).all(|w| naive_autocorrelation(&v, w).norm() == 1)
}

/// The five verdicts on f: OQS, GOBA of its Gray array, GOBS of the length-2m
/// sequence, quasi-orthogonality of λ∂φ on the normalized array, and the ASDS
/// bridge with symmetry.
pub fn five_verdicts(f: &QuaternarySeq) -> [bool; 5] {
    use optseq::arrays::{is_goba, is_gobs};
    use optseq::asds::oqs_asds_report;
    use optseq::cocycles::{cocycle_from_array, is_quasi_orthogonal};
    use optseq::seqcore::is_oqs;
    use optseq::transforms::{array_to_sequence, quat_to_array};

    let rows = quat_to_array(f);
    let (normalized, _) = rows.normalized();
    [
        is_oqs(f).unwrap(),
        is_goba(&rows.to_array(), &[true, false]).unwrap(),
        is_gobs(&array_to_sequence(&rows).unwrap()).unwrap(),
        is_quasi_orthogonal(&cocycle_from_array(&normalized).unwrap()),
        oqs_asds_report(f).unwrap().verdict(),
    ]
}

/// Number of sequences whose five verdicts disagree, and the number of OQS.
pub fn equivalence_census(m: usize) -> (usize, usize) {
    let mut disagreements = 0;
    let mut oqs = 0;
    for f in all_quaternary(m) {
        let v = five_verdicts(&f);
        if v.iter().any(|&x| x != v[0]) {
            disagreements += 1;
        }
        oqs += v[0] as usize;
    }
    (disagreements, oqs)
}

/// Over every λ·∏∂_j^{k_j}: quasi-orthogonality against the extracted-pair
/// verdict. Returns (disagreements, number quasi-orthogonal).
pub fn cocycle_census(m: usize) -> (usize, usize) {
    use optseq::asds::asds_from_cocycle;
    use optseq::cocycles::{is_quasi_orthogonal, Cocycle};

    let mut disagreements = 0;
    let mut qo = 0;
    for mask in 0..1u64 << (2 * m - 2) {
        let psi = Cocycle::from_mask(m, true, mask).unwrap();
        let verdict = is_quasi_orthogonal(&psi);
        if verdict != asds_from_cocycle(&psi).unwrap().bridge {
            disagreements += 1;
        }
        qo += verdict as usize;
    }
    (disagreements, qo)
}

/// R_f(w) = (R'(0,w) − i·R'(1,w))/4 on the expansion of the Gray array with z = (1,0).
pub fn expansion_identity_holds(f: &QuaternarySeq) -> bool {
    let m = f.len();
    let e = expand(&quat_to_array(f).to_array(), &[true, false]).unwrap();
    let r = e.autocorrelation();
    let at = |a: usize, w: usize| r[e.group().index(&[a, w])];
    let spectrum = autocorrelation_spectrum(f);
    (0..m).all(|w| {
        let (x, y) = (at(0, w), at(1, w));
        x % 4 == 0 && y % 4 == 0 && spectrum[w] == GaussianInt::new(x / 4, -y / 4)
    })
}

/// 2R_f(w) = R_{φ(1,−)}(w) + R_{φ(0,−)}(w) + i(R_{φ(1,−),φ(0,−)}(w) − R_{φ(0,−),φ(1,−)}(w)).
pub fn decomposition_holds(f: &QuaternarySeq) -> bool {
    let p = quat_to_array(f);
    let r0 = binary_autocorrelation(p.row0());
    let r1 = binary_autocorrelation(p.row1());
    let c10 = cross_correlation_spectrum(p.row1(), p.row0()).unwrap();
    let c01 = cross_correlation_spectrum(p.row0(), p.row1()).unwrap();
    let spectrum = autocorrelation_spectrum(f);
    (0..f.len()).all(|w| {
        let re2 = r1[w] + r0[w];
        let im2 = c10[w] - c01[w];
        re2 % 2 == 0 && im2 % 2 == 0 && spectrum[w] == GaussianInt::new(re2 / 2, im2 / 2)
    })
}
