//! Almost supplementary difference sets in Z_m.
//!
//! A pair B, D ⊆ Z_m is a 2-{m; k1, k2; μ; t} ASDS when the combined count
//! Δ(a) of solutions to x − x' ≡ a (x, x' ∈ B) and y − y' ≡ a (y, y' ∈ D)
//! equals μ for t nonzero residues a and μ + 1 for the other m − 1 − t.

use std::fmt;

use crate::cocycles::{is_quasi_orthogonal, Cocycle};
use crate::error::{Error, Result};
use crate::seqcore::{is_oqs, BinarySeq, QuaternarySeq};
use crate::transforms::{array_to_quat, quat_to_array, GrayPair};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetPair {
    m: usize,
    b: Vec<usize>,
    d: Vec<usize>,
}

fn reduce_subset(m: usize, xs: &[usize]) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = xs.iter().map(|&x| x % m).collect();
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateElement { element: w[0], m });
    }
    Ok(out)
}

impl SubsetPair {
    /// Elements are reduced mod m; duplicates after reduction are rejected.
    pub fn new(m: usize, b: &[usize], d: &[usize]) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(SubsetPair { m, b: reduce_subset(m, b)?, d: reduce_subset(m, d)? })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn k1(&self) -> usize {
        self.b.len()
    }

    pub fn k2(&self) -> usize {
        self.d.len()
    }

    pub fn complement_b(&self) -> SubsetPair {
        SubsetPair { m: self.m, b: complement(self.m, &self.b), d: self.d.clone() }
    }

    pub fn complement_d(&self) -> SubsetPair {
        SubsetPair { m: self.m, b: self.b.clone(), d: complement(self.m, &self.d) }
    }

    pub fn complement_both(&self) -> SubsetPair {
        self.complement_b().complement_d()
    }

    /// The Gray rows with −1 exactly on B (row 0) and D (row 1).
    pub fn indicator_rows(&self) -> GrayPair {
        let row = |s: &[usize]| {
            let mut v = vec![1i8; self.m];
            for &x in s {
                v[x] = -1;
            }
            BinarySeq::new(v).expect("m ≥ 1")
        };
        GrayPair::new(row(&self.b), row(&self.d)).expect("rows share m")
    }
}

impl fmt::Display for SubsetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[usize]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "m={} B={{{}}} D={{{}}}", self.m, join(&self.b), join(&self.d))
    }
}

pub fn complement(m: usize, s: &[usize]) -> Vec<usize> {
    (0..m).filter(|x| s.binary_search(x).is_err()).collect()
}

/// Parameters 2-{m; k1, k2; μ; t}. SDS are the case t = m − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AsdsParams {
    pub m: usize,
    pub k1: usize,
    pub k2: usize,
    pub mu: usize,
    pub t: usize,
}

impl AsdsParams {
    pub fn is_sds(&self) -> bool {
        self.t + 1 == self.m
    }

    /// k1(k1−1) + k2(k2−1) = tμ + (m−1−t)(μ+1).
    pub fn satisfies_identity(&self) -> bool {
        let lhs = self.k1 * self.k1.saturating_sub(1) + self.k2 * self.k2.saturating_sub(1);
        self.t < self.m.max(1) && lhs == self.t * self.mu + (self.m - 1 - self.t) * (self.mu + 1)
    }
}

impl fmt::Display for AsdsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{};{},{};{};{}}}", self.m, self.k1, self.k2, self.mu, self.t)
    }
}

/// Δ(a) for every a ∈ Z_m; entry 0 holds the trivial count k1 + k2.
pub fn difference_counts(pair: &SubsetPair) -> Vec<usize> {
    let m = pair.m;
    let mut counts = vec![0usize; m];
    for set in [&pair.b, &pair.d] {
        for &x in set.iter() {
            for &y in set.iter() {
                counts[(x + m - y) % m] += 1;
            }
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Asds(AsdsParams),
    /// Constant Δ; reported with t = m − 1.
    Sds(AsdsParams),
    NotAsds,
}

impl Classification {
    pub fn params(&self) -> Option<AsdsParams> {
        match *self {
            Classification::Asds(p) | Classification::Sds(p) => Some(p),
            Classification::NotAsds => None,
        }
    }
}

pub fn classify(pair: &SubsetPair) -> Classification {
    let counts = difference_counts(pair);
    let nonzero = &counts[1..];
    let (k1, k2, m) = (pair.k1(), pair.k2(), pair.m);
    let (Some(&lo), Some(&hi)) = (nonzero.iter().min(), nonzero.iter().max()) else {
        // m = 1: no nonzero residues
        return Classification::Sds(AsdsParams { m, k1, k2, mu: 0, t: 0 });
    };
    if lo == hi {
        Classification::Sds(AsdsParams { m, k1, k2, mu: lo, t: m - 1 })
    } else if hi == lo + 1 {
        let t = nonzero.iter().filter(|&&c| c == lo).count();
        Classification::Asds(AsdsParams { m, k1, k2, mu: lo, t })
    } else {
        Classification::NotAsds
    }
}

/// Parameters of the pair read with a prescribed μ (Δ ∈ {μ, μ+1} everywhere),
/// which also covers constant Δ = μ + 1 with t = 0.
pub fn params_with_mu(pair: &SubsetPair, mu: usize) -> Option<AsdsParams> {
    let counts = difference_counts(pair);
    if counts[1..].iter().all(|&c| c == mu || c == mu + 1) {
        let t = counts[1..].iter().filter(|&&c| c == mu).count();
        Some(AsdsParams { m: pair.m, k1: pair.k1(), k2: pair.k2(), mu, t })
    } else {
        None
    }
}

/// The multiset {x − y : x ∈ B, y ∈ D} is closed under negation.
pub fn symmetric_difference_check(pair: &SubsetPair) -> bool {
    let m = pair.m;
    let mut counts = vec![0usize; m];
    for &x in &pair.b {
        for &y in &pair.d {
            counts[(x + m - y) % m] += 1;
        }
    }
    (1..m).all(|c| counts[c] == counts[m - c])
}

/// The m x m circulant with entry (i, j) = 1 − 2χ_S(j − i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantPM {
    m: usize,
    entries: Vec<i64>,
}

impl CirculantPM {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.m + j]
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::LengthMismatch { left: m, right: r.len() });
        }
        Ok(CirculantPM { m, entries: rows.concat() })
    }

    pub fn is_circulant(&self) -> bool {
        let m = self.m;
        (0..m).all(|i| (0..m).all(|j| self.get(i, j) == self.get(0, (j + m - i) % m)))
    }

    pub fn is_pm_one(&self) -> bool {
        self.entries.iter().all(|&v| v == 1 || v == -1)
    }

    /// Number of −1 entries in row i.
    pub fn negatives_in_row(&self, i: usize) -> usize {
        (0..self.m).filter(|&j| self.get(i, j) == -1).count()
    }

    /// self · otherᵀ.
    pub fn times_transpose(&self, other: &CirculantPM) -> Vec<Vec<i64>> {
        let m = self.m;
        (0..m).map(|i| (0..m).map(|j| (0..m).map(|l| self.get(i, l) * other.get(j, l)).sum()).collect()).collect()
    }
}

pub fn circulant(m: usize, s: &[usize]) -> CirculantPM {
    let mut chi = vec![false; m];
    for &x in s {
        chi[x % m] = true;
    }
    let entries = (0..m)
        .flat_map(|i| {
            let chi = &chi;
            (0..m).map(move |j| if chi[(j + m - i) % m] { -1 } else { 1 })
        })
        .collect();
    CirculantPM { m, entries }
}

fn gram_sum(bc: &CirculantPM, dc: &CirculantPM) -> Vec<Vec<i64>> {
    let bb = bc.times_transpose(bc);
    let dd = dc.times_transpose(dc);
    bb.iter().zip(&dd).map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a + b).collect()).collect()
}

/// Compares B^c(B^c)ᵀ + D^c(D^c)ᵀ entry by entry with the two-case formula:
/// 2m on the diagonal, 2m − 4(k+r−μ) where Δ(j−i) = μ, 2m − 4(k+r−μ−1) elsewhere.
pub fn gram_check(pair: &SubsetPair, params: &AsdsParams) -> Result<bool> {
    if params.m != pair.m || params.k1 != pair.k1() || params.k2 != pair.k2() {
        return Err(Error::Inconsistent(format!("parameters {params} do not describe {pair}")));
    }
    let gram = gram_sum(&circulant(pair.m, &pair.b), &circulant(pair.m, &pair.d));
    Ok(gram_matches(&gram, pair, params))
}

fn gram_matches(gram: &[Vec<i64>], pair: &SubsetPair, params: &AsdsParams) -> bool {
    let m = pair.m;
    let counts = difference_counts(pair);
    let in_a: Vec<bool> = counts.iter().map(|&c| c == params.mu).collect();
    if (1..m).filter(|&a| in_a[a]).count() != params.t {
        return false;
    }
    let kr = (params.k1 + params.k2) as i64;
    let mu = params.mu as i64;
    let two_m = 2 * m as i64;
    (0..m).all(|i| {
        (0..m).all(|j| {
            let expected = if i == j {
                two_m
            } else if in_a[(j + m - i) % m] {
                two_m - 4 * (kr - mu)
            } else {
                two_m - 4 * (kr - mu - 1)
            };
            gram[i][j] == expected
        })
    })
}

/// Reads an ASDS back from two circulant ±1 matrices through their Gram sum.
/// `Ok(None)` when the Gram sum is not of the two-valued form.
pub fn gram_to_asds(bc: &CirculantPM, dc: &CirculantPM) -> Result<Option<(SubsetPair, AsdsParams)>> {
    let m = bc.m();
    if dc.m() != m {
        return Err(Error::LengthMismatch { left: m, right: dc.m() });
    }
    for c in [bc, dc] {
        if !c.is_pm_one() || !c.is_circulant() {
            return Err(Error::Inconsistent("expected circulant ±1 matrices".into()));
        }
    }
    let (k, r) = (bc.negatives_in_row(0), dc.negatives_in_row(0));
    let gram = gram_sum(bc, dc);
    if (0..m).any(|i| gram[i][i] != 2 * m as i64) {
        return Ok(None);
    }
    // inner product of rows i, j of [B^c | D^c] is 2m − 4(k + r) + 4s
    let mut s_values = Vec::with_capacity(m.saturating_sub(1));
    for &g in &gram[0][1..] {
        let num = g - 2 * m as i64 + 4 * (k + r) as i64;
        if num < 0 || num % 4 != 0 {
            return Ok(None);
        }
        s_values.push((num / 4) as usize);
    }
    let first_row = |c: &CirculantPM| (0..m).filter(|&j| c.get(0, j) == -1).collect::<Vec<_>>();
    let pair = SubsetPair::new(m, &first_row(bc), &first_row(dc))?;
    let mu = s_values.iter().copied().min().unwrap_or(0);
    if s_values.iter().any(|&s| s > mu + 1) {
        return Ok(None);
    }
    let params = if s_values.iter().all(|&s| s == mu) {
        AsdsParams { m, k1: k, k2: r, mu, t: m - 1 }
    } else {
        let t = s_values.iter().filter(|&&s| s == mu).count();
        AsdsParams { m, k1: k, k2: r, mu, t }
    };
    if !gram_matches(&gram, &pair, &params) {
        return Ok(None);
    }
    Ok(Some((pair, params)))
}

/// Complement variants (B̄, D), (B, D̄), (B̄, D̄) with their
/// parameters {m; m−k, r; m−2k+μ}, {m; k, m−r; m−2r+μ},
/// {m; m−k, m−r; 2m−2k−2r+μ}; t is unchanged.
pub fn complement_variants(pair: &SubsetPair) -> Result<[(SubsetPair, AsdsParams); 3]> {
    let p = classify(pair).params().ok_or(Error::NotAsds)?;
    let (m, k, r, mu, t) = (p.m, p.k1, p.k2, p.mu, p.t);
    // m − 2k + μ ≥ 0 always: it is the (nonnegative) shifted difference count
    let shift = |base: usize, minus: usize| (base + mu).checked_sub(minus).ok_or(Error::NotAsds);
    Ok([
        (pair.complement_b(), AsdsParams { m, k1: m - k, k2: r, mu: shift(m, 2 * k)?, t }),
        (pair.complement_d(), AsdsParams { m, k1: k, k2: m - r, mu: shift(m, 2 * r)?, t }),
        (pair.complement_both(), AsdsParams { m, k1: m - k, k2: m - r, mu: shift(2 * m, 2 * k + 2 * r)?, t }),
    ])
}

/// Which sets the fixed complement policy replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Complemented {
    None,
    D,
    B,
    Both,
}

impl Complemented {
    pub fn apply(self, pair: &SubsetPair) -> SubsetPair {
        match self {
            Complemented::None => pair.clone(),
            Complemented::D => pair.complement_d(),
            Complemented::B => pair.complement_b(),
            Complemented::Both => pair.complement_both(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Complemented::None => "none",
            Complemented::D => "D",
            Complemented::B => "B",
            Complemented::Both => "B,D",
        }
    }
}

/// Raises |B| + |D| to at least (m+1)/2 by complementing D, else B, else both.
pub fn apply_complement_policy(pair: &SubsetPair) -> (SubsetPair, Complemented) {
    let target = pair.m.div_ceil(2);
    for choice in [Complemented::None, Complemented::D, Complemented::B, Complemented::Both] {
        let candidate = choice.apply(pair);
        if candidate.k1() + candidate.k2() >= target {
            return (candidate, choice);
        }
    }
    unreachable!("complementing both sets always reaches (m+1)/2")
}

/// Δ(a) ∈ {μ, μ+1} for all a ≠ 0 with μ = |B| + |D| − (m+1)/2 taken as a
/// signed integer, and B − D symmetric. This is the exact condition shared by
/// the OQS and quasi-orthogonal cocycle bridges.
pub fn has_bridge_shape(pair: &SubsetPair) -> bool {
    let mu = (pair.k1() + pair.k2()) as i64 - pair.m.div_ceil(2) as i64;
    let counts = difference_counts(pair);
    counts[1..].iter().all(|&c| c as i64 == mu || c as i64 == mu + 1) && symmetric_difference_check(pair)
}

/// Evidence for the OQS ↔ ASDS bridge of one quaternary sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OqsAsdsReport {
    /// Supports of −1 in the Gray rows, before the complement policy.
    pub raw: SubsetPair,
    pub pair: SubsetPair,
    pub complemented: Complemented,
    /// Parameters with μ = |B| + |D| − (m+1)/2, when the pair fits them.
    pub params: Option<AsdsParams>,
    pub symmetric_before: bool,
    pub symmetric_after: bool,
}

impl OqsAsdsReport {
    pub fn verdict(&self) -> bool {
        self.params.is_some() && self.symmetric_after
    }
}

/// Extracts and tests the ASDS of any odd-length quaternary sequence.
pub fn oqs_asds_report(f: &QuaternarySeq) -> Result<OqsAsdsReport> {
    let m = f.len();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "sequence length", value: m });
    }
    let rows = quat_to_array(f);
    let raw = SubsetPair::new(m, &rows.row0().support(), &rows.row1().support())?;
    let (pair, complemented) = apply_complement_policy(&raw);
    let mu = pair.k1() + pair.k2() - m.div_ceil(2);
    Ok(OqsAsdsReport {
        params: params_with_mu(&pair, mu),
        symmetric_before: symmetric_difference_check(&raw),
        symmetric_after: symmetric_difference_check(&pair),
        raw,
        pair,
        complemented,
    })
}

pub fn asds_from_oqs(f: &QuaternarySeq) -> Result<(SubsetPair, AsdsParams)> {
    if !is_oqs(f)? {
        return Err(Error::NotOqs);
    }
    let report = oqs_asds_report(f)?;
    match report.params {
        Some(p) if report.symmetric_after => Ok((report.pair, p)),
        _ => Err(Error::Inconsistent(format!("OQS {f} failed the ASDS bridge"))),
    }
}

/// The quaternary sequence whose Gray rows have −1 exactly on B and D.
pub fn oqs_from_asds(pair: &SubsetPair) -> Result<QuaternarySeq> {
    let m = pair.m;
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "m", value: m });
    }
    let target = m.div_ceil(2);
    let total = pair.k1() + pair.k2();
    if total < target {
        return Err(Error::Precondition(format!("|B| + |D| = {total} is below (m+1)/2 = {target}")));
    }
    let mu = total - target;
    if params_with_mu(pair, mu).is_none() {
        return Err(Error::Precondition(format!("difference counts are not all in {{{mu}, {}}}", mu + 1)));
    }
    if !symmetric_difference_check(pair) {
        return Err(Error::Precondition("the multiset B − D is not symmetric".into()));
    }
    Ok(array_to_quat(&pair.indicator_rows()))
}

/// The pair read from a cocycle λ·∏∂_j^{k_j}, with the bridge verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleAsds {
    pub pair: SubsetPair,
    pub bridge: bool,
}

/// B = {j−1 : 2 ≤ j ≤ m, k_j = 1}, D = {j−m−1 : m+1 ≤ j ≤ 2m−1, k_j = 1}.
pub fn asds_from_cocycle(psi: &Cocycle) -> Result<CocycleAsds> {
    if !psi.lambda_flag() {
        return Err(Error::Precondition("cocycle must contain λ".into()));
    }
    let m = psi.m();
    let deltas = psi.deltas();
    let b: Vec<usize> = deltas.iter().filter(|&&j| j <= m).map(|j| j - 1).collect();
    let d: Vec<usize> = deltas.iter().filter(|&&j| j > m).map(|j| j - m - 1).collect();
    let pair = SubsetPair::new(m, &b, &d)?;
    Ok(CocycleAsds { bridge: has_bridge_shape(&pair), pair })
}

/// λ·∏_{x∈B} ∂_{x+1} ·∏_{y∈D} ∂_{y+m+1}; requires 0 ∉ B and m − 1 ∉ D.
pub fn cocycle_from_asds(pair: &SubsetPair) -> Result<Cocycle> {
    let m = pair.m;
    if pair.b.contains(&0) {
        return Err(Error::Precondition("0 ∈ B".into()));
    }
    if pair.d.contains(&(m - 1)) {
        return Err(Error::Precondition("m − 1 ∈ D".into()));
    }
    let deltas: Vec<usize> = pair.b.iter().map(|x| x + 1).chain(pair.d.iter().map(|y| y + m + 1)).collect();
    Cocycle::new(m, true, &deltas)
}

/// Quasi-orthogonality of a λ-cocycle together with its extracted pair.
pub fn cocycle_bridge(psi: &Cocycle) -> Result<(bool, CocycleAsds)> {
    Ok((is_quasi_orthogonal(psi), asds_from_cocycle(psi)?))
}

/// B^c(D^c)ᵀ is symmetric.
pub fn amicable_check(pair: &SubsetPair) -> Result<bool> {
    if pair.b.is_empty() || pair.d.is_empty() {
        return Err(Error::Precondition("B and D must be nonempty".into()));
    }
    let prod = circulant(pair.m, &pair.b).times_transpose(&circulant(pair.m, &pair.d));
    let m = pair.m;
    Ok((0..m).all(|i| (0..m).all(|j| prod[i][j] == prod[j][i])))
}

/// (m−1)²/2 ≤ (k+r)m − (k²+r²) ≤ (m²−1)/2, compared after doubling.
pub fn size_bounds_check(params: &AsdsParams) -> bool {
    size_bounds_hold(params.m, params.k1, params.k2)
}

/// The size bounds for |B| = k, |D| = r, independent of μ.
pub fn size_bounds_hold(m: usize, k: usize, r: usize) -> bool {
    let (m, k, r) = (m as i64, k as i64, r as i64);
    let middle = 2 * ((k + r) * m - (k * k + r * r));
    (m - 1) * (m - 1) <= middle && middle < m * m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    Remove(usize),
    Add(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationReport {
    pub sds: AsdsParams,
    pub pair: SubsetPair,
    pub result: Classification,
    /// ASDS with t = (m−1)/2 and μ lowered by one (removal) or kept (addition).
    pub expected_asds: bool,
    pub k1_formula: bool,
    pub mu_formula: bool,
}

/// Shrinks or enlarges B of an SDS and checks the resulting ASDS against the
/// parameter constraints k1 = (m+3)/4, μ = (m+3)/16 + (k2²−k2)/(m−1) (removal)
/// and k1 = (m−1)/4, μ = (m−5)/16 + (k2²−k2)/(m−1) (addition).
pub fn sds_perturbation_check(pair: &SubsetPair, change: Perturbation) -> Result<PerturbationReport> {
    let sds = match classify(pair) {
        Classification::Sds(p) => p,
        _ => return Err(Error::Precondition("pair is not an SDS".into())),
    };
    let m = pair.m;
    let mut b = pair.b.clone();
    match change {
        Perturbation::Remove(x) => {
            let pos = b.iter().position(|&y| y == x % m).ok_or_else(|| Error::Precondition(format!("{x} ∉ B")))?;
            b.remove(pos);
        }
        Perturbation::Add(x) => {
            let x = x % m;
            if b.contains(&x) || pair.d.contains(&x) {
                return Err(Error::Precondition(format!("{x} ∈ B ∪ D")));
            }
            b.push(x);
        }
    }
    let new_pair = SubsetPair::new(m, &b, &pair.d)?;
    let result = classify(&new_pair);
    let (mi, k1, k2, mu) = (m as i64, sds.k1 as i64, sds.k2 as i64, sds.mu as i64);
    // μ = c/16 + (k2² − k2)/(m − 1)  ⟺  16(m−1)μ = c(m−1) + 16(k2² − k2)
    let (k1_formula, c, expected_mu) = match change {
        Perturbation::Remove(_) => (4 * k1 == mi + 3, mi + 3, sds.mu.checked_sub(1)),
        Perturbation::Add(_) => (4 * k1 == mi - 1, mi - 5, Some(sds.mu)),
    };
    let mu_formula = mi > 1 && 16 * (mi - 1) * mu == c * (mi - 1) + 16 * (k2 * k2 - k2);
    let expected_asds = matches!(result,
        Classification::Asds(p) if 2 * p.t + 1 == m && Some(p.mu) == expected_mu);
    Ok(PerturbationReport { sds, pair: new_pair, result, expected_asds, k1_formula, mu_formula })
}
