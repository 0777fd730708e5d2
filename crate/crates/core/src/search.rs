//! Exhaustive enumeration of OQS, ASDS with given parameters, and the
//! correlation optimum at small lengths.
//!
//! Quaternary candidates are base-4 codes with f(0) as the most significant
//! digit. All results are merged and sorted, so output never depends on the
//! number of worker threads.

use itertools::Itertools;
use rayon::prelude::*;

use crate::asds::{classify, difference_counts, params_with_mu, symmetric_difference_check, AsdsParams, SubsetPair};
use crate::error::{Error, Result};
use crate::seqcore::{autocorrelation_spectrum, is_oqs, GaussianInt, QuaternarySeq};

/// Largest odd length searched exhaustively for OQS.
pub const MAX_OQS_M: usize = 13;
pub const DEFAULT_OQS_BUDGET: u128 = 1 << 26; // 4^13
pub const DEFAULT_ASDS_BUDGET: u128 = 1_000_000_000;
pub const DEFAULT_OPTIMUM_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SearchConfig {
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    /// Overrides the default candidate budget of the search.
    pub budget: Option<u128>,
}

impl SearchConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchConfig { jobs: Some(jobs), budget: None }
    }

    fn run<T: Send>(&self, op: impl FnOnce() -> T + Send) -> Result<T> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = self.jobs {
            if n == 0 {
                return Err(Error::Usage("--jobs must be at least 1".into()));
            }
            builder = builder.num_threads(n);
        }
        let pool = builder.build().map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        Ok(pool.install(op))
    }

    fn check_budget(&self, candidates: u128, default: u128) -> Result<()> {
        let budget = self.budget.unwrap_or(default);
        if candidates > budget {
            Err(Error::BudgetExceeded { candidates, budget })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchKind {
    Oqs,
    Asds,
    Optimum,
}

/// A fully described search request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchTask {
    pub kind: SearchKind,
    pub m: usize,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub mu: Option<usize>,
    pub canonicalize: bool,
    pub symmetric_only: bool,
    pub alphabet: Alphabet,
    pub config: SearchConfig,
}

impl SearchTask {
    pub fn oqs(m: usize, canonicalize: bool) -> Self {
        SearchTask {
            kind: SearchKind::Oqs,
            m,
            k1: None,
            k2: None,
            mu: None,
            canonicalize,
            symmetric_only: false,
            alphabet: Alphabet::Quaternary,
            config: SearchConfig::default(),
        }
    }

    pub fn asds(m: usize, k1: usize, k2: usize, mu: Option<usize>, symmetric_only: bool) -> Self {
        SearchTask {
            kind: SearchKind::Asds,
            k1: Some(k1),
            k2: Some(k2),
            mu,
            symmetric_only,
            ..SearchTask::oqs(m, false)
        }
    }

    pub fn optimum(n: usize, alphabet: Alphabet) -> Self {
        SearchTask { kind: SearchKind::Optimum, alphabet, ..SearchTask::oqs(n, false) }
    }

    /// Records for OQS/ASDS tasks; an optimum task yields no records, use [`brute_force_optimum_with`].
    pub fn run(&self) -> Result<Vec<FoundRecord>> {
        match self.kind {
            SearchKind::Oqs => search_oqs_with(self.m, self.canonicalize, &self.config),
            SearchKind::Asds => {
                let (k1, k2) =
                    self.k1.zip(self.k2).ok_or_else(|| Error::Usage("ASDS search needs k1 and k2".into()))?;
                search_asds_with(self.m, k1, k2, self.mu, self.symmetric_only, &self.config)
            }
            SearchKind::Optimum => Ok(Vec::new()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoundObject {
    Sequence(QuaternarySeq),
    Pair(SubsetPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Spectrum(Vec<GaussianInt>),
    /// Δ(a) for a ∈ Z_m.
    Differences(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundRecord {
    pub object: FoundObject,
    pub params: Option<AsdsParams>,
    pub evidence: Evidence,
    /// Least code in its class under units, shifts and conjugation.
    pub canonical: bool,
}

impl FoundRecord {
    /// Recomputes the predicate and evidence from the object alone.
    pub fn reverify(&self) -> bool {
        match (&self.object, &self.evidence) {
            (FoundObject::Sequence(f), Evidence::Spectrum(s)) => {
                is_oqs(f).unwrap_or(false)
                    && autocorrelation_spectrum(f) == *s
                    && self.canonical == (canonical_code(f) == encode(f))
            }
            (FoundObject::Pair(p), Evidence::Differences(d)) => {
                difference_counts(p) == *d
                    && match self.params {
                        Some(params) => params_with_mu(p, params.mu) == Some(params),
                        None => false,
                    }
            }
            _ => false,
        }
    }
}

/// Base-4 code with f(0) most significant.
pub fn encode(f: &QuaternarySeq) -> u64 {
    f.exponents().iter().fold(0u64, |acc, &e| acc * 4 + e as u64)
}

pub fn decode(code: u64, m: usize) -> QuaternarySeq {
    let mut exps = vec![0u8; m];
    let mut c = code;
    for slot in exps.iter_mut().rev() {
        *slot = (c & 3) as u8;
        c >>= 2;
    }
    QuaternarySeq::new(exps).expect("m ≥ 1")
}

/// Least code over {i^e · f(k + s), i^e · conj f(k + s)}. Negating the second
/// Gray row sends f to −i·conj f, so it lies in this group already.
pub fn canonical_code(f: &QuaternarySeq) -> u64 {
    let m = f.len();
    let exps = f.exponents();
    let mut best = u64::MAX;
    for conj in [false, true] {
        for s in 0..m {
            for unit in 0u8..4 {
                let code = (0..m).fold(0u64, |acc, k| {
                    let e = exps[(k + s) % m];
                    let e = if conj { (4 - e) & 3 } else { e };
                    acc * 4 + ((e + unit) & 3) as u64
                });
                best = best.min(code);
            }
        }
    }
    best
}

/// |R(w)| = 1 for 1 ≤ w ≤ m/2, stopping at the first failing shift.
fn passes_oqs(exps: &[u8]) -> bool {
    let m = exps.len();
    for w in 1..=m / 2 {
        let mut tally = [0i32; 4];
        for k in 0..m {
            let j = if k + w < m { k + w } else { k + w - m };
            tally[((exps[k] + 4 - exps[j]) & 3) as usize] += 1;
        }
        let re = tally[0] - tally[2];
        let im = tally[1] - tally[3];
        if re * re + im * im != 1 {
            return false;
        }
    }
    true
}

/// Every odd-length OQS found by scanning all 4^{m−1} codes with f(0) = 1;
/// the remaining codes are unit multiples. Parallel over fixed prefixes.
fn scan_oqs(m: usize) -> Vec<u64> {
    let free = m - 1;
    let prefix_digits = free.min(4);
    let suffix_digits = free - prefix_digits;
    let suffix_count = 1u64 << (2 * suffix_digits);
    let mut hits: Vec<u64> = (0..1u64 << (2 * prefix_digits))
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut exps = vec![0u8; m];
            for d in 0..prefix_digits {
                exps[1 + d] = ((prefix >> (2 * (prefix_digits - 1 - d))) & 3) as u8;
            }
            let mut out = Vec::new();
            for suffix in 0..suffix_count {
                for d in 0..suffix_digits {
                    exps[1 + prefix_digits + d] = ((suffix >> (2 * (suffix_digits - 1 - d))) & 3) as u8;
                }
                if passes_oqs(&exps) {
                    out.push(exps.iter().fold(0u64, |acc, &e| acc * 4 + e as u64));
                }
            }
            out
        })
        .collect();
    hits.sort_unstable();
    hits
}

fn oqs_record(f: QuaternarySeq) -> FoundRecord {
    let canonical = canonical_code(&f) == encode(&f);
    FoundRecord {
        evidence: Evidence::Spectrum(autocorrelation_spectrum(&f)),
        object: FoundObject::Sequence(f),
        params: None,
        canonical,
    }
}

pub fn search_oqs(m: usize, canonicalize: bool) -> Result<Vec<FoundRecord>> {
    search_oqs_with(m, canonicalize, &SearchConfig::default())
}

pub fn search_oqs_with(m: usize, canonicalize: bool, config: &SearchConfig) -> Result<Vec<FoundRecord>> {
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "m", value: m });
    }
    if m > MAX_OQS_M {
        return Err(Error::IndexOutOfRange { index: m, lo: 1, hi: MAX_OQS_M });
    }
    config.check_budget(1u128 << (2 * m), DEFAULT_OQS_BUDGET)?;
    let base = config.run(|| scan_oqs(m))?;
    let mut codes: Vec<u64> = base
        .iter()
        .flat_map(|&c| {
            // multiplying by i^u adds u to every digit mod 4
            (0u8..4).map(move |u| encode(&decode(c, m).times_unit(u)))
        })
        .collect();
    codes.sort_unstable();
    let records: Vec<FoundRecord> = config.run(|| {
        codes.par_iter().map(|&c| oqs_record(decode(c, m))).filter(|r| !canonicalize || r.canonical).collect()
    })?;
    Ok(records)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn search_asds(
    m: usize,
    k1: usize,
    k2: usize,
    mu: Option<usize>,
    symmetric_only: bool,
) -> Result<Vec<FoundRecord>> {
    search_asds_with(m, k1, k2, mu, symmetric_only, &SearchConfig::default())
}

/// All pairs (B, D) with |B| = k1, |D| = k2 and Δ(a) ∈ {μ, μ+1} for a ≠ 0.
/// With `mu = None` every pair that classifies as an ASDS or SDS is kept,
/// reported with its classified parameters.
pub fn search_asds_with(
    m: usize,
    k1: usize,
    k2: usize,
    mu: Option<usize>,
    symmetric_only: bool,
    config: &SearchConfig,
) -> Result<Vec<FoundRecord>> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if k1 > m || k2 > m {
        return Err(Error::Precondition(format!("subset sizes {k1}, {k2} exceed m = {m}")));
    }
    config.check_budget(binomial(m, k1) * binomial(m, k2), DEFAULT_ASDS_BUDGET)?;
    let bs: Vec<Vec<usize>> = (0..m).combinations(k1).collect();
    let ds: Vec<Vec<usize>> = (0..m).combinations(k2).collect();
    let mut records: Vec<FoundRecord> = config.run(|| {
        bs.par_iter()
            .flat_map_iter(|b| {
                ds.iter().filter_map(move |d| {
                    let pair = SubsetPair::new(m, b, d).expect("combinations are distinct residues");
                    let params = match mu {
                        Some(mu) => params_with_mu(&pair, mu),
                        None => classify(&pair).params(),
                    }?;
                    if symmetric_only && !symmetric_difference_check(&pair) {
                        return None;
                    }
                    Some(FoundRecord {
                        evidence: Evidence::Differences(difference_counts(&pair)),
                        object: FoundObject::Pair(pair),
                        params: Some(params),
                        canonical: true,
                    })
                })
            })
            .collect()
    })?;
    records.sort_by(|a, b| a.object.cmp(&b.object));
    Ok(records)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Binary,
    Quaternary,
}

/// min over all sequences of max_{0<w<n} |R(w)|², exact.
pub fn brute_force_optimum(n: usize, alphabet: Alphabet) -> Result<u64> {
    brute_force_optimum_with(n, alphabet, &SearchConfig::default())
}

pub fn brute_force_optimum_with(n: usize, alphabet: Alphabet, config: &SearchConfig) -> Result<u64> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let q: usize = match alphabet {
        Alphabet::Binary => 2,
        Alphabet::Quaternary => 4,
    };
    let bits = if q == 2 { 1 } else { 2 };
    let candidates = 1u128.checked_shl((bits * n) as u32).unwrap_or(u128::MAX);
    config.check_budget(candidates, DEFAULT_OPTIMUM_BUDGET)?;
    if n == 1 {
        return Ok(0);
    }
    // f(0) fixed: global multiplication by a unit leaves |R| unchanged
    let free = (n - 1) as u32;
    let count = 1u64 << (bits as u32 * free);
    let step = if q == 2 { 2u8 } else { 1u8 };
    let best = config.run(|| {
        (0..count)
            .into_par_iter()
            .fold(
                || u64::MAX,
                |best, code| {
                    let mut exps = vec![0u8; n];
                    for (d, slot) in exps[1..].iter_mut().enumerate() {
                        let digit = (code >> (bits as u32 * (free - 1 - d as u32))) & (q as u64 - 1);
                        *slot = digit as u8 * step;
                    }
                    best.min(max_sidelobe_sq(&exps, best))
                },
            )
            .reduce(|| u64::MAX, u64::min)
    })?;
    Ok(best)
}

/// max_{0<w<n} |R(w)|², abandoning once it reaches `cutoff`.
fn max_sidelobe_sq(exps: &[u8], cutoff: u64) -> u64 {
    let n = exps.len();
    let mut worst = 0u64;
    for w in 1..=n / 2 {
        let mut tally = [0i64; 4];
        for k in 0..n {
            tally[((exps[k] + 4 - exps[(k + w) % n]) & 3) as usize] += 1;
        }
        let re = tally[0] - tally[2];
        let im = tally[1] - tally[3];
        worst = worst.max((re * re + im * im) as u64);
        if worst >= cutoff {
            return worst;
        }
    }
    worst
}

/// The nonnegative integer r with r² = x, if any.
pub fn exact_sqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c.checked_mul(c) == Some(x))
}
