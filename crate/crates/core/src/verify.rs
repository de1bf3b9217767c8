//! Brute-force verification of subspace codes from their generator matrices alone.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cli::format_word;
use crate::construct::{CodeSet, MixParams};
use crate::matq::{hamming, intersection_dim, rank_packed, subspace_distance, Subspace};

/// Codes up to this many words are checked on every pair.
pub const DEFAULT_EXHAUSTIVE_WORDS: usize = 1 << 13;
pub const DEFAULT_SAMPLE_PAIRS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x00c0_ffee_5eed;

const ROW_CHUNK: usize = 64;
const PAIR_CHUNK: usize = 1 << 14;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub exhaustive_words: usize,
    pub sample_pairs: u64,
    pub seed: u64,
    /// Worker cap; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exhaustive_words: DEFAULT_EXHAUSTIVE_WORDS, sample_pairs: DEFAULT_SAMPLE_PAIRS, seed: DEFAULT_SEED, jobs: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Sampled { pairs: u64, seed: u64 },
}

/// A pair of words breaking a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub distance: usize,
    pub required: usize,
    pub u: Subspace,
    pub v: Subspace,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "words {} and {} are at distance {} < {}", self.i, self.j, self.distance, self.required)?;
        write!(f, "{}\n{}", format_word(&self.u), format_word(&self.v))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub words: usize,
    pub pairs_checked: u64,
    pub min_same_dim_distance: Option<usize>,
    pub min_cross_dim_distance: Option<usize>,
    pub dims: BTreeMap<usize, usize>,
    pub duplicates: usize,
    /// Words whose field or ambient space differs from the code's.
    pub malformed: usize,
    /// Pairs with d_H(i(U), i(V)) > d_S(U, V); must stay zero.
    pub hamming_violations: u64,
    pub claimed_d1: usize,
    pub claimed_d0: usize,
    pub sampling: Sampling,
    pub witness: Option<Witness>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn lines(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let dims: Vec<String> = self.dims.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        let sampling = match self.sampling {
            Sampling::Exhaustive => "exhaustive".to_string(),
            Sampling::Sampled { pairs, seed } => format!("sampled pairs={pairs} seed={seed}"),
        };
        let mut out = vec![
            format!("VERIFY verdict {}", if self.pass { "PASS" } else { "FAIL" }),
            format!("VERIFY words {}", self.words),
            format!("VERIFY dims {}", dims.join(",")),
            format!("VERIFY claimed_d1 {}", self.claimed_d1),
            format!("VERIFY claimed_d0 {}", self.claimed_d0),
            format!("VERIFY pairs_checked {}", self.pairs_checked),
            format!("VERIFY min_same_dim_distance {}", opt(self.min_same_dim_distance)),
            format!("VERIFY min_cross_dim_distance {}", opt(self.min_cross_dim_distance)),
            format!("VERIFY duplicates {}", self.duplicates),
            format!("VERIFY malformed {}", self.malformed),
            format!("VERIFY hamming_violations {}", self.hamming_violations),
            format!("VERIFY sampling {sampling}"),
        ];
        if let Some(w) = &self.witness {
            out.push(format!("VERIFY witness {} {} {} {}", w.i, w.j, w.distance, w.required));
        }
        out
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.lines() {
            writeln!(f, "{l}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

struct Engine<'a> {
    words: &'a [Subspace],
    packed: Option<Vec<Vec<u128>>>,
    idents: Vec<Vec<u8>>,
}

impl Engine<'_> {
    fn distance(&self, i: usize, j: usize) -> usize {
        let (u, v) = (&self.words[i], &self.words[j]);
        match &self.packed {
            Some(p) => {
                let (a, b) = (&p[i], &p[j]);
                let mut buf = [0u128; 256];
                let rows = &mut buf[..a.len() + b.len()];
                rows[..a.len()].copy_from_slice(a);
                rows[a.len()..].copy_from_slice(b);
                2 * rank_packed(rows) - a.len() - b.len()
            }
            None => subspace_distance(u, v).expect("checked ambient"),
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Tally {
    pairs: u64,
    same: Option<usize>,
    cross: Option<usize>,
    hamming: u64,
    first_bad: Option<(usize, usize, usize, usize)>,
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        let first_bad = match (self.first_bad, o.first_bad) {
            (Some(a), Some(b)) => Some(if (a.0, a.1) <= (b.0, b.1) { a } else { b }),
            (a, b) => a.or(b),
        };
        Tally {
            pairs: self.pairs + o.pairs,
            same: min_opt(self.same, o.same),
            cross: min_opt(self.cross, o.cross),
            hamming: self.hamming + o.hamming,
            first_bad,
        }
    }

    fn check(&mut self, e: &Engine, i: usize, j: usize, d1: usize, d0: usize) {
        let d = e.distance(i, j);
        self.pairs += 1;
        let same = e.words[i].dim() == e.words[j].dim();
        let required = if same { d1 } else { d0 };
        if same {
            self.same = min_opt(self.same, Some(d));
        } else {
            self.cross = min_opt(self.cross, Some(d));
        }
        if hamming(&e.idents[i], &e.idents[j]) > d {
            self.hamming += 1;
        }
        if d < required && self.first_bad.is_none() {
            self.first_bad = Some((i, j, d, required));
        }
    }
}

fn run<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Checks `d_S >= d1` between words of equal dimension and `d_S >= d0` otherwise.
pub fn verify_mddc(c: &CodeSet, d1: usize, d0: usize, opts: &VerifyOptions) -> VerifyReport {
    let words = c.words();
    let malformed = words.iter().filter(|u| u.ambient() != c.ambient() || u.field() != c.field()).count();
    let mut sorted: Vec<&Subspace> = words.iter().collect();
    sorted.sort();
    let duplicates = sorted.windows(2).filter(|w| w[0] == w[1]).count();
    let exhaustive = words.len() <= opts.exhaustive_words;
    let sampling = if exhaustive { Sampling::Exhaustive } else { Sampling::Sampled { pairs: opts.sample_pairs, seed: opts.seed } };
    let mut report = VerifyReport {
        words: words.len(),
        pairs_checked: 0,
        min_same_dim_distance: None,
        min_cross_dim_distance: None,
        dims: c.dims(),
        duplicates,
        malformed,
        hamming_violations: 0,
        claimed_d1: d1,
        claimed_d0: d0,
        sampling,
        witness: None,
        pass: false,
    };
    if malformed > 0 {
        return report;
    }
    let engine = Engine {
        words,
        packed: words.iter().map(Subspace::packed).collect(),
        idents: words.iter().map(Subspace::ident).collect(),
    };
    let tally = run(opts.jobs, || if exhaustive { exhaustive_pairs(&engine, d1, d0) } else { sampled_pairs(&engine, d1, d0, opts) });
    report.pairs_checked = tally.pairs;
    report.min_same_dim_distance = tally.same;
    report.min_cross_dim_distance = tally.cross;
    report.hamming_violations = tally.hamming;
    report.witness = tally.first_bad.map(|(i, j, distance, required)| Witness {
        i,
        j,
        distance,
        required,
        u: words[i].clone(),
        v: words[j].clone(),
    });
    report.pass = report.witness.is_none() && duplicates == 0 && tally.hamming == 0;
    report
}

/// Rows are processed in fixed chunks so the reported witness is the first violating
/// pair in row order regardless of the number of workers.
fn exhaustive_pairs(e: &Engine, d1: usize, d0: usize) -> Tally {
    let n = e.words.len();
    let mut total = Tally::default();
    for start in (0..n).step_by(ROW_CHUNK) {
        let chunk = (start..(start + ROW_CHUNK).min(n))
            .into_par_iter()
            .map(|i| {
                let mut t = Tally::default();
                for j in i + 1..n {
                    t.check(e, i, j, d1, d0);
                    if t.first_bad.is_some() {
                        break;
                    }
                }
                t
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(chunk);
        if total.first_bad.is_some() {
            break;
        }
    }
    total
}

fn sampled_pairs(e: &Engine, d1: usize, d0: usize, opts: &VerifyOptions) -> Tally {
    let n = e.words.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pairs: Vec<(usize, usize)> = (0..opts.sample_pairs)
        .map(|_| {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            (i.min(j), i.max(j))
        })
        .collect();
    let mut total = Tally::default();
    for chunk in pairs.chunks(PAIR_CHUNK) {
        let t = chunk
            .par_iter()
            .map(|&(i, j)| {
                let mut t = Tally::default();
                t.check(e, i, j, d1, d0);
                t
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(t);
        if total.first_bad.is_some() {
            break;
        }
    }
    total
}

/// Checks `d_S >= claimed_d` on every pair (sampled above the word budget).
pub fn verify_cdc(c: &CodeSet, claimed_d: usize, opts: &VerifyOptions) -> VerifyReport {
    verify_mddc(c, claimed_d, claimed_d, opts)
}

/// Outcome of the intersection test for inserted words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionReport {
    pub words_checked: usize,
    pub failures: usize,
    /// (word index, "K1" or "K2", t or s, intersection dimension) of the first failure.
    pub first_failure: Option<(usize, &'static str, usize, usize)>,
    pub pass: bool,
}

impl InsertionReport {
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("VERIFY insertion_verdict {}", if self.pass { "PASS" } else { "FAIL" }),
            format!("VERIFY insertion_words {}", self.words_checked),
            format!("VERIFY insertion_failures {}", self.failures),
        ];
        if let Some((i, which, t, dim)) = self.first_failure {
            out.push(format!("VERIFY insertion_witness {i} {which} {t} {dim}"));
        }
        out
    }
}

/// For every word B and every t in T1, s in T2: dim(B ∩ K1^(t)) >= δ and
/// dim(B ∩ K2^(s)) >= δ, with K1^(t) = rs(O | I_{n2-k+t}) and K2^(s) = rs(I_{n1-k+s} | O).
pub fn verify_insertion_condition(c: &CodeSet, p: &MixParams) -> InsertionReport {
    let mut rep = InsertionReport { words_checked: c.len(), failures: 0, first_failure: None, pass: true };
    if p.delta == 0 {
        return rep;
    }
    let field = c.field();
    let aux: Vec<(&'static str, usize, Subspace)> = p
        .t1
        .iter()
        .map(|&t| ("K1", t, p.k1(field, t)))
        .chain(p.t2.iter().map(|&s| ("K2", s, p.k2(field, s))))
        .collect();
    let fails: Vec<(usize, &'static str, usize, usize)> = c
        .words()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, b)| {
            aux.iter().filter_map(move |(name, t, k)| {
                let dim = intersection_dim(b, k).unwrap_or(0);
                (dim < p.delta).then_some((i, *name, *t, dim))
            })
        })
        .collect();
    rep.failures = fails.len();
    rep.first_failure = fails.first().copied();
    rep.pass = fails.is_empty();
    rep
}
