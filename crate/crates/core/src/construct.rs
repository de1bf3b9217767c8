//! Subspace code sets and the constructions built on them: lifted MRD codes, the
//! multilevel construction, MDDC assembly, the mixed dimension construction, the
//! three inserting constructions and their multilevel enhancements.
//!
//! Every construction has a counting form returning an exact size. The constructive
//! forms materialize subspaces and are meant for toy parameters.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{param, Error, Result};
use crate::ferrers::{
    build_fdrmc, build_rfdrmc, diagram_from_vector, fdrmc_size, lift, lift_words, split_at_prefix, FdrmcCode,
    FerrersDiagram, MATERIALIZE_LIMIT,
};
use crate::gf::FieldSpec;
use crate::matq::{all_subspaces, embed_tau, hamming, ident_string, subspace_distance, subspace_full_rank, MatF, Subspace};
use crate::qnum::{big, clamp0, delta_mrd, delta_rrmc, gauss_binom, n_q, ratio, BigCount, ConstantsTable};
use crate::rankcode::{gabidulin, subcode_family};

/// A set of subspaces of F_q^n with the distances it claims and where it came from.
#[derive(Clone, Debug)]
pub struct CodeSet {
    field: FieldSpec,
    n: usize,
    words: Vec<Subspace>,
    d1: usize,
    d0: Option<usize>,
    provenance: String,
}

impl CodeSet {
    /// `d1` is the claimed distance between words of equal dimension.
    pub fn new(field: &FieldSpec, n: usize, words: Vec<Subspace>, d1: usize, provenance: impl Into<String>) -> CodeSet {
        CodeSet { field: field.clone(), n, words, d1, d0: None, provenance: provenance.into() }
    }

    /// Claimed distance between words of different dimensions.
    pub fn with_cross_distance(mut self, d0: usize) -> CodeSet {
        self.d0 = Some(d0);
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Subspace] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Subspace> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn claimed_distance(&self) -> usize {
        self.d1
    }

    pub fn cross_distance(&self) -> Option<usize> {
        self.d0
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn set_provenance(&mut self, s: impl Into<String>) {
        self.provenance = s.into();
    }

    /// η_k for every dimension present.
    pub fn dims(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for w in &self.words {
            *out.entry(w.dim()).or_insert(0) += 1;
        }
        out
    }

    pub fn of_dim(&self, k: usize) -> impl Iterator<Item = &Subspace> {
        self.words.iter().filter(move |w| w.dim() == k)
    }

    /// RREF generators of the words of dimension `k`: the SC-representation of that layer.
    pub fn generators(&self, k: usize) -> Vec<MatF> {
        self.of_dim(k).map(Subspace::rref).collect()
    }

    pub fn sort(&mut self) {
        self.words.sort();
    }

    pub fn sorted(mut self) -> CodeSet {
        self.sort();
        self
    }

    /// Number of words equal to an earlier word.
    pub fn duplicates(&self) -> usize {
        let mut v: Vec<&Subspace> = self.words.iter().collect();
        v.sort();
        v.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// Concatenation of several parts over the same field and ambient space. The
    /// claimed distances are the weakest among the parts.
    pub fn union(parts: &[&CodeSet], provenance: impl Into<String>) -> Result<CodeSet> {
        let first = parts.first().ok_or_else(|| Error::Param("union of no codes".into()))?;
        let mut words = Vec::with_capacity(parts.iter().map(|c| c.len()).sum());
        let mut d1 = usize::MAX;
        let mut d0: Option<usize> = None;
        for c in parts {
            if c.n != first.n || c.field != first.field {
                return param(format!(
                    "cannot unite codes in F_{}^{} and F_{}^{}",
                    first.field.order(),
                    first.n,
                    c.field.order(),
                    c.n
                ));
            }
            words.extend(c.words.iter().cloned());
            d1 = d1.min(c.d1);
            if let Some(x) = c.d0 {
                d0 = Some(d0.map_or(x, |y| y.min(x)));
            }
        }
        Ok(CodeSet { field: first.field.clone(), n: first.n, words, d1, d0, provenance: provenance.into() })
    }
}

/// A_q(n, d, {k}) supplier for the counting formulas: `(n, d, k) -> size`.
pub type SizeOracle<'a> = &'a dyn Fn(usize, usize, usize) -> Result<BigCount>;

pub fn table_oracle(table: &ConstantsTable, q: u32) -> impl Fn(usize, usize, usize) -> Result<BigCount> + '_ {
    move |n, d, k| table.a_q(q, n as u32, d as u32, k as u32)
}

fn dl(q: u32, m: usize, n: usize, d: usize) -> BigCount {
    delta_mrd(m as u32, n as u32, d as u32, q)
}

fn dr(q: u32, m: usize, n: usize, d: usize, r: usize) -> BigCount {
    delta_rrmc(m as u32, n as u32, d as u32, r as u32, q)
}

fn l_t(t: &BTreeSet<usize>) -> usize {
    t.iter().zip(t.iter().skip(1)).map(|(a, b)| b - a).min().unwrap_or(0)
}

/// Split parameters shared by the mixed dimension family of constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixParams {
    pub n1: usize,
    pub n2: usize,
    pub k: usize,
    pub delta: usize,
    pub t1: BTreeSet<usize>,
    pub t2: BTreeSet<usize>,
}

impl MixParams {
    pub fn new(n1: usize, n2: usize, k: usize, delta: usize, t1: &[usize], t2: &[usize]) -> Result<MixParams> {
        let p = MixParams {
            n1,
            n2,
            k,
            delta,
            t1: t1.iter().copied().collect(),
            t2: t2.iter().copied().collect(),
        };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        let (n1, n2, k, d) = (self.n1, self.n2, self.k, self.delta);
        let need = |ok: bool, what: String| if ok { Ok(()) } else { param(format!("mixed dimension: {what} fails")) };
        need(n1 >= k, format!("n1 >= k ({n1} >= {k})"))?;
        need(n2 >= k, format!("n2 >= k ({n2} >= {k})"))?;
        need(k >= d && d >= 2, format!("k >= δ >= 2 ({k} >= {d} >= 2)"))?;
        need(!self.t1.is_empty() && !self.t2.is_empty(), "T1, T2 non-empty".into())?;
        need(self.t1.iter().all(|&t| d <= t && t <= k), format!("T1 ⊆ [{d},{k}] (T1 = {:?})", self.t1))?;
        need(l_t(&self.t1) < 2 * d, format!("l_T1 < 2δ ({} < {})", l_t(&self.t1), 2 * d))?;
        let lo = k + d - self.t1_min();
        need(self.t2.iter().all(|&s| lo <= s && s <= k), format!("T2 ⊆ [{lo},{k}] (T2 = {:?})", self.t2))?;
        need(l_t(&self.t2) < 2 * d, format!("l_T2 < 2δ ({} < {})", l_t(&self.t2), 2 * d))
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn t1_min(&self) -> usize {
        *self.t1.iter().next().unwrap()
    }

    pub fn t2_min(&self) -> usize {
        *self.t2.iter().next().unwrap()
    }

    /// μ = 2k - T1^min - T2^min.
    pub fn mu(&self) -> usize {
        2 * self.k - self.t1_min() - self.t2_min()
    }

    /// n1 + T2^min - k: the prefix whose weight is r in the multilevel parts.
    pub fn prefix_len(&self) -> usize {
        self.n1 + self.t2_min() - self.k
    }

    /// n1 + k - T1^min: where the trailing region starts.
    pub fn suffix_start(&self) -> usize {
        self.n1 + self.k - self.t1_min()
    }

    /// rs(O | I_{n2-k+t}).
    pub fn k1(&self, field: &FieldSpec, t: usize) -> Subspace {
        let dim = self.n2 + t - self.k;
        let mut g = MatF::zeros(field, dim, self.n());
        g.place(0, self.n() - dim, &MatF::identity(field, dim));
        subspace_full_rank(&g).expect("identity block")
    }

    /// rs(I_{n1-k+s} | O).
    pub fn k2(&self, field: &FieldSpec, s: usize) -> Subspace {
        let dim = self.n1 + s - self.k;
        let mut g = MatF::zeros(field, dim, self.n());
        g.place(0, 0, &MatF::identity(field, dim));
        subspace_full_rank(&g).expect("identity block")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertKind {
    /// C3 alone.
    Insert,
    /// C3 and C4.
    Insert2,
    /// C3 and the family version of C4.
    Insert2Hat,
}

/// Extra parameters of the inserting constructions. `c` is only read by the
/// family version of C4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertParams {
    pub t1: usize,
    pub t2: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub c: Option<(usize, usize)>,
}

/// Column widths of the inserted blocks.
#[derive(Clone, Copy, Debug)]
struct Widths {
    /// M1 / N1: n1 - k + T2^min - t1.
    x: usize,
    mu: usize,
    /// A2 / N3 / N4: t2 - k + T1^min.
    y: usize,
    /// M3 / M4 / B2: n2 - t2.
    z: usize,
    /// (F2 | M2): n1 - k + T2^min - a1.
    w2: usize,
    /// (F3 | M3): n2 - k + T1^min - a2.
    w3: usize,
}

impl InsertParams {
    pub fn check(&self, p: &MixParams, kind: InsertKind) -> Result<()> {
        let (k, d) = (p.k as i64, p.delta as i64);
        let (t1, t2, a1, a2, b1, b2) =
            (self.t1 as i64, self.t2 as i64, self.a1 as i64, self.a2 as i64, self.b1 as i64, self.b2 as i64);
        let (n1, n2, t1m, t2m) = (p.n1 as i64, p.n2 as i64, p.t1_min() as i64, p.t2_min() as i64);
        let need = |ok: bool, what: String| if ok { Ok(()) } else { param(format!("inserting construction: {what} fails")) };
        need(a1 + a2 == k, format!("a1 + a2 = k ({a1} + {a2} = {k})"))?;
        need(b1 + b2 >= d, format!("b1 + b2 >= δ ({b1} + {b2} >= {d})"))?;
        need(a1 <= t1 && t1 <= n1 - k + t2m - d, format!("a1 <= t1 <= n1-k+T2min-δ ({a1} <= {t1} <= {})", n1 - k + t2m - d))?;
        need(a2 + k - t1m <= t2 && t2 <= n2 - d, format!("a2+k-T1min <= t2 <= n2-δ ({} <= {t2} <= {})", a2 + k - t1m, n2 - d))?;
        need(a1 >= d && a2 >= d, format!("a_i >= δ ({a1}, {a2} >= {d})"))?;
        need((1..=d).contains(&b1) && (1..=d).contains(&b2), format!("1 <= b_i <= δ ({b1}, {b2})"))?;
        match kind {
            InsertKind::Insert => Ok(()),
            InsertKind::Insert2 => {
                need(n2 - t2 >= a2, format!("n2 - t2 >= a2 ({} >= {a2})", n2 - t2))?;
                need(k - t1 >= d, format!("k - t1 >= δ ({} >= {d})", k - t1))
            }
            InsertKind::Insert2Hat => {
                need(n2 - t2 >= a2, format!("n2 - t2 >= a2 ({} >= {a2})", n2 - t2))?;
                need(k - t1 >= 2 * d, format!("k - t1 >= 2δ ({} >= {})", k - t1, 2 * d))?;
                let (c1, c2) = self.c.ok_or_else(|| Error::Param("family version of C4 needs c1, c2".into()))?;
                let (c1, c2) = (c1 as i64, c2 as i64);
                need(c1 + c2 >= d, format!("c1 + c2 >= δ ({c1} + {c2} >= {d})"))?;
                need((1..=d).contains(&c1) && (1..=d).contains(&c2), format!("1 <= c_i <= δ ({c1}, {c2})"))
            }
        }
    }

    fn widths(&self, p: &MixParams) -> Widths {
        Widths {
            x: p.n1 + p.t2_min() - p.k - self.t1,
            mu: p.mu(),
            y: self.t2 + p.t1_min() - p.k,
            z: p.n2 - self.t2,
            w2: p.n1 + p.t2_min() - p.k - self.a1,
            w3: p.n2 + p.t1_min() - p.k - self.a2,
        }
    }
}

// ---------------------------------------------------------------------------
// Counting forms.

fn check_profile(name: &str, eta: &BTreeMap<usize, BigCount>, t: &BTreeSet<usize>) -> Result<()> {
    let keys: BTreeSet<usize> = eta.keys().copied().collect();
    if &keys != t {
        return param(format!("{name} profile has dimensions {keys:?}, expected {t:?}"));
    }
    Ok(())
}

/// |C1|: sum over t in T1 of η_t(X1) Δ(k, n2+t-k, δ)_q.
pub fn c1_count(q: u32, p: &MixParams, eta1: &BTreeMap<usize, BigCount>) -> Result<BigCount> {
    check_profile("X1", eta1, &p.t1)?;
    Ok(eta1.iter().map(|(&t, e)| e * dl(q, p.k, p.n2 + t - p.k, p.delta)).sum())
}

/// |C2|: sum over s in T2 of η_s(X2) Δ(k, n1+s-k, δ; T1^min-δ-(k-s))_q.
pub fn c2_count(q: u32, p: &MixParams, eta2: &BTreeMap<usize, BigCount>) -> Result<BigCount> {
    check_profile("X2", eta2, &p.t2)?;
    let t1m = p.t1_min();
    Ok(eta2
        .iter()
        .map(|(&s, e)| e * dr(q, p.k, p.n1 + s - p.k, p.delta, t1m + s - p.delta - p.k))
        .sum())
}

/// |C1 ∪ C2| of the mixed dimension construction.
pub fn mixed_dimension_count(
    q: u32,
    p: &MixParams,
    eta1: &BTreeMap<usize, BigCount>,
    eta2: &BTreeMap<usize, BigCount>,
) -> Result<BigCount> {
    Ok(c1_count(q, p, eta1)? + c2_count(q, p, eta2)?)
}

/// Number of M1/M4 coset pairs available to C3.
pub fn family_f(q: u32, p: &MixParams, ip: &InsertParams) -> BigCount {
    let w = ip.widths(p);
    let r1 = ratio(&dl(q, ip.a1, w.x, ip.b1), &dl(q, ip.a1, w.x, p.delta));
    let r4 = ratio(&dl(q, ip.a2, w.z, ip.b2), &dl(q, ip.a2, w.z, p.delta));
    r1.min(r4)
}

/// Number of N̂1/N̂4 coset pairs available to the family version of C4.
pub fn family_l(q: u32, p: &MixParams, ip: &InsertParams) -> Result<BigCount> {
    let (c1, c2) = ip.c.ok_or_else(|| Error::Param("family version of C4 needs c1, c2".into()))?;
    let w = ip.widths(p);
    let r1 = ratio(&dl(q, ip.a1, w.x, c1), &dl(q, ip.a1, w.x, p.delta));
    let r4 = ratio(&dl(q, ip.a2, w.y, c2), &dl(q, ip.a2, w.y, p.delta));
    Ok(r1.min(r4))
}

pub fn insert_c3_count(q: u32, p: &MixParams, ip: &InsertParams, aq: SizeOracle) -> Result<BigCount> {
    ip.check(p, InsertKind::Insert)?;
    let (d, w) = (p.delta, ip.widths(p));
    Ok(aq(ip.t1, 2 * d, ip.a1)?
        * dr(q, ip.a1, w.w3, d, ip.a1 - d)
        * dr(q, ip.a2, w.w2, d, ip.a2 - d)
        * aq(w.y, 2 * d, ip.a2)?
        * family_f(q, p, ip)
        * dl(q, ip.a1, w.x, d)
        * dl(q, ip.a2, w.z, d))
}

fn c4_common(q: u32, p: &MixParams, ip: &InsertParams, aq: SizeOracle) -> Result<BigCount> {
    let (d, w) = (p.delta, ip.widths(p));
    Ok(aq(ip.t1, 2 * d, ip.a1)?
        * aq(w.z, 2 * d, ip.a2)?
        * dr(q, ip.a2, w.w2, d, ip.a2 - d)
        * dl(q, ip.a1, w.x, d)
        * dr(q, ip.a1, w.w3, d, ip.a1 - d))
}

fn n4_count(q: u32, p: &MixParams, ip: &InsertParams) -> BigCount {
    dr(q, ip.a2, ip.widths(p).y, p.delta, p.k - ip.t1 - p.delta)
}

pub fn insert_c4_count(q: u32, p: &MixParams, ip: &InsertParams, aq: SizeOracle) -> Result<BigCount> {
    ip.check(p, InsertKind::Insert2)?;
    Ok(c4_common(q, p, ip, aq)? * n4_count(q, p, ip))
}

/// Size of the family version of C4 as [`insert_c4_hat`] builds it: each member
/// contributes its actual number of rank-restricted N4 words.
pub fn insert_c4_hat_built_count(field: &FieldSpec, p: &MixParams, ip: &InsertParams, aq: SizeOracle) -> Result<BigCount> {
    let sizes = c4_hat_member_sizes(field, p, ip)?;
    let members: BigCount = sizes.iter().map(|&s| big(s as u64)).sum();
    Ok(c4_common(field.order(), p, ip, aq)? * members)
}

/// Size of the family version of C4 as the formula states it: the rank-restricted
/// nonlinear cosets are each counted as one word short of the linear one.
pub fn insert_c4_hat_count(q: u32, p: &MixParams, ip: &InsertParams, aq: SizeOracle) -> Result<BigCount> {
    ip.check(p, InsertKind::Insert2Hat)?;
    let l = family_l(q, p, ip)?;
    let n4 = n4_count(q, p, ip);
    Ok(c4_common(q, p, ip, aq)? * (&l * &n4 - (&l - 1u32)))
}

fn mul_mix_shape(p: &MixParams) -> Result<(usize, usize)> {
    let (k, d) = (p.k, p.delta);
    if k < 2 * d {
        return param(format!("multilevel mix family needs k >= 2δ ({k} >= {})", 2 * d));
    }
    if p.prefix_len() < k - d {
        return param(format!("multilevel mix family needs n1+T2min-k >= k-δ ({} >= {})", p.prefix_len(), k - d));
    }
    let theta = (p.n1 + p.t2_min() + 2 * d - 2 * k) / d;
    let zeta = (p.n2 + p.t1_min() - k) / d;
    Ok((theta, zeta))
}

fn mul_ins_shape(p: &MixParams, ip: &InsertParams) -> Result<(usize, usize)> {
    let (k, d) = (p.k, p.delta);
    if k < 2 * d {
        return param(format!("multilevel insert family needs k >= 2δ ({k} >= {})", 2 * d));
    }
    if p.prefix_len() < ip.t1 + d {
        return param(format!("multilevel insert family needs n1+T2min-k-t1 >= δ ({} >= {d})", p.prefix_len() as i64 - ip.t1 as i64));
    }
    if p.n2 + p.t1_min() < 2 * k - d {
        return param(format!("multilevel insert family needs n2+T1min-k >= k-δ ({} >= {})", p.n2 + p.t1_min() - k, k - d));
    }
    let theta = (p.prefix_len() - ip.t1) / d;
    let zeta = (p.n2 + p.t1_min() + 2 * d - 2 * k) / d;
    Ok((theta, zeta))
}

/// |C̃1| of the multilevel enhancement of the mixed dimension construction.
pub fn multilevel_mix_count(q: u32, p: &MixParams) -> Result<BigCount> {
    let (theta, zeta) = mul_mix_shape(p)?;
    let (k, d) = (p.k, p.delta);
    let pre = dr(q, k - d, p.n2 + k - p.t2_min() - d, d, k - 2 * d);
    let mut sum = BigCount::default();
    for i in 1..=theta {
        let lambda = p.n1 + p.t2_min() + 2 * d - 2 * k - i * d;
        for j in 1..=zeta {
            let gamma = p.n2 + p.t1_min() - k - j * d;
            sum += dl(q, lambda, k - d, d) * dl(q, gamma, d, d);
        }
    }
    Ok(pre * sum)
}

/// |C̃2| of the multilevel enhancement of the inserting constructions.
pub fn multilevel_insert_count(q: u32, p: &MixParams, ip: &InsertParams) -> Result<BigCount> {
    let (theta, zeta) = mul_ins_shape(p, ip)?;
    let (k, d) = (p.k, p.delta);
    let mut sum = BigCount::default();
    for i in 1..=theta {
        let lambda = p.prefix_len() - ip.t1 - i * d;
        for j in 1..=zeta {
            let gamma = p.n2 + p.t1_min() + 2 * d - 2 * k - j * d;
            sum += dl(q, lambda, d, d) * dl(q, gamma, k - d, d);
        }
    }
    Ok(sum)
}

/// η_{k-δ+1} = max{N_q(n, δ, k), 0} of the augmented MDDC, with |C0| = S_q(n, 2δ, k).
pub fn mddc_augment_count(q: u32, n: usize, k: usize, delta: usize, table: &ConstantsTable) -> Result<BigCount> {
    if delta < 2 || n <= k || k + 1 < 2 * delta {
        return param(format!("augmented MDDC needs δ >= 2 and n > k >= 2δ-1 (n={n}, k={k}, δ={delta})"));
    }
    Ok(clamp0(&n_q(n as u32, delta as u32, k as u32, q, table)?))
}

// ---------------------------------------------------------------------------
// Identifying vector families.

fn block_vector(len: usize, start: usize, ones: usize) -> Vec<u8> {
    let mut v = vec![0u8; len];
    v[start..start + ones].iter_mut().for_each(|b| *b = 1);
    v
}

/// v_{i,j}: k-δ ones at offset (i-1)δ of the prefix, μ zeros, δ ones at offset
/// (j-1)δ of the trailing region.
pub fn multilevel_family_mix(p: &MixParams) -> Result<Vec<Vec<u8>>> {
    let (theta, zeta) = mul_mix_shape(p)?;
    let (k, d) = (p.k, p.delta);
    let tail = p.n2 + p.t1_min() - k;
    let mut out = Vec::new();
    for i in 1..=theta {
        for j in 1..=zeta {
            let mut v = block_vector(p.prefix_len(), (i - 1) * d, k - d);
            v.extend(std::iter::repeat_n(0, p.mu()));
            v.extend(block_vector(tail, (j - 1) * d, d));
            out.push(v);
        }
    }
    Ok(out)
}

/// ṽ_{i,j}: t1 zeros, δ ones at offset (i-1)δ of the rest of the prefix, μ zeros,
/// k-δ ones at offset (j-1)δ of the trailing region.
pub fn multilevel_family_insert(p: &MixParams, ip: &InsertParams) -> Result<Vec<Vec<u8>>> {
    let (theta, zeta) = mul_ins_shape(p, ip)?;
    let (k, d) = (p.k, p.delta);
    let tail = p.n2 + p.t1_min() - k;
    let mut out = Vec::new();
    for i in 1..=theta {
        for j in 1..=zeta {
            let mut v = vec![0u8; ip.t1];
            v.extend(block_vector(p.prefix_len() - ip.t1, (i - 1) * d, d));
            v.extend(std::iter::repeat_n(0, p.mu()));
            v.extend(block_vector(tail, (j - 1) * d, k - d));
            out.push(v);
        }
    }
    Ok(out)
}

/// Checks an identifying vector set for the multilevel construction.
pub fn check_idents(idents: &[Vec<u8>], d: usize) -> Result<()> {
    let first = idents.first().ok_or_else(|| Error::Param("no identifying vectors".into()))?;
    let k = first.iter().filter(|&&b| b != 0).count();
    for v in idents {
        if v.len() != first.len() {
            return param(format!("identifying vectors of lengths {} and {}", first.len(), v.len()));
        }
        if v.iter().filter(|&&b| b != 0).count() != k {
            return param(format!("{} does not have weight {k}", ident_string(v)));
        }
    }
    for i in 0..idents.len() {
        for j in i + 1..idents.len() {
            let h = hamming(&idents[i], &idents[j]);
            if h < 2 * d {
                return param(format!(
                    "{} and {} are at Hamming distance {h} < {}",
                    ident_string(&idents[i]),
                    ident_string(&idents[j]),
                    2 * d
                ));
            }
        }
    }
    Ok(())
}

/// Size of the RFDRMC [`rfdrmc_builder`] would build on `ident`.
pub fn rfdrmc_size(field: &FieldSpec, ident: &[u8], prefix_len: usize, d: usize) -> Result<BigCount> {
    let s = split_at_prefix(ident, prefix_len)?;
    if s.r < d {
        return param(format!("{} has prefix weight {} < δ = {d}", ident_string(ident), s.r));
    }
    let q = field.order();
    let one = big(1);
    let a = match &s.f1 {
        Some(f) => fdrmc_size(field, f, d)?,
        None => one.clone(),
    };
    let c = match &s.f3 {
        Some(f) => fdrmc_size(field, f, d)?,
        None => one,
    };
    Ok(a * dr(q, s.r, s.f2.cols(), d, s.r - d) * c)
}

// ---------------------------------------------------------------------------
// Constructive forms.

/// FDRMC builder on the full echelon Ferrers diagram of each vector.
pub fn fdrmc_builder(field: &FieldSpec, d: usize) -> impl Fn(&[u8]) -> Result<FdrmcCode> + '_ {
    move |v| build_fdrmc(field, &diagram_from_vector(v)?, d, None)
}

/// RFDRMC builder whose corner is the block over the prefix pivots and the trailing
/// free columns, restricted to rank r - d where r is the prefix weight.
pub fn rfdrmc_builder(field: &FieldSpec, prefix_len: usize, d: usize) -> impl Fn(&[u8]) -> Result<FdrmcCode> + '_ {
    move |v| {
        let s = split_at_prefix(v, prefix_len)?;
        if s.r < d {
            return param(format!("{} has prefix weight {} < δ = {d}", ident_string(v), s.r));
        }
        build_rfdrmc(field, s.f1.as_ref(), &s.f2, s.f3.as_ref(), d, s.r - d)
    }
}

/// {rs(I_k | M)} over the [k x n, d] Gabidulin code.
pub fn lifted_mrd(field: &FieldSpec, k: usize, n: usize, d: usize) -> Result<CodeSet> {
    let code = build_fdrmc(field, &FerrersDiagram::full(k, n), d, None)?;
    let ident: Vec<u8> = (0..k + n).map(|c| (c < k) as u8).collect();
    let mut c = lift(&code, &ident)?;
    c.set_provenance(format!("lifted-mrd q={} k={k} n={n} d={d}", field.order()));
    Ok(c)
}

/// Union of the lifted codes `builder(v)` over a binary constant weight code of
/// minimum distance 2d.
pub fn multilevel(
    field: &FieldSpec,
    idents: &[Vec<u8>],
    d: usize,
    builder: &dyn Fn(&[u8]) -> Result<FdrmcCode>,
) -> Result<CodeSet> {
    check_idents(idents, d)?;
    let n = idents[0].len();
    let mut words = Vec::new();
    for v in idents {
        let code = builder(v)?;
        words.extend(lift_words(field, code.diagram(), code.words(), v)?);
        if words.len() as u64 > MATERIALIZE_LIMIT {
            return Err(Error::Resource("multilevel code too large to materialize; use counting mode".into()));
        }
    }
    Ok(CodeSet::new(field, n, words, 2 * d, format!("multilevel {} vectors d={d}", idents.len())))
}

/// Union of CDCs of dimensions n - iδ, claimed an (n, 2δ, δ) MDDC.
pub fn mddc_union(cdcs: &[CodeSet], delta: usize) -> Result<CodeSet> {
    let first = cdcs.first().ok_or_else(|| Error::Param("MDDC union of no codes".into()))?;
    let n = first.ambient();
    let mut seen = BTreeSet::new();
    for c in cdcs {
        let dims = c.dims();
        if dims.len() > 1 {
            return param(format!("MDDC part is not constant dimension: {dims:?}"));
        }
        if let Some(&k) = dims.keys().next() {
            if k > n || (n - k) % delta != 0 {
                return param(format!("dimension {k} is not of the form {n} - iδ with δ = {delta}"));
            }
            if !seen.insert(k) {
                return param(format!("two MDDC parts of dimension {k}"));
            }
        }
    }
    let parts: Vec<&CodeSet> = cdcs.iter().collect();
    let c = CodeSet::union(&parts, format!("mddc-union δ={delta}"))?;
    Ok(CodeSet { d1: 2 * delta, ..c }.with_cross_distance(delta))
}

/// Greedy (n, 2δ, δ+1) MDDC: C0 plus (k-δ+1)-dimensional subspaces taken in canonical
/// order whenever they keep the distances. Stops at the first maximal set.
pub fn mddc_augment_greedy(c0: &CodeSet, delta: usize) -> Result<CodeSet> {
    let dims = c0.dims();
    let k = match dims.keys().collect::<Vec<_>>()[..] {
        [&k] => k,
        _ => return param("greedy augmentation needs a non-empty constant dimension code"),
    };
    let n = c0.ambient();
    if delta < 2 || n <= k || k + 1 < 2 * delta {
        return param(format!("augmented MDDC needs δ >= 2 and n > k >= 2δ-1 (n={n}, k={k}, δ={delta})"));
    }
    let small = k + 1 - delta;
    let total = gauss_binom(n as u32, small as u32, c0.field().order());
    if total > big(1 << 16) {
        return Err(Error::Resource(format!("{total} candidate subspaces is too many for the greedy search")));
    }
    let mut added: Vec<Subspace> = Vec::new();
    for cand in all_subspaces(c0.field(), n, small) {
        let ok_old = c0.words().iter().all(|u| subspace_distance(u, &cand).unwrap() > delta);
        if ok_old && added.iter().all(|u| subspace_distance(u, &cand).unwrap() >= 2 * delta) {
            added.push(cand);
        }
    }
    let extra = CodeSet::new(c0.field(), n, added, 2 * delta, "");
    let c = CodeSet::union(&[c0, &extra], format!("mddc-greedy δ={delta}"))?;
    Ok(CodeSet { d1: 2 * delta, ..c }.with_cross_distance(delta + 1))
}

/// Standard small CDC used where a construction needs an (n, 2d, {k})_q code: the
/// whole space, a single subspace when no two k-spaces can be that far apart, and
/// otherwise a lifted Gabidulin code.
pub fn small_cdc(field: &FieldSpec, n: usize, d: usize, k: usize) -> Result<CodeSet> {
    if k == 0 || k > n {
        return param(format!("small CDC needs 1 <= k <= n (k={k}, n={n})"));
    }
    if d > k.min(n - k) {
        let mut g = MatF::zeros(field, k, n);
        g.place(0, 0, &MatF::identity(field, k));
        let u = subspace_full_rank(&g)?;
        return Ok(CodeSet::new(field, n, vec![u], 2 * d, format!("single q={} n={n} k={k}", field.order())));
    }
    lifted_mrd(field, k, n - k, d)
}

fn rrmc(field: &FieldSpec, m: usize, n: usize, d: usize, r: usize) -> Result<Vec<MatF>> {
    if m == 0 || n == 0 {
        return Ok(vec![MatF::zeros(field, m, n)]);
    }
    gabidulin(field, m, n, d)?.restrict_rank(r).collect()
}

fn mrd_words(field: &FieldSpec, m: usize, n: usize, d: usize) -> Result<Vec<MatF>> {
    rrmc(field, m, n, d, m.min(n))
}

/// Cosets of the linear [m x n, inner] code inside the [m x n, outer] one, coset 0 first.
fn families(field: &FieldSpec, m: usize, n: usize, outer: usize, inner: usize) -> Result<Vec<Vec<MatF>>> {
    if m == 0 || n == 0 {
        return Ok(vec![vec![MatF::zeros(field, m, n)]]);
    }
    if outer > inner {
        return param(format!("family distance {outer} exceeds member distance {inner}"));
    }
    if outer == inner {
        return Ok(vec![mrd_words(field, m, n, inner)?]);
    }
    let fam = subcode_family(field, m, n, outer, inner)?;
    let count = fam
        .count_u64()
        .filter(|&c| c <= MATERIALIZE_LIMIT)
        .ok_or_else(|| Error::Resource(format!("{} cosets is too many to materialize", fam.count())))?;
    (0..count).map(|r| Ok(fam.member(r)?.collect())).collect()
}

fn check_input(name: &str, c: &CodeSet, field: &FieldSpec, n: usize, dims: &BTreeSet<usize>) -> Result<()> {
    if c.field() != field || c.ambient() != n {
        return param(format!("{name} must live in F_{}^{n}, got F_{}^{}", field.order(), c.field().order(), c.ambient()));
    }
    let have: BTreeSet<usize> = c.dims().keys().copied().collect();
    if &have != dims {
        return param(format!("{name} has dimensions {have:?}, expected {dims:?}"));
    }
    Ok(())
}

fn guard_total(parts: &[usize]) -> Result<()> {
    let total = parts.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x as u64));
    match total {
        Some(t) if t <= MATERIALIZE_LIMIT => Ok(()),
        _ => Err(Error::Resource("construction too large to materialize; use counting mode".into())),
    }
}

/// C1 and C2 of the mixed dimension construction from MDDCs X1 in F_q^{n1} and X2 in
/// F_q^{n2} whose dimension sets are T1 and T2.
pub fn mixed_dimension(field: &FieldSpec, p: &MixParams, x1: &CodeSet, x2: &CodeSet) -> Result<(CodeSet, CodeSet)> {
    check_input("X1", x1, field, p.n1, &p.t1)?;
    check_input("X2", x2, field, p.n2, &p.t2)?;
    let (n, k, d) = (p.n(), p.k, p.delta);
    let mut c1 = Vec::new();
    for &t in &p.t1 {
        let hs = x1.generators(t);
        let ps = mrd_words(field, k, p.n2 + t - k, d)?;
        guard_total(&[hs.len(), ps.len()])?;
        for h in &hs {
            for pm in &ps {
                let mut g = MatF::zeros(field, k, n);
                g.place(0, 0, h);
                g.place(t, p.n1, &MatF::identity(field, k - t));
                g.place(0, p.n1 + k - t, pm);
                c1.push(subspace_full_rank(&g)?);
            }
        }
    }
    let mut c2 = Vec::new();
    let t1m = p.t1_min();
    for &s in &p.t2 {
        let hs = x2.generators(s);
        let qs = rrmc(field, k, p.n1 + s - k, d, t1m + s - d - k)?;
        guard_total(&[hs.len(), qs.len()])?;
        for qm in &qs {
            for h in &hs {
                let mut g = MatF::zeros(field, k, n);
                g.place(0, 0, qm);
                g.place(s, p.n1 + s - k, &MatF::identity(field, k - s));
                g.place(0, p.n1, h);
                c2.push(subspace_full_rank(&g)?);
            }
        }
    }
    let q = field.order();
    Ok((
        CodeSet::new(field, n, c1, 2 * d, format!("mixed C1 q={q} n1={} n2={} k={k} δ={d}", p.n1, p.n2)),
        CodeSet::new(field, n, c2, 2 * d, format!("mixed C2 q={q} n1={} n2={} k={k} δ={d}", p.n1, p.n2)),
    ))
}

/// Row blocks `top` (a1 rows) and `bottom` (a2 rows), each a list of (column, block).
fn assemble(field: &FieldSpec, n: usize, a1: usize, a2: usize, top: &[(usize, &MatF)], bottom: &[(usize, &MatF)]) -> Result<Subspace> {
    let mut g = MatF::zeros(field, a1 + a2, n);
    for &(c, b) in top {
        g.place(0, c, b);
    }
    for &(c, b) in bottom {
        g.place(a1, c, b);
    }
    subspace_full_rank(&g)
}

fn split_cols(m: &MatF, at: usize) -> (MatF, MatF) {
    (m.block(0, 0, m.rows(), at), m.block(0, at, m.rows(), m.cols() - at))
}

/// C3 of the first inserting construction. `a1` is a (t1, 2δ, {a1}) CDC and `a2` a
/// (t2-k+T1^min, 2δ, {a2}) CDC.
pub fn insert_c3(field: &FieldSpec, p: &MixParams, ip: &InsertParams, a1: &CodeSet, a2: &CodeSet) -> Result<CodeSet> {
    ip.check(p, InsertKind::Insert)?;
    let (d, w, n) = (p.delta, ip.widths(p), p.n());
    check_input("A1", a1, field, ip.t1, &[ip.a1].into())?;
    check_input("A2", a2, field, w.y, &[ip.a2].into())?;
    let as1 = a1.generators(ip.a1);
    let as2 = a2.generators(ip.a2);
    let m2s: Vec<(MatF, MatF)> =
        rrmc(field, ip.a2, w.w2, d, ip.a2 - d)?.iter().map(|m| split_cols(m, ip.t1 - ip.a1)).collect();
    let m3s: Vec<(MatF, MatF)> =
        rrmc(field, ip.a1, w.w3, d, ip.a1 - d)?.iter().map(|m| split_cols(m, w.y - ip.a2)).collect();
    let fam1 = families(field, ip.a1, w.x, ip.b1, d)?;
    let fam4 = families(field, ip.a2, w.z, ip.b2, d)?;
    let f = fam1.len().min(fam4.len());
    guard_total(&[f, as1.len(), as2.len(), m2s.len(), m3s.len(), fam1[0].len(), fam4[0].len()])?;
    let (c_m1, c_a2, c_m3) = (ip.t1, ip.t1 + w.x + w.mu, ip.t1 + w.x + w.mu + w.y);
    let mut words = Vec::new();
    for r in 0..f {
        for aa1 in &as1 {
            for aa2 in &as2 {
                for (f2, m2) in &m2s {
                    let tf2 = embed_tau(aa1, f2)?;
                    for (f3, m3) in &m3s {
                        let tf3 = embed_tau(aa2, f3)?;
                        for m1 in &fam1[r] {
                            for m4 in &fam4[r] {
                                words.push(assemble(
                                    field,
                                    n,
                                    ip.a1,
                                    ip.a2,
                                    &[(0, aa1), (c_m1, m1), (c_a2, &tf3), (c_m3, m3)],
                                    &[(0, &tf2), (c_m1, m2), (c_a2, aa2), (c_m3, m4)],
                                )?);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CodeSet::new(field, n, words, 2 * d, format!("insert C3 {ip:?}")))
}

/// C4 of the second inserting construction. `b1` is a (t1, 2δ, {a1}) CDC and `b2` an
/// (n2-t2, 2δ, {a2}) CDC.
pub fn insert_c4(field: &FieldSpec, p: &MixParams, ip: &InsertParams, b1: &CodeSet, b2: &CodeSet) -> Result<CodeSet> {
    ip.check(p, InsertKind::Insert2)?;
    let d = p.delta;
    let n1s = mrd_words(field, ip.a1, ip.widths(p).x, d)?;
    let n4s = rrmc(field, ip.a2, ip.widths(p).y, d, p.k - ip.t1 - d)?;
    let words = c4_words(field, p, ip, b1, b2, &[(n1s, n4s)])?;
    Ok(CodeSet::new(field, p.n(), words, 2 * d, format!("insert C4 {ip:?}")))
}

/// The family version of C4: member r pairs coset r of the N1 family with the
/// rank-restricted coset r of the N4 family, for r < l.
pub fn insert_c4_hat(field: &FieldSpec, p: &MixParams, ip: &InsertParams, b1: &CodeSet, b2: &CodeSet) -> Result<CodeSet> {
    ip.check(p, InsertKind::Insert2Hat)?;
    let (c1, c2) = ip.c.expect("checked");
    let (d, w) = (p.delta, ip.widths(p));
    let fam1 = families(field, ip.a1, w.x, c1, d)?;
    let fam4 = families(field, ip.a2, w.y, c2, d)?;
    let cap = p.k - ip.t1 - d;
    let members: Vec<(Vec<MatF>, Vec<MatF>)> = fam1
        .into_iter()
        .zip(fam4)
        .map(|(a, b)| (a, b.into_iter().filter(|m| m.rank() <= cap).collect()))
        .collect();
    let words = c4_words(field, p, ip, b1, b2, &members)?;
    Ok(CodeSet::new(field, p.n(), words, 2 * d, format!("insert C4-hat {ip:?}")))
}

/// Sizes of the rank-restricted N4 cosets used by [`insert_c4_hat`], coset 0 first.
pub fn c4_hat_member_sizes(field: &FieldSpec, p: &MixParams, ip: &InsertParams) -> Result<Vec<usize>> {
    ip.check(p, InsertKind::Insert2Hat)?;
    let (c1, c2) = ip.c.expect("checked");
    let (d, w) = (p.delta, ip.widths(p));
    let l = families(field, ip.a1, w.x, c1, d)?.len();
    let cap = p.k - ip.t1 - d;
    Ok(families(field, ip.a2, w.y, c2, d)?
        .into_iter()
        .take(l)
        .map(|fam| fam.iter().filter(|m| m.rank() <= cap).count())
        .collect())
}

fn c4_words(
    field: &FieldSpec,
    p: &MixParams,
    ip: &InsertParams,
    b1: &CodeSet,
    b2: &CodeSet,
    members: &[(Vec<MatF>, Vec<MatF>)],
) -> Result<Vec<Subspace>> {
    let (d, w, n) = (p.delta, ip.widths(p), p.n());
    check_input("B1", b1, field, ip.t1, &[ip.a1].into())?;
    check_input("B2", b2, field, w.z, &[ip.a2].into())?;
    let bs1 = b1.generators(ip.a1);
    let bs2 = b2.generators(ip.a2);
    let n2s: Vec<(MatF, MatF)> =
        rrmc(field, ip.a2, w.w2, d, ip.a2 - d)?.iter().map(|m| split_cols(m, ip.t1 - ip.a1)).collect();
    let n3s: Vec<(MatF, MatF)> = rrmc(field, ip.a1, w.w3, d, ip.a1 - d)?.iter().map(|m| split_cols(m, w.y)).collect();
    let per: usize = members.iter().map(|(a, b)| a.len() * b.len()).sum();
    guard_total(&[per, bs1.len(), bs2.len(), n2s.len(), n3s.len()])?;
    let (c_n1, c_n3, c_e3) = (ip.t1, ip.t1 + w.x + w.mu, ip.t1 + w.x + w.mu + w.y);
    let mut words = Vec::new();
    for (n1s, n4s) in members {
        for bb1 in &bs1 {
            for bb2 in &bs2 {
                for (e2, n2) in &n2s {
                    let te2 = embed_tau(bb1, e2)?;
                    for (n3, e3) in &n3s {
                        let te3 = embed_tau(bb2, e3)?;
                        for nn1 in n1s {
                            for nn4 in n4s {
                                words.push(assemble(
                                    field,
                                    n,
                                    ip.a1,
                                    ip.a2,
                                    &[(0, bb1), (c_n1, nn1), (c_n3, n3), (c_e3, &te3)],
                                    &[(0, &te2), (c_n1, n2), (c_n3, nn4), (c_e3, bb2)],
                                )?);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(words)
}

/// C̃1: multilevel code over [`multilevel_family_mix`] with the corner RFDRMCs.
pub fn multilevel_mix_code(field: &FieldSpec, p: &MixParams) -> Result<CodeSet> {
    let idents = multilevel_family_mix(p)?;
    let b = rfdrmc_builder(field, p.prefix_len(), p.delta);
    multilevel(field, &idents, p.delta, &b)
}

/// C̃2: multilevel code over [`multilevel_family_insert`] with the corner RFDRMCs.
pub fn multilevel_insert_code(field: &FieldSpec, p: &MixParams, ip: &InsertParams) -> Result<CodeSet> {
    let idents = multilevel_family_insert(p, ip)?;
    let b = rfdrmc_builder(field, p.prefix_len(), p.delta);
    multilevel(field, &idents, p.delta, &b)
}
