//! Linear Gabidulin MRD codes, rank-restricted views, and coset families of subcodes.

use num_bigint::BigUint;

use crate::error::{param, Error, Result};
use crate::gf::{ext_field, Fe, FieldSpec};
use crate::matq::MatF;
use crate::qnum::{delta_mrd, qpow, BigCount};

/// Largest code `enumerate` will walk without being told otherwise.
pub const DEFAULT_ENUM_LIMIT: u64 = 1 << 26;

/// A linear [m x n, d]_q Gabidulin code, stored as a basis over the prime field.
#[derive(Clone, Debug)]
pub struct MrdCode {
    field: FieldSpec,
    m: usize,
    n: usize,
    d: usize,
    transposed: bool,
    gens: Vec<MatF>,
}

/// Evaluation basis for linearized polynomials sum_{i < k} f_i z^{q^i} over GF(q^N),
/// expanded to `K x N` matrices (before any transpose).
fn linearized_basis(field: &FieldSpec, m: usize, n: usize, degrees: std::ops::Range<usize>) -> Result<Vec<MatF>> {
    let (kk, nn) = (m.min(n), m.max(n));
    let ext = ext_field(field, nn as u32)?;
    let q = field.order() as u64;
    let p = field.characteristic();
    let e = field.prime_degree() as usize;
    let x = if nn == 1 { 1 } else { ext.basis()[1] };
    let to_coords = |a: Fe| if nn == 1 { vec![a] } else { ext.to_coords(a) };
    let points: Vec<Fe> = (0..kk).map(|l| ext.pow(x, l as u64)).collect();
    let mut out = Vec::new();
    for i in degrees {
        let frob: Vec<Fe> = points.iter().map(|&g| ext.pow(g, q.pow(i as u32))).collect();
        for j in 0..nn {
            for s in 0..e {
                let alpha = p.pow(s as u32);
                let mut coords = vec![0; nn];
                coords[j] = alpha;
                let c = if nn == 1 { coords[0] } else { ext.from_coords(&coords) };
                let mut mat = MatF::zeros(field, kk, nn);
                for (l, &g) in frob.iter().enumerate() {
                    for (col, v) in to_coords(ext.mul(c, g)).into_iter().enumerate() {
                        mat.set(l, col, v);
                    }
                }
                out.push(if m > n { mat.transpose() } else { mat });
            }
        }
    }
    Ok(out)
}

/// The Gabidulin code of shape `m x n` and minimum rank distance `d`. When
/// `d > min(m, n)` the result is the zero code.
pub fn gabidulin(field: &FieldSpec, m: usize, n: usize, d: usize) -> Result<MrdCode> {
    if d == 0 {
        return param("minimum rank distance must be at least 1");
    }
    let kk = m.min(n);
    let gens = if d > kk { Vec::new() } else { linearized_basis(field, m, n, 0..kk - d + 1)? };
    Ok(MrdCode { field: field.clone(), m, n, d, transposed: m > n, gens })
}

impl MrdCode {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn distance(&self) -> usize {
        self.d
    }

    /// True when the native `min x max` evaluation matrices were transposed.
    pub fn transposed(&self) -> bool {
        self.transposed
    }

    /// Number of prime-field digits indexing a codeword.
    pub fn prime_dimension(&self) -> usize {
        self.gens.len()
    }

    /// Basis over the prime field; codewords are its GF(p)-combinations.
    pub fn generators(&self) -> &[MatF] {
        &self.gens
    }

    pub fn size(&self) -> BigCount {
        qpow(self.field.characteristic(), self.gens.len() as u64)
    }

    pub fn size_u64(&self) -> Option<u64> {
        (self.field.characteristic() as u64).checked_pow(self.gens.len() as u32)
    }

    pub fn expected_size(&self) -> BigCount {
        delta_mrd(self.m as u32, self.n as u32, self.d as u32, self.field.order())
    }

    /// Codeword number `index` in enumeration order (digits base p, least significant first).
    pub fn word(&self, index: u64) -> MatF {
        let p = self.field.characteristic() as u64;
        let mut w = MatF::zeros(&self.field, self.m, self.n);
        let mut idx = index;
        for g in &self.gens {
            let c = (idx % p) as Fe;
            idx /= p;
            if c != 0 {
                w.add_scaled(g, c);
            }
        }
        w
    }

    pub fn enumerate(&self) -> Result<CodeIter> {
        self.enumerate_with_limit(DEFAULT_ENUM_LIMIT)
    }

    pub fn enumerate_with_limit(&self, limit: u64) -> Result<CodeIter> {
        let total = self.size_u64().filter(|&s| s <= limit).ok_or_else(|| {
            Error::Resource(format!(
                "[{}x{}, {}]_{} code has {} words, above the enumeration limit {limit}; use counting mode",
                self.m,
                self.n,
                self.d,
                self.field.order(),
                self.size()
            ))
        })?;
        Ok(CodeIter::new(&self.field, self.gens.clone(), MatF::zeros(&self.field, self.m, self.n), total))
    }

    pub fn restrict_rank(&self, r: usize) -> RrmcView {
        RrmcView { base: self.clone(), r }
    }

    pub fn contains(&self, w: &MatF) -> bool {
        if (w.rows(), w.cols()) != (self.m, self.n) {
            return false;
        }
        let cols = self.gens.len();
        let len = self.m * self.n * self.field.prime_degree() as usize;
        let mut a = MatF::zeros(&self.field, len, cols + 1);
        for (j, g) in self.gens.iter().enumerate() {
            for (i, &v) in expand_prime(&self.field, g).iter().enumerate() {
                a.set(i, j, v);
            }
        }
        for (i, &v) in expand_prime(&self.field, w).iter().enumerate() {
            a.set(i, cols, v);
        }
        a.rank() == a.block(0, 0, a.rows(), cols).rank()
    }
}

/// Entries of `w` written over the prime field. Prime digits index the prime
/// subfield of `f`, so ranks of such matrices agree over GF(p) and GF(q).
fn expand_prime(f: &FieldSpec, w: &MatF) -> Vec<Fe> {
    let p = f.characteristic();
    let e = f.prime_degree();
    let mut out = Vec::with_capacity(w.data().len() * e as usize);
    for &x in w.data() {
        let mut v = x as u32;
        for _ in 0..e {
            out.push(v % p);
            v /= p;
        }
    }
    out
}

/// Odometer over prime-field combinations of a generator list.
pub struct CodeIter {
    p: u8,
    gens: Vec<MatF>,
    digits: Vec<u8>,
    current: MatF,
    remaining: u64,
}

impl CodeIter {
    /// Walks `start + span(gens)` over the prime field; `total` is the number of words yielded.
    pub fn new(field: &FieldSpec, gens: Vec<MatF>, start: MatF, total: u64) -> CodeIter {
        CodeIter { p: field.characteristic() as u8, digits: vec![0; gens.len()], gens, current: start, remaining: total }
    }
}

impl Iterator for CodeIter {
    type Item = MatF;

    fn next(&mut self) -> Option<MatF> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        if self.remaining > 0 {
            for (j, d) in self.digits.iter_mut().enumerate() {
                self.current.add_scaled(&self.gens[j], 1);
                *d += 1;
                if *d < self.p {
                    break;
                }
                *d = 0;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// Words of a linear MRD code whose rank is at most `r`.
#[derive(Clone, Debug)]
pub struct RrmcView {
    base: MrdCode,
    r: usize,
}

impl RrmcView {
    pub fn base(&self) -> &MrdCode {
        &self.base
    }

    pub fn max_rank(&self) -> usize {
        self.r
    }

    pub fn iter(&self) -> Result<impl Iterator<Item = MatF> + '_> {
        let r = self.r;
        Ok(self.base.enumerate()?.filter(move |w| w.rank() <= r))
    }

    pub fn collect(&self) -> Result<Vec<MatF>> {
        Ok(self.iter()?.collect())
    }

    pub fn count(&self) -> Result<u64> {
        Ok(self.iter()?.count() as u64)
    }
}

/// Cosets of the linear [m x n, d1] Gabidulin code inside the [m x n, d] one.
/// Member 0 is the linear subcode itself.
#[derive(Clone, Debug)]
pub struct SubcodeFamily {
    outer: MrdCode,
    d1: usize,
    extra: Vec<MatF>,
    inner: MrdCode,
}

pub fn subcode_family(field: &FieldSpec, m: usize, n: usize, d: usize, d1: usize) -> Result<SubcodeFamily> {
    if d1 <= d {
        return param(format!("subcode family needs d1 > d, got d1={d1}, d={d}"));
    }
    let outer = gabidulin(field, m, n, d)?;
    let kk = m.min(n);
    let inner_deg = (kk + 1).saturating_sub(d1);
    let mut inner = outer.clone();
    let per_degree = m.max(n) * field.prime_degree() as usize;
    let split = (inner_deg * per_degree).min(outer.gens.len());
    inner.gens.truncate(split);
    inner.d = d1;
    let extra = outer.gens[split..].to_vec();
    Ok(SubcodeFamily { outer, d1, extra, inner })
}

impl SubcodeFamily {
    pub fn outer(&self) -> &MrdCode {
        &self.outer
    }

    pub fn inner(&self) -> &MrdCode {
        &self.inner
    }

    pub fn inner_distance(&self) -> usize {
        self.d1
    }

    /// s = Δ(m,n,d)_q / Δ(m,n,d1)_q.
    pub fn count(&self) -> BigCount {
        qpow(self.outer.field.characteristic(), self.extra.len() as u64)
    }

    pub fn count_u64(&self) -> Option<u64> {
        (self.outer.field.characteristic() as u64).checked_pow(self.extra.len() as u32)
    }

    /// Coset representative of member `r`.
    pub fn offset(&self, r: u64) -> MatF {
        let p = self.outer.field.characteristic() as u64;
        let mut w = MatF::zeros(&self.outer.field, self.outer.m, self.outer.n);
        let mut idx = r;
        for g in &self.extra {
            let c = (idx % p) as Fe;
            idx /= p;
            if c != 0 {
                w.add_scaled(g, c);
            }
        }
        w
    }

    pub fn member(&self, r: u64) -> Result<CodeIter> {
        let total = self.inner.size_u64().filter(|&s| s <= DEFAULT_ENUM_LIMIT).ok_or_else(|| {
            Error::Resource(format!("subcode of size {} is too large to enumerate", self.inner.size()))
        })?;
        let f = &self.outer.field;
        Ok(CodeIter::new(f, self.inner.gens.clone(), self.offset(r), total))
    }

    pub fn member_size(&self) -> BigUint {
        self.inner.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field;
    use crate::qnum::{delsarte_rank_count, delta_rrmc};
    use std::collections::HashSet;

    fn histogram(code: &MrdCode) -> Vec<u64> {
        let (m, n) = code.shape();
        let mut h = vec![0u64; m.min(n) + 1];
        for w in code.enumerate().unwrap() {
            h[w.rank()] += 1;
        }
        h
    }

    #[test]
    fn gabidulin_3x3_d2_over_gf2() {
        let f = field(2).unwrap();
        let c = gabidulin(&f, 3, 3, 2).unwrap();
        assert_eq!(c.size_u64(), Some(64));
        assert_eq!(histogram(&c), vec![1, 0, 49, 14]);
        let words: HashSet<MatF> = c.enumerate().unwrap().collect();
        assert_eq!(words.len(), 64);
    }

    #[test]
    fn first_word_is_zero_and_word_matches_enumeration() {
        let f = field(3).unwrap();
        let c = gabidulin(&f, 2, 3, 2).unwrap();
        let all: Vec<MatF> = c.enumerate().unwrap().collect();
        assert!(all[0].is_zero());
        for (i, w) in all.iter().enumerate() {
            assert_eq!(&c.word(i as u64), w);
        }
    }

    #[test]
    fn small_sizes() {
        let f = field(2).unwrap();
        assert_eq!(gabidulin(&f, 2, 2, 2).unwrap().enumerate().unwrap().count(), 4);
        assert_eq!(gabidulin(&f, 2, 3, 1).unwrap().size_u64(), Some(64));
        let z = gabidulin(&f, 2, 3, 3).unwrap();
        assert_eq!(z.enumerate().unwrap().count(), 1);
    }

    #[test]
    fn non_prime_base_fields_are_mrd() {
        for q in [4, 8, 9] {
            let f = field(q).unwrap();
            let c = gabidulin(&f, 2, 2, 2).unwrap();
            assert_eq!(c.size(), delta_mrd(2, 2, 2, q));
            let words: HashSet<MatF> = c.enumerate().unwrap().collect();
            assert_eq!(words.len() as u64, c.size_u64().unwrap());
            let h = histogram(&c);
            assert_eq!(h[1], 0, "q={q}");
            assert_eq!(BigUint::from(h[2]), delsarte_rank_count(2, 2, 2, 2, q).unwrap());
        }
    }

    #[test]
    fn transposed_orientation() {
        let f = field(2).unwrap();
        let c = gabidulin(&f, 4, 3, 2).unwrap();
        assert!(c.transposed());
        assert_eq!(c.word(5).rows(), 4);
        assert_eq!(c.restrict_rank(2).count().unwrap(), 106);
        assert_eq!(BigUint::from(106u32), delta_rrmc(4, 3, 2, 2, 2));
    }

    #[test]
    fn restriction_extremes() {
        let f = field(2).unwrap();
        let c = gabidulin(&f, 3, 3, 2).unwrap();
        let zero = c.restrict_rank(0).collect().unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero());
        assert_eq!(c.restrict_rank(3).count().unwrap(), 64);
    }

    #[test]
    fn membership() {
        let f = field(2).unwrap();
        let c = gabidulin(&f, 3, 3, 2).unwrap();
        assert!(c.contains(&c.word(17)));
        let full = gabidulin(&f, 3, 3, 1).unwrap();
        let outside = full.enumerate().unwrap().find(|w| !c.contains(w)).unwrap();
        assert!(!outside.is_zero());
    }

    #[test]
    fn subcode_family_2x2() {
        let f = field(2).unwrap();
        let fam = subcode_family(&f, 2, 2, 1, 2).unwrap();
        assert_eq!(fam.count_u64(), Some(4));
        let mut all = HashSet::new();
        for r in 0..4 {
            let words: Vec<MatF> = fam.member(r).unwrap().collect();
            assert_eq!(words.len(), 4);
            if r == 0 {
                assert!(words.iter().any(MatF::is_zero));
            }
            for w in words {
                assert!(all.insert(w));
            }
        }
        assert_eq!(all.len(), 16);
        assert!(subcode_family(&f, 2, 2, 2, 2).is_err());
    }
}
