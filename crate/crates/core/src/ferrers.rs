//! Ferrers diagrams, Ferrers diagram rank-metric codes (plain and rank-restricted),
//! and lifting them to constant dimension codes.

use std::fmt;

use crate::construct::CodeSet;
use crate::error::{param, Error, Result};
use crate::gf::{Fe, FieldSpec};
use crate::matq::{nullspace, subspace, MatF};
use crate::qnum::{qpow, BigCount};
use crate::rankcode::{gabidulin, CodeIter};

/// Most codewords a builder will materialize.
pub const MATERIALIZE_LIMIT: u64 = 1 << 22;

/// Column dot counts `[γ_1, ..., γ_n]` of an `m x n` diagram, dots top- and right-aligned.
///
/// Besides proper diagrams (`1 ≤ γ_1`, `γ_n = m`) this also holds the sub-diagrams cut
/// out of larger ones, which may start with empty columns or leave bottom rows empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    m: usize,
    gamma: Vec<usize>,
}

impl FerrersDiagram {
    pub fn new(m: usize, gamma: Vec<usize>) -> Result<FerrersDiagram> {
        if gamma.windows(2).any(|w| w[0] > w[1]) {
            return param(format!("column counts {gamma:?} are not non-decreasing"));
        }
        if gamma.iter().any(|&g| g > m) {
            return param(format!("column counts {gamma:?} exceed {m} rows"));
        }
        Ok(FerrersDiagram { m, gamma })
    }

    pub fn full(m: usize, n: usize) -> FerrersDiagram {
        FerrersDiagram { m, gamma: vec![m; n] }
    }

    /// Diagram of the echelon Ferrers form of a binary vector: one column per zero of
    /// `ident`, holding as many dots as there are ones before it.
    pub fn from_ident(ident: &[u8]) -> FerrersDiagram {
        let mut ones = 0;
        let mut gamma = Vec::new();
        for &b in ident {
            if b != 0 {
                ones += 1;
            } else {
                gamma.push(ones);
            }
        }
        FerrersDiagram { m: ones, gamma }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    /// Dots in row `i` (0-based from the top).
    pub fn row_len(&self, i: usize) -> usize {
        self.gamma.iter().filter(|&&g| g > i).count()
    }

    pub fn dots(&self) -> usize {
        self.gamma.iter().sum()
    }

    pub fn has_dot(&self, i: usize, j: usize) -> bool {
        i < self.gamma[j]
    }

    pub fn is_full(&self) -> bool {
        self.gamma.iter().all(|&g| g == self.m)
    }

    pub fn is_empty(&self) -> bool {
        self.dots() == 0
    }

    /// True for a diagram in the strict sense: first column non-empty, last column full.
    pub fn is_proper(&self) -> bool {
        self.gamma.first().is_some_and(|&g| g >= 1) && self.gamma.last() == Some(&self.m)
    }

    /// Reflection in the anti-diagonal; column counts become `[ρ_m, ..., ρ_1]`.
    pub fn transpose(&self) -> FerrersDiagram {
        let gamma = (0..self.m).rev().map(|i| self.row_len(i)).collect();
        FerrersDiagram { m: self.cols(), gamma }
    }

    /// Dots left after deleting the top `i` rows and the rightmost `d-1-i` columns.
    pub fn v(&self, i: usize, d: usize) -> usize {
        let keep = self.cols().saturating_sub(d - 1 - i);
        self.gamma[..keep].iter().map(|&g| g.saturating_sub(i)).sum()
    }

    /// The exponent min_i v_i of the Singleton-like bound.
    pub fn singleton_exponent(&self, d: usize) -> usize {
        (0..d).map(|i| self.v(i, d)).min().unwrap_or(0)
    }

    /// Sub-diagram on the given column range, keeping all rows.
    pub fn columns(&self, range: std::ops::Range<usize>) -> FerrersDiagram {
        FerrersDiagram { m: self.m, gamma: self.gamma[range].to_vec() }
    }

    pub fn zero_word(&self, field: &FieldSpec) -> MatF {
        MatF::zeros(field, self.m, self.cols())
    }

    /// True when `w` vanishes off the dots.
    pub fn supports(&self, w: &MatF) -> bool {
        if (w.rows(), w.cols()) != (self.m, self.cols()) {
            return false;
        }
        (0..self.m).all(|i| (0..self.cols()).all(|j| self.has_dot(i, j) || w.get(i, j) == 0))
    }
}

impl fmt::Debug for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}{:?}", self.m, self.cols(), self.gamma)
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols() {
                write!(f, "{}", if self.has_dot(i, j) { '•' } else { '.' })?;
            }
        }
        Ok(())
    }
}

pub fn diagram_from_vector(v: &[u8]) -> Result<FerrersDiagram> {
    if v.iter().all(|&b| b == 0) {
        return param("identifying vector has weight zero");
    }
    Ok(FerrersDiagram::from_ident(v))
}

/// EF(v) as text: pivots `1`, forced zeros `0`, free entries `•`, space separated.
pub fn echelon_ferrers_form(v: &[u8]) -> String {
    let pivots: Vec<usize> = (0..v.len()).filter(|&c| v[c] != 0).collect();
    let rows: Vec<String> = pivots
        .iter()
        .map(|&p| {
            let cells: Vec<&str> = (0..v.len())
                .map(|c| match c {
                    _ if c == p => "1",
                    _ if c > p && v[c] == 0 => "•",
                    _ => "0",
                })
                .collect();
            cells.join(" ")
        })
        .collect();
    rows.join("\n")
}

/// A filling of `f` as text, entries space separated and right aligned, blanks
/// outside the diagram.
pub fn tableaux_string(f: &FerrersDiagram, fill: &MatF) -> String {
    let rows: Vec<String> = (0..f.rows())
        .map(|i| {
            let cells: Vec<String> = (0..f.cols())
                .map(|j| if f.has_dot(i, j) { fill.get(i, j).to_string() } else { " ".into() })
                .collect();
            cells.join(" ")
        })
        .collect();
    rows.join("\n")
}

/// q^{min_i v_i}.
pub fn singleton_like_bound(f: &FerrersDiagram, d: usize, q: u32) -> BigCount {
    qpow(q, f.singleton_exponent(d.max(1)) as u64)
}

/// An (F, d)_q code, optionally with rank at most `r` on the top-right `a x b` corner.
#[derive(Clone, Debug)]
pub struct FdrmcCode {
    field: FieldSpec,
    diagram: FerrersDiagram,
    d: usize,
    restriction: Option<(usize, usize, usize)>,
    words: Vec<MatF>,
}

impl FdrmcCode {
    pub fn from_words(field: &FieldSpec, diagram: FerrersDiagram, d: usize, words: Vec<MatF>) -> Result<FdrmcCode> {
        if let Some(w) = words.iter().find(|w| !diagram.supports(w)) {
            return param(format!("word is not supported on {diagram:?}:\n{w}"));
        }
        Ok(FdrmcCode { field: field.clone(), diagram, d, restriction: None, words })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn distance(&self) -> usize {
        self.d
    }

    pub fn restriction(&self) -> Option<(usize, usize, usize)> {
        self.restriction
    }

    pub fn words(&self) -> &[MatF] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Every word is supported on the diagram and meets the corner restriction.
    pub fn respects_shape(&self) -> bool {
        self.words.iter().all(|w| {
            self.diagram.supports(w)
                && self.restriction.is_none_or(|(a, b, r)| corner(w, a, b).rank() <= r)
        })
    }
}

/// σ(w)_{a,b}: the top `a` rows and rightmost `b` columns.
pub fn corner(w: &MatF, a: usize, b: usize) -> MatF {
    w.block(0, w.cols() - b, a, b)
}

fn materialize(field: &FieldSpec, gens: Vec<MatF>, zero: MatF) -> Result<Vec<MatF>> {
    let p = field.characteristic() as u64;
    let total = p.checked_pow(gens.len() as u32).filter(|&t| t <= MATERIALIZE_LIMIT).ok_or_else(|| {
        Error::Resource(format!("code of size {}^{} is too large to materialize", p, gens.len()))
    })?;
    Ok(CodeIter::new(field, gens, zero, total).collect())
}

/// Prime-field generators of the largest subcode of `basis` vanishing off `f`.
fn zero_constrained(field: &FieldSpec, f: &FerrersDiagram, basis: &[MatF]) -> Vec<MatF> {
    let e = field.prime_degree() as usize;
    let p = field.characteristic();
    let outside: Vec<(usize, usize)> =
        (0..f.rows()).flat_map(|i| (0..f.cols()).map(move |j| (i, j))).filter(|&(i, j)| !f.has_dot(i, j)).collect();
    if outside.is_empty() {
        return basis.to_vec();
    }
    let mut sys = MatF::zeros(field, outside.len() * e, basis.len());
    for (col, g) in basis.iter().enumerate() {
        for (r, &(i, j)) in outside.iter().enumerate() {
            let mut v = g.get(i, j);
            for s in 0..e {
                sys.set(r * e + s, col, v % p);
                v /= p;
            }
        }
    }
    nullspace(&sys)
        .into_iter()
        .map(|x| {
            let mut w = MatF::zeros(field, f.rows(), f.cols());
            for (g, &c) in basis.iter().zip(&x) {
                w.add_scaled(g, c);
            }
            w
        })
        .collect()
}

fn fdrmc_generators(field: &FieldSpec, f: &FerrersDiagram, d: usize) -> Result<Vec<MatF>> {
    let e = field.prime_degree() as usize;
    let p = field.characteristic();
    if d == 1 {
        let mut gens = Vec::new();
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                if f.has_dot(i, j) {
                    for s in 0..e {
                        let mut g = MatF::zeros(field, f.rows(), f.cols());
                        g.set(i, j, p.pow(s as u32) as Fe);
                        gens.push(g);
                    }
                }
            }
        }
        return Ok(gens);
    }
    let j0 = f.gamma().iter().position(|&g| g > 0).unwrap_or(f.cols());
    let rows = f.gamma().last().copied().unwrap_or(0);
    let trimmed = FerrersDiagram { m: rows, gamma: f.gamma()[j0..].to_vec() };
    if trimmed.is_empty() || d > rows.min(trimmed.cols()) {
        return Ok(Vec::new());
    }
    let direct = zero_constrained(field, &trimmed, gabidulin(field, rows, trimmed.cols(), d)?.generators());
    let t = trimmed.transpose();
    let flipped = zero_constrained(field, &t, gabidulin(field, t.rows(), t.cols(), d)?.generators());
    let best: Vec<MatF> = if flipped.len() > direct.len() {
        flipped.iter().map(MatF::anti_transpose).collect()
    } else {
        direct
    };
    Ok(best
        .into_iter()
        .map(|g| {
            let mut w = MatF::zeros(field, f.rows(), f.cols());
            w.place(0, j0, &g);
            w
        })
        .collect())
}

/// Size a linear FDRMC from [`build_fdrmc`] would have, without building it.
pub fn fdrmc_size(field: &FieldSpec, f: &FerrersDiagram, d: usize) -> Result<BigCount> {
    let gens = fdrmc_generators(field, f, d)?;
    Ok(qpow(field.characteristic(), gens.len() as u64))
}

/// A linear (F, d)_q FDRMC: all fillings for d = 1, otherwise the largest
/// zero-constrained subcode of a Gabidulin code in either orientation. Fails with a
/// capacity error when `min_size` is requested and not reached.
pub fn build_fdrmc(field: &FieldSpec, f: &FerrersDiagram, d: usize, min_size: Option<&BigCount>) -> Result<FdrmcCode> {
    if d == 0 {
        return param("minimum rank distance must be at least 1");
    }
    let gens = fdrmc_generators(field, f, d)?;
    let size = qpow(field.characteristic(), gens.len() as u64);
    if let Some(want) = min_size {
        if &size < want {
            return Err(Error::Capacity(format!(
                "FDRMC on {f:?} with d={d} reaches {size} words, {want} required"
            )));
        }
    }
    let words = materialize(field, gens, f.zero_word(field))?;
    Ok(FdrmcCode { field: field.clone(), diagram: f.clone(), d, restriction: None, words })
}

/// Block assembly `[[D1, D2], [O, D3]]` with D2 drawn from the rank ≤ r words of an
/// `a x b` Gabidulin code and D1, D3 from [`build_fdrmc`]. Either side block may be absent.
pub fn build_rfdrmc(
    field: &FieldSpec,
    f1: Option<&FerrersDiagram>,
    f2: &FerrersDiagram,
    f3: Option<&FerrersDiagram>,
    d: usize,
    r: usize,
) -> Result<FdrmcCode> {
    if !f2.is_full() {
        return param(format!("middle block {f2:?} must be a full diagram"));
    }
    let (a, b) = (f2.rows(), f2.cols());
    if let Some(f1) = f1 {
        if f1.rows() != a {
            return param(format!("left block {f1:?} must have {a} rows"));
        }
    }
    if let Some(f3) = f3 {
        if f3.cols() != b {
            return param(format!("lower block {f3:?} must have {b} columns"));
        }
    }
    let n1 = f1.map_or(0, FerrersDiagram::cols);
    let m3 = f3.map_or(0, FerrersDiagram::rows);
    let mut gamma: Vec<usize> = f1.map_or(Vec::new(), |f| f.gamma().to_vec());
    gamma.extend((0..b).map(|j| a + f3.map_or(0, |f| f.gamma()[j])));
    let diagram = FerrersDiagram::new(a + m3, gamma)?;

    let d1 = match f1 {
        Some(f) => build_fdrmc(field, f, d, None)?.words,
        None => vec![MatF::zeros(field, a, 0)],
    };
    let d2 = if a == 0 || b == 0 {
        vec![MatF::zeros(field, a, b)]
    } else {
        gabidulin(field, a, b, d)?.restrict_rank(r).collect()?
    };
    let d3 = match f3 {
        Some(f) => build_fdrmc(field, f, d, None)?.words,
        None => vec![MatF::zeros(field, 0, b)],
    };
    let total = d1.len() as u64 * d2.len() as u64 * d3.len() as u64;
    if total > MATERIALIZE_LIMIT {
        return Err(Error::Resource(format!("RFDRMC of {total} words is too large to materialize")));
    }
    let mut words = Vec::with_capacity(total as usize);
    for w1 in &d1 {
        for w2 in &d2 {
            for w3 in &d3 {
                let mut w = MatF::zeros(field, a + m3, n1 + b);
                w.place(0, 0, w1);
                w.place(0, n1, w2);
                w.place(a, n1, w3);
                words.push(w);
            }
        }
    }
    Ok(FdrmcCode { field: field.clone(), diagram, d, restriction: Some((a, b, r)), words })
}

/// Blocks of the diagram of `ident` when split after its first `prefix_len`
/// coordinates: `r` = weight of the prefix, F1 = top `r` rows over the prefix's free
/// columns, F2 = the full `r x b` block over the suffix's free columns, F3 = the rest.
pub struct PrefixSplit {
    pub r: usize,
    pub f1: Option<FerrersDiagram>,
    pub f2: FerrersDiagram,
    pub f3: Option<FerrersDiagram>,
}

pub fn split_at_prefix(ident: &[u8], prefix_len: usize) -> Result<PrefixSplit> {
    if prefix_len > ident.len() {
        return param("prefix longer than identifying vector");
    }
    let f = FerrersDiagram::from_ident(ident);
    let r = ident[..prefix_len].iter().filter(|&&b| b != 0).count();
    let left = ident[..prefix_len].iter().filter(|&&b| b == 0).count();
    let k = f.rows();
    let b = f.cols() - left;
    let f1 = (left > 0).then(|| FerrersDiagram { m: r, gamma: f.gamma()[..left].to_vec() });
    let f3 = (k > r).then(|| FerrersDiagram { m: k - r, gamma: f.gamma()[left..].iter().map(|&g| g - r).collect() });
    Ok(PrefixSplit { r, f1, f2: FerrersDiagram::full(r, b), f3 })
}

/// Lifts every codeword to the subspace whose RREF has pivots at the ones of `ident`
/// and the codeword's entries in the free columns.
pub fn lift(code: &FdrmcCode, ident: &[u8]) -> Result<CodeSet> {
    let words = lift_words(code.field(), code.diagram(), code.words(), ident)?;
    let n = ident.len();
    Ok(CodeSet::new(code.field(), n, words, 2 * code.distance(), format!("lift {}", crate::matq::ident_string(ident))))
}

pub fn lift_words(field: &FieldSpec, diagram: &FerrersDiagram, words: &[MatF], ident: &[u8]) -> Result<Vec<crate::matq::Subspace>> {
    let expect = diagram_from_vector(ident)?;
    if diagram.rows() != expect.rows() || diagram.gamma() != expect.gamma() {
        return param(format!("diagram {diagram:?} does not match identifying vector (expected {expect:?})"));
    }
    let pivots: Vec<usize> = (0..ident.len()).filter(|&c| ident[c] != 0).collect();
    let free: Vec<usize> = (0..ident.len()).filter(|&c| ident[c] == 0).collect();
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let mut g = MatF::zeros(field, pivots.len(), ident.len());
        for (i, &p) in pivots.iter().enumerate() {
            g.set(i, p, 1);
            for (j, &c) in free.iter().enumerate() {
                g.set(i, c, w.get(i, j));
            }
        }
        out.push(subspace(&g));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field;
    use crate::matq::{ferrers_tableaux, parse_ident};
    use crate::qnum::{big, delta_mrd};

    fn min_pair_rank(words: &[MatF]) -> usize {
        let mut best = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                best = best.min(words[i].sub(&words[j]).rank());
            }
        }
        best
    }

    #[test]
    fn diagram_of_example_vector() {
        let f = diagram_from_vector(&parse_ident("10101000").unwrap()).unwrap();
        assert_eq!((f.rows(), f.cols()), (3, 5));
        assert_eq!(f.gamma(), &[1, 2, 3, 3, 3]);
        assert_eq!(f.to_string(), "•••••\n.••••\n..•••");
        assert!(diagram_from_vector(&[0, 0, 0]).is_err());
        assert!(diagram_from_vector(&parse_ident("1110000").unwrap()).unwrap().is_full());
        assert!(diagram_from_vector(&parse_ident("0000111").unwrap()).unwrap().is_empty());
    }

    #[test]
    fn transpose_matches_displayed_example() {
        let f = FerrersDiagram::new(3, vec![1, 1, 2, 3]).unwrap();
        let t = f.transpose();
        assert_eq!(t.gamma(), &[1, 2, 4]);
        assert_eq!(t.to_string(), "•••\n.••\n..•\n..•");
        assert_eq!(t.transpose(), f);
    }

    #[test]
    fn singleton_like_values() {
        let f = FerrersDiagram::new(3, vec![1, 1, 2, 3]).unwrap();
        assert_eq!(f.v(0, 2), 4);
        assert_eq!(f.v(1, 2), 3);
        assert_eq!(singleton_like_bound(&f, 2, 2), big(8));
        assert_eq!(singleton_like_bound(&f, 1, 3), big(3u64.pow(7)));
        for (k, n, d) in [(2, 3, 2), (3, 3, 2), (3, 4, 3), (4, 4, 2)] {
            assert_eq!(singleton_like_bound(&FerrersDiagram::full(k, n), d, 2), delta_mrd(k as u32, n as u32, d as u32, 2));
        }
    }

    #[test]
    fn example_printed_forms() {
        let f2 = field(2).unwrap();
        let u = subspace(&MatF::parse(&f2, "11000100;00100110;00001001").unwrap());
        assert_eq!(
            echelon_ferrers_form(&u.ident()),
            "1 • 0 • 0 • • •\n0 0 1 • 0 • • •\n0 0 0 0 1 • • •"
        );
        let (d, fill) = crate::matq::ferrers_tableaux(&u);
        assert_eq!(tableaux_string(&d, &fill), "1 0 1 0 0\n  0 1 1 0\n    0 0 1");
    }

    #[test]
    fn tableaux_diagram_agrees_with_identifying_vector() {
        let f2 = field(2).unwrap();
        let u = subspace(&MatF::parse(&f2, "11000100;00100110;00001001").unwrap());
        let (diagram, _) = ferrers_tableaux(&u);
        assert_eq!(diagram, diagram_from_vector(&u.ident()).unwrap());
        let all = subspace(&MatF::identity(&f2, 4));
        assert!(ferrers_tableaux(&all).0.is_empty());
    }

    #[test]
    fn fdrmc_full_and_d1() {
        let f2 = field(2).unwrap();
        let full = build_fdrmc(&f2, &FerrersDiagram::full(3, 3), 2, None).unwrap();
        assert_eq!(full.len(), 64);
        assert_eq!(min_pair_rank(full.words()), 2);
        let f = FerrersDiagram::new(3, vec![1, 1, 2, 3]).unwrap();
        let all = build_fdrmc(&f2, &f, 1, None).unwrap();
        assert_eq!(all.len(), 128);
        assert!(all.respects_shape());
    }

    #[test]
    fn fdrmc_example_shape_reaches_bound() {
        let f2 = field(2).unwrap();
        let f = FerrersDiagram::new(3, vec![1, 1, 2, 3]).unwrap();
        let c = build_fdrmc(&f2, &f, 2, None).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.respects_shape());
        assert!(min_pair_rank(c.words()) >= 2);
        let e = FerrersDiagram::new(3, vec![1, 2, 3, 3, 3]).unwrap();
        let c = build_fdrmc(&f2, &e, 2, None).unwrap();
        assert_eq!(BigCount::from(c.len()), singleton_like_bound(&e, 2, 2));
        assert!(min_pair_rank(c.words()) >= 2);
        assert!(matches!(build_fdrmc(&f2, &e, 2, Some(&big(1 << 20))), Err(Error::Capacity(_))));
    }

    #[test]
    fn rectangular_block_reaches_mrd_size() {
        let f3 = field(3).unwrap();
        let c = build_fdrmc(&f3, &FerrersDiagram::full(2, 3), 2, None).unwrap();
        assert_eq!(BigCount::from(c.len()), delta_mrd(3, 2, 2, 3));
    }

    #[test]
    fn rfdrmc_degenerate_blocks() {
        let f2 = field(2).unwrap();
        let mid = FerrersDiagram::full(3, 3);
        let c = build_rfdrmc(&f2, None, &mid, None, 2, 2).unwrap();
        assert_eq!(c.len(), 1 + 49);
        assert!(c.respects_shape());
        let left = FerrersDiagram::full(2, 2);
        let low = FerrersDiagram::full(2, 2);
        let c = build_rfdrmc(&f2, Some(&left), &FerrersDiagram::full(2, 2), Some(&low), 2, 0).unwrap();
        assert_eq!(c.len(), 4 * 4);
        assert_eq!(c.diagram().gamma(), &[2, 2, 4, 4]);
        assert!(c.respects_shape());
        assert!(min_pair_rank(c.words()) >= 2);
    }

    #[test]
    fn prefix_split_blocks() {
        let v = parse_ident("001100111100000000").unwrap();
        let s = split_at_prefix(&v, 5).unwrap();
        assert_eq!(s.r, 2);
        assert_eq!(s.f1.as_ref().unwrap().gamma(), &[0, 0, 2]);
        assert_eq!((s.f2.rows(), s.f2.cols()), (2, 9));
        assert_eq!(s.f3.as_ref().unwrap().gamma(), &[0, 4, 4, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn lift_is_bijective_and_keeps_ident() {
        let f2 = field(2).unwrap();
        let c = build_fdrmc(&f2, &FerrersDiagram::full(3, 3), 2, None).unwrap();
        let ident = parse_ident("111000").unwrap();
        let lifted = lift(&c, &ident).unwrap();
        assert_eq!(lifted.len(), 64);
        assert!(lifted.words().iter().all(|u| u.ident() == ident));
        let bad = parse_ident("110100").unwrap();
        assert!(lift(&c, &bad).is_err());
    }
}
