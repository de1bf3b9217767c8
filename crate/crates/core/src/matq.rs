//! Dense matrices over GF(q), reduced row echelon forms and subspaces.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{param, Error, Result};
use crate::ferrers::FerrersDiagram;
use crate::gf::{Fe, FieldSpec};

#[derive(Clone)]
pub struct MatF {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl MatF {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> MatF {
        MatF { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> MatF {
        let mut m = MatF::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major entries. Panics if the length is wrong.
    pub fn from_vec(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u8>) -> MatF {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        debug_assert!(data.iter().all(|&x| (x as u32) < field.order()));
        MatF { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &FieldSpec, rows: &[Vec<Fe>]) -> Result<MatF> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return param(format!("row {i} has {} entries, expected {cols}", r.len()));
            }
            for &x in r {
                if x >= field.order() {
                    return param(format!("entry {x} is not an element of {field}"));
                }
                data.push(x as u8);
            }
        }
        Ok(MatF { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Parses rows of digits separated by `;` or newlines, e.g. `"101;011"`.
    pub fn parse(field: &FieldSpec, s: &str) -> Result<MatF> {
        let rows: Vec<Vec<Fe>> = s
            .split(|c| c == ';' || c == '\n')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10).unwrap_or(u32::MAX)).collect())
            .collect();
        MatF::from_rows(field, &rows)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j] as Fe
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> MatF {
        let mut t = MatF::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reflection in the anti-diagonal: entry (i, j) moves to (cols-1-j, rows-1-i).
    /// This carries a code on a Ferrers diagram to a code on its transpose.
    pub fn anti_transpose(&self) -> MatF {
        let mut t = MatF::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(self.cols - 1 - j, self.rows - 1 - i, self.get(i, j));
            }
        }
        t
    }

    /// Horizontal concatenation of blocks with equal row counts.
    pub fn hcat(field: &FieldSpec, blocks: &[&MatF]) -> MatF {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = MatF::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hcat: row count mismatch");
            m.place(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    /// Vertical concatenation of blocks with equal column counts.
    pub fn vcat(field: &FieldSpec, blocks: &[&MatF]) -> MatF {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vcat: column count mismatch");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        MatF { field: field.clone(), rows, cols, data }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> MatF {
        let mut m = MatF::zeros(&self.field, rows, cols);
        for i in 0..rows {
            let src = &self.data[(r0 + i) * self.cols + c0..(r0 + i) * self.cols + c0 + cols];
            m.data[i * cols..(i + 1) * cols].copy_from_slice(src);
        }
        m
    }

    pub fn place(&mut self, r0: usize, c0: usize, b: &MatF) {
        for i in 0..b.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn add(&self, other: &MatF) -> MatF {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a as Fe, b as Fe) as u8).collect();
        MatF { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &MatF) -> MatF {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a as Fe, b as Fe) as u8).collect();
        MatF { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: Fe) -> MatF {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a as Fe, c) as u8).collect();
        MatF { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &MatF, c: Fe) {
        let f = &self.field;
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.add(*a as Fe, f.mul(b as Fe, c)) as u8;
            }
        }
    }

    pub fn mul(&self, other: &MatF) -> MatF {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut m = MatF::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(m.get(i, j), f.mul(a, other.get(l, j)));
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        if let Some(mut rows) = pack_gf2(self) {
            return rank_packed(&mut rows);
        }
        rref_in_place(&mut self.clone()).len()
    }

    /// True when the matrix is in reduced row echelon form (zero rows last).
    pub fn is_rref(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..self.rows {
            let lead = self.row(i).iter().position(|&x| x != 0);
            match lead {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) || self.get(i, c) != 1 {
                        return false;
                    }
                    if (0..self.rows).any(|r| r != i && self.get(r, c) != 0) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }
}

impl PartialEq for MatF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for MatF {}

impl Hash for MatF {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Display for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for &x in self.row(i) {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatF[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            write!(f, "\n  ")?;
            for &x in self.row(i) {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Row-packs a GF(2) matrix with at most 128 columns; bit `j` is column `j`.
pub fn pack_gf2(m: &MatF) -> Option<Vec<u128>> {
    if m.field.order() != 2 || m.cols > 128 {
        return None;
    }
    Some(
        (0..m.rows)
            .map(|i| m.row(i).iter().enumerate().fold(0u128, |acc, (j, &x)| acc | ((x as u128) << j)))
            .collect(),
    )
}

/// Rank of packed GF(2) rows; the slice is used as scratch space.
pub fn rank_packed(rows: &mut [u128]) -> usize {
    let mut r = 0;
    for i in 0..rows.len() {
        let v = rows[i];
        if v == 0 {
            continue;
        }
        let low = v & v.wrapping_neg();
        rows.swap(r, i);
        for row in rows.iter_mut().skip(r + 1) {
            if *row & low != 0 {
                *row ^= v;
            }
        }
        r += 1;
    }
    r
}

fn rref_in_place(m: &mut MatF) -> Vec<usize> {
    if let Some(mut rows) = pack_gf2(m) {
        let pivots = rref_packed(&mut rows, m.cols);
        for (i, &v) in rows.iter().enumerate() {
            for j in 0..m.cols {
                m.data[i * m.cols + j] = ((v >> j) & 1) as u8;
            }
        }
        return pivots;
    }
    let f = m.field.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else { continue };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.data[r * cols + c] as Fe);
        if inv != 1 {
            for j in c..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j] as Fe, inv) as u8;
            }
        }
        for i in 0..rows {
            let factor = m.data[i * cols + c] as Fe;
            if i == r || factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            for j in c..cols {
                let pv = m.data[r * cols + j] as Fe;
                if pv != 0 {
                    m.data[i * cols + j] = f.add(m.data[i * cols + j] as Fe, f.mul(neg, pv)) as u8;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rref_packed(rows: &mut [u128], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let bit = 1u128 << c;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else { continue };
        rows.swap(p, r);
        let pr = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pr;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Reduced row echelon form (same shape, zero rows last) and rank.
pub fn rref(m: &MatF) -> (MatF, usize) {
    let mut out = m.clone();
    let rank = rref_in_place(&mut out).len();
    (out, rank)
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
pub fn nullspace(m: &MatF) -> Vec<Vec<Fe>> {
    let (r, _) = rref(m);
    let f = &m.field;
    let pivots: Vec<usize> = (0..r.rows).filter_map(|i| r.row(i).iter().position(|&x| x != 0)).collect();
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; m.cols];
        v[free] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(r.get(i, free));
        }
        out.push(v);
    }
    out
}

/// A subspace of F_q^n held by its unique RREF generator.
#[derive(Clone)]
pub struct Subspace {
    field: FieldSpec,
    n: usize,
    pivots: Vec<usize>,
    data: Vec<u8>,
}

/// Canonical subspace spanned by the rows of `gen` (rank drops are accepted).
pub fn subspace(gen: &MatF) -> Subspace {
    let mut m = gen.clone();
    let pivots = rref_in_place(&mut m);
    let k = pivots.len();
    m.data.truncate(k * m.cols);
    Subspace { field: m.field, n: m.cols, pivots, data: m.data }
}

/// Like [`subspace`] but requires `gen` to have full row rank.
pub fn subspace_full_rank(gen: &MatF) -> Result<Subspace> {
    if gen.rows == 0 {
        return param("degenerate subspace: generator has no rows");
    }
    let s = subspace(gen);
    if s.dim() != gen.rows {
        return param(format!("generator has rank {} but {} rows", s.dim(), gen.rows));
    }
    Ok(s)
}

impl Subspace {
    /// Wraps a matrix that is already in RREF with no zero rows.
    pub fn from_rref(m: &MatF) -> Result<Subspace> {
        if !m.is_rref() || m.rank() != m.rows {
            return param("matrix is not a full-rank RREF generator");
        }
        Ok(subspace(m))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rref(&self) -> MatF {
        MatF { field: self.field.clone(), rows: self.dim(), cols: self.n, data: self.data.clone() }
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    /// Identifying vector: ones exactly at the pivot columns.
    pub fn ident(&self) -> Vec<u8> {
        let mut v = vec![0; self.n];
        for &p in &self.pivots {
            v[p] = 1;
        }
        v
    }

    pub fn packed(&self) -> Option<Vec<u128>> {
        pack_gf2(&self.rref())
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.data.hash(state);
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.data.cmp(&other.data))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, k={}, ident={})", self.n, self.dim(), ident_string(&self.ident()))
    }
}

fn check_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.n != v.n || u.field != v.field {
        return param(format!("ambient mismatch: F_{}^{} vs F_{}^{}", u.field.order(), u.n, v.field.order(), v.n));
    }
    Ok(())
}

/// dim(U + V).
pub fn sum_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
    check_ambient(u, v)?;
    let stacked = MatF::vcat(&u.field, &[&u.rref(), &v.rref()]);
    Ok(stacked.rank())
}

/// dim(U ∩ V) = dim U + dim V - dim(U + V).
pub fn intersection_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(u.dim() + v.dim() - sum_dim(u, v)?)
}

/// Subspace distance dim(U + V) - dim(U ∩ V).
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(2 * sum_dim(u, v)? - u.dim() - v.dim())
}

pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn ident_string(v: &[u8]) -> String {
    v.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

pub fn parse_ident(s: &str) -> Result<Vec<u8>> {
    s.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Param(format!("identifying vector {s:?} must be binary"))),
        })
        .collect()
}

/// Ferrers diagram of `u` and its Ferrers tableaux form, the latter as a
/// `k x (n-k)` matrix whose entries outside the diagram are zero.
pub fn ferrers_tableaux(u: &Subspace) -> (FerrersDiagram, MatF) {
    let k = u.dim();
    let ident = u.ident();
    let free: Vec<usize> = (0..u.n).filter(|&c| ident[c] == 0).collect();
    let diagram = FerrersDiagram::from_ident(&ident);
    let mut fill = MatF::zeros(&u.field, k, free.len());
    for (i, &p) in u.pivots.iter().enumerate() {
        for (j, &c) in free.iter().enumerate() {
            if c > p {
                fill.set(i, j, u.data[i * u.n + c] as Fe);
            }
        }
    }
    (diagram, fill)
}

/// τ_A(B): inserts zero columns into `b` at the pivot positions of `a`.
pub fn embed_tau(a: &MatF, b: &MatF) -> Result<MatF> {
    if !a.is_rref() || a.rank() != a.rows {
        return param("τ_A needs A in RREF with full row rank");
    }
    if b.cols + a.rows != a.cols {
        return param(format!("τ_A: B has {} columns, expected {}", b.cols, a.cols - a.rows));
    }
    let pivots = rref(a).0;
    let piv: Vec<usize> = (0..a.rows).map(|i| pivots.row(i).iter().position(|&x| x != 0).unwrap()).collect();
    let mut out = MatF::zeros(&a.field, b.rows, a.cols);
    let mut j = 0;
    for c in 0..a.cols {
        if piv.contains(&c) {
            continue;
        }
        for i in 0..b.rows {
            out.set(i, c, b.get(i, j));
        }
        j += 1;
    }
    Ok(out)
}

/// Every k-dimensional subspace of F_q^n, in canonical order. Intended for small n.
pub fn all_subspaces(field: &FieldSpec, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let q = field.order() as u8;
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let p = &pivots;
                ((p[i] + 1)..n).filter(move |c| !p.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let mut m = MatF::zeros(field, k, n);
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        let mut digits = vec![0u8; slots.len()];
        loop {
            for (&(i, c), &d) in slots.iter().zip(&digits) {
                m.set(i, c, d as Fe);
            }
            out.push(Subspace { field: field.clone(), n, pivots: pivots.clone(), data: m.data.clone() });
            let mut pos = 0;
            while pos < digits.len() && digits[pos] == q - 1 {
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
            digits[pos] += 1;
        }
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field;

    fn gf2() -> FieldSpec {
        field(2).unwrap()
    }

    #[test]
    fn rref_fixed_points() {
        let f = gf2();
        let i3 = MatF::identity(&f, 3);
        assert_eq!(rref(&i3), (i3.clone(), 3));
        let z = MatF::zeros(&f, 2, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
        let xi = MatF::parse(&f, "11000100;00100110;00001001").unwrap();
        assert!(xi.is_rref());
        assert_eq!(rref(&xi), (xi.clone(), 3));
    }

    #[test]
    fn generic_rref_over_gf3() {
        let f = field(3).unwrap();
        let m = MatF::parse(&f, "2 1 0;1 2 1;0 0 2").unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 2);
        assert!(r.is_rref());
        assert_eq!(r, MatF::parse(&f, "120;001;000").unwrap());
    }

    #[test]
    fn example_identifying_vector_and_tableaux() {
        let f = gf2();
        let xi = MatF::parse(&f, "11000100;00100110;00001001").unwrap();
        let u = subspace(&xi);
        assert_eq!(ident_string(&u.ident()), "10101000");
        let (diagram, fill) = ferrers_tableaux(&u);
        assert_eq!(diagram.gamma(), &[1, 2, 3, 3, 3]);
        assert_eq!(fill, MatF::parse(&f, "10100;00110;00001").unwrap());
    }

    #[test]
    fn subspace_is_row_space_invariant() {
        let f = gf2();
        let a = MatF::parse(&f, "1011;0110").unwrap();
        let b = MatF::parse(&f, "0110;1101").unwrap();
        assert_eq!(subspace(&a), subspace(&b));
        let c = MatF::parse(&f, "100101;010011;001110").unwrap();
        assert_eq!(ident_string(&subspace(&c).ident()), "111000");
    }

    #[test]
    fn distances() {
        let f = gf2();
        let u = subspace(&MatF::parse(&f, "1000;0100").unwrap());
        let v = subspace(&MatF::parse(&f, "0010;0001").unwrap());
        assert_eq!(subspace_distance(&u, &u).unwrap(), 0);
        assert_eq!(subspace_distance(&u, &v).unwrap(), 4);
        let w = subspace(&MatF::parse(&f, "1000").unwrap());
        assert_eq!(subspace_distance(&u, &w).unwrap(), 1);
        assert_eq!(intersection_dim(&u, &w).unwrap(), 1);
        let other = subspace(&MatF::parse(&f, "10000").unwrap());
        assert!(subspace_distance(&u, &other).is_err());
    }

    #[test]
    fn tau_matches_worked_display() {
        let f = gf2();
        let a = MatF::parse(&f, "1100001;0011001;0000011").unwrap();
        let b = MatF::parse(&f, "0101;1100;0010;0011").unwrap();
        let t = embed_tau(&a, &b).unwrap();
        assert_eq!(t, MatF::parse(&f, "0001001;0101000;0000100;0000101").unwrap());
        let i2 = MatF::parse(&f, "1000;0100").unwrap();
        let b2 = MatF::parse(&f, "11;01;10").unwrap();
        assert_eq!(embed_tau(&i2, &b2).unwrap(), MatF::parse(&f, "0011;0001;0010").unwrap());
        assert!(embed_tau(&a, &MatF::zeros(&f, 2, 4)).unwrap().is_zero());
        assert!(embed_tau(&a, &MatF::zeros(&f, 2, 3)).is_err());
    }

    #[test]
    fn grassmannian_enumeration_counts() {
        assert_eq!(all_subspaces(&gf2(), 4, 2).len(), 35);
        assert_eq!(all_subspaces(&field(3).unwrap(), 4, 2).len(), 130);
        assert_eq!(all_subspaces(&gf2(), 5, 0).len(), 1);
        assert_eq!(all_subspaces(&gf2(), 5, 5).len(), 1);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = field(3).unwrap();
        let m = MatF::parse(&f, "1201;0112;1010").unwrap();
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 4 - m.rank());
        for v in ns {
            let x = MatF::from_rows(&f, &[v]).unwrap().transpose();
            assert!(m.mul(&x).is_zero());
        }
    }

    #[test]
    fn full_rank_check() {
        let f = gf2();
        assert!(subspace_full_rank(&MatF::parse(&f, "11;11").unwrap()).is_err());
        assert!(subspace_full_rank(&MatF::zeros(&f, 0, 3)).is_err());
    }
}
