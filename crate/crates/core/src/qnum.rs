//! Exact q-analog counting: Gaussian binomials, MRD and rank-restricted sizes,
//! the Delsarte rank distribution, N_q, and the table of best-known sizes.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{param, Error, Result};

pub type BigCount = BigUint;

pub fn big(x: u64) -> BigCount {
    BigUint::from(x)
}

pub fn qpow(q: u32, e: u64) -> BigCount {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// [n k]_q; zero when k > n.
pub fn gauss_binom(n: u32, k: u32, q: u32) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qpow(q, (n - i) as u64) - 1u32;
        den *= qpow(q, (i + 1) as u64) - 1u32;
    }
    num / den
}

/// Singleton-bound size q^{max(m,n)(min(m,n)-d+1)}, or 1 when min(m,n) < d.
pub fn delta_mrd(m: u32, n: u32, d: u32, q: u32) -> BigCount {
    let (lo, hi) = (m.min(n), m.max(n));
    if lo < d || d == 0 {
        return BigUint::one();
    }
    qpow(q, hi as u64 * (lo - d + 1) as u64)
}

/// Number of rank-i words in a linear [m x n, d]_q MRD code.
pub fn delsarte_rank_count(m: u32, n: u32, d: u32, i: u32, q: u32) -> Result<BigCount> {
    let (lo, hi) = (m.min(n), m.max(n));
    if d == 0 || i < d || i > lo {
        return param(format!("rank {i} outside [{d}, {lo}] for a {m}x{n} code of distance {d}"));
    }
    let mut sum = BigInt::zero();
    for j in 0..=(i - d) {
        let term = BigInt::from(qpow(q, (j as u64) * (j as u64).saturating_sub(1) / 2))
            * BigInt::from(gauss_binom(i, j, q))
            * (BigInt::from(qpow(q, hi as u64 * (i - d - j + 1) as u64)) - 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let total = BigInt::from(gauss_binom(lo, i, q)) * sum;
    Ok(total.to_biguint().expect("rank distribution is non-negative"))
}

/// 1 + sum_{i=d}^{r} D(m,n,d,i)_q, with the convention that it is 1 when min(m,n) < d.
pub fn delta_rrmc(m: u32, n: u32, d: u32, r: u32, q: u32) -> BigCount {
    let lo = m.min(n);
    if lo < d || d == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::one();
    for i in d..=r.min(lo) {
        total += delsarte_rank_count(m, n, d, i, q).expect("index in range");
    }
    total
}

/// Signed floor of the N_q(x, y, z) quotient given S = S_q(x, 2y, z).
pub fn n_q_with(x: u32, y: u32, z: u32, q: u32, s: &BigCount) -> Result<BigInt> {
    if y == 0 || z + 1 < y || z - y + 1 > x {
        return param(format!("N_q({x},{y},{z}) is undefined"));
    }
    let w = z - y + 1;
    let num = BigInt::from(gauss_binom(x, w, q)) - BigInt::from(s.clone()) * BigInt::from(gauss_binom(z, y - 1, q));
    let mut den = BigUint::zero();
    for i in 0..y {
        den += qpow(q, (i * i) as u64) * gauss_binom(w, i, q) * gauss_binom(x - w, i, q);
    }
    Ok(num.div_floor(&BigInt::from(den)))
}

/// N_q(x, y, z), resolving S_q(x, 2y, z) from the table.
pub fn n_q(x: u32, y: u32, z: u32, q: u32, table: &ConstantsTable) -> Result<BigInt> {
    let s = table.a_q(q, x, 2 * y, z)?;
    n_q_with(x, y, z, q, &s)
}

/// max{v, 0} as an unsigned count.
pub fn clamp0(v: &BigInt) -> BigCount {
    if v.is_negative() {
        BigUint::zero()
    } else {
        v.to_biguint().unwrap()
    }
}

/// Exact quotient of two counts that is known to divide evenly.
pub fn ratio(a: &BigCount, b: &BigCount) -> BigCount {
    debug_assert!((a % b).is_zero());
    a / b
}

pub fn to_u64(v: &BigCount) -> Option<u64> {
    v.to_u64()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constant {
    pub value: BigCount,
    pub source: String,
}

impl Constant {
    /// True when the source string marks the value as not pinned down.
    pub fn is_pending(&self) -> bool {
        self.source.contains("pending-source")
    }
}

/// Key of an MDDC dimension-count record: (q, n, d1, d0, k).
pub type EtaKey = (u32, u32, u32, u32, u32);

/// Best-known CDC sizes S_q(n, d, k) plus dimension counts of externally built MDDCs.
#[derive(Clone, Debug, Default)]
pub struct ConstantsTable {
    a: BTreeMap<(u32, u32, u32, u32), Constant>,
    eta: BTreeMap<EtaKey, Constant>,
}

pub const DEFAULT_CONSTANTS: &str = include_str!("../data/constants.txt");
pub const CONSTANTS_ENV: &str = "CDC_CONSTANTS";

impl ConstantsTable {
    pub fn parse(text: &str) -> Result<ConstantsTable> {
        let mut t = ConstantsTable::default();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let perr = |msg: String| Error::Parse { line, msg };
            let nums = |range: std::ops::Range<usize>| -> Result<Vec<u32>> {
                fields[range]
                    .iter()
                    .map(|f| f.parse::<u32>().map_err(|_| perr(format!("expected integer, found {f:?}"))))
                    .collect()
            };
            match fields[0] {
                "A" => {
                    if fields.len() < 7 {
                        return Err(perr("expected `A <q> <n> <d> <k> <value> <source>`".into()));
                    }
                    let v = nums(1..5)?;
                    let value = fields[5].parse::<BigUint>().map_err(|_| perr(format!("bad value {:?}", fields[5])))?;
                    let key = (v[0], v[1], v[2], v[3]);
                    let c = Constant { value, source: fields[6..].join(" ") };
                    if t.a.insert(key, c).is_some() {
                        return Err(perr(format!("duplicate entry S_{}({},{},{})", key.0, key.1, key.2, key.3)));
                    }
                }
                "E" => {
                    if fields.len() < 8 {
                        return Err(perr("expected `E <q> <n> <d1> <d0> <k> <value> <source>`".into()));
                    }
                    let v = nums(1..6)?;
                    let value = fields[6].parse::<BigUint>().map_err(|_| perr(format!("bad value {:?}", fields[6])))?;
                    let key = (v[0], v[1], v[2], v[3], v[4]);
                    let c = Constant { value, source: fields[7..].join(" ") };
                    if t.eta.insert(key, c).is_some() {
                        return Err(perr(format!("duplicate dimension count {key:?}")));
                    }
                }
                other => return Err(perr(format!("unknown record type {other:?}"))),
            }
        }
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<ConstantsTable> {
        let text = std::fs::read_to_string(path)?;
        ConstantsTable::parse(&text)
    }

    /// The embedded table, or the file named by `CDC_CONSTANTS` when that is set.
    pub fn default_table() -> Result<ConstantsTable> {
        match std::env::var_os(CONSTANTS_ENV) {
            Some(p) => ConstantsTable::load(Path::new(&p)),
            None => ConstantsTable::parse(DEFAULT_CONSTANTS),
        }
    }

    pub fn entry(&self, q: u32, n: u32, d: u32, k: u32) -> Option<&Constant> {
        self.a.get(&(q, n, d, k))
    }

    pub fn eta_entry(&self, key: EtaKey) -> Option<&Constant> {
        self.eta.get(&key)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32, u32, u32), &Constant)> {
        self.a.iter().map(|(k, v)| (*k, v))
    }

    pub fn insert(&mut self, q: u32, n: u32, d: u32, k: u32, value: BigCount, source: &str) {
        self.a.insert((q, n, d, k), Constant { value, source: source.to_string() });
    }

    /// Size of the best (n, d, {k})_q code known to the table. Trivial cases
    /// (k in {0, n}, d beyond 2 min(k, n-k), d = 2, spreads) are closed forms;
    /// anything else must be listed or the lookup fails.
    pub fn a_q(&self, q: u32, n: u32, d: u32, k: u32) -> Result<BigCount> {
        if k > n {
            return param(format!("A_{q}({n},{d},{{{k}}}): dimension exceeds ambient"));
        }
        if let Some(c) = self.entry(q, n, d, k).or_else(|| self.entry(q, n, d, n - k)) {
            return Ok(c.value.clone());
        }
        let kk = k.min(n - k);
        if kk == 0 || d > 2 * kk {
            return Ok(BigUint::one());
        }
        if d <= 2 {
            return Ok(gauss_binom(n, kk, q));
        }
        if d == 2 * kk && n % kk == 0 {
            return Ok((qpow(q, n as u64) - 1u32) / (qpow(q, kk as u64) - 1u32));
        }
        Err(Error::Lookup(format!("no constant for S_{q}({n},{d},{k}); add `A {q} {n} {d} {k} <value> <source>`")))
    }

    /// True when the lookup resolves through an entry whose source is pending.
    pub fn a_q_pending(&self, q: u32, n: u32, d: u32, k: u32) -> bool {
        k <= n && self.entry(q, n, d, k).or_else(|| self.entry(q, n, d, n - k)).is_some_and(Constant::is_pending)
    }

    pub fn eta(&self, key: EtaKey) -> Result<BigCount> {
        self.eta
            .get(&key)
            .map(|c| c.value.clone())
            .ok_or_else(|| Error::Lookup(format!("no MDDC dimension count E {} {} {} {} {}", key.0, key.1, key.2, key.3, key.4)))
    }
}
