//! Command line front end and the code file format.
//!
//! A code file is a header `CDC q=<q> n=<n> count=<N>` followed by the words in
//! lexicographic order of their text, each a line `k=<k>` and k rows of n element
//! indices, with one blank line between words.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{evaluate, table_new_bounds, BoundRecipe, MddcSource, RECIPE_IDS};
use crate::construct::{
    c1_count, c2_count, check_idents, fdrmc_builder, insert_c3, insert_c3_count, insert_c4, insert_c4_count,
    insert_c4_hat, insert_c4_hat_built_count, lifted_mrd, mddc_augment_greedy, mddc_union, mixed_dimension, multilevel,
    multilevel_insert_code, multilevel_insert_count, multilevel_mix_code, multilevel_mix_count, rfdrmc_builder,
    rfdrmc_size, small_cdc, CodeSet, InsertKind, InsertParams, MixParams,
};
use crate::error::{param, Error, Result};
use crate::ferrers::{diagram_from_vector, fdrmc_size, MATERIALIZE_LIMIT};
use crate::gf::{field, FieldSpec};
use crate::matq::{parse_ident, subspace_full_rank, MatF, Subspace};
use crate::qnum::{big, delsarte_rank_count, delta_mrd, BigCount, ConstantsTable};
use crate::rankcode::gabidulin;
use crate::verify::{verify_insertion_condition, verify_mddc, VerifyOptions, DEFAULT_SAMPLE_PAIRS, DEFAULT_SEED};

/// One word in code file form, without a trailing newline.
pub fn format_word(u: &Subspace) -> String {
    let n = u.ambient();
    let mut s = format!("k={}", u.dim());
    for row in u.entries().chunks(n) {
        s.push('\n');
        s.extend(row.iter().map(|&x| char::from_digit(x as u32, 10).expect("element index below 10")));
    }
    s
}

pub fn write_code(c: &CodeSet) -> String {
    let mut words: Vec<String> = c.words().iter().map(format_word).collect();
    words.sort();
    let mut out = format!("CDC q={} n={} count={}\n", c.field().order(), c.ambient(), words.len());
    out.push_str(&words.join("\n\n"));
    if !words.is_empty() {
        out.push('\n');
    }
    out
}

fn header_field(tok: Option<&str>, key: &str) -> std::result::Result<usize, String> {
    let tok = tok.ok_or_else(|| format!("header is missing {key}="))?;
    let v = tok.strip_prefix(key).and_then(|r| r.strip_prefix('=')).ok_or_else(|| format!("expected {key}=, found {tok:?}"))?;
    v.parse().map_err(|_| format!("bad {key} value {v:?}"))
}

/// Parses a code file. Generators need full rank but not RREF; words are stored in
/// canonical form.
pub fn read_code(text: &str) -> Result<CodeSet> {
    let lines: Vec<&str> = text.lines().collect();
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let head = lines.first().ok_or_else(|| perr(1, "empty file".into()))?;
    let mut toks = head.split_whitespace();
    if toks.next() != Some("CDC") {
        return Err(perr(1, "expected header `CDC q=<q> n=<n> count=<N>`".into()));
    }
    let q = header_field(toks.next(), "q").map_err(|m| perr(1, m))?;
    let n = header_field(toks.next(), "n").map_err(|m| perr(1, m))?;
    let count = header_field(toks.next(), "count").map_err(|m| perr(1, m))?;
    let f = field(q as u32).map_err(|e| perr(1, e.to_string()))?;
    let mut words = Vec::with_capacity(count);
    let mut i = 1;
    while i < lines.len() {
        if lines[i].trim().is_empty() {
            i += 1;
            continue;
        }
        let no = i + 1;
        let k: usize = lines[i]
            .trim()
            .strip_prefix("k=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| perr(no, format!("expected `k=<k>`, found {:?}", lines[i])))?;
        if k == 0 || k > n {
            return Err(perr(no, format!("dimension {k} outside 1..={n}")));
        }
        let mut data = Vec::with_capacity(k * n);
        for r in 0..k {
            let ln = i + 1 + r;
            let row = lines.get(ln).ok_or_else(|| perr(ln + 1, format!("word ends after {r} of {k} rows")))?.trim();
            if row.chars().count() != n {
                return Err(perr(ln + 1, format!("row has {} entries, expected {n}", row.chars().count())));
            }
            for ch in row.chars() {
                match ch.to_digit(10) {
                    Some(x) if (x as usize) < q => data.push(x as u8),
                    _ => return Err(perr(ln + 1, format!("{ch:?} is not an element of GF({q})"))),
                }
            }
        }
        let g = MatF::from_vec(&f, k, n, data);
        words.push(subspace_full_rank(&g).map_err(|e| perr(no, e.to_string()))?);
        i += 1 + k;
    }
    if words.len() != count {
        return Err(perr(lines.len(), format!("header announces {count} words, found {}", words.len())));
    }
    Ok(CodeSet::new(&f, n, words, 0, "file"))
}

#[derive(Parser, Debug)]
#[command(name = "cdc", version, about = "Constant dimension subspace codes: constructions, exact bounds, verification")]
pub struct Cli {
    /// Constants table (overrides CDC_CONSTANTS and the built-in table).
    #[arg(long, global = true)]
    pub constants: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a lower bound recipe, or `--id table-new` for the table of new bounds.
    Bound(BoundArgs),
    /// Build a code and write it in code file form.
    Construct(ConstructArgs),
    /// Check the distances of a code file.
    Verify(VerifyArgs),
    /// Rank distribution of a Gabidulin code against the closed form.
    Rankdist(RankdistArgs),
    /// Reproduce the table of new bounds.
    Table,
}

#[derive(Args, Debug, Clone, Default)]
pub struct MixArgs {
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    /// Dimension set T1, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub t1_set: Vec<usize>,
    /// Dimension set T2, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub t2_set: Vec<usize>,
    #[arg(long)]
    pub t1: Option<usize>,
    #[arg(long)]
    pub t2: Option<usize>,
    #[arg(long)]
    pub a1: Option<usize>,
    #[arg(long)]
    pub a2: Option<usize>,
    #[arg(long)]
    pub b1: Option<usize>,
    #[arg(long)]
    pub b2: Option<usize>,
    #[arg(long)]
    pub c1: Option<usize>,
    #[arg(long)]
    pub c2: Option<usize>,
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Param(format!("--{name} is required")))
}

impl MixArgs {
    fn mix(&self) -> Result<MixParams> {
        if self.t1_set.is_empty() || self.t2_set.is_empty() {
            return param("--t1-set and --t2-set are required");
        }
        MixParams::new(
            need(self.n1, "n1")?,
            need(self.n2, "n2")?,
            need(self.k, "k")?,
            need(self.delta, "delta")?,
            &self.t1_set,
            &self.t2_set,
        )
    }

    fn insert(&self, p: &MixParams, kind: InsertKind) -> Result<InsertParams> {
        let c = match (self.c1, self.c2) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        };
        let ip = InsertParams {
            t1: need(self.t1, "t1")?,
            t2: need(self.t2, "t2")?,
            a1: need(self.a1, "a1")?,
            a2: need(self.a2, "a2")?,
            b1: need(self.b1, "b1")?,
            b2: need(self.b2, "b2")?,
            c,
        };
        ip.check(p, kind)?;
        Ok(ip)
    }

    fn describe(&self) -> String {
        let mut s = Vec::new();
        let scalars = [
            ("n1", self.n1),
            ("n2", self.n2),
            ("k", self.k),
            ("delta", self.delta),
            ("t1", self.t1),
            ("t2", self.t2),
            ("a1", self.a1),
            ("a2", self.a2),
            ("b1", self.b1),
            ("b2", self.b2),
            ("c1", self.c1),
            ("c2", self.c2),
        ];
        for (name, v) in scalars {
            if let Some(v) = v {
                s.push(format!("{name}={v}"));
            }
        }
        for (name, set) in [("t1-set", &self.t1_set), ("t2-set", &self.t2_set)] {
            if !set.is_empty() {
                let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
                s.push(format!("{name}={}", items.join(",")));
            }
        }
        s.join(" ")
    }
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// Recipe id, `new2-<n>`, `new3-<n>` or `table-new`.
    #[arg(long)]
    pub id: String,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Source of the X1 dimension counts: auto, table, union or augment.
    #[arg(long, default_value = "auto")]
    pub x1: String,
    /// Source of the X2 dimension counts.
    #[arg(long, default_value = "auto")]
    pub x2: String,
    #[command(flatten)]
    pub mix: MixArgs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// lifted-mrd, multilevel, mixed, insert-c3, insert-c4, insert-c4-hat, mddc-union,
    /// mddc-augment, mul-mix or mul-ins.
    #[arg(long)]
    pub recipe: String,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Identifying vectors, one binary string per line.
    #[arg(long)]
    pub idents: Option<PathBuf>,
    /// Prefix length for rank-restricted corners in the multilevel recipe.
    #[arg(long)]
    pub prefix: Option<usize>,
    /// Number of extra dimension levels for mddc-union.
    #[arg(long, default_value_t = 1)]
    pub levels: usize,
    /// Also include C1 ∪ C2 in the output of the inserting recipes.
    #[arg(long)]
    pub with_base: bool,
    /// Print the size only.
    #[arg(long)]
    pub count_only: bool,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub mix: MixArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Code file to check.
    #[arg(long)]
    pub input: PathBuf,
    /// Claimed distance between words of equal dimension.
    #[arg(long)]
    pub d: usize,
    /// Claimed distance between words of different dimensions (defaults to --d).
    #[arg(long)]
    pub d0: Option<usize>,
    #[arg(long, default_value_t = crate::verify::DEFAULT_EXHAUSTIVE_WORDS)]
    pub exhaustive_words: usize,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_PAIRS)]
    pub sample_pairs: u64,
    /// Also check the intersection condition of inserted words (needs the split parameters).
    #[arg(long)]
    pub insertion: bool,
    #[command(flatten)]
    pub mix: MixArgs,
}

#[derive(Args, Debug)]
pub struct RankdistArgs {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Enumerate the code when it has at most this many words.
    #[arg(long, default_value_t = 1 << 16)]
    pub limit: u64,
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn table_for(cli: &Cli) -> Result<ConstantsTable> {
    match &cli.constants {
        Some(p) => ConstantsTable::load(p).map_err(|e| with_path(p, e)),
        None => ConstantsTable::default_table(),
    }
}

fn with_path(p: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", p.display()) },
        Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", p.display()))),
        other => other,
    }
}

/// Runs a parsed command line and returns what it would print.
pub fn execute(cli: &Cli) -> Outcome {
    let mut out = Outcome { stdout: String::new(), stderr: String::new(), code: 0 };
    let r = match &cli.command {
        Command::Bound(a) => cmd_bound(cli, a, &mut out),
        Command::Table => cmd_table(cli, &mut out),
        Command::Construct(a) => cmd_construct(cli, a, &mut out),
        Command::Verify(a) => cmd_verify(cli, a, &mut out),
        Command::Rankdist(a) => cmd_rankdist(a, &mut out),
    };
    if let Err(e) = r {
        let _ = writeln!(out.stderr, "error: {e}");
        out.code = e.exit_code();
    }
    out
}

/// Parses `std::env::args`, runs, prints and returns the exit status.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let o = execute(&cli);
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    o.code
}

fn parse_recipe(a: &BoundArgs) -> Result<BoundRecipe> {
    let (x1, x2) = (MddcSource::parse(&a.x1)?, MddcSource::parse(&a.x2)?);
    let q = a.q;
    let id = a.id.as_str();
    if let Some(n) = id.strip_prefix("new2-").or(id.strip_prefix("new3-")) {
        let n: usize = n.parse().map_err(|_| Error::Param(format!("bad recipe id {id:?}")))?;
        return Ok(if id.starts_with("new2") { BoundRecipe::New2 { q, n } } else { BoundRecipe::New3 { q, n } });
    }
    Ok(match id {
        "new2" => BoundRecipe::New2 { q, n: need(a.n, "n")? },
        "new3" => BoundRecipe::New3 { q, n: need(a.n, "n")? },
        "c-2-12" => {
            if q != 2 {
                return param("c-2-12 is stated for q = 2");
            }
            BoundRecipe::C212 { h: need(a.h, "h")? }
        }
        "c-q-12" => BoundRecipe::Cq12 { q, delta: need(a.mix.delta, "delta")?, h: need(a.h, "h")? },
        "c-2k" => BoundRecipe::C2k { q, k: need(a.mix.k, "k")?, delta: need(a.mix.delta, "delta")? },
        "mix-general" => BoundRecipe::MixGeneral { q, p: a.mix.mix()?, x1, x2 },
        "mulmix" => BoundRecipe::MulMix { q, p: a.mix.mix()?, x1, x2 },
        "insert2" | "mulins2" => {
            let p = a.mix.mix()?;
            let ip = a.mix.insert(&p, InsertKind::Insert2)?;
            if id == "insert2" {
                BoundRecipe::Insert2 { q, p, ip, x1, x2 }
            } else {
                BoundRecipe::MulIns2 { q, p, ip, x1, x2 }
            }
        }
        "insert2p" | "mulins2p" => {
            let p = a.mix.mix()?;
            let ip = a.mix.insert(&p, InsertKind::Insert2Hat)?;
            if id == "insert2p" {
                BoundRecipe::Insert2p { q, p, ip, x1, x2 }
            } else {
                BoundRecipe::MulIns2p { q, p, ip, x1, x2 }
            }
        }
        _ => return param(format!("unknown recipe {id:?}; known: {}, table-new", RECIPE_IDS.join(", "))),
    })
}

fn cmd_table(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let table = table_for(cli)?;
    let rep = table_new_bounds(&table);
    let _ = write!(out.stdout, "{rep}");
    for l in rep.bound_lines() {
        let _ = writeln!(out.stdout, "{l}");
    }
    if !rep.ok() {
        out.code = 1;
    }
    Ok(())
}

fn cmd_bound(cli: &Cli, a: &BoundArgs, out: &mut Outcome) -> Result<()> {
    if a.id == "table-new" {
        return cmd_table(cli, out);
    }
    let table = table_for(cli)?;
    let recipe = parse_recipe(a)?;
    let _ = writeln!(out.stderr, "# bound {recipe:?}");
    let e = evaluate(&recipe, &table)?;
    let _ = writeln!(out.stdout, "{}", e.value);
    let _ = write!(out.stderr, "{e}");
    let status = if e.pending.is_empty() { "OK" } else { "PENDING-SOURCE" };
    let _ = writeln!(out.stdout, "BOUND {} {} {} {} {} {status}", e.q, e.n, e.d, e.k, e.value);
    Ok(())
}

/// Toy MDDC with dimension set `t` in F_q^n: one code when |t| = 1, a union when the
/// dimensions step by δ, and a greedy augmentation for {k, k-δ+1}.
pub fn toy_mddc(f: &FieldSpec, n: usize, delta: usize, t: &BTreeSet<usize>) -> Result<CodeSet> {
    let k = *t.iter().next_back().ok_or_else(|| Error::Param("empty dimension set".into()))?;
    if t.len() == 1 {
        return small_cdc(f, n, delta, k);
    }
    if t.iter().all(|&s| (k - s) % delta == 0) {
        let parts: Result<Vec<CodeSet>> = t.iter().rev().map(|&s| small_cdc(f, n, delta, s)).collect();
        return mddc_union(&parts?, delta);
    }
    if t.len() == 2 && t.contains(&(k + 1 - delta)) {
        return mddc_augment_greedy(&small_cdc(f, n, delta, k)?, delta);
    }
    param(format!("no toy MDDC with dimensions {t:?} and δ = {delta}"))
}

fn small_cdc_size(q: u32, n: usize, d2: usize, k: usize) -> BigCount {
    let d = d2 / 2;
    if d > k.min(n - k) {
        big(1)
    } else {
        delta_mrd(k as u32, (n - k) as u32, d as u32, q)
    }
}

fn read_idents(path: &Path) -> Result<Vec<Vec<u8>>> {
    let text = std::fs::read_to_string(path).map_err(|e| with_path(path, e.into()))?;
    let mut v = Vec::new();
    for (no, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        v.push(parse_ident(l).map_err(|e| Error::Parse { line: no + 1, msg: format!("{}: {e}", path.display()) })?);
    }
    Ok(v)
}

fn cmd_construct(cli: &Cli, a: &ConstructArgs, out: &mut Outcome) -> Result<()> {
    let f = field(a.q)?;
    let q = a.q;
    let _ = writeln!(
        out.stderr,
        "# construct recipe={} q={} n={:?} d={:?} idents={:?} prefix={:?} levels={} with_base={} seed={} {}",
        a.recipe,
        a.q,
        a.n,
        a.d,
        a.idents,
        a.prefix,
        a.levels,
        a.with_base,
        cli.seed,
        a.mix.describe()
    );
    let code = match a.recipe.as_str() {
        "lifted-mrd" => {
            let (k, n, d) = (need(a.mix.k, "k")?, need(a.n, "n")?, need(a.d, "d")?);
            if a.count_only {
                return count(out, delta_mrd(k as u32, n as u32, d as u32, q));
            }
            lifted_mrd(&f, k, n, d)?
        }
        "multilevel" => {
            let path = a.idents.as_ref().ok_or_else(|| Error::Param("--idents is required".into()))?;
            let idents = read_idents(path)?;
            let d = need(a.d, "d")?;
            check_idents(&idents, d)?;
            let mut total = BigCount::default();
            for v in &idents {
                total += match a.prefix {
                    Some(p) => rfdrmc_size(&f, v, p, d)?,
                    None => fdrmc_size(&f, &diagram_from_vector(v)?, d)?,
                };
            }
            if a.count_only {
                return count(out, total);
            }
            if total > big(MATERIALIZE_LIMIT) {
                let _ = writeln!(out.stderr, "count-only fallback: {total} words exceed the materialization limit {MATERIALIZE_LIMIT}");
                return count(out, total);
            }
            match a.prefix {
                Some(p) => multilevel(&f, &idents, d, &rfdrmc_builder(&f, p, d))?,
                None => multilevel(&f, &idents, d, &fdrmc_builder(&f, d))?,
            }
        }
        "mddc-union" => {
            let (n, k, delta) = (need(a.n, "n")?, need(a.mix.k, "k")?, need(a.mix.delta, "delta")?);
            let dims: Vec<usize> = (0..=a.levels).take_while(|i| i * delta < k).map(|i| k - i * delta).collect();
            if a.count_only {
                return count(out, dims.iter().map(|&s| small_cdc_size(q, n, 2 * delta, s)).sum());
            }
            let parts: Result<Vec<CodeSet>> = dims.iter().map(|&s| small_cdc(&f, n, delta, s)).collect();
            mddc_union(&parts?, delta)?
        }
        "mddc-augment" => {
            let (n, k, delta) = (need(a.n, "n")?, need(a.mix.k, "k")?, need(a.mix.delta, "delta")?);
            let c = mddc_augment_greedy(&small_cdc(&f, n, delta, k)?, delta)?;
            if a.count_only {
                return count(out, big(c.len() as u64));
            }
            c
        }
        "mixed" | "insert-c3" | "insert-c4" | "insert-c4-hat" | "mul-mix" | "mul-ins" => {
            let p = a.mix.mix()?;
            let x1 = toy_mddc(&f, p.n1, p.delta, &p.t1)?;
            let x2 = toy_mddc(&f, p.n2, p.delta, &p.t2)?;
            let eta = |x: &CodeSet| x.dims().into_iter().map(|(k, c)| (k, big(c as u64))).collect();
            let base_count = c1_count(q, &p, &eta(&x1))? + c2_count(q, &p, &eta(&x2))?;
            let with_base = a.with_base || a.recipe == "mixed";
            let (part_count, build) = inserted_part(&f, &a.recipe, &p, &a.mix)?;
            let total = if with_base { &base_count + &part_count } else { part_count };
            if a.count_only {
                return count(out, total);
            }
            if total > big(MATERIALIZE_LIMIT) {
                return Err(Error::Resource(format!("{total} words exceed the materialization limit; use --count-only")));
            }
            let part = build()?;
            if with_base {
                let (c1, c2) = mixed_dimension(&f, &p, &x1, &x2)?;
                CodeSet::union(&[&c1, &c2, &part], a.recipe.clone())?
            } else {
                part
            }
        }
        other => return param(format!("unknown construct recipe {other:?}")),
    };
    let text = write_code(&code);
    match &a.out {
        Some(p) => std::fs::write(p, text).map_err(|e| with_path(p, e.into()))?,
        None => out.stdout.push_str(&text),
    }
    let _ = writeln!(out.stderr, "# wrote {} words", code.len());
    Ok(())
}

type Builder<'a> = Box<dyn Fn() -> Result<CodeSet> + 'a>;

/// Size and builder of the part a mixed-family recipe adds to C1 ∪ C2.
fn inserted_part<'a>(f: &'a FieldSpec, recipe: &str, p: &'a MixParams, m: &MixArgs) -> Result<(BigCount, Builder<'a>)> {
    let q = f.order();
    let aq = |n: usize, d2: usize, k: usize| Ok(small_cdc_size(q, n, d2, k));
    let d = p.delta;
    Ok(match recipe {
        "mixed" => (big(0), Box::new(move || Ok(CodeSet::new(f, p.n(), vec![], 2 * d, "empty")))),
        "insert-c3" => {
            let ip = m.insert(p, InsertKind::Insert)?;
            let y = ip.t2 + p.t1_min() - p.k;
            let build = move || insert_c3(f, p, &ip, &small_cdc(f, ip.t1, d, ip.a1)?, &small_cdc(f, y, d, ip.a2)?);
            (insert_c3_count(q, p, &ip, &aq)?, Box::new(build))
        }
        "insert-c4" => {
            let ip = m.insert(p, InsertKind::Insert2)?;
            let z = p.n2 - ip.t2;
            let build = move || insert_c4(f, p, &ip, &small_cdc(f, ip.t1, d, ip.a1)?, &small_cdc(f, z, d, ip.a2)?);
            (insert_c4_count(q, p, &ip, &aq)?, Box::new(build))
        }
        "insert-c4-hat" => {
            let ip = m.insert(p, InsertKind::Insert2Hat)?;
            let z = p.n2 - ip.t2;
            let build = move || insert_c4_hat(f, p, &ip, &small_cdc(f, ip.t1, d, ip.a1)?, &small_cdc(f, z, d, ip.a2)?);
            (insert_c4_hat_built_count(f, p, &ip, &aq)?, Box::new(build))
        }
        "mul-mix" => (multilevel_mix_count(q, p)?, Box::new(move || multilevel_mix_code(f, p))),
        _ => {
            let ip = m.insert(p, InsertKind::Insert)?;
            (multilevel_insert_count(q, p, &ip)?, Box::new(move || multilevel_insert_code(f, p, &ip)))
        }
    })
}

fn count(out: &mut Outcome, n: BigCount) -> Result<()> {
    let _ = writeln!(out.stdout, "{n}");
    Ok(())
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs, out: &mut Outcome) -> Result<()> {
    let text = std::fs::read_to_string(&a.input).map_err(|e| with_path(&a.input, e.into()))?;
    let code = read_code(&text).map_err(|e| with_path(&a.input, e))?;
    let opts = VerifyOptions { exhaustive_words: a.exhaustive_words, sample_pairs: a.sample_pairs, seed: cli.seed, jobs: cli.jobs };
    let rep = verify_mddc(&code, a.d, a.d0.unwrap_or(a.d), &opts);
    let _ = write!(out.stdout, "{rep}");
    let mut pass = rep.pass;
    if a.insertion {
        let p = a.mix.mix()?;
        let ins = verify_insertion_condition(&code, &p);
        for l in ins.lines() {
            let _ = writeln!(out.stdout, "{l}");
        }
        pass &= ins.pass;
    }
    if !pass {
        out.code = 1;
    }
    Ok(())
}

fn cmd_rankdist(a: &RankdistArgs, out: &mut Outcome) -> Result<()> {
    let f = field(a.q)?;
    let lo = a.m.min(a.n);
    let code = gabidulin(&f, a.m, a.n, a.d)?;
    let mut hist = vec![0u64; lo + 1];
    let enumerated = code.size() <= big(a.limit);
    if enumerated {
        for w in code.enumerate_with_limit(a.limit)? {
            hist[w.rank()] += 1;
        }
    }
    let _ = writeln!(out.stdout, "# D({},{},{},i)_{} for a Gabidulin code of size {}", a.m, a.n, a.d, a.q, code.size());
    let _ = writeln!(out.stdout, "{:>3} {:>24} {:>24}", "i", "formula", "enumerated");
    let mut ok = true;
    for (i, &h) in hist.iter().enumerate() {
        let formula = if i == 0 {
            big(1)
        } else if i < a.d {
            big(0)
        } else {
            delsarte_rank_count(a.m as u32, a.n as u32, a.d as u32, i as u32, a.q)?
        };
        let e = if enumerated { h.to_string() } else { "-".into() };
        if enumerated && big(h) != formula {
            ok = false;
        }
        let _ = writeln!(out.stdout, "{i:>3} {formula:>24} {e:>24}");
    }
    if !enumerated {
        let _ = writeln!(out.stderr, "code has more than {} words; enumeration skipped", a.limit);
    }
    if !ok {
        out.code = 1;
    }
    Ok(())
}
