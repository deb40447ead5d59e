//! Controllability verdicts for `ẋ = Ax + Bu` over `F(z)`.
//!
//! Two exact tests (pencil rank with the gcd of maximal minors, and the
//! Kalman controllability matrix) decide controllability. The certificate
//! search looks for pairwise-disjoint unimodular bases of row blocks of
//! `[sI − A | B]`; finding one yields CERTIFIED, and failing to find one
//! yields INCONCLUSIVE, never NOT_CONTROLLABLE.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{det, minors_gcd_in_s, rank_with_sampling};
use crate::matrix::{build_pencil, check_s_free, SymMatrix};
use crate::matroid::{max_union_of_bases, BaseKind, UnimodularOrPlain, VectorMatroid};
use crate::poly::Polynomial;
use crate::rational::RationalFunction;
use crate::space::ParamSpace;

/// Default column limit for exact minor enumeration.
pub const DEFAULT_MAX_COLUMNS: usize = 12;
/// Default cap on bases enumerated per block.
pub const DEFAULT_MAX_BASES: usize = crate::matroid::DEFAULT_BASE_CAP;

#[derive(Clone, Debug)]
pub struct SystemDef {
    name: String,
    a: SymMatrix,
    b: SymMatrix,
}

impl SystemDef {
    pub fn new(name: impl Into<String>, a: SymMatrix, b: SymMatrix) -> Result<Self> {
        a.space().check(b.space())?;
        if !a.is_square() || a.rows() == 0 {
            return Err(Error::Dimension(format!(
                "A must be a non-empty square matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        if b.rows() != a.rows() {
            return Err(Error::Dimension(format!(
                "B has {} rows but A is {}x{}",
                b.rows(),
                a.rows(),
                a.cols()
            )));
        }
        check_s_free(&a, "A")?;
        check_s_free(&b, "B")?;
        Ok(SystemDef {
            name: name.into(),
            a,
            b,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &ParamSpace {
        self.a.space()
    }

    pub fn a(&self) -> &SymMatrix {
        &self.a
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    /// State dimension.
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// Input dimension.
    pub fn m(&self) -> usize {
        self.b.cols()
    }

    /// `[sI − A | B]`, columns labelled `a1..a(n+m)`.
    pub fn pencil(&self) -> SymMatrix {
        build_pencil(&self.a, &self.b).expect("validated at construction")
    }

    /// `[B, AB, …, A^(n−1)B]`.
    pub fn controllability_matrix(&self) -> SymMatrix {
        let mut blocks = vec![self.b.clone()];
        for _ in 1..self.n() {
            let next = self.a.mul(blocks.last().unwrap()).expect("shapes agree");
            blocks.push(next);
        }
        blocks
            .iter()
            .skip(1)
            .fold(blocks[0].clone(), |acc, blk| acc.hstack(blk).expect("row counts agree"))
    }
}

/// Disjoint, covering, nonempty blocks of row indices (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPartition {
    blocks: Vec<Vec<usize>>,
}

impl RowPartition {
    /// Validates 0-based `blocks` against `n` rows. Blocks are kept in the
    /// given order; rows inside a block are sorted.
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {} is empty", i + 1)));
            }
            let mut block = block;
            block.sort_unstable();
            for &r in &block {
                if r >= n {
                    return Err(Error::InvalidPartition(format!(
                        "row {} is out of range 1..{n}",
                        r + 1
                    )));
                }
                if std::mem::replace(&mut seen[r], true) {
                    return Err(Error::InvalidPartition(format!("row {} appears twice", r + 1)));
                }
            }
            out.push(block);
        }
        if let Some(r) = seen.iter().position(|&x| !x) {
            return Err(Error::InvalidPartition(format!("row {} is not covered", r + 1)));
        }
        Ok(RowPartition { blocks: out })
    }

    /// Builds a partition from 1-based row numbers.
    pub fn from_one_based(blocks: &[Vec<usize>], n: usize) -> Result<Self> {
        let zero = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&r| {
                        r.checked_sub(1).ok_or_else(|| {
                            Error::InvalidPartition("row numbers start at 1".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero, n)
    }

    /// Parses a block spec such as `"1,2;3,4,5"` (1-based rows).
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        let blocks = spec
            .split(';')
            .map(|block| {
                block
                    .split(',')
                    .map(|t| {
                        let t = t.trim();
                        t.parse::<usize>().map_err(|_| {
                            Error::InvalidPartition(format!("'{t}' is not a row number"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&blocks, n)
    }

    /// One block per row.
    pub fn singletons(n: usize) -> Self {
        RowPartition {
            blocks: (0..n).map(|r| vec![r]).collect(),
        }
    }

    /// Consecutive blocks of the given sizes.
    pub fn consecutive(sizes: &[usize]) -> Self {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&k| {
                let b = (start..start + k).collect();
                start += k;
                b
            })
            .collect();
        RowPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|r| r + 1).collect())
            .collect()
    }
}

impl fmt::Display for RowPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .one_based()
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// One block of a certificate: the base labels and, optionally, the claimed
/// determinant of the block rows restricted to those columns (taken in
/// ascending column order).
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateBlock {
    pub labels: Vec<String>,
    pub witness: Option<RationalFunction>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub partition: RowPartition,
    pub blocks: Vec<CertificateBlock>,
}

impl Certificate {
    /// Per-block base sizes.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.labels.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.sizes().iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Controllable,
    NotControllable,
    Certified,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Controllable => "CONTROLLABLE",
            Status::NotControllable => "NOT_CONTROLLABLE",
            Status::Certified => "CERTIFIED",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Status::Controllable | Status::Certified)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Pbh,
    Kalman,
    Matroid,
    Composite,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Pbh => "pbh",
            Method::Kalman => "kalman",
            Method::Matroid => "matroid",
            Method::Composite => "composite",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    Certificate(Certificate),
    /// Gcd in `s` of the maximal minors of the pencil.
    MinorGcd(Polynomial),
    Rank { rank: usize, expected: usize },
    Limit(String),
    Note(String),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Certificate(c) => write!(
                f,
                "disjoint unimodular bases of sizes {} (total {})",
                c.sizes()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("+"),
                c.total()
            ),
            Evidence::MinorGcd(g) => write!(f, "gcd of maximal minors in s: {g}"),
            Evidence::Rank { rank, expected } => write!(f, "rank {rank}, expected {expected}"),
            Evidence::Limit(msg) => write!(f, "limit exceeded: {msg}"),
            Evidence::Note(msg) => f.write_str(msg),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub method: Method,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.evidence {
            Evidence::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.method, self.status, self.evidence)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Pencil column limit (n + m) for exact minor enumeration.
    pub max_columns: usize,
    /// Bases examined per block during certificate search.
    pub max_bases: usize,
    /// Seed for the random-evaluation rank fast path; `None` disables it.
    pub seed: Option<u64>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_columns: DEFAULT_MAX_COLUMNS,
            max_bases: DEFAULT_MAX_BASES,
            seed: None,
        }
    }
}

/// Exact test: `rank[sI − A | B] = n` for every `s`, decided by the generic
/// rank and the gcd in `s` of all `n × n` minors.
pub fn pbh_check(sys: &SystemDef, opts: &CheckOptions) -> Verdict {
    let n = sys.n();
    let cols = n + sys.m();
    let verdict = |status, evidence| Verdict {
        status,
        method: Method::Pbh,
        evidence,
    };
    if cols > opts.max_columns {
        return verdict(
            Status::Inconclusive,
            Evidence::Limit(format!(
                "pencil has {cols} columns, max-columns is {}",
                opts.max_columns
            )),
        );
    }
    let pencil = sys.pencil();
    let rank = rank_with_sampling(&pencil, opts.seed);
    if rank < n {
        return verdict(Status::NotControllable, Evidence::Rank { rank, expected: n });
    }
    let g = minors_gcd_in_s(&pencil, n).expect("pencil denominators are free of s");
    if g.is_one() {
        verdict(Status::Controllable, Evidence::MinorGcd(g))
    } else {
        verdict(Status::NotControllable, Evidence::MinorGcd(g))
    }
}

/// Exact test: rank of `[B, AB, …, A^(n−1)B]` over `F(z)` equals `n`.
pub fn kalman_check(sys: &SystemDef, opts: &CheckOptions) -> Verdict {
    let n = sys.n();
    let k = sys.controllability_matrix();
    let rank = rank_with_sampling(&k, opts.seed);
    Verdict {
        status: if rank == n {
            Status::Controllable
        } else {
            Status::NotControllable
        },
        method: Method::Kalman,
        evidence: Evidence::Rank { rank, expected: n },
    }
}

/// Searches for pairwise-disjoint unimodular bases, one per row block of
/// the pencil, with sizes equal to the block row counts. The default
/// partition is one block per row.
pub fn certificate_search(
    sys: &SystemDef,
    partition: Option<&RowPartition>,
    opts: &CheckOptions,
) -> Result<Verdict> {
    search(sys, partition, opts, Method::Matroid)
}

fn search(
    sys: &SystemDef,
    partition: Option<&RowPartition>,
    opts: &CheckOptions,
    method: Method,
) -> Result<Verdict> {
    let n = sys.n();
    let partition = match partition {
        Some(p) => RowPartition::new(p.blocks().to_vec(), n)?,
        None => RowPartition::singletons(n),
    };
    let inconclusive = |msg: String| Verdict {
        status: Status::Inconclusive,
        method,
        evidence: Evidence::Note(msg),
    };
    let pencil = sys.pencil();
    let mut matroids = Vec::with_capacity(partition.len());
    for (i, rows) in partition.blocks().iter().enumerate() {
        let m = VectorMatroid::new(pencil.select_rows(rows))?;
        let rank = m.rank();
        if rank < rows.len() {
            return Ok(inconclusive(format!(
                "block {} has rank {rank} < {} rows, so it has no square base",
                i + 1,
                rows.len()
            )));
        }
        matroids.push(m);
    }
    let refs: Vec<&VectorMatroid> = matroids.iter().collect();
    let sizes: Vec<usize> = partition.blocks().iter().map(Vec::len).collect();
    let found = max_union_of_bases(&refs, &sizes, BaseKind::Unimodular, opts.max_bases)?;
    match found.family {
        Some(family) => {
            let blocks = family
                .into_iter()
                .map(|b| match b {
                    UnimodularOrPlain::Unimodular(u) => CertificateBlock {
                        labels: u.base.labels().to_vec(),
                        witness: Some(u.witness.reduced()),
                    },
                    UnimodularOrPlain::Plain(_) => unreachable!("unimodular search"),
                })
                .collect();
            Ok(Verdict {
                status: Status::Certified,
                method,
                evidence: Evidence::Certificate(Certificate { partition, blocks }),
            })
        }
        None if found.truncated => Ok(inconclusive(format!(
            "base enumeration hit max-bases = {} before a disjoint family was found",
            opts.max_bases
        ))),
        None => Ok(inconclusive(format!(
            "no pairwise-disjoint unimodular bases for partition {partition}"
        ))),
    }
}

/// Parallel composition: block-diagonal `A`, vertically stacked `B`.
pub fn compose_parallel(subs: &[SystemDef]) -> Result<SystemDef> {
    let first = subs
        .first()
        .ok_or_else(|| Error::Dimension("nothing to compose".into()))?;
    for s in &subs[1..] {
        first.space().check(s.space())?;
        if s.m() != first.m() {
            return Err(Error::Dimension(format!(
                "input dimensions differ: '{}' has m = {}, '{}' has m = {}",
                first.name(),
                first.m(),
                s.name(),
                s.m()
            )));
        }
    }
    if subs.len() == 1 {
        return Ok(first.clone());
    }
    let a_blocks: Vec<&SymMatrix> = subs.iter().map(|s| s.a()).collect();
    let a = SymMatrix::block_diag(&a_blocks)?;
    let b = subs[1..]
        .iter()
        .try_fold(first.b().clone(), |acc, s| acc.vstack(s.b()))?;
    let name = subs.iter().map(|s| s.name()).collect::<Vec<_>>().join("+");
    SystemDef::new(name, a, b)
}

/// Checks each subsystem exactly, then searches the composite pencil for a
/// certificate using one block per subsystem.
pub fn composite_certificate_check(subs: &[SystemDef], opts: &CheckOptions) -> Result<Verdict> {
    let composite = compose_parallel(subs)?;
    for (i, s) in subs.iter().enumerate() {
        let v = pbh_check(s, opts);
        if v.status != Status::Controllable {
            return Ok(Verdict {
                status: Status::Inconclusive,
                method: Method::Composite,
                evidence: Evidence::Note(format!(
                    "subsystem {} ('{}') is {}: {}",
                    i + 1,
                    s.name(),
                    v.status,
                    v.evidence
                )),
            });
        }
    }
    let sizes: Vec<usize> = subs.iter().map(SystemDef::n).collect();
    let partition = RowPartition::consecutive(&sizes);
    search(&composite, Some(&partition), opts, Method::Composite)
}

/// A clause of the certificate check that did not hold.
#[derive(Clone, Debug, PartialEq)]
pub enum CertificateFailure {
    Overlap { label: String, first: usize, second: usize },
    Total { total: usize, n: usize },
    NotSquare { block: usize, size: usize, rows: usize },
    SizeNotRank { block: usize, size: usize, rank: usize },
    Dependent { block: usize },
    WitnessNotUnit { block: usize, witness: RationalFunction },
    WitnessMismatch { block: usize, claimed: RationalFunction, computed: RationalFunction },
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::Overlap { label, first, second } => {
                write!(f, "disjointness: {label} is used by blocks {first} and {second}")
            }
            CertificateFailure::Total { total, n } => {
                write!(f, "total: base sizes sum to {total}, state dimension is {n}")
            }
            CertificateFailure::NotSquare { block, size, rows } => {
                write!(f, "block {block}: base has {size} columns for {rows} rows")
            }
            CertificateFailure::SizeNotRank { block, size, rank } => {
                write!(f, "block {block}: base size {size} differs from block rank {rank}")
            }
            CertificateFailure::Dependent { block } => {
                write!(f, "block {block}: columns are linearly dependent")
            }
            CertificateFailure::WitnessNotUnit { block, witness } => {
                write!(f, "block {block}: witness {witness} is not a unit (zero or depends on s)")
            }
            CertificateFailure::WitnessMismatch { block, claimed, computed } => {
                write!(f, "block {block}: claimed witness {claimed} but determinant is {computed}")
            }
        }
    }
}

/// Outcome of [`verify_certificate`]: recomputed witnesses (one per block,
/// absent when the block selection is not square) and every failed clause.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateCheck {
    pub witnesses: Vec<Option<RationalFunction>>,
    pub failures: Vec<CertificateFailure>,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recomputes every clause of a certificate from scratch.
pub fn verify_certificate(sys: &SystemDef, cert: &Certificate) -> Result<CertificateCheck> {
    let n = sys.n();
    let partition = RowPartition::new(cert.partition.blocks().to_vec(), n)
        .map_err(|e| Error::ShapeMismatch(format!("certificate partition: {e}")))?;
    if cert.blocks.len() != partition.len() {
        return Err(Error::ShapeMismatch(format!(
            "certificate has {} bases for {} partition blocks",
            cert.blocks.len(),
            partition.len()
        )));
    }
    let pencil = sys.pencil();
    let mut failures = Vec::new();
    let mut witnesses = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; pencil.cols()];
    for (i, (rows, block)) in partition.blocks().iter().zip(&cert.blocks).enumerate() {
        let idx = i + 1;
        let mut cols = Vec::with_capacity(block.labels.len());
        for label in &block.labels {
            let c = pencil
                .label_index(label)
                .map_err(|_| Error::ShapeMismatch(format!("unknown column label '{label}'")))?;
            match owner[c] {
                Some(j) => failures.push(CertificateFailure::Overlap {
                    label: label.clone(),
                    first: j,
                    second: idx,
                }),
                None => owner[c] = Some(idx),
            }
            cols.push(c);
        }
        cols.sort_unstable();
        cols.dedup();
        let m = VectorMatroid::new(pencil.select_rows(rows))?;
        let rank = m.rank();
        if cols.len() != rank {
            failures.push(CertificateFailure::SizeNotRank {
                block: idx,
                size: cols.len(),
                rank,
            });
        }
        if !m.is_independent(&cols)? {
            failures.push(CertificateFailure::Dependent { block: idx });
        }
        if cols.len() != rows.len() {
            failures.push(CertificateFailure::NotSquare {
                block: idx,
                size: cols.len(),
                rows: rows.len(),
            });
            witnesses.push(None);
            continue;
        }
        let computed = det(&pencil.submatrix(rows, &cols))?.reduced();
        if !computed.is_unit_in_s() {
            failures.push(CertificateFailure::WitnessNotUnit {
                block: idx,
                witness: computed.clone(),
            });
        }
        if let Some(claimed) = &block.witness {
            if claimed.space().same_as(computed.space()) && *claimed != computed {
                failures.push(CertificateFailure::WitnessMismatch {
                    block: idx,
                    claimed: claimed.clone(),
                    computed: computed.clone(),
                });
            }
        }
        witnesses.push(Some(computed));
    }
    let total: usize = cert.blocks.iter().map(|b| b.labels.len()).sum();
    if total != n {
        failures.push(CertificateFailure::Total { total, n });
    }
    Ok(CertificateCheck { witnesses, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_str;

    fn sys(params: &[&str], a: &[&[&str]], b: &[&[&str]]) -> SystemDef {
        let sp = ParamSpace::new(params.iter().copied()).unwrap();
        let mat = |rows: &[&[&str]], cols: usize| {
            let entries = rows
                .iter()
                .flat_map(|r| r.iter().map(|e| parse_str(e, &sp).unwrap()))
                .collect();
            SymMatrix::new(&sp, rows.len(), cols, entries).unwrap()
        };
        let m = b.first().map_or(0, |r| r.len());
        SystemDef::new("t", mat(a, a.len()), mat(b, m)).unwrap()
    }

    #[test]
    fn partition_parsing() {
        let p = RowPartition::parse("1,2;3,4,5", 5).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(p.to_string(), "1,2;3,4,5");
        assert!(RowPartition::parse("1,2;2,3", 3).is_err());
        assert!(RowPartition::parse("1;3", 3).is_err());
        assert!(RowPartition::parse("0,1", 1).is_err());
        assert!(RowPartition::parse("1,x", 2).is_err());
    }

    #[test]
    fn scalar_system() {
        let s = sys(&["z1"], &[&["z1"]], &[&["1"]]);
        let opts = CheckOptions::default();
        assert_eq!(pbh_check(&s, &opts).status, Status::Controllable);
        assert_eq!(kalman_check(&s, &opts).status, Status::Controllable);
        assert_eq!(certificate_search(&s, None, &opts).unwrap().status, Status::Certified);
    }

    #[test]
    fn repeated_mode_is_not_controllable() {
        let s = sys(&["z1"], &[&["z1", "0"], &["0", "z1"]], &[&["1"], &["0"]]);
        let opts = CheckOptions::default();
        let v = pbh_check(&s, &opts);
        assert_eq!(v.status, Status::NotControllable);
        match v.evidence {
            Evidence::MinorGcd(g) => {
                assert_eq!(RationalFunction::from(g), parse_str("s - z1", s.space()).unwrap())
            }
            e => panic!("unexpected evidence {e:?}"),
        }
        assert_eq!(kalman_check(&s, &opts).status, Status::NotControllable);
        assert_eq!(certificate_search(&s, None, &opts).unwrap().status, Status::Inconclusive);
    }

    #[test]
    fn column_cap_is_inconclusive() {
        let s = sys(&["z1"], &[&["z1"]], &[&["1"]]);
        let opts = CheckOptions {
            max_columns: 1,
            ..CheckOptions::default()
        };
        let v = pbh_check(&s, &opts);
        assert_eq!(v.status, Status::Inconclusive);
        assert!(matches!(v.evidence, Evidence::Limit(_)));
    }

    #[test]
    fn compose_rejects_input_mismatch() {
        let a = sys(&["z1"], &[&["z1"]], &[&["1"]]);
        let b = sys(&["z1"], &[&["z1"]], &[&["1", "0"]]);
        let err = compose_parallel(&[a, b]).unwrap_err().to_string();
        assert!(err.contains("m = 1") && err.contains("m = 2"), "{err}");
    }

    #[test]
    fn search_output_reverifies() {
        let s = sys(&["z1", "z2"], &[&["z1", "1"], &["0", "z2"]], &[&["0"], &["1"]]);
        let v = certificate_search(&s, None, &CheckOptions::default()).unwrap();
        let cert = v.certificate().expect("certified");
        let check = verify_certificate(&s, cert).unwrap();
        assert!(check.is_valid(), "{:?}", check.failures);
    }
}
