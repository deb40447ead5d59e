//! JSON documents: system files, certificates, and check reports.
//!
//! Matrix entries and witnesses are strings in the expression grammar.
//! Parse errors are reported against an origin naming the file and entry,
//! e.g. `sys.json A[2][1]:1:5`, where the column counts characters inside
//! the expression string.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::checker::{
    Certificate, CertificateBlock, Evidence, RowPartition, SystemDef, Verdict,
};
use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::parser::{parse_expr, ExprSource, Origin};
use crate::rational::RationalFunction;
use crate::space::ParamSpace;

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_entry(text: &str, origin: String, space: &ParamSpace) -> Result<RationalFunction> {
    let src = ExprSource::with_origin(
        text,
        Origin {
            name: origin,
            line: 1,
            column: 1,
        },
    );
    Ok(parse_expr(&src, space)?)
}

/// A system `ẋ = Ax + Bu` as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub name: String,
    pub parameters: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    /// Default row partition for certificate search, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
}

impl SystemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&read_file(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Renders an in-memory system; entries are printed in the grammar.
    pub fn from_system(sys: &SystemDef) -> Self {
        let render = |m: &SymMatrix| -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|r| m.row(r).iter().map(|e| e.reduced().to_string()).collect())
                .collect()
        };
        SystemFile {
            name: sys.name().to_string(),
            parameters: sys.space().params().to_vec(),
            a: render(sys.a()),
            b: render(sys.b()),
            partition: None,
        }
    }

    pub fn space(&self) -> Result<ParamSpace> {
        ParamSpace::new(self.parameters.iter().map(String::as_str))
    }

    /// Parses and validates every entry. `origin` names the document in
    /// diagnostics.
    pub fn to_system(&self, origin: &str) -> Result<SystemDef> {
        let space = self.space()?;
        self.to_system_in(&space, origin)
    }

    /// Like [`SystemFile::to_system`] but in a given parameter space, which
    /// must match the declared parameters.
    pub fn to_system_in(&self, space: &ParamSpace, origin: &str) -> Result<SystemDef> {
        if space.params() != self.parameters.as_slice() {
            return Err(Error::SpaceMismatch);
        }
        let n = self.a.len();
        if n == 0 {
            return Err(Error::InvalidFile("A has no rows".into()));
        }
        let a = self.matrix(&self.a, "A", n, space, origin)?;
        if self.b.len() != n {
            return Err(Error::InvalidFile(format!(
                "B has {} rows but A has {n}",
                self.b.len()
            )));
        }
        let m = self.b[0].len();
        let b = self.matrix(&self.b, "B", m, space, origin)?;
        SystemDef::new(self.name.clone(), a, b)
    }

    fn matrix(
        &self,
        rows: &[Vec<String>],
        which: &str,
        cols: usize,
        space: &ParamSpace,
        origin: &str,
    ) -> Result<SymMatrix> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidFile(format!(
                    "{which} row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, text) in row.iter().enumerate() {
                let name = format!("{origin} {which}[{}][{}]", r + 1, c + 1);
                entries.push(parse_entry(text, name, space)?);
            }
        }
        SymMatrix::new(space, rows.len(), cols, entries)
    }

    /// The stored partition, validated against `n` rows.
    pub fn row_partition(&self, n: usize) -> Result<Option<RowPartition>> {
        self.partition
            .as_ref()
            .map(|p| RowPartition::from_one_based(p, n))
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseEntry {
    /// 1-based index of the partition block.
    pub block: usize,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Exported certificate: partition blocks (1-based rows) and one base per
/// block with its determinant witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub system: String,
    pub partition: Vec<Vec<usize>>,
    pub bases: Vec<BaseEntry>,
}

impl CertificateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&read_file(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_certificate(system: &str, cert: &Certificate) -> Self {
        CertificateFile {
            system: system.to_string(),
            partition: cert.partition.one_based(),
            bases: cert
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| BaseEntry {
                    block: i + 1,
                    labels: b.labels.clone(),
                    witness: b.witness.as_ref().map(ToString::to_string),
                })
                .collect(),
        }
    }

    /// Parses witnesses and checks that every block has exactly one base.
    pub fn to_certificate(&self, sys: &SystemDef, origin: &str) -> Result<Certificate> {
        let partition = RowPartition::from_one_based(&self.partition, sys.n())
            .map_err(|e| Error::ShapeMismatch(e.to_string()))?;
        let k = partition.len();
        let mut blocks: Vec<Option<CertificateBlock>> = vec![None; k];
        for (i, entry) in self.bases.iter().enumerate() {
            if entry.block == 0 || entry.block > k {
                return Err(Error::ShapeMismatch(format!(
                    "base {} names block {}, partition has {k} blocks",
                    i + 1,
                    entry.block
                )));
            }
            let slot = &mut blocks[entry.block - 1];
            if slot.is_some() {
                return Err(Error::ShapeMismatch(format!(
                    "block {} has more than one base",
                    entry.block
                )));
            }
            let witness = entry
                .witness
                .as_ref()
                .map(|w| parse_entry(w, format!("{origin} bases[{}].witness", i + 1), sys.space()))
                .transpose()?;
            *slot = Some(CertificateBlock {
                labels: entry.labels.clone(),
                witness,
            });
        }
        let blocks = blocks
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or_else(|| Error::ShapeMismatch(format!("block {} has no base", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate { partition, blocks })
    }
}

/// One verdict in a JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub method: String,
    pub status: String,
    /// Human-readable evidence, identical to the text report.
    pub evidence: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateFile>,
}

impl ReportEntry {
    pub fn from_verdict(system: &str, v: &Verdict) -> Self {
        let mut e = ReportEntry {
            method: v.method.to_string(),
            status: v.status.to_string(),
            evidence: v.evidence.to_string(),
            gcd: None,
            rank: None,
            expected_rank: None,
            certificate: None,
        };
        match &v.evidence {
            Evidence::MinorGcd(g) => e.gcd = Some(g.to_string()),
            Evidence::Rank { rank, expected } => {
                e.rank = Some(*rank);
                e.expected_rank = Some(*expected);
            }
            Evidence::Certificate(c) => {
                e.certificate = Some(CertificateFile::from_certificate(system, c))
            }
            Evidence::Limit(_) | Evidence::Note(_) => {}
        }
        e
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub system: String,
    pub n: usize,
    pub m: usize,
    pub results: Vec<ReportEntry>,
    pub exit_status: i32,
}

impl Report {
    pub fn new(sys: &SystemDef, verdicts: &[Verdict], exit_status: i32) -> Self {
        Report {
            system: sys.name().to_string(),
            n: sys.n(),
            m: sys.m(),
            results: verdicts
                .iter()
                .map(|v| ReportEntry::from_verdict(sys.name(), v))
                .collect(),
            exit_status,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
