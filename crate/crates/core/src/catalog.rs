//! Catalog files: newline-delimited JSON with a header record followed by
//! one record per [`CatalogEntry`], plus CSV export and verification.
//!
//! ```text
//! {"record":"header","schema_version":1,...}
//! {"record":"entry","n":2,"alpha":1,...}
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{isqrt_ceil, provenance, CatalogEntry, SweepConfig};
use crate::distance::Method;
use crate::error::{Error, Result};
use crate::gbcode::GbSpec;
use crate::lattice::Lattice2D;
use crate::torus_graph::EdgeVector;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogHeader {
    pub schema_version: u32,
    pub generator: String,
    pub max_length: usize,
    pub seed: u64,
    pub oracle_cap: usize,
    pub parity_refinement: bool,
}

impl CatalogHeader {
    pub fn for_sweep(config: &SweepConfig) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            generator: concat!("gbcodex ", env!("CARGO_PKG_VERSION")).to_string(),
            max_length: config.max_length,
            seed: config.seed,
            oracle_cap: config.budget.oracle_cap,
            parity_refinement: config.budget.parity_refinement,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum Record {
    Header(CatalogHeader),
    Entry(CatalogEntry),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub header: Option<CatalogHeader>,
    pub entries: Vec<CatalogEntry>,
}

pub fn render_ndjson(header: &CatalogHeader, entries: &[CatalogEntry]) -> Result<String> {
    let mut out = String::new();
    let mut push = |record: &Record| -> Result<()> {
        let line = serde_json::to_string(record)
            .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
        out.push_str(&line);
        out.push('\n');
        Ok(())
    };
    push(&Record::Header(header.clone()))?;
    for e in entries {
        push(&Record::Entry(e.clone()))?;
    }
    Ok(out)
}

pub const CSV_COLUMNS: &str = "length,k,d,n,alpha,lower,upper,method";

/// One row per entry; `lower` is the certified lower bound.
pub fn render_csv(entries: &[CatalogEntry]) -> String {
    let mut out = String::from(CSV_COLUMNS);
    out.push('\n');
    for e in entries {
        let r = &e.report;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            e.length,
            e.k,
            e.d,
            e.n,
            e.alpha,
            r.certified_lower(),
            r.upper_bound,
            r.method.as_str()
        )
        .expect("writing to a String");
    }
    out
}

/// Strict parse: any malformed line is an error.
pub fn parse_ndjson(text: &str) -> Result<Catalog> {
    let mut catalog = Catalog::default();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(line).map_err(|e| Error::Record {
            line: i + 1,
            message: e.to_string(),
        })?;
        match record {
            Record::Header(h) if catalog.header.is_none() && catalog.entries.is_empty() => {
                catalog.header = Some(h)
            }
            Record::Header(_) => {
                return Err(Error::Record {
                    line: i + 1,
                    message: "header must be the first record".into(),
                })
            }
            Record::Entry(e) => catalog.entries.push(e),
        }
    }
    Ok(catalog)
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(io_error(path))
}

pub fn read_catalog(path: &Path) -> Result<Catalog> {
    parse_ndjson(&fs::read_to_string(path).map_err(io_error(path))?)
}

/// Recomputes every invariant of one entry; returns the first violation.
pub fn check_entry(e: &CatalogEntry) -> std::result::Result<(), String> {
    let n = e.n;
    let fail = |what: String| Err(what);
    if n < 2 || e.alpha == 0 || e.alpha >= n {
        return fail(format!("alpha = {} out of range for n = {n}", e.alpha));
    }
    if e.length != 2 * n {
        return fail(format!("length {} != 2n = {}", e.length, 2 * n));
    }
    if e.mirror_alpha != n - e.alpha {
        return fail(format!("mirror alpha {} != n - alpha", e.mirror_alpha));
    }
    if !(e.alpha as u64 * e.alpha as u64 + 1).is_multiple_of(n as u64) {
        return fail(format!("alpha^2 != -1 mod n for alpha = {}", e.alpha));
    }
    let spec = GbSpec::canonical(e.alpha, n).map_err(|err| err.to_string())?;
    // `build` rejects non-orthogonal check matrices.
    let code = spec.build().map_err(|err| err.to_string())?;
    let (k_rank, k_formula) = (code.dimension(), spec.dimension_formula());
    if k_rank != k_formula || e.k != k_rank {
        return fail(format!(
            "k = {} but rank gives {k_rank}, gcd formula {k_formula}",
            e.k
        ));
    }

    let lattice = Lattice2D::gb(e.alpha, n).map_err(|err| err.to_string())?;
    let summary = lattice.summary();
    if e.lattice != summary {
        return fail(format!(
            "lattice summary {:?} != recomputed {summary:?}",
            e.lattice
        ));
    }
    if summary.lambda_sq < n as u64 || summary.lambda_sq % n as u64 != 0 {
        return fail(format!(
            "lambda^2 = {} is not a positive multiple of n",
            summary.lambda_sq
        ));
    }

    let r = &e.report;
    if (r.n, r.alpha) != (n, e.alpha) {
        return fail(format!("report is for (alpha, n) = ({}, {})", r.alpha, r.n));
    }
    if r.lambda_sq != summary.lambda_sq || r.lower_bound != isqrt_ceil(summary.lambda_sq) {
        return fail(format!(
            "lower bound {} inconsistent with lambda^2",
            r.lower_bound
        ));
    }
    if r.lattice_bound_proven != (n >= 6) {
        return fail("hypothesis flag inconsistent with n".into());
    }
    let lower = r.certified_lower();
    if !(lower <= e.d && e.d <= r.upper_bound) {
        return fail(format!(
            "bounds out of order: lower {lower}, d {}, upper {}",
            e.d, r.upper_bound
        ));
    }
    if e.d != r.distance() {
        return fail(format!("d = {} but report gives {}", e.d, r.distance()));
    }
    if r.method == Method::IntervalOnly && r.exact.is_some() {
        return fail("interval-only report carries an exact value".into());
    }
    if r.method != Method::IntervalOnly && r.exact.is_none() {
        return fail(format!("{} report lacks an exact value", r.method.as_str()));
    }

    if !r.certificate.windows(2).all(|w| w[0] < w[1]) {
        return fail("certificate indices are not strictly ascending".into());
    }
    if let Some(&bad) = r.certificate.iter().find(|&&i| i >= 2 * n) {
        return fail(format!("certificate index {bad} outside [0, {})", 2 * n));
    }
    if r.certificate.len() as u64 != r.upper_bound {
        return fail(format!(
            "certificate weight {} != upper bound {}",
            r.certificate.len(),
            r.upper_bound
        ));
    }
    let edges =
        EdgeVector::from_edge_indices(2 * n, &r.certificate).map_err(|err| err.to_string())?;
    if !code
        .is_logical_x(edges.bits())
        .map_err(|err| err.to_string())?
    {
        return fail("certificate is not a logical operator".into());
    }
    if e.provenance != provenance(n, e.d) {
        return fail(format!(
            "provenance {} does not match",
            e.provenance.as_str()
        ));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    pub line: usize,
    /// `None` when the line did not parse.
    pub n: Option<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub records: usize,
    pub failures: Vec<VerifyFailure>,
    pub warnings: Vec<String>,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every line independently so that all bad records are reported.
pub fn verify_text(text: &str) -> VerifyOutcome {
    let mut outcome = VerifyOutcome::default();
    let mut seen_header = false;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<Record>(line) {
            Err(e) => outcome.failures.push(VerifyFailure {
                line: line_no,
                n: None,
                message: format!("malformed record: {e}"),
            }),
            Ok(Record::Header(h)) => {
                if seen_header || outcome.records > 0 {
                    outcome.failures.push(VerifyFailure {
                        line: line_no,
                        n: None,
                        message: "header must be the first record".into(),
                    });
                } else if h.schema_version != SCHEMA_VERSION {
                    outcome.failures.push(VerifyFailure {
                        line: line_no,
                        n: None,
                        message: format!("unsupported schema version {}", h.schema_version),
                    });
                }
                seen_header = true;
            }
            Ok(Record::Entry(e)) => {
                outcome.records += 1;
                if let Err(message) = check_entry(&e) {
                    outcome.failures.push(VerifyFailure {
                        line: line_no,
                        n: Some(e.n),
                        message,
                    });
                }
            }
        }
    }
    if outcome.records == 0 {
        outcome.warnings.push("0 records".into());
    }
    if !seen_header && outcome.records > 0 {
        outcome.warnings.push("no header record".into());
    }
    outcome
}

pub fn verify(path: &Path) -> Result<VerifyOutcome> {
    Ok(verify_text(
        &fs::read_to_string(path).map_err(io_error(path))?,
    ))
}
