//! Machine-readable views of results. Field order is part of the format;
//! big integers are decimal strings.

use std::io::Write;

use serde::Serialize;

use crate::chern::ChernResult;
use crate::combinatorics::Partition;
use crate::error::Result;
use crate::repring::{CaseTable, ConjectureReport, GeneratorRow, GeneratorTable, VerifyReport};
use crate::weights::GroupSpec;

#[derive(Serialize)]
pub struct C2Json<'a> {
    pub n: usize,
    pub partition: &'a Partition,
    pub n_lambda: String,
    pub dim: String,
    pub method: String,
    pub cross_checked: bool,
}

impl<'a> C2Json<'a> {
    pub fn new(n: usize, partition: &'a Partition, r: &ChernResult) -> Self {
        C2Json {
            n,
            partition,
            n_lambda: r.n_lambda.to_string(),
            dim: r.dim.to_string(),
            method: r.method.to_string(),
            cross_checked: r.cross_checked,
        }
    }
}

#[derive(Serialize)]
pub struct DimJson<'a> {
    pub n: usize,
    pub partition: &'a Partition,
    pub dim: String,
}

#[derive(Serialize)]
pub struct RowJson {
    pub weight: String,
    pub coeffs: Vec<u32>,
    pub partition: Partition,
    pub n_lambda: Option<String>,
    pub dim: Option<String>,
    pub method: Option<String>,
    pub cross_checked: bool,
    pub printed_n_lambda: Option<String>,
    pub flagged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_printed_n_lambda: Option<String>,
    pub failure: Option<String>,
}

impl From<&GeneratorRow> for RowJson {
    fn from(r: &GeneratorRow) -> Self {
        RowJson {
            weight: r.weight.to_string(),
            coeffs: r.weight.coeffs().to_vec(),
            partition: r.partition.clone(),
            n_lambda: r.n_lambda.as_ref().map(|v| v.to_string()),
            dim: r.dim.as_ref().map(|v| v.to_string()),
            method: r.method.map(|m| m.to_string()),
            cross_checked: r.cross_checked,
            printed_n_lambda: r.printed.map(|v| v.to_string()),
            flagged: r.flagged,
            dual_weight: None,
            dual_printed_n_lambda: None,
            failure: r.failure.as_ref().map(|f| f.message.clone()),
        }
    }
}

#[derive(Serialize)]
pub struct GeneratorsJson {
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub rows: Vec<RowJson>,
    pub gcd: String,
}

impl From<&GeneratorTable> for GeneratorsJson {
    fn from(t: &GeneratorTable) -> Self {
        GeneratorsJson {
            group: t.spec.to_string(),
            n: t.spec.n(),
            d: t.spec.d(),
            rows: t.rows.iter().map(RowJson::from).collect(),
            gcd: t.gcd.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ImageIndexJson {
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub image_index: String,
}

impl ImageIndexJson {
    pub fn new(spec: &GroupSpec, index: &num_bigint::BigUint) -> Self {
        ImageIndexJson {
            group: spec.to_string(),
            n: spec.n(),
            d: spec.d(),
            image_index: index.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub case: String,
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub generators: usize,
    pub image_index: String,
    pub expected_gcd: u64,
    pub h4_multiplier: u64,
    pub matches_expected: bool,
    pub verdict: crate::repring::Verdict,
    pub source: String,
}

impl From<&VerifyReport> for VerifyJson {
    fn from(r: &VerifyReport) -> Self {
        let spec = r.case.spec();
        VerifyJson {
            case: r.case.case_id.clone(),
            group: spec.to_string(),
            n: spec.n(),
            d: spec.d(),
            generators: r.generators,
            image_index: r.index.to_string(),
            expected_gcd: r.case.expected_gcd,
            h4_multiplier: r.case.h4_multiplier,
            matches_expected: r.matches_expected,
            verdict: r.verdict,
            source: r.case.source.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct TableJson {
    pub case: String,
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub caption: String,
    pub rows: Vec<RowJson>,
    pub unlisted_generators: Vec<RowJson>,
    pub table_gcd: String,
    pub image_index: String,
}

impl From<&CaseTable> for TableJson {
    fn from(t: &CaseTable) -> Self {
        let spec = t.table.spec();
        TableJson {
            case: t.table.case_id.to_string(),
            group: spec.to_string(),
            n: spec.n(),
            d: spec.d(),
            caption: t.table.caption.to_string(),
            rows: t
                .rows
                .iter()
                .map(|r| {
                    let mut j = RowJson::from(&r.row);
                    if let Some((w, v)) = &r.dual_printed {
                        j.dual_weight = Some(w.to_string());
                        j.dual_printed_n_lambda = Some(v.to_string());
                    }
                    j
                })
                .collect(),
            unlisted_generators: t.unlisted.iter().map(RowJson::from).collect(),
            table_gcd: t.table_gcd.to_string(),
            image_index: t.image_index.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ConjectureJson {
    pub ell: u64,
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub generators: usize,
    pub image_index: String,
    pub matches_conjecture: bool,
    pub divisible_by_ell: bool,
    pub duality_checked: usize,
    pub duality_failures: Vec<String>,
}

impl From<&ConjectureReport> for ConjectureJson {
    fn from(r: &ConjectureReport) -> Self {
        ConjectureJson {
            ell: r.ell,
            group: r.spec.to_string(),
            n: r.spec.n(),
            d: r.spec.d(),
            generators: r.generators,
            image_index: r.index.to_string(),
            matches_conjecture: r.matches_conjecture,
            divisible_by_ell: r.divisible_by_ell,
            duality_checked: r.duality_checked,
            duality_failures: r.duality_failures.iter().map(|w| w.to_string()).collect(),
        }
    }
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// `weight,partition,n_lambda,flagged`.
pub fn write_csv<'a>(
    out: &mut dyn Write,
    rows: impl IntoIterator<Item = &'a GeneratorRow>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["weight", "partition", "n_lambda", "flagged"])?;
    for r in rows {
        w.write_record([
            r.weight.to_string(),
            r.partition.to_string(),
            r.n_lambda
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_default(),
            r.flagged.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn flag_text(r: &GeneratorRow, dual: Option<&(crate::weights::Weight, u64)>) -> String {
    if let Some(f) = &r.failure {
        return format!("FAILED: {}", f.message);
    }
    if !r.flagged {
        return String::new();
    }
    let mut s = format!("FLAGGED printed {}", r.printed.unwrap_or_default());
    if let Some((w, v)) = dual {
        s.push_str(&format!("; dual {w} printed {v}"));
    }
    s
}

fn write_rows_text<'a>(
    out: &mut dyn Write,
    rows: impl IntoIterator<Item = (&'a GeneratorRow, Option<&'a (crate::weights::Weight, u64)>)>,
) -> Result<()> {
    let rows: Vec<_> = rows.into_iter().collect();
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|(r, dual)| {
            [
                r.weight.to_string(),
                r.partition.to_string(),
                r.n_lambda
                    .as_ref()
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
                flag_text(r, *dual),
            ]
        })
        .collect();
    let header = ["weight", "partition", "n_lambda", "flag"];
    let width = |k: usize| {
        cells
            .iter()
            .map(|c| c[k].len())
            .chain([header[k].len()])
            .max()
            .unwrap_or(0)
    };
    let (w0, w1, w2) = (width(0), width(1), width(2));
    let line = |c: &[&str; 4]| {
        format!("{:<w0$}  {:<w1$}  {:>w2$}  {}", c[0], c[1], c[2], c[3])
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(&header))?;
    for c in &cells {
        writeln!(out, "{}", line(&[&c[0], &c[1], &c[2], &c[3]]))?;
    }
    Ok(())
}

pub fn generators_text(out: &mut dyn Write, t: &GeneratorTable) -> Result<()> {
    writeln!(out, "{}: {} generators", t.spec, t.rows.len())?;
    write_rows_text(out, t.rows.iter().map(|r| (r, None)))?;
    writeln!(out, "gcd {}", t.gcd)?;
    Ok(())
}

pub fn table_text(out: &mut dyn Write, t: &CaseTable) -> Result<()> {
    writeln!(
        out,
        "{} ({}): {}",
        t.table.case_id,
        t.table.spec(),
        t.table.caption
    )?;
    write_rows_text(
        out,
        t.rows.iter().map(|r| (&r.row, r.dual_printed.as_ref())),
    )?;
    writeln!(out, "table gcd {}", t.table_gcd)?;
    if !t.unlisted.is_empty() {
        writeln!(out)?;
        writeln!(
            out,
            "generators not listed in the printed table: {}",
            t.unlisted.len()
        )?;
        write_rows_text(out, t.unlisted.iter().map(|r| (r, None)))?;
    }
    writeln!(out, "image index {}", t.image_index)?;
    Ok(())
}

pub fn verify_text(out: &mut dyn Write, r: &VerifyReport) -> Result<()> {
    writeln!(out, "case {} ({})", r.case.case_id, r.case.spec())?;
    writeln!(out, "generators {}", r.generators)?;
    writeln!(out, "image index {}", r.index)?;
    writeln!(
        out,
        "expected gcd {} ({})",
        r.case.expected_gcd,
        if r.matches_expected {
            "match"
        } else {
            "MISMATCH"
        }
    )?;
    writeln!(out, "H^4 multiplier {}", r.case.h4_multiplier)?;
    writeln!(out, "verdict {}", r.verdict)?;
    writeln!(out, "source {}", r.case.source)?;
    Ok(())
}

pub fn conjecture_text(out: &mut dyn Write, r: &ConjectureReport) -> Result<()> {
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "ell {}", r.ell)?;
    writeln!(out, "group {}", r.spec)?;
    writeln!(out, "generators {}", r.generators)?;
    writeln!(out, "image index {}", r.index)?;
    writeln!(out, "index equals ell: {}", yn(r.matches_conjecture))?;
    writeln!(out, "divisible by ell: {}", yn(r.divisible_by_ell))?;
    writeln!(
        out,
        "duality checked on {} generators, {} failures",
        r.duality_checked,
        r.duality_failures.len()
    )?;
    Ok(())
}
