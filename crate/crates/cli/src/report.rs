//! Rendering of search results as tables or machine-readable records.

use std::io::Write;

use anyhow::Result;
use genabc_core::audit::ProofAudit;
use genabc_core::powersum::{GfltReport, PowerSumSolution};
use genabc_core::store::{self, AuditRecord, Format, SolutionRecord, TupleRecord};
use genabc_core::tuples::{AbcTuple, Epsilon, HuntReport};

fn tuple_line(t: &AbcTuple) -> String {
    let parts: Vec<String> = t.parts.iter().map(u64::to_string).collect();
    format!(
        "{} {}\tq={}\trad={}",
        parts.join(" "),
        t.sum_b,
        store::format_quality(t.quality_q),
        t.radical_r
    )
}

pub fn abc_hunt(out: &mut dyn Write, hunt: &HuntReport, eps: Epsilon, format: Option<Format>) -> Result<()> {
    match format {
        None => {
            for t in &hunt.hits {
                writeln!(out, "{}", tuple_line(t))?;
            }
            for t in &hunt.borderline {
                writeln!(out, "borderline\t{}", tuple_line(t))?;
            }
        }
        Some(format) => {
            let records: Vec<TupleRecord> = hunt
                .hits
                .iter()
                .map(|t| TupleRecord::new(t, eps, false))
                .chain(hunt.borderline.iter().map(|t| TupleRecord::new(t, eps, true)))
                .collect();
            store::export(&records, format, out)?;
        }
    }
    Ok(())
}

pub fn solutions(out: &mut dyn Write, found: &[PowerSumSolution], format: Option<Format>) -> Result<()> {
    match format {
        None => {
            for s in found {
                writeln!(out, "{s}")?;
            }
        }
        Some(format) => {
            let records: Vec<SolutionRecord> = found.iter().map(SolutionRecord::from).collect();
            store::export(&records, format, out)?;
        }
    }
    Ok(())
}

pub fn gflt(out: &mut dyn Write, report: &GfltReport, format: Option<Format>) -> Result<()> {
    let Some(format) = format else {
        writeln!(
            out,
            "k={} g(k)={} z_max={} mode={}",
            report.k, report.g, report.z_max, report.filter
        )?;
        for r in &report.results {
            writeln!(out, "n={} solutions={}", r.n, r.solutions.len())?;
            for s in &r.solutions {
                let tag = if r.n >= report.g { "COUNTEREXAMPLE " } else { "" };
                writeln!(out, "  {tag}{s}")?;
            }
        }
        writeln!(out, "{} solutions", report.total())?;
        return Ok(());
    };
    let records: Vec<SolutionRecord> = report
        .results
        .iter()
        .flat_map(|r| r.solutions.iter().map(SolutionRecord::from))
        .collect();
    store::export(&records, format, out)?;
    Ok(())
}

pub fn audit(out: &mut dyn Write, audit: &ProofAudit, format: Option<Format>) -> Result<()> {
    let record = AuditRecord::from(audit);
    if let Some(format) = format {
        store::export(&[record], format, out)?;
        return Ok(());
    }
    let xs: Vec<String> = record.xs.iter().map(u64::to_string).collect();
    writeln!(out, "k={}", record.k)?;
    writeln!(out, "n={}", record.n)?;
    writeln!(out, "xs={}", xs.join(","))?;
    writeln!(out, "z={}", record.z)?;
    writeln!(out, "b_val={}", record.b_val)?;
    writeln!(out, "rad_val={}", record.rad_val)?;
    writeln!(out, "rad_sq={}", record.rad_sq)?;
    writeln!(out, "prod_sq={}", record.prod_sq)?;
    writeln!(out, "z_pow_bound={}", record.z_pow_bound)?;
    writeln!(out, "premise_holds={}", record.premise_holds)?;
    writeln!(out, "link2_holds={}", record.link2_holds)?;
    writeln!(out, "link3_holds={}", record.link3_holds)?;
    writeln!(out, "implied_n_bound={}", record.implied_n_bound)?;
    Ok(())
}
