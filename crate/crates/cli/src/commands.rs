use std::io::Write;

use edv_core::enumeration::ClassSpec;
use edv_core::indices::IndexSelector;
use edv_core::verify::{
    equivalent_nonisomorphic, table4_rows, verify, Claim, VerificationReport, VerifyOptions,
};
use edv_core::{compare_trees, edge_division_vector, edge_mu, parse_tree, FamilyParams, OrderRelation, Tree, TreeFormat};
use serde::Serialize;
use serde_json::json;

use crate::config::{CliConfig, Format};
use crate::{CliError, Command};

/// Reads a tree argument; see the `Command` docs for the accepted forms.
pub fn load_tree(arg: &str) -> Result<Tree, CliError> {
    let arg = arg.trim();
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::File { path: path.to_string(), source })?;
        parse_tree(&text, TreeFormat::EdgeList).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    } else if let Some(levels) = arg.strip_prefix("levels:") {
        Ok(parse_tree(levels, TreeFormat::LevelSequence)?)
    } else if arg.starts_with('(') {
        Ok(parse_tree(arg, TreeFormat::CanonicalCode)?)
    } else {
        Ok(parse_tree(arg, TreeFormat::FamilyExpression)?)
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows<R: Serialize>(out: &mut dyn Write, rows: impl IntoIterator<Item = R>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_table<const N: usize>(
    out: &mut dyn Write,
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct MuRow {
    edge: usize,
    u: usize,
    v: usize,
    n_u: usize,
    n_v: usize,
    mu: usize,
}

#[derive(Serialize)]
struct CompareRow {
    relation: &'static str,
    witness_k: Option<usize>,
    less_at: Option<usize>,
    greater_at: Option<usize>,
    left: String,
    right: String,
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    claim_id: &'a str,
    universe: &'a str,
    status: String,
    checked: usize,
    passed: usize,
    failed: usize,
    runtime_seconds: f64,
}

fn summary(r: &VerificationReport) -> SummaryRow<'_> {
    SummaryRow {
        claim_id: &r.claim_id,
        universe: &r.universe,
        status: r.status.to_string(),
        checked: r.checked,
        passed: r.passed,
        failed: r.failures.len(),
        runtime_seconds: r.runtime_seconds,
    }
}

fn emit_reports(out: &mut dyn Write, format: Format, reports: &[VerificationReport]) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
        }
        Format::Json if reports.len() == 1 => json_line(out, &reports[0])?,
        Format::Json => json_line(out, &reports)?,
        Format::Csv => csv_rows(out, reports.iter().map(summary))?,
    }
    Ok(())
}

/// Returns `Ok(false)` when a verification ran and reported failures.
pub fn dispatch(command: Command, config: &CliConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let format = config.output_format;
    match command {
        Command::Edv { tree } => {
            let t = load_tree(&tree)?;
            let r = edge_division_vector(&t);
            match format {
                Format::Text => writeln!(out, "{r}")?,
                Format::Json => json_line(out, &json!({ "n": r.order(), "vector": r.counts(), "text": r.to_string() }))?,
                Format::Csv => csv_table(out, ["k", "r_k"], r.counts().iter().enumerate().map(|(i, c)| [(i + 1).to_string(), c.to_string()]))?,
            }
        }
        Command::Mu { tree } => {
            let t = load_tree(&tree)?;
            let map = edge_mu(&t);
            let rows: Vec<MuRow> = t
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &[u, v])| {
                    let (n_u, n_v) = map.split(e);
                    MuRow { edge: e, u, v, n_u, n_v, mu: map.mu()[e] }
                })
                .collect();
            match format {
                Format::Text => {
                    writeln!(out, "{:>4} {:>4} {:>4} {:>4} {:>4} {:>4}", "edge", "u", "v", "n_u", "n_v", "mu")?;
                    for r in &rows {
                        writeln!(out, "{:>4} {:>4} {:>4} {:>4} {:>4} {:>4}", r.edge, r.u, r.v, r.n_u, r.n_v, r.mu)?;
                    }
                }
                Format::Json => json_line(out, &rows)?,
                Format::Csv => csv_rows(out, &rows)?,
            }
        }
        Command::Compare { left, right } => {
            let (a, b) = (load_tree(&left)?, load_tree(&right)?);
            let rel = compare_trees(&a, &b)
                .map_err(|e| CliError::Usage(format!("cannot compare trees of different order: {e}")))?;
            let (witness_k, less_at, greater_at) = match rel {
                OrderRelation::StrictlyLess { witness_k } | OrderRelation::StrictlyGreater { witness_k } => {
                    (Some(witness_k), None, None)
                }
                OrderRelation::Equivalent => (None, None, None),
                OrderRelation::Incomparable { less_at, greater_at } => (None, Some(less_at), Some(greater_at)),
            };
            let row = CompareRow {
                relation: rel.name(),
                witness_k,
                less_at,
                greater_at,
                left: edge_division_vector(&a).to_string(),
                right: edge_division_vector(&b).to_string(),
            };
            match format {
                Format::Text => {
                    writeln!(out, "{rel}")?;
                    if rel == OrderRelation::Equivalent && !a.is_isomorphic(&b) {
                        writeln!(out, "note: equal vectors {} but the trees are not isomorphic", row.left)?;
                    }
                }
                Format::Json => json_line(out, &row)?,
                Format::Csv => csv_rows(out, [row])?,
            }
        }
        Command::Index { name, tree } => {
            let selector: IndexSelector = name.parse()?;
            let t = load_tree(&tree)?;
            let value = selector.evaluate(&t)?;
            match format {
                Format::Text => writeln!(out, "{value}")?,
                Format::Json => json_line(out, &json!({ "index": selector.to_string(), "n": t.order(), "value": value }))?,
                Format::Csv => csv_table(out, ["index", "value"], [[selector.to_string(), value.to_string()]])?,
            }
        }
        Command::Construct { expression } => {
            let params: FamilyParams = expression.parse()?;
            let t = params.construct().map_err(|e| CliError::Usage(e.to_string()))?;
            match format {
                Format::Text => write!(out, "{}", t.to_edge_list())?,
                Format::Json => json_line(
                    out,
                    &json!({
                        "expression": params.to_string(),
                        "n": t.order(),
                        "edges": t.edges(),
                        "canonical_code": t.canonical_code(),
                    }),
                )?,
                Format::Csv => csv_table(out, ["u", "v"], t.edges().iter().map(|&[u, v]| [u.to_string(), v.to_string()]))?,
            }
        }
        Command::Enumerate { class } => {
            let spec: ClassSpec = class.parse()?;
            spec.validate()?;
            let trees = spec.enumerate(config.enumeration_cap)?;
            let rows = trees.map(|t| (t.canonical_code().to_string(), edge_division_vector(&t).to_string()));
            match format {
                Format::Text => {
                    for (code, vector) in rows {
                        writeln!(out, "{code} {vector}")?;
                    }
                }
                Format::Json => {
                    // streamed by hand so large classes are never held in memory
                    write!(out, "[")?;
                    for (i, (code, vector)) in rows.enumerate() {
                        let sep = if i == 0 { "\n" } else { ",\n" };
                        write!(out, "{sep}  {}", json!({ "code": code, "vector": vector }))?;
                    }
                    writeln!(out, "\n]")?;
                }
                Format::Csv => csv_table(out, ["code", "vector"], rows.map(|(code, vector)| [code, vector]))?,
            }
        }
        Command::Verify { claim, n_max, n_min, list } => {
            if list {
                let ids: Vec<&str> = Claim::ids().collect();
                match format {
                    Format::Text => {
                        for id in &ids {
                            writeln!(out, "{id}")?;
                        }
                    }
                    Format::Json => json_line(out, &ids)?,
                    Format::Csv => csv_table(out, ["claim_id"], ids.iter().map(|id| [id.to_string()]))?,
                }
                return Ok(true);
            }
            let claim = claim.expect("clap enforces a claim without --list");
            let claims: Vec<Claim> = if claim.eq_ignore_ascii_case("all") {
                Claim::ids().map(|id| id.parse().expect("listed ids parse")).collect()
            } else {
                vec![claim.parse()?]
            };
            let opts = VerifyOptions {
                n_min: n_min.unwrap_or(1),
                n_max,
                cap: config.enumeration_cap,
                tolerance: config.float_tolerance,
            };
            let reports = claims.iter().map(|c| verify(c, &opts)).collect::<Result<Vec<_>, _>>()?;
            emit_reports(out, format, &reports)?;
            return Ok(!reports.iter().any(VerificationReport::is_failure));
        }
        Command::Table4 => {
            let rows = table4_rows();
            let report = verify(&"Table-4".parse()?, &VerifyOptions { cap: config.enumeration_cap, ..VerifyOptions::default() })?;
            match format {
                Format::Text => {
                    writeln!(out, "{:>3} {:>3} {:>5} {:>5}", "n", "k", "min", "max")?;
                    for r in &rows {
                        writeln!(out, "{:>3} {:>3} {:>5} {:>5}", r.n, r.k, r.min, r.max)?;
                    }
                    writeln!(out, "{}: {} of {} cells agree three ways", report.status, report.passed, report.checked)?;
                }
                Format::Json => json_line(out, &json!({ "rows": rows, "report": report }))?,
                Format::Csv => csv_table(
                    out,
                    ["n", "k", "min", "max"],
                    rows.iter().map(|r| [r.n.to_string(), r.k.to_string(), r.min.to_string(), r.max.to_string()]),
                )?,
            }
            return Ok(!report.is_failure());
        }
        Command::EquivPairs { n } => {
            let pairs = equivalent_nonisomorphic(n, config.enumeration_cap)?;
            match format {
                Format::Text => {
                    for p in &pairs {
                        writeln!(out, "{} {} {}", p.vector, p.left, p.right)?;
                    }
                }
                Format::Json => json_line(out, &pairs)?,
                Format::Csv => csv_table(
                    out,
                    ["vector", "left", "right"],
                    pairs.iter().map(|p| [p.vector.to_string(), p.left.to_string(), p.right.to_string()]),
                )?,
            }
        }
    }
    Ok(true)
}
