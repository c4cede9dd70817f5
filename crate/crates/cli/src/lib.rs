//! Subcommand implementations for the `clifford` binary.

use std::io::Write;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use clifford_core::approx::{degree_sweep, ApproxRow, Target};
use clifford_core::blade::{blade_product, BladeMask};
use clifford_core::verify::{verify_all, IdentityReport, VerifyConfig};
use clifford_core::{Signature, MAX_N};

/// Largest dimension the multiplication table is printed for.
pub const TABLE_MAX_N: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "clifford", version, about = "Clifford algebra identity checks and approximation experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity sweeps and write a JSON (or CSV) report.
    Verify(VerifyArgs),
    /// Degree sweep of componentwise Bernstein approximation.
    Approx(ApproxArgs),
    /// Print the signed blade multiplication table.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Single signature `p,q` instead of the full range.
    #[arg(long, value_parser = parse_signature, conflicts_with = "max_n")]
    pub signature: Option<Signature>,
    /// Check every signature with p+q <= max-n.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=MAX_N as i64))]
    pub max_n: u8,
    /// Random multivectors per signature for the scalar-part check.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0x5EED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    /// constant, coordinate, clifford-exp or rotor-field.
    #[arg(long)]
    pub target: String,
    /// Defaults to 0,2 (2,0 for rotor-field).
    #[arg(long, value_parser = parse_signature)]
    pub signature: Option<Signature>,
    #[arg(long, value_delimiter = ',', default_values_t = [4usize, 8, 16, 32, 64])]
    pub degrees: Vec<usize>,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_signature)]
    pub signature: Signature,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

fn parse_signature(s: &str) -> std::result::Result<Signature, String> {
    s.parse::<Signature>().map_err(|e| e.to_string())
}

fn open_output(path: Option<&std::path::Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

/// Runs the sweeps; returns the reports so the caller can set the exit code.
pub fn cmd_verify(args: &VerifyArgs) -> Result<Vec<IdentityReport>> {
    let mut cfg = match args.signature {
        Some(sig) => VerifyConfig::single(sig),
        None => VerifyConfig::up_to(args.max_n as usize)?,
    };
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    let reports = verify_all(&cfg)?;

    let mut out = open_output(args.out.as_deref())?;
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &reports)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["identity", "params", "computed", "expected", "pass"])?;
            for r in &reports {
                w.write_record([
                    r.identity.clone(),
                    r.params.to_string(),
                    r.computed.to_string(),
                    r.expected.to_string(),
                    r.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(reports)
}

pub fn cmd_approx(args: &ApproxArgs) -> Result<Vec<ApproxRow>> {
    let target: Target = args.target.parse()?;
    let sig = args.signature.unwrap_or_else(|| target.default_signature());
    if args.degrees.is_empty() {
        bail!("--degrees must not be empty");
    }
    if args.degrees.contains(&0) {
        bail!("Bernstein degrees must be at least 1");
    }
    let f = target.sample::<f64>(sig)?;
    let rows: Vec<ApproxRow> = degree_sweep(&f, &args.degrees)?
        .iter()
        .flat_map(|r| r.rows(target.name(), sig))
        .collect();

    let mut out = open_output(args.out.as_deref())?;
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(rows)
}

/// `2^n x 2^n` table of `e_row * e_col` in mask order.
pub fn render_table(sig: Signature) -> Result<String> {
    if sig.n() > TABLE_MAX_N {
        bail!("table display supports n <= {TABLE_MAX_N}, got n = {}", sig.n());
    }
    let blades: Vec<BladeMask> = BladeMask::all(sig).collect();
    let cells: Vec<Vec<String>> = blades
        .iter()
        .map(|&a| {
            blades
                .iter()
                .map(|&b| blade_product(sig, a, b).to_string())
                .collect()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.len())
        .max()
        .unwrap_or(1)
        .max(blades.iter().map(|b| b.label().len()).max().unwrap_or(1));

    let mut s = format!(
        "R_{{{},{}}}: e_i^2 = +1 for {} generator(s), -1 for {}\n",
        sig.p(),
        sig.q(),
        sig.p(),
        sig.q()
    );
    s.push_str(&format!("{:>width$} |", ""));
    for b in &blades {
        s.push_str(&format!(" {:>width$}", b.label()));
    }
    s.push('\n');
    s.push_str(&"-".repeat(width + 2 + blades.len() * (width + 1)));
    s.push('\n');
    for (a, row) in blades.iter().zip(&cells) {
        s.push_str(&format!("{:>width$} |", a.label()));
        for c in row {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.push('\n');
    }
    Ok(s)
}

pub fn cmd_table(args: &TableArgs) -> Result<()> {
    let table = render_table(args.signature)?;
    let mut out = open_output(args.out.as_deref())?;
    out.write_all(table.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table_has_ij_equals_k() {
        let t = render_table("0,2".parse().unwrap()).unwrap();
        let row = t.lines().find(|l| l.trim_start().starts_with("e1 |")).unwrap();
        let cells: Vec<&str> = row.split('|').nth(1).unwrap().split_whitespace().collect();
        assert_eq!(cells, vec!["+e1", "-1", "+e12", "-e2"]);
    }

    #[test]
    fn table_rejects_large_n() {
        assert!(render_table(Signature::new(4, 3).unwrap()).is_err());
        assert!(render_table(Signature::new(3, 3).unwrap()).is_ok());
    }
}
