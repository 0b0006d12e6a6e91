//! Command-line front end: analyze distribution forms, generate the
//! standard families, run the integer-search verifications, and print
//! the low-degree classification tables.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dist3::generators::{
    random_form, random_log_spec, random_rational_spec, Provenance,
};
use dist3::invariants::{
    classify_low_degree, table_degree_one, table_degree_two, ChernData, Stability,
};
use dist3::poly::parse_poly;
use dist3::report::{
    analyze_coefficients, analyze_form, AnalysisOptions, AnalyzeError, DistributionReport,
    FormDocument,
};
use dist3::verify::{
    verify_all, verify_canonical_rational, verify_elliptic, verify_martinet_picard,
    verify_plane_curve, SearchReport,
};

#[derive(Parser)]
#[command(
    name = "dist3",
    version,
    about = "Exact analyzer for codimension-one distributions on projective 3-space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze distribution forms given as JSON documents or raw coefficients
    Analyze {
        /// Input files ({"format":"dist3/1","coefficients":[A0..A3]})
        files: Vec<PathBuf>,
        /// Coefficient expressions A0 A1 A2 A3 given inline
        #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["A0", "A1", "A2", "A3"])]
        coeffs: Option<Vec<String>>,
        /// Write the machine-readable report(s) to this path ("-" for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Stop after the exterior-calculus stage (integrability only)
        #[arg(long)]
        skip_groebner: bool,
    },
    /// Generate a form from a named family and analyze it
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the exhaustive integer searches behind the arithmetic claims
    Verify {
        /// elliptic | canonical-rational | plane-curve | martinet | all
        claim: String,
        /// Upper end of the search range (claim-specific default)
        #[arg(long)]
        max: Option<i64>,
        /// Write the search reports to this path ("-" for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the exhaustive classification table for low degree
    Tables {
        /// Distribution degree: 0, 1, or 2
        degree: u32,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Pencil of two homogeneous polynomials spanning a rational map
    Rational {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Closed logarithmic form on an arrangement of hypersurfaces
    Logarithmic {
        /// Factor degrees, comma-separated (at least three)
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Seeded antisymmetric-matrix sample with small integer entries
    Random {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            let json = serde_json::to_string_pretty(&err.object).expect("error serializes");
            eprintln!("{json}");
            ExitCode::from(err.exit_code as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AnalyzeError> {
    match cli.command {
        Command::Analyze {
            files,
            coeffs,
            json,
            skip_groebner,
        } => cmd_analyze(files, coeffs, json, skip_groebner),
        Command::Generate { family } => cmd_generate(family),
        Command::Verify { claim, max, json } => cmd_verify(&claim, max, json),
        Command::Tables { degree } => cmd_tables(degree),
    }
}

fn internal(message: String) -> AnalyzeError {
    AnalyzeError {
        object: dist3::report::ErrorObject {
            code: "io-error",
            message,
            witness: None,
        },
        exit_code: 3,
    }
}

fn invalid(code: &'static str, message: String) -> AnalyzeError {
    AnalyzeError {
        object: dist3::report::ErrorObject {
            code,
            message,
            witness: None,
        },
        exit_code: 1,
    }
}

fn write_json(path: &PathBuf, payload: &str) -> Result<(), AnalyzeError> {
    if path.as_os_str() == "-" {
        println!("{payload}");
        Ok(())
    } else {
        fs::write(path, payload).map_err(|e| internal(format!("writing {path:?}: {e}")))
    }
}

fn print_summary(report: &DistributionReport) {
    println!("degree        {}", report.degree);
    println!("integrable    {}", report.integrable);
    println!("martinet      {}", report.martinet);
    if let Some(inv) = &report.invariants {
        println!(
            "singular Z    dim {}  deg_C {}  p_a(C) {}  len U {}",
            inv.dim_z, inv.deg_c, inv.p_a_c, inv.len_u
        );
    }
    if let Some(chern) = &report.chern {
        println!(
            "chern         c1 {}  c2 {}  c3 {}  locally_free {}",
            chern.c1, chern.c2, chern.c3, chern.locally_free
        );
    }
    if let Some(verdict) = &report.verdict {
        println!(
            "stability     {:?}  ({})",
            verdict.stability, verdict.rule_fired
        );
        if let Some(c) = &verdict.classification {
            println!("class         {c}");
        }
    }
}

fn cmd_analyze(
    files: Vec<PathBuf>,
    coeffs: Option<Vec<String>>,
    json: Option<PathBuf>,
    skip_groebner: bool,
) -> Result<ExitCode, AnalyzeError> {
    let options = || AnalysisOptions { skip_groebner };
    let mut reports = Vec::new();
    if let Some(exprs) = coeffs {
        let mut parsed = Vec::with_capacity(4);
        for e in &exprs {
            parsed.push(parse_poly(e)?);
        }
        let parsed: [_; 4] = parsed.try_into().expect("clap enforces four");
        reports.push(analyze_coefficients(parsed, options(), None)?);
    }
    for file in &files {
        let text =
            fs::read_to_string(file).map_err(|e| internal(format!("reading {file:?}: {e}")))?;
        let doc: FormDocument = serde_json::from_str(&text)
            .map_err(|e| invalid("invalid-document", format!("{file:?}: {e}")))?;
        reports.push(analyze_coefficients(
            doc.parse_coefficients()?,
            options(),
            None,
        )?);
    }
    if reports.is_empty() {
        return Err(invalid(
            "no-input",
            "expected input files or --coeffs".into(),
        ));
    }
    for (i, report) in reports.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print_summary(report);
    }
    if let Some(path) = json {
        let payload = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        }
        .expect("report serializes");
        write_json(&path, &payload)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(family: Family) -> Result<ExitCode, AnalyzeError> {
    let options = AnalysisOptions {
        skip_groebner: false,
    };
    let (form, provenance, json): (_, Provenance, _) = match family {
        Family::Rational { a, b, seed, json } => {
            if a < 1 || b < a {
                return Err(invalid(
                    "invalid-family-params",
                    "rational family needs 1 <= a <= b".into(),
                ));
            }
            let (_, form, prov) = random_rational_spec(a, b, seed)
                .map_err(|e| invalid("generation-failed", e.to_string()))?;
            (form, prov, json)
        }
        Family::Logarithmic {
            degrees,
            seed,
            json,
        } => {
            let (_, form, prov) = random_log_spec(&degrees, seed)
                .map_err(|e| invalid("generation-failed", e.to_string()))?;
            (form, prov, json)
        }
        Family::Random { degree, seed, json } => {
            let (form, prov) = random_form(degree, seed)
                .map_err(|e| invalid("generation-failed", e.to_string()))?;
            (form, prov, json)
        }
    };
    let document = FormDocument::from_form(&form);
    let report = analyze_form(&form, options, Some(provenance))?;
    for (i, c) in document.coefficients.iter().enumerate() {
        println!("A{i} = {c}");
    }
    println!();
    print_summary(&report);
    if let Some(path) = json {
        #[derive(serde::Serialize)]
        struct Generated<'a> {
            form: &'a FormDocument,
            report: &'a DistributionReport,
        }
        let payload = serde_json::to_string_pretty(&Generated {
            form: &document,
            report: &report,
        })
        .expect("report serializes");
        write_json(&path, &payload)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    claim: &str,
    max: Option<i64>,
    json: Option<PathBuf>,
) -> Result<ExitCode, AnalyzeError> {
    let reports: Vec<SearchReport> = match claim {
        "all" => {
            if max.is_some() {
                return Err(invalid(
                    "invalid-range",
                    "--max applies to a single claim, not `all`".into(),
                ));
            }
            verify_all()
        }
        "elliptic" => vec![verify_elliptic(max.unwrap_or(200))],
        "canonical-rational" => vec![verify_canonical_rational(5, max.unwrap_or(40))],
        "plane-curve" => vec![verify_plane_curve(max.unwrap_or(100))],
        "martinet" => vec![verify_martinet_picard(max.unwrap_or(100))],
        other => {
            return Err(invalid(
                "unknown-claim",
                format!("unknown claim {other:?}; expected elliptic, canonical-rational, plane-curve, martinet, or all"),
            ))
        }
    };
    let mut all_agree = true;
    for r in &reports {
        let status = if r.agrees_with_paper { "ok" } else { "FAIL" };
        let found = if r.solutions.is_empty() {
            "no solutions".to_string()
        } else {
            format!("solutions {:?}", r.solutions)
        };
        println!("{status:4}  {:<40} {:<40} {found}", r.claim, r.range);
        all_agree &= r.agrees_with_paper;
    }
    if let Some(path) = json {
        let payload = serde_json::to_string_pretty(&reports).expect("reports serialize");
        write_json(&path, &payload)?;
    }
    Ok(if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn stability_label(s: &Stability) -> &'static str {
    match s {
        Stability::Stable => "stable",
        Stability::MuSemistable => "mu-semistable",
        Stability::Split => "split",
        Stability::Undetermined => "undetermined",
    }
}

fn cmd_tables(degree: u32) -> Result<ExitCode, AnalyzeError> {
    match degree {
        0 => {
            // The degree-0 dichotomy: empty singular scheme or a line.
            println!("degree 0");
            println!("{:>5} {:>3} {:>3}  classification", "degC", "c2", "c3");
            for (deg_c, c2, c3, dim_z) in [(0i64, 2i64, 0i64, -1i32), (1, 1, 0, 1)] {
                let chern = ChernData {
                    c1: 2,
                    c2,
                    c3,
                    locally_free: true,
                };
                let class = classify_low_degree(0, &chern, dim_z)
                    .map_err(AnalyzeError::from)?
                    .expect("degree 0 is classified");
                let shown = if dim_z == -1 {
                    "-".to_string()
                } else {
                    deg_c.to_string()
                };
                println!("{shown:>5} {c2:>3} {c3:>3}  {class}");
            }
        }
        d @ (1 | 2) => {
            let rows = if d == 1 {
                table_degree_one()
            } else {
                table_degree_two()
            };
            println!("degree {d}  (* marks realized c3 values)");
            println!(
                "{:>5} {:>3} {:<16} {:<14} classification",
                "degC", "c2", "c3", "stability"
            );
            for row in rows {
                let c3_list = row
                    .c3_values
                    .iter()
                    .map(|v| {
                        if row.c3_realized.contains(v) {
                            format!("{v}*")
                        } else {
                            v.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",");
                // Re-derive the row text from the classifier; use a
                // realized c3 when one exists, else the first value.
                let c3 = *row.c3_realized.first().unwrap_or(&row.c3_values[0]);
                let dim_z = if row.deg_c == 0 { 0 } else { 1 };
                let chern = ChernData {
                    c1: 2 - d as i64,
                    c2: row.c2,
                    c3,
                    locally_free: c3 == 0 && dim_z == 1,
                };
                let class = classify_low_degree(d as i64, &chern, dim_z)
                    .map_err(AnalyzeError::from)?
                    .expect("low degree is classified");
                println!(
                    "{:>5} {:>3} {:<16} {:<14} {class}",
                    row.deg_c,
                    row.c2,
                    c3_list,
                    stability_label(&row.stability),
                );
            }
        }
        other => {
            return Err(invalid(
                "invalid-degree",
                format!("tables exist for degrees 0, 1, 2 (got {other})"),
            ))
        }
    }
    Ok(ExitCode::SUCCESS)
}
