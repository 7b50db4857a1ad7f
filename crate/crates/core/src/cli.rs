//! The `ifjs` command line.
//!
//! Exit codes: 0 on success, 1 when an audit or scenario fails, 2 on usage,
//! parse or validation errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::audit::{audit_distance, audit_entropy, AuditConfig, AxiomReport};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::fmt17;
use crate::fuzzy::WeightVector;
use crate::jsd::entropy_ifs;
use crate::measure::MeasureDescriptor;
use crate::recognition::{classify, PatternLibrary};
use crate::repro::{run_all, run_scenario, sweep_curve, ReproReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ifjs",
    version,
    about = "Jensen-Shannon measures for intuitionistic fuzzy sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Args)]
struct Common {
    /// Dataset JSON file or built-in dataset name.
    #[arg(long)]
    data: Option<String>,
    /// Weight file (JSON array) or `uniform`; defaults to the dataset's
    /// weights, then uniform.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, default_value_t = AuditConfig::default().seed)]
    seed: u64,
    /// Output file; `-` or absent for stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    /// wu, wu-lambda, xiao, yc or jgamma.
    #[arg(long, default_value = "wu")]
    measure: String,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
}

impl MeasureArgs {
    fn descriptor(&self) -> Result<MeasureDescriptor> {
        let mut params = BTreeMap::new();
        if let Some(l) = self.lambda {
            params.insert("lambda".to_owned(), l);
        }
        if let Some(g) = self.gamma {
            params.insert("gamma".to_owned(), g);
        }
        MeasureDescriptor::lookup(&self.measure, &params)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two sets of a dataset.
    Dist {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Similarity `1 - d` between two sets of a dataset.
    Sim {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Entropy of one or all sets of a dataset.
    Entropy {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        set: Option<String>,
    },
    /// Sampled axiom audit of a distance measure, or of the entropy with
    /// `--measure entropy`.
    Audit {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long, default_value_t = AuditConfig::default().grid_step)]
        grid_step: f64,
        /// Random pairs and random triples.
        #[arg(long, default_value_t = AuditConfig::default().random_pairs)]
        samples: u64,
        /// Random strict chains; defaults to a tenth of `--samples`.
        #[arg(long)]
        chains: Option<u64>,
        #[arg(long, default_value_t = AuditConfig::default().tolerance)]
        tolerance: f64,
    },
    /// Classify a sample against patterns by maximum similarity.
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        measure: MeasureArgs,
        /// Comma-separated pattern names; defaults to every other set.
        #[arg(long, value_delimiter = ',')]
        patterns: Vec<String>,
        #[arg(long)]
        sample: String,
        #[arg(long, default_value_t = 1e-4)]
        tie_tol: f64,
    },
    /// Run built-in reproduction scenarios.
    Repro {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        scenario: String,
    },
    /// Sample a curve or surface family.
    Curve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    let (common, output) = match command {
        Command::Dist {
            common,
            measure,
            left,
            right,
        } => {
            let out = pair_value(&common, &measure, &left, &right, false)?;
            (common, out)
        }
        Command::Sim {
            common,
            measure,
            left,
            right,
        } => {
            let out = pair_value(&common, &measure, &left, &right, true)?;
            (common, out)
        }
        Command::Entropy { common, set } => {
            let out = entropy(&common, set.as_deref())?;
            (common, out)
        }
        Command::Audit {
            common,
            measure,
            grid_step,
            samples,
            chains,
            tolerance,
        } => {
            let config = AuditConfig {
                grid_step,
                random_pairs: samples,
                random_triples: samples,
                chain_samples: chains.unwrap_or((samples / 10).max(1)),
                seed: common.seed,
                tolerance,
            };
            let report = if measure.measure == "entropy" {
                audit_entropy(&config)?
            } else {
                audit_distance(&measure.descriptor()?, &config)?
            };
            let text = match common.format {
                Format::Text => report.render_text(),
                Format::Csv => audit_csv(&report),
            };
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            (common, Output { text, code })
        }
        Command::Classify {
            common,
            measure,
            patterns,
            sample,
            tie_tol,
        } => {
            let out = classify_cmd(&common, &measure, &patterns, &sample, tie_tol)?;
            (common, out)
        }
        Command::Repro { common, scenario } => {
            let reports = if scenario == "all" {
                run_all()?
            } else {
                vec![run_scenario(&scenario)?]
            };
            let text = match common.format {
                Format::Text => {
                    let mut t: String = reports.iter().map(ReproReport::render_text).collect();
                    let passed = reports.iter().filter(|r| r.passed()).count();
                    t.push_str(&format!("{passed}/{} scenarios passed\n", reports.len()));
                    t
                }
                Format::Csv => repro_csv(&reports),
            };
            let code = if reports.iter().all(ReproReport::passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            (common, Output { text, code })
        }
        Command::Curve {
            common,
            family,
            steps,
        } => {
            let table = sweep_curve(&family, steps)?;
            let text = match common.format {
                Format::Csv => table.to_csv(),
                Format::Text => {
                    let mut t = table.columns.join("\t");
                    t.push('\n');
                    for row in &table.rows {
                        let cells: Vec<String> = row.iter().map(|x| fmt17(*x)).collect();
                        t.push_str(&cells.join("\t"));
                        t.push('\n');
                    }
                    t
                }
            };
            (common, Output::ok(text))
        }
    };
    emit(common.out.as_deref(), &output.text, stdout)?;
    Ok(output.code)
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) if p != Path::new("-") => std::fs::write(p, text)?,
        _ => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load_data(common: &Common) -> Result<Dataset> {
    let source = common
        .data
        .as_deref()
        .ok_or_else(|| Error::InvalidConfig("--data is required".into()))?;
    Dataset::resolve(source)
}

fn resolve_weights(common: &Common, data: &Dataset) -> Result<WeightVector> {
    let n = data.universe().len();
    let w = match common.weights.as_deref() {
        None => data.weights_or_uniform(),
        Some("uniform") => WeightVector::uniform(n),
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            let raw: Vec<f64> = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            WeightVector::new(raw)?
        }
    };
    w.check_len(n)?;
    Ok(w)
}

fn pair_value(
    common: &Common,
    measure: &MeasureArgs,
    left: &str,
    right: &str,
    similarity: bool,
) -> Result<Output> {
    let data = load_data(common)?;
    let w = resolve_weights(common, &data)?;
    let m = measure.descriptor()?;
    let (a, b) = (data.get(left)?, data.get(right)?);
    let value = if similarity {
        m.similarity(a, b, &w)?
    } else {
        m.evaluator().ifs_distance(a, b, &w)?
    };
    let label = if similarity { "similarity" } else { "distance" };
    let text = match common.format {
        Format::Text => format!("{}\n", fmt17(value)),
        Format::Csv => csv_string(
            &["measure", "left", "right", label],
            [vec![
                m.to_string(),
                left.to_owned(),
                right.to_owned(),
                fmt17(value),
            ]],
        ),
    };
    Ok(Output::ok(text))
}

fn entropy(common: &Common, set: Option<&str>) -> Result<Output> {
    let data = load_data(common)?;
    let w = resolve_weights(common, &data)?;
    let names: Vec<String> = match set {
        Some(s) => vec![s.to_owned()],
        None => data.sets().keys().cloned().collect(),
    };
    let mut rows = Vec::with_capacity(names.len());
    for name in names {
        let e = entropy_ifs(data.get(&name)?, &w)?;
        rows.push(vec![name, fmt17(e)]);
    }
    let text = match common.format {
        Format::Text => rows
            .iter()
            .map(|r| format!("{}\t{}\n", r[0], r[1]))
            .collect(),
        Format::Csv => csv_string(&["set", "entropy"], rows),
    };
    Ok(Output::ok(text))
}

fn classify_cmd(
    common: &Common,
    measure: &MeasureArgs,
    patterns: &[String],
    sample: &str,
    tie_tol: f64,
) -> Result<Output> {
    let data = load_data(common)?;
    let w = resolve_weights(common, &data)?;
    let m = measure.descriptor()?;
    let names: Vec<String> = if patterns.is_empty() {
        data.sets()
            .keys()
            .filter(|k| *k != sample)
            .cloned()
            .collect()
    } else {
        patterns.to_vec()
    };
    let lib = PatternLibrary::new(
        names
            .iter()
            .map(|n| Ok((n.clone(), data.get(n)?.clone())))
            .collect::<Result<Vec<_>>>()?,
        w,
    )?;
    let result = classify(&lib, data.get(sample)?, &m, tie_tol)?;
    let winner = result
        .winner
        .clone()
        .unwrap_or_else(|| "undecided".to_owned());
    let text = match common.format {
        Format::Text => {
            let mut t = String::new();
            for (name, s) in &result.scores {
                t.push_str(&format!("{name}\t{}\n", fmt17(*s)));
            }
            t.push_str(&format!(
                "winner: {winner}\ntie_margin: {}\n",
                fmt17(result.tie_margin)
            ));
            t
        }
        Format::Csv => csv_string(
            &["pattern", "similarity", "winner"],
            result.scores.iter().map(|(n, s)| {
                vec![
                    n.clone(),
                    fmt17(*s),
                    (Some(n) == result.winner.as_ref()).to_string(),
                ]
            }),
        ),
    };
    Ok(Output::ok(text))
}

fn csv_string<R>(header: &[&str], rows: R) -> String
where
    R: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn audit_csv(report: &AxiomReport) -> String {
    csv_string(
        &[
            "measure",
            "axiom",
            "verdict",
            "checked",
            "violations",
            "indeterminate",
            "statistic",
            "witness",
        ],
        report.entries.iter().map(|e| {
            vec![
                report.measure.clone(),
                e.axiom.id().to_owned(),
                e.verdict.to_string(),
                e.checked.to_string(),
                e.violations.to_string(),
                e.indeterminate.to_string(),
                e.statistic.map(|(_, v)| fmt17(v)).unwrap_or_default(),
                e.witness
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
            ]
        }),
    )
}

fn repro_csv(reports: &[ReproReport]) -> String {
    csv_string(
        &[
            "scenario",
            "description",
            "expected",
            "provenance",
            "computed",
            "tolerance",
            "verdict",
        ],
        reports.iter().flat_map(|r| {
            r.checks.iter().map(move |c| {
                vec![
                    r.scenario.clone(),
                    c.description.clone(),
                    fmt17(c.expected),
                    c.provenance.as_str().to_owned(),
                    fmt17(c.computed),
                    fmt17(c.tolerance),
                    if c.passed { "pass" } else { "fail" }.to_owned(),
                ]
            })
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ifjs").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dist_table_case1() {
        let (code, out, _) = run_capture(&[
            "dist",
            "--measure",
            "wu",
            "--left",
            "A",
            "--right",
            "B",
            "--data",
            "tableI_case1",
        ]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - 0.08563).abs() < 2e-5);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["dist"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        let (code, _, err) = run_capture(&[
            "dist",
            "--measure",
            "wu-lambda",
            "--left",
            "A",
            "--right",
            "B",
            "--data",
            "tableI_case1",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("lambda"), "{err}");
        assert_eq!(run_capture(&["--help"]).0, 0);
    }
}
