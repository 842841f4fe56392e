//! Command-line front end for the `txy-core` rigidity checks.
//!
//! Exit status: 0 on success or a rigid verdict, 1 when the command completed
//! with a not-rigid (or non-constant) verdict, 2 on any error.

pub mod doc;
pub mod error;
pub mod report;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use txy_core::classify::{classify_two_points, replay_proof};
use txy_core::genera::is_rigid;
use txy_core::search::{search_stream, SignPatterns};
use txy_core::series::{genus_series, series_is_constant};
use txy_core::{Error as CoreError, FamilyTag, PolyXY, SearchParams, Sign};

pub use doc::InputDocument;
pub use error::CliError;
pub use report::{Report, SearchRecord};

use report::{monomials, ClassifyReport, HitRecord, ProofDoc, SeriesReport, SeriesRow, SummaryRecord, VerifyReport};

/// Largest accepted series order.
pub const MAX_ORDER: i64 = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "txy", version, about = "Rigidity of the T_{x,y} genus on circle-action fixed-point data")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Series truncation order; overrides the input document.
    #[arg(long, global = true)]
    pub order: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact rigidity test and fixed-point-formula constant.
    Verify {
        /// Input document; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Two-point family classification with the proof replay.
    Classify { input: Option<PathBuf> },
    /// The proof replay alone.
    Replay { input: Option<PathBuf> },
    /// Coefficients of the equivariant genus as a series in u.
    Series { input: Option<PathBuf> },
    /// Exhaustive search for rigid data.
    Search(SearchArgs),
}

#[derive(Debug, clap::Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long = "max-weight")]
    pub max_weight: i64,
    /// Keep only data whose weights have gcd 1.
    #[arg(long = "effective-only")]
    pub effective_only: bool,
    /// `all`, or comma-separated patterns of `+`/`-` with one symbol per point.
    #[arg(long, default_value = "all")]
    pub signs: String,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Verify { input } => {
            let doc = read_input(input, stdin)?;
            let (report, code) = cmd_verify(&doc)?;
            emit(out, cli.format, &Report::Verify(report))?;
            Ok(code)
        }
        Command::Classify { input } => {
            let doc = read_input(input, stdin)?;
            let (report, code) = cmd_classify(&doc)?;
            emit(out, cli.format, &Report::Classify(report))?;
            Ok(code)
        }
        Command::Replay { input } => {
            let doc = read_input(input, stdin)?;
            let proof = cmd_replay(&doc)?;
            emit(out, cli.format, &Report::Replay(proof))?;
            Ok(EXIT_OK)
        }
        Command::Series { input } => {
            let doc = read_input(input, stdin)?;
            let (report, code) = cmd_series(&doc, cli.order)?;
            emit(out, cli.format, &Report::Series(report))?;
            Ok(code)
        }
        Command::Search(args) => cmd_search(args, cli.format, out),
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<InputDocument, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    InputDocument::parse(&text)
}

fn verdict_code(positive: bool) -> i32 {
    if positive {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

pub fn cmd_verify(doc: &InputDocument) -> Result<(VerifyReport, i32), CliError> {
    let d = doc.data()?;
    let r = is_rigid(&d);
    let report = VerifyReport {
        n: d.n(),
        m: d.m(),
        rigid: r.rigid,
        constant: r.constant.as_ref().map(monomials),
        ah_constant: monomials(&r.ah_constant),
        ah_constant_pretty: r.ah_constant.to_string(),
        defect_terms: r.defect.len(),
        limits_symmetric: r.limits_symmetric,
        weight_gcd: r.weight_gcd,
    };
    Ok((report, verdict_code(r.rigid)))
}

pub fn cmd_classify(doc: &InputDocument) -> Result<(ClassifyReport, i32), CliError> {
    let d = doc.data()?;
    let tag = classify_two_points(&d)?;
    let (proof, proof_note) = match replay_proof(&d) {
        Ok(t) => (Some(ProofDoc::from(&t)), None),
        Err(CoreError::NotApplicable(why)) => (None, Some(why)),
        Err(e) => return Err(e.into()),
    };
    let code = verdict_code(tag != FamilyTag::NotRigid);
    let report = ClassifyReport {
        family: tag.name().to_string(),
        params: tag.params(),
        tag: tag.to_string(),
        proof,
        proof_note,
    };
    Ok((report, code))
}

pub fn cmd_replay(doc: &InputDocument) -> Result<ProofDoc, CliError> {
    let d = doc.data()?;
    Ok(ProofDoc::from(&replay_proof(&d)?))
}

fn pretty_coeff(c: &PolyXY, e: i64) -> String {
    match e {
        0 => c.to_string(),
        _ => format!("({c})*(x + y)^{e}"),
    }
}

pub fn cmd_series(doc: &InputDocument, order: Option<i64>) -> Result<(SeriesReport, i32), CliError> {
    let d = doc.data()?;
    let g = doc.genus()?;
    let order = match order {
        Some(k) => k,
        None => doc.order()?,
    };
    let n = d.n() as i64;
    if order < n + 1 || order > MAX_ORDER {
        return Err(CliError::field(
            "order",
            format!("must lie in {}..={MAX_ORDER}, got {order}", n + 1),
        ));
    }
    let s = genus_series(&d, &g, order)?;
    let coefficients = (-n..order)
        .map(|k| {
            let (c, e) = s.coeff(k);
            SeriesRow {
                exponent: k,
                numerator: monomials(&c),
                unit_power: e,
                pretty: pretty_coeff(&c, e),
            }
        })
        .collect();
    let value = series_is_constant(&s);
    let cross_check = g.is_symbolic().then(|| {
        let exact = is_rigid(&d).constant;
        if exact == value { "agree" } else { "disagree" }.to_string()
    });
    let report = SeriesReport {
        genus: g.name.clone(),
        order,
        lowest: -n,
        coefficients,
        constant: value.is_some(),
        value: value.as_ref().map(monomials),
        cross_check,
    };
    Ok((report, verdict_code(value.is_some())))
}

/// Parses `--signs`: `all` or e.g. `++,+-`.
pub fn parse_signs(spec: &str, m: usize) -> Result<SignPatterns, CliError> {
    if spec.trim() == "all" {
        return Ok(SignPatterns::All);
    }
    let mut out = Vec::new();
    for pat in spec.split(',') {
        let pat = pat.trim();
        let signs = pat
            .chars()
            .map(|ch| match ch {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(CliError::Usage(format!("--signs: unexpected {ch:?} in {pat:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if signs.len() != m {
            return Err(CliError::Usage(format!("--signs: pattern {pat:?} needs {m} symbols")));
        }
        out.push(signs);
    }
    Ok(SignPatterns::Fixed(out))
}

pub fn cmd_search(args: &SearchArgs, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = SearchParams {
        sign_patterns: parse_signs(&args.signs, args.m)?,
        require_effective: args.effective_only,
        ..SearchParams::new(args.n, args.m, args.max_weight)
    };
    params.validate()?;
    if args.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let mut families: BTreeMap<String, u64> = BTreeMap::new();
    let mut io_err = None;
    let counts = search_stream(&params, args.jobs, |hit| {
        if let Some(f) = &hit.family {
            *families.entry(f.name().to_string()).or_default() += 1;
        }
        let rec = HitRecord {
            data: InputDocument::from_data(&hit.data),
            tag: hit.family.as_ref().map(|f| f.to_string()),
            constant: monomials(&hit.report.ah_constant),
            constant_pretty: hit.report.ah_constant.to_string(),
            weight_gcd: hit.report.weight_gcd,
        };
        if io_err.is_none() {
            if let Err(e) = emit_record(out, format, &SearchRecord::Hit(rec)) {
                io_err = Some(e);
            }
        }
    })?;
    if let Some(e) = io_err {
        return Err(e);
    }
    let summary = SummaryRecord {
        n: args.n,
        m: args.m,
        max_weight: args.max_weight,
        effective_only: args.effective_only,
        signs: args.signs.trim().to_string(),
        candidates: counts.candidates,
        pruned: counts.pruned,
        exactly_checked: counts.exactly_checked,
        rigid: counts.rigid,
        families,
    };
    emit_record(out, format, &SearchRecord::Summary(summary))?;
    Ok(EXIT_OK)
}

fn emit_record(out: &mut dyn Write, format: Format, rec: &SearchRecord) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let line = serde_json::to_string(rec).expect("records serialize");
            writeln!(out, "{line}")?;
        }
        Format::Table => match rec {
            SearchRecord::Hit(h) => {
                let d = h.data.data()?;
                let tag = h.tag.as_deref().unwrap_or("-");
                writeln!(out, "{tag:<16} {d:<40} {}", h.constant_pretty)?;
            }
            SearchRecord::Summary(s) => {
                writeln!(
                    out,
                    "n={} m={} W={}: {} candidates, {} pruned, {} checked, {} rigid",
                    s.n, s.m, s.max_weight, s.candidates, s.pruned, s.exactly_checked, s.rigid
                )?;
                for (f, c) in &s.families {
                    writeln!(out, "  {f}: {c}")?;
                }
            }
        },
    }
    Ok(())
}

fn emit(out: &mut dyn Write, format: Format, report: &Report) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(report).expect("reports serialize");
            writeln!(out, "{text}")?;
        }
        Format::Table => write_table(out, report)?,
    }
    Ok(())
}

fn write_table(out: &mut dyn Write, report: &Report) -> std::io::Result<()> {
    match report {
        Report::Verify(r) => {
            writeln!(out, "rigid:            {}", r.rigid)?;
            writeln!(out, "constant:         {}", r.ah_constant_pretty)?;
            writeln!(out, "defect terms:     {}", r.defect_terms)?;
            writeln!(out, "limits symmetric: {}", r.limits_symmetric)?;
            writeln!(out, "weight gcd:       {}", r.weight_gcd)
        }
        Report::Classify(r) => {
            writeln!(out, "family: {}", r.tag)?;
            match (&r.proof, &r.proof_note) {
                (Some(p), _) => write_proof(out, p),
                (None, Some(note)) => writeln!(out, "proof:  not applicable ({note})"),
                (None, None) => Ok(()),
            }
        }
        Report::Replay(p) => write_proof(out, p),
        Report::Series(r) => {
            writeln!(out, "genus {} to order {}", r.genus, r.order)?;
            for row in &r.coefficients {
                writeln!(out, "  u^{:<4} {}", row.exponent, row.pretty)?;
            }
            writeln!(out, "constant: {}", r.constant)?;
            if let Some(c) = &r.cross_check {
                writeln!(out, "cross-check: {c}")?;
            }
            Ok(())
        }
    }
}

fn write_proof(out: &mut dyn Write, p: &ProofDoc) -> std::io::Result<()> {
    let part = &p.partition;
    writeln!(out, "paired: {}  antipodal: {}  swapped: {}", p.paired, p.antipodal, p.swapped_points)?;
    if p.n1_shortcut {
        return writeln!(out, "n = 1: L1 directly");
    }
    writeln!(out, "k = {}, l = {}, a = {:?}, b = {:?}", part.k, part.l, part.a, part.b)?;
    writeln!(out, "eq6: {}  eq7: {}  eq8: {}", p.eq6_holds, p.eq7_holds, p.eq8_holds)?;
    match p.eq9_conclusion {
        Some(c) => writeln!(out, "conclusion: k = {}, l = {}, a = {}", c.k, c.l, c.a),
        None => writeln!(out, "conclusion: none"),
    }
}
