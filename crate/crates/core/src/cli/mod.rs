//! Command-line front end: `build`, `verify` and `certify`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid configuration.

pub mod suites;
pub mod wire;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::construction::{build_all, BasisBundle};
use crate::derivation::{saito_check, Derivation, Verdict};
use crate::exactalg::rational::to_short_string;

pub use suites::{run_suites, Record, Suite, Workspace};
pub use wire::{WireBasis, WireBundle, WireCertificate, WireDerivation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

pub const DEFAULT_CAP: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Shi,
    Cat,
    Both,
}

impl Family {
    pub fn has_shi(self) -> bool {
        matches!(self, Family::Shi | Family::Both)
    }

    pub fn has_cat(self) -> bool {
        matches!(self, Family::Cat | Family::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Build,
    Verify,
    Certify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Saito,
    Srb,
    Weyl,
    Swap,
    Restriction,
    Invariant,
    All,
}

#[derive(Parser, Debug)]
#[command(name = "shicat", version, about = "Bases and certificates for extended Shi and Catalan arrangements of type A2")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Build the bases at level k
    Build(LevelArgs),
    /// Run verification suites for k = 0..=k_max
    Verify(VerifyArgs),
    /// Emit bases together with Saito certificates at level k
    Certify(LevelArgs),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest level accepted
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u32,
    /// Include wall times (output is then no longer reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct LevelArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "both")]
    family: Family,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "k-max", default_value_t = 4)]
    k_max: u32,
    #[arg(long, value_enum, default_value = "both")]
    family: Family,
    /// Comma-separated or repeated
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    suite: Vec<SuiteArg>,
    #[command(flatten)]
    common: Common,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    /// `k` for build and certify, `k_max` for verify.
    pub k: u32,
    pub family: Family,
    pub suites: Vec<Suite>,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timings: bool,
    #[serde(skip)]
    pub cap: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("k = {k} exceeds the cap {cap}")]
    AboveCap { k: u32, cap: u32 },
    #[error("no suite selected")]
    NoSuite,
}

impl RunConfig {
    pub fn new(command: Command, k: u32, family: Family) -> Self {
        RunConfig {
            command,
            k,
            family,
            suites: if command == Command::Verify {
                Suite::ALL.to_vec()
            } else {
                Vec::new()
            },
            format: Format::Json,
            out: None,
            timings: false,
            cap: DEFAULT_CAP,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k > self.cap {
            return Err(ConfigError::AboveCap { k: self.k, cap: self.cap });
        }
        if self.command == Command::Verify && self.suites.is_empty() {
            return Err(ConfigError::NoSuite);
        }
        Ok(())
    }

    fn from_cli(cli: Cli) -> Self {
        let (command, k, family, suite_args, common) = match cli.command {
            Sub::Build(a) => (Command::Build, a.k, a.family, Vec::new(), a.common),
            Sub::Certify(a) => (Command::Certify, a.k, a.family, Vec::new(), a.common),
            Sub::Verify(a) => (Command::Verify, a.k_max, a.family, a.suite, a.common),
        };
        let mut suites: Vec<Suite> = suite_args
            .iter()
            .flat_map(|s| match s {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Saito => vec![Suite::Saito],
                SuiteArg::Srb => vec![Suite::Srb],
                SuiteArg::Weyl => vec![Suite::Weyl],
                SuiteArg::Swap => vec![Suite::Swap],
                SuiteArg::Restriction => vec![Suite::Restriction],
                SuiteArg::Invariant => vec![Suite::Invariant],
            })
            .collect();
        suites.sort();
        suites.dedup();
        RunConfig {
            command,
            k,
            family,
            suites,
            format: common.format,
            out: common.out,
            timings: common.timings,
            cap: common.cap,
        }
    }
}

/// Output of `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: serde_json::Value,
    pub records: Vec<Record>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub total_ms: Option<f64>,
}

impl Report {
    fn new(config: &RunConfig, records: Vec<Record>) -> Self {
        let verdict = Verdict::from_bool(records.iter().all(|r| r.verdict.passed()));
        Report {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: serde_json::to_value(config).expect("config serializes"),
            records,
            verdict,
            total_ms: None,
        }
    }
}

/// Output of `certify`: the bases plus one certificate per full basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    pub tool: String,
    pub version: String,
    pub bundle: WireBundle,
    pub certificates: Vec<WireCertificate>,
    pub verdict: Verdict,
}

/// Output of `build`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildOutput {
    pub tool: String,
    pub version: String,
    pub bundle: WireBundle,
}

fn pair(p: &[Derivation; 2]) -> Vec<WireDerivation> {
    p.iter().map(WireDerivation::from_derivation).collect()
}

pub fn bundle_to_wire(b: &BasisBundle, family: Family) -> WireBundle {
    let k = b.k;
    WireBundle {
        k,
        shi: family
            .has_shi()
            .then(|| WireBasis::new(&Arrangement::shi(k), &b.shi_basis())),
        srb_plus: family.has_shi().then(|| pair(&b.srb_plus)),
        srb_minus: family.has_shi().then(|| pair(&b.srb_minus)),
        cat: family
            .has_cat()
            .then(|| WireBasis::new(&Arrangement::cat(k), &b.cat_full_basis())),
        eta: family
            .has_cat()
            .then(|| WireBasis::new(&Arrangement::cat(k), &b.eta_full_basis())),
    }
}

/// The full bases contained in a bundle, with their arrangements.
pub fn wire_bases(w: &WireBundle) -> Vec<(Arrangement, &WireBasis)> {
    let mut v = Vec::new();
    if let Some(b) = &w.shi {
        v.push((Arrangement::shi(w.k), b));
    }
    for b in [&w.cat, &w.eta].into_iter().flatten() {
        v.push((Arrangement::cat(w.k), b));
    }
    v
}

/// Re-checks every basis in a serialized bundle. Parse errors and
/// precondition violations come back as `Err`.
pub fn certify_bundle(w: &WireBundle) -> Result<Vec<WireCertificate>, String> {
    wire_bases(w)
        .into_iter()
        .map(|(arr, basis)| {
            let ders = basis.derivations().map_err(|e| e.to_string())?;
            let cert = saito_check(&ders, &arr).map_err(|e| e.to_string())?;
            Ok(WireCertificate::new(&cert, &arr))
        })
        .collect()
}

fn level_bundle(k: u32) -> Result<BasisBundle, String> {
    let mut all = build_all(k).map_err(|e| e.to_string())?;
    Ok(all.pop().expect("nonempty"))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn text_basis(out: &mut String, name: &str, b: &WireBasis) {
    let e = b.exponents;
    let _ = writeln!(out, "{name}: {} exponents ({}, {}, {})", b.arrangement, e[0], e[1], e[2]);
    for d in &b.basis {
        let der = d.to_derivation().expect("own output parses");
        let deg = d.degree.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(out, "  {} [deg {deg}] = {}", d.label, der.to_alpha_string());
    }
}

fn text_pair(out: &mut String, name: &str, p: &[WireDerivation]) {
    let _ = writeln!(out, "{name}:");
    for d in p {
        let der = d.to_derivation().expect("own output parses");
        let _ = writeln!(out, "  {} = {}", d.label, der.to_alpha_string());
    }
}

fn text_bundle(w: &WireBundle) -> String {
    let mut out = format!("k = {}\n", w.k);
    if let Some(b) = &w.shi {
        text_basis(&mut out, "shi", b);
    }
    if let Some(p) = &w.srb_plus {
        text_pair(&mut out, "srb_plus", p);
    }
    if let Some(p) = &w.srb_minus {
        text_pair(&mut out, "srb_minus", p);
    }
    if let Some(b) = &w.cat {
        text_basis(&mut out, "cat", b);
    }
    if let Some(b) = &w.eta {
        text_basis(&mut out, "eta", b);
    }
    out
}

fn text_certificate(out: &mut String, c: &WireCertificate) {
    let c_val = crate::exactalg::parse_rational(&c.c).map(|r| to_short_string(&r)).unwrap_or_default();
    let det = wire::poly_from_wire(&c.determinant).map(|p| p.to_alpha_string()).unwrap_or_default();
    let degrees: Vec<String> = c.degrees.iter().map(|d| d.map_or("-".into(), |x| x.to_string())).collect();
    let _ = writeln!(
        out,
        "{} {}: degrees ({}), c = {c_val}",
        verdict_tag(c.verdict),
        c.arrangement,
        degrees.join(", ")
    );
    let _ = writeln!(out, "  det = {det}");
    let divides = c.quotients.iter().filter(|q| q.quotient.is_some()).count();
    let _ = writeln!(out, "  divisible by {divides} of {} forms", c.quotients.len());
}

fn verdict_tag(v: Verdict) -> &'static str {
    if v.passed() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn text_report(r: &Report) -> String {
    let mut out = String::new();
    for rec in &r.records {
        let _ = write!(out, "{} {:<11} {:<11} k={}", verdict_tag(rec.verdict), rec.suite.name(), rec.name, rec.k);
        if let Some(c) = &rec.c {
            let _ = write!(out, " c={c}");
        }
        if let Some(t) = rec.time_ms {
            let _ = write!(out, " ({t:.1} ms)");
        }
        if let Some(w) = &rec.witness {
            let _ = write!(out, " : {w}");
        }
        out.push('\n');
    }
    let passed = r.records.iter().filter(|x| x.verdict.passed()).count();
    let _ = writeln!(out, "{} {passed}/{} records", verdict_tag(r.verdict), r.records.len());
    out
}

/// Runs a validated configuration; returns the rendered output and exit code.
pub fn execute(config: &RunConfig) -> (String, i32) {
    if let Err(e) = config.validate() {
        return (format!("error: {e}\n"), EXIT_INVALID);
    }
    match config.command {
        Command::Build => match level_bundle(config.k) {
            Err(e) => (format!("error: {e}\n"), EXIT_CHECK_FAILED),
            Ok(b) => {
                let bundle = bundle_to_wire(&b, config.family);
                let text = match config.format {
                    Format::Json => json(&BuildOutput {
                        tool: env!("CARGO_PKG_NAME").to_string(),
                        version: env!("CARGO_PKG_VERSION").to_string(),
                        bundle,
                    }),
                    Format::Text => text_bundle(&bundle),
                };
                (text, EXIT_OK)
            }
        },
        Command::Certify => {
            let bundle = match level_bundle(config.k) {
                Ok(b) => bundle_to_wire(&b, config.family),
                Err(e) => return (format!("error: {e}\n"), EXIT_CHECK_FAILED),
            };
            let certificates = match certify_bundle(&bundle) {
                Ok(c) => c,
                Err(e) => return (format!("error: {e}\n"), EXIT_CHECK_FAILED),
            };
            let ok = certificates.iter().all(|c| c.verdict.passed() && c.exponents_match);
            let cert = Certification {
                tool: env!("CARGO_PKG_NAME").to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                bundle,
                certificates,
                verdict: Verdict::from_bool(ok),
            };
            let text = match config.format {
                Format::Json => json(&cert),
                Format::Text => {
                    let mut s = text_bundle(&cert.bundle);
                    for c in &cert.certificates {
                        text_certificate(&mut s, c);
                    }
                    s
                }
            };
            (text, if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Verify => {
            let start = Instant::now();
            let records = match Workspace::for_suites(config.k, &config.suites) {
                Ok(ws) => run_suites(&ws, &config.suites, config.family, config.timings),
                Err(e) => vec![Record {
                    suite: Suite::Saito,
                    name: "pipeline".to_string(),
                    k: config.k,
                    verdict: Verdict::Fail,
                    c: None,
                    witness: Some(e),
                    time_ms: None,
                }],
            };
            let mut report = Report::new(config, records);
            if config.timings {
                report.total_ms = Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
            }
            let code = if report.verdict.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            let text = match config.format {
                Format::Json => json(&report),
                Format::Text => text_report(&report),
            };
            (text, code)
        }
    }
}

/// Parses `args` (including the program name), runs, writes the output and
/// returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let config = RunConfig::from_cli(cli);
    let (text, code) = execute(&config);
    if code == EXIT_INVALID {
        eprint!("{text}");
        return code;
    }
    let written = match &config.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_INVALID;
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        let mut v = vec!["shicat"];
        v.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(v).unwrap())
    }

    #[test]
    fn parses_commands() {
        let c = parse(&["build", "--k", "3", "--family", "both"]);
        assert_eq!((c.command, c.k, c.family), (Command::Build, 3, Family::Both));
        let c = parse(&["verify", "--suite", "saito,srb", "--suite", "saito"]);
        assert_eq!(c.suites, vec![Suite::Saito, Suite::Srb]);
        assert_eq!(c.k, 4);
        let c = parse(&["verify", "--suite", "all"]);
        assert_eq!(c.suites, Suite::ALL.to_vec());
        assert!(Cli::try_parse_from(["shicat", "verify", "--suite", "bogus"]).is_err());
    }

    #[test]
    fn validation() {
        let c = parse(&["build", "--k", "9"]);
        assert_eq!(c.validate(), Err(ConfigError::AboveCap { k: 9, cap: 8 }));
        assert_eq!(execute(&c).1, EXIT_INVALID);
        let mut c = RunConfig::new(Command::Verify, 0, Family::Both);
        c.suites.clear();
        assert_eq!(c.validate(), Err(ConfigError::NoSuite));
        assert!(parse(&["build", "--k", "9", "--cap", "9"]).validate().is_ok());
    }

    #[test]
    fn build_k0_shi() {
        let (out, code) = execute(&RunConfig::new(Command::Build, 0, Family::Shi));
        assert_eq!(code, EXIT_OK);
        let b: BuildOutput = serde_json::from_str(&out).unwrap();
        let shi = b.bundle.shi.unwrap();
        let labels: Vec<&str> = shi.basis.iter().map(|d| d.label.as_str()).collect();
        assert_eq!(labels, ["euler", "phi1_k0", "phi2_k0"]);
        let d = shi.derivations().unwrap();
        assert_eq!(d[1].coeffs(), Derivation::partial(crate::exactalg::Var::A1).coeffs());
        assert_eq!(d[2].coeffs(), Derivation::partial(crate::exactalg::Var::A2).coeffs());
        assert!(b.bundle.cat.is_none());
    }

    #[test]
    fn build_text_cat1() {
        let mut c = RunConfig::new(Command::Build, 1, Family::Cat);
        c.format = Format::Text;
        let (out, code) = execute(&c);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("theta1_k1 [deg 4]"), "{out}");
        assert!(out.contains("theta2_k1 [deg 5]"), "{out}");
        assert!(out.contains("α1"));
    }

    #[test]
    fn certify_constants() {
        let (out, code) = execute(&RunConfig::new(Command::Certify, 0, Family::Cat));
        assert_eq!(code, EXIT_OK);
        let c: Certification = serde_json::from_str(&out).unwrap();
        assert_eq!(c.certificates[0].c, "-6/1");

        let (out, _) = execute(&RunConfig::new(Command::Certify, 1, Family::Shi));
        let c: Certification = serde_json::from_str(&out).unwrap();
        let q = &c.certificates[0].quotients;
        assert_eq!(q.len(), 7);
        assert!(q.iter().all(|x| x.quotient.is_some()));
    }

    #[test]
    fn verify_saito_k0() {
        let mut c = RunConfig::new(Command::Verify, 0, Family::Shi);
        c.suites = vec![Suite::Saito];
        let (out, code) = execute(&c);
        assert_eq!(code, EXIT_OK);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].c.as_deref(), Some("1/1"));
    }
}
