//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Every command produces a text report and a JSON payload carrying the same
//! verdicts. Exit codes: 0 when the checked property holds or the command
//! is informational, 1 when it fails, 2 for bad input.

pub mod format;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::acceptance::{
    accepted_set, classify_belief, ORACLE_MAX_ATOMS, classify_probability, describe_belief, describe_probability, is_acceptance,
    AcceptanceReport, BeliefClassification, ProbClassification,
};
use crate::conditioning::{
    check_property_a, check_property_b, classify_update, condition_possibility_distribution, condition_probability,
    conditioned_base, is_conditioned_base_belief_set, is_independent, PropertyReport, SweepConfig, SweepMode,
};
use crate::error::Error;
use crate::klm::{check_klm, KlmProperty, KlmStatus};
use crate::measures::{from_mass, from_possibility, from_probability};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};
use crate::witness::Witness;

pub use format::{emit_measure_file, emit_table, parse_measure_file, FormatError, Kind, MeasureSpec};

#[derive(Debug, Parser)]
#[command(name = "accept", version, about = "Acceptance analysis of confidence measures on finite universes")]
pub struct Cli {
    /// Print a JSON object instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Analyse the dual measure (Pl for mass files, N for poss files).
    #[arg(long, global = true)]
    pub dual: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a measure file.
    Validate { file: PathBuf },
    /// List the accepted events.
    Accept { file: PathBuf },
    /// Report the kernel and whether it is accepted.
    Kernel { file: PathBuf },
    /// Decide acceptance and classify mass or prob files structurally.
    Classify { file: PathBuf },
    /// Print the Möbius transform.
    Moebius {
        file: PathBuf,
        /// Exit 1 when some entry is negative.
        #[arg(long)]
        require_belief: bool,
    },
    /// Print the dual measure as a table file.
    Dual { file: PathBuf },
    /// Report the belief base conditioned on a context.
    Condition {
        file: PathBuf,
        /// Context event, e.g. `{a,b}`.
        #[arg(long)]
        context: String,
        /// Numeric rule printed after the base; bayes needs a prob file, possibilistic a poss file.
        #[arg(long, value_enum, ignore_case = true, default_value_t = Rule::Generic)]
        rule: Rule,
    },
    /// Check context tolerance through properties A and B.
    Tolerant {
        file: PathBuf,
        /// Check only one property (both by default).
        #[arg(long, value_enum, ignore_case = true)]
        property: Option<PropertyArg>,
        /// Largest universe swept exhaustively.
        #[arg(long)]
        max_exhaustive: Option<usize>,
        /// Sample count used above the exhaustive limit.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for sampled sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check KLM rules of the induced consequence relation.
    Klm {
        file: PathBuf,
        /// Comma-separated subset of ref,rw,and,or,cm,cut.
        #[arg(long, value_delimiter = ',')]
        props: Vec<KlmProperty>,
        /// Largest universe swept exhaustively.
        #[arg(long)]
        max_exhaustive: Option<usize>,
        /// Sample count used above the exhaustive limit.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for sampled sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Whether an accepted event stays accepted in a context.
    Independent {
        file: PathBuf,
        /// Event to test, e.g. `{a}`.
        #[arg(long)]
        event: String,
        /// Context event, e.g. `{a,b}`.
        #[arg(long)]
        context: String,
    },
    /// Classify conditioning on a context as expansion or revision.
    Update {
        file: PathBuf,
        /// Context event, e.g. `{a,b}`.
        #[arg(long)]
        context: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Generic,
    Bayes,
    Possibilistic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    A,
    B,
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub stdout: String,
    pub stderr: String,
    pub json: Option<Value>,
    pub exit_code: u8,
}

enum CliError {
    Io(PathBuf, String),
    Format(FormatError),
    Core(Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Format(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// Report built by a command before rendering.
struct Report {
    text: String,
    json: Map<String, Value>,
    failed: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("command".into(), command.into());
        Report {
            text: String::new(),
            json,
            failed: false,
        }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.text.push_str(text.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.json.insert(key.into(), value.into());
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn ev(u: &Universe, e: Event) -> Value {
    Value::String(u.format_event(e))
}

fn events_json(u: &Universe, events: &[Event]) -> Value {
    Value::Array(events.iter().map(|&e| ev(u, e)).collect())
}

fn join_events(u: &Universe, events: &[Event]) -> String {
    events.iter().map(|&e| u.format_event(e)).collect::<Vec<_>>().join(" ")
}

/// Pairs up witness values into `lhs op rhs` lines.
fn inequalities(w: &Witness, ops: &[&str]) -> Vec<String> {
    w.values
        .chunks(2)
        .zip(ops)
        .map(|(pair, op)| format!("{} = {} {op} {} = {}", pair[0].0, pair[0].1, pair[1].0, pair[1].1))
        .collect()
}

fn witness_json(u: &Universe, w: &Witness) -> Value {
    let events: Map<String, Value> = w.events.iter().map(|(role, e)| (role.to_string(), ev(u, *e))).collect();
    let values: Vec<Value> = w
        .values
        .iter()
        .map(|(label, v)| json!({ "label": label, "value": rat(v) }))
        .collect();
    json!({ "events": events, "values": values })
}

fn write_witness(report: &mut Report, u: &Universe, w: &Witness, ops: &[&str]) {
    report.line(format!("  counterexample: {}", w.render_events(u)));
    for line in inequalities(w, ops) {
        report.line(format!("  {line}"));
    }
}

/// Measure file plus the function under analysis.
struct Loaded {
    spec: MeasureSpec,
    function: SetFunction,
    label: &'static str,
    dual: bool,
}

impl Loaded {
    fn universe(&self) -> &Universe {
        self.spec.universe()
    }

    fn event(&self, text: &str) -> Result<Event, CliError> {
        Ok(self.universe().parse_event(text)?)
    }
}

fn load(path: &Path, dual: bool) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e.to_string()))?;
    let spec = parse_measure_file(&text).map_err(CliError::Format)?;
    let (primary, secondary, labels) = match &spec {
        MeasureSpec::Table(f) => (f.clone(), f.dual(), ("g", "dual g")),
        MeasureSpec::Mass(m) => {
            let (bel, pl) = from_mass(m);
            (bel, pl, ("Bel", "Pl"))
        }
        MeasureSpec::Prob(p) => {
            let f = from_probability(p);
            (f.clone(), f, ("P", "P"))
        }
        MeasureSpec::Poss(p) => {
            let (pi, nec) = from_possibility(p);
            (pi, nec, ("Π", "N"))
        }
    };
    let (function, label) = if dual {
        (secondary, labels.1)
    } else {
        (primary, labels.0)
    };
    Ok(Loaded {
        spec,
        function,
        label,
        dual,
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            CommandResult {
                stdout: if code == 0 { rendered.clone() } else { String::new() },
                stderr: if code == 0 { String::new() } else { rendered },
                json: None,
                exit_code: code,
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CommandResult {
    let outcome = match &cli.command {
        Command::Validate { file } => load(file, cli.dual).map(validate),
        Command::Accept { file } => load(file, cli.dual).and_then(accept),
        Command::Kernel { file } => load(file, cli.dual).and_then(kernel),
        Command::Classify { file } => load(file, cli.dual).and_then(classify),
        Command::Moebius { file, require_belief } => load(file, cli.dual).and_then(|l| moebius(l, *require_belief)),
        Command::Dual { file } => load(file, cli.dual).map(dual),
        Command::Condition { file, context, rule } => load(file, cli.dual).and_then(|l| condition(l, context, *rule)),
        Command::Tolerant {
            file,
            property,
            max_exhaustive,
            samples,
            seed,
        } => {
            let config = SweepConfig {
                max_atoms: *max_exhaustive,
                samples: *samples,
                seed: *seed,
            };
            load(file, cli.dual).and_then(|l| tolerant(l, *property, &config))
        }
        Command::Klm {
            file,
            props,
            max_exhaustive,
            samples,
            seed,
        } => {
            let config = SweepConfig {
                max_atoms: *max_exhaustive,
                samples: *samples,
                seed: *seed,
            };
            load(file, cli.dual).and_then(|l| klm(l, props, &config))
        }
        Command::Independent { file, event, context } => {
            load(file, cli.dual).and_then(|l| independent(l, event, context))
        }
        Command::Update { file, context } => load(file, cli.dual).and_then(|l| update(l, context)),
    };
    match outcome {
        Ok(report) => {
            let exit_code = u8::from(report.failed);
            let mut payload = report.json;
            payload.insert("exit_code".into(), exit_code.into());
            let payload = Value::Object(payload);
            let stdout = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&payload).expect("serializable"))
            } else {
                report.text
            };
            CommandResult {
                stdout,
                stderr: String::new(),
                json: Some(payload),
                exit_code,
            }
        }
        Err(e) => {
            let payload = json!({ "error": e.to_string(), "exit_code": 2 });
            CommandResult {
                stdout: if cli.json {
                    format!("{}\n", serde_json::to_string_pretty(&payload).expect("serializable"))
                } else {
                    String::new()
                },
                stderr: format!("error: {e}\n"),
                json: Some(payload),
                exit_code: 2,
            }
        }
    }
}

fn header(report: &mut Report, loaded: &Loaded) {
    report.set("kind", loaded.spec.kind().name());
    report.set("function", loaded.label);
}

fn validate(loaded: Loaded) -> Report {
    let mut report = Report::new("validate");
    header(&mut report, &loaded);
    let u = loaded.universe();
    report.line(format!("valid: yes, kind {}, {} atoms: {}", loaded.spec.kind(), u.len(), u.atoms().join(" ")));
    report.set("valid", true);
    report.set("universe", u.atoms().to_vec());
    report
}

fn accept(loaded: Loaded) -> Result<Report, CliError> {
    let mut report = Report::new("accept");
    header(&mut report, &loaded);
    let f = &loaded.function;
    let u = loaded.universe();
    let accepted = accepted_set(f)?;
    let verdict = is_acceptance(f)?;
    report.line(format!("function: {}", loaded.label));
    report.line(format!("accepted: {} of {} events", accepted.len(), u.event_count()));
    if !accepted.is_empty() {
        report.line(format!("  {}", join_events(u, &accepted)));
    }
    report.line(format!("kernel: {}", u.format_event(verdict.kernel)));
    report.line(format!("belief set: {}", yes(verdict.is_acceptance)));
    report.set("accepted", events_json(u, &accepted));
    report.set("accepted_count", accepted.len());
    report.set("kernel", ev(u, verdict.kernel));
    report.set("belief_set", verdict.is_acceptance);
    Ok(report)
}

fn kernel_lines(report: &mut Report, loaded: &Loaded, verdict: &AcceptanceReport) {
    let u = loaded.universe();
    let f = &loaded.function;
    let k = verdict.kernel;
    let co = u.complement(k);
    let relation = if verdict.is_acceptance { ">" } else { "<=" };
    report.line(format!(
        "  {label}({}) = {} {relation} {label}({}) = {}",
        u.format_event(k),
        f[k],
        u.format_event(co),
        f[co],
        label = loaded.label
    ));
    if let Some(level) = &verdict.indifference_level {
        report.line(format!("indifference level: {level}"));
    }
    report.set("kernel", ev(u, k));
    report.set("kernel_value", rat(&f[k]));
    report.set("complement_value", rat(&f[co]));
    report.set("indifference_level", verdict.indifference_level.as_ref().map_or(Value::Null, rat));
}

fn kernel(loaded: Loaded) -> Result<Report, CliError> {
    let mut report = Report::new("kernel");
    header(&mut report, &loaded);
    let verdict = is_acceptance(&loaded.function)?;
    let u = loaded.universe();
    report.line(format!(
        "kernel: {}, accepted: {}",
        u.format_event(verdict.kernel),
        yes(verdict.is_acceptance)
    ));
    kernel_lines(&mut report, &loaded, &verdict);
    report.set("kernel_accepted", verdict.is_acceptance);
    Ok(report)
}

enum Structural {
    Belief(BeliefClassification),
    Prob(ProbClassification),
}

fn classify(loaded: Loaded) -> Result<Report, CliError> {
    let mut report = Report::new("classify");
    header(&mut report, &loaded);
    let verdict = is_acceptance(&loaded.function)?;
    let u = loaded.universe();
    // Structural classes describe Bel and P; the dual of P is P itself.
    let structural = match &loaded.spec {
        MeasureSpec::Mass(m) if !loaded.dual => Some(Structural::Belief(classify_belief(m))),
        MeasureSpec::Prob(p) => Some(Structural::Prob(classify_probability(p))),
        _ => None,
    };
    let mut first = format!(
        "acceptance: {}, kernel {}",
        yes(verdict.is_acceptance),
        u.format_event(verdict.kernel)
    );
    let (class, detail, pair) = match &structural {
        Some(Structural::Belief(c)) => (Some(c.name()), describe_belief(u, c), match c {
            BeliefClassification::NotAcceptance(a, b) => Some((*a, *b)),
            _ => None,
        }),
        Some(Structural::Prob(c)) => (Some(c.name()), describe_probability(u, c), match c {
            ProbClassification::NotAcceptance(a, b) => Some((*a, *b)),
            _ => None,
        }),
        None => (None, String::new(), None),
    };
    if let Some(class) = class {
        write!(first, ", class: {class}").unwrap();
    }
    report.line(first);
    if !detail.is_empty() {
        report.line(format!("  {detail}"));
    }
    kernel_lines(&mut report, &loaded, &verdict);
    report.set("acceptance", verdict.is_acceptance);
    report.set("class", class.map_or(Value::Null, Value::from));
    report.set(
        "witness",
        pair.map_or(Value::Null, |(a, b)| json!({ "A": ev(u, a), "B": ev(u, b) })),
    );
    report.failed = !verdict.is_acceptance;
    Ok(report)
}

fn moebius(loaded: Loaded, require_belief: bool) -> Result<Report, CliError> {
    let mut report = Report::new("moebius");
    header(&mut report, &loaded);
    let u = loaded.universe();
    let masses = loaded.function.moebius();
    report.line(format!("function: {}", loaded.label));
    let mut entries = Vec::new();
    for (e, v) in masses.entries() {
        report.line(format!("m {} = {v}", u.format_event(e)));
        entries.push(json!({ "event": ev(u, e), "value": rat(v) }));
    }
    let negative = masses.most_negative().filter(|(_, v)| v.is_negative());
    match negative {
        Some((e, v)) => report.line(format!("belief function: no, m {} = {v}", u.format_event(e))),
        None => report.line("belief function: yes"),
    }
    report.set("masses", entries);
    report.set("belief_function", negative.is_none());
    report.set(
        "most_negative",
        negative.map_or(Value::Null, |(e, v)| json!({ "event": ev(u, e), "value": rat(v) })),
    );
    report.failed = require_belief && negative.is_some();
    Ok(report)
}

fn dual(loaded: Loaded) -> Report {
    let mut report = Report::new("dual");
    header(&mut report, &loaded);
    let file = emit_table(&loaded.function.dual());
    report.text = file.clone();
    report.set("file", file);
    report
}

fn condition(loaded: Loaded, context: &str, rule: Rule) -> Result<Report, CliError> {
    let mut report = Report::new("condition");
    header(&mut report, &loaded);
    let c = loaded.event(context)?;
    let u = loaded.universe();
    let conditioned = match (rule, &loaded.spec) {
        (Rule::Generic, _) => None,
        (Rule::Bayes, MeasureSpec::Prob(p)) => Some(emit_measure_file(&MeasureSpec::Prob(condition_probability(p, c)?))),
        (Rule::Possibilistic, MeasureSpec::Poss(p)) => Some(emit_measure_file(&MeasureSpec::Poss(
            condition_possibility_distribution(p, c)?,
        ))),
        (Rule::Bayes, _) => return Err(CliError::Usage("rule bayes needs a prob file".into())),
        (Rule::Possibilistic, _) => return Err(CliError::Usage("rule possibilistic needs a poss file".into())),
    };
    let base = conditioned_base(&loaded.function, c)?;
    let closure = is_conditioned_base_belief_set(&loaded.function, c)?;
    report.line(format!("context: {}", u.format_event(c)));
    report.line(format!("conditioned base: {} events", base.len()));
    if !base.is_empty() {
        report.line(format!("  {}", join_events(u, &base)));
    }
    match (closure.violation_witness, closure.conditioned_kernel) {
        (Some((a, b)), _) => report.line(format!(
            "belief set: no, {} and {} are accepted but not {}",
            u.format_event(a),
            u.format_event(b),
            u.format_event(a & b)
        )),
        (None, Some(k)) => report.line(format!("belief set: yes, conditioned kernel {}", u.format_event(k))),
        (None, None) => report.line("belief set: yes, empty base"),
    }
    report.set("context", ev(u, c));
    report.set("base", events_json(u, &base));
    report.set("belief_set", closure.is_belief_set);
    report.set(
        "witness",
        closure
            .violation_witness
            .map_or(Value::Null, |(a, b)| json!({ "A": ev(u, a), "B": ev(u, b) })),
    );
    report.set("conditioned_kernel", closure.conditioned_kernel.map_or(Value::Null, |k| ev(u, k)));
    if let Some(file) = conditioned {
        report.line("conditioned measure:");
        report.text.push_str(&file);
        report.set("file", file);
    }
    Ok(report)
}

const PROPERTY_OPS: [&str; 3] = [">", ">", "<="];

fn property_lines(report: &mut Report, u: &Universe, r: &PropertyReport) -> Value {
    let status = if r.holds {
        match r.mode {
            SweepMode::Exhaustive => "holds".to_string(),
            _ => "no counterexample".to_string(),
        }
    } else {
        "fails".to_string()
    };
    report.line(format!("property {}: {status} ({})", r.property.name(), r.mode.describe()));
    if let Some(w) = &r.counterexample {
        write_witness(report, u, w, &PROPERTY_OPS);
    }
    json!({
        "property": r.property.name(),
        "holds": r.holds,
        "mode": r.mode.describe(),
        "counterexample": r.counterexample.as_ref().map_or(Value::Null, |w| witness_json(u, w)),
    })
}

fn tolerant(loaded: Loaded, property: Option<PropertyArg>, config: &SweepConfig) -> Result<Report, CliError> {
    let mut report = Report::new("tolerant");
    header(&mut report, &loaded);
    let f = &loaded.function;
    let u = loaded.universe();
    let reports = match property {
        Some(PropertyArg::A) => vec![check_property_a(f, config)?],
        Some(PropertyArg::B) => vec![check_property_b(f, config)?],
        None => vec![check_property_a(f, config)?, check_property_b(f, config)?],
    };
    let entries: Vec<Value> = reports.iter().map(|r| property_lines(&mut report, u, r)).collect();
    if let [a, b] = &reports[..] {
        let agree = a.holds == b.holds;
        report.line(format!("properties agree: {}", yes(agree)));
        report.set("agree", agree);
    }
    let tolerant = reports.iter().all(|r| r.holds);
    report.set("properties", entries);
    report.set("tolerant", tolerant);
    report.failed = !tolerant;
    Ok(report)
}

fn klm(loaded: Loaded, props: &[KlmProperty], config: &SweepConfig) -> Result<Report, CliError> {
    let mut report = Report::new("klm");
    header(&mut report, &loaded);
    let u = loaded.universe();
    let chosen: BTreeSet<KlmProperty> = if props.is_empty() {
        KlmProperty::ALL.into_iter().collect()
    } else {
        props.iter().copied().collect()
    };
    let result = check_klm(&loaded.function, &chosen, config)?;
    let mut entries = Vec::new();
    for entry in &result.entries {
        let detail = match &entry.status {
            KlmStatus::Holds => "holds (exhaustive)".to_string(),
            KlmStatus::NoCounterexample { samples } => format!("no counterexample ({samples} samples)"),
            KlmStatus::Fails(_) => format!("fails ({})", result.mode.describe()),
        };
        report.line(format!("{}: {detail}", entry.property));
        if let Some(w) = entry.status.counterexample() {
            write_witness(&mut report, u, w, &["<="]);
        }
        entries.push(json!({
            "property": entry.property.id(),
            "status": entry.status.name(),
            "counterexample": entry.status.counterexample().map_or(Value::Null, |w| witness_json(u, w)),
        }));
    }
    report.set("mode", result.mode.describe());
    report.set("properties", entries);
    report.set("all_hold", result.all_hold());
    report.failed = !result.all_hold();
    Ok(report)
}

fn independent(loaded: Loaded, event: &str, context: &str) -> Result<Report, CliError> {
    let mut report = Report::new("independent");
    header(&mut report, &loaded);
    let (a, c) = (loaded.event(event)?, loaded.event(context)?);
    let u = loaded.universe();
    let verdict = is_independent(&loaded.function, a, c)?;
    let accepted = is_independent(&loaded.function, a, u.full())?;
    report.line(format!(
        "independent: {}, {} accepted: {}, accepted in context {}: {}",
        yes(verdict),
        u.format_event(a),
        yes(accepted),
        u.format_event(c),
        yes(conditioned_base(&loaded.function, c)?.contains(&a))
    ));
    report.set("event", ev(u, a));
    report.set("context", ev(u, c));
    report.set("independent", verdict);
    report.failed = !verdict;
    Ok(report)
}

fn update(loaded: Loaded, context: &str) -> Result<Report, CliError> {
    let mut report = Report::new("update");
    header(&mut report, &loaded);
    let c = loaded.event(context)?;
    let u = loaded.universe();
    report.set("context", ev(u, c));
    let result = match classify_update(&loaded.function, c) {
        Err(Error::NotAcceptanceFunction(k)) => {
            report.line(format!("update: not an acceptance function, kernel {k} is not accepted"));
            report.set("class", Value::Null);
            report.set("acceptance", false);
            report.failed = true;
            return Ok(report);
        }
        other => other?,
    };
    report.line(format!(
        "update: {}, kernel {}, context {}",
        result.class.name(),
        u.format_event(result.kernel),
        u.format_event(c)
    ));
    if let Some(k) = result.kernel_candidate {
        let note = match result.candidate_confirmed {
            Some(true) => ", confirmed",
            Some(false) => ", not confirmed",
            None => "",
        };
        report.line(format!("kernel candidate: {}{note}", u.format_event(k)));
    }
    let revised = (u.len() <= ORACLE_MAX_ATOMS)
        .then(|| is_conditioned_base_belief_set(&loaded.function, c))
        .transpose()?;
    match &revised {
        Some(r) if !r.is_belief_set => report.line("revised base: not a belief set"),
        Some(r) => match r.conditioned_kernel {
            Some(k) => report.line(format!("revised kernel: {}", u.format_event(k))),
            None => report.line("revised base: empty"),
        },
        None => {}
    }
    report.set("acceptance", true);
    report.set("class", result.class.name());
    report.set("kernel", ev(u, result.kernel));
    report.set("kernel_candidate", result.kernel_candidate.map_or(Value::Null, |k| ev(u, k)));
    report.set(
        "revised_kernel",
        revised.and_then(|r| r.conditioned_kernel).map_or(Value::Null, |k| ev(u, k)),
    );
    report.set("confirmed", result.candidate_confirmed.map_or(Value::Null, Value::from));
    Ok(report)
}
