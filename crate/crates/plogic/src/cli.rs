//! Command-line front end: problem and evidence files, commands, and
//! deterministic text output.
//!
//! Problem files (`.plp`) are line oriented; `#` starts a comment and
//! formulas containing spaces must be double-quoted:
//!
//! ```text
//! sentence <formula> [prior <p> | prior in [<lo>, <hi>]]
//! target <formula>
//! option atoms-cap <n>
//! option schema conj-mp
//! ```
//!
//! Evidence files (`.plev`) describe one revision scenario against the
//! compressed tableau (world indices are 1-based columns of the tableau the
//! `compress` and `revise` commands print):
//!
//! ```text
//! prior-solution <w1> <w2> …
//! assess <formula> world <j> <p>
//! assess <formula> auto
//! evidence on <formula> likelihood <pE|S> <pE|notS>
//! evidence on <formula> posterior <pS|E>
//! ```
//!
//! Exit codes: 0 on success, 1 on infeasible or inconsistent input, 2 on
//! usage or parse errors. All error text goes to stderr.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::compress::{compress_with_stats, CompressStats};
use crate::constraints::{build_system, validate_probability, Belief, BeliefKind};
use crate::error::{Error, Result};
use crate::revise::{
    apply_evidence, auto_assess, check_assessment, select_prior, Assessment, Evidence,
    EvidenceForm, PriorStrategy,
};
use crate::sentence::Sentence;
use crate::solve::entail_interval;
use crate::worlds::{conjunctive_mp_worlds, Tableau, DEFAULT_ATOM_CAP};

/// A parsed problem file: sources with optional beliefs, one target, and
/// options.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    sources: Vec<(Sentence, Option<BeliefKind>)>,
    target: Sentence,
    atoms_cap: usize,
    schema: Option<Schema>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schema {
    ConjMp,
}

impl ProblemSpec {
    /// Sources in declaration order, then the target.
    pub fn sentence_list(&self) -> Vec<Sentence> {
        let mut list: Vec<Sentence> = self.sources.iter().map(|(s, _)| s.clone()).collect();
        list.push(self.target.clone());
        list
    }

    pub fn source_count(&self) -> usize {
        self.sources.len()
    }

    pub fn target_index(&self) -> usize {
        self.sources.len()
    }

    pub fn schema(&self) -> Option<Schema> {
        self.schema
    }

    pub fn atoms_cap(&self) -> usize {
        self.atoms_cap
    }

    pub fn beliefs(&self) -> Result<Vec<Belief>> {
        let mut beliefs = Vec::new();
        for (index, (_, kind)) in self.sources.iter().enumerate() {
            match kind {
                Some(BeliefKind::Point(p)) => beliefs.push(Belief::point(index, *p)?),
                Some(BeliefKind::Interval { lo, hi }) => {
                    beliefs.push(Belief::interval(index, *lo, *hi)?)
                }
                None => {}
            }
        }
        Ok(beliefs)
    }

    /// Point belief attached to a sentence index, when there is one.
    pub fn point_belief(&self, index: usize) -> Option<f64> {
        match self.sources.get(index) {
            Some((_, Some(BeliefKind::Point(p)))) => Some(*p),
            _ => None,
        }
    }

    /// Index of a structurally equal sentence among sources and target.
    pub fn find_sentence(&self, sentence: &Sentence) -> Option<usize> {
        self.sources
            .iter()
            .position(|(s, _)| s == sentence)
            .or_else(|| (self.target == *sentence).then_some(self.sources.len()))
    }
}

/// A parsed evidence file.
#[derive(Debug, Clone)]
pub struct EvidenceSpec {
    prior_solution: Option<Vec<f64>>,
    assessments: Vec<AssessDecl>,
    evidence: EvidenceDecl,
}

#[derive(Debug, Clone)]
struct AssessDecl {
    sentence: Sentence,
    kind: AssessKind,
}

#[derive(Debug, Clone)]
enum AssessKind {
    Auto,
    Cell { world_1based: usize, value: f64 },
}

#[derive(Debug, Clone)]
struct EvidenceDecl {
    sentence: Sentence,
    form: EvidenceForm,
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemSpec> {
    let mut sources: Vec<(Sentence, Option<BeliefKind>)> = Vec::new();
    let mut target: Option<Sentence> = None;
    let mut atoms_cap = DEFAULT_ATOM_CAP;
    let mut schema = None;
    for (line_index, raw) in text.lines().enumerate() {
        let line = line_index + 1;
        let tokens = tokenize(raw, line)?;
        let Some(head) = tokens.first() else {
            continue;
        };
        match head.as_str() {
            "sentence" => {
                let (sentence, rest) = take_formula(&tokens[1..], line)?;
                let belief = parse_belief_tail(rest, line)?;
                sources.push((sentence, belief));
            }
            "target" => {
                let (sentence, rest) = take_formula(&tokens[1..], line)?;
                if !rest.is_empty() {
                    return Err(format_error(line, "unexpected tokens after target formula"));
                }
                if target.is_some() {
                    return Err(format_error(line, "duplicate target declaration"));
                }
                target = Some(sentence);
            }
            "option" => match tokens.get(1).map(String::as_str) {
                Some("atoms-cap") => {
                    let value = tokens
                        .get(2)
                        .ok_or_else(|| format_error(line, "option atoms-cap needs a value"))?;
                    let cap: usize = value
                        .parse()
                        .map_err(|_| format_error(line, "atoms-cap must be an integer"))?;
                    if cap == 0 || cap > 30 {
                        return Err(format_error(line, "atoms-cap must be between 1 and 30"));
                    }
                    atoms_cap = cap;
                }
                Some("schema") => {
                    if tokens.get(2).map(String::as_str) != Some("conj-mp") {
                        return Err(format_error(line, "unknown schema; expected conj-mp"));
                    }
                    schema = Some(Schema::ConjMp);
                }
                _ => return Err(format_error(line, "unknown option")),
            },
            other => {
                return Err(format_error(line, &format!("unknown directive `{other}`")));
            }
        }
    }
    let target = target.ok_or_else(|| format_error(0, "missing target declaration"))?;
    if sources.is_empty() {
        return Err(format_error(
            0,
            "problem needs at least one source sentence",
        ));
    }
    let mut all = sources.iter().map(|(s, _)| s).collect::<Vec<_>>();
    all.push(&target);
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if a == b {
                return Err(format_error(0, &format!("duplicate sentence `{a}`")));
            }
        }
    }
    Ok(ProblemSpec {
        sources,
        target,
        atoms_cap,
        schema,
    })
}

/// Parses an evidence file.
pub fn parse_evidence(text: &str) -> Result<EvidenceSpec> {
    let mut prior_solution: Option<Vec<f64>> = None;
    let mut assessments = Vec::new();
    let mut evidence: Option<EvidenceDecl> = None;
    for (line_index, raw) in text.lines().enumerate() {
        let line = line_index + 1;
        let tokens = tokenize(raw, line)?;
        let Some(head) = tokens.first() else {
            continue;
        };
        match head.as_str() {
            "prior-solution" => {
                if prior_solution.is_some() {
                    return Err(format_error(line, "duplicate prior-solution"));
                }
                if tokens.len() < 2 {
                    return Err(format_error(line, "prior-solution needs weights"));
                }
                let weights = tokens[1..]
                    .iter()
                    .map(|t| parse_probability(t, line))
                    .collect::<Result<Vec<f64>>>()?;
                prior_solution = Some(weights);
            }
            "assess" => {
                let (sentence, rest) = take_formula(&tokens[1..], line)?;
                match rest.first().map(String::as_str) {
                    Some("auto") => {
                        if rest.len() != 1 {
                            return Err(format_error(line, "unexpected tokens after auto"));
                        }
                        assessments.push(AssessDecl {
                            sentence,
                            kind: AssessKind::Auto,
                        });
                    }
                    Some("world") => {
                        let [_, index, value] = rest else {
                            return Err(format_error(
                                line,
                                "expected `world <index> <probability>`",
                            ));
                        };
                        let world_1based: usize = index
                            .parse()
                            .map_err(|_| format_error(line, "world index must be an integer"))?;
                        if world_1based == 0 {
                            return Err(format_error(line, "world indices are 1-based"));
                        }
                        let value = parse_probability(value, line)?;
                        assessments.push(AssessDecl {
                            sentence,
                            kind: AssessKind::Cell {
                                world_1based,
                                value,
                            },
                        });
                    }
                    _ => {
                        return Err(format_error(
                            line,
                            "expected `auto` or `world <index> <probability>`",
                        ))
                    }
                }
            }
            "evidence" => {
                if evidence.is_some() {
                    return Err(format_error(line, "duplicate evidence declaration"));
                }
                if tokens.get(1).map(String::as_str) != Some("on") {
                    return Err(format_error(line, "expected `evidence on <formula> …`"));
                }
                let (sentence, rest) = take_formula(&tokens[2..], line)?;
                let form = match rest.first().map(String::as_str) {
                    Some("likelihood") => {
                        let [_, a, b] = rest else {
                            return Err(format_error(
                                line,
                                "expected `likelihood <pE|S> <pE|notS>`",
                            ));
                        };
                        EvidenceForm::Likelihood {
                            given_true: parse_probability(a, line)?,
                            given_false: parse_probability(b, line)?,
                        }
                    }
                    Some("posterior") => {
                        let [_, p] = rest else {
                            return Err(format_error(line, "expected `posterior <pS|E>`"));
                        };
                        EvidenceForm::Posterior {
                            probability: parse_probability(p, line)?,
                        }
                    }
                    _ => return Err(format_error(line, "expected `likelihood` or `posterior`")),
                };
                evidence = Some(EvidenceDecl { sentence, form });
            }
            other => {
                return Err(format_error(line, &format!("unknown directive `{other}`")));
            }
        }
    }
    let evidence = evidence.ok_or_else(|| format_error(0, "missing evidence declaration"))?;
    Ok(EvidenceSpec {
        prior_solution,
        assessments,
        evidence,
    })
}

fn format_error(line: usize, message: &str) -> Error {
    Error::FileFormat {
        line,
        message: message.to_string(),
    }
}

fn parse_probability(token: &str, line: usize) -> Result<f64> {
    let value: f64 = token
        .parse()
        .map_err(|_| format_error(line, &format!("`{token}` is not a number")))?;
    validate_probability(value)
        .map_err(|_| format_error(line, &format!("`{token}` is not a probability in [0, 1]")))
}

/// Splits a line into tokens, honoring double quotes and `#` comments.
fn tokenize(line: &str, line_number: usize) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut in_quotes = false;
    for c in line.chars() {
        match c {
            '"' => {
                if in_quotes {
                    tokens.push(std::mem::take(&mut current));
                    in_quotes = false;
                } else {
                    if !current.is_empty() {
                        tokens.push(std::mem::take(&mut current));
                    }
                    in_quotes = true;
                }
            }
            '#' if !in_quotes => break,
            c if c.is_whitespace() && !in_quotes => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if in_quotes {
        return Err(format_error(line_number, "unterminated quote"));
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    Ok(tokens)
}

/// Takes one formula from the token stream: either a single (possibly
/// quoted) token. Returns the parsed sentence and the remaining tokens.
fn take_formula(tokens: &[String], line: usize) -> Result<(Sentence, &[String])> {
    let Some(first) = tokens.first() else {
        return Err(format_error(line, "expected a formula"));
    };
    let sentence = Sentence::parse(first)
        .map_err(|e| format_error(line, &format!("bad formula `{first}`: {e}")))?;
    Ok((sentence, &tokens[1..]))
}

fn parse_belief_tail(tokens: &[String], line: usize) -> Result<Option<BeliefKind>> {
    match tokens.first().map(String::as_str) {
        None => Ok(None),
        Some("prior") => match tokens.get(1).map(String::as_str) {
            Some("in") => {
                let joined = tokens[2..].join(" ");
                let inner = joined
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| format_error(line, "expected `prior in [<lo>, <hi>]`"))?;
                let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                let [lo, hi] = parts.as_slice() else {
                    return Err(format_error(line, "expected `prior in [<lo>, <hi>]`"));
                };
                Ok(Some(BeliefKind::Interval {
                    lo: parse_probability(lo, line)?,
                    hi: parse_probability(hi, line)?,
                }))
            }
            Some(value) => {
                if tokens.len() > 2 {
                    return Err(format_error(line, "unexpected tokens after prior"));
                }
                Ok(Some(BeliefKind::Point(parse_probability(value, line)?)))
            }
            None => Err(format_error(line, "prior needs a value")),
        },
        Some(other) => Err(format_error(
            line,
            &format!("unexpected token `{other}` after formula"),
        )),
    }
}

/// Result of running one command: exit code plus captured stdout/stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const USAGE: &str = "usage: plogic <command> [options]\n\
commands:\n\
  worlds <problem.plp>                         print the two-valued tableau\n\
  compress <problem.plp> [--schema conj-mp]    print the compressed tableau\n\
  entail <problem.plp> [--no-compress] [--dump-lp]\n\
                                               print the target probability interval\n\
  revise <problem.plp> --evidence <file.plev>  revise a representative prior\n\
  stats <problem.plp>                          print world counts and system sizes\n";

/// Runs one command. Never panics on user input; all failures map to exit
/// codes 1 (infeasible/inconsistent input) or 2 (usage/parse errors).
pub fn run<S: AsRef<str>>(args: &[S]) -> CommandOutput {
    match dispatch(args) {
        Ok(stdout) => CommandOutput {
            code: 0,
            stdout: stdout.text,
            stderr: stdout.warnings,
        },
        Err(error) => CommandOutput {
            code: exit_code_for(&error),
            stdout: String::new(),
            stderr: format!("error: {error}\n"),
        },
    }
}

struct Rendered {
    text: String,
    warnings: String,
}

impl Rendered {
    fn clean(text: String) -> Rendered {
        Rendered {
            text,
            warnings: String::new(),
        }
    }
}

fn dispatch<S: AsRef<str>>(args: &[S]) -> Result<Rendered> {
    let args: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
    let Some((&command, rest)) = args.split_first() else {
        return Err(Error::Usage(USAGE.trim_end().to_string()));
    };
    match command {
        "worlds" => {
            let (path, flags) = split_flags(rest)?;
            reject_flags(&flags, &[])?;
            cmd_worlds(&path)
        }
        "compress" => {
            let (path, flags) = split_flags(rest)?;
            let schema = flag_value(&flags, "--schema")?;
            reject_flags(&flags, &["--schema"])?;
            let force_schema = match schema {
                None => false,
                Some("conj-mp") => true,
                Some(other) => {
                    return Err(Error::Usage(format!(
                        "unknown schema `{other}`; expected conj-mp"
                    )))
                }
            };
            cmd_compress(&path, force_schema)
        }
        "entail" => {
            let (path, flags) = split_flags(rest)?;
            let no_compress = flag_present(&flags, "--no-compress");
            let dump_lp = flag_present(&flags, "--dump-lp");
            reject_flags(&flags, &["--no-compress", "--dump-lp"])?;
            cmd_entail(&path, no_compress, dump_lp)
        }
        "revise" => {
            let (path, flags) = split_flags(rest)?;
            let evidence = flag_value(&flags, "--evidence")?
                .ok_or_else(|| Error::Usage("revise requires --evidence <file>".into()))?
                .to_string();
            reject_flags(&flags, &["--evidence"])?;
            cmd_revise(&path, &evidence)
        }
        "stats" => {
            let (path, flags) = split_flags(rest)?;
            reject_flags(&flags, &[])?;
            cmd_stats(&path)
        }
        other => Err(Error::Usage(format!(
            "unknown command `{other}`\n{}",
            USAGE.trim_end()
        ))),
    }
}

type Flag<'a> = (&'a str, Option<&'a str>);

fn split_flags<'a>(args: &[&'a str]) -> Result<(String, Vec<Flag<'a>>)> {
    let mut path = None;
    let mut flags = Vec::new();
    let mut iter = args.iter().peekable();
    while let Some(&arg) = iter.next() {
        if arg.starts_with("--") {
            let value = if matches!(arg, "--evidence" | "--schema") {
                Some(
                    *iter
                        .next()
                        .ok_or_else(|| Error::Usage(format!("flag {arg} requires a value")))?,
                )
            } else {
                None
            };
            flags.push((arg, value));
        } else if path.is_none() {
            path = Some(arg.to_string());
        } else {
            return Err(Error::Usage(format!("unexpected argument `{arg}`")));
        }
    }
    let path = path.ok_or_else(|| Error::Usage("missing problem file".into()))?;
    Ok((path, flags))
}

fn flag_present(flags: &[(&str, Option<&str>)], name: &str) -> bool {
    flags.iter().any(|(f, _)| *f == name)
}

fn flag_value<'a>(flags: &[(&'a str, Option<&'a str>)], name: &str) -> Result<Option<&'a str>> {
    Ok(flags.iter().find(|(f, _)| *f == name).and_then(|(_, v)| *v))
}

fn reject_flags(flags: &[(&str, Option<&str>)], known: &[&str]) -> Result<()> {
    for (flag, _) in flags {
        if !known.contains(flag) {
            return Err(Error::Usage(format!("unknown flag `{flag}`")));
        }
    }
    Ok(())
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Usage(_)
        | Error::Io { .. }
        | Error::FileFormat { .. }
        | Error::Syntax { .. }
        | Error::EmptyFormula
        | Error::UnknownSentence(_)
        | Error::WorldIndexOutOfRange { .. }
        | Error::AssessmentKeyNotDc { .. }
        | Error::WidthMismatch { .. } => 2,
        _ => 1,
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn load_problem(path: &str) -> Result<ProblemSpec> {
    parse_problem(&read_file(path)?)
}

/// The compressed tableau for one problem, how it was obtained, and the
/// enumerated two-valued tableau when the command needs it. The schema path
/// never enumerates unless asked: a recognized schema stays usable past the
/// atom cap, which is the point of compressing at all.
struct Pipeline {
    spec: ProblemSpec,
    enumerated: Option<Tableau>,
    compressed: Tableau,
    method: Method,
    beliefs: Vec<Belief>,
}

enum Method {
    Schema { antecedents: usize },
    Search(CompressStats),
}

impl Pipeline {
    /// Number of two-valued worlds the compressed tableau stands for. Known
    /// in closed form for the schema (every atom assignment yields a
    /// distinct truth vector there).
    fn two_valued_count(&self) -> Result<u128> {
        match (&self.method, &self.enumerated) {
            (_, Some(t)) => Ok(t.world_count() as u128),
            (Method::Schema { antecedents }, None) => {
                let atoms = antecedents + 1;
                if atoms >= 128 {
                    return Err(Error::Usage(format!(
                        "{atoms} atoms overflow the two-valued world count"
                    )));
                }
                Ok(1u128 << atoms)
            }
            (Method::Search(_), None) => unreachable!("search always enumerates"),
        }
    }
}

fn build_pipeline(
    spec: ProblemSpec,
    force_schema: bool,
    need_enumerated: bool,
) -> Result<Pipeline> {
    let sentences = spec.sentence_list();
    let use_schema = force_schema || spec.schema() == Some(Schema::ConjMp);
    let enumerated = if need_enumerated || !use_schema {
        Some(Tableau::enumerate_capped(
            sentences.clone(),
            spec.source_count(),
            spec.atoms_cap(),
        )?)
    } else {
        None
    };
    let (compressed, method) = if use_schema {
        let n = detect_conj_mp(&spec)?;
        let tableau = Tableau::new(sentences, conjunctive_mp_worlds(n), spec.source_count())?;
        (tableau, Method::Schema { antecedents: n })
    } else {
        let (tableau, stats) =
            compress_with_stats(enumerated.as_ref().expect("search path enumerates"))?;
        (tableau, Method::Search(stats))
    };
    let beliefs = spec.beliefs()?;
    Ok(Pipeline {
        spec,
        enumerated,
        compressed,
        method,
        beliefs,
    })
}

/// Checks that the problem has the shape `[A1..An, A1 & … & An -> B, B]`
/// with distinct atom antecedents and an atom consequent, and returns `n`.
fn detect_conj_mp(spec: &ProblemSpec) -> Result<usize> {
    let sources = &spec.sources;
    if sources.len() < 2 {
        return Err(Error::SchemaMismatch(
            "need at least one antecedent and an implication".into(),
        ));
    }
    let n = sources.len() - 1;
    let mut antecedents = Vec::with_capacity(n);
    for (sentence, _) in &sources[..n] {
        match sentence {
            Sentence::Atom(name) => antecedents.push(name.clone()),
            other => {
                return Err(Error::SchemaMismatch(format!(
                    "antecedent `{other}` is not an atom"
                )))
            }
        }
    }
    let Sentence::Implies(antecedent, consequent) = &sources[n].0 else {
        return Err(Error::SchemaMismatch(format!(
            "`{}` is not an implication",
            sources[n].0
        )));
    };
    let mut leaves = Vec::new();
    flatten_conjunction(antecedent, &mut leaves);
    let leaf_names: Option<Vec<String>> = leaves
        .iter()
        .map(|s| match s {
            Sentence::Atom(name) => Some(name.clone()),
            _ => None,
        })
        .collect();
    if leaf_names.as_deref() != Some(antecedents.as_slice()) {
        return Err(Error::SchemaMismatch(
            "implication antecedent must conjoin exactly the declared atoms in order".into(),
        ));
    }
    if **consequent != spec.target {
        return Err(Error::SchemaMismatch(
            "implication consequent must be the target".into(),
        ));
    }
    let Sentence::Atom(target_name) = &spec.target else {
        return Err(Error::SchemaMismatch("target is not an atom".into()));
    };
    if antecedents.iter().any(|a| a == target_name) {
        return Err(Error::SchemaMismatch(
            "target atom appears among the antecedents".into(),
        ));
    }
    Ok(n)
}

fn flatten_conjunction<'a>(sentence: &'a Sentence, out: &mut Vec<&'a Sentence>) {
    match sentence {
        Sentence::And(l, r) => {
            flatten_conjunction(l, out);
            flatten_conjunction(r, out);
        }
        other => out.push(other),
    }
}

fn fmt6(value: f64) -> String {
    let value = if value == 0.0 { 0.0 } else { value };
    format!("{value:.6}")
}

fn vector_line(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| fmt6(*v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_worlds(path: &str) -> Result<Rendered> {
    let spec = load_problem(path)?;
    let tableau =
        Tableau::enumerate_capped(spec.sentence_list(), spec.source_count(), spec.atoms_cap())?;
    let mut out = String::new();
    let _ = writeln!(out, "worlds {}", tableau.world_count());
    out.push_str(&tableau.render());
    Ok(Rendered::clean(out))
}

fn cmd_compress(path: &str, force_schema: bool) -> Result<Rendered> {
    let spec = load_problem(path)?;
    let pipe = build_pipeline(spec, force_schema, false)?;
    let mut out = String::new();
    let _ = writeln!(out, "worlds-before {}", pipe.two_valued_count()?);
    let _ = writeln!(out, "worlds-after {}", pipe.compressed.world_count());
    match pipe.method {
        Method::Schema { .. } => {
            let _ = writeln!(out, "method schema");
        }
        Method::Search(stats) => {
            let _ = writeln!(out, "method search");
            let _ = writeln!(out, "passes {}", stats.passes);
            let _ = writeln!(out, "merges {}", stats.merges);
        }
    }
    out.push_str(&pipe.compressed.render());
    Ok(Rendered::clean(out))
}

fn cmd_entail(path: &str, no_compress: bool, dump_lp: bool) -> Result<Rendered> {
    let spec = load_problem(path)?;
    let target_index = spec.target_index();
    let (tableau, beliefs);
    if no_compress {
        // Two-valued route: enumerate directly, no schema involved.
        tableau =
            Tableau::enumerate_capped(spec.sentence_list(), spec.source_count(), spec.atoms_cap())?;
        beliefs = spec.beliefs()?;
    } else {
        let pipe = build_pipeline(spec, false, false)?;
        tableau = pipe.compressed;
        beliefs = pipe.beliefs;
    }
    let mut out = String::new();
    if dump_lp {
        let system = build_system(&tableau, &beliefs)?;
        out.push_str(&system.render_rows());
    }
    let interval = entail_interval(&tableau, &beliefs, target_index)?;
    let _ = writeln!(out, "[{}, {}]", fmt6(interval.lo), fmt6(interval.hi));
    Ok(Rendered::clean(out))
}

fn cmd_stats(path: &str) -> Result<Rendered> {
    let spec = load_problem(path)?;
    let pipe = build_pipeline(spec, false, true)?;
    let enumerated = pipe.enumerated.as_ref().expect("stats enumerates");
    let uncompressed = build_system(enumerated, &pipe.beliefs)?;
    let compressed = build_system(&pipe.compressed, &pipe.beliefs)?;
    let ratio = if uncompressed.size() == 0 {
        1.0
    } else {
        compressed.size() as f64 / uncompressed.size() as f64
    };
    let mut out = String::new();
    let _ = writeln!(out, "worlds-uncompressed {}", enumerated.world_count());
    let _ = writeln!(out, "worlds-compressed {}", pipe.compressed.world_count());
    let _ = writeln!(out, "system-size-uncompressed {}", uncompressed.size());
    let _ = writeln!(out, "system-size-compressed {}", compressed.size());
    let _ = writeln!(out, "compression-ratio {}", fmt6(ratio));
    Ok(Rendered::clean(out))
}

fn cmd_revise(path: &str, evidence_path: &str) -> Result<Rendered> {
    let spec = load_problem(path)?;
    let evidence_spec = parse_evidence(&read_file(evidence_path)?)?;
    let pipe = build_pipeline(spec, false, false)?;
    let tableau = &pipe.compressed;
    let target_index = pipe.spec.target_index();
    let system = build_system(tableau, &pipe.beliefs)?;

    let prior = match &evidence_spec.prior_solution {
        Some(weights) => {
            if weights.len() != tableau.world_count() {
                return Err(Error::WidthMismatch {
                    expected: tableau.world_count(),
                    actual: weights.len(),
                });
            }
            select_prior(&system, PriorStrategy::User(weights))?
        }
        None => select_prior(&system, PriorStrategy::Midpoint)?,
    };

    let mut warnings = String::new();
    let assessments = resolve_assessments(&pipe, tableau, &prior, &evidence_spec, &mut warnings)?;

    let evidence_index = pipe
        .spec
        .find_sentence(&evidence_spec.evidence.sentence)
        .ok_or_else(|| Error::UnknownSentence(evidence_spec.evidence.sentence.to_string()))?;
    let empty = Assessment::empty(evidence_index);
    let evidence_assessment = assessments.get(&evidence_index).unwrap_or(&empty);
    let evidence = match evidence_spec.evidence.form {
        EvidenceForm::Likelihood {
            given_true,
            given_false,
        } => Evidence::likelihood(evidence_index, given_true, given_false)?,
        EvidenceForm::Posterior { probability } => {
            Evidence::posterior(evidence_index, probability)?
        }
    };
    let factor_label = match evidence.form() {
        EvidenceForm::Likelihood { .. } => "world-conditionals:",
        EvidenceForm::Posterior { .. } => "posterior-ratios:",
    };
    let result = apply_evidence(
        tableau,
        &prior,
        &evidence,
        evidence_assessment,
        target_index,
        assessments.get(&target_index),
    )?;

    let mut out = String::new();
    let _ = writeln!(out, "tableau {} worlds", tableau.world_count());
    out.push_str(&tableau.render());
    let _ = writeln!(out, "prior:");
    let _ = writeln!(out, "{}", vector_line(&prior));
    let _ = writeln!(out, "{factor_label}");
    let _ = writeln!(out, "{}", vector_line(&result.world_factors));
    let _ = writeln!(out, "posterior:");
    let _ = writeln!(out, "{}", vector_line(&result.posterior));
    let _ = writeln!(out, "posterior-target-interval:");
    let _ = writeln!(
        out,
        "[{}, {}]",
        fmt6(result.target_interval.lo),
        fmt6(result.target_interval.hi)
    );
    if let Some(point) = result.target_point {
        let _ = writeln!(out, "posterior-target-point:");
        let _ = writeln!(out, "{}", fmt6(point));
    }
    Ok(Rendered {
        text: out,
        warnings,
    })
}

/// Resolves assess declarations against the compressed tableau: `auto`
/// entries need a point prior on their sentence, explicit cells are checked
/// against the sentence's point prior when one exists (inconsistency warns
/// rather than fails).
fn resolve_assessments(
    pipe: &Pipeline,
    tableau: &Tableau,
    prior: &[f64],
    evidence_spec: &EvidenceSpec,
    warnings: &mut String,
) -> Result<BTreeMap<usize, Assessment>> {
    #[derive(Default)]
    struct Gathered {
        auto: bool,
        cells: BTreeMap<usize, f64>,
    }
    let mut gathered: BTreeMap<usize, Gathered> = BTreeMap::new();
    for decl in &evidence_spec.assessments {
        let index = pipe
            .spec
            .find_sentence(&decl.sentence)
            .ok_or_else(|| Error::UnknownSentence(decl.sentence.to_string()))?;
        let entry = gathered.entry(index).or_default();
        match &decl.kind {
            AssessKind::Auto => entry.auto = true,
            AssessKind::Cell {
                world_1based,
                value,
            } => {
                if *world_1based > tableau.world_count() {
                    return Err(Error::WorldIndexOutOfRange {
                        index: *world_1based,
                        count: tableau.world_count(),
                    });
                }
                entry.cells.insert(world_1based - 1, *value);
            }
        }
    }
    let mut assessments = BTreeMap::new();
    for (index, entry) in gathered {
        if entry.auto && !entry.cells.is_empty() {
            return Err(Error::FileFormat {
                line: 0,
                message: format!(
                    "sentence `{}` mixes auto and explicit assessments",
                    tableau.sentences()[index]
                ),
            });
        }
        let assessment = if entry.auto {
            let p = pipe
                .spec
                .point_belief(index)
                .ok_or_else(|| Error::FileFormat {
                    line: 0,
                    message: format!(
                        "auto assessment for `{}` requires a point prior",
                        tableau.sentences()[index]
                    ),
                })?;
            auto_assess(tableau, prior, index, p)?
        } else {
            let assessment = Assessment::new(tableau, index, entry.cells)?;
            if let Some(p) = pipe.spec.point_belief(index) {
                if !check_assessment(tableau, prior, index, p, &assessment)? {
                    let _ = writeln!(
                        warnings,
                        "warning: assessment for `{}` is inconsistent with its prior {}",
                        tableau.sentences()[index],
                        fmt6(p)
                    );
                }
            }
            assessment
        };
        assessments.insert(index, assessment);
    }
    Ok(assessments)
}
