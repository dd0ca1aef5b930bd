//! The `posmon` command line: argument parsing, presentation loading,
//! report rendering and exit-code discipline. All computation is delegated
//! to `posmon-core`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use posmon_core::cancel::search_failures;
use posmon_core::claims::{run_claim, ClaimId};
use posmon_core::fixtures::Fixture;
use posmon_core::garside::{cross_check, verify_fundamental, verify_garside};
use posmon_core::gmn::{build_gmn, Prop43Case};
use posmon_core::group::{
    center_scan, empirical_injectivity, group_equal, positive_lift, Injectivity, SignedWord,
};
use posmon_core::{Error, Monoid, Presentation, Side, Word, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "posmon",
    version,
    about = "Compute with positively presented monoids"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest equivalence class or layer to enumerate before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

/// `<file>` arguments accept a path, `fixture:NAME`, a bare fixture name,
/// or `gmn:M,N`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a presentation and report its properties.
    Parse { file: String },
    /// Enumerate the equivalence class of a word.
    Class { file: String, word: String },
    /// Decide whether two words are equal in the monoid.
    Equal {
        file: String,
        w1: String,
        w2: String,
    },
    /// Decide whether `u` divides `v` on the given side.
    Divides {
        #[arg(long, value_enum)]
        side: SideArg,
        file: String,
        u: String,
        v: String,
    },
    /// Common right multiples of a set of words and their minimal elements.
    Mcm {
        file: String,
        #[arg(long)]
        max_len: usize,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Check whether a word is a fundamental element.
    Fundamental { file: String, word: String },
    /// Check whether a word is a Garside element.
    Garside { file: String, word: String },
    /// Search for cancellation failures up to a length.
    CancelSearch {
        file: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Run a named claim: M6-k, M6p, M6p-completed-k, prop53, prop54.
    Claim {
        /// A fixture name (M6, M6p, M6p_completed) or a claim name.
        target: String,
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Build the two-pencil presentation G(m, n), or run a subcommand on it.
    Gmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Print the presentation in file format.
        #[arg(long, conflicts_with = "run")]
        emit: bool,
        /// Run another subcommand with this presentation as its `<file>`.
        #[arg(long, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        run: Vec<String>,
    },
    /// Decide equality of signed words in the group (`~` marks an inverse).
    GroupEqual {
        file: String,
        sw1: String,
        sw2: String,
        /// Take the monoid to embed in its group without evidence.
        #[arg(long)]
        assume_injective: bool,
        /// Fundamental element to use; defaults to the product of all
        /// generators in declaration order.
        #[arg(long)]
        delta: Option<String>,
        /// Length up to which cancellativity is searched when injectivity is
        /// neither known nor assumed.
        #[arg(long, default_value_t = 5)]
        cancel_bound: usize,
    },
    /// Elements commuting with every generator, up to a length.
    CenterScan {
        file: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Bounded check of one case (i..vi) of the left-cancellation lemma for
    /// G(m, n).
    Prop43 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        case: String,
        #[arg(long)]
        max_len: usize,
    },
}

/// What a run produced: the exit code and the text for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failed command: exit code, message and optional partial payload.
struct Failure {
    code: i32,
    message: String,
    partial: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::InjectivityNotEstablished
            | Error::NotFundamental { .. }
            | Error::NonHomogeneous
            | Error::MixedFamily
            | Error::NonConsecutive => EXIT_PRECONDITION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
            partial: None,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
        partial: None,
    }
}

/// A successful command: payload, text rendering and bounds.
struct Done {
    result: Value,
    text: String,
    bounds: Map<String, Value>,
}

struct Loaded {
    presentation: Presentation,
    /// Set for presentations whose cancellativity is a theorem.
    injectivity: Option<Injectivity>,
}

fn load(spec: &str) -> Result<Loaded, Failure> {
    if let Some(rest) = spec.strip_prefix("gmn:") {
        let (m, n) = rest
            .split_once(',')
            .and_then(|(m, n)| Some((m.trim().parse().ok()?, n.trim().parse().ok()?)))
            .ok_or_else(|| usage(format!("expected gmn:M,N, got `{spec}`")))?;
        return Ok(Loaded {
            presentation: build_gmn(m, n)?.presentation,
            injectivity: Some(Injectivity::Proven),
        });
    }
    if let Some(name) = spec.strip_prefix("fixture:") {
        return Ok(Loaded {
            presentation: name.parse::<Fixture>()?.presentation(),
            injectivity: None,
        });
    }
    match std::fs::read_to_string(spec) {
        Ok(text) => Ok(Loaded {
            presentation: Presentation::parse(&text)?,
            injectivity: None,
        }),
        Err(e) => match spec.parse::<Fixture>() {
            Ok(f) => Ok(Loaded {
                presentation: f.presentation(),
                injectivity: None,
            }),
            Err(_) => Err(usage(format!("cannot read `{spec}`: {e}"))),
        },
    }
}

fn tokens(p: &Presentation, w: &Word) -> Value {
    json!(p.word_tokens(w))
}

fn digest(p: &Presentation) -> String {
    hex::encode(Sha256::digest(p.to_text().as_bytes()))
}

fn bounds(cap: usize, extra: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("cap".into(), json!(cap));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };

    if let Command::Gmn {
        m,
        n,
        emit: false,
        run,
    } = &cli.command
    {
        if !run.is_empty() {
            return run_on_gmn(&argv, &cli, *m, *n, run);
        }
    }

    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let mut digest_of = None;
    let outcome = execute(&cli, &mut digest_of);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let command = echo.join(" ");

    match outcome {
        Ok(done) => {
            let stdout = if cli.json {
                let report = json!({
                    "command": command,
                    "presentation_sha": digest_of,
                    "result": done.result,
                    "bounds": done.bounds,
                    "truncated": false,
                    "elapsed_ms": elapsed_ms,
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                )
            } else {
                done.text
            };
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => {
            let stdout = if cli.json {
                let report = json!({
                    "command": command,
                    "presentation_sha": digest_of,
                    "result": f.partial,
                    "error": f.message,
                    "exit_code": f.code,
                    "bounds": bounds(cli.cap, &[]),
                    "truncated": f.code == EXIT_CAP,
                    "elapsed_ms": elapsed_ms,
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                )
            } else {
                String::new()
            };
            let label = match f.code {
                EXIT_CAP => "undecided",
                EXIT_PRECONDITION => "precondition violated",
                _ => "error",
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: format!("posmon: {label}: {}\n", f.message),
            }
        }
    }
}

/// Re-dispatches `gmn --m M --n N --run SUB ARGS…` as `SUB gmn:M,N ARGS…`.
fn run_on_gmn(argv: &[OsString], cli: &Cli, m: usize, n: usize, sub: &[String]) -> Outcome {
    let mut inner: Vec<String> = vec![argv[0].to_string_lossy().into_owned()];
    if cli.json {
        inner.push("--json".into());
    }
    inner.push("--cap".into());
    inner.push(cli.cap.to_string());
    inner.push(sub[0].clone());
    inner.push(format!("gmn:{m},{n}"));
    inner.extend(sub[1..].iter().cloned());
    run(inner)
}

fn monoid(loaded: &Loaded, cap: usize, digest_of: &mut Option<String>) -> Result<Monoid, Failure> {
    *digest_of = Some(digest(&loaded.presentation));
    Ok(Monoid::with_cap(loaded.presentation.clone(), cap)?)
}

fn execute(cli: &Cli, digest_of: &mut Option<String>) -> Result<Done, Failure> {
    let cap = cli.cap;
    match &cli.command {
        Command::Parse { file } => {
            let loaded = load(file)?;
            let p = &loaded.presentation;
            *digest_of = Some(digest(p));
            let c = p.classification();
            let relations: Vec<Value> = p
                .relations()
                .iter()
                .map(|r| json!([tokens(p, &r.lhs), tokens(p, &r.rhs)]))
                .collect();
            let dummies: Vec<&str> = c.dummy_letters.iter().map(|&l| p.name(l)).collect();
            let text = format!(
                "{} generators, {} relations\nhomogeneous: {}\nletter-balanced: {}\ndummy generators: {}\n{}",
                p.alphabet_len(),
                p.relations().len(),
                c.homogeneous,
                c.letter_balanced,
                if dummies.is_empty() { "none".to_string() } else { dummies.join(" ") },
                p.to_text()
            );
            Ok(Done {
                result: json!({
                    "alphabet": p.alphabet(),
                    "relations": relations,
                    "homogeneous": c.homogeneous,
                    "letter_balanced": c.letter_balanced,
                    "dummy_letters": dummies,
                }),
                text,
                bounds: Map::new(),
            })
        }

        Command::Class { file, word } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let w = m.parse_word(word)?;
            let class = m.class(&w).map_err(|e| {
                let partial = match &e {
                    Error::CapExceeded {
                        partial: Some(c), ..
                    } => Some(json!({
                        "members_so_far": c.members.len(),
                    })),
                    _ => None,
                };
                let mut f = Failure::from(e);
                f.partial = partial;
                f
            })?;
            let members: Vec<Value> = class.iter().map(|v| tokens(p, v)).collect();
            let mut text = format!(
                "canonical: {}\nsize: {}\n",
                p.format_word(&class.canonical),
                class.len()
            );
            for v in class.iter() {
                text.push_str(&format!("  {}\n", p.format_word(v)));
            }
            Ok(Done {
                result: json!({
                    "canonical": tokens(p, &class.canonical),
                    "size": class.len(),
                    "members": members,
                }),
                text,
                bounds: bounds(cap, &[]),
            })
        }

        Command::Equal { file, w1, w2 } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let (a, b) = (m.parse_word(w1)?, m.parse_word(w2)?);
            let equal = m.equal(&a, &b)?;
            let (ca, cb) = (m.canonical(&a)?, m.canonical(&b)?);
            Ok(Done {
                result: json!({
                    "equal": equal,
                    "canonical": [tokens(p, &ca), tokens(p, &cb)],
                }),
                text: format!("{equal}\n"),
                bounds: bounds(cap, &[]),
            })
        }

        Command::Divides { side, file, u, v } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let side: Side = (*side).into();
            let r = m.divides(side, &m.parse_word(u)?, &m.parse_word(v)?)?;
            let quotients: Vec<Value> = r.quotients.iter().map(|q| tokens(p, q)).collect();
            let mut text = format!("{}\n", r.divides);
            for q in &r.quotients {
                text.push_str(&format!("quotient: {}\n", p.format_word(q)));
            }
            Ok(Done {
                result: json!({
                    "side": side_name(side),
                    "divides": r.divides,
                    "quotients": quotients,
                }),
                text,
                bounds: bounds(cap, &[]),
            })
        }

        Command::Mcm {
            file,
            max_len,
            words,
        } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let set = words
                .iter()
                .map(|w| m.parse_word(w))
                .collect::<posmon_core::Result<Vec<_>>>()?;
            let r = m.minimal_common_multiples(&set, *max_len)?;
            let list = |s: &std::collections::BTreeSet<Word>| -> Vec<Value> {
                s.iter().map(|w| tokens(p, w)).collect()
            };
            let mut text = format!(
                "common multiples up to length {}: {}\nminimal:\n",
                max_len,
                r.common_multiples.len()
            );
            for w in &r.minimal {
                text.push_str(&format!("  {}\n", p.format_word(w)));
            }
            text.push_str(&match &r.lcm_up_to_bound {
                Some(l) => format!("lcm: {}\n", p.format_word(l)),
                None => "lcm: none within bound\n".into(),
            });
            Ok(Done {
                result: json!({
                    "common_multiples": list(&r.common_multiples),
                    "minimal": list(&r.minimal),
                    "lcm": r.lcm_up_to_bound.as_ref().map(|l| tokens(p, l)),
                }),
                text,
                bounds: bounds(cap, &[("max_len", json!(max_len))]),
            })
        }

        Command::Fundamental { file, word } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let w = m.parse_word(word)?;
            match verify_fundamental(&m, &w) {
                Ok(cert) => {
                    let sigma: BTreeMap<&str, &str> = cert
                        .sigma
                        .iter()
                        .map(|(&a, &b)| (p.name(a), p.name(b)))
                        .collect();
                    let quotients: BTreeMap<&str, Value> = cert
                        .quotients
                        .iter()
                        .map(|(&a, q)| (p.name(a), tokens(p, q)))
                        .collect();
                    let mut text = format!("fundamental: true\norder: {}\n", cert.order);
                    for (a, b) in &sigma {
                        text.push_str(&format!(
                            "  σ({a}) = {b}, Δ_{a} = {}\n",
                            p.format_word(&cert.quotients[&p.letter(a).expect("atom")])
                        ));
                    }
                    Ok(Done {
                        result: json!({
                            "fundamental": true,
                            "sigma": sigma,
                            "order": cert.order,
                            "sigma_count": cert.sigma_count,
                            "quotients": quotients,
                        }),
                        text,
                        bounds: bounds(cap, &[]),
                    })
                }
                Err(Error::NotFundamental { atom, reason }) => Ok(Done {
                    result: json!({ "fundamental": false, "atom": atom, "reason": reason }),
                    text: format!("fundamental: false ({reason})\n"),
                    bounds: bounds(cap, &[]),
                }),
                Err(e) => Err(e.into()),
            }
        }

        Command::Garside { file, word } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let w = m.parse_word(word)?;
            let r = verify_garside(&m, &w)?;
            let cc = cross_check(&m, &w)?;
            let list = |s: &std::collections::BTreeSet<Word>| -> Vec<Value> {
                s.iter().map(|w| tokens(p, w)).collect()
            };
            Ok(Done {
                result: json!({
                    "garside": r.is_garside,
                    "divisors_coincide": r.coincide,
                    "divisors_generate": r.generate,
                    "left_divisors": list(&r.left_divisors),
                    "right_divisors": list(&r.right_divisors),
                    "fundamental": cc.fundamental,
                    "consistent": cc.consistent,
                }),
                text: format!(
                    "garside: {}\ndivisors coincide: {}\ndivisors generate: {}\nleft divisors: {}\nfundamental: {}\n",
                    r.is_garside,
                    r.coincide,
                    r.generate,
                    r.left_divisors.len(),
                    cc.fundamental
                ),
                bounds: bounds(cap, &[]),
            })
        }

        Command::CancelSearch { file, max_len } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let failures = search_failures(&m, *max_len)?;
            let list: Vec<Value> = failures
                .iter()
                .map(|f| {
                    json!({
                        "side": side_name(f.side),
                        "context": tokens(p, &f.context),
                        "x": tokens(p, &f.x),
                        "y": tokens(p, &f.y),
                    })
                })
                .collect();
            let mut text = format!(
                "{} cancellation failures up to length {}\n",
                failures.len(),
                max_len
            );
            for f in &failures {
                text.push_str(&format!(
                    "  {} {} {} {}\n",
                    side_name(f.side),
                    p.format_word(&f.context),
                    p.format_word(&f.x),
                    p.format_word(&f.y)
                ));
            }
            Ok(Done {
                result: json!({ "failures": list }),
                text,
                bounds: bounds(cap, &[("max_len", json!(max_len))]),
            })
        }

        Command::Claim { target, id, k } => {
            let claim = match id {
                Some(id) => id.parse::<ClaimId>()?,
                None => ClaimId::for_target(target)?,
            };
            let report = run_claim(claim, *k, cap)?;
            let lines: Vec<Value> = report
                .lines
                .iter()
                .map(|l| json!({ "statement": l.statement, "expected": l.expected, "observed": l.observed, "passed": l.passed() }))
                .collect();
            let mut text = String::new();
            for l in &report.lines {
                text.push_str(&format!(
                    "{} {} (expected {}, observed {})\n",
                    if l.passed() { "ok  " } else { "FAIL" },
                    l.statement,
                    l.expected,
                    l.observed
                ));
            }
            text.push_str(&format!(
                "claim {} k={}: {}\n",
                claim.name(),
                k,
                if report.passed() { "passed" } else { "failed" }
            ));
            Ok(Done {
                result: json!({ "claim": claim.name(), "k": k, "passed": report.passed(), "lines": lines }),
                text,
                bounds: bounds(cap, &[]),
            })
        }

        Command::Gmn { m, n, emit, .. } => {
            let g = build_gmn(*m, *n)?;
            let p = &g.presentation;
            *digest_of = Some(digest(p));
            let text = if *emit {
                p.to_text()
            } else {
                format!(
                    "G({m}, {n}): {} generators, {} relations\nΔ = {}\n",
                    p.alphabet_len(),
                    p.relations().len(),
                    p.format_word(&g.delta)
                )
            };
            Ok(Done {
                result: json!({
                    "presentation": p.to_text(),
                    "alphabet": p.alphabet(),
                    "relation_count": p.relations().len(),
                    "delta": tokens(p, &g.delta),
                    "delta1": tokens(p, &g.delta1),
                    "delta2": tokens(p, &g.delta2),
                }),
                text,
                bounds: Map::new(),
            })
        }

        Command::GroupEqual {
            file,
            sw1,
            sw2,
            assume_injective,
            delta,
            cancel_bound,
        } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let a = SignedWord::parse(p, sw1)?;
            let b = SignedWord::parse(p, sw2)?;
            let delta = match delta {
                Some(d) => m.parse_word(d)?,
                None => p.letters().collect(),
            };
            let cert = verify_fundamental(&m, &delta)?;
            let injectivity = match loaded.injectivity {
                Some(i) => i,
                None if *assume_injective => Injectivity::Assumed,
                None => empirical_injectivity(&m, *cancel_bound)?,
            };
            let equal = group_equal(&m, &cert, injectivity, &a, &b)?;
            let basis = match injectivity {
                Injectivity::Proven => "proven".to_string(),
                Injectivity::Empirical { bound } => format!("empirical up to length {bound}"),
                Injectivity::Assumed => "assumed".to_string(),
                Injectivity::Unknown => "unknown".to_string(),
            };
            let exponent = positive_lift(&m, &cert, &a)?
                .k
                .max(positive_lift(&m, &cert, &b)?.k);
            Ok(Done {
                result: json!({
                    "equal": equal,
                    "injectivity": basis,
                    "delta": tokens(p, &delta),
                    "sigma_order": cert.order,
                    "exponent": exponent,
                }),
                text: format!("{equal}\ninjectivity: {basis}\n"),
                bounds: bounds(cap, &[("cancel_bound", json!(cancel_bound))]),
            })
        }

        Command::CenterScan { file, max_len } => {
            let loaded = load(file)?;
            let m = monoid(&loaded, cap, digest_of)?;
            let p = m.presentation();
            let center = center_scan(&m, *max_len)?;
            let mut text = format!(
                "{} central elements up to length {}\n",
                center.len(),
                max_len
            );
            for c in &center {
                text.push_str(&format!("  {}\n", p.format_word(c)));
            }
            Ok(Done {
                result: json!({ "center": center.iter().map(|c| tokens(p, c)).collect::<Vec<_>>() }),
                text,
                bounds: bounds(cap, &[("max_len", json!(max_len))]),
            })
        }

        Command::Prop43 {
            m,
            n,
            case,
            max_len,
        } => {
            let g = build_gmn(*m, *n)?;
            let p = &g.presentation;
            *digest_of = Some(digest(p));
            let monoid = g.monoid_with_cap(cap)?;
            let case: Prop43Case = case.parse()?;
            let r = g.check_prop43(&monoid, case, *max_len)?;
            let violations: Vec<Value> = r
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "left_head": tokens(p, &v.left_head),
                        "x": tokens(p, &v.x),
                        "right_head": tokens(p, &v.right_head),
                        "y": tokens(p, &v.y),
                    })
                })
                .collect();
            Ok(Done {
                result: json!({ "case": case.to_string(), "instances": r.instances, "violations": violations }),
                text: format!(
                    "case ({case}): {} instances, {} violations up to length {}\n",
                    r.instances,
                    r.violations.len(),
                    max_len
                ),
                bounds: bounds(cap, &[("max_len", json!(max_len))]),
            })
        }
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}
