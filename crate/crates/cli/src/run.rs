use std::fs;
use std::path::Path;
use std::sync::Arc;

use matchmonoid::analysis::analyze;
use matchmonoid::builtin;
use matchmonoid::endo::{ClosureReport, EndoJson};
use matchmonoid::matchings::{
    enumerate_special_matchings, enumerate_special_partial_matchings, special_monoid,
    special_partial_monoid,
};
use matchmonoid::poset::PosetJson;
use matchmonoid::repro::reproduce;
use matchmonoid::{BigInt, Error, Poset};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command, Kind, PosetAction, PosetInput};

pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub struct Output {
    pub text: String,
    pub code: i32,
}

#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub elements: Vec<String>,
    pub code: i32,
}

impl Failure {
    fn input(kind: &str, message: impl Into<String>) -> Self {
        Self {
            kind: kind.to_string(),
            message: message.into(),
            elements: Vec::new(),
            code: EXIT_INPUT,
        }
    }

    fn core(e: Error, labels: Option<&[String]>) -> Self {
        let elements = e
            .elements()
            .into_iter()
            .map(|id| match labels.and_then(|l| l.get(id)) {
                Some(l) => l.clone(),
                None => id.to_string(),
            })
            .collect();
        let code = match e {
            Error::Invariant(_) => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        };
        Self {
            kind: e.kind().to_string(),
            message: e.to_string(),
            elements,
            code,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"error": self.kind, "message": self.message});
        if !self.elements.is_empty() {
            v["elements"] = json!(self.elements);
        }
        v
    }
}

struct Printer {
    pretty: bool,
    text: String,
}

impl Printer {
    fn emit(&mut self, value: &impl Serialize) {
        let s = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .expect("serializable output");
        self.text.push_str(&s);
        self.text.push('\n');
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))
}

/// Resolves the poset and returns the remaining positional arguments.
fn load(input: &PosetInput) -> Result<(Arc<Poset>, &[String]), Failure> {
    if let Some(path) = &input.input {
        let text = read(path)?;
        let pj: PosetJson = serde_json::from_str(&text)
            .map_err(|e| Failure::core(Error::Parse(e.to_string()), None))?;
        let p = pj
            .build()
            .map_err(|e| Failure::core(e, pj.labels.as_deref()))?;
        return Ok((Arc::new(p), &input.args));
    }
    let (spec, rest) = match &input.builtin {
        Some(s) => (s.as_str(), &input.args[..]),
        None => match input.args.split_first() {
            Some((s, rest)) => (s.as_str(), rest),
            None => {
                return Err(Failure::input(
                    "Usage",
                    "expected a builtin spec, --builtin or --input",
                ))
            }
        },
    };
    let p = builtin::resolve(spec).map_err(|e| Failure::core(e, None))?;
    Ok((p, rest))
}

fn element(p: &Poset, token: &str) -> Result<usize, Failure> {
    p.find(token)
        .ok_or_else(|| Failure::input("InvalidElement", format!("no element {token:?}")))
}

fn bigint_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => json!(i),
        Err(_) => json!(v.to_string()),
    }
}

fn poset_command(
    out: &mut Printer,
    action: PosetAction,
    input: &PosetInput,
    require_eulerian: bool,
) -> Result<i32, Failure> {
    let (p, rest) = load(input)?;
    match action {
        PosetAction::Check => {
            let height = p.rank(p.top()) as usize;
            let mut rank_sizes = vec![0usize; height + 1];
            for &r in p.ranks() {
                rank_sizes[r as usize] += 1;
            }
            out.emit(&json!({
                "n": p.len(),
                "rank": height,
                "bottom": p.label(p.bottom()),
                "top": p.label(p.top()),
                "covers": p.cover_pairs().len(),
                "rank_sizes": rank_sizes,
            }));
        }
        PosetAction::Mobius => {
            let [x, y] = rest else {
                return Err(Failure::input("Usage", "mobius needs two elements X Y"));
            };
            let (xi, yi) = (element(&p, x)?, element(&p, y)?);
            let mu = p.mobius(xi, yi).map_err(|e| Failure::core(e, p.labels()))?;
            out.emit(&json!({"x": p.label(xi), "y": p.label(yi), "mobius": bigint_value(&mu)}));
        }
        PosetAction::Eulerian => {
            out.emit(&json!({"eulerian": p.is_eulerian()}));
        }
        PosetAction::Dot => {
            out.text.push_str(&p.to_dot());
        }
    }
    Ok(if require_eulerian && !p.is_eulerian() {
        EXIT_NEGATIVE
    } else {
        0
    })
}

fn describe(p: &Poset, partners: &[usize]) -> Value {
    let pairs: Vec<[String; 2]> = (0..p.len())
        .filter(|&x| partners[x] > x)
        .map(|x| [p.label(x), p.label(partners[x])])
        .collect();
    let fixed: Vec<String> = (0..p.len())
        .filter(|&x| partners[x] == x)
        .map(|x| p.label(x))
        .collect();
    if fixed.is_empty() {
        json!({"pairs": pairs})
    } else {
        json!({"pairs": pairs, "fixed": fixed})
    }
}

fn matchings_command(
    out: &mut Printer,
    kind: Kind,
    input: &PosetInput,
    count_only: bool,
) -> Result<i32, Failure> {
    let (p, _) = load(input)?;
    let tables: Vec<Vec<usize>> = match kind {
        Kind::Special => enumerate_special_matchings(&p)
            .iter()
            .map(|m| m.partners())
            .collect(),
        Kind::Partial => enumerate_special_partial_matchings(&p)
            .map_err(|e| Failure::core(e, p.labels()))?
            .iter()
            .map(|m| m.partners())
            .collect(),
    };
    let kind = match kind {
        Kind::Special => "special",
        Kind::Partial => "partial",
    };
    let mut report = json!({"kind": kind, "poset_size": p.len(), "count": tables.len()});
    if !count_only {
        report["matchings"] = Value::Array(tables.iter().map(|t| describe(&p, t)).collect());
    }
    out.emit(&report);
    Ok(0)
}

fn closure_for(p: &Arc<Poset>, kind: Kind) -> Result<matchmonoid::MonoidClosure, Failure> {
    match kind {
        Kind::Special => special_monoid(p),
        Kind::Partial => special_partial_monoid(p),
    }
    .map_err(|e| Failure::core(e, p.labels()))
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let mut out = Printer {
        pretty: cli.pretty,
        text: String::new(),
    };
    let code = match &cli.command {
        Command::Poset {
            action,
            input,
            require_eulerian,
        } => poset_command(&mut out, *action, input, *require_eulerian)?,
        Command::Matchings {
            kind,
            input,
            count_only,
        } => matchings_command(&mut out, *kind, input, *count_only)?,
        Command::Closure { kind, input } => {
            let (p, _) = load(input)?;
            let m = closure_for(&p, *kind)?;
            let report = ClosureReport::new(&m).map_err(|e| Failure::core(e, p.labels()))?;
            out.emit(&report);
            0
        }
        Command::Analyze { input, closure } => {
            let text = read(input)?;
            let ej = EndoJson::parse(&text).map_err(|e| Failure::core(e, None))?;
            let e = ej.to_endo().map_err(|e| Failure::core(e, None))?;
            let m = closure.map(|k| closure_for(e.poset(), k)).transpose()?;
            let report =
                analyze(&e, m.as_ref()).map_err(|err| Failure::core(err, e.poset().labels()))?;
            out.emit(&report);
            0
        }
        Command::Reproduce { claim, n, timings } => {
            let reports = reproduce(claim, *n).map_err(|e| Failure::core(e, None))?;
            for r in &reports {
                let mut v = serde_json::to_value(r).expect("serializable report");
                if !timings {
                    v.as_object_mut()
                        .expect("report object")
                        .remove("runtime_ms");
                }
                out.emit(&v);
            }
            if reports.iter().all(|r| r.pass) {
                0
            } else {
                EXIT_MISMATCH
            }
        }
    };
    Ok(Output {
        text: out.text,
        code,
    })
}
