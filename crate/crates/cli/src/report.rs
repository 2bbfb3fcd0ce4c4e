use serde_json::{json, Map, Value};
use solidmon::category::ClosedMonoidal;
use solidmon::document::SCHEMA_VERSION;
use solidmon::verdict::Verdict;
use solidmon::{Error, Result};

/// One verdict with its re-validated certificate.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub summary: String,
    pub certificate: Value,
    /// Whether this check counts towards the overall outcome.
    pub gating: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub category: String,
    pub checks: Vec<Check>,
    /// Computed values worth showing, in insertion order.
    pub facts: Vec<(String, String)>,
    pub universe: Option<String>,
    pub children: Vec<Outcome>,
}

/// A finished report, or the error that stopped it.
#[derive(Clone, Debug)]
pub enum Outcome {
    Done(Report),
    Failed { command: String, subject: String, error: Error },
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>, category: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            subject: subject.into(),
            category: category.into(),
            ..Default::default()
        }
    }

    /// Records a verdict after re-checking its certificate.
    pub fn verdict<C: ClosedMonoidal>(&mut self, cat: &C, name: &str, v: &Verdict<C::Mor>) -> Result<()> {
        self.push(cat, name, v, true)
    }

    /// Records a verdict that is reported but does not decide the outcome.
    pub fn info<C: ClosedMonoidal>(&mut self, cat: &C, name: &str, v: &Verdict<C::Mor>) -> Result<()> {
        self.push(cat, name, v, false)
    }

    fn push<C: ClosedMonoidal>(&mut self, cat: &C, name: &str, v: &Verdict<C::Mor>, gating: bool) -> Result<()> {
        if !v.recheck(cat)? {
            return Err(Error::Internal(format!("certificate for {name} does not re-validate")));
        }
        self.checks.push(Check {
            name: name.into(),
            holds: v.holds,
            summary: v.summary.clone(),
            certificate: v.to_json(cat)["certificate"].clone(),
            gating,
        });
        Ok(())
    }

    pub fn text_check(&mut self, name: &str, holds: bool, summary: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            holds,
            summary: summary.into(),
            certificate: json!({ "kind": "text" }),
            gating: true,
        });
    }

    pub fn fact(&mut self, key: &str, value: impl Into<String>) {
        self.facts.push((key.into(), value.into()));
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Resource { .. } => "resource",
        Error::Input(_) | Error::Shape(_) | Error::NotClosed(_) | Error::Unsupported(_) => "input",
        Error::Internal(_) => "internal",
        _ => "mathematical",
    }
}

pub fn error_exit_code(e: &Error) -> i32 {
    match error_kind(e) {
        "resource" => 3,
        "input" => 2,
        _ => 1,
    }
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Done(r) => {
                let child = r.children.iter().map(Outcome::exit_code).max().unwrap_or(0);
                let own = if r.checks.iter().filter(|c| c.gating).all(|c| c.holds) { 0 } else { 1 };
                own.max(child)
            }
            Outcome::Failed { error, .. } => error_exit_code(error),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        match self {
            Outcome::Done(r) => {
                m.insert("command".into(), json!(r.command));
                m.insert("subject".into(), json!(r.subject));
                m.insert("category".into(), json!(r.category));
                m.insert("passed".into(), json!(self.exit_code() == 0));
                m.insert(
                    "checks".into(),
                    Value::Array(
                        r.checks
                            .iter()
                            .map(|c| {
                                json!({
                                    "name": c.name,
                                    "holds": c.holds,
                                    "gating": c.gating,
                                    "summary": c.summary,
                                    "certificate": c.certificate,
                                })
                            })
                            .collect(),
                    ),
                );
                let facts: Vec<Value> = r.facts.iter().map(|(k, v)| json!({ "key": k, "value": v })).collect();
                m.insert("facts".into(), Value::Array(facts));
                if let Some(u) = &r.universe {
                    m.insert("universe".into(), json!(u));
                }
                if !r.children.is_empty() {
                    m.insert("children".into(), Value::Array(r.children.iter().map(Outcome::to_json).collect()));
                }
            }
            Outcome::Failed { command, subject, error } => {
                m.insert("command".into(), json!(command));
                m.insert("subject".into(), json!(subject));
                m.insert("passed".into(), json!(false));
                m.insert("error".into(), json!({ "kind": error_kind(error), "message": error.to_string() }));
            }
        }
        m.insert("exit_code".into(), json!(self.exit_code().to_string()));
        Value::Object(m)
    }

    pub fn render(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        match self {
            Outcome::Done(r) => {
                let status = if self.exit_code() == 0 { "PASS" } else { "FAIL" };
                out.push_str(&format!("{pad}{status} {} {} [{}]\n", r.command, r.subject, r.category));
                if let Some(u) = &r.universe {
                    out.push_str(&format!("{pad}  universe: {u}\n"));
                }
                for (k, v) in &r.facts {
                    out.push_str(&format!("{pad}  {k}: {v}\n"));
                }
                for c in &r.checks {
                    let mark = match (c.holds, c.gating) {
                        (true, _) => "yes",
                        (false, true) => "NO ",
                        (false, false) => "no ",
                    };
                    out.push_str(&format!("{pad}  [{mark}] {}: {}\n", c.name, c.summary));
                }
                for child in &r.children {
                    child.render(out, indent + 2);
                }
            }
            Outcome::Failed { command, subject, error } => {
                out.push_str(&format!("{pad}ERROR {command} {subject}: {error}\n"));
            }
        }
    }
}
