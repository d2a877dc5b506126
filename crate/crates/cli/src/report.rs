use serde::Serialize;
use serde_json::{Map, Value};

use crate::document::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Failed = 1,
    Parse = 2,
    Precondition = 3,
    NotDecomposable = 4,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Diagnostics {
    pub residual: Option<f64>,
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_code: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub success: bool,
    pub outputs: Map<String, Value>,
    pub diagnostics: Diagnostics,
    #[serde(skip)]
    pub status: Option<ExitStatus>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_owned(),
            success: true,
            outputs: Map::new(),
            diagnostics: Diagnostics::default(),
            status: None,
        }
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("serializable output");
        self.outputs.insert(key.to_owned(), v);
        self
    }

    pub fn fail(mut self, code: &str, message: String, status: ExitStatus) -> Self {
        self.success = false;
        self.diagnostics.error_code = Some(code.to_owned());
        self.status = Some(status);
        self.put("error", message);
        self
    }

    pub fn library_error(self, err: iwasawa::Error) -> Self {
        let status = match &err {
            e if e.is_not_decomposable() => ExitStatus::NotDecomposable,
            iwasawa::Error::DimensionMismatch { .. } | iwasawa::Error::NonFinite => {
                ExitStatus::Parse
            }
            _ => ExitStatus::Precondition,
        };
        let code = if err.is_not_decomposable() {
            "not_decomposable"
        } else {
            err.code()
        };
        let mut r = self.fail(code, err.to_string(), status);
        match err {
            iwasawa::Error::NotDecomposable { column, kind } => {
                r.put("column", column);
                r.put("kind", kind.to_string());
            }
            iwasawa::Error::WrongInertia { index } | iwasawa::Error::SingularMinor(index) => {
                r.put("minor", index);
                r.put("kind", err.code());
            }
            _ => {}
        }
        r
    }

    pub fn parse_error(self, err: ParseError) -> Self {
        self.fail("parse_error", err.to_string(), ExitStatus::Parse)
    }

    pub fn exit_status(&self) -> ExitStatus {
        self.status.unwrap_or(if self.success {
            ExitStatus::Success
        } else {
            ExitStatus::Failed
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable rendering.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {}\n",
            self.command,
            if self.success { "ok" } else { "FAILED" }
        );
        if let Some(code) = &self.diagnostics.error_code {
            out.push_str(&format!("  error_code: {code}\n"));
        }
        for (k, v) in &self.outputs {
            let text = match v {
                Value::Object(o) if o.contains_key("matrix") => render_matrix(&o["matrix"]),
                Value::Array(rows) if k == "criteria" => render_criteria(rows),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            if text.contains('\n') {
                out.push_str(&format!("  {k}:\n{text}"));
            } else {
                out.push_str(&format!("  {k}: {text}\n"));
            }
        }
        if let Some(r) = self.diagnostics.residual {
            out.push_str(&format!("  residual: {r:.3e}\n"));
        }
        if let Some(m) = self.diagnostics.margin {
            out.push_str(&format!("  margin: {m:.6e}\n"));
        }
        out
    }
}

fn render_matrix(v: &Value) -> String {
    let mut out = String::new();
    for row in v.as_array().into_iter().flatten() {
        out.push_str("    ");
        for z in row.as_array().into_iter().flatten() {
            let re = z[0].as_f64().unwrap_or(f64::NAN);
            let im = z[1].as_f64().unwrap_or(f64::NAN);
            out.push_str(&format!("{re:>11.6}{im:+.6}i  "));
        }
        out.push('\n');
    }
    out
}

fn render_criteria(rows: &[Value]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "    [{}] C{:<2} {:<44} cases={:<6} failures={:<4} worst {}={}\n",
            if r["passed"] == true { "PASS" } else { "FAIL" },
            r["id"],
            r["name"].as_str().unwrap_or_default(),
            r["cases"],
            r["failures"],
            r["metric"].as_str().unwrap_or_default(),
            r["worst"]
                .as_f64()
                .map_or("-".into(), |w| format!("{w:.3e}")),
        ));
    }
    out
}
