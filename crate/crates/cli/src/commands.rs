use iwasawa::validation::{self, SuiteConfig};
use iwasawa::{
    check_admissible_an, check_admissible_q, classify, decompose_gauss, decompose_gs, dress,
    is_member, sym, AdmissibilityReport, CMatrix, DecompPair, Error, GroupTag, Signature,
};
use serde_json::json;

use crate::document::{MatrixDocument, ParseError};
use crate::report::{ExitStatus, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Gs,
    Gauss,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckSet {
    G0,
    An,
    A,
    N,
    Q,
    #[value(name = "q_adm")]
    QAdm,
    #[value(name = "an_adm")]
    AnAdm,
}

impl CheckSet {
    fn name(self) -> &'static str {
        match self {
            CheckSet::G0 => "g0",
            CheckSet::An => "an",
            CheckSet::A => "a",
            CheckSet::N => "n",
            CheckSet::Q => "q",
            CheckSet::QAdm => "q_adm",
            CheckSet::AnAdm => "an_adm",
        }
    }
}

fn load(doc: &MatrixDocument) -> Result<(Signature, CMatrix), ParseError> {
    doc.validate(false)?;
    Ok((doc.signature()?, doc.to_matrix()))
}

fn matrix_doc(m: &CMatrix, sig: Signature, label: &str) -> MatrixDocument {
    MatrixDocument::from_matrix(m, sig, Some(label))
}

fn put_pair(report: &mut Report, pair: &DecompPair, sig: Signature, suffix: &str) {
    report.put(&format!("s{suffix}"), matrix_doc(&pair.s, sig, "s"));
    report.put(&format!("b{suffix}"), matrix_doc(&pair.b, sig, "b"));
    report.put(&format!("a{suffix}"), &pair.a);
    report.put(&format!("n{suffix}"), matrix_doc(&pair.n_factor, sig, "n"));
    report.put(&format!("residual{suffix}"), pair.residual);
}

pub fn cmd_decompose(doc: &MatrixDocument, method: Method, tol: f64) -> Report {
    let report = Report::new("decompose");
    let (sig, g) = match load(doc) {
        Ok(x) => x,
        Err(e) => return report.parse_error(e),
    };
    let run = |gauss: bool| {
        if gauss {
            decompose_gauss(&g, sig, tol)
        } else {
            decompose_gs(&g, sig, tol)
        }
    };
    let mut report = report;
    match method {
        Method::Gauss | Method::Gs => match run(method == Method::Gauss) {
            Ok(pair) => {
                put_pair(&mut report, &pair, sig, "");
                report.diagnostics.residual = Some(pair.residual);
            }
            Err(e) => return report.library_error(e),
        },
        Method::Both => {
            let (gauss, gs) = match (run(true), run(false)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return report.library_error(e),
            };
            put_pair(&mut report, &gauss, sig, "");
            report.put("residual_gs", gs.residual);
            report.put("agreement", gauss.distance_to(&gs));
            report.diagnostics.residual = Some(gauss.residual.max(gs.residual));
        }
    }
    report
}

fn put_admissibility(report: &mut Report, rep: &AdmissibilityReport) {
    let eigenvalues: Vec<[f64; 2]> = rep.eigenvalues.iter().map(|z| [z.re, z.im]).collect();
    report.put("verdict", rep.admissible);
    report.put("admissible", rep.admissible);
    report.put("eigenvalues", eigenvalues);
    report.put("timelike_values", &rep.timelike_values);
    report.put("spacelike_values", &rep.spacelike_values);
    report.put("reason", &rep.reason);
    if rep.margin.is_finite() {
        report.put("margin", rep.margin);
        report.diagnostics.margin = Some(rep.margin);
    }
}

pub fn cmd_check(doc: &MatrixDocument, set: CheckSet, tol: f64) -> Report {
    let mut report = Report::new("check");
    let (sig, m) = match load(doc) {
        Ok(x) => x,
        Err(e) => return report.parse_error(e),
    };
    report.put("set", set.name());
    let tag = match set {
        CheckSet::G0 => GroupTag::G0,
        CheckSet::An => GroupTag::AN,
        CheckSet::A => GroupTag::A,
        CheckSet::N => GroupTag::N,
        CheckSet::Q => GroupTag::Q,
        CheckSet::QAdm | CheckSet::AnAdm => {
            let checked = if set == CheckSet::QAdm {
                check_admissible_q(&m, sig, tol)
            } else {
                check_admissible_an(&m, sig, tol)
            };
            match checked {
                Ok(rep) => put_admissibility(&mut report, &rep),
                Err(Error::NotMember(group)) => {
                    report.put("verdict", false);
                    report.put("admissible", false);
                    report.put("reason", format!("not in {group}"));
                }
                Err(e) => return report.library_error(e),
            }
            return report;
        }
    };
    match is_member(&m, tag, sig, tol) {
        Ok(v) => {
            report.put("verdict", v);
        }
        Err(e) => return report.library_error(e),
    }
    report
}

pub fn cmd_dress(b_doc: &MatrixDocument, g_doc: &MatrixDocument, tol: f64) -> Report {
    let report = Report::new("dress");
    let (sig, b) = match load(b_doc) {
        Ok(x) => x,
        Err(e) => return report.parse_error(e),
    };
    let (sig_g, g) = match load(g_doc) {
        Ok(x) => x,
        Err(e) => return report.parse_error(e),
    };
    if sig != sig_g {
        return report.fail(
            "invalid_input",
            format!("signatures differ: b has {sig}, g has {sig_g}"),
            ExitStatus::Precondition,
        );
    }
    match dress(&b, &g, sig, tol) {
        Ok(res) => {
            let mut report = report;
            report.put("g_prime", matrix_doc(&res.g_prime, sig, "g_prime"));
            report.put("b_prime", matrix_doc(&res.b_prime, sig, "b_prime"));
            report.put("residual", res.residual);
            report.diagnostics.residual = Some(res.residual);
            report
        }
        Err(Error::NotMember(group)) => {
            let which = if group == "AN" { "b" } else { "g" };
            let mut r = report.fail(
                "invalid_input",
                format!("{which} is not in {group}"),
                ExitStatus::Precondition,
            );
            r.put("which", which);
            r
        }
        Err(e) => report.library_error(e),
    }
}

pub fn cmd_sym(doc: &MatrixDocument, tol: f64) -> Report {
    let mut report = Report::new("sym");
    let (sig, b) = match load(doc) {
        Ok(x) => x,
        Err(e) => return report.parse_error(e),
    };
    match is_member(&b, GroupTag::AN, sig, tol) {
        Ok(true) => {}
        Ok(false) => return report.library_error(Error::NotMember("AN")),
        Err(e) => return report.library_error(e),
    }
    match sym(&b, sig) {
        Ok(s) => {
            report.put("s", matrix_doc(&s, sig, "sym"));
            report
        }
        Err(e) => report.library_error(e),
    }
}

/// Classifies each column of the document's matrix.
pub fn cmd_classify(doc: &MatrixDocument, tol: f64) -> Report {
    let mut report = Report::new("classify");
    if let Err(e) = doc.validate(true) {
        return report.parse_error(e);
    }
    let sig = match doc.signature() {
        Ok(s) => s,
        Err(e) => return report.parse_error(e),
    };
    let m = doc.to_matrix();
    let mut classes = Vec::with_capacity(m.cols());
    let mut norms = Vec::with_capacity(m.cols());
    for k in 0..m.cols() {
        let x = m.column(k);
        match classify(&x, sig, tol) {
            Ok(c) => classes.push(c.name()),
            Err(e) => return report.library_error(e),
        }
        norms.push(iwasawa::norm_sq(&x, sig).expect("validated dimension"));
    }
    report.put("classes", classes);
    report.put("norm_sq", norms);
    report
}

pub fn cmd_selftest(cfg: &SuiteConfig) -> Report {
    let mut report = Report::new("selftest");
    let start = std::time::Instant::now();
    let outcomes = validation::run_all(cfg);
    let rows: Vec<_> = outcomes
        .iter()
        .map(|o| {
            json!({
                "id": o.id,
                "name": o.name,
                "passed": o.passed,
                "cases": o.cases,
                "failures": o.failures,
                "metric": o.metric,
                "worst": if o.worst.is_finite() { json!(o.worst) } else { json!(null) },
                "limit": o.limit,
                "detail": o.detail,
            })
        })
        .collect();
    report.put("criteria", rows);
    report.put("seed", cfg.seed);
    report.put("trials", cfg.trials);
    report.put("n_max", cfg.n_max);
    report.put("seconds", start.elapsed().as_secs_f64());
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    if !failed.is_empty() {
        report.success = false;
        report.diagnostics.error_code = Some("criteria_failed".to_owned());
        report.put("failed", failed);
    }
    report
}
