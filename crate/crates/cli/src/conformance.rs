//! Golden-corpus runner.
//!
//! A corpus directory holds one subdirectory per case with `meta.json`
//! (`{"Endpoint": "...", "Compare": "exact|fields", "ExpectStatus": n}`),
//! `request.json` and `expected.json`. Cases run in name order; the request
//! body is sent verbatim and the response compared against the expectation.
//!
//! `exact` comparison canonicalizes both bodies by decoding and re-encoding
//! them through the wire model, so formatting differences cannot cause
//! flaky failures. `fields` comparison checks that every member present in
//! the expected JSON exists with the same value in the actual response.
//!
//! Evolution mode relaxes body comparison entirely: a case passes when the
//! status matches and the body still decodes as the operation's message
//! type. Replaying a v1 corpus this way against a provider loaded with an
//! extended schema demonstrates that schema changes do not change the
//! message formats.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use rsp_wire::{
    decode, encode, ErrorEnvelope, ReadTableHeadersResponse, ReadTableResponse, SubmitResponse,
};

#[derive(Debug, Deserialize)]
#[serde(rename_all = "PascalCase")]
struct Meta {
    endpoint: String,
    compare: String,
    expect_status: u16,
}

#[derive(Debug)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct Report {
    pub cases: Vec<CaseResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            if case.passed {
                writeln!(out, "PASS {}", case.name).unwrap();
            } else {
                writeln!(out, "FAIL {}: {}", case.name, case.detail).unwrap();
            }
        }
        let failed = self.cases.iter().filter(|c| !c.passed).count();
        writeln!(
            out,
            "{} cases, {} passed, {} failed",
            self.cases.len(),
            self.cases.len() - failed,
            failed
        )
        .unwrap();
        out
    }
}

/// Runs every case in `corpus` against the provider at `base_url`.
/// A broken case (missing file, bad metadata) fails that case only.
pub fn run_conformance(
    base_url: &str,
    corpus: &Path,
    evolution: bool,
) -> Result<Report, String> {
    let mut names: Vec<String> = std::fs::read_dir(corpus)
        .map_err(|e| format!("cannot read corpus {}: {e}", corpus.display()))?
        .filter_map(|entry| entry.ok())
        .filter(|entry| entry.path().is_dir())
        .map(|entry| entry.file_name().to_string_lossy().into_owned())
        .filter(|name| name != "fixtures")
        .collect();
    names.sort();
    if names.is_empty() {
        return Err(format!("no cases in {}", corpus.display()));
    }

    let client = reqwest::blocking::Client::builder()
        .danger_accept_invalid_certs(true)
        .build()
        .map_err(|e| e.to_string())?;
    let cases = names
        .into_iter()
        .map(|name| {
            let outcome = run_case(&client, base_url, &corpus.join(&name), evolution);
            CaseResult {
                name,
                passed: outcome.is_ok(),
                detail: outcome.err().unwrap_or_default(),
            }
        })
        .collect();
    Ok(Report { cases })
}

fn read_file(dir: &Path, file: &str) -> Result<String, String> {
    std::fs::read_to_string(dir.join(file))
        .map_err(|e| format!("cannot read {}: {e}", dir.join(file).display()))
}

fn run_case(
    client: &reqwest::blocking::Client,
    base_url: &str,
    dir: &Path,
    evolution: bool,
) -> Result<(), String> {
    let meta: Meta = serde_json::from_str(&read_file(dir, "meta.json")?)
        .map_err(|e| format!("bad meta.json: {e}"))?;
    let request = read_file(dir, "request.json")?;

    let url = format!("{}/rsp/{}", base_url.trim_end_matches('/'), meta.endpoint);
    let response = client
        .post(url)
        .header("content-type", "application/json; charset=utf-8")
        .body(request)
        .send()
        .map_err(|e| format!("request failed: {e}"))?;
    let status = response.status().as_u16();
    let actual = response.text().map_err(|e| format!("read failed: {e}"))?;

    if status != meta.expect_status {
        return Err(format!(
            "expected status {}, got {status} ({actual})",
            meta.expect_status
        ));
    }
    // The response must decode as the operation's message even when the
    // body is not compared further.
    let actual_canonical = canonical_body(&meta.endpoint, status, &actual)?;
    if evolution {
        return Ok(());
    }

    let expected = read_file(dir, "expected.json")?;
    match meta.compare.as_str() {
        "exact" => {
            let expected_canonical = canonical_body(&meta.endpoint, status, &expected)
                .map_err(|e| format!("expected.json: {e}"))?;
            if actual_canonical != expected_canonical {
                return Err(format!(
                    "body mismatch\n  expected: {expected_canonical}\n  actual:   {actual_canonical}"
                ));
            }
            Ok(())
        }
        "fields" => {
            let expected: serde_json::Value = serde_json::from_str(&expected)
                .map_err(|e| format!("expected.json is not JSON: {e}"))?;
            let actual: serde_json::Value = serde_json::from_str(&actual)
                .map_err(|e| format!("response is not JSON: {e}"))?;
            subset_match("$", &expected, &actual)
        }
        other => Err(format!("unknown compare mode {other:?}")),
    }
}

/// Decodes `text` as the message the exchange must carry — the endpoint's
/// response type on success, an ErrorEnvelope on failure — and re-encodes
/// it canonically.
fn canonical_body(endpoint: &str, status: u16, text: &str) -> Result<String, String> {
    let recoded = if status >= 400 {
        decode::<ErrorEnvelope>(text).and_then(|m| encode(&m))
    } else {
        match endpoint {
            "ReadTableHeaders" => {
                decode::<ReadTableHeadersResponse>(text).and_then(|m| encode(&m))
            }
            "ReadTable" => decode::<ReadTableResponse>(text).and_then(|m| encode(&m)),
            "Submit" => decode::<SubmitResponse>(text).and_then(|m| encode(&m)),
            other => return Err(format!("unknown endpoint {other:?}")),
        }
    };
    recoded.map_err(|e| format!("body does not decode: {e}"))
}

/// Every member of `expected` must be present in `actual` with the same
/// value; arrays must match in length and element-wise.
fn subset_match(
    path: &str,
    expected: &serde_json::Value,
    actual: &serde_json::Value,
) -> Result<(), String> {
    use serde_json::Value;
    match (expected, actual) {
        (Value::Object(em), Value::Object(am)) => {
            for (key, evalue) in em {
                match am.get(key) {
                    Some(avalue) => subset_match(&format!("{path}.{key}"), evalue, avalue)?,
                    None => return Err(format!("missing member {path}.{key}")),
                }
            }
            Ok(())
        }
        (Value::Array(ea), Value::Array(aa)) => {
            if ea.len() != aa.len() {
                return Err(format!(
                    "{path}: array length {} expected, got {}",
                    ea.len(),
                    aa.len()
                ));
            }
            for (i, (evalue, avalue)) in ea.iter().zip(aa).enumerate() {
                subset_match(&format!("{path}[{i}]"), evalue, avalue)?;
            }
            Ok(())
        }
        _ => {
            if expected == actual {
                Ok(())
            } else {
                Err(format!("{path}: expected {expected}, got {actual}"))
            }
        }
    }
}
