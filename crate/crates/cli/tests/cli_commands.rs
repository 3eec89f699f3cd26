#[path = "../../engine/tests/support/sample.rs"]
mod sample;

use std::io::{BufRead, BufReader};
use std::process::{Child, Command, Stdio};

use rsp_cli::render::{render_headers, render_table_message, NULL_MARK};
use rsp_cli::args::Format;
use rsp_wire::{decode, TableMessage};

fn rsp_binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rsp"))
}

/// A provider child process, killed when the test ends.
struct Provider {
    child: Child,
    url: String,
}

impl Provider {
    fn start(fixture_json: &str, dir: &std::path::Path) -> Provider {
        let fixture = dir.join("fixture.json");
        std::fs::write(&fixture, fixture_json).unwrap();
        let mut child = rsp_binary()
            .args(["serve", "--fixture"])
            .arg(&fixture)
            .args(["--listen", "127.0.0.1:0"])
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .unwrap();
        let stdout = child.stdout.take().unwrap();
        let mut line = String::new();
        BufReader::new(stdout).read_line(&mut line).unwrap();
        let addr = line
            .trim()
            .strip_prefix("listening on ")
            .unwrap_or_else(|| panic!("unexpected serve output: {line:?}"))
            .to_string();
        Provider {
            child,
            url: format!("http://{addr}"),
        }
    }

    fn run(&self, args: &[&str]) -> (i32, String, String) {
        let output = rsp_binary()
            .args(args)
            .args(["--url", &self.url])
            .output()
            .unwrap();
        (
            output.status.code().unwrap_or(-1),
            String::from_utf8(output.stdout).unwrap(),
            String::from_utf8(output.stderr).unwrap(),
        )
    }

    fn run_as(&self, user: &str, password: &str, args: &[&str]) -> (i32, String, String) {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--user", user, "--password", password]);
        self.run(&full)
    }
}

impl Drop for Provider {
    fn drop(&mut self) {
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

#[test]
fn usage_errors_exit_1() {
    let output = rsp_binary().arg("--help").output().unwrap();
    assert_eq!(output.status.code(), Some(0));

    let output = rsp_binary().args(["read", "--bogus-flag"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));

    let output = rsp_binary().arg("serve").output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn serve_read_headers_submit_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let provider = Provider::start(&sample::sample_fixture_json(), dir.path());

    // Headers.
    let (code, stdout, _) = provider.run_as(sample::ADMIN.0, sample::ADMIN.1, &["headers"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Department") && stdout.contains("Employee"));

    // A take=0 unfiltered read reproduces the fixture rows exactly (csv).
    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["read", "--table", "Department", "--format", "csv"],
    );
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "Id,Name,Budget\n1,Sales,100.50\n2,IT,\n3,HR,7.25\n"
    );

    // JSON output is the wire encoding and re-decodes.
    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["read", "--table", "Employee", "--format", "json"],
    );
    assert_eq!(code, 0);
    let message: TableMessage = decode(stdout.trim()).unwrap();
    assert_eq!(message.items.len(), 5);

    // Table output marks nulls and honors filter/order/skip/take.
    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &[
            "read", "--table", "Employee", "--filter", "Age >= 22",
            "--order", "Age DESC", "--skip", "1", "--take", "2",
        ],
    );
    assert_eq!(code, 0);
    let data_lines: Vec<&str> = stdout.lines().skip(2).collect();
    assert_eq!(data_lines.len(), 2);
    assert!(data_lines[0].contains("Ada"));
    assert!(data_lines[1].contains("Ben"));
    assert!(data_lines[1].contains(NULL_MARK), "null DeptId renders as the null mark");

    // Submit: insert (reports the identity), update with a null, delete.
    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["submit", "--table", "Employee", "--op", "insert",
          "Name=Zoe", "Active=true", "Age=28"],
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "inserted row 6");

    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["submit", "--table", "Employee", "--op", "update", "Id=6", "Age:=null"],
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "ok");

    let (code, stdout, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["read", "--table", "Employee", "--filter", "Id = 6", "--format", "csv"],
    );
    assert_eq!(code, 0);
    assert!(stdout.lines().nth(1).unwrap().starts_with("6,Zoe,,"));

    let (code, _, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["submit", "--table", "Employee", "--op", "delete", "Id=6"],
    );
    assert_eq!(code, 0);
}

#[test]
fn remote_failures_exit_2_and_bad_pairs_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let provider = Provider::start(&sample::sample_fixture_json(), dir.path());

    let (code, _, stderr) = provider.run_as("admin", "wrong", &["headers"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("AuthFailed"), "{stderr}");

    let (code, _, stderr) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["read", "--table", "Nope"],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("UnknownTable"), "{stderr}");

    // Duplicate assignment is a usage error, detected before any request.
    let (code, _, _) = provider.run_as(
        sample::ADMIN.0,
        sample::ADMIN.1,
        &["submit", "--table", "Employee", "--op", "insert", "Id=3", "Id=4"],
    );
    assert_eq!(code, 1);
}

#[test]
fn password_env_variable_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let provider = Provider::start(&sample::sample_fixture_json(), dir.path());
    let output = rsp_binary()
        .args(["headers", "--url", &provider.url, "--user", sample::ADMIN.0])
        .env("RSP_PASSWORD", sample::ADMIN.1)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn tampered_corpus_case_fails_in_isolation() {
    let source = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    copy_dir(&source, &corpus);
    // Corrupt one expectation.
    let target = corpus.join("04-read-full/expected.json");
    let tampered = std::fs::read_to_string(&target)
        .unwrap()
        .replace("Ada", "Eve");
    std::fs::write(&target, tampered).unwrap();

    let fixture = std::fs::read_to_string(corpus.join("fixtures/v1.json")).unwrap();
    let provider = Provider::start(&fixture, dir.path());
    let (code, stdout, _) = provider.run(&["conformance", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(stdout.lines().filter(|l| l.starts_with("FAIL")).count(), 1);
    assert!(stdout.contains("FAIL 04-read-full"));
    assert!(stdout.contains("13 passed, 1 failed"));
}

fn copy_dir(from: &std::path::Path, to: &std::path::Path) {
    std::fs::create_dir_all(to).unwrap();
    for entry in std::fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        let dest = to.join(entry.file_name());
        if entry.path().is_dir() {
            copy_dir(&entry.path(), &dest);
        } else {
            std::fs::copy(entry.path(), &dest).unwrap();
        }
    }
}

// -- rendering ---------------------------------------------------------------

fn sample_message() -> TableMessage {
    let state = sample::sample_state();
    let principal = rsp_engine::authenticate(&state, sample::ADMIN.0, sample::ADMIN.1).unwrap();
    rsp_engine::read_table(
        &state,
        &principal,
        &rsp_wire::ReadTableRequest {
            user_name: sample::ADMIN.0.into(),
            password: sample::ADMIN.1.into(),
            table_name: "Employee".into(),
            language: None,
            skip: 0,
            take: 0,
            order_expression: None,
            filter_expression: None,
        },
    )
    .unwrap()
}

/// Cell texts of a message, with one fixed stand-in for null per format.
fn cell_multiset(message: &TableMessage, null_as: &str) -> Vec<String> {
    let mut cells: Vec<String> = message
        .items
        .iter()
        .flatten()
        .map(|cell| cell.clone().unwrap_or_else(|| null_as.to_string()))
        .collect();
    cells.sort();
    cells
}

#[test]
fn renderings_preserve_the_cell_multiset() {
    let message = sample_message();

    let text = render_table_message(&message, Format::Table);
    for cell in cell_multiset(&message, NULL_MARK) {
        assert!(text.contains(&cell), "table format lost {cell:?}");
    }
    let marked_headers = message.fields.iter().filter(|f| f.is_joined).count();
    assert_eq!(text.matches("(joined)").count(), marked_headers);

    let csv_text = render_table_message(&message, Format::Csv);
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let mut csv_cells: Vec<String> = reader
        .records()
        .flat_map(|r| r.unwrap().iter().map(str::to_string).collect::<Vec<_>>())
        .collect();
    csv_cells.sort();
    assert_eq!(csv_cells, cell_multiset(&message, ""));

    let json_text = render_table_message(&message, Format::Json);
    let reparsed: TableMessage = decode(&json_text).unwrap();
    assert_eq!(reparsed, message);
}

#[test]
fn empty_table_renders_header_line_only() {
    let mut message = sample_message();
    message.items.clear();
    let text = render_table_message(&message, Format::Table);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("Name"));

    let headers_text = render_headers(&[]);
    assert_eq!(headers_text.lines().count(), 1);
}
