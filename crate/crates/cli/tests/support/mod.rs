//! Helpers shared by the CLI integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use braco_core::io::{parse_input, Command as Cmd, InputDocument};

/// Commands whose output is pinned by golden files.
pub const GOLDEN_COMMANDS: [&str; 5] = ["homology", "pairing", "signature", "det", "cover"];

/// Set to `1` to rewrite the golden files from the current output.
pub const BLESS_VAR: &str = "BRACO_BLESS_GOLDEN";

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().expect("workspace root")
}

pub fn fixture_dir() -> PathBuf {
    workspace_root().join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// All fixture files, sorted by name.
pub fn fixtures() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .expect("fixtures directory")
        .map(|e| e.expect("directory entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

pub fn load(path: &Path) -> InputDocument {
    parse_input(&std::fs::read(path).expect("readable fixture")).expect("fixture parses")
}

/// Output of the `braco` binary: (exit code, stdout, stderr).
pub fn braco(args: &[&str]) -> (i32, Vec<u8>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_braco")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout, String::from_utf8_lossy(&out.stderr).into_owned())
}

/// Every (fixture, command) pair with a golden file, in a fixed order.
pub fn golden_cases() -> Vec<(PathBuf, &'static str)> {
    let mut cases = Vec::new();
    for path in fixtures() {
        let doc = load(&path);
        for name in GOLDEN_COMMANDS {
            let cmd: Cmd = name.parse().expect("known command");
            if cmd.applies_to(doc.kind) {
                cases.push((path.clone(), name));
            }
        }
    }
    cases
}

pub fn golden_path(fixture: &Path, command: &str) -> PathBuf {
    let stem = fixture.file_stem().expect("file name").to_string_lossy().into_owned();
    golden_dir().join(format!("{stem}.{command}.txt"))
}

/// Runs one golden case twice in each format. Returns a description of the
/// first problem found: nonzero exit, output differing between runs, invalid
/// JSON, or text differing from the golden file. With the bless variable set
/// the golden file is rewritten instead of compared.
pub fn check_golden_case(fixture: &Path, command: &str) -> Result<(), String> {
    let file = fixture.to_str().expect("utf-8 path");
    let mut text = None;
    for format in ["text", "json"] {
        let first = braco(&[command, file, "--format", format]);
        let second = braco(&[command, file, "--format", format]);
        if first.0 != 0 {
            return Err(format!("{command} {file} --format {format} exited with {}: {}", first.0, first.2));
        }
        if first.1 != second.1 {
            return Err(format!("{command} {file} --format {format} differs between runs"));
        }
        if format == "json" {
            serde_json::from_slice::<serde_json::Value>(&first.1)
                .map_err(|e| format!("{command} {file}: invalid JSON output: {e}"))?;
        } else {
            text = Some(first.1);
        }
    }
    let text = text.expect("text run");
    let golden = golden_path(fixture, command);
    if std::env::var(BLESS_VAR).is_ok_and(|v| v == "1") {
        std::fs::write(&golden, &text).map_err(|e| format!("cannot write {}: {e}", golden.display()))?;
        return Ok(());
    }
    let expected = std::fs::read(&golden)
        .map_err(|e| format!("missing golden file {} ({e}); run with {BLESS_VAR}=1", golden.display()))?;
    if expected != text {
        return Err(format!(
            "{command} {file} differs from {}:\n--- expected\n{}\n--- actual\n{}",
            golden.display(),
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&text)
        ));
    }
    Ok(())
}
