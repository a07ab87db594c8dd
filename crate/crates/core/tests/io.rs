//! The document layer on the shipped fixtures and on random documents.

use std::path::PathBuf;

use braco_core::io::{
    document_to_json, parse_input, run_command, Command, Format, InputDocument, Kind, OverbridgeDoc, TangleDoc,
    UnderbridgeDoc,
};
use braco_testkit::strategies as s;
use proptest::prelude::*;

fn fixtures() -> Vec<(PathBuf, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .expect("fixtures directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    assert!(files.len() >= 20, "expected the full fixture set in {}", dir.display());
    files.into_iter().map(|p| (p.clone(), std::fs::read(p).unwrap())).collect()
}

#[test]
fn every_fixture_runs_every_applicable_command() {
    for (path, bytes) in fixtures() {
        let doc = parse_input(&bytes).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        for command in Command::ALL {
            let result = run_command(command, &doc);
            if command.applies_to(doc.kind) {
                if let Err(e) = result {
                    panic!("{} {}: {e}", command, path.display());
                }
            } else {
                assert!(result.is_err(), "{} accepted {}", command, path.display());
            }
        }
    }
}

#[test]
fn fixtures_are_in_canonical_form() {
    for (path, bytes) in fixtures() {
        let doc = parse_input(&bytes).unwrap();
        assert_eq!(document_to_json(&doc).as_bytes(), bytes.as_slice(), "{} is not canonical", path.display());
    }
}

#[test]
fn fixture_reports_are_deterministic() {
    for (path, bytes) in fixtures() {
        for command in Command::ALL {
            let first = parse_input(&bytes).ok().and_then(|d| run_command(command, &d).ok());
            let second = parse_input(&bytes).ok().and_then(|d| run_command(command, &d).ok());
            if let (Some(a), Some(b)) = (first, second) {
                for format in [Format::Text, Format::Json] {
                    assert_eq!(a.render(format), b.render(format), "{} {}", command, path.display());
                }
            }
        }
    }
}

#[test]
fn json_reports_are_valid_json() {
    for (path, bytes) in fixtures() {
        let doc = parse_input(&bytes).unwrap();
        for command in Command::ALL.into_iter().filter(|c| c.applies_to(doc.kind)) {
            let json = run_command(command, &doc).unwrap().render(Format::Json);
            let value: serde_json::Value =
                serde_json::from_str(&json).unwrap_or_else(|e| panic!("{} {}: {e}", command, path.display()));
            assert_eq!(value["command"], command.as_str());
        }
    }
}

fn tangle_document(name: String, d: &braco_core::tangle_model::BridgeDiagram) -> InputDocument {
    InputDocument {
        schema: 1,
        kind: Kind::Tangle,
        name,
        description: None,
        tangle: Some(TangleDoc {
            underbridges: d
                .underbridges
                .iter()
                .map(|u| UnderbridgeDoc { id: u.id.clone(), endpoints: u.endpoints })
                .collect(),
            overbridges: d
                .overbridges
                .iter()
                .map(|o| OverbridgeDoc {
                    id: o.id.clone(),
                    start: o.start.clone(),
                    crossings: o.crossings.clone(),
                    end: o.end.clone(),
                    disorientation: o.disorientation,
                })
                .collect(),
        }),
        surface: None,
        band_diagram: None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tangle_documents_round_trip(d in s::bridge_diagram(), name in "\\PC{0,12}") {
        let doc = tangle_document(name, &d);
        let parsed = parse_input(document_to_json(&doc).as_bytes()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.tangle.unwrap().to_diagram(), d);
        let again = parse_input(document_to_json(&doc).as_bytes()).unwrap();
        prop_assert_eq!(document_to_json(&again), document_to_json(&doc));
    }

    #[test]
    fn fixture_documents_round_trip_with_any_name(index in 0usize..64, name in "\\PC{0,16}", description in proptest::option::of("\\PC{0,24}")) {
        let all = fixtures();
        let (_, bytes) = &all[index % all.len()];
        let mut doc = parse_input(bytes).unwrap();
        doc.name = name;
        doc.description = description;
        let text = document_to_json(&doc);
        prop_assert_eq!(parse_input(text.as_bytes()).unwrap(), doc);
    }

    #[test]
    fn reports_of_random_tangles_render_identically(d in s::bridge_diagram()) {
        let doc = tangle_document("random".into(), &d);
        for command in [Command::Homology, Command::Det, Command::Cover] {
            let a = run_command(command, &doc).unwrap();
            let b = run_command(command, &parse_input(document_to_json(&doc).as_bytes()).unwrap()).unwrap();
            prop_assert_eq!(a.render(Format::Text), b.render(Format::Text));
            prop_assert_eq!(a.render(Format::Json), b.render(Format::Json));
        }
    }
}
