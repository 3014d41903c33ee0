//! Stored tables and certificates. Run with `OCTOPLANE_BLESS=1` to rewrite
//! them after an intentional change.

use std::path::PathBuf;

use octoplane::compalg::{build_spec, parse_table, read_table, write_table, AlgebraKind, CompalgError, Family};
use octoplane::liecert::{certify, LieTarget, DEFAULT_TOLERANCES};
use octoplane::scalars::QSqrt3;

fn golden(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(rel)
}

fn bless() -> bool {
    std::env::var_os("OCTOPLANE_BLESS").is_some()
}

fn compare(rel: &str, actual: &str) {
    let path = golden(rel);
    if bless() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stored, actual, "{rel} differs from the stored copy");
}

#[test]
fn tables_match_the_stored_files() {
    for f in Family::ALL {
        let rel = format!("tables/{}.tbl", f.short());
        compare(&rel, &write_table(&build_spec(AlgebraKind::real(f))));
        if !bless() {
            let spec = read_table(&golden(&rel)).unwrap();
            assert_eq!(spec, build_spec(AlgebraKind::real(f)));
        }
    }
}

#[test]
fn flipped_constant_is_rejected_with_its_pair() {
    let text = std::fs::read_to_string(golden("tables/O.tbl")).unwrap();
    let flipped: Vec<String> = text
        .lines()
        .map(|l| {
            let t: Vec<&str> = l.splitn(4, ' ').collect();
            if t.len() == 4 && t[0] == "1" && t[1] == "2" {
                let c: QSqrt3 = t[3].parse().unwrap();
                format!("1 2 {} {}", t[2], -c)
            } else {
                l.to_string()
            }
        })
        .collect();
    match parse_table(&flipped.join("\n")) {
        Err(CompalgError::Composition(i, j)) => assert_eq!((i.min(j), i.max(j)), (1, 2)),
        other => panic!("expected a composition failure, got {other:?}"),
    }
}

#[test]
fn empty_file_fails_on_line_one() {
    match parse_table("") {
        Err(CompalgError::Parse { line, .. }) => assert_eq!(line, 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn certificates_match_the_stored_files() {
    for t in LieTarget::NAMED {
        let c = certify(t, &DEFAULT_TOLERANCES).unwrap();
        assert!(c.pass, "{t}: {:?}", c.failures);
        let text = serde_json::to_string_pretty(&c.stable_json()).unwrap() + "\n";
        compare(&format!("certs/{}.json", t.selector().replace(':', "_")), &text);
    }
}
