//! Golden outputs of the command line. Set `UPDATE_GOLDEN=1` to rewrite
//! the expected files after an intended change.

use std::fs;
use std::path::PathBuf;

const CASES: &[(&str, &[&str])] = &[
    (
        "wp_a2_braid_relator",
        &[
            "wp",
            "--graph",
            "tests/data/a2.graph",
            "--word",
            "s t s t^-1 s^-1 t^-1",
        ],
    ),
    (
        "wp_free_commutator",
        &[
            "wp",
            "--graph",
            "tests/data/free2.graph",
            "--word",
            "s t s^-1 t^-1",
        ],
    ),
    (
        "wp_fc3_trace",
        &[
            "wp",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "s u t u^-1 t^-1 s^-1",
            "--trace",
        ],
    ),
    (
        "wp_fc3_relator_trace",
        &[
            "wp",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "t s u s u^-1 s^-1 u^-1 t^-1",
            "--trace",
        ],
    ),
    (
        "wp_fc3_json",
        &[
            "wp",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "s u s^-1 t",
            "--json",
        ],
    ),
    (
        "wp_unsupported_leaf",
        &[
            "wp",
            "--graph",
            "tests/data/affine_a2_leaf.graph",
            "--word",
            "a d",
        ],
    ),
    (
        "wp_unknown_vertex",
        &["wp", "--graph", "tests/data/a2.graph", "--word", "s t x"],
    ),
    (
        "wp_bad_token",
        &["wp", "--graph", "tests/data/a2.graph", "--word", "s t^2"],
    ),
    (
        "wp_word_cap",
        &[
            "wp",
            "--graph",
            "tests/data/a2.graph",
            "--word",
            "s t s t",
            "--cap-word-len",
            "3",
        ],
    ),
    ("wp_missing_word", &["wp", "--graph", "tests/data/a2.graph"]),
    (
        "member_fc3",
        &[
            "member",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "u s u s^-1 u^-1",
            "--subset",
            "s u",
        ],
    ),
    (
        "member_fc3_not",
        &[
            "member",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "s t",
            "--subset",
            "s u",
        ],
    ),
    (
        "member_identity",
        &[
            "member",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "t s s^-1 t^-1",
            "--subset",
            "u",
        ],
    ),
    (
        "member_json",
        &[
            "member",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "t u t^-1",
            "--subset",
            "u",
            "--json",
        ],
    ),
    (
        "classify_a2_free2",
        &["classify", "--graph", "tests/data/a2_free2.graph"],
    ),
    (
        "classify_fc3_json",
        &["classify", "--graph", "tests/data/fc3.graph", "--json"],
    ),
    (
        "decompose_affine_a3",
        &["decompose", "--graph", "tests/data/affine_a3_leaf.graph"],
    ),
    (
        "decompose_fc3_json",
        &["decompose", "--graph", "tests/data/fc3.graph", "--json"],
    ),
    (
        "center_a2_free2",
        &["center", "--graph", "tests/data/a2_free2.graph"],
    ),
    (
        "center_conditional",
        &["center", "--graph", "tests/data/affine_a3_leaf.graph"],
    ),
    (
        "center_fc3_json",
        &["center", "--graph", "tests/data/fc3.graph", "--json"],
    ),
    (
        "center_element_cap",
        &[
            "center",
            "--graph",
            "tests/data/a2_free2.graph",
            "--cap-elements",
            "3",
        ],
    ),
    (
        "torsion_affine_a3",
        &["torsion", "--graph", "tests/data/affine_a3_leaf.graph"],
    ),
    (
        "torsion_fc3_json",
        &["torsion", "--graph", "tests/data/fc3.graph", "--json"],
    ),
    (
        "graph_syntax_error",
        &["classify", "--graph", "tests/data/bad_label.graph"],
    ),
    (
        "graph_missing",
        &["classify", "--graph", "tests/data/no_such.graph"],
    ),
];

fn render(args: &[&str]) -> String {
    let outcome = artin::run(std::iter::once("artin").chain(args.iter().copied()));
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        outcome.code, outcome.stdout, outcome.stderr
    )
}

#[test]
fn outputs_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let got = render(args);
        let path = dir.join(format!("{name}.out"));
        if update {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for (_, args) in CASES {
        assert_eq!(render(args), render(args));
    }
}

#[test]
fn exit_codes() {
    let code =
        |args: &[&str]| artin::run(std::iter::once("artin").chain(args.iter().copied())).code;
    assert_eq!(
        code(&[
            "wp",
            "--graph",
            "tests/data/a2.graph",
            "--word",
            "s t s t^-1 s^-1 t^-1"
        ]),
        0
    );
    assert_eq!(
        code(&["wp", "--graph", "tests/data/free2.graph", "--word", "s t"]),
        0
    );
    assert_eq!(
        code(&[
            "member",
            "--graph",
            "tests/data/fc3.graph",
            "--word",
            "t",
            "--subset",
            "s"
        ]),
        0
    );
    assert_eq!(
        code(&[
            "wp",
            "--graph",
            "tests/data/affine_a2_leaf.graph",
            "--word",
            "a"
        ]),
        3
    );
    assert_eq!(
        code(&["center", "--graph", "tests/data/affine_a3_leaf.graph"]),
        0
    );
    assert_eq!(
        code(&[
            "wp",
            "--graph",
            "tests/data/a2.graph",
            "--word",
            "s",
            "--cap-word-len",
            "0"
        ]),
        4
    );
    assert_eq!(
        code(&["member", "--graph", "tests/data/fc3.graph", "--word", "t"]),
        2
    );
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
