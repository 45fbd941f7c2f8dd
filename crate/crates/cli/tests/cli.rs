use std::path::PathBuf;
use std::process::Command;

use bs_cli::run;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs with fixture names replaced by their paths.
fn bs(args: &[&str]) -> bs_cli::Output {
    let mut full = vec!["bs".to_string()];
    for a in args {
        full.push(match a.strip_prefix('@') {
            Some(f) => fixture(f),
            None => a.to_string(),
        });
    }
    run(full)
}

const PSL: [&str; 6] = ["--source", "@psl2z.gog", "--gen", "a", "--gen", "b"];

fn cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let with = |head: &[&'static str], tail: &[&'static str]| {
        let mut v = head.to_vec();
        v.extend_from_slice(&PSL);
        v.extend_from_slice(tail);
        v
    };
    vec![
        ("wp_psl2z", vec!["wp", "--gog", "@psl2z.gog", "a b a b"]),
        ("rewrite_normalize", vec!["rewrite", "normalize", "@free2.srs", "a b b~ a~ a"]),
        ("rewrite_random", vec!["--seed", "7", "rewrite", "normalize", "@dyck.srs", "a a b c b c", "--strategy", "random"]),
        ("rewrite_confluence", vec!["rewrite", "confluence", "@dyck.srs"]),
        ("rewrite_overlap_json", vec!["--format", "json", "rewrite", "confluence", "@overlap.srs"]),
        ("lang_nfa2dfa", vec!["lang", "nfa2dfa", "@three_state.nfa"]),
        ("lang_cfg2pda", vec!["lang", "cfg2pda", "@anbn.cfg"]),
        ("lang_pda2cfg", vec!["lang", "pda2cfg", "@anbn.pda"]),
        ("lang_hotz", vec!["lang", "hotz", "@free1.cfg"]),
        ("gog_wp", vec!["gog", "wp", "@zxz2.gog", "y a y~ a"]),
        ("gog_normal_form", vec!["gog", "normal-form", "@dihedral.gog", "a y b y~ a"]),
        ("gog_present", vec!["gog", "present", "@zxz2.gog"]),
        ("gog_bst_dot", vec!["--format", "dot", "gog", "bst", "@psl2z.gog", "--depth", "2"]),
        ("gog_free_subgroup", vec!["gog", "free-subgroup", "@psl2z.gog"]),
        ("pregroup_check", vec!["pregroup", "check", "@zxz2.pg"]),
        ("pregroup_broken", vec!["pregroup", "check", "@broken_p3.pg"]),
        ("pregroup_from_gog", vec!["pregroup", "from-gog", "@zxz2.gog"]),
        ("pregroup_wp", vec!["pregroup", "wp", "@zxz2.pg", "y a y~ a"]),
        ("cayley_ball", with(&["cayley", "ball"], &["--radius", "2"])),
        ("cayley_ball_dot", with(&["--format", "dot", "cayley", "ball"], &["--radius", "2"])),
        ("cayley_td_ms", with(&["cayley", "td"], &["--radius", "4"])),
        ("cayley_td_clique", vec!["cayley", "td", "--source", "@psl2z.gog", "--gen", "a", "--gen", "b", "--gen", "b2", "--radius", "5", "--method", "clique"]),
        ("cayley_treewidth", with(&["cayley", "treewidth"], &["--radius", "2"])),
        ("cuts_enum", with(&["cuts", "enum"], &["--radius", "4"])),
        ("cuts_crossing", vec!["cuts", "nested", "--backend", "finite", "--source", "cyclic 8", "--gen", "g", "--radius", "4", "--first", "1,g,g.g", "--second", "g,g.g,g.g.g"]),
        ("cuts_nested", vec!["cuts", "nested", "--backend", "finite", "--source", "cyclic 8", "--gen", "g", "--radius", "4", "--first", "1", "g", "--second", "1,g,g.g"]),
        ("cuts_not_a_cut", vec!["cuts", "nested", "--backend", "free", "--source", "a b", "--radius", "3", "--first", "1,b,b~,a~", "--second", "a~"]),
        ("cuts_optimal_json", with(&["--format", "json", "cuts", "optimal"], &["--radius", "6", "--period", "a b"])),
        ("structure_tree_dot", with(&["--format", "dot", "structure-tree"], &["--radius", "6", "--period", "a b"])),
        ("blocks", with(&["blocks"], &["--radius", "6", "--period", "a b"])),
        ("blocks_free", vec!["blocks", "--backend", "free", "--source", "a b", "--radius", "4"]),
    ]
}

#[test]
fn golden_reports() {
    let bless = std::env::var_os("BS_BLESS").is_some();
    let mut failures = Vec::new();
    for (name, args) in cases() {
        let out = bs(&args);
        let body = format!("exit {}\n{}{}", out.code, out.stdout, out.stderr);
        let path = golden_dir().join(format!("{name}.out"));
        if bless {
            std::fs::write(&path, &body).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if want != body {
            failures.push(format!("{name}:\n--- want\n{want}--- got\n{body}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn reports_are_deterministic() {
    for (_, args) in cases() {
        assert_eq!(bs(&args), bs(&args));
    }
}

#[test]
fn examples_from_the_interface() {
    assert_eq!(bs(&["wp", "--gog", "@psl2z.gog", "a b a b"]).stdout, "false\n");
    assert_eq!(bs(&["wp", "--gog", "@psl2z.gog", "a a"]).stdout, "true\n");
    assert_eq!(bs(&["pregroup", "check", "@zxz2.pg"]).stdout, "pregroup: OK (P1–P4)\n");
    let help = bs(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("Usage: bs"));
}

#[test]
fn exit_codes() {
    assert_eq!(bs(&["frobnicate"]).code, 2);
    assert_eq!(bs(&["wp", "--gog"]).code, 2);
    assert_eq!(bs(&["--format", "dot", "wp", "--gog", "@psl2z.gog", "a"]).code, 2);
    assert_eq!(bs(&["cayley", "ball", "--backend", "quantum", "--source", "x"]).code, 2);
    assert_eq!(bs(&["--fuel", "0", "wp", "--gog", "@psl2z.gog", "a"]).code, 2);
    assert_eq!(bs(&["cuts", "enum", "--source", "@psl2z.gog", "--k", "9"]).code, 2);
    // domain errors name what went wrong
    let missing = bs(&["wp", "--gog", "/nonexistent.gog", "a"]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("cannot read"));
    let bad = bs(&["wp", "--gog", "@psl2z.gog", "a q"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains('q'));
    assert_eq!(bs(&["rewrite", "confluence", "@overlap.srs"]).code, 1);
    assert_eq!(bs(&["pregroup", "check", "@broken_p3.pg"]).code, 1);
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("bs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.srs");
    std::fs::write(&bad, "letters: a b\na q -> _\n").unwrap();
    let out = run(["bs", "rewrite", "confluence", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column 3"), "{}", out.stderr);
    let graph = dir.join("g.txt");
    std::fs::write(&graph, "vertices a b\nedge a c\n").unwrap();
    let out = run(["bs", "cayley", "treewidth", "--graph", graph.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column 8"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeds_pick_the_random_strategy_deterministically() {
    let args = |seed: &'static str| ["--seed", seed, "rewrite", "normalize", "@dyck.srs", "a b a b c c", "--strategy", "random"];
    assert_eq!(bs(&args("1")), bs(&args("1")));
    assert_eq!(bs(&args("1")).code, 0);
}

#[test]
fn fuel_comes_from_the_environment() {
    let exe = env!("CARGO_BIN_EXE_bs");
    let run_env = |fuel: &str| {
        Command::new(exe)
            .env("BS_FUEL", fuel)
            .args(["rewrite", "normalize", &fixture("free2.srs"), "a a~ b b~ a a~"])
            .output()
            .unwrap()
    };
    let starved = run_env("1");
    assert_eq!(starved.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&starved.stderr).contains("fuel exhausted"));
    let fed = run_env("100");
    assert_eq!(fed.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&fed.stdout), "_\n");
    assert_eq!(run_env("zero").status.code(), Some(2));
    // the flag wins over the environment
    let flag = Command::new(exe)
        .env("BS_FUEL", "1")
        .args(["--fuel", "100", "rewrite", "normalize", &fixture("free2.srs"), "a a~"])
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));
}
