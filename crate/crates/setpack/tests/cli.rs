//! Black-box tests of the executable: exit codes, file round-trips, and
//! agreement between the on-disk pipeline and the in-memory one.

use std::path::Path;
use std::process::{Command, Output};

use setpack::gen::builtin_pattern;
use setpack::graph::{Graph, SubIsoInstance};
use setpack::json::{load_json, save_json, GraphDoc, InstanceDoc, ManifestDoc, SubIsoDoc, WitnessDoc};
use setpack::reduction::{build_psp_instance, GadgetMode, OrderedPattern};
use setpack::setsystem::{is_exact_cover, is_packing, PackingWitness};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_graph(path: &Path, g: &Graph) {
    save_json(path, &GraphDoc::from_graph(g)).unwrap();
}

#[test]
fn gen_iss_checks_and_writes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pair.json");
    let res = run(&[
        "gen-iss",
        "--n-elems",
        "8",
        "--check",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{res:?}");
    let doc: setpack::json::IssPairDoc = load_json(&out).unwrap();
    assert_eq!(doc.m_sets, 35);
    // odd sizes are rejected with the error exit code
    assert_eq!(code(&run(&["gen-iss", "--n-elems", "5"])), 2);
}

#[test]
fn reduce_solve_round_trip_yes() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.json");
    write_graph(&g_path, &Graph::complete(4));
    let out_dir = dir.path().join("red");
    let res = run(&[
        "reduce",
        "--target",
        "psp",
        "--graph",
        g_path.to_str().unwrap(),
        "--pattern",
        "k3",
        "--gadget",
        "tight",
        "--ordering",
        "0",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{res:?}");

    let manifest: ManifestDoc = load_json(&out_dir.join("manifest.json")).unwrap();
    assert_eq!(manifest.r, 6);
    assert_eq!(manifest.universe_size, (3 + 6) * manifest.n_elems);
    assert_eq!(manifest.files.len(), 1);

    let inst_path = out_dir.join(&manifest.files[0]);
    let w_path = dir.path().join("w.json");
    let res = run(&[
        "solve",
        "psp",
        "--in",
        inst_path.to_str().unwrap(),
        "--algo",
        "bnb",
        "--witness",
        w_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{res:?}");

    // the witness file checks out against the serialized instance, and the
    // on-disk pipeline matches an in-memory build
    let doc: InstanceDoc = load_json(&inst_path).unwrap();
    let witness: WitnessDoc = load_json(&w_path).unwrap();
    let fam = doc.to_family().unwrap();
    let w = PackingWitness::new(witness.indices).unwrap();
    assert!(is_packing(&fam, &w).unwrap());
    assert!(is_exact_cover(&fam, &w).unwrap());

    let si = SubIsoInstance::new(Graph::complete(4), builtin_pattern("k3").unwrap()).unwrap();
    let pattern = OrderedPattern::identity(si.h.clone()).unwrap();
    let red = build_psp_instance(&si, &pattern, GadgetMode::Tight).unwrap();
    assert_eq!(red.inst.family, fam);
}

#[test]
fn reduce_solve_round_trip_no() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.json");
    write_graph(&g_path, &Graph::new(3, &[(1, 2), (2, 3)]).unwrap());
    let out_dir = dir.path().join("red");
    for target in ["psp", "xcover", "vecsum"] {
        let res = run(&[
            "reduce",
            "--target",
            target,
            "--graph",
            g_path.to_str().unwrap(),
            "--pattern",
            "k3",
            "--gadget",
            "tight",
            "--out",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(code(&res), 0, "{res:?}");
    }
    let manifest: ManifestDoc = load_json(&out_dir.join("manifest.json")).unwrap();
    assert_eq!(manifest.files.len(), 6, "one vecsum file per ordering");
    // no triangle in a path: every ordering decides no (exit code 1)
    for target in ["psp", "xcover", "vecsum"] {
        for idx in 0..6 {
            let path = out_dir.join(format!("{target}_ord{idx:03}.json"));
            let res = run(&["solve", target, "--in", path.to_str().unwrap()]);
            assert_eq!(code(&res), 1, "{target} ord {idx}: {res:?}");
        }
    }
}

#[test]
fn solve_subiso_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let yes = dir.path().join("yes.json");
    save_json(
        &yes,
        &SubIsoDoc {
            g: GraphDoc::from_graph(&Graph::complete(4)),
            h: GraphDoc::from_graph(&builtin_pattern("k3").unwrap()),
        },
    )
    .unwrap();
    assert_eq!(code(&run(&["solve", "subiso", "--in", yes.to_str().unwrap()])), 0);

    let no = dir.path().join("no.json");
    save_json(
        &no,
        &SubIsoDoc {
            g: GraphDoc::from_graph(&Graph::new(3, &[(1, 2), (2, 3)]).unwrap()),
            h: GraphDoc::from_graph(&builtin_pattern("k3").unwrap()),
        },
    )
    .unwrap();
    assert_eq!(code(&run(&["solve", "subiso", "--in", no.to_str().unwrap()])), 1);

    assert_eq!(code(&run(&["solve", "psp", "--in", "/nonexistent.json"])), 2);
}

#[test]
fn verify_runs_clean() {
    let res = run(&["verify", "--n-max", "3", "--pattern", "k3", "--mode", "tight"]);
    assert_eq!(code(&res), 0, "{res:?}");
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("zero disagreements"), "{stdout}");
}

#[test]
fn version_names_both_gadget_modes() {
    let res = run(&["--version"]);
    assert_eq!(code(&res), 0);
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("paper: N = 2 * ceil(log2(n + 1)) + 2"), "{stdout}");
    assert!(stdout.contains("tight"), "{stdout}");
}
