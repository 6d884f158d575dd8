//! Compiles a C program against the generated header and links it to the
//! static library built alongside this test.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "ddseed.h"

int main(void) {
    size_t src[] = {0, 0, 0, 0, 5};
    size_t dst[] = {1, 2, 3, 4, 6};
    DdseedGraph *g = NULL;
    if (ddseed_graph_from_edges(7, src, dst, 5, false, &g) != DDSEED_STATUS_OK) return 1;

    DdseedSelectParams params = ddseed_select_params_default();
    params.k = 2;
    params.theta_mode = DDSEED_THETA_MODE_FIXED;
    params.theta = 1;
    DdseedSeedSet *set = NULL;
    if (ddseed_select(g, "dd", &params, &set) != DDSEED_STATUS_OK) return 2;
    size_t seeds[2];
    if (ddseed_seedset_copy(set, seeds, 2) != DDSEED_STATUS_OK) return 3;

    double mean = 0, sd = 0;
    if (ddseed_estimate_spread(g, seeds, 2, 1.0, 100, 1, &mean, &sd) != DDSEED_STATUS_OK) return 4;

    DdseedStatus bad = ddseed_select(g, "unknown", &params, &set);
    printf("%zu %zu %.1f %d %s\n", seeds[0], seeds[1], mean, (int)bad, ddseed_last_error() ? "msg" : "none");

    ddseed_seedset_free(set);
    ddseed_graph_free(g);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<this test>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("client.c");
    std::fs::write(&source, PROGRAM).unwrap();
    let binary = dir.path().join("client");
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let archive = target_dir().join("libddseed_ffi.a");
    assert!(archive.exists(), "static library missing at {}", archive.display());

    let compiled = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Wextra", "-Werror", "-I", include])
        .arg(&source)
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .output()
        .expect("C compiler available");
    assert!(compiled.status.success(), "{}", String::from_utf8_lossy(&compiled.stderr));

    let run = Command::new(&binary).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "0 5 7.0 6 msg");
}

#[test]
fn header_is_valid_cplusplus() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include/ddseed.h");
    let out = Command::new("c++")
        .args(["-fsyntax-only", "-x", "c++", include])
        .output()
        .expect("C++ compiler available");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
