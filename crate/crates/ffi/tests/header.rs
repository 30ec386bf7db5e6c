use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "pultr.h"

int main(void) {
    PultrGraph *c5 = NULL, *k3 = NULL, *g = NULL;
    PultrTemplate *t3 = NULL;
    bool exists = false;
    if (pultr_graph_family("cycle:5", &c5) != PULTR_STATUS_OK) return 10;
    if (pultr_graph_family("complete:3", &k3) != PULTR_STATUS_OK) return 11;
    if (pultr_template_builtin("t3", &t3) != PULTR_STATUS_OK) return 12;
    if (pultr_gamma(t3, c5, NULL, &g) != PULTR_STATUS_OK) return 13;
    if (pultr_graph_order(g) != 5 || pultr_graph_arc_count(g) != 20) return 14;
    if (pultr_hom_exists(g, k3, NULL, &exists, NULL) != PULTR_STATUS_OK || exists) return 15;
    PultrGraph *bad = NULL;
    if (pultr_graph_parse("x 3\n", &bad) != PULTR_STATUS_INVALID || bad) return 16;
    if (!strstr(pultr_last_error(), "line 1")) return 17;
    pultr_graph_free(g);
    pultr_graph_free(c5);
    pultr_graph_free(k3);
    pultr_template_free(t3);
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_is_generated() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/pultr.h")).unwrap();
    for name in [
        "pultr_last_error",
        "pultr_gamma",
        "pultr_verify_suite",
        "PULTR_STATUS_GUARD",
        "typedef struct PultrGraph PultrGraph",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let lib = target_dir().join("libpultr_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let dir = std::env::temp_dir().join(format!("pultr-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let exe = dir.join("main");
    let out = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg(&src)
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
