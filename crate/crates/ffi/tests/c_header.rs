//! Compiles and runs a small C program against the generated header and the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "tracehom.h"

int main(void) {
    TracehomPresentation *p = NULL;
    const char *toml = "letters = [\"a\", \"b\"]\ncommuting = [[\"a\", \"b\"]]\n";
    if (tracehom_presentation_parse(toml, &p) != TRACEHOM_STATUS_OK) return 1;
    TracehomTrace *t = NULL;
    if (tracehom_trace_parse(p, "ba", &t) != TRACEHOM_STATUS_OK) return 2;
    char *nf = NULL;
    if (tracehom_trace_normal_form(t, &nf) != TRACEHOM_STATUS_OK) return 3;
    int ok = strcmp(nf, "(ab)") == 0;
    tracehom_string_free(nf);
    size_t ranks[4];
    size_t len = 0;
    if (tracehom_homology_ranks(p, ranks, 4, &len) != TRACEHOM_STATUS_OK) return 4;
    ok = ok && len == 2 && ranks[0] == 2 && ranks[1] == 1;
    TracehomTrace *bad = NULL;
    ok = ok && tracehom_trace_parse(p, "x", &bad) == TRACEHOM_STATUS_INVALID_INPUT;
    ok = ok && strstr(tracehom_last_error(), "`x`") != NULL;
    tracehom_trace_free(t);
    tracehom_presentation_free(p);
    printf("%s\n", ok ? "ok" : "mismatch");
    return ok ? 0 : 5;
}
"#;

fn static_lib() -> Option<PathBuf> {
    // tests/<binary> lives in target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libtracehom_ffi.a");
    lib.exists().then_some(lib)
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
}

#[test]
fn header_compiles_and_links() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();

    let syntax = Command::new(cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"]).arg(&include).arg(&src).output().unwrap();
    assert!(syntax.status.success(), "{}", String::from_utf8_lossy(&syntax.stderr));

    let Some(lib) = static_lib() else {
        eprintln!("static library not built; only the header was checked");
        return;
    };
    let exe = dir.path().join("smoke");
    let link = Command::new(cc)
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(link.status.success(), "{}", String::from_utf8_lossy(&link.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
    assert!(run.status.success());
}
