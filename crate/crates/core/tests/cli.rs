use std::process::{Command, Output};

use num_bigint::BigUint;
use zmod::cli::{
    cmd_boolean, cmd_crt, cmd_factor, cmd_idempotents, cmd_lift, cmd_nilpotents, BooleanOp,
    OutputRecord,
};
use zmod::{
    crt_solve, enumerate_idempotents, factor, join, lift_idempotent, nilradical, CongruenceSystem,
    Residue, DEFAULT_ENUMERATION_CAP,
};

fn zmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zmod"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> OutputRecord {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = zmod(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    OutputRecord::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn decimal(xs: &[BigUint]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

#[test]
fn binary_records_match_library_calls() {
    let m = BigUint::from(858u32);
    let set = enumerate_idempotents(&factor(&m).unwrap()).unwrap();
    let record = json(&["idempotents", "858"]);
    assert_eq!(record.command, "idempotents");
    let members: Vec<String> = record
        .result_strs("members")
        .unwrap()
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(members, decimal(set.members()));
    let basis: Vec<String> = record
        .result_strs("basis")
        .unwrap()
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(basis, decimal(set.basis().elements()));
    assert_eq!(
        record,
        cmd_idempotents("858", DEFAULT_ENUMERATION_CAP, false).unwrap()
    );

    let system = CongruenceSystem::new([(-135, 9u32), (3, 5), (11, 17)]).unwrap();
    let x = crt_solve(&system).unwrap();
    let record = json(&["crt", "-135:9,3:5", "11:17"]);
    assert_eq!(record.result_str("x"), Some(x.value().to_string().as_str()));
    assert_eq!(record.result_str("modulus"), Some("765"));

    let lifted = lift_idempotent(&Residue::new(391, 765u32).unwrap()).unwrap();
    let record = json(&["lift", "391", "765"]);
    assert_eq!(
        record.result_str("lifted"),
        Some(lifted.lifted.value().to_string().as_str())
    );
    assert_eq!(
        record.result_str("iterations"),
        Some(lifted.iterations.to_string().as_str())
    );

    let nil = nilradical(&factor(&BigUint::from(765u32)).unwrap());
    let record = json(&["nilpotents", "765"]);
    assert_eq!(
        record.result_str("generator"),
        Some(nil.generator.to_string().as_str())
    );
    assert_eq!(record.result_str("count"), Some("3"));

    let j = join(
        &Residue::new(66, 858u32).unwrap(),
        &Residue::new(78, 858u32).unwrap(),
    )
    .unwrap();
    let record = json(&["boolean", "join", "66", "78", "858"]);
    assert_eq!(
        record.result_str("value"),
        Some(j.value().to_string().as_str())
    );
}

#[test]
fn in_process_and_binary_agree() {
    assert_eq!(json(&["factor", "765"]), cmd_factor("765").unwrap());
    assert_eq!(
        json(&["crt", "2:3", "3:5"]),
        cmd_crt(&strings(&["2:3", "3:5"])).unwrap()
    );
    assert_eq!(json(&["lift", "10", "12"]), cmd_lift("10", "12").unwrap());
    assert_eq!(json(&["nilpotents", "12"]), cmd_nilpotents("12").unwrap());
    assert_eq!(
        json(&["boolean", "xor", "66", "793", "858"]),
        cmd_boolean(BooleanOp::Xor, &strings(&["66", "793", "858"])).unwrap()
    );
}

#[test]
fn large_modulus_survives_as_decimal_strings() {
    let m = "2417851639291930512195989";
    let record = json(&["factor", m]);
    assert_eq!(record.inputs.get("m").and_then(|v| v.as_str()), Some(m));
    assert_eq!(
        record.result_str("factorization"),
        Some("2417851639291930512195989 = 1099511627791 * 2199023255579")
    );
}

#[test]
fn text_mode_is_default() {
    let out = zmod(&["idempotents", "765"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("idempotents\n  m: 765\n"));
    assert!(text.contains("members: 0, 1, 136, 171, 306, 460, 595, 630\n"));
}

#[test]
fn exit_codes_and_diagnostics() {
    let code = |args: &[&str]| zmod(args).status.code();
    assert_eq!(code(&["factor", "1"]), Some(0));
    assert_eq!(code(&["factor", "0"]), Some(2));
    assert_eq!(code(&["factor", "abc"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["crt"]), Some(2));
    assert_eq!(code(&["boolean", "nand", "1", "2", "3"]), Some(2));
    assert_eq!(code(&["idempotents", "--cap", "3", "858"]), Some(2));
    assert_eq!(
        code(&["idempotents", "--cap", "3", "--basis-only", "858"]),
        Some(0)
    );

    let out = zmod(&["crt", "1:4", "3:6"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.contains("coprim"), "{stderr}");

    let out = zmod(&["lift", "4", "765"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("nilpotent"));

    let out = zmod(&["boolean", "meet", "2", "1", "858"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("not idempotent"));
}
