use std::process::Command;

use springer_cli::records::{parse, render, Record};
use springer_cli::run;
use springer_core::springer::{correspondence_table, rho};
use springer_core::uniclass::{enumerate_classes, enumerate_pairs};
use springer_core::GroupDescriptor;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_springer")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn records(args: &[&str]) -> Vec<Record> {
    let mut full = vec!["springer"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout.lines().map(|l| parse(l).unwrap()).collect()
}

#[test]
fn class_counts() {
    let (code, out, _) = bin(&["classes", "--family", "sp", "--n", "2", "--char", "odd"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let (code, out, _) = bin(&["classes", "--family", "sp", "--n", "2", "--char", "two"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn odd_orthogonal_in_char_two_is_a_usage_error() {
    let (code, out, err) = bin(&["classes", "--family", "so-odd", "--n", "2", "--char", "two"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("error"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(bin(&["classes", "--family", "gl", "--n", "2"]).0, 2);
    assert_eq!(bin(&["classes", "--n", "2"]).0, 2);
    assert_eq!(bin(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(bin(&["split-element", "--family", "sp", "--n", "2", "--lambda", "3,1"]).0, 2);
    assert_eq!(bin(&["split-element", "--family", "sp", "--n", "2", "--lambda", "4", "--eps", "4=7"]).0, 2);
    assert_eq!(bin(&["branch", "--family", "sp", "--n", "0", "--lambda", ""]).0, 2);
    assert_eq!(bin(&["preferred", "--alpha", "1", "--beta", "1"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = bin(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("correspondence"));
}

#[test]
fn correspondence_row_counts() {
    assert_eq!(records(&["correspondence", "--family", "sp", "--n", "2", "--char", "odd"]).len(), 7);
    assert_eq!(records(&["correspondence", "--family", "sp", "--n", "2", "--char", "two"]).len(), 6);
    assert_eq!(records(&["correspondence", "--family", "so-even", "--n", "0"]).len(), 1);
}

#[test]
fn split_element_char_two_symplectic() {
    let r = records(&["split-element", "--family", "sp", "--n", "2", "--char", "two", "--lambda", "4", "--eps", "4=1"]);
    let Record::SplitElement(p) = &r[0] else { panic!("wrong kind") };
    assert_eq!(p.dim, 4);
    assert_eq!(p.gram.len(), 4);
    assert_eq!(p.element.len(), 4);
    assert_eq!(p.jordan_type, vec![4]);
    assert_eq!(p.recovered_eps.as_deref(), Some("4=1"));
    assert!(p.preserves_form);
}

#[test]
fn split_element_odd_char_is_signed() {
    let r = records(&["split-element", "--family", "sp", "--n", "2", "--lambda", "2,2"]);
    let Record::SplitElement(p) = &r[0] else { panic!("wrong kind") };
    assert_eq!(p.field, "integer");
    assert_eq!(p.dim, 4);
    assert!(p.gram.iter().flatten().any(|&x| x < 0));
    assert_eq!(p.jordan_type, vec![2, 2]);
    assert!(p.preserves_form);
}

#[test]
fn split_element_orthogonal_char_two_has_arf_zero() {
    let r = records(&["split-element", "--family", "so-even", "--n", "2", "--char", "two", "--lambda", "2,2", "--eps", "2=0"]);
    let Record::SplitElement(p) = &r[0] else { panic!("wrong kind") };
    assert_eq!(p.arf, Some(0));
    assert_eq!(p.quadratic.as_ref().map(Vec::len), Some(4));
    assert_eq!(p.class.split, "'");
}

#[test]
fn kernel_cap_from_environment() {
    let args = ["split-element", "--family", "sp", "--n", "2", "--char", "two", "--lambda", "2,2", "--eps", "2=0"];
    let out = Command::new(env!("CARGO_BIN_EXE_springer")).args(args).env("SPRINGER_KERNEL_CAP", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_springer")).args(args).env("SPRINGER_KERNEL_CAP", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_checks() {
    let (code, out, _) = bin(&["verify", "--suite", "cardinality", "--max-n", "8"]);
    assert_eq!(code, 0);
    let Record::Report(r) = parse(out.lines().next().unwrap()).unwrap() else { panic!("wrong kind") };
    assert!(r.passed && r.checks > 0 && r.failures.is_empty());
    assert_eq!(bin(&["verify", "--suite", "forms", "--max-n", "32"]).0, 0);
    assert_eq!(bin(&["verify", "--suite", "restriction", "--max-n", "6"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["correspondence", "--family", "so-even", "--n", "4", "--char", "two"];
    assert_eq!(bin(&args), bin(&args));
}

#[test]
fn table_mode_has_header_and_rows() {
    let (code, out, _) = bin(&["--format", "table", "classes", "--family", "sp", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert!(out.starts_with("group"));
}

fn group_flags(g: &GroupDescriptor) -> Vec<String> {
    let f = springer_cli::records::GroupFields::from_group(g);
    vec!["--family".into(), f.family, "--n".into(), g.n.to_string(), "--char".into(), f.char_parity]
}

#[test]
fn records_round_trip_and_decode() {
    for n in 0..=4 {
        for g in GroupDescriptor::all_split(n) {
            let flags = group_flags(&g);
            let with = |cmd: &str| -> Vec<Record> {
                let mut a = vec![cmd.to_string()];
                a.extend(flags.iter().cloned());
                records(&a.iter().map(String::as_str).collect::<Vec<_>>())
            };

            let classes = with("classes");
            let expect = enumerate_classes(&g);
            assert_eq!(classes.len(), expect.len());
            for (r, c) in classes.iter().zip(&expect) {
                assert_eq!(parse(&render(r)).unwrap(), *r);
                let Record::Class(x) = r else { panic!() };
                assert_eq!(x.group.to_group().unwrap(), g);
                assert_eq!(&x.class.to_label().unwrap(), c);
            }

            let pairs = with("pairs");
            for (r, (c, ls)) in pairs.iter().zip(enumerate_pairs(&g)) {
                assert_eq!(parse(&render(r)).unwrap(), *r);
                let Record::Pair(x) = r else { panic!() };
                assert_eq!(x.to_pair().unwrap(), (g, c, ls));
            }

            for r in with("rho") {
                assert_eq!(parse(&render(&r)).unwrap(), r);
                let Record::Rho(x) = r else { panic!() };
                let c = x.class.to_label().unwrap();
                assert_eq!(x.symbol.to_symbol(&g).unwrap(), rho(&g, &c).unwrap());
            }

            let rows = with("correspondence");
            for (r, row) in rows.iter().zip(correspondence_table(&g).unwrap()) {
                assert_eq!(parse(&render(r)).unwrap(), *r);
                let Record::Row(x) = r else { panic!() };
                assert_eq!(x.symbol.to_symbol(&g).unwrap(), row.symbol);
                assert_eq!(x.character.to_bipartition(), row.character);
                assert_eq!(x.class.to_label().unwrap(), row.class);
            }
        }
    }
}

#[test]
fn descent_records_decode() {
    let r = records(&["branch", "--family", "so-even", "--n", "4", "--char", "two", "--lambda", "4,4", "--eps", "4=0"]);
    assert!(!r.is_empty());
    let mut chosen = 0;
    for rec in &r {
        assert_eq!(parse(&render(rec)).unwrap(), *rec);
        let Record::Descent(d) = rec else { panic!("wrong kind") };
        let case = d.to_case().unwrap();
        assert_eq!(case.tag.name(), d.case);
        chosen += d.chosen as usize;
    }
    assert_eq!(chosen, 1);
}

#[test]
fn preferred_base_cases() {
    let r = records(&["preferred", "--alpha", "2"]);
    let Record::Preferred(p) = &r[0] else { panic!("wrong kind") };
    assert_eq!(p.rows, (vec![2], vec![0]));
    let r = records(&["preferred", "--alpha", "1,1"]);
    let Record::Preferred(p) = &r[0] else { panic!("wrong kind") };
    assert_eq!(p.rows, (vec![1, 2], vec![0, 1]));
}
