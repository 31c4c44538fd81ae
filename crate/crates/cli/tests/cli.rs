mod support;

use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snk_cli::problem::Problem;
use snk_cli::{exit, run, verify, CliError, RunOptions};
use support::*;

const PINNED: [(&str, &str); 25] = [
    ("conductor_cusp", "Computed"),
    ("cusp_scan", "Found"),
    ("cusp_swan", "ProperlyRegulous"),
    ("cusp_yx", "Regulous"),
    ("eliminate_twisted", "Computed"),
    ("fourvar", "Regulous"),
    ("fourvar_alt", "Regulous"),
    ("gb_cyclic3", "Computed"),
    ("gb_empty", "Computed"),
    ("line_scan", "NoneFound"),
    ("member_cusp", "Member"),
    ("node_scan", "NoneFound"),
    ("node_yx", "NotRegulous"),
    ("nonmember_cusp", "NotMember"),
    ("nullstellensatz_cusp", "Witness"),
    ("radical_member", "InRadical"),
    ("saturate_lines", "Computed"),
    ("seminormalize_cusp", "Tower"),
    ("seminormalize_three_lines", "Tower"),
    ("sextic_yx", "Regulous"),
    ("sextic_yx2", "NotRegulous"),
    ("subintegral_cusp", "Subintegral"),
    ("subintegral_node", "NotSubintegral"),
    ("subintegral_three_lines", "Subintegral"),
    ("three_lines", "Regulous"),
];

fn snk(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_snk"))
        .args(args)
        .env_remove("SNK_BUDGET")
        .output()
        .unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("snk-cli-test-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn every_fixture_has_a_pinned_verdict() {
    let names = fixture_names();
    for n in &names {
        assert!(PINNED.iter().any(|(p, _)| p == n), "{n} is not pinned");
    }
    for (name, verdict) in PINNED {
        let out = solve(name);
        assert_eq!(out.certificate.verdict, verdict, "{name}");
        assert_eq!(out.exit, exit::DEFINITIVE, "{name}");
    }
}

#[test]
fn fixtures_are_canonical() {
    for name in fixture_names() {
        let text = fixture_text(&name);
        assert_eq!(Problem::parse(&text).unwrap().emit(), text, "{name}");
    }
}

#[test]
fn certificates_verify() {
    for name in fixture_names() {
        let text = solve(&name).certificate.emit();
        verify(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn output_is_deterministic_up_to_the_timestamp() {
    for name in ["three_lines", "cusp_scan", "nullstellensatz_cusp", "fourvar"] {
        let p = fixture(name);
        let a = run(
            &p,
            &RunOptions {
                timestamp: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let b = run(&p, &RunOptions::default()).unwrap();
        assert_eq!(
            without_timestamp(&a.certificate.emit()),
            without_timestamp(&b.certificate.emit()),
            "{name}"
        );
    }
}

#[test]
fn every_single_token_tampering_is_rejected() {
    for name in [
        "cusp_yx",
        "sextic_yx2",
        "cusp_swan",
        "node_scan",
        "nullstellensatz_cusp",
        "member_cusp",
    ] {
        let text = solve(name).certificate.emit();
        let all = tamperings(&text);
        assert!(all.len() > 20, "{name}: only {} tamperings", all.len());
        for t in all {
            let bad = t.apply(&text);
            assert!(
                verify(&bad).is_err(),
                "{name}: `{}` -> `{}` at byte {} was accepted",
                &text[t.start..t.end],
                t.replacement,
                t.start
            );
        }
    }
}

#[test]
fn sampled_tamperings_across_tasks_are_rejected() {
    let certs: Vec<(String, String)> = [
        "three_lines",
        "seminormalize_cusp",
        "conductor_cusp",
        "subintegral_node",
        "eliminate_twisted",
    ]
    .iter()
    .map(|n| (n.to_string(), solve(n).certificate.emit()))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, t) in sample_tamperings(&certs, 200, &mut rng) {
        let text = &certs.iter().find(|c| c.0 == name).unwrap().1;
        assert!(verify(&t.apply(text)).is_err(), "{name}: {t:?}");
    }
}

#[test]
fn metadata_edits_do_not_matter() {
    let text = solve("cusp_yx").certificate.emit();
    let edited = text
        .replace("timestamp: 0", "timestamp: 99")
        .replace("engine: snk", "engine: other");
    verify(&edited).unwrap();
}

#[test]
fn dropping_or_duplicating_a_claim_is_rejected() {
    let text = solve("cusp_yx").certificate.emit();
    let start = text.find("begin basis finite").unwrap();
    let end = start + text[start..].find("end basis\n").unwrap() + "end basis\n".len();
    let block = &text[start..end];
    let dropped = format!("{}{}", &text[..start], &text[end..]);
    assert!(matches!(verify(&dropped), Err(CliError::Rejected(_))));
    let doubled = format!("{}{block}{}", &text[..end], &text[end..]);
    assert!(verify(&doubled).is_err());
}

#[test]
fn tiny_budget_is_undecided() {
    let out = run(
        &fixture("fourvar"),
        &RunOptions {
            budget: Some(1),
            timestamp: Some(0),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(out.certificate.verdict, "Undecided");
    assert_eq!(out.exit, exit::UNDECIDED);
    assert!(out.certificate.claims.is_empty());
    verify(&out.certificate.emit()).unwrap();
}

#[test]
fn order_override_changes_the_basis_only() {
    let p = fixture("gb_cyclic3");
    let lex = RunOptions {
        order: Some("lex".parse().unwrap()),
        timestamp: Some(0),
        ..Default::default()
    };
    let out = run(&p, &lex).unwrap();
    assert!(out.certificate.problem.contains("order: lex"));
    verify(&out.certificate.emit()).unwrap();
}

#[test]
fn binary_exit_codes() {
    let dir = scratch("exit");
    let cusp = fixture_path("cusp_yx");
    let cert = dir.join("cusp.cert");
    let out = snk(&[
        "regulous-check",
        cusp.to_str().unwrap(),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: Regulous"));
    assert_eq!(snk(&["verify", cert.to_str().unwrap()]).status.code(), Some(0));

    let neg = fixture_path("sextic_yx2");
    assert_eq!(snk(&["regulous-check", neg.to_str().unwrap()]).status.code(), Some(0));

    let four = fixture_path("fourvar");
    assert_eq!(
        snk(&["regulous-check", four.to_str().unwrap(), "--budget", "1"])
            .status
            .code(),
        Some(2)
    );
    let env = Command::new(env!("CARGO_BIN_EXE_snk"))
        .args(["regulous-check", four.to_str().unwrap()])
        .env("SNK_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));

    let bad = dir.join("bad.problem");
    std::fs::write(&bad, "task: regulous-check\nvars: x, y\nfraction: y / \n\ny^2 - x^3\n").unwrap();
    let out = snk(&["regulous-check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&out.stdout).contains("3:"),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert_eq!(snk(&["member", cusp.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(snk(&["no-such-task", cusp.to_str().unwrap()]).status.code(), Some(1));

    let text = std::fs::read_to_string(&cert).unwrap();
    std::fs::write(&cert, text.replace("t^2 - x", "t^2 + x")).unwrap();
    assert_eq!(snk(&["verify", cert.to_str().unwrap()]).status.code(), Some(1));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn parallel_jobs_keep_input_order() {
    let dir = scratch("jobs");
    let names = ["cusp_yx", "sextic_yx", "sextic_yx2", "three_lines", "node_yx"];
    let paths: Vec<String> = names
        .iter()
        .map(|n| fixture_path(n).to_string_lossy().into_owned())
        .collect();
    let mut args = vec!["regulous-check"];
    args.extend(paths.iter().map(String::as_str));
    let serial = snk(&args);
    args.extend(["--jobs", "4", "--out", dir.to_str().unwrap()]);
    let parallel = snk(&args);
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    for n in names {
        let cert = std::fs::read_to_string(dir.join(format!("{n}.cert"))).unwrap();
        verify(&cert).unwrap();
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn perturbed_cofactors_are_rejected() {
    let text = solve("nullstellensatz_cusp").certificate.emit();
    let start = text.find("cofactors: ").unwrap();
    let lines: Vec<&str> = text[start..]
        .lines()
        .skip(1)
        .take_while(|l| *l != "end identity")
        .collect();
    assert!(!lines.is_empty());
    for k in 0..lines.len() {
        let mut out = text[..start].to_string();
        out.push_str(text[start..].lines().next().unwrap());
        out.push('\n');
        for (i, l) in lines.iter().enumerate() {
            out.push_str(&if i == k { format!("{l} + 1") } else { l.to_string() });
            out.push('\n');
        }
        let rest = &text[start..];
        out.push_str(&rest[rest.find("end identity").unwrap()..]);
        assert!(
            matches!(verify(&out), Err(CliError::Rejected(_)) | Err(CliError::Certificate(_))),
            "cofactor {k}"
        );
    }
    // the same for a row of a basis claim
    let four = solve("fourvar").certificate.emit();
    let rows = four.find("rows: ").unwrap();
    let line_end = rows + four[rows..].find('\n').unwrap() + 1;
    let next = line_end + four[line_end..].find(" ; ").unwrap();
    let bad = format!("{} + 1{}", &four[..next], &four[next..]);
    assert!(verify(&bad).is_err());
    verify(&four).unwrap();
}
