//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use secmod_core::classify::is_strongly_two_absorbing_secondary_formula;
use secmod_core::{
    classify_all, corpus_generate, divisors, second_radical, Classifier, CorpusFilter, CorpusSpec,
    FinModule, Ideal, Quantifier, RingSpec, SubLattice,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secmod"))
}

fn corpus(max: u64, filter: CorpusFilter) -> Vec<FinModule> {
    corpus_generate(&CorpusSpec {
        max_order: max,
        filter,
    })
    .expect("corpus")
}

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    if took <= limit {
        Ok(format!("{detail}; {:.2?}", took))
    } else {
        Err(format!("{detail}; took {:.2?}, limit {:.0?}", took, limit))
    }
}

fn module(f: &[u64]) -> FinModule {
    FinModule::new(None, f).expect("module")
}

fn top_is_s2as(m: &FinModule) -> bool {
    let lattice = SubLattice::enumerate(m).expect("lattice");
    let report = classify_all(&lattice).expect("classify");
    report
        .rows
        .last()
        .expect("rows")
        .1
        .strongly_two_abs_secondary
}

fn example_regression() -> Outcome {
    let start = Instant::now();
    let z6 = top_is_s2as(&module(&[6]));
    let z10 = top_is_s2as(&module(&[10]));
    let sum = module(&[6, 10]);
    let both = top_is_s2as(&sum);
    let sec_full = second_radical(&sum.full()) == sum.full();
    let detail = format!("Z6 {z6}, Z10 {z10}, Z6+Z10 {both}, sec(Z6+Z10)=M {sec_full}");
    if z6 && z10 && !both && sec_full {
        within(Duration::from_secs(1), start, detail)
    } else {
        Err(detail)
    }
}

fn modes_agree() -> Outcome {
    let start = Instant::now();
    let mut modules = corpus(64, CorpusFilter::All);
    modules.extend(
        corpus(200, CorpusFilter::CyclicOnly)
            .into_iter()
            .filter(|m| m.order() > 64),
    );
    let mut checked = 0;
    for m in &modules {
        let lattice = SubLattice::enumerate(m).expect("lattice");
        let c = Classifier::new(&lattice);
        for i in 1..lattice.len() {
            checked += 1;
            let formula = c.is_strongly_two_absorbing_secondary(i);
            let ideals = c.is_strongly_two_absorbing_secondary_by_ideals(i);
            let ci_pairs = c.is_strongly_two_absorbing_secondary_by_ci_pairs(i);
            if formula != ideals || formula != ci_pairs {
                return Err(format!(
                    "{m:?} {:?}: (a) {ci_pairs}, (b) {ideals}, (c) {formula}",
                    lattice.node(i)
                ));
            }
        }
    }
    within(
        Duration::from_secs(300),
        start,
        format!("{} modules, {checked} non-zero submodules", modules.len()),
    )
}

fn annihilator_biconditional() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 2..=512u64 {
        let m = module(&[n]);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            // d·M is the submodule of order n/d
            let sub = m.span(&[m.element(&[d]).expect("element")]).expect("span");
            checked += 1;
            let s2as = is_strongly_two_absorbing_secondary_formula(&sub);
            let tap = sub
                .annihilator()
                .is_two_absorbing_primary()
                .expect("proper");
            if s2as != tap {
                return Err(format!(
                    "Z{n}, N = {d}M: s2as {s2as}, Ann 2-absorbing primary {tap}"
                ));
            }
        }
    }
    within(
        Duration::from_secs(120),
        start,
        format!("{checked} non-zero submodules"),
    )
}

fn ideal_oracles() -> Outcome {
    let mut checked = 0;
    for n in 1..=360u64 {
        let ring = RingSpec::modular(n).expect("ring");
        for g in divisors(n).into_iter().filter(|&g| g != 1) {
            let ideal = Ideal::new(ring, g).expect("ideal");
            checked += 1;
            let fast = [
                ideal.is_prime(),
                ideal.is_primary(),
                ideal.is_two_absorbing(),
                ideal.is_two_absorbing_primary(),
            ]
            .map(|r| r.expect("proper ideal"));
            let mut brute = vec![
                ideal.is_prime_brute(Quantifier::AllElements),
                ideal.is_primary_brute(Quantifier::AllElements),
                ideal.is_two_absorbing_brute(Quantifier::AssociateClasses),
                ideal.is_two_absorbing_primary_brute(Quantifier::AssociateClasses),
            ];
            if n <= 96 {
                brute.push(ideal.is_two_absorbing_brute(Quantifier::AllElements));
                brute.push(ideal.is_two_absorbing_primary_brute(Quantifier::AllElements));
            }
            let brute: Vec<bool> = brute
                .into_iter()
                .map(|r| r.expect("proper ideal"))
                .collect();
            let expected = [fast[0], fast[1], fast[2], fast[3], fast[2], fast[3]];
            if brute.iter().zip(expected).any(|(b, f)| *b != f) {
                return Err(format!(
                    "Z/{n}, ideal ({g}): fast {fast:?}, brute {brute:?}"
                ));
            }
        }
    }
    Ok(format!("{checked} proper ideals"))
}

fn second_radical_modes() -> Outcome {
    let mut checked = 0;
    for m in corpus(64, CorpusFilter::All) {
        let lattice = SubLattice::enumerate(&m).expect("lattice");
        for i in 0..lattice.len() {
            let node = lattice.node(i);
            let definitional = lattice.node(lattice.second_radical(i));
            let socle = second_radical(node);
            checked += 1;
            if definitional != &socle {
                return Err(format!(
                    "{m:?} {node:?}: sum of seconds {definitional:?}, socle {socle:?}"
                ));
            }
            if i > 0 && socle.annihilator() != node.annihilator().radical() {
                return Err(format!(
                    "{m:?} {node:?}: Ann(sec N) differs from the radical of Ann(N)"
                ));
            }
        }
    }
    Ok(format!("{checked} submodules"))
}

fn ci_intersections() -> Outcome {
    let mut checked = 0;
    for m in corpus(64, CorpusFilter::All) {
        let lattice = SubLattice::enumerate(&m).expect("lattice");
        let ci = lattice.completely_irreducibles();
        for i in 0..lattice.full_index() {
            checked += 1;
            let meet = ci
                .iter()
                .filter(|&&l| lattice.le(i, l))
                .fold(lattice.full_index(), |acc, &l| lattice.meet(acc, l));
            if meet != i {
                return Err(format!(
                    "{m:?} {:?} is not the meet of the CI submodules above it",
                    lattice.node(i)
                ));
            }
        }
    }
    Ok(format!("{checked} proper submodules"))
}

fn search_reproduces_separation() -> Outcome {
    let out = bin()
        .args([
            "search",
            "strongly-2-abs-secondary",
            "2-abs-second",
            "--corpus",
            "8",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let witnesses = json["witnesses"].as_array().cloned().unwrap_or_default();
    let has_z8 = witnesses
        .iter()
        .any(|w| w["invariant_factors"] == serde_json::json!([8]) && w["is_full"] == true);
    let code = out.status.code();
    let detail = format!(
        "exit {code:?}, {} witnesses, Z8 listed {has_z8}",
        witnesses.len()
    );
    if code == Some(1) && has_z8 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn full_harness() -> Outcome {
    let start = Instant::now();
    let out = bin()
        .args(["check", "all", "--corpus", "48"])
        .output()
        .map_err(|e| e.to_string())?;
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let violations = json["total_violations"].as_u64().unwrap_or(u64::MAX);
    let summary = json["summary"].as_array().cloned().unwrap_or_default();
    let mut vacuity = Vec::new();
    for s in &summary {
        let id = s["theorem_id"].as_str().unwrap_or_default();
        for p in s["parts"].as_array().into_iter().flatten() {
            let part = p["part"].as_str().unwrap_or_default();
            if ["t9.4", "t9.5", "p9.12", "t9.8(d)"].contains(&part) {
                vacuity.push(format!(
                    "{part} {}/{} vacuous",
                    p["vacuous"], p["instances"]
                ));
            }
        }
        if id.is_empty() {
            return Err("malformed summary".into());
        }
    }
    let detail = format!(
        "{} modules, {} theorem ids, {violations} violations; {}",
        json["modules_checked"],
        summary.len(),
        vacuity.join(", ")
    );
    if out.status.code() == Some(0) && violations == 0 && summary.len() == 18 {
        within(Duration::from_secs(900), start, detail)
    } else {
        Err(detail)
    }
}

fn deterministic_output() -> Outcome {
    let run = |workers: &str| {
        bin()
            .args(["--workers", workers, "classify", "Z2^2 + Z4"])
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let many = run("4")?;
    if one.status.success() && !one.stdout.is_empty() && one.stdout == many.stdout {
        Ok(format!("{} identical bytes", one.stdout.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "1 example regression: Z6, Z10 vs Z6+Z10",
            example_regression,
        ),
        ("2 strongly 2-absorbing secondary modes agree", modes_agree),
        (
            "3 cyclic biconditional with 2-absorbing primary annihilators",
            annihilator_biconditional,
        ),
        ("4 ideal predicates: fast vs brute force", ideal_oracles),
        (
            "5 second radical: sum of seconds = socle, Ann(sec N) = rad Ann(N)",
            second_radical_modes,
        ),
        (
            "6 proper submodules are meets of completely irreducibles",
            ci_intersections,
        ),
        (
            "7 search finds the Z8 separation",
            search_reproduces_separation,
        ),
        ("8 check all --corpus 48", full_harness),
        (
            "9 classify output independent of workers",
            deterministic_output,
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
