//! One PASS/FAIL line per acceptance criterion, with the tolerance and the
//! measured runtime. Criteria listed in `KNOWN_RED` are reported but do not
//! fail the run; any other failure does.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use common::algebra::{resultant_trial, sturm_trial};
use common::coords::{check_coordinates, check_rational_witness, p, printed, quadratic_coeffs, same_up_to_sign};
use common::embed::{oracle_count, random_case};
use common::*;
use nkconfig::construction::{
    check_sequence, find_projective_bases, plan_from_base, plan_min_free, ConstructionSequence,
};
use nkconfig::incidence::validate;
use nkconfig::polyalg::{resultant, Poly};
use nkconfig::realizer::*;
use nkconfig::subconfig::{enumerate_embeddings, PatternLibrary};
use nkconfig::symmetry::{automorphism_group, case_pairing, classify_group, is_self_duality, Correspondence};
use nkconfig::Configuration;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold as stated; see the README.
const KNOWN_RED: [&str; 2] = ["5d", "7c"];

const BUDGET: u64 = 100_000;

type Check = Result<String, String>;

struct Outcome {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    elapsed: Duration,
    result: Check,
}

fn run(id: &'static str, title: &'static str, limit_s: u64, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let result = f();
    Outcome {
        id,
        title,
        limit: Duration::from_secs(limit_s),
        elapsed: start.elapsed(),
        result,
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_fixtures() -> Check {
    let mut n = 0;
    for name in ORDER8.iter().chain(EXAMPLES.iter()) {
        let c = load(name);
        ensure(validate(&c, 19, 4).certified, || format!("{name} is not a (19_4)"))?;
        ensure(brute_force_nk(&line_sets(&c)) == Some((19, 4)), || {
            format!("{name}: brute force disagrees")
        })?;
        n += 1;
    }
    for (name, v, k) in [("fano", 7, 3), ("pappus", 9, 3)] {
        let c = load(name);
        ensure(validate(&c, v, k).certified, || format!("{name} is not a ({v}_{k})"))?;
        ensure(brute_force_nk(&line_sets(&c)) == Some((v, k)), || {
            format!("{name}: brute force disagrees")
        })?;
    }
    Ok(format!("{n} tables certify as (19_4), Fano as (7_3), Pappus as (9_3)"))
}

fn c2_symmetry() -> Check {
    let mut types = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, gens) in ORDER8_GENERATORS {
        let c = load(name);
        let t = Instant::now();
        let g = automorphism_group(&c);
        slowest = slowest.max(t.elapsed());
        ensure(g.order() == 8, || format!("{name}: group order {}", g.order()))?;
        for text in gens {
            let s = Correspondence::from_point_permutation(&c, text).map_err(|e| format!("{name}: {e}"))?;
            ensure(s.preserves_incidence(&c) && g.contains(&s), || {
                format!("{name}: {text} is not an automorphism")
            })?;
        }
        let pairing = case_pairing(&c).map_err(|e| e.to_string())?;
        ensure(is_self_duality(&c, &pairing).unwrap_or(false), || {
            format!("{name}: (A,a)...(S,s) is not a self-duality")
        })?;
        types.push(classify_group(&g).map_err(|e| e.to_string())?);
    }
    ensure(types[0] == "Z2^3", || format!("order8_a classifies as {}", types[0]))?;
    ensure(slowest < Duration::from_secs(30), || {
        format!("slowest group search {slowest:?}")
    })?;
    Ok(format!(
        "order 8 for all five, types {}, 10 generators and 5 case pairings verified, slowest search {:.2} s (limit 30 s)",
        types.join("/"),
        slowest.as_secs_f64()
    ))
}

fn c3_sequences() -> Check {
    let mut counts = Vec::new();
    for (name, text, _, free) in SEQUENCES {
        let c = load(name);
        let s = ConstructionSequence::parse(&c, text).map_err(|e| format!("{name}: {e}"))?;
        check_sequence(&c, &s).map_err(|e| format!("{name}: {e}"))?;
        ensure(s.to_text(&c) == text, || {
            format!("{name}: printed sequence does not round-trip")
        })?;
        ensure(s.free_count() == free, || {
            format!("{name}: printed sequence has {} free steps", s.free_count())
        })?;
        let plan = plan_min_free(&c, BUDGET).map_err(|e| format!("{name}: {e}"))?;
        ensure(plan.free_count == free && !plan.exhausted, || {
            format!("{name}: planner found {} free steps", plan.free_count)
        })?;
        counts.push(plan.free_count.to_string());
    }
    Ok(format!(
        "planner free counts {}, all printed sequences validate",
        counts.join(", ")
    ))
}

fn embeddings(pattern: &Configuration, host: &Configuration) -> usize {
    enumerate_embeddings(pattern, host, None).embeddings.len()
}

fn c4_subconfigurations() -> Check {
    let lib = PatternLibrary::new();
    for name in EXAMPLES {
        let host = load(name);
        for (pname, pat) in [("non-Pappus", &lib.non_pappus), ("non-Desargues", &lib.non_desargues)] {
            let n = embeddings(pat, &host);
            ensure(n == 0, || format!("{pname} embeds {n} times in {name}"))?;
        }
    }
    let mut selfs = Vec::new();
    for name in ["pappus", "desargues"] {
        let c = load(name);
        let (got, want) = (embeddings(&c, &c), oracle_count(&c, &c));
        ensure(got == want, || {
            format!("{name} in itself: {got} embeddings, oracle {want}")
        })?;
        selfs.push(format!("{name} {got}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..50 {
        let (pattern, host) = random_case(&mut rng);
        let (got, want) = (embeddings(&pattern, &host), oracle_count(&pattern, &host));
        ensure(got == want, || {
            format!("random case {i}: {got} embeddings, oracle {want}")
        })?;
    }
    Ok(format!(
        "no violations in the 4 example tables; self-embeddings {} match the oracle; 50 random structures agree",
        selfs.join(", ")
    ))
}

fn c5a_zero_variables() -> Check {
    let (c, s) = printed("example_zero_var");
    let v = realize(&c, &s, RealizeOptions::default()).map_err(|e| e.to_string())?;
    ensure(v.status == Status::NotRealizable && v.variables == 0, || {
        format!("{:?} with {} variables", v.status, v.variables)
    })?;
    let cert = &v.branches[0].certificate;
    check_certificate(cert).map_err(|e| e.to_string())?;
    for (point, line) in [("R", "h"), ("H", "o")] {
        let named = cert.iter().any(|st| {
            matches!(st, CertStep::ZeroInequality { provenance: Provenance::NonIncidence { point: q, line: l }, .. }
                if q == point && l == line)
        });
        ensure(named, || format!("certificate does not name {point}-{line}"))?;
    }
    Ok("NOT_REALIZABLE, 0 variables, certificate names R-h and H-o".into())
}

fn c5b_one_variable() -> Check {
    let (c, s) = printed("example_one_var");
    let bs = replay(&c, &s, Normalization::Reduced);
    let finite = bs.iter().find(|b| b.label() == "f: finite").ok_or("no finite branch")?;
    check_coordinates(
        &c,
        finite,
        &[
            ("d", ["-1", "1", "0"]),
            ("i", ["1", "0", "-1"]),
            ("E", ["1", "1", "0"]),
            ("L", ["theta - 1", "-1", "-1"]),
            ("R", ["0", "theta", "1"]),
            ("S", ["1", "theta + 1", "1"]),
        ],
    )?;
    let v = realize(&c, &s, RealizeOptions::default()).map_err(|e| e.to_string())?;
    ensure(v.status == Status::NotRealizable && v.variables == 1, || {
        format!("{:?} with {} variables", v.status, v.variables)
    })?;
    let b = v
        .branches
        .iter()
        .find(|b| b.label == "f: finite")
        .ok_or("no finite verdict")?;
    let zero = b.certificate.iter().find_map(|st| match st {
        CertStep::ZeroInequality { poly, provenance } if poly.is_zero() => Some(provenance.to_string()),
        _ => None,
    });
    let zero = zero.ok_or("no inequality reduces to 0")?;
    Ok(format!(
        "coordinates d, i, E, L, R, S match; inequality {zero} reduces to 0 != 0"
    ))
}

fn c5c_two_variables_a() -> Check {
    let (c, s) = printed("example_two_var_a");
    let opts = RealizeOptions {
        normalization: Normalization::Raw,
        max_vars: 2,
    };
    let bs = replay(&c, &s, Normalization::Raw);
    let main = bs
        .iter()
        .find(|b| b.label() == "b: finite, E: finite")
        .ok_or("no finite branch")?;
    let iq = main.system.find("I-q").ok_or("no I-q equality")?;
    let expected = &p("theta^2*vartheta") * &p("vartheta - 1").pow(3);
    ensure(same_up_to_sign(&iq.poly, &expected), || format!("I-q is {}", iq.poly))?;
    let v = realize(&c, &s, opts).map_err(|e| e.to_string())?;
    ensure(v.status == Status::NotRealizable, || format!("{:?}", v.status))?;
    let cert = &v
        .branches
        .iter()
        .find(|b| b.label == "b: finite, E: finite")
        .ok_or("no verdict")?
        .certificate;
    let by: Vec<String> = cert
        .iter()
        .filter_map(|st| match st {
            CertStep::Cancel {
                provenance, by, factor, ..
            } if provenance.to_string() == "I-q" => Some(format!("{factor} by {by}")),
            _ => None,
        })
        .collect();
    ensure(by.len() == 3, || format!("I-q cancelled by {by:?}"))?;
    for b in &v.branches {
        check_certificate(&b.certificate).map_err(|e| format!("{}: {e}", b.label))?;
    }
    Ok(format!(
        "I-q = theta^2*vartheta*(vartheta - 1)^3 up to sign, closed by {}",
        by.join(", ")
    ))
}

/// The two quadratics in vartheta, after removing the common factor.
fn two_var_b_quadratics() -> (Poly, Poly) {
    let quadratic = |a: &str, b: &str, c: &str| &(&(&p(a) * &p("vartheta^2")) - &(&p(b) * &p("vartheta"))) + &p(c);
    (
        quadratic("2*theta^2 + 3*theta + 1", "2*theta^2 + 3*theta + 1", "theta"),
        quadratic(
            "3*theta^3 + 3*theta^2 - theta - 1",
            "2*theta^3 + 5*theta^2 - 2",
            "theta^2 + theta - 1",
        ),
    )
}

fn two_var_b_elimination() -> Result<(Poly, Poly, Verdict), String> {
    let (c, s) = printed("example_two_var_b");
    let v = realize(&c, &s, RealizeOptions::default()).map_err(|e| e.to_string())?;
    let cert = &v
        .branches
        .iter()
        .find(|b| b.label == "a: finite, E: finite")
        .ok_or("no verdict")?
        .certificate;
    let (num, den) = cert
        .iter()
        .find_map(|st| match st {
            CertStep::Eliminate {
                numerator, denominator, ..
            } => Some((numerator.clone(), denominator.clone())),
            _ => None,
        })
        .ok_or("no elimination step")?;
    Ok((num, den, v))
}

fn c5d_two_variables_b() -> Check {
    let (c, s) = printed("example_two_var_b");
    let bs = replay(&c, &s, Normalization::Raw);
    let main = bs
        .iter()
        .find(|b| b.label() == "a: finite, E: finite")
        .ok_or("no finite branch")?;
    let common = p("theta*vartheta + vartheta - 1");
    let (q1, q2) = two_var_b_quadratics();
    for (label, q) in [("L-r", &q1), ("G-j", &q2)] {
        let e = &main.system.find(label).ok_or(format!("no {label}"))?.poly;
        let rest = e.exact_div(&common).ok_or(format!("{label} lacks the common factor"))?;
        ensure(same_up_to_sign(&rest, q), || {
            format!("{label}/(theta*vartheta + vartheta - 1) = {rest}")
        })?;
    }
    let (num, den, v) = two_var_b_elimination()?;
    ensure(v.status == Status::NotRealizable, || format!("{:?}", v.status))?;
    for b in &v.branches {
        check_certificate(&b.certificate).map_err(|e| format!("{}: {e}", b.label))?;
    }
    // independent common root of the two quadratics
    let [a0, a1, a2] = quadratic_coeffs(&q1);
    let [b0, b1, b2] = quadratic_coeffs(&q2);
    let (on, od) = (&(&a2 * &b0) - &(&a0 * &b2), &(&a1 * &b2) - &(&a2 * &b1));
    ensure(&num * &od == &on * &den, || {
        "elimination disagrees with the common-root formula".into()
    })?;
    let printed_num = p("theta^3 - 3*theta^2 + 1");
    let printed_den = &p("2*theta + 1") * &p("theta^3 - 2*theta^2 - theta + 3");
    let found = format!("vartheta = ({num})/({den})");
    ensure(&num * &printed_den == &printed_num * &den, || {
        let ours = &p("2*theta + 1") * &p("theta^3 - 2*theta^2 - theta + 1");
        let factored = if same_up_to_sign(&den, &ours) {
            " = (2*theta + 1)*(theta^3 - 2*theta^2 - theta + 1)"
        } else {
            ""
        };
        format!(
            "{found}, denominator{factored}; the stated denominator has +3 in the cubic factor and is not proportional"
        )
    })?;
    Ok(found)
}

fn c6_controls() -> Check {
    let pappus = load("pappus");
    let v = realize_planned(&pappus, BUDGET, RealizeOptions::default()).map_err(|e| e.to_string())?;
    ensure(v.status == Status::Realizable, || format!("Pappus {:?}", v.status))?;
    let w = v.witness.as_ref().ok_or("Pappus has no witness")?;
    check_rational_witness(&pappus, w)?;
    let fano = realize_planned(&load("fano"), BUDGET, RealizeOptions::default()).map_err(|e| e.to_string())?;
    ensure(fano.status == Status::NotRealizable, || {
        format!("Fano {:?}", fano.status)
    })?;

    let names: Vec<String> = {
        let mut v: Vec<String> = std::fs::read_dir(fixtures_dir())
            .map_err(|e| e.to_string())?
            .filter_map(|e| e.ok()?.path().file_stem()?.to_str().map(str::to_string))
            .collect();
        v.sort();
        v
    };
    let mut skipped = Vec::new();
    for name in &names {
        let c = load(name);
        let planned = realize_planned(&c, BUDGET, RealizeOptions::default()).map_err(|e| e.to_string())?;
        ensure(planned.status != Status::Undecided, || {
            format!("{name} planned: UNDECIDED")
        })?;
        for (side, k) in [("primal", c.clone()), ("dual", c.dual())] {
            let min_free = plan_min_free(&k, BUDGET).map_err(|e| e.to_string())?.free_count;
            let limit = min_free.max(2);
            let mut used = 0;
            for base in find_projective_bases(&k) {
                if used == 3 {
                    break;
                }
                let plan = plan_from_base(&k, base, BUDGET);
                if plan.free_count > limit {
                    skipped.push(format!("{name}/{side}/{}", base.labels(&k).concat()));
                    continue;
                }
                let v = realize(&k, &plan.sequence, RealizeOptions::default()).map_err(|e| e.to_string())?;
                ensure(v.status == planned.status, || {
                    format!(
                        "{name} {side} base {}: {:?}, planned {:?}",
                        base.labels(&k).concat(),
                        v.status,
                        planned.status
                    )
                })?;
                used += 1;
            }
            ensure(used == 3, || format!("{name} {side}: only {used} eligible bases"))?;
        }
    }
    Ok(format!(
        "Pappus REALIZABLE with an independently checked exact witness, Fano NOT_REALIZABLE; {} fixtures agree on 3 bases each, primal and dual; skipped bases needing more free steps: {}",
        names.len(),
        if skipped.is_empty() { "none".to_string() } else { skipped.join(", ") }
    ))
}

fn c7ab_kernel() -> Check {
    let n = sturm_trial(0x5eed, 1000)?;
    let t = resultant_trial(0xbeef, 200)?;
    Ok(format!(
        "Sturm counts agree with the grid on {n} polynomials; resultant vanishing matches the gcd on {} pairs ({} with a common factor, {} Sylvester specializations)",
        t.pairs, t.shared, t.evaluations
    ))
}

/// `q(num/den) * den^2` for a quadratic `q` in vartheta.
fn substitute(q: &Poly, num: &Poly, den: &Poly) -> Poly {
    let [c0, c1, c2] = quadratic_coeffs(q);
    &(&(&c2 * &(num * num)) + &(&c1 * &(num * den))) + &(&c0 * &(den * den))
}

fn c7c_substitution() -> Check {
    let (q1, q2) = two_var_b_quadratics();
    let printed_num = p("theta^3 - 3*theta^2 + 1");
    let printed_den = &p("2*theta + 1") * &p("theta^3 - 2*theta^2 - theta + 3");
    let (num, den, _) = two_var_b_elimination()?;
    let res = resultant(&q1, &q2, 1).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    let mut identically = true;
    for (what, n, d) in [("stated", &printed_num, &printed_den), ("computed", &num, &den)] {
        for (label, q) in [("first", &q1), ("second", &q2)] {
            let r = substitute(q, n, d);
            if !r.is_zero() {
                identically = false;
                let modulo = if res.divides(&r) {
                    ", a multiple of the resultant"
                } else {
                    ""
                };
                notes.push(format!(
                    "{what} into {label}: degree {} in theta{modulo}",
                    r.total_degree().unwrap_or(0)
                ));
            }
        }
    }
    if identically {
        Ok("both substitutions vanish identically".into())
    } else {
        Err(format!(
            "nonzero residues: {}; the resultant {res} is not identically zero",
            notes.join("; ")
        ))
    }
}

fn c8_determinism() -> Check {
    let dir = fixtures_dir();
    let report = || {
        Command::new(env!("CARGO_BIN_EXE_nkconf"))
            .arg("report")
            .arg(&dir)
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (report()?, report()?);
    ensure(a.status.success() && b.status.success(), || "report failed".into())?;
    ensure(a.stdout == b.stdout, || "the two reports differ".into())?;
    let lines = a.stdout.iter().filter(|&&c| c == b'\n').count();
    let files: BTreeSet<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().extension().is_some_and(|x| x == "conf"))
        .map(|e| e.path())
        .collect();
    ensure(lines == files.len(), || {
        format!("{lines} report lines for {} files", files.len())
    })?;
    Ok(format!(
        "two runs over {} fixtures, {} bytes each, identical",
        files.len(),
        a.stdout.len()
    ))
}

fn main() {
    let outcomes = [
        run("1", "fixture validation", 1, c1_fixtures),
        run("2", "symmetry", 150, c2_symmetry),
        run("3", "construction sequences", 600, c3_sequences),
        run("4", "subconfiguration filter", 600, c4_subconfigurations),
        run("5a", "realizability, zero variables", 60, c5a_zero_variables),
        run("5b", "realizability, one variable", 60, c5b_one_variable),
        run("5c", "realizability, closing equation", 60, c5c_two_variables_a),
        run("5d", "realizability, elimination", 60, c5d_two_variables_b),
        run("6", "realizability controls and invariance", 1800, c6_controls),
        run("7ab", "Sturm and resultant oracles", 600, c7ab_kernel),
        run("7c", "substitution of the eliminated value", 60, c7c_substitution),
        run("8", "report determinism", 600, c8_determinism),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let in_time = o.elapsed <= o.limit;
        let (verdict, detail) = match (&o.result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over the time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!(
            "{verdict} [{}] {} ({:.2} s, limit {} s): {detail}",
            o.id,
            o.title,
            o.elapsed.as_secs_f64(),
            o.limit.as_secs()
        );
        let red = KNOWN_RED.contains(&o.id);
        if verdict == "FAIL" && !red {
            unexpected.push(o.id);
        }
        if verdict == "PASS" && red {
            println!("NOTE [{}] listed as known red but passed", o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {}", unexpected.join(", "));
        std::process::exit(1);
    }
}
