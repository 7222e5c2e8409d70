mod common;

use std::collections::BTreeSet;

use common::embed::{oracle_count, random_case};
use common::{load, EXAMPLES};
use nkconfig::subconfig::{enumerate_embeddings, theorem_compatible, PatternLibrary};
use nkconfig::Configuration;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn library_count(pattern: &Configuration, host: &Configuration) -> usize {
    let s = enumerate_embeddings(pattern, host, None);
    assert!(!s.truncated);
    for e in &s.embeddings {
        assert!(e.is_induced(pattern, host));
    }
    let distinct: BTreeSet<_> = s.embeddings.iter().collect();
    assert_eq!(distinct.len(), s.embeddings.len(), "duplicate embeddings");
    s.embeddings.len()
}

#[test]
fn self_embeddings_match_oracle() {
    let pappus = load("pappus");
    let desargues = load("desargues");
    let n = library_count(&pappus, &pappus);
    assert_eq!(n, oracle_count(&pappus, &pappus));
    assert_eq!(n, 108);
    let n = library_count(&desargues, &desargues);
    assert_eq!(n, oracle_count(&desargues, &desargues));
    assert_eq!(n, 120);
}

#[test]
fn pappus_host_has_no_violation() {
    let pappus = load("pappus");
    let lib = PatternLibrary::new();
    assert_eq!(library_count(&lib.non_pappus, &pappus), 0);
    assert_eq!(oracle_count(&lib.non_pappus, &pappus), 0);
    let r = theorem_compatible(&pappus);
    assert!(r.pappus && r.desargues);
}

#[test]
fn example_tables_have_no_violation() {
    let lib = PatternLibrary::new();
    for name in EXAMPLES {
        let host = load(name);
        assert_eq!(library_count(&lib.non_pappus, &host), 0, "{name}");
        assert_eq!(library_count(&lib.non_desargues, &host), 0, "{name}");
        let r = theorem_compatible(&host);
        assert!(r.pappus && r.desargues, "{name}");
    }
}

#[test]
fn synthetic_host_fails_pappus() {
    let host = load("synthetic_non_pappus");
    let lib = PatternLibrary::new();
    let r = theorem_compatible(&host);
    assert!(!r.pappus);
    let v = r.pappus_violation.unwrap();
    assert!(v.is_induced(&lib.non_pappus, &host));
    // the completed Pappus figure itself does not occur
    assert_eq!(library_count(&lib.pappus, &host), 0);
}

#[test]
fn random_structures_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonzero = 0;
    for _ in 0..50 {
        let (pattern, host) = random_case(&mut rng);
        let got = library_count(&pattern, &host);
        assert_eq!(got, oracle_count(&pattern, &host));
        if got > 0 {
            nonzero += 1;
        }
    }
    assert!(nonzero >= 25, "sampler produced too few nontrivial cases");
}

#[test]
fn counts_invariant_under_relabeling_and_duality() {
    let lib = PatternLibrary::new();
    let pappus = load("pappus");
    let host = load("synthetic_non_pappus");
    let relabeled = host.relabeled(|p| format!("Q{p}"), |l| format!("z{l}")).unwrap();
    for pattern in [&lib.non_pappus, &lib.pappus] {
        assert_eq!(library_count(pattern, &host), library_count(pattern, &relabeled));
    }
    let a = library_count(&lib.non_pappus, &host);
    let b = library_count(&lib.non_pappus.dual(), &host.dual());
    assert_eq!(a, b);
    assert_eq!(
        library_count(&pappus, &pappus),
        library_count(&pappus.dual(), &pappus.dual())
    );
}
