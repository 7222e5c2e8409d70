#![allow(dead_code)]

pub mod algebra;
pub mod coords;
pub mod embed;

use std::collections::BTreeSet;
use std::path::PathBuf;

use nkconfig::incidence::{parse_configuration, parse_document, Document};
use nkconfig::Configuration;

/// The corpus lives in the library crate; other crates reach it from
/// their own manifest directory.
pub fn fixtures_dir() -> PathBuf {
    let here = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    if here.join("fixtures").is_dir() {
        here.join("fixtures")
    } else {
        here.join("../core/fixtures")
    }
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.conf"))
}

pub fn load(name: &str) -> Configuration {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_configuration(&text).unwrap()
}

pub fn load_document(name: &str) -> Document {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_document(&text).unwrap()
}

pub const ORDER8: [&str; 5] = ["order8_a", "order8_b", "order8_c", "order8_d", "order8_e"];
pub const EXAMPLES: [&str; 4] = [
    "example_zero_var",
    "example_one_var",
    "example_two_var_a",
    "example_two_var_b",
];

/// Lines as sets of point labels, independent of the library's indexing.
pub fn line_sets(c: &Configuration) -> Vec<BTreeSet<String>> {
    (0..c.num_lines())
        .map(|l| c.points_on(l).iter().map(|&p| c.point_label(p).to_string()).collect())
        .collect()
}

/// Number of permutations of `points` mapping the line family onto a
/// line family `target`, by backtracking with a check on every line
/// whose points are all assigned.
pub fn count_line_maps(
    points: &[String],
    lines: &[BTreeSet<String>],
    target_points: &[String],
    target: &[BTreeSet<String>],
) -> usize {
    if points.len() != target_points.len() || lines.len() != target.len() {
        return 0;
    }
    let idx = |labels: &[String], s: &BTreeSet<String>| -> Vec<usize> {
        s.iter().map(|x| labels.iter().position(|y| y == x).unwrap()).collect()
    };
    let src: Vec<Vec<usize>> = lines.iter().map(|s| idx(points, s)).collect();
    let dst: BTreeSet<Vec<usize>> = target
        .iter()
        .map(|s| {
            let mut v = idx(target_points, s);
            v.sort();
            v
        })
        .collect();
    fn go(
        i: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        src: &[Vec<usize>],
        dst: &BTreeSet<Vec<usize>>,
    ) -> usize {
        let n = used.len();
        for line in src {
            if line.iter().all(|&p| p < i) {
                let mut v: Vec<usize> = line.iter().map(|&p| img[p]).collect();
                v.sort();
                if line.iter().max() == Some(&(i.wrapping_sub(1))) && !dst.contains(&v) {
                    return 0;
                }
            }
        }
        if i == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if !used[w] {
                used[w] = true;
                img[i] = w;
                total += go(i + 1, img, used, src, dst);
                used[w] = false;
            }
        }
        total
    }
    let n = points.len();
    go(0, &mut vec![0; n], &mut vec![false; n], &src, &dst)
}

/// Fano plane from the difference set {1, 2, 4} mod 7.
pub fn fano_by_difference_set() -> Vec<BTreeSet<String>> {
    (0..7)
        .map(|i| [1, 2, 4].iter().map(|d| ((i + d) % 7).to_string()).collect())
        .collect()
}

/// Example fixture, printed construction sequence, its free choices and
/// the minimal number of free steps.
pub const SEQUENCES: [(&str, &str, &[&str], usize); 4] = [
    (
        "example_zero_var",
        "ABCD - degikp - IK - b - FJ - aj - H - q - E - s - QR - cn - GNO - fhlmor - LMPS",
        &[],
        0,
    ),
    (
        "example_one_var",
        "ABCD - dikpqr - E - [f] - LRS - h - K - l - I - jo - GJO - bgmns - FHMNPQ - ace",
        &["f"],
        1,
    ),
    (
        "example_two_var_a",
        "ABCD - ajkp - F - [b] - [E] - d - JM - hr - NO - cgo - GKQ - eflnqs - HILPRS - im",
        &["b", "E"],
        2,
    ),
    (
        "example_two_var_b",
        "ABCD - gkpq - I - [a] - F - c - O - s - [E] - df - JQ - in - MNR - ehjor - GHKLPS - blm",
        &["a", "E"],
        2,
    ),
];

/// Regularity and the no-digon axiom by direct set arithmetic.
pub fn brute_force_nk(lines: &[BTreeSet<String>]) -> Option<(usize, usize)> {
    let points: BTreeSet<&String> = lines.iter().flatten().collect();
    let k = lines[0].len();
    if points.len() != lines.len() || lines.iter().any(|l| l.len() != k) {
        return None;
    }
    for p in &points {
        if lines.iter().filter(|l| l.contains(*p)).count() != k {
            return None;
        }
    }
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if a.intersection(b).count() > 1 {
                return None;
            }
        }
    }
    Some((lines.len(), k))
}

/// Two generating point permutations for each order-8 table.
pub const ORDER8_GENERATORS: [(&str, [&str; 2]); 5] = [
    (
        "order8_a",
        [
            "(A)(B,C)(D,E)(F,G)(H,I)(J,K)(L)(M)(N,O)(P,Q)(R,S)",
            "(A)(B)(C)(D)(E)(F,S)(G,R)(H,Q)(I,P)(J,O)(K,N)(L,M)",
        ],
    ),
    (
        "order8_b",
        [
            "(A)(B,C)(D,E)(F,G)(H,I)(J,K)(L,M)(N,O)(P,Q)(R,S)",
            "(A)(B,O)(C,N)(D)(E)(F,I)(G,H)(J,L)(K,M)(P,R)(Q,S)",
        ],
    ),
    (
        "order8_c",
        [
            "(A)(B)(C)(D,E)(F,G)(H,I)(J,K)(L,M)(N,O)(P,Q)(R,S)",
            "(A)(B,C)(D,I,E,H)(F,K,G,J)(L,N,M,O)(P,S,Q,R)",
        ],
    ),
    (
        "order8_d",
        [
            "(A)(B)(C)(D,E)(F,G)(H,I)(J,K)(L,M)(N,O)(P,Q)(R,S)",
            "(A,C)(B)(D,F,E,G)(H,N,I,O)(J,Q,K,P)(L,R,M,S)",
        ],
    ),
    (
        "order8_e",
        [
            "(A)(B)(C)(D,E)(F,G)(H,I)(J,K)(L,M)(N,O)(P,Q)(R,S)",
            "(A,B)(C)(D,F,E,G)(H,O,I,N)(J,Q,K,P)(L,R,M,S)",
        ],
    ),
];
