//! Brute-force embedding oracle and random small structures.

use std::collections::BTreeSet;

use nkconfig::incidence::parse_configuration;
use nkconfig::Configuration;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Plain backtracking over Levi-graph nodes: pattern nodes in order
/// (points, then lines) go to unused host nodes of the same kind, and
/// every pair with an already assigned node of the other kind must agree
/// on incidence.
pub fn oracle_count(pattern: &Configuration, host: &Configuration) -> usize {
    let np = pattern.num_points();
    let nl = pattern.num_lines();
    let inc_p: Vec<Vec<bool>> = (0..np)
        .map(|p| (0..nl).map(|l| pattern.incident(p, l)).collect())
        .collect();
    let inc_h: Vec<Vec<bool>> = (0..host.num_points())
        .map(|p| (0..host.num_lines()).map(|l| host.incident(p, l)).collect())
        .collect();

    struct Ctx<'a> {
        np: usize,
        nl: usize,
        inc_p: &'a [Vec<bool>],
        inc_h: &'a [Vec<bool>],
        pts: Vec<usize>,
        lns: Vec<usize>,
    }

    fn go(ctx: &mut Ctx<'_>, i: usize) -> usize {
        if i == ctx.np + ctx.nl {
            return 1;
        }
        let mut total = 0;
        if i < ctx.np {
            for h in 0..ctx.inc_h.len() {
                if ctx.pts.contains(&h) {
                    continue;
                }
                ctx.pts.push(h);
                total += go(ctx, i + 1);
                ctx.pts.pop();
            }
        } else {
            let l = i - ctx.np;
            for h in 0..ctx.inc_h.first().map_or(0, Vec::len) {
                if ctx.lns.contains(&h) {
                    continue;
                }
                let ok = (0..ctx.np).all(|p| ctx.inc_p[p][l] == ctx.inc_h[ctx.pts[p]][h]);
                if !ok {
                    continue;
                }
                ctx.lns.push(h);
                total += go(ctx, i + 1);
                ctx.lns.pop();
            }
        }
        total
    }

    let mut ctx = Ctx {
        np,
        nl,
        inc_p: &inc_p,
        inc_h: &inc_h,
        pts: Vec::new(),
        lns: Vec::new(),
    };
    go(&mut ctx, 0)
}

/// Random linear structure: lines of size 2 or 3 on `n` points with any
/// two lines sharing at most one point.
pub fn random_host(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<usize>> {
    let mut lines: Vec<Vec<usize>> = Vec::new();
    let target = rng.gen_range(n / 2..=n);
    let mut tries = 0;
    while lines.len() < target && tries < 500 {
        tries += 1;
        let size = rng.gen_range(2..=3);
        let mut pts: Vec<usize> = (0..n).collect();
        pts.shuffle(rng);
        let mut line: Vec<usize> = pts[..size].to_vec();
        line.sort();
        let ok = lines.iter().all(|m| m.iter().filter(|p| line.contains(p)).count() <= 1);
        if ok {
            lines.push(line);
        }
    }
    lines
}

pub fn to_config(n_points: &[usize], lines: &[Vec<usize>]) -> Configuration {
    let mut text = String::from("structure\n");
    let on_lines: BTreeSet<usize> = lines.iter().flatten().copied().collect();
    let isolated: Vec<String> = n_points
        .iter()
        .filter(|p| !on_lines.contains(p))
        .map(|p| format!("P{p}"))
        .collect();
    if !isolated.is_empty() {
        text += &format!("points: {}\n", isolated.join(" "));
    }
    for (i, l) in lines.iter().enumerate() {
        let pts: Vec<String> = l.iter().map(|p| format!("P{p}")).collect();
        text += &format!("m{i}: {}\n", pts.join(" "));
    }
    parse_configuration(&text).unwrap()
}

/// A random host on 6 to 12 points and a pattern made of a few of its
/// points with the host lines through two of them.
pub fn random_case(rng: &mut ChaCha8Rng) -> (Configuration, Configuration) {
    let n = rng.gen_range(6..=12);
    let lines = random_host(rng, n);
    let all: Vec<usize> = (0..n).collect();
    let host = to_config(&all, &lines);

    // pattern: a few host points and the host lines through two of them
    let k = rng.gen_range(4..=6);
    let mut pts = all.clone();
    pts.shuffle(rng);
    let mut chosen: Vec<usize> = pts[..k].to_vec();
    chosen.sort();
    let sub: Vec<Vec<usize>> = lines
        .iter()
        .map(|l| l.iter().copied().filter(|p| chosen.contains(p)).collect::<Vec<_>>())
        .filter(|l| l.len() >= 2)
        .collect();
    let pattern = to_config(&chosen, &sub);
    (pattern, host)
}
