//! Acceptance suite. Every check is exact; each criterion prints one line
//! with its verdict and wall-clock time and fails if it exceeds its budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use homred::arith::{floor, rat_pow, Rational};
use homred::code::{build_potts_code, weight_enumerator};
use homred::convex::{whom_via_csp, Side};
use homred::csp::{compile_weight_gadget, count_csp, Constraint, CspInstance, WeightedCspInstance};
use homred::graph::two_stretch;
use homred::hardness::{
    build_cut_to_j3star, build_cut_to_whom, build_jq_to_hyperpotts, build_potts_to_jq, jq_to_hyperpotts,
    multiterminal_cuts, recovered, uniformize, Materialised,
};
use homred::hom::{complete_bipartite_whom, count_hom, count_whom, walk_table, WeightTable};
use homred::pattern::{classify_tree, find_induced_j3, TreeClass};
use homred::potts::{count_proper_colourings, potts_graph, random_cluster_oracle, reduce_potts_to_bqcol, PottsParams};
use homred::target::{build_target_tree, TreeKind};
use homred::{Graph, Hypergraph};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_weight(rng: &mut ChaCha8Rng, zero_chance: f64) -> Rational {
    if rng.gen_bool(zero_chance) {
        Rational::zero()
    } else {
        rat(rng.gen_range(1..=7), rng.gen_range(1..=4))
    }
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, h: usize, zero_chance: f64) -> WeightTable {
    let rows = (0..n)
        .map(|_| (0..h).map(|_| random_weight(rng, zero_chance)).collect())
        .collect();
    WeightTable::new(h, rows).unwrap()
}

fn walk_table_exact() -> Result<String, String> {
    let expected: [(&str, [u32; 6]); 13] = [
        ("w", [3, 3, 12, 3, 6, 24]),
        ("x0", [2, 7, 2, 2, 9, 13]),
        ("x1", [6, 1, 2, 6, 7, 39]),
        ("x2.1", [1, 5, 1, 1, 6, 7]),
        ("y0", [2, 6, 14, 2, 8, 24]),
        ("y1", [5, 13, 2, 5, 18, 40]),
        ("y2.1", [4, 4, 10, 4, 8, 30]),
        ("y3.1.1", [1, 3, 4, 1, 4, 8]),
        ("z0", [2, 5, 11, 2, 7, 20]),
        ("z1", [4, 10, 20, 4, 14, 46]),
        ("z2.1", [4, 9, 7, 4, 13, 32]),
        ("z3.1.1", [3, 3, 7, 3, 6, 19]),
        ("z4.1.1.1", [1, 2, 3, 1, 3, 6]),
    ];
    let rows = walk_table();
    ensure!(rows.len() == 13, "expected 13 rows, got {}", rows.len());
    for (row, (label, want)) in rows.iter().zip(expected) {
        let got: Vec<BigUint> = row.profile.d.iter().chain(&row.profile.w).cloned().collect();
        let want: Vec<BigUint> = want.iter().map(|&x| BigUint::from(x)).collect();
        ensure!(row.label == label && got == want, "row {label}: got {} {:?}", row.label, got);
    }
    Ok("78 entries".into())
}

fn p4_bis_identity() -> Result<String, String> {
    let p4 = Graph::path(4);
    let mut checked = 0;
    for n in 1..=6 {
        for g in connected_bipartite_graphs(n) {
            let want = BigUint::from(2 * independent_sets(&g));
            ensure!(count_hom(&g, &p4) == want, "mismatch on {:?}", g.edges());
            checked += 1;
        }
    }
    Ok(format!("{checked} non-isomorphic connected bipartite graphs"))
}

fn complete_bipartite_closed_form() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let targets = [
        Graph::complete_bipartite(1, 3),
        Graph::complete_bipartite(2, 2),
        Graph::complete_bipartite(2, 3),
    ];
    for i in 0..100 {
        let h = &targets[i % 3];
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.45);
        let w = random_weights(&mut rng, n, h.n(), 0.15);
        let closed = ok(complete_bipartite_whom(&g, h, &w))?;
        let direct = ok(count_whom(&g, h, &w))?;
        ensure!(closed == direct, "instance {i}: {closed} vs {direct}");
        ensure!(direct == naive_whom(&g, h, &w), "instance {i}: oracle disagrees");
    }
    Ok("100 instances".into())
}

fn weight_gadget() -> Result<String, String> {
    let running = ok(WeightedCspInstance::new(
        CspInstance::new(2, vec![Constraint::Imp(0, 1)]).unwrap(),
        vec![[rat(5, 1), rat(2, 1)], [rat(1, 1), rat(1, 1)]],
    ))?;
    let c = ok(compile_weight_gadget(&running))?;
    ensure!(count_csp(&c.csp) == BigUint::from(12u32), "running example count");
    ensure!(satisfying(&c.csp).len() == 12, "running example oracle");
    let sub = |b, i| count_csp(&c.block(0, b, i).expect("block exists").sub_instance());
    ensure!(sub(0, 1) == BigUint::from(4u32), "block (0,1) has {}", sub(0, 1));
    ensure!(sub(1, 2) == BigUint::from(6u32), "block (1,2) has {}", sub(1, 2));

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..200 {
        let n = rng.gen_range(1..=4);
        let mut cs = Vec::new();
        for _ in 0..rng.gen_range(0..=4) {
            cs.push(Constraint::Imp(rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        if rng.gen_bool(0.2) {
            cs.push(Constraint::Pin1(rng.gen_range(0..n)));
        }
        let csp = CspInstance::new(n, cs).unwrap();
        let weights: Vec<[Rational; 2]> = (0..n)
            .map(|_| [rat(rng.gen_range(1..=31), 1), rat(rng.gen_range(1..=31), 1)])
            .collect();
        let inst = ok(WeightedCspInstance::new(csp.clone(), weights.clone()))?;
        let compiled = ok(compile_weight_gadget(&inst))?;
        let want = naive_wcsp(&csp, &weights);
        ensure!(urat(&count_csp(&compiled.csp)) == want, "instance {i}: compiled count differs from {want}");
    }
    Ok("running example 12, sub-counts 4 and 6, 200 random instances".into())
}

fn j3_free_tree(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(1..=8);
        let t = random_tree(rng, n);
        if classify_tree(&t).unwrap() != TreeClass::ContainsJ3 {
            return t;
        }
    }
}

fn convex_reduction() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut disconnected, mut odd, mut zeros) = (0, 0, 0);
    for i in 0..100 {
        let h = j3_free_tree(&mut rng);
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.4);
        let w = random_weights(&mut rng, n, h.n(), 0.2);
        disconnected += !g.is_connected() as usize;
        odd += !g.is_bipartite() as usize;
        zeros += w.rows().iter().flatten().any(Zero::is_zero) as usize;
        let via = ok(whom_via_csp(&g, &w, &h))?;
        ensure!(via == ok(count_whom(&g, &h, &w))?, "instance {i}: evaluator disagrees");
        ensure!(via == naive_whom(&g, &h, &w), "instance {i}: oracle disagrees");
    }
    ensure!(disconnected > 0 && odd > 0 && zeros > 0, "sample lacks a required case");
    Ok(format!("100 instances ({disconnected} disconnected, {odd} non-bipartite, {zeros} with zeros)"))
}

fn cut_gadget() -> Result<String, String> {
    let mut lines = Vec::new();
    for (name, g, t, n_cuts) in [("K13", Graph::star(3), [1, 2, 3], 3u32), ("P3", Graph::path(3), [0, 1, 2], 1)] {
        let cut = ok(multiterminal_cuts(&g, t[0], t[1], t[2]))?;
        ensure!(cut.count == BigUint::from(n_cuts), "{name}: N = {}", cut.count);
        for q in [3, 4] {
            let h = ok(build_target_tree(TreeKind::Junction(q)))?.graph;
            let red = ok(build_cut_to_whom(&cut, &h, &ok(find_induced_j3(&h))?))?;
            let cert = ok(red.certify())?;
            let ratio = cert.ratio();
            let n = Rational::from_integer(n_cuts.into());
            ensure!(n <= ratio && ratio <= &n + rat(1, 4), "{name}/J{q}: ratio {ratio} outside the window");
            ensure!(recovered(&cert) == BigInt::from(n_cuts), "{name}/J{q}: floor");
        }
        lines.push(format!("{name}: N={n_cuts}"));
    }
    Ok(lines.join(", "))
}

/// Smallest `s` with `8 q (q+1)^(n+m) 2^s <= q^s`.
fn min_tocol_s(q: u32, n: u32, m: u32) -> u64 {
    let lhs = BigUint::from(8 * q) * BigUint::from(q + 1).pow(n + m);
    (0u32..).find(|&s| &lhs << s as usize <= BigUint::from(q).pow(s)).unwrap() as u64
}

fn potts_to_jq() -> Result<String, String> {
    let mut lines = Vec::new();
    for (name, g) in [("K2", Graph::path(2)), ("P3", Graph::path(3))] {
        let red = ok(build_potts_to_jq(&g, 3))?;
        let s = red.constant("s").unwrap();
        ensure!(s == min_tocol_s(3, g.n() as u32, g.m() as u32), "{name}: s = {s} is not minimal");
        ensure!(name != "K2" || s == 19, "K2: s = {s}");
        let cert = ok(red.certify())?;
        let z = naive_potts(&g, 3, &rat(1, 1));
        let q_s = Rational::from_integer(BigInt::from(3u32).pow(s as u32));
        ensure!(cert.counters["Z^t"].0 == &q_s * &z, "{name}: typical count");
        let ratio = cert.ratio();
        ensure!(z <= ratio && ratio <= &z + rat(1, 4), "{name}: sandwich");
        lines.push(format!("{name}: s={s}"));
    }
    Ok(lines.join(", "))
}

fn jq_to_hyperpotts_identity() -> Result<String, String> {
    let mut checked = 0;
    for n in 2..=7 {
        for b in connected_bipartite_by_split(n) {
            for side in [Side::Left, Side::Right] {
                let hg = ok(build_jq_to_hyperpotts(&b, side))?;
                for q in [2, 3] {
                    let red = ok(jq_to_hyperpotts(&b, q, side))?;
                    let value = ok(red.value())?;
                    ensure!(value == naive_hyperpotts(&hg, q, &rat(1, 1)), "{:?} q={q}", b.edges());
                }
            }
            checked += 1;
        }
    }
    let c4 = Graph::cycle(4).unwrap();
    let hg = ok(build_jq_to_hyperpotts(&c4, Side::Left))?;
    ensure!(hg.m() == 2 && hg.edges()[0] == hg.edges()[1], "C4 should give a duplicated hyperedge");
    for q in [2, 3] {
        let value = ok(ok(jq_to_hyperpotts(&c4, q, Side::Left))?.value())?;
        ensure!(value == naive_hyperpotts(&hg, q, &rat(1, 1)), "C4 q={q}");
    }
    Ok(format!("{checked} graphs, both sides, q in {{2,3}}, C4 duplicate case"))
}

fn uniformisation() -> Result<String, String> {
    let inputs = [
        Hypergraph::new(3, [vec![0, 1, 2], vec![0, 1]]).unwrap(),
        Hypergraph::new(4, [vec![0], vec![1, 2], vec![0, 1, 2, 3]]).unwrap(),
        Hypergraph::new(4, [vec![0, 1], vec![0, 1], vec![1, 2, 3]]).unwrap(),
    ];
    for (i, hg) in inputs.iter().enumerate() {
        for gamma in [rat(1, 1), rat(1, 2)] {
            let red = ok(uniformize(hg, 2, &gamma))?;
            let cert = ok(red.certify())?;
            let Materialised::Hypergraph(out) = ok(red.materialise())? else {
                return Err("expected a hypergraph".into());
            };
            ensure!(out.is_uniform(), "input {i}: output is not uniform");
            ensure!(cert.value.0 == naive_hyperpotts(&out, 2, &gamma), "input {i}: value");
            let z = naive_hyperpotts(hg, 2, &gamma);
            let ratio = cert.ratio();
            ensure!(z <= ratio && ratio <= &z + rat(1, 4), "input {i} gamma {gamma}: sandwich");
        }
    }
    Ok("3 hypergraphs, gamma in {1, 1/2}".into())
}

fn j3star_hardness() -> Result<String, String> {
    let g = Graph::star(3);
    let cut = ok(multiterminal_cuts(&g, 1, 2, 3))?;
    let red = ok(build_cut_to_j3star(&cut))?;
    let j3s = ok(build_target_tree(TreeKind::J3Star))?.graph;
    ensure!(j3s.n() == 58, "J3* has {} vertices", j3s.n());
    let (s, r) = (red.constant("s").unwrap(), red.constant("r").unwrap());
    ensure!(s == 14, "s = {s}");
    let exp = (g.n() as u64 + s * g.m() as u64 + 7) as u32;
    let bound = BigUint::from(8u32) * BigUint::from(58u32).pow(exp);
    let holds = |r: u32| BigUint::from(46u32).pow(r) >= &bound * BigUint::from(40u32).pow(r);
    ensure!(holds(r as u32) && !holds(r as u32 - 1), "r = {r} is not minimal");
    let z_star = BigUint::from(2u32).pow((s * (g.m() - cut.b) as u64) as u32) * BigUint::from(4968u32).pow(r as u32);
    ensure!(red.scale() == &urat(&z_star), "Z* differs");
    let cert = ok(red.certify())?;
    let ratio = cert.ratio();
    ensure!(rat(3, 1) <= ratio && ratio <= rat(13, 4), "sandwich fails");
    ensure!(floor(&ratio) == BigInt::from(3), "floor");
    Ok(format!("s={s}, r={r}, Z has {} bits", cert.value.0.numer().bits()))
}

fn bqcol_identity() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for q in 3..=5usize {
                let (stretched, scale) = ok(reduce_potts_to_bqcol(&g, q))?;
                ensure!(stretched.m() == 2 * g.m(), "stretch size");
                let cols = ok(count_proper_colourings(&stretched, q))?;
                // Each subdivided edge has q-1 midpoint colours when its ends
                // agree and q-2 otherwise.
                let mut oracle = BigUint::zero();
                for_each_map(g.n(), q, |s| {
                    oracle += g
                        .edges()
                        .iter()
                        .map(|&(u, v)| BigUint::from(if s[u] == s[v] { q - 1 } else { q - 2 }))
                        .product::<BigUint>();
                });
                ensure!(cols == oracle, "{:?} q={q}: colouring count", g.edges());
                ensure!(scale == BigUint::from(q - 2).pow(g.m() as u32), "scale");
                let z = naive_potts(&g, q, &rat(1, q as i64 - 2));
                ensure!(urat(&cols) == urat(&scale) * z, "{:?} q={q}: identity", g.edges());
            }
            checked += 1;
        }
    }
    let _ = two_stretch;
    Ok(format!("{checked} connected graphs, q in 3..=5"))
}

/// `sum over distinct codewords A x of lambda^wt`, enumerating every `x`.
fn naive_enumerator(matrix: &[Vec<u64>], p: u64, lambda: &Rational) -> Rational {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut words = std::collections::BTreeSet::new();
    let mut x = vec![0u64; cols];
    loop {
        let word: Vec<u64> = matrix
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<u64>() % p)
            .collect();
        words.insert(word);
        let mut i = 0;
        while i < cols && x[i] + 1 == p {
            x[i] = 0;
            i += 1;
        }
        if i == cols {
            break;
        }
        x[i] += 1;
    }
    words
        .iter()
        .map(|w| rat_pow(lambda, w.iter().filter(|&&c| c != 0).count() as i64))
        .sum()
}

fn weight_enumerator_identity() -> Result<String, String> {
    let graphs: Vec<Graph> = (1..=5)
        .flat_map(connected_graphs)
        .filter(|g| g.m() <= 6)
        .collect();
    let mut checks = 0;
    for g in &graphs {
        for (p, k) in [(3u64, 1usize), (2, 2)] {
            let sys = ok(build_potts_code(g, p, k))?;
            let q = sys.q;
            let code = sys.code();
            for lambda in [rat(1, 2), rat(1, 3), rat(2, 3)] {
                let w = ok(weight_enumerator(&code, &lambda))?;
                ensure!(w == naive_enumerator(&sys.matrix, p, &lambda), "{:?}: enumerator", g.edges());
                let gamma = rat_pow(&lambda, -(((p - 1) * p.pow(k as u32 - 1)) as i64)) - Rational::one();
                let exp = -(((p - 1) * p.pow(k as u32 - 1)) as i64) * g.m() as i64;
                let rhs = Rational::from_integer(q.into()) * rat_pow(&lambda, exp) * w;
                ensure!(naive_potts(g, q, &gamma) == rhs, "{:?} p={p} k={k} lambda={lambda}", g.edges());
                checks += 1;
            }
        }
    }
    for g in [Graph::path(2), Graph::path(3)] {
        for (p, k) in [(3u64, 1usize), (2, 2)] {
            ensure!(ok(ok(build_potts_code(&g, p, k))?.check_q_to_one())?, "q-to-1 fails on {:?}", g.edges());
        }
    }
    Ok(format!("{} graphs, {checks} identities, q-to-1 on K2 and P3", graphs.len()))
}

fn cross_oracle() -> Result<String, String> {
    let graphs = graphs_with_few_edges(6);
    for g in &graphs {
        for q in 1..=4 {
            for gamma in [rat(1, 2), rat(1, 1), rat(3, 1)] {
                let p = ok(PottsParams::new(q, gamma.clone()))?;
                let z = potts_graph(g, &p);
                ensure!(z == ok(random_cluster_oracle(g, &p))?, "{:?} q={q} gamma={gamma}", g.edges());
                if g.n() <= 6 {
                    ensure!(z == naive_potts(g, q, &gamma), "{:?}: spin-sum oracle", g.edges());
                }
            }
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn main() {
    let criteria: [(&str, Check, Duration); 13] = [
        ("1 walk table", walk_table_exact, Duration::from_secs(1)),
        ("2 P4/BIS identity", p4_bis_identity, Duration::from_secs(5)),
        ("3 complete-bipartite closed form", complete_bipartite_closed_form, Duration::from_secs(10)),
        ("4 weight gadget", weight_gadget, Duration::from_secs(30)),
        ("5 convex reduction", convex_reduction, Duration::from_secs(60)),
        ("6 weighted cut gadget", cut_gadget, Duration::from_secs(30)),
        ("7 Potts to J_q", potts_to_jq, Duration::from_secs(60)),
        ("8 J_q to hypergraph Potts", jq_to_hyperpotts_identity, Duration::from_secs(30)),
        ("9 uniformisation", uniformisation, Duration::from_secs(30)),
        ("10 J3* hardness", j3star_hardness, Duration::from_secs(600)),
        ("11 bqcol identity", bqcol_identity, Duration::from_secs(60)),
        ("12 weight-enumerator identity", weight_enumerator_identity, Duration::from_secs(120)),
        ("13 Potts cross-oracle", cross_oracle, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 13 criteria pass");
}
