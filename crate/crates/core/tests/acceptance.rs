//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! status 1 if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::time::{Duration, Instant};

use common::{
    complete, dpf_exists_by_enumeration, fan_configuration, no_4679_graph, nonisomorphic_graphs,
    order_exists_by_permutation, pair_graph, random_graph, random_instance, rng,
};
use dpf_core::configuration::{check_configuration_conditions, extend_over_configuration};
use dpf_core::degeneracy::strictly_degenerate_order;
use dpf_core::planar::{
    check_family, gen_planar_triangulation, gen_random_budget, gen_random_cover, Family, PlaneGraph,
};
use dpf_core::reductions::{budget_forest, budget_list, budget_mixed, check_partition, color_classes, identity_cover};
use dpf_core::solvers::{solve_exact, solve_planar_dpg52};
use dpf_core::verify::{check_order, verify_coloring};
use dpf_core::{Color, SimpleGraph};
use rand::seq::SliceRandom;
use rand::Rng;

const LIMIT_DEGENERACY: Duration = Duration::from_secs(30);
const LIMIT_EXACT: Duration = Duration::from_secs(60);
const LIMIT_PLANAR: Duration = Duration::from_secs(120);
const LIMIT_COROLLARIES: Duration = Duration::from_secs(120);
const LIMIT_NEGATIVE: Duration = Duration::from_secs(10);
const LIMIT_FANS: Duration = Duration::from_secs(30);
const LIMIT_NO_4679: Duration = Duration::from_secs(120);

const NONISOMORPHIC_ON_SIX: usize = 156;
const EXACT_INSTANCES: u64 = 400;
const PLANAR_INSTANCES: u64 = 200;
const FAN_INSTANCES: u64 = 100;
const NO_4679_GRAPHS: usize = 24;
const NO_4679_TRIALS: u64 = 10;

/// Outcome of one criterion: a deterministic report, or the reason it failed.
type Outcome = Result<String, String>;

fn digest(value: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_degeneracy() -> Outcome {
    let mut checked = 0;
    let mut degenerate = 0;
    let mut counts = Vec::new();
    for n in 1..=6 {
        let graphs = nonisomorphic_graphs(n);
        counts.push(graphs.len());
        for (gi, g) in graphs.iter().enumerate() {
            let edges: Vec<_> = g.edges().collect();
            for trial in 0..3u64 {
                let mut rng = rng(n as u64 * 1_000_000 + gi as u64 * 10 + trial);
                let budgets: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
                let pg = pair_graph(&budgets, &edges);
                let fast = strictly_degenerate_order(&pg);
                let slow = order_exists_by_permutation(&pg);
                ensure(fast.is_some() == slow, || {
                    format!("n = {n}, graph {gi}, trial {trial}: peeling {} vs brute force {slow}", fast.is_some())
                })?;
                if let Some(order) = fast {
                    ensure(pg.is_valid_order(&order), || format!("n = {n}, graph {gi}: invalid order returned"))?;
                }
                checked += 1;
                degenerate += slow as usize;
            }
        }
    }
    ensure(counts[5] == NONISOMORPHIC_ON_SIX, || {
        format!("{} graphs on 6 vertices, expected {NONISOMORPHIC_ON_SIX}", counts[5])
    })?;
    Ok(format!("graphs per n {counts:?}, {checked} budget assignments, {degenerate} degenerate"))
}

fn c2_exact_solver() -> Outcome {
    let mut found = 0;
    let mut witnesses = Vec::new();
    for seed in 0..EXACT_INSTANCES {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let s = rng.gen_range(1..=3);
        let (h, f) = random_instance(&mut rng, &g, s, 2);
        let got = solve_exact(&g, &h, &f, None).map_err(|e| format!("seed {seed}: {e}"))?;
        let oracle = dpf_exists_by_enumeration(&g, &h, &f, None);
        ensure(got.is_some() == oracle, || format!("seed {seed}: solver {} vs enumeration {oracle}", got.is_some()))?;
        if let Some(r) = got {
            ensure(verify_coloring(&g, &h, &f, &r.coloring).ok().flatten().is_some(), || {
                format!("seed {seed}: witness fails to verify")
            })?;
            witnesses.push(r.order.pairs().to_vec());
            found += 1;
        }
    }
    Ok(format!("{EXACT_INSTANCES} instances, {found} colorable, witnesses {:016x}", digest(&witnesses)))
}

fn planar_instance(seed: u64) -> PlaneGraph {
    let n = 4 + (seed as usize * 7) % 9;
    gen_planar_triangulation(n, seed).expect("n >= 4")
}

fn c3_planar_solver() -> Outcome {
    let mut witnesses = Vec::new();
    for seed in 0..PLANAR_INSTANCES {
        let pg = planar_instance(seed);
        let density = [0.5, 0.8, 1.0][seed as usize % 3];
        let h = gen_random_cover(pg.graph(), 5, 5, density, seed).map_err(|e| e.to_string())?;
        let f = gen_random_budget(&h, 5, 2, seed).map_err(|e| e.to_string())?;
        let r = solve_planar_dpg52(&pg, &h, &f).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_coloring(pg.graph(), &h, &f, &r.coloring).ok().flatten().is_some(), || {
            format!("seed {seed}: coloring rejected")
        })?;
        ensure(check_order(pg.graph(), &h, &f, &r.order).unwrap_or(false), || format!("seed {seed}: order rejected"))?;
        witnesses.push(r.order.pairs().to_vec());
    }
    Ok(format!("{PLANAR_INSTANCES}/{PLANAR_INSTANCES} verified, witnesses {:016x}", digest(&witnesses)))
}

fn random_lists(rng: &mut rand_chacha::ChaCha8Rng, n: usize, s: usize, size: usize) -> Vec<BTreeSet<Color>> {
    let palette: Vec<Color> = (1..=s).collect();
    (0..n).map(|_| palette.choose_multiple(rng, size).copied().collect()).collect()
}

fn c4_corollaries() -> Outcome {
    let (mut proper, mut forests, mut mixed) = (0, 0, 0);
    let mut witnesses = Vec::new();
    for seed in 0..PLANAR_INSTANCES {
        let pg = planar_instance(seed);
        let g = pg.graph();
        let mut rng = rng(seed);

        let lists = random_lists(&mut rng, g.n(), 7, 5);
        let h = identity_cover(g, &lists, 7).map_err(|e| e.to_string())?;
        let r = solve_planar_dpg52(&pg, &h, &budget_list(&lists, 7).map_err(|e| e.to_string())?)
            .map_err(|e| format!("seed {seed} (a): {e}"))?;
        let ok = g.vertices().all(|v| r.coloring.get(v).is_some_and(|c| lists[v].contains(&c)))
            && g.edges().all(|(u, v)| r.coloring.get(u) != r.coloring.get(v));
        ensure(ok, || format!("seed {seed} (a): not a proper list coloring"))?;
        proper += 1;
        witnesses.push(r.order.pairs().to_vec());

        let lists: Vec<BTreeSet<Color>> = vec![(1..=3).collect(); g.n()];
        let h = identity_cover(g, &lists, 3).map_err(|e| e.to_string())?;
        let r = solve_planar_dpg52(&pg, &h, &budget_forest(&lists, 3).map_err(|e| e.to_string())?)
            .map_err(|e| format!("seed {seed} (b): {e}"))?;
        let classes = color_classes(g, &r.coloring).map_err(|e| e.to_string())?;
        let caps: BTreeMap<Color, u32> = classes.keys().map(|&c| (c, 2)).collect();
        ensure(check_partition(g, &classes, &caps).unwrap_or(false), || {
            format!("seed {seed} (b): a class is not a forest")
        })?;
        forests += 1;
        witnesses.push(r.order.pairs().to_vec());

        let (d, k) = (4, 5);
        let lists = random_lists(&mut rng, g.n(), 6, d);
        let h = identity_cover(g, &lists, 6).map_err(|e| e.to_string())?;
        let f = budget_mixed(&lists, 6, d, k).map_err(|e| e.to_string())?;
        let r = solve_planar_dpg52(&pg, &h, &f).map_err(|e| format!("seed {seed} (c): {e}"))?;
        let classes = color_classes(g, &r.coloring).map_err(|e| e.to_string())?;
        let caps: BTreeMap<Color, u32> = classes.keys().map(|&c| (c, if c <= 2 * d - k { 1 } else { 2 })).collect();
        ensure(check_partition(g, &classes, &caps).unwrap_or(false), || {
            format!("seed {seed} (c): classes violate their caps")
        })?;
        mixed += 1;
        witnesses.push(r.order.pairs().to_vec());
    }
    Ok(format!(
        "(a) {proper}/{PLANAR_INSTANCES} (b) {forests}/{PLANAR_INSTANCES} (c) {mixed}/{PLANAR_INSTANCES}, witnesses {:016x}",
        digest(&witnesses)
    ))
}

fn c5_negative_controls() -> Outcome {
    let k5 = complete(5);
    let h = common::identity_cover(&k5, 4);
    let f = common::constant_budget(5, 4, 1);
    let r = solve_exact(&k5, &h, &f, None).map_err(|e| e.to_string())?;
    ensure(r.is_none(), || "K5 with 4 colors was colored".into())?;

    let k3 = complete(3);
    let h = common::identity_cover(&k3, 1);
    let f = common::constant_budget(3, 1, 1);
    let r = solve_exact(&k3, &h, &f, None).map_err(|e| e.to_string())?;
    ensure(r.is_none(), || "K3 with one color was colored".into())?;
    Ok("K5 with 4 colors absent, K3 with 1 color absent".into())
}

fn c6_fan_configurations() -> Outcome {
    let mut witnesses = Vec::new();
    let mut by_k = BTreeMap::new();
    for seed in 0..FAN_INSTANCES {
        let inst = fan_configuration(seed);
        ensure(check_configuration_conditions(&inst.g, inst.k, &inst.order).unwrap_or(false), || {
            format!("seed {seed}: conditions fail")
        })?;
        let out = extend_over_configuration(&inst.g, &inst.h, &inst.f, inst.k, &inst.order, &inst.outside)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_coloring(&inst.g, &inst.h, &inst.f, &out.coloring).ok().flatten().is_some(), || {
            format!("seed {seed}: rejected")
        })?;
        ensure(inst.outside.coloring.pairs().all(|p| out.coloring.contains_pair(p)), || {
            format!("seed {seed}: outside recolored")
        })?;
        *by_k.entry(inst.k).or_insert(0) += 1;
        witnesses.push(out.order.pairs().to_vec());
    }
    Ok(format!("{FAN_INSTANCES}/{FAN_INSTANCES} extended, per k {by_k:?}, witnesses {:016x}", digest(&witnesses)))
}

fn curated_no_4679() -> Vec<(String, SimpleGraph)> {
    let cycle = |n: usize| {
        let edges: Vec<_> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    };
    let mut out = vec![
        ("K1".to_string(), SimpleGraph::new(1)),
        ("K2".to_string(), complete(2)),
        ("C3".to_string(), cycle(3)),
        ("C5".to_string(), cycle(5)),
        ("C8".to_string(), cycle(8)),
        ("C10".to_string(), cycle(10)),
        ("bowtie".to_string(), SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()),
        (
            "two pentagons".to_string(),
            SimpleGraph::from_edges(
                9,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6), (6, 7), (7, 8), (0, 8)],
            )
            .unwrap(),
        ),
    ];
    let mut seed = 0;
    while out.len() < NO_4679_GRAPHS {
        let n = 5 + (seed as usize % 6);
        out.push((format!("pruned triangulation n={n} seed={seed}"), no_4679_graph(seed, n)));
        seed += 1;
    }
    out
}

fn c7_no_4679() -> Outcome {
    let family = Family::NoCycleLengths([4, 6, 7, 9].into_iter().collect());
    let mut witnesses = Vec::new();
    let mut trials = 0;
    for (gi, (name, g)) in curated_no_4679().into_iter().enumerate() {
        ensure(g.n() <= 10, || format!("{name} has more than 10 vertices"))?;
        ensure(check_family(&g, &family).unwrap_or(false), || format!("{name} has a forbidden cycle"))?;
        for t in 0..NO_4679_TRIALS {
            let seed = gi as u64 * 100 + t;
            let mut rng = rng(seed);
            let s = rng.gen_range(3..=4);
            let list_size = rng.gen_range(2..=s);
            let density = rng.gen_range(0.3..=1.0);
            let h = gen_random_cover(&g, s, list_size, density, rng.gen()).map_err(|e| e.to_string())?;
            let f = gen_random_budget(&h, 3, 2, rng.gen()).map_err(|e| e.to_string())?;
            let r = solve_exact(&g, &h, &f, None).map_err(|e| format!("{name}, trial {t}: {e}"))?;
            let r = r.ok_or_else(|| format!("THEOREM-VIOLATION: {name}, trial {t}: no coloring found"))?;
            ensure(verify_coloring(&g, &h, &f, &r.coloring).ok().flatten().is_some(), || {
                format!("{name}, trial {t}: rejected")
            })?;
            witnesses.push(r.order.pairs().to_vec());
            trials += 1;
        }
    }
    Ok(format!("{NO_4679_GRAPHS} graphs, {trials}/{trials} trials colored, witnesses {:016x}", digest(&witnesses)))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

const CRITERIA: [Criterion; 7] = [
    ("degeneracy oracle on all graphs up to 6 vertices", LIMIT_DEGENERACY, c1_degeneracy),
    ("exact solver agrees with enumeration", LIMIT_EXACT, c2_exact_solver),
    ("planar solver on stacked triangulations", LIMIT_PLANAR, c3_planar_solver),
    ("list, forest and mixed corollaries", LIMIT_COROLLARIES, c4_corollaries),
    ("negative controls", LIMIT_NEGATIVE, c5_negative_controls),
    ("fan configurations extend", LIMIT_FANS, c6_fan_configurations),
    ("graphs without 4-, 6-, 7- and 9-cycles", LIMIT_NO_4679, c7_no_4679),
];

fn run_all(print: bool) -> (Vec<Outcome>, bool) {
    let mut reports = Vec::new();
    let mut all_ok = true;
    for (i, (name, limit, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.is_ok() && elapsed < *limit;
        all_ok &= ok;
        if print {
            let verdict = if ok { "PASS" } else { "FAIL" };
            let detail = match &outcome {
                Ok(report) if elapsed < *limit => report.clone(),
                Ok(report) => format!("{report}; took {elapsed:.2?}, limit {limit:?}"),
                Err(why) => why.clone(),
            };
            println!("{verdict} criterion {}: {name}: {detail} [{elapsed:.2?} of {limit:?}]", i + 1);
        }
        reports.push(outcome);
    }
    (reports, all_ok)
}

fn main() {
    let (first, mut ok) = run_all(true);
    let start = Instant::now();
    let (second, _) = run_all(false);
    let same = first == second;
    ok &= same;
    let verdict = if same { "PASS" } else { "FAIL" };
    println!(
        "{verdict} criterion 8: criteria 1-7 reproduce identically on a second run: {} [{:.2?}]",
        if same { "all reports equal" } else { "reports differ" },
        start.elapsed()
    );
    if !ok {
        std::process::exit(1);
    }
}
