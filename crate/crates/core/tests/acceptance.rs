//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! `cargo test -p polyrad-core --test acceptance` runs the default set;
//! append `-- --allow-long` to include the radius 5 search (size 24).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polyrad::canon::canonical_code;
use polyrad::extremal::{
    check_graph, min_size_for_radius, radius_pruning, verify_theorem1, ExtremalRecord, SearchOutcome,
};
use polyrad::generator::{enumerate_by_size, Enumerator, FilterSet, SizeLevel};
use polyrad::invariants::{bfs_layers, radius};
use polyrad::io::{graph6, planar_code};
use polyrad::structure::{disjoint_paths, embed, PathSearch};
use polyrad::{is_isomorphic, oracle, prism, CodeBytes};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn search(r: usize, cap: usize, filters: FilterSet) -> Result<ExtremalRecord, String> {
    let enumerator = Enumerator::new(filters);
    let s = min_size_for_radius(&enumerator, r, cap).map_err(|e| e.to_string())?;
    match s.outcome {
        SearchOutcome::Found(rec) => Ok(rec),
        SearchOutcome::Exhausted { cap, .. } => Err(format!("no radius {r} polytope up to size {cap}")),
    }
}

fn unique_prism(r: usize, cap: usize, filters: FilterSet) -> Outcome {
    let start = Instant::now();
    let rec = search(r, cap, filters)?;
    let expected = canonical_code(&prism(r).unwrap());
    ensure(rec.min_size == 6 * (r - 1), || format!("minimum size {}", rec.min_size))?;
    ensure(rec.witnesses == [expected], || format!("{} witnesses", rec.witnesses.len()))?;
    ensure(rec.unique && rec.prism_match, || "record flags disagree".into())?;
    let t = verify_theorem1(&rec).map_err(|e| e.to_string())?;
    ensure(t.passes() && t.second == 0, || format!("layer-condition check failed: {t:?}"))?;
    Ok(format!(
        "min size {}, unique prism witness, {:.2}s",
        rec.min_size,
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_oracle(levels: &[SizeLevel]) -> Outcome {
    let classes = oracle::polytopes_by_size(7, 6, 11);
    let mut counts = Vec::new();
    for (&size, graphs) in &classes {
        let mut codes: Vec<CodeBytes> = graphs.iter().map(|g| canonical_code(&embed(g).unwrap())).collect();
        codes.sort();
        let level = &levels[size - 6];
        ensure(codes == level.codes(), || {
            format!("size {size}: oracle {} vs generator {}", codes.len(), level.len())
        })?;
        counts.push(codes.len());
    }
    ensure(counts[..4] == [1, 0, 1, 2], || format!("counts {counts:?}"))?;
    Ok(format!("sizes 6..11 counts {counts:?}"))
}

fn criterion_theorem1() -> Outcome {
    let mut detail = Vec::new();
    for r in [3, 4] {
        let rec = search(r, 6 * (r - 1), FilterSet::none())?;
        let t = verify_theorem1(&rec).map_err(|e| e.to_string())?;
        ensure(t.passes(), || format!("r={r}: counterexamples {:?}", t.counterexamples))?;
        ensure(t.roots_with_hypotheses > 0 && t.first > 0, || format!("r={r}: nothing checked"))?;
        ensure(t.second == 0 && t.second_possible == 0 && t.neither == 0, || {
            format!("r={r}: second {} neither {}", t.second, t.neither)
        })?;
        ensure(t.prism_failures == 0, || format!("r={r}: prism recognition failed"))?;
        detail.push(format!("r={r}: {} roots, {} triples all FIRST", t.roots_with_hypotheses, t.first));
    }
    Ok(detail.join("; "))
}

fn three_paths(g: &polyrad::Graph, s: usize, t: usize) -> Result<Vec<Vec<usize>>, String> {
    match disjoint_paths(g, s, t, 3).map_err(|e| e.to_string())? {
        PathSearch::Found(ps) => Ok(ps.paths().to_vec()),
        PathSearch::Blocked(sep) => Err(format!("{s}-{t} blocked by {:?}", sep.vertices)),
    }
}

/// Independent check that paths are valid and internally disjoint.
fn paths_are_disjoint(g: &polyrad::Graph, s: usize, t: usize, paths: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.order()];
    paths.len() == 3
        && paths.iter().all(|p| {
            p[0] == s
                && p[p.len() - 1] == t
                && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && p[1..p.len() - 1].iter().all(|&v| v != s && v != t && !std::mem::replace(&mut seen[v], true))
        })
        && paths.iter().filter(|p| p.len() == 2).count() <= 1
}

fn criterion_structure(levels: &[SizeLevel]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut graphs, mut pairs) = (0, 0);
    for level in levels {
        let all: Vec<_> = level.graphs().collect();
        for eg in &all {
            let g = eg.graph();
            ensure(eg.is_spherical(), || format!("size {}: Euler fails", level.size()))?;
            let dd = eg.dual().and_then(|d| d.dual()).map_err(|e| e.to_string())?;
            ensure(is_isomorphic(eg, &dd), || format!("size {}: dual involution", level.size()))?;
            if g.order() <= 16 {
                ensure(radius(g).ok() == oracle::radius(g), || format!("size {}: radius", level.size()))?;
            }
            graphs += 1;
        }
        for _ in 0..if all.is_empty() { 0 } else { 200 } {
            let g = all[rng.gen_range(0..all.len())].graph();
            let s = rng.gen_range(0..g.order());
            let t = (s + rng.gen_range(1..g.order())) % g.order();
            let paths = three_paths(g, s, t)?;
            ensure(paths_are_disjoint(g, s, t, &paths), || format!("{s}-{t}: invalid paths"))?;
            pairs += 1;
        }
    }
    // Extremal witnesses: every path from a central root to a farthest vertex
    // has length exactly r.
    for r in [3, 4] {
        let g = prism(r).unwrap().into_graph();
        for check in check_graph(&g).map_err(|e| e.to_string())? {
            ensure(check.path_triples > 0 && check.path_lengths_exact, || format!("r={r}: path lengths"))?;
        }
        for root in g.vertices() {
            let layers = bfs_layers(&g, root).unwrap();
            let sink = layers.layer(r)[0];
            let paths = three_paths(&g, root, sink)?;
            ensure(paths.iter().all(|p| p.len() == r + 1), || format!("r={r}: root {root}"))?;
        }
    }
    Ok(format!("{graphs} graphs (sizes 6..18), {pairs} sampled Menger pairs"))
}

fn criterion_prisms() -> Outcome {
    for r in 3..=10 {
        let g = prism(r).unwrap().into_graph();
        let mut profile = vec![1, 3];
        profile.extend(std::iter::repeat_n(4, r - 3));
        profile.extend([3, 1]);
        ensure(g.order() == 4 * (r - 1) && g.size() == 6 * (r - 1), || format!("r={r}: counts"))?;
        ensure(g.vertices().all(|v| g.degree(v) == 3), || format!("r={r}: not cubic"))?;
        ensure(radius(&g).ok() == Some(r) && oracle::radius(&g) == Some(r), || format!("r={r}: radius"))?;
        for v in g.vertices() {
            let sizes = bfs_layers(&g, v).unwrap().layer_sizes();
            ensure(sizes == profile, || format!("r={r}: profile {sizes:?} at {v}"))?;
        }
    }
    Ok("r = 3..10".into())
}

fn criterion_codecs(levels: &[SizeLevel]) -> Outcome {
    let mut total = 0;
    for level in levels.iter().filter(|l| l.size() <= 14) {
        let graphs: Vec<_> = level.graphs().collect();
        let mut pc = Vec::new();
        planar_code::write_planar_code(&graphs, &mut pc).map_err(|e| e.to_string())?;
        let back = planar_code::read_planar_code(&pc[..]).map_err(|e| e.to_string())?;
        let mut codes: Vec<_> = back.iter().map(canonical_code).collect();
        codes.sort();
        ensure(codes == level.codes(), || format!("size {}: planar_code", level.size()))?;

        let mut g6 = Vec::new();
        graph6::write_graph6(graphs.iter().map(|eg| eg.graph()), &mut g6).map_err(|e| e.to_string())?;
        let back = graph6::read_graph6(&g6[..]).map_err(|e| e.to_string())?;
        let mut codes: Vec<_> = back.iter().map(|g| canonical_code(&embed(g).unwrap())).collect();
        codes.sort();
        ensure(codes == level.codes(), || format!("size {}: graph6", level.size()))?;
        total += graphs.len();
    }
    Ok(format!("{total} graphs on levels 6..14"))
}

fn main() -> ExitCode {
    let allow_long = std::env::args().any(|a| a == "--allow-long");
    let levels = enumerate_by_size(18, FilterSet::none()).expect("enumeration succeeds");

    let mut results: BTreeMap<u32, (&str, Option<Outcome>)> = BTreeMap::new();
    results.insert(1, ("radius 3: cube is the unique smallest", Some(unique_prism(3, 12, FilterSet::none()))));
    results.insert(2, ("radius 4: hexagonal prism", Some(unique_prism(4, 18, FilterSet::none()))));
    let long = allow_long.then(|| unique_prism(5, 24, radius_pruning(5, 24)));
    results.insert(3, ("radius 5: octagonal prism (long)", long));
    results.insert(4, ("generator matches brute force", Some(criterion_oracle(&levels))));
    results.insert(5, ("layer conditions imply prism", Some(criterion_theorem1())));
    results.insert(6, ("structural invariants", Some(criterion_structure(&levels))));
    results.insert(7, ("prism identities", Some(criterion_prisms())));
    results.insert(8, ("codec round trips", Some(criterion_codecs(&levels))));

    let mut failed = 0;
    for (n, (name, outcome)) in &results {
        match outcome {
            Some(Ok(detail)) => println!("criterion {n} PASS {name}: {detail}"),
            Some(Err(detail)) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {detail}");
            }
            None => println!("criterion {n} SKIP {name}: pass --allow-long to run"),
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
