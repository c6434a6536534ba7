//! Oracle suites behind `polyrad selftest`.

use polyrad::canon::canonical_code;
use polyrad::generator::{enumerate_by_size, FilterSet, SizeLevel};
use polyrad::invariants::{bfs_layers, radius};
use polyrad::structure::{embed, vertex_connectivity_at_least};
use polyrad::{oracle, prism};

type Suite = fn(&[SizeLevel]) -> Result<String, String>;

/// Runs every suite, printing one line each. True if all pass.
pub fn run() -> bool {
    let levels = match enumerate_by_size(13, FilterSet::none()) {
        Ok(levels) => levels,
        Err(e) => {
            eprintln!("FAIL enumeration: {e}");
            return false;
        }
    };
    let suites: [(&str, Suite); 5] = [
        ("generator-vs-oracle", generator_vs_oracle),
        ("radius-vs-floyd-warshall", radius_vs_oracle),
        ("connectivity-vs-subsets", connectivity_vs_oracle),
        ("codes-vs-backtracking", codes_vs_oracle),
        ("prism-identities", prism_identities),
    ];
    let mut ok = true;
    for (name, suite) in suites {
        match suite(&levels) {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                ok = false;
            }
        }
    }
    ok
}

fn generator_vs_oracle(levels: &[SizeLevel]) -> Result<String, String> {
    let classes = oracle::polytopes_by_size(7, 6, 11);
    let mut counts = Vec::new();
    for (&size, graphs) in &classes {
        let level = &levels[size - 6];
        let mut codes: Vec<_> = graphs
            .iter()
            .map(|g| canonical_code(&embed(g).expect("oracle graphs are planar")))
            .collect();
        codes.sort();
        if codes != level.codes() {
            return Err(format!("size {size}: oracle {} vs generator {}", codes.len(), level.len()));
        }
        counts.push(codes.len());
    }
    Ok(format!("sizes 6..11 agree, counts {counts:?}"))
}

fn radius_vs_oracle(levels: &[SizeLevel]) -> Result<String, String> {
    let mut n = 0;
    for level in levels {
        for eg in level.graphs() {
            let g = eg.graph();
            if radius(g).ok() != oracle::radius(g) {
                return Err(format!("size {}: disagreement", level.size()));
            }
            n += 1;
        }
    }
    Ok(format!("{n} graphs"))
}

fn connectivity_vs_oracle(levels: &[SizeLevel]) -> Result<String, String> {
    let mut n = 0;
    for level in levels.iter().filter(|l| l.size() <= 12) {
        for eg in level.graphs() {
            // Deleting an edge usually drops connectivity, giving negative cases.
            let g = eg.graph();
            let (u, v) = g.edges().next().expect("nonempty");
            for h in [g.clone(), g.without_edge(u, v)] {
                for k in 1..=3 {
                    let fast = vertex_connectivity_at_least(&h, k).map_err(|e| e.to_string())?;
                    if fast != oracle::vertex_connectivity_at_least(&h, k) {
                        return Err(format!("size {}: k={k} disagreement", level.size()));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} comparisons"))
}

fn codes_vs_oracle(levels: &[SizeLevel]) -> Result<String, String> {
    let mut pairs = 0;
    for level in levels {
        let graphs: Vec<_> = level.graphs().map(|eg| eg.into_graph()).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                if oracle::isomorphic(&graphs[i], &graphs[j]) {
                    return Err(format!("size {}: distinct codes {i} and {j} are isomorphic", level.size()));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs pairwise non-isomorphic"))
}

fn prism_identities(_: &[SizeLevel]) -> Result<String, String> {
    for r in 3..=10 {
        let p = prism(r).map_err(|e| e.to_string())?;
        let g = p.graph();
        let layers = bfs_layers(g, 0).map_err(|e| e.to_string())?;
        let mut profile = vec![1, 3];
        profile.extend(std::iter::repeat_n(4, r - 3));
        profile.extend([3, 1]);
        let ok = g.order() == 4 * (r - 1)
            && g.size() == 6 * (r - 1)
            && g.vertices().all(|v| g.degree(v) == 3)
            && oracle::radius(g) == Some(r)
            && layers.layer_sizes() == profile;
        if !ok {
            return Err(format!("r={r}"));
        }
    }
    Ok("r = 3..10".into())
}
