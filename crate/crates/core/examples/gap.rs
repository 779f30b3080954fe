use sifam_core::params::Params;
use sifam_core::search::ConflictGraph;

fn main() {
    for (n, k, l) in [(7u32, 2u32, 1u32), (8, 2, 1), (7, 3, 1), (8, 3, 1)] {
        let p = Params::new(n, k, l).unwrap();
        let g = ConflictGraph::build(p, 5000).unwrap();
        let nv = g.vertex_count();
        // greedy maximal matching in index order -> pair-cover bound
        let mut used = vec![false; nv];
        let mut pairs = 0;
        for v in 0..nv {
            if used[v] { continue; }
            for u in v + 1..nv {
                if !used[u] && g.has_edge(v, u) {
                    used[v] = true;
                    used[u] = true;
                    pairs += 1;
                    break;
                }
            }
        }
        // greedy independent set in index order
        let mut blocked = vec![false; nv];
        let mut greedy = 0;
        for v in 0..nv {
            if blocked[v] { continue; }
            greedy += 1;
            blocked[v] = true;
            for u in 0..nv {
                if g.has_edge(v, u) { blocked[u] = true; }
            }
        }
        // triangle check
        let mut tri = false;
        'outer: for a in 0..nv {
            for b in a + 1..nv {
                if !g.has_edge(a, b) { continue; }
                for c in b + 1..nv {
                    if g.has_edge(a, c) && g.has_edge(b, c) { tri = true; break 'outer; }
                }
            }
        }
        println!(
            "({n},{k},{l}): nv={nv} deg={} cover_bound={} greedy_lb={} triangle={}",
            g.degree(0), nv - pairs, greedy, tri
        );
    }
}
