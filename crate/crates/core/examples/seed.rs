use sifam_core::params::Params;
use sifam_core::search::ConflictGraph;

// recompute multi-start greedy quality via public API
fn main() {
    for (n, k) in [(7u32, 2u32), (8, 2), (7, 3), (8, 3)] {
        let p = Params::new(n, k, 1).unwrap();
        let g = ConflictGraph::build(p, 5000).unwrap();
        let nv = g.vertex_count();
        let mut best = 0usize;
        for start in 0..nv {
            let mut blocked = vec![false; nv];
            let mut picked = 0;
            for i in 0..nv {
                let v = (start + i) % nv;
                if !blocked[v] {
                    picked += 1;
                    blocked[v] = true;
                    for u in 0..nv {
                        if g.has_edge(v, u) {
                            blocked[u] = true;
                        }
                    }
                }
            }
            best = best.max(picked);
        }
        println!("({n},{k},1): nv={nv} multi_greedy={best}");
    }
}
