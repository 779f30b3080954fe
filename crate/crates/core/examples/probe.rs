use sifam_core::params::Params;
use sifam_core::search::{m_exact, SearchOptions};
use std::time::Duration;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: u32 = args[1].parse().unwrap();
    let k: u32 = args[2].parse().unwrap();
    let l: u32 = args[3].parse().unwrap();
    let sym = args.get(4).map(|s| s == "sym").unwrap_or(false);
    let p = Params::new(n, k, l).unwrap();
    let opts = SearchOptions { budget: Duration::from_secs(300), root_symmetry: sym };
    let r = m_exact(p, &opts).unwrap();
    println!("{}", r.summary(p));
}
