//! The A3 seed with universal coefficients: one frozen vertex per almost positive root.

use cluster_frobenius::clusteralg::universal_seed;
use cluster_frobenius::rootsys::{Family, RootSystem};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 3)?;
    let q = rs.diagram().bipartite_orientation();
    let seed = universal_seed(&rs, &q)?;
    print!("{}", seed.to_text());
    println!("{}", serde_json::to_string_pretty(&seed.to_json()).unwrap());
    Ok(())
}
