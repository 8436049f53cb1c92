//! Walks the A2 pentagon, then closes A3 and D4 under mutation.

use cluster_frobenius::clusteralg::{exchange_graph, universal_seed, DEFAULT_BUDGET};
use cluster_frobenius::rootsys::{Family, RootSystem};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 2)?;
    let q = rs.diagram().orientation(&[(0, 1)])?;
    let seed = universal_seed(&rs, &q)?;
    let labels = seed.frozen_labels();
    let (_, relations) = seed.mutate_sequence(&[1, 0, 1, 0, 1])?;
    for r in &relations {
        println!("{}", r.render(&labels));
    }

    for (f, n) in [(Family::A, 3), (Family::D, 4)] {
        let rs = RootSystem::of_type(f, n)?;
        let seed = universal_seed(&rs, &rs.diagram().bipartite_orientation())?;
        let g = exchange_graph(&seed, DEFAULT_BUDGET)?;
        println!(
            "{}: {} seeds, {} cluster variables, {} almost positive roots",
            rs.diagram().name(),
            g.seed_count(),
            g.variable_count(),
            rs.almost_positive().len()
        );
    }
    Ok(())
}
